//! The line-oriented grammar file format.
//!
//! ```text
//! # Fibonacci grammar
//! axiom: 0
//! 0 -> 1
//! 1 -> 0 1
//! ```
//!
//! Symbols are whitespace-separated tokens. A body of the single token `~`
//! declares an erasing production. Symbols that never appear on a left-hand
//! side are stumps. `#` starts a comment.
//!
//! [`parse_sequential_grammar`] accepts the same format plus two extensions
//! used only by the sequential (normal-grammar contrast) mode: repeated
//! left-hand sides and `|`-separated alternatives, both meaning "try the
//! listed bodies in order, one per use".

use super::sequential::{SequentialGrammar, SequentialRule};
use super::symbol::{Symbol, NULL_TOKEN};
use super::{GrammarError, LGrammar, Production};

struct Line<'a> {
    number: usize,
    text: &'a str,
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let without_comment = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = without_comment.trim();
        if trimmed.is_empty() {
            None
        } else {
            Some(Line {
                number: i + 1,
                text: trimmed,
            })
        }
    })
}

fn syntax(line: usize, message: impl Into<String>) -> GrammarError {
    GrammarError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_symbol(token: &str, line: usize) -> Result<Symbol, GrammarError> {
    // `->` separates rule sides; a symbol containing it could be written in
    // some positions but never referenced from a rule head.
    if token.contains("->") {
        return Err(syntax(
            line,
            format!("`{token}` contains the reserved arrow `->`"),
        ));
    }
    Symbol::new(token).map_err(|e| syntax(line, e.to_string()))
}

fn parse_body(tokens: &[&str], line: usize) -> Result<Vec<Symbol>, GrammarError> {
    if tokens.is_empty() {
        return Err(syntax(
            line,
            "rule body is empty; write `~` for an erasing production",
        ));
    }
    if tokens.contains(&NULL_TOKEN) {
        if tokens.len() == 1 {
            return Ok(Vec::new());
        }
        return Err(syntax(
            line,
            format!("`{NULL_TOKEN}` cannot be mixed with other symbols"),
        ));
    }
    tokens.iter().map(|t| parse_symbol(t, line)).collect()
}

enum RawRule {
    Axiom(Vec<Symbol>),
    Rule {
        lhs: Symbol,
        alternatives: Vec<Vec<Symbol>>,
        line: usize,
    },
}

fn parse_line(line: &Line<'_>, allow_alternatives: bool) -> Result<RawRule, GrammarError> {
    if let Some(rest) = line.text.strip_prefix("axiom:") {
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(syntax(line.number, "axiom line lists no symbols"));
        }
        let symbols = tokens
            .iter()
            .map(|t| parse_symbol(t, line.number))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(RawRule::Axiom(symbols));
    }

    let (lhs_part, rhs_part) = line
        .text
        .split_once("->")
        .ok_or_else(|| syntax(line.number, "expected `axiom:` or `<sym> -> <body>`"))?;
    let lhs_tokens: Vec<&str> = lhs_part.split_whitespace().collect();
    match lhs_tokens.len() {
        1 => {}
        0 => return Err(syntax(line.number, "rule has no left-hand symbol")),
        _ => {
            return Err(syntax(
                line.number,
                "left-hand side must be a single symbol (multi-symbol heads are only \
                 accepted by the frustration probe, not by grammars)",
            ))
        }
    }
    let lhs = parse_symbol(lhs_tokens[0], line.number)?;

    let alternatives = if allow_alternatives {
        rhs_part
            .split('|')
            .map(|alt| {
                let tokens: Vec<&str> = alt.split_whitespace().collect();
                parse_body(&tokens, line.number)
            })
            .collect::<Result<Vec<_>, _>>()?
    } else {
        if rhs_part.contains('|') {
            return Err(syntax(
                line.number,
                "alternatives (`|`) are only meaningful in sequential mode; a \
                 deterministic grammar has one body per symbol",
            ));
        }
        let tokens: Vec<&str> = rhs_part.split_whitespace().collect();
        vec![parse_body(&tokens, line.number)?]
    };

    Ok(RawRule::Rule {
        lhs,
        alternatives,
        line: line.number,
    })
}

/// Parses a deterministic grammar. Two rules for the same symbol are an
/// error, as is a missing axiom.
pub fn parse_grammar(text: &str) -> Result<LGrammar, GrammarError> {
    let mut axiom: Option<Vec<Symbol>> = None;
    let mut productions: Vec<Production> = Vec::new();
    let mut seen_lines: Vec<(Symbol, usize)> = Vec::new();

    for line in meaningful_lines(text) {
        match parse_line(&line, false)? {
            RawRule::Axiom(symbols) => {
                if axiom.is_some() {
                    return Err(syntax(line.number, "more than one `axiom:` line"));
                }
                axiom = Some(symbols);
            }
            RawRule::Rule {
                lhs,
                mut alternatives,
                line,
            } => {
                if let Some((dup, _)) = seen_lines.iter().find(|(s, _)| *s == lhs) {
                    return Err(GrammarError::DuplicateRule {
                        symbol: dup.as_str().to_string(),
                        line,
                    });
                }
                seen_lines.push((lhs.clone(), line));
                productions.push(Production::new(lhs, alternatives.remove(0)));
            }
        }
    }

    let axiom = axiom.ok_or(GrammarError::MissingAxiom)?;
    LGrammar::from_parts(axiom, productions)
}

/// Parses a rule list for sequential rewriting. Repeated left-hand sides
/// and `|` both contribute alternatives, kept in file order.
pub fn parse_sequential_grammar(text: &str) -> Result<SequentialGrammar, GrammarError> {
    let mut axiom: Option<Vec<Symbol>> = None;
    let mut rules: Vec<SequentialRule> = Vec::new();

    for line in meaningful_lines(text) {
        match parse_line(&line, true)? {
            RawRule::Axiom(symbols) => {
                if axiom.is_some() {
                    return Err(syntax(line.number, "more than one `axiom:` line"));
                }
                axiom = Some(symbols);
            }
            RawRule::Rule {
                lhs, alternatives, ..
            } => match rules.iter_mut().find(|r| r.lhs() == &lhs) {
                Some(rule) => rule.extend_alternatives(alternatives),
                None => rules.push(SequentialRule::new(lhs, alternatives)),
            },
        }
    }

    let axiom = axiom.ok_or(GrammarError::MissingAxiom)?;
    if axiom.is_empty() {
        return Err(GrammarError::EmptyAxiom);
    }
    Ok(SequentialGrammar::new(axiom, rules))
}
