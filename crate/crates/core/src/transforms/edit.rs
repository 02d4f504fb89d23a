//! Local grammar edits: constants in and out, consistent relabeling, and
//! advancing a body span by one parallel step.

use std::collections::BTreeMap;

use crate::grammar::{LGrammar, Production, Symbol};

use super::TransformError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrammarEdit {
    /// Insert a fresh stump at the given position of each listed body.
    AddConstant {
        symbol: Symbol,
        placements: Vec<(Symbol, usize)>,
    },
    /// Delete every body occurrence of a constant (stump or erasing
    /// symbol).
    RemoveConstant { symbol: Symbol },
    /// Relabel both sides of every rule and the axiom.
    PermuteSymbols { pairs: Vec<(Symbol, Symbol)> },
    /// Replace `rhs[start..end]` of the rule with its one-parallel-step
    /// image under the grammar itself.
    AdvanceConstituent {
        rule: Symbol,
        start: usize,
        end: usize,
    },
}

impl GrammarEdit {
    /// Placements for inserting a constant at the end of every body.
    pub fn at_rhs_ends(grammar: &LGrammar, symbol: Symbol) -> GrammarEdit {
        let placements = grammar
            .productions()
            .iter()
            .map(|p| (p.lhs().clone(), p.rhs().len()))
            .collect();
        GrammarEdit::AddConstant { symbol, placements }
    }
}

pub fn edit_grammar(grammar: &LGrammar, edit: &GrammarEdit) -> Result<LGrammar, TransformError> {
    match edit {
        GrammarEdit::AddConstant { symbol, placements } => {
            add_constant(grammar, symbol, placements)
        }
        GrammarEdit::RemoveConstant { symbol } => remove_constant(grammar, symbol),
        GrammarEdit::PermuteSymbols { pairs } => permute(grammar, pairs),
        GrammarEdit::AdvanceConstituent { rule, start, end } => {
            advance(grammar, rule, *start, *end)
        }
    }
}

fn add_constant(
    grammar: &LGrammar,
    symbol: &Symbol,
    placements: &[(Symbol, usize)],
) -> Result<LGrammar, TransformError> {
    if grammar.alphabet().contains(symbol) {
        return Err(TransformError::NotFresh {
            symbol: symbol.as_str().to_string(),
        });
    }
    let mut productions: Vec<Production> = grammar.productions().to_vec();
    for (lhs, position) in placements {
        let p = productions
            .iter_mut()
            .find(|p| p.lhs() == lhs)
            .ok_or_else(|| TransformError::NoSuchRule {
                symbol: lhs.as_str().to_string(),
            })?;
        let mut rhs = p.rhs().to_vec();
        if *position > rhs.len() {
            return Err(TransformError::InvalidSpan {
                start: *position,
                end: *position,
                len: rhs.len(),
            });
        }
        rhs.insert(*position, symbol.clone());
        *p = Production::new(lhs.clone(), rhs);
    }
    rebuild(grammar.axiom().to_vec(), productions)
}

fn remove_constant(grammar: &LGrammar, symbol: &Symbol) -> Result<LGrammar, TransformError> {
    if grammar.rewrites(symbol) {
        return Err(TransformError::NotAStump {
            symbol: symbol.as_str().to_string(),
        });
    }
    let productions: Vec<Production> = grammar
        .productions()
        .iter()
        .filter(|p| p.lhs() != symbol) // drop an erasing production outright
        .map(|p| {
            let rhs: Vec<Symbol> = p.rhs().iter().filter(|s| *s != symbol).cloned().collect();
            Production::new(p.lhs().clone(), rhs)
        })
        .collect();
    rebuild(grammar.axiom().to_vec(), productions)
}

fn permute(grammar: &LGrammar, pairs: &[(Symbol, Symbol)]) -> Result<LGrammar, TransformError> {
    let mut map: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    for (from, to) in pairs {
        for side in [from, to] {
            if !grammar.alphabet().contains(side) {
                return Err(TransformError::NotABijection {
                    reason: format!("`{side}` is not in the alphabet"),
                });
            }
        }
        if map.insert(from.clone(), to.clone()).is_some() {
            return Err(TransformError::NotABijection {
                reason: format!("`{from}` mapped twice"),
            });
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for to in map.values() {
        if !seen.insert(to.clone()) {
            return Err(TransformError::NotABijection {
                reason: format!("`{to}` is the image of two symbols"),
            });
        }
    }
    // Unlisted symbols stay fixed; check none collides with an image.
    for s in grammar.alphabet().iter() {
        if !map.contains_key(s) && seen.contains(s) {
            return Err(TransformError::NotABijection {
                reason: format!("`{s}` is both fixed and an image"),
            });
        }
    }

    let rename = |s: &Symbol| -> Symbol { map.get(s).cloned().unwrap_or_else(|| s.clone()) };
    let axiom = grammar.axiom().iter().map(&rename).collect();
    let productions = grammar
        .productions()
        .iter()
        .map(|p| Production::new(rename(p.lhs()), p.rhs().iter().map(&rename).collect()))
        .collect();
    rebuild(axiom, productions)
}

fn advance(
    grammar: &LGrammar,
    rule: &Symbol,
    start: usize,
    end: usize,
) -> Result<LGrammar, TransformError> {
    let p = grammar
        .production(rule)
        .ok_or_else(|| TransformError::NoSuchRule {
            symbol: rule.as_str().to_string(),
        })?;
    let rhs = p.rhs();
    if start >= end || end > rhs.len() {
        return Err(TransformError::InvalidSpan {
            start,
            end,
            len: rhs.len(),
        });
    }

    // One parallel step of the selected span, by the homomorphism property.
    let mut image: Vec<Symbol> = Vec::new();
    for symbol in &rhs[start..end] {
        match grammar.production(symbol) {
            Some(sp) => image.extend(sp.rhs().iter().cloned()),
            None => image.push(symbol.clone()),
        }
    }

    let mut new_rhs = rhs[..start].to_vec();
    new_rhs.extend(image);
    new_rhs.extend(rhs[end..].iter().cloned());

    let productions = grammar
        .productions()
        .iter()
        .map(|p| {
            if p.lhs() == rule {
                Production::new(rule.clone(), new_rhs.clone())
            } else {
                p.clone()
            }
        })
        .collect();
    rebuild(grammar.axiom().to_vec(), productions)
}

fn rebuild(axiom: Vec<Symbol>, productions: Vec<Production>) -> Result<LGrammar, TransformError> {
    LGrammar::from_parts(axiom, productions).map_err(|e| {
        TransformError::NotApplicable(format!("edit produced an ill-formed grammar: {e}"))
    })
}
