//! Bounded breadth-first reduction to a minimal grammar, with replayable
//! proofs.

use std::collections::{HashSet, VecDeque};

use crate::grammar::{LGrammar, Symbol, SymbolString};
use crate::mappings::MappingExpr;

use super::edit::{edit_grammar, GrammarEdit};
use super::prune::prune_rule_with_evidence;
use super::TransformError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionTarget {
    /// `0 -> 1`, `1 -> 0 1`, axiom `0`.
    MinimalFib,
    /// `0 -> 0 1`, `1 -> 1 0`, axiom `0`.
    MinimalXor,
}

impl ReductionTarget {
    pub fn grammar(self) -> LGrammar {
        let text = match self {
            ReductionTarget::MinimalFib => "axiom: 0\n0 -> 1\n1 -> 0 1\n",
            ReductionTarget::MinimalXor => "axiom: 0\n0 -> 0 1\n1 -> 1 0\n",
        };
        crate::grammar::parse_grammar(text).expect("static targets parse")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionStep {
    Prune {
        rule: Symbol,
        chunk: SymbolString,
        position: usize,
        /// The reading under which the chunk is a constituent.
        mapping: MappingExpr,
        /// The generation the chunk is an image of.
        generation: usize,
    },
    RemoveConstant {
        symbol: Symbol,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionProof {
    pub source: LGrammar,
    pub steps: Vec<ReductionStep>,
    pub result: LGrammar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionOutcome {
    Proved(Box<ReductionProof>),
    /// The search space was exhausted (or the bound hit) without reaching
    /// the target.
    Exhausted {
        visited: usize,
        bound_hit: bool,
    },
}

impl ReductionOutcome {
    pub fn proof(&self) -> Option<&ReductionProof> {
        match self {
            ReductionOutcome::Proved(p) => Some(p),
            ReductionOutcome::Exhausted { .. } => None,
        }
    }
}

/// Breadth-first search over prune applications and constant removals.
/// Bodies only ever shrink, so the space is finite; the bound caps the
/// number of distinct grammars visited. The first proof found is minimal
/// in step count, with candidate moves tried in a fixed canonical order.
pub fn reduce_to_minimal(
    grammar: &LGrammar,
    target: ReductionTarget,
    search_bound: usize,
    allow_mappings: bool,
) -> ReductionOutcome {
    let goal = canonical(&target.grammar());
    let mut visited: HashSet<String> = HashSet::new();
    let mut queue: VecDeque<(LGrammar, Vec<ReductionStep>)> = VecDeque::new();

    visited.insert(canonical(grammar));
    queue.push_back((grammar.clone(), Vec::new()));
    let mut bound_hit = false;

    while let Some((current, path)) = queue.pop_front() {
        if canonical(&current) == goal {
            return ReductionOutcome::Proved(Box::new(ReductionProof {
                source: grammar.clone(),
                steps: path,
                result: current,
            }));
        }
        if visited.len() >= search_bound {
            bound_hit = true;
            break;
        }
        for (next, step) in moves(&current, allow_mappings) {
            let key = canonical(&next);
            if visited.insert(key) {
                let mut next_path = path.clone();
                next_path.push(step);
                queue.push_back((next, next_path));
            }
        }
    }

    ReductionOutcome::Exhausted {
        visited: visited.len(),
        bound_hit,
    }
}

/// All legal single steps from a grammar, in canonical order: prunes by
/// (rule position, chunk start, chunk length), then constant removals.
fn moves(grammar: &LGrammar, allow_mappings: bool) -> Vec<(LGrammar, ReductionStep)> {
    let mut out = Vec::new();
    for production in grammar.productions() {
        let rhs = production.rhs();
        for start in 0..rhs.len() {
            for end in start + 1..=rhs.len() {
                let chunk = SymbolString::new(rhs[start..end].to_vec());
                let Ok((next, (generation, mapping))) = prune_rule_with_evidence(
                    grammar,
                    production.lhs(),
                    &chunk,
                    start,
                    allow_mappings,
                ) else {
                    continue;
                };
                out.push((
                    next,
                    ReductionStep::Prune {
                        rule: production.lhs().clone(),
                        chunk,
                        position: start,
                        mapping,
                        generation,
                    },
                ));
            }
        }
    }
    for symbol in grammar.alphabet().iter() {
        if grammar.rewrites(symbol) {
            continue;
        }
        let Ok(next) = edit_grammar(
            grammar,
            &GrammarEdit::RemoveConstant {
                symbol: symbol.clone(),
            },
        ) else {
            continue;
        };
        out.push((
            next,
            ReductionStep::RemoveConstant {
                symbol: symbol.clone(),
            },
        ));
    }
    out
}

/// A canonical text form: axiom plus productions sorted by head.
fn canonical(grammar: &LGrammar) -> String {
    let axiom: Vec<&str> = grammar.axiom().iter().map(Symbol::as_str).collect();
    let mut rules: Vec<String> = grammar
        .productions()
        .iter()
        .map(|p| p.to_string())
        .collect();
    rules.sort();
    format!("axiom {} | {}", axiom.join(" "), rules.join(" ; "))
}

/// Re-applies a proof's steps to its source and returns the final grammar.
pub fn replay_reduction(
    source: &LGrammar,
    steps: &[ReductionStep],
) -> Result<LGrammar, TransformError> {
    let mut current = source.clone();
    for step in steps {
        current = match step {
            ReductionStep::Prune {
                rule,
                chunk,
                position,
                ..
            } => super::prune::prune_rule(&current, rule, chunk, *position, true)?,
            ReductionStep::RemoveConstant { symbol } => edit_grammar(
                &current,
                &GrammarEdit::RemoveConstant {
                    symbol: symbol.clone(),
                },
            )?,
        };
    }
    Ok(current)
}
