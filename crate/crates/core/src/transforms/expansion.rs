//! Expanding the minimal Fibonacci grammar by concatenated generations.

use crate::analysis::{count_profile, fib_generation, matches_fibonacci};
use crate::grammar::{LGrammar, Production, Symbol};

use super::TransformError;

/// For each of the two binary symbols, the generation indices whose strings
/// are concatenated to form the new body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionSpec {
    pub zero: Vec<usize>,
    pub one: Vec<usize>,
}

impl ExpansionSpec {
    /// Skip expansions draw the two primary (first-listed) indices from
    /// non-consecutive generations.
    pub fn is_skip(&self) -> bool {
        match (self.zero.first(), self.one.first()) {
            (Some(&a), Some(&b)) => a.abs_diff(b) != 1,
            _ => false,
        }
    }
}

/// The empirical Fibonacci-preservation verdict for a grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservationReport {
    pub per_symbol: Vec<(Symbol, bool)>,
    pub total: bool,
    /// All per-symbol sequences and the total pass.
    pub preserved: bool,
    pub generations_checked: usize,
}

/// Runs the count recurrence and checks every symbol's count sequence
/// (and the total) for Fibonacci emergence over `1 ..= generations`.
pub fn preservation_report(grammar: &LGrammar, generations: usize) -> PreservationReport {
    let profile = count_profile(grammar, generations);
    let per_symbol: Vec<(Symbol, bool)> = grammar
        .alphabet()
        .iter()
        .map(|s| {
            let seq = profile.sequence(s, 1, generations);
            let ok = matches_fibonacci(&seq).map(|m| m.matches).unwrap_or(false);
            (s.clone(), ok)
        })
        .collect();
    let total = matches_fibonacci(&profile.totals(1, generations))
        .map(|m| m.matches)
        .unwrap_or(false);
    let preserved = total && per_symbol.iter().all(|(_, ok)| *ok);
    PreservationReport {
        per_symbol,
        total,
        preserved,
        generations_checked: generations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub grammar: LGrammar,
    pub skip: bool,
    pub preservation: PreservationReport,
}

const PRESERVATION_GENERATIONS: usize = 12;

/// Builds the grammar whose bodies are the named Fibonacci generations,
/// concatenated, and reports the skip label and the empirical
/// preservation verdict.
pub fn expand_generations(spec: &ExpansionSpec) -> Result<Expansion, TransformError> {
    for (symbol, indices) in [("0", &spec.zero), ("1", &spec.one)] {
        if indices.is_empty() {
            return Err(TransformError::IndexOutOfRange {
                index: 0,
                reason: format!("no generations listed for `{symbol}`"),
            });
        }
        if let Some(&bad) = indices.iter().find(|&&i| i < 1) {
            return Err(TransformError::IndexOutOfRange {
                index: bad,
                reason: "expansion bodies are built from generations 1 and up".into(),
            });
        }
    }

    let body = |indices: &[usize]| -> Vec<Symbol> {
        indices
            .iter()
            .flat_map(|&i| fib_generation(i).symbols().to_vec())
            .collect()
    };
    let zero = Symbol::new("0").expect("static name");
    let one = Symbol::new("1").expect("static name");
    let grammar = LGrammar::from_parts(
        vec![zero.clone()],
        vec![
            Production::new(zero, body(&spec.zero)),
            Production::new(one, body(&spec.one)),
        ],
    )
    .expect("binary expansion grammars are well-formed");

    let preservation = preservation_report(&grammar, PRESERVATION_GENERATIONS);
    Ok(Expansion {
        grammar,
        skip: spec.is_skip(),
        preservation,
    })
}
