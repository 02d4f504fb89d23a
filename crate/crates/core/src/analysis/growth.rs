//! Per-generation symbol counts.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::grammar::{Derivation, LGrammar, Symbol};

/// Exact symbol counts for one generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolCounts {
    pub generation: usize,
    pub counts: BTreeMap<Symbol, BigUint>,
    pub total: BigUint,
}

impl SymbolCounts {
    pub fn count(&self, symbol: &Symbol) -> BigUint {
        self.counts
            .get(symbol)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }
}

/// Counts per generation, index = generation number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthProfile {
    pub generations: Vec<SymbolCounts>,
}

impl GrowthProfile {
    /// The count sequence of one symbol over generations `from ..= to`.
    pub fn sequence(&self, symbol: &Symbol, from: usize, to: usize) -> Vec<BigUint> {
        (from..=to.min(self.generations.len().saturating_sub(1)))
            .map(|t| self.generations[t].count(symbol))
            .collect()
    }

    /// Total-length sequence over generations `from ..= to`.
    pub fn totals(&self, from: usize, to: usize) -> Vec<BigUint> {
        (from..=to.min(self.generations.len().saturating_sub(1)))
            .map(|t| self.generations[t].total.clone())
            .collect()
    }
}

/// Counts symbols in an already-derived sequence of generations.
pub fn growth_profile(derivation: &Derivation) -> GrowthProfile {
    let alphabet = derivation.grammar().alphabet();
    let generations = derivation
        .generations()
        .iter()
        .enumerate()
        .map(|(t, g)| {
            let mut counts: BTreeMap<Symbol, BigUint> = alphabet
                .iter()
                .map(|s| (s.clone(), BigUint::zero()))
                .collect();
            for symbol in g.iter() {
                if let Some(c) = counts.get_mut(symbol) {
                    *c += 1u32;
                }
            }
            let total = BigUint::from(g.len());
            SymbolCounts {
                generation: t,
                counts,
                total,
            }
        })
        .collect();
    GrowthProfile { generations }
}

/// Computes the same counts through the linear recurrence on count vectors
/// instead of materializing strings, so it stays cheap even where the
/// strings themselves would outgrow memory. Stumps count as mapping to
/// themselves; erasing symbols contribute nothing.
pub fn count_profile(grammar: &LGrammar, n: usize) -> GrowthProfile {
    let alphabet = grammar.alphabet();
    let mut counts: BTreeMap<Symbol, BigUint> = alphabet
        .iter()
        .map(|s| (s.clone(), BigUint::zero()))
        .collect();
    for symbol in grammar.axiom() {
        *counts.get_mut(symbol).expect("axiom symbol in alphabet") += 1u32;
    }

    let mut generations = Vec::with_capacity(n + 1);
    for t in 0..=n {
        let total: BigUint = counts.values().sum();
        generations.push(SymbolCounts {
            generation: t,
            counts: counts.clone(),
            total,
        });
        if t == n {
            break;
        }
        let mut next: BTreeMap<Symbol, BigUint> = alphabet
            .iter()
            .map(|s| (s.clone(), BigUint::zero()))
            .collect();
        for (symbol, count) in &counts {
            match grammar.production(symbol) {
                Some(p) => {
                    for produced in p.rhs() {
                        *next.get_mut(produced).expect("rhs symbol in alphabet") += count;
                    }
                }
                None => {
                    *next.get_mut(symbol).expect("stump in alphabet") += count;
                }
            }
        }
        counts = next;
    }
    GrowthProfile { generations }
}
