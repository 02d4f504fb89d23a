//! Parallel stepping and derivations.

use super::symbol::{Symbol, SymbolString};
use super::{GrammarError, LGrammar};

/// Default ceiling on the length of any single generation. Parallel
/// rewriting grows exponentially; past this point the derivation fails
/// loudly instead of thrashing.
pub const DEFAULT_LENGTH_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy)]
pub struct DeriveOptions {
    pub length_cap: usize,
}

impl Default for DeriveOptions {
    fn default() -> Self {
        DeriveOptions {
            length_cap: DEFAULT_LENGTH_CAP,
        }
    }
}

/// Rewrites every symbol of `s` simultaneously: the result is the in-order
/// concatenation of each symbol's body, where a stump maps to itself and an
/// erasing symbol to nothing.
///
/// Parallel rewriting is a monoid homomorphism:
/// `step(s ++ t) == step(s) ++ step(t)`.
pub fn step(grammar: &LGrammar, s: &SymbolString) -> Result<SymbolString, GrammarError> {
    let mut out: Vec<Symbol> = Vec::with_capacity(next_length(grammar, s)?);
    for symbol in s.iter() {
        match grammar.production(symbol) {
            Some(p) => out.extend(p.rhs().iter().cloned()),
            None => out.push(symbol.clone()),
        }
    }
    let next = SymbolString::new(out);
    Ok(match s.generation() {
        Some(g) => next.with_generation(g + 1),
        None => next,
    })
}

/// Length of `step(grammar, s)` without materializing it.
fn next_length(grammar: &LGrammar, s: &SymbolString) -> Result<usize, GrammarError> {
    let mut len = 0usize;
    for symbol in s.iter() {
        if !grammar.alphabet().contains(symbol) {
            return Err(GrammarError::ForeignSymbol {
                symbol: symbol.as_str().to_string(),
            });
        }
        len += match grammar.production(symbol) {
            Some(p) => p.rhs().len(),
            None => 1,
        };
    }
    Ok(len)
}

/// The ordered list of generations `g0 ..= gn` produced by parallel
/// stepping from the axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    grammar: LGrammar,
    generations: Vec<SymbolString>,
}

impl Derivation {
    pub fn grammar(&self) -> &LGrammar {
        &self.grammar
    }

    pub fn generations(&self) -> &[SymbolString] {
        &self.generations
    }

    pub fn generation(&self, t: usize) -> Option<&SymbolString> {
        self.generations.get(t)
    }

    pub fn last(&self) -> &SymbolString {
        self.generations
            .last()
            .expect("a derivation holds at least the axiom")
    }

    pub fn steps(&self) -> usize {
        self.generations.len() - 1
    }
}

/// Derives `n` generations with the default length cap.
pub fn derive(grammar: &LGrammar, n: usize) -> Result<Derivation, GrammarError> {
    derive_with(grammar, n, &DeriveOptions::default())
}

pub fn derive_with(
    grammar: &LGrammar,
    n: usize,
    options: &DeriveOptions,
) -> Result<Derivation, GrammarError> {
    let mut generations = Vec::with_capacity(n + 1);
    generations.push(grammar.axiom_string());
    for t in 0..n {
        let current = &generations[t];
        let length = next_length(grammar, current)?;
        if length > options.length_cap {
            return Err(GrammarError::LengthCapExceeded {
                generation: t + 1,
                length,
                cap: options.length_cap,
            });
        }
        let next = step(grammar, current)?;
        generations.push(next);
    }
    Ok(Derivation {
        grammar: grammar.clone(),
        generations,
    })
}
