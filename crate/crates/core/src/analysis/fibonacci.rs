//! Fibonacci-emergence checks on count sequences.

use num_bigint::BigUint;
use num_traits::Zero;

use super::AnalysisError;

/// How a sequence qualified as Fibonacci-emergent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FibonacciEvidence {
    /// `seq[t] = seq[t-1] + seq[t-2]` holds everywhere past the burn-in,
    /// certified over at least three consecutive triples.
    Recurrence {
        burn_in: usize,
        certified_triples: usize,
    },
    /// Every entry is a Fibonacci number. This covers grammars built from
    /// concatenated generations, whose counts stride through the sequence
    /// (2, 8, 34, ...) without satisfying the step-by-step recurrence.
    Membership,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibonacciMatch {
    pub matches: bool,
    /// Set when the recurrence route succeeded.
    pub burn_in: Option<usize>,
    pub evidence: Option<FibonacciEvidence>,
}

impl FibonacciMatch {
    fn no() -> FibonacciMatch {
        FibonacciMatch {
            matches: false,
            burn_in: None,
            evidence: None,
        }
    }
}

/// True when `n` is one of 0, 1, 1, 2, 3, 5, 8, ...
pub fn is_fibonacci_number(n: &BigUint) -> bool {
    let mut a = BigUint::zero();
    let mut b = BigUint::from(1u32);
    while &a < n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    &a == n
}

const MIN_LEN: usize = 4;
const MIN_TRIPLES: usize = 3;
const MAX_BURN_IN: usize = 2;

/// Decides whether a count sequence is Fibonacci-emergent, either through
/// the recurrence (with a burn-in of at most two entries) or through
/// membership of every entry in the Fibonacci sequence.
pub fn matches_fibonacci(seq: &[BigUint]) -> Result<FibonacciMatch, AnalysisError> {
    if seq.len() < MIN_LEN {
        return Err(AnalysisError::TooShort {
            need: MIN_LEN,
            got: seq.len(),
        });
    }

    for burn_in in 0..=MAX_BURN_IN {
        let first = burn_in + 2;
        if first >= seq.len() {
            break;
        }
        let triples = seq.len() - first;
        if triples < MIN_TRIPLES {
            continue;
        }
        if (first..seq.len()).all(|t| seq[t] == &seq[t - 1] + &seq[t - 2]) {
            return Ok(FibonacciMatch {
                matches: true,
                burn_in: Some(burn_in),
                evidence: Some(FibonacciEvidence::Recurrence {
                    burn_in,
                    certified_triples: triples,
                }),
            });
        }
    }

    if seq.iter().all(is_fibonacci_number) {
        return Ok(FibonacciMatch {
            matches: true,
            burn_in: None,
            evidence: Some(FibonacciEvidence::Membership),
        });
    }

    Ok(FibonacciMatch::no())
}

/// Convenience for plain integer slices.
pub fn matches_fibonacci_u64(seq: &[u64]) -> Result<FibonacciMatch, AnalysisError> {
    let big: Vec<BigUint> = seq.iter().map(|&v| BigUint::from(v)).collect();
    matches_fibonacci(&big)
}
