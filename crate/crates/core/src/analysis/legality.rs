//! Scanning for the factors `00` and `111`, the n-grams a Fibonacci
//! derivation never produces.

use crate::grammar::{LGrammar, SymbolString};

use super::AnalysisError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NgramViolation {
    pub ngram: String,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegalityReport {
    pub legal: bool,
    pub violations: Vec<NgramViolation>,
}

/// Scans a binary string for the illegal factors, reporting every
/// occurrence. The empty string is legal.
pub fn fib_legal(s: &SymbolString) -> Result<LegalityReport, AnalysisError> {
    let bits = to_bits(s)?;
    let mut violations = Vec::new();
    for i in 0..bits.len() {
        if i + 2 <= bits.len() && bits[i] == 0 && bits[i + 1] == 0 {
            violations.push(NgramViolation {
                ngram: "00".to_string(),
                position: i,
            });
        }
        if i + 3 <= bits.len() && bits[i] == 1 && bits[i + 1] == 1 && bits[i + 2] == 1 {
            violations.push(NgramViolation {
                ngram: "111".to_string(),
                position: i,
            });
        }
    }
    Ok(LegalityReport {
        legal: violations.is_empty(),
        violations,
    })
}

pub(crate) fn to_bits(s: &SymbolString) -> Result<Vec<u8>, AnalysisError> {
    s.iter()
        .map(|sym| match sym.as_str() {
            "0" => Ok(0u8),
            "1" => Ok(1u8),
            other => Err(AnalysisError::NotBinary {
                symbol: other.to_string(),
            }),
        })
        .collect()
}

/// Legality scan of generation `t` without materializing the string.
///
/// Walks the derivation tree depth-first, emitting frontier symbols left to
/// right through a three-symbol window, so memory stays proportional to `t`
/// even where the generation itself would not fit. Stops at the first
/// violation.
pub fn fib_legal_generation(grammar: &LGrammar, t: usize) -> Result<LegalityReport, AnalysisError> {
    // Stack of (symbol-as-bit-or-error, remaining depth), rightmost on top.
    let mut stack: Vec<(crate::grammar::Symbol, usize)> = grammar
        .axiom()
        .iter()
        .rev()
        .map(|s| (s.clone(), t))
        .collect();
    let mut window: [u8; 3] = [2, 2, 2]; // 2 = nothing yet
    let mut emitted = 0usize;

    while let Some((symbol, depth)) = stack.pop() {
        if depth > 0 {
            if let Some(p) = grammar.production(&symbol) {
                for s in p.rhs().iter().rev() {
                    stack.push((s.clone(), depth - 1));
                }
                continue;
            }
            // Stump: persists to the frontier.
        }
        let bit = match symbol.as_str() {
            "0" => 0u8,
            "1" => 1u8,
            other => {
                return Err(AnalysisError::NotBinary {
                    symbol: other.to_string(),
                })
            }
        };
        window = [window[1], window[2], bit];
        emitted += 1;
        if window[1] == 0 && window[2] == 0 {
            return Ok(LegalityReport {
                legal: false,
                violations: vec![NgramViolation {
                    ngram: "00".into(),
                    position: emitted - 2,
                }],
            });
        }
        if window == [1, 1, 1] {
            return Ok(LegalityReport {
                legal: false,
                violations: vec![NgramViolation {
                    ngram: "111".into(),
                    position: emitted - 3,
                }],
            });
        }
    }
    Ok(LegalityReport {
        legal: true,
        violations: Vec::new(),
    })
}
