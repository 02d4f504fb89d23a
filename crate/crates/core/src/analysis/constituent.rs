//! Constituency of strings with respect to the minimal Fibonacci grammar.

use crate::grammar::SymbolString;
use crate::mappings::{apply_expr, mirror, negative, Involution, MappingExpr};

use super::AnalysisError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstituentMatch {
    pub yes: bool,
    pub generation: Option<usize>,
    pub mapping: Option<MappingExpr>,
}

impl ConstituentMatch {
    fn no() -> ConstituentMatch {
        ConstituentMatch {
            yes: false,
            generation: None,
            mapping: None,
        }
    }
}

/// Generation `i` of the minimal Fibonacci grammar (`0 -> 1`, `1 -> 01`,
/// axiom `0`).
pub fn fib_generation(i: usize) -> SymbolString {
    let mut current = "0".to_string();
    for _ in 0..i {
        let mut next = String::with_capacity(current.len() * 2);
        for c in current.chars() {
            match c {
                '0' => next.push('1'),
                _ => next.push_str("01"),
            }
        }
        current = next;
    }
    SymbolString::from_text(&current)
        .expect("binary text")
        .with_generation(i)
}

/// Decides whether `s` is a natural constituent of the Fibonacci grammar.
///
/// Without mappings, a constituent is exactly a generation. With mappings,
/// the admitted images of a generation `g` are:
///
/// - `M(g)` — the same material read right to left;
/// - `N(g)` — only where it coincides with `M(g)`, so the negative adds no
///   reading of its own (`10` from `01`);
/// - `MN(g)` — only for non-palindromic `g`, where the mirrored negative is
///   a reading distinct from the bare negative.
///
/// Under this definition `10` and the mirrored negative `01001010` of
/// generation 5 are constituents, while `010` — the bare negative of the
/// palindrome `101` — is not.
///
/// Since generation lengths are Fibonacci numbers, at most two generations
/// share any length; only those are examined.
pub fn is_fib_constituent(
    s: &SymbolString,
    allow_mappings: bool,
) -> Result<ConstituentMatch, AnalysisError> {
    if s.is_empty() {
        return Err(AnalysisError::EmptyInput);
    }
    if let Some(bad) = s
        .iter()
        .find(|sym| sym.as_str() != "0" && sym.as_str() != "1")
    {
        return Err(AnalysisError::NotBinary {
            symbol: bad.as_str().to_string(),
        });
    }

    let inv = Involution::binary();
    for (index, generation) in candidate_generations(s.len()) {
        if &generation == s {
            return Ok(ConstituentMatch {
                yes: true,
                generation: Some(index),
                mapping: Some(MappingExpr::Id),
            });
        }
        if !allow_mappings {
            continue;
        }
        let mirrored = mirror(&generation);
        let negated = negative(&generation, &inv).expect("binary involution is total");
        if &mirrored == s {
            return Ok(ConstituentMatch {
                yes: true,
                generation: Some(index),
                mapping: Some(MappingExpr::M),
            });
        }
        if negated == mirrored && &negated == s {
            return Ok(ConstituentMatch {
                yes: true,
                generation: Some(index),
                mapping: Some(MappingExpr::N),
            });
        }
        let palindrome = mirrored == generation;
        if !palindrome {
            let mirrored_negative =
                apply_expr(MappingExpr::Mn, &generation, &inv).expect("binary involution");
            if &mirrored_negative == s {
                return Ok(ConstituentMatch {
                    yes: true,
                    generation: Some(index),
                    mapping: Some(MappingExpr::Mn),
                });
            }
        }
    }
    Ok(ConstituentMatch::no())
}

/// Fibonacci generations whose length equals `len` (at most two).
fn candidate_generations(len: usize) -> Vec<(usize, SymbolString)> {
    let mut out = Vec::new();
    let mut index = 0usize;
    let mut current = fib_generation(0);
    loop {
        match current.len().cmp(&len) {
            std::cmp::Ordering::Equal => out.push((index, current.clone())),
            std::cmp::Ordering::Greater => break,
            std::cmp::Ordering::Less => {}
        }
        index += 1;
        current = fib_generation(index);
        if index > 90 {
            break; // lengths past here exceed any practical query
        }
    }
    out
}
