//! Expressing a generation as a concatenation of mapped earlier
//! generations.

use crate::grammar::{Derivation, SymbolString};
use crate::mappings::{apply_expr, Involution, MappingExpr};

use super::AnalysisError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    /// Pure concatenation of earlier generations.
    Perfect,
    /// At least one segment needs a mirror or negative reading.
    Partial,
}

/// `g_x` written as the concatenation of `apply_expr(e, g_i)` segments with
/// every `i < x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub target: usize,
    pub segments: Vec<(usize, MappingExpr)>,
    pub kind: DecompositionKind,
}

/// Finds a minimal-segment exact cover of generation `x` by images of
/// earlier generations.
///
/// Preference order: a perfect (all-identity) cover if one exists, then
/// fewest segments, then the lexicographically smallest sequence of
/// (generation, mapping) pairs with mappings ordered ID < M < N < MN.
/// Returns `Ok(None)` when no cover exists.
pub fn decompose_self_referential(
    derivation: &Derivation,
    x: usize,
    inv: &Involution,
) -> Result<Option<Decomposition>, AnalysisError> {
    let max = derivation.generations().len().saturating_sub(1);
    if x < 2 || x > max {
        return Err(AnalysisError::IndexOutOfRange {
            index: x,
            min: 2,
            max,
        });
    }

    let id_only = [MappingExpr::Id];
    if let Some(segments) = cover(derivation, x, inv, &id_only) {
        return Ok(Some(Decomposition {
            target: x,
            segments,
            kind: DecompositionKind::Perfect,
        }));
    }
    if let Some(segments) = cover(derivation, x, inv, &MappingExpr::ALL) {
        return Ok(Some(Decomposition {
            target: x,
            segments,
            kind: DecompositionKind::Partial,
        }));
    }
    Ok(None)
}

struct Candidate {
    generation: usize,
    mapping: MappingExpr,
    image: Vec<crate::grammar::Symbol>,
}

/// Dynamic program over suffixes: `remaining[pos]` = fewest segments
/// covering `target[pos..]`, then a greedy smallest-candidate-first
/// reconstruction, which yields the lexicographically least cover among
/// the minimal ones.
fn cover(
    derivation: &Derivation,
    x: usize,
    inv: &Involution,
    exprs: &[MappingExpr],
) -> Option<Vec<(usize, MappingExpr)>> {
    let target = derivation
        .generation(x)
        .expect("index checked")
        .symbols()
        .to_vec();
    let n = target.len();

    let mut candidates: Vec<Candidate> = Vec::new();
    for i in 0..x {
        let generation = derivation.generation(i).expect("index checked");
        if generation.is_empty() {
            continue; // empty segments would make covers non-unique and useless
        }
        for &mapping in exprs {
            // A partial involution simply rules the negative images out.
            let Ok(image) = apply_expr(mapping, generation, inv) else {
                continue;
            };
            candidates.push(Candidate {
                generation: i,
                mapping,
                image: image.symbols().to_vec(),
            });
        }
    }
    candidates.sort_by_key(|c| (c.generation, c.mapping));

    const UNREACHABLE: usize = usize::MAX;
    let mut remaining = vec![UNREACHABLE; n + 1];
    remaining[n] = 0;
    for pos in (0..n).rev() {
        for c in &candidates {
            let end = pos + c.image.len();
            if end <= n
                && remaining[end] != UNREACHABLE
                && target[pos..end] == c.image[..]
                && remaining[end] + 1 < remaining[pos]
            {
                remaining[pos] = remaining[end] + 1;
            }
        }
    }
    if remaining[0] == UNREACHABLE {
        return None;
    }

    let mut segments = Vec::with_capacity(remaining[0]);
    let mut pos = 0usize;
    while pos < n {
        let chosen = candidates.iter().find(|c| {
            let end = pos + c.image.len();
            end <= n
                && remaining[end] != UNREACHABLE
                && remaining[end] + 1 == remaining[pos]
                && target[pos..end] == c.image[..]
        })?;
        segments.push((chosen.generation, chosen.mapping));
        pos += chosen.image.len();
    }
    Some(segments)
}

/// Re-applies a decomposition and checks it reproduces the target exactly.
pub fn replay_decomposition(
    derivation: &Derivation,
    decomposition: &Decomposition,
    inv: &Involution,
) -> bool {
    let mut rebuilt = SymbolString::empty();
    for &(i, mapping) in &decomposition.segments {
        let Some(generation) = derivation.generation(i) else {
            return false;
        };
        let Ok(image) = apply_expr(mapping, generation, inv) else {
            return false;
        };
        rebuilt = rebuilt.concat(&image);
    }
    Some(&rebuilt) == derivation.generation(decomposition.target)
}
