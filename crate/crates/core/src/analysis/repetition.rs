//! Repetition statistics: maximal exponent and cube detection.

use num_rational::Ratio;

use crate::grammar::SymbolString;

use super::AnalysisError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepetitionWitness {
    /// The repeated unit.
    pub factor: SymbolString,
    /// Start of the repetition in the scanned string.
    pub position: usize,
    pub period: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepetitionStats {
    /// Largest `|run| / period` over all factors with period at most
    /// `max_period`. A factor occurring once has exponent 1.
    pub max_exponent: Ratio<u64>,
    /// A cube is three adjacent copies of the same factor: exponent >= 3.
    pub has_cube: bool,
    pub witness: Option<RepetitionWitness>,
}

/// Brute-force repetition scan.
///
/// For each period `p <= max_period` the scan walks the string once,
/// tracking maximal runs of positions with `s[j] == s[j+p]`; a run of
/// length `L` witnesses a repetition of exponent `(L+p)/p`. Cost is
/// `O(|s| * max_period)` — quadratic in the worst case, which is the point:
/// it is an oracle simple enough to trust, and fast enough for prefixes in
/// the tens of thousands.
pub fn repetition_stats(
    s: &SymbolString,
    max_period: usize,
) -> Result<RepetitionStats, AnalysisError> {
    if max_period > s.len() {
        return Err(AnalysisError::PeriodTooLarge {
            max_period,
            len: s.len(),
        });
    }

    let ids = intern(s);
    let n = ids.len();

    // best = (total_length, period) maximizing total_length / period.
    let mut best: (u64, u64) = (1, 1);
    let mut best_at: Option<(usize, usize)> = None;
    for p in 1..=max_period {
        let mut run = 0usize;
        for j in 0..n.saturating_sub(p) {
            if ids[j] == ids[j + p] {
                run += 1;
                let total = (run + p) as u64;
                if total * best.1 > best.0 * p as u64 {
                    best = (total, p as u64);
                    best_at = Some((j + 1 - run, p));
                }
            } else {
                run = 0;
            }
        }
    }

    let max_exponent = Ratio::new(best.0, best.1);
    let witness = best_at.map(|(position, period)| RepetitionWitness {
        factor: s.slice(position, position + period),
        position,
        period,
    });
    Ok(RepetitionStats {
        max_exponent,
        has_cube: max_exponent >= Ratio::from_integer(3),
        witness,
    })
}

fn intern(s: &SymbolString) -> Vec<u32> {
    let mut table: std::collections::HashMap<&str, u32> = std::collections::HashMap::new();
    s.iter()
        .map(|sym| {
            let next = table.len() as u32;
            *table.entry(sym.as_str()).or_insert(next)
        })
        .collect()
}
