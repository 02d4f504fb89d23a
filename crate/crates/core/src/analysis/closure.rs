//! Bounded empirical probes of closure properties.
//!
//! These are finite checks, never proofs: a probe that holds says only
//! that no counterexample exists within the bound.

use crate::grammar::SymbolString;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureOp {
    Union,
    Concat,
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureProbe {
    pub op: ClosureOp,
    pub holds_at_bound: bool,
    pub counterexample: Option<SymbolString>,
    pub tested: usize,
}

/// Applies the operation to the input sets and tests the predicate on every
/// resulting string, up to the bound.
///
/// The bound limits star iterations and truncates oversized input sets; the
/// default used by callers is 3 iterations. `Star` reads only `a`.
pub fn closure_probe<P>(
    a: &[SymbolString],
    b: &[SymbolString],
    op: ClosureOp,
    predicate: P,
    bound: usize,
) -> ClosureProbe
where
    P: Fn(&SymbolString) -> bool,
{
    let a: Vec<&SymbolString> = a.iter().take(bound.max(1) * 8).collect();
    let b: Vec<&SymbolString> = b.iter().take(bound.max(1) * 8).collect();
    let mut tested = 0usize;

    let mut check = |s: SymbolString| -> Option<SymbolString> {
        tested += 1;
        if predicate(&s) {
            None
        } else {
            Some(s)
        }
    };

    let counterexample = match op {
        ClosureOp::Union => a.iter().chain(b.iter()).find_map(|s| check((*s).clone())),
        ClosureOp::Concat => a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x.concat(y)))
            .find_map(&mut check),
        ClosureOp::Star => {
            // Words of 1 ..= bound factors drawn from `a`, in length order.
            let mut current: Vec<SymbolString> = a.iter().map(|s| (*s).clone()).collect();
            let mut found = None;
            'outer: for _ in 0..bound.max(1) {
                for word in &current {
                    if let Some(bad) = check(word.clone()) {
                        found = Some(bad);
                        break 'outer;
                    }
                }
                current = current
                    .iter()
                    .flat_map(|w| a.iter().map(move |s| w.concat(s)))
                    .collect();
            }
            found
        }
    };

    ClosureProbe {
        op,
        holds_at_bound: counterexample.is_none(),
        counterexample,
        tested,
    }
}
