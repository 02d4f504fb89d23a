//! Exact symbol-ratio profiles and quantitative equivalence.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;

use crate::grammar::{LGrammar, Symbol};

use super::growth::count_profile;
use super::AnalysisError;

pub type ExactRatio = Ratio<BigInt>;

/// Per-generation ratio `count(a) / count(b)` for a designated symbol
/// pair. `None` marks generations where the denominator is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioProfile {
    pub pair: (Symbol, Symbol),
    /// Index = generation number, starting at 0.
    pub ratios: Vec<Option<ExactRatio>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioComparison {
    pub equal: bool,
    /// Generation of the first difference, if any.
    pub first_difference: Option<usize>,
    pub left: RatioProfile,
    pub right: RatioProfile,
}

/// Computes the ratio profile for generations `0 ..= n` through the exact
/// count recurrence.
pub fn ratio_profile(
    grammar: &LGrammar,
    pair: (&Symbol, &Symbol),
    n: usize,
) -> Result<RatioProfile, AnalysisError> {
    for symbol in [pair.0, pair.1] {
        if !grammar.alphabet().contains(symbol) {
            return Err(AnalysisError::UnknownSymbol {
                symbol: symbol.as_str().to_string(),
            });
        }
    }
    let profile = count_profile(grammar, n);
    let ratios = profile
        .generations
        .iter()
        .map(|g| {
            let numer = BigInt::from(g.count(pair.0));
            let denom = BigInt::from(g.count(pair.1));
            if denom.is_zero() {
                None
            } else {
                Some(Ratio::new(numer, denom))
            }
        })
        .collect();
    Ok(RatioProfile {
        pair: (pair.0.clone(), pair.1.clone()),
        ratios,
    })
}

/// Compares the two grammars' ratio profiles over generations `1 ..= n`.
/// Undefined ratios compare equal only to undefined ratios.
pub fn ratio_profiles_equal(
    left: &LGrammar,
    right: &LGrammar,
    pair: (&Symbol, &Symbol),
    n: usize,
) -> Result<RatioComparison, AnalysisError> {
    let lp = ratio_profile(left, pair, n)?;
    let rp = ratio_profile(right, pair, n)?;
    let first_difference = (1..=n).find(|&t| lp.ratios[t] != rp.ratios[t]);
    Ok(RatioComparison {
        equal: first_difference.is_none(),
        first_difference,
        left: lp,
        right: rp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_grammar;

    fn sym(name: &str) -> Symbol {
        Symbol::new(name).unwrap()
    }

    fn ratio(n: i64, d: i64) -> Option<ExactRatio> {
        Some(Ratio::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn quantitatively_equivalent_grammars_share_ratios() {
        let a = parse_grammar("axiom: 0\n0 -> 0 1\n1 -> 1 0 1\n").unwrap();
        let b = parse_grammar("axiom: 0\n0 -> 0 1 0 1\n1 -> 1 0 1 1 0 1\n").unwrap();
        let cmp = ratio_profiles_equal(&a, &b, (&sym("0"), &sym("1")), 6).unwrap();
        assert!(cmp.equal, "first difference at {:?}", cmp.first_difference);
        assert_eq!(cmp.left.ratios[1], ratio(1, 1));
        assert_eq!(cmp.left.ratios[2], ratio(2, 3));
        assert_eq!(cmp.left.ratios[6], ratio(89, 144));
    }

    #[test]
    fn fib_and_xor_differ() {
        let fib = parse_grammar("axiom: 0\n0 -> 1\n1 -> 0 1\n").unwrap();
        let xor = parse_grammar("axiom: 0\n0 -> 0 1\n1 -> 1 0\n").unwrap();
        let cmp = ratio_profiles_equal(&fib, &xor, (&sym("0"), &sym("1")), 6).unwrap();
        assert!(!cmp.equal);
        assert!(cmp.first_difference.unwrap() <= 2);
        // XOR holds the ratio 1 from the first step on.
        for t in 1..=6 {
            assert_eq!(cmp.right.ratios[t], ratio(1, 1));
        }
    }

    #[test]
    fn comparison_is_reflexive() {
        let g = parse_grammar("axiom: 0\n0 -> 0 1\n1 -> 1 0 1\n").unwrap();
        assert!(
            ratio_profiles_equal(&g, &g, (&sym("0"), &sym("1")), 8)
                .unwrap()
                .equal
        );
    }

    #[test]
    fn undefined_only_equals_undefined() {
        // 0 -> 0 keeps the 1-count at zero forever; fib has ones from t=1.
        let constant = parse_grammar("axiom: 0\n0 -> 0\n1 -> 1\n").unwrap();
        let fib = parse_grammar("axiom: 0\n0 -> 1\n1 -> 0 1\n").unwrap();
        let cmp = ratio_profiles_equal(&constant, &fib, (&sym("0"), &sym("1")), 4).unwrap();
        assert!(!cmp.equal);
        assert_eq!(cmp.left.ratios[1], None);
        assert!(
            ratio_profiles_equal(&constant, &constant, (&sym("0"), &sym("1")), 4)
                .unwrap()
                .equal
        );
    }

    #[test]
    fn unknown_pair_symbol_is_an_error() {
        let fib = parse_grammar("axiom: 0\n0 -> 1\n1 -> 0 1\n").unwrap();
        assert!(matches!(
            ratio_profile(&fib, (&sym("x"), &sym("1")), 3),
            Err(AnalysisError::UnknownSymbol { .. })
        ));
    }
}
