//! Property-based invariants: mapping algebra laws, the step
//! homomorphism, length laws, classification stability, and decomposition
//! soundness.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lspace_core::analysis::{decompose_self_referential, replay_decomposition};
use lspace_core::catalog;
use lspace_core::classifier::{
    classify, detect_frustration, Asymmetry, CountingMode, FrustrationVerdict, RewriteRule,
};
use lspace_core::grammar::{
    derive, derive_sequential, parse_grammar, LGrammar, Production, Symbol, SymbolString,
};
use lspace_core::mappings::{apply_expr, compose, mirror, negative, Involution, MappingExpr};
use lspace_core::transforms::{edit_grammar, GrammarEdit};

fn binary_string() -> impl Strategy<Value = SymbolString> {
    proptest::collection::vec(prop_oneof![Just('0'), Just('1')], 0..512)
        .prop_map(|chars| SymbolString::from_text(&chars.iter().collect::<String>()).unwrap())
}

proptest! {
    #[test]
    fn mirror_and_negative_are_involutions(s in binary_string()) {
        let inv = Involution::binary();
        prop_assert_eq!(mirror(&mirror(&s)), s.clone());
        let n = negative(&s, &inv).unwrap();
        prop_assert_eq!(negative(&n, &inv).unwrap(), s);
    }

    #[test]
    fn mirror_and_negative_commute(s in binary_string()) {
        let inv = Involution::binary();
        let mn = mirror(&negative(&s, &inv).unwrap());
        let nm = negative(&mirror(&s), &inv).unwrap();
        prop_assert_eq!(mn.clone(), nm);
        prop_assert_eq!(apply_expr(MappingExpr::Mn, &s, &inv).unwrap(), mn);
    }

    #[test]
    fn mappings_are_homomorphisms(s in binary_string(), t in binary_string()) {
        let inv = Involution::binary();
        prop_assert_eq!(mirror(&s.concat(&t)), mirror(&t).concat(&mirror(&s)));
        prop_assert_eq!(
            negative(&s.concat(&t), &inv).unwrap(),
            negative(&s, &inv).unwrap().concat(&negative(&t, &inv).unwrap())
        );
    }

    #[test]
    fn composition_agrees_with_sequential_application(
        s in binary_string(),
        a in prop_oneof![Just(MappingExpr::Id), Just(MappingExpr::M), Just(MappingExpr::N), Just(MappingExpr::Mn)],
        b in prop_oneof![Just(MappingExpr::Id), Just(MappingExpr::M), Just(MappingExpr::N), Just(MappingExpr::Mn)],
    ) {
        let inv = Involution::binary();
        let sequential = apply_expr(a, &apply_expr(b, &s, &inv).unwrap(), &inv).unwrap();
        let composed = apply_expr(compose(a, b), &s, &inv).unwrap();
        prop_assert_eq!(sequential, composed);
    }

    #[test]
    fn step_is_a_monoid_homomorphism(s in binary_string(), t in binary_string()) {
        for grammar in [catalog::fib(), catalog::xor(), catalog::eq19()] {
            let joined = lspace_core::grammar::step(&grammar, &s.concat(&t)).unwrap();
            let split = lspace_core::grammar::step(&grammar, &s)
                .unwrap()
                .concat(&lspace_core::grammar::step(&grammar, &t).unwrap());
            prop_assert_eq!(joined, split);
        }
    }
}

#[test]
fn a_derivation_is_exactly_the_iterated_step() {
    for grammar in [catalog::fib(), catalog::efib1(), catalog::eq14()] {
        let d = derive(&grammar, 6).unwrap();
        assert_eq!(d.generations()[0].symbols(), grammar.axiom());
        for t in 0..6 {
            let stepped = lspace_core::grammar::step(&grammar, &d.generations()[t]).unwrap();
            assert_eq!(stepped, d.generations()[t + 1], "t={t} for:\n{grammar}");
        }
    }
}

#[test]
fn xor_lengths_are_powers_of_two() {
    let d = derive(&catalog::xor(), 20).unwrap();
    for (t, g) in d.generations().iter().enumerate() {
        assert_eq!(g.len(), 1usize << t, "length at t={t}");
    }
}

#[test]
fn fib_lengths_follow_the_recurrence() {
    let d = derive(&catalog::fib(), 25).unwrap();
    let lengths: Vec<usize> = d.generations().iter().map(SymbolString::len).collect();
    assert_eq!(&lengths[..3], &[1, 1, 2]);
    for t in 2..=25 {
        assert_eq!(
            lengths[t],
            lengths[t - 1] + lengths[t - 2],
            "length at t={t}"
        );
    }
}

#[test]
fn derivation_is_deterministic_across_threads() {
    let grammar = catalog::efib2();
    let reference = derive(&grammar, 14).unwrap();
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let g = grammar.clone();
            std::thread::spawn(move || derive(&g, 14).unwrap())
        })
        .collect();
    for handle in handles {
        assert_eq!(handle.join().unwrap(), reference);
    }
}

#[test]
fn sequential_rewriting_of_total_grammars_never_halts_alone() {
    for grammar in [
        catalog::fib(),
        catalog::xor(),
        catalog::eq19(),
        catalog::eq20(),
    ] {
        let d = derive_sequential(&grammar, 200);
        assert!(
            d.truncated(),
            "every symbol has a production; only the limit stops it"
        );
        assert!(!d.halted());
    }
}

#[test]
fn tree_frontiers_match_generations() {
    for grammar in [
        catalog::fib(),
        catalog::xor(),
        catalog::efib1(),
        catalog::eq12a(),
    ] {
        let n = 6;
        let tree = lspace_core::grammar::derive_tree(&grammar, n).unwrap();
        let d = derive(&grammar, n).unwrap();
        for t in 0..=n {
            assert_eq!(&tree.frontier(t), &d.generations()[t]);
        }
        let node_count: usize = d.generations().iter().map(SymbolString::len).sum();
        assert_eq!(tree.node_count(), node_count);
    }
}

// ---------------------------------------------------------------------------
// Random-grammar corpus checks
// ---------------------------------------------------------------------------

fn random_grammar(rng: &mut StdRng) -> LGrammar {
    let names = ["a", "b", "c", "d"];
    let size = rng.gen_range(2..=4);
    let alphabet: Vec<Symbol> = names[..size]
        .iter()
        .map(|n| Symbol::new(n).unwrap())
        .collect();
    let mut productions = Vec::new();
    for symbol in &alphabet {
        if rng.gen_bool(0.85) {
            let len = rng.gen_range(0..=5);
            let rhs: Vec<Symbol> = (0..len)
                .map(|_| alphabet[rng.gen_range(0..alphabet.len())].clone())
                .collect();
            productions.push(Production::new(symbol.clone(), rhs));
        }
    }
    let axiom = vec![alphabet[rng.gen_range(0..alphabet.len())].clone()];
    LGrammar::from_parts(axiom, productions).unwrap()
}

/// The weak condition, recomputed from scratch as the oracle for the
/// strong-implies-weak check.
fn weak_condition_holds(grammar: &LGrammar, mode: CountingMode) -> bool {
    let mut indices: Vec<usize> = grammar
        .productions()
        .iter()
        .filter(|p| !p.is_erasing())
        .map(|p| lspace_core::classifier::rule_index(grammar, p, mode))
        .collect();
    if indices.len() < 2 {
        return false;
    }
    indices.sort_unstable();
    indices[0] > 0 && indices.windows(2).all(|w| w[0] < w[1])
}

#[test]
fn strong_implies_weak_and_verdicts_are_exclusive() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mode = CountingMode::default();
    for _ in 0..10_000 {
        let grammar = random_grammar(&mut rng);
        let report = classify(&grammar, mode);
        if report.asymmetry == Asymmetry::Strong {
            assert!(
                weak_condition_holds(&grammar, mode),
                "strong without weak for:\n{grammar}"
            );
        }
        if report.symmetric {
            assert_eq!(
                report.asymmetry,
                Asymmetry::None,
                "symmetric and asymmetric co-occur for:\n{grammar}"
            );
        }
    }
}

/// Straight-line re-implementation of the whole classification, used as an
/// independent oracle against `classify`.
fn classify_oracle(grammar: &LGrammar, mode: CountingMode) -> (bool, Asymmetry, bool) {
    let index = |p: &Production| -> usize {
        p.rhs()
            .iter()
            .filter(|s| mode.index_counts_stumps || grammar.rewrites(s))
            .count()
    };
    let view = |p: &Production| -> Vec<Symbol> {
        p.rhs()
            .iter()
            .filter(|s| mode.containment_includes_stumps || grammar.rewrites(s))
            .cloned()
            .collect()
    };
    let rules: Vec<&Production> = grammar
        .productions()
        .iter()
        .filter(|p| !p.is_erasing())
        .collect();
    let indices: Vec<usize> = rules.iter().map(|p| index(p)).collect();

    let all_equal = !indices.is_empty() && indices.windows(2).all(|w| w[0] == w[1]);
    let symmetric = all_equal && grammar.alphabet().iter().all(|s| grammar.rewrites(s));

    let mut pairs: Vec<(usize, &Production)> =
        indices.iter().copied().zip(rules.iter().copied()).collect();
    pairs.sort_by_key(|(i, _)| *i);
    let weak = pairs.len() >= 2 && pairs[0].0 > 0 && pairs.windows(2).all(|w| w[0].0 < w[1].0);

    let contained = |needle: &[Symbol], hay: &[Symbol]| -> bool {
        !needle.is_empty()
            && needle.len() < hay.len()
            && (0..=hay.len() - needle.len()).any(|i| &hay[i..i + needle.len()] == needle)
    };
    let strong = weak
        && pairs
            .windows(2)
            .all(|w| contained(&view(w[0].1), &view(w[1].1)));

    let asymmetry = if strong {
        Asymmetry::Strong
    } else if weak {
        Asymmetry::Weak
    } else {
        Asymmetry::None
    };

    let exhaustive = all_equal
        && rules.iter().all(|p| {
            p.rhs()
                .iter()
                .all(|s| p.rhs().iter().filter(|t| t == &s).count() == 1)
        });

    (symmetric, asymmetry, exhaustive)
}

#[test]
fn classify_agrees_with_an_independent_oracle() {
    let mut rng = StdRng::seed_from_u64(0xdead);
    for mode in [
        CountingMode::default(),
        CountingMode {
            index_counts_stumps: true,
            containment_includes_stumps: true,
        },
        CountingMode {
            index_counts_stumps: false,
            containment_includes_stumps: false,
        },
        CountingMode {
            index_counts_stumps: true,
            containment_includes_stumps: false,
        },
    ] {
        for _ in 0..2_500 {
            let grammar = random_grammar(&mut rng);
            let report = classify(&grammar, mode);
            let (symmetric, asymmetry, exhaustive) = classify_oracle(&grammar, mode);
            assert_eq!(
                (report.symmetric, report.asymmetry, report.exhaustive),
                (symmetric, asymmetry, exhaustive),
                "verdict drift under {mode:?} for:\n{grammar}"
            );
        }
    }
}

#[test]
fn classification_is_invariant_under_renaming() {
    let mut rng = StdRng::seed_from_u64(0xace);
    let mode = CountingMode::default();
    for _ in 0..2_000 {
        let grammar = random_grammar(&mut rng);
        // Reverse the alphabet: a clean derangement-ish bijection.
        let symbols: Vec<Symbol> = grammar.alphabet().iter().cloned().collect();
        let pairs: Vec<(Symbol, Symbol)> = symbols
            .iter()
            .cloned()
            .zip(symbols.iter().rev().cloned())
            .collect();
        let renamed = edit_grammar(
            &grammar,
            &GrammarEdit::PermuteSymbols {
                pairs: pairs.clone(),
            },
        )
        .unwrap();

        let before = classify(&grammar, mode);
        let after = classify(&renamed, mode);
        assert_eq!(before.symmetric, after.symmetric, "grammar:\n{grammar}");
        assert_eq!(before.asymmetry, after.asymmetry, "grammar:\n{grammar}");
        assert_eq!(before.exhaustive, after.exhaustive, "grammar:\n{grammar}");

        let rename = |s: &Symbol| -> Symbol {
            pairs
                .iter()
                .find(|(from, _)| from == s)
                .map(|(_, to)| to.clone())
                .unwrap()
        };
        assert_eq!(before.strong_term.map(|s| rename(&s)), after.strong_term);
        assert_eq!(before.weak_term.map(|s| rename(&s)), after.weak_term);
        assert_eq!(
            before
                .remainder
                .map(|r| SymbolString::new(r.iter().map(rename).collect())),
            after.remainder
        );
    }
}

#[test]
fn single_symbol_heads_never_conflict() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..500 {
        let len = rng.gen_range(1..40);
        let sample: String = (0..len)
            .map(|_| if rng.gen_bool(0.5) { '0' } else { '1' })
            .collect();
        let rules = vec![
            RewriteRule {
                lhs: SymbolString::from_text("0").unwrap(),
                rhs: SymbolString::from_text("01").unwrap(),
            },
            RewriteRule {
                lhs: SymbolString::from_text("1").unwrap(),
                rhs: SymbolString::from_text("10").unwrap(),
            },
        ];
        let report = detect_frustration(&rules, &SymbolString::from_text(&sample).unwrap(), 1_000);
        assert_eq!(report.verdict, FrustrationVerdict::NotApplicable);
        assert!(report.conflicts.is_empty());
    }
}

#[test]
fn decompositions_replay_exactly() {
    let inv = Involution::binary();
    for grammar in [
        catalog::fib(),
        catalog::xor(),
        catalog::eq12a(),
        catalog::eq19(),
    ] {
        let d = derive(&grammar, 8).unwrap();
        for x in 2..=8 {
            if let Some(dec) = decompose_self_referential(&d, x, &inv).unwrap() {
                assert!(
                    replay_decomposition(&d, &dec, &inv),
                    "decomposition of g{x} failed to replay for:\n{grammar}"
                );
            }
        }
    }
}

#[test]
fn property_preserving_expansions_stay_fibonacci_through_fifteen_generations() {
    use lspace_core::analysis::{count_profile, matches_fibonacci};
    use lspace_core::transforms::{expand_generations, ExpansionSpec};

    let mut grammars = vec![catalog::fib(), catalog::eq12a(), catalog::eq14()];
    for k in 1..=4 {
        let expansion = expand_generations(&ExpansionSpec {
            zero: vec![k],
            one: vec![k + 1],
        })
        .unwrap();
        assert!(
            expansion.preservation.preserved,
            "consecutive spec ({k}, {})",
            k + 1
        );
        grammars.push(expansion.grammar);
    }
    for grammar in grammars {
        let profile = count_profile(&grammar, 15);
        for symbol in grammar.alphabet().iter() {
            let seq = profile.sequence(symbol, 1, 15);
            assert!(
                matches_fibonacci(&seq).unwrap().matches,
                "counts of {symbol} not Fibonacci for:\n{grammar}"
            );
        }
    }
}

#[test]
fn consecutive_expansions_reduce_back_to_minimal_fib() {
    use lspace_core::transforms::{
        expand_generations, reduce_to_minimal, replay_reduction, ExpansionSpec, ReductionTarget,
    };

    // The (1, 2) spec reproduces the minimal grammar outright.
    let identity = expand_generations(&ExpansionSpec {
        zero: vec![1],
        one: vec![2],
    })
    .unwrap();
    assert_eq!(identity.grammar, ReductionTarget::MinimalFib.grammar());

    for k in 2..=4 {
        let expansion = expand_generations(&ExpansionSpec {
            zero: vec![k],
            one: vec![k + 1],
        })
        .unwrap();
        let outcome = reduce_to_minimal(
            &expansion.grammar,
            ReductionTarget::MinimalFib,
            10_000,
            true,
        );
        let proof = outcome
            .proof()
            .unwrap_or_else(|| panic!("expansion ({k}, {}) must reduce", k + 1));
        let replayed = replay_reduction(&proof.source, &proof.steps).unwrap();
        assert_eq!(replayed, ReductionTarget::MinimalFib.grammar());
    }
}

#[test]
fn thue_morse_prefixes_are_overlap_free_at_every_scale() {
    use lspace_core::analysis::repetition_stats;
    use num_rational::Ratio;

    // 2^14 itself is the acceptance suite's job; everything below it runs
    // here.
    let d = derive(&catalog::xor(), 13).unwrap();
    for k in 2..=13 {
        let prefix = &d.generations()[k];
        let stats = repetition_stats(prefix, prefix.len() / 2).unwrap();
        assert!(
            stats.max_exponent <= Ratio::from_integer(2),
            "overlap at 2^{k}"
        );
        assert!(!stats.has_cube, "cube at 2^{k}");
    }
}

#[test]
fn parse_display_round_trips() {
    for (name, text) in catalog::ALL {
        if *name == "chomsky-2" {
            continue; // sequential-only syntax
        }
        let grammar = parse_grammar(text).unwrap();
        let reparsed = parse_grammar(&grammar.to_string()).unwrap();
        assert_eq!(grammar, reparsed, "{name}");
    }

    let mut rng = StdRng::seed_from_u64(0xf00d);
    for _ in 0..2_000 {
        let grammar = random_grammar(&mut rng);
        let reparsed = parse_grammar(&grammar.to_string()).unwrap();
        assert_eq!(
            grammar.productions(),
            reparsed.productions(),
            "round trip drift for:\n{grammar}"
        );
        assert_eq!(grammar.axiom(), reparsed.axiom());
    }
}

/// Fully independent repetition oracle: enumerate every (start, length,
/// period) triple directly and take the exponent maximum.
fn repetition_oracle(text: &str, max_period: usize) -> (u64, u64) {
    let bytes = text.as_bytes();
    let n = bytes.len();
    let mut best = (1u64, 1u64);
    for period in 1..=max_period {
        for start in 0..n {
            let mut end = start + period;
            if end > n {
                break;
            }
            // Extend the run while the periodicity holds.
            while end < n && bytes[end] == bytes[end - period] {
                end += 1;
            }
            let (total, p) = ((end - start) as u64, period as u64);
            if total * best.1 > best.0 * p {
                best = (total, p);
            }
        }
    }
    best
}

#[test]
fn repetition_scan_matches_an_independent_enumeration() {
    use lspace_core::analysis::repetition_stats;
    use num_rational::Ratio;

    let mut rng = StdRng::seed_from_u64(0xbeef);
    for _ in 0..300 {
        let len = rng.gen_range(1..=60);
        let alphabet = ["0", "1", "a"];
        let text: String = (0..len)
            .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
            .collect();
        let max_period = len / 2;
        let stats = repetition_stats(&SymbolString::from_text(&text).unwrap(), max_period).unwrap();
        if max_period == 0 {
            assert_eq!(stats.max_exponent, Ratio::from_integer(1));
            continue;
        }
        let (total, period) = repetition_oracle(&text, max_period);
        assert_eq!(
            stats.max_exponent,
            Ratio::new(total, period),
            "input {text:?}"
        );
    }
}
