//! Grammar classification: symmetric versus asymmetric status, the
//! minimal rule-format taxonomy, and frustration detection.

use std::fmt;

use thiserror::Error;

use crate::analysis::is_fib_constituent;
use crate::grammar::{LGrammar, Production, Symbol, SymbolString};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("not a minimal binary grammar: {0}")]
    NotBinaryMinimal(String),
}

/// How rule indices and containment treat symbols that do not rewrite.
///
/// The default — indices skip stumps and erasing symbols, containment
/// compares full bodies — is the one combination that reproduces every
/// classification label the catalog grammars are expected to carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountingMode {
    /// Count stumps and erasing symbols in rule indices.
    pub index_counts_stumps: bool,
    /// Keep stumps and erasing symbols in the bodies compared for the
    /// strong condition.
    pub containment_includes_stumps: bool,
}

impl Default for CountingMode {
    fn default() -> Self {
        CountingMode {
            index_counts_stumps: false,
            containment_includes_stumps: true,
        }
    }
}

/// The mode-sensitive index of a rule: how many body symbols count.
pub fn rule_index(grammar: &LGrammar, production: &Production, mode: CountingMode) -> usize {
    if mode.index_counts_stumps {
        production.rhs().len()
    } else {
        production
            .rhs()
            .iter()
            .filter(|s| grammar.rewrites(s))
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Asymmetry {
    None,
    Weak,
    Strong,
}

impl fmt::Display for Asymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Asymmetry::None => "none",
            Asymmetry::Weak => "weak",
            Asymmetry::Strong => "strong",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub symmetric: bool,
    pub asymmetry: Asymmetry,
    pub strong_term: Option<Symbol>,
    pub weak_term: Option<Symbol>,
    pub remainder: Option<SymbolString>,
    /// Whether the remainder is a natural Fibonacci constituent — a
    /// property of Fibonacci emergence, reported separately from the
    /// strong verdict itself. Only computed for binary 0/1 remainders.
    pub remainder_is_fib_constituent: Option<bool>,
    pub exhaustive: bool,
    pub mode: CountingMode,
}

/// Classifies a grammar under the given counting mode.
///
/// Erasing productions describe null symbols and never participate in the
/// index comparisons; the rules considered are exactly those with
/// non-empty bodies.
pub fn classify(grammar: &LGrammar, mode: CountingMode) -> ClassificationReport {
    let rules: Vec<&Production> = grammar
        .productions()
        .iter()
        .filter(|p| !p.is_erasing())
        .collect();
    let indices: Vec<usize> = rules.iter().map(|p| rule_index(grammar, p, mode)).collect();

    let all_equal = !indices.is_empty() && indices.iter().all(|&i| i == indices[0]);
    let every_symbol_rewrites = grammar.alphabet().iter().all(|s| grammar.rewrites(s));
    let symmetric = all_equal && every_symbol_rewrites;

    // Weak: indices strictly totally ordered and positive, over at least
    // two rules.
    let mut ordered: Vec<(usize, &Production)> =
        indices.iter().copied().zip(rules.iter().copied()).collect();
    ordered.sort_by_key(|(i, _)| *i);
    let strictly_ordered =
        ordered.len() >= 2 && ordered[0].0 > 0 && ordered.windows(2).all(|w| w[0].0 < w[1].0);

    let mut asymmetry = Asymmetry::None;
    let mut strong_term = None;
    let mut weak_term = None;
    let mut remainder = None;
    let mut remainder_is_fib_constituent = None;

    if strictly_ordered {
        asymmetry = Asymmetry::Weak;
        weak_term = Some(ordered.first().unwrap().1.lhs().clone());
        strong_term = Some(ordered.last().unwrap().1.lhs().clone());

        // Proper containment: the smaller body must occur inside the larger
        // one and leave a non-empty remainder.
        let contains = |small: &Production, large: &Production| -> Option<usize> {
            let small_body = containment_view(grammar, small, mode);
            let large_body = containment_view(grammar, large, mode);
            if small_body.len() >= large_body.len() {
                return None;
            }
            find_subsequence(&large_body, &small_body)
        };
        // Contiguous containment is transitive, so consecutive pairs
        // certify the whole chain.
        let all_nested = ordered
            .windows(2)
            .all(|w| contains(w[0].1, w[1].1).is_some());
        if all_nested {
            asymmetry = Asymmetry::Strong;
            let smallest = ordered.first().unwrap().1;
            let largest = ordered.last().unwrap().1;
            let small_body = containment_view(grammar, smallest, mode);
            let large_body = containment_view(grammar, largest, mode);
            let at = find_subsequence(&large_body, &small_body).expect("nested by check above");
            let mut rest = large_body.clone();
            rest.drain(at..at + small_body.len());
            let rest = SymbolString::new(rest);
            remainder_is_fib_constituent = if !rest.is_empty() && rest.is_binary_01() {
                Some(
                    is_fib_constituent(&rest, true)
                        .map(|m| m.yes)
                        .unwrap_or(false),
                )
            } else {
                None
            };
            remainder = Some(rest);
        }
    }

    // Exhaustive: equal indices and no symbol occurring twice on either
    // side of any rule.
    let exhaustive = all_equal
        && rules.iter().all(|p| {
            p.rhs()
                .iter()
                .enumerate()
                .all(|(i, s)| !p.rhs()[..i].contains(s))
        });

    ClassificationReport {
        symmetric,
        asymmetry,
        strong_term,
        weak_term,
        remainder,
        remainder_is_fib_constituent,
        exhaustive,
        mode,
    }
}

fn containment_view(grammar: &LGrammar, p: &Production, mode: CountingMode) -> Vec<Symbol> {
    if mode.containment_includes_stumps {
        p.rhs().to_vec()
    } else {
        p.rhs()
            .iter()
            .filter(|s| grammar.rewrites(s))
            .cloned()
            .collect()
    }
}

/// Leftmost start of `needle` as a contiguous subsequence of `haystack`.
fn find_subsequence(haystack: &[Symbol], needle: &[Symbol]) -> Option<usize> {
    if needle.is_empty() || needle.len() > haystack.len() {
        return None;
    }
    (0..=haystack.len() - needle.len()).find(|&i| &haystack[i..i + needle.len()] == needle)
}

// ---------------------------------------------------------------------------
// Rule-format taxonomy
// ---------------------------------------------------------------------------

/// Schema of the rule rewriting the axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomRule {
    /// axiom -> non-axiom
    I,
    /// axiom -> non-axiom, axiom (order ignored)
    Ii,
    /// axiom -> non-axiom, non-axiom
    Iii,
}

/// Schema of the rule rewriting the non-axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonAxiomRule {
    /// non-axiom -> axiom
    Iv,
    /// non-axiom -> axiom, non-axiom (order ignored)
    V,
    /// non-axiom -> non-axiom, non-axiom
    Vi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Fib,
    Xor,
    Feigenbaum,
    TrivialAlternation,
    /// Generates strings that map to Fibonacci generations under mirror
    /// and negative readings.
    FibMappable,
    Degenerate,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Fib => "Fib",
            Family::Xor => "XOR",
            Family::Feigenbaum => "Feigenbaum",
            Family::TrivialAlternation => "trivial-alternation",
            Family::FibMappable => "fib-mappable",
            Family::Degenerate => "degenerate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleFormat {
    pub axiom_rule: AxiomRule,
    pub nonaxiom_rule: NonAxiomRule,
    pub family: Family,
}

/// Matches a minimal binary grammar against the rule-format taxonomy.
/// The axiom must be one symbol of a two-symbol alphabet and each body
/// must have one or two symbols; order inside bodies is ignored.
pub fn rule_format(grammar: &LGrammar) -> Result<RuleFormat, ClassifyError> {
    if grammar.alphabet().len() != 2 {
        return Err(ClassifyError::NotBinaryMinimal(format!(
            "alphabet has {} symbols, need exactly 2",
            grammar.alphabet().len()
        )));
    }
    if grammar.axiom().len() != 1 {
        return Err(ClassifyError::NotBinaryMinimal(
            "axiom must be a single symbol".into(),
        ));
    }
    let axiom = grammar.axiom()[0].clone();
    let other = grammar
        .alphabet()
        .iter()
        .find(|s| **s != axiom)
        .expect("two-symbol alphabet")
        .clone();

    let body = |lhs: &Symbol| -> Result<(usize, usize), ClassifyError> {
        let p = grammar
            .production(lhs)
            .ok_or_else(|| ClassifyError::NotBinaryMinimal(format!("`{lhs}` has no production")))?;
        if p.rhs().is_empty() || p.rhs().len() > 2 {
            return Err(ClassifyError::NotBinaryMinimal(format!(
                "body of `{lhs}` must have 1 or 2 symbols"
            )));
        }
        let axioms = p.rhs().iter().filter(|s| **s == axiom).count();
        Ok((axioms, p.rhs().len() - axioms))
    };

    let axiom_rule = match body(&axiom)? {
        (0, 1) => AxiomRule::I,
        (1, 1) => AxiomRule::Ii,
        (0, 2) => AxiomRule::Iii,
        _ => {
            return Err(ClassifyError::NotBinaryMinimal(
                "axiom rule matches no schema (axiom rewriting only as itself)".into(),
            ))
        }
    };
    let nonaxiom_rule =
        match body(&other)? {
            (1, 0) => NonAxiomRule::Iv,
            (1, 1) => NonAxiomRule::V,
            (0, 2) => NonAxiomRule::Vi,
            _ => return Err(ClassifyError::NotBinaryMinimal(
                "non-axiom rule matches no schema (non-axiom rewriting only as the axiom twice)"
                    .into(),
            )),
        };

    let family = match (axiom_rule, nonaxiom_rule) {
        (AxiomRule::I, NonAxiomRule::V) => Family::Fib,
        (AxiomRule::Ii, NonAxiomRule::V) => Family::Xor,
        (AxiomRule::Iii, NonAxiomRule::V) => Family::Feigenbaum,
        (AxiomRule::I, NonAxiomRule::Iv) => Family::TrivialAlternation,
        (AxiomRule::Ii, NonAxiomRule::Iv) => Family::FibMappable,
        // The remaining combinations produce alternating or single-letter
        // strings; none sustains a non-trivial language.
        (AxiomRule::Ii, NonAxiomRule::Vi)
        | (AxiomRule::Iii, NonAxiomRule::Iv)
        | (AxiomRule::Iii, NonAxiomRule::Vi)
        | (AxiomRule::I, NonAxiomRule::Vi) => Family::Degenerate,
    };

    Ok(RuleFormat {
        axiom_rule,
        nonaxiom_rule,
        family,
    })
}

// ---------------------------------------------------------------------------
// Frustration
// ---------------------------------------------------------------------------

/// A rewrite rule for the frustration probe. Unlike grammar productions,
/// the head may span several symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: SymbolString,
    pub rhs: SymbolString,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleMatch {
    pub rule: usize,
    pub start: usize,
    pub len: usize,
}

impl RuleMatch {
    fn overlaps(&self, other: &RuleMatch) -> bool {
        self.start < other.start + other.len && other.start < self.start + self.len
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrustrationVerdict {
    Frustrated,
    NotFrustrated,
    /// Every head is a single symbol, so simultaneous application is
    /// unambiguous and the probe does not apply.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingConflict {
    pub verdict: FrustrationVerdict,
    pub sample: SymbolString,
    pub matches: Vec<RuleMatch>,
    /// Pairs of indices into `matches` that overlap in at least one
    /// position.
    pub conflicts: Vec<(usize, usize)>,
    /// Number of distinct maximal non-overlapping tilings found within the
    /// enumeration bound.
    pub distinct_tilings: usize,
    pub enumeration_truncated: bool,
}

/// Finds every head occurrence in the sample, every overlapping pair, and
/// counts maximal non-overlapping tilings by bounded enumeration.
pub fn detect_frustration(
    rules: &[RewriteRule],
    sample: &SymbolString,
    enumeration_bound: usize,
) -> TilingConflict {
    if !rules.iter().any(|r| r.lhs.len() > 1) {
        return TilingConflict {
            verdict: FrustrationVerdict::NotApplicable,
            sample: sample.clone(),
            matches: Vec::new(),
            conflicts: Vec::new(),
            distinct_tilings: 0,
            enumeration_truncated: false,
        };
    }

    let mut matches = Vec::new();
    for (rule, r) in rules.iter().enumerate() {
        let head = r.lhs.symbols();
        if head.is_empty() || head.len() > sample.len() {
            continue;
        }
        for start in 0..=sample.len() - head.len() {
            if &sample.symbols()[start..start + head.len()] == head {
                matches.push(RuleMatch {
                    rule,
                    start,
                    len: head.len(),
                });
            }
        }
    }
    matches.sort_by_key(|m| (m.start, m.rule));

    let mut conflicts = Vec::new();
    for i in 0..matches.len() {
        for j in i + 1..matches.len() {
            if matches[i].overlaps(&matches[j]) {
                conflicts.push((i, j));
            }
        }
    }

    let (distinct_tilings, enumeration_truncated) = {
        let mut counter = TilingCounter {
            matches: &matches,
            bound: enumeration_bound,
            explored: 0,
            found: 0,
            truncated: false,
        };
        counter.enumerate(0, &mut Vec::new());
        (counter.found, counter.truncated)
    };

    TilingConflict {
        verdict: if conflicts.is_empty() {
            FrustrationVerdict::NotFrustrated
        } else {
            FrustrationVerdict::Frustrated
        },
        sample: sample.clone(),
        matches,
        conflicts,
        distinct_tilings,
        enumeration_truncated,
    }
}

struct TilingCounter<'a> {
    matches: &'a [RuleMatch],
    bound: usize,
    explored: usize,
    found: usize,
    truncated: bool,
}

impl TilingCounter<'_> {
    /// Subset enumeration over matches in order; each complete independent
    /// set is counted when no compatible match was left out.
    fn enumerate(&mut self, k: usize, chosen: &mut Vec<usize>) {
        if self.truncated {
            return;
        }
        self.explored += 1;
        if self.explored > self.bound {
            self.truncated = true;
            return;
        }
        if k == self.matches.len() {
            if !self.matches.is_empty() && self.is_maximal(chosen) {
                self.found += 1;
            }
            return;
        }
        let candidate = self.matches[k];
        let compatible = chosen
            .iter()
            .all(|&i| !self.matches[i].overlaps(&candidate));
        if compatible {
            chosen.push(k);
            self.enumerate(k + 1, chosen);
            chosen.pop();
        }
        self.enumerate(k + 1, chosen);
    }

    fn is_maximal(&self, chosen: &[usize]) -> bool {
        (0..self.matches.len()).all(|i| {
            chosen.contains(&i)
                || chosen
                    .iter()
                    .any(|&j| self.matches[j].overlaps(&self.matches[i]))
        })
    }
}
