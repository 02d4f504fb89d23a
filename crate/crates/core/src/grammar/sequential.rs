//! Sequential, one-rewrite-per-step derivation — the normal-grammar
//! contrast to parallel stepping.
//!
//! Where an L-step rewrites every symbol at once, this mode applies a
//! single production per step and halts when nothing is rewritable, the
//! way classic textbook derivations terminate on all-terminal strings.
//!
//! Rule selection is a rotating scan over the rule list: the scan resumes
//! after the rule applied last, wraps around, and the first applicable
//! rule rewrites the leftmost occurrence of its head. This is the
//! discipline that reproduces classic hand-written derivations, which
//! expand phrase rules top-down before returning to the leftover
//! nonterminals. A rule with several alternatives consumes them in listed
//! order, one per use, sticking to the last once exhausted — demo-only
//! behavior to reproduce fixed example sentences.

use super::symbol::{Symbol, SymbolString};
use super::LGrammar;

/// A rewrite rule with ordered alternative bodies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequentialRule {
    lhs: Symbol,
    alternatives: Vec<Vec<Symbol>>,
}

impl SequentialRule {
    pub fn new(lhs: Symbol, alternatives: Vec<Vec<Symbol>>) -> SequentialRule {
        SequentialRule { lhs, alternatives }
    }

    pub fn lhs(&self) -> &Symbol {
        &self.lhs
    }

    pub fn alternatives(&self) -> &[Vec<Symbol>] {
        &self.alternatives
    }

    pub(crate) fn extend_alternatives(&mut self, more: Vec<Vec<Symbol>>) {
        self.alternatives.extend(more);
    }
}

/// An ordered rule list plus axiom. Unlike [`LGrammar`] a symbol may carry
/// several alternatives; order is significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequentialGrammar {
    axiom: Vec<Symbol>,
    rules: Vec<SequentialRule>,
}

impl SequentialGrammar {
    pub fn new(axiom: Vec<Symbol>, rules: Vec<SequentialRule>) -> SequentialGrammar {
        SequentialGrammar { axiom, rules }
    }

    pub fn axiom(&self) -> &[Symbol] {
        &self.axiom
    }

    pub fn rules(&self) -> &[SequentialRule] {
        &self.rules
    }
}

impl From<&LGrammar> for SequentialGrammar {
    fn from(g: &LGrammar) -> SequentialGrammar {
        let rules = g
            .productions()
            .iter()
            .map(|p| SequentialRule::new(p.lhs().clone(), vec![p.rhs().to_vec()]))
            .collect();
        SequentialGrammar::new(g.axiom().to_vec(), rules)
    }
}

/// The full sentential-form sequence of a sequential derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequentialDerivation {
    forms: Vec<SymbolString>,
    truncated: bool,
    halted: bool,
}

impl SequentialDerivation {
    pub fn forms(&self) -> &[SymbolString] {
        &self.forms
    }

    pub fn last(&self) -> &SymbolString {
        self.forms.last().expect("at least the axiom")
    }

    /// True when the step limit cut the derivation off while a rule was
    /// still applicable.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// True when the derivation stopped on its own because no symbol of the
    /// final form has a production.
    pub fn halted(&self) -> bool {
        self.halted
    }
}

/// Runs the sequential derivation for at most `step_limit` rewrites.
pub fn derive_sequential_grammar(
    grammar: &SequentialGrammar,
    step_limit: usize,
) -> SequentialDerivation {
    let nrules = grammar.rules.len();
    let mut current: Vec<Symbol> = grammar.axiom.to_vec();
    let mut forms = vec![SymbolString::new(current.clone()).with_generation(0)];
    let mut use_counts = vec![0usize; nrules];
    let mut scan_from = 0usize;

    let find_applicable = |current: &[Symbol], scan_from: usize| -> Option<(usize, usize)> {
        for k in 0..nrules {
            let i = (scan_from + k) % nrules;
            let lhs = &grammar.rules[i].lhs;
            if let Some(pos) = current.iter().position(|s| s == lhs) {
                return Some((i, pos));
            }
        }
        None
    };

    let mut steps = 0usize;
    loop {
        if steps == step_limit {
            let truncated = nrules > 0 && find_applicable(&current, scan_from).is_some();
            return SequentialDerivation {
                forms,
                truncated,
                halted: !truncated,
            };
        }
        let Some((i, pos)) = (nrules > 0)
            .then(|| find_applicable(&current, scan_from))
            .flatten()
        else {
            return SequentialDerivation {
                forms,
                truncated: false,
                halted: true,
            };
        };
        let rule = &grammar.rules[i];
        let alt_index = use_counts[i].min(rule.alternatives.len() - 1);
        let body = &rule.alternatives[alt_index];
        use_counts[i] += 1;
        current.splice(pos..pos + 1, body.iter().cloned());
        steps += 1;
        forms.push(SymbolString::new(current.clone()).with_generation(steps));
        scan_from = (i + 1) % nrules;
    }
}

/// Sequential derivation of a deterministic grammar.
pub fn derive_sequential(grammar: &LGrammar, step_limit: usize) -> SequentialDerivation {
    derive_sequential_grammar(&SequentialGrammar::from(grammar), step_limit)
}
