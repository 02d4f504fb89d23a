//! Grammars and derivations.
//!
//! An [`LGrammar`] is deterministic and context-free: at most one production
//! per symbol, applied to every symbol of the current string in parallel.
//! Three roles fall out of the production map:
//!
//! - a symbol with a production with a non-empty body *rewrites*;
//! - a symbol with an explicitly empty body (spelled `~` in files) is
//!   *erasing* and vanishes at the next step;
//! - a symbol with no production at all is a *stump* and persists unchanged.
//!
//! The distinction matters: erasing symbols disappear from the next
//! generation while stumps accumulate, and the classifier counts the two
//! differently.

mod derive;
mod parse;
mod sequential;
mod symbol;
mod tree;

pub use derive::{derive, derive_with, step, Derivation, DeriveOptions, DEFAULT_LENGTH_CAP};
pub use parse::{parse_grammar, parse_sequential_grammar};
pub use sequential::{
    derive_sequential, derive_sequential_grammar, SequentialDerivation, SequentialGrammar,
    SequentialRule,
};
pub use symbol::{Alphabet, Symbol, SymbolError, SymbolString, NULL_TOKEN};
pub use tree::{derive_tree, derive_tree_with, DerivationTree, NodeId, TreeNode};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrammarError {
    #[error("line {line}: duplicate rule for `{symbol}` (a symbol has at most one production)")]
    DuplicateRule { symbol: String, line: usize },
    #[error("missing `axiom:` line")]
    MissingAxiom,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("symbol `{symbol}` is not in the grammar's alphabet")]
    ForeignSymbol { symbol: String },
    #[error("generation {generation} would have {length} symbols, over the cap of {cap}")]
    LengthCapExceeded {
        generation: usize,
        length: usize,
        cap: usize,
    },
    #[error("axiom must not be empty")]
    EmptyAxiom,
}

/// One rewriting rule: a single left-hand symbol and a (possibly empty)
/// right-hand sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Production {
    lhs: Symbol,
    rhs: Vec<Symbol>,
}

impl Production {
    pub fn new(lhs: Symbol, rhs: Vec<Symbol>) -> Production {
        Production { lhs, rhs }
    }

    pub fn lhs(&self) -> &Symbol {
        &self.lhs
    }

    pub fn rhs(&self) -> &[Symbol] {
        &self.rhs
    }

    /// Raw body length. The classifier derives the mode-sensitive rule
    /// index from this together with the symbol roles.
    pub fn raw_index(&self) -> usize {
        self.rhs.len()
    }

    pub fn is_erasing(&self) -> bool {
        self.rhs.is_empty()
    }
}

impl fmt::Display for Production {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rhs.is_empty() {
            write!(f, "{} -> {}", self.lhs, NULL_TOKEN)
        } else {
            let body: Vec<&str> = self.rhs.iter().map(Symbol::as_str).collect();
            write!(f, "{} -> {}", self.lhs, body.join(" "))
        }
    }
}

/// A deterministic context-free L-grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LGrammar {
    alphabet: Alphabet,
    axiom: Vec<Symbol>,
    productions: Vec<Production>,
    by_lhs: HashMap<Symbol, usize>,
}

impl LGrammar {
    /// Builds a grammar from an axiom and productions in file order.
    /// The alphabet is inferred from every symbol mentioned, in first-mention
    /// order: axiom first, then each rule left to right.
    pub fn from_parts(
        axiom: Vec<Symbol>,
        productions: Vec<Production>,
    ) -> Result<LGrammar, GrammarError> {
        if axiom.is_empty() {
            return Err(GrammarError::EmptyAxiom);
        }
        let mut alphabet = Alphabet::new();
        for s in &axiom {
            alphabet.insert(s.clone());
        }
        let mut by_lhs = HashMap::new();
        for (i, p) in productions.iter().enumerate() {
            alphabet.insert(p.lhs.clone());
            for s in &p.rhs {
                alphabet.insert(s.clone());
            }
            if by_lhs.insert(p.lhs.clone(), i).is_some() {
                return Err(GrammarError::DuplicateRule {
                    symbol: p.lhs.as_str().to_string(),
                    line: 0,
                });
            }
        }
        Ok(LGrammar {
            alphabet,
            axiom,
            productions,
            by_lhs,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn axiom(&self) -> &[Symbol] {
        &self.axiom
    }

    pub fn axiom_string(&self) -> SymbolString {
        SymbolString::new(self.axiom.clone()).with_generation(0)
    }

    /// Productions in the order they were written.
    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    pub fn production(&self, symbol: &Symbol) -> Option<&Production> {
        self.by_lhs.get(symbol).map(|&i| &self.productions[i])
    }

    /// A stump has no production and persists unchanged under stepping.
    pub fn is_stump(&self, symbol: &Symbol) -> bool {
        !self.by_lhs.contains_key(symbol)
    }

    /// An erasing symbol has a production with an empty body and vanishes
    /// at the next step.
    pub fn is_erasing(&self, symbol: &Symbol) -> bool {
        self.production(symbol)
            .map(Production::is_erasing)
            .unwrap_or(false)
    }

    /// True when the symbol rewrites to a non-empty body.
    pub fn rewrites(&self, symbol: &Symbol) -> bool {
        self.production(symbol)
            .map(|p| !p.is_erasing())
            .unwrap_or(false)
    }

    pub fn stumps(&self) -> Vec<&Symbol> {
        self.alphabet.iter().filter(|s| self.is_stump(s)).collect()
    }

    /// Checks well-formedness and the non-halting assumption, reporting
    /// problems as diagnostics rather than failing.
    pub fn validate(&self) -> Diagnostics {
        let mut out = Diagnostics::default();

        for p in &self.productions {
            for s in &p.rhs {
                if !self.alphabet.contains(s) {
                    out.push(Diagnostic::error(
                        "FOREIGN_RHS_SYMBOL",
                        format!("rule `{}` uses `{}` outside the alphabet", p, s),
                    ));
                }
            }
        }
        for s in &self.axiom {
            if !self.alphabet.contains(s) {
                out.push(Diagnostic::error(
                    "FOREIGN_AXIOM_SYMBOL",
                    format!("axiom symbol `{}` is outside the alphabet", s),
                ));
            }
        }

        // Non-halting assumption: some symbol must occur on a left-hand side
        // and inside some body, otherwise every string is fixed after one
        // round of rewriting.
        let lhs_set: Vec<&Symbol> = self.productions.iter().map(Production::lhs).collect();
        let recurs = lhs_set.iter().any(|l| {
            self.productions
                .iter()
                .any(|p| p.rhs.iter().any(|s| s == *l))
        });
        if !recurs {
            out.push(Diagnostic::warning(
                "HALTS_GLOBALLY",
                "no symbol appears on both a left-hand side and a right-hand side; \
                 the derivation reaches a fixed point"
                    .to_string(),
            ));
        }

        if self.productions.is_empty() {
            out.push(Diagnostic::warning(
                "ALL_STUMPS",
                "every symbol is a stump; the axiom never changes".to_string(),
            ));
        }

        let stumps = self.stumps();
        if !stumps.is_empty() {
            let names: Vec<&str> = stumps.iter().map(|s| s.as_str()).collect();
            out.push(Diagnostic::info(
                "STUMP_SYMBOLS",
                format!(
                    "stumps (locally halting, persist unchanged): {}",
                    names.join(", ")
                ),
            ));
        }

        out
    }
}

impl fmt::Display for LGrammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let axiom: Vec<&str> = self.axiom.iter().map(Symbol::as_str).collect();
        writeln!(f, "axiom: {}", axiom.join(" "))?;
        for p in &self.productions {
            writeln!(f, "{}", p)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: &'static str,
    pub message: String,
}

impl Diagnostic {
    fn error(code: &'static str, message: String) -> Diagnostic {
        Diagnostic {
            severity: Severity::Error,
            code,
            message,
        }
    }
    fn warning(code: &'static str, message: String) -> Diagnostic {
        Diagnostic {
            severity: Severity::Warning,
            code,
            message,
        }
    }
    fn info(code: &'static str, message: String) -> Diagnostic {
        Diagnostic {
            severity: Severity::Info,
            code,
            message,
        }
    }
}

/// Validation findings, ordered as discovered. Informational entries (the
/// stump inventory) do not count against well-formedness.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    entries: Vec<Diagnostic>,
}

impl Diagnostics {
    fn push(&mut self, d: Diagnostic) {
        self.entries.push(d);
    }

    pub fn entries(&self) -> &[Diagnostic] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn has_errors(&self) -> bool {
        self.entries.iter().any(|d| d.severity == Severity::Error)
    }

    pub fn has_warnings(&self) -> bool {
        self.entries.iter().any(|d| d.severity == Severity::Warning)
    }

    pub fn find(&self, code: &str) -> Option<&Diagnostic> {
        self.entries.iter().find(|d| d.code == code)
    }
}
