//! A toolkit for deterministic context-free Lindenmayer systems (D0L).
//!
//! The crate covers the full working loop for studying these grammars:
//!
//! - [`grammar`] — grammar files, parallel derivation (`step`/`derive`),
//!   sequential leftover-style rewriting for the normal-grammar contrast,
//!   and derivation trees.
//! - [`mappings`] — the mirror (`M`) and negative (`N`) string mappings and
//!   their four-element composition group.
//! - [`classifier`] — symmetric / weak / strong asymmetric verdicts,
//!   exhaustivity, the minimal rule-format taxonomy, and detection of
//!   dynamical frustration for multi-symbol left-hand sides.
//! - [`analysis`] — growth profiles with exact integer counts, Fibonacci
//!   emergence checks, `00`/`111` legality scans, constituency queries,
//!   exact rational ratio comparison, self-referential decomposition,
//!   repetition statistics, and bounded closure probes.
//! - [`transforms`] — grammar expansions, rule pruning, reduction to a
//!   minimal grammar with replayable proofs, and derivation-tree surgery.
//! - [`automata`] — a small radius-1 binary rule-table cellular automaton,
//!   the neighborhood-conditioned contrast to context-free parallel
//!   rewriting.
//! - [`catalog`] — the named example grammars used throughout the test
//!   suite, in the same text format the parser accepts.
//! - [`golden`] — the reference check suite reproducing every derivation
//!   and classification the catalog grammars are expected to exhibit.
//!
//! All values are immutable after construction and every operation is a
//! pure function of its inputs, so everything here can be freely shared
//! across threads.
//!
//! ```
//! use lspace_core::analysis::growth_profile;
//! use lspace_core::classifier::{classify, Asymmetry, CountingMode};
//! use lspace_core::grammar::{derive, parse_grammar, Symbol};
//!
//! let fib = parse_grammar("axiom: 0\n0 -> 1\n1 -> 0 1\n")?;
//! let derivation = derive(&fib, 7)?;
//! assert_eq!(derivation.last().render(), "101011010110110101101");
//!
//! let report = classify(&fib, CountingMode::default());
//! assert_eq!(report.asymmetry, Asymmetry::Strong);
//!
//! let ones = growth_profile(&derivation).sequence(&Symbol::new("1")?, 1, 7);
//! assert_eq!(ones.last().map(u64::try_from), Some(Ok(13)));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod analysis;
pub mod automata;
pub mod catalog;
pub mod classifier;
pub mod golden;
pub mod grammar;
pub mod mappings;
pub mod transforms;

pub use grammar::{
    derive, derive_sequential, derive_tree, parse_grammar, parse_sequential_grammar, step,
    Alphabet, Derivation, DerivationTree, Diagnostic, Diagnostics, GrammarError, LGrammar,
    Production, SequentialDerivation, SequentialGrammar, Severity, Symbol, SymbolString,
};
pub use mappings::{apply_expr, compose, mirror, negative, Involution, MappingExpr};
