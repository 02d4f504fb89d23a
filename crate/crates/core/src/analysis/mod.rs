//! Quantitative and combinatorial analysis of derivations.
//!
//! Everything here is exact: counts are arbitrary-precision integers,
//! ratios and repetition exponents are rationals. No result depends on a
//! floating-point tolerance.

mod closure;
mod constituent;
mod decompose;
mod fibonacci;
mod growth;
mod legality;
mod ratio;
mod repetition;

pub use closure::{closure_probe, ClosureOp, ClosureProbe};
pub use constituent::{fib_generation, is_fib_constituent, ConstituentMatch};
pub use decompose::{
    decompose_self_referential, replay_decomposition, Decomposition, DecompositionKind,
};
pub use fibonacci::{
    is_fibonacci_number, matches_fibonacci, matches_fibonacci_u64, FibonacciEvidence,
    FibonacciMatch,
};
pub use growth::{count_profile, growth_profile, GrowthProfile, SymbolCounts};
pub use legality::{fib_legal, fib_legal_generation, LegalityReport, NgramViolation};
pub use ratio::{ratio_profile, ratio_profiles_equal, ExactRatio, RatioComparison, RatioProfile};
pub use repetition::{repetition_stats, RepetitionStats, RepetitionWitness};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("sequence too short: need at least {need} entries, got {got}")]
    TooShort { need: usize, got: usize },
    #[error("string is not over the binary alphabet 0/1 (found `{symbol}`)")]
    NotBinary { symbol: String },
    #[error("input must not be empty")]
    EmptyInput,
    #[error("generation index {index} out of range (need {min} ..= {max})")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },
    #[error("max_period {max_period} exceeds the string length {len}")]
    PeriodTooLarge { max_period: usize, len: usize },
    #[error("symbol `{symbol}` is not in the grammar's alphabet")]
    UnknownSymbol { symbol: String },
}
