//! The mirror and negative string mappings and their composition group.
//!
//! Both mappings are involutions (`M(M(s)) = s`, `N(N(s)) = s`) and they
//! commute, so compositions form the Klein four-group `{ID, M, N, MN}`.
//! Copying a string needs no primitive of its own: it is `M(M(s))` or
//! `N(N(s))`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::grammar::{Symbol, SymbolString};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MappingError {
    #[error("involution does not map symbol `{symbol}`")]
    PartialInvolution { symbol: String },
    #[error("`{pair_a}` and `{pair_b}` conflict: an involution must be self-inverse")]
    NotSelfInverse { pair_a: String, pair_b: String },
    #[error("`{0}` is not a mapping expression (expected ID, M, N or MN)")]
    UnknownExpr(String),
}

/// A self-inverse symbol exchange. The binary default swaps `0` and `1`;
/// other alphabets must state their pairing explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    map: BTreeMap<Symbol, Symbol>,
}

impl Involution {
    /// The 0 <-> 1 swap.
    pub fn binary() -> Involution {
        let zero = Symbol::new("0").expect("static name");
        let one = Symbol::new("1").expect("static name");
        let mut map = BTreeMap::new();
        map.insert(zero.clone(), one.clone());
        map.insert(one, zero);
        Involution { map }
    }

    /// Builds from pairs `a <-> b`; fixed points are written `c <-> c`.
    /// Conflicting pairs are rejected.
    pub fn from_pairs(pairs: &[(Symbol, Symbol)]) -> Result<Involution, MappingError> {
        let mut map: BTreeMap<Symbol, Symbol> = BTreeMap::new();
        let mut put = |from: &Symbol, to: &Symbol| -> Result<(), MappingError> {
            match map.get(from) {
                Some(existing) if existing != to => Err(MappingError::NotSelfInverse {
                    pair_a: format!("{from}={existing}"),
                    pair_b: format!("{from}={to}"),
                }),
                Some(_) => Ok(()),
                None => {
                    map.insert(from.clone(), to.clone());
                    Ok(())
                }
            }
        };
        for (a, b) in pairs {
            put(a, b)?;
            put(b, a)?;
        }
        Ok(Involution { map })
    }

    pub fn image(&self, symbol: &Symbol) -> Option<&Symbol> {
        self.map.get(symbol)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Symbol, &Symbol)> {
        self.map.iter()
    }
}

/// A canonical element of the four-element mapping group. Compositions
/// normalize here, so equality is structural.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MappingExpr {
    Id,
    M,
    N,
    Mn,
}

impl MappingExpr {
    pub const ALL: [MappingExpr; 4] = [
        MappingExpr::Id,
        MappingExpr::M,
        MappingExpr::N,
        MappingExpr::Mn,
    ];

    pub fn parse(text: &str) -> Result<MappingExpr, MappingError> {
        match text.to_ascii_uppercase().as_str() {
            "ID" => Ok(MappingExpr::Id),
            "M" => Ok(MappingExpr::M),
            "N" => Ok(MappingExpr::N),
            "MN" | "NM" => Ok(MappingExpr::Mn),
            other => Err(MappingError::UnknownExpr(other.to_string())),
        }
    }

    /// Whether applying this expression needs the involution at all.
    pub fn uses_negative(self) -> bool {
        matches!(self, MappingExpr::N | MappingExpr::Mn)
    }
}

impl fmt::Display for MappingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MappingExpr::Id => "ID",
            MappingExpr::M => "M",
            MappingExpr::N => "N",
            MappingExpr::Mn => "MN",
        };
        f.write_str(name)
    }
}

/// Group product. `M` and `N` are self-inverse and commute, which pins the
/// whole table.
pub fn compose(a: MappingExpr, b: MappingExpr) -> MappingExpr {
    use MappingExpr::*;
    match (a, b) {
        (Id, x) | (x, Id) => x,
        (M, M) | (N, N) | (Mn, Mn) => Id,
        (M, N) | (N, M) => Mn,
        (M, Mn) | (Mn, M) => N,
        (N, Mn) | (Mn, N) => M,
    }
}

/// String reversal.
pub fn mirror(s: &SymbolString) -> SymbolString {
    let mut symbols: Vec<Symbol> = s.symbols().to_vec();
    symbols.reverse();
    SymbolString::new(symbols)
}

/// Pointwise image under the involution.
pub fn negative(s: &SymbolString, inv: &Involution) -> Result<SymbolString, MappingError> {
    let symbols = s
        .iter()
        .map(|sym| {
            inv.image(sym)
                .cloned()
                .ok_or_else(|| MappingError::PartialInvolution {
                    symbol: sym.as_str().to_string(),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SymbolString::new(symbols))
}

/// Applies a canonical mapping expression. The factors commute, so the
/// application order does not matter.
pub fn apply_expr(
    expr: MappingExpr,
    s: &SymbolString,
    inv: &Involution,
) -> Result<SymbolString, MappingError> {
    match expr {
        MappingExpr::Id => Ok(SymbolString::new(s.symbols().to_vec())),
        MappingExpr::M => Ok(mirror(s)),
        MappingExpr::N => negative(s, inv),
        MappingExpr::Mn => Ok(mirror(&negative(s, inv)?)),
    }
}
