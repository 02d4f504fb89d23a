//! A radius-1 binary rule-table cellular automaton.
//!
//! The update is neighborhood-conditioned: each cell's next state depends
//! on its left neighbor, itself, and its right neighbor — the contrast to
//! context-free parallel rewriting, where a symbol's image never looks
//! sideways. Length is preserved, where an L-step generally changes it.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutomatonError {
    #[error("rule table needs exactly 8 bits, got {0}")]
    BadTableLength(usize),
    #[error("`{0}` is not a bit")]
    BadBit(char),
    #[error("a state must hold at least one cell")]
    EmptyState,
}

/// Output bits for the eight neighborhoods, indexed `000` through `111`
/// (left, center, right read as a 3-bit number).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleTable {
    bits: [bool; 8],
}

impl RuleTable {
    pub fn new(bits: [bool; 8]) -> RuleTable {
        RuleTable { bits }
    }

    /// Parses `"00010111"`-style tables, first bit for neighborhood 000.
    pub fn from_bits_str(text: &str) -> Result<RuleTable, AutomatonError> {
        let parsed: Vec<bool> = text
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(AutomatonError::BadBit(other)),
            })
            .collect::<Result<_, _>>()?;
        let bits: [bool; 8] = parsed
            .try_into()
            .map_err(|v: Vec<bool>| AutomatonError::BadTableLength(v.len()))?;
        Ok(RuleTable { bits })
    }

    /// The majority-vote table: the new state is 1 exactly when at least
    /// two of the three cells are 1.
    pub fn majority() -> RuleTable {
        let mut bits = [false; 8];
        for (i, bit) in bits.iter_mut().enumerate() {
            *bit = i.count_ones() >= 2;
        }
        RuleTable { bits }
    }

    pub fn output(&self, left: bool, center: bool, right: bool) -> bool {
        let index = ((left as usize) << 2) | ((center as usize) << 1) | (right as usize);
        self.bits[index]
    }

    pub fn bits(&self) -> &[bool; 8] {
        &self.bits
    }
}

impl fmt::Display for RuleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b as u8)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// The row wraps around.
    Periodic,
    /// Cells beyond the edges read as 0.
    FixedZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CAState {
    cells: Vec<bool>,
    boundary: Boundary,
}

impl CAState {
    pub fn new(cells: Vec<bool>, boundary: Boundary) -> Result<CAState, AutomatonError> {
        if cells.is_empty() {
            return Err(AutomatonError::EmptyState);
        }
        Ok(CAState { cells, boundary })
    }

    pub fn from_bits_str(text: &str, boundary: Boundary) -> Result<CAState, AutomatonError> {
        let cells = text
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(AutomatonError::BadBit(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        CAState::new(cells, boundary)
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn read(&self, index: isize) -> bool {
        let n = self.cells.len() as isize;
        match self.boundary {
            Boundary::Periodic => self.cells[(index.rem_euclid(n)) as usize],
            Boundary::FixedZero => {
                if index < 0 || index >= n {
                    false
                } else {
                    self.cells[index as usize]
                }
            }
        }
    }
}

impl fmt::Display for CAState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.cells {
            write!(f, "{}", c as u8)?;
        }
        Ok(())
    }
}

/// Updates every cell simultaneously from its three-cell neighborhood.
/// The result length always equals the input length.
pub fn ca_step(table: &RuleTable, state: &CAState) -> CAState {
    let cells = (0..state.cells.len() as isize)
        .map(|i| table.output(state.read(i - 1), state.read(i), state.read(i + 1)))
        .collect();
    CAState {
        cells,
        boundary: state.boundary,
    }
}

/// Convenience: `steps` applications of [`ca_step`], returning every row.
pub fn ca_run(table: &RuleTable, state: &CAState, steps: usize) -> Vec<CAState> {
    let mut rows = Vec::with_capacity(steps + 1);
    rows.push(state.clone());
    for _ in 0..steps {
        let next = ca_step(table, rows.last().expect("non-empty"));
        rows.push(next);
    }
    rows
}
