//! Symbols, alphabets, and symbol strings.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// The reserved token spelling the empty string in rule bodies.
///
/// `~` is not a symbol: a rule body consisting of the single token `~`
/// declares an erasing production (empty right-hand side).
pub const NULL_TOKEN: &str = "~";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("symbol name must be non-empty")]
    Empty,
    #[error("symbol name `{0}` contains whitespace")]
    Whitespace(String),
    #[error("`{NULL_TOKEN}` is reserved for the empty string and is not a symbol")]
    ReservedNull,
}

/// An atom of the alphabet. Names may be several characters long
/// (`NP`, `Verb`) so normal-grammar examples need no tokenizer tricks.
///
/// Cloning is cheap: the name is shared.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Result<Symbol, SymbolError> {
        if name.is_empty() {
            return Err(SymbolError::Empty);
        }
        if name.chars().any(char::is_whitespace) {
            return Err(SymbolError::Whitespace(name.to_string()));
        }
        if name == NULL_TOKEN {
            return Err(SymbolError::ReservedNull);
        }
        Ok(Symbol(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// True when the printed name is a single character, which decides the
    /// compact versus space-joined rendering of strings.
    pub fn is_single_char(&self) -> bool {
        self.0.chars().count() == 1
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbol({})", self.0)
    }
}

impl std::str::FromStr for Symbol {
    type Err = SymbolError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Symbol::new(s)
    }
}

/// An ordered, duplicate-free collection of symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    index: HashMap<Symbol, usize>,
}

impl Alphabet {
    pub fn new() -> Alphabet {
        Alphabet {
            symbols: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Adds a symbol unless it is already present. Returns whether it was new.
    pub fn insert(&mut self, symbol: Symbol) -> bool {
        if self.index.contains_key(&symbol) {
            return false;
        }
        self.index.insert(symbol.clone(), self.symbols.len());
        self.symbols.push(symbol);
        true
    }

    pub fn contains(&self, symbol: &Symbol) -> bool {
        self.index.contains_key(symbol)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Symbol> {
        self.symbols.iter()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// True when the alphabet is exactly `{0, 1}` in either order.
    pub fn is_binary_01(&self) -> bool {
        self.symbols.len() == 2
            && self.symbols.iter().any(|s| s.as_str() == "0")
            && self.symbols.iter().any(|s| s.as_str() == "1")
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::new()
    }
}

impl FromIterator<Symbol> for Alphabet {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        let mut a = Alphabet::new();
        for s in iter {
            a.insert(s);
        }
        a
    }
}

/// A finite sequence of symbols, optionally tagged with the generation
/// number that produced it.
///
/// Equality and hashing ignore the tag: two strings are the same word
/// whether or not one of them remembers where it came from.
#[derive(Clone)]
pub struct SymbolString {
    symbols: Vec<Symbol>,
    generation: Option<usize>,
}

impl SymbolString {
    pub fn new(symbols: Vec<Symbol>) -> SymbolString {
        SymbolString {
            symbols,
            generation: None,
        }
    }

    pub fn empty() -> SymbolString {
        SymbolString::new(Vec::new())
    }

    /// Reads a string from user-facing text: whitespace-separated tokens if
    /// any whitespace is present, otherwise one symbol per character.
    pub fn from_text(text: &str) -> Result<SymbolString, SymbolError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(SymbolString::empty());
        }
        let symbols = if trimmed.chars().any(char::is_whitespace) {
            trimmed
                .split_whitespace()
                .map(Symbol::new)
                .collect::<Result<Vec<_>, _>>()?
        } else {
            trimmed
                .chars()
                .map(|c| Symbol::new(&c.to_string()))
                .collect::<Result<Vec<_>, _>>()?
        };
        Ok(SymbolString::new(symbols))
    }

    pub fn with_generation(mut self, generation: usize) -> SymbolString {
        self.generation = Some(generation);
        self
    }

    pub fn generation(&self) -> Option<usize> {
        self.generation
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Symbol> {
        self.symbols.iter()
    }

    pub fn concat(&self, other: &SymbolString) -> SymbolString {
        let mut symbols = self.symbols.clone();
        symbols.extend(other.symbols.iter().cloned());
        SymbolString::new(symbols)
    }

    pub fn slice(&self, start: usize, end: usize) -> SymbolString {
        SymbolString::new(self.symbols[start..end].to_vec())
    }

    /// True when every symbol is `0` or `1`.
    pub fn is_binary_01(&self) -> bool {
        self.symbols
            .iter()
            .all(|s| s.as_str() == "0" || s.as_str() == "1")
    }

    /// Renders compactly when all symbols are single characters, otherwise
    /// space-joined. This is the exchange format used on every text surface.
    pub fn render(&self) -> String {
        if self.symbols.iter().all(Symbol::is_single_char) {
            self.symbols.iter().map(Symbol::as_str).collect()
        } else {
            self.symbols
                .iter()
                .map(Symbol::as_str)
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

impl PartialEq for SymbolString {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for SymbolString {}

impl std::hash::Hash for SymbolString {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl fmt::Display for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.generation {
            Some(g) => write!(f, "SymbolString(g{}: {})", g, self.render()),
            None => write!(f, "SymbolString({})", self.render()),
        }
    }
}

impl From<Vec<Symbol>> for SymbolString {
    fn from(symbols: Vec<Symbol>) -> Self {
        SymbolString::new(symbols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_rejects_reserved_and_malformed_names() {
        assert_eq!(Symbol::new(""), Err(SymbolError::Empty));
        assert_eq!(Symbol::new("~"), Err(SymbolError::ReservedNull));
        assert!(matches!(
            Symbol::new("a b"),
            Err(SymbolError::Whitespace(_))
        ));
        assert!(Symbol::new("NP").is_ok());
        assert!(Symbol::new("0").is_ok());
    }

    #[test]
    fn from_text_splits_on_whitespace_or_chars() {
        let compact = SymbolString::from_text("0110").unwrap();
        assert_eq!(compact.len(), 4);
        assert_eq!(compact.render(), "0110");

        let spaced = SymbolString::from_text("NP VP").unwrap();
        assert_eq!(spaced.len(), 2);
        assert_eq!(spaced.render(), "NP VP");

        assert!(SymbolString::from_text("  ").unwrap().is_empty());
    }

    #[test]
    fn equality_ignores_generation_tag() {
        let a = SymbolString::from_text("01").unwrap();
        let b = SymbolString::from_text("01").unwrap().with_generation(2);
        assert_eq!(a, b);
    }

    #[test]
    fn alphabet_keeps_first_mention_order() {
        let mut alpha = Alphabet::new();
        for name in ["1", "0", "1", "e"] {
            alpha.insert(Symbol::new(name).unwrap());
        }
        let names: Vec<_> = alpha.iter().map(Symbol::as_str).collect();
        assert_eq!(names, vec!["1", "0", "e"]);
    }
}
