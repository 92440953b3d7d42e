//! Interned symbol tables and the finite sequences built over them.
//!
//! Events (plant alphabet) and output symbols (observation alphabet) are both
//! small integer handles into a [`SymbolTable`]. Sequences order
//! length-lexicographically so that sets of words print in a stable,
//! breadth-first order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A plant event, indexing into an [`Alphabet`](crate::automata::Alphabet).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event(pub(crate) usize);

/// An observation symbol, indexing into the output alphabet of an
/// [`ObservationMap`](crate::observation::ObservationMap).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OutputSymbol(pub(crate) usize);

impl Event {
    pub fn index(self) -> usize {
        self.0
    }
}

impl OutputSymbol {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Ordered, duplicate-free list of symbol names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolTable {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl SymbolTable {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut table = SymbolTable::default();
        for name in names {
            let name = name.into();
            if name.is_empty() {
                return Err(Error::InvalidModel("symbol names must be nonempty".into()));
            }
            if table.lookup.contains_key(&name) {
                return Err(Error::InvalidModel(format!("duplicate symbol `{name}`")));
            }
            table.lookup.insert(name.clone(), table.names.len());
            table.names.push(name);
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    /// Splits `text` into symbol indices. Whitespace- or comma-separated input
    /// is split on the separators; otherwise the text is tokenized by longest
    /// match, so `"t1t2"` works when `t1` and `t2` are symbols.
    pub fn tokenize(&self, text: &str) -> Option<Vec<usize>> {
        let text = text.trim();
        if text.contains(|c: char| c.is_whitespace() || c == ',') {
            return text
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| self.position(t))
                .collect();
        }
        let mut out = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let (len, idx) = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .map(|(i, n)| (n.len(), i))
                .max()?;
            out.push(idx);
            rest = &rest[len..];
        }
        Some(out)
    }

    /// Renders indices back to text: concatenated when every name is a single
    /// character, space-separated otherwise.
    pub fn render(&self, indices: impl IntoIterator<Item = usize>) -> String {
        let compact = self.names.iter().all(|n| n.chars().count() == 1);
        let parts: Vec<&str> = indices.into_iter().map(|i| self.name(i)).collect();
        if parts.is_empty() {
            "ε".to_string()
        } else if compact {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }
}

/// A finite sequence of symbols, ordered length-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Seq<S>(Vec<S>);

/// A word over the plant alphabet.
pub type Word = Seq<Event>;

/// A word over the output alphabet.
pub type OutputWord = Seq<OutputSymbol>;

impl<S: Copy> Seq<S> {
    pub fn empty() -> Self {
        Seq(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[S] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = S> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, s: S) {
        self.0.push(s);
    }

    /// `self · s` as a new sequence.
    pub fn with(&self, s: S) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(s);
        Seq(v)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Seq(v)
    }

    pub fn prefix(&self, len: usize) -> Self {
        Seq(self.0[..len].to_vec())
    }

    pub fn suffix(&self, from: usize) -> Self {
        Seq(self.0[from..].to_vec())
    }

    /// All prefixes, shortest first, including ε and the word itself.
    pub fn prefixes(&self) -> impl Iterator<Item = Self> + '_ {
        (0..=self.0.len()).map(move |n| self.prefix(n))
    }
}

impl<S> From<Vec<S>> for Seq<S> {
    fn from(v: Vec<S>) -> Self {
        Seq(v)
    }
}

impl<S> FromIterator<S> for Seq<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Seq(iter.into_iter().collect())
    }
}

impl<S: Ord> Ord for Seq<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<S: Ord> PartialOrd for Seq<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: fmt::Debug> fmt::Debug for Seq<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_match_tokenization() {
        let t = SymbolTable::new(["t1", "t12", "t2"]).unwrap();
        assert_eq!(t.tokenize("t12t1"), Some(vec![1, 0]));
        assert_eq!(t.tokenize("t1 t2"), Some(vec![0, 2]));
        assert_eq!(t.tokenize(""), Some(vec![]));
        assert_eq!(t.tokenize("t3"), None);
    }

    #[test]
    fn rejects_duplicates_and_empty_names() {
        assert!(SymbolTable::new(["a", "a"]).is_err());
        assert!(SymbolTable::new([""]).is_err());
    }

    #[test]
    fn length_lexicographic_order() {
        let a: Seq<u8> = vec![2].into();
        let b: Seq<u8> = vec![0, 0].into();
        let c: Seq<u8> = vec![0, 1].into();
        assert!(a < b && b < c);
        assert!(Seq::<u8>::empty() < a);
    }
}
