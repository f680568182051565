//! Words over an integer alphabet and the structures built from them.

use crate::error::{Error, Result};

/// An immutable word whose symbols are remapped into `1..=sigma`.
///
/// Positions in the public API are 1-indexed; [`Text::at`] follows that
/// convention while [`Text::symbols`] exposes the raw 0-indexed slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    symbols: Vec<u32>,
    alphabet: Vec<u32>,
}

impl Text {
    /// Builds a text from raw bytes.
    pub fn from_bytes(raw: &[u8]) -> Result<Text> {
        let ints: Vec<u32> = raw.iter().map(|&b| b as u32).collect();
        Text::from_symbols(&ints)
    }

    /// Builds a text from arbitrary integers. Symbols are ranked in sorted
    /// order, so the remap preserves the original symbol order.
    pub fn from_symbols(raw: &[u32]) -> Result<Text> {
        if raw.is_empty() {
            return Err(Error::Input("empty input".into()));
        }
        let mut alphabet = raw.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        let symbols = raw.iter().map(|s| alphabet.binary_search(s).unwrap() as u32 + 1).collect();
        Ok(Text { symbols, alphabet })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at 1-indexed position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> u32 {
        self.symbols[i - 1]
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    /// Sorted original symbols; symbol `s` stands for `alphabet()[s - 1]`.
    pub fn alphabet(&self) -> &[u32] {
        &self.alphabet
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.len()
    }

    /// Original value of the symbol at 1-indexed position `i`.
    pub fn original(&self, i: usize) -> u32 {
        self.alphabet[self.symbols[i - 1] as usize - 1]
    }
}

/// Build a [`Text`] from raw bytes.
pub fn build_text(raw: &[u8]) -> Result<Text> {
    Text::from_bytes(raw)
}

/// Kind of gapped structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Repeat,
    Palindrome,
}

/// A gapped repeat `u v u` or gapped palindrome `u^R v u`.
///
/// `left_start` is the first position of the left arm; the right arm starts
/// at `left_start + arm_len + gap_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct GappedStructure {
    pub kind: Kind,
    pub left_start: usize,
    pub arm_len: usize,
    pub gap_len: usize,
}

impl GappedStructure {
    pub fn right_start(&self) -> usize {
        self.left_start + self.arm_len + self.gap_len
    }

    /// Checks the arms by direct comparison.
    pub fn validate(&self, t: &Text) -> bool {
        let l = self.arm_len;
        if l == 0 || self.left_start == 0 {
            return false;
        }
        let r = self.right_start();
        if r + l - 1 > t.len() {
            return false;
        }
        (0..l).all(|x| match self.kind {
            Kind::Repeat => t.at(self.left_start + x) == t.at(r + x),
            Kind::Palindrome => t.at(self.left_start + l - 1 - x) == t.at(r + x),
        })
    }
}
