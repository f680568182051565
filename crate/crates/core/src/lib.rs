//! Longest gapped repeats and gapped palindromes.
//!
//! For every position `i` of a word `w` the library computes the longest
//! arm `u` of a structure `u v u` (repeat) or `u^R v u` (palindrome) whose
//! right arm starts at `i` and whose left part lies entirely before `i`,
//! under three gap regimes:
//!
//! * [`bounded`]: the gap length lies in `[g, G)`;
//! * [`positional`]: the gap length is at least `g(i)`;
//! * [`alpha`]: `|uv| <= alpha |u|`.
//!
//! Supporting structures (suffix arrays with constant-time LCP queries,
//! basic factors, runs, union-find variants) live in their own modules and
//! [`oracle`] holds slow reference implementations.

pub mod alpha;
pub mod bench;
pub mod bounded;
pub mod cli;
pub mod dbf;
pub mod dsu;
pub mod error;
pub mod index;
pub mod oracle;
pub mod periodicity;
pub mod positional;
pub mod text;

pub use alpha::Alpha;
pub use error::{Error, Result};
pub use index::{build_index, TextIndex};
pub use text::{build_text, GappedStructure, Kind, Text};

/// Per-position result: `values[i - 1]` is the arm length at position `i`,
/// `witness[i - 1]` the witness position (meaning depends on the problem)
/// or `None` when the value is 0.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GapArray {
    pub values: Vec<usize>,
    pub witness: Vec<Option<usize>>,
}

impl GapArray {
    pub(crate) fn zeros(n: usize) -> GapArray {
        GapArray { values: vec![0; n], witness: vec![None; n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// The structure witnessing `values[i - 1]`. Palindrome witnesses are
    /// the end of the left arm, repeat witnesses its start.
    pub fn structure_at(&self, i: usize, kind: Kind) -> Option<GappedStructure> {
        let arm = *self.values.get(i.checked_sub(1)?)?;
        let j = self.witness[i - 1]?;
        if arm == 0 {
            return None;
        }
        let left_start = match kind {
            Kind::Palindrome => (j + 1).checked_sub(arm)?,
            Kind::Repeat => j,
        };
        let gap_len = i.checked_sub(left_start + arm)?;
        Some(GappedStructure { kind, left_start, arm_len: arm, gap_len })
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[doc = include_str!("../../../README.md")]
#[cfg(doctest)]
pub struct ReadmeDoctests;
