//! Maximal runs and the square arrays derived from them.
//!
//! Runs are found from Lyndon roots: for each of the two alphabet orders,
//! the longest Lyndon word starting at `i` ends just before the next suffix
//! that is smaller than suffix `i`. Every run has such a root under one of
//! the orders, and extending the candidate period with LCP/LCS queries
//! yields the run.

use crate::dsu::{stab, StabMode, WeightedInterval};
use crate::index::{suffix_array, TextIndex};

/// Maximal repetition `w[start..=end]` with smallest period `period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl Run {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Exponent as a float, for reporting.
    pub fn exponent(&self) -> f64 {
        self.len() as f64 / self.period as f64
    }
}

/// All maximal runs, sorted by `(start, end, period)`.
pub fn compute_runs(idx: &TextIndex) -> Vec<Run> {
    let n = idx.len();
    let sym = idx.text().symbols();
    let sigma = idx.text().sigma() as u32;
    let rank: Vec<u32> = (1..=n).map(|i| idx.rank(i) as u32).collect();
    let flipped: Vec<u32> = sym.iter().map(|&c| sigma - c).collect();
    let sa2 = suffix_array(&flipped, sigma as usize);
    let mut rank2 = vec![0u32; n];
    for (r, &p) in sa2.iter().enumerate() {
        rank2[p as usize] = r as u32;
    }

    let mut runs = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for ranks in [&rank, &rank2] {
        stack.clear();
        // Next smaller value to the right, scanning right to left.
        for i in (0..n).rev() {
            while let Some(&top) = stack.last() {
                if ranks[top] > ranks[i] {
                    stack.pop();
                } else {
                    break;
                }
            }
            let j = stack.last().copied().unwrap_or(n);
            stack.push(i);
            let (i1, p) = (i + 1, j - i);
            let right = idx.lcp(i1, i1 + p);
            let left = idx.lcs(i1 - 1, i1 + p - 1);
            let (s, e) = (i1 - left, i1 + p + right - 1);
            if e + 1 - s >= 2 * p {
                runs.push(Run { start: s, end: e, period: p });
            }
        }
    }
    runs.sort_unstable();
    runs.dedup();
    runs
}

/// Which extremal square a boundary array records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SquareMode {
    ShortestEnd,
    LongestEnd,
    ShortestStart,
    LongestStart,
}

fn intervals(runs: &[Run], all_multiples: bool, f: impl Fn(&Run, usize) -> (usize, usize)) -> Vec<WeightedInterval> {
    let mut out = Vec::new();
    for r in runs {
        let mut m = r.period;
        while 2 * m <= r.len() {
            let (a, b) = f(r, m);
            out.push(WeightedInterval { a, b, weight: m });
            if !all_multiples {
                break;
            }
            m += r.period;
        }
    }
    out
}

/// `SC[i]`: longest `|u|` such that `u` ends at `i - 1` and starts at `i`.
pub fn centered_squares(n: usize, runs: &[Run]) -> Vec<usize> {
    let iv = intervals(runs, true, |r, m| (r.start + m, r.end + 2 - m));
    stab(&iv, n, StabMode::Max).expect("run intervals are valid")
}

/// `LP[i]`: shortest arm of a square centered at `i` (arms `w[i-m..i-1]` and
/// `w[i..i+m-1]` fully inside the word), 0 if none.
pub fn local_periods(n: usize, runs: &[Run]) -> Vec<usize> {
    let iv = intervals(runs, false, |r, m| (r.start + m, r.end + 2 - m));
    stab(&iv, n, StabMode::Min).expect("run intervals are valid")
}

/// Arm of the shortest or longest square ending or starting at each
/// position, 0 if none.
pub fn boundary_squares(n: usize, runs: &[Run], mode: SquareMode) -> Vec<usize> {
    let (iv, m) = match mode {
        SquareMode::ShortestEnd => (intervals(runs, false, |r, m| (r.start + 2 * m - 1, r.end + 1)), StabMode::Min),
        SquareMode::LongestEnd => (intervals(runs, true, |r, m| (r.start + 2 * m - 1, r.end + 1)), StabMode::Max),
        SquareMode::ShortestStart => (intervals(runs, false, |r, m| (r.start, r.end + 2 - 2 * m)), StabMode::Min),
        SquareMode::LongestStart => (intervals(runs, true, |r, m| (r.start, r.end + 2 - 2 * m)), StabMode::Max),
    };
    stab(&iv, n, m).expect("run intervals are valid")
}
