//! Reference implementations by direct character comparison.
//!
//! Nothing here touches the index structures; these functions exist to be
//! compared against the fast paths and are at least quadratic.

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::periodicity::{Run, SquareMode};
use crate::text::{GappedStructure, Kind, Text};
use crate::GapArray;

fn fwd(t: &Text, j: usize, i: usize) -> usize {
    let n = t.len();
    let mut m = 0;
    while i + m <= n && j + m <= n && t.at(j + m) == t.at(i + m) {
        m += 1;
    }
    m
}

fn mirror(t: &Text, j: usize, i: usize) -> usize {
    let n = t.len();
    let mut m = 0;
    while m < j && i + m <= n && t.at(j - m) == t.at(i + m) {
        m += 1;
    }
    m
}

fn back(t: &Text, i: usize, j: usize) -> usize {
    let mut m = 0;
    while m < i && m < j && t.at(i - m) == t.at(j - m) {
        m += 1;
    }
    m
}

/// Longest common prefix of `w[i..n]` and `w[j..n]`.
pub fn lcp(t: &Text, i: usize, j: usize) -> usize {
    fwd(t, j, i)
}

/// Longest common suffix of `w[1..i]` and `w[1..j]`.
pub fn lcs(t: &Text, i: usize, j: usize) -> usize {
    back(t, i, j)
}

/// Longest `m` with `w[i..i+m-1]` equal to `(w[j-m+1..j])^R`.
pub fn lcp_rev(t: &Text, i: usize, j: usize) -> usize {
    mirror(t, j, i)
}

/// Keeps the larger value; ties go to the later candidate.
fn offer(out: &mut GapArray, i: usize, value: usize, witness: usize) {
    if value > 0 && value >= out.values[i - 1] {
        out.values[i - 1] = value;
        out.witness[i - 1] = Some(witness);
    }
}

/// Palindromes with gap in `[g, G)`; witness is the end of `u^R`.
pub fn lprf_bounded(t: &Text, g: usize, big_g: usize) -> GapArray {
    let n = t.len();
    let mut out = GapArray::zeros(n);
    for i in 1..=n {
        for j in i.saturating_sub(big_g).max(1)..i.saturating_sub(g) {
            offer(&mut out, i, mirror(t, j, i), j);
        }
    }
    out
}

/// Repeats with gap in `[g, G)`; witness is the left-arm start.
pub fn lpf_bounded(t: &Text, g: usize, big_g: usize) -> GapArray {
    let n = t.len();
    let mut out = GapArray::zeros(n);
    for i in 1..=n {
        for j in 1..i.saturating_sub(g) {
            let arm = fwd(t, j, i).min(i - j - g);
            if arm >= 1 && i - j - arm < big_g {
                offer(&mut out, i, arm, j);
            }
        }
    }
    out
}

/// Palindromes with gap at least `gaps[i - 1]`.
pub fn lprf_positional(t: &Text, gaps: &[usize]) -> GapArray {
    let n = t.len();
    let mut out = GapArray::zeros(n);
    for i in 1..=n {
        for j in 1..i.saturating_sub(gaps[i - 1]) {
            offer(&mut out, i, mirror(t, j, i), j);
        }
    }
    out
}

/// Repeats with gap at least `gaps[i - 1]`.
pub fn lpf_positional(t: &Text, gaps: &[usize]) -> GapArray {
    let n = t.len();
    let mut out = GapArray::zeros(n);
    for i in 1..=n {
        let g = gaps[i - 1];
        for j in 1..i.saturating_sub(g) {
            let arm = fwd(t, j, i).min(i - j - g);
            offer(&mut out, i, arm, j);
        }
    }
    out
}

/// α-gapped palindromes `|uv| <= α|u|`; witness is the end of `u^R`.
pub fn lpal_alpha(t: &Text, alpha: Alpha) -> GapArray {
    let n = t.len();
    let mut out = GapArray::zeros(n);
    for i in 1..=n {
        for j in 1..i {
            let arm = mirror(t, j, i);
            if arm > 0 && alpha.admits(arm + (i - 1 - j), arm) {
                offer(&mut out, i, arm, j);
            }
        }
    }
    out
}

/// α-gapped repeats; witness is the left-arm start.
pub fn lrep_alpha(t: &Text, alpha: Alpha) -> GapArray {
    let n = t.len();
    let mut out = GapArray::zeros(n);
    for i in 1..=n {
        for j in 1..i {
            let arm = fwd(t, j, i).min(i - j);
            if arm > 0 && alpha.admits(i - j, arm) {
                offer(&mut out, i, arm, j);
            }
        }
    }
    out
}

/// A longest α-gapped structure of the given kind.
pub fn longest_alpha(t: &Text, alpha: Alpha, kind: Kind) -> Option<GappedStructure> {
    let arr = match kind {
        Kind::Repeat => lrep_alpha(t, alpha),
        Kind::Palindrome => lpal_alpha(t, alpha),
    };
    let best = (1..=t.len()).max_by_key(|&i| (arr.values[i - 1], std::cmp::Reverse(i)))?;
    arr.structure_at(best, kind)
}

/// Maximal structures with non-empty gap satisfying `|uv| <= α|u|`.
pub fn maximal_alpha(t: &Text, alpha: Alpha, kind: Kind) -> Vec<GappedStructure> {
    let n = t.len();
    let mut out = Vec::new();
    for left in 1..=n {
        for arm in 1..=n {
            for gap in 1..=n {
                let s = GappedStructure { kind, left_start: left, arm_len: arm, gap_len: gap };
                let r = s.right_start();
                if r + arm - 1 > n {
                    break;
                }
                if !alpha.admits(arm + gap, arm) || !s.validate(t) {
                    continue;
                }
                let (outer, inner) = match kind {
                    Kind::Repeat => {
                        (left > 1 && t.at(left - 1) == t.at(r - 1), r + arm <= n && t.at(left + arm) == t.at(r + arm))
                    }
                    Kind::Palindrome => (
                        left > 1 && r + arm <= n && t.at(left - 1) == t.at(r + arm),
                        gap >= 2 && t.at(left + arm) == t.at(r - 1),
                    ),
                };
                if !outer && !inner {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Smallest period of `w[s..=e]`.
fn period(t: &Text, s: usize, e: usize) -> usize {
    (1..=e - s + 1).find(|&p| (s..=e - p).all(|x| t.at(x) == t.at(x + p)) || p == e - s + 1).unwrap()
}

/// Runs by checking every factor for periodicity and maximality.
pub fn runs(t: &Text) -> Vec<Run> {
    let n = t.len();
    let mut out = Vec::new();
    for s in 1..=n {
        for e in s + 1..=n {
            let p = period(t, s, e);
            if 2 * p > e - s + 1 {
                continue;
            }
            let left_max = s == 1 || t.at(s - 1) != t.at(s - 1 + p);
            let right_max = e == n || t.at(e + 1) != t.at(e + 1 - p);
            if left_max && right_max {
                out.push(Run { start: s, end: e, period: p });
            }
        }
    }
    out.sort_unstable();
    out
}

fn is_square(t: &Text, s: usize, m: usize) -> bool {
    (0..m).all(|x| t.at(s + x) == t.at(s + m + x))
}

/// Longest centered square arm at each position.
pub fn centered_squares(t: &Text) -> Vec<usize> {
    let n = t.len();
    (1..=n).map(|i| (1..i).rev().find(|&m| i + m - 1 <= n && is_square(t, i - m, m)).unwrap_or(0)).collect()
}

/// Shortest centered square arm at each position.
pub fn local_periods(t: &Text) -> Vec<usize> {
    let n = t.len();
    (1..=n).map(|i| (1..i).find(|&m| i + m - 1 <= n && is_square(t, i - m, m)).unwrap_or(0)).collect()
}

/// Extremal square ending or starting at each position.
pub fn boundary_squares(t: &Text, mode: SquareMode) -> Vec<usize> {
    let n = t.len();
    let fits = |i: usize, m: usize| match mode {
        SquareMode::ShortestEnd | SquareMode::LongestEnd => 2 * m <= i && is_square(t, i + 1 - 2 * m, m),
        SquareMode::ShortestStart | SquareMode::LongestStart => i + 2 * m - 1 <= n && is_square(t, i, m),
    };
    (1..=n)
        .map(|i| {
            let ms = 1..=n / 2;
            match mode {
                SquareMode::ShortestEnd | SquareMode::ShortestStart => ms.clone().find(|&m| fits(i, m)),
                _ => ms.rev().find(|&m| fits(i, m)),
            }
            .unwrap_or(0)
        })
        .collect()
}

/// `L[i]`: smallest `j < i` maximizing the LCP with suffix `i`.
pub fn prev_factor_links(t: &Text) -> Vec<Option<usize>> {
    let n = t.len();
    (1..=n)
        .map(|i| {
            let mut best: Option<(usize, usize)> = None;
            for j in 1..i {
                let m = fwd(t, j, i);
                if best.is_none_or(|(bm, _)| m > bm) {
                    best = Some((m, j));
                }
            }
            best.map(|(_, j)| j)
        })
        .collect()
}

/// Problems the oracle can recompute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemId {
    P1a,
    P1b,
    P2a,
    P2b,
    P3a,
    P3b,
    Runs,
    Sc,
    Lp,
    BoundarySquares,
    L,
}

impl std::str::FromStr for ProblemId {
    type Err = Error;
    fn from_str(s: &str) -> Result<ProblemId> {
        Ok(match s {
            "1a" => ProblemId::P1a,
            "1b" => ProblemId::P1b,
            "2a" => ProblemId::P2a,
            "2b" => ProblemId::P2b,
            "3a" => ProblemId::P3a,
            "3b" => ProblemId::P3b,
            "runs" => ProblemId::Runs,
            "sc" => ProblemId::Sc,
            "lp" => ProblemId::Lp,
            "boundary-squares" => ProblemId::BoundarySquares,
            "L" | "l" => ProblemId::L,
            _ => return Err(Error::Param(format!("unknown problem '{s}'"))),
        })
    }
}

/// Parameters of an oracle computation; unused fields are ignored.
#[derive(Debug, Clone, Default)]
pub struct OracleParams {
    pub g: Option<usize>,
    pub big_g: Option<usize>,
    pub gaps: Option<Vec<usize>>,
    pub alpha: Option<Alpha>,
    pub square_mode: Option<SquareMode>,
}

/// Output of [`oracle_compute`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutput {
    Array(GapArray),
    Values(Vec<usize>),
    Runs(Vec<Run>),
    Links(Vec<Option<usize>>),
}

/// Recomputes one problem from its definition.
pub fn oracle_compute(problem: ProblemId, t: &Text, params: &OracleParams) -> Result<OracleOutput> {
    let n = t.len();
    let need = |x: Option<usize>, name: &str| x.ok_or_else(|| Error::Param(format!("missing {name}")));
    let bounds = || -> Result<(usize, usize)> {
        let (g, big_g) = (need(params.g, "g")?, need(params.big_g, "G")?);
        if g >= big_g || big_g > n {
            return Err(Error::Param(format!("need 0 <= g < G <= n, got g={g} G={big_g}")));
        }
        Ok((g, big_g))
    };
    let gaps = || -> Result<&Vec<usize>> {
        let gaps = params.gaps.as_ref().ok_or_else(|| Error::Param("missing gap function".into()))?;
        if gaps.len() != n || gaps.iter().any(|&g| g == 0 || g > n) {
            return Err(Error::Param("gap function must have n values in [1, n]".into()));
        }
        Ok(gaps)
    };
    let alpha = || params.alpha.ok_or_else(|| Error::Param("missing alpha".into()));
    Ok(match problem {
        ProblemId::P1a => bounds().map(|(g, h)| OracleOutput::Array(lprf_bounded(t, g, h)))?,
        ProblemId::P1b => bounds().map(|(g, h)| OracleOutput::Array(lpf_bounded(t, g, h)))?,
        ProblemId::P2a => OracleOutput::Array(lprf_positional(t, gaps()?)),
        ProblemId::P2b => OracleOutput::Array(lpf_positional(t, gaps()?)),
        ProblemId::P3a => OracleOutput::Array(lpal_alpha(t, alpha()?)),
        ProblemId::P3b => OracleOutput::Array(lrep_alpha(t, alpha()?)),
        ProblemId::Runs => OracleOutput::Runs(runs(t)),
        ProblemId::Sc => OracleOutput::Values(centered_squares(t)),
        ProblemId::Lp => OracleOutput::Values(local_periods(t)),
        ProblemId::BoundarySquares => OracleOutput::Values(boundary_squares(
            t,
            params.square_mode.ok_or_else(|| Error::Param("missing square mode".into()))?,
        )),
        ProblemId::L => OracleOutput::Links(prev_factor_links(t)),
    })
}
