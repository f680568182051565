//! Gap length at least `g(i)`, a per-position lower bound.

use crate::dbf::sa_range;
use crate::dsu::{offline_wla, MinMaxUnionFind, WeightedTree};
use crate::error::{Error, Result};
use crate::index::{RangeMin, TextIndex};
use crate::GapArray;

/// Validates a gap function: `n` values in `[1, n]`.
pub fn check_gaps(n: usize, gaps: &[usize]) -> Result<()> {
    if gaps.len() != n {
        return Err(Error::Param(format!("gap function has {} values, text has {n}", gaps.len())));
    }
    if let Some((i, &g)) = gaps.iter().enumerate().find(|(_, &g)| g == 0 || g > n) {
        return Err(Error::Param(format!("g({}) = {g} outside [1, {n}]", i + 1)));
    }
    Ok(())
}

/// One pass over the merged list in rank order. Reversed prefixes are
/// pushed on a stack of increasing end positions kept as a tree; each
/// suffix asks for the deepest stack entry with end at most `i - 1 - g(i)`,
/// answered offline as a weighted level ancestor query.
fn one_side(idx: &TextIndex, gaps: &[usize], ascending: bool) -> Vec<Option<usize>> {
    let n = idx.len();
    let leaf = n + 1;
    let mut parent = vec![None; n + 2];
    let mut weight = vec![0u64; n + 2];
    parent[leaf] = Some(0);
    weight[leaf] = leaf as u64;
    let mut stack = vec![0, leaf];
    let mut out = vec![None; n];
    let mut queries = Vec::new();
    let mut asked = Vec::new();
    let mut visit = |r: usize| match idx.merged_entry(r) {
        Err(j) => {
            while *stack.last().unwrap() > j {
                stack.pop();
            }
            let top = *stack.last().unwrap();
            parent[j] = Some(top);
            weight[j] = (j - top) as u64;
            stack.push(j);
        }
        Ok(i) => {
            let v = *stack.last().unwrap();
            if let Some(c) = i.checked_sub(1 + gaps[i - 1]).filter(|&c| c >= 1) {
                if v <= c {
                    out[i - 1] = Some(v);
                } else {
                    queries.push((v, (v - c - 1) as u64));
                    asked.push(i);
                }
            }
        }
    };
    if ascending {
        (1..=2 * n).for_each(&mut visit);
    } else {
        (1..=2 * n).rev().for_each(&mut visit);
    }
    let tree = WeightedTree { parent, weight };
    let answers = offline_wla(&tree, &queries).expect("stack tree is a valid forest");
    for (i, a) in asked.into_iter().zip(answers) {
        out[i - 1] = a.filter(|&u| u != 0);
    }
    out
}

/// Longest `u` with `u^R v` a suffix of `w[1..i-1]`, `u` a prefix of
/// `w[i..n]` and `|v| >= g(i)`. The witness is the end of `u^R`.
pub fn lprf_positional(idx: &TextIndex, gaps: &[usize]) -> Result<GapArray> {
    let n = idx.len();
    check_gaps(n, gaps)?;
    let lo = one_side(idx, gaps, true);
    let hi = one_side(idx, gaps, false);
    let mut out = GapArray::zeros(n);
    for i in 1..=n {
        let best = [lo[i - 1], hi[i - 1]].into_iter().flatten().map(|j| (idx.rlcp(i, j), j)).max();
        if let Some((v, j)) = best.filter(|b| b.0 > 0) {
            out.values[i - 1] = v;
            out.witness[i - 1] = Some(j);
        }
    }
    Ok(out)
}

/// `L[i]`: the smallest `j < i` maximizing the LCP of suffixes `j` and `i`
/// (`None` for `i = 1`).
///
/// The best LCP is reached at the nearest earlier suffix on either side in
/// suffix-array order; all suffixes sharing that prefix form one row range,
/// whose minimum position is `L[i]`.
pub fn prev_factor_links(idx: &TextIndex) -> Vec<Option<usize>> {
    let n = idx.len();
    let sa: Vec<u32> = idx.sa().to_vec();
    let mut prev = vec![None; n];
    let mut next = vec![None; n];
    let mut stack: Vec<usize> = Vec::new();
    for row in 0..n {
        while stack.last().is_some_and(|&t| sa[t] > sa[row]) {
            next[stack.pop().unwrap()] = Some(sa[row] as usize);
        }
        prev[row] = stack.last().map(|&t| sa[t] as usize);
        stack.push(row);
    }
    let min_pos = RangeMin::new(sa.clone());
    let mut links = vec![None; n];
    for row in 0..n {
        let i = sa[row] as usize;
        if i == 1 {
            continue;
        }
        let v = [prev[row], next[row]].into_iter().flatten().map(|j| idx.lcp(j, i)).max().unwrap_or(0);
        links[i - 1] = Some(if v == 0 {
            1
        } else {
            let (lo, hi) = sa_range(idx, i, v).expect("factor lies in the text");
            min_pos.min(lo - 1, hi - 1) as usize
        });
    }
    links
}

/// Longest `u` with `u v` a suffix of `w[1..i-1]`, `u` a prefix of
/// `w[i..n]` and `|v| >= g(i)`. The witness is the start of the left arm.
///
/// An optimal left arm starts on the chain `L[i], L[L[i]], ...`. Walking the
/// chain, the LCPs `c_k = lcp(L[k], k)` only shrink, so the walk stops at
/// the first `k` whose parent arm `L[k] .. L[k] + c_k - 1` ends before the
/// cutoff `i - g(i)`; the answer is that full parent arm or `k` itself cut
/// at the cutoff. Sweeping cutoffs downward, chain edges are merged in a
/// union-find and the stopping node is the minimum of the set of `i`.
pub fn lpf_positional(idx: &TextIndex, gaps: &[usize]) -> Result<GapArray> {
    let n = idx.len();
    check_gaps(n, gaps)?;
    let links = prev_factor_links(idx);
    let arm = |k: usize| links[k - 1].map_or(0, |l| idx.lcp(l, k));
    let mut by_end: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for k in 2..=n {
        let l = links[k - 1].unwrap();
        by_end[l + arm(k) - 1].push(k);
    }
    let mut by_cut: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for i in 1..=n {
        if gaps[i - 1] < i {
            by_cut[i - gaps[i - 1]].push(i);
        }
    }
    let mut uf = MinMaxUnionFind::new(n + 1);
    let mut out = GapArray::zeros(n);
    for p in (1..=n).rev() {
        for &k in &by_end[p] {
            uf.merge(k, links[k - 1].unwrap());
        }
        for &i in &by_cut[p] {
            let k = uf.find_min(i);
            let mut best = (0, None);
            if let Some(l) = links[k - 1] {
                best = (arm(k), Some(l));
            }
            if k != i && k < p && p - k > best.0 {
                best = (p - k, Some(k));
            }
            if best.0 > 0 {
                out.values[i - 1] = best.0;
                out.witness[i - 1] = best.1;
            }
        }
    }
    Ok(out)
}
