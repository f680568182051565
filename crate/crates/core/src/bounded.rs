//! Gap length in `[g, G)`: longest previous reversed factor (palindromes)
//! and longest previous factor (repeats) for every position.

use crate::dbf::{BasicFactorDict, Occ};
use crate::dsu::{batch_interval_uf, BatchUFPlan, Partition, UfOp};
use crate::error::{Error, Result};
use crate::index::TextIndex;
use crate::text::{GappedStructure, Kind};
use crate::GapArray;

fn check(n: usize, g: usize, big_g: usize) -> Result<()> {
    if g >= big_g || big_g > n {
        return Err(Error::Param(format!("need 0 <= g < G <= n, got g={g}, G={big_g}, n={n}")));
    }
    Ok(())
}

/// Candidate keys for a sliding window of positions.
struct Keys<C, Q, P> {
    universe: usize,
    cand: C,
    query: Q,
    pos: P,
}

/// For each `i`, the best candidate `d` in the window `[i - G, i - lo - 1]`
/// by `score(d, i)`, where the score is an LCP in the key order: the best
/// candidates are the key-order neighbours of the query key.
///
/// The virtual positions `1 - G, 2 - G, ...` are cut into blocks of width
/// `G - lo`. The window of `i` is the suffix of the block holding `i - G`
/// (swept forward, deleting `i - G`) followed by the prefix of the next
/// block (swept backward, deleting `i - lo - 1`). Keys are shifted by one
/// so that the interval `[1, ..)` stands for "no candidate below".
fn window_best<C, Q, P>(
    n: usize,
    lo: usize,
    big_g: usize,
    keys: &Keys<C, Q, P>,
    score: impl Fn(usize, usize) -> usize,
) -> Vec<Option<(usize, usize)>>
where
    C: Fn(usize) -> usize,
    Q: Fn(usize) -> usize,
    P: Fn(usize) -> usize,
{
    let mut best = vec![None; n];
    if lo >= big_g || n <= lo + 1 {
        return best;
    }
    let delta = (big_g - lo) as isize;
    let (n_i, lo_i, g_i) = (n as isize, lo as isize, big_g as isize);
    let last_cand = n_i - lo_i - 1;
    let real = |a: isize, b: isize| a.max(1)..=b.min(n_i);
    let mut parts = Vec::new();
    // (query positions in op order) per partition.
    let mut order: Vec<Vec<usize>> = Vec::new();
    let mut start = 1 - g_i;
    while start <= last_cand {
        let end = start + delta - 1;
        // Forward part: i - G in this block.
        let qs = real(start + g_i, end + g_i);
        if !qs.is_empty() {
            let boundaries = real(start, end).map(|d| (keys.cand)(d as usize) + 1).collect();
            let mut ops = Vec::new();
            let mut qi = Vec::new();
            for i in qs {
                ops.push(UfOp::Find((keys.query)(i as usize) + 1));
                qi.push(i as usize);
                let d = i - g_i;
                if d >= 1 && i < end + g_i && i < n_i {
                    ops.push(UfOp::Union((keys.cand)(d as usize) + 1));
                }
            }
            parts.push(Partition { boundaries, ops });
            order.push(qi);
        }
        // Backward part: i - lo - 1 in this block.
        let qs = real(start + lo_i + 1, end + lo_i + 1);
        if !qs.is_empty() {
            let top = *qs.end();
            let boundaries = real(start, top - lo_i - 1).map(|d| (keys.cand)(d as usize) + 1).collect();
            let mut ops = Vec::new();
            let mut qi = Vec::new();
            for i in qs.rev() {
                ops.push(UfOp::Find((keys.query)(i as usize) + 1));
                qi.push(i as usize);
                let d = i - lo_i - 1;
                if d >= 1 && d > start {
                    ops.push(UfOp::Union((keys.cand)(d as usize) + 1));
                }
            }
            parts.push(Partition { boundaries, ops });
            order.push(qi);
        }
        start += delta;
    }
    let plan = BatchUFPlan { universe: keys.universe + 2, partitions: parts };
    let answers = batch_interval_uf(&plan).expect("window plans are well formed");
    let top = keys.universe + 2;
    for (qi, ans) in order.iter().zip(&answers) {
        for (&i, &(a, b)) in qi.iter().zip(ans) {
            let mut local: Option<(usize, usize)> = None;
            for k in [(a > 1).then(|| a - 1), (b < top).then(|| b - 1)].into_iter().flatten() {
                let d = (keys.pos)(k);
                let s = score(d, i);
                if local.is_none_or(|(ld, ls)| s > ls || (s == ls && d > ld)) {
                    local = Some((d, s));
                }
            }
            // Candidates of the backward part lie right of the forward part.
            if let Some((d, s)) = local {
                let slot = &mut best[i - 1];
                if slot.is_none_or(|(bd, bs): (usize, usize)| s > bs || (s == bs && d > bd)) {
                    *slot = Some((d, s));
                }
            }
        }
    }
    best
}

/// Longest `u` with `u^R v` a suffix of `w[1..i-1]`, `u` a prefix of
/// `w[i..n]` and `g <= |v| < G`. The witness is the end of `u^R`.
pub fn lprf_bounded(idx: &TextIndex, g: usize, big_g: usize) -> Result<GapArray> {
    let n = idx.len();
    check(n, g, big_g)?;
    let keys = Keys {
        universe: 2 * n,
        cand: |j| idx.rev_prefix_rank(j),
        query: |i| idx.suffix_rank(i),
        pos: |r| idx.merged_entry(r).expect_err("candidate keys are reversed prefixes"),
    };
    let best = window_best(n, g, big_g, &keys, |j, i| idx.rlcp(i, j));
    let mut out = GapArray::zeros(n);
    for (x, b) in best.into_iter().enumerate() {
        if let Some((j, v)) = b.filter(|b| b.1 > 0) {
            out.values[x] = v;
            out.witness[x] = Some(j);
        }
    }
    Ok(out)
}

struct RepeatBest<'a> {
    idx: &'a TextIndex,
    g: usize,
    big_g: usize,
    out: GapArray,
}

impl RepeatBest<'_> {
    /// Offers the left-arm start `j` for position `i`, cutting the arm so
    /// the gap is at least `g`.
    #[inline]
    fn offer(&mut self, i: usize, j: usize) {
        if j == 0 || j + self.g >= i {
            return;
        }
        let arm = self.idx.lcp(j, i).min(i - j - self.g);
        if arm == 0 || i - j - arm >= self.big_g {
            return;
        }
        let (v, w) = (&mut self.out.values[i - 1], &mut self.out.witness[i - 1]);
        if arm > *v || (arm == *v && w.is_some_and(|x| j > x)) {
            *v = arm;
            *w = Some(j);
        }
    }

    /// Offers the best members of the progression `j0 + t p`, `t < count`.
    fn offer_run(&mut self, i: usize, j0: usize, p: usize, count: usize) {
        let idx = self.idx;
        let reach = j0 + p + idx.lcp(j0, j0 + p) - 1;
        let stretch = p + idx.lcp(i, i + p);
        let (i_, j0_, p_, g_) = (i as isize, j0 as isize, p as isize, self.big_g as isize);
        let t_min = (i_ - j0_ - stretch as isize - g_ + 1).max(0);
        let t_min = (t_min + p_ - 1) / p_;
        let mut ts = [0, count as isize - 1, t_min - 1, t_min, t_min + 1, -1];
        let eq = reach as isize - j0_ + 1 - stretch as isize;
        if eq >= 0 && eq % p_ == 0 {
            ts[5] = eq / p_;
        }
        for t in ts {
            if t >= 0 && t < count as isize {
                self.offer(i, j0 + t as usize * p);
            }
        }
    }

    fn scan(&mut self, d: &BasicFactorDict, i: usize, k: usize, a: isize, b: isize) {
        let n = self.idx.len() as isize;
        let (a, b) = (a.max(1), b.min(n));
        if a > b {
            return;
        }
        let idx = self.idx;
        d.for_each_occurrence(idx, i, k, a as usize, b as usize, |o| match o {
            Occ::Isolated(j) => self.offer(i, j),
            Occ::Run { first, period, count } => self.offer_run(i, first, period, count),
        });
    }
}

/// Longest `u` with `u v` a suffix of `w[1..i-1]`, `u` a prefix of
/// `w[i..n]` and `g <= |v| < G`. The witness is the start of the left arm.
///
/// Arms of length in `[2^k, 2^{k+1})` start with an occurrence of the basic
/// factor `w[i..i+2^k-1]`. For large `k` the window of such occurrences is
/// short enough to list them; for small `k` only its two ends are listed
/// and the middle is covered by a window sweep over suffix ranks.
pub fn lpf_bounded(idx: &TextIndex, d: &BasicFactorDict, g: usize, big_g: usize) -> Result<GapArray> {
    let n = idx.len();
    check(n, g, big_g)?;
    let delta = big_g - g;
    let k0 = delta.ilog2() as usize;
    let mut best = RepeatBest { idx, g, big_g, out: GapArray::zeros(n) };
    let keys = Keys { universe: n, cand: |j| idx.rank(j), query: |i| idx.rank(i), pos: |r| idx.sa()[r - 1] as usize };
    let (gi, bgi) = (g as isize, big_g as isize);
    for k in 0..d.levels() {
        let len = 1usize << k;
        let two = 2 * len as isize;
        if k < k0 {
            let lo = g + 2 * len;
            if lo < big_g {
                let mid = window_best(n, lo, big_g, &keys, |j, i| idx.lcp(j, i));
                for (x, m) in mid.into_iter().enumerate() {
                    if let Some((j, _)) = m {
                        best.offer(x + 1, j);
                    }
                }
            }
        }
        for i in 1..=n + 1 - len {
            let ii = i as isize;
            if ii - gi - 1 < len as isize {
                continue;
            }
            if k >= k0 {
                best.scan(d, i, k, ii - bgi - two, ii - gi - 1);
            } else {
                best.scan(d, i, k, ii - bgi - two, (ii - bgi + len as isize).min(ii - gi - 1));
                best.scan(d, i, k, ii - gi - two, ii - gi - 1);
            }
        }
    }
    Ok(best.out)
}

/// A longest structure over all positions under the bounds `[g, G)`.
pub fn longest_bounded(idx: &TextIndex, g: usize, big_g: usize, kind: Kind) -> Result<Option<GappedStructure>> {
    let arr = match kind {
        Kind::Palindrome => lprf_bounded(idx, g, big_g)?,
        Kind::Repeat => lpf_bounded(idx, &BasicFactorDict::new(idx), g, big_g)?,
    };
    let best = (1..=idx.len()).max_by_key(|&i| (arr.values[i - 1], std::cmp::Reverse(i)));
    Ok(best.and_then(|i| arr.structure_at(i, kind)))
}
