//! α-gapped repeats and palindromes: `|uv| <= α|u|`.

use std::cmp::Ordering;

use crate::dbf::{factor_labels, small_occurrences, BasicFactorDict, Occ, SmallWordBitsets};
use crate::dsu::{stab_with_source, StabMode, WeightedInterval};
use crate::error::{Error, Result};
use crate::periodicity::{centered_squares, compute_runs, Run};
use crate::{GapArray, GappedStructure, Kind, Text, TextIndex};

/// Rational `p / q >= 1`, compared exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alpha {
    p: u64,
    q: u64,
}

impl Alpha {
    pub fn new(p: u64, q: u64) -> Result<Alpha> {
        if q == 0 || p < q {
            return Err(Error::Param(format!("alpha {p}/{q} must be a rational >= 1")));
        }
        let g = gcd(p, q);
        Ok(Alpha { p: p / g, q: q / g })
    }

    pub fn integer(a: u64) -> Result<Alpha> {
        Alpha::new(a, 1)
    }

    pub fn numer(&self) -> u64 {
        self.p
    }

    pub fn denom(&self) -> u64 {
        self.q
    }

    /// Whether a structure with `|uv| = total` and `|u| = arm` is α-gapped.
    #[inline]
    pub fn admits(&self, total: usize, arm: usize) -> bool {
        self.q as u128 * total as u128 <= self.p as u128 * arm as u128
    }

    /// `floor(α x)`.
    #[inline]
    pub fn floor_mul(&self, x: usize) -> usize {
        (self.p as u128 * x as u128 / self.q as u128) as usize
    }

    /// Whether `α <= n`.
    pub fn at_most(&self, n: usize) -> bool {
        self.p as u128 <= self.q as u128 * n as u128
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl std::str::FromStr for Alpha {
    type Err = Error;
    fn from_str(s: &str) -> Result<Alpha> {
        let bad = || Error::Param(format!("cannot parse alpha '{s}'"));
        match s.split_once('/') {
            Some((p, q)) => Alpha::new(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
            None => Alpha::integer(s.trim().parse().map_err(|_| bad())?),
        }
    }
}

impl std::fmt::Display for Alpha {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// A maximal structure: its arms cannot both grow by one symbol. For
/// repeats `left_maximal` refers to growing leftwards and `right_maximal`
/// rightwards; for palindromes to the outer and the inner ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct MaximalStructure {
    pub structure: GappedStructure,
    pub left_maximal: bool,
    pub right_maximal: bool,
}

fn check_alpha(n: usize, alpha: Alpha) -> Result<()> {
    if !alpha.at_most(n.max(1)) {
        return Err(Error::Param(format!("alpha {alpha} exceeds n = {n}")));
    }
    Ok(())
}

fn maximal(kind: Kind, left_start: usize, arm_len: usize, gap_len: usize) -> MaximalStructure {
    MaximalStructure {
        structure: GappedStructure { kind, left_start, arm_len, gap_len },
        left_maximal: true,
        right_maximal: true,
    }
}

/// All maximal α-gapped structures of `kind` with a non-empty gap.
///
/// Repeats are swept by arm distance `d`: each maximal stretch of positions
/// `y` with `w[y] = w[y + d]` of length below `d` is one structure.
/// Palindromes are swept by `σ = a + b` over mirrored pairs `(a, b)`.
pub fn enumerate_maximal_alpha(idx: &TextIndex, alpha: Alpha, kind: Kind) -> Result<Vec<MaximalStructure>> {
    let n = idx.len();
    check_alpha(n, alpha)?;
    let t = idx.text();
    let mut out = Vec::new();
    match kind {
        Kind::Repeat => {
            for d in 1..n {
                let mut y = 1;
                while y + d <= n {
                    if t.at(y) != t.at(y + d) {
                        y += 1;
                        continue;
                    }
                    let len = idx.lcp(y, y + d);
                    if len < d && alpha.admits(d, len) {
                        out.push(maximal(kind, y, len, d - len));
                    }
                    y += len + 1;
                }
            }
        }
        Kind::Palindrome => {
            for sigma in 3..2 * n {
                let top = (sigma - 1) / 2;
                let mut a = sigma.saturating_sub(n).max(1);
                while a <= top {
                    if t.at(a) != t.at(sigma - a) {
                        a += 1;
                        continue;
                    }
                    let arm = idx.rlcp(a, sigma - a).min(top - a + 1);
                    let inner = a + arm - 1;
                    let gap = sigma - 2 * inner - 1;
                    if gap > 0 && alpha.admits(arm + gap, arm) {
                        out.push(maximal(kind, a, arm, gap));
                    }
                    a += arm + 1;
                }
            }
        }
    }
    Ok(out)
}

/// Maximal structures with an empty gap: the rightmost square of each
/// shift inside each run, and the longest even palindrome at each centre.
fn boundary_structures(idx: &TextIndex, kind: Kind, runs: &[Run]) -> Vec<(usize, usize, usize)> {
    let n = idx.len();
    let mut out = Vec::new();
    match kind {
        Kind::Repeat => {
            for r in runs {
                let mut d = r.period;
                while 2 * d <= r.len() {
                    out.push((r.end + 1 - 2 * d, d, 0));
                    d += r.period;
                }
            }
        }
        Kind::Palindrome => {
            for c in 2..=n {
                let arm = idx.rlcp(c, c - 1);
                if arm > 0 {
                    out.push((c - arm, arm, 0));
                }
            }
        }
    }
    out
}

/// `LPal_α` or `LRep_α` from the maximal structures `s` (as returned by
/// [`enumerate_maximal_alpha`]) and the runs of the text.
///
/// Each structure `(i, ℓ, δ)` with right arm start `j` covers the positions
/// `x ∈ [j, j + r]`, where `r` is the largest trim keeping the structure
/// α-gapped; the arm at `x` then ends at `j + ℓ - 1`. Repeats also take
/// the centred squares into account.
pub fn alpha_arrays(
    idx: &TextIndex,
    alpha: Alpha,
    kind: Kind,
    s: &[MaximalStructure],
    runs: &[Run],
) -> Result<GapArray> {
    let n = idx.len();
    check_alpha(n, alpha)?;
    let (p, q) = (alpha.numer() as u128, alpha.denom() as u128);
    let mut structs: Vec<(usize, usize, usize)> = Vec::with_capacity(s.len());
    for m in s {
        let g = m.structure;
        if g.kind != kind || g.gap_len == 0 || !alpha.admits(g.arm_len + g.gap_len, g.arm_len) {
            return Err(Error::Param(format!("structure {g:?} is not an admissible {kind:?}")));
        }
        if g.right_start() + g.arm_len - 1 > n {
            return Err(Error::Range(format!("structure {g:?} exceeds n = {n}")));
        }
        structs.push((g.left_start, g.arm_len, g.gap_len));
    }
    structs.extend(boundary_structures(idx, kind, runs));
    let mut intervals = Vec::with_capacity(structs.len());
    let mut source = Vec::with_capacity(structs.len());
    for &(i, l, gap) in &structs {
        let num = (p - q) * l as u128;
        let cut = q * gap as u128;
        if num < cut {
            continue;
        }
        let den = match kind {
            Kind::Palindrome => p + q,
            Kind::Repeat => p,
        };
        let r = ((num - cut) / den) as usize;
        let j = i + l + gap;
        intervals.push(WeightedInterval { a: j, b: j + r + 1, weight: j + l - 1 });
        source.push((i, l, gap));
    }
    let h = stab_with_source(&intervals, n, StabMode::Max)?;
    let mut out = GapArray::zeros(n);
    for x in 1..=n {
        if let Some((end, k)) = h[x - 1] {
            let (i, l, gap) = source[k];
            let s = x - (i + l + gap);
            out.values[x - 1] = end + 1 - x;
            out.witness[x - 1] = Some(match kind {
                Kind::Palindrome => i + l - 1 - s,
                Kind::Repeat => i + s,
            });
        }
    }
    if kind == Kind::Repeat {
        let sc = centered_squares(n, runs);
        for x in 1..=n {
            if sc[x - 1] > out.values[x - 1] {
                out.values[x - 1] = sc[x - 1];
                out.witness[x - 1] = Some(x - sc[x - 1]);
            }
        }
    }
    Ok(out)
}

/// `LPal_α`, computing the indices it needs.
pub fn lpal_alpha(idx: &TextIndex, alpha: Alpha) -> Result<GapArray> {
    let s = enumerate_maximal_alpha(idx, alpha, Kind::Palindrome)?;
    alpha_arrays(idx, alpha, Kind::Palindrome, &s, &compute_runs(idx))
}

/// `LRep_α`, computing the indices it needs.
pub fn lrep_alpha(idx: &TextIndex, alpha: Alpha) -> Result<GapArray> {
    let s = enumerate_maximal_alpha(idx, alpha, Kind::Repeat)?;
    alpha_arrays(idx, alpha, Kind::Repeat, &s, &compute_runs(idx))
}

#[derive(Default)]
struct Best(Option<GappedStructure>);

impl Best {
    fn arm(&self) -> usize {
        self.0.map_or(0, |s| s.arm_len)
    }

    fn offer(&mut self, s: Option<GappedStructure>) {
        if let Some(s) = s {
            if s.arm_len > self.arm() {
                self.0 = Some(s);
            }
        }
    }
}

/// Best repeat whose arms contain the aligned pair `(x, y)`, `x < y`.
fn repeat_through(idx: &TextIndex, alpha: Alpha, x: usize, y: usize) -> Option<GappedStructure> {
    let d = y - x;
    let back = idx.lcs(x - 1, y - 1);
    let len = back + idx.lcp(x, y);
    let arm = len.min(d);
    (arm > 0 && alpha.admits(d, arm)).then(|| GappedStructure {
        kind: Kind::Repeat,
        left_start: x - back + len - arm,
        arm_len: arm,
        gap_len: d - arm,
    })
}

/// Best palindrome whose arms contain the mirrored pair `(x, y)`, `x < y`.
fn palindrome_through(idx: &TextIndex, alpha: Alpha, x: usize, y: usize) -> Option<GappedStructure> {
    let sigma = x + y;
    let outer = idx.rlcp(y, x);
    if outer == 0 {
        return None;
    }
    let inner = (x + idx.rlcp(x, y) - 1).min((sigma - 1) / 2);
    let left = x + 1 - outer;
    let arm = inner + 1 - left;
    let gap = sigma - 2 * inner - 1;
    alpha.admits(arm + gap, arm).then_some(GappedStructure {
        kind: Kind::Palindrome,
        left_start: left,
        arm_len: arm,
        gap_len: gap,
    })
}

fn through(idx: &TextIndex, alpha: Alpha, kind: Kind, x: usize, y: usize) -> Option<GappedStructure> {
    match kind {
        Kind::Repeat => repeat_through(idx, alpha, x, y),
        Kind::Palindrome => palindrome_through(idx, alpha, x, y),
    }
}

fn naive_longest(idx: &TextIndex, alpha: Alpha, kind: Kind) -> Option<GappedStructure> {
    let n = idx.len();
    let mut best = Best::default();
    for y in 2..=n {
        for x in 1..y {
            best.offer(through(idx, alpha, kind, x, y));
        }
    }
    best.0
}

/// The word of length-`b` blocks `w[(m-1)b+1 .. mb]`, with its own index.
struct BlockWord {
    b: usize,
    idx: TextIndex,
    dbf: BasicFactorDict,
}

impl BlockWord {
    fn new(idx: &TextIndex, b: usize) -> BlockWord {
        let labels = factor_labels(idx, b);
        let m = idx.len() / b;
        let symbols: Vec<u32> = (0..m).map(|t| labels[t * b]).collect();
        let text = Text::from_symbols(&symbols).expect("block word is non-empty");
        let idx = TextIndex::new(&text);
        let dbf = BasicFactorDict::new(&idx);
        BlockWord { b, idx, dbf }
    }

    fn covered(&self) -> usize {
        self.b * self.idx.len()
    }

    /// A block `m` at which the factor of length `len` (a multiple of `b`)
    /// starting at `z` occurs, reversed for palindromes.
    fn locate(&self, idx: &TextIndex, kind: Kind, z: usize, len: usize) -> Option<usize> {
        let end = self.covered();
        let cmp = |m: usize| -> Ordering {
            let p = (m - 1) * self.b + 1;
            let room = end + 1 - p;
            let l = match kind {
                Kind::Repeat => idx.lcp(z, p),
                Kind::Palindrome => idx.rlcp(p, z + len - 1),
            };
            let l = l.min(room).min(len);
            if l == len {
                return Ordering::Equal;
            }
            if l == room {
                return Ordering::Greater;
            }
            let ours = match kind {
                Kind::Repeat => idx.text().at(z + l),
                Kind::Palindrome => idx.text().at(z + len - 1 - l),
            };
            ours.cmp(&idx.text().at(p + l))
        };
        let sa = self.idx.sa();
        let row = sa.partition_point(|&m| cmp(m as usize) == Ordering::Greater);
        let m = *sa.get(row)? as usize;
        (cmp(m) == Ordering::Equal).then_some(m)
    }
}

/// Arms in `[2K, 4K)` for `K = 2^k b`.
fn large_class(idx: &TextIndex, bw: &BlockWord, alpha: Alpha, kind: Kind, k: u32, best: &mut Best) {
    let n = idx.len();
    let b = bw.b;
    let big_k = b << k;
    let half = big_k / 2;
    let level = (k - 1) as usize;
    let span = alpha.floor_mul(4 * big_k) + big_k + b;
    let mut z = 1;
    while z + big_k - 1 <= n {
        for o in 0..b {
            let Some(m) = bw.locate(idx, kind, z + o, half) else {
                continue;
            };
            let lo = (z + o).saturating_sub(span).max(1);
            let Some(hi) = (z + o).checked_sub(half) else {
                continue;
            };
            if hi < lo {
                continue;
            }
            let (blo, bhi) = ((lo - 1).div_ceil(b) + 1, (hi - 1) / b + 1);
            let bhi = (bhi + (half / b) - 1).min(bw.idx.len());
            if blo > bhi {
                continue;
            }
            bw.dbf.for_each_occurrence(&bw.idx, m, level, blo, bhi, |occ| {
                let (first, period, count) = match occ {
                    Occ::Isolated(p) => (p, 1, 1),
                    Occ::Run { first, period, count } => (first, period, count),
                };
                for c in 0..count {
                    let x = (first + c * period - 1) * b + 1;
                    let y = match kind {
                        Kind::Repeat => z + o,
                        Kind::Palindrome => z + o + half - 1,
                    };
                    if x < y {
                        best.offer(through(idx, alpha, kind, x, y));
                    }
                }
            });
        }
        z += big_k;
    }
}

/// Labels of length-`len` factors over the merged list of suffixes and
/// reversed prefixes, so forward and reversed factors compare directly.
fn merged_labels(idx: &TextIndex, len: usize) -> Vec<u32> {
    let n = idx.len();
    let mut lab = vec![0u32; 2 * n + 1];
    let mut cur = 0u32;
    let mut prev_ok = false;
    for (r, slot) in lab.iter_mut().enumerate().skip(1) {
        let avail = match idx.merged_entry(r) {
            Ok(i) => n + 1 - i,
            Err(j) => j,
        };
        let ok = avail >= len;
        if !(ok && prev_ok && idx.merged_lcp(r - 1, r) >= len) {
            cur += 1;
        }
        *slot = cur;
        prev_ok = ok;
    }
    lab
}

/// Arms in `[2h, 4h)` for a power of two `h <= 64`, each window handled
/// with bit-sets over the length-`h` labels.
fn small_class(idx: &TextIndex, alpha: Alpha, kind: Kind, h: usize, best: &mut Best) -> Result<()> {
    let n = idx.len();
    let k = h.trailing_zeros() as usize;
    let lab = merged_labels(idx, h);
    let reach = alpha.floor_mul(4 * h) + 2 * h;
    let beta = reach.div_ceil(h);
    let width = beta * h;
    let mut levels = vec![Vec::new(); k + 1];
    let mut q = 1;
    while q + h - 1 <= n {
        let Some(hi) = q.checked_sub(h).filter(|&hi| hi >= 1) else {
            q += h;
            continue;
        };
        // Window v covers text positions (base, q + h - 1].
        let base = (q + h - 1) as isize - width as isize;
        let window = &mut levels[k];
        window.clear();
        window.extend((1..=width).map(|v| {
            let p = base + v as isize;
            if p < 1 || p as usize + h - 1 > n {
                u32::MAX
            } else {
                lab[idx.suffix_rank(p as usize)]
            }
        }));
        if kind == Kind::Palindrome {
            let anchor = lab[idx.rev_prefix_rank(q + h - 1)];
            for slot in window.iter_mut().skip(width - h).take(1) {
                *slot = anchor;
            }
        }
        let bits = SmallWordBitsets::from_labels(width, h, &levels)?;
        let lo = ((q as isize - h as isize - reach as isize) - base).max(1) as usize;
        let hi_v = (hi as isize - base) as usize;
        if lo <= hi_v {
            let occ = small_occurrences(&bits, width - h + 1, h, (lo, hi_v + h - 1))?;
            for v in occ.expand() {
                let x = (base + v as isize) as usize;
                let y = match kind {
                    Kind::Repeat => q,
                    Kind::Palindrome => q + h - 1,
                };
                best.offer(through(idx, alpha, kind, x, y));
            }
        }
        q += h;
    }
    Ok(())
}

/// Arm 1: the nearest previous equal symbol.
fn unit_class(idx: &TextIndex, alpha: Alpha, kind: Kind, best: &mut Best) {
    let t = idx.text();
    let mut last = vec![0usize; t.sigma() + 1];
    for y in 1..=t.len() {
        let c = t.at(y) as usize;
        if last[c] > 0 {
            best.offer(through(idx, alpha, kind, last[c], y));
        }
        last[c] = y;
    }
}

/// A longest α-gapped structure of `kind` (gap possibly empty), or `None`.
///
/// Arms of length at least `4b`, `b = ⌊log n⌋`, are found through an
/// aligned half-block `y` of the right arm whose copy in the left arm is
/// block aligned, located in the word of blocks. Shorter arms are found per
/// window with bit-sets. Each located pair of aligned positions is extended
/// to the best structure through it with LCP queries.
pub fn longest_alpha(idx: &TextIndex, alpha: Alpha, kind: Kind) -> Result<Option<GappedStructure>> {
    let n = idx.len();
    check_alpha(n, alpha)?;
    let b = n.max(1).ilog2() as usize;
    if b <= 2 || n < 4 * b {
        return Ok(naive_longest(idx, alpha, kind));
    }
    let mut best = Best::default();
    let top = (1..).take_while(|&k| (b << (k + 2)) <= n).last();
    if let Some(top) = top {
        let bw = BlockWord::new(idx, b);
        for k in (1..=top).rev() {
            large_class(idx, &bw, alpha, kind, k, &mut best);
            if best.arm() >= b << (k + 1) {
                return Ok(best.0);
            }
        }
    }
    let mut h = b.next_power_of_two();
    while h >= 1 {
        small_class(idx, alpha, kind, h, &mut best)?;
        if best.arm() >= 2 * h {
            return Ok(best.0);
        }
        h /= 2;
    }
    unit_class(idx, alpha, kind, &mut best);
    Ok(best.0)
}
