//! Dictionary of basic factors with compact occurrence queries.

use crate::error::{Error, Result};
use crate::index::TextIndex;

/// Occurrences of a factor inside a range: isolated starts plus arithmetic
/// progressions `(first, period, count)` of overlapping occurrences.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CompactOccurrences {
    pub isolated: Vec<usize>,
    pub runs: Vec<(usize, usize, usize)>,
}

impl CompactOccurrences {
    /// All occurrence starts, ascending.
    pub fn expand(&self) -> Vec<usize> {
        let mut v = self.isolated.clone();
        for &(f, p, c) in &self.runs {
            v.extend((0..c).map(|t| f + t * p));
        }
        v.sort_unstable();
        v
    }

    pub fn is_empty(&self) -> bool {
        self.isolated.is_empty() && self.runs.is_empty()
    }

    fn push(&mut self, item: Occ) {
        match item {
            Occ::Isolated(p) => self.isolated.push(p),
            Occ::Run { first, period, count } => self.runs.push((first, period, count)),
        }
    }
}

/// One item of a compact occurrence listing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Occ {
    Isolated(usize),
    Run { first: usize, period: usize, count: usize },
}

/// Order-preserving labels of all factors of length `len`: `labels[p - 1]`
/// for `p + len - 1 <= n`. Equal labels mean equal factors and smaller
/// labels mean lexicographically smaller factors.
pub fn factor_labels(idx: &TextIndex, len: usize) -> Vec<u32> {
    let n = idx.len();
    if len == 0 || len > n {
        return Vec::new();
    }
    let mut labels = vec![0u32; n - len + 1];
    let mut prev: Option<usize> = None;
    let mut cur = 0u32;
    for &p in idx.sa() {
        let p = p as usize;
        if p + len - 1 > n {
            continue;
        }
        if let Some(q) = prev {
            if idx.lcp(p, q) < len {
                cur += 1;
            }
        }
        labels[p - 1] = cur;
        prev = Some(p);
    }
    labels
}

#[derive(Debug, Clone)]
struct Level {
    label: Vec<u32>,
    /// Starts grouped by label, ascending inside each group.
    occ: Vec<u32>,
    /// `occ[start[l]..start[l + 1]]` holds the group of label `l`.
    start: Vec<u32>,
}

/// Labels of every basic factor `w[i..i+2^k-1]` plus per-label sorted
/// occurrence lists.
#[derive(Debug, Clone)]
pub struct BasicFactorDict {
    n: usize,
    levels: Vec<Level>,
}

impl BasicFactorDict {
    pub fn new(idx: &TextIndex) -> BasicFactorDict {
        let n = idx.len();
        let mut levels = Vec::new();
        let mut k = 0;
        while 1usize << k <= n {
            let label = factor_labels(idx, 1 << k);
            let groups = label.iter().max().map_or(0, |&m| m as usize + 1);
            let mut start = vec![0u32; groups + 1];
            for &l in &label {
                start[l as usize + 1] += 1;
            }
            for g in 1..=groups {
                start[g] += start[g - 1];
            }
            let mut fill = start.clone();
            let mut occ = vec![0u32; label.len()];
            for (p, &l) in label.iter().enumerate() {
                occ[fill[l as usize] as usize] = p as u32 + 1;
                fill[l as usize] += 1;
            }
            levels.push(Level { label, occ, start });
            k += 1;
        }
        BasicFactorDict { n, levels }
    }

    /// Number of levels, i.e. `floor(log2 n) + 1`.
    pub fn levels(&self) -> usize {
        self.levels.len()
    }

    /// Label of `w[i..i+2^k-1]`.
    #[inline]
    pub fn label(&self, k: usize, i: usize) -> u32 {
        self.levels[k].label[i - 1]
    }

    /// Label array of level `k` (0-indexed by position).
    pub fn level_labels(&self, k: usize) -> &[u32] {
        &self.levels[k].label
    }

    fn check(&self, i: usize, k: usize) -> Result<()> {
        if k >= self.levels.len() || i == 0 || i + (1 << k) - 1 > self.n {
            return Err(Error::Range(format!("basic factor ({i}, {k}) outside the text")));
        }
        Ok(())
    }

    /// Occurrences of `w[i..i+2^k-1]` starting in `[a, b - 2^k + 1]`.
    pub fn occurrences(&self, idx: &TextIndex, i: usize, k: usize, a: usize, b: usize) -> Result<CompactOccurrences> {
        self.check(i, k)?;
        if a == 0 || b > self.n || a > b {
            return Err(Error::Range(format!("range [{a}, {b}] outside [1, {}]", self.n)));
        }
        let mut out = CompactOccurrences::default();
        self.for_each_occurrence(idx, i, k, a, b, |o| out.push(o));
        Ok(out)
    }

    /// Unchecked occurrence walk; ranges may be empty or inverted.
    pub(crate) fn for_each_occurrence(
        &self,
        idx: &TextIndex,
        i: usize,
        k: usize,
        a: usize,
        b: usize,
        mut f: impl FnMut(Occ),
    ) {
        let len = 1usize << k;
        if b < len || a + len - 1 > b {
            return;
        }
        let last = b + 1 - len;
        let lv = &self.levels[k];
        let l = lv.label[i - 1] as usize;
        let group = &lv.occ[lv.start[l] as usize..lv.start[l + 1] as usize];
        let mut t = group.partition_point(|&p| (p as usize) < a);
        while t < group.len() {
            let x = group[t] as usize;
            if x > last {
                break;
            }
            let next = group.get(t + 1).map(|&y| y as usize).filter(|&y| y <= last);
            match next {
                Some(y) if 2 * (y - x) <= len => {
                    let p = y - x;
                    let reach = x + p + idx.lcp(x, x + p) - 1;
                    let end = (reach + 1 - len).min(last);
                    let count = (end - x) / p + 1;
                    f(Occ::Run { first: x, period: p, count });
                    let stop = x + (count - 1) * p;
                    t += group[t..].partition_point(|&q| (q as usize) <= stop);
                }
                _ => {
                    f(Occ::Isolated(x));
                    t += 1;
                }
            }
        }
    }
}

/// Build the dictionary of basic factors.
pub fn build_dbf(idx: &TextIndex) -> BasicFactorDict {
    BasicFactorDict::new(idx)
}

/// Compact occurrences of `w[i..i+2^k-1]` starting in `[a, b - 2^k + 1]`.
pub fn bf_occurrences(
    idx: &TextIndex,
    d: &BasicFactorDict,
    i: usize,
    k: usize,
    range: (usize, usize),
) -> Result<CompactOccurrences> {
    d.occurrences(idx, i, k, range.0, range.1)
}

/// Rows `lo..=hi` (1-based) of the suffix array whose suffixes start with
/// `w[i..i+len-1]`, found by binary search with LCP comparisons.
pub fn sa_range(idx: &TextIndex, i: usize, len: usize) -> Result<(usize, usize)> {
    let n = idx.len();
    if i == 0 || len == 0 || i + len - 1 > n {
        return Err(Error::Range(format!("factor ({i}, {len}) outside the text")));
    }
    let sa = idx.sa();
    let r = idx.rank(i);
    let matches = |row: usize| idx.lcp(sa[row - 1] as usize, i) >= len;
    // Rows 1..r: predicate is false then true.
    let (mut lo, mut hi) = (1, r);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if matches(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let first = lo;
    let (mut lo, mut hi) = (r, n);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if matches(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok((first, lo))
}

/// Suffix-array rows of the basic factor `w[i..i+2^k-1]`.
pub fn bf_sa_range(idx: &TextIndex, i: usize, k: usize) -> Result<(usize, usize)> {
    if k >= usize::BITS as usize {
        return Err(Error::Range(format!("level {k}")));
    }
    sa_range(idx, i, 1 << k)
}

/// Slot of each in-block start, and one bit-set per distinct key.
type BitLevel = (Vec<usize>, Vec<Vec<u64>>);

/// Occurrence bit-sets of the basic factors starting in the last block of a
/// short window `v` with `|v|` a multiple of the block size (at most 64).
#[derive(Debug, Clone)]
pub struct SmallWordBitsets {
    len: usize,
    block: usize,
    words: usize,
    /// Per level: slot of each last-block start, then one bit-set per
    /// distinct label.
    levels: Vec<Option<BitLevel>>,
}

impl SmallWordBitsets {
    /// Builds the bit-sets from the symbols of `v`.
    pub fn new(v: &[u32], block: usize) -> Result<SmallWordBitsets> {
        let mut levels = vec![v.to_vec()];
        let mut k = 1;
        while 1usize << k <= block.min(v.len()) {
            let prev: &Vec<u32> = levels.last().unwrap();
            let h = 1 << (k - 1);
            let mut pairs: Vec<(u32, u32)> = (0..prev.len() - h).map(|p| (prev[p], prev[p + h])).collect();
            let mut keys = pairs.clone();
            keys.sort_unstable();
            keys.dedup();
            let next = pairs.drain(..).map(|x| keys.binary_search(&x).unwrap() as u32).collect();
            levels.push(next);
            k += 1;
        }
        SmallWordBitsets::from_labels(v.len(), block, &levels)
    }

    /// Builds the bit-sets from precomputed labels: `labels[k][p]` is the
    /// label of `v[p+1..p+2^k]` (0-indexed `p`). Levels left empty are not
    /// queryable.
    pub fn from_labels(len: usize, block: usize, labels: &[Vec<u32>]) -> Result<SmallWordBitsets> {
        if block == 0 || block > 64 || len == 0 || !len.is_multiple_of(block) {
            return Err(Error::Param(format!("window length {len} with block {block}")));
        }
        let words = len.div_ceil(64);
        let last = len - block;
        let mut levels = Vec::new();
        for (k, lab) in labels.iter().enumerate() {
            let h = 1usize << k;
            if h > block {
                break;
            }
            if lab.is_empty() {
                levels.push(None);
                continue;
            }
            if lab.len() < len + 1 - h {
                return Err(Error::Param(format!("level {k} has {} labels", lab.len())));
            }
            let starts = block - h + 1;
            let mut keys: Vec<u32> = lab[last..last + starts].to_vec();
            keys.sort_unstable();
            keys.dedup();
            let slots = (0..starts).map(|s| keys.binary_search(&lab[last + s]).unwrap()).collect();
            let mut sets = vec![vec![0u64; words]; keys.len()];
            for (p, l) in lab.iter().enumerate().take(len + 1 - h) {
                if let Ok(s) = keys.binary_search(l) {
                    sets[s][p / 64] |= 1 << (p % 64);
                }
            }
            levels.push(Some((slots, sets)));
        }
        Ok(SmallWordBitsets { len, block, words, levels })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn block(&self) -> usize {
        self.block
    }

    /// Bit-set of the occurrences (bit `p - 1` for start `p`) of
    /// `v[j..j+len-1]`, which must lie in the last block.
    pub fn query(&self, j: usize, len: usize) -> Result<Vec<u64>> {
        let first = self.len - self.block + 1;
        if len == 0 || len > self.block {
            return Err(Error::Param(format!("factor length {len} exceeds block {}", self.block)));
        }
        if j < first || j + len - 1 > self.len {
            return Err(Error::Precondition(format!(
                "factor ({j}, {len}) not inside the last block [{first}, {}]",
                self.len
            )));
        }
        let k = len.ilog2() as usize;
        let h = 1 << k;
        let Some((slots, sets)) = self.levels.get(k).and_then(Option::as_ref) else {
            return Err(Error::Precondition(format!("labels of length {h} were not supplied")));
        };
        let a = &sets[slots[j - first]];
        if h == len {
            return Ok(a.clone());
        }
        // Prefix of length h at p and the aligned suffix of length h at
        // p + shift.
        let shift = len - h;
        let b = &sets[slots[j + shift - first]];
        let (ws, bs) = (shift / 64, shift % 64);
        Ok((0..self.words)
            .map(|x| {
                let lo = b.get(x + ws).copied().unwrap_or(0);
                let hi = b.get(x + ws + 1).copied().unwrap_or(0);
                let shifted = if bs == 0 { lo } else { (lo >> bs) | (hi << (64 - bs)) };
                a[x] & shifted
            })
            .collect())
    }
}

/// Compact occurrences of `v[j..j+len-1]` starting in `[a, b - len + 1]`,
/// computed from the bit-sets of `v`.
pub fn small_occurrences(
    bits: &SmallWordBitsets,
    j: usize,
    len: usize,
    range: (usize, usize),
) -> Result<CompactOccurrences> {
    let (a, b) = range;
    if a == 0 || b > bits.len() || a > b {
        return Err(Error::Range(format!("range [{a}, {b}] outside [1, {}]", bits.len())));
    }
    let set = bits.query(j, len)?;
    let mut out = CompactOccurrences::default();
    if b + 1 < a + len {
        return Ok(out);
    }
    let last = b + 1 - len;
    let mut starts = Vec::new();
    for (w, &word) in set.iter().enumerate() {
        let mut m = word;
        while m != 0 {
            let p = w * 64 + m.trailing_zeros() as usize + 1;
            if p >= a && p <= last {
                starts.push(p);
            }
            m &= m - 1;
        }
    }
    let mut t = 0;
    while t < starts.len() {
        let x = starts[t];
        match starts.get(t + 1) {
            Some(&y) if 2 * (y - x) <= len => {
                let p = y - x;
                let mut c = 2;
                while t + c < starts.len() && starts[t + c] - starts[t + c - 1] == p {
                    c += 1;
                }
                out.runs.push((x, p, c));
                t += c;
            }
            _ => {
                out.isolated.push(x);
                t += 1;
            }
        }
    }
    Ok(out)
}
