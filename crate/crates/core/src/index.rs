//! Suffix arrays, LCP arrays and constant-time LCP queries.
//!
//! One suffix array is built over the combined word `w 0 w^R`. Because the
//! separator is the unique smallest symbol, the same structure answers
//! longest common prefixes of suffixes, longest common suffixes of prefixes
//! and the mixed suffix/reversed-prefix query used for palindromes.

use crate::error::{Error, Result};
use crate::text::Text;

/// Suffix array of `s` (0-indexed positions) by prefix doubling with two
/// counting sorts per round. Symbols must lie in `0..sigma`.
pub(crate) fn suffix_array(s: &[u32], sigma: usize) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut rank: Vec<u32> = s.to_vec();
    let mut tmp = vec![0u32; n];
    let mut cnt = vec![0usize; sigma.max(n) + 1];

    // Initial sort by first symbol.
    counting_sort(&mut sa, &rank, &mut cnt[..sigma + 1], &mut tmp);
    let mut classes = relabel(&sa, &mut rank, &mut tmp, |r, a, b| r[a] == r[b]);

    let mut k = 1usize;
    while classes < n {
        // Order by second key: suffixes without one come first.
        let mut p = 0;
        for i in n.saturating_sub(k)..n {
            tmp[p] = i as u32;
            p += 1;
        }
        for &x in &sa {
            if x as usize >= k {
                tmp[p] = x - k as u32;
                p += 1;
            }
        }
        // Stable sort by first key.
        cnt[..classes + 1].iter_mut().for_each(|c| *c = 0);
        for &r in rank.iter() {
            cnt[r as usize + 1] += 1;
        }
        for c in 1..=classes {
            cnt[c] += cnt[c - 1];
        }
        for &x in &tmp {
            let r = rank[x as usize] as usize;
            sa[cnt[r]] = x;
            cnt[r] += 1;
        }
        let kk = k;
        classes = relabel(&sa, &mut rank, &mut tmp, |r, a, b| {
            r[a] == r[b] && {
                let (a2, b2) = (a + kk, b + kk);
                match (a2 < r.len(), b2 < r.len()) {
                    (true, true) => r[a2] == r[b2],
                    (false, false) => true,
                    _ => false,
                }
            }
        });
        k *= 2;
    }
    sa
}

fn counting_sort(sa: &mut [u32], key: &[u32], cnt: &mut [usize], tmp: &mut [u32]) {
    cnt.iter_mut().for_each(|c| *c = 0);
    for &k in key {
        cnt[k as usize] += 1;
    }
    let mut sum = 0;
    for c in cnt.iter_mut() {
        let v = *c;
        *c = sum;
        sum += v;
    }
    for (i, &k) in key.iter().enumerate() {
        tmp[cnt[k as usize]] = i as u32;
        cnt[k as usize] += 1;
    }
    sa.copy_from_slice(tmp);
}

/// Rewrites `rank` as dense class ids in `sa` order; returns the class count.
fn relabel(sa: &[u32], rank: &mut [u32], tmp: &mut [u32], same: impl Fn(&[u32], usize, usize) -> bool) -> usize {
    let mut c = 0u32;
    tmp[sa[0] as usize] = 0;
    for w in 1..sa.len() {
        let (a, b) = (sa[w - 1] as usize, sa[w] as usize);
        if !same(rank, a, b) {
            c += 1;
        }
        tmp[b] = c;
    }
    rank.copy_from_slice(tmp);
    c as usize + 1
}

/// Kasai et al.: `lcp[r]` is the LCP of the suffixes at ranks `r - 1` and
/// `r`; `lcp[0] = 0`.
pub(crate) fn lcp_array(s: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

const BLOCK: usize = 16;

/// Range-minimum structure: in-block prefix/suffix minima plus a sparse
/// table over block minima. Queries touch at most one partial block scan.
#[derive(Debug, Clone)]
pub struct RangeMin {
    data: Vec<u32>,
    prefix: Vec<u32>,
    suffix: Vec<u32>,
    table: Vec<Vec<u32>>,
}

impl RangeMin {
    pub fn new(data: Vec<u32>) -> RangeMin {
        let n = data.len();
        let mut prefix = data.clone();
        let mut suffix = data.clone();
        for i in 0..n {
            if i % BLOCK != 0 {
                prefix[i] = prefix[i].min(prefix[i - 1]);
            }
        }
        for i in (0..n).rev() {
            if (i + 1) % BLOCK != 0 && i + 1 < n {
                suffix[i] = suffix[i].min(suffix[i + 1]);
            }
        }
        let blocks: Vec<u32> = (0..n.div_ceil(BLOCK)).map(|b| suffix[b * BLOCK]).collect();
        let mut table = vec![blocks];
        let mut w = 1;
        while 2 * w <= table[0].len() {
            let prev = table.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - w).map(|i| prev[i].min(prev[i + w])).collect();
            table.push(next);
            w *= 2;
        }
        RangeMin { data, prefix, suffix, table }
    }

    /// Minimum of `data[l..=r]`.
    #[inline]
    pub fn min(&self, l: usize, r: usize) -> u32 {
        debug_assert!(l <= r && r < self.data.len());
        let (bl, br) = (l / BLOCK, r / BLOCK);
        if bl == br {
            return self.data[l..=r].iter().copied().min().unwrap();
        }
        let mut m = self.suffix[l].min(self.prefix[r]);
        if bl + 1 < br {
            let (a, b) = (bl + 1, br - 1);
            let k = (b - a + 1).ilog2() as usize;
            let t = &self.table[k];
            m = m.min(t[a]).min(t[b + 1 - (1 << k)]);
        }
        m
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.data
    }
}

/// Suffix array, ranks and LCP structure over `w`, `w^R` and `w 0 w^R`.
#[derive(Debug, Clone)]
pub struct TextIndex {
    text: Text,
    /// Suffix array of `w`, 1-indexed positions in lexicographic order.
    sa: Vec<u32>,
    /// `rank[i - 1]` is the 1-based row of suffix `i` in `sa`.
    rank: Vec<u32>,
    /// Suffix array of the combined word (0-indexed positions).
    sa_u: Vec<u32>,
    rank_u: Vec<u32>,
    lcp_u: RangeMin,
}

impl TextIndex {
    pub fn new(text: &Text) -> TextIndex {
        let n = text.len();
        let mut u = Vec::with_capacity(2 * n + 1);
        u.extend_from_slice(text.symbols());
        u.push(0);
        u.extend(text.symbols().iter().rev());
        let sa_u = suffix_array(&u, text.sigma() + 1);
        let mut rank_u = vec![0u32; u.len()];
        for (r, &p) in sa_u.iter().enumerate() {
            rank_u[p as usize] = r as u32;
        }
        let lcp = lcp_array(&u, &sa_u, &rank_u);
        let sa: Vec<u32> = sa_u.iter().filter(|&&p| (p as usize) < n).map(|&p| p + 1).collect();
        let mut rank = vec![0u32; n];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize - 1] = r as u32 + 1;
        }
        TextIndex { text: text.clone(), sa, rank, sa_u, rank_u, lcp_u: RangeMin::new(lcp) }
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// Suffix array of `w` as 1-indexed positions.
    pub fn sa(&self) -> &[u32] {
        &self.sa
    }

    /// Row (1-based) of suffix `i` in [`TextIndex::sa`].
    #[inline]
    pub fn rank(&self, i: usize) -> usize {
        self.rank[i - 1] as usize
    }

    /// Position of `w[i..n]` in the merged list of suffixes and reversed
    /// prefixes (1..=2n).
    #[inline]
    pub fn suffix_rank(&self, i: usize) -> usize {
        self.rank_u[i - 1] as usize
    }

    /// Position of `w[1..j]^R` in the merged list (1..=2n).
    #[inline]
    pub fn rev_prefix_rank(&self, j: usize) -> usize {
        self.rank_u[2 * self.len() + 1 - j] as usize
    }

    /// Entry of the merged list at `rank`: `Ok(i)` for the suffix starting
    /// at `i`, `Err(j)` for the reversed prefix ending at `j`.
    #[inline]
    pub fn merged_entry(&self, rank: usize) -> std::result::Result<usize, usize> {
        let p = self.sa_u[rank] as usize;
        let n = self.len();
        if p < n {
            Ok(p + 1)
        } else {
            Err(2 * n + 1 - p)
        }
    }

    #[inline]
    fn lcp_u(&self, p: usize, q: usize) -> usize {
        let (a, b) = (self.rank_u[p] as usize, self.rank_u[q] as usize);
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.lcp_u.min(a + 1, b) as usize
    }

    /// LCP of the merged-list entries at ranks `a < b`.
    #[inline]
    pub fn merged_lcp(&self, a: usize, b: usize) -> usize {
        self.lcp_u.min(a + 1, b) as usize
    }

    /// Unchecked LCP of `w[i..n]` and `w[j..n]`; 0 if either is past `n`.
    #[inline]
    pub fn lcp(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        if i > n || j > n || i == 0 || j == 0 {
            0
        } else if i == j {
            n - i + 1
        } else {
            self.lcp_u(i - 1, j - 1)
        }
    }

    /// Unchecked longest common suffix of `w[1..i]` and `w[1..j]`; 0 if
    /// either is empty.
    #[inline]
    pub fn lcs(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        if i == 0 || j == 0 || i > n || j > n {
            0
        } else if i == j {
            i
        } else {
            self.lcp_u(2 * n + 1 - i, 2 * n + 1 - j)
        }
    }

    /// Unchecked LCP of `w[i..n]` and `w[1..j]^R`; 0 out of range.
    #[inline]
    pub fn rlcp(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        if i == 0 || j == 0 || i > n || j > n {
            0
        } else {
            self.lcp_u(i - 1, 2 * n + 1 - j)
        }
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        let n = self.len();
        for p in [i, j] {
            if p == 0 || p > n {
                return Err(Error::Range(format!("position {p} outside [1, {n}]")));
            }
        }
        Ok(())
    }

    /// Longest common prefix of `w[i..n]` and `w[j..n]`.
    pub fn lcp_suffixes(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i, j)?;
        Ok(self.lcp(i, j))
    }

    /// Longest common suffix of `w[1..i]` and `w[1..j]`.
    pub fn lcs_prefixes(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i, j)?;
        Ok(self.lcs(i, j))
    }

    /// Longest `m` with `w[i..i+m-1] = (w[j-m+1..j])^R`.
    pub fn lcp_rev(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i, j)?;
        Ok(self.rlcp(i, j))
    }
}

/// Build the full index of `t`.
pub fn build_index(t: &Text) -> TextIndex {
    TextIndex::new(t)
}
