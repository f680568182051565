//! Union-find variants: extrema tracking with a fixed union forest, interval
//! stabbing, batched interval partitions and offline weighted level
//! ancestors.

use crate::error::{Error, Result};

/// Union by rank with path halving; each set knows its minimum and maximum.
///
/// When built with [`MinMaxUnionFind::with_union_forest`] only unions along
/// edges of that forest are accepted.
#[derive(Debug, Clone)]
pub struct MinMaxUnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
    min: Vec<u32>,
    max: Vec<u32>,
    forest: Option<Vec<Option<usize>>>,
}

impl MinMaxUnionFind {
    /// Singletons `0..len` with unrestricted unions.
    pub fn new(len: usize) -> MinMaxUnionFind {
        let ids: Vec<u32> = (0..len as u32).collect();
        MinMaxUnionFind { parent: ids.clone(), rank: vec![0; len], min: ids.clone(), max: ids, forest: None }
    }

    /// Singletons `0..forest.len()`; `union(x, y)` is allowed only when one
    /// of them is the forest parent of the other.
    pub fn with_union_forest(forest: Vec<Option<usize>>) -> Result<MinMaxUnionFind> {
        check_forest(&forest)?;
        let mut uf = MinMaxUnionFind::new(forest.len());
        uf.forest = Some(forest);
        Ok(uf)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    #[inline]
    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    #[inline]
    pub fn find_min(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.min[r] as usize
    }

    #[inline]
    pub fn find_max(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.max[r] as usize
    }

    pub fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }

    /// Merges the sets of `x` and `y`, checking the union forest if any.
    pub fn union(&mut self, x: usize, y: usize) -> Result<usize> {
        let n = self.len();
        if x >= n || y >= n {
            return Err(Error::Plan(format!("union({x}, {y}) outside universe of size {n}")));
        }
        if let Some(f) = &self.forest {
            if f[x] != Some(y) && f[y] != Some(x) {
                return Err(Error::Plan(format!("union({x}, {y}) not in the allowed forest")));
            }
        }
        Ok(self.merge(x, y))
    }

    /// Merges `x` with its parent in the union forest.
    pub fn link(&mut self, x: usize) -> Result<usize> {
        match self.forest.as_ref().and_then(|f| f.get(x).copied().flatten()) {
            Some(p) => Ok(self.merge(x, p)),
            None => Err(Error::Plan(format!("element {x} has no parent in the union forest"))),
        }
    }

    /// Unchecked union; returns the new root.
    #[inline]
    pub(crate) fn merge(&mut self, x: usize, y: usize) -> usize {
        let (a, b) = (self.find(x), self.find(y));
        if a == b {
            return a;
        }
        let (hi, lo) = if self.rank[a] >= self.rank[b] { (a, b) } else { (b, a) };
        self.parent[lo] = hi as u32;
        if self.rank[hi] == self.rank[lo] {
            self.rank[hi] += 1;
        }
        self.min[hi] = self.min[hi].min(self.min[lo]);
        self.max[hi] = self.max[hi].max(self.max[lo]);
        hi
    }
}

fn check_forest(parent: &[Option<usize>]) -> Result<()> {
    let n = parent.len();
    // 0 = unvisited, 1 = on the current path, 2 = done.
    let mut state = vec![0u8; n];
    let mut path = Vec::new();
    for s in 0..n {
        let mut x = s;
        while state[x] == 0 {
            state[x] = 1;
            path.push(x);
            match parent[x] {
                Some(p) if p >= n => return Err(Error::Plan(format!("parent {p} of {x} outside the universe"))),
                Some(p) => x = p,
                None => break,
            }
        }
        if state[x] == 1 && parent[x].is_some() {
            return Err(Error::Plan(format!("union forest has a cycle through {x}")));
        }
        for &y in &path {
            state[y] = 2;
        }
        path.clear();
    }
    Ok(())
}

/// Union-find over `0..=n` whose allowed unions are the edges of `forest`.
pub fn static_uf_create(forest: Vec<Option<usize>>) -> Result<MinMaxUnionFind> {
    MinMaxUnionFind::with_union_forest(forest)
}

/// Interval `[a, b)` of positions carrying a positive weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedInterval {
    pub a: usize,
    pub b: usize,
    pub weight: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabMode {
    Max,
    Min,
}

/// For each position `i` in `1..=n` the extreme weight among the intervals
/// containing `i` (`H[i - 1]`), 0 where uncovered.
pub fn stab(intervals: &[WeightedInterval], n: usize, mode: StabMode) -> Result<Vec<usize>> {
    Ok(stab_with_source(intervals, n, mode)?.into_iter().map(|s| s.map_or(0, |(w, _)| w)).collect())
}

/// Like [`stab`], also reporting which interval realises each value.
pub fn stab_with_source(
    intervals: &[WeightedInterval],
    n: usize,
    mode: StabMode,
) -> Result<Vec<Option<(usize, usize)>>> {
    for iv in intervals {
        if iv.a == 0 || iv.a >= iv.b || iv.b > n + 1 || iv.weight == 0 {
            return Err(Error::Param(format!(
                "interval [{}, {}) weight {} invalid for n = {n}",
                iv.a, iv.b, iv.weight
            )));
        }
    }
    let top = intervals.iter().map(|iv| iv.weight).max().unwrap_or(0);
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    if top <= n + intervals.len() {
        // Counting sort by weight.
        let mut cnt = vec![0usize; top + 2];
        for iv in intervals {
            cnt[iv.weight + 1] += 1;
        }
        for w in 1..cnt.len() {
            cnt[w] += cnt[w - 1];
        }
        for (x, iv) in intervals.iter().enumerate() {
            order[cnt[iv.weight]] = x;
            cnt[iv.weight] += 1;
        }
    } else {
        order.sort_by_key(|&x| intervals[x].weight);
    }
    if mode == StabMode::Max {
        order.reverse();
    }
    let mut h: Vec<Option<(usize, usize)>> = vec![None; n + 1];
    let mut uf = MinMaxUnionFind::new(n + 1);
    for &x in &order {
        let iv = intervals[x];
        let mut l = iv.a;
        while l < iv.b {
            let lo = uf.find_min(l);
            let hi = uf.find_max(l);
            if lo == hi && h[l].is_none() {
                h[l] = Some((iv.weight, x));
            }
            if l != iv.a {
                uf.merge(l, l - 1);
            }
            l = hi + 1;
        }
    }
    h.remove(0);
    Ok(h)
}

/// One step of a batched interval-partition plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UfOp {
    /// Report the interval containing the element.
    Find(usize),
    /// Remove a boundary, merging the two intervals it separates.
    Union(usize),
}

/// A partition of `[1, universe)` by `boundaries` (each in
/// `(1, universe)`) and the operations applied to it in order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Partition {
    pub boundaries: Vec<usize>,
    pub ops: Vec<UfOp>,
}

/// Independent partitions of one universe `[1, universe)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BatchUFPlan {
    pub universe: usize,
    pub partitions: Vec<Partition>,
}

/// Answers every `Find` of every partition with the interval `[lo, hi)`
/// containing the element at that point of the sequence.
pub fn batch_interval_uf(plan: &BatchUFPlan) -> Result<Vec<Vec<(usize, usize)>>> {
    let u = plan.universe;
    if u < 2 {
        return Err(Error::Plan(format!("universe [1, {u}) is empty")));
    }
    let mut out = Vec::with_capacity(plan.partitions.len());
    let mut bounds = Vec::new();
    for (pi, part) in plan.partitions.iter().enumerate() {
        bounds.clear();
        bounds.push(1);
        bounds.extend_from_slice(&part.boundaries);
        bounds[1..].sort_unstable();
        for w in bounds.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Plan(format!("partition {pi}: boundary {} repeated or outside (1, {u})", w[1])));
            }
        }
        if bounds.len() > 1 && *bounds.last().unwrap() >= u {
            return Err(Error::Plan(format!("partition {pi}: boundary outside (1, {u})")));
        }
        bounds.push(u);
        let intervals = bounds.len() - 1;
        let mut uf = MinMaxUnionFind::new(intervals);
        let mut removed = vec![false; intervals];
        let mut answers = Vec::new();
        for op in &part.ops {
            match *op {
                UfOp::Find(x) => {
                    if x == 0 || x >= u {
                        return Err(Error::Plan(format!("partition {pi}: find({x}) outside")));
                    }
                    let t = bounds.partition_point(|&b| b <= x) - 1;
                    let (lo, hi) = (uf.find_min(t), uf.find_max(t));
                    answers.push((bounds[lo], bounds[hi + 1]));
                }
                UfOp::Union(b) => {
                    let t = bounds[..intervals].binary_search(&b);
                    match t {
                        Ok(t) if t > 0 && !removed[t] => {
                            removed[t] = true;
                            uf.merge(t - 1, t);
                        }
                        _ => {
                            return Err(Error::Plan(format!(
                                "partition {pi}: union at {b} which is not a current boundary"
                            )))
                        }
                    }
                }
            }
        }
        out.push(answers);
    }
    Ok(out)
}

/// Rooted forest with nonnegative edge weights; `weight[v]` is the weight
/// of the edge from `v` to `parent[v]` and is ignored at roots.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedTree {
    pub parent: Vec<Option<usize>>,
    pub weight: Vec<u64>,
}

impl WeightedTree {
    /// Sum of edge weights from each node up to its root.
    pub fn depths(&self) -> Result<Vec<u64>> {
        let n = self.parent.len();
        if self.weight.len() != n {
            return Err(Error::Param("weight and parent lengths differ".into()));
        }
        check_forest(&self.parent).map_err(|e| Error::Param(e.to_string()))?;
        let mut depth: Vec<Option<u64>> = vec![None; n];
        let mut path = Vec::new();
        for s in 0..n {
            let mut x = s;
            while depth[x].is_none() {
                match self.parent[x] {
                    Some(p) => {
                        path.push(x);
                        x = p;
                    }
                    None => depth[x] = Some(0),
                }
            }
            let mut d = depth[x].unwrap();
            while let Some(y) = path.pop() {
                d += self.weight[y];
                depth[y] = Some(d);
            }
        }
        Ok(depth.into_iter().map(Option::unwrap).collect())
    }
}

/// For each query `(v, bound)`, the first proper ancestor `u` of `v` whose
/// path weight from `v` exceeds `bound`, or the root of `v` if no closer
/// ancestor qualifies. `None` only when `v` is itself a root.
pub fn offline_wla(tree: &WeightedTree, queries: &[(usize, u64)]) -> Result<Vec<Option<usize>>> {
    let n = tree.parent.len();
    let depth = tree.depths()?;
    for &(v, _) in queries {
        if v >= n {
            return Err(Error::Range(format!("query node {v} outside the tree")));
        }
    }
    let threshold = |q: &(usize, u64)| depth[q.0] as i128 - q.1 as i128;
    let mut qs: Vec<usize> = (0..queries.len()).collect();
    qs.sort_unstable_by_key(|&q| std::cmp::Reverse(threshold(&queries[q])));
    let mut nodes: Vec<usize> = (0..n).filter(|&x| tree.parent[x].is_some()).collect();
    nodes.sort_unstable_by_key(|&x| std::cmp::Reverse(depth[x]));

    let mut uf = MinMaxUnionFind::new(n);
    let mut top: Vec<usize> = (0..n).collect();
    let mut next = 0;
    let mut out = vec![None; queries.len()];
    for q in qs {
        let t = threshold(&queries[q]);
        while next < nodes.len() && depth[nodes[next]] as i128 >= t {
            let x = nodes[next];
            let p = tree.parent[x].unwrap();
            let above = top[uf.find(p)];
            let r = uf.merge(x, p);
            top[r] = above;
            next += 1;
        }
        let v = queries[q].0;
        if tree.parent[v].is_some() {
            out[q] = Some(top[uf.find(v)]);
        }
    }
    Ok(out)
}
