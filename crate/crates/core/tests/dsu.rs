mod common;

use common::*;
use gapped::dsu::*;
use gapped::Error;
use rand::RngExt;

fn iv(a: usize, b: usize, weight: usize) -> WeightedInterval {
    WeightedInterval { a, b, weight }
}

#[test]
fn stab_examples() {
    let ivs = [iv(1, 4, 5), iv(2, 3, 7)];
    assert_eq!(stab(&ivs, 4, StabMode::Max).unwrap(), vec![5, 7, 5, 0]);
    assert_eq!(stab(&ivs, 4, StabMode::Min).unwrap(), vec![5, 5, 5, 0]);
    assert_eq!(stab(&[], 3, StabMode::Max).unwrap(), vec![0, 0, 0]);
    assert!(matches!(stab(&[iv(2, 2, 1)], 3, StabMode::Max), Err(Error::Param(_))));
}

#[test]
fn stab_matches_direct_evaluation() {
    let mut r = rng(3);
    for _ in 0..500 {
        let n = r.random_range(1..=200);
        let k = r.random_range(0..=400);
        let ivs: Vec<_> = (0..k)
            .map(|_| {
                let a = r.random_range(1..=n);
                let b = r.random_range(a + 1..=n + 1);
                iv(a, b, r.random_range(1..=n))
            })
            .collect();
        for mode in [StabMode::Max, StabMode::Min] {
            let got = stab_with_source(&ivs, n, mode).unwrap();
            for x in 1..=n {
                let cover = ivs.iter().filter(|v| v.a <= x && x < v.b).map(|v| v.weight);
                let want = match mode {
                    StabMode::Max => cover.max(),
                    StabMode::Min => cover.min(),
                };
                assert_eq!(got[x - 1].map(|s| s.0), want);
                if let Some((w, src)) = got[x - 1] {
                    let v = ivs[src];
                    assert!(v.a <= x && x < v.b && v.weight == w);
                }
            }
        }
    }
}

#[test]
fn static_union_find_examples() {
    let mut uf = static_uf_create(vec![None, Some(2), Some(3), None]).unwrap();
    uf.union(1, 2).unwrap();
    assert_eq!(uf.find_min(2), 1);
    assert_eq!(uf.find_max(1), 2);
    assert_eq!(uf.find_min(3), 3);
    assert!(matches!(uf.union(1, 3), Err(Error::Plan(_))));
    assert!(static_uf_create(vec![Some(1), Some(0)]).is_err());
}

#[test]
fn batch_examples() {
    let plan = BatchUFPlan {
        universe: 5,
        partitions: vec![Partition { boundaries: vec![3], ops: vec![UfOp::Find(3), UfOp::Union(3), UfOp::Find(3)] }],
    };
    assert_eq!(batch_interval_uf(&plan).unwrap(), vec![vec![(3, 5), (1, 5)]]);
    let bad =
        BatchUFPlan { universe: 5, partitions: vec![Partition { boundaries: vec![3], ops: vec![UfOp::Union(2)] }] };
    assert!(matches!(batch_interval_uf(&bad), Err(Error::Plan(_))));
}

#[test]
fn batch_matches_naive_simulation() {
    let mut r = rng(4);
    for _ in 0..300 {
        let universe = r.random_range(2..=80);
        let parts = r.random_range(1..=4);
        let mut plan = BatchUFPlan { universe, partitions: Vec::new() };
        let mut want = Vec::new();
        for _ in 0..parts {
            let mut live: Vec<usize> = (2..universe).filter(|_| r.random_bool(0.3)).collect();
            let boundaries = live.clone();
            let mut ops = Vec::new();
            let mut answers = Vec::new();
            for _ in 0..r.random_range(0..30) {
                if !live.is_empty() && r.random_bool(0.4) {
                    let b = live.remove(r.random_range(0..live.len()));
                    ops.push(UfOp::Union(b));
                } else {
                    let x = r.random_range(1..universe);
                    ops.push(UfOp::Find(x));
                    let lo = live.iter().copied().filter(|&b| b <= x).max().unwrap_or(1);
                    let hi = live.iter().copied().filter(|&b| b > x).min().unwrap_or(universe);
                    answers.push((lo, hi));
                }
            }
            plan.partitions.push(Partition { boundaries, ops });
            want.push(answers);
        }
        assert_eq!(batch_interval_uf(&plan).unwrap(), want);
    }
}

fn chain() -> WeightedTree {
    let mut parent = vec![None; 10];
    let mut weight = vec![0; 10];
    parent[5] = Some(0);
    weight[5] = 2;
    parent[9] = Some(5);
    weight[9] = 3;
    WeightedTree { parent, weight }
}

#[test]
fn wla_examples() {
    let got = offline_wla(&chain(), &[(9, 2), (9, 5), (9, 0), (0, 0)]).unwrap();
    assert_eq!(got, vec![Some(5), Some(0), Some(5), None]);
}

#[test]
fn wla_matches_root_walks() {
    let mut r = rng(5);
    for _ in 0..300 {
        let n = r.random_range(1..=200);
        let parent: Vec<Option<usize>> =
            (0..n).map(|v| if v == 0 || r.random_bool(0.05) { None } else { Some(r.random_range(0..v)) }).collect();
        let weight: Vec<u64> = (0..n).map(|_| r.random_range(0..=5)).collect();
        let tree = WeightedTree { parent: parent.clone(), weight: weight.clone() };
        let queries: Vec<(usize, u64)> = (0..100).map(|_| (r.random_range(0..n), r.random_range(0..=20))).collect();
        let got = offline_wla(&tree, &queries).unwrap();
        for (q, &(v, bound)) in queries.iter().enumerate() {
            let mut want = None;
            let (mut x, mut acc) = (v, 0u64);
            while let Some(p) = parent[x] {
                acc += weight[x];
                want = Some(p);
                if acc > bound {
                    break;
                }
                x = p;
            }
            assert_eq!(got[q], want);
        }
    }
}
