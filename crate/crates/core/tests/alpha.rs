mod common;

use common::*;
use gapped::alpha::*;
use gapped::periodicity::compute_runs;
use gapped::{build_index, oracle, Error, GapArray, Kind, Text};
use rand::RngExt;

fn a(s: &str) -> Alpha {
    s.parse().unwrap()
}

fn arrays(t: &Text, alpha: Alpha, kind: Kind) -> GapArray {
    let idx = build_index(t);
    match kind {
        Kind::Repeat => lrep_alpha(&idx, alpha).unwrap(),
        Kind::Palindrome => lpal_alpha(&idx, alpha).unwrap(),
    }
}

fn reference(t: &Text, alpha: Alpha, kind: Kind) -> GapArray {
    match kind {
        Kind::Repeat => oracle::lrep_alpha(t, alpha),
        Kind::Palindrome => oracle::lpal_alpha(t, alpha),
    }
}

/// Values equal the oracle and every witness is a valid α-gapped structure.
fn check(t: &Text, alpha: Alpha, kind: Kind) {
    let got = arrays(t, alpha, kind);
    let want = reference(t, alpha, kind);
    assert_eq!(got.values, want.values, "{kind:?} alpha {alpha} on {:?}", t.symbols());
    for i in 1..=t.len() {
        assert_eq!(got.values[i - 1] == 0, got.witness[i - 1].is_none());
        if let Some(s) = got.structure_at(i, kind) {
            assert!(s.validate(t), "bad witness {s:?} at {i}");
            assert!(alpha.admits(s.arm_len + s.gap_len, s.arm_len));
        }
    }
    let best = longest_alpha(&build_index(t), alpha, kind).unwrap();
    let max = want.values.iter().copied().max().unwrap_or(0);
    assert_eq!(best.map_or(0, |s| s.arm_len), max, "longest {kind:?} alpha {alpha} on {:?}", t.symbols());
    if let Some(s) = best {
        assert!(s.validate(t) && alpha.admits(s.arm_len + s.gap_len, s.arm_len));
    }
}

#[test]
fn parse_alpha() {
    assert_eq!(a("3/2"), Alpha::new(3, 2).unwrap());
    assert_eq!(a("4/2"), Alpha::integer(2).unwrap());
    assert_eq!(a("2").to_string(), "2");
    assert!(matches!("1/2".parse::<Alpha>(), Err(Error::Param(_))));
    assert!(matches!("x".parse::<Alpha>(), Err(Error::Param(_))));
    assert!(matches!("3/0".parse::<Alpha>(), Err(Error::Param(_))));
}

#[test]
fn array_examples() {
    assert_eq!(arrays(&text("ababab"), a("2"), Kind::Repeat).values, vec![0, 0, 2, 2, 2, 1]);
    let r = arrays(&text("abcba"), a("4"), Kind::Palindrome);
    assert_eq!(r.values[3], 2);
    assert_eq!(r.values[4], 1);
    for kind in [Kind::Repeat, Kind::Palindrome] {
        assert_eq!(arrays(&text("abc"), a("2"), kind).values, vec![0; 3]);
    }
    assert!(matches!(lrep_alpha(&build_index(&text("abc")), a("4")), Err(Error::Param(_))));
}

#[test]
fn longest_examples() {
    let l = |s: &str, al: &str, kind| longest_alpha(&build_index(&text(s)), a(al), kind).unwrap();
    assert_eq!(l("ababab", "2", Kind::Repeat).unwrap().arm_len, 2);
    let p = l("abcba", "4", Kind::Palindrome).unwrap();
    assert_eq!((p.arm_len, p.gap_len), (2, 1));
    assert_eq!(l("abc", "3", Kind::Repeat), None);
}

#[test]
fn enumerator_examples() {
    let t = text("aabaa");
    let s: Vec<_> = enumerate_maximal_alpha(&build_index(&t), a("3"), Kind::Repeat)
        .unwrap()
        .into_iter()
        .map(|m| (m.structure.left_start, m.structure.arm_len, m.structure.gap_len))
        .collect();
    assert!(s.contains(&(1, 2, 1)));
    assert!(s.contains(&(2, 1, 1)));
    for kind in [Kind::Repeat, Kind::Palindrome] {
        assert!(enumerate_maximal_alpha(&build_index(&text("abc")), a("3"), kind).unwrap().is_empty());
    }
}

#[test]
fn exhaustive_binary() {
    for n in 1..=12 {
        let nn = n.to_string();
        let alphas: Vec<Alpha> =
            ["1", "3/2", "2", "3", nn.as_str()].into_iter().map(a).filter(|x| x.at_most(n)).collect();
        for t in binary_words(n) {
            for &alpha in &alphas {
                for kind in [Kind::Repeat, Kind::Palindrome] {
                    check(&t, alpha, kind);
                }
            }
        }
    }
}

fn random_alpha(rng: &mut rand::rngs::StdRng, n: usize) -> Alpha {
    loop {
        let q = rng.random_range(1..=4u64);
        let p = rng.random_range(q..=4 * q + 8);
        let al = Alpha::new(p, q).unwrap();
        if al.at_most(n) {
            return al;
        }
    }
}

#[test]
fn random_words() {
    let mut r = rng(71);
    for round in 0..100 {
        let n = r.random_range(2..=250);
        let t = random_word(&mut r, n, [2, 4][round % 2]);
        let alpha = random_alpha(&mut r, n);
        for kind in [Kind::Repeat, Kind::Palindrome] {
            check(&t, alpha, kind);
        }
    }
}

#[test]
fn periodic_words() {
    let mut r = rng(72);
    for round in 0..40 {
        let p = r.random_range(1..=6);
        let n = r.random_range(20..=200);
        let root = random_word(&mut r, p, 3);
        let mut raw: Vec<u32> = (0..n).map(|x| root.symbols()[x % p]).collect();
        if round % 2 == 0 {
            let at = r.random_range(0..n);
            raw[at] = 9;
        }
        let t = Text::from_symbols(&raw).unwrap();
        let alpha = random_alpha(&mut r, n);
        for kind in [Kind::Repeat, Kind::Palindrome] {
            check(&t, alpha, kind);
        }
    }
}

/// Longer words, where the block search handles long arms; the arrays are
/// the reference.
#[test]
fn longest_on_long_words() {
    let mut r = rng(73);
    for round in 0..60 {
        let n = r.random_range(300..=2000);
        let t = match round % 3 {
            0 => random_word(&mut r, n, 2),
            1 => {
                let (ul, gl) = (r.random_range(20..=n / 4), r.random_range(0..=n / 4));
                let u: Vec<u32> = (0..ul).map(|_| r.random_range(0..2)).collect();
                let mut raw = u.clone();
                raw.extend((0..gl).map(|_| r.random_range(0..2u32)));
                if round % 2 == 0 {
                    raw.extend(u.iter().rev());
                } else {
                    raw.extend_from_slice(&u);
                }
                Text::from_symbols(&raw).unwrap()
            }
            _ => random_word(&mut r, n, 4),
        };
        let alpha = random_alpha(&mut r, t.len());
        let idx = build_index(&t);
        for kind in [Kind::Repeat, Kind::Palindrome] {
            let arr = match kind {
                Kind::Repeat => lrep_alpha(&idx, alpha).unwrap(),
                Kind::Palindrome => lpal_alpha(&idx, alpha).unwrap(),
            };
            let best = longest_alpha(&idx, alpha, kind).unwrap();
            assert_eq!(best.map_or(0, |s| s.arm_len), arr.values.iter().copied().max().unwrap());
            if let Some(s) = best {
                assert!(s.validate(&t) && alpha.admits(s.arm_len + s.gap_len, s.arm_len));
            }
        }
    }
}

#[test]
fn enumerator_matches_naive() {
    let mut r = rng(74);
    for round in 0..200 {
        let n = r.random_range(1..=60);
        let t = random_word(&mut r, n, [2, 3, 4][round % 3]);
        let alpha = random_alpha(&mut r, n);
        for kind in [Kind::Repeat, Kind::Palindrome] {
            let mut got: Vec<_> = enumerate_maximal_alpha(&build_index(&t), alpha, kind)
                .unwrap()
                .into_iter()
                .map(|m| m.structure)
                .collect();
            got.sort_by_key(|s| (s.left_start, s.arm_len, s.gap_len));
            let mut want = oracle::maximal_alpha(&t, alpha, kind);
            want.sort_by_key(|s| (s.left_start, s.arm_len, s.gap_len));
            assert_eq!(got, want, "{kind:?} alpha {alpha} on {:?}", t.symbols());
        }
    }
}

#[test]
fn arrays_reject_foreign_structures() {
    let t = text("abab");
    let idx = build_index(&t);
    let runs = compute_runs(&idx);
    let s = enumerate_maximal_alpha(&idx, a("2"), Kind::Palindrome).unwrap();
    let bad = enumerate_maximal_alpha(&idx, a("2"), Kind::Repeat).unwrap();
    assert!(alpha_arrays(&idx, a("2"), Kind::Palindrome, &s, &runs).is_ok());
    if !bad.is_empty() {
        assert!(alpha_arrays(&idx, a("2"), Kind::Palindrome, &bad, &runs).is_err());
    }
}
