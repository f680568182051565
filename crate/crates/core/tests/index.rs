mod common;

use common::*;
use gapped::{build_index, oracle, Error, Text};
use rand::RngExt;

fn naive_sa(t: &Text) -> Vec<u32> {
    let s = t.symbols();
    let mut sa: Vec<u32> = (1..=s.len() as u32).collect();
    sa.sort_by(|&a, &b| s[a as usize - 1..].cmp(&s[b as usize - 1..]));
    sa
}

#[test]
fn build_text_remaps_in_sorted_order() {
    let t = text("abc");
    assert_eq!(t.symbols(), &[1, 2, 3]);
    assert_eq!(t.alphabet(), &[b'a' as u32, b'b' as u32, b'c' as u32]);
    assert_eq!(text("aaa").symbols(), &[1, 1, 1]);
    assert_eq!(text("cab").original(1), b'c' as u32);
    assert!(matches!(Text::from_bytes(b""), Err(Error::Input(_))));
}

#[test]
fn banana_suffix_array() {
    let idx = build_index(&text("banana"));
    assert_eq!(idx.sa(), &[6, 4, 2, 1, 5, 3]);
    assert_eq!(build_index(&text("aaa")).sa(), &[3, 2, 1]);
}

#[test]
fn merged_ranks_of_ab() {
    // Sorted suffixes of "ab0ba": 0ba < a < ab0ba < b < ba.
    let idx = build_index(&text("ab"));
    assert_eq!((idx.suffix_rank(1), idx.suffix_rank(2)), (2, 3));
    assert_eq!((idx.rev_prefix_rank(1), idx.rev_prefix_rank(2)), (1, 4));
}

#[test]
fn lcp_examples() {
    let idx = build_index(&text("banana"));
    assert_eq!(idx.lcp_suffixes(2, 4), Ok(3));
    assert_eq!(idx.lcp_suffixes(1, 1), Ok(6));
    assert_eq!(idx.lcp_suffixes(1, 2), Ok(0));
    assert_eq!(idx.lcs_prefixes(3, 5), Ok(2));
    assert_eq!(idx.lcs_prefixes(6, 6), Ok(6));
    assert_eq!(idx.lcs_prefixes(1, 2), Ok(0));
    assert!(matches!(idx.lcp_suffixes(0, 1), Err(Error::Range(_))));
    assert!(matches!(idx.lcp_rev(1, 7), Err(Error::Range(_))));
    let idx = build_index(&text("abcba"));
    assert_eq!(idx.lcp_rev(4, 2), Ok(2));
    assert_eq!(idx.lcp_rev(4, 3), Ok(0));
    assert_eq!(build_index(&text("aaaa")).lcp_rev(2, 4), Ok(3));
}

#[test]
fn suffix_arrays_match_naive_sort() {
    let mut r = rng(1);
    for trial in 0..300 {
        let n = r.random_range(1..=200);
        let sigma = [2, 3, 4, 26][trial % 4];
        let t = random_word(&mut r, n, sigma);
        let idx = build_index(&t);
        assert_eq!(idx.sa(), naive_sa(&t).as_slice());
        for (row, &p) in idx.sa().iter().enumerate() {
            assert_eq!(idx.rank(p as usize), row + 1);
        }
        // Merged list covers 1..=2n exactly once.
        let mut seen = vec![false; 2 * n + 1];
        for i in 1..=n {
            for r in [idx.suffix_rank(i), idx.rev_prefix_rank(i)] {
                assert!((1..=2 * n).contains(&r) && !seen[r]);
                seen[r] = true;
            }
        }
    }
}

#[test]
fn lcp_queries_match_character_scan() {
    let mut r = rng(2);
    for (sigma, n) in [(2, 500), (4, 300), (26, 200)] {
        let t = random_word(&mut r, n, sigma);
        let idx = build_index(&t);
        for _ in 0..10_000 {
            let (i, j) = (r.random_range(1..=n), r.random_range(1..=n));
            assert_eq!(idx.lcp(i, j), oracle::lcp(&t, i, j));
            assert_eq!(idx.lcs(i, j), oracle::lcs(&t, i, j));
            let m = idx.rlcp(i, j);
            assert_eq!(m, oracle::lcp_rev(&t, i, j));
            assert!(m <= (n - i + 1).min(j));
        }
    }
}
