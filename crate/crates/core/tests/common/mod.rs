#![allow(dead_code)]

use gapped::Text;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn text(s: &str) -> Text {
    Text::from_bytes(s.as_bytes()).unwrap()
}

pub fn random_word(rng: &mut StdRng, n: usize, sigma: u32) -> Text {
    let raw: Vec<u32> = (0..n).map(|_| rng.random_range(0..sigma)).collect();
    Text::from_symbols(&raw).unwrap()
}

/// Every binary word of length `n`.
pub fn binary_words(n: usize) -> impl Iterator<Item = Text> {
    (0..1u32 << n).map(move |m| {
        let raw: Vec<u32> = (0..n).map(|b| (m >> b) & 1).collect();
        Text::from_symbols(&raw).unwrap()
    })
}

pub fn random_gaps(rng: &mut StdRng, n: usize) -> Vec<usize> {
    (0..n).map(|_| rng.random_range(1..=n)).collect()
}
