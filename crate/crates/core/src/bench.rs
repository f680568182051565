//! Input generators and timing for the `bench` subcommand.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use crate::cli::fast_compute;
use crate::error::Result;
use crate::oracle::{OracleParams, ProblemId};
use crate::{build_index, Alpha, Text};

/// Input families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Uniform random binary word.
    Random,
    /// Prefix of the Fibonacci word.
    Fibonacci,
    /// Prefix of `(aab)^∞`.
    Adversarial,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Random, Family::Fibonacci, Family::Adversarial];

    pub fn name(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Fibonacci => "fibonacci",
            Family::Adversarial => "aab-power",
        }
    }
}

pub fn random_binary(n: usize, seed: u64) -> Text {
    let mut rng = StdRng::seed_from_u64(seed);
    let raw: Vec<u8> = (0..n).map(|_| if rng.random_bool(0.5) { b'b' } else { b'a' }).collect();
    Text::from_bytes(&raw).expect("n > 0")
}

pub fn fibonacci(n: usize) -> Text {
    let (mut a, mut b) = (b"a".to_vec(), b"ab".to_vec());
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = std::mem::replace(&mut b, next);
    }
    b.truncate(n);
    Text::from_bytes(&b).expect("n > 0")
}

pub fn aab_power(n: usize) -> Text {
    let raw: Vec<u8> = (0..n).map(|i| if i % 3 == 2 { b'b' } else { b'a' }).collect();
    Text::from_bytes(&raw).expect("n > 0")
}

pub fn generate(family: Family, n: usize, seed: u64) -> Text {
    match family {
        Family::Random => random_binary(n, seed),
        Family::Fibonacci => fibonacci(n),
        Family::Adversarial => aab_power(n),
    }
}

/// Parameters used for timing: gaps in `[n/16, n/16 + n/4)`, positional
/// gaps drawn from `[1, n/8]`, and `α = 2`.
pub fn bench_params(n: usize, seed: u64) -> OracleParams {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x9e37_79b9);
    let g = n / 16;
    OracleParams {
        g: Some(g),
        big_g: Some((g + (n / 4).max(1)).min(n)),
        gaps: Some((0..n).map(|_| rng.random_range(1..=(n / 8).max(1))).collect()),
        alpha: Alpha::integer(2).ok().filter(|a| a.at_most(n)).or(Alpha::integer(1).ok()),
        square_mode: None,
    }
}

/// Problems with their largest benchmarked length; the α arrays rely on a
/// quadratic enumeration.
pub const PROBLEMS: [(&str, ProblemId, usize); 7] = [
    ("1a", ProblemId::P1a, usize::MAX),
    ("1b", ProblemId::P1b, usize::MAX),
    ("2a", ProblemId::P2a, usize::MAX),
    ("2b", ProblemId::P2b, usize::MAX),
    ("3a", ProblemId::P3a, 1 << 13),
    ("3b", ProblemId::P3b, 1 << 13),
    ("runs", ProblemId::Runs, usize::MAX),
];

#[derive(Debug, Clone, serde::Serialize)]
pub struct BenchRow {
    pub family: &'static str,
    pub n: usize,
    pub problem: &'static str,
    /// Seconds including index construction.
    pub seconds: f64,
}

/// Seconds for one problem on one text, index construction included.
pub fn time_problem(problem: ProblemId, t: &Text, params: &OracleParams) -> Result<f64> {
    let start = Instant::now();
    let idx = build_index(t);
    std::hint::black_box(fast_compute(problem, &idx, params)?);
    Ok(start.elapsed().as_secs_f64())
}

pub fn run_bench(sizes: &[usize], seed: u64) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for family in Family::ALL {
        for &n in sizes.iter().filter(|&&n| n > 0) {
            let t = generate(family, n, seed);
            let params = bench_params(n, seed);
            for (name, problem, max_n) in PROBLEMS {
                if n > max_n {
                    continue;
                }
                let seconds = time_problem(problem, &t, &params)?;
                rows.push(BenchRow { family: family.name(), n, problem: name, seconds });
            }
        }
    }
    Ok(rows)
}
