//! Seeded fuzzing of the general bounds.
//!
//! Randomness comes from ChaCha8 as implemented by `rand_chacha` 0.3, seeded
//! with `seed_from_u64`. Sample `i` draws `n` uniformly from `[4, n_max]`,
//! then includes each pair independently with probability
//! `DENSITIES[i % 3]`, pairs taken in the order `(0,1), (0,2), (1,2), (0,3)...`.
//! Changing any of this changes the corpus, so it is part of the output
//! contract.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{self, GraphStats};
use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::Graph;
use crate::spread;

/// Name of the generator, echoed in CLI output.
pub const GENERATOR: &str = "chacha8/rand_chacha-0.3";

/// Edge probabilities `numerator / 10`, cycled by sample index.
pub const DENSITIES: [u32; 3] = [2, 5, 8];

pub const MIN_ORDER: usize = 4;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with `p = tenths / 10`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, tenths: u32) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_ratio(tenths, 10) {
                g.insert_edge(i, j);
            }
        }
    }
    g
}

/// The `samples` graphs [`verify_bounds_random`] checks, in order.
pub fn corpus(n_min: usize, n_max: usize, samples: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..samples)
        .map(|i| {
            let n = rng.gen_range(n_min..=n_max);
            random_graph(&mut rng, n, DENSITIES[i % DENSITIES.len()])
        })
        .collect()
}

/// One property checked per graph and `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Baseline,
    GapBest,
    Refined,
    RepUpper,
    Complement,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::Baseline, Check::GapBest, Check::Refined, Check::RepUpper, Check::Complement];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Baseline => "sp >= k+2",
            Check::GapBest => "sp >= ceil(gap bound)",
            Check::Refined => "sp >= ceil(refined bound)",
            Check::RepUpper => "sp <= (k+1)rep",
            Check::Complement => "sp(G) = sp(complement)",
        }
    }
}

/// Test hook: shifts the threshold of one check by `shift`, so a harness
/// self-test can confirm that violations are caught and reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tamper {
    pub check: Check,
    pub shift: i128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub sample: usize,
    pub k: usize,
    pub check: Check,
    pub sp: usize,
    /// The threshold (or, for the complement check, the complement's `sp`).
    pub bound: i128,
    pub graph6: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sample {} k={}: {} failed with sp={} against {} on graph6 {}",
            self.sample,
            self.k,
            self.check.as_str(),
            self.sp,
            self.bound,
            self.graph6
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub samples: usize,
    /// Number of `(graph, k)` pairs checked.
    pub cases: u64,
    /// Empty, or the first counterexample found (the run stops there).
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every general bound on a seeded random corpus.
pub fn verify_bounds_random(n_max: usize, k_max: usize, samples: usize, seed: u64) -> Result<VerifyReport> {
    verify_bounds_random_with(n_max, k_max, samples, seed, None)
}

pub fn verify_bounds_random_with(
    n_max: usize,
    k_max: usize,
    samples: usize,
    seed: u64,
    tamper: Option<Tamper>,
) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if n_max < MIN_ORDER {
        return Err(Error::InvalidArgument(format!("n_max must be at least {MIN_ORDER}, got {n_max}")));
    }
    let mut cases = 0;
    for (sample, g) in corpus(MIN_ORDER, n_max, samples, seed).into_iter().enumerate() {
        let complement = g.complement();
        for k in (0..=k_max).take_while(|&k| g.n() >= k + 2) {
            cases += 1;
            if let Some((check, sp, bound)) = check_graph(&g, &complement, k, tamper)? {
                let violation = Violation { sample, k, check, sp, bound, graph6: to_graph6(&g) };
                return Ok(VerifyReport { samples, cases, violations: [violation].into() });
            }
        }
    }
    Ok(VerifyReport { samples, cases, violations: Vec::new() })
}

/// Returns the first failing check as `(check, sp, bound)`.
fn check_graph(g: &Graph, complement: &Graph, k: usize, tamper: Option<Tamper>) -> Result<Option<(Check, usize, i128)>> {
    let sp = spread::sp(g, k)?.value;
    let stats = GraphStats::of(g, k);
    for check in Check::ALL {
        let shift = tamper.filter(|t| t.check == check).map_or(0, |t| t.shift);
        let spi = sp as i128;
        let (bound, ok) = match check {
            Check::Baseline => {
                let b = bounds::baseline_bound(g.n(), k)? as i128 + shift;
                (b, spi >= b)
            }
            Check::GapBest => {
                let b = bounds::ceil(&bounds::gap_bounds(&stats).best) + shift;
                (b, spi >= b)
            }
            Check::Refined => {
                let b = bounds::ceil(&bounds::refined_lower_bound(&stats)) + shift;
                (b, spi >= b)
            }
            Check::RepUpper => {
                let b = bounds::rep_upper_bound(spread::rep(g)?, k) as i128 + shift;
                (b, spi <= b)
            }
            Check::Complement => {
                let b = spread::sp(complement, k)?.value as i128 + shift;
                (b, spi == b)
            }
        };
        if !ok {
            return Ok(Some((check, sp, bound)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible() {
        let a = corpus(4, 12, 20, 9);
        let b = corpus(4, 12, 20, 9);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| (4..=12).contains(&g.n())));
        assert_ne!(a, corpus(4, 12, 20, 10));
    }

    #[test]
    fn small_runs_pass() {
        let report = verify_bounds_random(12, 3, 50, 1).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert!(report.cases >= 50);
        assert!(verify_bounds_random(40, 5, 1, 7).unwrap().passed());
    }

    #[test]
    fn tampering_is_caught() {
        for check in Check::ALL {
            let shift = if check == Check::RepUpper { -1000 } else { 1000 };
            let report = verify_bounds_random_with(10, 2, 5, 3, Some(Tamper { check, shift })).unwrap();
            assert_eq!(report.violations.len(), 1);
            let v = &report.violations[0];
            assert_eq!(v.check, check);
            assert_eq!((v.sample, v.k), (0, 0));
            assert!(crate::formats::parse_graph6(&v.graph6).is_ok());
        }
    }

    #[test]
    fn argument_guards() {
        assert!(matches!(verify_bounds_random(10, 2, 0, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(verify_bounds_random(3, 2, 1, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn fixed_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(check_graph(&k5, &k5.complement(), 0, None).unwrap(), None);
        assert_eq!(spread::sp(&k5, 0).unwrap().value, 5);
        let star = Graph::star(3);
        assert_eq!(check_graph(&star, &star.complement(), 1, None).unwrap(), None);
        assert_eq!(spread::sp(&star.complement(), 1).unwrap().value, 3);
    }
}
