//! Fixed-point localization: exact sums over all `(n+1)!` permutations.
//!
//! Three summation paths share the permutation enumeration here:
//! [`graded`] extracts top-degree intersection numbers, [`kchi`] computes
//! K-theoretic Euler characteristics, and [`inhom`] integrates
//! inhomogeneous classes by interpolation along a line.

pub mod compat;
pub mod graded;
pub mod inhom;
pub mod kchi;
pub mod walker;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matroid::factorial;

pub use graded::GradedProblem;

/// Default seed for generic-point sampling.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Default ground-set limit; `TAUTMAT_GUARDRAIL` overrides it.
pub const DEFAULT_MAX_GROUND: usize = 9;

/// Permutations per work unit. Fixed so that the block decomposition, and
/// with it every fallback decision, is independent of the worker count.
const BLOCK: u64 = 720;

/// Counters for the self-checks the engine performs; the acceptance
/// harness reads them to confirm the checks ran.
#[derive(Debug, Default)]
pub struct Stats {
    pub graded_runs: AtomicU64,
    pub two_point_agreements: AtomicU64,
    pub subdegree_coefficients_checked: AtomicU64,
    pub kchi_runs: AtomicU64,
    pub kchi_verifications: AtomicU64,
    pub inhom_runs: AtomicU64,
    pub inhom_verifications: AtomicU64,
    pub escalations: AtomicU64,
    pub exact_fallback_blocks: AtomicU64,
    pub chi_route_agreements: AtomicU64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StatsSnapshot {
    pub graded_runs: u64,
    pub two_point_agreements: u64,
    pub subdegree_coefficients_checked: u64,
    pub kchi_runs: u64,
    pub kchi_verifications: u64,
    pub inhom_runs: u64,
    pub inhom_verifications: u64,
    pub escalations: u64,
    pub exact_fallback_blocks: u64,
    pub chi_route_agreements: u64,
}

impl Stats {
    pub(crate) fn bump(c: &AtomicU64, by: u64) {
        c.fetch_add(by, Ordering::Relaxed);
    }

    pub fn snapshot(&self) -> StatsSnapshot {
        let g = |c: &AtomicU64| c.load(Ordering::Relaxed);
        StatsSnapshot {
            graded_runs: g(&self.graded_runs),
            two_point_agreements: g(&self.two_point_agreements),
            subdegree_coefficients_checked: g(&self.subdegree_coefficients_checked),
            kchi_runs: g(&self.kchi_runs),
            kchi_verifications: g(&self.kchi_verifications),
            inhom_runs: g(&self.inhom_runs),
            inhom_verifications: g(&self.inhom_verifications),
            escalations: g(&self.escalations),
            exact_fallback_blocks: g(&self.exact_fallback_blocks),
            chi_route_agreements: g(&self.chi_route_agreements),
        }
    }
}

/// Shared configuration and worker pool for localization sums. Cloning
/// shares the pool and the counters.
#[derive(Clone)]
pub struct Engine {
    seed: u64,
    jobs: usize,
    max_ground: usize,
    exact_only: bool,
    stats: Arc<Stats>,
    pool: Arc<rayon::ThreadPool>,
}

impl std::fmt::Debug for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Engine")
            .field("seed", &self.seed)
            .field("jobs", &self.jobs)
            .field("max_ground", &self.max_ground)
            .finish()
    }
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(DEFAULT_SEED, 1)
    }
}

impl Engine {
    /// An engine with `jobs` workers (at least one). The ground-set limit
    /// comes from `TAUTMAT_GUARDRAIL` when set.
    pub fn new(seed: u64, jobs: usize) -> Self {
        let jobs = jobs.max(1);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        Engine {
            seed,
            jobs,
            max_ground: guardrail_from_env().unwrap_or(DEFAULT_MAX_GROUND),
            exact_only: false,
            stats: Arc::new(Stats::default()),
            pool: Arc::new(pool),
        }
    }

    pub fn with_max_ground(mut self, limit: usize) -> Self {
        self.max_ground = limit;
        self
    }

    /// Routes every sum through the rational reference path. Used to
    /// differential-test the fixed-width fast path.
    pub fn exact_only(mut self, on: bool) -> Self {
        self.exact_only = on;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn max_ground(&self) -> usize {
        self.max_ground
    }

    pub(crate) fn counters(&self) -> &Stats {
        &self.stats
    }

    pub fn stats(&self) -> StatsSnapshot {
        self.stats.snapshot()
    }

    pub fn check_ground(&self, n1: usize) -> Result<()> {
        if n1 > self.max_ground {
            Err(Error::GuardrailExceeded {
                size: n1,
                limit: self.max_ground,
            })
        } else {
            Ok(())
        }
    }

    /// A deterministic RNG for the given purpose.
    pub fn rng(&self, label: &str, attempt: u64) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h ^ attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    /// Pairwise-distinct integer coordinates: a shuffle of `0..n1` shifted
    /// by a random offset in `[-n1, n1]`.
    pub fn generic_point(&self, label: &str, attempt: u64, n1: usize) -> Vec<i64> {
        let mut rng = self.rng(label, attempt);
        let mut v: Vec<i64> = (0..n1 as i64).collect();
        v.shuffle(&mut rng);
        let off = rng.gen_range(-(n1 as i64)..=n1 as i64);
        v.iter().map(|x| x + off).collect()
    }

    /// A seeded permutation of `start..start + n1`.
    pub fn weight_direction(&self, label: &str, n1: usize, start: i64) -> Vec<i64> {
        let mut rng = self.rng(label, 0);
        let mut v: Vec<i64> = (start..start + n1 as i64).collect();
        v.shuffle(&mut rng);
        v
    }

    /// Splits the permutations of `{0..n1-1}` into fixed-size lexicographic
    /// ranges and maps `f` over them on the worker pool, returning results
    /// in range order.
    pub(crate) fn map_blocks<T: Send>(
        &self,
        n1: usize,
        f: impl Fn(u64, u64) -> T + Sync + Send,
    ) -> Vec<T> {
        let total = factorial(n1);
        let ranges: Vec<(u64, u64)> = (0..total.div_ceil(BLOCK))
            .map(|b| (b * BLOCK, ((b + 1) * BLOCK).min(total)))
            .collect();
        self.pool
            .install(|| ranges.par_iter().map(|&(lo, hi)| f(lo, hi)).collect())
    }
}

fn guardrail_from_env() -> Option<usize> {
    std::env::var("TAUTMAT_GUARDRAIL").ok()?.trim().parse().ok()
}
