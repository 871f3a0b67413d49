//! Benchmark grid: every algorithm on every (family, size, rep) instance,
//! one [`BenchRow`] per cell in grid order.

use std::time::Instant;

use crate::baselines::{brute_force_pareto, pareto_staircase, HullChain};
use crate::error::{HullError, Result};
use crate::format::BenchRow;
use crate::geometry::{IndexedPoint, PredicateCounters};
use crate::instances::{generate, Family};
use crate::pareto::{pareto_det, pareto_rand};
use crate::promise::{upper_hull, HullAlgo, Schedule};
use crate::{rng_from_seed, HullRng};

/// Anything `bench` and `hull` can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Hull(HullAlgo),
    ParetoDet,
    ParetoRand,
    ParetoStaircase,
    ParetoBrute,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Hull(a) => a.name(),
            Algo::ParetoDet => "pareto-det",
            Algo::ParetoRand => "pareto-rand",
            Algo::ParetoStaircase => "pareto-staircase",
            Algo::ParetoBrute => "pareto-brute",
        }
    }

    pub fn from_name(s: &str) -> Option<Algo> {
        match s {
            "pareto-det" => Some(Algo::ParetoDet),
            "pareto-rand" => Some(Algo::ParetoRand),
            "pareto-staircase" => Some(Algo::ParetoStaircase),
            "pareto-brute" => Some(Algo::ParetoBrute),
            _ => HullAlgo::from_name(s).map(Algo::Hull),
        }
    }

    /// The front counterpart of an upper-hull algorithm, if there is one.
    pub fn for_pareto(self) -> Option<Algo> {
        match self {
            Algo::Hull(HullAlgo::Det) | Algo::ParetoDet => Some(Algo::ParetoDet),
            Algo::Hull(HullAlgo::Rand) | Algo::ParetoRand => Some(Algo::ParetoRand),
            Algo::Hull(HullAlgo::Monotone) | Algo::ParetoStaircase => Some(Algo::ParetoStaircase),
            Algo::Hull(HullAlgo::Brute) | Algo::ParetoBrute => Some(Algo::ParetoBrute),
            Algo::Hull(_) => None,
        }
    }

    pub fn is_pareto(self) -> bool {
        !matches!(self, Algo::Hull(_))
    }

    pub fn run(
        self,
        points: &[IndexedPoint],
        sched: &Schedule,
        rng: &mut HullRng,
        ctx: &mut PredicateCounters,
    ) -> Result<HullChain> {
        match self {
            Algo::Hull(a) => upper_hull(a, points, sched, rng, ctx),
            Algo::ParetoDet => pareto_det(points, sched, ctx),
            Algo::ParetoRand => pareto_rand(points, sched, rng, ctx),
            Algo::ParetoStaircase => pareto_staircase(points, ctx),
            Algo::ParetoBrute => brute_force_pareto(points),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algos: Vec<Algo>,
    pub families: Vec<Family>,
    pub sizes: Vec<usize>,
    pub reps: usize,
    /// Instance `rep` uses seed `seed + rep`, for both the generator and the algorithm.
    pub seed: u64,
    /// Hull fraction for random-promise instances.
    pub fraction: Option<f64>,
    /// Worker threads for independent cells; `None` uses the pool default.
    pub threads: Option<usize>,
    pub schedule: Schedule,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            algos: vec![Algo::Hull(HullAlgo::Det)],
            families: vec![Family::RandomPromise],
            sizes: vec![1 << 12],
            reps: 1,
            seed: 0,
            fraction: None,
            threads: None,
            schedule: Schedule::sequential(),
        }
    }
}

fn run_cell(algo: Algo, family: Family, seed: u64, points: &[IndexedPoint], sched: &Schedule) -> Result<BenchRow> {
    let mut ctx = PredicateCounters::new();
    let mut rng = rng_from_seed(seed);
    let start = Instant::now();
    let chain = algo.run(points, sched, &mut rng, &mut ctx)?;
    let wall_ns = start.elapsed().as_nanos();
    Ok(BenchRow {
        family: family.name().to_string(),
        algo: algo.name().to_string(),
        n: points.len(),
        seed,
        wall_ns,
        coord_cmps: ctx.coord_cmps,
        orientation_tests: ctx.orientation_tests,
        hull_size: chain.len(),
    })
}

/// Runs the grid. Rows come back ordered by family, size, rep, then algorithm,
/// whatever the thread count.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    if cfg.sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(HullError::InvalidParameter("sizes must be ascending".into()));
    }
    let mut instances = Vec::new();
    for &family in &cfg.families {
        for &n in &cfg.sizes {
            for rep in 0..cfg.reps {
                let seed = cfg.seed.wrapping_add(rep as u64);
                let inst = generate(family, n, seed, Some(seed), None, cfg.fraction)?;
                instances.push((family, seed, inst.working_seq()?));
            }
        }
    }
    let cells: Vec<(usize, Algo)> = (0..instances.len()).flat_map(|i| cfg.algos.iter().map(move |&a| (i, a))).collect();
    let run = |&(i, algo): &(usize, Algo)| {
        let (family, seed, ref seq) = instances[i];
        run_cell(algo, family, seed, seq, &cfg.schedule)
    };
    run_cells(&cells, cfg.threads, run).into_iter().collect()
}

#[cfg(feature = "parallel")]
fn run_cells<C: Sync, R: Send>(cells: &[C], threads: Option<usize>, f: impl Fn(&C) -> R + Sync) -> Vec<R> {
    use rayon::prelude::*;
    if threads == Some(1) {
        return cells.iter().map(f).collect();
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    match builder.build() {
        Ok(pool) => pool.install(|| cells.par_iter().map(&f).collect()),
        Err(_) => cells.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_cells<C: Sync, R: Send>(cells: &[C], _threads: Option<usize>, f: impl Fn(&C) -> R + Sync) -> Vec<R> {
    cells.iter().map(f).collect()
}
