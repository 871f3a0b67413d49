//! Pareto fronts (maximal points) under the front promise: front vertices
//! appear in x order. Same pipelines as the upper-hull algorithms with the
//! front crossing in place of the hull bridge.

use crate::baselines::HullChain;
use crate::error::Result;
use crate::geometry::{IndexedPoint, PredicateCounters};
use crate::promise::{det_generic, rand_generic, Schedule};
use crate::slab::ParetoFront;
use crate::HullRng;

/// Deterministic slab recursion for Pareto fronts.
pub fn pareto_det(points: &[IndexedPoint], sched: &Schedule, ctx: &mut PredicateCounters) -> Result<HullChain> {
    det_generic(&ParetoFront::default(), points, sched, ctx)
}

/// Randomized sample-and-filter algorithm for Pareto fronts; groups keep their full fronts.
pub fn pareto_rand(
    points: &[IndexedPoint],
    sched: &Schedule,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<HullChain> {
    rand_generic(&ParetoFront::default(), points, sched, rng, ctx)
}

/// As [`pareto_rand`], but groups keep only the first and last vertex of their front.
///
/// A group left of a line can contribute an interior front vertex to that
/// line's crossing, so this variant may return a wrong front.
pub fn pareto_rand_compressed(
    points: &[IndexedPoint],
    sched: &Schedule,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<HullChain> {
    rand_generic(&ParetoFront { compress: true }, points, sched, rng, ctx)
}
