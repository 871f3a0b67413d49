//! Upper hulls and Pareto fronts of point sequences whose hull vertices
//! already appear in x order.
//!
//! All predicates are exact on `i64` coordinates below `2^62` in magnitude and
//! tally their work in a [`PredicateCounters`].
//!
//! ```
//! use promise_hull::{upper_hull_det, Point, PointSeq, PredicateCounters, Schedule};
//!
//! let seq = PointSeq::new(vec![Point::new(0, 0), Point::new(4, 4), Point::new(2, 1), Point::new(8, -1)])?;
//! let mut ctx = PredicateCounters::new();
//! let hull = upper_hull_det(&seq, &Schedule::default(), &mut ctx)?;
//! assert_eq!(hull.indices(), vec![1, 2, 4]);
//! # Ok::<(), promise_hull::HullError>(())
//! ```

pub mod baselines;
pub mod bench;
pub mod bridge;
pub mod error;
pub mod format;
pub mod geometry;
pub mod instances;
mod par;
pub mod pareto;
pub mod promise;
pub mod select;
pub mod slab;

pub use baselines::{
    brute_force_pareto, brute_force_upper, graham_presorted_upper, jarvis_upper, monotone_chain_upper,
    pareto_staircase, HullChain,
};
pub use bench::{run_bench, Algo, BenchConfig};
pub use bridge::{bridge_mixed, bridge_pareto, bridge_upper, Bridge, Crossing, Group};
pub use error::{HullError, Result};
pub use format::{BenchRow, FormatError, InstanceFile};
pub use geometry::{IndexedPoint, Orientation, Point, PointSeq, PredicateCounters};
pub use instances::{verify_promise, Family, Instance, Permutation, PromiseMode};
pub use pareto::{pareto_det, pareto_rand};
pub use promise::{
    convex_hull_full, line_guided_bridges, upper_hull, upper_hull_det, upper_hull_output_sensitive, upper_hull_rand,
    HullAlgo, Schedule,
};

/// Seeded generator used by the randomized algorithms and instance families.
pub type HullRng = rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> HullRng {
    use rand::SeedableRng;
    HullRng::seed_from_u64(seed)
}
