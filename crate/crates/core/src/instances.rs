//! Instance families with ground truth, and the promise verifier.
//!
//! Coordinates of the parabola-based families are scaled by 4 so that every
//! point of the lower-bound construction is an exact integer.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::baselines::{monotone_chain_upper, pareto_staircase};
use crate::error::{HullError, Result};
use crate::geometry::{IndexedPoint, Point, PointSeq, PredicateCounters};
use crate::rng_from_seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Parabola,
    Adversarial,
    Supersequence,
    RandomPromise,
    Sorted,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::Parabola, Family::Adversarial, Family::Supersequence, Family::RandomPromise, Family::Sorted];

    pub fn name(self) -> &'static str {
        match self {
            Family::Parabola => "parabola",
            Family::Adversarial => "adversarial",
            Family::Supersequence => "supersequence",
            Family::RandomPromise => "random-promise",
            Family::Sorted => "sorted",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A bijection of `1..=m`, stored as `[π(1), ..., π(m)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut seen = vec![false; m + 1];
        for &v in &values {
            if v == 0 || v > m || seen[v] {
                return Err(HullError::InvalidPermutation(format!("{values:?} is not a permutation of 1..={m}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m).collect())
    }

    pub fn random(m: usize, seed: u64) -> Self {
        let mut v: Vec<usize> = (1..=m).collect();
        v.shuffle(&mut rng_from_seed(seed));
        Permutation(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `π(j)` for `1 <= j <= len`.
    pub fn at(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct InstanceParams {
    /// Size parameter of the family (the parabola length for the lower-bound families).
    pub n: usize,
    pub pi_seed: Option<u64>,
    pub j: Option<usize>,
    pub fraction: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub seq: PointSeq,
    pub family: Family,
    pub seed: u64,
    /// Indices of the upper hull (which is also the Pareto front for every family here).
    pub truth: Option<Vec<usize>>,
    pub params: InstanceParams,
}

impl Instance {
    /// The sequence the algorithms should consume: deduplicated for supersequences.
    pub fn working_seq(&self) -> Result<PointSeq> {
        match self.family {
            Family::Supersequence => PointSeq::dedup_by_coordinates(self.seq.raw_points()),
            _ => Ok(self.seq.clone()),
        }
    }
}

fn points(v: impl IntoIterator<Item = (i64, i64)>) -> Vec<Point> {
    v.into_iter().map(Point::from).collect()
}

fn parabola_points(n: usize) -> Vec<Point> {
    let n = n as i64;
    points((1..=n).map(|i| (4 * i, 4 * (n * n - i * i))))
}

/// `(4i, 4(n² − i²))` for `i = 1..=n`.
pub fn gen_parabola(n: usize) -> Result<Instance> {
    if n == 0 {
        return Err(HullError::InvalidParameter("n must be at least 1".into()));
    }
    Ok(Instance {
        seq: PointSeq::new(parabola_points(n))?,
        family: Family::Parabola,
        seed: 0,
        truth: Some((1..=n).collect()),
        params: InstanceParams { n, ..Default::default() },
    })
}

fn lower_bound_points(n: usize, pi: &Permutation, j: usize) -> Result<(Vec<Point>, Vec<usize>)> {
    if n < 2 {
        return Err(HullError::InvalidParameter("n must be at least 2".into()));
    }
    if pi.len() != n - 1 {
        return Err(HullError::InvalidPermutation(format!(
            "expected a permutation of 1..={}, got length {}",
            n - 1,
            pi.len()
        )));
    }
    Permutation::new(pi.0.clone())?;
    if j == 0 || j > n {
        return Err(HullError::InvalidParameter(format!("j must lie in 1..={n}")));
    }
    let nn = (n * n) as i64;
    let mut pts = parabola_points(n);
    for m in 1..n {
        let p = pi.at(m) as i64;
        let y = if m == j { 4 * nn - (2 * p + 1) * (2 * p + 1) } else { 4 * nn - 2 * ((p + 1) * (p + 1) + p * p) - 1 };
        pts.push(Point::new(4 * p + 2, y));
    }
    let mut truth: Vec<usize> = (1..=n).collect();
    if j < n {
        truth.insert(pi.at(j), n + j);
    }
    Ok((pts, truth))
}

/// Parabola followed by one point under each parabola edge, in the order
/// given by `pi`; for `j < n` the `j`-th of them is lifted onto the hull.
pub fn gen_adversarial(n: usize, pi: &Permutation, j: usize) -> Result<Instance> {
    let (pts, truth) = lower_bound_points(n, pi, j)?;
    Ok(Instance {
        seq: PointSeq::new(pts)?,
        family: Family::Adversarial,
        seed: 0,
        truth: Some(truth),
        params: InstanceParams { n, j: Some(j), ..Default::default() },
    })
}

/// The adversarial sequence followed by a second copy of the parabola.
/// Contains exact duplicates; the truth refers to the deduplicated sequence.
pub fn gen_supersequence(n: usize, pi: &Permutation, j: usize) -> Result<Instance> {
    let (mut pts, truth) = lower_bound_points(n, pi, j)?;
    pts.extend(parabola_points(n));
    Ok(Instance {
        seq: PointSeq::from_points_unchecked(pts)?,
        family: Family::Supersequence,
        seed: 0,
        truth: Some(truth),
        params: InstanceParams { n, j: Some(j), ..Default::default() },
    })
}

/// `⌈fraction·n⌉` vertices of a concave arc in x order, with the remaining
/// points below the arc (and dominated by it) interleaved at random.
pub fn gen_random_promise(n: usize, fraction: f64, seed: u64) -> Result<Instance> {
    if n == 0 {
        return Err(HullError::InvalidParameter("n must be at least 1".into()));
    }
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(HullError::InvalidParameter(format!("hull fraction {fraction} outside (0, 1]")));
    }
    let params = InstanceParams { n, fraction: Some(fraction), ..Default::default() };
    if n == 1 {
        return Ok(Instance {
            seq: PointSeq::new(vec![Point::new(0, 0)])?,
            family: Family::RandomPromise,
            seed,
            truth: Some(vec![1]),
            params,
        });
    }
    let mut rng = rng_from_seed(seed);
    let h = ((fraction * n as f64).ceil() as usize).clamp(2, n);
    let w = 4 * n.div_ceil(h - 1) as i64 + 4;
    let top = 2 * (h as i64) * (h as i64);
    let arc: Vec<(i64, i64)> = (0..h as i64).map(|k| (w * k, top - 2 * k * k)).collect();

    // interior x: distinct non-arc abscissae strictly inside some gap
    let slots = (h - 1) * (w as usize - 1);
    let picks = rand::seq::index::sample(&mut rng, slots, n - h);
    let depth = 8 * n as i64;
    let mut used_y = HashSet::new();
    let mut inner: Vec<(i64, i64)> = Vec::with_capacity(n - h);
    for s in picks.iter() {
        let gap = s / (w as usize - 1);
        let x = arc[gap].0 + (s % (w as usize - 1)) as i64 + 1;
        let ceiling = arc[gap + 1].1;
        let y = loop {
            let y = ceiling - 1 - 2 * rng.random_range(0..depth);
            if used_y.insert(y) {
                break y;
            }
        };
        inner.push((x, y));
    }
    inner.shuffle(&mut rng);

    let mut hull_slot = vec![false; n];
    for i in rand::seq::index::sample(&mut rng, n, h).iter() {
        hull_slot[i] = true;
    }
    let (mut a, mut b) = (arc.into_iter(), inner.into_iter());
    let mut pts = Vec::with_capacity(n);
    let mut truth = Vec::with_capacity(h);
    for (i, &is_hull) in hull_slot.iter().enumerate() {
        if is_hull {
            pts.push(a.next().unwrap());
            truth.push(i + 1);
        } else {
            pts.push(b.next().unwrap());
        }
    }
    Ok(Instance { seq: PointSeq::new(points(pts))?, family: Family::RandomPromise, seed, truth: Some(truth), params })
}

/// Random points listed in x order; the promise holds trivially.
pub fn gen_sorted(n: usize, seed: u64) -> Result<Instance> {
    if n == 0 {
        return Err(HullError::InvalidParameter("n must be at least 1".into()));
    }
    let mut rng = rng_from_seed(seed);
    let ys = rand::seq::index::sample(&mut rng, 8 * n, n);
    let seq = PointSeq::new(points(ys.iter().enumerate().map(|(i, y)| (4 * i as i64, y as i64))))?;
    let mut ctx = PredicateCounters::new();
    let truth = monotone_chain_upper(&seq, &mut ctx)?.indices();
    Ok(Instance {
        seq,
        family: Family::Sorted,
        seed,
        truth: Some(truth),
        params: InstanceParams { n, ..Default::default() },
    })
}

/// Generates a family member. `pi_seed` and `j` apply to the lower-bound
/// families (defaults: seed 0 and `j = n` or `j = 1` for supersequences;
/// `pi_seed = 0` is the identity permutation),
/// `fraction` to random-promise (default 0.1).
pub fn generate(
    family: Family,
    n: usize,
    seed: u64,
    pi_seed: Option<u64>,
    j: Option<usize>,
    fraction: Option<f64>,
) -> Result<Instance> {
    let mut inst = match family {
        Family::Parabola => gen_parabola(n)?,
        Family::Adversarial | Family::Supersequence => {
            let pi = match pi_seed.unwrap_or(0) {
                0 => Permutation::identity(n.saturating_sub(1)),
                s => Permutation::random(n.saturating_sub(1), s),
            };
            let mut inst = if family == Family::Adversarial {
                gen_adversarial(n, &pi, j.unwrap_or(n))?
            } else {
                gen_supersequence(n, &pi, j.unwrap_or(1))?
            };
            inst.params.pi_seed = Some(pi_seed.unwrap_or(0));
            inst
        }
        Family::RandomPromise => gen_random_promise(n, fraction.unwrap_or(0.1), seed)?,
        Family::Sorted => gen_sorted(n, seed)?,
    };
    inst.seed = seed;
    Ok(inst)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PromiseMode {
    Upper,
    Full,
    Pareto,
}

fn increasing_by_index(mut vertices: Vec<IndexedPoint>) -> bool {
    vertices.sort_unstable_by_key(|v| v.index);
    vertices.windows(2).all(|w| w[0].x() < w[1].x())
}

/// Whether the chain vertices (upper hull, full hull or Pareto front) appear
/// in x order. Costs a sort.
pub fn verify_promise(points: &[IndexedPoint], mode: PromiseMode) -> Result<bool> {
    let mut ctx = PredicateCounters::new();
    let vertices = match mode {
        PromiseMode::Upper => monotone_chain_upper(points, &mut ctx)?.vertices,
        PromiseMode::Pareto => pareto_staircase(points, &mut ctx)?.vertices,
        PromiseMode::Full => {
            let mut v = monotone_chain_upper(points, &mut ctx)?.vertices;
            let flipped: Vec<IndexedPoint> =
                points.iter().map(|p| IndexedPoint { point: Point::new(-p.x(), -p.y()), index: p.index }).collect();
            let lower = monotone_chain_upper(&flipped, &mut ctx)?.vertices;
            let upper_ids: HashSet<usize> = v.iter().map(|p| p.index).collect();
            v.extend(
                lower
                    .iter()
                    .filter(|p| !upper_ids.contains(&p.index))
                    .map(|p| IndexedPoint { point: Point::new(-p.x(), -p.y()), index: p.index }),
            );
            v
        }
    };
    Ok(increasing_by_index(vertices))
}
