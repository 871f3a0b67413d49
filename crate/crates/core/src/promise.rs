//! Upper hulls of sequences satisfying the hull promise: the deterministic
//! slab recursion, the line-guided bridge recursion, the randomized
//! sample-and-filter algorithm, its output-sensitive wrapper and full hulls.

use crate::baselines::{brute_force_upper, jarvis_upper, monotone_chain_upper, HullChain};
use crate::bridge::{Crossing, Group};
use crate::error::{HullError, Result};
use crate::geometry::{cmp_lines, IndexedPoint, Point, PredicateCounters};
use crate::par;
use crate::slab::{
    generate_lines, locate_by_windows, refine_lines_guided, safe_filter, scan_bridges, slab_windows, BridgeScan,
    Frontier, LineGeneration, SlabWindow, UpperHull, VerticalLineSet,
};
use crate::HullRng;

/// Line lists at most this long are answered directly, one crossing per line.
pub const GUIDED_BASE: usize = 8;

fn log2f(n: usize) -> f64 {
    (n.max(1) as f64).log2()
}

pub(crate) fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

fn pow2(e: f64) -> usize {
    1usize << (e.ceil() as u32).min(62)
}

/// Parameter rules. Fields left `None` follow the default growth rules.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    pub b: Option<usize>,
    pub lambda: Option<usize>,
    pub g: Option<usize>,
    /// Run independent slabs on the thread pool (needs the `parallel` feature).
    pub parallel: bool,
    /// Subproblems smaller than this stay on the calling thread.
    pub parallel_cutoff: usize,
    /// The output-sensitive wrapper stops guessing once a guess exceeds `n^guess_exponent`.
    pub guess_exponent: f64,
}

impl Default for Schedule {
    fn default() -> Self {
        Schedule { b: None, lambda: None, g: None, parallel: true, parallel_cutoff: 1 << 14, guess_exponent: 0.01 }
    }
}

impl Schedule {
    pub fn sequential() -> Self {
        Schedule { parallel: false, ..Schedule::default() }
    }

    /// Slab count of the deterministic recursion, `2^⌈√log n⌉`.
    pub fn slab_count(&self, n: usize) -> usize {
        self.b.unwrap_or_else(|| pow2(log2f(n).sqrt())).max(2)
    }

    /// Number of sampled lines, `⌈n / ⌈log n⌉²⌉`.
    pub fn sample_size(&self, n: usize) -> usize {
        let l = ceil_log2(n).max(1);
        self.lambda.unwrap_or_else(|| n.div_ceil(l * l)).clamp(1, n.max(1))
    }

    /// Group size, `⌈log n⌉`.
    pub fn group_size(&self, n: usize) -> usize {
        self.g.unwrap_or_else(|| ceil_log2(n)).max(1)
    }

    /// Slab count of the guided recursion on `lambda` lines.
    pub fn guided_slab_count(lambda: usize) -> usize {
        let ll = log2f(lambda.max(4)).log2();
        let k = ll.sqrt().ceil().max(1.0);
        let b = pow2(log2f(lambda).powf(k / (k + 1.0)));
        b.min((lambda / 4).max(2))
    }

    fn parallel_for(&self, n: usize) -> bool {
        self.parallel && n >= self.parallel_cutoff
    }
}

fn concat_dedup(parts: impl IntoIterator<Item = Vec<IndexedPoint>>) -> Vec<IndexedPoint> {
    let mut out: Vec<IndexedPoint> = Vec::new();
    for part in parts {
        for v in part {
            if out.last().is_none_or(|l| l.index != v.index) {
                out.push(v);
            }
        }
    }
    out
}

/// Runs `f` on each nonempty set with its own counters, then merges the counters in order.
fn finish_sets<T, F>(
    sets: Vec<Vec<IndexedPoint>>,
    parallel: bool,
    ctx: &mut PredicateCounters,
    f: F,
) -> Result<Vec<Vec<T>>>
where
    T: Send,
    F: Fn(&[IndexedPoint], &mut PredicateCounters) -> Result<Vec<T>> + Sync + Send,
{
    let work: Vec<Vec<IndexedPoint>> = sets.into_iter().filter(|s| !s.is_empty()).collect();
    let results = par::map(work, parallel, |s| {
        let mut local = PredicateCounters::new();
        let r = f(&s, &mut local);
        (r, local)
    });
    let mut out = Vec::with_capacity(results.len());
    for (r, local) in results {
        ctx.merge(&local);
        out.push(r?);
    }
    Ok(out)
}

/// One level of the deterministic recursion.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub generation: LineGeneration,
    pub scan: BridgeScan,
    pub windows: Vec<SlabWindow>,
    /// Safe points of every slab.
    pub safe: Vec<Vec<IndexedPoint>>,
}

impl Decomposition {
    pub fn safe_total(&self) -> usize {
        self.safe.iter().map(Vec::len).sum()
    }
}

/// Line generation, bridge scan and safe filtering on one point set.
pub fn decompose<F: Frontier + ?Sized>(
    frontier: &F,
    points: &[IndexedPoint],
    b: usize,
    ctx: &mut PredicateCounters,
) -> Result<Decomposition> {
    let generation = generate_lines(points, b, ctx);
    let scan = scan_bridges(frontier, &generation.slabs, &generation.lines, ctx)?;
    let windows = slab_windows(&scan.crossings, generation.lines.xs());
    let safe = safe_filter(&generation.slabs, &windows, ctx);
    Ok(Decomposition { generation, scan, windows, safe })
}

fn det_rec<F: Frontier + ?Sized>(
    frontier: &F,
    points: &[IndexedPoint],
    b: usize,
    sched: &Schedule,
    ctx: &mut PredicateCounters,
) -> Result<Vec<IndexedPoint>> {
    let n = points.len();
    if n <= b {
        return frontier.finish(points, ctx);
    }
    let d = decompose(frontier, points, b, ctx)?;
    if d.generation.slabs.iter().any(|s| s.len() == n) {
        return frontier.finish(points, ctx);
    }
    let parts = finish_sets(d.safe, sched.parallel_for(n), ctx, |s, c| det_rec(frontier, s, b, sched, c))?;
    Ok(concat_dedup(parts))
}

pub(crate) fn det_generic<F: Frontier + ?Sized>(
    frontier: &F,
    points: &[IndexedPoint],
    sched: &Schedule,
    ctx: &mut PredicateCounters,
) -> Result<HullChain> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let b = sched.slab_count(points.len());
    Ok(HullChain::new(det_rec(frontier, points, b, sched, ctx)?))
}

/// Deterministic slab recursion. Matches [`monotone_chain_upper`] whenever
/// the hull vertices of `points` appear in x order; the promise is not checked.
pub fn upper_hull_det(points: &[IndexedPoint], sched: &Schedule, ctx: &mut PredicateCounters) -> Result<HullChain> {
    det_generic(&UpperHull, points, sched, ctx)
}

#[derive(Debug, Clone, Copy)]
struct ChainRef<'a> {
    hull: &'a [IndexedPoint],
    /// Slab of the current line list holding the chain.
    slab: usize,
}

fn guided_base<F: Frontier + ?Sized>(
    frontier: &F,
    l0: &[i64],
    loose: &[IndexedPoint],
    chains: &[ChainRef],
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<Vec<Crossing>> {
    let refs: Vec<&[IndexedPoint]> = chains.iter().map(|c| c.hull).collect();
    l0.iter().map(|&x0| frontier.mixed_crossing(loose, &refs, x0, rng, ctx)).collect()
}

fn guided<F: Frontier + ?Sized>(
    frontier: &F,
    l0: &[i64],
    loose: &[IndexedPoint],
    chains: &[ChainRef],
    g: usize,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<Vec<Crossing>> {
    let lam = l0.len();
    if lam <= GUIDED_BASE {
        return guided_base(frontier, l0, loose, chains, rng, ctx);
    }
    let r = refine_lines_guided(loose, l0, Schedule::guided_slab_count(lam), ctx);
    if r.lines.len() >= lam {
        return guided_base(frontier, l0, loose, chains, rng, ctx);
    }
    let lx: Vec<i64> = r.lines.iter().map(|&i| l0[i]).collect();
    let coarse = |j: usize| r.lines.partition_point(|&i| i < j);

    // Crossings of the kept lines: bad points loose, everything else grouped.
    let mut new_hulls = Vec::new();
    for (s, pts) in r.good.iter().enumerate() {
        for chunk in pts.chunks(g) {
            new_hulls.push((frontier.group_chain(chunk, ctx)?, s));
        }
    }
    let mut refs: Vec<ChainRef> = chains.iter().map(|c| ChainRef { hull: c.hull, slab: coarse(c.slab) }).collect();
    refs.extend(new_hulls.iter().map(|(h, s)| ChainRef { hull: h, slab: *s }));
    let outer = guided(frontier, &lx, &r.bad_points, &refs, g, rng, ctx)?;
    drop(refs);
    drop(new_hulls);

    let windows = slab_windows(&outer, &lx);
    let loose_by_slab = locate_by_windows(loose, &windows, ctx);
    let mut chains_by_slab: Vec<Vec<ChainRef>> = vec![Vec::new(); lx.len() + 1];
    for c in chains {
        let s = coarse(c.slab);
        let sub = windows[s].x_slice(c.hull, ctx);
        if !sub.is_empty() {
            chains_by_slab[s].push(ChainRef { hull: sub, slab: c.slab });
        }
    }

    let mut out = vec![Crossing::NothingRight; lam];
    for (k, &i) in r.lines.iter().enumerate() {
        out[i] = outer[k];
    }
    for s in 0..=lx.len() {
        let first = if s == 0 { 0 } else { r.lines[s - 1] + 1 };
        let end = if s == lx.len() { lam } else { r.lines[s] };
        if first >= end {
            continue;
        }
        let left = (s > 0).then(|| outer[s - 1]);
        let right = (s < lx.len()).then(|| outer[s]);
        if let Some(Crossing::NothingRight) = left {
            out[first..end].fill(Crossing::NothingRight);
            continue;
        }
        if let Some(Crossing::NothingLeft) = right {
            out[first..end].fill(Crossing::NothingLeft);
            continue;
        }
        let lo_v = left.and_then(|c| c.edge()).map(|b| b.right);
        let hi_v = right.and_then(|c| c.edge()).map(|b| b.left);
        // Lines at or left of the first chain vertex share the left crossing,
        // lines right of the last one share the right crossing.
        let a = first
            + l0[first..end]
                .partition_point(|&x| lo_v.is_some_and(|v| crate::geometry::cmp_x_line(&v, x, ctx).is_ge()));
        let c = first
            + l0[first..end].partition_point(|&x| hi_v.is_none_or(|v| crate::geometry::cmp_x_line(&v, x, ctx).is_ge()));
        let c = c.max(a);
        if let Some(lc) = left {
            out[first..a].fill(lc);
        }
        if let Some(rc) = right {
            out[c..end].fill(rc);
        }
        if a < c {
            let sub_chains: Vec<ChainRef> = chains_by_slab[s]
                .iter()
                .map(|ch| ChainRef { hull: ch.hull, slab: ch.slab.saturating_sub(a).min(c - a) })
                .collect();
            let sub = guided(frontier, &l0[a..c], &loose_by_slab[s], &sub_chains, g, rng, ctx)?;
            out[a..c].copy_from_slice(&sub);
        }
    }
    Ok(out)
}

/// Crossings of every line of `l0` with the chain of `points` together with
/// `groups`. Each group must lie inside slab `group.slab` of `l0`, and the
/// union must satisfy the promise.
pub fn line_guided_bridges(
    l0: &VerticalLineSet,
    points: &[IndexedPoint],
    groups: &[Group],
    sched: &Schedule,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<Vec<Crossing>> {
    line_guided_generic(&UpperHull, l0, points, groups, sched, rng, ctx)
}

pub(crate) fn line_guided_generic<F: Frontier + ?Sized>(
    frontier: &F,
    l0: &VerticalLineSet,
    points: &[IndexedPoint],
    groups: &[Group],
    sched: &Schedule,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<Vec<Crossing>> {
    for g in groups {
        if g.slab > l0.len() || g.hull.is_empty() {
            return Err(HullError::InvalidParameter(format!("group in slab {} has no chain or no such slab", g.slab)));
        }
    }
    let total = points.len() + groups.iter().map(|g| g.members.len()).sum::<usize>();
    let chains: Vec<ChainRef> = groups.iter().map(|g| ChainRef { hull: &g.hull, slab: g.slab }).collect();
    guided(frontier, l0.xs(), points, &chains, sched.group_size(total), rng, ctx)
}

fn sample_lines(points: &[IndexedPoint], lambda: usize, rng: &mut HullRng, ctx: &mut PredicateCounters) -> Vec<i64> {
    let lambda = lambda.clamp(1, points.len());
    let picks = rand::seq::index::sample(rng, points.len(), lambda);
    let mut xs: Vec<i64> = picks.iter().map(|i| points[i].x()).collect();
    xs.sort_unstable_by(|a, b| cmp_lines(*a, *b, ctx));
    xs.dedup();
    xs
}

/// Samples lines, computes their crossings and returns the safe set of every slab.
fn sampled_safe_sets<F: Frontier + ?Sized>(
    frontier: &F,
    points: &[IndexedPoint],
    lambda: usize,
    g: usize,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<Vec<Vec<IndexedPoint>>> {
    let l0 = sample_lines(points, lambda, rng, ctx);
    let crossings = guided(frontier, &l0, points, &[], g, rng, ctx)?;
    let windows = slab_windows(&crossings, &l0);
    Ok(locate_by_windows(points, &windows, ctx))
}

pub(crate) fn rand_generic<F: Frontier + ?Sized>(
    frontier: &F,
    points: &[IndexedPoint],
    sched: &Schedule,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<HullChain> {
    let n = points.len();
    if n == 0 {
        return Err(HullError::EmptyInput);
    }
    let sets = sampled_safe_sets(frontier, points, sched.sample_size(n), sched.group_size(n), rng, ctx)?;
    let parts = finish_sets(sets, sched.parallel_for(n), ctx, |s, c| frontier.finish(s, c))?;
    Ok(HullChain::new(concat_dedup(parts)))
}

/// Randomized sample-and-filter algorithm. Output is a function of the
/// input and the generator state only.
pub fn upper_hull_rand(
    points: &[IndexedPoint],
    sched: &Schedule,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<HullChain> {
    rand_generic(&UpperHull, points, sched, rng, ctx)
}

/// Hull-size guesses tried by the output-sensitive wrapper.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GuessTrace {
    pub guesses: Vec<usize>,
    /// The last guess failed and the randomized algorithm produced the result.
    pub defaulted: bool,
}

/// Output-sensitive wrapper: guesses `h = 2^(2^i)`, samples `h²` lines and
/// finishes each slab by gift wrapping with budget `h`.
pub fn upper_hull_output_sensitive(
    points: &[IndexedPoint],
    sched: &Schedule,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<HullChain> {
    upper_hull_output_sensitive_traced(points, sched, rng, ctx).map(|r| r.0)
}

pub fn upper_hull_output_sensitive_traced(
    points: &[IndexedPoint],
    sched: &Schedule,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<(HullChain, GuessTrace)> {
    let n = points.len();
    if n == 0 {
        return Err(HullError::EmptyInput);
    }
    let limit = (n as f64).powf(sched.guess_exponent);
    let mut trace = GuessTrace::default();
    for i in 1u32.. {
        let h = if i < 6 { 1usize << (1u32 << i) } else { usize::MAX };
        trace.guesses.push(h);
        let lambda = h.saturating_mul(h).min(n);
        let g = ceil_log2(h).max(1);
        let sets = sampled_safe_sets(&UpperHull, points, lambda, g, rng, ctx)?;
        let attempt = finish_sets(sets, sched.parallel_for(n), ctx, |s, c| Ok(jarvis_upper(s, Some(h), c)?.vertices));
        match attempt {
            Ok(parts) if parts.iter().map(Vec::len).sum::<usize>() <= h => {
                return Ok((HullChain::new(concat_dedup(parts)), trace));
            }
            Ok(_) | Err(HullError::BudgetExceeded { .. }) => {
                if h as f64 > limit || i >= 6 {
                    trace.defaulted = true;
                    return Ok((upper_hull_rand(points, sched, rng, ctx)?, trace));
                }
            }
            Err(e) => return Err(e),
        }
    }
    unreachable!()
}

/// Upper-hull algorithm selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HullAlgo {
    Det,
    Rand,
    OutputSensitive,
    Monotone,
    Jarvis,
    Brute,
}

impl HullAlgo {
    pub const ALL: [HullAlgo; 6] = [
        HullAlgo::Det,
        HullAlgo::Rand,
        HullAlgo::OutputSensitive,
        HullAlgo::Monotone,
        HullAlgo::Jarvis,
        HullAlgo::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HullAlgo::Det => "det",
            HullAlgo::Rand => "rand",
            HullAlgo::OutputSensitive => "output-sensitive",
            HullAlgo::Monotone => "monotone",
            HullAlgo::Jarvis => "jarvis",
            HullAlgo::Brute => "brute",
        }
    }

    pub fn from_name(s: &str) -> Option<HullAlgo> {
        HullAlgo::ALL.into_iter().find(|a| a.name() == s)
    }
}

pub fn upper_hull(
    algo: HullAlgo,
    points: &[IndexedPoint],
    sched: &Schedule,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<HullChain> {
    match algo {
        HullAlgo::Det => upper_hull_det(points, sched, ctx),
        HullAlgo::Rand => upper_hull_rand(points, sched, rng, ctx),
        HullAlgo::OutputSensitive => upper_hull_output_sensitive(points, sched, rng, ctx),
        HullAlgo::Monotone => monotone_chain_upper(points, ctx),
        HullAlgo::Jarvis => jarvis_upper(points, None, ctx),
        HullAlgo::Brute => brute_force_upper(points),
    }
}

/// Full convex hull, clockwise from the leftmost point, each vertex once.
/// The lower hull is the upper hull of the negated, reversed sequence.
pub fn convex_hull_full(
    algo: HullAlgo,
    points: &[IndexedPoint],
    sched: &Schedule,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<Vec<IndexedPoint>> {
    let upper = upper_hull(algo, points, sched, rng, ctx)?.vertices;
    let flipped: Vec<IndexedPoint> = points
        .iter()
        .rev()
        .enumerate()
        .map(|(k, p)| IndexedPoint { point: Point::new(-p.x(), -p.y()), index: k + 1 })
        .collect();
    let lower = upper_hull(algo, &flipped, sched, rng, ctx)?.vertices;
    let n = points.len();
    let mut cycle = upper;
    if lower.len() > 2 {
        cycle.extend(lower[1..lower.len() - 1].iter().map(|v| points[n - v.index]));
    }
    Ok(cycle)
}
