//! Slab decompositions: line generation, the bridge scan over slabs and the
//! safe-point windows.
//!
//! Slab `s` of a line set `ℓ_0 < ℓ_1 < ...` is the half-open strip
//! `[ℓ_{s-1}, ℓ_s)`, with implicit sentinels at both infinities.

use crate::baselines::{monotone_chain_upper, pareto_staircase};
use crate::bridge::{bridge_upper, pareto_crossing, upper_crossing, Bridge, Crossing};
use crate::error::{HullError, Result};
use crate::geometry::{cmp_lines, cmp_slopes, cmp_x, cmp_x_line, IndexedPoint, PredicateCounters};
use crate::select::select_nth;
use crate::HullRng;

/// Strictly increasing abscissae of vertical lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerticalLineSet {
    xs: Vec<i64>,
}

impl VerticalLineSet {
    pub fn new(xs: Vec<i64>) -> Result<Self> {
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(HullError::InvalidParameter("vertical lines must be strictly increasing".into()));
        }
        Ok(VerticalLineSet { xs })
    }

    pub fn xs(&self) -> &[i64] {
        &self.xs
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn slab_count(&self) -> usize {
        self.xs.len() + 1
    }

    pub fn slab_of(&self, p: &IndexedPoint, ctx: &mut PredicateCounters) -> usize {
        slab_in(&self.xs, p, ctx)
    }

    /// `(left, right)` bounding abscissae of slab `s`; `None` stands for an infinity.
    pub fn bounds(&self, s: usize) -> (Option<i64>, Option<i64>) {
        let left = if s == 0 { None } else { Some(self.xs[s - 1]) };
        (left, self.xs.get(s).copied())
    }
}

/// Number of lines at or left of `p`.
pub(crate) fn slab_in(xs: &[i64], p: &IndexedPoint, ctx: &mut PredicateCounters) -> usize {
    let (mut lo, mut hi) = (0, xs.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if cmp_x_line(p, xs[mid], ctx).is_ge() {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

/// A pair separated by a line of `lines` whose index order opposes its x order.
pub fn is_l_bad(p: &IndexedPoint, q: &IndexedPoint, lines: &[i64]) -> bool {
    let opposed = (p.index < q.index) != (p.x() < q.x());
    let (lo, hi) = if p.x() < q.x() { (p.x(), q.x()) } else { (q.x(), p.x()) };
    // separated: some line with lo < ℓ <= hi
    let i = lines.partition_point(|&l| l <= lo);
    opposed && i < lines.len() && lines[i] <= hi
}

#[derive(Debug, Clone)]
pub struct LineGeneration {
    pub lines: VerticalLineSet,
    /// Every input point, by slab, each slab in input order.
    pub slabs: Vec<Vec<IndexedPoint>>,
    pub bad: Vec<(IndexedPoint, IndexedPoint)>,
    /// Per-slab size target `⌈n/b⌉`.
    pub threshold: usize,
}

fn split_live(
    points: &[IndexedPoint],
    group: &mut [usize],
    rank: usize,
    ctx: &mut PredicateCounters,
) -> (i64, Vec<usize>, Vec<usize>) {
    let m = select_nth(group, rank, &mut |&a, &b| cmp_x(&points[a], &points[b], ctx));
    let x = points[m].x();
    let (left, right): (Vec<usize>, Vec<usize>) = group.iter().partition(|&&i| cmp_x_line(&points[i], x, ctx).is_lt());
    (x, left, right)
}

/// Splits a slab at medians until every piece holds at most `t` points.
fn split_until(
    points: &[IndexedPoint],
    mut members: Vec<usize>,
    t: usize,
    lines: &mut Vec<i64>,
    pieces: &mut Vec<Vec<usize>>,
    ctx: &mut PredicateCounters,
) {
    if members.len() <= t {
        pieces.push(members);
        return;
    }
    let rank = members.len() / 2;
    let (x, left, right) = split_live(points, &mut members, rank, ctx);
    split_until(points, left, t, lines, pieces, ctx);
    lines.push(x);
    split_until(points, right, t, lines, pieces, ctx);
}

/// Incremental line generation with live/dead marks.
///
/// Scans `points` in input order keeping a stack of lines. A point landing
/// in the rightmost slab stays live; once that slab holds `2⌈n/b⌉` live
/// points it is split at its upper median. A point landing further left is
/// paired with a live point of the rightmost slab, both die, and emptied
/// rightmost slabs are merged away. Afterwards every point is placed in the
/// slabs of all lines ever created and oversized slabs are split at medians.
pub fn generate_lines(points: &[IndexedPoint], b: usize, ctx: &mut PredicateCounters) -> LineGeneration {
    let n = points.len();
    if n == 0 {
        return LineGeneration {
            lines: VerticalLineSet::default(),
            slabs: vec![Vec::new()],
            bad: Vec::new(),
            threshold: 1,
        };
    }
    let b = b.clamp(1, n);
    let t = n.div_ceil(b).max(1);

    let mut stack: Vec<i64> = Vec::new();
    let mut live: Vec<Vec<usize>> = vec![Vec::new()];
    let mut created: Vec<i64> = Vec::new();
    let mut dead = vec![false; n];
    let mut bad = Vec::new();
    for (pos, p) in points.iter().enumerate() {
        if stack.last().is_none_or(|&l| cmp_x_line(p, l, ctx).is_ge()) {
            let top = live.last_mut().expect("live slabs track the stack");
            top.push(pos);
            if top.len() >= 2 * t {
                let mut group = live.pop().unwrap();
                let (x, left, right) = split_live(points, &mut group, t, ctx);
                stack.push(x);
                created.push(x);
                live.push(left);
                live.push(right);
            }
        } else {
            let q = live.last_mut().unwrap().pop().expect("rightmost slab holds a live point");
            dead[q] = true;
            dead[pos] = true;
            bad.push((points[q], *p));
            while !stack.is_empty() && live.last().is_some_and(|s| s.is_empty()) {
                stack.pop();
                live.pop();
            }
        }
    }

    created.sort_unstable_by(|a, b| cmp_lines(*a, *b, ctx));
    created.dedup();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); created.len() + 1];
    // Live points only search the created lines inside their own stack slab.
    let mut lo = 0;
    for (k, slab) in live.iter().enumerate() {
        let hi = match stack.get(k) {
            Some(&l) => lo + created[lo..].partition_point(|&c| cmp_lines(c, l, ctx).is_lt()),
            None => created.len(),
        };
        for &pos in slab {
            buckets[lo + slab_in(&created[lo..hi], &points[pos], ctx)].push(pos);
        }
        lo = hi + 1;
    }
    for (pos, p) in points.iter().enumerate() {
        if dead[pos] {
            buckets[slab_in(&created, p, ctx)].push(pos);
        }
    }

    let mut lines = Vec::with_capacity(created.len());
    let mut pieces = Vec::with_capacity(buckets.len());
    for (s, bucket) in buckets.into_iter().enumerate() {
        if s > 0 {
            lines.push(created[s - 1]);
        }
        split_until(points, bucket, t, &mut lines, &mut pieces, ctx);
    }

    let mut slab_id = vec![0usize; n];
    for (s, piece) in pieces.iter().enumerate() {
        for &pos in piece {
            slab_id[pos] = s;
        }
    }
    let mut slabs: Vec<Vec<IndexedPoint>> = pieces.iter().map(|p| Vec::with_capacity(p.len())).collect();
    for (pos, p) in points.iter().enumerate() {
        slabs[slab_id[pos]].push(*p);
    }
    LineGeneration { lines: VerticalLineSet { xs: lines }, slabs, bad, threshold: t }
}

/// The two chain flavours the slab machinery serves: upper hulls and Pareto fronts.
pub trait Frontier: Sync {
    /// Crossing of one point set, deterministically.
    fn point_crossing(&self, points: &[IndexedPoint], x0: i64, ctx: &mut PredicateCounters) -> Result<Crossing>;

    /// Crossing of loose points together with precomputed chains.
    fn mixed_crossing(
        &self,
        loose: &[IndexedPoint],
        chains: &[&[IndexedPoint]],
        x0: i64,
        rng: &mut HullRng,
        ctx: &mut PredicateCounters,
    ) -> Result<Crossing>;

    /// Whether a slab whose incoming edge is `prev` still contributes once its
    /// outgoing edge is `next`.
    fn compatible(&self, prev: &Bridge, next: &Bridge, ctx: &mut PredicateCounters) -> bool;

    /// Chain of an arbitrary set, as stored for a group.
    fn group_chain(&self, points: &[IndexedPoint], ctx: &mut PredicateCounters) -> Result<Vec<IndexedPoint>>;

    /// Chain of an arbitrary nonempty set, in full.
    fn finish(&self, points: &[IndexedPoint], ctx: &mut PredicateCounters) -> Result<Vec<IndexedPoint>>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct UpperHull;

impl Frontier for UpperHull {
    fn point_crossing(&self, points: &[IndexedPoint], x0: i64, ctx: &mut PredicateCounters) -> Result<Crossing> {
        match bridge_upper(points, x0, ctx) {
            Ok(b) => Ok(Crossing::Edge(b)),
            Err(HullError::NotSpanning { .. }) => {
                let any_right = points.iter().any(|p| p.x() >= x0);
                Ok(if any_right { Crossing::NothingLeft } else { Crossing::NothingRight })
            }
            Err(e) => Err(e),
        }
    }

    fn mixed_crossing(
        &self,
        loose: &[IndexedPoint],
        chains: &[&[IndexedPoint]],
        x0: i64,
        rng: &mut HullRng,
        ctx: &mut PredicateCounters,
    ) -> Result<Crossing> {
        upper_crossing(loose, chains, x0, rng, ctx)
    }

    fn compatible(&self, prev: &Bridge, next: &Bridge, ctx: &mut PredicateCounters) -> bool {
        cmp_slopes(prev.left.point, prev.right.point, next.left.point, next.right.point, ctx).is_gt()
    }

    fn group_chain(&self, points: &[IndexedPoint], ctx: &mut PredicateCounters) -> Result<Vec<IndexedPoint>> {
        self.finish(points, ctx)
    }

    fn finish(&self, points: &[IndexedPoint], ctx: &mut PredicateCounters) -> Result<Vec<IndexedPoint>> {
        Ok(monotone_chain_upper(points, ctx)?.vertices)
    }
}

/// Pareto fronts (maxima). With `compress`, groups keep only the first and
/// last vertex of their front.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParetoFront {
    pub compress: bool,
}

impl Frontier for ParetoFront {
    fn point_crossing(&self, points: &[IndexedPoint], x0: i64, ctx: &mut PredicateCounters) -> Result<Crossing> {
        pareto_crossing(points, &[], x0, ctx)
    }

    fn mixed_crossing(
        &self,
        loose: &[IndexedPoint],
        chains: &[&[IndexedPoint]],
        x0: i64,
        _rng: &mut HullRng,
        ctx: &mut PredicateCounters,
    ) -> Result<Crossing> {
        pareto_crossing(loose, chains, x0, ctx)
    }

    fn compatible(&self, _prev: &Bridge, _next: &Bridge, _ctx: &mut PredicateCounters) -> bool {
        true
    }

    fn group_chain(&self, points: &[IndexedPoint], ctx: &mut PredicateCounters) -> Result<Vec<IndexedPoint>> {
        let mut front = self.finish(points, ctx)?;
        if self.compress && front.len() > 2 {
            let last = front[front.len() - 1];
            front.truncate(1);
            front.push(last);
        }
        Ok(front)
    }

    fn finish(&self, points: &[IndexedPoint], ctx: &mut PredicateCounters) -> Result<Vec<IndexedPoint>> {
        Ok(pareto_staircase(points, ctx)?.vertices)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeScan {
    /// One crossing per line.
    pub crossings: Vec<Crossing>,
    /// Slabs left on the stack, left to right.
    pub surviving: Vec<usize>,
    pub pushes: usize,
    pub pops: usize,
    pub bridge_calls: usize,
}

/// Graham-style scan over the slabs: a stack of slabs that still contribute
/// a chain vertex, each with the edge entering it.
pub fn scan_bridges<F: Frontier + ?Sized>(
    frontier: &F,
    slabs: &[Vec<IndexedPoint>],
    lines: &VerticalLineSet,
    ctx: &mut PredicateCounters,
) -> Result<BridgeScan> {
    assert_eq!(slabs.len(), lines.slab_count(), "one slab per gap between lines");
    let mut stack: Vec<(usize, Option<Bridge>)> = Vec::new();
    let (mut pushes, mut pops, mut calls) = (0, 0, 0);
    let mut union = Vec::new();
    for (s, slab) in slabs.iter().enumerate() {
        if slab.is_empty() {
            continue;
        }
        loop {
            let Some(&(k, incoming)) = stack.last() else {
                stack.push((s, None));
                pushes += 1;
                break;
            };
            union.clear();
            union.extend_from_slice(&slabs[k]);
            union.extend_from_slice(slab);
            calls += 1;
            let next = match frontier.point_crossing(&union, lines.xs[s - 1], ctx)? {
                Crossing::Edge(b) => Some(b),
                _ => None,
            };
            match next {
                Some(b) if incoming.is_none_or(|inc| frontier.compatible(&inc, &b, ctx)) => {
                    stack.push((s, Some(b)));
                    pushes += 1;
                    break;
                }
                _ => {
                    stack.pop();
                    pops += 1;
                }
            }
        }
    }

    let mut crossings = vec![Crossing::NothingRight; lines.len()];
    if let Some(&(first, _)) = stack.first() {
        for c in crossings.iter_mut().take(first) {
            *c = Crossing::NothingLeft;
        }
    }
    for w in stack.windows(2) {
        let (a, (c, edge)) = (w[0].0, w[1]);
        let edge = Crossing::Edge(edge.expect("stacked slabs above the first carry an edge"));
        for cr in &mut crossings[a..c] {
            *cr = edge;
        }
    }
    Ok(BridgeScan { crossings, surviving: stack.iter().map(|e| e.0).collect(), pushes, pops, bridge_calls: calls })
}

/// One side of a safe-point window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// No constraint.
    Open,
    /// Constrained only by the slab's own line.
    Line(i64),
    /// Constrained by a chain vertex in both index and x.
    Vertex(IndexedPoint),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlabWindow {
    pub lower: Bound,
    pub upper: Bound,
    pub empty: bool,
}

impl SlabWindow {
    pub fn admits(&self, p: &IndexedPoint, ctx: &mut PredicateCounters) -> bool {
        if self.empty || !self.admits_index(p.index) {
            return false;
        }
        let lower = match self.lower {
            Bound::Open => true,
            Bound::Line(x) => cmp_x_line(p, x, ctx).is_ge(),
            Bound::Vertex(v) => cmp_x(p, &v, ctx).is_ge(),
        };
        lower
            && match self.upper {
                Bound::Open => true,
                Bound::Line(x) => cmp_x_line(p, x, ctx).is_lt(),
                Bound::Vertex(v) => cmp_x(p, &v, ctx).is_le(),
            }
    }

    pub fn admits_index(&self, index: usize) -> bool {
        index >= self.min_index() && index <= self.max_index()
    }

    fn min_index(&self) -> usize {
        match self.lower {
            Bound::Vertex(v) => v.index,
            _ => 0,
        }
    }

    fn max_index(&self) -> usize {
        match self.upper {
            Bound::Vertex(v) => v.index,
            _ => usize::MAX,
        }
    }

    /// The contiguous part of an x-sorted chain inside the window's x-range.
    pub fn x_slice<'a>(&self, chain: &'a [IndexedPoint], ctx: &mut PredicateCounters) -> &'a [IndexedPoint] {
        if self.empty {
            return &chain[..0];
        }
        let start = chain.partition_point(|p| match self.lower {
            Bound::Open => false,
            Bound::Line(x) => cmp_x_line(p, x, ctx).is_lt(),
            Bound::Vertex(v) => cmp_x(p, &v, ctx).is_lt(),
        });
        let end = chain.partition_point(|p| match self.upper {
            Bound::Open => true,
            Bound::Line(x) => cmp_x_line(p, x, ctx).is_lt(),
            Bound::Vertex(v) => cmp_x(p, &v, ctx).is_le(),
        });
        &chain[start..end.max(start)]
    }
}

/// Safe-point window of every slab, from the crossings of its bounding lines.
pub fn slab_windows(crossings: &[Crossing], lines: &[i64]) -> Vec<SlabWindow> {
    assert_eq!(crossings.len(), lines.len());
    (0..=lines.len())
        .map(|s| {
            let mut empty = false;
            let lower = if s == 0 {
                Bound::Open
            } else {
                match crossings[s - 1] {
                    Crossing::Edge(b) => Bound::Vertex(b.right),
                    Crossing::NothingLeft => Bound::Line(lines[s - 1]),
                    Crossing::NothingRight => {
                        empty = true;
                        Bound::Line(lines[s - 1])
                    }
                }
            };
            let upper = if s == lines.len() {
                Bound::Open
            } else {
                match crossings[s] {
                    Crossing::Edge(b) => Bound::Vertex(b.left),
                    Crossing::NothingRight => Bound::Line(lines[s]),
                    Crossing::NothingLeft => {
                        empty = true;
                        Bound::Line(lines[s])
                    }
                }
            };
            SlabWindow { lower, upper, empty }
        })
        .collect()
}

/// Keeps, per slab, the points inside its window.
pub fn safe_filter(
    slabs: &[Vec<IndexedPoint>],
    windows: &[SlabWindow],
    ctx: &mut PredicateCounters,
) -> Vec<Vec<IndexedPoint>> {
    slabs.iter().zip(windows).map(|(slab, w)| slab.iter().filter(|p| w.admits(p, ctx)).copied().collect()).collect()
}

/// Distributes index-ordered points to the windows admitting them.
///
/// Nonempty windows occupy increasing, disjoint index ranges when the
/// promise holds, so a single merge pass locates every point and only the
/// x-range test costs comparisons.
pub fn locate_by_windows(
    points: &[IndexedPoint],
    windows: &[SlabWindow],
    ctx: &mut PredicateCounters,
) -> Vec<Vec<IndexedPoint>> {
    let mut out = vec![Vec::new(); windows.len()];
    let active: Vec<usize> = (0..windows.len()).filter(|&s| !windows[s].empty).collect();
    let mut w = 0;
    for p in points {
        while w < active.len() && p.index > windows[active[w]].max_index() {
            w += 1;
        }
        let Some(&s) = active.get(w) else { break };
        if windows[s].admits(p, ctx) {
            out[s].push(*p);
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct GuidedRefinement {
    /// Positions in the guiding line list of the kept lines.
    pub lines: Vec<usize>,
    /// Good points by slab of the kept lines, each slab in input order.
    pub good: Vec<Vec<IndexedPoint>>,
    pub bad: Vec<(IndexedPoint, IndexedPoint)>,
    /// Points of `bad`, in input order.
    pub bad_points: Vec<IndexedPoint>,
}

/// Line refinement restricted to a given sorted line list `l0`.
///
/// Like [`generate_lines`], but lines can only be taken from `l0`. When the
/// median of the rightmost slab's live points sits in a slab of `l0`, the
/// live points of that slab are marked located and the `l0` line to its left
/// is pushed. The kept lines are every pushed line plus `b` quantiles of `l0`.
pub fn refine_lines_guided(
    points: &[IndexedPoint],
    l0: &[i64],
    b: usize,
    ctx: &mut PredicateCounters,
) -> GuidedRefinement {
    let n = points.len();
    let lam = l0.len();
    if lam == 0 {
        return GuidedRefinement {
            lines: Vec::new(),
            good: vec![points.to_vec()],
            bad: Vec::new(),
            bad_points: Vec::new(),
        };
    }
    let b = b.clamp(1, lam);
    let t = n.div_ceil(b).max(1);

    // Stack of positions in l0, with live positions per slab.
    let mut stack: Vec<usize> = Vec::new();
    let mut stack_x: Vec<i64> = Vec::new();
    let mut live: Vec<Vec<usize>> = vec![Vec::new()];
    let mut pushed: Vec<usize> = Vec::new();
    let mut located: Vec<(usize, usize)> = Vec::new();
    let mut is_bad = vec![false; n];
    let mut bad = Vec::new();
    for (pos, p) in points.iter().enumerate() {
        if slab_in(&stack_x, p, ctx) == stack.len() {
            let top = live.last_mut().unwrap();
            top.push(pos);
            if top.len() < 2 * t {
                continue;
            }
            let mut group = live.pop().unwrap();
            let m = select_nth(&mut group, t, &mut |&a, &b| cmp_x(&points[a], &points[b], ctx));
            let j = slab_in(l0, &points[m], ctx);
            let (mut below, mut above) = (Vec::new(), Vec::new());
            for &i in &group {
                let q = &points[i];
                if j > 0 && cmp_x_line(q, l0[j - 1], ctx).is_lt() {
                    below.push(i);
                } else if j < lam && cmp_x_line(q, l0[j], ctx).is_ge() {
                    above.push(i);
                } else {
                    located.push((i, j));
                }
            }
            if j > 0 && stack.last().is_none_or(|&c| c < j - 1) {
                stack.push(j - 1);
                stack_x.push(l0[j - 1]);
                pushed.push(j - 1);
                live.push(below);
            } else {
                debug_assert!(below.is_empty());
            }
            live.push(above);
        } else {
            let q = live.last_mut().unwrap().pop().expect("rightmost slab holds a live point");
            is_bad[q] = true;
            is_bad[pos] = true;
            bad.push((points[q], *p));
        }
        while !stack.is_empty() && live.last().is_some_and(|s| s.is_empty()) {
            stack.pop();
            stack_x.pop();
            live.pop();
        }
    }

    let step = lam.div_ceil(b).max(1);
    let mut lines = pushed;
    lines.extend((1..).map(|k| k * step - 1).take_while(|&i| i < lam));
    lines.sort_unstable();
    lines.dedup();
    let line_x: Vec<i64> = lines.iter().map(|&i| l0[i]).collect();

    const UNSET: usize = usize::MAX;
    let mut slab_id = vec![UNSET; n];
    for &(pos, j) in &located {
        slab_id[pos] = lines.partition_point(|&i| i < j);
    }
    for slab in &live {
        for &pos in slab {
            slab_id[pos] = slab_in(&line_x, &points[pos], ctx);
        }
    }
    let mut good = vec![Vec::new(); lines.len() + 1];
    let mut bad_points = Vec::with_capacity(2 * bad.len());
    for (pos, p) in points.iter().enumerate() {
        if is_bad[pos] {
            bad_points.push(*p);
        } else {
            debug_assert_ne!(slab_id[pos], UNSET);
            good[slab_id[pos]].push(*p);
        }
    }
    GuidedRefinement { lines, good, bad, bad_points }
}
