//! Bridges: the hull (or front) edge crossed by a vertical line.
//!
//! A point whose x equals the line's abscissa counts as lying to the right.

use std::cmp::Ordering;

use rand::seq::SliceRandom;

use crate::error::{HullError, Result};
use crate::geometry::{
    cmp_along, cmp_slopes, cmp_x, cmp_x_line, cmp_y, orientation, IndexedPoint, Orientation, PredicateCounters,
};
use crate::select::select_nth;
use crate::HullRng;

/// A hull edge `left -> right` with `x(left) < x(right)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bridge {
    pub left: IndexedPoint,
    pub right: IndexedPoint,
}

impl Bridge {
    pub fn new(left: IndexedPoint, right: IndexedPoint) -> Self {
        Bridge { left, right }
    }
}

/// What a vertical line meets on the hull (or front) of a point set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Crossing {
    Edge(Bridge),
    /// No hull/front vertex lies left of the line.
    NothingLeft,
    /// No point lies right of the line.
    NothingRight,
}

impl Crossing {
    pub fn edge(&self) -> Option<Bridge> {
        match self {
            Crossing::Edge(b) => Some(*b),
            _ => None,
        }
    }
}

/// A located cluster of points confined to one slab, with its precomputed
/// chain (upper hull, or Pareto front for the front algorithms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub members: Vec<IndexedPoint>,
    pub hull: Vec<IndexedPoint>,
    pub slab: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

fn side_of_chain(chain: &[IndexedPoint], x0: i64, ctx: &mut PredicateCounters) -> Result<Side> {
    let first = cmp_x_line(&chain[0], x0, ctx);
    if chain.len() == 1 {
        return Ok(if first.is_lt() { Side::Left } else { Side::Right });
    }
    let last = cmp_x_line(&chain[chain.len() - 1], x0, ctx);
    match (first.is_lt(), last.is_lt()) {
        (true, true) => Ok(Side::Left),
        (false, false) => Ok(Side::Right),
        _ => Err(HullError::GroupStraddles { x0 }),
    }
}

/// Kirkpatrick–Seidel prune-and-search. Linear worst case: slope medians come
/// from deterministic selection.
pub fn bridge_upper(points: &[IndexedPoint], x0: i64, ctx: &mut PredicateCounters) -> Result<Bridge> {
    let (mut has_left, mut has_right) = (false, false);
    for p in points {
        if cmp_x_line(p, x0, ctx).is_lt() {
            has_left = true;
        } else {
            has_right = true;
        }
        if has_left && has_right {
            break;
        }
    }
    if !(has_left && has_right) {
        return Err(HullError::NotSpanning { x0 });
    }

    let mut cand = points.to_vec();
    let mut pairs: Vec<(IndexedPoint, IndexedPoint)> = Vec::with_capacity(cand.len() / 2);
    let mut next: Vec<IndexedPoint> = Vec::with_capacity(cand.len());
    loop {
        if cand.len() == 2 {
            let (a, b) = (cand[0], cand[1]);
            return Ok(if cmp_x(&a, &b, ctx).is_lt() { Bridge::new(a, b) } else { Bridge::new(b, a) });
        }
        pairs.clear();
        next.clear();
        for chunk in cand.chunks(2) {
            match chunk {
                [a, b] => pairs.push(if cmp_x(a, b, ctx).is_lt() { (*a, *b) } else { (*b, *a) }),
                [a] => next.push(*a),
                _ => unreachable!(),
            }
        }

        let mut slopes = pairs.clone();
        let mid = (slopes.len() - 1) / 2;
        let (ma, mb) =
            select_nth(&mut slopes, mid, &mut |p, q| cmp_slopes(p.0.point, p.1.point, q.0.point, q.1.point, ctx));

        // Extreme points of the support line with the median slope.
        let mut lo = cand[0];
        let mut hi = cand[0];
        for p in &cand[1..] {
            match cmp_along(p.point, lo.point, ma.point, mb.point, ctx) {
                Ordering::Greater => {
                    lo = *p;
                    hi = *p;
                }
                Ordering::Equal => {
                    if cmp_x(p, &lo, ctx).is_lt() {
                        lo = *p;
                    } else if cmp_x(p, &hi, ctx).is_gt() {
                        hi = *p;
                    }
                }
                Ordering::Less => {}
            }
        }
        let lo_left = cmp_x_line(&lo, x0, ctx).is_lt();
        let hi_left = cmp_x_line(&hi, x0, ctx).is_lt();
        if lo_left && !hi_left {
            return Ok(Bridge::new(lo, hi));
        }
        // Bridge slope is below the median when the contact lies left of x0.
        let bridge_is_flatter = hi_left;
        for &(a, b) in &pairs {
            let ord = cmp_slopes(a.point, b.point, ma.point, mb.point, ctx);
            if bridge_is_flatter {
                if ord.is_ge() {
                    next.push(b);
                } else {
                    next.push(a);
                    next.push(b);
                }
            } else if ord.is_le() {
                next.push(a);
            } else {
                next.push(a);
                next.push(b);
            }
        }
        std::mem::swap(&mut cand, &mut next);
    }
}

/// Index of the chain vertex maximising height in direction `u -> v`
/// (the leftmost one on ties). Binary search over a strictly concave chain.
fn chain_support(chain: &[IndexedPoint], u: IndexedPoint, v: IndexedPoint, ctx: &mut PredicateCounters) -> usize {
    let (mut lo, mut hi) = (0usize, chain.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if cmp_slopes(chain[mid].point, chain[mid + 1].point, u.point, v.point, ctx).is_gt() {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

fn violates(chain: &[IndexedPoint], u: IndexedPoint, v: IndexedPoint, ctx: &mut PredicateCounters) -> bool {
    let i = chain_support(chain, u, v, ctx);
    orientation(u.point, v.point, chain[i].point, ctx) == Orientation::Left
}

/// Common upper tangent of two x-separated concave chains (`left` entirely
/// left of `right`), extreme points on ties.
fn chain_bridge(
    left: &[IndexedPoint],
    right: &[IndexedPoint],
    ctx: &mut PredicateCounters,
) -> (IndexedPoint, IndexedPoint) {
    let mut i = left.len() - 1;
    let mut j = 0;
    loop {
        let mut moved = false;
        while i > 0 && orientation(left[i].point, right[j].point, left[i - 1].point, ctx) != Orientation::Right {
            i -= 1;
            moved = true;
        }
        while j + 1 < right.len()
            && orientation(left[i].point, right[j].point, right[j + 1].point, ctx) != Orientation::Right
        {
            j += 1;
            moved = true;
        }
        if !moved {
            return (left[i], right[j]);
        }
    }
}

/// Optimum with one left chain fixed, over a list of right chains.
fn fixed_left(
    a: &[IndexedPoint],
    rights: &[&[IndexedPoint]],
    ctx: &mut PredicateCounters,
) -> (IndexedPoint, IndexedPoint) {
    let (mut u, mut v) = chain_bridge(a, rights[0], ctx);
    for r in &rights[1..] {
        if violates(r, u, v, ctx) {
            (u, v) = chain_bridge(a, r, ctx);
        }
    }
    (u, v)
}

fn fixed_right(
    b: &[IndexedPoint],
    lefts: &[&[IndexedPoint]],
    ctx: &mut PredicateCounters,
) -> (IndexedPoint, IndexedPoint) {
    let (mut u, mut v) = chain_bridge(lefts[0], b, ctx);
    for l in &lefts[1..] {
        if violates(l, u, v, ctx) {
            (u, v) = chain_bridge(l, b, ctx);
        }
    }
    (u, v)
}

/// Upper crossing of the union of loose points and convex groups.
///
/// Dual 2D linear program (lowest line above everything, measured at `x0`)
/// solved by randomized incremental construction. Violation tests against a
/// group are binary searches on its chain.
pub fn upper_crossing(
    loose: &[IndexedPoint],
    groups: &[&[IndexedPoint]],
    x0: i64,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<Crossing> {
    let mut objects: Vec<(&[IndexedPoint], Side)> = Vec::with_capacity(loose.len() + groups.len());
    for p in loose {
        let side = if cmp_x_line(p, x0, ctx).is_lt() { Side::Left } else { Side::Right };
        objects.push((std::slice::from_ref(p), side));
    }
    for g in groups {
        if g.is_empty() {
            continue;
        }
        objects.push((g, side_of_chain(g, x0, ctx)?));
    }
    let Some(first_left) = objects.iter().position(|o| o.1 == Side::Left) else {
        return Ok(if objects.is_empty() { Crossing::NothingRight } else { Crossing::NothingLeft });
    };
    let Some(first_right) = objects.iter().position(|o| o.1 == Side::Right) else {
        return Ok(Crossing::NothingRight);
    };
    // Seed with one object per side, then insert the rest in random order.
    let seed_l = objects.swap_remove(first_left.max(first_right));
    let seed_r = objects.swap_remove(first_left.min(first_right));
    let (seed_l, seed_r) = if seed_l.1 == Side::Left { (seed_l, seed_r) } else { (seed_r, seed_l) };
    objects.shuffle(rng);

    let mut lefts: Vec<&[IndexedPoint]> = vec![seed_l.0];
    let mut rights: Vec<&[IndexedPoint]> = vec![seed_r.0];
    let (mut u, mut v) = chain_bridge(seed_l.0, seed_r.0, ctx);
    for &(chain, side) in &objects {
        if violates(chain, u, v, ctx) {
            (u, v) = match side {
                Side::Left => fixed_left(chain, &rights, ctx),
                Side::Right => fixed_right(chain, &lefts, ctx),
            };
        }
        match side {
            Side::Left => lefts.push(chain),
            Side::Right => rights.push(chain),
        }
    }

    // Widen to the extreme points on the optimal line.
    let (mut left, mut right) = (u, v);
    for chain in lefts.iter().chain(rights.iter()) {
        let i = chain_support(chain, u, v, ctx);
        for c in chain[i..].iter().take(2) {
            if orientation(u.point, v.point, c.point, ctx) == Orientation::Collinear {
                if cmp_x(c, &left, ctx).is_lt() {
                    left = *c;
                }
                if cmp_x(c, &right, ctx).is_gt() {
                    right = *c;
                }
            }
        }
    }
    Ok(Crossing::Edge(Bridge::new(left, right)))
}

/// Bridge of the union of loose points and groups across `x0`.
pub fn bridge_mixed(
    loose: &[IndexedPoint],
    groups: &[Group],
    x0: i64,
    rng: &mut HullRng,
    ctx: &mut PredicateCounters,
) -> Result<Bridge> {
    let chains: Vec<&[IndexedPoint]> = groups.iter().map(|g| g.hull.as_slice()).collect();
    match upper_crossing(loose, &chains, x0, rng, ctx)? {
        Crossing::Edge(b) => Ok(b),
        _ => Err(HullError::NotSpanning { x0 }),
    }
}

/// Pareto-front crossing of loose points plus staircase chains (x increasing,
/// y decreasing). The right end is the highest point right of `x0`; the left
/// end is the rightmost point left of `x0` that is higher still.
pub fn pareto_crossing(
    loose: &[IndexedPoint],
    fronts: &[&[IndexedPoint]],
    x0: i64,
    ctx: &mut PredicateCounters,
) -> Result<Crossing> {
    let mut right: Option<IndexedPoint> = None;
    let mut left_pts: Vec<IndexedPoint> = Vec::new();
    let mut left_fronts: Vec<&[IndexedPoint]> = Vec::new();
    for p in loose {
        if cmp_x_line(p, x0, ctx).is_lt() {
            left_pts.push(*p);
        } else if right.is_none_or(|r| cmp_y(p, &r, ctx).is_gt()) {
            right = Some(*p);
        }
    }
    for f in fronts {
        if f.is_empty() {
            continue;
        }
        match side_of_chain(f, x0, ctx)? {
            Side::Left => left_fronts.push(f),
            Side::Right => {
                if right.is_none_or(|r| cmp_y(&f[0], &r, ctx).is_gt()) {
                    right = Some(f[0]);
                }
            }
        }
    }
    let any_left = !left_pts.is_empty() || !left_fronts.is_empty();
    let Some(right) = right else {
        return Ok(Crossing::NothingRight);
    };
    if !any_left {
        return Ok(Crossing::NothingLeft);
    }
    let mut left: Option<IndexedPoint> = None;
    let offer = |p: IndexedPoint, left: &mut Option<IndexedPoint>, ctx: &mut PredicateCounters| {
        if left.is_none_or(|l| cmp_x(&p, &l, ctx).is_gt()) {
            *left = Some(p);
        }
    };
    for p in left_pts {
        if cmp_y(&p, &right, ctx).is_gt() {
            offer(p, &mut left, ctx);
        }
    }
    for f in left_fronts {
        // last staircase vertex still above `right`
        let (mut lo, mut hi) = (0usize, f.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            if cmp_y(&f[mid], &right, ctx).is_gt() {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if lo > 0 {
            offer(f[lo - 1], &mut left, ctx);
        }
    }
    Ok(match left {
        Some(l) => Crossing::Edge(Bridge::new(l, right)),
        None => Crossing::NothingLeft,
    })
}

/// Pareto-front edge across `x0`: the front vertices immediately before and after the line.
pub fn bridge_pareto(points: &[IndexedPoint], x0: i64, ctx: &mut PredicateCounters) -> Result<Bridge> {
    match pareto_crossing(points, &[], x0, ctx)? {
        Crossing::Edge(b) => Ok(b),
        _ => Err(HullError::NotSpanning { x0 }),
    }
}
