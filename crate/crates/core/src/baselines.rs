//! Classical upper-hull and Pareto-front algorithms: oracles, base cases and
//! benchmark baselines.

use crate::error::{HullError, Result};
use crate::geometry::{cmp_x, cmp_x_line, cmp_y, orientation, IndexedPoint, Orientation, PredicateCounters};

/// Input size limit for the cubic and quadratic oracles.
pub const BRUTE_FORCE_LIMIT: usize = 1 << 12;

/// A left-to-right vertex chain: an upper hull or a Pareto front.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HullChain {
    pub vertices: Vec<IndexedPoint>,
}

impl HullChain {
    pub fn new(vertices: Vec<IndexedPoint>) -> Self {
        HullChain { vertices }
    }

    pub fn indices(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.index).collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Strictly increasing x and a clockwise turn at every interior vertex.
    pub fn is_strictly_concave(&self) -> bool {
        let mut ctx = PredicateCounters::new();
        self.vertices.windows(2).all(|w| w[0].x() < w[1].x())
            && self
                .vertices
                .windows(3)
                .all(|w| orientation(w[0].point, w[1].point, w[2].point, &mut ctx) == Orientation::Right)
    }

    /// Strictly increasing x and strictly decreasing y.
    pub fn is_staircase(&self) -> bool {
        self.vertices.windows(2).all(|w| w[0].x() < w[1].x() && w[0].y() > w[1].y())
    }
}

/// Andrew's monotone chain restricted to the upper hull. Sorts a copy by x.
pub fn monotone_chain_upper(points: &[IndexedPoint], ctx: &mut PredicateCounters) -> Result<HullChain> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable_by(|a, b| cmp_x(a, b, ctx));
    Ok(HullChain::new(scan_sorted(&sorted, ctx)))
}

fn scan_sorted(sorted: &[IndexedPoint], ctx: &mut PredicateCounters) -> Vec<IndexedPoint> {
    let mut hull: Vec<IndexedPoint> = Vec::with_capacity(sorted.len().min(64));
    for &p in sorted {
        while hull.len() >= 2
            && orientation(hull[hull.len() - 2].point, hull[hull.len() - 1].point, p.point, ctx) != Orientation::Right
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

/// Graham's scan on input already sorted by x. Linear time.
pub fn graham_presorted_upper(points: &[IndexedPoint], ctx: &mut PredicateCounters) -> Result<HullChain> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    for (i, w) in points.windows(2).enumerate() {
        if cmp_x(&w[0], &w[1], ctx) != std::cmp::Ordering::Less {
            return Err(HullError::NotSorted { position: i + 2 });
        }
    }
    Ok(HullChain::new(scan_sorted(points, ctx)))
}

/// Gift wrapping from the leftmost point. With a budget, fails as soon as more
/// than `budget` vertices would be emitted.
pub fn jarvis_upper(points: &[IndexedPoint], budget: Option<usize>, ctx: &mut PredicateCounters) -> Result<HullChain> {
    let Some(&first) = points.first() else {
        return Err(HullError::EmptyInput);
    };
    let mut current = points[1..].iter().fold(first, |best, p| if cmp_x(p, &best, ctx).is_lt() { *p } else { best });
    let mut hull = vec![current];
    loop {
        if budget.is_some_and(|b| hull.len() > b) {
            return Err(HullError::BudgetExceeded { budget: budget.unwrap_or(0) });
        }
        let mut next: Option<IndexedPoint> = None;
        for p in points {
            if cmp_x(p, &current, ctx).is_le() {
                continue;
            }
            next = Some(match next {
                None => *p,
                Some(cand) => match orientation(current.point, cand.point, p.point, ctx) {
                    Orientation::Left => *p,
                    Orientation::Collinear if cmp_x(p, &cand, ctx).is_gt() => *p,
                    _ => cand,
                },
            });
        }
        match next {
            Some(v) => {
                hull.push(v);
                current = v;
            }
            None => break,
        }
    }
    if budget.is_some_and(|b| hull.len() > b) {
        return Err(HullError::BudgetExceeded { budget: budget.unwrap_or(0) });
    }
    Ok(HullChain::new(hull))
}

/// Cubic oracle: a point survives iff no spanning pair has it on or below
/// their chord. Uncounted.
pub fn brute_force_upper(points: &[IndexedPoint]) -> Result<HullChain> {
    if points.len() > BRUTE_FORCE_LIMIT {
        return Err(HullError::TooLarge { n: points.len(), limit: BRUTE_FORCE_LIMIT });
    }
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let mut ctx = PredicateCounters::new();
    let mut kept: Vec<IndexedPoint> = points
        .iter()
        .filter(|p| {
            !points.iter().any(|a| {
                a.x() < p.x()
                    && points
                        .iter()
                        .any(|b| b.x() > p.x() && orientation(a.point, b.point, p.point, &mut ctx) != Orientation::Left)
            })
        })
        .copied()
        .collect();
    kept.sort_by_key(|p| p.x());
    Ok(HullChain::new(kept))
}

/// Quadratic oracle: all points not dominated in both coordinates. Uncounted.
pub fn brute_force_pareto(points: &[IndexedPoint]) -> Result<HullChain> {
    if points.len() > BRUTE_FORCE_LIMIT {
        return Err(HullError::TooLarge { n: points.len(), limit: BRUTE_FORCE_LIMIT });
    }
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let mut kept: Vec<IndexedPoint> =
        points.iter().filter(|p| !points.iter().any(|q| q.x() > p.x() && q.y() > p.y())).copied().collect();
    kept.sort_by_key(|p| p.x());
    Ok(HullChain::new(kept))
}

/// Sort-based Pareto front: sort by x, sweep right to left keeping running max y.
pub fn pareto_staircase(points: &[IndexedPoint], ctx: &mut PredicateCounters) -> Result<HullChain> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable_by(|a, b| cmp_x(a, b, ctx));
    Ok(HullChain::new(staircase_sorted(&sorted, ctx)))
}

pub(crate) fn staircase_sorted(sorted: &[IndexedPoint], ctx: &mut PredicateCounters) -> Vec<IndexedPoint> {
    let mut front: Vec<IndexedPoint> = Vec::new();
    for p in sorted.iter().rev() {
        if front.last().is_none_or(|top| cmp_y(p, top, ctx).is_gt()) {
            front.push(*p);
        }
    }
    front.reverse();
    front
}

/// The edge of `chain` crossed by the vertical line `x0` (a vertex at `x0`
/// counts as right of the line).
pub fn crossing_edge(chain: &HullChain, x0: i64) -> Option<(IndexedPoint, IndexedPoint)> {
    let mut ctx = PredicateCounters::new();
    chain
        .vertices
        .windows(2)
        .find(|w| cmp_x_line(&w[0], x0, &mut ctx).is_lt() && cmp_x_line(&w[1], x0, &mut ctx).is_ge())
        .map(|w| (w[0], w[1]))
}
