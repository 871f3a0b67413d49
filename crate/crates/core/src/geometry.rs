//! Exact planar primitives.
//!
//! Every coordinate comparison and every orientation-style sign test in the
//! crate goes through this module and is tallied in a [`PredicateCounters`].
//! Coordinates are bounded by `2^62` in magnitude, so all determinants fit in
//! `i128` without rounding.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::Deref;

use crate::error::{HullError, Result};

/// Exclusive bound on coordinate magnitude.
pub const COORD_LIMIT: i64 = 1 << 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn in_range(&self) -> bool {
        self.x.abs() < COORD_LIMIT && self.y.abs() < COORD_LIMIT
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

/// A point together with its 1-based position in the input sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexedPoint {
    pub point: Point,
    pub index: usize,
}

impl IndexedPoint {
    pub const fn new(x: i64, y: i64, index: usize) -> Self {
        IndexedPoint { point: Point { x, y }, index }
    }

    #[inline]
    pub fn x(&self) -> i64 {
        self.point.x
    }

    #[inline]
    pub fn y(&self) -> i64 {
        self.point.y
    }
}

/// Comparison tallies for one algorithm invocation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PredicateCounters {
    pub coord_cmps: u64,
    pub orientation_tests: u64,
}

impl PredicateCounters {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn total(&self) -> u64 {
        self.coord_cmps + self.orientation_tests
    }

    pub fn merge(&mut self, other: &PredicateCounters) {
        self.coord_cmps += other.coord_cmps;
        self.orientation_tests += other.orientation_tests;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

#[inline]
fn cross(a: Point, b: Point, c: Point) -> i128 {
    let abx = b.x as i128 - a.x as i128;
    let aby = b.y as i128 - a.y as i128;
    let acx = c.x as i128 - a.x as i128;
    let acy = c.y as i128 - a.y as i128;
    abx * acy - aby * acx
}

/// Sign of `(b - a) x (c - a)`: `Left` when `c` lies to the left of the directed line `a -> b`.
pub fn orientation(a: Point, b: Point, c: Point, ctx: &mut PredicateCounters) -> Orientation {
    ctx.orientation_tests += 1;
    match cross(a, b, c).cmp(&0) {
        Ordering::Greater => Orientation::Left,
        Ordering::Less => Orientation::Right,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// Whether `p` lies strictly above the infinite line through `a` and `b`.
pub fn strictly_above(p: Point, a: Point, b: Point, ctx: &mut PredicateCounters) -> Result<bool> {
    ctx.coord_cmps += 1;
    let (lo, hi) = match a.x.cmp(&b.x) {
        Ordering::Less => (a, b),
        Ordering::Greater => (b, a),
        Ordering::Equal => return Err(HullError::VerticalLine { x: a.x }),
    };
    Ok(orientation(lo, hi, p, ctx) == Orientation::Left)
}

pub fn cmp_x(a: &IndexedPoint, b: &IndexedPoint, ctx: &mut PredicateCounters) -> Ordering {
    ctx.coord_cmps += 1;
    a.point.x.cmp(&b.point.x)
}

pub fn cmp_y(a: &IndexedPoint, b: &IndexedPoint, ctx: &mut PredicateCounters) -> Ordering {
    ctx.coord_cmps += 1;
    a.point.y.cmp(&b.point.y)
}

/// Compares `x(p)` against a vertical line. Lines always sit at the abscissa of
/// some input point, so this is a coordinate comparison.
#[inline]
pub fn cmp_x_line(p: &IndexedPoint, x0: i64, ctx: &mut PredicateCounters) -> Ordering {
    ctx.coord_cmps += 1;
    p.point.x.cmp(&x0)
}

/// Compares two line abscissae.
#[inline]
pub fn cmp_lines(a: i64, b: i64, ctx: &mut PredicateCounters) -> Ordering {
    ctx.coord_cmps += 1;
    a.cmp(&b)
}

/// Compares slope(a, b) with slope(c, d). Both pairs must be x-ordered.
pub fn cmp_slopes(a: Point, b: Point, c: Point, d: Point, ctx: &mut PredicateCounters) -> Ordering {
    ctx.orientation_tests += 1;
    debug_assert!(a.x < b.x && c.x < d.x);
    let dx1 = b.x as i128 - a.x as i128;
    let dy1 = b.y as i128 - a.y as i128;
    let dx2 = d.x as i128 - c.x as i128;
    let dy2 = d.y as i128 - c.y as i128;
    (dy1 * dx2).cmp(&(dy2 * dx1))
}

/// Compares the heights of `p` and `q` measured perpendicular to direction `a -> b`,
/// i.e. `y - s*x` with `s = slope(a, b)`. Requires `x(a) < x(b)`.
pub fn cmp_along(p: Point, q: Point, a: Point, b: Point, ctx: &mut PredicateCounters) -> Ordering {
    ctx.orientation_tests += 1;
    debug_assert!(a.x < b.x);
    let dx = b.x as i128 - a.x as i128;
    let dy = b.y as i128 - a.y as i128;
    let hp = p.y as i128 * dx - dy * p.x as i128;
    let hq = q.y as i128 * dx - dy * q.x as i128;
    hp.cmp(&hq)
}

/// Oracle-grade general position check: sorts copies of each coordinate.
pub fn check_general_position(points: &[IndexedPoint]) -> bool {
    general_position_violation(points).is_none()
}

pub(crate) fn general_position_violation(points: &[IndexedPoint]) -> Option<HullError> {
    for axis in ['x', 'y'] {
        let mut keyed: Vec<(i64, usize)> =
            points.iter().map(|p| (if axis == 'x' { p.x() } else { p.y() }, p.index)).collect();
        keyed.sort_unstable();
        if let Some(w) = keyed.windows(2).find(|w| w[0].0 == w[1].0) {
            let (first, second) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
            return Some(HullError::GeneralPosition { first, second, axis });
        }
    }
    None
}

/// An input sequence: indexed points in general position.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointSeq {
    points: Vec<IndexedPoint>,
}

impl PointSeq {
    /// Ingests raw points, assigning indices `1..=n` and validating range and general position.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let seq = Self::from_points_unchecked(points)?;
        if let Some(err) = general_position_violation(&seq.points) {
            return Err(err);
        }
        Ok(seq)
    }

    /// Assigns indices and validates the coordinate range only.
    pub fn from_points_unchecked(points: Vec<Point>) -> Result<Self> {
        let mut out = Vec::with_capacity(points.len());
        for (i, p) in points.into_iter().enumerate() {
            if !p.in_range() {
                let value = if p.x.abs() >= COORD_LIMIT { p.x } else { p.y };
                return Err(HullError::CoordinateOutOfRange { position: i + 1, value });
            }
            out.push(IndexedPoint { point: p, index: i + 1 });
        }
        Ok(PointSeq { points: out })
    }

    /// Drops exact duplicates (keeping the earliest occurrence and its index), then
    /// validates general position on what remains.
    pub fn dedup_by_coordinates(points: Vec<Point>) -> Result<Self> {
        let all = Self::from_points_unchecked(points)?;
        let mut seen: HashMap<Point, usize> = HashMap::with_capacity(all.len());
        let kept: Vec<IndexedPoint> =
            all.points.into_iter().filter(|p| seen.insert(p.point, p.index).is_none()).collect();
        if let Some(err) = general_position_violation(&kept) {
            return Err(err);
        }
        Ok(PointSeq { points: kept })
    }

    /// Wraps already-indexed points without validation.
    pub fn from_indexed(points: Vec<IndexedPoint>) -> Self {
        PointSeq { points }
    }

    pub fn as_slice(&self) -> &[IndexedPoint] {
        &self.points
    }

    pub fn into_inner(self) -> Vec<IndexedPoint> {
        self.points
    }

    pub fn raw_points(&self) -> Vec<Point> {
        self.points.iter().map(|p| p.point).collect()
    }
}

impl Deref for PointSeq {
    type Target = [IndexedPoint];

    fn deref(&self) -> &[IndexedPoint] {
        &self.points
    }
}
