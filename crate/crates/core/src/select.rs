//! Rank selection under a counting comparator.
//!
//! Delegates to the standard library's introselect, which is deterministic
//! and falls back to median of medians, so the worst case stays linear.

use std::cmp::Ordering;

/// Returns the element of rank `k` (0-based) under `cmp`, reordering `v` in place.
///
/// Panics if `k >= v.len()`.
pub fn select_nth<T: Copy, F: FnMut(&T, &T) -> Ordering>(v: &mut [T], k: usize, cmp: &mut F) -> T {
    assert!(k < v.len(), "rank {k} out of bounds for length {}", v.len());
    *v.select_nth_unstable_by(k, |a, b| cmp(a, b)).1
}
