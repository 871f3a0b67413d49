//! Data-parallel map over independent work items, with a sequential fallback.

/// Maps `f` over `items`, in parallel when the `parallel` feature is enabled
/// and `parallel` is set. Output order always matches input order.
pub(crate) fn map<T, R, F>(items: Vec<T>, parallel: bool, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel && items.len() > 1 {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = parallel;
    items.into_iter().map(f).collect()
}
