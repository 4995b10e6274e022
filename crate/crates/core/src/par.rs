//! Data-parallel helpers. With the `parallel` feature these run on the
//! rayon pool, otherwise they fall back to plain iterators.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Maps a fallible `f` over `items`, returning the first error in order.
pub fn try_map<T: Sync, U: Send, E: Send>(items: &[T], f: impl Fn(&T) -> Result<U, E> + Sync + Send) -> Result<Vec<U>, E> {
    map(items, f).into_iter().collect()
}

/// Keeps the items of `range` accepted by `pred`, in increasing order.
#[cfg(feature = "parallel")]
pub fn filter_range(range: std::ops::Range<u64>, pred: impl Fn(u64) -> bool + Sync + Send) -> Vec<u64> {
    range.into_par_iter().filter(|&i| pred(i)).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn filter_range(range: std::ops::Range<u64>, pred: impl Fn(u64) -> bool + Sync + Send) -> Vec<u64> {
    range.filter(|&i| pred(i)).collect()
}
