//! Data-parallel helpers with a sequential fallback.
//!
//! Every kernel in the crate takes an [`Execution`] and routes its inner
//! loop through the functions here. With the `parallel` feature disabled
//! the parallel variant silently runs sequentially, so results never depend
//! on the setting: reductions use a fixed index order for tie-breaking.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when work will actually be spread across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Map `f` over `items`, preserving order.
pub fn map_vec<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Map `f` over the integer range `lo..=hi`, preserving order.
pub fn map_range<U, F>(exec: Execution, lo: u64, hi: u64, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(u64) -> U + Sync + Send,
{
    if lo > hi {
        return Vec::new();
    }
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (lo..=hi).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (lo..=hi).map(f).collect()
}

/// Index of the first element of `lo..=hi` satisfying `pred`.
///
/// The parallel path evaluates in chunks and still returns the lowest
/// matching index.
pub fn find_first<F>(exec: Execution, lo: u64, hi: u64, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    if lo > hi {
        return None;
    }
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (lo..=hi).into_par_iter().find_first(|&i| pred(i));
    }
    let _ = exec;
    (lo..=hi).find(|&i| pred(i))
}
