//! Data-parallel execution helper.
//!
//! Interface computations within a stage are independent, so the hot loops
//! map over index ranges. With the `parallel` feature the mapping runs on
//! the rayon pool; a process-wide switch allows benchmarks to compare the
//! sequential path inside the same binary. Results are always collected in
//! index order, so output is deterministic either way.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL_ENABLED: AtomicBool = AtomicBool::new(true);

/// Globally enable or disable the rayon path (no-op without the
/// `parallel` feature). Thread count is rayon's own concern; set
/// `RAYON_NUM_THREADS` in the environment to control it.
pub fn set_parallel(enabled: bool) {
    PARALLEL_ENABLED.store(enabled, Ordering::Relaxed);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL_ENABLED.load(Ordering::Relaxed)
}

/// Map `f` over `0..n`, collecting results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    if parallel_enabled() && n >= 512 {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Fallible variant: the first error (lowest index) wins.
pub fn try_map_indexed<T, F>(n: usize, f: F) -> crate::error::Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> crate::error::Result<T> + Sync + Send,
{
    let results = map_indexed(n, f);
    results.into_iter().collect()
}
