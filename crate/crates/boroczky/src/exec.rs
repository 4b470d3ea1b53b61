//! Execution strategy for data-parallel inner loops.
//!
//! With the `parallel` feature (default) work is distributed through rayon;
//! without it, or after [`set_sequential`]`(true)`, the same closures run
//! sequentially. Results are merged in input order either way, so outputs
//! are identical regardless of schedule.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Force sequential execution at runtime (used by benches and `--threads 1`).
pub fn set_sequential(yes: bool) {
    FORCE_SEQUENTIAL.store(yes, Ordering::Relaxed);
}

/// Whether the next data-parallel loop will actually run in parallel.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::Relaxed)
}

/// Cap the rayon worker count. Returns false when the global pool was
/// already initialized (rayon allows configuring it only once).
#[cfg(feature = "parallel")]
pub fn set_threads(n: usize) -> bool {
    if n <= 1 {
        set_sequential(true);
        return true;
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .is_ok()
}

#[cfg(not(feature = "parallel"))]
pub fn set_threads(_n: usize) -> bool {
    true
}

/// Map in parallel (or sequentially), preserving input order.
pub fn map_collect<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    items.into_iter().map(f).collect()
}

/// Map over an index range, preserving order.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}
