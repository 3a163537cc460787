//! Thin switch between rayon and sequential iteration. Results are always
//! collected in index order, so output never depends on the schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..len`, possibly in parallel.
pub fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if len > 1 {
            return (0..len).into_par_iter().map(f).collect();
        }
    }
    (0..len).map(f).collect()
}

/// Runs `f` with parallelism capped at `threads` workers (0 means the
/// default pool). Without the `parallel` feature this just calls `f`.
pub fn with_thread_cap<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    {
        if threads > 0 {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                return pool.install(f);
            }
        }
    }
    let _ = threads;
    f()
}

/// Reads the `RINGDET_THREADS` cap; unset, empty or unparsable means 0.
pub fn thread_cap_from_env() -> usize {
    std::env::var("RINGDET_THREADS").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(0)
}
