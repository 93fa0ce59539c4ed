//! Data-parallel fan-out with a sequential fallback.
//!
//! With the `parallel` feature (default) the helpers run on rayon and the
//! worker count can be pinned per call tree; without it they degrade to
//! plain sequential loops. Both paths preserve input order, so downstream
//! output is identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Runs `body` on a worker pool with `jobs` threads (0 = default size).
/// Sequential builds run `body` directly and ignore `jobs`.
pub fn with_jobs<R: Send>(jobs: usize, body: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        if jobs == 0 {
            return body();
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool")
            .install(body)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        body()
    }
}

/// Whether this build fans work out across threads.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

/// Worker count of the default pool; 1 in sequential builds.
pub fn default_workers() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
