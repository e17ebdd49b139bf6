//! Shared thread pool for verification sweeps.
//!
//! Sweeps are chunked by their first index and evaluated in parallel. The
//! environment variable `PRELIE_WITT_THREADS` (a positive integer) caps the
//! pool size; anything unset or unparsable falls back to the rayon default.

use std::sync::OnceLock;

use rayon::ThreadPool;

static POOL: OnceLock<ThreadPool> = OnceLock::new();

pub fn pool() -> &'static ThreadPool {
    POOL.get_or_init(|| {
        let threads = std::env::var("PRELIE_WITT_THREADS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool construction")
    })
}

/// Map `items` in parallel, preserving order, then flatten.
pub fn par_flat_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Vec<U> + Sync + Send,
{
    use rayon::prelude::*;
    pool().install(|| items.into_par_iter().map(f).collect::<Vec<_>>())
        .into_iter()
        .flatten()
        .collect()
}
