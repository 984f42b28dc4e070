use ramsey_core::{Error, Result};

/// Runs `f` inside a rayon pool of `jobs` threads (0 = rayon's default).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadParameter(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(f)
}
