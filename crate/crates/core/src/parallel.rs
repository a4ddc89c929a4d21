use rayon::prelude::*;

use crate::error::{Error, Result};

/// Runs `work` over every partition on `jobs` worker threads and concatenates
/// the results in partition order, so output never depends on `jobs`.
pub fn run_partitioned<P, T, F>(partitions: Vec<P>, jobs: usize, work: F) -> Result<Vec<T>>
where
    P: Send + Sync,
    T: Send,
    F: Fn(&P) -> Vec<T> + Send + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 {
        return Ok(partitions.iter().flat_map(&work).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let chunks: Vec<Vec<T>> = pool.install(|| partitions.par_iter().map(&work).collect());
    Ok(chunks.into_iter().flatten().collect())
}
