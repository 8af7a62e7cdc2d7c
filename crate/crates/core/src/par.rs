//! Data-parallel helpers. With the `parallel` feature these run on rayon;
//! without it, or with [`Execution::Sequential`], they are plain loops.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `f` applied to every index in `0..len`, results in index order.
pub fn map_indices<R, F>(len: usize, exec: Execution, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

/// Folds `0..len` in chunks with `fold`, then merges chunk results with
/// `merge`. The merge must be associative and commutative for the result to
/// be independent of scheduling.
pub fn fold_chunks<A, F, M>(len: usize, chunk: usize, exec: Execution, fold: F, merge: M) -> A
where
    A: Send + Default,
    F: Fn(std::ops::Range<usize>) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let chunk = chunk.max(1);
    let chunks = len.div_ceil(chunk);
    let range = |k: usize| (k * chunk)..((k + 1) * chunk).min(len);
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..chunks)
            .into_par_iter()
            .map(|k| fold(range(k)))
            .reduce(A::default, &merge);
    }
    let _ = exec;
    (0..chunks)
        .map(|k| fold(range(k)))
        .fold(A::default(), merge)
}
