//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) work is spread over rayon's pool;
//! without it, or with [`Execution::Sequential`], everything runs in order on
//! the calling thread. Results are always returned in index order, so the
//! choice never changes output.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    /// `true` when this build can actually run in parallel.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `0..n`, returning results in index order.
pub fn map_indexed<T, F>(n: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Maps `f` over `0..n` and folds with an associative `merge`.
pub fn map_reduce<T, F, M>(n: usize, exec: Execution, identity: T, f: F, merge: M) -> T
where
    T: Send + Clone + Sync,
    F: Fn(usize) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n)
            .into_par_iter()
            .map(f)
            .reduce(|| identity.clone(), &merge);
    }
    let _ = exec;
    (0..n).map(f).fold(identity, merge)
}

/// Caps the global worker pool; returns `false` if it was already initialized.
pub fn init_threads(threads: Option<usize>) -> bool {
    #[cfg(feature = "parallel")]
    {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(t) = threads {
            b = b.num_threads(t.max(1));
        }
        b.build_global().is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        true
    }
}

/// Derives an independent per-trial seed from a run seed (splitmix64 mixing).
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    mix(seed ^ mix(index.wrapping_add(0x5851_F42D_4C95_7F2D)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |i: usize| (i * i) as u64 % 17;
        assert_eq!(
            map_indexed(1000, Execution::Parallel, f),
            map_indexed(1000, Execution::Sequential, f)
        );
        let merge = |mut a: Vec<usize>, b: Vec<usize>| {
            a.extend(b);
            a
        };
        let p = map_reduce(500, Execution::Parallel, Vec::new(), |i| vec![i], merge);
        let s = map_reduce(500, Execution::Sequential, Vec::new(), |i| vec![i], merge);
        assert_eq!(p, s);
    }

    #[test]
    fn trial_seeds_differ() {
        assert_ne!(trial_seed(1, 0), trial_seed(1, 1));
        assert_ne!(trial_seed(1, 0), trial_seed(2, 0));
        assert_eq!(trial_seed(7, 3), trial_seed(7, 3));
    }
}
