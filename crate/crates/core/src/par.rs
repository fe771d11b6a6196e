//! Execution policy for sweeps.
//!
//! With the `parallel` feature, [`Exec::Parallel`] runs on the rayon pool;
//! without it every policy runs sequentially.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps every item, keeping input order.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Maps then folds with an associative, commutative `reduce`.
    pub fn map_reduce<T, R, F, I, G>(self, items: Vec<T>, f: F, identity: I, reduce: G) -> R
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
        I: Fn() -> R + Sync + Send,
        G: Fn(R, R) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).reduce(identity, reduce);
        }
        items.into_iter().map(f).fold(identity(), reduce)
    }
}

/// Runs `f` on a pool with `jobs` threads, or on the global pool.
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(j) = jobs {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn policies_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let a = Exec::Sequential.map_reduce(items.clone(), |x| x * x, || 0, |a, b| a + b);
        let b = Exec::Parallel.map_reduce(items.clone(), |x| x * x, || 0, |a, b| a + b);
        assert_eq!(a, b);
        assert_eq!(Exec::Parallel.map(items.clone(), |x| x + 1), Exec::Sequential.map(items, |x| x + 1));
    }
}
