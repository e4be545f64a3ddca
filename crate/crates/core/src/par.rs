//! Data-parallel helpers. With the `parallel` feature off every call runs
//! sequentially regardless of the requested [`Execution`].

/// How batch work (sweeps, enumeration, cycle search) is scheduled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    /// `true` when work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Order-preserving map over a slice.
pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Run `f` on a pool with `jobs` threads (`None` keeps the global pool).
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(n) = jobs {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
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
    fn map_preserves_order_in_both_modes() {
        let v: Vec<u32> = (0..1000).collect();
        let a = map(Execution::Parallel, &v, |x| x * 3);
        let b = map(Execution::Sequential, &v, |x| x * 3);
        assert_eq!(a, b);
        assert_eq!(a[999], 2997);
    }

    #[test]
    fn jobs_pool_runs_closure() {
        assert_eq!(with_jobs(Some(2), || 41 + 1), 42);
        assert_eq!(with_jobs(None, || 7), 7);
    }
}
