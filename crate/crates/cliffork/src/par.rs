//! Data-parallel map used by the sweeps.
//!
//! With the `parallel` feature the work runs on rayon; `CLIFFORK_THREADS`
//! bounds the worker count. Without the feature everything is sequential.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

pub const THREADS_VAR: &str = "CLIFFORK_THREADS";

/// Worker bound from the environment, if set to a positive integer.
pub fn thread_limit() -> Option<usize> {
    std::env::var(THREADS_VAR).ok()?.trim().parse().ok().filter(|&n: &usize| n > 0)
}

pub fn default_mode() -> Mode {
    if cfg!(feature = "parallel") && thread_limit() != Some(1) {
        Mode::Parallel
    } else {
        Mode::Sequential
    }
}

#[cfg(feature = "parallel")]
fn pool() -> &'static rayon::ThreadPool {
    use std::sync::OnceLock;
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut b = rayon::ThreadPoolBuilder::new().thread_name(|i| format!("cliffork-{}", i));
        if let Some(n) = thread_limit() {
            b = b.num_threads(n);
        }
        b.build().expect("thread pool")
    })
}

pub fn map_with<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        Mode::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            pool().install(|| items.par_iter().map(f).collect())
        }
        #[cfg(not(feature = "parallel"))]
        Mode::Parallel => items.iter().map(f).collect(),
    }
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_with(default_mode(), items, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let v: Vec<u64> = (0..1000).collect();
        let a = map_with(Mode::Sequential, &v, |x| x * x);
        let b = map_with(Mode::Parallel, &v, |x| x * x);
        assert_eq!(a, b);
    }
}
