//! Execution-mode plumbing: data-parallel map with a sequential fallback.
//!
//! The `parallel` feature (default) brings in rayon; `LAME_THREADS` caps the
//! global pool. Scans accept an explicit mode so benchmarks can compare both
//! paths in a single build.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl ExecMode {
    /// The default for library entry points: parallel when compiled in.
    pub fn auto() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

#[cfg(feature = "parallel")]
fn init_pool() {
    use std::sync::Once;
    static INIT: Once = Once::new();
    INIT.call_once(|| {
        if let Ok(n) = std::env::var("LAME_THREADS") {
            if let Ok(n) = n.parse::<usize>() {
                // ignore failure: a pool may already exist in this process
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    });
}

/// Index-parallel map producing a vector in index order.
pub fn map_indexed<T, F>(mode: ExecMode, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..n).map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                init_pool();
                use rayon::prelude::*;
                return (0..n).into_par_iter().map(f).collect();
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..n).map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree_and_preserve_order() {
        let f = |i: usize| (i * i) as u64;
        let seq = map_indexed(ExecMode::Sequential, 1000, f);
        let par = map_indexed(ExecMode::Parallel, 1000, f);
        assert_eq!(seq, par);
        assert_eq!(seq[37], 37 * 37);
    }
}
