//! Data-parallel execution of element sweeps.
//!
//! Every exhaustive loop in this crate funnels through these helpers. With
//! the `parallel` feature (on by default) the work is spread over a rayon
//! pool; without it, or with [`ExecMode::Sequential`], the same closures run
//! on the calling thread. Results preserve input order either way, so sweep
//! output is deterministic regardless of the mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Whether a sweep fans out over the rayon pool or stays on one thread.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExecMode {
    /// Use the rayon pool when the `parallel` feature is enabled; falls back
    /// to sequential execution otherwise.
    #[default]
    Parallel,
    Sequential,
}

/// Applies `f` to every index in `range`, collecting results in order.
pub fn map_range<U, F>(mode: ExecMode, range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => range.map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                range.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                range.map(f).collect()
            }
        }
    }
}

/// Applies `f` to every item of `items`, collecting results in order.
pub fn map_slice<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.iter().map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().map(f).collect()
            }
        }
    }
}

/// First `Some` produced by `f` over `range`, in index order.
pub fn find_map_first<U, F>(mode: ExecMode, range: std::ops::Range<usize>, f: F) -> Option<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    match mode {
        ExecMode::Sequential => range.into_iter().find_map(f),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                range.into_par_iter().filter_map(f).find_first(|_| true)
            }
            #[cfg(not(feature = "parallel"))]
            {
                range.into_iter().find_map(f)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_range_preserves_order_in_both_modes() {
        let seq = map_range(ExecMode::Sequential, 0..100, |i| i * i);
        let par = map_range(ExecMode::Parallel, 0..100, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }

    #[test]
    fn find_map_first_returns_lowest_index_match() {
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            let hit = find_map_first(mode, 0..1000, |i| (i % 37 == 5).then_some(i));
            assert_eq!(hit, Some(5));
        }
    }
}
