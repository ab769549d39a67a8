//! Data-parallel helpers with a sequential twin.
//!
//! Every batch workload goes through [`Execution`], so the same call site
//! can be benchmarked both ways. Without the `parallel` feature the
//! `Parallel` variant silently runs sequentially. Results are always
//! returned in input order, so output never depends on the mode.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run the `Parallel` variant.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    pub fn map_range<R, F>(self, range: std::ops::Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                range.into_par_iter().map(f).collect()
            }
            _ => range.map(f).collect(),
        }
    }

    /// First `Some` in input order, as the sequential scan would return.
    pub fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().find_map_first(f)
            }
            _ => items.iter().find_map(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..500).collect();
        let f = |x: &u64| x * x % 97;
        assert_eq!(
            Execution::Sequential.map(&items, f),
            Execution::Parallel.map(&items, f)
        );
        let g = |x: &u64| (x % 37 == 36).then_some(*x);
        assert_eq!(Execution::Sequential.find_map_first(&items, g), Some(36));
        assert_eq!(Execution::Parallel.find_map_first(&items, g), Some(36));
        assert_eq!(
            Execution::Parallel.map_range(0..10, |i| i + 1),
            (1..11).collect::<Vec<_>>()
        );
    }
}
