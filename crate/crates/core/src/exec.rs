//! Data-parallel sweeps over formula fragments and code ranges.
//!
//! With the `parallel` feature (on by default) sweeps run on the rayon
//! global pool; without it, or with [`Strategy::Sequential`], they are plain
//! loops. Both strategies return identical results: searches report the
//! earliest hit in input order, maps preserve input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Defaults to `Parallel` when the feature is on.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Strategy {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Sequential => "sequential",
            #[cfg(feature = "parallel")]
            Strategy::Parallel => "parallel",
        }
    }

    /// Earliest `f(item)` that is `Some`, in input order.
    pub fn find_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().find_map(f),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().find_map_first(f),
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Number of items for which `pred` holds.
    pub fn count<T, F>(self, items: &[T], pred: F) -> usize
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().filter(|t| pred(t)).count(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().filter(|t| pred(t)).count(),
        }
    }

    /// Both strategies compiled into this build.
    pub fn available() -> Vec<Strategy> {
        vec![
            Strategy::Sequential,
            #[cfg(feature = "parallel")]
            Strategy::Parallel,
        ]
    }
}
