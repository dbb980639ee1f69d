//! Execution-mode switch: data-parallel via rayon or plain sequential.
//!
//! Every batch computation in this crate funnels through these helpers so
//! one build can run and benchmark both paths. Without the `parallel`
//! feature the parallel mode degrades to sequential.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[default]
    Parallel,
    Sequential,
}

impl ExecMode {
    /// Map `f` over `items`, preserving input order in the output.
    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            ExecMode::Parallel => items.into_par_iter().map(f).collect(),
            #[cfg(not(feature = "parallel"))]
            ExecMode::Parallel => items.into_iter().map(f).collect(),
            ExecMode::Sequential => items.into_iter().map(f).collect(),
        }
    }

    /// Map producing per-item vectors, concatenated in input order.
    pub fn flat_map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> Vec<U> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            ExecMode::Parallel => items.into_par_iter().flat_map_iter(f).collect(),
            #[cfg(not(feature = "parallel"))]
            ExecMode::Parallel => items.into_iter().flat_map(f).collect(),
            ExecMode::Sequential => items.into_iter().flat_map(f).collect(),
        }
    }
}
