//! Execution helpers for grid sweeps and parameter batches.
//!
//! With the default `parallel` feature the indexed map runs on the rayon
//! thread pool; without it the same call is a plain sequential loop, so the
//! sequential build needs no code changes. Results are collected by index and
//! any floating-point reduction happens sequentially afterwards, which keeps
//! outputs bit-identical across thread counts.

/// Maps `f` over `0..len`, in parallel when the `parallel` feature is active.
#[cfg(feature = "parallel")]
pub fn map_indexed<U: Send, F: Fn(usize) -> U + Sync>(len: usize, f: F) -> Vec<U> {
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..len` sequentially (fallback build).
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<U, F: Fn(usize) -> U + Sync>(len: usize, f: F) -> Vec<U> {
    (0..len).map(f).collect()
}

/// Always-sequential variant, kept available so benchmarks can compare the
/// two paths within one build.
pub fn map_indexed_seq<U, F: Fn(usize) -> U>(len: usize, f: F) -> Vec<U> {
    (0..len).map(f).collect()
}

/// Sequential sum of a slice; used after parallel maps so the reduction order
/// is deterministic.
pub fn sum(values: &[f64]) -> f64 {
    values.iter().sum()
}

/// Sequential maximum of a slice, ignoring NaNs.
pub fn max(values: &[f64]) -> f64 {
    values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}
