//! Centered finite-difference stencils on uniform grids.
//!
//! Interior points use the requested order (2 or 4); near a non-periodic
//! boundary the order-4 stencils fall back to order 2, and the outermost
//! points use one-sided differences. Sup-norm checks elsewhere exclude the
//! boundary band of width 2.

/// Width of the boundary band that callers exclude from sup-norm checks.
pub const BOUNDARY_BAND: usize = 2;

fn at(values: &[f64], i: isize, periodic: bool) -> f64 {
    let n = values.len() as isize;
    let idx = if periodic { i.rem_euclid(n) } else { i.clamp(0, n - 1) };
    values[idx as usize]
}

/// First derivative at index `i` of samples with spacing `h`.
pub fn d1(values: &[f64], i: usize, h: f64, order: usize, periodic: bool) -> f64 {
    let n = values.len();
    let ii = i as isize;
    let interior4 = periodic || (i >= 2 && i + 2 < n);
    let interior2 = periodic || (i >= 1 && i + 1 < n);
    if order >= 4 && interior4 {
        (at(values, ii - 2, periodic) - 8.0 * at(values, ii - 1, periodic)
            + 8.0 * at(values, ii + 1, periodic)
            - at(values, ii + 2, periodic))
            / (12.0 * h)
    } else if interior2 {
        (at(values, ii + 1, periodic) - at(values, ii - 1, periodic)) / (2.0 * h)
    } else if i == 0 {
        (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h)
    } else {
        (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h)
    }
}

/// Second derivative at index `i` of samples with spacing `h`.
pub fn d2(values: &[f64], i: usize, h: f64, order: usize, periodic: bool) -> f64 {
    let n = values.len();
    let ii = i as isize;
    let interior4 = periodic || (i >= 2 && i + 2 < n);
    let interior2 = periodic || (i >= 1 && i + 1 < n);
    let h2 = h * h;
    if order >= 4 && interior4 {
        (-at(values, ii - 2, periodic) + 16.0 * at(values, ii - 1, periodic)
            - 30.0 * at(values, ii, periodic)
            + 16.0 * at(values, ii + 1, periodic)
            - at(values, ii + 2, periodic))
            / (12.0 * h2)
    } else if interior2 {
        (at(values, ii - 1, periodic) - 2.0 * values[i] + at(values, ii + 1, periodic)) / h2
    } else if i == 0 {
        (2.0 * values[0] - 5.0 * values[1] + 4.0 * values[2] - values[3]) / h2
    } else {
        (2.0 * values[n - 1] - 5.0 * values[n - 2] + 4.0 * values[n - 3] - values[n - 4]) / h2
    }
}

/// All first derivatives of a sample vector.
pub fn d1_all(values: &[f64], h: f64, order: usize, periodic: bool) -> Vec<f64> {
    (0..values.len()).map(|i| d1(values, i, h, order, periodic)).collect()
}

/// All second derivatives of a sample vector.
pub fn d2_all(values: &[f64], h: f64, order: usize, periodic: bool) -> Vec<f64> {
    (0..values.len()).map(|i| d2(values, i, h, order, periodic)).collect()
}

/// Centered stencil derivatives of a scalar function of one variable,
/// evaluated by sampling; Richardson-style order-4 formulas.
pub fn d1_of_fn<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

pub fn d2_of_fn<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2.0 * h))
        / (12.0 * h * h)
}
