//! Least-squares line fits used for order-of-accuracy and decay-rate studies.

/// Result of a straight-line least-squares fit y = slope * x + intercept.
#[derive(Debug, Clone, Copy)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// root-mean-square residual of the fit
    pub rms_residual: f64,
}

/// Ordinary least squares over the given points.
pub fn line_fit(points: &[(f64, f64)]) -> LineFit {
    assert!(points.len() >= 2, "need at least two points to fit a line");
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    let ss: f64 = points
        .iter()
        .map(|p| {
            let r = p.1 - (slope * p.0 + intercept);
            r * r
        })
        .sum();
    LineFit { slope, intercept, rms_residual: (ss / n).sqrt() }
}

/// Slope of log|y| against log x, skipping points where y is zero or not
/// finite. Returns `None` when fewer than two usable points remain.
pub fn log_log_slope(points: &[(f64, f64)]) -> Option<LineFit> {
    let usable: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && y.abs() > 0.0 && y.is_finite())
        .map(|(x, y)| (x.ln(), y.abs().ln()))
        .collect();
    if usable.len() < 2 {
        None
    } else {
        Some(line_fit(&usable))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn recovers_power_law() {
        let pts: Vec<(f64, f64)> = (1..=6).map(|k| {
            let x = 10f64.powi(-k);
            (x, 3.7 * x * x)
        })
        .collect();
        let fit = log_log_slope(&pts).unwrap();
        assert_relative_eq!(fit.slope, 2.0, epsilon = 1e-10);
    }
}
