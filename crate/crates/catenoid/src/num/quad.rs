//! Quadrature rules: adaptive Simpson, Gauss–Legendre panels, and
//! substitution-based half-line integration for exponentially decaying
//! integrands.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Nodes and weights of the `n`-point Gauss–Legendre rule on [-1, 1].
///
/// Computed once per order by Newton iteration on the Legendre recurrence and
/// cached process-wide.
pub fn gauss_legendre_nodes(n: usize) -> &'static (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static (Vec<f64>, Vec<f64>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard.entry(n).or_insert_with(|| {
        let rule = compute_gauss_legendre(n);
        Box::leak(Box::new(rule))
    })
}

fn compute_gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2, "Gauss-Legendre order must be at least 2");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess for the i-th positive root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and P_n'(x) via the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Gauss–Legendre quadrature of `f` over [a, b] with an `order`-point rule.
pub fn gauss_panel<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, order: usize) -> f64 {
    let (nodes, weights) = gauss_legendre_nodes(order);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Composite Gauss–Legendre over [a, b] split into `panels` equal panels.
pub fn gauss_composite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize, order: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut acc = 0.0;
    for k in 0..panels {
        acc += gauss_panel(&f, a + k as f64 * h, a + (k + 1) as f64 * h, order);
    }
    acc
}

/// Adaptive Simpson quadrature with absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_rec(&f, a, b, fa, fm, fb, whole, tol, 52)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Integral of `f` over the half line [0, inf) for integrands with an
/// exponentially decaying tail, via the substitution t = e^{-v} mapped back to
/// v = -ln t and composite Gauss–Legendre on dyadic panels in t.
///
/// `depth` dyadic panels cover t down to 2^{-depth}, i.e. v up to
/// depth * ln 2; the remaining tail of a decaying integrand falls below double
/// precision well before depth 80.
pub fn half_line_exp_decay<F: Fn(f64) -> f64>(f: F, depth: usize, order: usize) -> f64 {
    let g = |t: f64| f(-t.ln()) / t;
    let mut acc = 0.0;
    let mut hi = 1.0f64;
    for _ in 0..depth {
        let lo = 0.5 * hi;
        acc += gauss_panel(&g, lo, hi, order);
        hi = lo;
    }
    acc
}

/// Cumulative integrals of `f` along an increasing grid: entry k holds the
/// integral from `grid[0]` to `grid[k]`, each panel evaluated with an
/// `order`-point Gauss rule (optionally split into `sub` sub-panels).
pub fn cumulative_integral<F: Fn(f64) -> f64>(f: F, grid: &[f64], order: usize, sub: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(grid.len());
    let mut acc = 0.0;
    out.push(0.0);
    for w in grid.windows(2) {
        acc += gauss_composite(&f, w[0], w[1], sub, order);
        out.push(acc);
    }
    out
}
