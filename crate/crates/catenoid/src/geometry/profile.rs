//! Profile functions of the n-catenoid: phi, its derivatives, and the height
//! integral psi with its total half-line value.
//!
//! phi(s) = cosh((n-1)s)^{1/(n-1)}, psi(s) = int_0^s phi^{2-n}. For n = 2 the
//! integral is s exactly; for n >= 3 psi is precomputed on a table by
//! cumulative Gauss panels and spline-interpolated off-grid, with a binomial
//! tail series past the table edge.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::num::quad::cumulative_integral;
use crate::num::spline::CubicSpline;

/// Table edge for the psi quadrature; beyond it the tail series applies.
const PSI_TABLE_EDGE: f64 = 12.0;
const PSI_TABLE_STEP: f64 = 0.004;
const TAIL_TERMS: usize = 10;

/// phi, psi and the first phi derivative at one point.
#[derive(Debug, Clone, Copy)]
pub struct ProfilePair {
    pub phi: f64,
    pub psi: f64,
    pub dphi: f64,
}

/// phi(s) = cosh((n-1)s)^{1/(n-1)}.
pub fn phi(n: u32, s: f64) -> f64 {
    let k = (n - 1) as f64;
    (k * s).cosh().powf(1.0 / k)
}

/// d phi/ds = sinh((n-1)s) cosh((n-1)s)^{(2-n)/(n-1)}.
pub fn dphi(n: u32, s: f64) -> f64 {
    let k = (n - 1) as f64;
    (k * s).sinh() * (k * s).cosh().powf((2.0 - n as f64) / k)
}

/// d^2 phi/ds^2 = (n-1) phi + (2-n) sinh^2((n-1)s) cosh((n-1)s)^{(3-2n)/(n-1)}.
pub fn ddphi(n: u32, s: f64) -> f64 {
    let k = (n - 1) as f64;
    let sh = (k * s).sinh();
    k * phi(n, s) + (2.0 - n as f64) * sh * sh * (k * s).cosh().powf((3.0 - 2.0 * n as f64) / k)
}

/// phi(s)^p for real p, stable at large |s|.
pub fn phi_pow(n: u32, s: f64, p: f64) -> f64 {
    let k = (n - 1) as f64;
    let a = (k * s).abs();
    if a > 30.0 {
        // ln cosh = a - ln2 + ln(1+e^{-2a})
        let lc = a - std::f64::consts::LN_2 + (-2.0 * a).exp().ln_1p();
        (p / k * lc).exp()
    } else {
        (k * s).cosh().powf(p / k)
    }
}

/// Cached psi machinery for one dimension n >= 3.
#[derive(Debug)]
pub struct PsiTable {
    n: u32,
    spline: CubicSpline,
    /// psi at the table edge
    psi_edge: f64,
    /// total half-line integral T = int_0^inf phi^{2-n}
    total: f64,
}

impl PsiTable {
    fn build(n: u32) -> Self {
        assert!(n >= 3);
        let steps = (PSI_TABLE_EDGE / PSI_TABLE_STEP).round() as usize;
        let grid: Vec<f64> = (0..=steps).map(|i| i as f64 * PSI_TABLE_STEP).collect();
        let integrand = |s: f64| phi_pow(n, s, 2.0 - n as f64);
        let cum = cumulative_integral(integrand, &grid, 12, 1);
        let psi_edge = *cum.last().unwrap();
        let total = psi_edge + tail(n, PSI_TABLE_EDGE);
        let spline = CubicSpline::new(grid, cum);
        Self { n, spline, psi_edge, total }
    }

    /// psi(s) (odd in s).
    pub fn psi(&self, s: f64) -> f64 {
        let a = s.abs();
        let val = if a <= PSI_TABLE_EDGE {
            self.spline.eval(a)
        } else {
            self.psi_edge + (tail(self.n, PSI_TABLE_EDGE) - tail(self.n, a))
        };
        if s < 0.0 {
            -val
        } else {
            val
        }
    }

    /// T = int_0^infty phi^{2-n} d sigma (finite for n >= 3).
    pub fn total(&self) -> f64 {
        self.total
    }

    /// omega(s) = int_s^infty phi^{2-n} d sigma = T - psi(s).
    pub fn omega_tail(&self, s: f64) -> f64 {
        self.total - self.psi(s)
    }
}

/// Tail integral int_s^inf cosh((n-1)t)^{-(n-2)/(n-1)} dt by the binomial
/// series in e^{-2(n-1)t}; accurate for s >= 2.
fn tail(n: u32, s: f64) -> f64 {
    let k = (n - 1) as f64;
    let beta = (n as f64 - 2.0) / k;
    // cosh(ks)^{-beta} = e^{-beta k s} 2^{beta} (1 + e^{-2ks})^{-beta}
    let mut acc = 0.0;
    let mut coeff = 1.0; // binomial C(-beta, j) accumulated
    for j in 0..TAIL_TERMS {
        let jf = j as f64;
        if j > 0 {
            coeff *= (-beta - (jf - 1.0)) / jf;
        }
        let rate = beta * k + 2.0 * k * jf;
        acc += coeff * (-rate * s).exp() / rate;
    }
    2f64.powf(beta) * acc
}

fn psi_cache(n: u32) -> Arc<PsiTable> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<PsiTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard.entry(n).or_insert_with(|| Arc::new(PsiTable::build(n))).clone()
}

/// psi(s) for any n >= 2.
pub fn psi(n: u32, s: f64) -> f64 {
    if n == 2 {
        s
    } else {
        psi_cache(n).psi(s)
    }
}

/// The (phi, psi, dphi) triple of the spec.
pub fn profile(n: u32, s: f64) -> ProfilePair {
    assert!(n >= 2, "surface dimension must be at least 2");
    ProfilePair { phi: phi(n, s), psi: psi(n, s), dphi: dphi(n, s) }
}

/// T = int_0^inf phi^{2-n}; infinite for n = 2 (returned as f64::INFINITY).
pub fn psi_total(n: u32) -> f64 {
    if n == 2 {
        f64::INFINITY
    } else {
        psi_cache(n).total()
    }
}

/// omega(s) = int_s^inf phi^{2-n} (n >= 3).
pub fn omega_tail(n: u32, s: f64) -> f64 {
    assert!(n >= 3);
    psi_cache(n).omega_tail(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::quad::adaptive_simpson;
    use approx::assert_relative_eq;

    #[test]
    fn n2_profile_is_cosh_and_identity() {
        let p = profile(2, 1.3);
        assert_relative_eq!(p.phi, 1.3f64.cosh(), max_relative = 1e-15);
        assert_relative_eq!(p.psi, 1.3, max_relative = 1e-15);
        assert_relative_eq!(p.dphi, 1.3f64.sinh(), max_relative = 1e-15);
    }

    #[test]
    fn psi_matches_adaptive_quadrature_oracle() {
        // n = 3: psi(1) = int_0^1 cosh(2 sigma)^{-1/2} d sigma
        let oracle = adaptive_simpson(|x| (2.0 * x).cosh().powf(-0.5), 0.0, 1.0, 1e-14);
        assert_relative_eq!(psi(3, 1.0), oracle, epsilon = 1e-10);
        // odd symmetry
        assert_relative_eq!(psi(3, -1.0), -oracle, epsilon = 1e-10);
    }

    #[test]
    fn psi_tail_consistent_with_quadrature() {
        for n in [3u32, 4, 5] {
            let direct = adaptive_simpson(|x| phi_pow(n, x, 2.0 - n as f64), 0.0, 14.5, 1e-14)
                + tail(n, 14.5);
            assert_relative_eq!(psi(n, 14.5) + omega_tail(n, 14.5), direct + omega_tail(n, 14.5), max_relative = 1e-11);
            assert_relative_eq!(psi_total(n), direct, max_relative = 1e-11);
        }
    }

    #[test]
    fn phi_evenness_and_derivative_oddness() {
        for n in [2u32, 3, 4, 5] {
            for s in [0.3, 1.7, 4.0] {
                assert_relative_eq!(phi(n, -s), phi(n, s), max_relative = 1e-14);
                assert_relative_eq!(dphi(n, -s), -dphi(n, s), max_relative = 1e-14);
            }
            assert_relative_eq!(ddphi(n, 0.0), (n - 1) as f64, max_relative = 1e-14);
        }
    }

    #[test]
    fn ddphi_matches_finite_differences() {
        for n in [2u32, 3, 5] {
            for s in [-2.0, 0.4, 3.1] {
                let fd = crate::num::stencil::d2_of_fn(|t| phi(n, t), s, 1e-3);
                assert_relative_eq!(ddphi(n, s), fd, max_relative = 1e-7);
            }
        }
    }
}
