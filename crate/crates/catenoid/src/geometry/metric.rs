//! The asymptotically Schwarzschildean metric family on exterior domains:
//! g_ij = (1 + m / (2 |x|^{n-1}))^{4/(n-1)} delta_ij + e_ij, with the decaying
//! perturbation e given either as a radial scalar profile h(r) delta_ij or as
//! a full tensor callback with two derivatives.

use std::sync::Arc;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::num::spline::CubicSpline;

type Scalar1 = dyn Fn(f64) -> f64 + Send + Sync;

/// Radial scalar profile h(r) with two derivatives.
pub struct RadialProfile {
    h: Box<Scalar1>,
    dh: Box<Scalar1>,
    d2h: Box<Scalar1>,
}

impl RadialProfile {
    pub fn new(
        h: impl Fn(f64) -> f64 + Send + Sync + 'static,
        dh: impl Fn(f64) -> f64 + Send + Sync + 'static,
        d2h: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self { h: Box::new(h), dh: Box::new(dh), d2h: Box::new(d2h) }
    }

    pub fn zero() -> Self {
        Self::new(|_| 0.0, |_| 0.0, |_| 0.0)
    }

    /// Spline-backed profile from (r, h) samples; derivatives come from the
    /// same spline so value and derivative stay consistent.
    pub fn from_table(r: Vec<f64>, h: Vec<f64>) -> Self {
        let spline = Arc::new(CubicSpline::new(r, h));
        let (lo, hi) = spline.domain();
        let clamp = move |x: f64| x.clamp(lo, hi);
        let s1 = spline.clone();
        let s2 = spline.clone();
        let s3 = spline;
        Self::new(
            move |r| s1.eval(clamp(r)),
            move |r| s2.deriv(clamp(r)),
            move |r| s3.deriv2(clamp(r)),
        )
    }

    pub fn h(&self, r: f64) -> f64 {
        (self.h)(r)
    }

    pub fn dh(&self, r: f64) -> f64 {
        (self.dh)(r)
    }

    pub fn d2h(&self, r: f64) -> f64 {
        (self.d2h)(r)
    }
}

/// Full tensor perturbation with two derivatives.
pub trait TensorPerturbation: Send + Sync {
    fn eval(&self, x: &[f64]) -> DMatrix<f64>;
    fn deriv(&self, x: &[f64], k: usize) -> DMatrix<f64>;
    fn deriv2(&self, x: &[f64], k: usize, l: usize) -> DMatrix<f64>;
}

pub enum MetricPerturbation {
    None,
    Radial(Arc<RadialProfile>),
    Tensor(Arc<dyn TensorPerturbation>),
}

impl Clone for MetricPerturbation {
    fn clone(&self) -> Self {
        match self {
            Self::None => Self::None,
            Self::Radial(p) => Self::Radial(p.clone()),
            Self::Tensor(t) => Self::Tensor(t.clone()),
        }
    }
}

/// Schwarzschild mass plus decaying perturbation on |x| >= r0.
#[derive(Clone)]
pub struct AmbientMetric {
    pub mass: f64,
    pub dim_n: u32,
    pub r0: f64,
    pub perturbation: MetricPerturbation,
}

impl AmbientMetric {
    pub fn new(mass: f64, dim_n: u32, r0: f64, perturbation: MetricPerturbation) -> Result<Self> {
        if mass < 0.0 {
            return Err(Error::InvalidParameter(format!("mass must be nonnegative, got {mass}")));
        }
        if dim_n < 2 {
            return Err(Error::InvalidParameter(format!("dim_n must be >= 2, got {dim_n}")));
        }
        if !(r0 > 0.0) {
            return Err(Error::InvalidParameter(format!("r0 must be positive, got {r0}")));
        }
        Ok(Self { mass, dim_n, r0, perturbation })
    }

    pub fn flat(dim_n: u32) -> Self {
        Self { mass: 0.0, dim_n, r0: 1e-12, perturbation: MetricPerturbation::None }
    }

    pub fn schwarzschild(mass: f64, dim_n: u32, r0: f64) -> Result<Self> {
        Self::new(mass, dim_n, r0, MetricPerturbation::None)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_n as usize + 1
    }

    fn check_domain(&self, x: &[f64]) -> Result<f64> {
        let r = x.iter().map(|a| a * a).sum::<f64>().sqrt();
        if r < self.r0 {
            Err(Error::MetricDomain { radius: r, r0: self.r0 })
        } else {
            Ok(r)
        }
    }

    /// Conformal factor f(x) = 1 + m / (2 |x|^{n-1}).
    pub fn conformal_factor(&self, x: &[f64]) -> f64 {
        let r = x.iter().map(|a| a * a).sum::<f64>().sqrt();
        1.0 + 0.5 * self.mass * r.powi(1 - self.dim_n as i32)
    }

    /// Gradient of f: df_k = -(m (n-1) / 2) x_k |x|^{-n-1}.
    pub fn grad_f(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim_n as f64;
        let r = x.iter().map(|a| a * a).sum::<f64>().sqrt();
        let coef = -0.5 * self.mass * (n - 1.0) * r.powf(-n - 1.0);
        x.iter().map(|xk| coef * xk).collect()
    }

    /// Gradient of log f.
    pub fn grad_log_f(&self, x: &[f64]) -> Vec<f64> {
        let f = self.conformal_factor(x);
        self.grad_f(x).into_iter().map(|d| d / f).collect()
    }

    fn hess_f(&self, x: &[f64]) -> DMatrix<f64> {
        let d = x.len();
        let n = self.dim_n as f64;
        let r2: f64 = x.iter().map(|a| a * a).sum();
        let r = r2.sqrt();
        let c = -0.5 * self.mass * (n - 1.0);
        DMatrix::from_fn(d, d, |k, l| {
            let kron = if k == l { 1.0 } else { 0.0 };
            c * (kron * r.powf(-n - 1.0) - (n + 1.0) * x[k] * x[l] * r.powf(-n - 3.0))
        })
    }

    /// Conformal coefficient F = f^{4/(n-1)} and its first two derivatives.
    fn conformal_coeff(&self, x: &[f64]) -> (f64, Vec<f64>, DMatrix<f64>) {
        let d = x.len();
        let p = 4.0 / (self.dim_n as f64 - 1.0);
        let f = self.conformal_factor(x);
        let df = self.grad_f(x);
        let hf = self.hess_f(x);
        let big_f = f.powf(p);
        let dbig: Vec<f64> = df.iter().map(|dk| p * f.powf(p - 1.0) * dk).collect();
        let hbig = DMatrix::from_fn(d, d, |k, l| {
            p * (p - 1.0) * f.powf(p - 2.0) * df[k] * df[l] + p * f.powf(p - 1.0) * hf[(k, l)]
        });
        (big_f, dbig, hbig)
    }

    fn perturbation_eval(&self, x: &[f64]) -> DMatrix<f64> {
        let d = x.len();
        match &self.perturbation {
            MetricPerturbation::None => DMatrix::zeros(d, d),
            MetricPerturbation::Radial(p) => {
                let r = x.iter().map(|a| a * a).sum::<f64>().sqrt();
                DMatrix::identity(d, d) * p.h(r)
            }
            MetricPerturbation::Tensor(t) => t.eval(x),
        }
    }

    fn perturbation_deriv(&self, x: &[f64], k: usize) -> DMatrix<f64> {
        let d = x.len();
        match &self.perturbation {
            MetricPerturbation::None => DMatrix::zeros(d, d),
            MetricPerturbation::Radial(p) => {
                let r = x.iter().map(|a| a * a).sum::<f64>().sqrt();
                DMatrix::identity(d, d) * (p.dh(r) * x[k] / r)
            }
            MetricPerturbation::Tensor(t) => t.deriv(x, k),
        }
    }

    fn perturbation_deriv2(&self, x: &[f64], k: usize, l: usize) -> DMatrix<f64> {
        let d = x.len();
        match &self.perturbation {
            MetricPerturbation::None => DMatrix::zeros(d, d),
            MetricPerturbation::Radial(p) => {
                let r2: f64 = x.iter().map(|a| a * a).sum();
                let r = r2.sqrt();
                let kron = if k == l { 1.0 } else { 0.0 };
                let scalar = p.d2h(r) * x[k] * x[l] / r2 + p.dh(r) * (kron / r - x[k] * x[l] / (r2 * r));
                DMatrix::identity(d, d) * scalar
            }
            MetricPerturbation::Tensor(t) => t.deriv2(x, k, l),
        }
    }

    /// g_ij(x) as a symmetric matrix. Errors inside the inner radius.
    pub fn eval(&self, x: &[f64]) -> Result<DMatrix<f64>> {
        self.check_domain(x)?;
        let (big_f, _, _) = self.conformal_coeff(x);
        let d = x.len();
        Ok(DMatrix::identity(d, d) * big_f + self.perturbation_eval(x))
    }

    /// First derivatives d_k g and second derivatives d_k d_l g.
    #[allow(clippy::type_complexity)]
    pub fn derivs(&self, x: &[f64]) -> Result<(Vec<DMatrix<f64>>, Vec<Vec<DMatrix<f64>>>)> {
        self.check_domain(x)?;
        let d = x.len();
        let (_, dbig, hbig) = self.conformal_coeff(x);
        let first: Vec<DMatrix<f64>> = (0..d)
            .map(|k| DMatrix::identity(d, d) * dbig[k] + self.perturbation_deriv(x, k))
            .collect();
        let second: Vec<Vec<DMatrix<f64>>> = (0..d)
            .map(|k| {
                (0..d)
                    .map(|l| DMatrix::identity(d, d) * hbig[(k, l)] + self.perturbation_deriv2(x, k, l))
                    .collect()
            })
            .collect();
        Ok((first, second))
    }

    /// Christoffel symbols Gamma^k_{ab} at x, indexed [k][(a, b)].
    pub fn christoffel(&self, x: &[f64]) -> Result<Vec<DMatrix<f64>>> {
        let d = x.len();
        let g = self.eval(x)?;
        let (dg, _) = self.derivs(x)?;
        let ginv = g.clone().try_inverse().ok_or(Error::NonFinite("metric inverse"))?;
        let mut out = Vec::with_capacity(d);
        for k in 0..d {
            let mut m = DMatrix::zeros(d, d);
            for a in 0..d {
                for b in 0..d {
                    let mut acc = 0.0;
                    for l in 0..d {
                        acc += ginv[(k, l)] * (dg[a][(l, b)] + dg[b][(l, a)] - dg[l][(a, b)]);
                    }
                    m[(a, b)] = 0.5 * acc;
                }
            }
            out.push(m);
        }
        Ok(out)
    }

    /// True when g(x) is symmetric positive definite.
    pub fn is_spd_at(&self, x: &[f64]) -> bool {
        match self.eval(x) {
            Ok(g) => g.cholesky().is_some(),
            Err(_) => false,
        }
    }

    /// Discrete membership check for the decay class of e: the sup over the
    /// given radii of ||d^alpha e|| |x|^{n+|alpha|}, per derivative order
    /// alpha <= k (k <= 2). Directions are sampled along the first axis.
    pub fn perturbation_decay_sup(&self, radii: &[f64], k: usize) -> Vec<f64> {
        let d = self.ambient_dim();
        let mut sups = vec![0.0f64; k + 1];
        for &r in radii {
            let mut x = vec![0.0; d];
            x[0] = r;
            let n = self.dim_n as f64;
            let e = self.perturbation_eval(&x);
            sups[0] = sups[0].max(e.norm() * r.powf(n));
            if k >= 1 {
                let mut worst = 0.0f64;
                for kk in 0..d {
                    worst = worst.max(self.perturbation_deriv(&x, kk).norm());
                }
                sups[1] = sups[1].max(worst * r.powf(n + 1.0));
            }
            if k >= 2 {
                let mut worst = 0.0f64;
                for kk in 0..d {
                    for ll in 0..d {
                        worst = worst.max(self.perturbation_deriv2(&x, kk, ll).norm());
                    }
                }
                sups[2] = sups[2].max(worst * r.powf(n + 2.0));
            }
        }
        sups
    }
}
