//! Exact parametrizations of catenoids and their normal graphs in all
//! dimensions, profile functions, and the asymptotically Schwarzschildean
//! metric family.

pub mod field;
pub mod grid;
pub mod metric;
pub mod profile;
pub mod scaled;

use crate::error::{Error, Result};

pub use field::{AnalyticOmega, OmegaForm, OmegaJet, PerturbationField};
pub use grid::CylinderGrid;
pub use metric::{AmbientMetric, MetricPerturbation, RadialProfile, TensorPerturbation};
pub use profile::{profile, psi_total, ProfilePair};
pub use scaled::LogScaled;

/// Reference catenoid: neck radius c > 0 and surface dimension n >= 2 (the
/// ambient space is R^{n+1}).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatenoidSpec {
    neck: f64,
    dim_n: u32,
}

impl CatenoidSpec {
    pub fn new(neck: f64, dim_n: u32) -> Result<Self> {
        if !(neck > 0.0) || !neck.is_finite() {
            return Err(Error::InvalidParameter(format!("neck must be a positive real, got {neck}")));
        }
        if dim_n < 2 {
            return Err(Error::InvalidParameter(format!("dim_n must be >= 2, got {dim_n}")));
        }
        Ok(Self { neck, dim_n })
    }

    pub fn neck(&self) -> f64 {
        self.neck
    }

    pub fn dim_n(&self) -> u32 {
        self.dim_n
    }

    fn require_dim2(&self) -> Result<()> {
        if self.dim_n != 2 {
            return Err(Error::InvalidParameter(format!(
                "this operation uses the cylinder chart and needs dim_n = 2, got {}",
                self.dim_n
            )));
        }
        Ok(())
    }
}

/// A point of the catenoid (or a graph over it) with an overflow guard: the
/// raw coordinates are present only while representable in f64; the
/// log-scaled form is always carried.
#[derive(Debug, Clone, Copy)]
pub struct GuardedPoint {
    pub coords: Option<[f64; 3]>,
    pub log_scaled: [LogScaled; 3],
}

/// Shared evaluation path for catenoid and graph points in the cylinder
/// chart; `w` is the defining-function value at (u, v).
fn graph_point_raw(c: f64, u: f64, v: f64, w: f64) -> [f64; 3] {
    let ch = v.cosh();
    let radius = c * ch + w / ch;
    [radius * u.cos(), radius * u.sin(), c * v - w * v.tanh()]
}

fn graph_point_scaled(c: f64, u: f64, v: f64, w: f64) -> [LogScaled; 3] {
    // radius = c cosh v + w sech v: at large |v| the sech term is negligible
    // relative rounding, but keep it via log-sum-exp.
    let ln_ch = LogScaled::ln_cosh(v);
    let radius = LogScaled::from_f64(c)
        .mul(LogScaled::new(1, ln_ch))
        .add(LogScaled::from_f64(w).mul(LogScaled::new(1, -ln_ch)));
    let height = LogScaled::from_f64(c * v).add(LogScaled::from_f64(-w * v.tanh()));
    [
        radius.mul(LogScaled::from_f64(u.cos())),
        radius.mul(LogScaled::from_f64(u.sin())),
        height,
    ]
}

/// F_c(u, v) = (c cosh v cos u, c cosh v sin u, c v) for the 2-catenoid.
///
/// Large |v| is computed in log-scaled form; the raw point is flagged
/// unrepresentable when cosh v overflows.
pub fn catenoid_point_guarded(spec: &CatenoidSpec, u: f64, v: f64) -> Result<GuardedPoint> {
    spec.require_dim2()?;
    let log_scaled = graph_point_scaled(spec.neck, u, v, 0.0);
    if v.abs() > 700.0 {
        let coords = log_scaled
            .iter()
            .map(|l| l.to_f64())
            .collect::<Option<Vec<f64>>>()
            .map(|v| [v[0], v[1], v[2]]);
        Ok(GuardedPoint { coords, log_scaled })
    } else {
        Ok(GuardedPoint { coords: Some(graph_point_raw(spec.neck, u, v, 0.0)), log_scaled })
    }
}

/// Convenience wrapper returning the raw point; errors when unrepresentable.
pub fn catenoid_point(spec: &CatenoidSpec, u: f64, v: f64) -> Result<[f64; 3]> {
    catenoid_point_guarded(spec, u, v)?
        .coords
        .ok_or(Error::NonFinite("catenoid point overflows f64; use the guarded form"))
}

/// |F_c(u, v)|^2 in log-scaled form: c^2 (cosh^2 v + v^2).
pub fn catenoid_point_norm_sq_scaled(spec: &CatenoidSpec, v: f64) -> LogScaled {
    let ln_ch = LogScaled::ln_cosh(v);
    LogScaled::from_f64(spec.neck * spec.neck)
        .mul(LogScaled::new(1, 2.0 * ln_ch).add(LogScaled::from_f64(v * v)))
}

/// Unit normal of the flat 2-catenoid: sech v (cos u, sin u, -sinh v).
///
/// The third component is computed as -tanh v, which stays finite for all v.
pub fn unit_normal_flat(spec: &CatenoidSpec, u: f64, v: f64) -> Result<[f64; 3]> {
    spec.require_dim2()?;
    let sech = 1.0 / v.cosh();
    Ok([sech * u.cos(), sech * u.sin(), -v.tanh()])
}

fn check_unit_theta(theta: &[f64], n: u32) -> Result<()> {
    if theta.len() != n as usize {
        return Err(Error::InvalidParameter(format!(
            "theta must lie in S^{} in R^{}, got a vector of length {}",
            n - 1,
            n,
            theta.len()
        )));
    }
    let norm = theta.iter().map(|t| t * t).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter(format!(
            "theta must be a unit vector within 1e-12, got |theta| = {norm:.15}"
        )));
    }
    Ok(())
}

/// F_c(theta, s) = c (phi(s) theta, psi(s)) for the n-catenoid.
pub fn catenoid_point_nd(spec: &CatenoidSpec, theta: &[f64], s: f64) -> Result<Vec<f64>> {
    check_unit_theta(theta, spec.dim_n)?;
    let p = profile::profile(spec.dim_n, s);
    let c = spec.neck;
    let mut out: Vec<f64> = theta.iter().map(|t| c * p.phi * t).collect();
    out.push(c * p.psi);
    Ok(out)
}

/// Unit normal of the flat n-catenoid: phi^{-1} (phi^{2-n} theta, -dphi).
pub fn unit_normal_flat_nd(spec: &CatenoidSpec, theta: &[f64], s: f64) -> Result<Vec<f64>> {
    check_unit_theta(theta, spec.dim_n)?;
    let n = spec.dim_n;
    let inv_phi = 1.0 / profile::phi(n, s);
    let radial = profile::phi_pow(n, s, 1.0 - n as f64);
    let mut out: Vec<f64> = theta.iter().map(|t| radial * t).collect();
    out.push(-profile::dphi(n, s) * inv_phi);
    Ok(out)
}

/// Checks the graph condition ||Omega||_{C^2_b} <= c/3 for a field.
pub fn check_graph_condition(spec: &CatenoidSpec, omega: &PerturbationField) -> Result<()> {
    let (norm, (u, v)) = omega.c2b_norm();
    let bound = spec.neck / 3.0;
    if norm > bound {
        return Err(Error::GraphCondition { norm, bound, u, v });
    }
    Ok(())
}

/// Normal graph point F_c^Omega(u, v) = F_c + n Omega in the cylinder chart.
///
/// With Omega identically zero this is the same code path as
/// `catenoid_point`, so the two agree bit for bit.
pub fn normal_graph_point(
    spec: &CatenoidSpec,
    omega: &PerturbationField,
    u: f64,
    v: f64,
) -> Result<[f64; 3]> {
    spec.require_dim2()?;
    check_graph_condition(spec, omega)?;
    let w = omega.eval(u, v)?;
    Ok(graph_point_raw(spec.neck, u, v, w))
}

/// Same, without the graph-condition re-check (used by jet sweeps that check
/// the condition once up front).
pub fn normal_graph_point_unchecked(spec: &CatenoidSpec, u: f64, v: f64, w: f64) -> [f64; 3] {
    graph_point_raw(spec.neck, u, v, w)
}

/// Normal graph point in general dimension for a radial defining value w at
/// arc parameter s: ((c phi + w phi^{1-n}) theta, c psi - w dphi/phi).
pub fn normal_graph_point_nd(spec: &CatenoidSpec, theta: &[f64], s: f64, w: f64) -> Result<Vec<f64>> {
    check_unit_theta(theta, spec.dim_n)?;
    let n = spec.dim_n;
    let c = spec.neck;
    let p = profile::profile(n, s);
    let radius = c * p.phi + w * profile::phi_pow(n, s, 1.0 - n as f64);
    let mut out: Vec<f64> = theta.iter().map(|t| radius * t).collect();
    out.push(c * p.psi - w * p.dphi / p.phi);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::sync::Arc;

    fn spec2(c: f64) -> CatenoidSpec {
        CatenoidSpec::new(c, 2).unwrap()
    }

    #[test]
    fn neck_circle_points() {
        let p = catenoid_point(&spec2(1.0), 0.0, 0.0).unwrap();
        assert_eq!(p, [1.0, 0.0, 0.0]);
        let q = catenoid_point(&spec2(2.0), std::f64::consts::FRAC_PI_2, 0.0).unwrap();
        assert_relative_eq!(q[0], 0.0, epsilon = 1e-15);
        assert_relative_eq!(q[1], 2.0, epsilon = 1e-15);
        assert_eq!(q[2], 0.0);
    }

    #[test]
    fn point_norm_identity() {
        // |F|^2 = c^2 (cosh^2 v + v^2), direct evaluation oracle
        let p = catenoid_point(&spec2(1.0), 0.0, 1.0).unwrap();
        assert_relative_eq!(p[0], 1f64.cosh(), max_relative = 1e-15);
        assert_eq!(p[2], 1.0);
        let norm_sq: f64 = p.iter().map(|a| a * a).sum();
        assert_relative_eq!(norm_sq, 1f64.cosh().powi(2) + 1.0, max_relative = 1e-14);
    }

    #[test]
    fn overflow_guard_flags_unrepresentable() {
        let g = catenoid_point_guarded(&spec2(1.0), 0.3, 800.0).unwrap();
        assert!(g.coords.is_none());
        // log-scaled norm identity still holds
        let ln_norm_sq = catenoid_point_norm_sq_scaled(&spec2(1.0), 800.0).ln_abs;
        let expect = 2.0 * (800.0 - std::f64::consts::LN_2);
        assert_relative_eq!(ln_norm_sq, expect, max_relative = 1e-12);
    }

    #[test]
    fn nd_points_and_normals() {
        let spec = CatenoidSpec::new(1.0, 3).unwrap();
        let e1 = [1.0, 0.0, 0.0];
        let p0 = catenoid_point_nd(&spec, &e1, 0.0).unwrap();
        assert_eq!(p0, vec![1.0, 0.0, 0.0, 0.0]);
        // neck sphere radius c for any theta
        let spec2c = CatenoidSpec::new(2.0, 3).unwrap();
        let th = [0.6, 0.8, 0.0];
        let p = catenoid_point_nd(&spec2c, &th, 0.0).unwrap();
        let norm: f64 = p.iter().map(|a| a * a).sum::<f64>().sqrt();
        assert_relative_eq!(norm, 2.0, max_relative = 1e-14);
        // profile oracle at s = 1
        let p1 = catenoid_point_nd(&spec, &e1, 1.0).unwrap();
        let pr = profile::profile(3, 1.0);
        assert_relative_eq!(p1[0], pr.phi, max_relative = 1e-14);
        assert_relative_eq!(p1[3], pr.psi, max_relative = 1e-14);
        // normal at s = 0 is theta itself (dphi(0) = 0)
        let n0 = unit_normal_flat_nd(&spec, &e1, 0.0).unwrap();
        assert_relative_eq!(n0[0], 1.0, max_relative = 1e-14);
        assert_eq!(n0[3], -0.0);
        // rejects non-unit theta
        assert!(catenoid_point_nd(&spec, &[1.0, 1e-6, 0.0], 0.0).is_err());
    }

    #[test]
    fn normal_is_unit_and_orthogonal() {
        let spec = spec2(1.0);
        let (u, v) = (0.7, 1.3);
        let n = unit_normal_flat(&spec, u, v).unwrap();
        let norm: f64 = n.iter().map(|a| a * a).sum::<f64>().sqrt();
        assert_relative_eq!(norm, 1.0, epsilon = 1e-12);
        // finite-difference tangents
        let h = 1e-6;
        let pu = catenoid_point(&spec, u + h, v).unwrap();
        let mu = catenoid_point(&spec, u - h, v).unwrap();
        let pv = catenoid_point(&spec, u, v + h).unwrap();
        let mv = catenoid_point(&spec, u, v - h).unwrap();
        let tu: Vec<f64> = (0..3).map(|i| (pu[i] - mu[i]) / (2.0 * h)).collect();
        let tv: Vec<f64> = (0..3).map(|i| (pv[i] - mv[i]) / (2.0 * h)).collect();
        let du: f64 = (0..3).map(|i| tu[i] * n[i]).sum();
        let dv: f64 = (0..3).map(|i| tv[i] * n[i]).sum();
        assert!(du.abs() < 1e-9 && dv.abs() < 1e-9);
        // explicit value at (0, 1): sech(1) (1, 0, -sinh 1)
        let n01 = unit_normal_flat(&spec, 0.0, 1.0).unwrap();
        let sech = 1.0 / 1f64.cosh();
        assert_relative_eq!(n01[0], sech, max_relative = 1e-14);
        assert_relative_eq!(n01[2], -sech * 1f64.sinh(), max_relative = 1e-14);
    }

    #[test]
    fn graph_with_zero_field_is_bit_identical() {
        let spec = spec2(1.5);
        let grid = Arc::new(CylinderGrid::new(3.0, 61, 16, 4).unwrap());
        let zero = PerturbationField::zero(grid.clone());
        for iv in [0, 17, 30, 60] {
            for iu in [0, 5, 11] {
                let (u, v) = (grid.u(iu), grid.v(iv));
                let a = normal_graph_point(&spec, &zero, u, v).unwrap();
                let b = catenoid_point(&spec, u, v).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn constant_offset_at_neck() {
        let spec = spec2(1.0);
        let grid = Arc::new(CylinderGrid::new(3.0, 61, 16, 4).unwrap());
        let eps = 0.01;
        let field = PerturbationField::constant(grid, eps);
        let p = normal_graph_point(&spec, &field, 0.0, 0.0).unwrap();
        assert_relative_eq!(p[0], 1.0 + eps, max_relative = 1e-15);
        assert_relative_eq!(p[1], 0.0, epsilon = 1e-18);
        assert_relative_eq!(p[2], 0.0, epsilon = 1e-18);
    }

    #[test]
    fn graph_condition_rejection_carries_location() {
        let spec = spec2(0.3);
        let grid = Arc::new(CylinderGrid::new(3.0, 61, 16, 4).unwrap());
        let field = PerturbationField::constant(grid, 0.2);
        match normal_graph_point(&spec, &field, 0.0, 0.0) {
            Err(Error::GraphCondition { norm, bound, .. }) => {
                assert!(norm > bound);
            }
            other => panic!("expected graph condition violation, got {other:?}"),
        }
    }

    #[test]
    fn norm_sq_expansion_identity_random_fields() {
        // |F^Omega|^2 = |F|^2 (1 + 2 c psi0 Omega / |F|^2 + Omega^2 / |F|^2)
        // with psi0 = 1 - v tanh v, pointwise to 1e-10.
        let spec = spec2(1.7);
        let grid = Arc::new(CylinderGrid::new(4.0, 81, 8, 4).unwrap());
        let form = Arc::new(AnalyticOmega::new(
            |u, v| 0.1 * (u.sin() + (0.5 * v).cos()),
            |u, _| 0.1 * u.cos(),
            |_, v| -0.05 * (0.5 * v).sin(),
            |u, _| -0.1 * u.sin(),
            |_, _| 0.0,
            |_, v| -0.025 * (0.5 * v).cos(),
        ));
        let field = PerturbationField::from_form(grid.clone(), form).unwrap();
        for iv in (0..grid.n_v).step_by(7) {
            for iu in 0..grid.n_u {
                let (u, v) = (grid.u(iu), grid.v(iv));
                let w = field.value_at(iu, iv);
                let fc = catenoid_point(&spec, u, v).unwrap();
                let fo = normal_graph_point(&spec, &field, u, v).unwrap();
                let fc2: f64 = fc.iter().map(|a| a * a).sum();
                let fo2: f64 = fo.iter().map(|a| a * a).sum();
                let psi0 = 1.0 - v * v.tanh();
                let rhs = fc2 * (1.0 + 2.0 * spec.neck() * psi0 * w / fc2 + w * w / fc2);
                assert_relative_eq!(fo2, rhs, max_relative = 1e-10);
            }
        }
    }
}
