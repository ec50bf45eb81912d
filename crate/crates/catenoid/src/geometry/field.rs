//! Defining functions of normal graphs, sampled on a cylinder grid with
//! derivative access; optionally backed by a closed form with exact
//! derivatives.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::num::stencil;

use super::grid::CylinderGrid;

/// Value and derivatives of a defining function at one point.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct OmegaJet {
    pub w: f64,
    pub wu: f64,
    pub wv: f64,
    pub wuu: f64,
    pub wuv: f64,
    pub wvv: f64,
}

/// Closed-form defining function with exact derivatives.
pub trait OmegaForm: Send + Sync {
    fn jet(&self, u: f64, v: f64) -> OmegaJet;

    fn value(&self, u: f64, v: f64) -> f64 {
        self.jet(u, v).w
    }
}

type Scalar2 = dyn Fn(f64, f64) -> f64 + Send + Sync;

/// OmegaForm built from six closures (value and the five derivatives).
pub struct AnalyticOmega {
    f: Box<Scalar2>,
    fu: Box<Scalar2>,
    fv: Box<Scalar2>,
    fuu: Box<Scalar2>,
    fuv: Box<Scalar2>,
    fvv: Box<Scalar2>,
}

impl AnalyticOmega {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        fu: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        fv: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        fuu: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        fuv: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        fvv: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            f: Box::new(f),
            fu: Box::new(fu),
            fv: Box::new(fv),
            fuu: Box::new(fuu),
            fuv: Box::new(fuv),
            fvv: Box::new(fvv),
        }
    }

    /// A u-independent form from a profile w(v) with derivatives.
    pub fn radial(
        w: impl Fn(f64) -> f64 + Send + Sync + Clone + 'static,
        dw: impl Fn(f64) -> f64 + Send + Sync + 'static,
        d2w: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        let w2 = w.clone();
        Self::new(
            move |_, v| w2(v),
            |_, _| 0.0,
            move |_, v| dw(v),
            |_, _| 0.0,
            |_, _| 0.0,
            move |_, v| d2w(v),
        )
    }
}

impl OmegaForm for AnalyticOmega {
    fn jet(&self, u: f64, v: f64) -> OmegaJet {
        OmegaJet {
            w: (self.f)(u, v),
            wu: (self.fu)(u, v),
            wv: (self.fv)(u, v),
            wuu: (self.fuu)(u, v),
            wuv: (self.fuv)(u, v),
            wvv: (self.fvv)(u, v),
        }
    }
}

struct ScaledForm {
    inner: Arc<dyn OmegaForm>,
    t: f64,
}

impl OmegaForm for ScaledForm {
    fn jet(&self, u: f64, v: f64) -> OmegaJet {
        let j = self.inner.jet(u, v);
        OmegaJet {
            w: self.t * j.w,
            wu: self.t * j.wu,
            wv: self.t * j.wv,
            wuu: self.t * j.wuu,
            wuv: self.t * j.wuv,
            wvv: self.t * j.wvv,
        }
    }
}

/// A defining function Omega sampled on a grid, with derivative access.
#[derive(Clone)]
pub struct PerturbationField {
    grid: Arc<CylinderGrid>,
    values: Vec<f64>,
    analytic: Option<Arc<dyn OmegaForm>>,
    c2b: Arc<OnceLock<(f64, (f64, f64))>>,
}

impl PerturbationField {
    pub fn zero(grid: Arc<CylinderGrid>) -> Self {
        let values = vec![0.0; grid.len()];
        Self { grid, values, analytic: None, c2b: Arc::new(OnceLock::new()) }
    }

    pub fn constant(grid: Arc<CylinderGrid>, value: f64) -> Self {
        let v2 = value;
        let form = AnalyticOmega::new(
            move |_, _| v2,
            |_, _| 0.0,
            |_, _| 0.0,
            |_, _| 0.0,
            |_, _| 0.0,
            |_, _| 0.0,
        );
        Self::from_form(grid, Arc::new(form)).expect("constant field is finite")
    }

    pub fn from_form(grid: Arc<CylinderGrid>, form: Arc<dyn OmegaForm>) -> Result<Self> {
        let mut values = Vec::with_capacity(grid.len());
        for iv in 0..grid.n_v {
            for iu in 0..grid.n_u {
                let w = form.value(grid.u(iu), grid.v(iv));
                if !w.is_finite() {
                    return Err(Error::NonFinite("perturbation field sample"));
                }
                values.push(w);
            }
        }
        Ok(Self { grid, values, analytic: Some(form), c2b: Arc::new(OnceLock::new()) })
    }

    pub fn from_samples(grid: Arc<CylinderGrid>, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidParameter(format!(
                "sample count {} does not match grid size {}",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("perturbation field sample"));
        }
        Ok(Self { grid, values, analytic: None, c2b: Arc::new(OnceLock::new()) })
    }

    pub fn grid(&self) -> &Arc<CylinderGrid> {
        &self.grid
    }

    pub fn samples(&self) -> &[f64] {
        &self.values
    }

    pub fn has_analytic_form(&self) -> bool {
        self.analytic.is_some()
    }

    pub fn value_at(&self, iu: usize, iv: usize) -> f64 {
        self.values[self.grid.idx(iu, iv)]
    }

    /// Evaluate off-grid: analytic form when present, otherwise requires
    /// (u, v) to sit on a node.
    pub fn eval(&self, u: f64, v: f64) -> Result<f64> {
        if let Some(form) = &self.analytic {
            return Ok(form.value(u, v));
        }
        self.grid
            .node_near(u, v, 1e-9)
            .map(|(iu, iv)| self.value_at(iu, iv))
            .ok_or_else(|| Error::InvalidParameter(format!("({u}, {v}) is not a grid node and the field has no closed form")))
    }

    /// Jet at a node: exact when the closed form is present, otherwise
    /// finite-difference stencils at the grid's order (periodic in u).
    pub fn jet_at(&self, iu: usize, iv: usize) -> OmegaJet {
        if let Some(form) = &self.analytic {
            return form.jet(self.grid.u(iu), self.grid.v(iv));
        }
        self.stencil_jet(iu, iv)
    }

    /// Finite-difference jet regardless of an analytic backing form.
    pub fn stencil_jet(&self, iu: usize, iv: usize) -> OmegaJet {
        let g = &self.grid;
        let order = g.stencil_order;
        let urow: Vec<f64> = (0..g.n_u).map(|i| self.value_at(i, iv)).collect();
        let vcol: Vec<f64> = (0..g.n_v).map(|j| self.value_at(iu, j)).collect();
        let (wu, wuu) = if g.n_u >= 5 {
            (
                stencil::d1(&urow, iu, g.h_u(), order, true),
                stencil::d2(&urow, iu, g.h_u(), order, true),
            )
        } else {
            (0.0, 0.0)
        };
        let wv = stencil::d1(&vcol, iv, g.h_v(), order, false);
        let wvv = stencil::d2(&vcol, iv, g.h_v(), order, false);
        let wuv = if g.n_u >= 5 {
            // d/dv of the u-derivative along the column
            let du_col: Vec<f64> = (0..g.n_v)
                .map(|j| {
                    let row: Vec<f64> = (0..g.n_u).map(|i| self.value_at(i, j)).collect();
                    stencil::d1(&row, iu, g.h_u(), order, true)
                })
                .collect();
            stencil::d1(&du_col, iv, g.h_v(), order, false)
        } else {
            0.0
        };
        OmegaJet { w: self.value_at(iu, iv), wu, wv, wuu, wuv, wvv }
    }

    /// Discrete C^2_b norm (sum over derivative orders of grid sup-norms) and
    /// the node where the pointwise derivative sum peaks.
    pub fn c2b_norm(&self) -> (f64, (f64, f64)) {
        *self.c2b.get_or_init(|| {
            let g = &self.grid;
            let mut sups = [0.0f64; 6];
            let mut peak = 0.0;
            let mut at = (g.u(0), g.v(0));
            for iv in 0..g.n_v {
                for iu in 0..g.n_u {
                    let j = self.jet_at(iu, iv);
                    let parts =
                        [j.w.abs(), j.wu.abs(), j.wv.abs(), j.wuu.abs(), j.wuv.abs(), j.wvv.abs()];
                    for (s, p) in sups.iter_mut().zip(parts) {
                        *s = s.max(p);
                    }
                    let total: f64 = parts.iter().sum();
                    if total > peak {
                        peak = total;
                        at = (g.u(iu), g.v(iv));
                    }
                }
            }
            (sups.iter().sum(), at)
        })
    }

    /// The field t * Omega (used by expansion-order sweeps).
    pub fn scaled(&self, t: f64) -> Self {
        let values = self.values.iter().map(|w| t * w).collect();
        let analytic = self
            .analytic
            .as_ref()
            .map(|form| Arc::new(ScaledForm { inner: form.clone(), t }) as Arc<dyn OmegaForm>);
        Self { grid: self.grid.clone(), values, analytic, c2b: Arc::new(OnceLock::new()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn test_grid() -> Arc<CylinderGrid> {
        Arc::new(CylinderGrid::new(4.0, 201, 32, 4).unwrap())
    }

    #[test]
    fn stencil_jet_matches_analytic_jet() {
        let grid = test_grid();
        let form = Arc::new(AnalyticOmega::new(
            |u, v| u.cos() * (-v * v / 4.0).exp(),
            |u, v| -u.sin() * (-v * v / 4.0).exp(),
            |u, v| u.cos() * (-v / 2.0) * (-v * v / 4.0).exp(),
            |u, v| -u.cos() * (-v * v / 4.0).exp(),
            |u, v| -u.sin() * (-v / 2.0) * (-v * v / 4.0).exp(),
            |u, v| u.cos() * (v * v / 4.0 - 0.5) * (-v * v / 4.0).exp(),
        ));
        let exact = PerturbationField::from_form(grid.clone(), form).unwrap();
        let sampled = PerturbationField::from_samples(grid.clone(), exact.samples().to_vec()).unwrap();
        let (iu, iv) = (5, 100);
        let a = exact.jet_at(iu, iv);
        let b = sampled.jet_at(iu, iv);
        assert_relative_eq!(a.w, b.w, epsilon = 1e-14);
        assert_relative_eq!(a.wu, b.wu, epsilon = 1e-5);
        assert_relative_eq!(a.wv, b.wv, epsilon = 1e-6);
        assert_relative_eq!(a.wuu, b.wuu, epsilon = 1e-4);
        assert_relative_eq!(a.wuv, b.wuv, epsilon = 1e-5);
        assert_relative_eq!(a.wvv, b.wvv, epsilon = 1e-6);
    }

    #[test]
    fn c2b_norm_of_constant_is_its_value() {
        let grid = test_grid();
        let f = PerturbationField::constant(grid, 0.25);
        let (norm, _) = f.c2b_norm();
        assert_relative_eq!(norm, 0.25, epsilon = 1e-12);
    }

    #[test]
    fn rejects_non_finite_samples() {
        let grid = test_grid();
        let mut vals = vec![0.0; grid.len()];
        vals[7] = f64::NAN;
        assert!(PerturbationField::from_samples(grid, vals).is_err());
    }
}
