//! Uniform truncated discretization of the cylinder S^1 x [-V, V], or of the
//! real line alone under radial symmetry (n_u = 1). The angular direction is
//! periodic with spacing 2 pi / n_u.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CylinderGrid {
    pub v_min: f64,
    pub v_max: f64,
    pub n_v: usize,
    pub n_u: usize,
    pub stencil_order: usize,
}

impl CylinderGrid {
    /// Symmetric cylinder grid: v ranges over [-v_max, v_max].
    pub fn new(v_max: f64, n_v: usize, n_u: usize, stencil_order: usize) -> Result<Self> {
        if !(v_max > 0.0) {
            return Err(Error::InvalidParameter(format!("v_max must be positive, got {v_max}")));
        }
        if n_v < 5 {
            return Err(Error::InvalidParameter(format!("n_v must be at least 5, got {n_v}")));
        }
        if n_u < 1 {
            return Err(Error::InvalidParameter("n_u must be at least 1".into()));
        }
        if stencil_order != 2 && stencil_order != 4 {
            return Err(Error::InvalidParameter(format!(
                "stencil_order must be 2 or 4, got {stencil_order}"
            )));
        }
        Ok(Self { v_min: -v_max, v_max, n_v, n_u, stencil_order })
    }

    /// Radial grid (no angular samples), used for s-dependent profiles.
    pub fn radial(s_max: f64, n_s: usize, stencil_order: usize) -> Result<Self> {
        Self::new(s_max, n_s, 1, stencil_order)
    }

    pub fn h_v(&self) -> f64 {
        (self.v_max - self.v_min) / (self.n_v - 1) as f64
    }

    pub fn h_u(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.n_u as f64
    }

    pub fn u(&self, iu: usize) -> f64 {
        iu as f64 * self.h_u()
    }

    pub fn v(&self, iv: usize) -> f64 {
        self.v_min + iv as f64 * self.h_v()
    }

    pub fn u_values(&self) -> Vec<f64> {
        (0..self.n_u).map(|i| self.u(i)).collect()
    }

    pub fn v_values(&self) -> Vec<f64> {
        (0..self.n_v).map(|j| self.v(j)).collect()
    }

    pub fn len(&self) -> usize {
        self.n_u * self.n_v
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Flat index, v-major.
    pub fn idx(&self, iu: usize, iv: usize) -> usize {
        iv * self.n_u + iu
    }

    pub fn unpack(&self, idx: usize) -> (usize, usize) {
        (idx % self.n_u, idx / self.n_u)
    }

    /// True away from the v-boundary band of width 2 where stencils degrade.
    pub fn interior_v(&self, iv: usize) -> bool {
        iv >= 2 && iv + 2 < self.n_v
    }

    /// Nearest node to (u, v) if within `tol`, as (iu, iv).
    pub fn node_near(&self, u: f64, v: f64, tol: f64) -> Option<(usize, usize)> {
        let two_pi = 2.0 * std::f64::consts::PI;
        let uw = u.rem_euclid(two_pi);
        let iu = (uw / self.h_u()).round() as usize % self.n_u;
        let fv = (v - self.v_min) / self.h_v();
        let iv = fv.round();
        if iv < 0.0 || iv as usize >= self.n_v {
            return None;
        }
        let iv = iv as usize;
        if (self.u(iu) - uw).abs() < tol && (self.v(iv) - v).abs() < tol {
            Some((iu, iv))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(CylinderGrid::new(-1.0, 11, 4, 4).is_err());
        assert!(CylinderGrid::new(1.0, 3, 4, 4).is_err());
        assert!(CylinderGrid::new(1.0, 11, 4, 3).is_err());
    }

    #[test]
    fn uniform_spacing_and_symmetry() {
        let g = CylinderGrid::new(5.0, 101, 8, 4).unwrap();
        assert_eq!(g.v(0), -5.0);
        assert_eq!(g.v(100), 5.0);
        assert!((g.v(51) - g.v(50) - g.h_v()).abs() < 1e-15);
        assert_eq!(g.node_near(g.u(3), g.v(7), 1e-9), Some((3, 7)));
    }
}
