//! Shared numerical machinery: quadrature, finite-difference stencils,
//! splines and least-squares fits.

pub mod fit;
pub mod quad;
pub mod spline;
pub mod stencil;
