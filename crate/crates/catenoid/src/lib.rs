//! Numerical toolkit for catenoidal normal graphs in asymptotically
//! Schwarzschildean metrics: exact parametrizations and curvature jets, the
//! cylinder mode solvers, the mass obstruction integral that blocks minimal
//! 2-catenoids, and the Green's-function/Newton program that constructs
//! minimal n-catenoids for n >= 3.

pub mod constructor;
pub mod curvature;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod harness;
pub mod io;
pub mod num;
pub mod obstruction;
pub mod spectral;

pub use error::{Error, Result};
pub use geometry::CatenoidSpec;
