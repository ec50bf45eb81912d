use thiserror::Error;

/// Errors surfaced by the library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "graph condition violated: discrete C^2 sup-norm {norm:.6e} exceeds neck/3 = {bound:.6e} \
         (first exceeded at u = {u:.4}, v = {v:.4})"
    )]
    GraphCondition { norm: f64, bound: f64, u: f64, v: f64 },

    #[error("point with |x| = {radius:.6e} lies inside the metric inner radius r0 = {r0:.6e}")]
    MetricDomain { radius: f64, r0: f64 },

    #[error("first fundamental form is singular at u = {u:.4}, v = {v:.4} (det = {det:.3e})")]
    SingularFirstForm { u: f64, v: f64, det: f64 },

    #[error("decay weight q = {q} lies outside the admissible interval ({lo}, 0) for n = {n}")]
    WeightOutOfRange { q: f64, lo: f64, n: u32 },

    #[error(
        "the admissible weight interval (-(n-2), 0) is vacuous for n = 2: no decay rate makes \
         the conjugated Jacobi operator invertible, so no construction is attempted in ambient \
         dimension three"
    )]
    DimensionGate,

    #[error("quadrature schemes disagree: {a:.12e} vs {b:.12e} (relative difference {rel:.3e})")]
    SchemeDisagreement { a: f64, b: f64, rel: f64 },

    #[error("mode count J_max = {j_max} requires an angular grid with n_u >= {needed}, got {n_u}")]
    ModeCount { j_max: usize, needed: usize, n_u: usize },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("TOML error: {0}")]
    Toml(#[from] toml::de::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
