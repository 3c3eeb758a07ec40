use thiserror::Error;

/// Errors raised by the geometry, solver and distance routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vector norm {norm} is not within 1e-9 of 1")]
    NotNormalized { norm: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector is not tangent: |Re<v,z>| = {violation}")]
    NotTangent { violation: f64 },

    #[error("invalid geodesic parameters: {0}")]
    InvalidParams(String),

    #[error("invalid ratio: {0}")]
    InvalidRatio(String),

    #[error("fiber phase {omega} is outside (0, 2pi)")]
    OmegaOutOfRange { omega: f64 },

    #[error("fiber phase is zero: the endpoint coincides with the base point")]
    DegenerateOmega,

    #[error("endpoint is not on the horizontal sphere: |Im z1| = {im}")]
    NotOnHorizontalSphere { im: f64 },

    #[error("{function} is undefined at {argument}")]
    DomainError { function: &'static str, argument: f64 },

    #[error("endpoint lies on the {case} locus; use the dedicated solver")]
    EndpointOnSpecialLocus { case: String },

    #[error("no branch admits a solution with q <= {q_max}")]
    NoSolutionWithinQmax { q_max: u32 },

    #[error("distance formula gives {formula} but enumeration gives {enumerated}")]
    InconsistentMinimizer { formula: f64, enumerated: f64 },

    #[error("shooting oracle found no candidate below the acceptance residual")]
    OracleNoCandidate,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
