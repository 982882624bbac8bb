//! Crate-wide error type.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors reported by construction, tracing, verification, and export.
///
/// Scalar payloads are stored as `f64` regardless of the working precision
/// so the error type stays non-generic.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("scale must be positive, got c = {c}")]
    InvalidScale { c: f64 },

    #[error("eccentricity parameter kappa = {kappa} outside the admissible range (1, 2)")]
    InvalidEccentricity { kappa: f64 },

    #[error(
        "inclinations (k1, k2) = ({k1}, {k2}) must satisfy k_min < k1 < k2 < k_max \
         with (k_min, k_max) = ({k_min}, {k_max})"
    )]
    InvalidInclinations {
        k1: f64,
        k2: f64,
        k_min: f64,
        k_max: f64,
    },

    #[error(
        "inclinations (k1, k2) = ({k1}, {k2}) are within {band} of the admissible \
         bounds ({k_min}, {k_max}) or of each other; the construction degenerates"
    )]
    DegenerateInclinations {
        k1: f64,
        k2: f64,
        k_min: f64,
        k_max: f64,
        band: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency violation: {0}")]
    Inconsistent(String),

    #[error("grid too coarse to resolve the body: no interior cells at resolution {resolution}")]
    InconclusiveGrid { resolution: usize },

    #[error("mesh is empty")]
    EmptyMesh,

    #[error("malformed document: {0}")]
    Malformed(String),
}

impl Error {
    pub fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
