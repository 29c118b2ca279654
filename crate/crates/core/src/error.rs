//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors produced by the algebra, curvature, and threshold routines.
///
/// All operations are exact, so every error is a structural precondition
/// failure rather than a numerical one.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The zero wave vector indexes no basis element: stream functions have
    /// zero mean, so the constant mode is excluded from the algebra.
    #[error("zero mode: the zero wave vector does not index a basis element")]
    ZeroMode,

    /// `k = ±l`: the two cosine streams span at most a line, not a plane.
    #[error("degenerate plane: k = ±l spans no two-dimensional direction")]
    DegeneratePlane,

    /// The sample directions cannot separate the |eps|^2 and (k,eps)^2
    /// quadratic forms when extracting leading expansion coefficients.
    #[error("degenerate direction set: samples cannot separate |eps|^2 from (k,eps)^2")]
    DegenerateDirectionSet,

    /// A wave-vector component exceeds the supported input magnitude (2^31 - 1).
    #[error("wave-vector component {0} exceeds the supported magnitude 2^31 - 1")]
    ComponentOutOfRange(i64),

    /// `beta = alpha^2` must be non-negative.
    #[error("beta must be non-negative")]
    NegativeBeta,

    /// The torus area must be strictly positive.
    #[error("torus area must be strictly positive")]
    NonPositiveArea,

    /// A string could not be parsed as an exact rational number.
    #[error("invalid number: {0}")]
    InvalidNumber(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
