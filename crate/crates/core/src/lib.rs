//! Exact sectional-curvature analysis for the group of area-preserving
//! diffeomorphisms of the flat 2-torus under the right-invariant H1
//! (Euler-alpha) metric.
//!
//! The Lie algebra is the space of zero-mean stream functions, spanned in
//! Fourier by `e_k` over nonzero integer wave vectors. All structure
//! constants, curvature coefficients, and sign decisions are computed in
//! exact rational arithmetic over `k`, `l`, and `beta = alpha^2`; floating
//! point appears only when rendering output.
//!
//! Modules:
//!
//! * [`lattice`] — wave vectors, the H1 multiplier `A(k)`, inner product,
//!   commutator, bilinear form, and Levi-Civita connection coefficients;
//! * [`stream`] — finitely supported real stream functions;
//! * [`curvature`] — curvature pairings and sectional curvatures, with
//!   Arnold's L2 formulas as the `alpha -> 0` oracle;
//! * [`cubic`] / [`alpha`] — the sign-bearing bracket as an exact cubic in
//!   `beta`, positivity-threshold isolation (`alpha0`), and the leading
//!   expansion of its coefficients for nearly parallel planes;
//! * [`poly`] — exact interpolation and Sturm-chain root counting;
//! * [`scalar`] — exact rationals, parsing, and decimal rendering.

pub mod alpha;
pub mod cubic;
pub mod curvature;
pub mod error;
pub mod lattice;
pub mod poly;
pub mod scalar;
pub mod stream;

pub use alpha::{
    default_beta_tolerance, eps_expansion, find_alpha0, find_alpha0_with_tolerance,
    threshold_below_cap, Alpha0Result, EpsCoefficient, EpsExpansion, NoThresholdReason,
};
pub use cubic::{curvature_poly, CubicPoly};
pub use curvature::{
    arnold_cos_cos, arnold_cos_cos_result, arnold_general, closed_form_bracket, r_coeff,
    r_coeff_published, rho_sq, sectional_cos_cos_closed, sectional_cos_cos_closed_result,
    sectional_cos_cos_normalized, sectional_cos_cos_raw, sectional_general, CurvatureResult, Route,
};
pub use error::{Error, Result};
pub use lattice::{
    a_alpha, b_coeff, commutator_coeff, conn_coeff, inner_basis, Beta, TorusGeometry, WaveVector,
    MAX_COMPONENT,
};
pub use scalar::{parse_scalar, sign, sqrt_approx, to_decimal, Scalar, DEFAULT_SIG_DIGITS};
pub use stream::{h1_pairing, ComplexScalar, FourierStream};
