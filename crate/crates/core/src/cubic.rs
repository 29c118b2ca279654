//! The sign-bearing bracket of a cosine plane as an exact cubic in
//! `beta = alpha^2`.

use crate::curvature::closed_form_bracket;
use crate::error::{Error, Result};
use crate::lattice::{Beta, WaveVector};
use crate::poly::{interpolate, RatPoly};
use crate::scalar::{int, sign, Scalar};

/// Exact coefficients of `b0 + b1 beta + b2 beta^2 + b3 beta^3`.
///
/// For the owning plane `(k, l)` the sign of the evaluation equals the sign
/// of the sectional curvature whenever `k x l != 0` (the prefactor `rho^2`
/// is strictly positive there).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicPoly {
    pub b0: Scalar,
    pub b1: Scalar,
    pub b2: Scalar,
    pub b3: Scalar,
}

impl CubicPoly {
    pub fn eval(&self, beta: &Scalar) -> Scalar {
        ((&self.b3 * beta + &self.b2) * beta + &self.b1) * beta + &self.b0
    }

    /// Exact sign of the evaluation: -1, 0, or 1.
    pub fn sign_at(&self, beta: &Scalar) -> i32 {
        sign(&self.eval(beta))
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(vec![
            self.b0.clone(),
            self.b1.clone(),
            self.b2.clone(),
            self.b3.clone(),
        ])
    }

    /// Reads back at most cubic coefficients; `None` above degree 3.
    pub fn from_poly(p: &RatPoly) -> Option<Self> {
        if p.degree().is_some_and(|d| d > 3) {
            return None;
        }
        Some(CubicPoly {
            b0: p.coeff(0),
            b1: p.coeff(1),
            b2: p.coeff(2),
            b3: p.coeff(3),
        })
    }
}

/// Extracts the bracket of the closed-form curvature as an exact cubic in
/// `beta`, by evaluating it at four distinct rational points and solving the
/// interpolation system exactly.
///
/// Parallel `k, l` (other than `k = ±l`) are admitted: the polynomial is
/// still well defined, though the curvature itself vanishes with `rho^2`.
pub fn curvature_poly(k: WaveVector, l: WaveVector) -> Result<CubicPoly> {
    if k.is_zero() || l.is_zero() {
        return Err(Error::ZeroMode);
    }
    if k == l || k == -l {
        return Err(Error::DegeneratePlane);
    }
    let points: Vec<(Scalar, Scalar)> = (0..4)
        .map(|i| {
            let beta = Beta::new(int(i)).expect("non-negative node");
            (int(i), closed_form_bracket(k, l, &beta))
        })
        .collect();
    let poly = interpolate(&points);
    debug_assert!(poly.degree().is_none_or(|d| d <= 3));
    Ok(CubicPoly::from_poly(&poly).expect("bracket is cubic in beta"))
}
