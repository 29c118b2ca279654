//! Curvature tensor coefficients and sectional curvatures for the H1 metric,
//! with Arnold's L2 formulas as independent oracles at `beta = 0`.
//!
//! The curvature operator is assembled canonically from the connection
//! coefficients,
//!
//! ```text
//! R(e_k, e_l) e_m = -conn(e_k) conn(e_l) e_m
//!                 +  conn(e_l) conn(e_k) e_m
//!                 +  conn([e_k, e_l]) e_m,
//! ```
//!
//! the sign convention under which a bi-invariant metric has sectional
//! curvature `|[u,v]|^2 / 4 >= 0` and the L2 cosine-plane curvature here is
//! non-positive. Every coefficient is an exact rational.

use std::collections::BTreeMap;

use num::complex::Complex;
use num::Zero;

use crate::error::{Error, Result};
use crate::lattice::{a_alpha, conn_coeff, Beta, TorusGeometry, WaveVector};
use crate::scalar::{int, Scalar};
use crate::stream::{h1_pairing, ComplexScalar, FourierStream};

/// Which computation produced a curvature value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Multilinear expansion of the curvature operator (authoritative).
    RSum,
    /// Closed form `rho^2 * bracket` for cosine planes.
    ClosedForm,
    /// Arnold's L2 formulas; only meaningful at `beta = 0`.
    ArnoldL2,
}

/// A sectional-curvature evaluation with its provenance.
///
/// `raw` is the numerator `<R(xi,eta)xi, eta>`, `normalized` divides by the
/// Gram determinant `<xi,xi><eta,eta> - <xi,eta>^2`; the two always share a
/// sign. `k`/`l` are present for cosine planes, absent for general streams.
#[derive(Clone, Debug)]
pub struct CurvatureResult {
    pub raw: Scalar,
    pub normalized: Scalar,
    pub route: Route,
    pub beta: Beta,
    pub k: Option<WaveVector>,
    pub l: Option<WaveVector>,
}

fn require_mode(k: WaveVector) -> Result<()> {
    if k.is_zero() {
        Err(Error::ZeroMode)
    } else {
        Ok(())
    }
}

fn require_plane(k: WaveVector, l: WaveVector) -> Result<()> {
    require_mode(k)?;
    require_mode(l)?;
    if k == l || k == -l {
        Err(Error::DegeneratePlane)
    } else {
        Ok(())
    }
}

fn conn(dir: WaveVector, operand: WaveVector, beta: &Beta) -> Scalar {
    conn_coeff(dir, operand, beta).expect("modes checked nonzero")
}

/// Coefficient of `R(e_k, e_l) e_m` on the target mode `e_{k+l+m}`.
///
/// Intermediate compositions that would pass through the excluded zero mode
/// contribute nothing. Inputs must be nonzero modes; the target may be any
/// vector (the caller decides whether a zero target is an error).
fn curvature_action_coeff(k: WaveVector, l: WaveVector, m: WaveVector, beta: &Beta) -> Scalar {
    debug_assert!(!k.is_zero() && !l.is_zero() && !m.is_zero());
    let mut acc = Scalar::zero();

    let lm = l + m;
    if !lm.is_zero() {
        let inner = conn(l, m, beta);
        if !inner.is_zero() {
            acc -= inner * conn(k, lm, beta);
        }
    }

    let km = k + m;
    if !km.is_zero() {
        let inner = conn(k, m, beta);
        if !inner.is_zero() {
            acc += inner * conn(l, km, beta);
        }
    }

    let c = k.cross(l);
    if c != 0 {
        // k x l != 0 guarantees k + l != 0
        acc += int(c) * conn(k + l, m, beta);
    }

    acc
}

/// Curvature pairing `<R(e_k, e_l) e_m, e_n>` with the implicit fourth index
/// `n = -(k+l+m)`; every index must be a nonzero mode.
pub fn r_coeff(
    k: WaveVector,
    l: WaveVector,
    m: WaveVector,
    beta: &Beta,
    geom: &TorusGeometry,
) -> Result<Scalar> {
    require_mode(k)?;
    require_mode(l)?;
    require_mode(m)?;
    let target = k + l + m;
    if target.is_zero() {
        return Err(Error::ZeroMode);
    }
    Ok(curvature_action_coeff(k, l, m, beta) * geom.area() * a_alpha(target, beta))
}

/// Literal transcription of the published coefficient formula
/// `(-d_{l+m,k+l+m} d_{m,l+m} + d_{k+m,k+l+m} d_{m,k+m} + (k x l) d_{m,k+l+m}) * A(k+l+m) * S`,
/// kept solely for cross-checking against [`r_coeff`], which is
/// authoritative. The verification suite quantifies the discrepancy; this
/// transcription is known not to reduce to the canonical operator.
///
/// Returns zero when `k + l + m = 0` (the `A(0)` factor annihilates it).
pub fn r_coeff_published(
    k: WaveVector,
    l: WaveVector,
    m: WaveVector,
    beta: &Beta,
    geom: &TorusGeometry,
) -> Result<Scalar> {
    require_mode(k)?;
    require_mode(l)?;
    require_mode(m)?;
    let target = k + l + m;
    if target.is_zero() {
        return Ok(Scalar::zero());
    }
    let mut acc = Scalar::zero();

    let lm = l + m;
    if !lm.is_zero() {
        // d_{l+m, k+l+m} * d_{m, l+m}
        acc -= conn(lm, k, beta) * conn(m, l, beta);
    }
    let km = k + m;
    if !km.is_zero() {
        // d_{k+m, k+l+m} * d_{m, k+m}
        acc += conn(km, l, beta) * conn(m, k, beta);
    }
    let c = k.cross(l);
    if c != 0 {
        // (k x l) * d_{m, k+l+m}
        acc += int(c) * conn(m, k + l, beta);
    }

    Ok(acc * geom.area() * a_alpha(target, beta))
}

/// Numerator `<R(xi,eta)xi, eta>` for the plane of `xi = cos(k,x)`,
/// `eta = cos(l,x)`, expanded through the curvature operator:
/// `(R_{k,l,-k,-l} + R_{-k,l,k,-l}) / 8`.
pub fn sectional_cos_cos_raw(
    k: WaveVector,
    l: WaveVector,
    beta: &Beta,
    geom: &TorusGeometry,
) -> Result<Scalar> {
    require_plane(k, l)?;
    let first = r_coeff(k, l, -k, beta, geom)?;
    let second = r_coeff(-k, l, k, beta, geom)?;
    Ok((first + second) / int(8))
}

/// The sign-bearing bracket of the closed-form cosine-plane curvature:
///
/// ```text
/// A(k+l) A(k-l) (4A(k) + 4A(l) - 3A(k+l) - 3A(k-l))
///   + (A(k) - A(l))^2 (A(k+l) + A(k-l))
/// ```
///
/// A cubic polynomial in `beta`; its sign equals the curvature sign for any
/// non-degenerate cosine plane.
pub fn closed_form_bracket(k: WaveVector, l: WaveVector, beta: &Beta) -> Scalar {
    let ak = a_alpha(k, beta);
    let al = a_alpha(l, beta);
    let ap = a_alpha(k + l, beta);
    let am = a_alpha(k - l, beta);
    let spread = int(4) * (&ak + &al) - int(3) * (&ap + &am);
    let diff = &ak - &al;
    &ap * &am * spread + &diff * &diff * (&ap + &am)
}

/// Strictly positive prefactor `S (k x l)^2 / (36 A(k+l) A(k-l))` of the
/// closed form (zero exactly when `k` and `l` are parallel).
pub fn rho_sq(k: WaveVector, l: WaveVector, beta: &Beta, geom: &TorusGeometry) -> Result<Scalar> {
    require_plane(k, l)?;
    let c = int(k.cross(l));
    let denom = int(36) * a_alpha(k + l, beta) * a_alpha(k - l, beta);
    Ok(geom.area() * &c * &c / denom)
}

/// Closed-form cosine-plane curvature `rho^2 * bracket`.
///
/// Proportional to [`sectional_cos_cos_raw`] by a single global constant;
/// the sign analysis is identical on either route.
pub fn sectional_cos_cos_closed(
    k: WaveVector,
    l: WaveVector,
    beta: &Beta,
    geom: &TorusGeometry,
) -> Result<Scalar> {
    Ok(rho_sq(k, l, beta, geom)? * closed_form_bracket(k, l, beta))
}

/// Gram determinant of the cosine plane: `<xi,xi><eta,eta>` with
/// `<cos(k,.), cos(k,.)> = S A(k)/2`; the cross term vanishes for `k != ±l`.
fn cos_cos_gram(k: WaveVector, l: WaveVector, beta: &Beta, geom: &TorusGeometry) -> Scalar {
    geom.area() * a_alpha(k, beta) * geom.area() * a_alpha(l, beta) / int(4)
}

/// Sectional curvature of the cosine plane, normalized by the Gram
/// determinant.
pub fn sectional_cos_cos_normalized(
    k: WaveVector,
    l: WaveVector,
    beta: &Beta,
    geom: &TorusGeometry,
) -> Result<CurvatureResult> {
    let raw = sectional_cos_cos_raw(k, l, beta, geom)?;
    let normalized = &raw / cos_cos_gram(k, l, beta, geom);
    Ok(CurvatureResult {
        raw,
        normalized,
        route: Route::RSum,
        beta: beta.clone(),
        k: Some(k),
        l: Some(l),
    })
}

/// Closed-form route packaged as a [`CurvatureResult`]. Both entries differ
/// from the operator route by the single frozen constant the verification
/// suite prints; signs always agree.
pub fn sectional_cos_cos_closed_result(
    k: WaveVector,
    l: WaveVector,
    beta: &Beta,
    geom: &TorusGeometry,
) -> Result<CurvatureResult> {
    let raw = sectional_cos_cos_closed(k, l, beta, geom)?;
    let normalized = &raw / cos_cos_gram(k, l, beta, geom);
    Ok(CurvatureResult {
        raw,
        normalized,
        route: Route::ClosedForm,
        beta: beta.clone(),
        k: Some(k),
        l: Some(l),
    })
}

/// Arnold's L2 route packaged as a [`CurvatureResult`]; `beta` is pinned to
/// zero, the only point where this route is defined.
pub fn arnold_cos_cos_result(
    k: WaveVector,
    l: WaveVector,
    geom: &TorusGeometry,
) -> Result<CurvatureResult> {
    let beta = Beta::zero();
    let normalized = arnold_cos_cos(k, l, geom)?;
    let raw = &normalized * cos_cos_gram(k, l, &beta, geom);
    Ok(CurvatureResult {
        raw,
        normalized,
        route: Route::ArnoldL2,
        beta,
        k: Some(k),
        l: Some(l),
    })
}

fn complex_real(x: Scalar) -> ComplexScalar {
    Complex::new(x, Scalar::zero())
}

/// Sectional curvature of the plane spanned by two arbitrary real streams,
/// by multilinear expansion of the curvature operator over their supports.
pub fn sectional_general(
    xi: &FourierStream,
    eta: &FourierStream,
    beta: &Beta,
    geom: &TorusGeometry,
) -> Result<CurvatureResult> {
    if xi.is_empty() || eta.is_empty() {
        return Err(Error::DegeneratePlane);
    }
    let g11 = h1_pairing(xi, xi, beta, geom);
    let g12 = h1_pairing(xi, eta, beta, geom);
    let g22 = h1_pairing(eta, eta, beta, geom);
    let gram = &g11 * &g22 - &g12 * &g12;
    if gram.is_zero() {
        return Err(Error::DegeneratePlane);
    }

    // w = R(xi, eta) xi as a complex coefficient map
    let mut w: BTreeMap<WaveVector, ComplexScalar> = BTreeMap::new();
    for (p, xp) in xi.iter() {
        for (q, yq) in eta.iter() {
            for (r, xr) in xi.iter() {
                let target = *p + *q + *r;
                if target.is_zero() {
                    continue;
                }
                let coeff = curvature_action_coeff(*p, *q, *r, beta);
                if coeff.is_zero() {
                    continue;
                }
                let amp = xp * yq * xr * complex_real(coeff);
                let entry = w
                    .entry(target)
                    .or_insert_with(|| Complex::new(Scalar::zero(), Scalar::zero()));
                *entry = entry.clone() + amp;
            }
        }
    }

    // <w, eta> = sum_u w_u eta_{-u} S A(u)
    let mut num = Complex::new(Scalar::zero(), Scalar::zero());
    for (u, wu) in &w {
        let yu = eta.coeff(-*u);
        if yu.is_zero() {
            continue;
        }
        num += wu * &yu * complex_real(geom.area() * a_alpha(*u, beta));
    }
    assert!(
        num.im.is_zero(),
        "curvature pairing of real streams must be real"
    );
    let raw = num.re;
    let normalized = &raw / gram;
    Ok(CurvatureResult {
        raw,
        normalized,
        route: Route::RSum,
        beta: beta.clone(),
        k: None,
        l: None,
    })
}

/// Arnold's L2 curvature numerator for the plane containing `xi = cos(k,x)`
/// and an arbitrary real stream `eta`:
///
/// `-(S/4) sum_l a_{kl}^2 |x_l + x_{l+2k}|^2`, `a_{kl}^2 = (k x l)^4 / |k+l|^2`.
///
/// Non-positive for every stream; terms with `l = -k` are vacuous and
/// skipped. Dividing by the L2 Gram determinant gives the sectional
/// curvature, so this matches [`sectional_cos_cos_raw`] at `beta = 0` when
/// `eta` is a cosine.
pub fn arnold_general(k: WaveVector, eta: &FourierStream, geom: &TorusGeometry) -> Result<Scalar> {
    require_mode(k)?;
    let two_k = k + k;
    let mut modes: Vec<WaveVector> = eta.support().collect();
    for m in eta.support() {
        modes.push(m - two_k);
    }
    modes.sort();
    modes.dedup();

    let mut sum = Scalar::zero();
    for l in modes {
        if l == -k {
            continue;
        }
        let c = k.cross(l);
        if c == 0 {
            continue;
        }
        let amp = eta.coeff(l) + eta.coeff(l + two_k);
        if amp.is_zero() {
            continue;
        }
        let c = int(c);
        let quartic = &c * &c * &c * &c;
        let a_sq = quartic / int((k + l).norm_sq());
        sum += a_sq * amp.norm_sqr();
    }
    Ok(-(geom.area() / int(4)) * sum)
}

/// Arnold's L2 sectional curvature for two cosine streams:
/// `-(|k|^2 + |l|^2) sin^2(beta) sin^2(gamma) / (4S)` with `beta` the angle
/// between `k` and `l`, `gamma` the angle between `k+l` and `k-l`; both
/// squared sines are evaluated as exact rationals.
pub fn arnold_cos_cos(k: WaveVector, l: WaveVector, geom: &TorusGeometry) -> Result<Scalar> {
    require_plane(k, l)?;
    let c = int(k.cross(l));
    if c.is_zero() {
        return Ok(Scalar::zero());
    }
    let ksq = int(k.norm_sq());
    let lsq = int(l.norm_sq());
    let sin2_kl = &c * &c / (&ksq * &lsq);
    let p = k + l;
    let m = k - l;
    let cpm = int(p.cross(m));
    let sin2_pm = &cpm * &cpm / (int(p.norm_sq()) * int(m.norm_sq()));
    Ok(-(ksq + lsq) * sin2_kl * sin2_pm / (int(4) * geom.area()))
}
