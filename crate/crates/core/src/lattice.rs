//! Wave vectors on the dual lattice and the H1 Lie-algebra structure
//! constants on the Fourier basis of zero-mean stream functions.
//!
//! The Lie algebra of area-preserving diffeomorphisms of the flat 2-torus is
//! identified with real stream functions of zero mean. Complexified, it is
//! spanned by `e_k = exp(i(k,x))` indexed by nonzero integer wave vectors
//! `k`. This module provides the basic operations on that basis:
//!
//! * the H1 Fourier multiplier `A(k) = |k|^2 (1 + beta |k|^2)`, `beta = alpha^2`;
//! * the inner product `<e_k, e_l> = S * A(k) * delta_{k,-l}`;
//! * the commutator `[e_k, e_l] = (k x l) e_{k+l}`;
//! * the bilinear form `B(e_k, e_l) = (k x l) A(k)/A(k+l) e_{k+l}` defined by
//!   `<B(xi, eta), zeta> = <xi, [eta, zeta]>`;
//! * the Levi-Civita connection
//!   `conn(e_k) e_l = (k x l)/2 (1 - (A(k) - A(l))/A(k+l)) e_{k+l}`,
//!   obtained from `conn_xi eta = ([xi,eta] - B(xi,eta) - B(eta,xi)) / 2`.
//!
//! Anything that would land on the excluded zero mode is defined to vanish.
//! All coefficients are exact rationals in the integer wave vectors and beta.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, ratio, Scalar};

/// Largest accepted magnitude for an input wave-vector component.
///
/// Sums of a few validated vectors and their pairwise products then stay well
/// inside `i128`, so all lattice arithmetic is exact without big integers.
pub const MAX_COMPONENT: i64 = (1 << 31) - 1;

/// Integer lattice point indexing the Fourier basis element `e_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WaveVector {
    pub k1: i64,
    pub k2: i64,
}

impl WaveVector {
    pub const fn new(k1: i64, k2: i64) -> Self {
        WaveVector { k1, k2 }
    }

    /// Validating constructor for external input.
    pub fn checked(k1: i64, k2: i64) -> Result<Self> {
        for c in [k1, k2] {
            if c.abs() > MAX_COMPONENT {
                return Err(Error::ComponentOutOfRange(c));
            }
        }
        Ok(WaveVector { k1, k2 })
    }

    pub fn is_zero(self) -> bool {
        self.k1 == 0 && self.k2 == 0
    }

    /// Squared Euclidean norm `|k|^2`.
    pub fn norm_sq(self) -> i128 {
        let (a, b) = (self.k1 as i128, self.k2 as i128);
        a * a + b * b
    }

    /// Euclidean inner product `(k, l)`.
    pub fn dot(self, other: WaveVector) -> i128 {
        self.k1 as i128 * other.k1 as i128 + self.k2 as i128 * other.k2 as i128
    }

    /// Oriented area `k x l = k1*l2 - k2*l1` of the spanned parallelogram.
    pub fn cross(self, other: WaveVector) -> i128 {
        self.k1 as i128 * other.k2 as i128 - self.k2 as i128 * other.k1 as i128
    }

    /// Rotation by a quarter turn; orthogonal to `self` with the same norm.
    pub fn perp(self) -> WaveVector {
        WaveVector::new(-self.k2, self.k1)
    }
}

impl Add for WaveVector {
    type Output = WaveVector;
    fn add(self, rhs: WaveVector) -> WaveVector {
        WaveVector::new(self.k1 + rhs.k1, self.k2 + rhs.k2)
    }
}

impl Sub for WaveVector {
    type Output = WaveVector;
    fn sub(self, rhs: WaveVector) -> WaveVector {
        WaveVector::new(self.k1 - rhs.k1, self.k2 - rhs.k2)
    }
}

impl Neg for WaveVector {
    type Output = WaveVector;
    fn neg(self) -> WaveVector {
        WaveVector::new(-self.k1, -self.k2)
    }
}

impl Mul<i64> for WaveVector {
    type Output = WaveVector;
    fn mul(self, rhs: i64) -> WaveVector {
        WaveVector::new(self.k1 * rhs, self.k2 * rhs)
    }
}

impl fmt::Display for WaveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k1, self.k2)
    }
}

/// The metric parameter `beta = alpha^2 >= 0`. `beta = 0` is the L2 metric.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Beta(Scalar);

impl Beta {
    pub fn new(value: Scalar) -> Result<Self> {
        if value < Scalar::zero() {
            return Err(Error::NegativeBeta);
        }
        Ok(Beta(value))
    }

    pub fn zero() -> Self {
        Beta(Scalar::zero())
    }

    /// `beta = alpha^2`; non-negative for every rational `alpha`.
    pub fn from_alpha(alpha: &Scalar) -> Self {
        Beta(alpha * alpha)
    }

    pub fn value(&self) -> &Scalar {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// Flat-torus geometry: only the total area `S` enters the formulas.
///
/// The default carries `S = 1`; signs and thresholds are S-independent, so a
/// numeric area only rescales reported magnitudes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusGeometry {
    area: Scalar,
}

impl TorusGeometry {
    pub fn new(area: Scalar) -> Result<Self> {
        if area <= Scalar::zero() {
            return Err(Error::NonPositiveArea);
        }
        Ok(TorusGeometry { area })
    }

    /// Unit-area torus.
    pub fn unit() -> Self {
        TorusGeometry {
            area: Scalar::one(),
        }
    }

    pub fn area(&self) -> &Scalar {
        &self.area
    }
}

impl Default for TorusGeometry {
    fn default() -> Self {
        TorusGeometry::unit()
    }
}

fn require_mode(k: WaveVector) -> Result<()> {
    if k.is_zero() {
        Err(Error::ZeroMode)
    } else {
        Ok(())
    }
}

/// H1 Fourier multiplier `A(k) = |k|^2 (1 + beta |k|^2)`.
///
/// Strictly positive for `k != 0`, zero at the zero vector, and equal to
/// `|k|^2` in the L2 limit `beta = 0`.
pub fn a_alpha(k: WaveVector, beta: &Beta) -> Scalar {
    let nsq = int(k.norm_sq());
    &nsq * (Scalar::one() + beta.value() * &nsq)
}

/// Inner product of basis elements: `S * A(k)` when `l = -k`, else zero.
pub fn inner_basis(
    k: WaveVector,
    l: WaveVector,
    beta: &Beta,
    geom: &TorusGeometry,
) -> Result<Scalar> {
    require_mode(k)?;
    require_mode(l)?;
    if l == -k {
        Ok(geom.area() * a_alpha(k, beta))
    } else {
        Ok(Scalar::zero())
    }
}

/// Commutator `[e_k, e_l] = (k x l) e_{k+l}`: coefficient and target mode.
pub fn commutator_coeff(k: WaveVector, l: WaveVector) -> Result<(Scalar, WaveVector)> {
    require_mode(k)?;
    require_mode(l)?;
    Ok((int(k.cross(l)), k + l))
}

/// Coefficient of `B(e_k, e_l)` on `e_{k+l}`: `(k x l) A(k) / A(k+l)`.
///
/// When `k + l = 0` the target would be the excluded zero mode; the adjoint
/// definition of `B` then pairs with nothing, so the coefficient is zero
/// (note `k x l = 0` there as well).
pub fn b_coeff(k: WaveVector, l: WaveVector, beta: &Beta) -> Result<Scalar> {
    require_mode(k)?;
    require_mode(l)?;
    let target = k + l;
    if target.is_zero() {
        return Ok(Scalar::zero());
    }
    Ok(int(k.cross(l)) * a_alpha(k, beta) / a_alpha(target, beta))
}

/// Levi-Civita connection coefficient: `conn(e_k) e_l = d e_{k+l}` with
/// `d = (k x l)/2 * (1 - (A(k) - A(l))/A(k+l))`.
///
/// Zero when `k + l = 0` (the target mode is excluded). The halving divisor
/// is pinned by requiring both Levi-Civita identities at once: metric
/// compatibility `d_{k,k+l} A(k+l) + d_{k,-l} A(l) = 0` (scale-invariant on
/// its own) and torsion-freeness `d_{k,k+l} - d_{l,k+l} = k x l`, which
/// fails for every other constant.
pub fn conn_coeff(k: WaveVector, l: WaveVector, beta: &Beta) -> Result<Scalar> {
    require_mode(k)?;
    require_mode(l)?;
    let target = k + l;
    if target.is_zero() {
        return Ok(Scalar::zero());
    }
    let ak = a_alpha(k, beta);
    let al = a_alpha(l, beta);
    let at = a_alpha(target, beta);
    Ok(ratio(k.cross(l), 2) * (Scalar::one() - (ak - al) / at))
}
