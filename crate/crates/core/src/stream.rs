//! Finitely supported real stream functions in Fourier representation.

use std::collections::BTreeMap;

use num::complex::Complex;
use num::Zero;

use crate::error::{Error, Result};
use crate::lattice::{a_alpha, Beta, TorusGeometry, WaveVector};
use crate::scalar::{ratio, Scalar};

/// Exact complex coefficient: a pair of rationals.
pub type ComplexScalar = Complex<Scalar>;

fn czero() -> ComplexScalar {
    Complex::new(Scalar::zero(), Scalar::zero())
}

/// A real stream function `sum_l x_l e_l` with finite support.
///
/// Construction enforces the reality constraint `x_{-l} = conj(x_l)` and
/// excludes the zero mode (stream functions have zero mean). Exact-zero
/// coefficients are pruned, so the stored support is canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierStream {
    coeffs: BTreeMap<WaveVector, ComplexScalar>,
}

impl FourierStream {
    /// Builds a stream from raw coefficients, validating the invariants.
    pub fn from_coeffs(raw: BTreeMap<WaveVector, ComplexScalar>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (k, c) in raw {
            if c.is_zero() {
                continue;
            }
            if k.is_zero() {
                return Err(Error::ZeroMode);
            }
            coeffs.insert(k, c);
        }
        for (k, c) in &coeffs {
            let mirrored = coeffs.get(&-*k).cloned().unwrap_or_else(czero);
            if mirrored != c.conj() {
                return Err(Error::InvalidNumber(format!(
                    "coefficient at {} breaks the reality constraint",
                    k
                )));
            }
        }
        Ok(FourierStream { coeffs })
    }

    /// `cos(k, x)`: coefficients 1/2 at both `k` and `-k`.
    pub fn cosine(k: WaveVector) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::ZeroMode);
        }
        let half = Complex::new(ratio(1, 2), Scalar::zero());
        let mut coeffs = BTreeMap::new();
        coeffs.insert(k, half.clone());
        coeffs.insert(-k, half);
        Ok(FourierStream { coeffs })
    }

    /// `sin(k, x)`: coefficients -i/2 at `k` and i/2 at `-k`.
    pub fn sine(k: WaveVector) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::ZeroMode);
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert(k, Complex::new(Scalar::zero(), ratio(-1, 2)));
        coeffs.insert(-k, Complex::new(Scalar::zero(), ratio(1, 2)));
        Ok(FourierStream { coeffs })
    }

    /// Coefficient at `k`, zero outside the support.
    pub fn coeff(&self, k: WaveVector) -> ComplexScalar {
        self.coeffs.get(&k).cloned().unwrap_or_else(czero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WaveVector, &ComplexScalar)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = WaveVector> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `self + c * other`; real scaling preserves the reality constraint.
    pub fn add_scaled(&self, c: &Scalar, other: &FourierStream) -> FourierStream {
        let mut coeffs = self.coeffs.clone();
        let cc = Complex::new(c.clone(), Scalar::zero());
        for (k, v) in &other.coeffs {
            let entry = coeffs.entry(*k).or_insert_with(czero);
            *entry = entry.clone() + v * &cc;
            if entry.is_zero() {
                coeffs.remove(k);
            }
        }
        FourierStream { coeffs }
    }
}

/// Bilinear H1 pairing of two real streams:
/// `<a, b> = sum_u a_u b_{-u} S A(u)`, always real for valid streams.
pub fn h1_pairing(
    a: &FourierStream,
    b: &FourierStream,
    beta: &Beta,
    geom: &TorusGeometry,
) -> Scalar {
    let mut acc = czero();
    for (u, au) in a.iter() {
        let bu = b.coeff(-*u);
        if bu.is_zero() {
            continue;
        }
        let weight = Complex::new(geom.area() * a_alpha(*u, beta), Scalar::zero());
        acc += au * &bu * weight;
    }
    debug_assert!(acc.im.is_zero(), "pairing of real streams must be real");
    acc.re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn cosine_pairing_matches_closed_form() {
        let geom = TorusGeometry::unit();
        let beta = Beta::zero();
        let k = WaveVector::new(2, 1);
        let xi = FourierStream::cosine(k).unwrap();
        // <cos(k,.), cos(k,.)> = S A(k) / 2
        assert_eq!(h1_pairing(&xi, &xi, &beta, &geom), ratio(5, 2));
        let eta = FourierStream::cosine(WaveVector::new(1, 1)).unwrap();
        assert_eq!(h1_pairing(&xi, &eta, &beta, &geom), int(0));
    }

    #[test]
    fn sine_and_cosine_are_orthogonal() {
        let geom = TorusGeometry::unit();
        let beta = Beta::zero();
        let k = WaveVector::new(1, 0);
        let c = FourierStream::cosine(k).unwrap();
        let s = FourierStream::sine(k).unwrap();
        assert_eq!(h1_pairing(&c, &s, &beta, &geom), int(0));
        assert_eq!(h1_pairing(&s, &s, &beta, &geom), ratio(1, 2));
    }

    #[test]
    fn reality_constraint_enforced() {
        let mut raw = BTreeMap::new();
        raw.insert(WaveVector::new(1, 0), Complex::new(int(1), int(0)));
        assert!(FourierStream::from_coeffs(raw).is_err());

        let mut ok = BTreeMap::new();
        ok.insert(WaveVector::new(1, 0), Complex::new(int(1), int(2)));
        ok.insert(WaveVector::new(-1, 0), Complex::new(int(1), int(-2)));
        assert!(FourierStream::from_coeffs(ok).is_ok());
    }

    #[test]
    fn zero_mode_rejected_and_zeros_pruned() {
        let mut raw = BTreeMap::new();
        raw.insert(WaveVector::new(0, 0), Complex::new(int(1), int(0)));
        assert_eq!(FourierStream::from_coeffs(raw), Err(Error::ZeroMode));

        let mut pruned = BTreeMap::new();
        pruned.insert(WaveVector::new(0, 0), czero());
        pruned.insert(WaveVector::new(3, 1), czero());
        let s = FourierStream::from_coeffs(pruned).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn add_scaled_combines_support() {
        let a = FourierStream::cosine(WaveVector::new(1, 0)).unwrap();
        let b = FourierStream::cosine(WaveVector::new(0, 1)).unwrap();
        let sum = a.add_scaled(&int(3), &b);
        assert_eq!(sum.len(), 4);
        assert_eq!(
            sum.coeff(WaveVector::new(0, 1)),
            Complex::new(ratio(3, 2), int(0))
        );
        let cancelled = a.add_scaled(&int(-1), &a);
        assert!(cancelled.is_empty());
    }
}
