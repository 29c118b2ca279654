//! Dense univariate polynomials over exact rationals: evaluation, exact
//! Newton interpolation, and Sturm-chain real-root counting.

use num::{One, Signed, Zero};

use crate::scalar::{sign, Scalar};

/// Polynomial with exact rational coefficients, stored in ascending degree
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Scalar>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * crate::scalar::int(i as i128))
            .collect();
        RatPoly::new(coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        RatPoly::new(coeffs)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        RatPoly::new(coeffs)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        RatPoly::new(coeffs)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    /// Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.coeffs.len() - 1;
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (RatPoly::zero(), RatPoly::new(rem));
        }
        let mut quot = vec![Scalar::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] / &lead;
            for j in 0..=d {
                rem[i - d + j] = &rem[i - d + j] - &c * &divisor.coeffs[j];
            }
            quot[i - d] = c;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Divides by the absolute value of the leading coefficient; preserves
    /// signs everywhere while keeping Sturm-chain coefficients small.
    fn sign_normalized(self) -> RatPoly {
        match self.leading() {
            Some(l) => {
                let a = l.abs();
                self.scale(&(Scalar::one() / a))
            }
            None => self,
        }
    }
}

fn poly_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        y = r;
    }
    x.sign_normalized()
}

/// Square-free part `p / gcd(p, p')`; shares the real roots of `p`, all simple.
pub fn square_free(p: &RatPoly) -> RatPoly {
    if p.is_zero() || p.degree() == Some(0) {
        return p.clone();
    }
    let g = poly_gcd(p, &p.derivative());
    if g.degree() == Some(0) {
        return p.clone();
    }
    let (q, r) = p.div_rem(&g);
    debug_assert!(r.is_zero());
    q
}

/// Exact polynomial through the given points (distinct abscissas), via
/// Newton divided differences.
pub fn interpolate(points: &[(Scalar, Scalar)]) -> RatPoly {
    assert!(!points.is_empty(), "interpolation needs at least one point");
    let xs: Vec<&Scalar> = points.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Scalar> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..dd.len() {
        for i in (level..dd.len()).rev() {
            let dx = xs[i] - xs[i - level];
            assert!(!dx.is_zero(), "interpolation abscissas must be distinct");
            dd[i] = (&dd[i] - &dd[i - 1]) / dx;
        }
    }
    let mut result = RatPoly::zero();
    let mut basis = RatPoly::new(vec![Scalar::one()]);
    for (i, c) in dd.iter().enumerate() {
        result = result.add(&basis.scale(c));
        let linear = RatPoly::new(vec![-xs[i].clone(), Scalar::one()]);
        basis = basis.mul(&linear);
    }
    result
}

/// Upper bound on the absolute value of every real root:
/// `1 + max_i |a_i| / |a_n|`.
pub fn cauchy_root_bound(p: &RatPoly) -> Scalar {
    let lead = p
        .leading()
        .expect("root bound of the zero polynomial")
        .abs();
    let mut m = Scalar::zero();
    for c in &p.coeffs()[..p.coeffs().len() - 1] {
        let a = c.abs();
        if a > m {
            m = a;
        }
    }
    Scalar::one() + m / lead
}

/// Sturm chain of the square-free part of a polynomial.
///
/// Sign-variation differences count distinct real roots exactly; combined
/// with bisection this isolates roots with certified brackets.
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> Self {
        let p0 = square_free(p).sign_normalized();
        let mut chain = vec![p0.clone()];
        let p1 = p0.derivative();
        if !p1.is_zero() {
            chain.push(p1.sign_normalized());
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                let neg = r.scale(&-Scalar::one()).sign_normalized();
                chain.push(neg);
            }
        }
        SturmChain { chain }
    }

    /// Square-free representative whose simple roots are counted.
    pub fn square_free_poly(&self) -> &RatPoly {
        &self.chain[0]
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut count = 0;
        let mut last = 0;
        for s in signs.filter(|s| *s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Scalar) -> usize {
        Self::variations(self.chain.iter().map(|p| sign(&p.eval(x))))
    }

    fn variations_at_pos_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.leading().map_or(0, sign)))
    }

    /// Number of distinct real roots in `(x, +inf)`.
    pub fn count_roots_above(&self, x: &Scalar) -> usize {
        self.variations_at(x) - self.variations_at_pos_infinity()
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots_in(&self, a: &Scalar, b: &Scalar) -> usize {
        assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn poly(cs: &[i128]) -> RatPoly {
        RatPoly::new(cs.iter().map(|c| int(*c)).collect())
    }

    #[test]
    fn eval_and_derivative() {
        // 2 - 3x + x^3
        let p = poly(&[2, -3, 0, 1]);
        assert_eq!(p.eval(&int(2)), int(4));
        assert_eq!(p.derivative(), poly(&[-3, 0, 3]));
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly(&[1, 0, -2, 0, 1]);
        let b = poly(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let target = RatPoly::new(vec![ratio(1, 3), int(-2), int(0), ratio(7, 5)]);
        let points: Vec<(Scalar, Scalar)> =
            (0..4).map(|i| (int(i), target.eval(&int(i)))).collect();
        assert_eq!(interpolate(&points), target);
    }

    #[test]
    fn sturm_counts_roots_of_cubic() {
        // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
        let p = poly(&[6, -7, 0, 1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots_above(&int(0)), 2);
        assert_eq!(chain.count_roots_above(&ratio(3, 2)), 1);
        assert_eq!(chain.count_roots_above(&int(5)), 0);
        assert_eq!(chain.count_roots_in(&int(-4), &int(0)), 1);
        // exact root at a probe point: (1, 2] holds exactly one root
        assert_eq!(chain.count_roots_in(&int(1), &int(2)), 1);
    }

    #[test]
    fn sturm_handles_repeated_roots() {
        // (x - 1)^2 (x + 2)
        let p = poly(&[2, -3, 0, 1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots_above(&int(-10)), 2);
        let b = cauchy_root_bound(&p);
        assert!(b >= int(2));
    }
}
