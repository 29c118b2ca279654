//! Exact rational scalars, parsing, and decimal rendering.
//!
//! Every quantity in the core formulas is an exact `BigRational`; floating
//! point never enters the computation path. Decimal strings are produced only
//! at the reporting boundary, correctly rounded (round-half-even) to a
//! requested number of significant digits.

use num::bigint::BigInt;
use num::{BigRational, Integer, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational scalar.
pub type Scalar = BigRational;

/// Significant digits used by default when rendering exact values.
pub const DEFAULT_SIG_DIGITS: usize = 12;

/// Integer-valued scalar.
pub fn int(n: i128) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact quotient `n/d`. Panics if `d == 0`.
pub fn ratio(n: i128, d: i128) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of an exact scalar as -1, 0, or 1.
pub fn sign(x: &Scalar) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses a rational literal: `p/q`, a decimal like `-0.25`, or an integer.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let s = text.trim();
    let invalid = || Error::InvalidNumber(text.to_string());
    if s.is_empty() {
        return Err(invalid());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| invalid())?;
        let d: BigInt = den.trim().parse().map_err(|_| invalid())?;
        if d.is_zero() {
            return Err(invalid());
        }
        return Ok(BigRational::new(n, d));
    }
    let (sign_str, mag) = match s.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match mag.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mag, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(invalid());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(invalid());
    }
    let digits = format!("{sign_str}{int_part}{frac_part}");
    let n: BigInt = digits.parse().map_err(|_| invalid())?;
    let d = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(n, d))
}

fn pow10(n: u32) -> BigInt {
    BigInt::from(10u32).pow(n)
}

/// True when `|x| >= 10^e`.
fn abs_ge_pow10(n: &BigInt, d: &BigInt, e: i64) -> bool {
    if e >= 0 {
        *n >= d * pow10(e as u32)
    } else {
        n * pow10((-e) as u32) >= *d
    }
}

/// Renders `x` as a plain decimal with `sig` significant digits,
/// correctly rounded (ties to even). Exactly representable values are
/// shortened by trimming trailing fractional zeros, so the output either
/// equals `x` or lies within half a unit in the last printed place.
pub fn to_decimal(x: &Scalar, sig: usize) -> String {
    assert!(sig >= 1, "need at least one significant digit");
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let n = x.numer().abs();
    let d = x.denom().clone();

    // Decimal exponent e with 10^e <= |x| < 10^{e+1}.
    let mut e = n.to_string().len() as i64 - d.to_string().len() as i64;
    while abs_ge_pow10(&n, &d, e + 1) {
        e += 1;
    }
    while !abs_ge_pow10(&n, &d, e) {
        e -= 1;
    }

    // Scale so the integer part carries exactly `sig` digits.
    let shift = sig as i64 - 1 - e;
    let (num_scaled, den_scaled) = if shift >= 0 {
        (&n * pow10(shift as u32), d)
    } else {
        (n, &d * pow10((-shift) as u32))
    };
    let (mut q, r) = num_scaled.div_rem(&den_scaled);
    let exact = r.is_zero();
    let twice_r = &r * 2u32;
    if twice_r > den_scaled || (twice_r == den_scaled && q.is_odd()) {
        q += 1;
    }
    // rounding may carry into the next decade: 99..9 -> 100..0
    if q == pow10(sig as u32) {
        q = pow10(sig as u32 - 1);
        e += 1;
    }

    let digits = q.to_string();
    debug_assert_eq!(digits.len(), sig);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e >= 0 {
        let e = e as usize;
        if e + 1 >= sig {
            out.push_str(&digits);
            out.extend(std::iter::repeat_n('0', e + 1 - sig));
        } else {
            out.push_str(&digits[..e + 1]);
            let mut frac = &digits[e + 1..];
            if exact {
                frac = frac.trim_end_matches('0');
            }
            if !frac.is_empty() {
                out.push('.');
                out.push_str(frac);
            }
        }
    } else {
        let zeros = (-e - 1) as usize;
        let mut frac = format!("{}{}", "0".repeat(zeros), digits);
        if exact {
            while frac.ends_with('0') {
                frac.pop();
            }
        }
        out.push_str("0.");
        out.push_str(&frac);
    }
    out
}

/// Rational approximation of `sqrt(x)` for `x >= 0`, accurate to within
/// `10^-guard_digits` in absolute terms.
pub fn sqrt_approx(x: &Scalar, guard_digits: u32) -> Scalar {
    assert!(!x.is_negative(), "sqrt of a negative scalar");
    if x.is_zero() {
        return Scalar::zero();
    }
    let n = x.numer().clone();
    let d = x.denom().clone();
    // sqrt(n/d) = sqrt(n*d)/d; floor the integer root after scaling.
    let scale = pow10(guard_digits);
    let scaled = &n * &d * (&scale * &scale);
    let root = scaled.sqrt();
    BigRational::new(root, d * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;
    use proptest::prelude::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_scalar("1/4").unwrap(), ratio(1, 4));
        assert_eq!(parse_scalar("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_scalar("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_scalar("-0.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert_eq!(parse_scalar(" 1.5 ").unwrap(), ratio(3, 2));
        assert_eq!(parse_scalar(".5").unwrap(), ratio(1, 2));
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar("1.2.3").is_err());
    }

    #[test]
    fn decimal_exact_values() {
        assert_eq!(to_decimal(&Scalar::zero(), 12), "0");
        assert_eq!(to_decimal(&ratio(-1, 2), 12), "-0.5");
        assert_eq!(to_decimal(&int(5), 12), "5");
        assert_eq!(to_decimal(&ratio(1, 4), 12), "0.25");
        assert_eq!(to_decimal(&int(1_000_000), 3), "1000000");
    }

    #[test]
    fn decimal_rounding() {
        // 1/3 at 5 digits
        assert_eq!(to_decimal(&ratio(1, 3), 5), "0.33333");
        assert_eq!(to_decimal(&ratio(2, 3), 5), "0.66667");
        // ties to even
        assert_eq!(to_decimal(&ratio(25, 1000), 1), "0.02");
        assert_eq!(to_decimal(&ratio(35, 1000), 1), "0.04");
        // carry across the decade: 0.999997 rounds up to 1.0000 at 5 digits
        assert_eq!(to_decimal(&ratio(999_997, 1_000_000), 5), "1.0000");
        assert_eq!(to_decimal(&ratio(1, 199), 12), "0.00502512562814");
    }

    #[test]
    fn sqrt_brackets_true_value() {
        let two = int(2);
        let r = sqrt_approx(&two, 30);
        let err = (&r * &r - &two).abs();
        // |r^2 - 2| <= (r + sqrt(2)) * 1e-30 < 4e-30
        assert!(err < ratio(4, 1) * Scalar::new(1.into(), pow10(30)));
        assert_eq!(sqrt_approx(&int(9), 10), int(3));
    }

    proptest! {
        // The printed value differs from the exact rational by less than one
        // unit in the last printed place.
        #[test]
        fn decimal_round_trip_within_ulp(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000, sig in 1usize..15) {
            prop_assume!(n != 0);
            let x = ratio(n as i128, d as i128);
            let rendered = to_decimal(&x, sig);
            let back = parse_scalar(&rendered).unwrap();
            let err = (&back - &x).abs();
            // one ulp at `sig` significant digits of |x|
            let mag = x.abs();
            let mut ulp = Scalar::new(1.into(), pow10(sig as u32));
            let ten = int(10);
            let mut scale = Scalar::one();
            while &mag / &scale >= ten { scale = &scale * &ten; }
            while &mag / &scale < Scalar::one() { scale = &scale / &ten; }
            ulp = ulp * scale * ten.clone();
            prop_assert!(err <= ulp, "x={} rendered={} err={}", x, rendered, err);
        }
    }
}
