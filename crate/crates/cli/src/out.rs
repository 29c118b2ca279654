//! Output rendering helpers: decimals, JSON fragments, and writers.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use curvalpha_core::{scalar, sqrt_approx, to_decimal, Scalar, DEFAULT_SIG_DIGITS};

use crate::Failure;

/// Default-precision decimal rendering of an exact scalar.
pub fn dec(x: &Scalar) -> String {
    to_decimal(x, DEFAULT_SIG_DIGITS)
}

/// Higher-precision rendering for certified beta brackets, whose endpoints
/// differ by as little as the 1e-18 bisection tolerance.
pub fn dec_bracket(x: &Scalar) -> String {
    to_decimal(x, 20)
}

/// Decimal rendering of `sqrt(x)` computed in rational arithmetic.
pub fn dec_sqrt(x: &Scalar) -> String {
    to_decimal(&sqrt_approx(x, 40), DEFAULT_SIG_DIGITS)
}

/// JSON value for an optional exact scalar (decimal number or `null`).
pub fn json_opt_dec(x: &Option<Scalar>) -> String {
    match x {
        Some(v) => dec(v),
        None => "null".to_string(),
    }
}

pub fn json_bool(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Fraction `num/den` rendered as a default-precision decimal.
pub fn dec_fraction(num: usize, den: usize) -> String {
    if den == 0 {
        return "null".to_string();
    }
    dec(&scalar::ratio(num as i128, den as i128))
}

/// Maps I/O errors to failures; a closed pipe becomes a silent success so
/// `curvalpha ... | head` behaves like any other filter.
pub fn io_failure(e: io::Error) -> Failure {
    if e.kind() == io::ErrorKind::BrokenPipe {
        Failure {
            code: 0,
            message: String::new(),
        }
    } else {
        Failure {
            code: 2,
            message: format!("write failed: {e}"),
        }
    }
}

/// Either a buffered file writer or stdout.
pub fn sink(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| Failure {
                code: 2,
                message: format!("cannot create {}: {e}", p.display()),
            })?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}
