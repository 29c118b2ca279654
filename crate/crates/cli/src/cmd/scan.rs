//! Lattice scan: alpha0 statistics over (k, eps) grids.
//!
//! Work items evaluate concurrently on the rayon pool (capped by
//! CURVALPHA_THREADS); records are emitted in lexicographic (k, eps) order
//! regardless of completion order, so output is deterministic.

use std::io::Write;

use curvalpha_core::{find_alpha0, scalar::int, Scalar, WaveVector};
use num::{One, Zero};
use rayon::prelude::*;

use crate::args::{ScanArgs, ScanFormat};
use crate::out::{dec, dec_fraction, dec_sqrt, io_failure, json_bool, sink};
use crate::Failure;

struct Record {
    k: WaveVector,
    eps: WaveVector,
    /// `beta* = alpha0^2`, present iff the threshold exists.
    beta_star: Option<Scalar>,
    alpha0: Option<Scalar>,
    b3_positive: bool,
    k_dot_eps: i128,
}

impl Record {
    /// Exact `alpha0^2 |k|^2`; ordering these rationals orders `alpha0 |k|`.
    fn product_sq(&self) -> Option<Scalar> {
        self.beta_star.as_ref().map(|b| b * int(self.k.norm_sq()))
    }
}

fn parse_eps_list(raw: &str) -> Result<Vec<WaveVector>, Failure> {
    let mut out = Vec::new();
    for part in raw.split(';') {
        let part = part.trim();
        if part.is_empty() {
            return Err(Failure::usage(format!("empty entry in eps list {raw:?}")));
        }
        let eps = crate::args::parse_wave_vector(part).map_err(Failure::usage)?;
        if eps.is_zero() {
            return Err(Failure::usage("eps entries must be nonzero"));
        }
        out.push(eps);
    }
    if out.is_empty() {
        return Err(Failure::usage("eps list is empty"));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn run(args: ScanArgs) -> Result<(), Failure> {
    let eps_list = parse_eps_list(&args.eps)?;
    let kmax = args.kmax as i64;
    if kmax < 1 {
        return Err(Failure::usage("kmax must be at least 1"));
    }

    // lexicographic (k, eps) work list
    let mut work: Vec<(WaveVector, WaveVector)> = Vec::new();
    for k1 in -kmax..=kmax {
        for k2 in -kmax..=kmax {
            let k = WaveVector::new(k1, k2);
            if k.is_zero() {
                continue;
            }
            for eps in &eps_list {
                let l = k + *eps;
                if l.is_zero() || l == k || l == -k {
                    continue;
                }
                work.push((k, *eps));
            }
        }
    }

    let records: Vec<Record> = work
        .par_iter()
        .map(|(k, eps)| {
            let l = *k + *eps;
            let res = find_alpha0(*k, l).expect("admissible plane");
            Record {
                k: *k,
                eps: *eps,
                beta_star: if res.exists {
                    res.beta_star.clone()
                } else {
                    None
                },
                alpha0: if res.exists { res.alpha0.clone() } else { None },
                b3_positive: res.poly.b3 > Scalar::zero(),
                k_dot_eps: k.dot(*eps),
            }
        })
        .collect();

    let mut w = sink(args.out.as_deref())?;

    match args.format {
        ScanFormat::Csv => {
            writeln!(
                w,
                "k1,k2,eps1,eps2,alpha0,alpha0_times_knorm,b3_positive,k_dot_eps"
            )
            .map_err(io_failure)?;
            for r in &records {
                let alpha0 = r.alpha0.as_ref().map(dec).unwrap_or_default();
                let product = r.product_sq().map(|p| dec_sqrt(&p)).unwrap_or_default();
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{}",
                    r.k.k1,
                    r.k.k2,
                    r.eps.k1,
                    r.eps.k2,
                    alpha0,
                    product,
                    json_bool(r.b3_positive),
                    r.k_dot_eps
                )
                .map_err(io_failure)?;
            }
        }
        ScanFormat::Jsonl => {
            for r in &records {
                let alpha0 = r
                    .alpha0
                    .as_ref()
                    .map(dec)
                    .unwrap_or_else(|| "null".to_string());
                let product = r
                    .product_sq()
                    .map(|p| dec_sqrt(&p))
                    .unwrap_or_else(|| "null".to_string());
                writeln!(
                    w,
                    "{{\"k\":[{},{}],\"eps\":[{},{}],\"alpha0\":{},\"alpha0_times_knorm\":{},\"b3_positive\":{},\"k_dot_eps\":{}}}",
                    r.k.k1, r.k.k2, r.eps.k1, r.eps.k2, alpha0, product,
                    json_bool(r.b3_positive), r.k_dot_eps
                )
                .map_err(io_failure)?;
            }
        }
    }

    let summary = summarize(&records);
    match args.format {
        ScanFormat::Jsonl => {
            writeln!(w, "{}", summary).map_err(io_failure)?;
        }
        ScanFormat::Csv => {
            // keep the CSV body schema-clean; the summary goes to stderr
            eprintln!("{summary}");
        }
    }
    w.flush().map_err(io_failure)?;
    Ok(())
}

/// Summary over all records, plus alpha0*|k| statistics over records with
/// `(k,eps) != 0` and a present threshold.
fn summarize(records: &[Record]) -> String {
    let total = records.len();
    let with_alpha0 = records.iter().filter(|r| r.alpha0.is_some()).count();
    let below_one = records
        .iter()
        .filter(|r| r.beta_star.as_ref().is_some_and(|b| *b < Scalar::one()))
        .count();

    let mut products: Vec<Scalar> = records
        .iter()
        .filter(|r| r.k_dot_eps != 0)
        .filter_map(|r| r.product_sq())
        .collect();
    products.sort();
    let (min, max, median) = if products.is_empty() {
        ("null".to_string(), "null".to_string(), "null".to_string())
    } else {
        // lower-middle element for even counts: an exact data value
        let median = &products[(products.len() - 1) / 2];
        (
            dec_sqrt(&products[0]),
            dec_sqrt(&products[products.len() - 1]),
            dec_sqrt(median),
        )
    };

    format!(
        "{{\"summary\":{{\"records\":{},\"alpha0_present\":{},\"alpha0_below_one\":{},\
\"fraction_alpha0_below_one\":{},\"alpha0_times_knorm_min\":{},\
\"alpha0_times_knorm_max\":{},\"alpha0_times_knorm_median\":{}}}}}",
        total,
        with_alpha0,
        below_one,
        dec_fraction(below_one, total),
        min,
        max,
        median
    )
}
