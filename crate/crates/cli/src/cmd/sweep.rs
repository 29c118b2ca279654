//! Alpha sweep over a rational grid, as plot-ready CSV.

use std::io::Write;

use curvalpha_core::{
    closed_form_bracket, scalar::int, sectional_cos_cos_normalized, sign, Beta, TorusGeometry,
};

use crate::args::SweepArgs;
use crate::out::{dec, io_failure, sink};
use crate::Failure;

pub fn run(args: SweepArgs) -> Result<(), Failure> {
    if args.steps < 2 {
        return Err(Failure::usage("sweep needs at least 2 grid points"));
    }
    if args.alpha_max <= args.alpha_min {
        return Err(Failure::usage(
            "alpha grid must be strictly increasing (alpha-max > alpha-min)",
        ));
    }
    let geom = TorusGeometry::new(args.area)?;
    let span = &args.alpha_max - &args.alpha_min;
    let denom = int((args.steps - 1) as i128);

    let mut w = sink(args.out.as_deref())?;
    writeln!(w, "alpha,curvature_raw,curvature_normalized,bracket_sign").map_err(io_failure)?;
    for i in 0..args.steps {
        // rational grid point: sign decisions at beta = alpha^2 stay exact
        let alpha = &args.alpha_min + &span * int(i as i128) / &denom;
        let beta = Beta::from_alpha(&alpha);
        let result = sectional_cos_cos_normalized(args.k, args.l, &beta, &geom)?;
        let bracket_sign = sign(&closed_form_bracket(args.k, args.l, &beta));
        writeln!(
            w,
            "{},{},{},{}",
            dec(&alpha),
            dec(&result.raw),
            dec(&result.normalized),
            bracket_sign
        )
        .map_err(io_failure)?;
    }
    w.flush().map_err(io_failure)?;
    Ok(())
}
