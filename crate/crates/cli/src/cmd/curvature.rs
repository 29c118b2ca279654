//! Single-plane curvature evaluation.

use curvalpha_core::{
    closed_form_bracket, sectional_cos_cos_normalized, sign, Beta, TorusGeometry,
};

use crate::args::CurvatureArgs;
use crate::out::dec;
use crate::Failure;

pub fn run(args: CurvatureArgs) -> Result<(), Failure> {
    let geom = TorusGeometry::new(args.area)?;
    let beta = Beta::from_alpha(&args.alpha);
    let result = sectional_cos_cos_normalized(args.k, args.l, &beta, &geom)?;
    let bracket_sign = sign(&closed_form_bracket(args.k, args.l, &beta));
    if args.exact {
        println!("raw: {}", result.raw);
        println!("normalized: {}", result.normalized);
    } else {
        println!("raw: {}", dec(&result.raw));
        println!("normalized: {}", dec(&result.normalized));
    }
    println!("bracket_sign: {bracket_sign}");
    Ok(())
}
