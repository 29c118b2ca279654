//! Positivity-threshold report for one plane, as a JSON object.

use curvalpha_core::{find_alpha0, NoThresholdReason};

use crate::args::Alpha0Args;
use crate::out::{dec_bracket, json_bool, json_opt_dec};
use crate::Failure;

pub fn run(args: Alpha0Args) -> Result<(), Failure> {
    let result = find_alpha0(args.k, args.l)?;
    let flat = args.k.cross(args.l) == 0;

    // A flat direction has identically zero curvature: no threshold to
    // report, whatever the bracket polynomial does.
    let exists = result.exists && !flat;
    let alpha0 = if exists {
        json_opt_dec(&result.alpha0)
    } else {
        "null".to_string()
    };
    let beta_bracket = if exists {
        match &result.beta_bracket {
            Some((lo, hi)) => format!("[{},{}]", dec_bracket(lo), dec_bracket(hi)),
            None => "null".to_string(),
        }
    } else {
        "null".to_string()
    };
    let below_cap = if exists {
        let cap_sq = &args.cap * &args.cap;
        match &result.beta_star {
            Some(beta_star) => json_bool(*beta_star < cap_sq).to_string(),
            None => "null".to_string(),
        }
    } else {
        "null".to_string()
    };
    let reason = if flat {
        "\"flat direction\"".to_string()
    } else {
        match result.reason {
            Some(NoThresholdReason::EventuallyNegative) => "\"eventually negative\"".to_string(),
            Some(NoThresholdReason::IdenticallyZero) => "\"identically zero\"".to_string(),
            None => "null".to_string(),
        }
    };

    println!(
        "{{\"exists\":{},\"alpha0\":{},\"beta_bracket\":{},\"positive_roots\":{},\"below_cap\":{},\"reason\":{}}}",
        json_bool(exists),
        alpha0,
        beta_bracket,
        result.positive_roots,
        below_cap,
        reason
    );
    Ok(())
}
