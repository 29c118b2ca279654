//! Threshold analysis: where the cosine-plane curvature turns positive in
//! `alpha`, and the leading behavior of the bracket coefficients for nearly
//! parallel planes `l = k + eps`.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::cubic::{curvature_poly, CubicPoly};
use crate::error::{Error, Result};
use crate::lattice::WaveVector;
use crate::poly::{cauchy_root_bound, interpolate, RatPoly, SturmChain};
use crate::scalar::{int, sign, sqrt_approx, Scalar};

/// Default bisection tolerance on `beta`: 10^-18. Exact sign tests make the
/// tolerance purely a stopping rule, never a correctness risk.
pub fn default_beta_tolerance() -> Scalar {
    Scalar::new(BigInt::one(), BigInt::from(10u32).pow(18))
}

/// Why no positivity threshold exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoThresholdReason {
    /// The leading coefficient is negative: the bracket tends to -infinity,
    /// so it is eventually negative no matter how large `beta` grows.
    EventuallyNegative,
    /// The bracket vanishes identically.
    IdenticallyZero,
}

/// Outcome of isolating the least `beta* >= 0` beyond which the bracket is
/// persistently positive.
///
/// When `exists` is set: `alpha0 = sqrt(beta*)` (a rational approximation at
/// the working precision), the bracket polynomial has no root above
/// `beta_bracket.1`, and `beta_bracket` has width at most the bisection
/// tolerance (zero width when the root was hit exactly).
#[derive(Clone, Debug)]
pub struct Alpha0Result {
    pub exists: bool,
    /// Rational approximation of the threshold `alpha0`, present iff `exists`.
    pub alpha0: Option<Scalar>,
    /// Rational approximation of `beta* = alpha0^2`, present iff `exists`.
    pub beta_star: Option<Scalar>,
    /// Certified bracketing interval for `beta*`; `None` when the bracket is
    /// already positive on all of `(0, inf)` so the threshold sits at zero.
    pub beta_bracket: Option<(Scalar, Scalar)>,
    /// The bisection landed exactly on a rational root (or the threshold is 0).
    pub exact_root: bool,
    /// Number of distinct real roots of the bracket in `(0, inf)`.
    pub positive_roots: usize,
    pub reason: Option<NoThresholdReason>,
    /// The exact bracket cubic the analysis ran on.
    pub poly: CubicPoly,
}

/// [`find_alpha0_with_tolerance`] at the default `beta` tolerance.
pub fn find_alpha0(k: WaveVector, l: WaveVector) -> Result<Alpha0Result> {
    find_alpha0_with_tolerance(k, l, &default_beta_tolerance())
}

/// Determines, by exact sign analysis of the bracket cubic, the least
/// `beta* >= 0` with the bracket strictly positive on `(beta*, inf)`, then
/// reports `alpha0 = sqrt(beta*)`.
///
/// The threshold exists iff the leading nonzero coefficient is positive;
/// `beta*` is then the largest real root in `[0, inf)` (zero when there is
/// none). Root isolation uses Sturm counts, so the returned bracket is
/// certified: no roots lie above its upper end.
pub fn find_alpha0_with_tolerance(
    k: WaveVector,
    l: WaveVector,
    tolerance: &Scalar,
) -> Result<Alpha0Result> {
    assert!(tolerance > &Scalar::zero(), "tolerance must be positive");
    let cubic = curvature_poly(k, l)?;
    let poly = cubic.to_poly();

    if poly.is_zero() {
        return Ok(Alpha0Result {
            exists: false,
            alpha0: None,
            beta_star: None,
            beta_bracket: None,
            exact_root: false,
            positive_roots: 0,
            reason: Some(NoThresholdReason::IdenticallyZero),
            poly: cubic,
        });
    }

    let chain = SturmChain::new(&poly);
    let positive_roots = chain.count_roots_above(&Scalar::zero());

    if sign(poly.leading().expect("nonzero poly")) < 0 {
        return Ok(Alpha0Result {
            exists: false,
            alpha0: None,
            beta_star: None,
            beta_bracket: None,
            exact_root: false,
            positive_roots,
            reason: Some(NoThresholdReason::EventuallyNegative),
            poly: cubic,
        });
    }

    if positive_roots == 0 {
        // Positive leading coefficient and no roots right of zero: the
        // bracket is positive on all of (0, inf).
        let zero = Scalar::zero();
        return Ok(Alpha0Result {
            exists: true,
            alpha0: Some(zero.clone()),
            beta_star: Some(zero),
            beta_bracket: None,
            exact_root: true,
            positive_roots,
            reason: None,
            poly: cubic,
        });
    }

    // Bisect for the largest positive root: keep `count_roots_above(lo) >= 1`
    // and `count_roots_above(hi) == 0`.
    let sf = chain.square_free_poly();
    let mut lo = Scalar::zero();
    let mut hi = cauchy_root_bound(sf);
    debug_assert_eq!(chain.count_roots_above(&hi), 0);
    let two = int(2);
    let mut exact_hit: Option<Scalar> = None;
    while &hi - &lo > *tolerance {
        let mid = (&lo + &hi) / &two;
        if chain.count_roots_above(&mid) >= 1 {
            lo = mid;
        } else {
            if sf.eval(&mid).is_zero() {
                // Landed exactly on the largest root.
                exact_hit = Some(mid.clone());
                lo = mid.clone();
                hi = mid;
                break;
            }
            hi = mid;
        }
    }

    let (beta_star, exact_root) = match exact_hit {
        Some(root) => (root, true),
        None => ((&lo + &hi) / &two, false),
    };
    let alpha0 = sqrt_approx(&beta_star, 40);
    Ok(Alpha0Result {
        exists: true,
        alpha0: Some(alpha0),
        beta_star: Some(beta_star),
        beta_bracket: Some((lo, hi)),
        exact_root,
        positive_roots,
        reason: None,
        poly: cubic,
    })
}

/// Checks the stability statement for the plane `(k, k + eps)`: whether the
/// positivity threshold exists and satisfies `alpha0 < alpha_cap`.
pub fn threshold_below_cap(
    k: WaveVector,
    eps: WaveVector,
    alpha_cap: &Scalar,
) -> Result<(bool, Alpha0Result)> {
    assert!(alpha_cap > &Scalar::zero(), "alpha_cap must be positive");
    if k.is_zero() || eps.is_zero() {
        return Err(Error::ZeroMode);
    }
    let l = k + eps;
    if l.is_zero() {
        return Err(Error::ZeroMode);
    }
    let result = find_alpha0(k, l)?;
    let below = match &result.beta_star {
        Some(beta_star) => *beta_star < alpha_cap * alpha_cap,
        None => false,
    };
    Ok((result.exists && below, result))
}

/// Exact leading coefficients of one bracket coefficient `b_n` along the ray
/// `l = k + t eps`, split into the two quadratic forms in `eps`, together
/// with the published claims for comparison.
#[derive(Clone, Debug)]
pub struct EpsCoefficient {
    /// Computed coefficient of `|eps|^2` in the `t^2` term.
    pub computed_eps_sq: Scalar,
    /// Computed coefficient of `(k, eps)^2` in the `t^2` term.
    pub computed_k_eps_sq: Scalar,
    /// Published coefficient of `|eps|^2`.
    pub published_eps_sq: Scalar,
    /// Published coefficient of `(k, eps)^2`.
    pub published_k_eps_sq: Scalar,
}

impl EpsCoefficient {
    pub fn eps_sq_matches(&self) -> bool {
        self.computed_eps_sq == self.published_eps_sq
    }

    pub fn k_eps_sq_matches(&self) -> bool {
        self.computed_k_eps_sq == self.published_k_eps_sq
    }
}

/// Leading (order `t^2`) behavior of all four bracket coefficients along
/// `l = k + t eps`, computed exactly and never transcribed from print.
#[derive(Clone, Debug)]
pub struct EpsExpansion {
    pub k: WaveVector,
    pub eps: WaveVector,
    /// Exact `t^2` coefficient of each `b_n(k, k + t eps)` for the given `eps`.
    pub t2_coefficients: [Scalar; 4],
    /// Per-coefficient decomposition and agreement report.
    pub coefficients: [EpsCoefficient; 4],
}

/// The four bracket coefficients as exact polynomials in the ray parameter
/// `t`, interpolated from integer nodes where `k + t eps` is an admissible
/// mode. Degree is at most 12, so 13 nodes pin each polynomial exactly.
fn bracket_coeffs_along_ray(k: WaveVector, eps: WaveVector) -> Result<[RatPoly; 4]> {
    let mut nodes: Vec<i64> = Vec::with_capacity(13);
    let mut t = 1i64;
    while nodes.len() < 13 {
        let l = k + eps * t;
        if !l.is_zero() && l != k && l != -k {
            nodes.push(t);
        }
        t += 1;
    }
    let mut points: [Vec<(Scalar, Scalar)>; 4] = Default::default();
    for t in nodes {
        let cubic = curvature_poly(k, k + eps * t)?;
        let coeffs = [cubic.b0, cubic.b1, cubic.b2, cubic.b3];
        for (i, c) in coeffs.into_iter().enumerate() {
            points[i].push((int(t as i128), c));
        }
    }
    Ok(points.map(|ps| interpolate(&ps)))
}

/// Computes `b_n(k, k + t eps)` exactly in `t`, extracts the `t^2`
/// coefficients, and resolves each into `u |eps|^2 + v (k,eps)^2` by solving
/// against sample directions with independent form values.
///
/// The published leading expressions are recorded next to the computed ones;
/// agreement is reported, not assumed.
pub fn eps_expansion(k: WaveVector, eps: WaveVector) -> Result<EpsExpansion> {
    if k.is_zero() || eps.is_zero() {
        return Err(Error::ZeroMode);
    }
    if (k + eps) == -k {
        return Err(Error::DegeneratePlane);
    }

    let direct = bracket_coeffs_along_ray(k, eps)?;
    for p in &direct {
        // expansions start at t^2: no constant or linear part
        debug_assert!(p.coeff(0).is_zero() && p.coeff(1).is_zero());
    }
    let t2_coefficients = [
        direct[0].coeff(2),
        direct[1].coeff(2),
        direct[2].coeff(2),
        direct[3].coeff(2),
    ];

    // Sample directions for separating |eps|^2 from (k,eps)^2. Any two rows
    // with a nonsingular 2x2 form matrix determine (u, v); a third checks
    // the two-form model exactly.
    let mut samples: Vec<WaveVector> = vec![eps, eps.perp()];
    for d in [
        WaveVector::new(1, 0),
        WaveVector::new(0, 1),
        WaveVector::new(1, 1),
        WaveVector::new(1, 2),
    ] {
        if !samples.contains(&d) {
            samples.push(d);
        }
    }

    struct Row {
        eps_sq: Scalar,
        k_eps_sq: Scalar,
        t2: [Scalar; 4],
    }
    let mut rows: Vec<Row> = Vec::new();
    rows.push(Row {
        eps_sq: int(eps.norm_sq()),
        k_eps_sq: {
            let d = int(k.dot(eps));
            &d * &d
        },
        t2: t2_coefficients.clone(),
    });
    for dir in samples.iter().skip(1) {
        let polys = bracket_coeffs_along_ray(k, *dir)?;
        let d = int(k.dot(*dir));
        rows.push(Row {
            eps_sq: int(dir.norm_sq()),
            k_eps_sq: &d * &d,
            t2: [
                polys[0].coeff(2),
                polys[1].coeff(2),
                polys[2].coeff(2),
                polys[3].coeff(2),
            ],
        });
        // Symmetric k can make several directions carry the same form values
        // (e.g. every unit axis when k1 = ±k2), so keep all candidates; two
        // informative rows solve the system and the rest cross-check it.
    }

    // Pick a nonsingular pair of rows.
    let mut solved: Option<[(Scalar, Scalar); 4]> = None;
    'outer: for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let det = &rows[i].eps_sq * &rows[j].k_eps_sq - &rows[j].eps_sq * &rows[i].k_eps_sq;
            if det.is_zero() {
                continue;
            }
            let mut uv: Vec<(Scalar, Scalar)> = Vec::with_capacity(4);
            for n in 0..4 {
                let u = (&rows[i].t2[n] * &rows[j].k_eps_sq - &rows[j].t2[n] * &rows[i].k_eps_sq)
                    / &det;
                let v =
                    (&rows[i].eps_sq * &rows[j].t2[n] - &rows[j].eps_sq * &rows[i].t2[n]) / &det;
                uv.push((u, v));
            }
            solved = Some([uv[0].clone(), uv[1].clone(), uv[2].clone(), uv[3].clone()]);
            // Cross-check the model on every remaining row: the t^2 layer is
            // exactly a combination of the two forms.
            for (idx, row) in rows.iter().enumerate() {
                if idx == i || idx == j {
                    continue;
                }
                for (form, t2) in uv.iter().zip(&row.t2) {
                    let predicted = &form.0 * &row.eps_sq + &form.1 * &row.k_eps_sq;
                    debug_assert_eq!(&predicted, t2);
                }
            }
            break 'outer;
        }
    }
    let solved = solved.ok_or(Error::DegenerateDirectionSet)?;

    let ksq = int(k.norm_sq());
    let k4 = &ksq * &ksq;
    let k6 = &k4 * &ksq;
    let k8 = &k6 * &ksq;
    let published: [(Scalar, Scalar); 4] = [
        (int(-64) * &k4, int(16) * &ksq),
        (int(-224) * &k6, int(128) * &k4),
        (int(-640) * &k8, int(320) * &k6),
        (Scalar::zero(), int(256) * &k8),
    ];

    let coefficients = [0, 1, 2, 3].map(|n: usize| EpsCoefficient {
        computed_eps_sq: solved[n].0.clone(),
        computed_k_eps_sq: solved[n].1.clone(),
        published_eps_sq: published[n].0.clone(),
        published_k_eps_sq: published[n].1.clone(),
    });

    Ok(EpsExpansion {
        k,
        eps,
        t2_coefficients,
        coefficients,
    })
}
