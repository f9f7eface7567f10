//! Approximate intersection detection between independently preprocessed
//! polytopes under affine maps, reduced to approximate membership of the
//! origin in A + (-B).
//!
//! The membership pipeline: combine the augmented sandwiching bodies, whiten
//! and scale into a canonical frame where the sum is sandwiched between
//! concentric balls, dispose of the trivial cases (origin inside the inner
//! ball or outside the outer ball), rotate the ball center onto the positive
//! last axis, and minimize the dual upper envelope
//! `U(r) = support((r, -1))` over the bounded slope box `[-alpha, alpha]^(d-1)`
//! with the noisy trisection search. The origin lies in the sum exactly when
//! the exact envelope minimum is nonnegative, so the verdict thresholds the
//! approximate minimum at `-theta * eps`.

use crate::error::{Error, Result};
use crate::fatten::fatten_transform;
use crate::geom::AffineMap;
use crate::linalg;
use crate::minimize::{minimize_nd, NoisyObjective};
use crate::sum::SumBody;
use crate::width_index::WidthIndex;

/// Verdict threshold: intersecting iff the approximate envelope minimum is
/// at least `-VERDICT_THETA * eps` in the canonical frame.
pub const VERDICT_THETA: f64 = 4.0;

/// Inner sandwich radius in the canonical frame. The scale is chosen so that
/// normalized widths (at least twice this) clear the verdict threshold with
/// the contract margin `eps * max-width`.
const FRAME_INNER_RADIUS: f64 = 4.0;

/// Safety factor absorbing the sampled (rather than proven) containment
/// certificates of sandwiching bodies.
const CERT_SLACK: f64 = 0.9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Intersecting,
    Disjoint,
}

/// Canonical frame of the membership reduction.
#[derive(Debug, Clone)]
pub struct CanonicalFrame {
    /// Full transform: original space -> canonical coordinates in which the
    /// query point sits at the origin.
    pub transform: AffineMap,
    /// Inner sandwich ball radius.
    pub r: f64,
    /// Outer/inner radius ratio.
    pub lambda: f64,
    /// Diameter of the outer ball (2 * lambda * r).
    pub delta: f64,
    /// Height of the ball center on the positive last axis.
    pub beta: f64,
    /// Half-extent of the dual search box.
    pub alpha: f64,
}

#[derive(Debug, Clone)]
pub struct ApproxAnswer {
    pub verdict: Verdict,
    /// Approximate envelope minimum, when the envelope stage ran.
    pub envelope_min: Option<f64>,
    /// Envelope evaluations performed (0 on trivial short-circuits).
    pub evaluations: u64,
    pub frame: Option<CanonicalFrame>,
    /// Minimizing dual abscissa, canonical frame.
    pub minimizer: Option<Vec<f64>>,
    /// Best-effort supporting direction at the minimizer, mapped back to the
    /// query space and normalized.
    pub support_direction: Option<Vec<f64>>,
}

/// eps-approximate intersection of `map_a(A)` and `map_b(B)`: answers
/// "intersecting" whenever the images intersect and "disjoint" whenever their
/// eps-expansions are disjoint; in between, either answer is acceptable.
pub fn approx_intersect(
    a: &WidthIndex,
    b: &WidthIndex,
    map_a: Option<&AffineMap>,
    map_b: Option<&AffineMap>,
    eps: f64,
) -> Result<ApproxAnswer> {
    let sum = SumBody::difference(a, b, map_a.cloned(), map_b.cloned())?;
    membership_origin_sum(&sum, eps)
}

/// eps-approximate membership of the origin in A + (-B).
pub fn membership_origin(
    a: &WidthIndex,
    b: &WidthIndex,
    map_a: Option<&AffineMap>,
    map_b: Option<&AffineMap>,
    eps: f64,
) -> Result<ApproxAnswer> {
    approx_intersect(a, b, map_a, map_b, eps)
}

/// eps-approximate intersection of an indexed body (or an indexed Minkowski
/// sum) with a Euclidean ball.
pub fn intersect_with_ball(
    body: &SumBody,
    center: &[f64],
    radius: f64,
    eps: f64,
) -> Result<ApproxAnswer> {
    if !(radius >= 0.0) || !radius.is_finite() {
        return Err(Error::InvalidParameter("ball radius must be >= 0".into()));
    }
    let mut sum = body.clone();
    sum.push_ball(center.to_vec(), radius, true)?;
    membership_origin_sum(&sum, eps)
}

/// Membership of the origin in the (never materialized) sum body.
pub fn membership_origin_sum(sum: &SumBody, eps: f64) -> Result<ApproxAnswer> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter("eps must be in (0, 1)".into()));
    }
    sum.check_calibration(eps)?;
    let d = sum.dim();

    // (1)-(2) combine the augmented bodies, whiten, and scale. After
    // whitening the combined zonotope contains the unit ball exactly and is
    // contained in a ball of radius sqrt(m); the certificate slack and the
    // carried lambda give true sandwich radii for the sum itself.
    let body = sum.combined_body()?;
    let white = fatten_transform(&body).map_err(|_| Error::DegenerateBody)?;
    let m = body.generator_count();
    let inner_white = CERT_SLACK; // unit ball, shrunk by the certificate slack
    let outer_white = body.lambda() * (m as f64).sqrt() / CERT_SLACK;
    let scale = FRAME_INNER_RADIUS / inner_white;
    let frame_map = AffineMap::uniform_scale(d, scale)?.compose(&white)?;

    let r = FRAME_INNER_RADIUS;
    let lambda = outer_white / inner_white;
    let delta = 2.0 * lambda * r;

    // (3) trivial cases on the origin's image.
    let o = frame_map.apply(&vec![0.0; d]);
    let dist = linalg::norm(&o);
    if dist <= r {
        return Ok(ApproxAnswer {
            verdict: Verdict::Intersecting,
            envelope_min: None,
            evaluations: 0,
            frame: Some(CanonicalFrame {
                transform: frame_map,
                r,
                lambda,
                delta,
                beta: dist,
                alpha: f64::NAN,
            }),
            minimizer: None,
            support_direction: None,
        });
    }
    if dist >= lambda * r {
        return Ok(ApproxAnswer {
            verdict: Verdict::Disjoint,
            envelope_min: None,
            evaluations: 0,
            frame: Some(CanonicalFrame {
                transform: frame_map,
                r,
                lambda,
                delta,
                beta: dist,
                alpha: f64::NAN,
            }),
            minimizer: None,
            support_direction: None,
        });
    }

    // (4) translate the origin's image to the origin and rotate the body
    // center onto the positive last axis.
    let center_dir: Vec<f64> = o.iter().map(|x| -x).collect(); // body center - origin image
    let q = linalg::householder_to_axis(&center_dir, d - 1, d)?;
    let rot = AffineMap::linear(q, d)?;
    let shift = AffineMap::translation_only(o.iter().map(|x| -x).collect())?;
    let canon = rot.compose(&shift.compose(&frame_map)?)?;
    let beta = dist;
    let alpha = delta / beta + 1.0;

    let frame = CanonicalFrame {
        transform: canon.clone(),
        r,
        lambda,
        delta,
        beta,
        alpha,
    };

    // (5) minimize the dual upper envelope over [-alpha, alpha]^(d-1).
    // Envelope slope per abscissa coordinate is bounded by the coordinate
    // bound Delta of the canonical frame.
    let baked = sum.bake(Some(&canon))?;
    let evaluator = move |rr: &[f64]| {
        let mut v = [0.0f64; 8];
        v[..rr.len()].copy_from_slice(rr);
        v[rr.len()] = -1.0;
        baked.support(&v[..rr.len() + 1])
    };
    let noise = sum.max_index_eps() * delta; // envelope evaluation error bound
    let obj = NoisyObjective::new(d - 1, noise, evaluator).with_slope_bound(delta);
    let eps_term = eps / (8.0 + delta);
    let res = minimize_nd(&obj, -alpha, alpha, eps_term)?;

    // (6) threshold the approximate minimum.
    let verdict = if res.value >= -VERDICT_THETA * eps {
        Verdict::Intersecting
    } else {
        Verdict::Disjoint
    };

    // best-effort supporting direction back in query space
    let mut v = res.argmin.clone();
    v.push(-1.0);
    let support_direction = {
        let w = canon.pullback_direction(&v);
        linalg::normalize(&w)
    };

    Ok(ApproxAnswer {
        verdict,
        envelope_min: Some(res.value),
        evaluations: res.evaluations,
        frame: Some(frame),
        minimizer: Some(res.argmin),
        support_direction,
    })
}
