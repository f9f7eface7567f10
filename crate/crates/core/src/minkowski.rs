//! Approximate Minkowski sums by the Dudley and Bronshteyn-Ivanov
//! constructions, representation conversion through the polar, and
//! approximate width via K + (-K).
//!
//! The sum is fattened through the combined sandwiching bodies and scaled
//! into the unit ball; a sphere of radius 2*sqrt(d) is covered by a net of
//! angular resolution `c * sqrt(eps)`; each net point is pushed to the
//! boundary by binary search on ball-intersection queries; the supporting
//! halfspace at the contact (Dudley) or the contact point itself
//! (Bronshteyn-Ivanov) is emitted, mapped back through the frame.

use crate::error::{Error, Result};
use crate::exec;
use crate::fatten::fatten_transform;
use crate::geom::{AffineMap, HalfspacePolytope, Hyperplane, PointPolytope};
use crate::intersect::{intersect_with_ball, Verdict};
use crate::linalg;
use crate::linprog::{chebyshev_center, halfspace_support, LpStatus};
use crate::net::DirectionNet;
use crate::sum::SumBody;
use crate::width_index::{BuildParams, WidthIndex, CALIBRATION};

/// Sphere net constant: angular resolution `DUDLEY_CONSTANT * sqrt(eps)`.
pub const DUDLEY_CONSTANT: f64 = 0.5;

/// Binary search termination width, in units of eps (fattened frame).
const CONTACT_WIDTH: f64 = 0.5;

/// Net of points on the sphere of radius 2*sqrt(d) in the fattened frame,
/// built from the same cube-facet grid as the width indexes.
#[derive(Debug, Clone)]
pub struct SphereNet {
    net: DirectionNet,
    radius: f64,
}

impl SphereNet {
    pub fn new(dim: usize, eps: f64, constant: f64) -> Result<SphereNet> {
        let net = DirectionNet::new(dim, constant * eps.sqrt())?;
        Ok(SphereNet {
            net,
            radius: 2.0 * (dim as f64).sqrt(),
        })
    }

    pub fn len(&self) -> usize {
        self.net.len()
    }

    pub fn is_empty(&self) -> bool {
        self.net.is_empty()
    }

    /// Angular covering resolution of the underlying direction net.
    pub fn resolution(&self) -> f64 {
        self.net.resolution()
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn point(&self, i: usize) -> Vec<f64> {
        linalg::scale(self.net.direction(i), self.radius)
    }
}

/// Boundary sample in the fattened frame: the net point `w`, its approximate
/// nearest boundary point `contact`, the outward normal estimate, and the
/// first-contact radius found by the search.
#[derive(Debug, Clone)]
pub struct BoundarySample {
    pub w: Vec<f64>,
    pub contact: Vec<f64>,
    pub normal: Vec<f64>,
    pub rho: f64,
    pub probes: u64,
}

/// Canonical Dudley frame: maps the sum into the unit ball.
pub struct DudleyFrame<'a> {
    pub map: AffineMap,
    pub inverse: AffineMap,
    /// Inner ball radius of the normalized sum (fatness certificate).
    pub gamma: f64,
    /// The sum with the frame composed onto every term.
    pub sum_fat: SumBody<'a>,
}

/// Fatten and normalize the sum so it lies in the unit ball around the
/// origin.
pub fn dudley_frame<'a>(sum: &SumBody<'a>) -> Result<DudleyFrame<'a>> {
    let body = sum.combined_body()?;
    let white = fatten_transform(&body).map_err(|_| Error::DegenerateBody)?;
    let m = body.generator_count() as f64;
    // post-whitening sandwich of the certified sum: balls of radii
    // 0.9 and lambda*sqrt(m)/0.9 around the body center
    let outer = body.lambda() * m.sqrt() / 0.9;
    let inner = 0.9;
    let map = AffineMap::uniform_scale(sum.dim(), 1.0 / outer)?.compose(&white)?;
    let inverse = map.inverse()?;
    let sum_fat = sum.with_extra_map(&map)?;
    Ok(DudleyFrame {
        map,
        inverse,
        gamma: inner / outer,
        sum_fat,
    })
}

/// Approximate nearest boundary point of the sum below `w` (fattened frame):
/// binary search on the radius of a ball centered at `w`, each probe an
/// eps-approximate ball-intersection query. The search bracket comes from the
/// sandwich balls, so the first and last radii are certain.
pub fn nearest_boundary_sample(
    frame: &DudleyFrame,
    w: &[f64],
    eps: f64,
) -> Result<BoundarySample> {
    let wn = linalg::norm(w);
    let mut lo = (wn - 1.0).max(0.0);
    let mut hi = wn + 1.0; // certainly intersecting: the ball covers the body
    let analytic_hi = wn - frame.gamma * 0.5; // certainly intersecting as well, tighter
    if analytic_hi > lo {
        hi = analytic_hi.min(hi);
    }
    let mut probes = 0u64;
    let mut last_hit: Option<crate::intersect::ApproxAnswer> = None;
    while hi - lo >= CONTACT_WIDTH * eps {
        let mid = 0.5 * (lo + hi);
        let ans = intersect_with_ball(&frame.sum_fat, w, mid, eps)?;
        probes += 1;
        match ans.verdict {
            Verdict::Intersecting => {
                hi = mid;
                last_hit = Some(ans);
            }
            Verdict::Disjoint => {
                lo = mid;
            }
        }
        if probes > 200 {
            return Err(Error::Internal(
                "ball binary search failed to converge".into(),
            ));
        }
    }
    let rho = hi;
    // Normal estimate: the supporting direction certified by the deepest
    // intersecting probe; the contact point is w pulled that distance toward
    // the body. Radial fallback keeps the sample deterministic when the
    // probe did not reach the envelope stage.
    let radial = linalg::scale(w, 1.0 / wn);
    let normal = match &last_hit {
        Some(ans) => match &ans.support_direction {
            Some(u) if linalg::dot(u, &radial) > 0.2 => u.clone(),
            _ => radial.clone(),
        },
        None => {
            // no probe returned intersecting; certify the top of the bracket
            let ans = intersect_with_ball(&frame.sum_fat, w, hi, eps)?;
            probes += 1;
            if ans.verdict != Verdict::Intersecting {
                return Err(Error::Internal(
                    "ball search bracket lost the body (miscalibration)".into(),
                ));
            }
            match &ans.support_direction {
                Some(u) if linalg::dot(u, &radial) > 0.2 => u.clone(),
                _ => radial.clone(),
            }
        }
    };
    let contact: Vec<f64> = (0..w.len()).map(|i| w[i] - rho * normal[i]).collect();
    Ok(BoundarySample {
        w: w.to_vec(),
        contact,
        normal,
        rho,
        probes,
    })
}

fn check_sum_eps(sum: &SumBody, eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter("eps must be in (0, 1)".into()));
    }
    sum.check_calibration(eps)
}

/// All boundary samples of the sum over the sphere net.
pub fn boundary_samples(frame: &DudleyFrame, net: &SphereNet, eps: f64) -> Result<Vec<BoundarySample>> {
    let res: Vec<Result<BoundarySample>> = exec::map_range(net.len(), |i| {
        nearest_boundary_sample(frame, &net.point(i), eps)
    });
    res.into_iter().collect()
}

/// Dudley outer approximation of the Minkowski sum of two indexed polytopes.
pub fn dudley(a: &WidthIndex, b: &WidthIndex, eps: f64) -> Result<HalfspacePolytope> {
    let mut sum = SumBody::new(a.dim());
    sum.push_index(a, None, false)?;
    sum.push_index(b, None, false)?;
    dudley_sum(&sum, eps)
}

/// Dudley construction over an arbitrary sum body.
pub fn dudley_sum(sum: &SumBody, eps: f64) -> Result<HalfspacePolytope> {
    check_sum_eps(sum, eps)?;
    let d = sum.dim();
    let frame = dudley_frame(sum)?;
    let net = SphereNet::new(d, eps, DUDLEY_CONSTANT)?;
    let samples = boundary_samples(&frame, &net, eps)?;
    let eps_idx = sum.max_index_eps();
    let mut halfspaces = Vec::with_capacity(samples.len());
    let mut seen = std::collections::HashSet::new();
    for s in &samples {
        // supporting halfspace along the sample normal, pushed outward by the
        // one-sided kernel error so the exact sum stays inside
        let h = frame.sum_fat.support(&s.normal)?;
        let wv = frame.sum_fat.width(&s.normal)?;
        let offset_fat = h + eps_idx * wv * linalg::norm(&s.normal);
        // map {u.x <= c} in the fattened frame back to the original space
        let normal_orig = frame.map.pullback_direction(&s.normal);
        let offset_orig = offset_fat - linalg::dot(&s.normal, frame.map.translation());
        let nn = linalg::norm(&normal_orig);
        if nn <= 0.0 {
            continue;
        }
        let unit: Vec<f64> = linalg::scale(&normal_orig, 1.0 / nn);
        let offset = offset_orig / nn;
        let key: Vec<u64> = unit
            .iter()
            .map(|x| x.to_bits())
            .chain(std::iter::once(offset.to_bits()))
            .collect();
        if seen.insert(key) {
            halfspaces.push(Hyperplane {
                normal: unit,
                offset,
            });
        }
    }
    HalfspacePolytope::new(d, halfspaces)
}

/// Bronshteyn-Ivanov inner approximation: the convex hull of the boundary
/// samples, in point representation. With `outer` set, samples are pushed
/// outward along their normals to convert to an outer approximation.
pub fn bronshteyn_ivanov(
    a: &WidthIndex,
    b: &WidthIndex,
    eps: f64,
    outer: bool,
) -> Result<PointPolytope> {
    let mut sum = SumBody::new(a.dim());
    sum.push_index(a, None, false)?;
    sum.push_index(b, None, false)?;
    bronshteyn_ivanov_sum(&sum, eps, outer)
}

pub fn bronshteyn_ivanov_sum(sum: &SumBody, eps: f64, outer: bool) -> Result<PointPolytope> {
    check_sum_eps(sum, eps)?;
    let d = sum.dim();
    let frame = dudley_frame(sum)?;
    let net = SphereNet::new(d, eps, DUDLEY_CONSTANT)?;
    let samples = boundary_samples(&frame, &net, eps)?;
    let shift = if outer { 2.0 * eps } else { 0.0 };
    let mut coords = Vec::with_capacity(samples.len() * d);
    for s in &samples {
        let fat: Vec<f64> = (0..d).map(|i| s.contact[i] + shift * s.normal[i]).collect();
        coords.extend_from_slice(&frame.inverse.apply(&fat));
    }
    PointPolytope::new(d, coords)
}

/// Either polytope representation, for conversion.
#[derive(Debug, Clone)]
pub enum Representation {
    Points(PointPolytope),
    Halfspaces(HalfspacePolytope),
}

/// eps-approximate conversion between the point and halfspace
/// representations. Point inputs go through the Dudley construction
/// directly; halfspace inputs are centered on their Chebyshev center, passed
/// to the polar, approximated there, and mapped back.
pub fn convert_representation(rep: &Representation, eps: f64) -> Result<Representation> {
    match rep {
        Representation::Points(p) => {
            let idx = WidthIndex::build_with(p, &BuildParams::new(eps / CALIBRATION))?;
            let mut sum = SumBody::new(p.dim());
            sum.push_index(&idx, None, false)?;
            Ok(Representation::Halfspaces(dudley_sum(&sum, eps)?))
        }
        Representation::Halfspaces(h) => {
            let d = h.dim;
            if h.halfspaces.is_empty() {
                return Err(Error::Unbounded);
            }
            let normals: Vec<Vec<f64>> = h.halfspaces.iter().map(|p| p.normal.clone()).collect();
            let offsets: Vec<f64> = h.halfspaces.iter().map(|p| p.offset).collect();
            // boundedness probes along the coordinate axes
            for i in 0..d {
                for sgn in [1.0, -1.0] {
                    let mut v = vec![0.0; d];
                    v[i] = sgn;
                    match halfspace_support(&normals, &offsets, &v)? {
                        LpStatus::Optimal { .. } => {}
                        LpStatus::Unbounded => return Err(Error::Unbounded),
                        LpStatus::Infeasible => return Err(Error::Infeasible),
                    }
                }
            }
            let (center, radius) = chebyshev_center(&normals, &offsets)?;
            // translate the center to the origin and scale so the inscribed
            // ball has radius >= 1, making the polar well-conditioned
            let mut polar_pts = Vec::with_capacity(normals.len() * d);
            for j in 0..normals.len() {
                let nn = linalg::norm(&normals[j]);
                let b = (offsets[j] - linalg::dot(&normals[j], &center)) / (radius * nn);
                if b <= 0.0 {
                    return Err(Error::Infeasible);
                }
                polar_pts.extend_from_slice(&linalg::scale(&normals[j], 1.0 / (nn * b)));
            }
            let polar = PointPolytope::new(d, polar_pts)?;
            let idx = WidthIndex::build_with(&polar, &BuildParams::new(eps / CALIBRATION))?;
            let mut sum = SumBody::new(d);
            sum.push_index(&idx, None, false)?;
            let polar_approx = dudley_sum(&sum, eps)?;
            // polar back: each halfspace {a.y <= c} of the polar maps to the
            // point a/c of the primal (then unscale and translate back)
            let mut coords = Vec::with_capacity(polar_approx.halfspaces.len() * d);
            for hp in &polar_approx.halfspaces {
                if hp.offset <= 0.0 {
                    return Err(Error::Internal("polar approximation lost the origin".into()));
                }
                let p = linalg::scale(&hp.normal, radius / hp.offset);
                coords.extend_from_slice(&linalg::add(&p, &center));
            }
            Ok(Representation::Points(PointPolytope::new(d, coords)?))
        }
    }
}

/// Approximate width estimate.
#[derive(Debug, Clone)]
pub struct WidthEstimate {
    pub width: f64,
    pub direction: Vec<f64>,
    pub facets: usize,
}

/// eps-approximate width of a point set: Dudley approximation of K + (-K),
/// then the closest bounding hyperplane to the origin.
pub fn approx_width(s: &PointPolytope, eps: f64) -> Result<WidthEstimate> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter("eps must be in (0, 1)".into()));
    }
    let idx = WidthIndex::build_with(s, &BuildParams::new(eps / CALIBRATION))?;
    approx_width_indexed(&idx, eps)
}

/// Width from a prebuilt index (must be calibrated at eps / CALIBRATION).
pub fn approx_width_indexed(idx: &WidthIndex, eps: f64) -> Result<WidthEstimate> {
    let d = idx.dim();
    let mut sum = SumBody::new(d);
    sum.push_index(idx, None, false)?;
    sum.push_index(idx, None, true)?;
    let h = dudley_sum(&sum, eps)?;
    let mut best = f64::INFINITY;
    let mut dir = vec![0.0; d];
    for hp in &h.halfspaces {
        // normals are unit; the facet distance from the origin is the offset
        let dist = hp.offset;
        if dist < best {
            best = dist;
            dir = hp.normal.clone();
        }
    }
    if !best.is_finite() {
        return Err(Error::DegenerateBody);
    }
    Ok(WidthEstimate {
        width: best,
        direction: dir,
        facets: h.len(),
    })
}
