//! Exact Minkowski-sum machinery on explicit point sets, plus the small 2D
//! exact helpers (convex hull, dual envelope minimum) used to validate the
//! intersection pipeline.

use polyapprox::geom::PointPolytope;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("pairwise product {0} exceeds the oracle size cap")]
    SizeCap(usize),
}

/// All pairwise sums a_i + b_j; consumers scan this set as exact ground
/// truth. Capped at 10^6 output points.
pub fn pairwise_minkowski_exact(
    a: &PointPolytope,
    b: &PointPolytope,
) -> Result<PointPolytope, OracleError> {
    let d = a.dim();
    let count = a.len() * b.len();
    if count > 1_000_000 {
        return Err(OracleError::SizeCap(count));
    }
    let mut coords = Vec::with_capacity(count * d);
    for i in 0..a.len() {
        let p = a.point(i);
        for j in 0..b.len() {
            let q = b.point(j);
            for k in 0..d {
                coords.push(p[k] + q[k]);
            }
        }
    }
    Ok(PointPolytope::new(d, coords).expect("pairwise sums are finite"))
}

/// 2D convex hull, counterclockwise (Andrew's monotone chain).
pub fn hull2d(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut pts: Vec<(f64, f64)> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| -> f64 {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Exact minimum over r in [-alpha, alpha] of the dual upper envelope
/// U(r) = max_p (p_x r - p_y) of a 2D point set. The minimum of a convex
/// piecewise-linear function sits at a breakpoint or an endpoint, so
/// evaluating all pair intersections is exact.
pub fn exact_envelope_min_2d(s: &PointPolytope, alpha: f64) -> (f64, f64) {
    assert_eq!(s.dim(), 2);
    let pts: Vec<(f64, f64)> = (0..s.len()).map(|i| (s.point(i)[0], s.point(i)[1])).collect();
    let eval = |r: f64| -> f64 {
        pts.iter()
            .map(|p| p.0 * r - p.1)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let mut best_r = -alpha;
    let mut best = eval(-alpha);
    let upd = |r: f64, best: &mut f64, best_r: &mut f64| {
        if r.abs() <= alpha {
            let v = pts
                .iter()
                .map(|p| p.0 * r - p.1)
                .fold(f64::NEG_INFINITY, f64::max);
            if v < *best {
                *best = v;
                *best_r = r;
            }
        }
    };
    {
        let v = eval(alpha);
        if v < best {
            best = v;
            best_r = alpha;
        }
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let dx = pts[i].0 - pts[j].0;
            if dx.abs() <= 1e-14 {
                continue;
            }
            let r = (pts[i].1 - pts[j].1) / dx;
            upd(r, &mut best, &mut best_r);
        }
    }
    (best_r, best)
}

/// Exact lower envelope L(r) = min_p (p_x r - p_y) at a given abscissa.
pub fn lower_envelope_at_2d(s: &PointPolytope, r: f64) -> f64 {
    (0..s.len())
        .map(|i| s.point(i)[0] * r - s.point(i)[1])
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_sum_of_squares() {
        let sq = PointPolytope::from_points(&[
            vec![-1.0, -1.0],
            vec![1.0, -1.0],
            vec![1.0, 1.0],
            vec![-1.0, 1.0],
        ])
        .unwrap();
        let sum = pairwise_minkowski_exact(&sq, &sq).unwrap();
        assert_eq!(sum.len(), 16);
        // corners of [-2,2]^2 present
        let has = |x: f64, y: f64| (0..sum.len()).any(|i| sum.point(i) == [x, y]);
        assert!(has(2.0, 2.0) && has(-2.0, 2.0) && has(2.0, -2.0) && has(-2.0, -2.0));
    }

    #[test]
    fn pairwise_sum_with_origin_is_identity() {
        let sq = PointPolytope::from_points(&[vec![0.5, 0.25], vec![1.0, 2.0]]).unwrap();
        let o = PointPolytope::from_points(&[vec![0.0, 0.0]]).unwrap();
        let sum = pairwise_minkowski_exact(&sq, &o).unwrap();
        assert_eq!(sum.coords(), sq.coords());
    }

    #[test]
    fn size_cap_enforced() {
        let big = PointPolytope::new(2, vec![0.0; 2 * 1001]).unwrap();
        let other = PointPolytope::new(2, vec![0.0; 2 * 1001]).unwrap();
        assert!(pairwise_minkowski_exact(&big, &other).is_err());
    }

    #[test]
    fn hull_of_square_plus_interior() {
        let h = hull2d(&[
            (0.0, 0.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (0.0, 1.0),
            (0.5, 0.5),
        ]);
        assert_eq!(h.len(), 4);
    }

    #[test]
    fn envelope_min_of_symmetric_pair() {
        // points (1, 1), (-1, 1): U(r) = max(r - 1, -r - 1), min at r = 0 -> -1
        let s = PointPolytope::from_points(&[vec![1.0, 1.0], vec![-1.0, 1.0]]).unwrap();
        let (r, v) = exact_envelope_min_2d(&s, 5.0);
        assert!(r.abs() < 1e-12);
        assert!((v + 1.0).abs() < 1e-12);
    }
}
