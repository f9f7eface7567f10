//! Min-norm point in a convex hull (Wolfe's algorithm), used as the exact
//! point-to-hull distance oracle in low dimension.

use polyapprox::geom::PointPolytope;
use polyapprox::linalg;

/// Nearest point of conv(S) to the origin. Terminates when the Wolfe
/// optimality gap drops below `tol` times the squared scale.
pub fn min_norm_point(s: &PointPolytope, tol: f64) -> Vec<f64> {
    let d = s.dim();
    let n = s.len();
    let scale2 = (0..n)
        .map(|i| linalg::dot(s.point(i), s.point(i)))
        .fold(0.0f64, f64::max)
        .max(1e-300);

    // start from the point of smallest norm
    let mut start = 0usize;
    let mut best = f64::INFINITY;
    for i in 0..n {
        let q = linalg::dot(s.point(i), s.point(i));
        if q < best {
            best = q;
            start = i;
        }
    }
    let mut corral: Vec<usize> = vec![start];
    let mut weights: Vec<f64> = vec![1.0];

    for _outer in 0..200 {
        // current iterate
        let mut x = vec![0.0; d];
        for (k, &i) in corral.iter().enumerate() {
            for j in 0..d {
                x[j] += weights[k] * s.point(i)[j];
            }
        }
        // support in direction -x over the whole set
        let mut entering = 0usize;
        let mut lowest = f64::INFINITY;
        for i in 0..n {
            let dp = linalg::dot(s.point(i), &x);
            if dp < lowest {
                lowest = dp;
                entering = i;
            }
        }
        let gap = linalg::dot(&x, &x) - lowest;
        if gap <= tol * scale2 {
            return x;
        }
        if !corral.contains(&entering) {
            corral.push(entering);
            weights.push(0.0);
        }
        // inner loop: pull the iterate to the affine minimizer, dropping
        // points whose weights would go negative
        for _inner in 0..200 {
            let alpha = match affine_min_norm(s, &corral) {
                Some(a) => a,
                None => break,
            };
            if alpha.iter().all(|&a| a > 1e-12) {
                weights = alpha;
                break;
            }
            // largest step toward alpha keeping weights nonnegative
            let mut theta = 1.0f64;
            for k in 0..corral.len() {
                if alpha[k] < 1e-12 {
                    let denom = weights[k] - alpha[k];
                    if denom > 1e-300 {
                        theta = theta.min(weights[k] / denom);
                    }
                }
            }
            for k in 0..corral.len() {
                weights[k] += theta * (alpha[k] - weights[k]);
            }
            // drop zeros
            let mut keep_c = Vec::new();
            let mut keep_w = Vec::new();
            for k in 0..corral.len() {
                if weights[k] > 1e-12 {
                    keep_c.push(corral[k]);
                    keep_w.push(weights[k]);
                }
            }
            if keep_c.is_empty() {
                keep_c.push(corral[0]);
                keep_w.push(1.0);
            }
            corral = keep_c;
            weights = keep_w;
        }
    }
    // best effort: return the current combination
    let mut x = vec![0.0; d];
    for (k, &i) in corral.iter().enumerate() {
        for j in 0..d {
            x[j] += weights[k] * s.point(i)[j];
        }
    }
    x
}

/// Minimizer of ||sum a_k p_k|| over the affine hull (sum a_k = 1),
/// via the KKT system [G 1; 1^T 0].
fn affine_min_norm(s: &PointPolytope, corral: &[usize]) -> Option<Vec<f64>> {
    let k = corral.len();
    let m = k + 1;
    let mut sys = vec![0.0; m * m];
    for a in 0..k {
        for b in 0..k {
            sys[a * m + b] = linalg::dot(s.point(corral[a]), s.point(corral[b]));
        }
        sys[a * m + k] = 1.0;
        sys[k * m + a] = 1.0;
    }
    // slight ridge keeps degenerate corrals solvable
    for a in 0..k {
        sys[a * m + a] += 1e-14;
    }
    let inv = linalg::inverse(&sys, m).ok()?;
    let mut rhs = vec![0.0; m];
    rhs[k] = 1.0;
    let sol = linalg::mat_vec(&inv, &rhs, m);
    Some(sol[..k].to_vec())
}

/// Euclidean distance from `w` to conv(S).
pub fn distance_to_hull(s: &PointPolytope, w: &[f64]) -> f64 {
    let d = s.dim();
    let mut shifted = Vec::with_capacity(s.len() * d);
    for i in 0..s.len() {
        let p = s.point(i);
        for j in 0..d {
            shifted.push(p[j] - w[j]);
        }
    }
    let sp = PointPolytope::new(d, shifted).expect("shifted copy");
    let x = min_norm_point(&sp, 1e-14);
    linalg::norm(&x)
}
