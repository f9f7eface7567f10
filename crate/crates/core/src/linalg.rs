//! Dense linear algebra for small runtime dimensions (d <= 8).
//!
//! Matrices are row-major `Vec<f64>` of length d*d. Everything here is
//! deterministic; no pivot randomization.

use crate::error::{Error, Result};

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut s = 0.0;
    for i in 0..a.len() {
        s += a[i] * b[i];
    }
    s
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn normalize(a: &[f64]) -> Option<Vec<f64>> {
    let n = norm(a);
    if n > 0.0 && n.is_finite() {
        Some(scale(a, 1.0 / n))
    } else {
        None
    }
}

/// y = M x, row-major d x d.
pub fn mat_vec(m: &[f64], x: &[f64], d: usize) -> Vec<f64> {
    let mut y = vec![0.0; d];
    for i in 0..d {
        y[i] = dot(&m[i * d..(i + 1) * d], x);
    }
    y
}

/// y = M^T x.
pub fn mat_t_vec(m: &[f64], x: &[f64], d: usize) -> Vec<f64> {
    let mut y = vec![0.0; d];
    for i in 0..d {
        let xi = x[i];
        for j in 0..d {
            y[j] += m[i * d + j] * xi;
        }
    }
    y
}

/// C = A B.
pub fn mat_mul(a: &[f64], b: &[f64], d: usize) -> Vec<f64> {
    let mut c = vec![0.0; d * d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i * d + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..d {
                c[i * d + j] += aik * b[k * d + j];
            }
        }
    }
    c
}

pub fn identity(d: usize) -> Vec<f64> {
    let mut m = vec![0.0; d * d];
    for i in 0..d {
        m[i * d + i] = 1.0;
    }
    m
}

pub fn transpose(m: &[f64], d: usize) -> Vec<f64> {
    let mut t = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..d {
            t[j * d + i] = m[i * d + j];
        }
    }
    t
}

pub fn max_abs(m: &[f64]) -> f64 {
    m.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
}

/// Determinant by LU with partial pivoting.
pub fn det(m: &[f64], d: usize) -> f64 {
    let mut a = m.to_vec();
    let mut sign = 1.0;
    for col in 0..d {
        let mut piv = col;
        for r in col + 1..d {
            if a[r * d + col].abs() > a[piv * d + col].abs() {
                piv = r;
            }
        }
        if a[piv * d + col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            for j in 0..d {
                a.swap(col * d + j, piv * d + j);
            }
            sign = -sign;
        }
        let p = a[col * d + col];
        for r in col + 1..d {
            let f = a[r * d + col] / p;
            for j in col..d {
                a[r * d + j] -= f * a[col * d + j];
            }
        }
    }
    let mut prod = sign;
    for i in 0..d {
        prod *= a[i * d + i];
    }
    prod
}

/// Inverse by Gauss-Jordan with partial pivoting.
pub fn inverse(m: &[f64], d: usize) -> Result<Vec<f64>> {
    let mut a = m.to_vec();
    let mut inv = identity(d);
    for col in 0..d {
        let mut piv = col;
        for r in col + 1..d {
            if a[r * d + col].abs() > a[piv * d + col].abs() {
                piv = r;
            }
        }
        let p = a[piv * d + col];
        if p.abs() <= f64::MIN_POSITIVE || !p.is_finite() {
            return Err(Error::SingularMap);
        }
        if piv != col {
            for j in 0..d {
                a.swap(col * d + j, piv * d + j);
                inv.swap(col * d + j, piv * d + j);
            }
        }
        let p = a[col * d + col];
        for j in 0..d {
            a[col * d + j] /= p;
            inv[col * d + j] /= p;
        }
        for r in 0..d {
            if r == col {
                continue;
            }
            let f = a[r * d + col];
            if f == 0.0 {
                continue;
            }
            for j in 0..d {
                a[r * d + j] -= f * a[col * d + j];
                inv[r * d + j] -= f * inv[col * d + j];
            }
        }
    }
    Ok(inv)
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns (eigenvalues, eigenvectors as columns of V, row-major).
pub fn jacobi_eigh(m: &[f64], d: usize) -> (Vec<f64>, Vec<f64>) {
    let mut a = m.to_vec();
    let mut v = identity(d);
    for _sweep in 0..64 {
        let mut off = 0.0;
        for i in 0..d {
            for j in i + 1..d {
                off += a[i * d + j] * a[i * d + j];
            }
        }
        if off.sqrt() <= 1e-14 * (1.0 + max_abs(&a)) {
            break;
        }
        for p in 0..d {
            for q in p + 1..d {
                let apq = a[p * d + q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = a[p * d + p];
                let aqq = a[q * d + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..d {
                    let akp = a[k * d + p];
                    let akq = a[k * d + q];
                    a[k * d + p] = c * akp - s * akq;
                    a[k * d + q] = s * akp + c * akq;
                }
                for k in 0..d {
                    let apk = a[p * d + k];
                    let aqk = a[q * d + k];
                    a[p * d + k] = c * apk - s * aqk;
                    a[q * d + k] = s * apk + c * aqk;
                }
                for k in 0..d {
                    let vkp = v[k * d + p];
                    let vkq = v[k * d + q];
                    v[k * d + p] = c * vkp - s * vkq;
                    v[k * d + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let eigvals = (0..d).map(|i| a[i * d + i]).collect();
    (eigvals, v)
}

/// Symmetric inverse square root (G G^T)^{-1/2} given the SPD matrix itself.
pub fn inv_sqrt_spd(m: &[f64], d: usize) -> Result<Vec<f64>> {
    let (vals, v) = jacobi_eigh(m, d);
    let vmax = vals.iter().cloned().fold(0.0f64, f64::max);
    let mut w = vec![0.0; d * d];
    for k in 0..d {
        if vals[k] <= 1e-24 * vmax.max(1e-300) || !vals[k].is_finite() {
            return Err(Error::DegenerateBody);
        }
        let s = 1.0 / vals[k].sqrt();
        // W += s * v_k v_k^T
        for i in 0..d {
            let vik = v[i * d + k];
            for j in 0..d {
                w[i * d + j] += s * vik * v[j * d + k];
            }
        }
    }
    Ok(w)
}

/// Orthogonal matrix Q with Q u = ||u|| e_axis, built from a Householder
/// reflection. Deterministic and numerically stable for any nonzero u.
pub fn householder_to_axis(u: &[f64], axis: usize, d: usize) -> Result<Vec<f64>> {
    let n = norm(u);
    if n <= 0.0 || !n.is_finite() {
        return Err(Error::InvalidDirection);
    }
    let unit: Vec<f64> = scale(u, 1.0 / n);
    // w = unit - e_axis; Q = H = I - 2 w w^T / (w.w) reflects unit onto e_axis.
    let mut w = unit.clone();
    w[axis] -= 1.0;
    let ww = dot(&w, &w);
    if ww <= 1e-30 {
        return Ok(identity(d));
    }
    let mut q = identity(d);
    for i in 0..d {
        for j in 0..d {
            q[i * d + j] -= 2.0 * w[i] * w[j] / ww;
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let d = 3;
        let m = vec![2.0, 1.0, 0.0, 0.5, 3.0, -1.0, 0.0, 0.25, 1.5];
        let inv = inverse(&m, d).unwrap();
        let id = mat_mul(&m, &inv, d);
        for i in 0..d {
            for j in 0..d {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((id[i * d + j] - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn det_of_triangular() {
        let m = vec![2.0, 5.0, 0.0, 3.0];
        assert!((det(&m, 2) - 6.0).abs() < 1e-12);
    }

    #[test]
    fn jacobi_recovers_diagonal() {
        let m = vec![4.0, 1.0, 1.0, 3.0];
        let (vals, v) = jacobi_eigh(&m, 2);
        // reconstruct V diag(vals) V^T
        let mut rec = [0.0; 4];
        for k in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    rec[i * 2 + j] += vals[k] * v[i * 2 + k] * v[j * 2 + k];
                }
            }
        }
        for i in 0..4 {
            assert!((rec[i] - m[i]).abs() < 1e-10);
        }
    }

    #[test]
    fn inv_sqrt_whitens() {
        // G G^T for generators (3,0),(0,0.5)
        let m = vec![9.0, 0.0, 0.0, 0.25];
        let w = inv_sqrt_spd(&m, 2).unwrap();
        // W (GG^T) W = I
        let t = mat_mul(&w, &mat_mul(&m, &w, 2), 2);
        assert!((t[0] - 1.0).abs() < 1e-10 && (t[3] - 1.0).abs() < 1e-10);
        assert!(t[1].abs() < 1e-10 && t[2].abs() < 1e-10);
    }

    #[test]
    fn householder_maps_to_axis() {
        let u = vec![1.0, 2.0, -2.0];
        let q = householder_to_axis(&u, 2, 3).unwrap();
        let y = mat_vec(&q, &u, 3);
        assert!(y[0].abs() < 1e-12 && y[1].abs() < 1e-12);
        assert!((y[2] - 3.0).abs() < 1e-12);
        // orthogonality
        let qt = transpose(&q, 3);
        let id = mat_mul(&q, &qt, 3);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((id[i * 3 + j] - want).abs() < 1e-12);
            }
        }
    }
}
