//! Dense two-phase simplex for small-row linear programs in standard form:
//! minimize c.x subject to E x = f, x >= 0.
//!
//! Row counts here are tiny (at most d + 2); column counts can be large
//! (one per input point or halfspace). Pivoting scans columns through a
//! caller-supplied permutation with Bland's rule, so a seeded shuffle gives
//! randomized pivoting that still terminates.

use crate::error::{Error, Result};

/// Scalar abstraction so the same tableau code runs on f64 and on exact
/// rationals (implemented by the oracle crate).
pub trait LpNum: Clone + PartialOrd {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn abs(&self) -> Self;
    /// Comparison threshold; exact types return zero.
    fn tol() -> Self;
}

impl LpNum for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn tol() -> Self {
        1e-9
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpStatus<T> {
    Optimal { objective: T, solution: Vec<T> },
    Infeasible,
    Unbounded,
}

/// Standard-form LP. `rows[i]` has `cols` entries; `rhs` must be made
/// nonnegative by the caller or is fixed up internally by row negation.
pub struct StandardLp<T> {
    pub cols: usize,
    pub rows: Vec<Vec<T>>,
    pub rhs: Vec<T>,
    pub objective: Vec<T>,
}

pub fn solve_lp<T: LpNum>(lp: &StandardLp<T>, order: Option<&[usize]>) -> Result<LpStatus<T>> {
    let m = lp.rows.len();
    let n = lp.cols;
    if lp.rhs.len() != m || lp.objective.len() != n || lp.rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidParameter("inconsistent LP shape".into()));
    }
    // tableau columns: n structural + m artificial + 1 rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<T>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row: Vec<T> = Vec::with_capacity(width);
        let flip = lp.rhs[i] < T::zero();
        for j in 0..n {
            let v = lp.rows[i][j].clone();
            row.push(if flip { v.neg() } else { v });
        }
        for k in 0..m {
            row.push(if k == i { T::one() } else { T::zero() });
        }
        row.push(if flip { lp.rhs[i].neg() } else { lp.rhs[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    let scan: Vec<usize> = match order {
        Some(o) => o.to_vec(),
        None => (0..n).collect(),
    };

    // phase 1: minimize the sum of artificials
    let mut cost1: Vec<T> = vec![T::zero(); width];
    for j in n..n + m {
        cost1[j] = T::one();
    }
    let obj1 = run_simplex(&mut t, &mut basis, &cost1, &scan, n + m)?;
    let tol_scale = {
        let mut s = T::one();
        for r in &t {
            let a = r[width - 1].abs();
            if a > s {
                s = a;
            }
        }
        s
    };
    if obj1 > T::tol().mul(&tol_scale) {
        return Ok(LpStatus::Infeasible);
    }
    // drive any artificial still in the basis out or zero its row
    for i in 0..m {
        if basis[i] >= n {
            let mut found = None;
            for &j in &scan {
                if t[i][j].abs() > T::tol() {
                    found = Some(j);
                    break;
                }
            }
            if let Some(j) = found {
                pivot(&mut t, &mut basis, i, j);
            }
        }
    }

    // phase 2 on the real objective; artificial columns are barred
    let mut cost2: Vec<T> = vec![T::zero(); width];
    cost2[..n].clone_from_slice(&lp.objective);
    match run_simplex(&mut t, &mut basis, &cost2, &scan, n) {
        Err(Error::Unbounded) => return Ok(LpStatus::Unbounded),
        Err(e) => return Err(e),
        Ok(_) => {}
    }

    let mut x = vec![T::zero(); n];
    let width = n + m + 1;
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = t[i][width - 1].clone();
        }
    }
    let mut obj = T::zero();
    for j in 0..n {
        obj = obj.add(&lp.objective[j].mul(&x[j]));
    }
    Ok(LpStatus::Optimal {
        objective: obj,
        solution: x,
    })
}

/// Bland's rule through the scan order; returns the objective value.
fn run_simplex<T: LpNum>(
    t: &mut [Vec<T>],
    basis: &mut [usize],
    cost: &[T],
    scan: &[usize],
    allowed: usize,
) -> Result<T> {
    let m = t.len();
    let width = t[0].len();
    let rhs_col = width - 1;
    let max_iters = 200 + 50 * (m + width);
    for _ in 0..max_iters {
        // reduced costs via the basic cost vector
        let mut y: Vec<T> = vec![T::zero(); m];
        for i in 0..m {
            y[i] = cost[basis[i]].clone();
        }
        let mut entering = None;
        for &j in scan.iter().filter(|&&j| j < allowed) {
            if basis.contains(&j) {
                continue;
            }
            let mut red = cost[j].clone();
            for i in 0..m {
                red = red.sub(&y[i].mul(&t[i][j]));
            }
            if red < T::tol().neg() {
                entering = Some(j);
                break;
            }
        }
        let j = match entering {
            None => {
                let mut obj = T::zero();
                for i in 0..m {
                    obj = obj.add(&cost[basis[i]].mul(&t[i][rhs_col]));
                }
                return Ok(obj);
            }
            Some(j) => j,
        };
        // ratio test; lowest basis label breaks ties (Bland)
        let mut leave: Option<(usize, T)> = None;
        for i in 0..m {
            if t[i][j] > T::tol() {
                let ratio = t[i][rhs_col].div(&t[i][j]);
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && basis[i] < basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
        }
        let (row, _) = leave.ok_or(Error::Unbounded)?;
        pivot(t, basis, row, j);
    }
    Err(Error::Internal("simplex iteration limit".into()))
}

fn pivot<T: LpNum>(t: &mut [Vec<T>], basis: &mut [usize], row: usize, col: usize) {
    let width = t[0].len();
    let p = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v = v.div(&p);
    }
    for i in 0..t.len() {
        if i == row {
            continue;
        }
        let f = t[i][col].clone();
        if f.abs() <= T::zero() {
            continue;
        }
        for j in 0..width {
            let delta = f.mul(&t[row][j]);
            t[i][j] = t[i][j].sub(&delta);
        }
    }
    basis[row] = col;
}

/// Support value of a halfspace polytope along `v` by LP duality:
/// `h(v) = min { b.mu : sum mu_j u_j = v, mu >= 0 }`. Returns `Unbounded`
/// when the polytope is unbounded along `v` and `Infeasible` when empty.
pub fn halfspace_support(
    normals: &[Vec<f64>],
    offsets: &[f64],
    v: &[f64],
) -> Result<LpStatus<f64>> {
    let d = v.len();
    let n = normals.len();
    let mut rows = vec![vec![0.0; n]; d];
    for (j, u) in normals.iter().enumerate() {
        for i in 0..d {
            rows[i][j] = u[i];
        }
    }
    let lp = StandardLp {
        cols: n,
        rows,
        rhs: v.to_vec(),
        objective: offsets.to_vec(),
    };
    // dual infeasible => primal support unbounded; dual unbounded => empty
    match solve_lp(&lp, None)? {
        LpStatus::Infeasible => Ok(LpStatus::Unbounded),
        LpStatus::Unbounded => Ok(LpStatus::Infeasible),
        LpStatus::Optimal {
            objective,
            solution,
        } => Ok(LpStatus::Optimal {
            objective,
            solution,
        }),
    }
}

/// Chebyshev center of a halfspace polytope: the deepest point and its
/// clearance radius, via the row-small dual with primal recovery from the
/// optimal basis.
pub fn chebyshev_center(normals: &[Vec<f64>], offsets: &[f64]) -> Result<(Vec<f64>, f64)> {
    let d = normals.first().map(|u| u.len()).ok_or(Error::Unbounded)?;
    let n = normals.len();
    let norms: Vec<f64> = normals.iter().map(|u| crate::linalg::norm(u)).collect();
    // dual: min b.mu  s.t.  sum mu_j u_j = 0, sum mu_j ||u_j|| = 1, mu >= 0
    let mut rows = vec![vec![0.0; n]; d + 1];
    for j in 0..n {
        for i in 0..d {
            rows[i][j] = normals[j][i];
        }
        rows[d][j] = norms[j];
    }
    let mut rhs = vec![0.0; d + 1];
    rhs[d] = 1.0;
    let lp = StandardLp {
        cols: n,
        rows,
        rhs,
        objective: offsets.to_vec(),
    };
    let (radius, mu) = match solve_lp(&lp, None)? {
        LpStatus::Infeasible => return Err(Error::Unbounded), // no direction balance: unbounded body
        LpStatus::Unbounded => return Err(Error::Infeasible),
        LpStatus::Optimal {
            objective,
            solution,
        } => (objective, solution),
    };
    let scale = offsets.iter().fold(1.0f64, |a, b| a.max(b.abs()));
    if !radius.is_finite() || radius <= 1e-12 * scale {
        // empty interior (includes genuinely empty polytopes)
        return Err(Error::Infeasible);
    }
    // recover (x, t) from near-tight constraints of the dual support set
    let tight: Vec<usize> = (0..n).filter(|&j| mu[j] > 1e-12).collect();
    let k = d + 1;
    let mut ata = vec![0.0; k * k];
    let mut atb = vec![0.0; k];
    for &j in &tight {
        let mut a = Vec::with_capacity(k);
        a.extend_from_slice(&normals[j]);
        a.push(norms[j]);
        for r in 0..k {
            atb[r] += a[r] * offsets[j];
            for c in 0..k {
                ata[r * k + c] += a[r] * a[c];
            }
        }
    }
    for r in 0..k {
        ata[r * k + r] += 1e-12;
    }
    let inv = crate::linalg::inverse(&ata, k).map_err(|_| Error::Infeasible)?;
    let xt = crate::linalg::mat_vec(&inv, &atb, k);
    let center = xt[..d].to_vec();
    // validate: the recovered center must satisfy all constraints with the
    // recovered clearance
    let mut ok = true;
    for j in 0..n {
        if crate::linalg::dot(&normals[j], &center) + norms[j] * radius > offsets[j] + 1e-6 * (1.0 + offsets[j].abs()) {
            ok = false;
            break;
        }
    }
    if !ok {
        return Err(Error::Internal("chebyshev recovery failed".into()));
    }
    Ok((center, radius))
}
