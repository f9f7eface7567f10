//! Exact intersection oracle: linear feasibility of a common point written
//! as convex combinations of the two vertex sets, solved by the dense
//! simplex with a seeded random column order. Instances whose infeasibility
//! gap falls inside the tolerance band are re-solved in exact rational
//! arithmetic in d <= 3 and flagged otherwise.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use polyapprox::geom::PointPolytope;
use polyapprox::linprog::{solve_lp, LpNum, LpStatus, StandardLp};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpVerdict {
    Intersecting,
    Disjoint,
    /// Infeasibility gap within the tolerance band; flagged rather than
    /// answered (only possible in d > 3, where the rational fallback is off).
    Ambiguous,
}

#[derive(Debug, Error)]
pub enum LpOracleError {
    #[error("oracle caps exceeded: n <= 10^4 and d <= 8 required")]
    SizeCap,
    #[error("lp solve failed: {0}")]
    Solve(#[from] polyapprox::Error),
}

#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Rat(pub BigRational);

impl LpNum for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn from_f64(x: f64) -> Self {
        Rat(BigRational::from_float(x).expect("finite input"))
    }
    fn add(&self, o: &Self) -> Self {
        Rat(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Rat(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Rat(&self.0 * &o.0)
    }
    fn div(&self, o: &Self) -> Self {
        Rat(&self.0 / &o.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn abs(&self) -> Self {
        Rat(self.0.abs())
    }
    fn tol() -> Self {
        Rat(BigRational::zero())
    }
}

/// Infeasibility gap of `E z = f, z >= 0` as a phase-1 LP value: zero iff
/// the system is feasible.
fn feasibility_gap<T: LpNum>(
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    cols: usize,
    order: Option<&[usize]>,
) -> Result<T, polyapprox::Error> {
    let m = rows.len();
    // artificial columns with +/-1 matching the rhs sign make the identity
    // basis feasible; minimizing their sum measures the gap
    let mut wide_rows: Vec<Vec<T>> = Vec::with_capacity(m);
    for (i, r) in rows.iter().enumerate() {
        let mut row = r.clone();
        for k in 0..m {
            if k == i {
                let sign = if rhs[i] < T::zero() {
                    T::one().neg()
                } else {
                    T::one()
                };
                row.push(sign);
            } else {
                row.push(T::zero());
            }
        }
        wide_rows.push(row);
    }
    let mut objective = vec![T::zero(); cols + m];
    for item in objective.iter_mut().skip(cols) {
        *item = T::one();
    }
    let lp = StandardLp {
        cols: cols + m,
        rows: wide_rows,
        rhs,
        objective,
    };
    // the scan order must cover the artificial columns too, or the solver
    // cannot assemble a feasible basis
    let full_order: Vec<usize> = match order {
        Some(o) => o.iter().copied().chain(cols..cols + m).collect(),
        None => (0..cols + m).collect(),
    };
    match solve_lp(&lp, Some(&full_order))? {
        LpStatus::Optimal { objective, .. } => Ok(objective),
        LpStatus::Infeasible => Err(polyapprox::Error::Internal(
            "phase-1 system cannot be infeasible".into(),
        )),
        LpStatus::Unbounded => Err(polyapprox::Error::Internal(
            "phase-1 system cannot be unbounded".into(),
        )),
    }
}

fn intersect_rows_f64(a: &PointPolytope, b: &PointPolytope) -> (Vec<Vec<f64>>, Vec<f64>, usize) {
    let d = a.dim();
    let (na, nb) = (a.len(), b.len());
    let cols = na + nb;
    let mut rows = vec![vec![0.0; cols]; d + 2];
    for i in 0..na {
        let p = a.point(i);
        for k in 0..d {
            rows[k][i] = p[k];
        }
        rows[d][i] = 1.0;
    }
    for j in 0..nb {
        let q = b.point(j);
        for k in 0..d {
            rows[k][na + j] = -q[k];
        }
        rows[d + 1][na + j] = 1.0;
    }
    let mut rhs = vec![0.0; d + 2];
    rhs[d] = 1.0;
    rhs[d + 1] = 1.0;
    (rows, rhs, cols)
}

/// Exact-up-to-tolerance intersection of two point hulls: feasibility of
/// `sum lam_i a_i = sum mu_j b_j`, `lam, mu >= 0`, both summing to one.
/// Randomized (seeded) column pivoting; rational fallback in d <= 3 for
/// tolerance-ambiguous gaps.
pub fn lp_intersect_exact(
    a: &PointPolytope,
    b: &PointPolytope,
    seed: u64,
) -> Result<LpVerdict, LpOracleError> {
    let d = a.dim();
    if a.len() > 10_000 || b.len() > 10_000 || d > 8 || b.dim() != d {
        return Err(LpOracleError::SizeCap);
    }
    let (rows, rhs, cols) = intersect_rows_f64(a, b);
    let mut order: Vec<usize> = (0..cols).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let gap = feasibility_gap(rows, rhs, cols, Some(&order))?;
    let diam = crate::scan::diameter_estimate(a) + crate::scan::diameter_estimate(b);
    let tol = 1e-9 * (1.0 + diam);
    if gap <= tol {
        // confirm clear feasibility; gaps just under the tolerance are
        // ambiguous as well
        if gap <= 0.25 * tol {
            return Ok(LpVerdict::Intersecting);
        }
    } else if gap >= 4.0 * tol {
        return Ok(LpVerdict::Disjoint);
    }
    if d <= 3 {
        return Ok(rational_intersect(a, b, &order)?);
    }
    Ok(LpVerdict::Ambiguous)
}

fn rational_intersect(
    a: &PointPolytope,
    b: &PointPolytope,
    order: &[usize],
) -> Result<LpVerdict, polyapprox::Error> {
    let d = a.dim();
    let (na, nb) = (a.len(), b.len());
    let cols = na + nb;
    let mut rows = vec![vec![Rat::zero(); cols]; d + 2];
    for i in 0..na {
        let p = a.point(i);
        for k in 0..d {
            rows[k][i] = Rat::from_f64(p[k]);
        }
        rows[d][i] = Rat::one();
    }
    for j in 0..nb {
        let q = b.point(j);
        for k in 0..d {
            rows[k][na + j] = Rat::from_f64(-q[k]);
        }
        rows[d + 1][na + j] = Rat::one();
    }
    let mut rhs = vec![Rat::zero(); d + 2];
    rhs[d] = Rat::one();
    rhs[d + 1] = Rat::one();
    let gap = feasibility_gap(rows, rhs, cols, Some(order))?;
    if gap.0.is_zero() {
        Ok(LpVerdict::Intersecting)
    } else {
        Ok(LpVerdict::Disjoint)
    }
}

/// Membership of the origin in a point hull, as an independent LP route
/// (d + 1 rows): used for oracle self-consistency against
/// `lp_intersect_exact` through `A (+) (-B)`.
pub fn origin_in_hull(s: &PointPolytope, seed: u64) -> Result<LpVerdict, LpOracleError> {
    let d = s.dim();
    if s.len() > 1_000_000 || d > 8 {
        return Err(LpOracleError::SizeCap);
    }
    let n = s.len();
    let mut rows = vec![vec![0.0; n]; d + 1];
    for i in 0..n {
        let p = s.point(i);
        for k in 0..d {
            rows[k][i] = p[k];
        }
        rows[d][i] = 1.0;
    }
    let mut rhs = vec![0.0; d + 1];
    rhs[d] = 1.0;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let gap = feasibility_gap(rows, rhs, n, Some(&order))?;
    let tol = 1e-9 * (1.0 + crate::scan::diameter_estimate(s));
    if gap <= 0.25 * tol {
        Ok(LpVerdict::Intersecting)
    } else if gap >= 4.0 * tol {
        Ok(LpVerdict::Disjoint)
    } else {
        Ok(LpVerdict::Ambiguous)
    }
}
