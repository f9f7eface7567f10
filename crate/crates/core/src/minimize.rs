//! Approximate minimization of a convex function through an eps-noisy
//! evaluator: 1-D trisection search and the nested d-dimensional recursion.
//!
//! The 1-D search trisects [a, b], evaluates the noisy function at the four
//! subinterval endpoints, recurses on the bracket around the minimal sample
//! (ties to the lowest index), and stops when the interval drops below eps.
//! Each level shrinks the interval to at most 2/3 of its length and costs
//! exactly four evaluations; the terminal step costs one more. The result is
//! within (8 + slope_bound) * eps of the true minimum.
//!
//! The k-dimensional version minimizes, along the first coordinate, the
//! value reported by the (k-1)-dimensional search on the remaining
//! coordinates, multiplying the evaluation counts.

use crate::error::{Error, Result};

/// Convex objective accessed only through a noisy evaluator.
/// `|evaluate(x) - f(x)| <= eps_eval` for the underlying convex f, whose
/// slope is bounded by `slope_bound`.
type Evaluator<'a> = Box<dyn Fn(&[f64]) -> f64 + 'a>;

pub struct NoisyObjective<'a> {
    evaluator: Evaluator<'a>,
    dim: usize,
    pub eps_eval: f64,
    pub slope_bound: f64,
}

impl<'a> NoisyObjective<'a> {
    pub fn new(dim: usize, eps_eval: f64, evaluator: impl Fn(&[f64]) -> f64 + 'a) -> Self {
        NoisyObjective {
            evaluator: Box::new(evaluator),
            dim,
            eps_eval,
            slope_bound: 10.0,
        }
    }

    pub fn with_slope_bound(mut self, s: f64) -> Self {
        self.slope_bound = s;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[f64], count: &mut u64) -> f64 {
        *count += 1;
        (self.evaluator)(x)
    }
}

/// Result of an approximate minimization.
#[derive(Debug, Clone, PartialEq)]
pub struct MinResult {
    pub argmin: Vec<f64>,
    pub value: f64,
    pub evaluations: u64,
}

/// Upper bound on the evaluations used by the 1-D search.
pub fn eval_budget_1d(a: f64, b: f64, eps: f64) -> u64 {
    let levels = if b - a < eps {
        0.0
    } else {
        ((b - a) / eps).ln() / 1.5f64.ln()
    };
    4 * levels.ceil().max(0.0) as u64 + 8
}

fn check_interval(a: f64, b: f64, eps: f64) -> Result<()> {
    if !(a <= b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParameter("interval requires a <= b".into()));
    }
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::InvalidParameter("eps must be > 0".into()));
    }
    Ok(())
}

/// Trisection search on [a, b]; guarantee
/// `f(x') - min f <= (8 + slope_bound) * max(eps, eps_eval)`.
pub fn minimize_1d(obj: &NoisyObjective, a: f64, b: f64, eps: f64) -> Result<MinResult> {
    if obj.dim != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: obj.dim,
        });
    }
    check_interval(a, b, eps)?;
    let mut count = 0u64;
    let (x, value) = trisect(&|x, n| obj.eval(&[x], n), a, b, eps, &mut count);
    Ok(MinResult {
        argmin: vec![x],
        value,
        evaluations: count,
    })
}

/// Recursive trisection; returns (argmin, noisy value at argmin).
fn trisect(
    f: &dyn Fn(f64, &mut u64) -> f64,
    a: f64,
    b: f64,
    eps: f64,
    count: &mut u64,
) -> (f64, f64) {
    if b - a < eps {
        let v = f(a, count);
        return (a, v);
    }
    let third = (b - a) / 3.0;
    let xs = [a, a + third, a + 2.0 * third, b];
    let fs = [
        f(xs[0], count),
        f(xs[1], count),
        f(xs[2], count),
        f(xs[3], count),
    ];
    // lowest index wins ties
    let mut m = 0usize;
    for i in 1..4 {
        if fs[i] < fs[m] {
            m = i;
        }
    }
    let lo = if m == 0 { a } else { xs[m - 1] };
    let hi = if m == 3 { b } else { xs[m + 1] };
    let (x2, f2) = trisect(f, lo, hi, eps, count);
    if fs[m] <= f2 {
        (xs[m], fs[m])
    } else {
        (x2, f2)
    }
}

/// Nested minimization over the box [a, b]^k. The outer 1-D search minimizes
/// the value reported by the inner recursion; evaluation counts multiply and
/// the error grows by an additive constant per level.
pub fn minimize_nd(obj: &NoisyObjective, a: f64, b: f64, eps: f64) -> Result<MinResult> {
    check_interval(a, b, eps)?;
    let k = obj.dim;
    if k == 0 {
        return Err(Error::InvalidParameter("objective must have dim >= 1".into()));
    }
    let mut count = 0u64;
    let mut prefix = Vec::with_capacity(k);
    let (x, value) = nd_rec(obj, &mut prefix, k, a, b, eps, &mut count);
    Ok(MinResult {
        argmin: x,
        value,
        evaluations: count,
    })
}

fn nd_rec(
    obj: &NoisyObjective,
    prefix: &mut Vec<f64>,
    remaining: usize,
    a: f64,
    b: f64,
    eps: f64,
    count: &mut u64,
) -> (Vec<f64>, f64) {
    if remaining == 1 {
        let eval = |x: f64, n: &mut u64| {
            prefix_eval(obj, prefix, &[x], n)
        };
        let (x, v) = trisect(&eval, a, b, eps, count);
        let mut full = prefix.clone();
        full.push(x);
        return (full, v);
    }
    // Outer search over the first free coordinate; each probe runs the inner
    // recursion afresh (nothing is memoized across probes).
    let inner_value = |x1: f64, n: &mut u64| -> f64 {
        let mut p = prefix.clone();
        p.push(x1);
        let (_, v) = nd_rec(obj, &mut p, remaining - 1, a, b, eps, n);
        v
    };
    let (x1, _) = trisect(&inner_value, a, b, eps, count);
    // Re-run the inner search at the chosen coordinate to recover the full
    // argmin deterministically.
    prefix.push(x1);
    let (full, v) = nd_rec(obj, prefix, remaining - 1, a, b, eps, count);
    prefix.pop();
    (full, v)
}

fn prefix_eval(obj: &NoisyObjective, prefix: &[f64], tail: &[f64], count: &mut u64) -> f64 {
    debug_assert!(prefix.len() + tail.len() <= 8);
    let mut x = [0.0f64; 8];
    x[..prefix.len()].copy_from_slice(prefix);
    x[prefix.len()..prefix.len() + tail.len()].copy_from_slice(tail);
    obj.eval(&x[..prefix.len() + tail.len()], count)
}
