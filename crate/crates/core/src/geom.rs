//! Exact low-level geometry: points, hyperplanes, slabs, affine maps,
//! support/width evaluation, and the graph-based projective dual transform.
//!
//! All types are immutable values and every operation is pure. Coordinates
//! are f64; comparison tolerances are relative and default to 1e-9, several
//! orders of magnitude below any approximation parameter this crate is used
//! with.

use crate::error::{Error, Result};
use crate::linalg;

/// Relative tolerance used by exact-identity checks.
pub const REL_TOL: f64 = 1e-9;

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 8;

pub fn check_dim(d: usize) -> Result<()> {
    if !(MIN_DIM..=MAX_DIM).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    Ok(())
}

fn check_direction(v: &[f64]) -> Result<()> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidDirection);
    }
    if linalg::dot(v, v) <= 0.0 {
        return Err(Error::InvalidDirection);
    }
    Ok(())
}

/// A point in R^d.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Point { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Closed halfspace `{x : normal . x <= offset}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    pub normal: Vec<f64>,
    pub offset: f64,
}

impl Hyperplane {
    pub fn new(normal: Vec<f64>, offset: f64) -> Result<Self> {
        check_direction(&normal)?;
        if !offset.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        linalg::dot(&self.normal, x) <= self.offset
    }
}

/// The slab of support values of a body along `direction`: the region between
/// the two supporting hyperplanes. `(hi - lo) / ||direction||` is the
/// directional width it encloses.
#[derive(Debug, Clone, PartialEq)]
pub struct Slab {
    pub direction: Vec<f64>,
    pub lo: f64,
    pub hi: f64,
}

impl Slab {
    pub fn new(direction: Vec<f64>, lo: f64, hi: f64) -> Result<Self> {
        check_direction(&direction)?;
        if hi < lo {
            return Err(Error::InvalidParameter("slab requires lo <= hi".into()));
        }
        Ok(Slab { direction, lo, hi })
    }

    pub fn width(&self) -> f64 {
        (self.hi - self.lo) / linalg::norm(&self.direction)
    }

    /// Central expansion by a factor of (1 + eps): same center, extent
    /// multiplied by exactly (1 + eps).
    pub fn eps_expand(&self, eps: f64) -> Result<Slab> {
        if !(eps >= 0.0) || !eps.is_finite() {
            return Err(Error::InvalidParameter(
                "expansion factor requires eps >= 0".into(),
            ));
        }
        let center = 0.5 * (self.hi + self.lo);
        let half = 0.5 * (self.hi - self.lo) * (1.0 + eps);
        Ok(Slab {
            direction: self.direction.clone(),
            lo: center - half,
            hi: center + half,
        })
    }
}

/// Non-singular affine transform `x -> M x + t`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap {
    matrix: Vec<f64>, // row-major d x d
    translation: Vec<f64>,
    dim: usize,
}

impl AffineMap {
    pub fn new(matrix: Vec<f64>, translation: Vec<f64>) -> Result<Self> {
        let d = translation.len();
        check_dim(d)?;
        if matrix.len() != d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d,
                got: matrix.len(),
            });
        }
        if matrix.iter().chain(translation.iter()).any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let scale = linalg::max_abs(&matrix);
        let dt = linalg::det(&matrix, d);
        if dt.abs() <= 1e-12 * scale.powi(d as i32) {
            return Err(Error::SingularMap);
        }
        Ok(AffineMap {
            matrix,
            translation,
            dim: d,
        })
    }

    pub fn identity(d: usize) -> Self {
        AffineMap {
            matrix: linalg::identity(d),
            translation: vec![0.0; d],
            dim: d,
        }
    }

    pub fn translation_only(t: Vec<f64>) -> Result<Self> {
        let d = t.len();
        check_dim(d)?;
        Ok(AffineMap {
            matrix: linalg::identity(d),
            translation: t,
            dim: d,
        })
    }

    pub fn uniform_scale(d: usize, s: f64) -> Result<Self> {
        if s == 0.0 || !s.is_finite() {
            return Err(Error::SingularMap);
        }
        let mut m = linalg::identity(d);
        for i in 0..d {
            m[i * d + i] = s;
        }
        Ok(AffineMap {
            matrix: m,
            translation: vec![0.0; d],
            dim: d,
        })
    }

    /// Linear part only, no translation.
    pub fn linear(matrix: Vec<f64>, d: usize) -> Result<Self> {
        AffineMap::new(matrix, vec![0.0; d])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &[f64] {
        &self.matrix
    }

    pub fn translation(&self) -> &[f64] {
        &self.translation
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = linalg::mat_vec(&self.matrix, x, self.dim);
        for i in 0..self.dim {
            y[i] += self.translation[i];
        }
        y
    }

    pub fn apply_point(&self, p: &Point) -> Point {
        Point {
            coords: self.apply(&p.coords),
        }
    }

    /// Pullback of a query direction: M^T v. The support of `T(S)` along `v`
    /// equals the support of `S` along `M^T v` plus `t . v`, which is how
    /// indexes answer queries for affine images without rebuilding.
    pub fn pullback_direction(&self, v: &[f64]) -> Vec<f64> {
        linalg::mat_t_vec(&self.matrix, v, self.dim)
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let inv = linalg::inverse(&self.matrix, self.dim)?;
        let t = linalg::mat_vec(&inv, &self.translation, self.dim);
        Ok(AffineMap {
            matrix: inv,
            translation: t.iter().map(|x| -x).collect(),
            dim: self.dim,
        })
    }

    /// Composition `self` after `other`: x -> self(other(x)).
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let m = linalg::mat_mul(&self.matrix, &other.matrix, self.dim);
        let mut t = linalg::mat_vec(&self.matrix, &other.translation, self.dim);
        for i in 0..self.dim {
            t[i] += self.translation[i];
        }
        Ok(AffineMap {
            matrix: m,
            translation: t,
            dim: self.dim,
        })
    }
}

/// Support evaluation result: the maximum of `p . v` and the index of the
/// point attaining it (lowest index on ties).
#[derive(Debug, Clone, PartialEq)]
pub struct Support {
    pub value: f64,
    pub witness: usize,
}

/// Convex polytope given as the hull of an explicit point set.
///
/// Points are stored flat (n x d, row-major) so that support scans stream
/// through memory.
#[derive(Debug, Clone, PartialEq)]
pub struct PointPolytope {
    dim: usize,
    coords: Vec<f64>,
}

impl PointPolytope {
    pub fn new(dim: usize, coords: Vec<f64>) -> Result<Self> {
        check_dim(dim)?;
        if coords.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        if coords.len() % dim != 0 {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: coords.len() % dim,
            });
        }
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(PointPolytope { dim, coords })
    }

    pub fn from_points(points: &[Vec<f64>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        let dim = points[0].len();
        let mut coords = Vec::with_capacity(points.len() * dim);
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            coords.extend_from_slice(p);
        }
        PointPolytope::new(dim, coords)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees n >= 1
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn point_vec(&self, i: usize) -> Point {
        Point {
            coords: self.point(i).to_vec(),
        }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn iter_points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn centroid(&self) -> Vec<f64> {
        let mut c = vec![0.0; self.dim];
        for p in self.iter_points() {
            for i in 0..self.dim {
                c[i] += p[i];
            }
        }
        let n = self.len() as f64;
        for x in &mut c {
            *x /= n;
        }
        c
    }

    /// Maximum of `p . v` over the point set; ties broken by lowest index.
    pub fn support(&self, v: &[f64]) -> Result<Support> {
        self.check_query(v)?;
        Ok(self.support_unchecked(v))
    }

    pub(crate) fn support_unchecked(&self, v: &[f64]) -> Support {
        let d = self.dim;
        let mut best = f64::NEG_INFINITY;
        let mut idx = 0usize;
        for (i, p) in self.coords.chunks_exact(d).enumerate() {
            let h = linalg::dot(p, v);
            if h > best {
                best = h;
                idx = i;
            }
        }
        Support {
            value: best,
            witness: idx,
        }
    }

    /// Directional width: `(h(v) + h(-v)) / ||v||`.
    pub fn width_exact(&self, v: &[f64]) -> Result<f64> {
        self.check_query(v)?;
        let neg: Vec<f64> = v.iter().map(|x| -x).collect();
        let hi = self.support_unchecked(v).value;
        let lo = self.support_unchecked(&neg).value;
        Ok((hi + lo) / linalg::norm(v))
    }

    /// Minimal slab enclosing the polytope along `v`, in support values.
    pub fn slab(&self, v: &[f64]) -> Result<Slab> {
        self.check_query(v)?;
        let neg: Vec<f64> = v.iter().map(|x| -x).collect();
        let hi = self.support_unchecked(v).value;
        let lo = -self.support_unchecked(&neg).value;
        Slab::new(v.to_vec(), lo, hi)
    }

    pub fn transform(&self, map: &AffineMap) -> Result<PointPolytope> {
        if map.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: map.dim(),
            });
        }
        let mut coords = Vec::with_capacity(self.coords.len());
        for p in self.iter_points() {
            coords.extend_from_slice(&map.apply(p));
        }
        PointPolytope::new(self.dim, coords)
    }

    pub fn negate(&self) -> PointPolytope {
        PointPolytope {
            dim: self.dim,
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }

    fn check_query(&self, v: &[f64]) -> Result<()> {
        check_direction(v)?;
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }
}

/// Convex polytope given as an intersection of halfspaces. Boundedness and
/// nonemptiness are not structural invariants; conversion operations check
/// them.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfspacePolytope {
    pub dim: usize,
    pub halfspaces: Vec<Hyperplane>,
}

impl HalfspacePolytope {
    pub fn new(dim: usize, halfspaces: Vec<Hyperplane>) -> Result<Self> {
        check_dim(dim)?;
        for h in &halfspaces {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: h.dim(),
                });
            }
        }
        Ok(HalfspacePolytope { dim, halfspaces })
    }

    pub fn len(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halfspaces.is_empty()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.halfspaces.iter().all(|h| h.contains(x))
    }
}

/// Graph-based projective dual of a point: `p = (p_1,...,p_d)` maps to the
/// hyperplane `x_d = p_1 x_1 + ... + p_{d-1} x_{d-1} - p_d`, returned in
/// halfspace form with normal `(p_1,...,p_{d-1},-1)` and offset `p_d`.
pub fn dual_hyperplane(p: &Point) -> Hyperplane {
    let d = p.coords.len();
    let mut normal = vec![0.0; d];
    normal[..d - 1].copy_from_slice(&p.coords[..d - 1]);
    normal[d - 1] = -1.0;
    Hyperplane {
        normal,
        offset: p.coords[d - 1],
    }
}

/// Slope coefficients of a dual graph hyperplane.
pub fn dual_slopes(h: &Hyperplane) -> Result<Vec<f64>> {
    let d = h.normal.len();
    let nd = h.normal[d - 1];
    if nd.abs() <= 1e-12 * linalg::max_abs(&h.normal) {
        return Err(Error::VerticalHyperplane);
    }
    Ok(h.normal[..d - 1].iter().map(|x| x / -nd).collect())
}

/// Intercept of a dual graph hyperplane (`x_d` at the origin of the abscissa).
/// For the dual of a point `p`, this is `-p_d`.
pub fn dual_intercept(h: &Hyperplane) -> Result<f64> {
    let d = h.normal.len();
    let nd = h.normal[d - 1];
    if nd.abs() <= 1e-12 * linalg::max_abs(&h.normal) {
        return Err(Error::VerticalHyperplane);
    }
    Ok(h.offset / nd)
}

/// Dual of a non-vertical hyperplane back to a point; the transform is an
/// involution on points and graph hyperplanes. Vertical primal hyperplanes
/// (last normal coordinate zero) are rejected.
pub fn dual_point(h: &Hyperplane) -> Result<Point> {
    let d = h.normal.len();
    let slopes = dual_slopes(h)?;
    // Graph form x_d = s . x' + c has c = offset / n_d; the primal point is
    // (s, -c).
    let c = h.offset / h.normal[d - 1];
    let mut coords = Vec::with_capacity(d);
    coords.extend_from_slice(&slopes);
    coords.push(-c);
    Point::new(coords)
}

/// Vertical gap between the dual hyperplanes of `p` and `q` at abscissa `r`.
/// Equals `||v|| * width_v({p, q})` with `v = (r, -1)`.
pub fn thickness(p: &Point, q: &Point, r: &[f64]) -> f64 {
    let d = p.coords.len();
    debug_assert_eq!(r.len(), d - 1);
    let tp = linalg::dot(&p.coords[..d - 1], r) - p.coords[d - 1];
    let tq = linalg::dot(&q.coords[..d - 1], r) - q.coords[d - 1];
    (tp - tq).abs()
}
