//! Support queries over Minkowski sums of preprocessed polytopes.
//!
//! A `SumBody` is a formal sum of terms, each an indexed polytope under an
//! optional affine map, an analytic ball, or a single point, possibly negated.
//! Supports and widths of the sum are sums of per-term answers, so the sum is
//! never materialized; this is also how one body of an intersection query can
//! be an analytic ball, for which no data structure is required.

use crate::error::{Error, Result};
use crate::fatten::{minkowski_body, negate_body, SymmetricBody};
use crate::geom::AffineMap;
use crate::linalg;
use crate::width_index::{argmax_dir, WidthIndex, CALIBRATION};

#[derive(Clone)]
pub enum Summand<'a> {
    Index(&'a WidthIndex),
    Ball { center: Vec<f64>, radius: f64 },
    Point(Vec<f64>),
}

#[derive(Clone)]
pub struct SumTerm<'a> {
    pub summand: Summand<'a>,
    pub map: Option<AffineMap>,
    pub negate: bool,
}

#[derive(Clone)]
pub struct SumBody<'a> {
    dim: usize,
    terms: Vec<SumTerm<'a>>,
    /// Sum-level translation. An affine frame T(x) = Mx + t applied to a
    /// Minkowski sum distributes its linear part over the summands but its
    /// translation only once; it accumulates here.
    offset: Vec<f64>,
}

impl<'a> SumBody<'a> {
    pub fn new(dim: usize) -> Self {
        SumBody {
            dim,
            terms: Vec::new(),
            offset: vec![0.0; dim],
        }
    }

    /// The sum transformed by `map`: linear part composed onto every term,
    /// translation folded into the sum-level offset.
    pub fn with_extra_map(&self, map: &AffineMap) -> Result<SumBody<'a>> {
        if map.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: map.dim(),
            });
        }
        let linear = AffineMap::linear(map.matrix().to_vec(), self.dim)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let composed = match &t.map {
                None => linear.clone(),
                Some(tm) => linear.compose(tm)?,
            };
            terms.push(SumTerm {
                summand: t.summand.clone(),
                map: Some(composed),
                negate: t.negate,
            });
        }
        Ok(SumBody {
            dim: self.dim,
            terms,
            offset: map.apply(&self.offset),
        })
    }

    /// K = map_a(A) + (-map_b(B)): the intersection-query body.
    pub fn difference(
        a: &'a WidthIndex,
        b: &'a WidthIndex,
        map_a: Option<AffineMap>,
        map_b: Option<AffineMap>,
    ) -> Result<Self> {
        let mut s = SumBody::new(a.dim());
        s.push_index(a, map_a, false)?;
        s.push_index(b, map_b, true)?;
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[SumTerm<'a>] {
        &self.terms
    }

    pub fn push_index(
        &mut self,
        idx: &'a WidthIndex,
        map: Option<AffineMap>,
        negate: bool,
    ) -> Result<()> {
        if idx.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: idx.dim(),
            });
        }
        if let Some(m) = &map {
            if m.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: m.dim(),
                });
            }
        }
        self.terms.push(SumTerm {
            summand: Summand::Index(idx),
            map,
            negate,
        });
        Ok(())
    }

    pub fn push_ball(&mut self, center: Vec<f64>, radius: f64, negate: bool) -> Result<()> {
        if center.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: center.len(),
            });
        }
        if !(radius >= 0.0) || !radius.is_finite() {
            return Err(Error::InvalidParameter("ball radius must be >= 0".into()));
        }
        self.terms.push(SumTerm {
            summand: Summand::Ball { center, radius },
            map: None,
            negate,
        });
        Ok(())
    }

    /// Push a fully specified term (summand, optional map, negation).
    pub fn push_term(&mut self, term: SumTerm<'a>) -> Result<()> {
        let sd = match &term.summand {
            Summand::Index(i) => i.dim(),
            Summand::Ball { center, .. } => center.len(),
            Summand::Point(p) => p.len(),
        };
        if sd != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: sd,
            });
        }
        if let Some(m) = &term.map {
            if m.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: m.dim(),
                });
            }
        }
        self.terms.push(term);
        Ok(())
    }

    pub fn push_point(&mut self, p: Vec<f64>, negate: bool) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        self.terms.push(SumTerm {
            summand: Summand::Point(p),
            map: None,
            negate,
        });
        Ok(())
    }

    /// Largest index eps among the terms (0 when none).
    pub fn max_index_eps(&self) -> f64 {
        self.terms
            .iter()
            .filter_map(|t| match &t.summand {
                Summand::Index(i) => Some(i.eps()),
                _ => None,
            })
            .fold(0.0, f64::max)
    }

    /// The pipelines require term indexes calibrated at eps / CALIBRATION.
    pub fn check_calibration(&self, eps: f64) -> Result<()> {
        let worst = self.max_index_eps();
        if worst > eps / CALIBRATION * (1.0 + 1e-9) {
            return Err(Error::InvalidParameter(format!(
                "indexes built at eps {} are too coarse for queries at eps {} (need <= eps/{})",
                worst, eps, CALIBRATION
            )));
        }
        Ok(())
    }

    /// One-sided approximate support of the sum along `v` (never exceeds the
    /// exact support; the deficit is at most `sum_i eps_i w_i(v) ||v||`).
    ///
    /// Kernel maxima and translation contributions accumulate separately so
    /// that the answer is bitwise symmetric under reflecting a summand
    /// through the origin versus negating its query flag.
    pub fn support(&self, v: &[f64]) -> Result<f64> {
        let mut hsum = 0.0;
        let mut tsum = linalg::dot(&self.offset, v);
        let neg: Vec<f64> = v.iter().map(|x| -x).collect();
        for t in &self.terms {
            let dir: &[f64] = if t.negate { &neg } else { v };
            let pulled: Vec<f64>;
            let w: &[f64] = match &t.map {
                None => dir,
                Some(m) => {
                    pulled = m.pullback_direction(dir);
                    if linalg::dot(&pulled, &pulled) <= 0.0 {
                        return Err(Error::SingularMap);
                    }
                    tsum += linalg::dot(m.translation(), dir);
                    &pulled
                }
            };
            hsum += match &t.summand {
                Summand::Index(idx) => {
                    if w.iter().any(|x| !x.is_finite()) || linalg::dot(w, w) <= 0.0 {
                        return Err(Error::InvalidDirection);
                    }
                    idx.scan(w).0
                }
                Summand::Ball { center, radius } => ball_support(center, *radius, w),
                Summand::Point(p) => linalg::dot(p, w),
            };
        }
        Ok(hsum + tsum)
    }

    /// Approximate directional width of the sum (at least (1 - eps) of the
    /// exact width).
    pub fn width(&self, v: &[f64]) -> Result<f64> {
        let mut w = 0.0;
        for t in &self.terms {
            // widths are symmetric under negation
            w += match &t.summand {
                Summand::Index(idx) => idx.query_width(v, t.map.as_ref())?.width,
                Summand::Ball { radius, .. } => match &t.map {
                    None => 2.0 * radius,
                    Some(m) => {
                        2.0 * radius * linalg::norm(&m.pullback_direction(v)) / linalg::norm(v)
                    }
                },
                Summand::Point(_) => 0.0,
            };
        }
        Ok(w)
    }

    /// Sandwiching body of the sum: transformed per-term bodies combined by
    /// Minkowski addition of zonotopes. Point terms and zero-radius balls
    /// contribute only their centers.
    pub fn combined_body(&self) -> Result<SymmetricBody> {
        let mut acc: Option<SymmetricBody> = None;
        for t in &self.terms {
            let raw = match &t.summand {
                Summand::Index(idx) => idx.body().clone(),
                Summand::Ball { center, radius } => {
                    SymmetricBody::ball_certificate(center.clone(), *radius)
                }
                Summand::Point(p) => SymmetricBody::point_body(p.clone()),
            };
            let mapped = match &t.map {
                None => raw,
                Some(m) => raw.transform(m),
            };
            let signed = if t.negate { negate_body(&mapped) } else { mapped };
            acc = Some(match acc {
                None => signed,
                Some(prev) => minkowski_body(&prev, &signed)?,
            });
        }
        let body = acc.ok_or(Error::DegenerateBody)?;
        let shift = crate::geom::AffineMap::translation_only(self.offset.clone())?;
        Ok(body.transform(&shift))
    }

    /// Flattened evaluator for hot query loops; `extra` transforms the whole
    /// sum (linear part per term, translation once).
    pub fn bake(&self, extra: Option<&AffineMap>) -> Result<BakedSum<'a>> {
        let d = self.dim;
        let offset = match extra {
            None => self.offset.clone(),
            Some(e) => e.apply(&self.offset),
        };
        let extra_linear = match extra {
            None => None,
            Some(e) => Some(AffineMap::linear(e.matrix().to_vec(), d)?),
        };
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let total = match (&extra_linear, &t.map) {
                (None, None) => None,
                (Some(e), None) => Some(e.clone()),
                (None, Some(m)) => Some(m.clone()),
                (Some(e), Some(m)) => Some(e.compose(m)?),
            };
            let (matrix_t, translation) = match &total {
                None => (None, vec![0.0; d]),
                Some(m) => (
                    Some(linalg::transpose(m.matrix(), d)),
                    m.translation().to_vec(),
                ),
            };
            let kind = match &t.summand {
                Summand::Index(idx) => BakedKind::Kernel {
                    coords: idx.kernel().coords().to_vec(),
                },
                Summand::Ball { center, radius } => BakedKind::Ball {
                    center: center.clone(),
                    radius: *radius,
                },
                Summand::Point(p) => BakedKind::Point { p: p.clone() },
            };
            terms.push(BakedTerm {
                kind,
                matrix_t,
                translation,
                negate: t.negate,
            });
        }
        Ok(BakedSum {
            dim: d,
            terms,
            offset,
            _marker: std::marker::PhantomData,
        })
    }
}

fn ball_support(center: &[f64], radius: f64, v: &[f64]) -> f64 {
    linalg::dot(center, v) + radius * linalg::norm(v)
}

enum BakedKind {
    Kernel { coords: Vec<f64> },
    Ball { center: Vec<f64>, radius: f64 },
    Point { p: Vec<f64> },
}

struct BakedTerm {
    kind: BakedKind,
    /// M^T of the total map (extra composed with the term map), row-major.
    matrix_t: Option<Vec<f64>>,
    translation: Vec<f64>,
    negate: bool,
}

/// Allocation-free support evaluator over the sum; directions are passed in
/// stack buffers.
pub struct BakedSum<'a> {
    dim: usize,
    terms: Vec<BakedTerm>,
    offset: Vec<f64>,
    // tie the lifetime to the indexes the coords were copied from
    _marker: std::marker::PhantomData<&'a ()>,
}

impl<'a> BakedSum<'a> {
    /// Approximate support of the mapped sum along `v`. Kernel maxima and
    /// translation contributions accumulate separately for bitwise symmetry
    /// under negation.
    pub fn support(&self, v: &[f64]) -> f64 {
        let d = self.dim;
        let mut hsum = 0.0;
        let mut tsum = linalg::dot(&self.offset, v);
        let mut dir = [0.0f64; 8];
        let mut pulled = [0.0f64; 8];
        for t in &self.terms {
            for i in 0..d {
                dir[i] = if t.negate { -v[i] } else { v[i] };
            }
            let w: &[f64] = match &t.matrix_t {
                None => &dir[..d],
                Some(mt) => {
                    // pulled = M^T dir, with mt = M^T stored row-major
                    for (i, item) in pulled.iter_mut().enumerate().take(d) {
                        *item = linalg::dot(&mt[i * d..(i + 1) * d], &dir[..d]);
                    }
                    &pulled[..d]
                }
            };
            tsum += linalg::dot(&t.translation, &dir[..d]);
            hsum += match &t.kind {
                BakedKind::Kernel { coords } => argmax_dir(coords, d, w).0,
                BakedKind::Ball { center, radius } => {
                    linalg::dot(center, w) + radius * linalg::norm(w)
                }
                BakedKind::Point { p } => linalg::dot(p, w),
            };
        }
        hsum + tsum
    }

    /// Approximate width along `v` (unit-normalized).
    pub fn width(&self, v: &[f64]) -> f64 {
        let mut neg = [0.0f64; 8];
        for i in 0..self.dim {
            neg[i] = -v[i];
        }
        (self.support(v) + self.support(&neg[..self.dim])) / linalg::norm(v)
    }
}
