//! Augmented approximate directional-width index.
//!
//! `build` fattens the input hull, takes support witnesses of the fattened
//! point set along a deterministic direction net of resolution
//! `c_net * sqrt(eps)`, and keeps the distinct witnesses as the kernel. The
//! kernel is a subset of the input points and preserves every directional
//! width up to a factor (1 - eps); queries scan it, optionally through a
//! per-net-cell bucket accelerator, and handle affine images of the
//! preprocessed polytope via direction pullback. The sandwiching box of the
//! original polytope rides along as constant-size augmentation so that
//! fattening transforms for Minkowski sums of two indexed polytopes can be
//! derived without touching the original point sets.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fatten::{fatten_transform, sandwich_box, SymmetricBody};
use crate::geom::{check_dim, AffineMap, Point, PointPolytope};
use crate::linalg;
use crate::net::DirectionNet;
use crate::exec;

/// Default net constant; trades kernel size against guarantee slack.
pub const DEFAULT_NET_CONSTANT: f64 = 0.5;

/// Index calibration used by the intersection / Minkowski pipelines:
/// indexes are built at `eps / CALIBRATION` to answer queries at `eps`.
pub const CALIBRATION: f64 = 8.0;

#[derive(Debug, Clone)]
pub struct BuildParams {
    pub eps: f64,
    pub net_constant: f64,
    pub buckets: bool,
}

impl BuildParams {
    pub fn new(eps: f64) -> Self {
        BuildParams {
            eps,
            net_constant: DEFAULT_NET_CONSTANT,
            buckets: false,
        }
    }

    pub fn with_buckets(mut self, on: bool) -> Self {
        self.buckets = on;
        self
    }
}

/// Direction-grid accelerator: per net cell, the kernel positions that
/// witness the cell's corner directions.
#[derive(Debug, Clone)]
struct Buckets {
    net: DirectionNet,
    /// Transpose-inverse of the fattening matrix: maps an original-space scan
    /// direction to the fattened-frame direction the net was built in.
    fat_dir: Vec<f64>,
    cells: HashMap<u64, Vec<u32>>,
}

/// One-sided support answer from the kernel.
#[derive(Debug, Clone)]
pub struct SupportAnswer {
    pub value: f64,
    pub witness: Point,
    pub witness_index: usize,
}

/// Two-sided width answer from the kernel.
#[derive(Debug, Clone)]
pub struct WidthAnswer {
    pub width: f64,
    pub upper: Point,
    pub lower: Point,
    pub upper_index: usize,
    pub lower_index: usize,
}

#[derive(Debug, Clone)]
pub struct WidthIndex {
    eps: f64,
    dim: usize,
    source_len: usize,
    kernel_indices: Vec<u32>,
    kernel: PointPolytope,
    own_map: AffineMap,
    body: SymmetricBody,
    buckets: Option<Buckets>,
}

pub(crate) fn argmax_dir(coords: &[f64], dim: usize, v: &[f64]) -> (f64, u32) {
    macro_rules! go {
        ($d:literal) => {{
            let mut best = f64::NEG_INFINITY;
            let mut idx = 0u32;
            for (i, p) in coords.chunks_exact($d).enumerate() {
                let mut h = 0.0;
                let mut k = 0;
                while k < $d {
                    h += p[k] * v[k];
                    k += 1;
                }
                if h > best {
                    best = h;
                    idx = i as u32;
                }
            }
            (best, idx)
        }};
    }
    match dim {
        2 => go!(2),
        3 => go!(3),
        4 => go!(4),
        5 => go!(5),
        6 => go!(6),
        7 => go!(7),
        8 => go!(8),
        _ => unreachable!("dimension checked at construction"),
    }
}

impl WidthIndex {
    pub fn build(s: &PointPolytope, eps: f64) -> Result<WidthIndex> {
        WidthIndex::build_with(s, &BuildParams::new(eps))
    }

    pub fn build_with(s: &PointPolytope, params: &BuildParams) -> Result<WidthIndex> {
        let d = s.dim();
        check_dim(d)?;
        let eps = params.eps;
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::InvalidParameter(
                "eps must be in (0, 1)".into(),
            ));
        }
        if !(params.net_constant > 0.0) {
            return Err(Error::InvalidParameter("net constant must be > 0".into()));
        }
        if s.len() == 1 {
            // Degenerate single-point polytope: the kernel is the point and
            // every query is exact.
            let p = s.point(0).to_vec();
            return Ok(WidthIndex {
                eps,
                dim: d,
                source_len: 1,
                kernel_indices: vec![0],
                kernel: s.clone(),
                own_map: AffineMap::identity(d),
                body: SymmetricBody::point_body(p),
                buckets: None,
            });
        }

        let body = sandwich_box(s)?;
        let own_map = fatten_transform(&body)?;
        let fat = s.transform(&own_map)?;
        let delta = params.net_constant * eps.sqrt();
        let net = DirectionNet::new(d, delta)?;

        // Support witness of the fattened set along every net direction.
        let fat_coords = fat.coords();
        let witnesses: Vec<u32> = exec::map_range(net.len(), |i| {
            argmax_dir(fat_coords, d, net.direction(i)).1
        });

        let mut sorted = witnesses.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let kernel_indices = sorted;
        let mut kcoords = Vec::with_capacity(kernel_indices.len() * d);
        for &i in &kernel_indices {
            kcoords.extend_from_slice(s.point(i as usize));
        }
        let kernel = PointPolytope::new(d, kcoords)?;

        let buckets = if params.buckets {
            // kernel position of each source index
            let mut pos_of = HashMap::new();
            for (k, &i) in kernel_indices.iter().enumerate() {
                pos_of.insert(i, k as u32);
            }
            let mut cells: HashMap<u64, Vec<u32>> = HashMap::new();
            let m = net.nodes_per_axis();
            for node in 0..net.node_count() {
                let dir_idx = net.node_direction(node) as usize;
                let w = pos_of[&witnesses[dir_idx]];
                // a node borders up to 2^(d-1) cells; registering the node's
                // witness on every adjacent cell makes cell lookups cover the
                // nearest node of any direction in the cell
                let per_facet = m.pow((d - 1) as u32);
                let facet = (node / per_facet) as u8;
                let mut rem = node % per_facet;
                let mut coords = [0usize; 8];
                for item in coords.iter_mut().take(d - 1) {
                    *item = rem % m;
                    rem /= m;
                }
                // adjacent cells: base coordinates in {c-1, c} clamped
                let k = d - 1;
                for mask in 0..(1usize << k) {
                    let mut cell = crate::net::Cell {
                        facet,
                        coords: [0; 8],
                    };
                    let mut ok = true;
                    for j in 0..k {
                        let c = coords[j];
                        if (mask >> j) & 1 == 1 {
                            if c == 0 {
                                ok = false;
                                break;
                            }
                            cell.coords[j] = c - 1;
                        } else {
                            if c + 1 >= m {
                                if c == 0 {
                                    ok = false;
                                    break;
                                }
                                cell.coords[j] = c - 1;
                            } else {
                                cell.coords[j] = c;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    let entry = cells.entry(cell.key(d)).or_default();
                    if !entry.contains(&w) {
                        entry.push(w);
                    }
                }
            }
            let inv = own_map.inverse()?;
            let fat_dir = linalg::transpose(inv.matrix(), d);
            Some(Buckets {
                net,
                fat_dir,
                cells,
            })
        } else {
            None
        };

        Ok(WidthIndex {
            eps,
            dim: d,
            source_len: s.len(),
            kernel_indices,
            kernel,
            own_map,
            body,
            buckets,
        })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    pub fn kernel_size(&self) -> usize {
        self.kernel_indices.len()
    }

    /// Indices of the kernel points in the source polytope.
    pub fn kernel_indices(&self) -> &[u32] {
        &self.kernel_indices
    }

    /// Kernel points (bitwise-equal copies of source points).
    pub fn kernel(&self) -> &PointPolytope {
        &self.kernel
    }

    /// Fattening map used during the build.
    pub fn own_map(&self) -> &AffineMap {
        &self.own_map
    }

    /// Sandwiching hyperrectangle of the original polytope.
    pub fn body(&self) -> &SymmetricBody {
        &self.body
    }

    pub fn has_buckets(&self) -> bool {
        self.buckets.is_some()
    }

    fn check_query(&self, v: &[f64], map: Option<&AffineMap>) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        if v.iter().any(|x| !x.is_finite()) || linalg::dot(v, v) <= 0.0 {
            return Err(Error::InvalidDirection);
        }
        if let Some(m) = map {
            if m.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: m.dim(),
                });
            }
        }
        Ok(())
    }

    /// Kernel argmax along an original-space scan direction.
    pub(crate) fn scan(&self, w: &[f64]) -> (f64, u32) {
        if let Some(b) = &self.buckets {
            let u = linalg::mat_vec(&b.fat_dir, w, self.dim);
            if linalg::dot(&u, &u) > 0.0 {
                let cell = b.net.locate(&u);
                if let Some(cands) = b.cells.get(&cell.key(self.dim)) {
                    let mut best = f64::NEG_INFINITY;
                    let mut idx = 0u32;
                    for &k in cands {
                        let h = linalg::dot(self.kernel.point(k as usize), w);
                        if h > best || (h == best && k < idx) {
                            best = h;
                            idx = k;
                        }
                    }
                    if best.is_finite() {
                        return (best, idx);
                    }
                }
            }
        }
        argmax_dir(self.kernel.coords(), self.dim, w)
    }

    /// One-sided approximate support of the (optionally mapped) polytope:
    /// `h_S(v) - eps * width_v(S) * ||v|| <= value <= h_S(v)`.
    pub fn query_support(&self, v: &[f64], map: Option<&AffineMap>) -> Result<SupportAnswer> {
        self.check_query(v, map)?;
        let (value, kpos) = match map {
            None => self.scan(v),
            Some(t) => {
                let w = t.pullback_direction(v);
                if linalg::dot(&w, &w) <= 0.0 {
                    return Err(Error::SingularMap);
                }
                let (h, i) = self.scan(&w);
                (h + linalg::dot(t.translation(), v), i)
            }
        };
        let raw = self.kernel.point(kpos as usize);
        let witness = match map {
            None => Point {
                coords: raw.to_vec(),
            },
            Some(t) => Point {
                coords: t.apply(raw),
            },
        };
        Ok(SupportAnswer {
            value,
            witness,
            witness_index: self.kernel_indices[kpos as usize] as usize,
        })
    }

    /// Approximate directional width of the (optionally mapped) polytope,
    /// with the witness pair: `width >= (1 - eps) * width_v(map(S))`.
    pub fn query_width(&self, v: &[f64], map: Option<&AffineMap>) -> Result<WidthAnswer> {
        self.check_query(v, map)?;
        let w: Vec<f64> = match map {
            None => v.to_vec(),
            Some(t) => {
                let w = t.pullback_direction(v);
                if linalg::dot(&w, &w) <= 0.0 {
                    return Err(Error::SingularMap);
                }
                w
            }
        };
        let neg: Vec<f64> = w.iter().map(|x| -x).collect();
        let (_hu, iu) = self.scan(&w);
        let (_hl, il) = self.scan(&neg);
        let pu_raw = self.kernel.point(iu as usize);
        let pl_raw = self.kernel.point(il as usize);
        let (pu, pl) = match map {
            None => (pu_raw.to_vec(), pl_raw.to_vec()),
            Some(t) => (t.apply(pu_raw), t.apply(pl_raw)),
        };
        let diff = linalg::sub(&pu, &pl);
        let width = linalg::dot(&diff, v) / linalg::norm(v);
        Ok(WidthAnswer {
            width,
            upper: Point { coords: pu },
            lower: Point { coords: pl },
            upper_index: self.kernel_indices[iu as usize] as usize,
            lower_index: self.kernel_indices[il as usize] as usize,
        })
    }
}

/// Approximate width of the Minkowski sum of two indexed polytopes (with
/// optional affine maps; `negate_b` queries the reflection of B through the
/// origin). Directional widths of a sum are the sums of directional widths.
pub fn sum_width(
    a: &WidthIndex,
    b: &WidthIndex,
    v: &[f64],
    map_a: Option<&AffineMap>,
    map_b: Option<&AffineMap>,
    negate_b: bool,
) -> Result<(f64, WidthAnswer, WidthAnswer)> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    let wa = a.query_width(v, map_a)?;
    let wb = if negate_b {
        let neg: Vec<f64> = v.iter().map(|x| -x).collect();
        b.query_width(&neg, map_b)?
    } else {
        b.query_width(v, map_b)?
    };
    Ok((wa.width + wb.width, wa, wb))
}
