//! Deterministic direction nets: a uniform grid on each facet of the cube
//! [-1,1]^d, centrally projected to the unit sphere. Central projection from
//! the cube contracts distances, so a facet grid of spacing
//! `2*delta/sqrt(d-1)` covers the sphere with radius `delta`.

use crate::error::{Error, Result};
use std::collections::HashMap;

/// Hard cap on net size; protects against eps values far below the intended
/// operating range in higher dimensions.
const MAX_DIRECTIONS: usize = 8_000_000;

#[derive(Debug, Clone)]
pub struct DirectionNet {
    dim: usize,
    /// Unit directions, flat n x d.
    dirs: Vec<f64>,
    /// Grid nodes per facet axis.
    m: usize,
    /// Facet grid spacing.
    spacing: f64,
    /// Covering radius on the sphere.
    resolution: f64,
    /// For each (facet, node) enumeration position, the deduplicated
    /// direction index.
    node_dir: Vec<u32>,
}

impl DirectionNet {
    /// Net with covering radius `delta` on the unit sphere.
    pub fn new(dim: usize, delta: f64) -> Result<DirectionNet> {
        if !(delta > 0.0) || !delta.is_finite() {
            return Err(Error::InvalidParameter("net resolution must be > 0".into()));
        }
        let spread = ((dim - 1) as f64).sqrt().max(1.0);
        Self::from_facet_spacing(dim, (2.0 * delta / spread).min(2.0))
            .map(|mut net| {
                net.resolution = delta;
                net
            })
    }

    /// Net from an explicit facet grid spacing in (0, 2].
    pub fn from_facet_spacing(dim: usize, spacing: f64) -> Result<DirectionNet> {
        crate::geom::check_dim(dim)?;
        let m = (2.0 / spacing).ceil() as usize + 1;
        let per_facet = (m as u128).pow((dim - 1) as u32);
        let total = per_facet.saturating_mul(2 * dim as u128);
        if total > MAX_DIRECTIONS as u128 {
            return Err(Error::InvalidParameter(format!(
                "direction net of {} points exceeds the supported size; increase eps",
                total
            )));
        }
        let g = 2.0 / (m - 1) as f64;
        // centered parameterization (k - (m-1)/2) * g makes mirrored nodes
        // exact bitwise negations, so the net is exactly symmetric under
        // direction negation
        let half = (m - 1) as f64 / 2.0;
        let mut dirs: Vec<f64> = Vec::new();
        let mut node_dir: Vec<u32> = Vec::with_capacity(total as usize);
        let mut seen: HashMap<Vec<u64>, u32> = HashMap::new();
        let mut node = vec![0usize; dim - 1];
        let mut point = vec![0.0f64; dim];
        for axis in 0..dim {
            for &sign in &[1.0f64, -1.0] {
                // enumerate the (d-1)-dim grid in lexicographic order
                node.iter_mut().for_each(|x| *x = 0);
                loop {
                    point[axis] = sign;
                    let mut k = 0;
                    for j in 0..dim {
                        if j == axis {
                            continue;
                        }
                        point[j] = (node[k] as f64 - half) * g;
                        k += 1;
                    }
                    let inv = 1.0
                        / point
                            .iter()
                            .map(|x| x * x)
                            .sum::<f64>()
                            .sqrt();
                    let unit: Vec<f64> = point.iter().map(|x| x * inv).collect();
                    let key: Vec<u64> = unit.iter().map(|x| x.to_bits()).collect();
                    let idx = match seen.get(&key) {
                        Some(&i) => i,
                        None => {
                            let i = (dirs.len() / dim) as u32;
                            dirs.extend_from_slice(&unit);
                            seen.insert(key, i);
                            i
                        }
                    };
                    node_dir.push(idx);
                    // advance multi-index
                    let mut carry = true;
                    for slot in node.iter_mut() {
                        if *slot + 1 < m {
                            *slot += 1;
                            carry = false;
                            break;
                        }
                        *slot = 0;
                    }
                    if carry {
                        break;
                    }
                }
            }
        }
        let spread = ((dim - 1) as f64).sqrt().max(1.0);
        Ok(DirectionNet {
            dim,
            dirs,
            m,
            spacing: g,
            resolution: 0.5 * g * spread,
            node_dir,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.dirs.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn resolution(&self) -> f64 {
        self.resolution
    }

    pub fn direction(&self, i: usize) -> &[f64] {
        &self.dirs[i * self.dim..(i + 1) * self.dim]
    }

    pub fn directions(&self) -> impl Iterator<Item = &[f64]> {
        self.dirs.chunks_exact(self.dim)
    }

    pub fn nodes_per_axis(&self) -> usize {
        self.m
    }

    /// Deduplicated direction index for an enumeration node.
    pub fn node_direction(&self, node: usize) -> u32 {
        self.node_dir[node]
    }

    pub fn node_count(&self) -> usize {
        self.node_dir.len()
    }

    /// Grid cell of an arbitrary direction: facet id and the base node of the
    /// cell containing its central projection. The corners of this cell are
    /// within one grid cell of the direction's projection, so the nearest net
    /// node is always among them.
    pub fn locate(&self, v: &[f64]) -> Cell {
        let d = self.dim;
        let mut axis = 0usize;
        for j in 1..d {
            if v[j].abs() > v[axis].abs() {
                axis = j;
            }
        }
        let positive = v[axis] >= 0.0;
        let scale = 1.0 / v[axis].abs();
        let half = (self.m - 1) as f64 / 2.0;
        let mut cell = [0usize; 8];
        let mut k = 0;
        for j in 0..d {
            if j == axis {
                continue;
            }
            let x = v[j] * scale;
            let t = (x / self.spacing + half).floor();
            let c = if t < 0.0 {
                0
            } else {
                (t as usize).min(self.m.saturating_sub(2))
            };
            cell[k] = c;
            k += 1;
        }
        Cell {
            facet: (axis * 2 + usize::from(!positive)) as u8,
            coords: cell,
        }
    }

    /// Enumeration node index of a facet grid node.
    pub fn node_index(&self, facet: u8, coords: &[usize]) -> usize {
        let per_facet = self.m.pow((self.dim - 1) as u32);
        let mut idx = 0usize;
        // lexicographic enumeration advanced the first coordinate fastest
        for (k, &c) in coords.iter().enumerate().take(self.dim - 1) {
            idx += c * self.m.pow(k as u32);
        }
        facet as usize * per_facet + idx
    }
}

/// Facet grid cell identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub facet: u8,
    pub coords: [usize; 8],
}

impl Cell {
    /// Corner nodes of the cell (2^(d-1) of them).
    pub fn corners(&self, dim: usize, m: usize) -> Vec<Vec<usize>> {
        let k = dim - 1;
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0..(1usize << k) {
            let mut c = Vec::with_capacity(k);
            for j in 0..k {
                let base = self.coords[j];
                let add = (mask >> j) & 1;
                c.push((base + add).min(m - 1));
            }
            out.push(c);
        }
        out
    }

    pub fn key(&self, dim: usize) -> u64 {
        let mut key = self.facet as u64;
        for j in 0..dim - 1 {
            key = key.wrapping_mul(0x1_0000).wrapping_add(self.coords[j] as u64 + 1);
        }
        key
    }
}
