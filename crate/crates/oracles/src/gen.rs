//! Deterministic instance generators. Every pair instance carries a
//! certificate (a common witness point, or a separating direction with its
//! margin) that is verified by exact scans at generation time.

use polyapprox::geom::PointPolytope;
use polyapprox::linalg;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    SphereShell,
    RotatedBox,
    Simplex,
    RandomHull,
    NearTouchingPair,
}

impl std::str::FromStr for InstanceKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sphere-shell" => Ok(InstanceKind::SphereShell),
            "rotated-box" => Ok(InstanceKind::RotatedBox),
            "simplex" => Ok(InstanceKind::Simplex),
            "random-hull" => Ok(InstanceKind::RandomHull),
            "near-touching-pair" => Ok(InstanceKind::NearTouchingPair),
            other => Err(format!("unknown instance kind '{other}'")),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub kind: InstanceKind,
    pub dim: usize,
    pub n: usize,
    pub seed: u64,
    /// For pairs: separation margin in units of eps * max directional width
    /// along the separating direction. Nonpositive margins produce robustly
    /// intersecting pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
}

/// Generated single polytope with any analytic ground truth it carries.
#[derive(Debug, Clone)]
pub struct Instance {
    pub polytope: PointPolytope,
    /// Exact width for kinds with closed forms (rotated boxes; regular
    /// simplices in d = 2, 3).
    pub true_width: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PairCertificate {
    Intersecting { witness: Vec<f64> },
    Separated { direction: Vec<f64>, margin: f64 },
    NearTouch { direction: Vec<f64>, margin: f64 },
}

#[derive(Debug, Clone)]
pub struct PairInstance {
    pub a: PointPolytope,
    pub b: PointPolytope,
    pub certificate: PairCertificate,
}

fn rng_for(spec_kind: InstanceKind, seed: u64) -> ChaCha8Rng {
    let salt = match spec_kind {
        InstanceKind::SphereShell => 0x5348454c,
        InstanceKind::RotatedBox => 0x524f5442,
        InstanceKind::Simplex => 0x53494d50,
        InstanceKind::RandomHull => 0x48554c4c,
        InstanceKind::NearTouchingPair => 0x50414952,
    };
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

fn gaussian(r: &mut ChaCha8Rng) -> f64 {
    // Box-Muller on explicit uniforms keeps the stream stable across rand
    // versions
    let u1: f64 = r.gen_range(1e-12..1.0);
    let u2: f64 = r.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

fn random_unit(r: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| gaussian(r)).collect();
        if let Some(u) = linalg::normalize(&v) {
            return u;
        }
    }
}

/// Random rotation from QR-orthonormalization of a gaussian matrix
/// (Gram-Schmidt, deterministic).
fn random_rotation(r: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    loop {
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(d);
        let mut ok = true;
        for _ in 0..d {
            let mut v: Vec<f64> = (0..d).map(|_| gaussian(r)).collect();
            for prev in &rows {
                let t = linalg::dot(&v, prev);
                for j in 0..d {
                    v[j] -= t * prev[j];
                }
            }
            match linalg::normalize(&v) {
                Some(u) => rows.push(u),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return rows.concat();
        }
    }
}

pub fn generate(spec: &InstanceSpec) -> Instance {
    let mut r = rng_for(spec.kind, spec.seed);
    let d = spec.dim;
    let n = spec.n.max(1);
    match spec.kind {
        InstanceKind::SphereShell => {
            let radius = r.gen_range(0.5..2.0);
            let mut pts = Vec::with_capacity(n);
            for _ in 0..n {
                let u = random_unit(&mut r, d);
                let rho = radius * r.gen_range(0.95..1.0);
                pts.push(linalg::scale(&u, rho));
            }
            Instance {
                polytope: PointPolytope::from_points(&pts).unwrap(),
                true_width: None,
            }
        }
        InstanceKind::RotatedBox => {
            let extents: Vec<f64> = (0..d).map(|_| r.gen_range(0.2..2.0)).collect();
            let rot = random_rotation(&mut r, d);
            let shift: Vec<f64> = (0..d).map(|_| r.gen_range(-2.0..2.0)).collect();
            let mut pts = Vec::new();
            for mask in 0..(1usize << d) {
                let corner: Vec<f64> = (0..d)
                    .map(|j| if (mask >> j) & 1 == 1 { extents[j] } else { -extents[j] })
                    .collect();
                let mut p = linalg::mat_vec(&rot, &corner, d);
                for j in 0..d {
                    p[j] += shift[j];
                }
                pts.push(p);
            }
            while pts.len() < n {
                // convex fill keeps the hull (and the analytic width) intact
                let lam: Vec<f64> = (0..d).map(|_| r.gen_range(-0.9..0.9)).collect();
                let corner: Vec<f64> = (0..d).map(|j| extents[j] * lam[j]).collect();
                let mut p = linalg::mat_vec(&rot, &corner, d);
                for j in 0..d {
                    p[j] += shift[j];
                }
                pts.push(p);
            }
            let width = 2.0 * extents.iter().cloned().fold(f64::INFINITY, f64::min);
            Instance {
                polytope: PointPolytope::from_points(&pts).unwrap(),
                true_width: Some(width),
            }
        }
        InstanceKind::Simplex => {
            // regular simplex with unit edge, then scaled/rotated/translated
            let verts = regular_simplex(d);
            let scale = r.gen_range(0.5..2.0);
            let rot = random_rotation(&mut r, d);
            let shift: Vec<f64> = (0..d).map(|_| r.gen_range(-2.0..2.0)).collect();
            let mut pts: Vec<Vec<f64>> = verts
                .iter()
                .map(|v| {
                    let mut p = linalg::mat_vec(&rot, &linalg::scale(v, scale), d);
                    for j in 0..d {
                        p[j] += shift[j];
                    }
                    p
                })
                .collect();
            while pts.len() < n {
                // random convex combination of the vertices
                let mut w: Vec<f64> = (0..=d).map(|_| r.gen_range(0.0..1.0)).collect();
                let total: f64 = w.iter().sum();
                w.iter_mut().for_each(|x| *x /= total);
                let mut p = vec![0.0; d];
                for (k, v) in pts[..d + 1].iter().enumerate() {
                    for j in 0..d {
                        p[j] += w[k] * v[j];
                    }
                }
                pts.push(p);
            }
            // unit-edge regular simplex width: sqrt(3)/2 in d=2, 1/sqrt(2) in d=3
            let unit_width = match d {
                2 => Some(3.0f64.sqrt() / 2.0),
                3 => Some(1.0 / 2.0f64.sqrt()),
                _ => None,
            };
            Instance {
                polytope: PointPolytope::from_points(&pts).unwrap(),
                true_width: unit_width.map(|w| w * scale),
            }
        }
        InstanceKind::RandomHull => {
            let stretch: Vec<f64> = (0..d).map(|_| r.gen_range(0.5..1.7)).collect();
            let rot = random_rotation(&mut r, d);
            let shift: Vec<f64> = (0..d).map(|_| r.gen_range(-2.0..2.0)).collect();
            let mut pts = Vec::with_capacity(n);
            for _ in 0..n {
                let g: Vec<f64> = (0..d).map(|j| gaussian(&mut r) * stretch[j]).collect();
                let mut p = linalg::mat_vec(&rot, &g, d);
                for j in 0..d {
                    p[j] += shift[j];
                }
                pts.push(p);
            }
            Instance {
                polytope: PointPolytope::from_points(&pts).unwrap(),
                true_width: None,
            }
        }
        InstanceKind::NearTouchingPair => {
            panic!("pair kinds go through generate_pair")
        }
    }
}

/// Vertices of the regular simplex with unit edge length centered at the
/// origin.
fn regular_simplex(d: usize) -> Vec<Vec<f64>> {
    // embed e_1..e_{d+1} from R^{d+1}, center, and project onto a basis of
    // the spanned hyperplane; edges come out at sqrt(2), so rescale
    let m = d + 1;
    let mut raw: Vec<Vec<f64>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut v = vec![0.0; m];
        v[i] = 1.0;
        // center
        for x in v.iter_mut() {
            *x -= 1.0 / m as f64;
        }
        raw.push(v);
    }
    // orthonormal basis of the hyperplane sum x = 0 via Gram-Schmidt on
    // differences of coordinates
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(d);
    for i in 0..d {
        let mut v = vec![0.0; m];
        v[i] = 1.0;
        v[i + 1] = -1.0;
        for prev in &basis {
            let t = linalg::dot(&v, prev);
            for j in 0..m {
                v[j] -= t * prev[j];
            }
        }
        basis.push(linalg::normalize(&v).expect("independent differences"));
    }
    let scale = 1.0 / 2.0f64.sqrt(); // unit edges
    raw.iter()
        .map(|v| basis.iter().map(|b| linalg::dot(v, b) * scale).collect())
        .collect()
}

/// Certified pair instance. `margin <= 0` produces a robustly intersecting
/// pair sharing a deep witness point; `margin > 0` separates the hulls by
/// `margin * eps * max(width_u(A), width_u(B))` along a random direction `u`.
pub fn generate_pair(spec: &InstanceSpec) -> PairInstance {
    let mut r = rng_for(InstanceKind::NearTouchingPair, spec.seed);
    let d = spec.dim;
    let n = spec.n.max(d + 1);
    let eps = spec.eps.unwrap_or(0.05);
    let margin_units = spec.margin.unwrap_or(2.0);

    if margin_units <= 0.0 {
        // both hulls contain a ball around the witness
        let witness: Vec<f64> = (0..d).map(|_| r.gen_range(-2.0..2.0)).collect();
        let mk = |r: &mut ChaCha8Rng| -> PointPolytope {
            let radius = r.gen_range(0.5..1.5);
            let mut pts = Vec::new();
            for j in 0..d {
                for sgn in [1.0, -1.0] {
                    let mut p = witness.clone();
                    p[j] += sgn * radius;
                    pts.push(p);
                }
            }
            while pts.len() < n {
                let u = random_unit(r, d);
                let rho = r.gen_range(0.3..1.8);
                pts.push(linalg::add(&witness, &linalg::scale(&u, rho)));
            }
            PointPolytope::from_points(&pts).unwrap()
        };
        let a = mk(&mut r);
        let b = mk(&mut r);
        // verify: the witness is a convex combination in both (cross-polytope
        // center), by exact support: h(u) >= witness.u for sampled u
        debug_assert!(contains_by_support(&a, &witness));
        debug_assert!(contains_by_support(&b, &witness));
        return PairInstance {
            a,
            b,
            certificate: PairCertificate::Intersecting { witness },
        };
    }

    // separated or near-touching
    let mk_cloud = |r: &mut ChaCha8Rng| -> Vec<Vec<f64>> {
        let spread = r.gen_range(0.4..1.5);
        (0..n)
            .map(|_| (0..d).map(|_| gaussian(r) * spread).collect())
            .collect()
    };
    let pa = mk_cloud(&mut r);
    let pb = mk_cloud(&mut r);
    let a = PointPolytope::from_points(&pa).unwrap();
    let b0 = PointPolytope::from_points(&pb).unwrap();
    let u = random_unit(&mut r, d);
    let wa = crate::scan::width_scan(&a, &u);
    let wb = crate::scan::width_scan(&b0, &u);
    let gap = margin_units * eps * wa.max(wb);
    // place B so its minimum along u sits `gap` above A's maximum
    let (ha, _) = crate::scan::support_scan(&a, &u);
    let neg: Vec<f64> = u.iter().map(|x| -x).collect();
    let (hbneg, _) = crate::scan::support_scan(&b0, &neg);
    let min_b = -hbneg;
    let shift = linalg::scale(&u, ha + gap - min_b);
    let pb_shifted: Vec<Vec<f64>> = pb.iter().map(|p| linalg::add(p, &shift)).collect();
    let b = PointPolytope::from_points(&pb_shifted).unwrap();
    // verify the separation margin by exact scans
    let (ha2, _) = crate::scan::support_scan(&a, &u);
    let (hb2, _) = crate::scan::support_scan(&b, &neg);
    let sep = -hb2 - ha2;
    assert!(
        (sep - gap).abs() <= 1e-9 * (1.0 + gap.abs()),
        "separation certificate failed: {} vs {}",
        sep,
        gap
    );
    let certificate = if margin_units > 1.0 {
        PairCertificate::Separated {
            direction: u,
            margin: sep,
        }
    } else {
        PairCertificate::NearTouch {
            direction: u,
            margin: sep,
        }
    };
    PairInstance {
        a,
        b,
        certificate,
    }
}

fn contains_by_support(s: &PointPolytope, x: &[f64]) -> bool {
    // witness construction places axis points around x, so the support in
    // every +/- axis direction strictly exceeds the witness coordinate
    let d = s.dim();
    for j in 0..d {
        for sgn in [1.0f64, -1.0] {
            let mut v = vec![0.0; d];
            v[j] = sgn;
            let (h, _) = crate::scan::support_scan(s, &v);
            if h < x[j] * sgn {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        let spec = InstanceSpec {
            kind: InstanceKind::SphereShell,
            dim: 3,
            n: 50,
            seed: 42,
            margin: None,
            eps: None,
        };
        let a = generate(&spec);
        let b = generate(&spec);
        assert_eq!(a.polytope.coords(), b.polytope.coords());
    }

    #[test]
    fn rotated_box_width_is_exact() {
        // width minima of polytopes sit at kinks, so the net oracle
        // overestimates linearly in its resolution; it must still bracket
        // the analytic truth from above
        let delta = 0.02;
        for seed in 0..10 {
            let spec = InstanceSpec {
                kind: InstanceKind::RotatedBox,
                dim: 3,
                n: 8,
                seed,
                margin: None,
                eps: None,
            };
            let inst = generate(&spec);
            let truth = inst.true_width.unwrap();
            let dense = crate::scan::dense_width_oracle(&inst.polytope, delta);
            assert!(dense >= truth * (1.0 - 1e-9), "dense {} below truth {}", dense, truth);
            assert!(
                dense <= truth * (1.0 + 20.0 * delta),
                "dense {} far above truth {}",
                dense,
                truth
            );
        }
    }

    #[test]
    fn regular_simplex_has_unit_edges() {
        for d in 2..=4 {
            let v = regular_simplex(d);
            assert_eq!(v.len(), d + 1);
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    let e = linalg::norm(&linalg::sub(&v[i], &v[j]));
                    assert!((e - 1.0).abs() < 1e-12, "edge {}", e);
                }
            }
        }
    }

    #[test]
    fn simplex_width_matches_dense_oracle() {
        for d in [2usize, 3] {
            let spec = InstanceSpec {
                kind: InstanceKind::Simplex,
                dim: d,
                n: d + 1,
                seed: 9,
                margin: None,
                eps: None,
            };
            let inst = generate(&spec);
            let truth = inst.true_width.unwrap();
            let delta = 0.01;
            let dense = crate::scan::dense_width_oracle(&inst.polytope, delta);
            assert!(dense >= truth * (1.0 - 1e-9), "d={} dense {} below {}", d, dense, truth);
            assert!(
                dense <= truth * (1.0 + 20.0 * delta),
                "d={} dense {} far above {}",
                d,
                dense,
                truth
            );
        }
    }

    #[test]
    fn separated_pairs_verify_and_match_lp() {
        for seed in 0..20 {
            let spec = InstanceSpec {
                kind: InstanceKind::NearTouchingPair,
                dim: 2,
                n: 12,
                seed,
                margin: Some(2.0),
                eps: Some(0.05),
            };
            let pair = generate_pair(&spec);
            match &pair.certificate {
                PairCertificate::Separated { .. } => {}
                other => panic!("expected separated, got {:?}", other),
            }
            assert_eq!(
                crate::simplex::lp_intersect_exact(&pair.a, &pair.b, seed).unwrap(),
                crate::simplex::LpVerdict::Disjoint
            );
        }
    }

    #[test]
    fn intersecting_pairs_verify_and_match_lp() {
        for seed in 0..20 {
            let spec = InstanceSpec {
                kind: InstanceKind::NearTouchingPair,
                dim: 3,
                n: 14,
                seed,
                margin: Some(-1.0),
                eps: Some(0.05),
            };
            let pair = generate_pair(&spec);
            match &pair.certificate {
                PairCertificate::Intersecting { .. } => {}
                other => panic!("expected intersecting, got {:?}", other),
            }
            assert_eq!(
                crate::simplex::lp_intersect_exact(&pair.a, &pair.b, seed).unwrap(),
                crate::simplex::LpVerdict::Intersecting
            );
        }
    }
}
