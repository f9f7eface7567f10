//! The acceptance suite: every contract of the toolkit exercised at its
//! stated tolerance against the exact oracles in this crate. Each criterion
//! returns an exact check/violation count and a pass flag; `run_all` strings
//! them together for the integration test and the CLI selftest.

use std::collections::BTreeMap;
use std::time::Instant;

use polyapprox::exec;
use polyapprox::geom::PointPolytope;
use polyapprox::linprog::{halfspace_support, LpStatus};
use polyapprox::minimize::{eval_budget_1d, minimize_nd, NoisyObjective};
use polyapprox::minkowski::{
    approx_width, convert_representation, dudley, Representation, SphereNet, DUDLEY_CONSTANT,
};
use polyapprox::width_index::{WidthIndex, CALIBRATION};
use polyapprox::{thickness, Point, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gen::{generate, generate_pair, InstanceKind, InstanceSpec, PairCertificate};
use crate::gridmin::grid_min;
use crate::minkexact::pairwise_minkowski_exact;
use crate::report::{CriterionResult, OracleReport};
use crate::scan::{dense_width_oracle, width_scan};
use crate::simplex::{lp_intersect_exact, LpVerdict};

fn random_unit(r: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| r.gen_range(-1.0..1.0)).collect();
        let n: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 {
            return v.iter().map(|x| x / n).collect();
        }
    }
}

fn result(
    id: u32,
    name: &str,
    checks: u64,
    violations: u64,
    constants: BTreeMap<String, f64>,
    details: String,
    started: Instant,
    cap_seconds: Option<f64>,
) -> CriterionResult {
    let seconds = started.elapsed().as_secs_f64();
    let in_time = cap_seconds.map(|cap| seconds <= cap).unwrap_or(true);
    CriterionResult {
        id,
        name: name.to_string(),
        passed: violations == 0 && in_time && checks > 0,
        checks,
        violations,
        constants,
        details: if in_time {
            details
        } else {
            format!("{details}; RUNTIME {seconds:.1}s exceeded cap")
        },
        seconds,
    }
}

/// Criterion 1: width-query contract. For d in {2,3,4}, a batch of instances
/// (n up to 2*10^4), eps in {0.2, 0.05, 0.01}, 1000 random directions each:
/// query_width >= (1 - eps) * scan width, zero violations, within 5 minutes.
pub fn criterion_1(quick: bool) -> CriterionResult {
    let started = Instant::now();
    let eps_grid = [0.2, 0.05, 0.01];
    let sizes_full: [usize; 20] = [
        20_000, 10_000, 5_000, 2_500, 2_000, 1_500, 1_200, 1_000, 900, 800, 700, 600, 500, 400,
        300, 250, 200, 150, 100, 60,
    ];
    let sizes_quick: [usize; 4] = [2_000, 800, 300, 100];
    let kinds = [
        InstanceKind::SphereShell,
        InstanceKind::RandomHull,
        InstanceKind::RotatedBox,
        InstanceKind::Simplex,
    ];
    let dirs_per = if quick { 200 } else { 1000 };
    let mut checks = 0u64;
    let mut violations = 0u64;
    let mut kernel_constant: f64 = 0.0;
    for d in [2usize, 3, 4] {
        let sizes: &[usize] = if quick { &sizes_quick } else { &sizes_full };
        for (i, &n) in sizes.iter().enumerate() {
            let inst = generate(&InstanceSpec {
                kind: kinds[i % kinds.len()],
                dim: d,
                n,
                seed: 1000 + i as u64,
                margin: None,
                eps: None,
            });
            let s = &inst.polytope;
            for &eps in &eps_grid {
                let idx = match WidthIndex::build(s, eps) {
                    Ok(idx) => idx,
                    Err(e) => panic!("build failed (d={d}, n={n}, eps={eps}): {e}"),
                };
                kernel_constant = kernel_constant
                    .max(idx.kernel_size() as f64 * eps.powf((d as f64 - 1.0) / 2.0));
                let mut rng = ChaCha8Rng::seed_from_u64(77 * d as u64 + i as u64);
                let dirs: Vec<Vec<f64>> =
                    (0..dirs_per).map(|_| random_unit(&mut rng, d)).collect();
                let bad: u64 = exec::map_range(dirs.len(), |k| {
                    let v = &dirs[k];
                    let q = idx.query_width(v, None).expect("query").width;
                    let exact = width_scan(s, v);
                    u64::from(q < (1.0 - eps) * exact)
                })
                .into_iter()
                .sum();
                checks += dirs_per as u64;
                violations += bad;
            }
        }
    }
    let mut constants = BTreeMap::new();
    constants.insert("kernel_size_constant".into(), kernel_constant);
    result(
        1,
        "width-query contract",
        checks,
        violations,
        constants,
        String::new(),
        started,
        Some(300.0),
    )
}

/// Criterion 2: kernel-size scaling on d=2 circle shells; the log-log slope
/// of |Q| against 1/eps over {0.04, 0.01, 0.0025} must land in [0.3, 0.7].
pub fn criterion_2(quick: bool) -> CriterionResult {
    let started = Instant::now();
    let eps_grid = [0.04, 0.01, 0.0025];
    let shells = if quick { 2 } else { 5 };
    // a dense shell keeps the kernel from saturating against the hull at
    // the smallest eps, which would flatten the measured slope
    let n = 20_000;
    let mut checks = 0u64;
    let mut violations = 0u64;
    let mut slopes = Vec::new();
    for seed in 0..shells {
        let inst = generate(&InstanceSpec {
            kind: InstanceKind::SphereShell,
            dim: 2,
            n,
            seed: 500 + seed,
            margin: None,
            eps: None,
        });
        let sizes: Vec<f64> = eps_grid
            .iter()
            .map(|&e| WidthIndex::build(&inst.polytope, e).expect("build").kernel_size() as f64)
            .collect();
        let xs: Vec<f64> = eps_grid.iter().map(|e| (1.0 / e).ln()).collect();
        let ys: Vec<f64> = sizes.iter().map(|s| s.ln()).collect();
        let xm = xs.iter().sum::<f64>() / xs.len() as f64;
        let ym = ys.iter().sum::<f64>() / ys.len() as f64;
        let slope = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (x - xm) * (y - ym))
            .sum::<f64>()
            / xs.iter().map(|x| (x - xm) * (x - xm)).sum::<f64>();
        checks += 1;
        if !(0.3..=0.7).contains(&slope) {
            violations += 1;
        }
        slopes.push(slope);
    }
    let mean = slopes.iter().sum::<f64>() / slopes.len() as f64;
    let mut constants = BTreeMap::new();
    constants.insert("mean_loglog_slope".into(), mean);
    result(
        2,
        "kernel-size scaling",
        checks,
        violations,
        constants,
        format!("slopes {:?}", slopes.iter().map(|s| (s * 1e3).round() / 1e3).collect::<Vec<_>>()),
        started,
        None,
    )
}

/// Criterion 3: exact identities. Width additivity over explicit pairwise
/// sums and the dual thickness identity, both to 1e-9 relative on 1000
/// random instances each.
pub fn criterion_3(quick: bool) -> CriterionResult {
    let started = Instant::now();
    let instances = if quick { 200 } else { 1000 };
    let mut checks = 0u64;
    let mut violations = 0u64;
    let mut rng = ChaCha8Rng::seed_from_u64(33);

    for _ in 0..instances {
        let d = rng.gen_range(2..=4);
        let na = rng.gen_range(2..=12);
        let nb = rng.gen_range(2..=12);
        let pa: Vec<Vec<f64>> = (0..na)
            .map(|_| (0..d).map(|_| rng.gen_range(-3.0..3.0)).collect())
            .collect();
        let pb: Vec<Vec<f64>> = (0..nb)
            .map(|_| (0..d).map(|_| rng.gen_range(-3.0..3.0)).collect())
            .collect();
        let a = PointPolytope::from_points(&pa).unwrap();
        let b = PointPolytope::from_points(&pb).unwrap();
        let sum = pairwise_minkowski_exact(&a, &b).expect("small product");
        let v = random_unit(&mut rng, d);
        let lhs = width_scan(&sum, &v);
        let rhs = width_scan(&a, &v) + width_scan(&b, &v);
        checks += 1;
        if (lhs - rhs).abs() > 1e-9 * lhs.abs().max(1.0) {
            violations += 1;
        }
    }

    for _ in 0..instances {
        let d = rng.gen_range(2..=5);
        let p = Point::new((0..d).map(|_| rng.gen_range(-4.0..4.0)).collect()).unwrap();
        let q = Point::new((0..d).map(|_| rng.gen_range(-4.0..4.0)).collect()).unwrap();
        let r: Vec<f64> = (0..d - 1).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let mut v = r.clone();
        v.push(-1.0);
        let lhs = thickness(&p, &q, &r);
        let pq = PointPolytope::from_points(&[p.coords.clone(), q.coords.clone()]).unwrap();
        let rhs = v.iter().map(|x| x * x).sum::<f64>().sqrt() * width_scan(&pq, &v);
        checks += 1;
        if (lhs - rhs).abs() > 1e-9 * rhs.abs().max(1e-9) {
            violations += 1;
        }
    }
    result(
        3,
        "exact width/thickness identities",
        checks,
        violations,
        BTreeMap::new(),
        String::new(),
        started,
        None,
    )
}

fn noise_sign(x: &[f64]) -> f64 {
    let mut h = 0xcbf29ce484222325u64;
    for v in x {
        h ^= v.to_bits();
        h = h.wrapping_mul(0x100000001b3);
    }
    if h & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Criterion 4: convex minimization under adversarial bounded noise.
/// 200 synthetic convex objectives per k in {1,2,3}: the found value exceeds
/// the grid minimum by at most 8k * eps and evaluation counts respect the
/// trisection budget.
pub fn criterion_4(quick: bool) -> CriterionResult {
    let started = Instant::now();
    let per_k = if quick { 40 } else { 200 };
    let mut checks = 0u64;
    let mut violations = 0u64;
    let mut worst_ratio: f64 = 0.0;
    for k in [1usize, 2, 3] {
        let eps_grid: &[f64] = match k {
            1 => &[1e-2, 1e-3, 1e-4],
            2 => &[1e-2, 5e-3, 1e-3],
            _ => &[1e-2, 5e-3],
        };
        let outcomes: Vec<(bool, bool, f64)> = exec::map_range(per_k, |i| {
            let mut rng = ChaCha8Rng::seed_from_u64(4000 + (k * 1000 + i) as u64);
            let eps = eps_grid[i % eps_grid.len()];
            let (a, b) = if i % 3 == 0 { (-1.0, 2.0) } else { (0.0, 1.0) };
            let span = b - a;
            // convex objective zoo, slope bounded by 1 on the box
            let centers: Vec<f64> = (0..k).map(|_| rng.gen_range(a..b)).collect();
            let scales: Vec<f64> = (0..k).map(|_| rng.gen_range(0.1..(0.9 / span))).collect();
            let shape = i % 3;
            let truth = {
                let (c, s) = (centers.clone(), scales.clone());
                move |x: &[f64]| -> f64 {
                    match shape {
                        0 => x
                            .iter()
                            .enumerate()
                            .map(|(j, xi)| s[j] * (xi - c[j]) * (xi - c[j]))
                            .sum(),
                        1 => x
                            .iter()
                            .enumerate()
                            .map(|(j, xi)| s[j] * (xi - c[j]).abs())
                            .sum(),
                        _ => x
                            .iter()
                            .enumerate()
                            .map(|(j, xi)| (s[j] * (xi - c[j])).max(2.0 * s[j] * (xi - c[j])))
                            .sum(),
                    }
                }
            };
            // adversarial deterministic noise patterns
            let pattern = i % 4;
            let noisy = {
                let t = truth.clone();
                let c0 = centers[0];
                move |x: &[f64]| -> f64 {
                    let sgn = match pattern {
                        0 => noise_sign(x),
                        1 => {
                            if x[0] < c0 {
                                1.0
                            } else {
                                -1.0
                            }
                        }
                        2 => -noise_sign(x),
                        _ => 0.0,
                    };
                    t(x) + eps * sgn
                }
            };
            let obj = NoisyObjective::new(k, eps, noisy).with_slope_bound(1.0);
            let res = minimize_nd(&obj, a, b, eps).expect("minimize");
            let step = eps.max(span / 4000.0);
            let oracle = grid_min(&truth, k, a, b, step);
            let excess = truth(&res.argmin) - oracle;
            let bound = 8.0 * k as f64 * eps;
            let budget = eval_budget_1d(a, b, eps).pow(k as u32);
            (
                excess <= bound + 1e-9,
                res.evaluations <= budget,
                excess / bound,
            )
        });
        for (ok_val, ok_count, ratio) in outcomes {
            checks += 2;
            if !ok_val {
                violations += 1;
            }
            if !ok_count {
                violations += 1;
            }
            worst_ratio = worst_ratio.max(ratio);
        }
    }
    let mut constants = BTreeMap::new();
    constants.insert("worst_excess_over_bound".into(), worst_ratio);
    result(
        4,
        "noisy convex minimization",
        checks,
        violations,
        constants,
        String::new(),
        started,
        None,
    )
}

/// Criterion 5: intersection soundness. Certified pairs per d in {2,3}:
/// verdicts match the certificates and the LP oracle with zero violations;
/// hairline pairs neither error nor wobble across repeat runs.
pub fn criterion_5(quick: bool) -> CriterionResult {
    let started = Instant::now();
    let per_d = if quick { 60 } else { 500 };
    let eps = 0.05;
    let mut checks = 0u64;
    let mut violations = 0u64;
    for d in [2usize, 3] {
        let outcomes: Vec<(u64, u64)> = exec::map_range(per_d, |i| {
            let margin = match i % 5 {
                0 | 1 => Some(-1.0),
                2 | 3 => Some(1.3 + 2.7 * (i as f64 % 7.0) / 7.0),
                _ => Some(0.5),
            };
            let spec = InstanceSpec {
                kind: InstanceKind::NearTouchingPair,
                dim: d,
                n: 10 + i % 40,
                seed: (d * 10_000 + i) as u64,
                margin,
                eps: Some(eps),
            };
            let pair = generate_pair(&spec);
            let ia = WidthIndex::build(&pair.a, eps / CALIBRATION).expect("build a");
            let ib = WidthIndex::build(&pair.b, eps / CALIBRATION).expect("build b");
            let ans = polyapprox::approx_intersect(&ia, &ib, None, None, eps).expect("intersect");
            let lp = lp_intersect_exact(&pair.a, &pair.b, spec.seed).expect("lp oracle");
            let mut checks = 0u64;
            let mut violations = 0u64;
            match &pair.certificate {
                PairCertificate::Intersecting { .. } => {
                    checks += 2;
                    if ans.verdict != Verdict::Intersecting {
                        violations += 1;
                    }
                    if lp != LpVerdict::Intersecting {
                        violations += 1;
                    }
                }
                PairCertificate::Separated { .. } => {
                    checks += 2;
                    if ans.verdict != Verdict::Disjoint {
                        violations += 1;
                    }
                    if lp != LpVerdict::Disjoint {
                        violations += 1;
                    }
                }
                PairCertificate::NearTouch { .. } => {
                    // either verdict accepted; must repeat identically
                    checks += 1;
                    let again =
                        polyapprox::approx_intersect(&ia, &ib, None, None, eps).expect("repeat");
                    if again.verdict != ans.verdict
                        || again.envelope_min.map(f64::to_bits)
                            != ans.envelope_min.map(f64::to_bits)
                    {
                        violations += 1;
                    }
                }
            }
            (checks, violations)
        });
        for (c, v) in outcomes {
            checks += c;
            violations += v;
        }
    }
    result(
        5,
        "intersection soundness vs certificates and LP oracle",
        checks,
        violations,
        BTreeMap::new(),
        String::new(),
        started,
        Some(600.0),
    )
}

/// Criterion 6: Minkowski sandwich. Random pairs in d in {2,3} at eps=0.05:
/// every pairwise-sum vertex lies inside the Dudley output, directional
/// widths stay within (1 + 4 eps) of exact on 1000 directions, and the
/// output size respects the net bound.
pub fn criterion_6(quick: bool) -> CriterionResult {
    let started = Instant::now();
    let eps = 0.05;
    let per_d = if quick { 4 } else { 25 };
    let dirs_per = if quick { 200 } else { 1000 };
    let mut checks = 0u64;
    let mut violations = 0u64;
    let mut size_constant: f64 = 0.0;
    for d in [2usize, 3] {
        let net_cap = SphereNet::new(d, eps, DUDLEY_CONSTANT).expect("net").len();
        let outcomes: Vec<(u64, u64, usize)> = exec::map_range(per_d, |i| {
            let mut rng = ChaCha8Rng::seed_from_u64((60_000 + d * 1000 + i) as u64);
            let n_a = rng.gen_range(4..=50);
            let n_b = rng.gen_range(4..=50);
            let a = generate(&InstanceSpec {
                kind: InstanceKind::RandomHull,
                dim: d,
                n: n_a,
                seed: (d * 445 + i) as u64,
                margin: None,
                eps: None,
            })
            .polytope;
            let b = generate(&InstanceSpec {
                kind: InstanceKind::RandomHull,
                dim: d,
                n: n_b,
                seed: (d * 777 + i + 100) as u64,
                margin: None,
                eps: None,
            })
            .polytope;
            let ia = WidthIndex::build(&a, eps / CALIBRATION).expect("build");
            let ib = WidthIndex::build(&b, eps / CALIBRATION).expect("build");
            let h = dudley(&ia, &ib, eps).expect("dudley");
            let exact = pairwise_minkowski_exact(&a, &b).expect("small pair");
            let mut checks = 0u64;
            let mut violations = 0u64;
            // containment of every exact vertex, raw halfspace test
            for pi in 0..exact.len() {
                checks += 1;
                if !h.contains(exact.point(pi)) {
                    violations += 1;
                }
            }
            // width bound on sampled directions via LP support
            let normals: Vec<Vec<f64>> =
                h.halfspaces.iter().map(|p| p.normal.clone()).collect();
            let offsets: Vec<f64> = h.halfspaces.iter().map(|p| p.offset).collect();
            for _ in 0..dirs_per {
                let v = random_unit(&mut rng, d);
                let neg: Vec<f64> = v.iter().map(|x| -x).collect();
                let up = match halfspace_support(&normals, &offsets, &v).expect("lp") {
                    LpStatus::Optimal { objective, .. } => objective,
                    _ => f64::INFINITY,
                };
                let dn = match halfspace_support(&normals, &offsets, &neg).expect("lp") {
                    LpStatus::Optimal { objective, .. } => objective,
                    _ => f64::INFINITY,
                };
                let w_out = up + dn;
                let w_exact = width_scan(&exact, &v);
                checks += 1;
                if w_out > (1.0 + 4.0 * eps) * w_exact + 1e-9 {
                    violations += 1;
                }
            }
            // size bound
            checks += 1;
            if h.len() > net_cap {
                violations += 1;
            }
            (checks, violations, h.len())
        });
        for (c, v, size) in outcomes {
            checks += c;
            violations += v;
            size_constant =
                size_constant.max(size as f64 * eps.powf((d as f64 - 1.0) / 2.0));
        }
    }
    let mut constants = BTreeMap::new();
    constants.insert("output_size_constant".into(), size_constant);
    result(
        6,
        "Minkowski sum sandwich (Dudley)",
        checks,
        violations,
        constants,
        String::new(),
        started,
        None,
    )
}

/// Criterion 7: width end-to-end. Rotated boxes and simplices with analytic
/// widths in d in {2,3} at eps=0.05 land within 4 eps relative; random hulls
/// are bracketed by the dense-direction oracle in the same band.
pub fn criterion_7(quick: bool) -> CriterionResult {
    let started = Instant::now();
    let eps = 0.05;
    let band = 4.0 * eps;
    let per_kind = if quick { 2 } else { 10 };
    let hulls = if quick { 2 } else { 6 };
    let mut checks = 0u64;
    let mut violations = 0u64;
    let mut worst: f64 = 0.0;
    for d in [2usize, 3] {
        let mut jobs: Vec<InstanceSpec> = Vec::new();
        for i in 0..per_kind {
            jobs.push(InstanceSpec {
                kind: InstanceKind::RotatedBox,
                dim: d,
                n: 1 << d,
                seed: (d * 31 + i) as u64,
                margin: None,
                eps: None,
            });
            jobs.push(InstanceSpec {
                kind: InstanceKind::Simplex,
                dim: d,
                n: d + 1,
                seed: (d * 97 + i) as u64,
                margin: None,
                eps: None,
            });
        }
        for i in 0..hulls {
            jobs.push(InstanceSpec {
                kind: InstanceKind::RandomHull,
                dim: d,
                n: 60 + 80 * i,
                seed: (d * 203 + i) as u64,
                margin: None,
                eps: None,
            });
        }
        let outcomes: Vec<(bool, f64)> = exec::map_range(jobs.len(), |j| {
            let inst = generate(&jobs[j]);
            let est = approx_width(&inst.polytope, eps).expect("width");
            let reference = match inst.true_width {
                Some(t) => t,
                None => dense_width_oracle(&inst.polytope, eps.sqrt() / 10.0),
            };
            let rel = (est.width - reference).abs() / reference;
            (rel <= band, rel)
        });
        for (ok, rel) in outcomes {
            checks += 1;
            if !ok {
                violations += 1;
            }
            worst = worst.max(rel);
        }
    }
    let mut constants = BTreeMap::new();
    constants.insert("worst_relative_error".into(), worst);
    result(
        7,
        "width end-to-end",
        checks,
        violations,
        constants,
        String::new(),
        started,
        Some(300.0),
    )
}

/// Criterion 8: representation conversion. Point -> halfspace -> point round
/// trips preserve 1000 sampled directional widths within (1 + 4 eps)^2.
pub fn criterion_8(quick: bool) -> CriterionResult {
    let started = Instant::now();
    let eps = 0.05;
    let band = (1.0 + 4.0 * eps) * (1.0 + 4.0 * eps);
    let dirs_per = if quick { 200 } else { 1000 };
    let per_d = if quick { 2 } else { 5 };
    let mut checks = 0u64;
    let mut violations = 0u64;
    for d in [2usize, 3] {
        let mut jobs: Vec<InstanceSpec> = Vec::new();
        for i in 0..per_d {
            jobs.push(InstanceSpec {
                kind: InstanceKind::RandomHull,
                dim: d,
                n: 20 + 8 * i,
                seed: (d * 11 + i) as u64,
                margin: None,
                eps: None,
            });
        }
        jobs.push(InstanceSpec {
            kind: InstanceKind::RotatedBox,
            dim: d,
            n: 1 << d,
            seed: 5 + d as u64,
            margin: None,
            eps: None,
        });
        jobs.push(InstanceSpec {
            kind: InstanceKind::Simplex,
            dim: d,
            n: d + 1,
            seed: 6 + d as u64,
            margin: None,
            eps: None,
        });
        let outcomes: Vec<(u64, u64)> = exec::map_range(jobs.len(), |j| {
            let inst = generate(&jobs[j]);
            let s = &inst.polytope;
            let h = match convert_representation(&Representation::Points(s.clone()), eps)
                .expect("to halfspaces")
            {
                Representation::Halfspaces(h) => h,
                _ => unreachable!(),
            };
            let p2 = match convert_representation(&Representation::Halfspaces(h), eps)
                .expect("back to points")
            {
                Representation::Points(p) => p,
                _ => unreachable!(),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(800 + j as u64);
            let mut checks = 0u64;
            let mut violations = 0u64;
            for _ in 0..dirs_per {
                let v = random_unit(&mut rng, d);
                let orig = width_scan(s, &v);
                let round = width_scan(&p2, &v);
                checks += 1;
                if round > band * orig + 1e-9 || round < orig / band - 1e-9 {
                    violations += 1;
                }
            }
            (checks, violations)
        });
        for (c, v) in outcomes {
            checks += c;
            violations += v;
        }
    }
    result(
        8,
        "representation conversion round trip",
        checks,
        violations,
        BTreeMap::new(),
        String::new(),
        started,
        None,
    )
}

/// Criteria 1 through 8 in order. Criterion 9 (byte-identical CLI output) is
/// exercised where a binary is available: the CLI selftest and the
/// acceptance integration test.
pub fn run_all(quick: bool) -> OracleReport {
    let criteria = vec![
        criterion_1(quick),
        criterion_2(quick),
        criterion_3(quick),
        criterion_4(quick),
        criterion_5(quick),
        criterion_6(quick),
        criterion_7(quick),
        criterion_8(quick),
    ];
    OracleReport::new(criteria)
}
