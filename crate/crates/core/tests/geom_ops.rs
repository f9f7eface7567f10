use polyapprox::geom::*;
use polyapprox::{dual_hyperplane, dual_intercept, dual_point, dual_slopes, thickness};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Corners of [-1,1]^2 ordered so that ties along (1,0) resolve to (1,-1).
fn square() -> PointPolytope {
    PointPolytope::from_points(&[
        vec![-1.0, -1.0],
        vec![1.0, -1.0],
        vec![1.0, 1.0],
        vec![-1.0, 1.0],
    ])
    .unwrap()
}

/// Independent linear scan, coded separately from the library path.
fn scan_support(points: &[Vec<f64>], v: &[f64]) -> (f64, usize) {
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for (i, p) in points.iter().enumerate() {
        let h: f64 = p.iter().zip(v).map(|(a, b)| a * b).sum();
        if h > best {
            best = h;
            best_i = i;
        }
    }
    (best, best_i)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn support_square_ties_to_lowest_index() {
    let s = square();
    let sup = s.support(&[1.0, 0.0]).unwrap();
    assert_eq!(sup.value, 1.0);
    assert_eq!(sup.witness, 1);
    assert_eq!(s.point(sup.witness), &[1.0, -1.0]);
}

#[test]
fn support_single_point() {
    let s = PointPolytope::from_points(&[vec![5.0, 5.0]]).unwrap();
    for v in [[1.0, 0.0], [0.3, -0.7], [-2.0, 1.0]] {
        let sup = s.support(&v).unwrap();
        assert!((sup.value - (5.0 * v[0] + 5.0 * v[1])).abs() < 1e-12);
        assert_eq!(sup.witness, 0);
    }
}

#[test]
fn support_matches_independent_scan() {
    let mut r = rng(7);
    for d in 2..=4usize {
        let points: Vec<Vec<f64>> = (0..1000)
            .map(|_| (0..d).map(|_| r.gen_range(-5.0..5.0)).collect())
            .collect();
        let s = PointPolytope::from_points(&points).unwrap();
        for _ in 0..50 {
            let v: Vec<f64> = (0..d).map(|_| r.gen_range(-1.0..1.0)).collect();
            if v.iter().map(|x| x * x).sum::<f64>() < 1e-6 {
                continue;
            }
            let sup = s.support(&v).unwrap();
            let (h, i) = scan_support(&points, &v);
            assert_eq!(sup.value, h);
            assert_eq!(sup.witness, i);
        }
    }
}

#[test]
fn support_rejects_bad_directions() {
    let s = square();
    assert!(s.support(&[0.0, 0.0]).is_err());
    assert!(s.support(&[f64::NAN, 1.0]).is_err());
    assert!(s.support(&[f64::INFINITY, 0.0]).is_err());
}

#[test]
fn width_square() {
    let s = square();
    assert!((s.width_exact(&[1.0, 0.0]).unwrap() - 2.0).abs() < 1e-12);
    let w = s.width_exact(&[1.0, 1.0]).unwrap();
    assert!((w - 2.0 * 2.0f64.sqrt()).abs() < 1e-12);
}

#[test]
fn width_single_point_is_zero() {
    let s = PointPolytope::from_points(&[vec![5.0, 5.0]]).unwrap();
    assert_eq!(s.width_exact(&[0.3, 0.4]).unwrap(), 0.0);
}

#[test]
fn width_symmetry_and_scale_invariance() {
    let mut r = rng(11);
    for _ in 0..200 {
        let d = r.gen_range(2..=4);
        let points: Vec<Vec<f64>> = (0..12)
            .map(|_| (0..d).map(|_| r.gen_range(-3.0..3.0)).collect())
            .collect();
        let s = PointPolytope::from_points(&points).unwrap();
        let v: Vec<f64> = (0..d).map(|_| r.gen_range(-1.0..1.0)).collect();
        if v.iter().map(|x| x * x).sum::<f64>() < 1e-6 {
            continue;
        }
        let neg: Vec<f64> = v.iter().map(|x| -x).collect();
        let sc: Vec<f64> = v.iter().map(|x| 3.7 * x).collect();
        let w = s.width_exact(&v).unwrap();
        assert!((w - s.width_exact(&neg).unwrap()).abs() <= 1e-9 * w.max(1.0));
        assert!((w - s.width_exact(&sc).unwrap()).abs() <= 1e-9 * w.max(1.0));
    }
}

#[test]
fn width_additivity_over_pairwise_sums() {
    // width_v(A + B) = width_v(A) + width_v(B), on explicit pairwise sums
    let mut r = rng(13);
    for _ in 0..300 {
        let d = r.gen_range(2..=3);
        let a: Vec<Vec<f64>> = (0..r.gen_range(1..10))
            .map(|_| (0..d).map(|_| r.gen_range(-2.0..2.0)).collect())
            .collect();
        let b: Vec<Vec<f64>> = (0..r.gen_range(1..10))
            .map(|_| (0..d).map(|_| r.gen_range(-2.0..2.0)).collect())
            .collect();
        let mut sums = Vec::new();
        for p in &a {
            for q in &b {
                sums.push(p.iter().zip(q).map(|(x, y)| x + y).collect::<Vec<f64>>());
            }
        }
        let pa = PointPolytope::from_points(&a).unwrap();
        let pb = PointPolytope::from_points(&b).unwrap();
        let ps = PointPolytope::from_points(&sums).unwrap();
        let v: Vec<f64> = (0..d).map(|_| r.gen_range(-1.0..1.0)).collect();
        if v.iter().map(|x| x * x).sum::<f64>() < 1e-6 {
            continue;
        }
        let lhs = ps.width_exact(&v).unwrap();
        let rhs = pa.width_exact(&v).unwrap() + pb.width_exact(&v).unwrap();
        assert!((lhs - rhs).abs() <= 1e-9 * lhs.max(1.0));
    }
}

#[test]
fn slab_expand_examples() {
    let slab = Slab::new(vec![1.0, 0.0], 0.0, 2.0).unwrap();
    let e = slab.eps_expand(0.5).unwrap();
    assert_eq!((e.lo, e.hi), (-0.5, 2.5));
    let id = slab.eps_expand(0.0).unwrap();
    assert_eq!((id.lo, id.hi), (0.0, 2.0));
    assert!(slab.eps_expand(-0.1).is_err());
}

#[test]
fn slab_expand_scales_width() {
    let mut r = rng(17);
    for _ in 0..100 {
        let d = r.gen_range(2..=4);
        let v: Vec<f64> = (0..d).map(|_| r.gen_range(0.1..1.0)).collect();
        let lo = r.gen_range(-5.0..5.0);
        let hi = lo + r.gen_range(0.0..10.0);
        let eps = r.gen_range(0.0..2.0);
        let slab = Slab::new(v, lo, hi).unwrap();
        let e = slab.eps_expand(eps).unwrap();
        assert!((e.width() - (1.0 + eps) * slab.width()).abs() <= 1e-9 * slab.width().max(1e-12));
        // same center
        assert!(((e.lo + e.hi) - (slab.lo + slab.hi)).abs() <= 1e-9 * (slab.hi.abs() + 1.0));
    }
}

#[test]
fn dual_of_point_examples() {
    let h = dual_hyperplane(&Point::new(vec![2.0, 3.0]).unwrap());
    // line x2 = 2 x1 - 3
    assert_eq!(dual_slopes(&h).unwrap(), vec![2.0]);
    assert_eq!(dual_intercept(&h).unwrap(), -3.0);

    let h0 = dual_hyperplane(&Point::new(vec![0.0, 0.0]).unwrap());
    assert_eq!(dual_slopes(&h0).unwrap(), vec![0.0]);
    assert_eq!(dual_intercept(&h0).unwrap(), 0.0);
}

#[test]
fn dual_is_involution() {
    let mut r = rng(19);
    for _ in 0..200 {
        let d = r.gen_range(2..=5);
        let p = Point::new((0..d).map(|_| r.gen_range(-4.0..4.0)).collect()).unwrap();
        let back = dual_point(&dual_hyperplane(&p)).unwrap();
        for i in 0..d {
            assert!((back.coords[i] - p.coords[i]).abs() <= 1e-12 * (1.0 + p.coords[i].abs()));
        }
    }
}

#[test]
fn vertical_hyperplane_has_no_dual() {
    let h = Hyperplane::new(vec![1.0, 0.0], 2.0).unwrap();
    assert!(dual_point(&h).is_err());
}

#[test]
fn thickness_example() {
    let p = Point::new(vec![1.0, 2.0]).unwrap();
    let q = Point::new(vec![0.0, 0.0]).unwrap();
    let t = thickness(&p, &q, &[1.0]);
    assert!((t - 1.0).abs() < 1e-12);
    // cross-check the width form: v = (1, -1)
    let v = [1.0, -1.0];
    let s = PointPolytope::from_points(&[p.coords.clone(), q.coords.clone()]).unwrap();
    let w = s.width_exact(&v).unwrap();
    let vnorm = 2.0f64.sqrt();
    assert!((t - vnorm * w).abs() < 1e-12);
    assert_eq!(thickness(&p, &p, &[0.3]), 0.0);
}

#[test]
fn thickness_identity_random() {
    let mut r = rng(23);
    for _ in 0..1000 {
        let d = r.gen_range(2..=5);
        let p = Point::new((0..d).map(|_| r.gen_range(-4.0..4.0)).collect()).unwrap();
        let q = Point::new((0..d).map(|_| r.gen_range(-4.0..4.0)).collect()).unwrap();
        let rr: Vec<f64> = (0..d - 1).map(|_| r.gen_range(-2.0..2.0)).collect();
        let mut v = rr.clone();
        v.push(-1.0);
        let t = thickness(&p, &q, &rr);
        let s = PointPolytope::from_points(&[p.coords.clone(), q.coords.clone()]).unwrap();
        let rhs = v.iter().map(|x| x * x).sum::<f64>().sqrt() * s.width_exact(&v).unwrap();
        assert!((t - rhs).abs() <= 1e-9 * rhs.max(1e-9), "{} vs {}", t, rhs);
    }
}

#[test]
fn affine_identity_and_composition() {
    let id = AffineMap::identity(3);
    let v = [0.2, -0.4, 1.0];
    assert_eq!(id.pullback_direction(&v), v.to_vec());

    let mut r = rng(29);
    for _ in 0..100 {
        let d = r.gen_range(2..=4);
        let map = random_map(&mut r, d);
        let inv = map.inverse().unwrap();
        let both = map.compose(&inv).unwrap();
        let x: Vec<f64> = (0..d).map(|_| r.gen_range(-3.0..3.0)).collect();
        let y = both.apply(&x);
        for i in 0..d {
            assert!((y[i] - x[i]).abs() <= 1e-10 * (1.0 + x[i].abs()));
        }
    }
}

#[test]
fn affine_support_contract() {
    // support(T(S), v) = support(S, M^T v) + t . v
    let mut r = rng(31);
    for _ in 0..200 {
        let d = r.gen_range(2..=4);
        let points: Vec<Vec<f64>> = (0..20)
            .map(|_| (0..d).map(|_| r.gen_range(-3.0..3.0)).collect())
            .collect();
        let s = PointPolytope::from_points(&points).unwrap();
        let map = random_map(&mut r, d);
        let ts = s.transform(&map).unwrap();
        let v: Vec<f64> = (0..d).map(|_| r.gen_range(-1.0..1.0)).collect();
        if v.iter().map(|x| x * x).sum::<f64>() < 1e-6 {
            continue;
        }
        let lhs = ts.support(&v).unwrap().value;
        let pull = map.pullback_direction(&v);
        let rhs = s.support(&pull).unwrap().value
            + map
                .translation()
                .iter()
                .zip(&v)
                .map(|(a, b)| a * b)
                .sum::<f64>();
        assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs()));
    }
}

#[test]
fn affine_scale_doubles_width() {
    let s = square();
    let map = AffineMap::uniform_scale(2, 2.0).unwrap();
    let ts = s.transform(&map).unwrap();
    let v = [1.0, 0.0];
    assert!((ts.width_exact(&v).unwrap() - 2.0 * s.width_exact(&v).unwrap()).abs() < 1e-12);
}

#[test]
fn singular_map_rejected() {
    assert!(AffineMap::new(vec![1.0, 0.0, 2.0, 0.0], vec![0.0, 0.0]).is_err());
    assert!(AffineMap::new(vec![1.0, 1.0, 1.0, 1.0 + 1e-15], vec![0.0, 0.0]).is_err());
}

#[test]
fn empty_polytope_is_an_error() {
    assert!(PointPolytope::from_points(&[]).is_err());
    assert!(PointPolytope::new(2, vec![]).is_err());
}

fn random_map(r: &mut ChaCha8Rng, d: usize) -> AffineMap {
    loop {
        let m: Vec<f64> = (0..d * d).map(|_| r.gen_range(-2.0..2.0)).collect();
        let t: Vec<f64> = (0..d).map(|_| r.gen_range(-3.0..3.0)).collect();
        if let Ok(map) = AffineMap::new(m, t) {
            return map;
        }
    }
}
