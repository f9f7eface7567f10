use polyapprox::geom::PointPolytope;
use polyapprox::minkowski::{
    approx_width, bronshteyn_ivanov, convert_representation, dudley, dudley_frame, dudley_sum,
    nearest_boundary_sample, Representation, SphereNet, DUDLEY_CONSTANT,
};
use polyapprox::sum::SumBody;
use polyapprox::width_index::{WidthIndex, CALIBRATION};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn square(h: f64) -> PointPolytope {
    PointPolytope::from_points(&[
        vec![-h, -h],
        vec![h, -h],
        vec![h, h],
        vec![-h, h],
    ])
    .unwrap()
}

fn idx(p: &PointPolytope, eps: f64) -> WidthIndex {
    WidthIndex::build(p, eps / CALIBRATION).unwrap()
}

fn random_unit(r: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| r.gen_range(-1.0..1.0)).collect();
        let n: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 {
            return v.iter().map(|x| x / n).collect();
        }
    }
}

#[test]
fn boundary_sample_of_square() {
    let eps = 0.05;
    let s = square(1.0);
    let a = idx(&s, eps);
    let mut sum = SumBody::new(2);
    sum.push_index(&a, None, false).unwrap();
    let frame = dudley_frame(&sum).unwrap();
    // probe from the image of (3, 0): contact on the right edge
    let w_fat = frame.map.apply(&[3.0, 0.0]);
    let sample = nearest_boundary_sample(&frame, &w_fat, eps).unwrap();
    let scale = frame.map.matrix()[0]; // isotropic here
    let expected = 2.0 * scale;
    assert!(
        (sample.rho - expected).abs() <= 4.0 * eps,
        "rho {} expected {}",
        sample.rho,
        expected
    );
    assert!(sample.normal[0] > 0.9, "normal {:?}", sample.normal);
    // contact point maps back near (1, 0)
    let back = frame.inverse.apply(&sample.contact);
    assert!((back[0] - 1.0).abs() <= 6.0 * eps, "contact {:?}", back);
    assert!(back[1].abs() <= 0.3, "contact {:?}", back);
    // samples stay within the outer sandwich ball (unit ball, frame units)
    let n = sample.contact.iter().map(|x| x * x).sum::<f64>().sqrt();
    assert!(n <= 1.0 + 4.0 * eps);
}

#[test]
fn dudley_of_two_squares_contains_the_sum() {
    let eps = 0.05;
    let a = idx(&square(1.0), eps);
    let b = idx(&square(1.0), eps);
    let h = dudley(&a, &b, eps).unwrap();
    // exact sum is the square of half-extent 2
    for x in [
        [2.0, 2.0],
        [-2.0, 2.0],
        [2.0, -2.0],
        [-2.0, -2.0],
        [0.0, 0.0],
        [2.0, 0.0],
    ] {
        assert!(h.contains(&x), "{:?} escaped the Dudley output", x);
    }
    // directional widths at most (1 + 4 eps) of the exact value 8/sqrt(2)max..
    let mut r = rng(3);
    for _ in 0..200 {
        let v = random_unit(&mut r, 2);
        let exact = 4.0 * (v[0].abs() + v[1].abs());
        let w = halfspace_width(&h, &v);
        assert!(w <= (1.0 + 4.0 * eps) * exact + 1e-9, "{} > {}", w, exact);
        assert!(w >= exact - 1e-9);
    }
}

/// Width of a halfspace polytope via the LP dual support.
fn halfspace_width(h: &polyapprox::geom::HalfspacePolytope, v: &[f64]) -> f64 {
    use polyapprox::linprog::{halfspace_support, LpStatus};
    let normals: Vec<Vec<f64>> = h.halfspaces.iter().map(|p| p.normal.clone()).collect();
    let offsets: Vec<f64> = h.halfspaces.iter().map(|p| p.offset).collect();
    let neg: Vec<f64> = v.iter().map(|x| -x).collect();
    let up = match halfspace_support(&normals, &offsets, v).unwrap() {
        LpStatus::Optimal { objective, .. } => objective,
        other => panic!("support LP failed: {:?}", other),
    };
    let dn = match halfspace_support(&normals, &offsets, &neg).unwrap() {
        LpStatus::Optimal { objective, .. } => objective,
        other => panic!("support LP failed: {:?}", other),
    };
    (up + dn) / v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

#[test]
fn dudley_with_point_summand_contains_the_polytope() {
    let eps = 0.05;
    let mut r = rng(5);
    let pts: Vec<Vec<f64>> = (0..40)
        .map(|_| (0..2).map(|_| r.gen_range(-2.0..2.0)).collect())
        .collect();
    let s = PointPolytope::from_points(&pts).unwrap();
    let a = idx(&s, eps);
    let mut sum = SumBody::new(2);
    sum.push_index(&a, None, false).unwrap();
    sum.push_point(vec![0.0, 0.0], false).unwrap();
    let h = dudley_sum(&sum, eps).unwrap();
    for p in s.iter_points() {
        assert!(h.contains(p), "{:?} escaped", p);
    }
}

#[test]
fn dudley_output_size_is_bounded_by_the_net() {
    let eps = 0.05;
    for d in [2usize, 3] {
        let mut r = rng(7 + d as u64);
        let pts: Vec<Vec<f64>> = (0..30)
            .map(|_| (0..d).map(|_| r.gen_range(-1.0..1.0)).collect())
            .collect();
        let s = PointPolytope::from_points(&pts).unwrap();
        let a = idx(&s, eps);
        let b = idx(&s, eps);
        let h = dudley(&a, &b, eps).unwrap();
        let net = SphereNet::new(d, eps, DUDLEY_CONSTANT).unwrap();
        assert!(h.len() <= net.len(), "{} > {}", h.len(), net.len());
        assert!(h.len() > d);
    }
}

#[test]
fn bronshteyn_ivanov_samples_hug_the_square() {
    let eps = 0.05;
    let a = idx(&square(1.0), eps);
    let origin = PointPolytope::from_points(&[vec![0.0, 0.0]]).unwrap();
    let b = WidthIndex::build(&origin, eps / CALIBRATION).unwrap();
    let inner = bronshteyn_ivanov(&a, &b, eps, false).unwrap();
    // every sample lies within a few eps of the square boundary
    for p in inner.iter_points() {
        let inf = p[0].abs().max(p[1].abs());
        assert!(
            (inf - 1.0).abs() <= 6.0 * eps,
            "sample {:?} at sup-norm {}",
            p,
            inf
        );
    }
    // inner widths never exceed the square's, and reach most of them
    let mut r = rng(11);
    for _ in 0..100 {
        let v = random_unit(&mut r, 2);
        let exact = 2.0 * (v[0].abs() + v[1].abs());
        let w = inner.width_exact(&v).unwrap();
        assert!(w <= exact * (1.0 + 6.0 * eps));
        assert!(w >= (1.0 - 6.0 * eps) * exact, "{} < {}", w, exact);
    }
}

#[test]
fn approx_width_of_thin_box() {
    let eps = 0.05;
    let s = PointPolytope::from_points(&[
        vec![-1.0, -0.1],
        vec![1.0, -0.1],
        vec![1.0, 0.1],
        vec![-1.0, 0.1],
    ])
    .unwrap();
    let est = approx_width(&s, eps).unwrap();
    assert!(
        (est.width - 0.2).abs() <= 4.0 * eps * 0.2,
        "width {} truth 0.2",
        est.width
    );
    assert!(est.direction[1].abs() > 0.99, "direction {:?}", est.direction);
}

#[test]
fn approx_width_is_negation_symmetric() {
    let mut r = rng(13);
    let pts: Vec<Vec<f64>> = (0..25)
        .map(|_| (0..2).map(|_| r.gen_range(-2.0..2.0)).collect())
        .collect();
    let s = PointPolytope::from_points(&pts).unwrap();
    let w1 = approx_width(&s, 0.05).unwrap();
    let w2 = approx_width(&s.negate(), 0.05).unwrap();
    assert_eq!(w1.width.to_bits(), w2.width.to_bits());
}

#[test]
fn conversion_round_trip_on_square() {
    let eps = 0.05;
    let s = square(1.0);
    let h = match convert_representation(&Representation::Points(s.clone()), eps).unwrap() {
        Representation::Halfspaces(h) => h,
        _ => panic!("expected halfspaces"),
    };
    for p in s.iter_points() {
        assert!(h.contains(p));
    }
    let p2 = match convert_representation(&Representation::Halfspaces(h), eps).unwrap() {
        Representation::Points(p) => p,
        _ => panic!("expected points"),
    };
    let mut r = rng(17);
    let band = (1.0 + 4.0 * eps) * (1.0 + 4.0 * eps);
    for _ in 0..200 {
        let v = random_unit(&mut r, 2);
        let orig = s.width_exact(&v).unwrap();
        let round = p2.width_exact(&v).unwrap();
        assert!(round <= band * orig + 1e-9, "{} vs {}", round, orig);
        assert!(round >= orig / band - 1e-9, "{} vs {}", round, orig);
    }
}

#[test]
fn conversion_rejects_degenerate_and_unbounded_inputs() {
    // flat input
    let seg = PointPolytope::from_points(&[vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
    assert!(convert_representation(&Representation::Points(seg), 0.05).is_err());
    // a single halfspace is unbounded
    let h = polyapprox::geom::HalfspacePolytope::new(
        2,
        vec![polyapprox::geom::Hyperplane::new(vec![1.0, 0.0], 1.0).unwrap()],
    )
    .unwrap();
    assert!(convert_representation(&Representation::Halfspaces(h), 0.05).is_err());
    // empty intersection
    let empty = polyapprox::geom::HalfspacePolytope::new(
        2,
        vec![
            polyapprox::geom::Hyperplane::new(vec![1.0, 0.0], -1.0).unwrap(),
            polyapprox::geom::Hyperplane::new(vec![-1.0, 0.0], -1.0).unwrap(),
            polyapprox::geom::Hyperplane::new(vec![0.0, 1.0], 1.0).unwrap(),
            polyapprox::geom::Hyperplane::new(vec![0.0, -1.0], 1.0).unwrap(),
        ],
    )
    .unwrap();
    assert!(convert_representation(&Representation::Halfspaces(empty), 0.05).is_err());
}
