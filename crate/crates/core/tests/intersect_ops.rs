use polyapprox::geom::{AffineMap, PointPolytope};
use polyapprox::intersect::{approx_intersect, intersect_with_ball, Verdict};
use polyapprox::sum::SumBody;
use polyapprox::width_index::{WidthIndex, CALIBRATION};

fn box2(x0: f64, y0: f64, x1: f64, y1: f64) -> PointPolytope {
    PointPolytope::from_points(&[
        vec![x0, y0],
        vec![x1, y0],
        vec![x1, y1],
        vec![x0, y1],
    ])
    .unwrap()
}

fn idx(p: &PointPolytope, eps: f64) -> WidthIndex {
    WidthIndex::build(p, eps / CALIBRATION).unwrap()
}

#[test]
fn separated_boxes_are_disjoint() {
    let eps = 0.1;
    let a = idx(&box2(0.0, 0.0, 1.0, 1.0), eps);
    let b = idx(&box2(2.0, 0.0, 3.0, 1.0), eps);
    let ans = approx_intersect(&a, &b, None, None, eps).unwrap();
    assert_eq!(ans.verdict, Verdict::Disjoint);
}

#[test]
fn identical_squares_intersect() {
    let eps = 0.1;
    let a = idx(&box2(-1.0, -1.0, 1.0, 1.0), eps);
    let b = idx(&box2(-1.0, -1.0, 1.0, 1.0), eps);
    let ans = approx_intersect(&a, &b, None, None, eps).unwrap();
    assert_eq!(ans.verdict, Verdict::Intersecting);
    // deeply overlapping bodies short-circuit without envelope evaluations
    assert_eq!(ans.evaluations, 0);
}

#[test]
fn hairline_gap_is_deterministic_and_quiet() {
    // gap of half the eps-band: either verdict is fine, but the call must
    // not error and must reproduce bit-identically
    let eps = 0.1;
    let gap = 0.5 * eps; // diameter-scale gap on unit boxes
    let a = idx(&box2(0.0, 0.0, 1.0, 1.0), eps);
    let b = idx(&box2(1.0 + gap, 0.0, 2.0 + gap, 1.0), eps);
    let first = approx_intersect(&a, &b, None, None, eps).unwrap();
    let second = approx_intersect(&a, &b, None, None, eps).unwrap();
    assert_eq!(first.verdict, second.verdict);
    assert_eq!(
        first.envelope_min.map(f64::to_bits),
        second.envelope_min.map(f64::to_bits)
    );
    assert_eq!(first.evaluations, second.evaluations);
}

#[test]
fn symmetry_of_arguments() {
    let eps = 0.08;
    let a = idx(&box2(0.0, 0.0, 1.0, 1.0), eps);
    let b = idx(&box2(4.0, 4.0, 5.0, 5.0), eps);
    let ab = approx_intersect(&a, &b, None, None, eps).unwrap();
    let ba = approx_intersect(&b, &a, None, None, eps).unwrap();
    assert_eq!(ab.verdict, Verdict::Disjoint);
    assert_eq!(ba.verdict, Verdict::Disjoint);

    let c = idx(&box2(0.5, 0.5, 1.5, 1.5), eps);
    assert_eq!(
        approx_intersect(&a, &c, None, None, eps).unwrap().verdict,
        Verdict::Intersecting
    );
    assert_eq!(
        approx_intersect(&c, &a, None, None, eps).unwrap().verdict,
        Verdict::Intersecting
    );
}

#[test]
fn translation_equivariance() {
    let eps = 0.08;
    let a = idx(&box2(0.0, 0.0, 1.0, 1.0), eps);
    let b = idx(&box2(2.5, 0.0, 3.5, 1.0), eps);
    let base = approx_intersect(&a, &b, None, None, eps).unwrap();
    for t in [[10.0, -3.0], [0.25, 0.25], [-100.0, 40.0]] {
        let shift = AffineMap::translation_only(t.to_vec()).unwrap();
        let moved = approx_intersect(&a, &b, Some(&shift), Some(&shift), eps).unwrap();
        assert_eq!(moved.verdict, base.verdict, "shift {:?}", t);
    }
}

#[test]
fn affine_images_are_supported() {
    let eps = 0.08;
    let a = idx(&box2(0.0, 0.0, 1.0, 1.0), eps);
    let b = idx(&box2(2.5, 0.0, 3.5, 1.0), eps);
    // rotate B by 180 degrees about the origin: it lands on [-3.5,-2.5]x[-1,0],
    // still disjoint from A
    let rot = AffineMap::new(vec![-1.0, 0.0, 0.0, -1.0], vec![0.0, 0.0]).unwrap();
    let ans = approx_intersect(&a, &b, None, Some(&rot), eps).unwrap();
    assert_eq!(ans.verdict, Verdict::Disjoint);
    // a shear pushing B onto A
    let onto = AffineMap::new(vec![1.0, 0.0, 0.0, 1.0], vec![-2.4, 0.0]).unwrap();
    let ans = approx_intersect(&a, &b, None, Some(&onto), eps).unwrap();
    assert_eq!(ans.verdict, Verdict::Intersecting);
}

#[test]
fn ball_queries() {
    let eps = 0.08;
    let square = box2(-1.0, -1.0, 1.0, 1.0);
    let a = idx(&square, eps);
    let mut sum = SumBody::new(2);
    sum.push_index(&a, None, false).unwrap();

    // a huge ball swallows the body
    let ans = intersect_with_ball(&sum, &[0.0, 0.0], 10.0, eps).unwrap();
    assert_eq!(ans.verdict, Verdict::Intersecting);

    // radius zero reduces to point membership
    let inside = intersect_with_ball(&sum, &[0.2, -0.3], 0.0, eps).unwrap();
    assert_eq!(inside.verdict, Verdict::Intersecting);
    let outside = intersect_with_ball(&sum, &[5.0, 5.0], 0.0, eps).unwrap();
    assert_eq!(outside.verdict, Verdict::Disjoint);

    // grazing contact from outside
    let touch = intersect_with_ball(&sum, &[3.0, 0.0], 2.5, eps).unwrap();
    assert_eq!(touch.verdict, Verdict::Intersecting);
    let miss = intersect_with_ball(&sum, &[3.0, 0.0], 1.0, eps).unwrap();
    assert_eq!(miss.verdict, Verdict::Disjoint);
    assert!(intersect_with_ball(&sum, &[3.0, 0.0], -1.0, eps).is_err());
}

#[test]
fn frame_reports_are_populated() {
    let eps = 0.08;
    let a = idx(&box2(0.0, 0.0, 1.0, 1.0), eps);
    let b = idx(&box2(1.4, 0.0, 2.4, 1.0), eps);
    let ans = approx_intersect(&a, &b, None, None, eps).unwrap();
    let frame = ans.frame.expect("frame");
    assert!(frame.r > 0.0 && frame.lambda >= 1.0);
    if ans.evaluations > 0 {
        assert!(frame.beta > 0.0 && frame.alpha.is_finite());
        assert!(ans.envelope_min.is_some());
        assert!(ans.minimizer.is_some());
    }
}

#[test]
fn miscalibrated_indexes_are_rejected() {
    let a = WidthIndex::build(&box2(0.0, 0.0, 1.0, 1.0), 0.05).unwrap();
    let b = WidthIndex::build(&box2(2.0, 0.0, 3.0, 1.0), 0.05).unwrap();
    // eps = 0.1 needs indexes at 0.0125, these are at 0.05
    assert!(approx_intersect(&a, &b, None, None, 0.1).is_err());
}
