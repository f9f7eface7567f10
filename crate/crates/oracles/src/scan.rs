//! Independent linear scans over explicit point sets. These are the ground
//! truth for every kernel and width contract, so they are written as plain
//! loops with no shared code with the library query paths.

use polyapprox::geom::PointPolytope;
use polyapprox::net::DirectionNet;

pub fn support_scan(s: &PointPolytope, v: &[f64]) -> (f64, usize) {
    let mut best = f64::NEG_INFINITY;
    let mut idx = 0usize;
    for i in 0..s.len() {
        let p = s.point(i);
        let mut h = 0.0;
        for j in 0..v.len() {
            h += p[j] * v[j];
        }
        if h > best {
            best = h;
            idx = i;
        }
    }
    (best, idx)
}

pub fn width_scan(s: &PointPolytope, v: &[f64]) -> f64 {
    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::INFINITY;
    for i in 0..s.len() {
        let p = s.point(i);
        let mut h = 0.0;
        for j in 0..v.len() {
            h += p[j] * v[j];
        }
        if h > hi {
            hi = h;
        }
        if h < lo {
            lo = h;
        }
    }
    let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (hi - lo) / norm
}

/// Minimum directional width over a delta-net of directions: a certified
/// overestimate of the true width, within a factor (1 + O(delta^2)) on fat
/// bodies. Callers are expected to hand in reasonably fat inputs.
pub fn dense_width_oracle(s: &PointPolytope, delta: f64) -> f64 {
    let net = DirectionNet::new(s.dim(), delta).expect("oracle net");
    let widths = polyapprox::exec::map_range(net.len(), |i| width_scan(s, net.direction(i)));
    widths.into_iter().fold(f64::INFINITY, f64::min)
}

/// Diameter upper bound via coordinate extents (loose but cheap).
pub fn diameter_estimate(s: &PointPolytope) -> f64 {
    let d = s.dim();
    let mut span = 0.0f64;
    for j in 0..d {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..s.len() {
            let x = s.point(i)[j];
            lo = lo.min(x);
            hi = hi.max(x);
        }
        span += (hi - lo) * (hi - lo);
    }
    span.sqrt()
}
