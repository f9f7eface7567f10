//! Exhaustive grid-search oracle for the convex-minimization contracts.

/// Minimum of `f` over the grid of the given step on [a, b]^k. The grid
/// minimum upper-bounds the true minimum, so bounds checked against it are
/// at least as strict as against the true value.
pub fn grid_min(f: &dyn Fn(&[f64]) -> f64, k: usize, a: f64, b: f64, step: f64) -> f64 {
    let n = ((b - a) / step).ceil() as usize + 1;
    let mut best = f64::INFINITY;
    let mut idx = vec![0usize; k];
    let mut x = vec![0.0f64; k];
    loop {
        for (j, &i) in idx.iter().enumerate() {
            x[j] = (a + i as f64 * step).min(b);
        }
        let v = f(&x);
        if v < best {
            best = v;
        }
        let mut carry = true;
        for slot in idx.iter_mut() {
            if *slot + 1 < n {
                *slot += 1;
                carry = false;
                break;
            }
            *slot = 0;
        }
        if carry {
            return best;
        }
    }
}
