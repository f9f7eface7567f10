//! Approximate convex-polytope operations in fixed dimension d (2..8):
//! per-polytope directional-width indexes built from epsilon-kernels,
//! approximate intersection detection between independently preprocessed
//! polytopes (including their affine images), approximate Minkowski sums by
//! the Dudley and Bronshteyn-Ivanov constructions, and approximate width.
//!
//! Construction costs scale with the input once plus a function of 1/eps;
//! queries touch only the constant-size kernels. With the `parallel` feature
//! (default) the data-parallel inner loops run on rayon; without it the same
//! code runs sequentially.

// numeric kernels use index loops throughout; `!(x > 0)` guards are
// deliberate NaN-robust comparisons
#![allow(clippy::needless_range_loop)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::manual_is_multiple_of)]

pub mod error;
pub mod exec;
pub mod fatten;
pub mod geom;
pub mod intersect;
pub mod linalg;
pub mod linprog;
pub mod minimize;
pub mod minkowski;
pub mod net;
pub mod sum;
pub mod width_index;

pub use error::{Error, Result};
pub use fatten::{
    fatten_transform, minkowski_body, negate_body, sandwich_box, SymmetricBody,
};
pub use geom::{
    dual_hyperplane, dual_intercept, dual_point, dual_slopes, thickness, AffineMap,
    HalfspacePolytope, Hyperplane, Point, PointPolytope, Slab,
};
pub use intersect::{
    approx_intersect, intersect_with_ball, membership_origin, membership_origin_sum,
    ApproxAnswer, CanonicalFrame, Verdict,
};
pub use minimize::{minimize_1d, minimize_nd, MinResult, NoisyObjective};
pub use minkowski::{
    approx_width, approx_width_indexed, bronshteyn_ivanov, convert_representation, dudley,
    BoundarySample, Representation, SphereNet, WidthEstimate,
};
pub use sum::{SumBody, SumTerm, Summand};
pub use width_index::{sum_width, BuildParams, WidthIndex, CALIBRATION};
