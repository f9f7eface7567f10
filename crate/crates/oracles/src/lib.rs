//! Exact and brute-force reference implementations, instance generators,
//! file formats, and the acceptance harness for the approximate polytope
//! toolkit. Everything in this crate favors obviousness over speed: scans
//! are straight loops, the LP oracle is a dense simplex with an exact
//! rational fallback, and distances come from a min-norm-point solver.

// tableau and point-accumulation code uses index loops throughout
#![allow(clippy::needless_range_loop)]
#![allow(clippy::too_many_arguments)]

pub mod acceptance;
pub mod gen;
pub mod gridmin;
pub mod io;
pub mod minkexact;
pub mod report;
pub mod scan;
pub mod simplex;
pub mod wolfe;

pub use gen::{generate, generate_pair, InstanceKind, InstanceSpec, PairCertificate};
pub use report::{CriterionResult, OracleReport};
pub use simplex::{lp_intersect_exact, origin_in_hull, LpVerdict};
