//! Exact computational tools around normalized spectral radii of primitive
//! integer matrices whose characteristic polynomials are skew-reciprocal up
//! to cyclotomic factors.
//!
//! The crate is organised by subsystem:
//!
//! * [`poly`]: integer polynomials, cyclotomic polynomials, Sturm chains and
//!   certified real-root enclosures.
//! * [`classify`]: reciprocity predicates, cyclotomic stripping, the parity
//!   condition and a few number-theoretic helpers.
//! * [`matrix`]: integer matrices, characteristic polynomials, primitivity and
//!   spectral radii.
//! * [`curvegraph`]: simple cycles of a multi-digraph, the weighted curve
//!   graph and its clique polynomial.
//! * [`families`]: the five small curve-graph polynomial families and their
//!   exhaustive desk-scale analysis.
//! * [`sharpness`]: the `2k × 2k` family whose normalized spectral radius
//!   tends to `3 + 2√2`.
//! * [`traintrack`]: combinatorial standardly embedded train tracks, the
//!   weight space and the Thurston form.
//! * [`linalg`]: exact rational row reduction, ranks and kernels.
//! * [`search`]: brute-force scans over small nonnegative integer matrices.
//! * [`cli`]: the `stretch-lab` command-line front end and report types.

pub mod classify;
pub mod cli;
pub mod constants;
pub mod curvegraph;
pub mod error;
pub mod families;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod search;
pub mod sharpness;
pub mod traintrack;

pub use error::{Error, Result};
pub use poly::{Dyadic, IntPolynomial, RootEnclosure, Tolerance};
