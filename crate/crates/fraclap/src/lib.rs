//! Sharp lower bounds for sums of powers of Dirichlet fractional Laplacian
//! eigenvalues, together with the machinery needed to check them.
//!
//! The crate is organized around five pieces:
//!
//! - [`geometry`]: domains (boxes, disks, balls, polygons) and the scalar
//!   reductions every bound consumes (volume, centered moment of inertia,
//!   rearrangement radius, the gradient constant `beta`).
//! - [`bounds`]: the Berezin–Li–Yau family of eigenvalue-sum lower bounds and
//!   the Riesz-mean upper bound, evaluated term by term.
//! - [`lemma`]: the convexity inequality behind the four-term bound, its
//!   failure region, the moment-integral minima, and the final
//!   minimization-threshold replay.
//! - [`spectra`]: exact Dirichlet Laplacian spectra for boxes and disks/balls,
//!   power transforms, and a grid-discretized nonlocal eigensolver.
//! - [`harness`]: experiment configs, sandwich/comparison runs, and
//!   deterministic CSV/JSON reports.

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod interval;
pub mod lemma;
pub mod special;
pub mod spectra;
pub mod util;

pub use bounds::{BoundKind, BoundParams, BoundValue};
pub use error::{Error, Result};
pub use geometry::{Domain, GeometrySummary};
pub use harness::{BoundReport, ExperimentConfig};
pub use spectra::{GridOperator, Spectrum};

/// Crate version, stamped into report metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
