//! Simulation of the Prytz (hatchet) planimeter.
//!
//! The tracer end of a rigid rod of length `l` follows a plane curve while the
//! chisel end obeys a no-sideslip constraint. This crate integrates that
//! motion in several equivalent pictures:
//!
//! * [`geometry`]: parametric tracer curves and their area moments.
//! * [`planimeter`]: the horizontal lift of a tracer curve, area estimates and
//!   the moving-segment identity.
//! * [`liegroup`]: the PSU(1,1) holonomy of the principal connection, computed
//!   with a fourth-order Magnus integrator and predicted from area moments.
//! * [`subriemannian`]: normal geodesics of the induced sub-Riemannian
//!   structure and a constructive motion planner.
//! * [`development`]: the SE(2) picture, chisel developments and trailer
//!   chains.
//!
//! Batch workloads (parameter sweeps, initial-angle grids, planner batches)
//! go through [`exec::Execution`], which uses rayon when the `parallel`
//! feature is enabled and falls back to plain iteration otherwise.

pub mod development;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod io;
pub mod liegroup;
pub mod planimeter;
pub mod quadrature;
pub mod studies;
pub mod subriemannian;

pub use error::{Error, Result};
pub use exec::Execution;
pub use geometry::{Moments, Orientation, ParamCurve, Vec2};
pub use planimeter::{Config, PlanimeterPath};

/// Default number of quadrature nodes per closed curve.
pub const DEFAULT_SAMPLES: usize = 4096;

/// Default number of integration steps per closed curve.
pub const DEFAULT_STEPS: usize = 100_000;
