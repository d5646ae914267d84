//! Inset-fed microstrip patch synthesis, two-slot surrogate characterisation
//! and stochastic local search over antenna deployments.
//!
//! The crate is organised in four layers:
//!
//! * [`design`] dimensions a rectangular patch from closed-form equations.
//! * [`em`] evaluates impedance, S11/VSWR sweeps, far-field patterns,
//!   directivity and free-space link budgets with a two-slot model.
//! * [`planner`] builds distance matrices over towers and searches for the
//!   shortest connection order (nearest neighbour, 2-opt, random restarts,
//!   optional annealing) with a brute-force oracle for small instances.
//! * [`io`] loads scenario files and writes the CSV outputs used by the
//!   `patchsls` binary.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod design;
pub mod em;
pub mod error;
pub mod io;
pub mod planner;
pub mod units;

pub use error::{Error, Result};
pub use units::{Frequency, Length, SPEED_OF_LIGHT};
