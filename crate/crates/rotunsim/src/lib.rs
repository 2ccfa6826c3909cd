//! Roll-plane simulator for a pendulum-driven spherical robot with a
//! coaxial momentum wheel.
//!
//! The crate is organized around a pure-function core:
//!
//! - [`plant`] — continuous-time roll dynamics (shell tilt, pendulum servo,
//!   momentum wheel, forward speed) with a fixed-step RK4 integrator and
//!   conservation diagnostics.
//! - [`control`] — the decoupled control stack: steady-turn feedforward for
//!   the pendulum, segmented PI on roll angle, segmented PD on roll rate for
//!   the momentum wheel, plus a pendulum-only baseline mode.
//! - [`sim`] — multi-rate closed-loop scheduler (1 kHz physics, 100 Hz
//!   control with zero-order hold), measurement noise, disturbance
//!   generators, trajectory recording.
//! - [`experiments`] — canned scenarios E1–E4, step-response metrics, and
//!   the with-wheel vs. no-wheel comparison harness.
//! - [`config`], [`telemetry`], [`sweep`], [`cli`] — flat key/value config
//!   and scenario files, CSV + UDP telemetry encoders, gain-sweep runner,
//!   command-line entry point.
//!
//! Everything is deterministic: the same scenario, parameters, and seed
//! produce bit-identical trajectories and output files.

pub mod cli;
pub mod config;
pub mod control;
mod error;
pub mod experiments;
pub mod plant;
pub mod rng;
pub mod sim;
pub mod sweep;
pub mod telemetry;

pub use error::{Error, Result};

/// Physics integration step (s).
pub const PHYSICS_DT: f64 = 1.0e-3;

/// Control loop period (s); an integer multiple of [`PHYSICS_DT`].
pub const CONTROL_PERIOD: f64 = 1.0e-2;

/// Physics substeps per control tick.
pub const SUBSTEPS_PER_TICK: usize = 10;

/// Default RNG seed used when neither `--seed` nor `ROTUNSIM_SEED` is given
/// and the scenario file does not carry one.
pub const DEFAULT_SEED: u64 = 0x5_0BE_C0DE;
