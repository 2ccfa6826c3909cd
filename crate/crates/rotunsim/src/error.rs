use crate::plant::PlantState;

/// Crate-wide error type.
///
/// Domain faults (capsize, infeasible lean) are kept distinct from numerical
/// and input-format failures so callers can react differently: a capsize
/// terminates a run but is a valid experimental outcome, while a config
/// parse error is a caller bug.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Roll angle left the recoverable envelope; the run must stop.
    #[error("capsized: |theta| = {} rad exceeds the capsize limit", .state.theta.abs())]
    Capsized {
        /// State at the moment the capsize limit was crossed.
        state: PlantState,
    },

    /// A state or input field was NaN or infinite.
    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },

    /// A parameter violates its domain constraint.
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParam {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The steady-turn balance has no solution at this operating point
    /// (the required centripetal moment exceeds what the pendulum can
    /// supply). Distinct from numerical failure by construction.
    #[error("infeasible lean: no pendulum angle balances theta = {theta} rad at v = {v} m/s")]
    InfeasibleLean { theta: f64, v: f64 },

    /// Integration step outside (0, 10 ms].
    #[error("invalid integration step dt = {dt} s (must be in (0, 0.01])")]
    InvalidDt { dt: f64 },

    /// Structurally invalid scenario (bad timeline, disturbance windows, ...).
    #[error("invalid scenario: {0}")]
    Scenario(String),

    /// Config or scenario file syntax error.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Config or scenario file key that this build does not recognize.
    #[error("unknown key '{key}' at line {line}")]
    UnknownKey { line: usize, key: String },

    /// A config value that parses but violates a domain invariant.
    #[error("domain error for key '{key}': {msg}")]
    Domain { key: String, msg: String },

    /// Metrics requested on an empty trajectory.
    #[error("empty trajectory")]
    EmptyTrajectory,

    /// Impulse calibration failed to bracket or converge.
    #[error("calibration failed: {0}")]
    Calibration(String),

    /// File I/O failure (path context in the message).
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
