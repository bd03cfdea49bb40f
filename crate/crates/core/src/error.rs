//! Error types shared by the model and all engines.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid network parameterization (overlapping node windows, bad
    /// counts, negative rates, ...). The string carries the field path.
    #[error("invalid network spec: {0}")]
    InvalidSpec(String),

    /// Renormalized detuning outside the magnon band; Markov rates are
    /// undefined and bound states dominate.
    #[error("renormalized detuning {detuning} lies outside the band (|Δ̃| ≥ 2J = {band_edge}); Markov rates undefined")]
    OutsideBand { detuning: f64, band_edge: f64 },

    /// Engine capability exceeded (for example dense master equation beyond
    /// its site cap).
    #[error("engine capability exceeded: {0}")]
    CapabilityExceeded(String),

    /// Integrator diagnostics: trace drift or jump probability too large for
    /// the chosen step.
    #[error("step size too large: {0}")]
    StepSize(String),

    /// A steady state was requested but the windowed criterion did not
    /// trigger before the hard time cap.
    #[error("steady state not reached: {0}")]
    NotConverged(String),

    /// Singular linear problem (for example all boundary losses zero in the
    /// adiabatic elimination).
    #[error("singular operator: {0}")]
    Singular(String),

    /// Root finding failed to converge.
    #[error("root finding failed: {0}")]
    RootFinding(String),

    /// Pulse parameters outside their validity domain.
    #[error("invalid pulse: {0}")]
    InvalidPulse(String),

    /// Configuration file problems, reported with field paths.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialization(String),
}

impl From<toml::de::Error> for Error {
    fn from(e: toml::de::Error) -> Self {
        Error::Config(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}
