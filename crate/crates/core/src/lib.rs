//! Simulation toolkit for chiral quantum spin networks: driven two-level
//! nodes coupled with a tunable left/right asymmetry to an XX spin-chain
//! waveguide.
//!
//! The crate provides several mutually validating engines for the same
//! network model:
//!
//! - [`markovian`]: the Born-Markov reference theory (chiral master equation
//!   for the nodes alone) and the adiabatic elimination of a finite lossy
//!   chain that reproduces it.
//! - [`exact`]: numerically exact treatment of the extended master equation,
//!   as a dense Lindblad solver, a Monte-Carlo wave-function unraveling, and
//!   a fixed-excitation sector solver for undriven problems.
//! - [`mps`]: TEBD quantum trajectories on matrix product states for long
//!   chains where exact state vectors are out of reach.
//! - [`ww`]: closed-form and semi-analytic single-excitation solutions
//!   (Laplace coupling functions, poles/residues, bound states, retardation
//!   series).
//! - [`observables`]: non-Markovianity witnesses, entropies, mutual
//!   information, dimer metrics, and process matrices.
//! - [`protocols`]: shaped-pulse state transfer, time-reversal echo, and the
//!   collision phase gate built on the sector solver.
//!
//! Units: ħ = 1, energies in units of the chain hopping J, times in 1/J.

pub mod basis;
pub mod error;
pub mod io;
pub mod linalg;
pub mod markovian;
pub mod model;
pub mod mps;
pub mod observables;
pub mod presets;
pub mod protocols;
pub mod exact;
pub mod sparse;
pub mod ww;

pub use error::{Error, Result};
pub use model::{
    BathCouplings, NetworkSpec, PulseSpec, SiteLayout, Statistics,
};

/// Complex double-precision scalar used throughout.
pub type C64 = num_complex::Complex64;
