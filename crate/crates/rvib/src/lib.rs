//! Simulation toolkit for vibronic (spin-phonon) coupling in laser-driven
//! trapped Rydberg ion chains.
//!
//! The crate covers the full pipeline from trap hardware parameters to
//! spectroscopic observables:
//!
//! * [`crystal`] — Coulomb-crystal equilibrium geometry, axial normal modes,
//!   and conversion of ion species / trap parameters into the dimensionless
//!   model constants (interaction `V`, couplings `κ_p`, mode frequencies
//!   `ω_p`).
//! * [`fockspace`] — the composite Hilbert space of the two driven ions
//!   tensored with truncated phonon Fock spaces, with sparse operator
//!   construction.
//! * [`model`] — assembly of the spin-phonon Hamiltonian and of its reduced
//!   two-level quantum-Rabi form.
//! * [`spectrum`] — eigenvalue sweeps versus the Rabi frequency with
//!   adiabatic state tracking and avoided-crossing (resonance) detection.
//! * [`dynamics`] — Schrödinger time evolution under an rf-modulated drive,
//!   thermal initial ensembles, and the integrated Rydberg signal.
//! * [`scan`] — 2D rf-spectroscopy scans (signal over a grid of Rabi
//!   frequency × rf frequency).
//! * [`cli`] — the configuration-driven front end used by the `rvib` binary.
//!
//! Unless a function says otherwise, frequencies and energies are
//! dimensionless in units of the axial trap frequency `ν` (with `ħ = 1`),
//! lengths in units of the Coulomb length `ζ`, and times in units of `1/ν`.
//! Two-ion studies conventionally use the relative mode frequency `ω₂` as
//! the unit instead; the model layer is agnostic as long as all inputs share
//! one unit.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod constants;
pub mod crystal;
pub mod dynamics;
mod error;
pub mod fockspace;
mod lanczos;
pub mod model;
pub mod scan;
pub mod spectrum;

pub use error::{Error, Result};
