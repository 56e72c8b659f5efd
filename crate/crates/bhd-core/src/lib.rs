//! Simulation core for a coherently driven two-mode Bose-Hubbard dimer with
//! local, nonlocal, or imperfectly-nonlocal single-particle dissipation.
//!
//! The crate covers the full quantum side (truncated Fock space, Lindblad
//! superoperator assembly, low-lying Liouvillian spectra, steady states,
//! master-equation and quantum-jump propagation, g²(τ), Husimi Q functions)
//! and the semiclassical side (Gross-Pitaevskii flow, fixed points and their
//! stability, limit-cycle frequency extraction, the effective antibonding
//! decoupling frequency).
//!
//! Frequencies are quoted in units of the decay rate γ and times in 1/γ
//! throughout; drive and interaction follow the scaling F = √N F̃, U = Ũ/N.

// LAPACK symbols come from the system OpenBLAS.
extern crate openblas_src;

pub mod analysis;
pub mod dynamics;
pub mod error;
pub mod hilbert;
pub mod model;
pub mod ode;
pub mod semiclassical;
pub mod sparse;
pub mod spectral;

mod krylov;

pub use error::{BhdError, Result};
pub use hilbert::{FockSpace, Mode, Operator, StateVector};
pub use model::{DissipationKind, DissipatorSpec, ModelParams};
pub use spectral::{SpectralDecomposition, SpectrumStrategy, SteadyStateSet, Superoperator};

/// Complex scalar used everywhere in the crate.
pub type C64 = num_complex::Complex64;
