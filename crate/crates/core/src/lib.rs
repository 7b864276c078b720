//! Sources, fields and energies of the triplet 2³S state of a two-electron
//! planar quantum dot in a perpendicular magnetic field, in effective atomic
//! units.
//!
//! Everything hangs off [`TripletState`]: a parameter set plus the exact
//! radial closed forms derived from it. Local quantities (density, currents,
//! the kinetic tensor, every field of the first law) come from those closed
//! forms; nonlocal ones (pair correlation, Fermi–Coulomb hole, density
//! matrix) and every cross-check come from adaptive quadrature over the
//! wave function.
//!
//! ```
//! use qdot_core::TripletState;
//!
//! let state = TripletState::default();
//! assert!((state.density(0.0) - 0.0555377).abs() < 1e-6);
//! assert!(state.law_residual(1.0).residual.abs() < 1e-4);
//! ```
#![no_std]

extern crate alloc;

pub mod closed_form;
pub mod consistency;
pub mod energies;
pub mod fields;
pub mod numerics;
pub mod sources;
pub mod state;
pub mod wavefunction;

pub use consistency::{ConsistencyReport, FitKind, HarmonicFit, LawReport, LawResidual};
pub use energies::{EnergyReport, Expectations, KineticRoutes};
pub use fields::{FieldBundle, KineticTensorValue};
pub use numerics::{NumericsError, QuadResult, QuadSpec};
pub use sources::{CurrentDecomposition, DensityMatrixGrid, PairGrid, PairKind, RadialProfile};
pub use state::TripletState;
pub use wavefunction::{ComplexAmplitude, PlanarPoint, TripletParams};
