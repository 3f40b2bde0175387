//! Numerical laboratory for the linearized plasma-vacuum interface problem
//! of ideal compressible MHD.
//!
//! A plasma governed by the symmetric quasilinear MHD system occupies the
//! half-space x₁ > φ(t,x'), a pre-Maxwell vacuum magnetic field occupies
//! x₁ < φ(t,x'), and the two are coupled through the total-pressure balance
//! and tangency conditions on the moving interface. After straightening the
//! front, the linearization about a basic state becomes a coupled
//! hyperbolic-elliptic problem on the half-space slab. This crate assembles
//! that problem, solves the frozen-coefficient evolution per tangential
//! Fourier mode, and verifies the algebraic identities, constraints, energy
//! inequalities and interface-symbol margins that govern its well-posedness.
//!
//! Modules mirror the pieces of the problem:
//!
//! - [`eos`], [`mhd`]: equation of state, the symmetric 8×8 system matrices,
//!   pointwise algebraic checks.
//! - [`geometry`]: front straightening (cut-off, lifted extensions,
//!   admissibility, normals).
//! - [`basic_state`]: basic-state families, constraint validation, frozen
//!   coefficient extraction.
//! - [`linearized`]: good unknowns, the secondary-unknown transform and the
//!   linearized plasma operator with its rank-2 boundary structure.
//! - [`vacuum`]: the div-curl system via a scalar potential, per-mode solves,
//!   normal-derivative recovery and the boundary/volume energy identity.
//! - [`constraints`]: transported divergence/tangency constraints and their
//!   residuals.
//! - [`stability`]: gas-dynamical / purely-MHD margins, interface-symbol
//!   resolution of the front gradient, parameter scans.
//! - [`evolution`]: frozen-coefficient time stepping, energy ledger,
//!   anisotropic weighted norms, estimate-ratio diagnostics.
//! - [`config`], [`report`]: run configuration and CSV/JSON emission for the
//!   command-line front end.

pub mod band;
pub mod basic_state;
pub mod config;
pub mod constraints;
pub mod data;
pub mod eos;
pub mod evolution;
pub mod geometry;
pub mod grid;
pub mod linearized;
pub mod mhd;
pub mod norms;
pub mod quad;
pub mod report;
pub mod rng;
pub mod spectral;
pub mod stability;
pub mod vacuum;

pub use eos::EquationOfState;
pub use mhd::PlasmaState;
