//! Exact computation of Hochschild cohomology rings of smash products `A#H`,
//! where `A` is a Koszul skew-polynomial algebra and `H` a finite-dimensional
//! semisimple Hopf algebra acting on it.
//!
//! The pipeline works in the differential graded algebra `A^! ⊗ (A#H)`: it
//! splits the complex into finite weight strands, computes cohomology by exact
//! rank computations, and projects onto `H`-invariants with an integral.

pub mod cochain;
pub mod cohomology;
pub mod hopf;
pub mod koszul;
pub mod kp;
pub mod linalg;
pub mod oracle;
pub mod qalgebra;

pub use linalg::Scalar;
