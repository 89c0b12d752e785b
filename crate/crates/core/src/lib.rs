//! Exact decision procedures and numerical simulation for pretty good state
//! transfer between corners of cartesian products of paths.
//!
//! Eigenvalues of paths are real cyclotomic numbers `2cos(rπ/m)`, handled
//! exactly by [`cyclotomic`]. Transfer between strongly cospectral corners
//! reduces to a parity question on the lattice of integer relations among
//! the distinct eigenvalues, answered by [`decide`] and certified by
//! [`certificate`]. The [`dynamics`] module evaluates the walk itself.

pub mod arith;
pub mod certificate;
pub mod classify;
pub mod cospectral;
pub mod cyclotomic;
pub mod decide;
pub mod dynamics;
pub mod error;
pub mod laplacian;
pub mod lattice;
pub mod scalar;
pub mod spectra;
pub mod witness;

pub use certificate::{check_certificate, verify_certificate, Certificate, CertificateCheck};
pub use classify::{classify_corners, Classification, Reason};
pub use cospectral::{phi_minus, relative_sign, strong_cospectrality, CornerPair, CospectralReport};
pub use cyclotomic::{make_cos, verify_alternating_identity, AlternatingKind, CycloReal};
pub use decide::{decide_pgst, Decision, Method, RelationLattice, Verdict};
pub use dynamics::{corner_fidelity, find_time_reaching, scan_fidelity, CornerWalk, FidelityTrace};
pub use error::{Error, Result};
pub use laplacian::{laplacian_corner_verdict, LaplacianReason, LaplacianVerdict};
pub use lattice::integer_kernel;
pub use scalar::Real;
pub use spectra::{
    path_eigenvalue, path_eigenvector_end_values, product_eigenvalue, spectrum_table, EigenIndex,
    Hamiltonian, PathClass, PathFactor, ProductGraph, SpectrumTable,
};
pub use witness::{build_witness, WitnessCase};

/// Double-precision fidelity trace.
pub type Trace = FidelityTrace<f64>;
/// Single-precision fidelity trace.
pub type Trace32 = FidelityTrace<f32>;
/// Double-precision corner walk.
pub type Walk = CornerWalk<f64>;
/// Single-precision corner walk.
pub type Walk32 = CornerWalk<f32>;
