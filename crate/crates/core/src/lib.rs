//! Exact-symbolic and arbitrary-precision engine for the quantum
//! differential equation (QDE) of the Hilbert scheme of points in the
//! plane.
//!
//! The crate is organized in layers:
//!
//! - [`algebra`]: exact rationals, sparse multivariate polynomials,
//!   normalized rational functions, cyclotomic extensions, exact linear
//!   algebra;
//! - [`partition`]: partition combinatorics indexing everything else;
//! - [`fock`]: the Fock space, creation/annihilation operators, and both
//!   Hermitian products;
//! - [`qde`]: the operator M(q,t1,t2) and its variants, residues, and
//!   structural symmetry checks, exact per energy level;
//! - [`symfunc`]: Jack, Schur, Macdonald, and Haiman polynomial families;
//! - [`series`]: Frobenius series solutions at q = 0, exact over the
//!   rational-function field;
//! - [`analytic`]: arbitrary-precision path transport, monodromy, gluing
//!   matrices, intertwiners, and the connection-problem verifier.

pub mod algebra;
pub mod error;
pub mod fock;
pub mod partition;

pub use error::{Error, Result};
pub mod qde;
pub mod symfunc;
