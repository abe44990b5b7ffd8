//! Functional formulation of classical mechanics on the extended graded
//! phase space spanned by `phi`, `lam` and the ghost pair `c`, `cb`.
//!
//! The crate provides, in symbolic (exact complex-rational) form: the graded
//! polynomial algebra, the extended Poisson bracket generated by
//! `{phi^a, lam_b} = delta^a_b` and `{cb_b, c^a} = -i delta^a_b`, the hat map
//! between forms/multivectors and ghost polynomials, the Cartan calculus
//! realized through brackets with conserved charges, and the superfield
//! packaging of the extended Hamiltonian. On the numeric side it integrates
//! the extended equations of motion with Jacobi-field propagation, and it
//! solves small equivariant-cohomology instances with exact rational linear
//! algebra.

pub mod cartan;
pub mod charges;
pub mod dynamics;
pub mod epb;
pub mod equivariant;
pub mod error;
pub mod graded;
pub mod model;
pub mod parse;
pub mod ratmat;
pub mod scalar;
pub mod superfield;
pub mod verify;

pub use error::{Error, Result};
pub use graded::{EvenMonomial, EvenVar, GhostMonomial, GradedPolynomial, OddGen, Parity, Term};
pub use scalar::{Rational, ScalarC};
