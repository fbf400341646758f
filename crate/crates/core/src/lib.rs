//! Exact construction and verification of an explicit basis for the
//! derivation module of the cone over the type-A Shi arrangement.
//!
//! The basis consists of the constant derivation `eta1`, the Euler
//! derivation `eta2`, and `phi_1, ..., phi_ell`, whose coefficients are
//! assembled from homogenized Bernoulli-type polynomials `B_{p,q}`.
//! Everything is computed over arbitrary-precision rationals.

pub mod arrangement;
pub mod bernoulli;
pub mod cli;
pub mod derivations;
pub mod error;
pub mod expr;
pub mod latex;
pub mod polyring;
pub mod rational;
pub mod verify;

pub use arrangement::{Hyperplane, HyperplaneKind, ShiCone};
pub use bernoulli::UnivariatePoly;
pub use derivations::Derivation;
pub use error::{Error, Result};
pub use polyring::{LinearForm, Monomial, PolyMatrix, Polynomial, Ring};
pub use rational::Rational;
