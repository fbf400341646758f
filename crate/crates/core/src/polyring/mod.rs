//! Sparse multivariate polynomials over exact rationals.
//!
//! Every polynomial lives in a [`Ring`] with variables `x_1, ..., x_{ell+1}, z`.
//! Variables are addressed by a zero-based index: `x_i` is index `i - 1` and
//! `z` is index `ell + 1`. Terms are ordered lexicographically on the exponent
//! vector with `x_1` highest; canonical output lists terms in descending order.

mod json;
mod linear;
mod matrix;
mod poly;

pub use json::{PolyJson, TermJson};
pub use linear::{divide_by_linear, divisible_by_linear, reduce_mod_linear, LinearForm};
pub use matrix::{
    determinant, determinant_bareiss, determinant_expansion, PolyMatrix, EXPANSION_MAX_SIZE,
};
pub use poly::Polynomial;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Ring context `Q[x_1, ..., x_{ell+1}, z]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ring {
    ell: usize,
}

impl Ring {
    pub fn new(ell: usize) -> Self {
        Ring { ell }
    }

    pub fn ell(self) -> usize {
        self.ell
    }

    pub fn nvars(self) -> usize {
        self.ell + 2
    }

    /// Index of `x_i`, with `i` one-based.
    pub fn x_index(self, i: usize) -> Result<usize> {
        if i == 0 || i > self.ell + 1 {
            return Err(Error::IndexOutOfRange {
                index: i,
                nvars: self.nvars(),
            });
        }
        Ok(i - 1)
    }

    pub fn z_index(self) -> usize {
        self.ell + 1
    }

    pub fn check_index(self, var: usize) -> Result<()> {
        if var >= self.nvars() {
            return Err(Error::IndexOutOfRange {
                index: var,
                nvars: self.nvars(),
            });
        }
        Ok(())
    }

    pub fn var_name(self, var: usize) -> String {
        if var == self.z_index() {
            "z".to_string()
        } else {
            format!("x{}", var + 1)
        }
    }

    pub fn zero(self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(self) -> Polynomial {
        Polynomial::constant(self, crate::rational::int(1))
    }

    pub fn constant(self, c: Rational) -> Polynomial {
        Polynomial::constant(self, c)
    }

    /// The variable with zero-based index `var`.
    ///
    /// # Panics
    /// If `var` is out of range.
    pub fn var(self, var: usize) -> Polynomial {
        self.check_index(var).expect("variable index out of range");
        let mut exps = vec![0; self.nvars()];
        exps[var] = 1;
        Polynomial::from_terms(self, [(Monomial::new(exps), crate::rational::int(1))])
    }

    /// `x_i`, one-based.
    ///
    /// # Panics
    /// If `i` is not in `1..=ell+1`.
    pub fn x(self, i: usize) -> Polynomial {
        self.var(self.x_index(i).expect("x index out of range"))
    }

    pub fn z(self) -> Polynomial {
        self.var(self.z_index())
    }

    pub(crate) fn check_same(self, other: Ring) -> Result<()> {
        if self != other {
            return Err(Error::ContextMismatch {
                left: self.ell,
                right: other.ell,
            });
        }
        Ok(())
    }
}

/// Exponent vector. The derived order is lexicographic with index 0 (`x_1`)
/// most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }
}
