use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bernoulli::UnivariatePoly;
use crate::error::{Error, Result};
use crate::rational::int;

/// Sorted multiset of basis degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentSequence(Vec<u32>);

impl ExponentSequence {
    pub fn new(mut degrees: Vec<u32>) -> Self {
        degrees.sort_unstable();
        ExponentSequence(degrees)
    }

    /// `(0, 1, ell+1, .., ell+1)` with `ell` copies of `ell+1`.
    pub fn expected(ell: usize) -> Self {
        let mut v = vec![0, 1];
        v.extend(std::iter::repeat(ell as u32 + 1).take(ell));
        ExponentSequence(v)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `prod_e (1 + e t)`.
    pub fn poincare(&self) -> UnivariatePoly {
        self.0.iter().fold(UnivariatePoly::constant(int(1)), |acc, &e| {
            &acc * &UnivariatePoly::from_integers(&[1, e as i64])
        })
    }
}

/// `(1 + t)(1 + (ell+1) t)^ell`.
pub fn expected_poincare(ell: usize) -> UnivariatePoly {
    let linear = UnivariatePoly::from_integers(&[1, ell as i64 + 1]);
    &UnivariatePoly::from_integers(&[1, 1]) * &linear.pow(ell as u32)
}

/// Chambers of the affine arrangement: `pi(1) / 2` for the cone's Poincaré
/// polynomial.
pub fn chambers_from_poincare(poincare: &UnivariatePoly) -> Result<BigInt> {
    let at_one = poincare.eval(&int(1));
    if !at_one.denom().is_one() {
        return Err(Error::Domain(format!("pi(1) = {at_one} is not an integer")));
    }
    let (q, r) = at_one.numer().div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(Error::Domain(format!("pi(1) = {at_one} is odd")));
    }
    Ok(q)
}
