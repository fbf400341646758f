use num_traits::Zero;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A nonzero homogeneous linear form, the defining form of a hyperplane
/// through the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    poly: Polynomial,
    /// Lowest-index variable with a nonzero coefficient.
    pivot: usize,
    pivot_coeff: Rational,
}

impl LinearForm {
    pub fn new(poly: Polynomial) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::DegenerateDivisor);
        }
        if poly.terms().any(|(m, _)| m.degree() != 1) {
            return Err(Error::NotLinear(poly.to_string()));
        }
        let (pivot, pivot_coeff) = (0..poly.ring().nvars())
            .find_map(|v| {
                let c = coefficient_of(&poly, v);
                (!c.is_zero()).then_some((v, c))
            })
            .expect("nonzero linear form has a nonzero coefficient");
        Ok(LinearForm {
            poly,
            pivot,
            pivot_coeff,
        })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    /// Index of the variable eliminated when reducing modulo this form.
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// Coefficient of the variable at index `var`.
    pub fn coefficient(&self, var: usize) -> Rational {
        coefficient_of(&self.poly, var)
    }

    /// `var - L / c` for the pivot variable, the substitution that sends the
    /// form to zero.
    fn kernel_value(&self) -> Polynomial {
        let ring = self.poly.ring();
        &ring.var(self.pivot) - &self.poly.scale(&(Rational::from_integer(1.into()) / &self.pivot_coeff))
    }
}

fn coefficient_of(p: &Polynomial, var: usize) -> Rational {
    let mut exps = vec![0; p.ring().nvars()];
    exps[var] = 1;
    p.coefficient(&super::Monomial::new(exps))
}

/// Image of `p` in `S / (L)`, represented by eliminating the pivot variable
/// of `L`. Zero exactly when `L` divides `p`.
pub fn reduce_mod_linear(p: &Polynomial, form: &LinearForm) -> Result<Polynomial> {
    p.substitute(form.pivot, &form.kernel_value())
}

/// Whether `form` divides `p`, decided by kernel substitution.
pub fn divisible_by_linear(p: &Polynomial, form: &LinearForm) -> Result<bool> {
    Ok(reduce_mod_linear(p, form)?.is_zero())
}

/// `Some(p / L)` when `L` divides `p`.
pub fn divide_by_linear(p: &Polynomial, form: &LinearForm) -> Result<Option<Polynomial>> {
    if !divisible_by_linear(p, form)? {
        return Ok(None);
    }
    p.div_exact(form.poly()).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Ring;

    #[test]
    fn rejects_degenerate_forms() {
        let r = Ring::new(1);
        assert_eq!(LinearForm::new(r.zero()), Err(Error::DegenerateDivisor));
        assert!(matches!(LinearForm::new(r.one()), Err(Error::NotLinear(_))));
        assert!(matches!(
            LinearForm::new(&r.x(1) + &r.one()),
            Err(Error::NotLinear(_))
        ));
        assert!(matches!(LinearForm::new(r.x(1).pow(2)), Err(Error::NotLinear(_))));
    }

    #[test]
    fn explicit_factor_divides() {
        let r = Ring::new(1);
        let braid = &r.x(1) - &r.x(2);
        let shifted = &braid - &r.z();
        let form = LinearForm::new(braid.clone()).unwrap();
        assert!(divisible_by_linear(&(&braid * &shifted), &form).unwrap());
        assert!(!divisible_by_linear(&r.one(), &form).unwrap());
        assert_eq!(reduce_mod_linear(&r.one(), &form).unwrap(), r.one());
        assert_eq!(
            divide_by_linear(&(&braid * &shifted), &form).unwrap(),
            Some(shifted)
        );
    }

    #[test]
    fn pivot_is_lowest_index() {
        let r = Ring::new(2);
        let form = LinearForm::new(&r.x(3) - &r.z()).unwrap();
        assert_eq!(form.pivot, 2);
        // x3 -> z
        assert_eq!(reduce_mod_linear(&r.x(3).pow(2), &form).unwrap(), r.z().pow(2));
    }
}
