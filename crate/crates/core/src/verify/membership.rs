use rayon::prelude::*;

use crate::arrangement::{Hyperplane, ShiCone};
use crate::derivations::Derivation;
use crate::error::Result;
use crate::polyring::{reduce_mod_linear, Polynomial};

/// First hyperplane whose form does not divide `theta(form)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub hyperplane: Hyperplane,
    /// `theta(alpha)`.
    pub image: Polynomial,
    /// `theta(alpha)` reduced modulo `alpha`; nonzero.
    pub remainder: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipOutcome {
    pub violation: Option<Violation>,
}

impl MembershipOutcome {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Tests `theta(alpha) ∈ (alpha)` for every defining form of the cone, in
/// hyperplane order.
pub fn check_membership(theta: &Derivation, cone: &ShiCone) -> Result<MembershipOutcome> {
    cone.ring().check_same(theta.ring())?;
    let results = cone
        .hyperplanes()
        .par_iter()
        .map(|h| {
            let image = theta.apply(h.form.poly())?;
            let remainder = reduce_mod_linear(&image, &h.form)?;
            Ok((!remainder.is_zero()).then(|| Violation {
                hyperplane: h.clone(),
                image,
                remainder,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MembershipOutcome {
        violation: results.into_iter().flatten().next(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::{eta1, eta2, phi};
    use crate::polyring::Ring;

    #[test]
    fn basis_members_pass() {
        for ell in 1..=3 {
            let cone = ShiCone::new(ell).unwrap();
            assert!(check_membership(&eta1(ell), &cone).unwrap().passed());
            assert!(check_membership(&eta2(ell), &cone).unwrap().passed());
            for j in 1..=ell {
                assert!(check_membership(&phi(j, ell).unwrap(), &cone).unwrap().passed());
            }
        }
    }

    #[test]
    fn single_partial_fails_with_witness() {
        let cone = ShiCone::new(1).unwrap();
        let r = Ring::new(1);
        let d1 = Derivation::partial(r, 0).unwrap();
        let out = check_membership(&d1, &cone).unwrap();
        let v = out.violation.unwrap();
        assert_eq!(v.hyperplane.form.poly(), &(&r.x(1) - &r.x(2)));
        assert_eq!(v.remainder, r.one());
    }

    #[test]
    fn context_mismatch() {
        let cone = ShiCone::new(2).unwrap();
        assert!(check_membership(&eta1(1), &cone).is_err());
    }
}
