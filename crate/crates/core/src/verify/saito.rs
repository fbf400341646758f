use num_traits::Zero;

use crate::arrangement::ShiCone;
use crate::derivations::{shi_basis, Derivation};
use crate::error::{Error, Result};
use crate::polyring::{determinant, PolyMatrix, Polynomial};
use crate::rational::Rational;

/// Coefficient matrix: one row per derivation, columns `d/dx_1..d/dx_{ell+1}, d/dz`.
pub fn saito_matrix(basis: &[Derivation]) -> Result<PolyMatrix> {
    let ring = basis
        .first()
        .map(Derivation::ring)
        .ok_or_else(|| Error::Shape("empty basis".into()))?;
    if basis.len() != ring.nvars() {
        return Err(Error::Shape(format!(
            "Saito matrix needs {} derivations, got {}",
            ring.nvars(),
            basis.len()
        )));
    }
    let rows = basis
        .iter()
        .map(|d| {
            ring.check_same(d.ring())?;
            Ok(d.coeffs().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::from_rows(ring, rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaitoFailure {
    /// Some derivation is zero or not homogeneous.
    Inhomogeneous { index: usize },
    /// The degree sum differs from the number of hyperplanes.
    DegreeSum { sum: u32, hyperplanes: usize },
    /// The determinant is not a nonzero constant multiple of `Q`.
    NotMultiple { determinant: Polynomial },
    /// Predicted determinant degree above the configured bound.
    Guard { predicted: u32, bound: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaitoOutcome {
    pub degrees: Vec<Option<u32>>,
    /// `det = constant * Q`, set on success.
    pub constant: Option<Rational>,
    pub failure: Option<SaitoFailure>,
}

impl SaitoOutcome {
    pub fn passed(&self) -> bool {
        self.constant.is_some()
    }
}

/// Saito's criterion for `basis` against `cone`: homogeneous derivations
/// whose degrees sum to `|S_ell|` and whose coefficient determinant is a
/// nonzero constant multiple of `Q(S_ell)`. The degree check runs before
/// any determinant is formed.
pub fn check_saito_basis(
    cone: &ShiCone,
    basis: &[Derivation],
    max_degree: Option<u32>,
) -> Result<SaitoOutcome> {
    let matrix = saito_matrix(basis)?;
    cone.ring().check_same(matrix.ring())?;
    let degrees: Vec<Option<u32>> = basis.iter().map(Derivation::degree).collect();
    let fail = |failure| SaitoOutcome {
        degrees: degrees.clone(),
        constant: None,
        failure: Some(failure),
    };

    if let Some(index) = degrees.iter().position(Option::is_none) {
        return Ok(fail(SaitoFailure::Inhomogeneous { index }));
    }
    let sum: u32 = degrees.iter().flatten().sum();
    if sum as usize != cone.len() {
        return Ok(fail(SaitoFailure::DegreeSum {
            sum,
            hyperplanes: cone.len(),
        }));
    }
    if let Some(bound) = max_degree {
        let predicted = matrix.degree_bound();
        if predicted > bound {
            return Ok(fail(SaitoFailure::Guard { predicted, bound }));
        }
    }

    let det = determinant(&matrix)?;
    let q = cone.defining_polynomial();
    let constant = match (det.leading_term(), q.leading_term()) {
        (Some((dm, dc)), Some((qm, qc))) if dm == qm => dc / qc,
        _ => Rational::zero(),
    };
    if constant.is_zero() || q.scale(&constant) != det {
        return Ok(fail(SaitoFailure::NotMultiple { determinant: det }));
    }
    Ok(SaitoOutcome {
        degrees,
        constant: Some(constant),
        failure: None,
    })
}

/// Saito's criterion for `eta1, eta2, phi_1..phi_ell`.
pub fn check_saito(cone: &ShiCone, max_degree: Option<u32>) -> Result<SaitoOutcome> {
    let basis: Vec<Derivation> = shi_basis(cone.ell())?
        .into_iter()
        .map(|nd| nd.derivation)
        .collect();
    check_saito_basis(cone, &basis, max_degree)
}
