//! Hand-factored rank-three basis, one string per `d/dx_i` coefficient.

use shi_basis::expr::parse_polynomial;
use shi_basis::{Derivation, Ring};

pub const ELL: usize = 3;

/// Coefficients of `d1..d4` for `phi_1, phi_2, phi_3`; the `dz` coefficient is zero.
pub const PHI_A3: [[&str; 4]; 3] = [
    [
        "x1*(x1-x2-z)*(x3*x4 - 1/2*(x3+x4)*(x1-z) + 1/3*(x1^2 - 3/2*x1*z + 1/2*z^2))",
        "x2*(x1-x2-z)*(x3*x4 - 1/2*(x3+x4)*(x2-z) + 1/3*(x2^2 - 3/2*x2*z + 1/2*z^2))",
        "-1/6*x3*(x1-x2-z)*(x3+z)*(x3-3*x4-z)",
        "-1/6*x4*(x1-x2-z)*(x4+z)*(x4-3*x3-z)",
    ],
    [
        "-1/6*x1*(x2-x3-z)*(x1-z)*(x1-3*x4-2*z)",
        "x2*(x2-x3-z)*(x1*x4 - 1/2*x1*(x2-z) - 1/2*x4*(x2+z) + 1/3*(x2^2-z^2))",
        "x3*(x2-x3-z)*(x1*x4 - 1/2*x1*(x3-z) - 1/2*x4*(x3+z) + 1/3*(x3^2-z^2))",
        "1/6*x4*(x2-x3-z)*(x4+z)*(3*x1-x4-2*z)",
    ],
    [
        "-1/6*x1*(x3-x4-z)*(x1-z)*(x1-3*x2+z)",
        "-1/6*x2*(x3-x4-z)*(x2-z)*(x2-3*x1+z)",
        "x3*(x3-x4-z)*(x1*x2 - 1/2*(x1+x2)*(x3+z) + 1/3*(x3^2 + 3/2*x3*z + 1/2*z^2))",
        "x4*(x3-x4-z)*(x1*x2 - 1/2*(x1+x2)*(x4+z) + 1/3*(x4^2 + 3/2*x4*z + 1/2*z^2))",
    ],
];

pub fn golden_phi(j: usize) -> Derivation {
    let ring = Ring::new(ELL);
    let mut coeffs: Vec<_> = PHI_A3[j - 1]
        .iter()
        .map(|s| parse_polynomial(s, ring).unwrap())
        .collect();
    coeffs.push(ring.zero());
    Derivation::new(ring, coeffs).unwrap()
}
