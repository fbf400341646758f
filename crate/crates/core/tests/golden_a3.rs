//! The rank-three basis compared coefficient by coefficient with hand-factored
//! expressions. Comparison is after full expansion.

mod common;

use common::a3::{golden_phi, ELL};
use shi_basis::derivations::{eta1, eta2, phi};
use shi_basis::expr::{parse_derivation, parse_polynomial};
use shi_basis::latex::emit_latex;
use shi_basis::Ring;

#[test]
fn phi_coefficients_match() {
    for j in 1..=ELL {
        let computed = phi(j, ELL).unwrap();
        let golden = golden_phi(j);
        for (i, (c, g)) in computed.coeffs().iter().zip(golden.coeffs()).enumerate() {
            assert_eq!(c, g, "phi_{j}, coefficient {i}");
        }
    }
}

#[test]
fn eta_match() {
    let ring = Ring::new(ELL);
    assert_eq!(eta1(ELL), parse_derivation("d1 + d2 + d3 + d4", ring).unwrap());
    assert_eq!(
        eta2(ELL),
        parse_derivation("x1*d1 + x2*d2 + x3*d3 + x4*d4 + z*dz", ring).unwrap()
    );
}

#[test]
fn latex_form_parses_to_golden() {
    let ring = Ring::new(ELL);
    let line = r"-\frac{1}{6}x_{3}(x_{1}-x_{2}-z)(x_{3}+z)(x_{3}-3x_{4}-z)";
    assert_eq!(parse_polynomial(line, ring).unwrap(), golden_phi(1).coeffs()[2]);
    for j in 1..=ELL {
        let emitted = emit_latex(&phi(j, ELL).unwrap());
        assert_eq!(parse_derivation(&emitted, ring).unwrap(), golden_phi(j), "phi_{j}");
    }
}
