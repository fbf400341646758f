//! Human-readable rendering of derivations, in LaTeX and plain text.
//!
//! A linear factor shared by every coefficient (for `phi_j`, the form
//! `x_j - x_{j+1} - z`) is pulled out; each `d/dx_i` term is written as
//! `sign * monomial * (factor) * (rest)`.

use num_traits::{One, Signed};

use crate::derivations::Derivation;
use crate::polyring::{divisible_by_linear, LinearForm, Monomial, Polynomial, Ring};
use crate::rational::Rational;

/// One `d/dv` term after factoring.
struct Piece {
    var: usize,
    negative: bool,
    /// Rational content when `rest` is 1.
    scalar: Rational,
    monomial: Monomial,
    rest: Option<Polynomial>,
}

struct Factored {
    common: Option<Polynomial>,
    pieces: Vec<Piece>,
}

fn common_linear_factor(theta: &Derivation) -> Option<Polynomial> {
    let ring = theta.ring();
    let nonzero: Vec<&Polynomial> = theta.coeffs().iter().filter(|c| !c.is_zero()).collect();
    if nonzero.is_empty() || nonzero.iter().any(|c| c.total_degree() == Some(0)) {
        return None;
    }
    let n = ring.ell() + 1;
    let pairs = (1..=n).flat_map(|p| (p + 1..=n).map(move |q| (p, q)));
    let shifted = pairs.clone().map(|(p, q)| &(&ring.x(p) - &ring.x(q)) - &ring.z());
    let braid = pairs.map(|(p, q)| &ring.x(p) - &ring.x(q));
    shifted.chain(braid).find(|cand| {
        let form = LinearForm::new(cand.clone()).expect("nonzero form");
        nonzero
            .iter()
            .all(|c| divisible_by_linear(c, &form).unwrap_or(false))
    })
}

fn factor(theta: &Derivation) -> Factored {
    let common = common_linear_factor(theta);
    let pieces = theta
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(var, c)| {
            let q = match &common {
                Some(l) => c.div_exact(l).expect("common factor divides"),
                None => c.clone(),
            };
            let monomial = q.monomial_content();
            let q = q.div_monomial(&monomial).expect("content divides");
            if let Some(s) = q.as_constant() {
                return Piece {
                    var,
                    negative: s.is_negative(),
                    scalar: s.abs(),
                    monomial,
                    rest: None,
                };
            }
            let lead_negative = q.leading_term().is_some_and(|(_, c)| c.is_negative());
            let rest = if lead_negative { -q } else { q };
            Piece {
                var,
                negative: lead_negative,
                scalar: Rational::one(),
                monomial,
                rest: Some(rest),
            }
        })
        .collect();
    Factored { common, pieces }
}

fn latex_var(ring: Ring, var: usize) -> String {
    if var == ring.z_index() {
        "z".into()
    } else {
        format!("x_{{{}}}", var + 1)
    }
}

fn latex_monomial(ring: Ring, m: &Monomial) -> String {
    let mut out = String::new();
    for (var, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        out.push_str(&latex_var(ring, var));
        if e > 1 {
            out.push_str(&format!("^{{{e}}}"));
        }
    }
    out
}

fn latex_scalar(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// LaTeX for a polynomial, terms in canonical descending order.
pub fn latex_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let ring = p.ring();
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().enumerate() {
        let abs = c.abs();
        match (idx, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.degree() == 0 {
            out.push_str(&latex_scalar(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&latex_scalar(&abs));
            }
            out.push_str(&latex_monomial(ring, m));
        }
    }
    out
}

fn latex_partial(ring: Ring, var: usize) -> String {
    if var == ring.z_index() {
        "\\partial_{z}".into()
    } else {
        format!("\\partial_{{{}}}", var + 1)
    }
}

/// LaTeX body of a derivation with one `\partial` per line, lines joined
/// by `\\`.
pub fn emit_latex(theta: &Derivation) -> String {
    let ring = theta.ring();
    let f = factor(theta);
    if f.pieces.is_empty() {
        return "0".into();
    }
    let common = f.common.as_ref().map(|l| format!("({})", latex_polynomial(l)));
    let lines: Vec<String> = f
        .pieces
        .iter()
        .enumerate()
        .map(|(idx, piece)| {
            let mut line = String::new();
            match (idx, piece.negative) {
                (0, true) => line.push('-'),
                (0, false) => {}
                (_, true) => line.push_str("- "),
                (_, false) => line.push_str("+ "),
            }
            if !piece.scalar.is_one() {
                line.push_str(&latex_scalar(&piece.scalar));
            }
            line.push_str(&latex_monomial(ring, &piece.monomial));
            if let Some(c) = &common {
                line.push_str(c);
            }
            if let Some(rest) = &piece.rest {
                line.push_str(&format!("\\left\\{{{}\\right\\}}", latex_polynomial(rest)));
            }
            line.push_str(&latex_partial(ring, piece.var));
            line
        })
        .collect();
    lines.join(" \\\\\n&\\quad ")
}

/// One-line plain-text form, e.g. `(x1 - x2 - z)*(x1*d1 + x2*d2)`.
pub fn emit_text(theta: &Derivation) -> String {
    let ring = theta.ring();
    let f = factor(theta);
    if f.pieces.is_empty() {
        return "0".into();
    }
    let mut body = String::new();
    for (idx, piece) in f.pieces.iter().enumerate() {
        match (idx, piece.negative) {
            (0, true) => body.push('-'),
            (0, false) => {}
            (_, true) => body.push_str(" - "),
            (_, false) => body.push_str(" + "),
        }
        let mut factors = Vec::new();
        if !piece.scalar.is_one() {
            factors.push(if piece.scalar.denom().is_one() {
                piece.scalar.numer().to_string()
            } else {
                format!("{}/{}", piece.scalar.numer(), piece.scalar.denom())
            });
        }
        if piece.monomial.degree() > 0 {
            factors.push(Polynomial::from_terms(ring, [(piece.monomial.clone(), Rational::one())]).to_string());
        }
        if let Some(rest) = &piece.rest {
            factors.push(format!("({rest})"));
        }
        let partial = if piece.var == ring.z_index() {
            "dz".to_string()
        } else {
            format!("d{}", piece.var + 1)
        };
        factors.push(partial);
        body.push_str(&factors.join("*"));
    }
    match &f.common {
        Some(l) if f.pieces.len() > 1 => format!("({l})*({body})"),
        Some(l) => format!("({l})*{body}"),
        None => body,
    }
}
