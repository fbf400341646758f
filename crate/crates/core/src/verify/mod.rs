//! Exact checks of every computable claim about the basis: membership,
//! the determinant identities, Saito's criterion, exponents, Poincaré
//! polynomial, chamber count, and an independent point-counting oracle.

mod counting;
mod finite_field;
mod identities;
mod membership;
mod saito;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use serde_json::{json, Value};

pub use counting::{chambers_from_poincare, expected_poincare, ExponentSequence};
pub use finite_field::{charpoly_finite_field, count_complement, exponent_charpoly};
pub use identities::{
    check_factorization_p, check_lemma_n, lemma_n_closed_form, p_determinant_closed_form,
    p_factors, p_matrix, FactorizationOutcome, LemmaOutcome, PFactors,
};
pub use membership::{check_membership, MembershipOutcome, Violation};
pub use saito::{check_saito, check_saito_basis, saito_matrix, SaitoFailure, SaitoOutcome};

use crate::arrangement::{lemma_matrix_n, ShiCone};
use crate::bernoulli::UnivariatePoly;
use crate::derivations::shi_basis;
use crate::error::{Error, Result};
use crate::polyring::PolyJson;
use crate::rational::{format_rational, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Evidence: the computed value on success, the counterexample on failure.
    pub witness: Value,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, witness: Value) -> Self {
        Check {
            name: name.into(),
            status: Status::from_bool(ok),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub skip_saito: bool,
    /// Primes for the point-counting oracle; `None` skips it.
    pub oracle_primes: Option<Vec<u64>>,
    /// Skip (and fail) every determinant whose predicted degree exceeds this.
    pub max_degree_guard: Option<u32>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub ell: usize,
    pub checks: Vec<Check>,
    pub saito_constant: Option<Rational>,
    /// Basis degrees, present once membership and Saito both passed.
    pub exponents: Option<ExponentSequence>,
    pub poincare: Option<UnivariatePoly>,
    pub chambers: Option<BigInt>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    ell: usize,
    checks: &'a [Check],
    saito_constant: Option<String>,
    poincare: Option<Vec<Value>>,
    chambers: Option<Value>,
}

fn integer_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

fn rational_value(r: &Rational) -> Value {
    if r.is_integer() {
        integer_value(r.numer())
    } else {
        Value::from(format_rational(r))
    }
}

fn poly_value(p: &crate::polyring::Polynomial) -> Value {
    serde_json::to_value(PolyJson::from(p)).expect("serializable")
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `pi(S_ell, t)`; requires membership and Saito to have passed.
    pub fn poincare_polynomial(&self) -> Result<&UnivariatePoly> {
        self.poincare.as_ref().ok_or(Error::NotVerified)
    }

    pub fn chamber_count(&self) -> Result<&BigInt> {
        self.chambers.as_ref().ok_or(Error::NotVerified)
    }

    pub fn to_json(&self) -> String {
        let doc = ReportJson {
            ell: self.ell,
            checks: &self.checks,
            saito_constant: self.saito_constant.as_ref().map(format_rational),
            poincare: self
                .poincare
                .as_ref()
                .map(|p| p.coeffs().iter().map(rational_value).collect()),
            chambers: self.chambers.as_ref().map(integer_value),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("ell = {}\n", self.ell));
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {}", c.name));
            if !c.passed() {
                out.push_str(&format!("  {}", c.witness));
            }
            out.push('\n');
        }
        if let Some(c) = &self.saito_constant {
            out.push_str(&format!("saito constant = {c}\n"));
        }
        if let Some(p) = &self.poincare {
            out.push_str(&format!("poincare = {}\n", p.display_in("t")));
        }
        if let Some(n) = &self.chambers {
            out.push_str(&format!("chambers = {n}\n"));
        }
        out.push_str(if self.passed() { "all checks pass\n" } else { "verification FAILED\n" });
        out
    }
}

fn violation_witness(v: &Violation) -> Value {
    json!({
        "hyperplane": v.hyperplane.to_string(),
        "remainder": poly_value(&v.remainder),
    })
}

fn saito_witness(outcome: &SaitoOutcome) -> Value {
    let degrees: Vec<Option<u32>> = outcome.degrees.clone();
    match (&outcome.constant, &outcome.failure) {
        (Some(c), _) => json!({ "constant": format_rational(c), "degrees": degrees }),
        (None, Some(SaitoFailure::Inhomogeneous { index })) => {
            json!({ "inhomogeneous_row": index, "degrees": degrees })
        }
        (None, Some(SaitoFailure::DegreeSum { sum, hyperplanes })) => {
            json!({ "degree_sum": sum, "hyperplanes": hyperplanes, "degrees": degrees })
        }
        (None, Some(SaitoFailure::NotMultiple { determinant })) => {
            json!({ "determinant": poly_value(determinant), "degrees": degrees })
        }
        (None, Some(SaitoFailure::Guard { predicted, bound })) => {
            json!({ "predicted_degree": predicted, "max_degree_guard": bound })
        }
        (None, None) => Value::Null,
    }
}

/// `(ell + 2)^ell`.
pub fn expected_chambers(ell: usize) -> BigInt {
    num_traits::pow(BigInt::from(ell + 2), ell)
}

fn lemma_check(ell: usize) -> Result<Check> {
    let lemma = check_lemma_n(ell)?;
    let witness = if lemma.passed() {
        Value::Null
    } else {
        json!({
            "determinant": poly_value(&lemma.determinant),
            "expected": poly_value(&lemma.expected),
            "row_identity_failures": lemma.row_identity_failures,
        })
    };
    Ok(Check::new("lemma_n", lemma.passed(), witness))
}

fn factorization_check(ell: usize) -> Result<Check> {
    let fact = check_factorization_p(ell)?;
    let witness = if fact.passed() {
        Value::Null
    } else {
        json!({
            "product_matches": fact.product_matches,
            "determinant": poly_value(&fact.determinant),
            "expected": poly_value(&fact.expected_determinant),
        })
    };
    Ok(Check::new("factorization_p", fact.passed(), witness))
}

/// Runs every check for rank `ell` and collects the results.
///
/// With a degree guard set, each determinant whose predicted degree exceeds
/// it is skipped and its check reported as failed.
pub fn run_verification(ell: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    let cone = ShiCone::new(ell)?;
    let basis = shi_basis(ell)?;
    let mut checks = Vec::new();

    let mut members_ok = true;
    for nd in &basis {
        let outcome = check_membership(&nd.derivation, &cone)?;
        members_ok &= outcome.passed();
        let witness = outcome.violation.as_ref().map_or(Value::Null, violation_witness);
        checks.push(Check::new(format!("membership:{}", nd.name), outcome.passed(), witness));
    }

    let guard_check = |name: &str, predicted: u32| -> Option<Check> {
        let bound = options.max_degree_guard?;
        (predicted > bound).then(|| {
            Check::new(
                name,
                false,
                json!({ "predicted_degree": predicted, "max_degree_guard": bound }),
            )
        })
    };

    if let Some(c) = guard_check("lemma_n", lemma_matrix_n(ell)?.degree_bound()) {
        checks.push(c);
    } else {
        checks.push(lemma_check(ell)?);
    }
    if let Some(c) = guard_check("factorization_p", p_matrix(ell)?.degree_bound()) {
        checks.push(c);
    } else {
        checks.push(factorization_check(ell)?);
    }

    let mut saito_constant = None;
    let mut exponents = None;
    if !options.skip_saito {
        let outcome = check_saito(&cone, options.max_degree_guard)?;
        checks.push(Check::new("saito", outcome.passed(), saito_witness(&outcome)));
        saito_constant = outcome.constant.clone();
        if outcome.passed() && members_ok {
            exponents = Some(ExponentSequence::new(outcome.degrees.iter().flatten().copied().collect()));
        }
    }

    let mut poincare = None;
    let mut chambers = None;
    if let Some(exps) = &exponents {
        let expected = ExponentSequence::expected(ell);
        checks.push(Check::new("exponents", exps == &expected, json!(exps.as_slice())));

        let pi = exps.poincare();
        let pi_ok = pi == expected_poincare(ell);
        checks.push(Check::new(
            "poincare",
            pi_ok,
            json!(pi.coeffs().iter().map(rational_value).collect::<Vec<_>>()),
        ));
        let count = chambers_from_poincare(&pi)?;
        checks.push(Check::new(
            "chambers",
            count == expected_chambers(ell),
            integer_value(&count),
        ));
        poincare = Some(pi);
        chambers = Some(count);
        exponents = Some(exps.clone());
    }

    if let Some(primes) = &options.oracle_primes {
        let chi = charpoly_finite_field(ell, primes)?;
        let half = chi.eval(&int(-1)).abs() / int(2);
        let ok = chi == exponent_charpoly(ell)
            && half.is_integer()
            && half.numer() == &expected_chambers(ell);
        checks.push(Check::new(
            "oracle_charpoly",
            ok,
            json!({
                "chi": chi.coeffs().iter().map(rational_value).collect::<Vec<_>>(),
                "chambers": rational_value(&half),
            }),
        ));
    }

    Ok(VerificationReport {
        ell,
        checks,
        saito_constant,
        exponents,
        poincare,
        chambers,
    })
}

/// `pi(S_ell, t)` from the degrees of the verified basis.
pub fn poincare_polynomial(ell: usize) -> Result<UnivariatePoly> {
    let report = run_verification(ell, &VerifyOptions::default())?;
    if !report.passed() {
        return Err(Error::NotVerified);
    }
    report.poincare_polynomial().cloned()
}

/// Chambers of the Shi arrangement, `pi(1) / 2` for the verified basis.
pub fn chamber_count(ell: usize) -> Result<BigInt> {
    chambers_from_poincare(&poincare_polynomial(ell)?)
}
