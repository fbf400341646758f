//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::a3::{golden_phi, ELL as A3_ELL};
use common::*;
use shi_basis::arrangement::ShiCone;
use shi_basis::bernoulli::{bernoulli_number, bernoulli_poly, bpq, difference_target};
use shi_basis::derivations::{phi, shi_basis};
use shi_basis::verify::{
    charpoly_finite_field, check_factorization_p, check_lemma_n, check_membership, check_saito,
    check_saito_basis, p_determinant_closed_form, run_verification, VerifyOptions,
};
use shi_basis::{Derivation, Monomial, Polynomial, Ring, UnivariatePoly};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn univariate(coeffs: Vec<Q>) -> UnivariatePoly {
    UnivariatePoly::new(coeffs)
}

/// `c * (f(x) - f(0))` for reference coefficients `f`.
fn minus_constant_scaled(f: &[Q], c: &Q) -> UnivariatePoly {
    let mut v = f.to_vec();
    v[0] = q(0);
    univariate(v.into_iter().map(|a| a * c).collect())
}

fn criterion_1() -> Outcome {
    const N: usize = 8;
    let numbers = bernoulli_numbers(2 * N + 1);
    let reference: Vec<Vec<Q>> = (0..=2 * N + 1).map(bernoulli_poly_ref).collect();
    let table: Vec<Vec<UnivariatePoly>> = (0..=N)
        .map(|p| (0..=2 * N).map(|qq| bpq(p, qq)).collect())
        .collect();

    ensure(
        table[1][1] == univariate(vec![q(0), q(-1) / q(3), q(0), q(1) / q(3)]),
        || "B_{1,1} differs from (x^3 - x)/3".into(),
    )?;
    for k in 0..=2 * N + 1 {
        ensure(bernoulli_number(k) == numbers[k], || format!("B_{k}"))?;
        ensure(bernoulli_poly(k).coeffs() == trim(reference[k].clone()).as_slice(), || format!("B_{k}(x)"))?;
    }
    for p in 0..=N {
        for qq in 0..=N {
            let b = &table[p][qq];
            ensure(&b.shift(&q(1)) - b == difference_target(p, qq), || {
                format!("difference equation fails at ({p},{qq})")
            })?;
            ensure(b.coeff(0).is_zero(), || format!("B_{{{p},{qq}}}(0) != 0"))?;
            ensure(b.coeffs() == trim(bpq_by_linear_solve(p, qq)).as_slice(), || {
                format!("linear-solve oracle disagrees at ({p},{qq})")
            })?;

            // General expression through Bernoulli polynomials.
            let mut via_bernoulli = UnivariatePoly::zero();
            let mut via_b0 = UnivariatePoly::zero();
            for i in 0..=p {
                let k = qq + i + 1;
                let c = binom(p, i) / q(k as i64);
                via_bernoulli = &via_bernoulli + &minus_constant_scaled(&reference[k], &c);
                via_b0 = &via_b0 + &table[0][qq + i].scale(&binom(p, i));
            }
            ensure(*b == via_bernoulli && *b == via_b0, || {
                format!("sum expressions disagree at ({p},{qq})")
            })?;
        }
        // B_{0,m} and B_{m,0} in closed form.
        let m = p;
        let b0m = minus_constant_scaled(&reference[m + 1], &(q(1) / q(m as i64 + 1)));
        ensure(table[0][m] == b0m, || format!("B_{{0,{m}}} closed form"))?;
        let sign = if (m + 1) % 2 == 0 { q(1) } else { q(-1) };
        let reflected = univariate(reference[m + 1].clone()).reflect();
        let bm0 = (&reflected - &UnivariatePoly::constant(numbers[m + 1].clone()))
            .scale(&(sign.clone() / q(m as i64 + 1)));
        ensure(table[m][0] == bm0, || format!("B_{{{m},0}} closed form"))?;
        ensure(table[m][0] == table[0][m].reflect().scale(&sign), || {
            format!("B_{{{m},0}} reflection identity")
        })?;
    }
    Ok("81 pairs (p, q) <= 8; B_{1,1} = (x^3 - x)/3".into())
}

fn criterion_2() -> Outcome {
    let mut at_six = Duration::ZERO;
    for ell in 1..=6 {
        let start = Instant::now();
        let cone = ShiCone::new(ell).unwrap();
        ensure(cone.len() == 1 + ell * (ell + 1), || format!("|S_{ell}|"))?;
        for nd in shi_basis(ell).unwrap() {
            let out = check_membership(&nd.derivation, &cone).unwrap();
            ensure(out.passed(), || format!("{} at ell = {ell}: {:?}", nd.name, out.violation))?;
        }
        if ell == 6 {
            at_six = start.elapsed();
        }
    }
    ensure(at_six < Duration::from_secs(60), || format!("ell = 6 took {at_six:?}"))?;
    Ok(format!("eta1, eta2, phi_j for ell = 1..6; ell = 6 in {at_six:.2?}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for ell in 1..=4 {
        let out = check_lemma_n(ell).unwrap();
        ensure(out.determinant == out.expected, || format!("det N at ell = {ell}"))?;
        ensure(out.row_identity_failures.is_empty(), || {
            format!("row identity at ell = {ell}, rows {:?}", out.row_identity_failures)
        })?;
    }
    let r = Ring::new(2);
    ensure(check_lemma_n(2).unwrap().determinant == &r.x(3) - &r.x(1), || "det N at ell = 2".into())?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {took:?}"))?;
    Ok(format!("ell = 1..4 in {took:.2?}"))
}

fn squared_vandermonde(ell: usize) -> Polynomial {
    let r = Ring::new(ell);
    let mut acc = r.one();
    for p in 1..=ell + 1 {
        for qq in p + 1..=ell + 1 {
            let d = &r.x(p) - &r.x(qq);
            acc = &acc * &(&d * &d);
        }
    }
    acc
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut constants = Vec::new();
    for ell in 1..=3 {
        let out = check_factorization_p(ell).unwrap();
        ensure(out.product_matches, || format!("P != M D1 N~ D2 at ell = {ell}"))?;
        ensure(out.determinant == out.expected_determinant, || format!("det P at ell = {ell}"))?;
        let c = out
            .determinant
            .div_exact(&squared_vandermonde(ell))
            .unwrap()
            .as_constant()
            .expect("constant ratio");
        let sign = if (ell * (ell + 1) / 2) % 2 == 0 { q(1) } else { q(-1) };
        let factorial: i64 = (1..=ell as i64).product();
        ensure(c == sign / q(factorial), || format!("constant {c} at ell = {ell}"))?;
        ensure(p_determinant_closed_form(ell) == out.determinant, || format!("closed form at ell = {ell}"))?;
        constants.push(c.to_string());
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("constants {} in {took:.2?}", constants.join(", ")))
}

fn criterion_5() -> Outcome {
    let mut constants = Vec::new();
    let mut at_four = Duration::ZERO;
    let mut precheck = Duration::ZERO;
    for ell in 1..=4 {
        let cone = ShiCone::new(ell).unwrap();
        let start = Instant::now();
        let degree_sum: u32 = shi_basis(ell)
            .unwrap()
            .iter()
            .map(|nd| nd.derivation.degree().unwrap())
            .sum();
        if ell == 4 {
            precheck = start.elapsed();
        }
        ensure(degree_sum as usize == cone.len(), || format!("degree sum at ell = {ell}"))?;
        let start = Instant::now();
        let out = check_saito(&cone, None).unwrap();
        if ell == 4 {
            at_four = start.elapsed();
        }
        let c = out.constant.clone().ok_or_else(|| format!("ell = {ell}: {:?}", out.failure))?;
        ensure(!c.is_zero(), || format!("zero constant at ell = {ell}"))?;
        let mut expected_degrees = vec![Some(0), Some(1)];
        expected_degrees.extend(std::iter::repeat(Some(ell as u32 + 1)).take(ell));
        ensure(out.degrees == expected_degrees, || format!("degrees {:?}", out.degrees))?;
        constants.push(c.to_string());
    }
    ensure(constants[0] == "1", || format!("c = {} at ell = 1", constants[0]))?;
    ensure(at_four < Duration::from_secs(600), || format!("ell = 4 took {at_four:?}"))?;
    Ok(format!(
        "c = {} for ell = 1..4; ell = 4 determinant {at_four:.2?}, precheck {precheck:.2?}",
        constants.join(", ")
    ))
}

fn criterion_6() -> Outcome {
    for j in 1..=A3_ELL {
        let computed = phi(j, A3_ELL).unwrap();
        let golden = golden_phi(j);
        for (i, (c, g)) in computed.coeffs().iter().zip(golden.coeffs()).enumerate() {
            ensure(c == g, || format!("phi_{j}, coefficient {i}"))?;
        }
    }
    Ok("phi_1, phi_2, phi_3 at ell = 3, every coefficient".into())
}

/// `(1 + t)(1 + (ell+1) t)^ell` by the binomial theorem.
fn expected_poincare(ell: usize) -> Vec<Q> {
    let mut out = vec![q(0); ell + 2];
    for k in 0..=ell {
        let c = binom(ell, k) * num_traits::pow(q(ell as i64 + 1), k);
        out[k] += &c;
        out[k + 1] += c;
    }
    out
}

fn criterion_7() -> Outcome {
    let expected_chambers = [3, 16, 125, 1296];
    for ell in 1..=4 {
        let report = run_verification(ell, &VerifyOptions::default()).unwrap();
        ensure(report.passed(), || report.to_text())?;
        let pi = report.poincare_polynomial().unwrap();
        ensure(pi.coeffs() == expected_poincare(ell).as_slice(), || format!("pi at ell = {ell}: {pi}"))?;
        let n = report.chamber_count().unwrap();
        ensure(n == &BigInt::from(expected_chambers[ell - 1]), || format!("{n} chambers at ell = {ell}"))?;
        ensure(n == &num_traits::pow(BigInt::from(ell + 2), ell), || "(ell+2)^ell".into())?;
    }
    Ok("chambers 3, 16, 125, 1296".into())
}

/// `t (t - 1) (t - (ell+1))^ell` by the binomial theorem.
fn expected_charpoly(ell: usize) -> Vec<Q> {
    let mut shifted = vec![q(0); ell + 1];
    for k in 0..=ell {
        shifted[k] = binom(ell, k) * num_traits::pow(q(-(ell as i64) - 1), ell - k);
    }
    let mut out = vec![q(0); ell + 3];
    for (k, c) in shifted.iter().enumerate() {
        out[k + 2] += c;
        out[k + 1] -= c;
    }
    out
}

fn criterion_8() -> Outcome {
    let mut at_three = Duration::ZERO;
    for ell in 1..=3 {
        let start = Instant::now();
        let chi = charpoly_finite_field(ell, &[5, 7, 11, 13]).unwrap();
        if ell == 3 {
            at_three = start.elapsed();
        }
        ensure(chi.coeffs() == expected_charpoly(ell).as_slice(), || format!("chi at ell = {ell}: {chi}"))?;
        let half = chi.eval(&q(-1)).abs() / q(2);
        let target = q(num_traits::pow(ell as i64 + 2, ell));
        ensure(half == target, || format!("|chi(-1)|/2 = {half} at ell = {ell}"))?;
    }
    ensure(at_three < Duration::from_secs(30), || format!("ell = 3 took {at_three:?}"))?;
    Ok(format!("primes 5, 7, 11, 13 for ell = 1..3; ell = 3 in {at_three:.2?}"))
}

fn mutate(theta: &Derivation, rng: &mut ChaCha8Rng) -> (Derivation, String) {
    let ring = theta.ring();
    let slots: Vec<(usize, Monomial)> = theta
        .coeffs()
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.terms().map(move |(m, _)| (i, m.clone())))
        .collect();
    let (i, m) = slots[rng.gen_range(0..slots.len())].clone();
    let bump = Polynomial::from_terms(ring, [(m.clone(), q(1))]);
    let coeff = &theta.coeffs()[i] + &bump;
    let label = format!("coefficient {i}, monomial {:?}", m.exponents());
    (theta.with_coeff(i, coeff).unwrap(), label)
}

fn criterion_9() -> Outcome {
    const ELL: usize = 2;
    const TRIALS: usize = 100;
    let cone = ShiCone::new(ELL).unwrap();
    let basis: Vec<Derivation> = shi_basis(ELL).unwrap().into_iter().map(|nd| nd.derivation).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5111_2024);
    let (mut by_membership, mut by_saito) = (0, 0);
    for trial in 0..TRIALS {
        let j = rng.gen_range(1..=ELL);
        let (mutated, label) = mutate(&basis[j + 1], &mut rng);
        let member = check_membership(&mutated, &cone).unwrap().passed();
        let mut corrupted = basis.clone();
        corrupted[j + 1] = mutated;
        let saito = check_saito_basis(&cone, &corrupted, None).unwrap().passed();
        by_membership += usize::from(!member);
        by_saito += usize::from(!saito);
        ensure(!member || !saito, || format!("trial {trial}: phi_{j} {label} went undetected"))?;
    }
    Ok(format!(
        "{TRIALS}/{TRIALS} detected (membership {by_membership}, saito {by_saito})"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("B_{p,q} identities", criterion_1),
        ("membership", criterion_2),
        ("det N closed form", criterion_3),
        ("P factorization", criterion_4),
        ("Saito criterion", criterion_5),
        ("rank-three golden", criterion_6),
        ("counting", criterion_7),
        ("finite-field oracle", criterion_8),
        ("mutation honesty", criterion_9),
    ];
    let mut failures = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} [{took:.2?}]", n + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {} FAIL  {name}: {why} [{took:.2?}]", n + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
