//! Characteristic polynomial of `S_ell` by counting points of `F_q^{ell+2}`
//! that lie on no hyperplane.
//!
//! The arrangement is central with a one-dimensional center, so
//! `chi(t) = t (t - 1) R(t)` with `R` monic of degree `ell`. Each prime
//! contributes one value `R(q) = count(q) / (q (q - 1))`; `ell` primes fix
//! `R`, and any further primes are checked against it.

use rayon::prelude::*;

use crate::bernoulli::UnivariatePoly;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Points `(x_1, .., x_{ell+1}, z)` of `F_q^{ell+2}` with `z != 0`,
/// `x_p != x_q` and `x_p - x_q != z` for all `p < q`.
pub fn count_complement(ell: usize, q: u64) -> u64 {
    fn extend(xs: &mut Vec<u64>, remaining: usize, q: u64, z: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for v in 0..q {
            // x_p - v must avoid 0 and z for every earlier coordinate
            let ok = xs.iter().all(|&x| {
                let diff = (x + q - v) % q;
                diff != 0 && diff != z
            });
            if ok {
                xs.push(v);
                total += extend(xs, remaining - 1, q, z);
                xs.pop();
            }
        }
        total
    }
    (1..q)
        .into_par_iter()
        .map(|z| extend(&mut Vec::with_capacity(ell + 1), ell + 1, q, z))
        .sum()
}

/// Interpolates `chi(S_ell, t)` from point counts over the given primes.
pub fn charpoly_finite_field(ell: usize, primes: &[u64]) -> Result<UnivariatePoly> {
    let mut seen = Vec::new();
    for &p in primes {
        if !is_prime(p) {
            return Err(Error::InvalidPrime {
                prime: p,
                reason: "not prime".into(),
            });
        }
        if p <= ell as u64 + 1 {
            return Err(Error::InvalidPrime {
                prime: p,
                reason: format!("must exceed ell + 1 = {}", ell + 1),
            });
        }
        if seen.contains(&p) {
            return Err(Error::InvalidPrime {
                prime: p,
                reason: "repeated".into(),
            });
        }
        seen.push(p);
    }
    if seen.len() < ell.max(1) {
        return Err(Error::TooFewPrimes {
            needed: ell.max(1),
            got: seen.len(),
        });
    }

    let counts: Vec<(u64, u64)> = seen
        .par_iter()
        .map(|&q| (q, count_complement(ell, q)))
        .collect();

    // Values of S(t) = R(t) - t^ell, of degree < ell.
    let mut points = Vec::with_capacity(counts.len());
    for &(q, count) in &counts {
        let denom = q * (q - 1);
        if count % denom != 0 {
            return Err(Error::OracleInconsistent(format!(
                "count {count} over F_{q} is not divisible by q(q-1)"
            )));
        }
        let r = int((count / denom) as i64);
        let qr = int(q as i64);
        points.push((qr.clone(), r - num_traits::pow(qr, ell)));
    }

    let (fit, check) = points.split_at(ell);
    let s = lagrange(fit);
    for (x, y) in check {
        if &s.eval(x) != y {
            return Err(Error::OracleInconsistent(format!(
                "count at q = {x} disagrees with the interpolant"
            )));
        }
    }
    let r = &s + &UnivariatePoly::monomial(int(1), ell);
    let t_t_minus_one = UnivariatePoly::from_integers(&[0, -1, 1]);
    Ok(&t_t_minus_one * &r)
}

fn lagrange(points: &[(Rational, Rational)]) -> UnivariatePoly {
    let mut acc = UnivariatePoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = UnivariatePoly::constant(int(1));
        let mut denom = int(1);
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &UnivariatePoly::new(vec![-xj.clone(), int(1)]);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

/// `t (t - 1) (t - (ell + 1))^ell`, the polynomial with the basis degrees
/// as roots.
pub fn exponent_charpoly(ell: usize) -> UnivariatePoly {
    let shifted = UnivariatePoly::from_integers(&[-(ell as i64) - 1, 1]);
    &UnivariatePoly::from_integers(&[0, -1, 1]) * &shifted.pow(ell as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_complement(1, 5), 60);
        assert_eq!(count_complement(2, 5), 80);
    }

    #[test]
    fn interpolation_matches_exponents() {
        assert_eq!(charpoly_finite_field(1, &[5, 7]).unwrap(), exponent_charpoly(1));
        assert_eq!(charpoly_finite_field(2, &[5, 7, 11]).unwrap(), exponent_charpoly(2));
    }

    #[test]
    fn prime_validation() {
        assert!(matches!(
            charpoly_finite_field(2, &[3, 5]),
            Err(Error::InvalidPrime { prime: 3, .. })
        ));
        assert!(matches!(
            charpoly_finite_field(1, &[9]),
            Err(Error::InvalidPrime { prime: 9, .. })
        ));
        assert!(matches!(
            charpoly_finite_field(1, &[5, 5]),
            Err(Error::InvalidPrime { prime: 5, .. })
        ));
        assert!(matches!(
            charpoly_finite_field(3, &[5, 7]),
            Err(Error::TooFewPrimes { needed: 3, got: 2 })
        ));
    }
}
