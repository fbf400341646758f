//! Reference computations shared by the integration tests. Each one takes a
//! different route from the library code it is compared against.

#![allow(dead_code)]

pub mod a3;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use shi_basis::polyring::PolyMatrix;
use shi_basis::{Derivation, Monomial, Polynomial, Ring};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn binom(n: usize, k: usize) -> Q {
    let mut acc = q(1);
    for i in 0..k {
        acc = acc * q((n - i) as i64) / q((i + 1) as i64);
    }
    acc
}

/// Bernoulli numbers with `B_1 = -1/2`, by the Akiyama-Tanigawa algorithm
/// (which yields `B_1 = +1/2`; the sign is flipped afterwards).
pub fn bernoulli_numbers(n: usize) -> Vec<Q> {
    let mut out = Vec::with_capacity(n + 1);
    let mut a: Vec<Q> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(q(1) / q(m as i64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = q(j as i64) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// Ascending coefficients of `(x+1)^p x^q`.
pub fn difference_rhs(p: usize, qq: usize) -> Vec<Q> {
    let mut c = vec![q(0); p + qq + 1];
    for i in 0..=p {
        c[i + qq] = binom(p, i);
    }
    c
}

/// `B_{p,q}` by solving `f(x+1) - f(x) = (x+1)^p x^q`, `f(0) = 0` for the
/// coefficients of `f`, top degree first. The coefficient of `x^{k-1}` in
/// `(x+1)^k - x^k` is `k`, so the system is triangular.
pub fn bpq_by_linear_solve(p: usize, qq: usize) -> Vec<Q> {
    let n = p + qq + 1;
    let rhs = difference_rhs(p, qq);
    let mut f = vec![q(0); n + 1];
    for k in (1..=n).rev() {
        // Contribution of already-solved higher terms to x^{k-1}.
        let mut known = q(0);
        for m in k + 1..=n {
            known += &f[m] * binom(m, k - 1);
        }
        f[k] = (&rhs[k - 1] - known) / q(k as i64);
    }
    f
}

/// Ascending coefficients of `B_k(x)` from the reference numbers.
pub fn bernoulli_poly_ref(k: usize) -> Vec<Q> {
    let b = bernoulli_numbers(k);
    (0..=k).map(|d| binom(k, d) * &b[k - d]).collect()
}

pub fn eval(coeffs: &[Q], x: &Q) -> Q {
    coeffs.iter().rev().fold(q(0), |acc, c| acc * x + c)
}

pub fn trim(mut v: Vec<Q>) -> Vec<Q> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// `z^deg f(x_i / z)` for ascending univariate coefficients.
pub fn homogenize(coeffs: &[Q], deg: usize, i: usize, ring: Ring) -> Polynomial {
    let xi = ring.x_index(i).unwrap();
    let z = ring.z_index();
    Polynomial::from_terms(
        ring,
        coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let mut e = vec![0u32; ring.nvars()];
            e[xi] = k as u32;
            e[z] = (deg - k) as u32;
            (Monomial::new(e), c.clone())
        }),
    )
}

/// `sigma_d` of the listed `x` indices by enumerating `d`-subsets.
pub fn sigma_by_subsets(d: usize, vars: &[usize], ring: Ring) -> Polynomial {
    let n = vars.len();
    if d > n {
        return ring.zero();
    }
    let mut acc = ring.zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != d {
            continue;
        }
        let mut e = vec![0u32; ring.nvars()];
        for (bit, &v) in vars.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                e[v - 1] += 1;
            }
        }
        acc = &acc + &Polynomial::from_terms(ring, [(Monomial::new(e), q(1))]);
    }
    acc
}

/// `phi_j` straight from its defining double sum.
pub fn phi_reference(j: usize, ell: usize) -> Derivation {
    let ring = Ring::new(ell);
    let first: Vec<usize> = (1..j).collect();
    let second: Vec<usize> = (j + 2..=ell + 1).collect();
    let factor = &(&ring.x(j) - &ring.x(j + 1)) - &ring.z();
    let mut coeffs = Vec::new();
    for i in 1..=ell + 1 {
        let mut inner = ring.zero();
        for k1 in 0..j {
            for k2 in 0..=ell - j {
                let s1 = sigma_by_subsets(j - 1 - k1, &first, ring);
                let s2 = sigma_by_subsets(ell - j - k2, &second, ring);
                let b = homogenize(&bpq_by_linear_solve(k1, k2), k1 + k2 + 1, i, ring);
                let mut term = &(&s1 * &s2) * &b;
                if (k1 + k2) % 2 == 1 {
                    term = -term;
                }
                inner = &inner + &term;
            }
        }
        coeffs.push(&factor * &inner);
    }
    coeffs.push(ring.zero());
    Derivation::new(ring, coeffs).unwrap()
}

/// Determinant as a signed sum over all permutations.
pub fn leibniz_determinant(m: &PolyMatrix) -> Polynomial {
    let n = m.rows();
    let ring = m.ring();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = ring.zero();
    permute(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for a in 0..n {
            for b in a + 1..n {
                if p[a] > p[b] {
                    inversions += 1;
                }
            }
        }
        let mut term = ring.one();
        for (r, &c) in p.iter().enumerate() {
            term = &term * m.get(r, c);
        }
        if inversions % 2 == 1 {
            term = -term;
        }
        acc = &acc + &term;
    });
    acc
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}
