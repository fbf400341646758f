//! The determinant identities behind linear independence: the matrix `N` of
//! elementary symmetric functions, and the factorization of the
//! `z = 0` coefficient matrix `P = M D1 Ñ D2`.

use num_bigint::BigInt;

use crate::arrangement::{lemma_matrix_n, IndexSubsets};
use crate::derivations::phi;
use crate::error::Result;
use crate::polyring::{determinant, PolyMatrix, Polynomial, Ring};
use crate::rational::{factorial, int, Rational};

fn sign(exponent: usize) -> i64 {
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(-1)^{ell(ell-1)/2} prod_{1 <= p < q <= ell+1, q-p > 1} (x_p - x_q)`.
pub fn lemma_n_closed_form(ell: usize) -> Polynomial {
    let ring = Ring::new(ell);
    let mut acc = ring.constant(int(sign(ell * (ell - 1) / 2)));
    for p in 1..=ell + 1 {
        for q in p + 2..=ell + 1 {
            acc = &acc * &(&ring.x(p) - &ring.x(q));
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub determinant: Polynomial,
    pub expected: Polynomial,
    /// Rows `p` for which `[1, -x_p, .., (-x_p)^{ell-1}] N` differs from
    /// `[prod_{s != j, j+1} (x_s - x_p)]_j`.
    pub row_identity_failures: Vec<usize>,
}

impl LemmaOutcome {
    pub fn passed(&self) -> bool {
        self.determinant == self.expected && self.row_identity_failures.is_empty()
    }
}

pub fn check_lemma_n(ell: usize) -> Result<LemmaOutcome> {
    let n = lemma_matrix_n(ell)?;
    let ring = n.ring();
    let det = determinant(&n)?;

    let mut row_identity_failures = Vec::new();
    for p in 1..=ell {
        let minus_xp = -ring.x(p);
        let row: Vec<Polynomial> = (0..ell).map(|k| minus_xp.pow(k as u32)).collect();
        let holds = (1..=ell).all(|j| {
            let lhs = (0..ell).fold(ring.zero(), |acc, i| &acc + &(&row[i] * n.get(i, j - 1)));
            let vars = IndexSubsets::new(j, ell).expect("j in range").union();
            let rhs = vars
                .iter()
                .fold(ring.one(), |acc, &s| &acc * &(&ring.x(s) - &ring.x(p)));
            lhs == rhs
        });
        if !holds {
            row_identity_failures.push(p);
        }
    }

    Ok(LemmaOutcome {
        determinant: det,
        expected: lemma_n_closed_form(ell),
        row_identity_failures,
    })
}

/// The factors of `P`, each `(ell+1) x (ell+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFactors {
    /// `M = [x_i^{j-1}]`.
    pub vandermonde: PolyMatrix,
    /// `D1 = [1] ⊕ [1] ⊕ [-1/2] ⊕ .. ⊕ [(-1)^{ell-1}/ell]`.
    pub d1: PolyMatrix,
    /// `Ñ = [1] ⊕ N`.
    pub n_tilde: PolyMatrix,
    /// `D2 = [1] ⊕ [x_1 - x_2] ⊕ .. ⊕ [x_ell - x_{ell+1}]`.
    pub d2: PolyMatrix,
}

pub fn p_factors(ell: usize) -> Result<PFactors> {
    let ring = Ring::new(ell);
    let n = ell + 1;
    let vandermonde = PolyMatrix::from_fn(ring, n, n, |i, j| ring.x(i + 1).pow(j as u32));
    let mut d1 = vec![ring.one()];
    d1.extend((1..=ell).map(|k| ring.constant(int(sign(k - 1)) / int(k as i64))));
    let mut d2 = vec![ring.one()];
    d2.extend((1..=ell).map(|p| &ring.x(p) - &ring.x(p + 1)));
    Ok(PFactors {
        vandermonde,
        d1: PolyMatrix::diagonal(ring, d1),
        n_tilde: lemma_matrix_n(ell)?.bordered(ring.one()),
        d2: PolyMatrix::diagonal(ring, d2),
    })
}

/// `P`: first column all ones, column `j+1` holds `phi_j|_{z=0}(x_i)`.
pub fn p_matrix(ell: usize) -> Result<PolyMatrix> {
    let ring = Ring::new(ell);
    let deconed = (1..=ell)
        .map(|j| phi(j, ell).map(|d| d.decone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyMatrix::from_fn(ring, ell + 1, ell + 1, |i, j| {
        if j == 0 {
            ring.one()
        } else {
            deconed[j - 1].coeff(i).clone()
        }
    }))
}

/// `((-1)^{ell(ell+1)/2} / ell!) prod_{p<q} (x_p - x_q)^2`.
pub fn p_determinant_closed_form(ell: usize) -> Polynomial {
    let ring = Ring::new(ell);
    let c = int(sign(ell * (ell + 1) / 2)) / Rational::from_integer(BigInt::from(factorial(ell as u32)));
    let mut acc = ring.constant(c);
    for p in 1..=ell + 1 {
        for q in p + 1..=ell + 1 {
            acc = &acc * &(&ring.x(p) - &ring.x(q)).pow(2);
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationOutcome {
    pub product_matches: bool,
    pub determinant: Polynomial,
    pub expected_determinant: Polynomial,
}

impl FactorizationOutcome {
    pub fn passed(&self) -> bool {
        self.product_matches && self.determinant == self.expected_determinant
    }
}

pub fn check_factorization_p(ell: usize) -> Result<FactorizationOutcome> {
    let p = p_matrix(ell)?;
    let f = p_factors(ell)?;
    let product = f
        .vandermonde
        .try_mul(&f.d1)?
        .try_mul(&f.n_tilde)?
        .try_mul(&f.d2)?;
    Ok(FactorizationOutcome {
        product_matches: product == p,
        determinant: determinant(&p)?,
        expected_determinant: p_determinant_closed_form(ell),
    })
}
