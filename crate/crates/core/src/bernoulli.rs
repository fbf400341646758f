//! Bernoulli numbers, Bernoulli polynomials and the two-parameter family
//! `B_{p,q}`.
//!
//! Conventions: `B_1 = -1/2`, fixed by `sum_{i=0}^{k} C(k+1, i) B_i = 0`.
//! `B_{p,q}` is the unique polynomial with
//! `B_{p,q}(x+1) - B_{p,q}(x) = (x+1)^p x^q` and `B_{p,q}(0) = 0`; it has
//! degree `p + q + 1`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polyring::{Monomial, Polynomial, Ring, TermJson};
use crate::rational::{binomial, format_rational, int, Rational};

pub const DEFAULT_MEMO_CAP: usize = 64;

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `x^k`.
/// The highest stored coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x`.
    pub fn x() -> Self {
        Self::monomial(int(1), 1)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(int(1)), |acc, _| &acc * self)
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        // Repeated synthetic division by (x - a) (Horner's Taylor shift).
        let mut c = self.coeffs.clone();
        let n = c.len();
        let unit = a.is_one();
        for i in 0..n.saturating_sub(1) {
            for j in (i..n - 1).rev() {
                let carry = if unit { c[j + 1].clone() } else { a * &c[j + 1] };
                c[j] += carry;
            }
        }
        Self::new(c)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    /// `z^d p(x/z)` placed in `ring` with `x` at index `var`.
    pub fn homogenize(&self, degree: u32, ring: Ring, var: usize) -> Result<Polynomial> {
        ring.check_index(var)?;
        let z = ring.z_index();
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let mut exps = vec![0u32; ring.nvars()];
            exps[var] += k as u32;
            exps[z] += degree - k as u32;
            (Monomial::new(exps), c.clone())
        });
        Ok(Polynomial::from_terms(ring, terms))
    }

    pub fn to_json_value(&self, var: &str) -> UnivariateJson {
        UnivariateJson {
            var: var.to_string(),
            terms: self
                .coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| TermJson {
                    c: format_rational(c),
                    e: vec![k as u32],
                })
                .collect(),
        }
    }

    /// Plain-text rendering in the given variable name.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (out.is_empty(), c.is_negative()) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            let coeff = if abs.denom().is_one() {
                abs.numer().to_string()
            } else {
                format_rational(&abs)
            };
            match k {
                0 => out.push_str(&coeff),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&coeff);
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

/// Univariate wire form: `{"var": "x", "terms": [{"c": .., "e": [k]}, ..]}`,
/// terms by descending degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnivariateJson {
    pub var: String,
    pub terms: Vec<TermJson>,
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn add(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn sub(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn mul(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(out)
    }
}

impl Neg for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn neg(self) -> UnivariatePoly {
        UnivariatePoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Memo table for Bernoulli numbers. Entries below `cap` are computed once
/// and kept; larger indices are computed on demand without being stored.
#[derive(Debug)]
pub struct BernoulliTable {
    cap: usize,
    cache: RwLock<Vec<Rational>>,
}

impl BernoulliTable {
    pub fn new(cap: usize) -> Self {
        BernoulliTable {
            cap,
            cache: RwLock::new(vec![int(1)]),
        }
    }

    pub fn get(&self, k: usize) -> Rational {
        {
            let cache = self.cache.read().expect("bernoulli cache poisoned");
            if let Some(b) = cache.get(k) {
                return b.clone();
            }
        }
        if k < self.cap {
            let mut cache = self.cache.write().expect("bernoulli cache poisoned");
            extend_numbers(&mut cache, k + 1);
            return cache[k].clone();
        }
        let mut scratch = self.cache.read().expect("bernoulli cache poisoned").clone();
        extend_numbers(&mut scratch, k + 1);
        scratch[k].clone()
    }
}

fn extend_numbers(table: &mut Vec<Rational>, len: usize) {
    while table.len() < len {
        let k = table.len();
        let sum = table
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, b)| {
                acc + Rational::from_integer(binomial(k as u32 + 1, i as u32)) * b
            });
        table.push(-sum / int(k as i64 + 1));
    }
}

fn global_table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable::new(DEFAULT_MEMO_CAP))
}

/// The Bernoulli number `B_k` with `B_1 = -1/2`.
pub fn bernoulli_number(k: usize) -> Rational {
    global_table().get(k)
}

/// `B_k(x) = sum_i C(k, i) B_i x^(k-i)`.
pub fn bernoulli_poly(k: usize) -> UnivariatePoly {
    let mut coeffs = vec![Rational::zero(); k + 1];
    for i in 0..=k {
        coeffs[k - i] = Rational::from_integer(binomial(k as u32, i as u32)) * bernoulli_number(i);
    }
    UnivariatePoly::new(coeffs)
}

/// `B_{0,m}(x) = (B_{m+1}(x) - B_{m+1}) / (m + 1)`.
fn b_zero(m: usize) -> UnivariatePoly {
    let shifted = &bernoulli_poly(m + 1) - &UnivariatePoly::constant(bernoulli_number(m + 1));
    shifted.scale(&(int(1) / int(m as i64 + 1)))
}

type BpqCache = RwLock<HashMap<(usize, usize), UnivariatePoly>>;

fn bpq_cache() -> &'static BpqCache {
    static CACHE: OnceLock<BpqCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `B_{p,q}(x) = sum_{i=0}^{p} C(p, i) B_{0,q+i}(x)`.
///
/// Results with `p + q < DEFAULT_MEMO_CAP` are memoized, so each is built
/// and checked once per process.
///
/// # Panics
/// If the result fails its defining difference equation or does not vanish
/// at zero; either would be an arithmetic bug.
pub fn bpq(p: usize, q: usize) -> UnivariatePoly {
    let memo = p + q < DEFAULT_MEMO_CAP;
    if memo {
        if let Some(hit) = bpq_cache().read().expect("bpq cache poisoned").get(&(p, q)) {
            return hit.clone();
        }
    }
    let acc = if p == 0 {
        b_zero(q)
    } else {
        (0..=p).fold(UnivariatePoly::zero(), |acc, i| {
            let term = bpq(0, q + i).scale(&Rational::from_integer(binomial(p as u32, i as u32)));
            &acc + &term
        })
    };
    assert_eq!(
        &acc.shift(&int(1)) - &acc,
        difference_target(p, q),
        "B_{{{p},{q}}} fails its difference equation"
    );
    assert!(acc.coeff(0).is_zero(), "B_{{{p},{q}}}(0) != 0");
    if memo {
        bpq_cache()
            .write()
            .expect("bpq cache poisoned")
            .insert((p, q), acc.clone());
    }
    acc
}

/// `(x+1)^p x^q`.
pub fn difference_target(p: usize, q: usize) -> UnivariatePoly {
    let x_plus_one = UnivariatePoly::from_integers(&[1, 1]);
    &x_plus_one.pow(p as u32) * &UnivariatePoly::monomial(int(1), q)
}

/// `z^{p+q+1} B_{p,q}(x_i / z)` in the `ell` ring, `i` one-based.
pub fn bpq_homogenized(p: usize, q: usize, i: usize, ring: Ring) -> Result<Polynomial> {
    let var = ring.x_index(i)?;
    bpq(p, q).homogenize((p + q + 1) as u32, ring, var)
}
