use std::collections::btree_map::Entry as BEntry;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, Ring};
use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// A polynomial in canonical sparse form: no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: Ring, c: Rational) -> Self {
        Self::from_terms(ring, [(Monomial::one(ring.nvars()), c)])
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing
    /// repeated monomials and dropping zeros.
    ///
    /// # Panics
    /// If a monomial's length differs from the ring's variable count.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.nvars(), "monomial length does not match ring");
            add_term(&mut map, m, c);
        }
        Polynomial { ring, terms: map }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.degree() == 0 && c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lex-largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Constant term value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(other.ring)?;
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial {
            ring: self.ring,
            terms,
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(other.ring)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), -c);
        }
        Ok(Polynomial {
            ring: self.ring,
            terms,
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.ring));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.len().saturating_mul(other.len()).min(1 << 16));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    Entry::Occupied(mut e) => *e.get_mut() += c,
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Ok(Polynomial {
            ring: self.ring,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to the variable at index `var`.
    pub fn derivative(&self, var: usize) -> Result<Polynomial> {
        self.ring.check_index(var)?;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            terms.insert(Monomial::new(exps), c * Rational::from_integer(e.into()));
        }
        Ok(Polynomial {
            ring: self.ring,
            terms,
        })
    }

    /// Image of `self` under `var -> value`.
    pub fn substitute(&self, var: usize, value: &Polynomial) -> Result<Polynomial> {
        self.ring.check_index(var)?;
        self.ring.check_same(value.ring)?;
        // Group by the exponent of `var`, then sum c_e * value^e.
        let mut groups: BTreeMap<u32, BTreeMap<Monomial, Rational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            let e = std::mem::take(&mut exps[var]);
            groups
                .entry(e)
                .or_default()
                .insert(Monomial::new(exps), c.clone());
        }
        let mut result = Polynomial::zero(self.ring);
        let mut power = self.ring.one();
        let mut power_exp = 0;
        for (e, terms) in groups {
            while power_exp < e {
                power = &power * value;
                power_exp += 1;
            }
            let part = Polynomial {
                ring: self.ring,
                terms,
            };
            result = &result + &(&part * &power);
        }
        Ok(result)
    }

    /// Exact quotient `self / divisor`. A nonzero remainder is an
    /// [`Error::InexactDivision`].
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(divisor.ring)?;
        let (lm, lc) = divisor
            .leading_term()
            .ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?;
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.last_key_value() {
            let qm = m.div(lm).ok_or_else(|| {
                Error::InexactDivision(format!(
                    "leading monomial of divisor does not divide remainder ({} terms left)",
                    rem.len()
                ))
            })?;
            let qc = c / lc;
            for (dm, dc) in &divisor.terms {
                add_term(&mut rem, dm.mul(&qm), -(dc * &qc));
            }
            quot.insert(qm, qc);
        }
        Ok(Polynomial {
            ring: self.ring,
            terms: quot,
        })
    }

    /// Greatest monomial dividing every term; `1` for the zero polynomial.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.ring.nvars()),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    /// Divides by a monomial known to divide every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| k.div(m).map(|q| (q, c.clone())))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(Polynomial {
            ring: self.ring,
            terms,
        })
    }

    pub fn map_coefficients(&self, f: impl Fn(&Monomial, &Rational) -> Rational) -> Polynomial {
        Polynomial::from_terms(self.ring, self.terms.iter().map(|(m, c)| (m.clone(), f(m, c))))
    }
}

pub(crate) fn add_term(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        BEntry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        BEntry::Vacant(e) => {
            e.insert(c);
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        /// # Panics
        /// If the operands live in different rings; use the `try_` form to
        /// get an error instead.
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$try(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

pub(crate) fn fmt_monomial(ring: Ring, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (var, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ring.var_name(var))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Plain-text form, e.g. `x1^2 - 1/2*x1*z + 1/6`, terms in descending order.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let abs = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = m.degree() == 0;
            if is_const {
                if abs.denom().is_one() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    f.write_str(&format_rational(&abs))?;
                }
                continue;
            }
            if !abs.is_one() {
                if abs.denom().is_one() {
                    write!(f, "{}*", abs.numer())?;
                } else {
                    write!(f, "{}*", format_rational(&abs))?;
                }
            }
            fmt_monomial(self.ring, m, f)?;
        }
        Ok(())
    }
}
