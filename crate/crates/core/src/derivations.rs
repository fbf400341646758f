//! Polynomial derivations `sum_i f_i d/dx_i + f_z d/dz` and the basis
//! `eta1, eta2, phi_1, ..., phi_ell`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement::{elementary_symmetric_all, IndexSubsets};
use crate::bernoulli::bpq;
use crate::error::{Error, Result};
use crate::polyring::{PolyJson, Polynomial, Ring};
use crate::rational::{int, Rational};

/// A derivation stored as its dense coefficient vector: entries
/// `0..=ell` are the coefficients of `d/dx_1 .. d/dx_{ell+1}`, the last
/// entry is the coefficient of `d/dz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    ring: Ring,
    coeffs: Vec<Polynomial>,
}

impl Derivation {
    pub fn new(ring: Ring, coeffs: Vec<Polynomial>) -> Result<Self> {
        if coeffs.len() != ring.nvars() {
            return Err(Error::Shape(format!(
                "derivation needs {} coefficients, got {}",
                ring.nvars(),
                coeffs.len()
            )));
        }
        for c in &coeffs {
            ring.check_same(c.ring())?;
        }
        Ok(Derivation { ring, coeffs })
    }

    pub fn zero(ring: Ring) -> Self {
        Derivation {
            ring,
            coeffs: vec![ring.zero(); ring.nvars()],
        }
    }

    /// `d/d(var)`.
    pub fn partial(ring: Ring, var: usize) -> Result<Self> {
        ring.check_index(var)?;
        let mut d = Self::zero(ring);
        d.coeffs[var] = ring.one();
        Ok(d)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// `theta(v)` for the variable at index `var`.
    pub fn coeff(&self, var: usize) -> &Polynomial {
        &self.coeffs[var]
    }

    pub fn coeff_z(&self) -> &Polynomial {
        &self.coeffs[self.ring.z_index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// Common total degree of the nonzero coefficients; `None` for the zero
    /// derivation or when the degrees differ.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.is_homogeneous().then(|| c.total_degree()).flatten());
        let first = degrees.next()??;
        degrees.all(|d| d == Some(first)).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// `theta(p) = sum_v theta(v) * dp/dv`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(p.ring())?;
        let mut acc = self.ring.zero();
        for (var, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let dp = p.derivative(var)?;
            if !dp.is_zero() {
                acc = &acc + &(c * &dp);
            }
        }
        Ok(acc)
    }

    /// Every coefficient with `z -> 0`.
    pub fn decone(&self) -> Derivation {
        let z = self.ring.z_index();
        let zero = self.ring.zero();
        Derivation {
            ring: self.ring,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.substitute(z, &zero).expect("same ring"))
                .collect(),
        }
    }

    pub fn try_add(&self, other: &Derivation) -> Result<Derivation> {
        self.ring.check_same(other.ring)?;
        Ok(Derivation {
            ring: self.ring,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Result<Derivation> {
        self.ring.check_same(f.ring())?;
        Ok(Derivation {
            ring: self.ring,
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation {
            ring: self.ring,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Replaces one coefficient.
    pub fn with_coeff(&self, var: usize, value: Polynomial) -> Result<Derivation> {
        self.ring.check_index(var)?;
        self.ring.check_same(value.ring())?;
        let mut out = self.clone();
        out.coeffs[var] = value;
        Ok(out)
    }
}

/// `eta1 = sum_i d/dx_i`.
pub fn eta1(ell: usize) -> Derivation {
    let ring = Ring::new(ell);
    let mut coeffs = vec![ring.one(); ring.nvars()];
    coeffs[ring.z_index()] = ring.zero();
    Derivation { ring, coeffs }
}

/// The Euler derivation `eta2 = z d/dz + sum_i x_i d/dx_i`.
pub fn eta2(ell: usize) -> Derivation {
    let ring = Ring::new(ell);
    Derivation {
        ring,
        coeffs: (0..ring.nvars()).map(|v| ring.var(v)).collect(),
    }
}

/// `phi_j`, for `1 <= j <= ell`:
///
/// `(x_j - x_{j+1} - z) sum_i sum_{k1,k2} (-1)^{k1+k2} s1_{j-1-k1} s2_{ell-j-k2}
///  Bbar_{k1,k2}(x_i, z) d/dx_i`
///
/// where `s1`, `s2` are elementary symmetric functions of `x_1..x_{j-1}` and
/// `x_{j+2}..x_{ell+1}`, `0 <= k1 <= j-1`, `0 <= k2 <= ell-j`.
pub fn phi(j: usize, ell: usize) -> Result<Derivation> {
    let subsets = IndexSubsets::new(j, ell)?;
    let ring = Ring::new(ell);
    let s1 = elementary_symmetric_all(j - 1, &subsets.first, ring);
    let s2 = elementary_symmetric_all(ell - j, &subsets.second, ring);
    let factor = &(&ring.x(j) - &ring.x(j + 1)) - &ring.z();

    let mut weighted = Vec::with_capacity(j * (ell - j + 1));
    for k1 in 0..j {
        for k2 in 0..=ell - j {
            let mut w = &s1[j - 1 - k1] * &s2[ell - j - k2];
            if (k1 + k2) % 2 == 1 {
                w = -w;
            }
            weighted.push((w, bpq(k1, k2), (k1 + k2 + 1) as u32));
        }
    }

    let mut coeffs = (1..=ell + 1)
        .into_par_iter()
        .map(|i| {
            let var = ring.x_index(i)?;
            let mut inner = ring.zero();
            for (w, b, degree) in &weighted {
                let bbar = b.homogenize(*degree, ring, var)?;
                inner = &inner + &(w * &bbar);
            }
            Ok(&factor * &inner)
        })
        .collect::<Result<Vec<_>>>()?;
    coeffs.push(ring.zero());
    Ok(Derivation { ring, coeffs })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedDerivation {
    pub name: String,
    pub derivation: Derivation,
}

/// `[eta1, eta2, phi_1, ..., phi_ell]`.
pub fn shi_basis(ell: usize) -> Result<Vec<NamedDerivation>> {
    if ell < 1 {
        return Err(Error::Domain(format!("rank must be at least 1, got {ell}")));
    }
    let phis = (1..=ell)
        .into_par_iter()
        .map(|j| phi(j, ell))
        .collect::<Result<Vec<_>>>()?;
    let mut out = vec![
        NamedDerivation {
            name: "eta1".into(),
            derivation: eta1(ell),
        },
        NamedDerivation {
            name: "eta2".into(),
            derivation: eta2(ell),
        },
    ];
    out.extend(phis.into_iter().enumerate().map(|(k, d)| NamedDerivation {
        name: format!("phi{}", k + 1),
        derivation: d,
    }));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationJson {
    pub name: String,
    pub degree: Option<u32>,
    pub coeffs: Vec<PolyJson>,
}

impl From<&NamedDerivation> for DerivationJson {
    fn from(nd: &NamedDerivation) -> Self {
        DerivationJson {
            name: nd.name.clone(),
            degree: nd.derivation.degree(),
            coeffs: nd.derivation.coeffs.iter().map(PolyJson::from).collect(),
        }
    }
}

impl TryFrom<&DerivationJson> for NamedDerivation {
    type Error = Error;

    fn try_from(j: &DerivationJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(Polynomial::try_from)
            .collect::<Result<Vec<_>>>()?;
        let ring = coeffs
            .first()
            .map(Polynomial::ring)
            .ok_or_else(|| Error::Parse("derivation without coefficients".into()))?;
        Ok(NamedDerivation {
            name: j.name.clone(),
            derivation: Derivation::new(ring, coeffs)?,
        })
    }
}

/// `(x_j - x_{j+1}) sum_k ((-1)^{k-1}/k) sigma_{ell-k}(x without x_j, x_{j+1})
/// sum_i x_i^k d/dx_i`, the restriction of `phi_j` to `z = 0` in closed form.
pub fn decone_phi_closed_form(j: usize, ell: usize) -> Result<Derivation> {
    let subsets = IndexSubsets::new(j, ell)?;
    let ring = Ring::new(ell);
    let sigma = elementary_symmetric_all(ell - 1, &subsets.union(), ring);
    let factor = &ring.x(j) - &ring.x(j + 1);
    let mut coeffs = Vec::with_capacity(ring.nvars());
    for i in 1..=ell + 1 {
        let x = ring.x(i);
        let mut inner = ring.zero();
        for k in 1..=ell {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let c = int(sign) / int(k as i64);
            inner = &inner + &(&sigma[ell - k] * &x.pow(k as u32)).scale(&c);
        }
        coeffs.push(&factor * &inner);
    }
    coeffs.push(ring.zero());
    Derivation::new(ring, coeffs)
}
