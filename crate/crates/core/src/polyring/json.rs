use serde::{Deserialize, Serialize};

use super::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational};

/// Wire form: `{"ell": L, "terms": [{"c": "num/den", "e": [..]}, ..]}` with
/// terms in descending canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub ell: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

impl From<&Polynomial> for PolyJson {
    fn from(p: &Polynomial) -> Self {
        PolyJson {
            ell: p.ring().ell(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    c: format_rational(c),
                    e: m.exponents().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for Polynomial {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<Polynomial> {
        let ring = Ring::new(j.ell);
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.e.len() != ring.nvars() {
                return Err(Error::Parse(format!(
                    "exponent vector of length {} in a ring with {} variables",
                    t.e.len(),
                    ring.nvars()
                )));
            }
            terms.push((Monomial::new(t.e.clone()), parse_rational(&t.c)?));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }
}

impl Polynomial {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<Polynomial> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Polynomial::try_from(&j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn encoding_is_canonical() {
        let r = Ring::new(1);
        let p = &(&r.z() - &r.x(1).pow(2).scale(&frac(1, 2))) + &r.x(2);
        assert_eq!(
            p.to_json(),
            r#"{"ell":1,"terms":[{"c":"-1/2","e":[2,0,0]},{"c":"1/1","e":[0,1,0]},{"c":"1/1","e":[0,0,1]}]}"#
        );
        assert_eq!(Polynomial::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn rejects_bad_exponent_length() {
        let s = r#"{"ell":1,"terms":[{"c":"1/1","e":[1,0]}]}"#;
        assert!(Polynomial::from_json(s).is_err());
    }
}
