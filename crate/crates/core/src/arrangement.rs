//! The cone over the Shi arrangement of type `A_ell` and the symmetric
//! functions its basis is built from.

use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{LinearForm, PolyMatrix, Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HyperplaneKind {
    /// `z = 0`.
    Cone,
    /// `x_p - x_q = 0`.
    Braid { p: usize, q: usize },
    /// `x_p - x_q - z = 0`.
    Shifted { p: usize, q: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub kind: HyperplaneKind,
    pub form: LinearForm,
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            HyperplaneKind::Cone => f.write_str("z"),
            HyperplaneKind::Braid { p, q } => write!(f, "x{p} - x{q}"),
            HyperplaneKind::Shifted { p, q } => write!(f, "x{p} - x{q} - z"),
        }
    }
}

/// The central arrangement `S_ell` in `Q^{ell+2}`.
///
/// Hyperplanes are ordered `z`, then `x_p - x_q` for `p < q` in lex order,
/// then `x_p - x_q - z` in the same order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiCone {
    ell: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl ShiCone {
    pub fn new(ell: usize) -> Result<Self> {
        if ell < 1 {
            return Err(Error::Domain(format!("rank must be at least 1, got {ell}")));
        }
        let ring = Ring::new(ell);
        let pairs: Vec<(usize, usize)> = (1..=ell + 1)
            .flat_map(|p| (p + 1..=ell + 1).map(move |q| (p, q)))
            .collect();

        let mut hyperplanes = Vec::with_capacity(1 + 2 * pairs.len());
        hyperplanes.push(Hyperplane {
            kind: HyperplaneKind::Cone,
            form: LinearForm::new(ring.z())?,
        });
        for &(p, q) in &pairs {
            hyperplanes.push(Hyperplane {
                kind: HyperplaneKind::Braid { p, q },
                form: LinearForm::new(&ring.x(p) - &ring.x(q))?,
            });
        }
        for &(p, q) in &pairs {
            hyperplanes.push(Hyperplane {
                kind: HyperplaneKind::Shifted { p, q },
                form: LinearForm::new(&(&ring.x(p) - &ring.x(q)) - &ring.z())?,
            });
        }
        Ok(ShiCone { ell, hyperplanes })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.ell)
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// `1 + ell (ell + 1)`.
    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// `Q(S_ell)`, the product of all defining forms.
    pub fn defining_polynomial(&self) -> Polynomial {
        self.hyperplanes
            .iter()
            .fold(self.ring().one(), |acc, h| &acc * h.form.poly())
    }
}

/// Variables entering `phi_j`: `I1 = {1, ..., j-1}` and
/// `I2 = {j+2, ..., ell+1}` (one-based `x` indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSubsets {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl IndexSubsets {
    pub fn new(j: usize, ell: usize) -> Result<Self> {
        if j < 1 || j > ell {
            return Err(Error::Domain(format!("j = {j} outside 1..={ell}")));
        }
        Ok(IndexSubsets {
            first: (1..j).collect(),
            second: (j + 2..=ell + 1).collect(),
        })
    }

    /// `I1 ∪ I2`: every `x` index except `j` and `j+1`.
    pub fn union(&self) -> Vec<usize> {
        self.first.iter().chain(&self.second).copied().collect()
    }
}

/// `sigma_0, ..., sigma_max_degree` over the listed `x` indices, by adding
/// one variable at a time.
pub fn elementary_symmetric_all(max_degree: usize, indices: &[usize], ring: Ring) -> Vec<Polynomial> {
    let mut sigma = vec![ring.zero(); max_degree + 1];
    sigma[0] = ring.one();
    for &i in indices {
        let x = ring.x(i);
        for k in (1..=max_degree).rev() {
            if sigma[k - 1].is_zero() {
                continue;
            }
            sigma[k] = &sigma[k] + &(&sigma[k - 1] * &x);
        }
    }
    sigma
}

/// `sigma_k` over the listed `x` indices; zero when `k` exceeds their count.
pub fn elementary_symmetric(k: usize, indices: &[usize], ring: Ring) -> Polynomial {
    elementary_symmetric_all(k, indices, ring).pop().expect("nonempty")
}

/// The `ell x ell` matrix whose `(i, j)` entry is `sigma_{ell-i}` in every
/// `x` variable except `x_j` and `x_{j+1}`.
pub fn lemma_matrix_n(ell: usize) -> Result<PolyMatrix> {
    if ell < 1 {
        return Err(Error::Domain(format!("rank must be at least 1, got {ell}")));
    }
    let ring = Ring::new(ell);
    let columns: Vec<Vec<Polynomial>> = (1..=ell)
        .map(|j| {
            let vars = IndexSubsets::new(j, ell).map(|s| s.union())?;
            Ok(elementary_symmetric_all(ell - 1, &vars, ring))
        })
        .collect::<Result<_>>()?;
    Ok(PolyMatrix::from_fn(ring, ell, ell, |i, j| {
        columns[j][ell - 1 - i].clone()
    }))
}
