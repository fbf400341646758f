use std::collections::HashMap;

use rayon::prelude::*;

use super::{Polynomial, Ring};
use crate::error::{Error, Result};

/// Dense matrix of polynomials over one ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(ring: Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Shape(format!(
                    "ragged rows: expected {ncols} columns, found {}",
                    row.len()
                )));
            }
            for p in row {
                ring.check_same(p.ring())?;
                entries.push(p);
            }
        }
        Ok(PolyMatrix {
            ring,
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn from_fn(ring: Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert_eq!(p.ring(), ring, "matrix entry from a different ring");
                entries.push(p);
            }
        }
        PolyMatrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        Self::from_fn(ring, n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn diagonal(ring: Ring, diag: Vec<Polynomial>) -> Self {
        let n = diag.len();
        Self::from_fn(ring, n, n, |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                ring.zero()
            }
        })
    }

    /// Block-diagonal `[p] ⊕ self`.
    pub fn bordered(&self, corner: Polynomial) -> Self {
        let ring = self.ring;
        Self::from_fn(ring, self.rows + 1, self.cols + 1, |i, j| match (i, j) {
            (0, 0) => corner.clone(),
            (0, _) | (_, 0) => ring.zero(),
            _ => self.get(i - 1, j - 1).clone(),
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.ring.check_same(other.ring)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = self.ring;
        Ok(Self::from_fn(ring, self.rows, other.cols, |i, j| {
            (0..self.cols).fold(ring.zero(), |acc, k| {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    &acc + &(a * b)
                }
            })
        }))
    }

    /// Sum over rows of the largest entry degree, an upper bound for the
    /// determinant's degree.
    pub fn degree_bound(&self) -> u32 {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .filter_map(Polynomial::total_degree)
                    .max()
                    .unwrap_or(0)
            })
            .sum()
    }
}

/// Largest size for which [`determinant`] uses minor expansion.
pub const EXPANSION_MAX_SIZE: usize = 12;

fn check_square(m: &PolyMatrix) -> Result<()> {
    if m.rows != m.cols {
        return Err(Error::Shape(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    Ok(())
}

/// Exact determinant: minor expansion up to [`EXPANSION_MAX_SIZE`], Bareiss
/// elimination beyond.
pub fn determinant(m: &PolyMatrix) -> Result<Polynomial> {
    check_square(m)?;
    if m.rows <= EXPANSION_MAX_SIZE {
        determinant_expansion(m)
    } else {
        determinant_bareiss(m)
    }
}

/// Division-free determinant by Laplace expansion with shared minors.
///
/// Rows are consumed from sparsest to densest. After `k` rows the table
/// holds the `k x k` minor for every `k`-subset of columns, so each entry of
/// the next row is multiplied into at most `2^(n-1)` minors. Zero entries
/// and zero minors are skipped, which makes sparse columns cheap.
pub fn determinant_expansion(m: &PolyMatrix) -> Result<Polynomial> {
    check_square(m)?;
    let ring = m.ring;
    let n = m.rows;
    if n > 63 {
        return Err(Error::Shape(format!("minor expansion limited to 63 columns, got {n}")));
    }
    let weight = |i: usize| -> (usize, usize) {
        let row = m.row(i);
        (row.iter().filter(|p| !p.is_zero()).count(), row.iter().map(Polynomial::len).sum())
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| weight(i));
    let negate = permutation_is_odd(&order);

    let mut minors: HashMap<u64, Polynomial> = HashMap::from([(0, ring.one())]);
    for (k, &r) in order.iter().enumerate() {
        let row = m.row(r);
        let next: Vec<(u64, Polynomial)> = minors
            .par_iter()
            .flat_map_iter(|(&mask, minor)| {
                (0..n)
                    .filter(move |&c| mask & (1 << c) == 0 && !row[c].is_zero())
                    .map(move |c| {
                        // Sign of placing column c at its sorted position among the k used columns.
                        let after = (mask >> c).count_ones() as usize;
                        let pos = k - after;
                        let term = &row[c] * minor;
                        (mask | (1 << c), if (k + pos) % 2 == 1 { -term } else { term })
                    })
            })
            .collect();
        let mut merged: HashMap<u64, Polynomial> = HashMap::new();
        for (mask, term) in next {
            match merged.entry(mask) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let sum = &*e.get() + &term;
                    *e.get_mut() = sum;
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(term);
                }
            }
        }
        merged.retain(|_, p| !p.is_zero());
        if merged.is_empty() {
            return Ok(ring.zero());
        }
        minors = merged;
    }
    let det = minors.remove(&((1u64 << n) - 1)).unwrap_or_else(|| ring.zero());
    Ok(if negate { -det } else { det })
}

fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Each elimination step divides exactly by the previous pivot; a nonzero
/// remainder is reported as [`Error::InexactDivision`].
pub fn determinant_bareiss(m: &PolyMatrix) -> Result<Polynomial> {
    check_square(m)?;
    let ring = m.ring;
    let n = m.rows;
    if n == 0 {
        return Ok(ring.one());
    }
    let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = ring.one();

    for k in 0..n - 1 {
        // Sparsest nonzero pivot in column k keeps intermediate entries small.
        let pivot = (k..n)
            .filter(|&r| !a[r][k].is_zero())
            .min_by_key(|&r| (a[r][k].len(), a[r][k].total_degree()));
        let Some(p) = pivot else {
            return Ok(ring.zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }

        let pivot_row = a[k].clone();
        let updated: Vec<(usize, Vec<Polynomial>)> = (k + 1..n)
            .into_par_iter()
            .map(|i| {
                let row = &a[i];
                let lead = &row[k];
                let new_row = (k + 1..n)
                    .into_par_iter()
                    .map(|j| {
                        let mut num = &pivot_row[k] * &row[j];
                        if !lead.is_zero() && !pivot_row[j].is_zero() {
                            num = &num - &(lead * &pivot_row[j]);
                        }
                        if prev.is_one() {
                            Ok(num)
                        } else {
                            num.div_exact(&prev)
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((i, new_row))
            })
            .collect::<Result<Vec<_>>>()?;
        for (i, new_row) in updated {
            for (offset, value) in new_row.into_iter().enumerate() {
                a[i][k + 1 + offset] = value;
            }
            a[i][k] = ring.zero();
        }
        prev = a[k][k].clone();
    }

    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}
