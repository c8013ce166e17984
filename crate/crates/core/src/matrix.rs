//! Finite square matrices and the principal-submatrix truncations `r_n`, `τ_n`.

use alloc::vec::Vec;
use core::ops::Mul;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Read access to a (possibly row-finite infinite) matrix that has been
/// materialized through some number of rows.
pub trait MatrixView {
    /// Number of rows available, counting from row 0.
    fn materialized_rows(&self) -> usize;

    /// Number of columns, or `None` when every column index is readable
    /// (row-finite matrices: entries past the row support are zero).
    fn materialized_cols(&self) -> Option<usize>;

    /// Entry `[i, k]`; callers stay inside the materialized region.
    fn entry(&self, i: usize, k: usize) -> Rational;

    /// Whether every materialized entry above the diagonal is zero.
    fn is_lower_triangular(&self) -> bool;
}

/// An `(n+1) × (n+1)` matrix of exact rationals, indexed `[i, k]` from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMatrix {
    size: usize,
    entries: Vec<Rational>,
}

impl FiniteMatrix {
    pub fn zeros(size: usize) -> Self {
        FiniteMatrix {
            size,
            entries: alloc::vec![Rational::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for k in 0..size {
                entries.push(f(i, k));
            }
        }
        FiniteMatrix { size, entries }
    }

    /// Builds from rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::validation(alloc::format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(FiniteMatrix { size, entries })
    }

    /// Integer literal rows, for tests and examples. Panics when not square.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
            .collect();
        Self::from_rows(rows).expect("square integer matrix")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, k: usize) -> &Rational {
        &self.entries[i * self.size + k]
    }

    pub fn set(&mut self, i: usize, k: usize, v: Rational) {
        self.entries[i * self.size + k] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.size).map(move |i| self.row(i))
    }

    /// Lower triangular with every diagonal entry equal to 1.
    pub fn is_unipotent(&self) -> bool {
        self.is_lower_triangular() && (0..self.size).all(|i| self.get(i, i).is_one())
    }

    pub fn checked_mul(&self, rhs: &FiniteMatrix) -> Result<FiniteMatrix> {
        if self.size != rhs.size {
            return Err(Error::validation(alloc::format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.size,
                rhs.size
            )));
        }
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let b = rhs.get(j, k);
                    if !b.is_zero() {
                        out.entries[i * n + k] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }
}

impl Mul for &FiniteMatrix {
    type Output = FiniteMatrix;

    /// Panics on a size mismatch; see [`FiniteMatrix::checked_mul`].
    fn mul(self, rhs: &FiniteMatrix) -> FiniteMatrix {
        self.checked_mul(rhs).expect("matrix sizes must agree")
    }
}

impl MatrixView for FiniteMatrix {
    fn materialized_rows(&self) -> usize {
        self.size
    }

    fn materialized_cols(&self) -> Option<usize> {
        Some(self.size)
    }

    fn entry(&self, i: usize, k: usize) -> Rational {
        self.get(i, k).clone()
    }

    fn is_lower_triangular(&self) -> bool {
        (0..self.size).all(|i| self.row(i)[i + 1..].iter().all(Zero::is_zero))
    }
}

fn check_extent(m: &impl MatrixView, n: usize) -> Result<()> {
    let rows = m.materialized_rows();
    if n >= rows {
        return Err(Error::Range {
            what: "truncation order",
            requested: n,
            available: rows.saturating_sub(1),
        });
    }
    if let Some(cols) = m.materialized_cols() {
        if n >= cols {
            return Err(Error::Range {
                what: "truncation order",
                requested: n,
                available: cols.saturating_sub(1),
            });
        }
    }
    Ok(())
}

/// `r_n(M) = (M[i,k])_{0 <= i,k <= n}` for any matrix. Not multiplicative in general.
pub fn truncate_rn(m: &impl MatrixView, n: usize) -> Result<FiniteMatrix> {
    check_extent(m, n)?;
    Ok(FiniteMatrix::from_fn(n + 1, |i, k| m.entry(i, k)))
}

/// `τ_n`: the same extraction restricted to lower-triangular matrices, where
/// it is an algebra morphism (`τ_n(AB) = τ_n(A) τ_n(B)`).
pub fn truncate_taun(m: &impl MatrixView, n: usize) -> Result<FiniteMatrix> {
    if !m.is_lower_triangular() {
        return Err(Error::validation("τ_n is only defined on lower-triangular matrices"));
    }
    truncate_rn(m, n)
}
