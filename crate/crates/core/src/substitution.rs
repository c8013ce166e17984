//! Approximate substitutions.
//!
//! A unipotent `(n+1) × (n+1)` matrix with column EGFs `c_0 .. c_n` is an
//! approximate substitution when
//!
//! ```text
//! c_k = [ c_0 · φ^k / k! ]_n,    φ = c_1 / c_0,    0 <= k <= n.
//! ```
//!
//! Such a matrix is the truncation of the matrix of `f ↦ g · f∘φ` with
//! `g = c_0`, so it is determined by its first two columns. Columns 0 and 1
//! satisfy the identity by construction; they are still evaluated so a
//! broken series engine shows up as a failure there.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::FiniteMatrix;
use crate::series::TruncatedSeries;
use crate::stirling::column_egf;
use crate::{Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMismatch {
    pub column: usize,
    /// `[c_0 φ^k / k!]_n`
    pub expected: TruncatedSeries,
    /// `c_k`
    pub actual: TruncatedSeries,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionReport {
    failing_columns: Vec<ColumnMismatch>,
    g: TruncatedSeries,
    phi: TruncatedSeries,
}

impl SubstitutionReport {
    pub fn verdict(&self) -> bool {
        self.failing_columns.is_empty()
    }

    pub fn failing_columns(&self) -> &[ColumnMismatch] {
        &self.failing_columns
    }

    /// The prefunction `g = c_0`.
    pub fn extracted_g(&self) -> &TruncatedSeries {
        &self.g
    }

    /// The substituted series `φ = c_1 / c_0`.
    pub fn extracted_phi(&self) -> &TruncatedSeries {
        &self.phi
    }

    /// Truncation order `n` (matrix size minus one).
    pub fn order(&self) -> usize {
        self.g.order()
    }
}

struct Columns {
    order: usize,
    g: TruncatedSeries,
    phi: TruncatedSeries,
}

impl Columns {
    fn of(m: &FiniteMatrix) -> Result<Self> {
        if m.size() == 0 {
            return Err(Error::validation("empty matrix"));
        }
        if !m.is_unipotent() {
            return Err(Error::validation(
                "the substitution condition is only defined for unipotent matrices",
            ));
        }
        let order = m.size() - 1;
        let g = column_egf(m, 0, order)?;
        let phi = if order == 0 {
            TruncatedSeries::zero(0)
        } else {
            column_egf(m, 1, order)?.multiply(&g.invert()?)
        };
        Ok(Columns { order, g, phi })
    }

    /// Iterates `(k, [g φ^k / k!]_n)` for `k = 0..=n`, one multiplication per step.
    fn expected(&self) -> impl Iterator<Item = (usize, TruncatedSeries)> + '_ {
        let mut current = self.g.clone();
        (0..=self.order).map(move |k| {
            if k > 0 {
                current = current
                    .multiply(&self.phi)
                    .scale(&Rational::new(Integer::one(), Integer::from(k)));
            }
            (k, current.clone())
        })
    }
}

/// Checks every column of a unipotent matrix against `[c_0 φ^k / k!]_n`.
pub fn is_approximate_substitution(m: &FiniteMatrix) -> Result<SubstitutionReport> {
    let cols = Columns::of(m)?;
    let mut failing_columns = Vec::new();
    for (k, expected) in cols.expected() {
        let actual = column_egf(m, k, cols.order)?;
        if actual != expected {
            failing_columns.push(ColumnMismatch {
                column: k,
                expected,
                actual,
            });
        }
    }
    Ok(SubstitutionReport {
        failing_columns,
        g: cols.g,
        phi: cols.phi,
    })
}

/// Verdict only, stopping at the first failing column.
pub fn satisfies_substitution_condition(m: &FiniteMatrix) -> Result<bool> {
    let cols = Columns::of(m)?;
    for (k, expected) in cols.expected() {
        if column_egf(m, k, cols.order)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Same test as [`is_approximate_substitution`]. The report's `(g, φ)` are
/// the data of the bivariate identity `Σ T(n,k) x^n/n! y^k = g(x) e^{y φ(x)}`,
/// whose `y^k` coefficient is exactly `g φ^k / k!`.
pub fn sheffer_check(m: &FiniteMatrix) -> Result<SubstitutionReport> {
    is_approximate_substitution(m)
}

/// Matrix of `f ↦ g · f∘φ` on the basis `x^k / k!`, truncated to `size`:
/// `M[i,k] = i! [x^i] g φ^k / k!`.
///
/// Requires `g(0) = 1`, `φ(0) = 0`, `φ'(0) = 1` and both orders `>= size - 1`.
pub fn build_substitution_matrix(
    g: &TruncatedSeries,
    phi: &TruncatedSeries,
    size: usize,
) -> Result<FiniteMatrix> {
    if size == 0 {
        return Err(Error::validation("matrix size must be at least 1"));
    }
    let n = size - 1;
    if g.order() < n || phi.order() < n {
        return Err(Error::validation(alloc::format!(
            "series orders ({}, {}) are below the required order {n}",
            g.order(),
            phi.order()
        )));
    }
    if !g.coeffs()[0].is_one() {
        return Err(Error::validation("g must have constant term 1"));
    }
    if !phi.coeffs()[0].is_zero() || phi.coeff(1).is_some_and(|c| !c.is_one()) {
        return Err(Error::validation("phi must be x + O(x^2)"));
    }
    let g = g.truncate(n)?;
    let phi = phi.truncate(n)?;

    let mut m = FiniteMatrix::zeros(size);
    let mut column = g;
    for k in 0..=n {
        if k > 0 {
            column = column
                .multiply(&phi)
                .scale(&Rational::new(Integer::one(), Integer::from(k)));
        }
        let mut fact = Integer::one();
        for (i, c) in column.coeffs().iter().enumerate() {
            if i > 0 {
                fact *= i;
            }
            m.set(i, k, c * Rational::from_integer(fact.clone()));
        }
    }
    Ok(m)
}
