//! Generalized Stirling matrices and Bell polynomials of a boson word.
//!
//! For a word `w` with excess `d`, the normal form of `w^n` is
//!
//! ```text
//! N(w^n) = Σ_k S(n,k) (a†)^{k + max(nd, 0)} a^{k + max(-nd, 0)}
//! ```
//!
//! and `S(n, k)` is nonzero only for `k <= n · step`, where `step` is the
//! smaller of the creator and annihilator counts of `w` (the annihilator
//! count whenever `d >= 0`). Row `n` therefore holds `n · step + 1` entries
//! and ends in a 1.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::MatrixView;
use crate::normal::{normal_order, NormalForm};
use crate::series::TruncatedSeries;
use crate::word::{BosonWord, Letter};
use crate::{Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingMatrix {
    word: BosonWord,
    creators: usize,
    annihilators: usize,
    rows: Vec<Vec<Integer>>,
}

/// Rows `0..=n_max` of the generalized Stirling matrix of `w`, computed
/// incrementally as `N(w^{n+1}) = N(w^n) · N(w)`.
pub fn stirling_matrix(w: &BosonWord, n_max: usize) -> Result<StirlingMatrix> {
    if w.is_empty() {
        return Err(Error::validation("the Stirling matrix of the empty word is undefined"));
    }
    let mut m = StirlingMatrix {
        word: w.clone(),
        creators: w.creators(),
        annihilators: w.annihilators(),
        rows: Vec::with_capacity(n_max + 1),
    };
    let base = normal_order(w);
    let mut power = NormalForm::one();
    for n in 0..=n_max {
        m.rows.push(m.read_row(n, &power));
        if n < n_max {
            power = power.multiply(&base);
        }
    }
    Ok(m)
}

impl StirlingMatrix {
    fn read_row(&self, n: usize, nf: &NormalForm) -> Vec<Integer> {
        let (dj, dl) = self.offsets(n);
        let width = n * self.step() + 1;
        let mut row = alloc::vec![Integer::zero(); width];
        for (&(j, l), c) in nf.terms() {
            debug_assert!(j >= dj && l >= dl && j - dj == l - dl && j - dj < width);
            row[j - dj] = c.clone();
        }
        row
    }

    /// Exponent shifts `(max(nd,0), max(-nd,0))` of row `n`.
    fn offsets(&self, n: usize) -> (usize, usize) {
        let d = self.excess();
        if d >= 0 {
            (n * d as usize, 0)
        } else {
            (0, n * d.unsigned_abs() as usize)
        }
    }

    pub fn word(&self) -> &BosonWord {
        &self.word
    }

    /// Total creator count `r_tot`.
    pub fn r_tot(&self) -> usize {
        self.creators
    }

    /// Total annihilator count `s_tot`.
    pub fn s_tot(&self) -> usize {
        self.annihilators
    }

    pub fn excess(&self) -> i64 {
        self.creators as i64 - self.annihilators as i64
    }

    /// Columns gained per row.
    pub fn step(&self) -> usize {
        self.creators.min(self.annihilators)
    }

    /// Index of the last materialized row.
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Option<&[Integer]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// `S(n, k)`, zero past the staircase. Panics if row `n` is not materialized.
    pub fn get(&self, n: usize, k: usize) -> Integer {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    /// Lower triangular with unit diagonal, over the materialized rows.
    pub fn is_unitriangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(n, row)| row.len() == n + 1 && row[n].is_one())
    }

    /// Whether column 0 reads `(1, 0, 0, ...)` over the materialized rows.
    pub fn first_column_trivial(&self) -> bool {
        self.rows.iter().skip(1).all(|row| row[0].is_zero())
    }

    /// A copy restricted to rows `0..=m`.
    pub fn truncated(&self, m: usize) -> Result<StirlingMatrix> {
        if m > self.n_max() {
            return Err(Error::Range {
                what: "row",
                requested: m,
                available: self.n_max(),
            });
        }
        Ok(StirlingMatrix {
            word: self.word.clone(),
            creators: self.creators,
            annihilators: self.annihilators,
            rows: self.rows[..=m].to_vec(),
        })
    }
}

impl MatrixView for StirlingMatrix {
    fn materialized_rows(&self) -> usize {
        self.rows.len()
    }

    fn materialized_cols(&self) -> Option<usize> {
        None
    }

    fn entry(&self, i: usize, k: usize) -> Rational {
        Rational::from_integer(self.get(i, k))
    }

    fn is_lower_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(n, row)| row.iter().skip(n + 1).all(Zero::is_zero))
    }
}

/// `B(n, x) = Σ_k S(n,k) x^k`.
pub fn bell_polynomial(m: &StirlingMatrix, n: usize, x: &Rational) -> Result<Rational> {
    let row = m.row(n).ok_or(Error::Range {
        what: "row",
        requested: n,
        available: m.n_max(),
    })?;
    // Horner from the top coefficient down.
    Ok(row
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone())))
}

/// `B(n) = B(n, 1)` for every materialized row.
pub fn bell_numbers(m: &StirlingMatrix) -> Vec<Integer> {
    m.rows.iter().map(|row| row.iter().sum()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordKind {
    /// Zero or at least two annihilators.
    NotSingleAnnihilator,
    /// `w = (a†)^r a`.
    PureSubstitution { r: usize },
    /// `w = (a†)^{r-p} a (a†)^p` with `p > 0`.
    SubstitutionWithPrefunction { r: usize, p: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WordClass {
    pub kind: WordKind,
    /// For single-annihilator words this is exactly when column 0 of the
    /// Stirling matrix is `(1, 0, 0, ...)`.
    pub ends_with_annihilator: bool,
}

/// Classifies single-annihilator words `(a†)^{r-p} a (a†)^p`.
///
/// `r = 0` (the word `a`) lands in `PureSubstitution { r: 0 }`; its matrix
/// has a column of ones and is not unipotent.
pub fn classify_word(w: &BosonWord) -> WordClass {
    let ends_with_annihilator = w.ends_with_annihilator();
    let kind = if w.annihilators() != 1 {
        WordKind::NotSingleAnnihilator
    } else {
        let pos = w
            .letters()
            .iter()
            .position(|&l| l == Letter::Annihilator)
            .expect("one annihilator");
        let r = w.creators();
        let p = w.len() - pos - 1;
        if p == 0 {
            WordKind::PureSubstitution { r }
        } else {
            WordKind::SubstitutionWithPrefunction { r, p }
        }
    };
    WordClass {
        kind,
        ends_with_annihilator,
    }
}

/// Truncated EGF `c_k = Σ_{i <= n} M[i,k] x^i / i!` of column `k`.
pub fn column_egf(m: &impl MatrixView, k: usize, n: usize) -> Result<TruncatedSeries> {
    let rows = m.materialized_rows();
    if n >= rows {
        return Err(Error::Range {
            what: "series order",
            requested: n,
            available: rows.saturating_sub(1),
        });
    }
    if let Some(cols) = m.materialized_cols() {
        if k >= cols {
            return Err(Error::Range {
                what: "column",
                requested: k,
                available: cols.saturating_sub(1),
            });
        }
    }
    TruncatedSeries::from_egf_terms((0..=n).map(|i| m.entry(i, k)))
}
