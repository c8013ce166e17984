//! Exact-arithmetic algebra of boson words.
//!
//! The crate normal-orders words in the annihilation and creation operators
//! `a`, `a†` (with `[a, a†] = 1`), builds the generalized Stirling matrices
//! attached to powers of a word, and decides whether a finite unipotent
//! matrix is an *approximate substitution*: a matrix whose column
//! exponential generating functions satisfy
//!
//! ```text
//! c_k = [ c_0 · (c_1 / c_0)^k / k! ]_n      for 0 <= k <= n
//! ```
//!
//! Everything runs on arbitrary-precision integers and rationals; there is
//! no floating point outside the Wilson interval of [`montecarlo`].
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the parallel
//! experiment driver and the command-line front end live in the `normord`
//! crate.
//!
//! ```
//! use normord_core::{normal_order, BosonWord};
//!
//! let w: BosonWord = "a a+ a a a+ a".parse().unwrap();
//! let nf = normal_order(&w);
//! assert_eq!(nf.coeff(0, 2), 2.into());
//! assert_eq!(nf.coeff(1, 3), 4.into());
//! assert_eq!(nf.coeff(2, 4), 1.into());
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod matrix;
pub mod montecarlo;
pub mod normal;
pub mod series;
pub mod stirling;
pub mod substitution;
pub mod word;

pub use error::{Error, Result};
pub use matrix::{truncate_rn, truncate_taun, FiniteMatrix, MatrixView};
pub use montecarlo::{
    count_free_parameters, probability_bound, random_unipotent, run_experiment, ExperimentConfig,
    ExperimentResult, FreeParameters,
};
pub use normal::{double_dot, multiply_normal_forms, normal_order, NormalForm};
pub use series::TruncatedSeries;
pub use stirling::{
    bell_numbers, bell_polynomial, classify_word, column_egf, stirling_matrix, StirlingMatrix,
    WordClass, WordKind,
};
pub use substitution::{
    build_substitution_matrix, is_approximate_substitution, satisfies_substitution_condition,
    sheffer_check, ColumnMismatch,
    SubstitutionReport,
};
pub use word::{excess, parse_word, word_power, BosonWord, Letter};

/// Exact integer coefficients.
pub type Integer = num_bigint::BigInt;
/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
