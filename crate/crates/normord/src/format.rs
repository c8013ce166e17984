//! JSON file formats. Exact numbers travel as strings (`"3"`, `"-1/2"`).

use std::fmt::Write as _;
use std::str::FromStr;

use normord_core::{
    stirling_matrix, BosonWord, ColumnMismatch, ExperimentConfig, ExperimentResult, FiniteMatrix,
    Integer, NormalForm, Rational, StirlingMatrix, SubstitutionReport, TruncatedSeries, WordClass,
    WordKind,
};
use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid number {0:?}")]
    Number(String),
    #[error(transparent)]
    Core(#[from] normord_core::Error),
    #[error("{0}")]
    Schema(String),
}

pub type Result<T, E = FormatError> = std::result::Result<T, E>;

/// Parses `"n"`, `"p/q"` or a finite decimal such as `"-1.25"`, exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || FormatError::Number(text.to_string());
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int = int.trim_start_matches(['-', '+']);
        let digits = format!("{}{frac}", if int.is_empty() { "0" } else { int });
        let mut n = BigInt::from_str(&digits).map_err(|_| bad())?;
        if neg {
            n = -n;
        }
        let d: BigInt = Pow::pow(&BigInt::from(10), frac.len() as u32);
        return Ok(Rational::new(n, d));
    }
    BigInt::from_str(t)
        .map(Rational::from_integer)
        .map_err(|_| bad())
}

/// Comma-separated rationals, e.g. `1,1/2,-3`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

// ---------------------------------------------------------------- normal forms

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub j: usize,
    pub l: usize,
    pub coeff: String,
}

pub fn normal_form_to_json(nf: &NormalForm) -> Vec<TermJson> {
    nf.terms()
        .map(|(&(j, l), c)| TermJson { j, l, coeff: c.to_string() })
        .collect()
}

pub fn normal_form_from_json(terms: &[TermJson]) -> Result<NormalForm> {
    let mut nf = NormalForm::zero();
    for t in terms {
        let c = Integer::from_str(&t.coeff).map_err(|_| FormatError::Number(t.coeff.clone()))?;
        nf.add_term((t.j, t.l), c);
    }
    Ok(nf)
}

// ---------------------------------------------------------------- series

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl From<&TruncatedSeries> for SeriesJson {
    fn from(s: &TruncatedSeries) -> Self {
        SeriesJson {
            order: s.order(),
            coeffs: s.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

impl SeriesJson {
    pub fn to_series(&self) -> Result<TruncatedSeries> {
        if self.coeffs.len() != self.order + 1 {
            return Err(FormatError::Schema(format!(
                "series of order {} needs {} coefficients, found {}",
                self.order,
                self.order + 1,
                self.coeffs.len()
            )));
        }
        let coeffs = self.coeffs.iter().map(|c| parse_rational(c)).collect::<Result<_>>()?;
        Ok(TruncatedSeries::new(coeffs)?)
    }
}

// ---------------------------------------------------------------- matrices

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub size: usize,
    pub entries: Vec<Vec<String>>,
}

impl From<&FiniteMatrix> for MatrixJson {
    fn from(m: &FiniteMatrix) -> Self {
        MatrixJson {
            size: m.size(),
            entries: m
                .rows()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<FiniteMatrix> {
        if self.entries.len() != self.size {
            return Err(FormatError::Schema(format!(
                "size {} but {} rows",
                self.size,
                self.entries.len()
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| parse_rational(e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteMatrix::from_rows(rows)?)
    }
}

/// Canonical matrix file: one row per line, trailing newline.
pub fn write_matrix_file(m: &FiniteMatrix) -> String {
    let json = MatrixJson::from(m);
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"size\": {},", json.size).unwrap();
    if json.entries.is_empty() {
        writeln!(out, "  \"entries\": []").unwrap();
    } else {
        writeln!(out, "  \"entries\": [").unwrap();
        for (i, row) in json.entries.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|e| serde_json::to_string(e).expect("string serializes"))
                .collect();
            let sep = if i + 1 < json.entries.len() { "," } else { "" };
            writeln!(out, "    [{}]{sep}", cells.join(", ")).unwrap();
        }
        writeln!(out, "  ]").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn read_matrix_file(text: &str) -> Result<FiniteMatrix> {
    serde_json::from_str::<MatrixJson>(text)?.to_matrix()
}

// ---------------------------------------------------------------- Stirling matrices

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StirlingJson {
    pub word: String,
    pub s_tot: usize,
    pub d: i64,
    pub rows: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub substitution: Option<ReportJson>,
}

impl From<&StirlingMatrix> for StirlingJson {
    fn from(m: &StirlingMatrix) -> Self {
        StirlingJson {
            word: m.word().to_string(),
            s_tot: m.s_tot(),
            d: m.excess(),
            rows: m
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
            substitution: None,
        }
    }
}

impl StirlingJson {
    /// Rebuilds the matrix from its word and checks the stored rows against it.
    pub fn to_matrix(&self) -> Result<StirlingMatrix> {
        let word: BosonWord = self.word.parse()?;
        if self.rows.is_empty() {
            return Err(FormatError::Schema("no rows".into()));
        }
        let m = stirling_matrix(&word, self.rows.len() - 1)?;
        if StirlingJson::from(&m).rows != self.rows
            || m.s_tot() != self.s_tot
            || m.excess() != self.d
        {
            return Err(FormatError::Schema(format!(
                "stored rows do not match the word {:?}",
                self.word
            )));
        }
        Ok(m)
    }
}

// ---------------------------------------------------------------- reports

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchJson {
    pub k: usize,
    pub expected: SeriesJson,
    pub actual: SeriesJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub verdict: bool,
    pub order: usize,
    pub g: SeriesJson,
    pub phi: SeriesJson,
    pub failing_columns: Vec<MismatchJson>,
}

impl From<&SubstitutionReport> for ReportJson {
    fn from(r: &SubstitutionReport) -> Self {
        ReportJson {
            verdict: r.verdict(),
            order: r.order(),
            g: r.extracted_g().into(),
            phi: r.extracted_phi().into(),
            failing_columns: r
                .failing_columns()
                .iter()
                .map(|c: &ColumnMismatch| MismatchJson {
                    k: c.column,
                    expected: (&c.expected).into(),
                    actual: (&c.actual).into(),
                })
                .collect(),
        }
    }
}

// ---------------------------------------------------------------- experiments

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentJson {
    pub size: usize,
    pub draws: u64,
    pub range: u64,
    pub seed: u64,
    pub jobs: usize,
    pub successes: u64,
    pub estimate: String,
    pub wilson_95: [f64; 2],
    pub bound: String,
}

impl From<&ExperimentResult> for ExperimentJson {
    fn from(r: &ExperimentResult) -> Self {
        let c = &r.config;
        ExperimentJson {
            size: c.size,
            draws: c.draws,
            range: c.range,
            seed: c.seed,
            jobs: c.jobs,
            successes: r.successes,
            estimate: r.estimate.to_string(),
            wilson_95: [r.wilson_95.0, r.wilson_95.1],
            bound: r.bound.to_string(),
        }
    }
}

impl ExperimentJson {
    pub fn to_result(&self) -> Result<ExperimentResult> {
        let config = ExperimentConfig {
            size: self.size,
            draws: self.draws,
            range: self.range,
            seed: self.seed,
            jobs: self.jobs,
        };
        let r = ExperimentResult::from_successes(config, self.successes)?;
        if r.estimate != parse_rational(&self.estimate)? || r.bound != parse_rational(&self.bound)? {
            return Err(FormatError::Schema("estimate or bound inconsistent with counts".into()));
        }
        Ok(r)
    }
}

// ---------------------------------------------------------------- small records

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub word: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    pub ends_with_a: bool,
}

pub fn kind_name(kind: &WordKind) -> &'static str {
    match kind {
        WordKind::NotSingleAnnihilator => "not-single-annihilator",
        WordKind::PureSubstitution { .. } => "pure-substitution",
        WordKind::SubstitutionWithPrefunction { .. } => "substitution-with-prefunction",
    }
}

impl ClassJson {
    pub fn new(word: &BosonWord, class: &WordClass) -> Self {
        let (r, p) = match class.kind {
            WordKind::NotSingleAnnihilator => (None, None),
            WordKind::PureSubstitution { r } => (Some(r), Some(0)),
            WordKind::SubstitutionWithPrefunction { r, p } => (Some(r), Some(p)),
        };
        ClassJson {
            word: word.to_string(),
            kind: kind_name(&class.kind).to_string(),
            r,
            p,
            ends_with_a: class.ends_with_annihilator,
        }
    }

    pub fn to_class(&self) -> Result<WordClass> {
        let kind = match (self.kind.as_str(), self.r, self.p) {
            ("not-single-annihilator", None, None) => WordKind::NotSingleAnnihilator,
            ("pure-substitution", Some(r), Some(0)) => WordKind::PureSubstitution { r },
            ("substitution-with-prefunction", Some(r), Some(p)) if p > 0 => {
                WordKind::SubstitutionWithPrefunction { r, p }
            }
            _ => return Err(FormatError::Schema(format!("bad classification {:?}", self.kind))),
        };
        Ok(WordClass {
            kind,
            ends_with_annihilator: self.ends_with_a,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BellJson {
    pub word: String,
    pub x: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundJson {
    pub size: usize,
    pub range: u64,
    pub bound: String,
    pub determined: usize,
    pub total: usize,
}
