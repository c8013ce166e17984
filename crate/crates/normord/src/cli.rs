//! Command-line front end.
//!
//! Exit codes: 0 success, 1 the substitution test answered "no",
//! 2 usage, parse or validation errors. Data goes to stdout, diagnostics to
//! stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use normord_core::{
    bell_polynomial, classify_word, count_free_parameters, double_dot, is_approximate_substitution,
    normal_order, probability_bound, stirling_matrix, truncate_taun, BosonWord, ExperimentConfig,
    ExperimentResult, FiniteMatrix, NormalForm, Rational, SubstitutionReport, TruncatedSeries,
};
use num_traits::{One, ToPrimitive};

use crate::format::{self, ClassJson, ExperimentJson, ReportJson, StirlingJson};
use crate::parallel::run_experiment_parallel;
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "normord", version, about = "Boson normal ordering, generalized Stirling matrices and approximate substitutions")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normally ordered form N(w)
    No {
        word: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Double-dot form :w:
    Dd {
        word: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Generalized Stirling matrix of a word, rows 0..=ROWS
    Stirling {
        word: String,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Write the JSON rendering to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also test the truncated matrix for the substitution condition
        #[arg(long)]
        check_subst: bool,
    },
    /// Bell polynomial values B(n, x) for n = 0..=ROWS
    Bell {
        word: String,
        #[arg(long)]
        rows: usize,
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Single-annihilator classification of a word
    Classify {
        word: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Test a unipotent matrix file for the substitution condition
    CheckSubst {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Matrix of f -> g(x) f(phi(x)) from coefficient lists
    BuildSubst {
        /// Coefficients of g, comma separated, starting with 1
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Coefficients of phi, comma separated, starting with 0,1
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// Matrix size (defaults to the smaller series order plus one)
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Write the canonical matrix file here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate how often random unipotent matrices are approximate substitutions
    Montecarlo {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        draws: u64,
        #[arg(long)]
        range: Option<u64>,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Run once per range value and report estimate / bound
        #[arg(long, value_delimiter = ',')]
        sweep_range: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Upper bound r^(2n-3) / r^(n(n-1)/2)
    Bound {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        range: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

/// Failure paths, mapped onto exit codes by [`run`].
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] normord_core::Error),
    #[error(transparent)]
    Format(#[from] format::FormatError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl From<crate::parallel::ExperimentError> for CliError {
    fn from(e: crate::parallel::ExperimentError) -> Self {
        CliError::Usage(e.to_string())
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match execute(cli.command, stderr) {
        Ok(out) => {
            let _ = stdout.write_all(out.text.as_bytes());
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_word(text: &str) -> Result<BosonWord, CliError> {
    Ok(text.parse()?)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn normal_form_output(nf: &NormalForm, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => format!("{nf}\n"),
        OutputFormat::Json => json(&format::normal_form_to_json(nf)),
        OutputFormat::Csv => {
            let mut s = String::from("j,l,coeff\n");
            for (&(j, l), c) in nf.terms() {
                s.push_str(&format!("{j},{l},{c}\n"));
            }
            s
        }
    }
}

fn report_output(r: &SubstitutionReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(&ReportJson::from(r)),
        OutputFormat::Table => {
            let mut s = format!(
                "approximate substitution: {}\ng = {}\nphi = {}\n",
                r.verdict(),
                r.extracted_g(),
                r.extracted_phi()
            );
            for c in r.failing_columns() {
                s.push_str(&format!(
                    "column {} fails:\n  expected {}\n  actual   {}\n",
                    c.column, c.expected, c.actual
                ));
            }
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("verdict,failing_columns\n");
            let cols: Vec<String> =
                r.failing_columns().iter().map(|c| c.column.to_string()).collect();
            s.push_str(&format!("{},{}\n", r.verdict(), cols.join(";")));
            s
        }
    }
}

fn execute(cmd: Command, stderr: &mut dyn Write) -> Result<Output, CliError> {
    match cmd {
        Command::No { word, format } => {
            let w = parse_word(&word)?;
            Ok(Output::ok(normal_form_output(&normal_order(&w), format)))
        }
        Command::Dd { word, format } => {
            let w = parse_word(&word)?;
            Ok(Output::ok(normal_form_output(&double_dot(&w), format)))
        }
        Command::Stirling { word, rows, format, out, check_subst } => {
            let w = parse_word(&word)?;
            let m = stirling_matrix(&w, rows)?;
            let report = if check_subst {
                if m.is_unitriangular() {
                    Some(is_approximate_substitution(&truncate_taun(&m, rows)?)?)
                } else {
                    let _ = writeln!(stderr, "note: matrix is not unitriangular; substitution check skipped");
                    None
                }
            } else {
                None
            };
            let code = match &report {
                Some(r) if !r.verdict() => EXIT_FALSE,
                _ => EXIT_OK,
            };
            let mut doc = StirlingJson::from(&m);
            doc.substitution = report.as_ref().map(ReportJson::from);
            if let Some(path) = out {
                write_file(&path, &json(&doc))?;
                let _ = writeln!(stderr, "wrote {}", path.display());
                return Ok(Output { text: String::new(), code });
            }
            let mut text = match format {
                OutputFormat::Table => render::stirling_table(&m),
                OutputFormat::Csv => render::stirling_csv(&m),
                OutputFormat::Json => return Ok(Output { text: json(&doc), code }),
            };
            if let Some(r) = &report {
                text.push_str(&format!("approximate substitution: {}\n", r.verdict()));
            }
            Ok(Output { text, code })
        }
        Command::Bell { word, rows, x, format } => {
            let w = parse_word(&word)?;
            let m = stirling_matrix(&w, rows)?;
            let x = format::parse_rational(&x)?;
            let values = (0..=rows)
                .map(|n| bell_polynomial(&m, n, &x))
                .collect::<Result<Vec<Rational>, _>>()?;
            let text = match format {
                OutputFormat::Table => {
                    let mut rows = vec![vec!["n".to_string(), format!("B(n,{x})")]];
                    rows.extend(values.iter().enumerate().map(|(n, v)| vec![n.to_string(), v.to_string()]));
                    render::aligned(&rows)
                }
                OutputFormat::Csv => {
                    let mut s = String::from("n,value\n");
                    for (n, v) in values.iter().enumerate() {
                        s.push_str(&format!("{n},{v}\n"));
                    }
                    s
                }
                OutputFormat::Json => json(&format::BellJson {
                    word: w.to_string(),
                    x: x.to_string(),
                    values: values.iter().map(ToString::to_string).collect(),
                }),
            };
            Ok(Output::ok(text))
        }
        Command::Classify { word, format } => {
            let w = parse_word(&word)?;
            let doc = ClassJson::new(&w, &classify_word(&w));
            let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
            let text = match format {
                OutputFormat::Json => json(&doc),
                OutputFormat::Table => format!(
                    "kind: {}\nr: {}\np: {}\nends with a: {}\n",
                    doc.kind,
                    opt(doc.r),
                    opt(doc.p),
                    doc.ends_with_a
                ),
                OutputFormat::Csv => format!(
                    "kind,r,p,ends_with_a\n{},{},{},{}\n",
                    doc.kind,
                    opt(doc.r),
                    opt(doc.p),
                    doc.ends_with_a
                ),
            };
            Ok(Output::ok(text))
        }
        Command::CheckSubst { file, format } => {
            let text = std::fs::read_to_string(&file).map_err(|source| CliError::Io {
                path: file.clone(),
                source,
            })?;
            let m = format::read_matrix_file(&text)?;
            let r = is_approximate_substitution(&m)?;
            let code = if r.verdict() { EXIT_OK } else { EXIT_FALSE };
            Ok(Output { text: report_output(&r, format), code })
        }
        Command::BuildSubst { g, phi, size, format, out } => {
            let g = TruncatedSeries::new(format::parse_rational_list(&g)?)?;
            let phi = TruncatedSeries::new(format::parse_rational_list(&phi)?)?;
            let size = size.unwrap_or(g.order().min(phi.order()) + 1);
            let m = normord_core::build_substitution_matrix(&g, &phi, size)?;
            if let Some(path) = out {
                write_file(&path, &format::write_matrix_file(&m))?;
                let _ = writeln!(stderr, "wrote {}", path.display());
                return Ok(Output::ok(String::new()));
            }
            Ok(Output::ok(matrix_output(&m, format)))
        }
        Command::Montecarlo { size, draws, range, seed, jobs, sweep_range, format } => {
            let ranges = match (sweep_range, range) {
                (Some(list), None) if !list.is_empty() => list,
                (None, Some(r)) => vec![r],
                (Some(_), Some(_)) => {
                    return Err(CliError::Usage("use either --range or --sweep-range".into()))
                }
                _ => return Err(CliError::Usage("one of --range or --sweep-range is required".into())),
            };
            let sweep = ranges.len() > 1;
            let results = ranges
                .into_iter()
                .map(|range| {
                    run_experiment_parallel(&ExperimentConfig { size, draws, range, seed, jobs })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Output::ok(experiment_output(&results, sweep, format)))
        }
        Command::Bound { size, range, format } => {
            let bound = probability_bound(size, range)?;
            let params = count_free_parameters(size)?;
            let text = match format {
                OutputFormat::Table => format!("{bound}\n"),
                OutputFormat::Csv => format!("size,range,bound\n{size},{range},{bound}\n"),
                OutputFormat::Json => json(&format::BoundJson {
                    size,
                    range,
                    bound: bound.to_string(),
                    determined: params.determined,
                    total: params.total,
                }),
            };
            Ok(Output::ok(text))
        }
    }
}

fn matrix_output(m: &FiniteMatrix, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => render::matrix_table(m),
        OutputFormat::Csv => render::matrix_csv(m),
        OutputFormat::Json => format::write_matrix_file(m),
    }
}

fn decimal(q: &Rational) -> String {
    format!("{:.6}", q.to_f64().unwrap_or(f64::NAN))
}

fn experiment_output(results: &[ExperimentResult], sweep: bool, format: OutputFormat) -> String {
    let mut header: Vec<String> = ["size", "draws", "range", "seed", "successes", "estimate", "lo", "hi", "bound"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    if sweep {
        header.push("ratio".into());
    }
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|r| {
            let c = &r.config;
            let mut row = vec![
                c.size.to_string(),
                c.draws.to_string(),
                c.range.to_string(),
                c.seed.to_string(),
                r.successes.to_string(),
                decimal(&r.estimate),
                format!("{:.6}", r.wilson_95.0),
                format!("{:.6}", r.wilson_95.1),
                if r.bound.denom().is_one() || r.bound.numer().is_one() {
                    r.bound.to_string()
                } else {
                    decimal(&r.bound)
                },
            ];
            if sweep {
                row.push(decimal(&r.ratio_to_bound()));
            }
            row
        })
        .collect();
    match format {
        OutputFormat::Table => {
            let mut all = vec![header];
            all.extend(rows);
            render::aligned(&all)
        }
        OutputFormat::Csv => {
            let mut s = header.join(",");
            s.push('\n');
            for row in rows {
                s.push_str(&row.join(","));
                s.push('\n');
            }
            s
        }
        OutputFormat::Json => {
            let docs: Vec<ExperimentJson> = results.iter().map(ExperimentJson::from).collect();
            if sweep {
                json(&docs)
            } else {
                json(&docs[0])
            }
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
