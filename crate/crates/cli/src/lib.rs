//! The `apolar` command line: ideal files, ad-hoc computations and the
//! catalog verification run.

use std::io::Write;
use std::path::{Path, PathBuf};

use apolar_core::apolarity::{apolar_data, minimal_generator_counts};
use apolar_core::artinian::{graded_hilbert_function, local_hilbert_function, socle_and_profile};
use apolar_core::catalog::{self, select};
use apolar_core::deformations::{fiber, tangent_dimension};
use apolar_core::{
    verify_entry, AlgebraError, Field, Ideal, InverseForm, MonomialOrder, Polynomial, RingContext, VerificationReport,
};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::Value;
use thiserror::Error;

/// Exit status for verification failures and failed computations.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for malformed arguments or input files.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {msg}")]
    Syntax { path: String, line: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Algebra(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        }
    }
}

/// Parses the line-oriented ideal format:
///
/// ```text
/// # comment
/// field q            (or: field fp 7)
/// vars x1 x2 x3
/// gen x1^2 - x2*x3
/// ```
///
/// `origin` only labels error messages.
pub fn parse_ideal_text(text: &str, origin: &str) -> Result<Ideal, CliError> {
    let err = |line: usize, msg: String| CliError::Syntax {
        path: origin.to_string(),
        line,
        msg,
    };
    let mut field = None;
    let mut ring = None;
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "field" => {
                if field.is_some() {
                    return Err(err(line_no, "field declared twice".into()));
                }
                let words: Vec<&str> = rest.split_whitespace().collect();
                field = Some(match words.as_slice() {
                    ["q"] => Field::Rationals,
                    ["fp", p] => {
                        let p: u64 = p
                            .parse()
                            .map_err(|_| err(line_no, format!("`{p}` is not an integer")))?;
                        Field::prime_above(p, 1).map_err(|e| err(line_no, e.to_string()))?
                    }
                    _ => {
                        return Err(err(
                            line_no,
                            format!("expected `field q` or `field fp <p>`, got `{line}`"),
                        ))
                    }
                });
            }
            "vars" => {
                if ring.is_some() {
                    return Err(err(line_no, "vars declared twice".into()));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                let f = field.unwrap_or(Field::Rationals);
                field = Some(f);
                ring = Some(RingContext::new(&names, f).map_err(|e| err(line_no, e.to_string()))?);
            }
            "gen" => {
                let r = ring
                    .as_ref()
                    .ok_or_else(|| err(line_no, "`gen` before `vars`".into()))?;
                let p = apolar_core::parse_polynomial(rest, r).map_err(|e| err(line_no, e.to_string()))?;
                gens.push(p);
            }
            other => return Err(err(line_no, format!("unknown directive `{other}`"))),
        }
    }
    let ring = ring.ok_or_else(|| err(text.lines().count().max(1), "missing `vars` line".into()))?;
    Ok(Ideal::new(&ring, gens)?)
}

pub fn load_ideal_file(path: &Path) -> Result<Ideal, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_ideal_text(&text, &path.display().to_string())
}

/// Renders an ideal in the format read by [`parse_ideal_text`].
pub fn format_ideal_file(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let mut out = match ring.field() {
        Field::Rationals => "field q\n".to_string(),
        Field::Prime(p) => format!("field fp {p}\n"),
    };
    out.push_str(&format!("vars {}\n", ring.vars().join(" ")));
    for g in ideal.generators() {
        out.push_str(&format!("gen {g}\n"));
    }
    out
}

/// Integer vectors as `(1,4,4,1)`, everything else as compact JSON.
pub fn format_value(v: &Value) -> String {
    match v {
        Value::Array(xs) if xs.iter().all(Value::is_number) => {
            let parts: Vec<String> = xs.iter().map(Value::to_string).collect();
            format!("({})", parts.join(","))
        }
        other => other.to_string(),
    }
}

fn format_map(m: &serde_json::Map<String, Value>) -> String {
    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", format_value(v))).collect();
    parts.join(" ")
}

#[derive(Debug, Parser)]
#[command(
    name = "apolar",
    version,
    about = "Exact computations with zero-dimensional ideals and apolar ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis, one element per line.
    Gb {
        file: PathBuf,
        /// degrevlex, lex, or elim:K to eliminate the first K variables.
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Hilbert function of S/I.
    Hilbert {
        file: PathBuf,
        /// dim m^i/m^(i+1), for ideals supported at the origin (default).
        #[arg(long, conflicts_with = "graded")]
        local: bool,
        /// dim (S/I)_i, for homogeneous ideals.
        #[arg(long)]
        graded: bool,
    },
    /// Dimension, Hilbert function, socle and Gorenstein test.
    Profile {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Apolar ideal of a form in y1..yN, with minimal generator counts.
    Apolar {
        /// Number of dual variables y1..yN.
        #[arg(long)]
        vars: usize,
        /// Characteristic of the coefficient field; 0 for the rationals.
        #[arg(long, default_value_t = 0)]
        characteristic: u64,
        form: String,
    },
    /// Tangent space dimension h0 = dim S/I^2 - dim S/I.
    Tangent {
        file: PathBuf,
        /// Ambient dimension; defaults to the number of variables.
        #[arg(long)]
        ambient: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Fiber of a one-parameter family, printed as an ideal file.
    Fiber {
        file: PathBuf,
        #[arg(long)]
        param: String,
        /// A constant such as 0, -3 or 1/2.
        #[arg(long)]
        value: String,
    },
    /// Intersection of two ideals in the same ring, printed as an ideal file.
    Intersect { first: PathBuf, second: PathBuf },
    /// Check catalog entries against their expected invariants.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Entry id or prefix (e.g. `A3` or `cubic`); repeatable. All entries by default.
    #[arg(long = "entry")]
    pub entries: Vec<String>,
    #[arg(long)]
    pub json: bool,
    /// Include per-entry wall-clock times.
    #[arg(long)]
    pub timings: bool,
    /// List matching ids without computing.
    #[arg(long)]
    pub list: bool,
}

fn parse_order(s: &str) -> Result<MonomialOrder, CliError> {
    match s {
        "degrevlex" => Ok(MonomialOrder::DegRevLex),
        "lex" => Ok(MonomialOrder::Lex),
        _ => s
            .strip_prefix("elim:")
            .and_then(|k| k.parse().ok())
            .map(MonomialOrder::BlockElimination)
            .ok_or_else(|| CliError::Usage(format!("unknown order `{s}`; use degrevlex, lex or elim:K"))),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn json_line(v: &impl serde::Serialize) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

/// Runs one command; returns the exit status.
fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Gb { file, order } => {
            let order = parse_order(&order)?;
            let ideal = load_ideal_file(&file)?;
            if let MonomialOrder::BlockElimination(k) = order {
                let n = ideal.ring().nvars();
                if k == 0 || k >= n {
                    return Err(CliError::Usage(format!("elim:{k} needs 1 <= K < {n}")));
                }
            }
            let gb = ideal.groebner_basis(order);
            let text: String = gb.elements().iter().map(|g| format!("{g}\n")).collect();
            emit(out, &text)?;
        }
        Command::Hilbert { file, graded, .. } => {
            let ideal = load_ideal_file(&file)?;
            let h = if graded {
                graded_hilbert_function(&ideal)?
            } else {
                local_hilbert_function(&ideal)?
            };
            emit(out, &format!("{h}\n"))?;
        }
        Command::Profile { file, json } => {
            let ideal = load_ideal_file(&file)?;
            let p = socle_and_profile(&ideal)?;
            let socle: Vec<String> = p.socle_basis.iter().map(Polynomial::to_string).collect();
            if json {
                let v = serde_json::json!({
                    "dim": p.dim,
                    "hilbert": p.hilbert.values,
                    "emdim": p.emdim,
                    "msdeg": p.msdeg,
                    "socle_dim": p.socle_dim,
                    "socle": socle,
                    "gorenstein": p.gorenstein,
                });
                emit(out, &json_line(&v))?;
            } else {
                emit(
                    out,
                    &format!(
                        "dim {}\nhilbert {}\nemdim {}\nmsdeg {}\nsocle_dim {}\nsocle {}\ngorenstein {}\n",
                        p.dim,
                        p.hilbert,
                        p.emdim,
                        p.msdeg,
                        p.socle_dim,
                        socle.join(", "),
                        p.gorenstein
                    ),
                )?;
            }
        }
        Command::Apolar {
            vars,
            characteristic,
            form,
        } => {
            let field = if characteristic == 0 {
                Field::Rationals
            } else {
                Field::prime_above(characteristic, 1).map_err(|e| CliError::Usage(e.to_string()))?
            };
            let g = InverseForm::parse(&form, vars, field)?;
            let data = apolar_data(&g)?;
            let top = data.counts_by_degree.keys().max().copied().unwrap_or(0);
            let mins = minimal_generator_counts(&data.ideal, top.max(g.degree() + 1))?;
            let mut text = String::new();
            for gen in data.ideal.generators() {
                text.push_str(&format!("{gen}\n"));
            }
            let counts: Vec<String> = mins.counts_by_degree.iter().map(|(d, c)| format!("{d}:{c}")).collect();
            text.push_str(&format!("# generators {}\n", data.ideal.generators().len()));
            text.push_str(&format!("# minimal generators by degree {}\n", counts.join(" ")));
            text.push_str(&format!("# hilbert {}\n", graded_hilbert_function(&data.ideal)?));
            if g.degree() == 3 {
                text.push_str(&format!("# beta {}\n", mins.count(3)));
            }
            emit(out, &text)?;
        }
        Command::Tangent { file, ambient, json } => {
            let ideal = load_ideal_file(&file)?;
            let n = ambient.unwrap_or(ideal.ring().nvars());
            let t = tangent_dimension(&ideal, n)?;
            if json {
                emit(out, &json_line(&t))?;
            } else {
                emit(
                    out,
                    &format!(
                        "dim_a {}\ndim_a2 {}\nh0 {}\nambient {}\nobstructed {}\n",
                        t.dim_a, t.dim_a2, t.h0, t.ambient_n, t.obstructed
                    ),
                )?;
            }
        }
        Command::Fiber { file, param, value } => {
            let family = load_ideal_file(&file)?;
            let ring = family.ring();
            let v = apolar_core::parse_polynomial(&value, ring)
                .map_err(|e| CliError::Usage(format!("bad --value `{value}`: {e}")))?;
            if !v.is_constant() {
                return Err(CliError::Usage(format!("--value `{value}` is not a constant")));
            }
            let c = v.coefficient(&apolar_core::Monomial::one(ring.nvars()));
            let f = fiber(&family, &param, &c)?;
            emit(out, &format_ideal_file(&f))?;
        }
        Command::Intersect { first, second } => {
            let a = load_ideal_file(&first)?;
            let b = load_ideal_file(&second)?;
            let b = b.map_to_ring(a.ring())?;
            emit(out, &format_ideal_file(&a.intersect(&b)?))?;
        }
        Command::Verify(args) => return verify(args, out),
    }
    Ok(0)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let all = catalog::registry()?;
    let mut chosen: Vec<&catalog::CatalogEntry> = Vec::new();
    if args.entries.is_empty() {
        chosen.extend(all.iter());
    } else {
        for key in &args.entries {
            let hits = select(&all, key);
            if hits.is_empty() {
                return Err(CliError::Usage(format!("no catalog entry matches `{key}`")));
            }
            for h in hits {
                if !chosen.iter().any(|c| c.id == h.id) {
                    chosen.push(h);
                }
            }
        }
    }
    if args.list {
        let mut ids: Vec<&str> = chosen.iter().map(|e| e.id.as_str()).collect();
        ids.sort_unstable();
        emit(out, &ids.iter().map(|id| format!("{id}\n")).collect::<String>())?;
        return Ok(0);
    }
    let reports = chosen.par_iter().map(|e| verify_entry(e, &all, args.timings)).collect();
    let report = VerificationReport::assemble(reports);
    if args.json {
        emit(out, &json_line(&report))?;
    } else {
        let mut text = String::new();
        for e in &report.entries {
            let verdict = if e.pass { "PASS" } else { "FAIL" };
            let time = e.elapsed_ms.map(|ms| format!(" [{ms} ms]")).unwrap_or_default();
            text.push_str(&format!("{verdict} {}{time}\n", e.id));
            text.push_str(&format!("    expected {}\n", format_map(&e.expected)));
            if !e.pass {
                text.push_str(&format!("    computed {}\n", format_map(&e.computed)));
            }
        }
        text.push_str(&format!(
            "{} passed, {} failed (seed {})\n",
            report.summary.passed, report.summary.failed, report.seed
        ));
        emit(out, &text)?;
    }
    Ok(if report.all_passed() { 0 } else { EXIT_FAILURE })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
