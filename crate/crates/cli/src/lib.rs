//! `flagcert`: certify Euler-class obstructions to equivariant maps
//! `S^n × V_{n,ℓ} → S(V)`, evaluate Euler classes of arbitrary
//! representations, and inspect the underlying cohomology rings.
//!
//! Exit codes: 0 nonzero obstruction (or success), 1 malformed input,
//! 2 resource budget exhausted or internal disagreement, 3 inconclusive.

pub mod document;
pub mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagcert_core::obstruction::euler_verdict;
use flagcert_core::quotient_ring::DEFAULT_SLICE_BUDGET_BITS;
use flagcert_core::rep_theory::build_test_representation;
use flagcert_core::topology_facts::{
    base_presentation, flag_presentation, serre_differential_table, top_class,
};
use flagcert_core::{Error, FlagSpec, PolyF2, RepSpec, RingPresentation, Vars};

use document::{verdict_for, CertificateDocument, EngineName, EulerDocument};

/// Environment variable overriding the per-slice memory budget, in bits.
pub const BUDGET_ENV: &str = "FLAGCERT_SLICE_BUDGET_BITS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "flagcert", version, about = "Euler-class obstruction certificates over GF(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certify that no (C2)^(ell+1)-equivariant map S^n x V_{n,ell} -> S(V) exists.
    Certify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = EngineName::Groebner)]
        engine: EngineName,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Reduce the Euler class of a representation read from a rep-spec file.
    Euler {
        #[arg(long)]
        rep: PathBuf,
        /// `flag` (with --n/--ell) or `relations FILE`.
        #[arg(long, num_args = 1..=2, value_names = ["KIND", "FILE"], required = true)]
        base: Vec<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long, value_enum, default_value_t = EngineName::Groebner)]
        engine: EngineName,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the flag and base ring presentations.
    Ring {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        hilbert: bool,
        #[arg(long)]
        top_class: bool,
    },
    /// Run the built-in identity and engine-equivalence checks.
    Selftest,
}

#[derive(Debug, Args)]
struct SpecArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    ell: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A failure with its exit code and diagnostic.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::EngineDisagreement { .. } => EXIT_RESOURCE,
            _ => EXIT_MALFORMED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn malformed(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_MALFORMED,
        message: message.into(),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_RESOURCE,
        message: format!("write failed: {e}"),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let is_info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if is_info { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if is_info { EXIT_OK } else { EXIT_MALFORMED };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn slice_budget() -> Result<u64, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| malformed(format!("{BUDGET_ENV}: `{v}` is not a bit count"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SLICE_BUDGET_BITS),
        Err(e) => Err(malformed(format!("{BUDGET_ENV}: {e}"))),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Certify {
            spec,
            engine,
            format,
        } => certify(spec, engine, format, out),
        Command::Euler {
            rep,
            base,
            n,
            ell,
            engine,
            format,
        } => euler(&rep, &base, n, ell, engine, format, out),
        Command::Ring {
            spec,
            hilbert,
            top_class,
        } => ring(spec, hilbert, top_class, out),
        Command::Selftest => {
            let ok = selftest::run_all(out).map_err(io_failure)?;
            Ok(if ok { EXIT_OK } else { EXIT_RESOURCE })
        }
    }
}

fn verdict_code(nonzero: bool) -> i32 {
    if nonzero {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    }
}

fn certify(spec: SpecArgs, engine: EngineName, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let flag = FlagSpec::new(spec.n, spec.ell)?;
    let rep = build_test_representation(spec.n, spec.ell)?;
    let base = base_presentation(flag).with_slice_budget(slice_budget()?);
    let verdict = euler_verdict(&rep, Arc::new(base), engine.into())?;
    match format {
        Format::Json => {
            let doc = CertificateDocument::new(spec.n, spec.ell, &verdict, engine);
            out.write_all(doc.to_json().as_bytes()).map_err(io_failure)?;
        }
        Format::Text => writeln!(out, "{}", verdict.summary()).map_err(io_failure)?,
    }
    Ok(verdict_code(verdict.obstruction_nonzero()))
}

fn read_file(path: &std::path::Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn in_file(path: &std::path::Path, e: Error) -> Failure {
    let f = Failure::from(e);
    Failure {
        code: f.code,
        message: format!("{}: {}", path.display(), f.message),
    }
}

/// Relations file: one canonical polynomial per line, `#` comments.
fn parse_relations(text: &str, vars: Vars) -> Result<Vec<PolyF2>, Error> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if !content.is_empty() {
            out.push(PolyF2::parse_line(vars, content, i + 1)?);
        }
    }
    Ok(out)
}

fn euler(
    rep_path: &std::path::Path,
    base: &[String],
    n: Option<u32>,
    ell: Option<u32>,
    engine: EngineName,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let rep = RepSpec::parse(&read_file(rep_path)?).map_err(|e| in_file(rep_path, e))?;
    let budget = slice_budget()?;
    let ring: RingPresentation = match base {
        [kind] if kind == "flag" => {
            let (Some(n), Some(ell)) = (n, ell) else {
                return Err(malformed("--base flag requires --n and --ell"));
            };
            let spec = FlagSpec::new(n, ell)?;
            if spec.base_vars().count() != rep.rank() {
                return Err(malformed(format!(
                    "representation has rank {} but the base ring for ell={ell} needs rank {}",
                    rep.rank(),
                    ell + 1
                )));
            }
            base_presentation(spec)
        }
        [kind, file] if kind == "relations" => {
            let path = std::path::Path::new(file);
            let vars = Vars::new(0, rep.rank());
            let relations = parse_relations(&read_file(path)?, vars).map_err(|e| in_file(path, e))?;
            RingPresentation::new(vars, relations).map_err(|e| in_file(path, e))?
        }
        [kind] if kind == "relations" => return Err(malformed("--base relations requires a FILE")),
        [kind, ..] => {
            return Err(malformed(format!(
                "--base: unknown base `{kind}` (expected `flag` or `relations FILE`)"
            )))
        }
        [] => return Err(malformed("--base requires a value")),
    };
    let verdict = verdict_for(&rep, ring.with_slice_budget(budget), engine)?;
    match format {
        Format::Json => {
            let doc = EulerDocument::new(&rep, &verdict, engine);
            out.write_all(doc.to_json().as_bytes()).map_err(io_failure)?;
        }
        Format::Text => {
            writeln!(out, "base: {}", verdict.presentation()).map_err(io_failure)?;
            writeln!(out, "euler class: {}", verdict.certificate()).map_err(io_failure)?;
            writeln!(out, "{}", verdict.summary()).map_err(io_failure)?;
        }
    }
    Ok(verdict_code(verdict.obstruction_nonzero()))
}

fn ring(spec: SpecArgs, hilbert: bool, show_top: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let flag = FlagSpec::new(spec.n, spec.ell)?;
    let budget = slice_budget()?;
    let flag_ring = flag_presentation(flag).with_slice_budget(budget);
    let base_ring = base_presentation(flag);
    let mut text = String::new();
    text.push_str(&format!("flag ring: {flag_ring}\n"));
    text.push_str(&format!("base ring: {base_ring}\n"));
    text.push_str(&format!("manifold dimension: {}\n", flag.manifold_dim()));
    text.push_str("groebner basis:\n");
    for g in flag_ring.groebner_basis() {
        text.push_str(&format!("  {g}\n"));
    }
    text.push_str("differentials:\n");
    for (j, d) in serre_differential_table(flag).entries() {
        text.push_str(&format!("  d{}(z{j}) = {d}\n", j + 1));
    }
    if hilbert {
        let table = flag_ring.hilbert_function(flag.manifold_dim())?;
        text.push_str(&format!("hilbert: {table}\n"));
        text.push_str(&format!("total dimension: {}\n", table.total()));
    }
    if show_top {
        let top = top_class(flag);
        let nonzero = flag_ring.is_nonzero_in_quotient(&top)?;
        text.push_str(&format!(
            "top class: {top} ({})\n",
            if nonzero { "nonzero" } else { "zero" }
        ));
    }
    out.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(EXIT_OK)
}
