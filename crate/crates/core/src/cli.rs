//! Command-line front end. Exit codes: 0 success, 2 invalid input or
//! failed validation, 3 expectation mismatch, 4 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::abelian::AbelianGroup;
use crate::document::{render_table, render_text, verify, ConstructionDocument};
use crate::fiber::{self, defect, FiberModel};
use crate::search::{run_census_with, Mode, SearchParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "isoprod", version, about = "Surfaces isogenous to a product with abelian group actions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a construction document and print its invariants.
    Verify(VerifyArgs),
    /// Run a bounded census and stream it as JSON lines.
    Enumerate(EnumerateArgs),
    /// Topological defects of fiber models.
    Defect(DefectArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long, conflicts_with = "table")]
    pub json: bool,
    #[arg(long)]
    pub table: bool,
    /// Compare against the document's `expected` block; exit 3 on mismatch.
    #[arg(long)]
    pub check_expected: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Comma-separated groups such as `Z2^3,Z4,Z2xZ4`; default all of order ≤ 8.
    #[arg(long, value_delimiter = ',')]
    pub groups: Vec<String>,
    /// Irregularity; every base split `(a, b)` with `a + b = q`, `a ≥ b` is searched.
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    #[arg(long, default_value_t = 8)]
    pub max_branch: usize,
    #[arg(long, default_value_t = 4)]
    pub max_chi: u64,
    /// Keep non-free pairs in the summary count instead of discarding them.
    #[arg(long)]
    pub allow_non_free: bool,
    #[arg(long)]
    pub serial: bool,
    /// Write the JSON lines here and the summary to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DefectArgs {
    /// Genus of the smooth fiber.
    #[arg(long)]
    pub genus: u32,
    #[arg(long, default_value_t = 1)]
    pub base_genus: u32,
    #[arg(long)]
    pub json: bool,
    /// A file, or inline JSON: one fiber model or an array of them.
    pub input: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Enumerate(a) => cmd_enumerate(&a, out, err),
        Command::Defect(a) => cmd_defect(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl ToString) -> Self {
        Failure { code: EXIT_INVALID, message: message.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_IO, message: e.to_string() }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) })
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut doc = ConstructionDocument::parse(&read(&a.file)?).map_err(Failure::invalid)?;
    if !a.check_expected {
        doc.expected = None;
    }
    let report = verify(&doc);
    if a.json {
        serde_json::to_writer_pretty(&mut *out, &report).map_err(io::Error::from)?;
        writeln!(out)?;
    } else if a.table {
        out.write_all(render_table(&report).as_bytes())?;
    } else {
        out.write_all(render_text(&report).as_bytes())?;
    }
    Ok(if !report.is_valid() {
        EXIT_INVALID
    } else if !report.mismatches.is_empty() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let groups = if a.groups.is_empty() {
        AbelianGroup::all_up_to(8)
    } else {
        a.groups
            .iter()
            .map(|s| s.trim().parse::<AbelianGroup>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(Failure::invalid)?
    };
    let mode = if a.serial { Mode::Serial } else { Mode::Parallel };
    let mut stream: Box<dyn Write> = match &a.out {
        Some(path) => Box::new(io::BufWriter::new(fs::File::create(path)?)),
        None => Box::new(Vec::new()),
    };
    let mut summaries = String::new();
    let mut lines = Vec::new();
    for split in SearchParams::splits_for_irregularity(a.q) {
        let params = SearchParams {
            groups: groups.clone(),
            base_split: split,
            max_branch_points: a.max_branch,
            max_chi: a.max_chi,
            require_free: !a.allow_non_free,
            ..SearchParams::default()
        };
        let census = run_census_with(&params, mode).map_err(Failure::invalid)?;
        match &a.out {
            Some(_) => census.write_jsonl(&mut stream)?,
            None => census.write_jsonl(&mut lines)?,
        }
        summaries.push_str(&census.summary_table());
    }
    stream.flush()?;
    if a.out.is_some() {
        out.write_all(summaries.as_bytes())?;
    } else {
        out.write_all(&lines)?;
        err.write_all(summaries.as_bytes())?;
    }
    Ok(EXIT_OK)
}

fn cmd_defect(a: &DefectArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = if Path::new(&a.input).is_file() { read(Path::new(&a.input))? } else { a.input.clone() };
    let value: serde_json::Value = serde_json::from_str(&text).map_err(Failure::invalid)?;
    let models: Vec<FiberModel> = match value {
        serde_json::Value::Array(_) => serde_json::from_value(value),
        _ => serde_json::from_value(value).map(|m| vec![m]),
    }
    .map_err(Failure::invalid)?;
    let reports = models
        .iter()
        .map(|m| defect(m, a.genus))
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::invalid)?;
    let total = fiber::euler_ledger(&models, a.genus, a.base_genus).map_err(Failure::invalid)?;
    if a.json {
        let doc = serde_json::json!({ "fibers": reports, "euler_total": total });
        serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
        writeln!(out)?;
        return Ok(EXIT_OK);
    }
    let summaries: Vec<String> = models.iter().map(FiberModel::summary).collect();
    let w = summaries.iter().map(|s| s.chars().count()).max().unwrap_or(0).max(5) + 2;
    writeln!(out, "{:<4}{:<w$}{:>6}{:>6}{:>7}  class", "#", "model", "e", "p_a", "delta")?;
    for (i, (m, r)) in summaries.iter().zip(&reports).enumerate() {
        let mark = if r.unchecked { " (unchecked)" } else { "" };
        writeln!(
            out,
            "{:<4}{:<w$}{:>6}{:>6}{:>7}  {}{mark}",
            i,
            m,
            r.euler,
            r.arithmetic_genus,
            r.delta,
            r.classification.tag()
        )?;
    }
    let sum: u64 = reports.iter().map(|r| r.delta).sum();
    writeln!(out, "sum of defects {sum}; e(S) = (2-2g)(2-2b) + sum = {total} (g={}, b={})", a.genus, a.base_genus)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("isoprod").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn defect_examples() {
        let (code, out, _) = run_capture(&["defect", "--genus", "3", r#"{"MultipleOfSmooth":{"m":2,"h":2}}"#]);
        assert_eq!(code, 0);
        assert!(out.contains("δ2(i)"), "{out}");
        let (code, out, _) = run_capture(&["defect", "--genus", "5", r#"{"Smooth":{"h":5}}"#]);
        assert_eq!(code, 0);
        assert!(out.contains("sum of defects 0"));
        let node = r#"{"ReducedConfig":{"components":[3],"points":[{"branches":[2]}]}}"#;
        let (code, out, _) = run_capture(&["defect", "--genus", "4", node]);
        assert_eq!(code, 0);
        assert!(out.contains("δ1(i)"), "{out}");
    }

    #[test]
    fn defect_rejects_bad_models() {
        let (code, _, err) = run_capture(&["defect", "--genus", "3", r#"{"MultipleOfSmooth":{"m":2,"h":5}}"#]);
        assert_eq!(code, EXIT_INVALID, "{err}");
        let (code, _, _) = run_capture(&["defect", "--genus", "3", "not json"]);
        assert_eq!(code, EXIT_INVALID);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&[]).0, EXIT_INVALID);
        assert_eq!(run_capture(&["enumerate", "--groups", "Q8"]).0, EXIT_INVALID);
        assert_eq!(run_capture(&["enumerate", "--max-chi", "0"]).0, EXIT_INVALID);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn missing_file_is_io_error() {
        assert_eq!(run_capture(&["verify", "/nonexistent/doc.json"]).0, EXIT_IO);
    }
}
