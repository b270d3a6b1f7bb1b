//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;

use cage_spectra::feasibility::{spectral_feasibility_with, FeasibilityConfig, ScanRow, Verdict};
use cage_spectra::graphcore::{
    catalog, catalog_entries, spectral_crosscheck, structural_check, verify_all_ones_identity,
    verify_path_count_identity,
};
use cage_spectra::{dickson_family, moore_bound, Family, Graph, Precision};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::graph6::parse_graph6_file;
use crate::report::{self, bigint_json, biguint_json, pass_str, to_canonical_json};

pub const PRECISION_ENV: &str = "CAGE_SPECTRA_PRECISION";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "cage-spectra", version, about = "Spectral feasibility tests for antipodal cages of even girth")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Moore bound M(k, g).
    Moore { k: u32, g: u32 },
    /// Coefficients of G_i, F_i or H_i for degree k.
    Poly {
        #[arg(value_parser = parse_family)]
        family: Family,
        k: u32,
        i: usize,
    },
    /// Structural checks, both matrix identities and the eigenvalue
    /// cross-check for a graph6 file or `catalog:<name>`.
    Verify {
        source: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        e: u32,
    },
    /// Full spectral feasibility report for one triple.
    Feasibility { k: u32, d: u32, e: u32 },
    /// Feasibility verdicts over a grid of triples.
    Scan {
        /// Values of k: `a..b` (inclusive), or a comma-separated list.
        #[arg(long, value_parser = parse_values)]
        k: Values,
        #[arg(long, value_parser = parse_values)]
        d: Values,
        #[arg(long, value_parser = parse_values)]
        e: Values,
    },
    /// Lists the embedded graphs.
    Catalog,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: cage_spectra::ParameterError| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Values(pub Vec<u32>);

/// Comma-separated items, each a number or an inclusive range `a..b`
/// (`a..=b` is accepted too).
pub fn parse_values(s: &str) -> Result<Values, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        let number = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("`{t}` is not a non-negative integer"));
        if let Some((a, b)) = item.split_once("..") {
            let (a, b) = (number(a)?, number(b.strip_prefix('=').unwrap_or(b))?);
            if a > b {
                return Err(format!("empty range `{item}`"));
            }
            out.extend(a..=b);
        } else {
            out.push(number(item)?);
        }
    }
    Ok(Values(out))
}

/// Reads the working precision from the environment; unset means the
/// default of 128 bits.
pub fn precision_from_env(value: Option<&str>) -> Result<Precision, String> {
    match value {
        None => Ok(Precision::default()),
        Some(v) => v
            .trim()
            .parse::<u32>()
            .ok()
            .and_then(Precision::new)
            .ok_or_else(|| {
                format!(
                    "{PRECISION_ENV}={v:?} is not a bit count in {}..={}",
                    Precision::MIN_BITS,
                    Precision::MAX_BITS
                )
            }),
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let env = std::env::var(PRECISION_ENV).ok();
    let precision = match precision_from_env(env.as_deref()) {
        Ok(p) => p,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let config = FeasibilityConfig { precision };
    let result = match cli.command {
        Command::Moore { k, g } => moore(k, g, cli.format, out),
        Command::Poly { family, k, i } => poly(family, k, i, cli.format, out),
        Command::Verify { source, k, d, e } => verify(&source, k, d, e, cli.format, out, err),
        Command::Feasibility { k, d, e } => feasibility(k, d, e, &config, cli.format, out),
        Command::Scan { k, d, e } => scan(&k.0, &d.0, &e.0, &config, cli.format, out, err),
        Command::Catalog => list_catalog(cli.format, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        // A closed pipe (`| head`) is not an error worth reporting.
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_VERIFICATION_FAILED
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

type Outcome = Result<i32, Failure>;

fn write_csv<I>(out: &mut dyn Write, header: &[&str], rows: I) -> Result<(), Failure>
where
    I: IntoIterator,
    I::Item: IntoIterator,
    <I::Item as IntoIterator>::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_line<R>(record: R) -> Result<Vec<u8>, Failure>
where
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(record)?;
    w.into_inner().map_err(|e| Failure::Io(e.into_error()))
}

fn moore(k: u32, g: u32, format: OutputFormat, out: &mut dyn Write) -> Outcome {
    let m = moore_bound(k, g).map_err(usage)?;
    match format {
        OutputFormat::Text => writeln!(out, "{m}")?,
        OutputFormat::Json => writeln!(out, "{}", to_canonical_json(&json!({"k": k, "g": g, "moore_bound": biguint_json(&m)})))?,
        OutputFormat::Csv => write_csv(out, &["k", "g", "moore_bound"], [[k.to_string(), g.to_string(), m.to_string()]])?,
    }
    Ok(EXIT_OK)
}

fn poly(family: Family, k: u32, i: usize, format: OutputFormat, out: &mut dyn Write) -> Outcome {
    let p = dickson_family(family, k, i).map_err(usage)?;
    let name = family.name();
    match format {
        OutputFormat::Text => {
            let coeffs: Vec<String> = p.coefficients().iter().map(ToString::to_string).collect();
            writeln!(out, "{name}_{i}(x) = {p}")?;
            writeln!(out, "coefficients (ascending powers): {}", coeffs.join(" "))?;
        }
        OutputFormat::Json => {
            let v = json!({
                "family": name,
                "k": k,
                "i": i,
                "coefficients": p.coefficients().iter().map(bigint_json).collect::<Vec<_>>(),
                "polynomial": p.to_string(),
            });
            writeln!(out, "{}", to_canonical_json(&v))?;
        }
        OutputFormat::Csv => {
            let rows = p.coefficients().iter().enumerate().map(|(power, c)| [power.to_string(), c.to_string()]);
            write_csv(out, &["power", "coefficient"], rows)?;
        }
    }
    Ok(EXIT_OK)
}

fn load_graphs(source: &str) -> Result<Vec<Graph>, Failure> {
    if let Some(name) = source.strip_prefix("catalog:") {
        return Ok(vec![catalog(name).map_err(usage)?]);
    }
    let text = std::fs::read_to_string(source).map_err(|e| Failure::Usage(format!("{source}: {e}")))?;
    let graphs = parse_graph6_file(&text).map_err(|e| Failure::Usage(format!("{source}: {e}")))?;
    if graphs.is_empty() {
        return Err(Failure::Usage(format!("{source}: no graphs found")));
    }
    Ok(graphs)
}

fn verify(
    source: &str,
    k: u32,
    d: u32,
    e: u32,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let graphs = load_graphs(source)?;
    let mut all_pass = true;
    let mut csv_rows = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        let structural = structural_check(g, k, d, e);
        if let Some(v) = structural.failures.iter().find(|v| v.is_parameter_violation()) {
            return Err(Failure::Usage(format!("parameters (k={k}, d={d}, e={e}) rejected: {v:?}")));
        }
        let path = verify_path_count_identity(g, k, d, e).map_err(|x| x.to_string());
        let ones = verify_all_ones_identity(g, k, d, e).map_err(|x| x.to_string());
        let spectral = spectral_crosscheck(g, k, d, e).map_err(|x| x.to_string());
        let passes = structural.passes()
            && path.as_ref().is_ok_and(|r| r.holds())
            && ones.as_ref().is_ok_and(|r| r.holds())
            && spectral.as_ref().is_ok_and(|r| r.passes());
        all_pass &= passes;
        match format {
            OutputFormat::Text => {
                writeln!(out, "graph {} ({} vertices)", index + 1, g.order())?;
                writeln!(out, "  structure: {}", pass_str(structural.passes()))?;
                for f in &structural.failures {
                    writeln!(out, "    {f:?}")?;
                }
                let identity = |r: &Result<_, String>| match r {
                    Ok(r) => pass_str(cage_spectra::graphcore::IdentityReport::holds(r)).to_string(),
                    Err(_) => "refused".to_string(),
                };
                writeln!(out, "  path-count identity: {}", identity(&path))?;
                writeln!(out, "  all-ones identity: {}", identity(&ones))?;
                match &spectral {
                    Ok(r) => writeln!(
                        out,
                        "  eigenvalue cross-check: {} (max deviation {})",
                        pass_str(r.passes()),
                        report::format_float(r.max_deviation)
                    )?,
                    Err(_) => writeln!(out, "  eigenvalue cross-check: refused")?,
                }
                writeln!(out, "  result: {}", if passes { "verified" } else { "failed" })?;
            }
            OutputFormat::Json => {
                let v = json!({
                    "graph": index + 1,
                    "source": source,
                    "structure": report::structural_json(&structural),
                    "path_count_identity": report::identity_json(&path),
                    "all_ones_identity": report::identity_json(&ones),
                    "eigenvalue_crosscheck": report::spectral_json(&spectral),
                    "passes": passes,
                });
                writeln!(out, "{}", to_canonical_json(&v))?;
            }
            OutputFormat::Csv => csv_rows.push([
                (index + 1).to_string(),
                g.order().to_string(),
                structural.passes().to_string(),
                path.as_ref().is_ok_and(|r| r.holds()).to_string(),
                ones.as_ref().is_ok_and(|r| r.holds()).to_string(),
                spectral.as_ref().is_ok_and(|r| r.passes()).to_string(),
                passes.to_string(),
            ]),
        }
    }
    if format == OutputFormat::Csv {
        let header = ["graph", "order", "structure", "path_count_identity", "all_ones_identity", "eigenvalue_crosscheck", "passes"];
        write_csv(out, &header, csv_rows)?;
    }
    if all_pass {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "verification failed")?;
        Ok(EXIT_VERIFICATION_FAILED)
    }
}

fn feasibility(k: u32, d: u32, e: u32, config: &FeasibilityConfig, format: OutputFormat, out: &mut dyn Write) -> Outcome {
    let r = spectral_feasibility_with(k, d, e, config).map_err(usage)?;
    match format {
        OutputFormat::Text => write!(out, "{}", report::feasibility_text(&r))?,
        OutputFormat::Json => writeln!(out, "{}", to_canonical_json(&report::feasibility_json(&r)))?,
        OutputFormat::Csv => {
            let row = ScanRow { k, d, e, outcome: Ok(r) };
            write_csv(out, &report::CSV_HEADER, [report::csv_record(&row)])?;
        }
    }
    Ok(EXIT_OK)
}

/// Evaluates triples in parallel, one chunk at a time, and writes each
/// chunk in input order before starting the next.
#[allow(clippy::too_many_arguments)]
fn scan(
    ks: &[u32],
    ds: &[u32],
    es: &[u32],
    config: &FeasibilityConfig,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let triples = cage_spectra::feasibility::scan_triples(ks, ds, es);
    let chunk = (rayon::current_num_threads() * 2).max(1);
    if format == OutputFormat::Csv {
        out.write_all(&csv_line(report::CSV_HEADER)?)?;
    }
    let mut outside = 0usize;
    for block in triples.chunks(chunk) {
        let rows: Vec<ScanRow> = block
            .par_iter()
            .map(|&(k, d, e)| ScanRow { k, d, e, outcome: spectral_feasibility_with(k, d, e, config) })
            .collect();
        for row in &rows {
            if row.verdict() == Verdict::OutsideRegime {
                outside += 1;
            }
            match format {
                OutputFormat::Text => writeln!(out, "{}", report::scan_row_text(row))?,
                OutputFormat::Json => writeln!(out, "{}", to_canonical_json(&report::scan_row_json(row)))?,
                OutputFormat::Csv => {
                    out.write_all(&csv_line(report::csv_record(row))?)?;
                }
            }
        }
        out.flush()?;
    }
    if outside > 0 {
        writeln!(err, "note: {outside} of {} triples are outside the supported parameter regime", triples.len())?;
    }
    Ok(EXIT_OK)
}

fn list_catalog(format: OutputFormat, out: &mut dyn Write) -> Outcome {
    let entries = catalog_entries();
    match format {
        OutputFormat::Text => {
            for c in entries {
                writeln!(out, "{:<16} n={:<3} k={} g={}  {}", c.name, c.order, c.degree, c.girth, c.description)?;
            }
        }
        OutputFormat::Json => {
            for c in entries {
                let v: Value = json!({
                    "name": c.name,
                    "order": c.order,
                    "degree": c.degree,
                    "girth": c.girth,
                    "description": c.description,
                });
                writeln!(out, "{}", to_canonical_json(&v))?;
            }
        }
        OutputFormat::Csv => {
            let rows = entries.iter().map(|c| {
                [c.name.to_string(), c.order.to_string(), c.degree.to_string(), c.girth.to_string(), c.description.to_string()]
            });
            write_csv(out, &["name", "order", "degree", "girth", "description"], rows)?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_lists() {
        assert_eq!(parse_values("4..7").unwrap().0, [4, 5, 6, 7]);
        assert_eq!(parse_values("7,9").unwrap().0, [7, 9]);
        assert_eq!(parse_values("3,5..=6").unwrap().0, [3, 5, 6]);
        assert!(parse_values("9..4").is_err());
        assert!(parse_values("x").is_err());
    }

    #[test]
    fn precision_env_values() {
        assert_eq!(precision_from_env(None).unwrap().bits(), 128);
        assert_eq!(precision_from_env(Some("256")).unwrap().bits(), 256);
        assert!(precision_from_env(Some("8")).is_err());
        assert!(precision_from_env(Some("lots")).is_err());
    }
}
