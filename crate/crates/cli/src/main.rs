use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use cfc_core::classify::{classify_cfc, exceptional_data};
use cfc_core::coxeter::{DEFAULT_CAP, INFINITY};
use cfc_core::cylindric::cylindric_transform;
use cfc_core::enumerate::{
    enumerate_cfc, enumerate_cfc_involutions, enumerate_fc_census, LengthCensus,
};
use cfc_core::heap::heap_of;
use cfc_core::qseries::{
    cfc_series, cfci_series, expand, resolve_exceptional_poly, Coeffs, QPoly, QuasiSeries, TailTerm,
};
use cfc_core::render::{cylindric_dot, heap_dot};
use cfc_core::verify::{self, FamilyOptions, Options, AC_COUNT, DEFAULT_SEED};
use cfc_core::{build_family, CoxeterSystem, Error, Family};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

/// Full and cyclic full commutativity in Coxeter groups.
///
/// Systems are given as a family and a rank (`A 4`, `Ctilde 2`, or glued as
/// `linear7`); `custom` reads a matrix file given with `--matrix`. Words are
/// whitespace-separated generator names.
#[derive(Parser, Debug)]
#[command(name = "cfc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a word: reduced, FC, CFC, family clause, witness.
    Classify {
        /// FAMILY [RANK] WORD
        #[arg(required = true)]
        args: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// Count FC or CFC elements (or CFC involutions) by length.
    Enumerate {
        /// FAMILY [RANK]
        #[arg(required = true)]
        args: Vec<String>,
        #[arg(long)]
        horizon: usize,
        #[arg(long, value_enum, default_value_t = Class::Cfc)]
        class: Class,
        /// Count CFC involutions instead.
        #[arg(long)]
        involutions: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// Print a generating series and its expansion.
    Series {
        /// FAMILY [RANK]
        #[arg(required = true)]
        args: Vec<String>,
        #[arg(long, default_value_t = 20)]
        order: usize,
        /// Series of CFC involutions instead.
        #[arg(long)]
        involutions: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare a census with its series, or run acceptance criteria.
    ///
    /// TARGET is a family followed by a rank, `ac1` … `ac11`, or `all`.
    /// Exits with status 2 when any comparison fails.
    Verify {
        /// TARGET [RANK]
        #[arg(required = true)]
        args: Vec<String>,
        #[arg(long)]
        horizon: Option<usize>,
        /// Also compare CFC involutions.
        #[arg(long)]
        involutions: bool,
        /// Include the long exceptional censuses.
        #[arg(long)]
        exceptional_deep: bool,
        /// Seed for sampled checks; in family mode, adds a sampled crosscheck.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// Emit the heap of a word, or its cylindric transformation, as DOT.
    Render {
        /// FAMILY [RANK] WORD
        #[arg(required = true)]
        args: Vec<String>,
        #[arg(long)]
        cylindric: bool,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Coxeter matrix file for the `custom` family.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Limit on enumerated words and rewrite classes.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Class {
    Fc,
    Cfc,
}

/// Matrix file: `{"names": [...], "matrix": [[1, 3, "inf"], ...]}`.
#[derive(Deserialize)]
struct MatrixFile {
    names: Vec<String>,
    matrix: Vec<Vec<Entry>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(u32),
    Token(String),
}

fn load_matrix(path: &Path) -> anyhow::Result<CoxeterSystem> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: MatrixFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let mut matrix = Vec::with_capacity(file.matrix.len());
    for row in file.matrix {
        let mut out = Vec::with_capacity(row.len());
        for e in row {
            out.push(match e {
                Entry::Int(m) => m,
                Entry::Token(t) if t == "inf" => INFINITY,
                Entry::Token(t) => return Err(Error::UnsupportedEntry { entry: t }.into()),
            });
        }
        matrix.push(out);
    }
    Ok(CoxeterSystem::new(file.names, matrix)?)
}

/// `A4`, `linear7`: family token with the rank glued on.
fn split_glued(token: &str) -> Option<(Family, usize)> {
    let cut = token.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if cut == token.len() || cut == 0 {
        return None;
    }
    let family = Family::from_str(&token[..cut]).ok()?;
    let rank = token[cut..].parse().ok()?;
    Some((family, rank))
}

/// Parses `FAMILY [RANK]` from the front of `args`; returns the system and
/// the remaining arguments.
fn system<'a>(
    args: &'a [String],
    matrix: Option<&Path>,
) -> anyhow::Result<(CoxeterSystem, &'a [String])> {
    let token = &args[0];
    let (family, glued) = match Family::from_str(token) {
        Ok(f) => (f, None),
        Err(e) => match split_glued(token) {
            Some((f, r)) => (f, Some(r)),
            None => return Err(e.into()),
        },
    };
    let mut rest = &args[1..];
    if family == Family::Custom {
        let path = matrix.ok_or_else(|| anyhow!("the custom family needs --matrix FILE"))?;
        return Ok((load_matrix(path)?, rest));
    }
    let rank = if family.is_fixed_rank() {
        glued.unwrap_or(family.min_rank())
    } else if let Some(r) = glued {
        r
    } else {
        let r = rest
            .first()
            .ok_or_else(|| anyhow!("missing rank after {token}"))?;
        let r = r
            .parse()
            .map_err(|_| anyhow!("bad rank `{r}` after {token}"))?;
        rest = &rest[1..];
        r
    };
    Ok((build_family(family, rank)?, rest))
}

fn only_word(rest: &[String]) -> anyhow::Result<&str> {
    match rest {
        [w] => Ok(w),
        [] => bail!("missing word"),
        _ => bail!("unexpected arguments {:?}", &rest[1..]),
    }
}

fn no_more(rest: &[String]) -> anyhow::Result<()> {
    if rest.is_empty() {
        Ok(())
    } else {
        bail!("unexpected arguments {rest:?}")
    }
}

fn json<T: Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn unsupported(format: Format, command: &str) -> anyhow::Error {
    anyhow!("format {format:?} is not available for {command}")
}

/// Output text and whether every check passed.
struct Output {
    text: String,
    passed: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn classify(args: &[String], format: Format, common: &Common) -> anyhow::Result<Output> {
    let (sys, rest) = system(args, common.matrix.as_deref())?;
    let w = sys.parse_word(only_word(rest)?)?;
    let c = classify_cfc(&sys, &w)?;
    Ok(match format {
        Format::Json => json(&c)?,
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "word: {}", sys.format_word(&w))?;
            writeln!(out, "reduced: {}", c.reduced)?;
            writeln!(out, "fc: {}", c.fc)?;
            writeln!(out, "cfc: {}", c.cfc)?;
            if let Some(cond) = c.cfc_condition {
                writeln!(
                    out,
                    "condition: {}",
                    serde_json::to_value(cond)?.as_str().unwrap_or_default()
                )?;
            }
            writeln!(out, "involution: {}", c.involution)?;
            writeln!(out, "cfc_involution: {}", c.cfc_involution)?;
            if let Some(l) = c.logarithmic {
                writeln!(out, "logarithmic: {l}")?;
            }
            if let Some(wit) = &c.witness {
                let labels: Vec<String> = wit
                    .points
                    .iter()
                    .map(|&i| format!("{i}:{}", sys.name(w.letters()[i])))
                    .collect();
                let kind = serde_json::to_value(wit.kind)?;
                writeln!(
                    out,
                    "witness: {} {}",
                    kind.as_str().unwrap_or_default(),
                    labels.join(" ")
                )?;
            }
            out
        }
        f => return Err(unsupported(f, "classify")),
    }
    .into())
}

fn census_text(c: &LengthCensus) -> String {
    let mut out = String::new();
    for (l, n) in c.counts.iter().enumerate() {
        let _ = writeln!(out, "{l:>4} {n}");
    }
    let _ = writeln!(out, "total {}", c.total());
    out
}

fn enumerate(
    args: &[String],
    horizon: usize,
    class: Class,
    involutions: bool,
    format: Format,
    common: &Common,
) -> anyhow::Result<Output> {
    let (sys, rest) = system(args, common.matrix.as_deref())?;
    no_more(rest)?;
    let census = if involutions {
        let mut c = enumerate_cfc_involutions(&sys);
        c.counts.resize(horizon + 1, 0);
        c.horizon = horizon;
        c
    } else {
        match class {
            Class::Fc => enumerate_fc_census(&sys, horizon, common.cap)?,
            Class::Cfc => enumerate_cfc(&sys, horizon, common.cap)?,
        }
    };
    Ok(match format {
        Format::Json => json(&census)?,
        Format::Csv => census.to_csv(),
        Format::Text => census_text(&census),
        f => return Err(unsupported(f, "enumerate")),
    }
    .into())
}

#[derive(Serialize)]
struct SeriesOut<'a> {
    family: &'a str,
    n: usize,
    poly: &'a Option<QPoly>,
    tails: &'a [TailTerm],
    expansion: Coeffs,
}

fn series_formula(s: &QuasiSeries) -> String {
    let mut parts = Vec::new();
    if let Some(p) = &s.poly {
        parts.push(p.to_string());
    }
    for t in &s.tails {
        parts.push(format!("{}q^{}/(1-q^{})", t.c, t.a, t.b));
    }
    parts.join(" + ")
}

fn series(
    args: &[String],
    order: usize,
    involutions: bool,
    format: Format,
) -> anyhow::Result<Output> {
    let (sys, rest) = system(args, None)?;
    no_more(rest)?;
    let family = sys.family();
    let n = sys.family_rank();
    let mut s = if involutions {
        cfci_series(family, n)?
    } else {
        cfc_series(family, n)?
    };
    if s.poly.is_none() {
        let data = exceptional_data(family)?;
        s.poly = Some(resolve_exceptional_poly(family, &data.census)?);
    }
    let expansion = expand(&s, order)?;
    Ok(match format {
        Format::Json => {
            let out = SeriesOut {
                family: family.token(),
                n,
                poly: &s.poly,
                tails: &s.tails,
                expansion: Coeffs(expansion.clone()),
            };
            json(&out)?
        }
        Format::Text => {
            let coeffs: Vec<String> = expansion.iter().map(ToString::to_string).collect();
            format!("{}\n{}\n", series_formula(&s), coeffs.join(" "))
        }
        f => return Err(unsupported(f, "series")),
    }
    .into())
}

/// `ac3`, `AC-3`, `all`.
fn criteria(token: &str) -> Option<Vec<usize>> {
    let t = token.to_ascii_lowercase();
    if t == "all" {
        return Some((1..=AC_COUNT).collect());
    }
    let k: usize = t.strip_prefix("ac")?.trim_start_matches('-').parse().ok()?;
    (1..=AC_COUNT).contains(&k).then(|| vec![k])
}

struct VerifyArgs<'a> {
    args: &'a [String],
    horizon: Option<usize>,
    involutions: bool,
    deep: bool,
    seed: Option<u64>,
    format: Format,
}

fn run_verify(v: VerifyArgs, common: &Common) -> anyhow::Result<Output> {
    if let Some(ks) = criteria(&v.args[0]) {
        no_more(&v.args[1..])?;
        let opts = Options {
            deep: v.deep,
            seed: v.seed.unwrap_or(DEFAULT_SEED),
        };
        let reports = ks
            .into_iter()
            .map(|k| verify::run(k, &opts))
            .collect::<Result<Vec<_>, _>>()?;
        let passed = reports.iter().all(|r| r.passed);
        let text = match v.format {
            Format::Json => json(&reports)?,
            Format::Text => {
                let mut out = String::new();
                for r in &reports {
                    writeln!(out, "{}", r.line())?;
                    for c in r.failures() {
                        writeln!(out, "    FAILED {}: {}", c.name, c.detail)?;
                    }
                    for n in &r.notes {
                        writeln!(out, "    note: {n}")?;
                    }
                }
                out
            }
            f => return Err(unsupported(f, "verify")),
        };
        return Ok(Output { text, passed });
    }
    let (sys, rest) = system(v.args, common.matrix.as_deref())?;
    no_more(rest)?;
    let horizon = v
        .horizon
        .ok_or_else(|| anyhow!("verify needs --horizon for a family"))?;
    let opts = FamilyOptions {
        involutions: v.involutions,
        seed: v.seed,
        cap: common.cap,
    };
    let report = verify::verify_family(&sys, horizon, &opts)?;
    let text = match v.format {
        Format::Json => json(&report)?,
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "{} {} to {}: {}",
                report.family,
                report.n,
                report.horizon,
                if report.passed { "PASS" } else { "FAIL" }
            )?;
            writeln!(out, "census    {:?}", report.census)?;
            if let Some(e) = &report.expansion {
                let e: Vec<String> = e.0.iter().map(ToString::to_string).collect();
                writeln!(out, "expansion [{}]", e.join(", "))?;
            }
            for c in &report.checks {
                writeln!(
                    out,
                    "{} {}: {}",
                    if c.passed { "ok  " } else { "FAIL" },
                    c.name,
                    c.detail
                )?;
            }
            out
        }
        f => return Err(unsupported(f, "verify")),
    };
    Ok(Output {
        text,
        passed: report.passed,
    })
}

fn render(
    args: &[String],
    cylindric: bool,
    format: Format,
    common: &Common,
) -> anyhow::Result<Output> {
    if format != Format::Dot {
        return Err(unsupported(format, "render"));
    }
    let (sys, rest) = system(args, common.matrix.as_deref())?;
    let w = sys.parse_word(only_word(rest)?)?;
    let h = heap_of(&sys, &w);
    Ok(if cylindric {
        cylindric_dot(&sys, &cylindric_transform(&sys, &h))
    } else {
        heap_dot(&sys, &h)
    }
    .into())
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    match cli.command {
        Command::Classify {
            args,
            format,
            common,
        } => classify(&args, format, &common),
        Command::Enumerate {
            args,
            horizon,
            class,
            involutions,
            format,
            common,
        } => enumerate(&args, horizon, class, involutions, format, &common),
        Command::Series {
            args,
            order,
            involutions,
            format,
        } => series(&args, order, involutions, format),
        Command::Verify {
            args,
            horizon,
            involutions,
            exceptional_deep,
            seed,
            format,
            common,
        } => run_verify(
            VerifyArgs {
                args: &args,
                horizon,
                involutions,
                deep: exceptional_deep,
                seed,
                format,
            },
            &common,
        ),
        Command::Render {
            args,
            cylindric,
            format,
            common,
        } => render(&args, cylindric, format, &common),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::UnknownGenerator { .. } => "unknown_generator",
        Error::UnknownFamily { .. } => "unknown_family",
        Error::RankOutOfRange { .. } => "rank_out_of_range",
        Error::UnsupportedEntry { .. } => "unsupported_entry",
        Error::InvalidMatrix(_) => "invalid_matrix",
        Error::CapExceeded { .. } => "cap_exceeded",
        Error::NotReduced { .. } => "not_reduced",
        Error::Precondition(_) => "precondition",
        Error::ClassifierUnavailable { .. } => "classifier_unavailable",
        Error::Unresolved { .. } => "unresolved",
        Error::Inconclusive { .. } => "inconclusive",
        Error::Inconsistent(_) => "inconsistent",
    }
}

fn error_json(e: &anyhow::Error) -> serde_json::Value {
    let kind = e.downcast_ref::<Error>().map_or("usage", error_kind);
    let message = format!("{e:#}");
    serde_json::json!({ "error": kind, "message": message })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("{}", error_json(&e));
            ExitCode::from(1)
        }
    }
}
