use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use super::file::{parse_many, serialize_many, ConfigFile, Metadata};
use super::render::{render_svg, RenderOptions};
use crate::config::validate;
use crate::error::{GeomError, Result};
use crate::genmove::{expand, expand_in_pencil, move_in_config, random_param, reduce, rng_for, sample_config, sample_pencil_config, MoveChoice, SampleParams};
use crate::kernel::{Field, ProjPoint};
use crate::theorems::{check_degenerate_five, check_five_axes, check_main, check_six, Verdict, VerifyReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Primes used by `verify --all-fields` in addition to the file's own field.
pub const EXTRA_PRIMES: [u64; 3] = [101, 1009, 10007];

#[derive(Parser, Debug)]
#[command(name = "naxes", version, about = "Generate, verify, transform and draw n-gon axis configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sample a random valid configuration.
    Gen(GenArgs),
    /// Check a theorem on one configuration or a batch.
    Verify(VerifyArgs),
    /// Draw a rational configuration as SVG.
    Render(RenderArgs),
    /// Merge vertices `at` and `at+1` into `l_{at-1} ∩ l_{at+2}`.
    Reduce(ReduceArgs),
    /// Split vertex `at` into two.
    Expand(ExpandArgs),
    /// Move vertices `at-1` and `at` keeping three axes in their pencil.
    Move(MoveArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, env = "NAXES_SEED", default_value_t = 0)]
    seed: u64,
    /// Produce a configuration whose axes all lie in one pencil.
    #[arg(long)]
    pencil: bool,
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long, default_value_t = 10)]
    bound: i64,
    #[arg(long, default_value_t = 10_000)]
    max_retries: usize,
    /// Emit a JSON array of this many configurations.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Five,
    Degen5,
    Six,
    Main,
}

impl Theorem {
    fn as_str(self) -> &'static str {
        match self {
            Theorem::Five => "five",
            Theorem::Degen5 => "degen5",
            Theorem::Six => "six",
            Theorem::Main => "main",
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, short, value_enum)]
    theorem: Theorem,
    /// Also check the reductions modulo 101, 1009 and 10007.
    #[arg(long)]
    all_fields: bool,
    /// The input is a JSON array of configurations.
    #[arg(long)]
    batch: bool,
    /// Write a JSON report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long)]
    no_circles: bool,
    #[arg(long)]
    no_axes: bool,
    /// Draw the parallels that construct the points `E_i`.
    #[arg(long)]
    parallels: bool,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long)]
    at: i64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long)]
    at: i64,
    #[arg(long, allow_hyphen_values = true)]
    t1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t2: Option<String>,
    /// Solve for the second vertex so the axes stay in their pencil.
    #[arg(long)]
    pencil: bool,
    #[arg(long, env = "NAXES_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MoveArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long)]
    at: i64,
    #[arg(long, allow_hyphen_values = true)]
    t: String,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

/// Machine-readable verification result of one configuration in one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub index: usize,
    pub theorem: &'static str,
    pub field: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pencil: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub exit: i32,
}

impl ReportEntry {
    fn text(&self) -> String {
        let mut s = format!("[{}] theorem {} over {}: {}", self.index, self.theorem, self.field, self.verdict);
        if let Some(p) = &self.pencil {
            s += &format!("\n  pencil: {p}");
        }
        if let Some(c) = &self.center {
            s += &format!("\n  center: {c}");
        }
        if !self.witness.is_empty() {
            let w: Vec<String> = self.witness.iter().map(|i| format!("g_{i}")).collect();
            s += &format!("\n  witness: {}", w.join(", "));
        }
        if let Some(d) = &self.detail {
            s += &format!("\n  {d}");
        }
        s
    }
}

fn error_code(e: &GeomError) -> i32 {
    match e {
        GeomError::BudgetExceeded => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

fn theorem_report(points: &[ProjPoint], theorem: Theorem) -> Result<(VerifyReport, Option<String>)> {
    match theorem {
        Theorem::Five => Ok((check_five_axes(&validate(points.to_vec())?)?, None)),
        Theorem::Degen5 => Ok((check_degenerate_five(points)?, None)),
        Theorem::Main => Ok((check_main(&validate(points.to_vec())?)?, None)),
        Theorem::Six => {
            let (r, eq) = check_six(&validate(points.to_vec())?)?;
            let t: Vec<&str> = eq.triples.iter().map(|&b| if b { "T" } else { "F" }).collect();
            let detail = format!(
                "conditions: all axes {}, consecutive triples [{}], diagonals {}, conic {}",
                eq.all_axes,
                t.join(" "),
                eq.diagonals,
                eq.conic
            );
            Ok((r, Some(detail)))
        }
    }
}

/// Verifies one configuration; with `all_fields` also its reductions modulo
/// [`EXTRA_PRIMES`]. Reductions that do not exist or are degenerate are
/// reported as skipped.
pub fn verify_file(index: usize, file: &ConfigFile, theorem: Theorem, all_fields: bool) -> Vec<ReportEntry> {
    let base = |field: String, verdict: String, exit: i32| ReportEntry {
        index,
        theorem: theorem.as_str(),
        field,
        verdict,
        pencil: None,
        center: None,
        witness: Vec::new(),
        detail: None,
        exit,
    };
    let points = match file.points() {
        Ok(p) => p,
        Err(e) => return vec![base("?".into(), format!("invalid input: {e}"), EXIT_INVALID)],
    };
    let field = file.field().expect("points parsed");
    let mut fields = vec![(field, points.clone())];
    if all_fields && field == Field::Rational {
        for p in EXTRA_PRIMES {
            let fp = Field::Prime(p);
            match points.iter().map(|q| q.reduce_to(fp)).collect::<Result<Vec<_>>>() {
                Ok(r) => fields.push((fp, r)),
                Err(_) => fields.push((fp, Vec::new())),
            }
        }
    }
    fields
        .into_iter()
        .map(|(f, pts)| {
            let reduced = f != field;
            if pts.is_empty() {
                return base(f.to_string(), "skipped: no reduction".into(), EXIT_PASS);
            }
            match theorem_report(&pts, theorem) {
                Ok((r, detail)) => ReportEntry {
                    pencil: Some(r.pencil.kind.as_str().to_string()),
                    center: r.pencil.center.as_ref().map(ToString::to_string),
                    witness: r.witness.clone(),
                    detail,
                    ..base(
                        f.to_string(),
                        r.verdict.to_string(),
                        if r.verdict == Verdict::Pass { EXIT_PASS } else { EXIT_FAIL },
                    )
                },
                Err(e) if reduced => base(f.to_string(), format!("skipped: {e}"), EXIT_PASS),
                Err(e) => base(f.to_string(), format!("invalid input: {e}"), error_code(&e)),
            }
        })
        .collect()
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| GeomError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, path: &Option<PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| GeomError::Parse(format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| GeomError::Parse(e.to_string())),
    }
}

fn read_one(path: &PathBuf) -> Result<ConfigFile> {
    let mut files = parse_many(&read(path)?)?;
    if files.len() != 1 {
        return Err(GeomError::Parse(format!("expected one configuration, found {}", files.len())));
    }
    Ok(files.remove(0))
}

fn read_config(path: &PathBuf) -> Result<(ConfigFile, crate::config::NgonConfig)> {
    let file = read_one(path)?;
    let cfg = validate(file.points()?)?;
    Ok((file, cfg))
}

fn write_config(out: &mut dyn Write, path: &Option<PathBuf>, cfg: &crate::config::NgonConfig, meta: Option<Metadata>) -> Result<()> {
    emit(out, path, &ConfigFile::from_points(cfg.points(), meta).to_json())
}

fn gen(a: &GenArgs, out: &mut dyn Write) -> Result<()> {
    let field = match a.prime {
        Some(p) => Field::prime(p)?,
        None => Field::Rational,
    };
    let params = SampleParams::new(a.n, field, a.seed).with_bound(a.bound).with_retries(a.max_retries);
    let one = |p: &SampleParams| -> Result<ConfigFile> {
        let (cfg, provenance) = if a.pencil {
            (sample_pencil_config(p)?, "sample_pencil_config")
        } else {
            (sample_config(p)?, "sample_config")
        };
        let meta = Metadata { seed: Some(p.seed), provenance: Some(provenance.into()) };
        Ok(ConfigFile::from_points(cfg.points(), Some(meta)))
    };
    let text = match a.count {
        None => one(&params)?.to_json(),
        Some(c) => {
            let files: Vec<ConfigFile> = (0..c as u64).into_par_iter().map(|i| one(&params.instance(i))).collect::<Result<_>>()?;
            serialize_many(&files)
        }
    };
    emit(out, &a.output, &text)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let files = parse_many(&read(&a.input)?)?;
    if !a.batch && files.len() != 1 {
        return Err(GeomError::Parse(format!("expected one configuration, found {}; use --batch", files.len())));
    }
    let entries: Vec<ReportEntry> = files
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, f)| verify_file(i, f, a.theorem, a.all_fields))
        .collect();
    for e in &entries {
        let _ = writeln!(out, "{}", e.text());
    }
    if let Some(path) = &a.report {
        let json = serde_json::to_string_pretty(&entries).expect("serializable") + "\n";
        emit(out, &Some(path.clone()), &json)?;
    }
    Ok(entries.iter().map(|e| e.exit).max().unwrap_or(EXIT_PASS))
}

fn render(a: &RenderArgs, out: &mut dyn Write) -> Result<()> {
    let file = read_one(&a.input)?;
    let opts = RenderOptions {
        show_circles: !a.no_circles,
        show_axes: !a.no_axes,
        show_parallel_construction: a.parallels,
        ..RenderOptions::default()
    };
    emit(out, &a.output, &render_svg(&file.points()?, &opts)?)
}

fn run_command(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen(a) => gen(a, out).map(|_| EXIT_PASS),
        Command::Verify(a) => verify(a, out),
        Command::Render(a) => render(a, out).map(|_| EXIT_PASS),
        Command::Reduce(a) => {
            let (file, cfg) = read_config(&a.input)?;
            write_config(out, &a.output, &reduce(&cfg, a.at)?, file.metadata).map(|_| EXIT_PASS)
        }
        Command::Expand(a) => {
            let (file, cfg) = read_config(&a.input)?;
            let field = cfg.field();
            let parse = |s: &Option<String>, name: &str| -> Result<Option<crate::kernel::Scalar>> {
                s.as_deref()
                    .map(|t| field.parse_scalar(t).map_err(|e| GeomError::Parse(format!("--{name}: {e}"))))
                    .transpose()
            };
            let (t1, t2) = (parse(&a.t1, "t1")?, parse(&a.t2, "t2")?);
            let mut rng = rng_for(a.seed);
            let next = if a.pencil {
                let t1 = t1.unwrap_or_else(|| random_param(&mut rng, field, 10));
                expand_in_pencil(&cfg, a.at, &t1, &mut rng, 10)?
            } else {
                match (t1, t2) {
                    (Some(t1), Some(t2)) => expand(&cfg, a.at, &t1, &t2)?,
                    _ => return Err(GeomError::InvalidArgument("expand needs --t1 and --t2, or --pencil".into())),
                }
            };
            write_config(out, &a.output, &next, file.metadata).map(|_| EXIT_PASS)
        }
        Command::Move(a) => {
            let (file, cfg) = read_config(&a.input)?;
            let t = cfg.field().parse_scalar(&a.t).map_err(|e| GeomError::Parse(format!("--t: {e}")))?;
            let next = move_in_config(&cfg, &MoveChoice { index: a.at, t })?;
            write_config(out, &a.output, &next, file.metadata).map(|_| EXIT_PASS)
        }
    }
}

/// Runs the command line and returns the exit code: 0 success or pass, 1 a
/// theorem check failed or its hypothesis does not hold, 2 invalid input, 3
/// sampling budget exceeded.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run_command(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}
