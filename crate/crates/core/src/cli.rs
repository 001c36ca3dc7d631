//! Graph-file format and the command-line front end.
//!
//! Graph files are line oriented; `#` starts a comment and blank lines are
//! ignored:
//!
//! ```text
//! n 5          # vertex count, must come first
//! a 0 1        # one arc per line
//! x 1 2 3 4    # optional spine path
//! y 0          # optional stable set (defaults to the rest when x is given)
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::certificate::{verify_certificate, Certificate};
use crate::constructions::certify;
use crate::digraph::{Digraph, Path, MAX_VERTICES};
use crate::harness::{fuzz_run, gen_instance, Check, FuzzConfig, GenParams, InstanceKind, KPolicy, Sizes};
use crate::oracles::{
    alpha_k_oracle_with, chi_k_oracle_with, lambda_k_oracle_with, lambda_oracle_with, pi_k_oracle_with, OracleBudget,
};
use crate::recognition::{check_spine_partition, find_spine_partition, find_split_partition, SpinePartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphFile {
    pub digraph: Digraph,
    pub spine: Option<SpinePartition>,
}

fn parse_ids(line: usize, fields: &[&str]) -> Result<Vec<usize>, ParseError> {
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>().map_err(|_| ParseError { line, message: format!("invalid vertex id {f:?}") })
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let err = |line: usize, message: String| ParseError { line, message };
    let mut n: Option<usize> = None;
    let mut arcs = Vec::new();
    let mut seen = HashSet::new();
    let mut x: Option<(usize, Vec<usize>)> = None;
    let mut y: Option<(usize, Vec<usize>)> = None;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let (directive, rest) = (fields[0], &fields[1..]);
        let Some(count) = n else {
            if directive != "n" {
                return Err(err(line, format!("expected `n <N>` first, found {directive:?}")));
            }
            let ids = parse_ids(line, rest)?;
            if ids.len() != 1 {
                return Err(err(line, "`n` takes exactly one value".into()));
            }
            if ids[0] > MAX_VERTICES {
                return Err(err(line, format!("n = {} exceeds {MAX_VERTICES}", ids[0])));
            }
            n = Some(ids[0]);
            continue;
        };
        match directive {
            "n" => return Err(err(line, "`n` given twice".into())),
            "a" => {
                let ids = parse_ids(line, rest)?;
                let &[u, v] = ids.as_slice() else {
                    return Err(err(line, "`a` takes exactly two vertex ids".into()));
                };
                if u >= count || v >= count {
                    return Err(err(line, format!("arc ({u}, {v}) out of range for n = {count}")));
                }
                if u == v {
                    return Err(err(line, format!("loop ({u}, {v})")));
                }
                if !seen.insert((u, v)) {
                    return Err(err(line, format!("duplicate arc ({u}, {v})")));
                }
                arcs.push((u, v));
            }
            "x" | "y" => {
                let slot = if directive == "x" { &mut x } else { &mut y };
                if slot.is_some() {
                    return Err(err(line, format!("`{directive}` given twice")));
                }
                let ids = parse_ids(line, rest)?;
                if let Some(&bad) = ids.iter().find(|&&v| v >= count) {
                    return Err(err(line, format!("vertex {bad} out of range for n = {count}")));
                }
                *slot = Some((line, ids));
            }
            other => return Err(err(line, format!("unknown directive {other:?}"))),
        }
    }

    let count = n.ok_or_else(|| err(text.lines().count().max(1), "missing `n <N>`".into()))?;
    let digraph = Digraph::new(count, &arcs).map_err(|e| err(0, e.to_string()))?;
    let spine = match (x, y) {
        (None, None) => None,
        (None, Some((line, _))) => return Err(err(line, "`y` given without `x`".into())),
        (Some((line, xs)), ys) => {
            let ys = match ys {
                Some((_, ys)) => ys,
                None => digraph.vertices().filter(|v| !xs.contains(v)).collect(),
            };
            if let Err(violations) = check_spine_partition(&digraph, &xs, &ys) {
                let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
                return Err(err(line, format!("invalid spine partition: {}", list.join(", "))));
            }
            Some(SpinePartition::new(Path::new(xs), ys))
        }
    };
    Ok(GraphFile { digraph, spine })
}

/// Inverse of [`parse_graph`].
pub fn render_graph(d: &Digraph, spine: Option<&SpinePartition>) -> String {
    let mut out = format!("n {}\n", d.n());
    for (u, v) in d.arcs() {
        writeln!(out, "a {u} {v}").unwrap();
    }
    if let Some(s) = spine {
        out.push('x');
        for v in s.x_order.vertices() {
            write!(out, " {v}").unwrap();
        }
        out.push_str("\ny");
        for v in &s.y_set {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn read_graph_file(path: &FsPath) -> Result<GraphFile, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

#[derive(Debug, Parser)]
#[command(name = "spine-linial", version, about = "Certify π_k ≤ α_k on spine digraphs and check it by brute force")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Pi,
    Alpha,
    Lambda,
    LambdaK,
    Chi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Spine,
    Split,
    Tournament,
    General,
    TransitiveAcyclic,
}

impl From<KindArg> for InstanceKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Spine => InstanceKind::Spine,
            KindArg::Split => InstanceKind::Split,
            KindArg::Tournament => InstanceKind::Tournament,
            KindArg::General => InstanceKind::General,
            KindArg::TransitiveAcyclic => InstanceKind::TransitiveAcyclic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Constructive,
    Linial,
    Dual,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::Constructive => Check::Constructive,
            CheckArg::Linial => Check::Linial,
            CheckArg::Dual => Check::Dual,
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub max_x: Option<usize>,
    #[arg(long)]
    pub max_y: Option<usize>,
    /// Vertex count (upper bound when --min-n is given).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub min_n: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
}

impl GenArgs {
    fn params(&self) -> Result<GenParams, String> {
        let kind = InstanceKind::from(self.kind);
        let sizes = if kind.has_spine() {
            match (self.max_x, self.max_y) {
                (Some(max_x), Some(max_y)) => Sizes::Spine { max_x, max_y },
                _ => return Err(format!("{kind} instances need --max-x and --max-y")),
            }
        } else {
            match self.n {
                Some(n) => Sizes::Order { min_n: self.min_n.unwrap_or(n), max_n: n },
                None => return Err(format!("{kind} instances need --n")),
            }
        };
        let params = GenParams { kind, sizes, density: self.density, seed: self.seed };
        params.validate().map_err(|e| e.to_string())?;
        Ok(params)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a certificate for π_k ≤ α_k.
    Certify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-check a certificate against a graph file.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        cert: PathBuf,
    },
    /// Print an exact value computed by brute force.
    Oracle {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, default_value_t = 1)]
        k: usize,
        #[arg(short, long, value_enum)]
        quantity: Quantity,
        /// Vertex cap for the exponential searches.
        #[arg(long, default_value_t = OracleBudget::default().max_n)]
        max_n: usize,
    },
    /// Find a spine (or split) partition.
    Recognize {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        split_only: bool,
    },
    /// Generate instances and cross-check constructions and oracles.
    Fuzz {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Densities cycled by instance index (overrides --density).
        #[arg(long, value_delimiter = ',')]
        densities: Vec<f64>,
        #[arg(long = "check", value_enum, default_values_t = [CheckArg::Constructive])]
        checks: Vec<CheckArg>,
        /// Test a single k instead of every k in 1..=n.
        #[arg(short)]
        k: Option<usize>,
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Write one generated instance as a graph file.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn write_or_print(path: Option<&PathBuf>, text: &str, out: &mut dyn Write) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    match command {
        Command::Certify { input, k, output } => {
            let file = read_graph_file(&input)?;
            let (spine, source) = match file.spine {
                Some(s) => (s, "given"),
                None => match find_spine_partition(&file.digraph).map_err(|e| e.to_string())? {
                    Some(s) => (s, "found"),
                    None => return Err("no spine partition exists".into()),
                },
            };
            let mut cert = certify(&file.digraph, &spine, k).map_err(|e| e.to_string())?;
            cert.spine_source = Some(source.to_string());
            let json = cert.to_json() + "\n";
            write_or_print(output.as_ref(), &json, out)?;
            if output.is_some() {
                writeln!(out, "{}: k_norm {} <= weight {}", cert.case_tag, cert.k_norm, cert.weight).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { input, cert } => {
            let file = read_graph_file(&input)?;
            let text = fs::read_to_string(&cert).map_err(|e| format!("{}: {e}", cert.display()))?;
            let certificate = Certificate::from_json(&text).map_err(|e| format!("{}: {e}", cert.display()))?;
            match verify_certificate(&file.digraph, &certificate) {
                Ok(()) => {
                    writeln!(out, "ok").map_err(io)?;
                    Ok(EXIT_OK)
                }
                Err(violations) => {
                    for v in violations {
                        writeln!(out, "violation: {v}").map_err(io)?;
                    }
                    Ok(EXIT_VIOLATION)
                }
            }
        }
        Command::Oracle { input, k, quantity, max_n } => {
            let d = read_graph_file(&input)?.digraph;
            let budget = OracleBudget { max_n, max_n_lambda: max_n.max(12), ..OracleBudget::default() };
            let value = match quantity {
                Quantity::Pi => pi_k_oracle_with(&d, k, &budget),
                Quantity::Alpha => alpha_k_oracle_with(&d, k, &budget),
                Quantity::Lambda => lambda_oracle_with(&d, &budget),
                Quantity::LambdaK => lambda_k_oracle_with(&d, k, &budget),
                Quantity::Chi => chi_k_oracle_with(&d, k, &budget),
            }
            .map_err(|e| e.to_string())?;
            writeln!(out, "{value}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Recognize { input, split_only } => {
            let d = read_graph_file(&input)?.digraph;
            let spine = if split_only {
                find_split_partition(&d)
            } else {
                find_spine_partition(&d).map_err(|e| e.to_string())?
            };
            match spine {
                Some(s) => {
                    // the n/a lines are dropped: only the partition is printed
                    let rendered = render_graph(&Digraph::edgeless(0).expect("empty"), Some(&s));
                    out.write_all(rendered.trim_start_matches("n 0\n").as_bytes()).map_err(io)?;
                }
                None => writeln!(out, "none").map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Fuzz { gen, count, densities, checks, k, log } => {
            let params = gen.params()?;
            let mut config = FuzzConfig::new(params, count, checks.into_iter().map(Check::from).collect());
            config.densities = densities;
            if let Some(k) = k {
                if k == 0 {
                    return Err("k must be at least 1".into());
                }
                config.k_policy = KPolicy::Fixed(k);
            }
            let report = fuzz_run(&config).map_err(|e| e.to_string())?;
            if let Some(path) = &log {
                let mut file = fs::File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
                report.write_jsonl(&config, &mut file).map_err(io)?;
            }
            let cases: Vec<String> = report.case_counts.iter().map(|(c, n)| format!("{c}={n}")).collect();
            writeln!(
                out,
                "instances {} checks {} cases [{}] violations {}",
                report.instances_run,
                report.observations.len(),
                cases.join(" "),
                report.violations.len()
            )
            .map_err(io)?;
            for v in &report.violations {
                writeln!(out, "violation seed={} kind={} k={}: {}", v.seed, v.kind, v.k, v.check).map_err(io)?;
            }
            Ok(if report.is_clean() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Gen { gen, output } => {
            let params = gen.params()?;
            let instance = gen_instance(&params).map_err(|e| e.to_string())?;
            let text = render_graph(&instance.digraph, instance.spine.as_ref());
            write_or_print(output.as_ref(), &text, out)?;
            Ok(EXIT_OK)
        }
    }
}
