//! The `mixdim` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 structural precondition
//! not met (not a cactus, search too large, disconnected input, bound not
//! applicable), 3 internal invariant breach.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use mixdim_core::{
    bound_report, brute_force_mdim, build_min_generator, classify, extract_cycles,
    is_mixed_generator, mdim_exact, Graph, OracleLimits,
};
use serde_json::Value;

use crate::format::{parse_graph_file, FormatError};
use crate::lab::{run_campaign, CampaignConfig, EdgeStrategy, LabError, DEFAULT_DENSITY};
use crate::report;

#[derive(Debug, Parser)]
#[command(
    name = "mixdim",
    version,
    about = "Mixed metric dimension of cactus graphs"
)]
struct Cli {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// Edge-list file: `n m` header, then one `u v` line per edge.
    file: PathBuf,
}

#[derive(Debug, Args)]
struct LimitArg {
    /// Largest number of non-leaf vertices the exhaustive search accepts.
    #[arg(long = "max-n", default_value_t = OracleLimits::default().max_candidates)]
    max_n: usize,
}

impl LimitArg {
    fn limits(&self) -> OracleLimits {
        OracleLimits {
            max_candidates: self.max_n,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the graph class and its cycles.
    Classify(GraphArg),
    /// Exact mixed metric dimension from the cycle structure.
    Dim {
        #[command(flatten)]
        graph: GraphArg,
        /// Use exhaustive search instead of the formula.
        #[arg(long)]
        force_oracle: bool,
        /// Also run exhaustive search and fail if it disagrees.
        #[arg(long, conflicts_with = "force_oracle")]
        cross_check: bool,
        #[command(flatten)]
        limit: LimitArg,
    },
    /// Build a minimum mixed metric generator and verify it.
    Generator(GraphArg),
    /// Check whether a vertex set is a mixed metric generator.
    Verify {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Mixed metric dimension by exhaustive search.
    Oracle {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        limit: LimitArg,
    },
    /// The upper bound L1 + 2c and whether it is attained.
    Bounds(GraphArg),
    /// Random campaign testing mdim <= L1 + 2c on generated graphs.
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Args)]
struct ConjectureArgs {
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSONL output file; an existing file is resumed.
    #[arg(long, default_value = "conjecture.jsonl")]
    out: PathBuf,
    /// Inclusive vertex-count range, `a..b`.
    #[arg(long, default_value = "4..10", value_parser = parse_range)]
    n_range: (usize, usize),
    /// Edge density in [0, 1].
    #[arg(long, conflicts_with_all = ["m", "cactus_cycles"])]
    density: Option<f64>,
    /// Fixed edge count.
    #[arg(long, conflicts_with = "cactus_cycles")]
    m: Option<usize>,
    /// Sample cacti with this many cycles instead of general graphs.
    #[arg(long)]
    cactus_cycles: Option<usize>,
    #[command(flatten)]
    limit: LimitArg,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected `a..b`, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Structural(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Structural(_) => 2,
            Failure::Invariant(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Structural(m) | Failure::Invariant(m) => m,
        }
    }
}

impl From<mixdim_core::Error> for Failure {
    fn from(e: mixdim_core::Error) -> Self {
        use mixdim_core::Error as E;
        match e {
            E::NotACactus => Failure::Structural(format!(
                "NotACactus: {e}; use `mixdim oracle` for general graphs"
            )),
            E::TooLarge { .. } => Failure::Structural(format!("TooLarge: {e}")),
            E::Disconnected { .. } => Failure::Structural(format!("Disconnected: {e}")),
            E::CycleExcluded => Failure::Structural(format!("CycleExcluded: {e}")),
            E::Infeasible => Failure::Invariant(format!("Infeasible: {e}")),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Graph(inner) => inner.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<LabError> for Failure {
    fn from(e: LabError) -> Self {
        match e {
            LabError::Core(inner) => inner.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Output<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl Output<'_> {
    fn emit(&mut self, value: Value, text: impl FnOnce() -> String) -> std::io::Result<()> {
        if self.json {
            writeln!(self.out, "{value}")
        } else {
            write!(self.out, "{}", text())
        }
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    Ok(parse_graph_file(path)?)
}

fn io_fail(e: std::io::Error) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let mut o = Output {
        out,
        json: cli.json,
    };
    match cli.command {
        Command::Classify(GraphArg { file }) => {
            let g = load(&file)?;
            let class = classify(&g);
            let cycles = if class.tag.is_cactus_family() {
                extract_cycles(&g)?
            } else {
                Vec::new()
            };
            o.emit(report::class_json(&class, &cycles), || {
                let mut s = format!("class: {} ({} cycles)\n", class.tag, class.cycle_count);
                for (i, c) in cycles.iter().enumerate() {
                    s += &format!("cycle {i}: length {}, rt = {}\n", c.len(), c.rt());
                }
                s
            })
        }
        Command::Dim {
            graph,
            force_oracle,
            cross_check,
            limit,
        } => {
            let g = load(&graph.file)?;
            if force_oracle {
                let b = brute_force_mdim(&g, limit.limits())?;
                let mut v = report::oracle_json(&b);
                v["source"] = "oracle".into();
                o.emit(v, || format!("mdim = {} (exhaustive search)\n", b.value))
            } else {
                let r = mdim_exact(&g)?;
                if cross_check {
                    let b = brute_force_mdim(&g, limit.limits())?;
                    if b.value != r.total {
                        return Err(Failure::Invariant(format!(
                            "formula gives {} but exhaustive search gives {}",
                            r.total, b.value
                        )));
                    }
                }
                let cycles = extract_cycles(&g)?;
                o.emit(report::mdim_json(&r), || report::mdim_text(&r, &cycles))
            }
        }
        Command::Generator(GraphArg { file }) => {
            let g = load(&file)?;
            let cert = build_min_generator(&g)?;
            if !cert.verified {
                return Err(Failure::Invariant(format!(
                    "constructed set {:?} is not a mixed metric generator",
                    cert.set
                )));
            }
            o.emit(report::certificate_json(&cert), || {
                report::certificate_text(&cert)
            })
        }
        Command::Verify { graph, set } => {
            let g = load(&graph.file)?;
            let v = is_mixed_generator(&g, &set)?;
            o.emit(report::verdict_json(&v), || match v.failing_pair {
                None => "true\n".to_string(),
                Some((a, b)) => format!("false\nfailing pair: {a} and {b}\n"),
            })
        }
        Command::Oracle { graph, limit } => {
            let g = load(&graph.file)?;
            let b = brute_force_mdim(&g, limit.limits())?;
            o.emit(report::oracle_json(&b), || {
                let w: Vec<String> = b.witness.iter().map(ToString::to_string).collect();
                format!("mdim = {}\nwitness: [{}]\n", b.value, w.join(" "))
            })
        }
        Command::Bounds(GraphArg { file }) => {
            let g = load(&file)?;
            let b = bound_report(&g)?;
            let mdim = mdim_exact(&g)?.total;
            o.emit(report::bound_json(&b, mdim), || {
                format!(
                    "mdim = {mdim} <= L1 + 2c = {}, attained: {}\n",
                    b.bound, b.attained
                )
            })
        }
        Command::Conjecture(args) => {
            let strategy = match (args.cactus_cycles, args.m, args.density) {
                (Some(cycles), _, _) => EdgeStrategy::Cactus {
                    cycles,
                    lengths: (3, 6),
                },
                (None, Some(m), _) => EdgeStrategy::Fixed(m),
                (None, None, d) => EdgeStrategy::Density(d.unwrap_or(DEFAULT_DENSITY)),
            };
            let config = CampaignConfig {
                count: args.count,
                n_range: args.n_range,
                strategy,
                seed: args.seed,
                output: args.out,
                limits: args.limit.limits(),
            };
            let summary = run_campaign(&config)?;
            for r in &summary.counterexamples {
                let _ = writeln!(
                    err,
                    "COUNTEREXAMPLE to mdim <= L1 + 2c: {}",
                    r.to_json_line()
                );
            }
            writeln!(o.out, "{}", summary.to_json())
        }
    }
    .map_err(io_fail)
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
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}
