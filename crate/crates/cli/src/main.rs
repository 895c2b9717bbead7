//! `gfree`: exact G-free colouring numbers, bounds, critical subgraphs and
//! Nordhaus–Gaddum audits from the command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 a checked inequality or
//! expected value failed, 3 time limit exceeded.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gfree::coloring::bound_report_for;
use gfree::critical::{extract_critical_within, subgraph_with_chi};
use gfree::ng::{evaluate_witnesses, ng_sum_within, sharp_examples, AuditOptions};
use gfree::{
    audit_certificate, chi_g_exact_within, decide_k_colorable_within, lovasz_decomposition,
    verify_corpus, DegreeBounds, Graph, Limits, PatternSpec,
};

use input::PatternArg;
use report::{Format, Printer};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] gfree::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(gfree::Error::Timeout) => 3,
            CliError::Library(gfree::Error::WitnessMismatch { .. }) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gfree", version, about = "Vertex partitions avoiding a forbidden subgraph")]
struct Cli {
    /// Output format; JSON prints one object per line.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    /// Worker threads for corpus audits.
    #[arg(long, env = "GFREE_JOBS", global = true)]
    jobs: Option<usize>,
    /// Seconds allowed per graph (per graph/pattern pair in `verify`).
    #[arg(long, global = true, value_parser = parse_time_limit)]
    time_limit: Option<Duration>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct HostArgs {
    /// Graph descriptor such as `K5`, `C5`, `K3+3K1`, `coC7`, `g6:DQc`.
    #[arg(long, conflicts_with = "input")]
    graph: Option<String>,
    /// File with graph6 lines or one DIMACS graph.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PatternArgs {
    /// Forbidden pattern: `K<n>`, `C<n>`, `P<n>`, `K<a>,<b>`, `cycles`, `self`, `g6:<s>`, ... Repeatable.
    #[arg(long = "pattern", required = true)]
    patterns: Vec<String>,
    /// Forbid induced copies instead of subgraph copies.
    #[arg(long)]
    induced: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact χ_G with an optimal colouring and every applicable upper bound.
    Chi {
        #[command(flatten)]
        host: HostArgs,
        #[command(flatten)]
        pattern: PatternArgs,
        /// Only decide whether `k` classes suffice.
        #[arg(long)]
        k: Option<usize>,
    },
    /// χ_G(H) + χ_G(H̄) against the applicable bound.
    Ng {
        #[command(flatten)]
        host: HostArgs,
        #[command(flatten)]
        pattern: PatternArgs,
    },
    /// A G-free critical subgraph with its certificate.
    Critical {
        #[command(flatten)]
        host: HostArgs,
        #[command(flatten)]
        pattern: PatternArgs,
        /// Target χ_G of the critical subgraph (default: χ_G of the host).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Audit every inequality over a corpus.
    Verify {
        /// File with graph6 lines (e.g. from nauty's geng) or one DIMACS graph.
        #[arg(long, conflicts_with = "enumerate")]
        input: Option<PathBuf>,
        /// Use all graphs with at most this many vertices (up to 8).
        #[arg(long)]
        enumerate: Option<usize>,
        #[command(flatten)]
        pattern: PatternArgs,
        /// Include every per-pair record in the output.
        #[arg(long)]
        records: bool,
    },
    /// Reproduce the known sharp examples.
    Witness,
    /// Partition vertices into classes with capped inner degree.
    Decompose {
        #[command(flatten)]
        host: HostArgs,
        /// Non-increasing caps, comma separated, e.g. `2,1,0`.
        #[arg(long, value_delimiter = ',', required = true)]
        caps: Vec<usize>,
    },
}

fn parse_time_limit(text: &str) -> Result<Duration, String> {
    let secs: f64 = text.parse().map_err(|e| format!("{e}"))?;
    if secs.is_finite() && secs > 0.0 {
        Ok(Duration::from_secs_f64(secs))
    } else {
        Err("time limit must be a positive number of seconds".into())
    }
}

struct Context {
    printer: Printer,
    time_limit: Option<Duration>,
}

impl Context {
    fn limits(&self) -> Limits {
        self.time_limit.map_or_else(Limits::none, Limits::timeout)
    }
}

fn pairs(host: &HostArgs, pattern: &PatternArgs) -> Result<Vec<(Graph, PatternSpec)>, CliError> {
    let graphs = input::host_graphs(host.graph.as_deref(), host.input.as_deref())?;
    let args: Vec<PatternArg> =
        pattern.patterns.iter().map(|p| PatternArg::parse(p, pattern.induced)).collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for g in &graphs {
        for a in &args {
            out.push((g.clone(), a.resolve(g, pattern.induced)?));
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    }
    let ctx = Context { printer: Printer::new(format), time_limit: cli.time_limit };
    let mut status = 0;
    match cli.command {
        Command::Chi { host, pattern, k } => {
            for (g, pat) in pairs(&host, &pattern)? {
                match k {
                    Some(k) => {
                        let coloring = decide_k_colorable_within(&g, &pat, k, &ctx.limits())?;
                        ctx.printer.decision(&g, &pat, k, coloring.as_ref());
                    }
                    None => {
                        let best = chi_g_exact_within(&g, &pat, &ctx.limits())?;
                        let bounds = bound_report_for(&g, &pat, best.value)?;
                        if bounds.failures().next().is_some() {
                            status = 2;
                        }
                        ctx.printer.chi(&g, &pat, &best, &bounds);
                    }
                }
            }
        }
        Command::Ng { host, pattern } => {
            for (g, pat) in pairs(&host, &pattern)? {
                let record = ng_sum_within(&g, &pat, &ctx.limits())?;
                if !record.holds() {
                    status = 2;
                }
                ctx.printer.ng(&record);
            }
        }
        Command::Critical { host, pattern, k } => {
            for (g, pat) in pairs(&host, &pattern)? {
                let (base, vertices) = match k {
                    Some(k) => {
                        let sub = subgraph_with_chi(&g, &pat, k)?;
                        (sub.graph().clone(), sub.vertices.clone())
                    }
                    None => (g.clone(), (0..g.n()).collect()),
                };
                let cert = extract_critical_within(&base, &pat, &ctx.limits())?;
                let audited = cert.is_consistent() && audit_certificate(&cert, &pat)?;
                if !audited || !cert.mindeg_check {
                    status = 2;
                }
                ctx.printer.critical(&g, &pat, &cert, &vertices, audited);
            }
        }
        Command::Verify { input, enumerate, pattern, records } => {
            if enumerate.is_some_and(|n| n > gfree::enumerate::MAX_ENUMERATION_ORDER) {
                return Err(CliError::Usage(format!(
                    "--enumerate is limited to {}; generate larger corpora with geng and pass --input",
                    gfree::enumerate::MAX_ENUMERATION_ORDER
                )));
            }
            if pattern.patterns.iter().any(|p| p.trim() == "self") {
                return Err(CliError::Usage("`self` is not available for verify".into()));
            }
            let corpus = input::audit_corpus(input.as_deref(), enumerate)?;
            let patterns: Vec<PatternSpec> = pattern
                .patterns
                .iter()
                .map(|p| match PatternArg::parse(p, pattern.induced)? {
                    PatternArg::Fixed(spec) => Ok(spec),
                    PatternArg::SelfPattern => unreachable!("rejected above"),
                })
                .collect::<Result<_, CliError>>()?;
            let opts = AuditOptions { threads: None, time_limit: ctx.time_limit, ..AuditOptions::default() };
            let report = verify_corpus(corpus, &patterns, &opts)?;
            status = if report.has_violations() {
                2
            } else if report.summary.timeouts > 0 {
                3
            } else {
                0
            };
            ctx.printer.audit(&report, records);
        }
        Command::Witness => {
            let outcomes = evaluate_witnesses(&sharp_examples())?;
            if outcomes.iter().any(|o| !o.reproduced) {
                status = 2;
            }
            ctx.printer.witnesses(&outcomes);
        }
        Command::Decompose { host, caps } => {
            let bounds = DegreeBounds::new(caps)?;
            for g in input::host_graphs(host.graph.as_deref(), host.input.as_deref())? {
                let partition = lovasz_decomposition(&g, &bounds)?;
                ctx.printer.decomposition(&g, &bounds, &partition);
            }
        }
    }
    Ok(status)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
