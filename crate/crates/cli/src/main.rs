mod input;
mod render;

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use compedge::resolution::{betti_table_p, reg_pd_depth};
use compedge::verify::{
    analyze_graph, exit_code, markdown_summary, read_jsonl, sweep, write_jsonl, AnalysisConfig,
    Check, OracleCache, SweepConfig,
};
use compedge::Error;

use input::{GraphInput, IdealInput};

#[derive(Parser)]
#[command(name = "compedge", version, about = "Complementary edge ideals: closed forms against brute-force oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed forms and oracles for the powers of one I_c(G).
    Analyze(AnalyzeArgs),
    /// Run the selected checks over every labeled graph on a census.
    Sweep(SweepArgs),
    /// Betti tables, reg, pd and depth of I^k.
    Betti(BettiArgs),
    /// Print the summary of stored JSON-lines reports and exit with their code.
    Replay {
        path: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Markdown,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 3)]
    kmax: u32,
    /// Comma-separated primes; the first drives reg and depth.
    #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3])]
    primes: Vec<u32>,
    /// `all` or a comma-separated list of checks.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Per-graph wall-clock budget in milliseconds.
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Oracle cache directory (defaults to $COMPEDGE_CACHE_DIR).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

impl Common {
    fn analysis(&self) -> anyhow::Result<AnalysisConfig> {
        let cfg = AnalysisConfig {
            k_max: self.kmax,
            checks: Check::parse_selection(&self.checks)?,
            primes: self.primes.clone(),
            budget_ms: self.budget_ms,
            cache: match &self.cache_dir {
                Some(d) => OracleCache::at(d),
                None => OracleCache::from_env(),
            },
            ..Default::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    nmax: usize,
    /// Smallest vertex count (defaults to --nmax).
    #[arg(long)]
    nmin: Option<usize>,
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    workers: Option<usize>,
    /// JSON-lines report, one record per graph.
    #[arg(long)]
    jsonl: Option<PathBuf>,
    /// Markdown summary; printed to stdout when omitted.
    #[arg(long)]
    markdown: Option<PathBuf>,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[command(flatten)]
    ideal: IdealInput,
    /// Powers to compute.
    #[arg(long, value_delimiter = ',', default_values_t = [1u32])]
    k: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_values_t = [2u32])]
    primes: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Sweep(s) => run_sweep(s),
        Command::Betti(b) => betti(b),
        Command::Replay { path } => replay(path),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_code(&e))
        }
    }
}

fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::LimitExceeded { .. } | Error::BudgetExceeded(_)) => 3,
        _ => 2,
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn analyze(a: AnalyzeArgs) -> anyhow::Result<i32> {
    let g = a.graph.read()?.context("analyze needs a graph")?;
    if g.vertex_count() < 3 || g.edge_count() == 0 {
        bail!(Error::Precondition("analyze needs at least 3 vertices and an edge".into()));
    }
    let report = analyze_graph(&g, &a.common.analysis()?);
    let text = match a.format {
        Format::Text => render::analysis_text(&report)?,
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Markdown => markdown_summary(std::slice::from_ref(&report)),
    };
    emit(&text, a.output.as_ref())?;
    Ok(exit_code(std::slice::from_ref(&report)))
}

fn run_sweep(s: SweepArgs) -> anyhow::Result<i32> {
    let cfg = SweepConfig {
        n_min: s.nmin,
        n_max: s.nmax,
        workers: s.workers.unwrap_or_else(rayon_threads),
        analysis: s.common.analysis()?,
    };
    let reports = sweep(&cfg)?;
    if let Some(p) = &s.jsonl {
        let f = fs::File::create(p).with_context(|| format!("creating {}", p.display()))?;
        let mut w = io::BufWriter::new(f);
        write_jsonl(&reports, &mut w)?;
        w.flush()?;
    }
    emit(&markdown_summary(&reports), s.markdown.as_ref())?;
    Ok(exit_code(&reports))
}

fn rayon_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn betti(b: BettiArgs) -> anyhow::Result<i32> {
    let ideal = match (b.graph.read()?, b.ideal.read()?) {
        (Some(g), None) => compedge::MonomialIdeal::complementary_edge_ideal(&g),
        (None, Some(i)) => i,
        (None, None) => bail!(Error::Parse("betti needs a graph or an ideal".into())),
        (Some(_), Some(_)) => bail!(Error::Parse("give either a graph or an ideal, not both".into())),
    };
    let mut rows = Vec::new();
    for &k in &b.k {
        if k == 0 {
            bail!(Error::Precondition("k must be positive".into()));
        }
        let power = ideal.pow(k)?;
        for &p in &b.primes {
            let table = betti_table_p(&power, p)?;
            let inv = reg_pd_depth(&table, &power)?;
            rows.push(render::BettiRow {
                k,
                prime: p,
                ideal: power.to_string(),
                reg: inv.reg,
                pd: inv.pd,
                depth: inv.depth,
                table,
            });
        }
    }
    let text = match b.format {
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
        Format::Text | Format::Markdown => render::betti_text(&rows),
    };
    emit(&text, None)?;
    Ok(0)
}

fn replay(path: PathBuf) -> anyhow::Result<i32> {
    let f = fs::File::open(&path).with_context(|| format!("opening {}", path.display()))?;
    let reports = read_jsonl(BufReader::new(f))?;
    emit(&markdown_summary(&reports), None)?;
    Ok(exit_code(&reports))
}
