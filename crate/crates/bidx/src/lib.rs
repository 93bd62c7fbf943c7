//! Command-line front end for the BID index machinery in `bidx-core`:
//! graph IO, report persistence, and parallel theorem verification.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

pub mod formats;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use bidx_core::conditions::check_conditions;
use bidx_core::theorems::{self, TheoremReport};
use bidx_core::{
    evaluate_bid, extremal_search, graph6, make_family, Direction, Enumerator, FamilyId,
    FamilyTag, Graph, IndexSpec, TheoremId, DEFAULT_BOUND,
};

#[derive(Parser)]
#[command(name = "bidx", version, about = "Bond incident degree index toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an index on one or more graphs.
    Compute(ComputeArgs),
    /// Exhaustive extremal search over connected (n, m)-graphs.
    Search(SearchArgs),
    /// Verify an extremal characterization or the shift hypotheses.
    Verify(VerifyArgs),
    /// Emit the named extremal families as graph6.
    Families(FamiliesArgs),
    /// Stream enumerated graphs as graph6.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexChoice {
    Chi,
    Pl,
    Sei,
    M1,
    Platt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionChoice {
    Max,
    Min,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremChoice {
    Thm2,
    Thm4,
    Thm6,
    Lemma2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatChoice {
    Text,
    Json,
    Csv,
    Graph6,
}

#[derive(Args)]
struct IndexArgs {
    /// Index family.
    #[arg(long, value_enum)]
    index: IndexChoice,
    /// Exponent for chi / pl.
    #[arg(long)]
    alpha: Option<f64>,
    /// Base for sei (a > 0, a != 1).
    #[arg(long)]
    a: Option<f64>,
}

impl IndexArgs {
    fn spec(&self) -> Result<IndexSpec> {
        let spec = match self.index {
            IndexChoice::Chi => {
                IndexSpec::chi(self.alpha.ok_or_else(|| anyhow!("chi requires --alpha"))?)
            }
            IndexChoice::Pl => {
                IndexSpec::pl(self.alpha.ok_or_else(|| anyhow!("pl requires --alpha"))?)
            }
            IndexChoice::Sei => {
                IndexSpec::sei(self.a.ok_or_else(|| anyhow!("sei requires --a"))?)
            }
            IndexChoice::M1 => Ok(IndexSpec::m1()),
            IndexChoice::Platt => Ok(IndexSpec::platt()),
        };
        spec.map_err(|e| anyhow!("{e}"))
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output path; stdout when omitted.
    #[arg(long = "out")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatChoice,
}

impl OutputArgs {
    fn write(&self, content: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, content)
                .with_context(|| format!("writing {}", path.display())),
            None => {
                std::io::stdout()
                    .write_all(content.as_bytes())
                    .context("writing stdout")
            }
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    index: IndexArgs,
    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// Input file: graph6 lines or the "n=<int>" edge-list format.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    index: IndexArgs,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value = "max")]
    direction: DirectionChoice,
    /// Worker threads (0 = auto); env BIDX_WORKERS as fallback.
    #[arg(long)]
    workers: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: TheoremChoice,
    #[arg(long = "n-min", default_value_t = 4)]
    n_min: usize,
    #[arg(long = "n-max", default_value_t = 8)]
    n_max: usize,
    /// Parameter grid, comma separated; theorem-specific default.
    #[arg(long, value_delimiter = ',')]
    alphas: Option<Vec<f64>>,
    /// Grid bound for the hypothesis certificates (lemma2 only).
    #[arg(long = "grid-bound", default_value_t = 50)]
    grid_bound: usize,
    /// Worker threads (0 = auto); env BIDX_WORKERS as fallback.
    #[arg(long)]
    workers: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FamiliesArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Edge count for connected enumeration.
    #[arg(long, conflicts_with = "k")]
    m: Option<usize>,
    /// Remainder edge count for dominating-vertex enumeration.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

/// Runs the CLI. Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute(args) => compute(args),
        Command::Search(args) => search(args),
        Command::Verify(args) => verify(args),
        Command::Families(args) => families(args),
        Command::Enumerate(args) => enumerate(args),
    }
}

fn worker_count(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("BIDX_WORKERS")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(0)
}

fn thread_pool(flag: Option<usize>) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count(flag))
        .build()
        .context("building worker pool")
}

fn compute(args: ComputeArgs) -> Result<i32> {
    let spec = args.index.spec()?;
    let graphs: Vec<Graph> = match (&args.graph6, &args.input) {
        (Some(text), None) => {
            vec![graph6::decode(text.trim()).map_err(|e| anyhow!("{e}"))?]
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            formats::parse_graphs(&text)?
        }
        _ => bail!("compute needs exactly one of --graph6 or --in"),
    };
    let mut values = Vec::with_capacity(graphs.len());
    for g in &graphs {
        values.push(evaluate_bid(&spec, g).map_err(|e| anyhow!("{e}"))?);
    }
    let content = match args.output.format {
        FormatChoice::Text => {
            let mut out = String::new();
            for v in &values {
                out.push_str(&report::format_value(v));
                out.push('\n');
            }
            out
        }
        FormatChoice::Json => serde_json::to_string_pretty(&values)? + "\n",
        _ => bail!("compute supports --format text or json"),
    };
    args.output.write(&content)?;
    Ok(0)
}

fn search(args: SearchArgs) -> Result<i32> {
    let spec = args.index.spec()?;
    let direction = match args.direction {
        DirectionChoice::Max => Direction::Max,
        DirectionChoice::Min => Direction::Min,
    };
    // The enumeration cache is built once; evaluation of the classes is
    // cheap, so the search itself stays sequential and deterministic.
    let _pool = worker_count(args.workers); // sizing only matters for verify
    let mut en = Enumerator::new(args.n);
    let result = extremal_search(&mut en, args.n, args.m, &spec, direction)
        .map_err(|e| anyhow!("{e}"))?;
    let content = match args.output.format {
        FormatChoice::Text => report::extremal_text(&result),
        FormatChoice::Json => report::extremal_json(&result)?,
        FormatChoice::Csv => report::extremal_csv(std::slice::from_ref(&result)),
        FormatChoice::Graph6 => report::extremal_graph6(&result),
    };
    args.output.write(&content)?;
    Ok(0)
}

fn theorem_params(choice: TheoremChoice, alphas: &Option<Vec<f64>>) -> Vec<f64> {
    if let Some(list) = alphas {
        return list.clone();
    }
    match choice {
        TheoremChoice::Thm2 | TheoremChoice::Thm4 => vec![1.0, 1.5, 2.0, 3.0],
        TheoremChoice::Thm6 => vec![1.5, 2.0],
        TheoremChoice::Lemma2 => vec![2.0],
    }
}

/// Parallel version of the theorem run: the enumeration cache is warmed
/// sequentially, then the independent (n, param) cells run on the pool.
/// Cell order is fixed up front, so output is identical for any pool size.
fn verify_theorem_parallel(
    id: TheoremId,
    n_range: (usize, usize),
    params: &[f64],
    pool: &rayon::ThreadPool,
) -> Result<TheoremReport> {
    use rayon::prelude::*;

    let (n_lo, n_hi) = n_range;
    let mut en = Enumerator::new(n_hi.min(DEFAULT_BOUND).max(n_lo));
    for (n, m) in theorems::required_enumerations(n_lo, n_hi, en.bound()) {
        en.connected(n, m).map_err(|e| anyhow!("{e}"))?;
    }
    let grid: Vec<(usize, f64)> = (n_lo..=n_hi)
        .flat_map(|n| params.iter().map(move |&p| (n, p)))
        .collect();
    let cells = pool.install(|| {
        grid.par_iter()
            .map(|&(n, param)| theorems::run_cell(&en, id, n, param))
            .collect::<Result<Vec<_>, _>>()
    });
    let cells = cells.map_err(|e| anyhow!("{e}"))?;
    let global = theorems::global_checks(id);
    let overall = cells.iter().all(|c| c.pass)
        && global
            .iter()
            .all(|c| c.status != theorems::CheckStatus::Fail);
    let mut notes = Vec::new();
    if id == TheoremId::Thm4 {
        notes.push(String::from(
            "tetracyclic claim verified for the general Platt index; the original \
             closing sentence names the sum-connectivity symbol and is treated as a typo",
        ));
    }
    Ok(TheoremReport {
        theorem: id,
        cells,
        global,
        notes,
        overall,
    })
}

fn verify(args: VerifyArgs) -> Result<i32> {
    if args.n_min < 2 || args.n_min > args.n_max {
        bail!("need 2 <= n-min <= n-max");
    }
    let params = theorem_params(args.theorem, &args.alphas);
    if params.is_empty() {
        bail!("empty parameter grid");
    }
    let pool = thread_pool(args.workers)?;
    let id = match args.theorem {
        TheoremChoice::Thm2 => TheoremId::Thm2,
        TheoremChoice::Thm4 => TheoremId::Thm4,
        TheoremChoice::Thm6 => TheoremId::Thm6,
        TheoremChoice::Lemma2 => TheoremId::Lemma2Conclusion,
    };

    // For lemma2, certify the shift hypotheses alongside the conclusion.
    let mut condition_text = String::new();
    let mut conditions_ok = true;
    if id == TheoremId::Lemma2Conclusion {
        for &param in &params {
            let mut specs = Vec::new();
            if let Ok(s) = IndexSpec::chi(param) {
                specs.push(s);
            }
            if param > 0.0 {
                if let Ok(s) = IndexSpec::pl(param) {
                    specs.push(s);
                }
            }
            if let Ok(s) = IndexSpec::sei(param) {
                specs.push(s);
            }
            for spec in specs {
                let r = check_conditions(&spec, Direction::Max, args.grid_bound)
                    .map_err(|e| anyhow!("{e}"))?;
                conditions_ok &= r.passed();
                condition_text.push_str(&report::conditions_text(&r));
            }
        }
    }

    let report = verify_theorem_parallel(id, (args.n_min, args.n_max), &params, &pool)?;
    let content = match args.output.format {
        FormatChoice::Text => format!("{condition_text}{}", report::theorem_text(&report)),
        FormatChoice::Json => report::theorem_json(&report)?,
        FormatChoice::Csv => report::theorem_csv(&report),
        FormatChoice::Graph6 => bail!("verify supports --format text, json or csv"),
    };
    args.output.write(&content)?;
    Ok(if report.overall && conditions_ok { 0 } else { 1 })
}

fn families(args: FamiliesArgs) -> Result<i32> {
    let mut rows: Vec<(String, String)> = Vec::new();
    for tag in FamilyTag::ALL {
        if tag.min_n() > args.n {
            continue;
        }
        let g = make_family(FamilyId::new(tag, args.n)).map_err(|e| anyhow!("{e}"))?;
        let name = serde_json::to_value(tag)?
            .as_str()
            .expect("tag serializes to a string")
            .to_string();
        rows.push((name, graph6::encode(&g)));
    }
    let content = match args.output.format {
        FormatChoice::Text => rows
            .iter()
            .map(|(name, g6)| format!("{name}\t{g6}\n"))
            .collect(),
        FormatChoice::Graph6 => rows
            .iter()
            .map(|(_, g6)| format!("{g6}\n"))
            .collect(),
        FormatChoice::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(name, g6)| {
                    serde_json::json!({ "tag": name, "n": args.n, "graph6": g6 })
                })
                .collect();
            serde_json::to_string_pretty(&items)? + "\n"
        }
        FormatChoice::Csv => bail!("families supports --format text, json or graph6"),
    };
    args.output.write(&content)?;
    Ok(0)
}

fn enumerate(args: EnumerateArgs) -> Result<i32> {
    let graphs: Vec<Graph> = match (args.m, args.k) {
        (Some(m), None) => {
            let mut en = Enumerator::new(args.n);
            let classes = en.connected(args.n, m).map_err(|e| anyhow!("{e}"))?;
            if classes.is_empty() {
                bail!("no connected graph with {} vertices and {m} edges", args.n);
            }
            classes.to_vec()
        }
        (None, Some(k)) => {
            bidx_core::enumerate_dominating(args.n, k).map_err(|e| anyhow!("{e}"))?
        }
        _ => bail!("enumerate needs exactly one of --m or --k"),
    };
    let content = match args.output.format {
        FormatChoice::Text | FormatChoice::Graph6 => formats::write_graph6_lines(&graphs),
        FormatChoice::Json => {
            let lines: Vec<String> = graphs.iter().map(graph6::encode).collect();
            serde_json::to_string_pretty(&lines)? + "\n"
        }
        FormatChoice::Csv => bail!("enumerate supports --format text, json or graph6"),
    };
    args.output.write(&content)?;
    Ok(0)
}
