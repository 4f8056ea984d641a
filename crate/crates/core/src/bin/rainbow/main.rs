//! `rainbow`: command-line front end for rainbow-core.
//!
//! Exit codes: 0 success, 1 domain failure, 2 usage error. Machine-readable
//! output goes to stdout, diagnostics to stderr.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rainbow_core::experiments::{self, read_csv, run_sweep, CsvRow, SweepConfig};
use rainbow_core::rainbow::{brute_force_rc_k, is_rainbow_k_connected, k_disjoint_rainbow_exists, DEFAULT_EDGE_CAP};
use rainbow_core::thresholds::{self, RegimeParams};
use rainbow_core::tree::{self, GrowthPlan, LemmaOptions, Selection};
use rainbow_core::{random_coloring, sample_gnp, BipartiteGraph, EdgeColoring, Error, Vertex};

#[derive(Parser)]
#[command(name = "rainbow", version, about = "Rainbow k-connectivity of random bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample G(m, n, p) and write it in edge-list form.
    Gen(GenArgs),
    /// Color the edges of a graph uniformly at random.
    Color(ColorArgs),
    /// Check rainbow k-connectivity of a colored graph.
    Check(CheckArgs),
    /// Smallest palette making a small graph rainbow k-connected.
    RcExact(RcExactArgs),
    /// Grow a tree from a root and extract disjoint paths to a target.
    Grow(GrowArgs),
    /// Evaluate the threshold formulas.
    Threshold(ThresholdArgs),
    /// Run a Monte Carlo sweep from a config file.
    Sweep(SweepArgs),
    /// Locate where a swept rate crosses a level.
    Crossing(CrossingArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the graph here and print a JSON summary instead of the graph.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Palette size.
    #[arg(long)]
    colors: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Path length bound; unbounded when omitted.
    #[arg(long)]
    max_len: Option<usize>,
    /// Check one pair (and print a witness) instead of all pairs.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    pair: Option<Vec<Vertex>>,
}

#[derive(Args)]
struct RcExactArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long)]
    max_colors: u32,
    #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
    edge_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum SelectionArg {
    Random,
    Lex,
}

impl From<SelectionArg> for Selection {
    fn from(s: SelectionArg) -> Self {
        match s {
            SelectionArg::Random => Selection::SeededRandom,
            SelectionArg::Lex => Selection::Lexicographic,
        }
    }
}

#[derive(Args)]
struct GrowArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    root: Vertex,
    #[arg(long)]
    target: Vertex,
    /// Tree depth (ignored with --regime).
    #[arg(long, required_unless_present = "regime")]
    depth: Option<usize>,
    /// `s,t` children of even- and odd-level vertices.
    #[arg(long, value_parser = parse_pair)]
    branchings: Option<(usize, usize)>,
    /// Derive depth, branchings and root from the lemma construction for --d and --p.
    #[arg(long, requires_all = ["d", "p"])]
    regime: bool,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 1.0)]
    c0: f64,
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    /// Maximum number of paths to extract.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value_t = SelectionArg::Random)]
    selection: SelectionArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ThresholdArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    /// Also evaluate the diameter criterion and regime at this p.
    #[arg(long)]
    p: Option<f64>,
    /// Disjoint paths required; defaults to floor(c0 ln n).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    c0: f64,
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// Config file (key = value lines or JSON).
    #[arg(long)]
    config: PathBuf,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the JSON result here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Include every trial record in the JSON result.
    #[arg(long)]
    verbose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RateColumn {
    DiamRate,
    RainbowRate,
}

#[derive(Args)]
struct CrossingArgs {
    #[arg(long)]
    csv: PathBuf,
    #[arg(long, value_enum, default_value_t = RateColumn::DiamRate)]
    measure: RateColumn,
    #[arg(long, default_value_t = 0.5)]
    level: f64,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected s,t")?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

fn read_graph(path: &PathBuf) -> Result<BipartiteGraph, Error> {
    BipartiteGraph::read_text(BufReader::new(File::open(path)?))
}

fn print_json(value: &serde_json::Value) -> Result<(), Error> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn gen(a: GenArgs) -> Result<ExitCode, Error> {
    let g = sample_gnp(a.m, a.n, a.p, a.seed)?;
    match a.out {
        Some(path) => {
            g.write_text(BufWriter::new(File::create(&path)?))?;
            print_json(&json!({
                "m": a.m, "n": a.n, "p": a.p, "seed": a.seed,
                "edges": g.edge_count(), "path": path,
            }))?;
        }
        None => g.write_text(io::stdout().lock())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn color(a: ColorArgs) -> Result<ExitCode, Error> {
    let g = read_graph(&a.graph)?;
    let c = random_coloring(&g, a.colors, a.seed)?;
    match a.out {
        Some(path) => {
            c.write_text(&g, BufWriter::new(File::create(&path)?))?;
            print_json(&json!({ "colors": a.colors, "seed": a.seed, "edges": c.len(), "path": path }))?;
        }
        None => c.write_text(&g, io::stdout().lock())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn check(a: CheckArgs) -> Result<ExitCode, Error> {
    let g = read_graph(&a.graph)?;
    let c = EdgeColoring::read_text(&g, BufReader::new(File::open(&a.coloring)?), None)?;
    match a.pair.as_deref() {
        Some(&[u, v]) => {
            let witness = k_disjoint_rainbow_exists(&g, &c, u, v, a.k, a.max_len.unwrap_or(g.edge_count().max(1)))?;
            print_json(&json!({
                "u": u, "v": v, "k": a.k, "max_len": a.max_len,
                "exists": witness.is_some(), "witness": witness,
            }))?;
        }
        _ => print_json(&serde_json::to_value(is_rainbow_k_connected(&g, &c, a.k, a.max_len)?)?)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn rc_exact(a: RcExactArgs) -> Result<ExitCode, Error> {
    let g = read_graph(&a.graph)?;
    match brute_force_rc_k(&g, a.k, a.max_colors, a.edge_cap)? {
        Some(w) => {
            print_json(&json!({
                "k": a.k, "rc": w.num_colors,
                "coloring": c_lines(&g, &w.coloring)?,
            }))?;
            Ok(ExitCode::SUCCESS)
        }
        None => {
            print_json(&json!({ "k": a.k, "rc": null, "max_colors": a.max_colors }))?;
            eprintln!("none <= {}", a.max_colors);
            Ok(ExitCode::from(1))
        }
    }
}

fn c_lines(g: &BipartiteGraph, c: &EdgeColoring) -> Result<Vec<(usize, usize, u32)>, Error> {
    Ok(g.edges().zip(c.colors()).map(|((u, v), &col)| (u, v, col)).collect())
}

fn grow(a: GrowArgs) -> Result<ExitCode, Error> {
    let g = read_graph(&a.graph)?;
    let overrides = a.branchings;
    if a.regime {
        let (d, p) = (a.d.expect("required by clap"), a.p.expect("required by clap"));
        let regime = RegimeParams::new(g.left_size(), g.right_size(), d, a.k, a.c0, a.epsilon)?;
        let opts = LemmaOptions { overrides, limit: a.limit, selection: a.selection.into() };
        let outcome = tree::lemma_paths(&g, a.root, a.target, p, &regime, &opts, a.seed)?;
        print_json(&serde_json::to_value(outcome)?)?;
        return Ok(ExitCode::SUCCESS);
    }
    let (s, t) = overrides.ok_or_else(|| Error::InvalidArgument("--branchings is required without --regime".into()))?;
    let depth = a.depth.expect("required by clap");
    let plan = GrowthPlan::new(s, t, depth).avoiding([a.target]).with_selection(a.selection.into());
    match tree::grow_tree(&g, a.root, &plan, a.seed)? {
        tree::Growth::Grown(t) => {
            let report = tree::extract_disjoint_paths(&g, &t, a.target, a.limit.unwrap_or(usize::MAX))?;
            let mut value = serde_json::to_value(report)?;
            value["status"] = json!("paths");
            print_json(&value)?;
        }
        stuck => print_json(&serde_json::to_value(stuck)?)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn threshold(a: ThresholdArgs) -> Result<ExitCode, Error> {
    let (m, n, d) = (a.m, a.n, a.d);
    let regime = match a.k {
        Some(k) => RegimeParams::new(m, n, d, k, a.c0, a.epsilon)?,
        None => RegimeParams::with_log_k(m, n, d, a.c0, a.epsilon)?,
    };
    let mut out = json!({
        "m": m, "n": n, "d": d, "k": regime.k, "c0": a.c0, "epsilon": a.epsilon,
        "threshold": thresholds::threshold(m, n, d)?,
        "diameter_threshold": thresholds::diameter_threshold(m, n, d)?,
        "upper_probability": regime.upper_probability()?,
        "lower_probability": regime.lower_probability()?,
        "ln_C1": regime.ln_big_c1(),
        "ln_C2": regime.ln_big_c2(),
        "c1": regime.small_c1(),
        "c2": regime.small_c2(),
        "q1": thresholds::rainbow_success_prob(d, d + 1)?,
        "q2": thresholds::rainbow_success_prob(d, d)?,
        "failure_bound": thresholds::per_pair_failure_bound(regime.k, d, a.c0, n as f64)?,
    });
    if d % 2 == 1 {
        out["p1"] = json!(thresholds::p1(m, n, d)?);
    } else {
        out["p2"] = json!(thresholds::p2(m, n, d)?);
        out["p2_lower_form"] = json!(thresholds::p2_lower_form(m, n, d)?);
    }
    if let Some(p) = a.p {
        out["p"] = json!(p);
        out["diameter_criterion"] = serde_json::to_value(thresholds::diameter_criterion(m, n, p, d))?;
        out["regime"] = serde_json::to_value(thresholds::regime_valid(m, n, p, d, a.epsilon))?;
    }
    print_json(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn sweep(a: SweepArgs) -> Result<ExitCode, Error> {
    let cfg = SweepConfig::from_file(&a.config)?;
    let result = run_sweep(&cfg)?;
    match &a.out {
        Some(path) => result.write_csv(BufWriter::new(File::create(path)?))?,
        None => result.write_csv(io::stdout().lock())?,
    }
    if let Some(path) = &a.json {
        let mut w = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut w, &result.to_json(a.verbose)?)?;
        writeln!(w)?;
    }
    eprintln!("sweep finished in {:.1}s", result.wall_clock_secs);
    Ok(ExitCode::SUCCESS)
}

fn crossing(a: CrossingArgs) -> Result<ExitCode, Error> {
    let rows = read_csv(BufReader::new(File::open(&a.csv)?))?;
    let rate = |r: &CsvRow| match a.measure {
        RateColumn::DiamRate => r.diam_rate,
        RateColumn::RainbowRate => r.rainbow_rate,
    };
    let mut sizes: Vec<(usize, usize)> = Vec::new();
    for r in &rows {
        if !sizes.contains(&(r.m, r.n)) {
            sizes.push((r.m, r.n));
        }
    }
    let mut out = Vec::new();
    for (m, n) in sizes {
        let group: Vec<&CsvRow> = rows.iter().filter(|r| (r.m, r.n) == (m, n) && rate(r).is_some()).collect();
        let series: Vec<(f64, f64)> = group.iter().map(|r| (r.multiplier, rate(r).unwrap())).collect();
        let p_at = |mult: f64| -> Option<f64> {
            let i = group.iter().position(|r| r.multiplier >= mult)?;
            if i == 0 || group[i].multiplier == mult {
                return Some(group[i].p);
            }
            let (a, b) = (group[i - 1], group[i]);
            Some(a.p + (mult - a.multiplier) / (b.multiplier - a.multiplier) * (b.p - a.p))
        };
        let cross = experiments::estimate_crossing(&series, a.level);
        out.push(json!({
            "m": m, "n": n, "level": a.level,
            "crossing": cross,
            "p": cross.and_then(|c| p_at(c.multiplier)),
            "width_10_90": experiments::transition_width(&series, 0.1, 0.9),
        }));
    }
    print_json(&json!(out))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Color(a) => color(a),
        Command::Check(a) => check(a),
        Command::RcExact(a) => rc_exact(a),
        Command::Grow(a) => grow(a),
        Command::Threshold(a) => threshold(a),
        Command::Sweep(a) => sweep(a),
        Command::Crossing(a) => crossing(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
