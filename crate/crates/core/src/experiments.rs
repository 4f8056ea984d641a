//! Seeded Monte Carlo sweeps of `G(m, n, p)` across multiples of the
//! predicted threshold.
//!
//! Each trial derives every random draw from `(master_seed, size, trial)`.
//! With coupling on (the default) one uniform and one color per potential
//! edge are drawn once per `(size, trial)` and reused at every multiplier, so
//! the graphs of one trial are nested and both measured properties are
//! monotone in `p` trial by trial.

use std::io::{Read, Write};
use std::path::Path as FsPath;
use std::time::Instant;

use rand::{Rng as _, RngCore};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{random_coloring, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{diameter_at_most, sample_gnp, BipartiteGraph, CoupledDraws, Vertex};
use crate::rainbow::is_rainbow_k_connected;
use crate::rng::{self, COUPLED_SLOT};
use crate::thresholds::{self, DiameterCriterion, RegimeCheck, RegimeParams};
use crate::tree::{lemma_paths, LemmaOptions, LemmaOutcome};

/// Exact CSV header of sweep output.
pub const CSV_HEADER: &str =
    "m,n,d,k,num_colors,multiplier,p,trials,diam_rate,rainbow_rate,mean_tree_paths,ci_low,ci_high,master_seed,clamped";

/// Normal quantile for two-sided 95% intervals.
pub const Z_95: f64 = 1.96;

const DESK_SCALE_NOTE: &str = "regime inequalities such as p*m >= ln(n)^4 cannot hold at these sizes; \
     results show crossing location and sharpening only, not the asymptotic constants";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    /// Diameter at most `d + 1`.
    Diameter,
    /// A random coloring makes the graph rainbow k-connected within `max_len`.
    Rainbow,
    /// Disjoint path count from the tree construction for a random pair.
    TreePaths,
}

impl std::str::FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "diameter" | "diam" => Ok(Measure::Diameter),
            "rainbow" => Ok(Measure::Rainbow),
            "tree_paths" | "tree" => Ok(Measure::TreePaths),
            other => Err(Error::InvalidArgument(format!("unknown measure {other:?}"))),
        }
    }
}

fn default_k() -> usize {
    1
}

fn default_measures() -> Vec<Measure> {
    vec![Measure::Diameter, Measure::Rainbow]
}

fn default_true() -> bool {
    true
}

fn default_c0() -> f64 {
    1.0
}

fn default_epsilon() -> f64 {
    0.5
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    /// `(m, n)` pairs.
    pub sizes: Vec<(usize, usize)>,
    pub d: usize,
    #[serde(default = "default_k")]
    pub k: usize,
    /// Palette size; `d + 1` when absent.
    #[serde(default)]
    pub num_colors: Option<u32>,
    /// `p = multiplier * p*`, strictly ascending.
    pub multipliers: Vec<f64>,
    pub trials: usize,
    #[serde(default)]
    pub master_seed: u64,
    /// Rainbow path length bound; `d + 1` when absent.
    #[serde(default)]
    pub max_len: Option<usize>,
    #[serde(default = "default_measures")]
    pub measures: Vec<Measure>,
    /// `(s, t)` branchings for the tree measure.
    #[serde(default)]
    pub tree_overrides: Option<(usize, usize)>,
    #[serde(default = "default_true")]
    pub coupled: bool,
    #[serde(default = "default_c0")]
    pub c0: f64,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
}

impl SweepConfig {
    pub fn new(sizes: Vec<(usize, usize)>, d: usize, multipliers: Vec<f64>, trials: usize, master_seed: u64) -> Self {
        SweepConfig {
            sizes,
            d,
            k: 1,
            num_colors: None,
            multipliers,
            trials,
            master_seed,
            max_len: None,
            measures: default_measures(),
            tree_overrides: None,
            coupled: true,
            c0: 1.0,
            epsilon: 0.5,
        }
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors.unwrap_or(self.d as u32 + 1)
    }

    pub fn max_len(&self) -> usize {
        self.max_len.unwrap_or(self.d + 1)
    }

    pub fn measures(&self, m: Measure) -> bool {
        self.measures.contains(&m)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.sizes.is_empty() {
            return bad("at least one size is required".into());
        }
        if let Some(&(m, n)) = self.sizes.iter().find(|&&(m, n)| m < 2 || n < 2) {
            return bad(format!("sizes must be at least 2x2 (got {m}x{n})"));
        }
        if self.d < 2 {
            return bad(format!("d must be at least 2 (got {})", self.d));
        }
        if self.k == 0 {
            return bad("k must be at least 1".into());
        }
        if self.num_colors == Some(0) {
            return Err(Error::EmptyPalette);
        }
        if self.max_len == Some(0) {
            return bad("max_len must be at least 1".into());
        }
        if self.multipliers.is_empty() {
            return bad("at least one multiplier is required".into());
        }
        if self.multipliers.iter().any(|x| !(x.is_finite() && *x > 0.0)) {
            return bad("multipliers must be positive and finite".into());
        }
        if self.multipliers.windows(2).any(|w| w[0] >= w[1]) {
            return bad("multipliers must be strictly ascending".into());
        }
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.measures.is_empty() {
            return bad("at least one measure is required".into());
        }
        if self.multipliers.len() > u32::MAX as usize || self.sizes.len() > u32::MAX as usize {
            return bad("too many sizes or multipliers".into());
        }
        RegimeParams::new(2, 2, self.d, self.k, self.c0, self.epsilon)?;
        Ok(())
    }

    /// Parses a JSON object or `key = value` lines (`#` starts a comment).
    ///
    /// Keys: `sizes` (`400x400, 200x300` or a bare `n` for square), `d`, `k`,
    /// `num_colors`, `multipliers` (comma list or `log2:LO:HI:STEPS` with
    /// STEPS points per doubling), `trials`, `master_seed` (alias `seed`),
    /// `max_len`, `measures`, `tree_overrides` (`s,t`), `coupled`, `c0`,
    /// `epsilon`.
    pub fn parse(text: &str) -> Result<Self> {
        let cfg = if text.trim_start().starts_with('{') {
            serde_json::from_str(text)?
        } else {
            parse_key_values(text)?
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: impl AsRef<FsPath>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

/// `2^{j/steps}` for `j = lo*steps ..= hi*steps`.
pub fn log2_grid(lo: i32, hi: i32, steps_per_doubling: u32) -> Result<Vec<f64>> {
    if lo > hi || steps_per_doubling == 0 {
        return Err(Error::InvalidArgument(format!("bad grid log2:{lo}:{hi}:{steps_per_doubling}")));
    }
    let s = steps_per_doubling as i32;
    Ok((lo * s..=hi * s).map(|j| 2f64.powf(j as f64 / s as f64)).collect())
}

fn parse_key_values(text: &str) -> Result<SweepConfig> {
    let mut sizes = None;
    let mut d = None;
    let mut multipliers = None;
    let mut trials = None;
    let mut cfg = SweepConfig::new(Vec::new(), 0, Vec::new(), 0, 0);
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::parse(line_no, "expected key = value"))?;
        let (key, value) = (key.trim(), value.trim());
        let err = |what: &str| Error::parse(line_no, format!("bad {key}: {what}"));
        let num = |s: &str| -> Result<usize> { s.trim().parse().map_err(|_| err(s)) };
        let list = |s: &str| -> Vec<String> {
            s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
        };
        match key {
            "sizes" => {
                let parsed: Result<Vec<(usize, usize)>> = list(value)
                    .iter()
                    .map(|item| match item.split_once(['x', 'X']) {
                        Some((m, n)) => Ok((num(m)?, num(n)?)),
                        None => num(item).map(|n| (n, n)),
                    })
                    .collect();
                sizes = Some(parsed?);
            }
            "d" => d = Some(num(value)?),
            "k" => cfg.k = num(value)?,
            "num_colors" => cfg.num_colors = Some(value.parse().map_err(|_| err(value))?),
            "multipliers" => {
                multipliers = Some(if let Some(spec) = value.strip_prefix("log2:") {
                    let parts: Vec<&str> = spec.split(':').collect();
                    if parts.len() != 3 {
                        return Err(err("expected log2:LO:HI:STEPS"));
                    }
                    let int = |s: &str| -> Result<i32> { s.trim().parse().map_err(|_| err(s)) };
                    log2_grid(int(parts[0])?, int(parts[1])?, int(parts[2])?.max(0) as u32)
                        .map_err(|e| Error::parse(line_no, e.to_string()))?
                } else {
                    list(value)
                        .iter()
                        .map(|x| x.parse::<f64>().map_err(|_| err(x)))
                        .collect::<Result<_>>()?
                });
            }
            "trials" => trials = Some(num(value)?),
            "master_seed" | "seed" => cfg.master_seed = value.parse().map_err(|_| err(value))?,
            "max_len" => cfg.max_len = Some(num(value)?),
            "measures" => {
                cfg.measures = list(value)
                    .iter()
                    .map(|x| x.parse::<Measure>().map_err(|e| Error::parse(line_no, e.to_string())))
                    .collect::<Result<_>>()?;
            }
            "tree_overrides" => {
                let parts = list(value);
                if parts.len() != 2 {
                    return Err(err("expected s,t"));
                }
                cfg.tree_overrides = Some((num(&parts[0])?, num(&parts[1])?));
            }
            "coupled" => cfg.coupled = value.parse().map_err(|_| err(value))?,
            "c0" => cfg.c0 = value.parse().map_err(|_| err(value))?,
            "epsilon" => cfg.epsilon = value.parse().map_err(|_| err(value))?,
            _ => return Err(Error::parse(line_no, format!("unknown key {key:?}"))),
        }
    }
    let missing = |k: &str| Error::InvalidArgument(format!("config is missing `{k}`"));
    cfg.sizes = sizes.ok_or_else(|| missing("sizes"))?;
    cfg.d = d.ok_or_else(|| missing("d"))?;
    cfg.multipliers = multipliers.ok_or_else(|| missing("multipliers"))?;
    cfg.trials = trials.ok_or_else(|| missing("trials"))?;
    Ok(cfg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeStatus {
    Paths,
    Stuck,
    /// No overrides were given and the regime inequalities fail.
    RegimeInvalid,
}

/// Outcome of one trial at one multiplier.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub size_index: usize,
    pub m: usize,
    pub n: usize,
    pub multiplier_index: usize,
    pub multiplier: f64,
    pub p: f64,
    pub clamped: bool,
    pub trial: u64,
    /// `master_seed ^ trial`.
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rainbow: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree_paths: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree_status: Option<TreeStatus>,
}

/// `(multiplier * p*, clamped)` with `p` capped at 1.
fn clamp_p(multiplier: f64, p_star: f64) -> (f64, bool) {
    let p = multiplier * p_star;
    if p > 1.0 {
        (1.0, true)
    } else {
        (p, false)
    }
}

/// Random stream layout of one `(size, trial)` cell.
struct Cell<'a> {
    cfg: &'a SweepConfig,
    size_index: usize,
    m: usize,
    n: usize,
    trial: u64,
    seed: u64,
    p_star: f64,
}

impl<'a> Cell<'a> {
    fn new(cfg: &'a SweepConfig, size_index: usize, trial: u64) -> Result<Self> {
        let (m, n) = cfg.sizes[size_index];
        Ok(Cell {
            cfg,
            size_index,
            m,
            n,
            trial,
            seed: rng::trial_seed(cfg.master_seed, trial),
            p_star: thresholds::threshold(m, n, cfg.d)?,
        })
    }

    fn coupled_draws(&self) -> Result<CoupledDraws> {
        let mut stream = rng::graph_stream(self.seed, self.size_index, COUPLED_SLOT);
        let colors = self.cfg.measures(Measure::Rainbow).then(|| self.cfg.num_colors());
        CoupledDraws::sample(self.m, self.n, colors, &mut stream)
    }

    fn independent_sample(&self, mi: usize, p: f64) -> Result<(BipartiteGraph, Option<EdgeColoring>)> {
        let mut stream = rng::graph_stream(self.seed, self.size_index, mi as u64);
        let g = sample_gnp(self.m, self.n, p, stream.next_u64())?;
        let color_seed = stream.next_u64();
        let coloring = if self.cfg.measures(Measure::Rainbow) {
            Some(random_coloring(&g, self.cfg.num_colors(), color_seed)?)
        } else {
            None
        };
        Ok((g, coloring))
    }

    fn evaluate(&self, mi: usize, g: &BipartiteGraph, coloring: Option<&EdgeColoring>) -> Result<TrialRecord> {
        let cfg = self.cfg;
        let multiplier = cfg.multipliers[mi];
        let (p, clamped) = clamp_p(multiplier, self.p_star);
        let mut record = TrialRecord {
            size_index: self.size_index,
            m: self.m,
            n: self.n,
            multiplier_index: mi,
            multiplier,
            p,
            clamped,
            trial: self.trial,
            seed: self.seed,
            diameter_ok: None,
            rainbow: None,
            tree_paths: None,
            tree_status: None,
        };
        if cfg.measures(Measure::Diameter) {
            record.diameter_ok = Some(diameter_at_most(g, cfg.d + 1));
        }
        if let Some(c) = coloring {
            record.rainbow = Some(is_rainbow_k_connected(g, c, cfg.k, Some(cfg.max_len()))?.rainbow_k_connected);
        }
        if cfg.measures(Measure::TreePaths) {
            let (paths, status) = self.tree_measure(mi, g, p)?;
            record.tree_paths = paths;
            record.tree_status = Some(status);
        }
        Ok(record)
    }

    fn tree_measure(&self, mi: usize, g: &BipartiteGraph, p: f64) -> Result<(Option<usize>, TreeStatus)> {
        let cfg = self.cfg;
        let mut aux = rng::aux_stream(self.seed, self.size_index, mi);
        let total = self.m + self.n;
        let a = aux.random_range(0..total);
        let mut b = aux.random_range(0..total - 1);
        if b >= a {
            b += 1;
        }
        let vertex = |id: usize| if id < self.m { Vertex::left(id) } else { Vertex::right(id - self.m) };
        let regime = RegimeParams::new(self.m, self.n, cfg.d, cfg.k, cfg.c0, cfg.epsilon)?;
        let opts = LemmaOptions { overrides: cfg.tree_overrides, ..Default::default() };
        match lemma_paths(g, vertex(a), vertex(b), p, &regime, &opts, aux.next_u64()) {
            Ok(LemmaOutcome::Paths(r)) => Ok((Some(r.path_count()), TreeStatus::Paths)),
            Ok(LemmaOutcome::Stuck { .. }) => Ok((Some(0), TreeStatus::Stuck)),
            Err(Error::Regime(_)) => Ok((None, TreeStatus::RegimeInvalid)),
            Err(e) => Err(e),
        }
    }

    /// Records for every multiplier of this cell, in multiplier order.
    fn run_all(&self) -> Result<Vec<TrialRecord>> {
        let draws = if self.cfg.coupled { Some(self.coupled_draws()?) } else { None };
        (0..self.cfg.multipliers.len()).map(|mi| self.run_one(mi, draws.as_ref())).collect()
    }

    fn run_one(&self, mi: usize, draws: Option<&CoupledDraws>) -> Result<TrialRecord> {
        let (p, _) = clamp_p(self.cfg.multipliers[mi], self.p_star);
        let (g, coloring) = match draws {
            Some(draws) => {
                let g = draws.graph_at(p)?;
                let coloring = if self.cfg.measures(Measure::Rainbow) { Some(draws.coloring_for(&g)?) } else { None };
                (g, coloring)
            }
            None => self.independent_sample(mi, p)?,
        };
        self.evaluate(mi, &g, coloring.as_ref())
    }
}

/// One trial at one multiplier. Gives the same record as the corresponding
/// entry of [`run_sweep`].
pub fn run_trial(cfg: &SweepConfig, size_index: usize, multiplier_index: usize, trial: u64) -> Result<TrialRecord> {
    cfg.validate()?;
    if size_index >= cfg.sizes.len() || multiplier_index >= cfg.multipliers.len() {
        return Err(Error::InvalidArgument("size or multiplier index out of range".into()));
    }
    let cell = Cell::new(cfg, size_index, trial)?;
    let draws = if cfg.coupled { Some(cell.coupled_draws()?) } else { None };
    cell.run_one(multiplier_index, draws.as_ref())
}

/// Wilson score interval for `successes / trials` at normal quantile `z`.
pub fn wilson_interval(successes: usize, trials: usize, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = z / denom * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).clamp(0.0, phat), (center + half).clamp(phat, 1.0))
}

/// Success count with its Wilson interval.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Rate {
    pub successes: usize,
    pub trials: usize,
    pub rate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl Rate {
    fn from_counts(successes: usize, trials: usize) -> Self {
        let (ci_low, ci_high) = wilson_interval(successes, trials, Z_95);
        Rate { successes, trials, rate: successes as f64 / trials as f64, ci_low, ci_high }
    }
}

/// Aggregate over all trials at one `(size, multiplier)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointSummary {
    pub size_index: usize,
    pub m: usize,
    pub n: usize,
    pub multiplier_index: usize,
    pub multiplier: f64,
    pub p: f64,
    pub clamped: bool,
    pub trials: usize,
    pub diameter: Option<Rate>,
    pub rainbow: Option<Rate>,
    pub mean_tree_paths: Option<f64>,
    pub min_tree_paths: Option<usize>,
    pub regime: RegimeCheck,
    pub diameter_criterion: DiameterCriterion,
}

/// Threshold value used for one size.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SizeInfo {
    pub m: usize,
    pub n: usize,
    pub p_star: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepResult {
    pub config: SweepConfig,
    pub sizes: Vec<SizeInfo>,
    /// Ordered by size, then multiplier.
    pub points: Vec<PointSummary>,
    /// Ordered by size, multiplier, trial.
    #[serde(skip)]
    pub records: Vec<TrialRecord>,
    pub wall_clock_secs: f64,
    pub note: &'static str,
}

/// Summarizes the records of one `(size, multiplier)` point. The result does
/// not depend on the record order.
pub fn summarize(cfg: &SweepConfig, records: &[&TrialRecord]) -> Result<PointSummary> {
    let first = records.first().ok_or_else(|| Error::InvalidArgument("no records to summarize".into()))?;
    if records.iter().any(|r| r.size_index != first.size_index || r.multiplier_index != first.multiplier_index) {
        return Err(Error::InvalidArgument("records span more than one point".into()));
    }
    let trials = records.len();
    let rate = |get: fn(&TrialRecord) -> Option<bool>| -> Option<Rate> {
        let seen: Vec<bool> = records.iter().filter_map(|r| get(r)).collect();
        (!seen.is_empty()).then(|| Rate::from_counts(seen.iter().filter(|&&b| b).count(), seen.len()))
    };
    let paths: Vec<usize> = records.iter().filter_map(|r| r.tree_paths).collect();
    let mean_tree_paths = (!paths.is_empty()).then(|| paths.iter().sum::<usize>() as f64 / paths.len() as f64);
    Ok(PointSummary {
        size_index: first.size_index,
        m: first.m,
        n: first.n,
        multiplier_index: first.multiplier_index,
        multiplier: first.multiplier,
        p: first.p,
        clamped: first.clamped,
        trials,
        diameter: rate(|r| r.diameter_ok),
        rainbow: rate(|r| r.rainbow),
        mean_tree_paths,
        min_tree_paths: paths.iter().min().copied(),
        regime: thresholds::regime_valid(first.m, first.n, first.p, cfg.d, cfg.epsilon),
        diameter_criterion: thresholds::diameter_criterion(first.m, first.n, first.p, cfg.d),
    })
}

fn env_threads() -> Result<Option<usize>> {
    match std::env::var("RAINBOW_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("RAINBOW_THREADS must be a positive integer (got {v:?})"))),
        Err(_) => Ok(None),
    }
}

/// Runs every `(size, multiplier, trial)` combination and aggregates.
/// Parallel over `(size, trial)` cells, capped by `RAINBOW_THREADS`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    run_sweep_with_threads(cfg, env_threads()?)
}

/// [`run_sweep`] on a pool of `threads` workers (rayon's default when
/// `None`). The result does not depend on the thread count.
pub fn run_sweep_with_threads(cfg: &SweepConfig, threads: Option<usize>) -> Result<SweepResult> {
    cfg.validate()?;
    let started = Instant::now();
    let sizes: Vec<SizeInfo> = cfg
        .sizes
        .iter()
        .map(|&(m, n)| Ok(SizeInfo { m, n, p_star: thresholds::threshold(m, n, cfg.d)? }))
        .collect::<Result<_>>()?;
    let cells: Vec<(usize, u64)> =
        (0..cfg.sizes.len()).flat_map(|si| (0..cfg.trials as u64).map(move |t| (si, t))).collect();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        pool = pool.num_threads(t.max(1));
    }
    let pool = pool.build().map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let per_cell: Vec<Vec<TrialRecord>> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(si, trial)| Cell::new(cfg, si, trial)?.run_all())
            .collect::<Result<_>>()
    })?;
    let mut records: Vec<TrialRecord> = per_cell.into_iter().flatten().collect();
    records.sort_by_key(|r| (r.size_index, r.multiplier_index, r.trial));

    let mut points = Vec::with_capacity(cfg.sizes.len() * cfg.multipliers.len());
    for chunk in records.chunk_by(|a, b| (a.size_index, a.multiplier_index) == (b.size_index, b.multiplier_index)) {
        let refs: Vec<&TrialRecord> = chunk.iter().collect();
        points.push(summarize(cfg, &refs)?);
    }
    Ok(SweepResult {
        config: cfg.clone(),
        sizes,
        points,
        records,
        wall_clock_secs: started.elapsed().as_secs_f64(),
        note: DESK_SCALE_NOTE,
    })
}

/// One row of the CSV contract. Unmeasured quantities are empty fields.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub num_colors: u32,
    pub multiplier: f64,
    pub p: f64,
    pub trials: usize,
    pub diam_rate: Option<f64>,
    pub rainbow_rate: Option<f64>,
    pub mean_tree_paths: Option<f64>,
    /// Interval of `rainbow_rate` when measured, otherwise of `diam_rate`.
    pub ci_low: Option<f64>,
    pub ci_high: Option<f64>,
    pub master_seed: u64,
    pub clamped: bool,
}

impl SweepResult {
    pub fn csv_rows(&self) -> Vec<CsvRow> {
        let cfg = &self.config;
        self.points
            .iter()
            .map(|pt| {
                let ci = pt.rainbow.or(pt.diameter);
                CsvRow {
                    m: pt.m,
                    n: pt.n,
                    d: cfg.d,
                    k: cfg.k,
                    num_colors: cfg.num_colors(),
                    multiplier: pt.multiplier,
                    p: pt.p,
                    trials: pt.trials,
                    diam_rate: pt.diameter.map(|r| r.rate),
                    rainbow_rate: pt.rainbow.map(|r| r.rate),
                    mean_tree_paths: pt.mean_tree_paths,
                    ci_low: ci.map(|r| r.ci_low),
                    ci_high: ci.map(|r| r.ci_high),
                    master_seed: cfg.master_seed,
                    clamped: pt.clamped,
                }
            })
            .collect()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        write_csv_rows(&self.csv_rows(), out)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
    }

    /// JSON view: configuration, per-point summaries with regime diagnostics,
    /// wall-clock time and, when `verbose`, every trial record.
    pub fn to_json(&self, verbose: bool) -> Result<serde_json::Value> {
        let mut value = serde_json::to_value(self)?;
        if verbose {
            value["records"] = serde_json::to_value(&self.records)?;
        }
        Ok(value)
    }

    /// Points of one size, in multiplier order.
    pub fn size_points(&self, size_index: usize) -> impl Iterator<Item = &PointSummary> {
        self.points.iter().filter(move |p| p.size_index == size_index)
    }

    /// `(multiplier, rate)` series of one measure at one size.
    pub fn series(&self, size_index: usize, measure: Measure) -> Vec<(f64, f64)> {
        self.size_points(size_index)
            .filter_map(|pt| {
                let rate = match measure {
                    Measure::Diameter => pt.diameter.map(|r| r.rate),
                    Measure::Rainbow => pt.rainbow.map(|r| r.rate),
                    Measure::TreePaths => pt.mean_tree_paths,
                };
                rate.map(|r| (pt.multiplier, r))
            })
            .collect()
    }

    /// Records of one `(size, trial)` in multiplier order.
    pub fn trial_records(&self, size_index: usize, trial: u64) -> Vec<&TrialRecord> {
        self.records.iter().filter(|r| r.size_index == size_index && r.trial == trial).collect()
    }
}

pub fn write_csv_rows<W: Write>(rows: &[CsvRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads sweep CSV, insisting on the exact header.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<CsvRow>> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = r.headers()?.iter().collect::<Vec<_>>().join(",");
    if header != CSV_HEADER {
        return Err(Error::parse(1, format!("header {header:?} does not match {CSV_HEADER:?}")));
    }
    r.deserialize()
        .enumerate()
        .map(|(i, row)| row.map_err(|e| Error::parse(i + 2, e.to_string())))
        .collect()
}

/// Where a rate series first reaches a level.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Crossing {
    pub level: f64,
    pub multiplier: f64,
    /// Bracketing points `(multiplier, rate)`.
    pub below: (f64, f64),
    pub above: (f64, f64),
}

/// Linear interpolation at the first upward bracket `rate_i < level <=
/// rate_{i+1}`. `None` if the series starts at or above `level` or never
/// reaches it.
pub fn estimate_crossing(series: &[(f64, f64)], level: f64) -> Option<Crossing> {
    let i = series.iter().position(|&(_, r)| r >= level)?;
    if i == 0 {
        return None;
    }
    let (below, above) = (series[i - 1], series[i]);
    let t = (level - below.1) / (above.1 - below.1);
    Some(Crossing { level, multiplier: below.0 + t * (above.0 - below.0), below, above })
}

/// Multiplier span between the `lo` and `hi` crossings.
pub fn transition_width(series: &[(f64, f64)], lo: f64, hi: f64) -> Option<f64> {
    Some(estimate_crossing(series, hi)?.multiplier - estimate_crossing(series, lo)?.multiplier)
}
