//! Campaign drivers behind the `backbone-siege` binary: graph statistics, single attacks and
//! strategy comparisons, all emitted as CSV.
//!
//! Files are written atomically (temporary file in the target directory, then rename), and
//! every real number is printed with 9 significant digits so re-runs are byte-identical.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::attack::{Attack, AttackStrategy, AttackTrace};
use crate::error::{Error, Result};
use crate::graph::PeeringGraph;
use crate::ingest::{load_graph, RecordFiles};
use crate::metrics::{go_index, r_index, r_n_index};

pub const DEFAULT_CHECKPOINTS: [f64; 3] = [0.01, 0.10, 0.20];

pub const TRACE_HEADER: [&str; 11] = [
    "strike",
    "edge_id",
    "asn_a",
    "asn_b",
    "betweenness",
    "s_q",
    "sar",
    "netcon",
    "netcon_fraction",
    "bde",
    "ade",
];

// floor() guard against products such as 0.29 * 100 = 28.999999999999996
const FLOOR_SLACK: f64 = 1e-9;

/// Strike budget: an absolute count or a percentage of the initial edge count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Budget {
    Count(usize),
    Percent(f64),
}

impl FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidBudget(s.to_owned());
        match s.trim().strip_suffix('%') {
            Some(p) => {
                let p: f64 = p.trim().parse().map_err(|_| bad())?;
                if p > 0.0 && p <= 100.0 {
                    Ok(Budget::Percent(p))
                } else {
                    Err(bad())
                }
            }
            None => match s.trim().parse::<usize>() {
                Ok(n) if n > 0 => Ok(Budget::Count(n)),
                _ => Err(bad()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResolvedBudget {
    pub strikes: usize,
    pub warning: Option<String>,
}

impl Budget {
    /// Percentages resolve to `floor(p × edges)`, raised to 1 with a warning when that is 0.
    pub fn resolve(&self, edges: usize) -> Result<ResolvedBudget> {
        if edges == 0 {
            return Err(Error::ZeroBudget);
        }
        let strikes = match *self {
            Budget::Count(0) => return Err(Error::ZeroBudget),
            Budget::Count(n) => n,
            Budget::Percent(p) => {
                let raw = (p / 100.0 * edges as f64 + FLOOR_SLACK).floor() as usize;
                if raw == 0 {
                    return Ok(ResolvedBudget {
                        strikes: 1,
                        warning: Some(format!(
                            "budget {p}% of {edges} edges rounds down to 0; running 1 strike"
                        )),
                    });
                }
                raw
            }
        };
        if strikes > edges {
            return Err(Error::BudgetExceedsEdgeCount {
                budget: strikes,
                edges,
            });
        }
        Ok(ResolvedBudget {
            strikes,
            warning: None,
        })
    }
}

/// Parses a comma-separated checkpoint list such as `0.01,0.1,0.2`.
pub fn parse_checkpoints(list: &str) -> Result<Vec<f64>> {
    list.split(',')
        .map(|item| {
            let v: f64 = item
                .trim()
                .parse()
                .map_err(|_| Error::InvalidCheckpoint(f64::NAN))?;
            validate_checkpoint(v)
        })
        .collect()
}

fn validate_checkpoint(v: f64) -> Result<f64> {
    if v > 0.0 && v <= 1.0 {
        Ok(v)
    } else {
        Err(Error::InvalidCheckpoint(v))
    }
}

/// Strike count a checkpoint fraction refers to: `floor(f × edges)`, at least 1.
pub fn checkpoint_strikes(fraction: f64, edges: usize) -> usize {
    ((fraction * edges as f64 + FLOOR_SLACK).floor() as usize).max(1)
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub files: RecordFiles,
    pub strategy: AttackStrategy,
    pub budget: Budget,
    pub out: PathBuf,
    pub checkpoints: Vec<f64>,
    /// Threads per betweenness evaluation.
    pub workers: usize,
}

impl CampaignConfig {
    pub fn new(files: RecordFiles, out: impl Into<PathBuf>) -> Self {
        CampaignConfig {
            files,
            strategy: AttackStrategy::BetweennessSequential,
            budget: Budget::Percent(20.0),
            out: out.into(),
            checkpoints: DEFAULT_CHECKPOINTS.to_vec(),
            workers: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        for &c in &self.checkpoints {
            validate_checkpoint(c)?;
        }
        Ok(())
    }
}

/// Formats a real with 9 significant digits, in the style of C's `%.9g`.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..9).contains(&exp) {
        let decimals = (8 - exp) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa.to_owned()), exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s
    }
}

/// Writes `bytes` to `path` via a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_owned(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(bytes).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

fn csv_bytes(rows: impl IntoIterator<Item = Vec<String>>) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    w.into_inner().expect("flushing to memory")
}

/// Trace CSV, one row per strike.
pub fn trace_csv(trace: &AttackTrace) -> Vec<u8> {
    let header = TRACE_HEADER.iter().map(|s| s.to_string()).collect();
    let rows = trace.strikes.iter().map(|s| {
        let mut row = vec![
            s.index.to_string(),
            s.edge.to_string(),
            s.endpoints.0.to_string(),
            s.endpoints.1.to_string(),
            s.betweenness.map(fmt_real).unwrap_or_default(),
            fmt_real(s.lcc_fraction),
        ];
        match s.go_index {
            Some(g) => row.extend([
                fmt_real(g.sar),
                g.netcon.to_string(),
                fmt_real(g.netcon_fraction),
                fmt_real(g.bde),
                fmt_real(g.ade),
            ]),
            None => row.extend(std::iter::repeat_n(String::new(), 5)),
        }
        row
    });
    csv_bytes(std::iter::once(header).chain(rows))
}

fn pct(f: f64) -> String {
    format!("{}%", fmt_real(f * 100.0))
}

#[derive(Debug)]
pub struct StatsReport {
    pub graph: PeeringGraph,
    /// Human-readable summary.
    pub text: String,
    pub csv: Vec<u8>,
}

/// Graph statistics as `section,key,value` rows.
pub fn cmd_stats(files: &RecordFiles, out: &Path) -> Result<StatsReport> {
    let graph = load_graph(files)?;
    let report = stats_report(graph)?;
    write_atomic(out, &report.csv)?;
    Ok(report)
}

pub fn stats_report(graph: PeeringGraph) -> Result<StatsReport> {
    let lcc = graph.largest_component_fraction()?;
    let mut rows: Vec<[String; 3]> = Vec::new();
    let mut row = |section: &str, key: String, value: String| {
        rows.push([section.to_owned(), key, value]);
    };
    let mut text = String::new();

    row("graph", "nodes".into(), graph.node_count().to_string());
    row("graph", "edges".into(), graph.edge_count().to_string());
    row("graph", "components".into(), graph.connected_components().len().to_string());
    row("graph", "lcc_fraction".into(), fmt_real(lcc));
    row("graph", "providers".into(), graph.provider_count().to_string());
    writeln!(text, "nodes: {}", graph.node_count()).unwrap();
    writeln!(text, "edges: {}", graph.edge_count()).unwrap();
    writeln!(text, "largest component: {}", fmt_real(lcc)).unwrap();

    let labels = graph.label_counts();
    for (label, count) in &labels {
        row("labels", label.as_str().into(), count.to_string());
    }
    writeln!(
        text,
        "labels: {}",
        labels
            .iter()
            .map(|(l, c)| format!("{}={c}", l.as_str()))
            .collect::<Vec<_>>()
            .join(" ")
    )
    .unwrap();

    for (degree, count) in graph.degree_distribution() {
        row("degree", degree.to_string(), count.to_string());
    }

    if graph.provider_count() > 0 {
        let go = go_index(&graph)?;
        row("go_index", "sar".into(), fmt_real(go.sar));
        row("go_index", "netcon".into(), go.netcon.to_string());
        row("go_index", "netcon_fraction".into(), fmt_real(go.netcon_fraction));
        row("go_index", "bde".into(), fmt_real(go.bde));
        row("go_index", "ade".into(), fmt_real(go.ade));
        writeln!(
            text,
            "go-index: sar={} netcon={} ({}) bde={} ade={}",
            fmt_real(go.sar),
            go.netcon,
            fmt_real(go.netcon_fraction),
            fmt_real(go.bde),
            fmt_real(go.ade)
        )
        .unwrap();
    } else {
        writeln!(text, "go-index: no providers").unwrap();
    }

    let header = ["section", "key", "value"].map(String::from).to_vec();
    let csv = csv_bytes(std::iter::once(header).chain(rows.into_iter().map(Vec::from)));
    Ok(StatsReport { graph, text, csv })
}

#[derive(Debug)]
pub struct AttackReport {
    pub trace: AttackTrace,
    pub warnings: Vec<String>,
    /// Human-readable summary with R_n at each checkpoint.
    pub summary: String,
    pub csv: Vec<u8>,
}

/// Runs one attack campaign and writes its trace CSV to `config.out`.
pub fn cmd_attack(config: &CampaignConfig) -> Result<AttackReport> {
    config.validate()?;
    let graph = load_graph(&config.files)?;
    let report = attack_report(&graph, config)?;
    write_atomic(&config.out, &report.csv)?;
    Ok(report)
}

pub fn attack_report(graph: &PeeringGraph, config: &CampaignConfig) -> Result<AttackReport> {
    config.validate()?;
    if graph.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let budget = config.budget.resolve(graph.edge_count())?;
    let trace = Attack::new(graph.clone())
        .workers(config.workers)
        .run(config.strategy, budget.strikes)?;

    let m = trace.strikes.len();
    let mut summary = String::new();
    writeln!(summary, "strategy: {}", config.strategy).unwrap();
    writeln!(
        summary,
        "nodes: {}  edges: {}  strikes: {m}",
        trace.initial_node_count, trace.initial_edge_count
    )
    .unwrap();
    for &f in &config.checkpoints {
        let n = checkpoint_strikes(f, trace.initial_edge_count);
        match r_n_index(&trace, n) {
            Ok(r) => writeln!(summary, "R_{} (n={n}): {}", pct(f), fmt_real(r)).unwrap(),
            Err(_) => writeln!(summary, "R_{} (n={n}): beyond budget", pct(f)).unwrap(),
        }
    }
    writeln!(summary, "R_M (M={m}): {}", fmt_real(r_n_index(&trace, m)?)).unwrap();
    if let Ok(r) = r_index(&trace) {
        writeln!(summary, "R (complete): {}", fmt_real(r)).unwrap();
    }

    let csv = trace_csv(&trace);
    Ok(AttackReport {
        trace,
        warnings: budget.warning.into_iter().collect(),
        summary,
        csv,
    })
}

#[derive(Debug)]
pub struct CompareReport {
    pub traces: Vec<AttackTrace>,
    pub warnings: Vec<String>,
    pub csv: Vec<u8>,
}

/// Runs each strategy with the same budget and writes a `checkpoint,n,<strategy>...` table
/// of R_n values to `config.out`. Cells beyond the budget are left empty.
pub fn cmd_compare(config: &CampaignConfig, strategies: &[AttackStrategy]) -> Result<CompareReport> {
    if strategies.len() < 2 {
        return Err(Error::NeedTwoStrategies);
    }
    config.validate()?;
    let graph = load_graph(&config.files)?;
    let report = compare_report(&graph, config, strategies)?;
    write_atomic(&config.out, &report.csv)?;
    Ok(report)
}

pub fn compare_report(
    graph: &PeeringGraph,
    config: &CampaignConfig,
    strategies: &[AttackStrategy],
) -> Result<CompareReport> {
    if strategies.len() < 2 {
        return Err(Error::NeedTwoStrategies);
    }
    config.validate()?;
    if graph.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let budget = config.budget.resolve(graph.edge_count())?;
    let attack = Attack::new(graph.clone()).workers(config.workers);
    let traces = strategies
        .iter()
        .map(|&s| attack.run(s, budget.strikes))
        .collect::<Result<Vec<_>>>()?;

    let mut header = vec!["checkpoint".to_owned(), "n".to_owned()];
    header.extend(strategies.iter().map(|s| s.to_string()));
    let edges = graph.edge_count();
    let rows = config.checkpoints.iter().map(|&f| {
        let n = checkpoint_strikes(f, edges);
        let mut row = vec![fmt_real(f), n.to_string()];
        row.extend(
            traces
                .iter()
                .map(|t| r_n_index(t, n).map(fmt_real).unwrap_or_default()),
        );
        row
    });
    let csv = csv_bytes(std::iter::once(header).chain(rows));
    Ok(CompareReport {
        traces,
        warnings: budget.warning.into_iter().collect(),
        csv,
    })
}
