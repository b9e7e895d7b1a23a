//! Subcommand implementations.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::anyhow;
use swk_core::closed_forms::{sw_path_like, sw_star_like, BlockOrderSequence, PathLikeVariant};
use swk_core::decompositions::{
    sw3_edge, sw3_edge_literal, sw_block_decomposition, sw_hamming_guarded,
    sw_vertex_decomposition, wiener_edge,
};
use swk_core::extremal::{extremal_scan, problem_scan, ProblemMode};
use swk_core::graph::{block_graph_decomposition, classify, DegreeSequence};
use swk_core::oracle::{Guards, Oracle};
use swk_core::{Error, Graph, Value};

use crate::report::{
    write_csv, write_json, Discrepancy, ProblemCsvRow, ProblemSummary, ReportRow, RunReport,
    ScanCsvRow, ScanSummary,
};

/// How a command failed; decides the exit status.
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Guard(anyhow::Error),
    Agreement(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Guard(_) => 2,
            Failure::Agreement(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(e) => write!(f, "input error: {e:#}"),
            Failure::Guard(e) => write!(f, "{e:#}"),
            Failure::Agreement(msg) => write!(f, "agreement failure: {msg}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Guard(e.into()),
            other => Failure::Input(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::GuardExceeded { .. }) => Failure::Guard(e),
            _ => Failure::Input(e),
        }
    }
}

pub type Outcome<T = ()> = std::result::Result<T, Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Block,
    Vertex,
    Hamming,
    Edge3,
    Oracle,
    Auto,
}

#[derive(Debug, Clone)]
pub struct Output {
    pub json: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub timing: bool,
    /// Largest number of `k`-subsets an exhaustive method may visit.
    pub oracle_guard: u128,
}

impl Output {
    fn guards(&self) -> Guards {
        Guards {
            max_subsets: self.oracle_guard,
            max_terminals: 12,
            ..Guards::default()
        }
    }
}

struct Evaluated {
    values: BTreeMap<String, Value>,
    timings: BTreeMap<String, u128>,
}

impl Evaluated {
    fn new() -> Self {
        Evaluated {
            values: BTreeMap::new(),
            timings: BTreeMap::new(),
        }
    }

    fn run(
        &mut self,
        name: &str,
        f: impl FnOnce() -> swk_core::Result<Value>,
    ) -> swk_core::Result<()> {
        let start = Instant::now();
        let v = f()?;
        self.timings
            .insert(name.to_string(), start.elapsed().as_micros());
        self.values.insert(name.to_string(), v);
        Ok(())
    }

    fn agree(&self) -> bool {
        let mut it = self.values.values();
        let first = it.next();
        it.all(|v| Some(v) == first)
    }

    fn into_row(self, k: usize, discrepancies: Vec<Discrepancy>, timing: bool) -> ReportRow {
        ReportRow {
            k,
            agree: self.agree(),
            values: self
                .values
                .iter()
                .map(|(m, v)| (m.clone(), v.to_string()))
                .collect(),
            timings_us: if timing {
                self.timings
            } else {
                BTreeMap::new()
            },
            discrepancies,
        }
    }
}

fn finish(report: RunReport, out: &Output) -> Outcome {
    print_report(&report);
    if let Some(p) = &out.json {
        write_json(p, &report)?;
    }
    if report.agreement {
        Ok(())
    } else {
        let bad: Vec<usize> = report
            .rows
            .iter()
            .filter(|r| !r.agree)
            .map(|r| r.k)
            .collect();
        Err(Failure::Agreement(format!(
            "methods disagree for k in {bad:?}"
        )))
    }
}

fn print_report(r: &RunReport) {
    println!(
        "{} on {} (n = {}, m = {})",
        r.command, r.input, r.order, r.size
    );
    for row in &r.rows {
        let values: Vec<String> = row.values.iter().map(|(m, v)| format!("{m}={v}")).collect();
        let flag = if row.agree { "agree" } else { "DISAGREE" };
        println!("  k = {:<3} {flag:<8} {}", row.k, values.join("  "));
        for d in &row.discrepancies {
            println!(
                "          {} = {} vs {} (delta {})",
                d.formula, d.value, d.reference, d.delta
            );
        }
    }
    for n in &r.notes {
        println!("  note: {n}");
    }
}

pub fn compute(g: &Graph, input: &str, k: usize, method: Method, out: &Output) -> Outcome {
    block_graph_decomposition(g)?;
    let guards = out.guards();
    let mut ev = Evaluated::new();
    let mut notes = Vec::new();
    match method {
        Method::Block => ev.run("block", || sw_block_decomposition(g, k))?,
        Method::Vertex => ev.run("vertex", || sw_vertex_decomposition(g, k))?,
        Method::Hamming => ev.run("hamming", || sw_hamming_guarded(g, k, &guards))?,
        Method::Oracle => ev.run("oracle", || Oracle::new(guards).sw_bruteforce(g, k))?,
        Method::Edge3 => {
            if k != 3 {
                return Err(Failure::Input(anyhow!(
                    "edge3 evaluates k = 3 only, got k = {k}"
                )));
            }
            ev.run("edge3", || sw3_edge(g))?;
        }
        Method::Auto => {
            ev.run("vertex", || sw_vertex_decomposition(g, k))?;
            match ev.run("oracle", || Oracle::new(guards).sw_bruteforce(g, k)) {
                Ok(()) => {}
                Err(e @ Error::GuardExceeded { .. }) => {
                    notes.push(format!("oracle cross-check skipped: {e}"))
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    let methods = ev.values.keys().cloned().collect();
    let row = ev.into_row(k, Vec::new(), out.timing);
    let report = RunReport {
        command: "compute".into(),
        input: input.into(),
        order: g.order(),
        size: g.size(),
        methods,
        k_min: k,
        k_max: k,
        agreement: row.agree,
        rows: vec![row],
        notes,
    };
    finish(report, out)
}

fn discrepancy(formula: &str, value: &Value, reference: &Value) -> Discrepancy {
    Discrepancy {
        formula: formula.into(),
        value: value.to_string(),
        reference: reference.to_string(),
        delta: (value - reference).to_string(),
    }
}

pub fn compare(g: &Graph, input: &str, k_max: usize, out: &Output) -> Outcome {
    let d = block_graph_decomposition(g)?;
    let n = g.order();
    if k_max < 2 || k_max > n {
        return Err(Failure::Input(anyhow!(
            "--kmax must lie in 2..={n}, got {k_max}"
        )));
    }
    let c = classify(g, &d);
    let chain = d.chain_orders().filter(|o| o.len() >= 2);
    let star_seq = if c.is_star_like {
        Some(BlockOrderSequence::new(d.block_orders())?)
    } else {
        None
    };
    let guards = out.guards();
    let mut notes = Vec::new();
    let mut methods = std::collections::BTreeSet::new();
    let mut rows = Vec::new();
    for k in 2..=k_max {
        let mut ev = Evaluated::new();
        ev.run("block", || sw_block_decomposition(g, k))?;
        ev.run("vertex", || sw_vertex_decomposition(g, k))?;
        for (name, r) in [
            (
                "hamming",
                ev.run("hamming", || sw_hamming_guarded(g, k, &guards)),
            ),
            (
                "oracle",
                ev.run("oracle", || Oracle::new(guards).sw_bruteforce(g, k)),
            ),
        ] {
            match r {
                Ok(()) => {}
                Err(e @ Error::GuardExceeded { .. }) => {
                    notes.push(format!("{name} skipped at k = {k}: {e}"))
                }
                Err(e) => return Err(e.into()),
            }
        }
        match k {
            2 => ev.run("edge", || wiener_edge(g))?,
            3 => ev.run("edge", || sw3_edge(g))?,
            _ => {}
        }
        if let Some(seq) = &star_seq {
            ev.run("star_like", || sw_star_like(seq, k))?;
        }
        if let Some(orders) = chain.as_ref().filter(|_| k < n) {
            ev.run("path_like", || {
                sw_path_like(orders, k, PathLikeVariant::Corrected)
            })?;
        }
        let reference = ev.values["vertex"].clone();
        let mut disc = Vec::new();
        if k == 3 {
            let lit: Value = sw3_edge_literal(g)?;
            if lit != reference {
                disc.push(discrepancy("sw3_edge_literal", &lit, &reference));
            }
        }
        if let Some(orders) = chain.as_ref().filter(|_| k < n) {
            let lit: Value = sw_path_like(orders, k, PathLikeVariant::Literal)?;
            if lit != reference {
                disc.push(discrepancy("path_like_literal", &lit, &reference));
            }
        }
        methods.extend(ev.values.keys().cloned());
        rows.push(ev.into_row(k, disc, out.timing));
    }
    let report = RunReport {
        command: "compare".into(),
        input: input.into(),
        order: n,
        size: g.size(),
        methods: methods.into_iter().collect(),
        k_min: 2,
        k_max,
        agreement: rows.iter().all(|r| r.agree),
        rows,
        notes,
    };
    finish(report, out)
}

pub fn scan(orders: &[usize], k: usize, limit: usize, out: &Output) -> Outcome {
    let seq = BlockOrderSequence::new(orders.to_vec())?;
    let r = extremal_scan::<Value>(&seq, k, limit)?;
    let rows: Vec<ScanCsvRow> = r
        .rows
        .iter()
        .map(|row| ScanCsvRow {
            canonical_id: row.canonical.to_string(),
            sw_k: row.value.to_string(),
            is_star_like: row.is_star_like,
            is_path_like: row.is_path_like,
        })
        .collect();
    let summary = ScanSummary {
        orders: seq.orders().to_vec(),
        k,
        order: seq.order(),
        members: r.rows.len(),
        min_value: r.min_value.to_string(),
        min_graphs: r.min_graphs.iter().map(ToString::to_string).collect(),
        max_value: r.max_value.to_string(),
        max_graphs: r.max_graphs.iter().map(ToString::to_string).collect(),
        lower_bound: r.lower_bound.to_string(),
        min_at_star_like: r.min_at_star_like,
        max_at_path_like: r.max_at_path_like,
    };
    println!(
        "scan of block orders {:?} (n = {}), k = {k}: {} graphs",
        summary.orders, summary.order, summary.members
    );
    for row in &rows {
        let mut tags = Vec::new();
        if row.is_star_like {
            tags.push("star-like");
        }
        if row.is_path_like {
            tags.push("path-like");
        }
        println!(
            "  {:>12}  {}  {}",
            row.sw_k,
            row.canonical_id,
            tags.join(",")
        );
    }
    println!(
        "  min = {} (bound {}, star-like: {}), max = {} (path-like: {})",
        summary.min_value,
        summary.lower_bound,
        summary.min_at_star_like,
        summary.max_value,
        summary.max_at_path_like
    );
    if let Some(p) = &out.csv {
        write_csv(p, &rows)?;
    }
    if let Some(p) = &out.json {
        write_json(p, &summary)?;
    }
    if summary.min_at_star_like && summary.max_at_path_like {
        Ok(())
    } else {
        Err(Failure::Agreement(
            "extremal members are not star-like/path-like as expected".into(),
        ))
    }
}

fn edge_list(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().into_iter().map(|(u, v)| [u, v]).collect()
}

pub fn problems(degrees: &[usize], k: usize, mode: ProblemMode, out: &Output) -> Outcome {
    let ds = DegreeSequence::new(degrees.to_vec())?;
    let r = problem_scan::<Value>(&ds, k, mode)?;
    let mode_name = match mode {
        ProblemMode::Trees => "trees",
        ProblemMode::LineGraphs => "line-graphs",
    };
    let rows: Vec<ProblemCsvRow> = r
        .rows
        .iter()
        .map(|row| ProblemCsvRow {
            canonical_id: row.canonical.to_string(),
            sw_k: row.value.to_string(),
            is_greedy: row.is_greedy,
            is_caterpillar: row.is_caterpillar,
        })
        .collect();
    let summary = ProblemSummary {
        degrees: r.degrees.clone(),
        k,
        mode: mode_name.into(),
        trees: r.rows.len(),
        min_value: r.min_value.to_string(),
        max_value: r.max_value.to_string(),
        greedy_value: r.greedy_value.to_string(),
        greedy_is_min: r.greedy_is_min,
        caterpillar_value: r.caterpillar_value.to_string(),
        caterpillar_is_max: r.caterpillar_is_max,
        min_counterexample: r.min_counterexample.as_ref().map(edge_list),
        max_counterexample: r.max_counterexample.as_ref().map(edge_list),
    };
    println!(
        "degree sequence {:?}, {mode_name}, k = {k}: {} trees",
        summary.degrees, summary.trees
    );
    for row in &rows {
        let mut tags = Vec::new();
        if row.is_greedy {
            tags.push("greedy");
        }
        if row.is_caterpillar {
            tags.push("caterpillar");
        }
        println!(
            "  {:>12}  {}  {}",
            row.sw_k,
            row.canonical_id,
            tags.join(",")
        );
    }
    println!(
        "  min = {} (greedy {}: {}), max = {} (best caterpillar {}: {})",
        summary.min_value,
        summary.greedy_value,
        summary.greedy_is_min,
        summary.max_value,
        summary.caterpillar_value,
        summary.caterpillar_is_max
    );
    if let Some(e) = &summary.min_counterexample {
        eprintln!("NOTICE: the greedy tree is not a minimizer here; a minimizer has edges {e:?}");
    }
    if let Some(e) = &summary.max_counterexample {
        eprintln!("NOTICE: no caterpillar is a maximizer here; a maximizer has edges {e:?}");
    }
    if let Some(p) = &out.csv {
        write_csv(p, &rows)?;
    }
    if let Some(p) = &out.json {
        write_json(p, &summary)?;
    }
    Ok(())
}
