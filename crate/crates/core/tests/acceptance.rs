//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary so the report is printed on every `cargo test`.
//! The process fails if any criterion fails, except those listed in
//! `KNOWN_FAILURES`, which must still fail (a stale entry fails the run too).

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::thread;
use std::time::{Duration, Instant};

use num_traits::Zero;
use swk_core::closed_forms::{
    sw_n_minus_1, sw_path_like, sw_windmill, BlockOrderSequence, PathLikeVariant,
};
use swk_core::combinatorics::binomial;
use swk_core::decompositions::{
    hamming_labeling, steiner_betweenness_blockgraph, steiner_distance_hamming, sw3_edge,
    sw3_edge_literal, sw_block_decomposition, sw_hamming, sw_vertex_decomposition, wiener_edge,
};
use swk_core::extremal::{
    buckley_check, extremal_scan, gbs_apply, gbs_difference, gbs_drop_exact, problem_scan,
    proper_moves, ProblemMode,
};
use swk_core::graph::{
    block_graph_decomposition, complete, path, path_like, windmill, DegreeSequence,
};
use swk_core::oracle::{steiner_distance, Guards, Oracle};
use swk_core::{Graph, Value};

/// Criteria whose literal statement does not hold; see README.
const KNOWN_FAILURES: &[&str] = &["5"];

struct Outcome {
    id: &'static str,
    title: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
}

fn v(x: i64) -> Value {
    Value::from(x)
}

fn oracle() -> Oracle {
    Oracle::new(Guards {
        max_terminals: 10,
        ..Guards::default()
    })
}

fn figure_reproduction() -> (bool, String) {
    let g = path_like(&[3, 2, 4]).unwrap();
    let s = [0, 1, 4, 5];
    let d = steiner_distance(&g, &s).unwrap();
    let lab = hamming_labeling(&g, &block_graph_decomposition(&g).unwrap()).unwrap();
    let h = steiner_distance_hamming(&lab, &s).unwrap();
    (
        d == 5 && h == 5,
        format!("oracle d(S)={d}, hamming d(S)={h}"),
    )
}

fn four_way(corpus: &[Graph]) -> (bool, String) {
    let mut checks = 0usize;
    let mut failures = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        let n = g.order();
        for k in 2..=n.min(6) {
            let a: Value = sw_block_decomposition(g, k).unwrap();
            let b: Value = sw_vertex_decomposition(g, k).unwrap();
            let c: Value = sw_hamming(g, k).unwrap();
            let d: Value = oracle().sw_bruteforce(g, k).unwrap();
            checks += 1;
            if !(a == b && b == c && c == d) {
                failures.push(format!("graph #{i} k={k}: {a} {b} {c} {d}"));
            }
        }
    }
    (
        failures.is_empty(),
        format!(
            "{} graphs, {checks} (graph, k) checks, {} mismatches {:?}",
            corpus.len(),
            failures.len(),
            failures.first()
        ),
    )
}

fn edge_decomposition(corpus: &[Graph]) -> (bool, String) {
    let mut failures = 0usize;
    let mut checks = 0usize;
    for g in corpus {
        let w: Value = wiener_edge(g).unwrap();
        checks += 1;
        failures += usize::from(w != oracle().sw_bruteforce::<Value>(g, 2).unwrap());
        if g.order() >= 3 {
            let s3: Value = sw3_edge(g).unwrap();
            checks += 1;
            failures += usize::from(s3 != oracle().sw_bruteforce::<Value>(g, 3).unwrap());
        }
    }
    let k3_lit: Value = sw3_edge_literal(&complete(3)).unwrap();
    let p3_lit: Value = sw3_edge_literal(&path(3)).unwrap();
    let k3: Value = oracle().sw_bruteforce(&complete(3), 3).unwrap();
    let p3: Value = oracle().sw_bruteforce(&path(3), 3).unwrap();
    let pinned = k3_lit == v(5) && k3 == v(2) && p3_lit == v(4) && p3 == v(2);
    (
        failures == 0 && pinned,
        format!("{checks} checks, {failures} mismatches; literal SW3: K3 {k3_lit} vs {k3}, P3 {p3_lit} vs {p3}"),
    )
}

fn path_like_orders(max_order: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for b in 2..=left + 1 {
            cur.push(b);
            rec(left - (b - 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_order - 1, &mut Vec::new(), &mut out);
    out
}

fn closed_forms() -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    let bowtie = windmill(3, 2).unwrap();
    for (k, expected) in [(2, 14), (3, 24)] {
        let f: Value = sw_windmill(3, 2, k).unwrap();
        let o: Value = oracle().sw_bruteforce(&bowtie, k).unwrap();
        ok &= f == v(expected) && o == f;
    }
    for t in 2..=7 {
        let star = windmill(2, t).unwrap();
        let n = t + 1;
        for k in 2..=n {
            let f: Value = sw_windmill(2, t, k).unwrap();
            let formula = Value::from(n - 1) * binomial::<Value>(n - 1, k - 1).unwrap();
            ok &= f == formula && f == oracle().sw_bruteforce::<Value>(&star, k).unwrap();
        }
    }
    let f: Value = sw_n_minus_1(5, 4).unwrap();
    ok &= f == v(16) && f == oracle().sw_bruteforce::<Value>(&bowtie, 4).unwrap();
    notes.push("windmill, star and n-1 forms match".to_string());

    let mut sequences = 0usize;
    let mut corrected_bad = 0usize;
    let mut literal_bad = 0usize;
    let mut cache: BTreeMap<Vec<usize>, BTreeMap<usize, Value>> = BTreeMap::new();
    for orders in path_like_orders(10) {
        let mut key = orders.clone();
        let rev: Vec<usize> = orders.iter().rev().copied().collect();
        if rev < key {
            key = rev;
        }
        let g = path_like(&orders).unwrap();
        let n = g.order();
        let values = cache.entry(key).or_insert_with(|| {
            (2..n)
                .map(|k| (k, oracle().sw_bruteforce::<Value>(&g, k).unwrap()))
                .collect()
        });
        sequences += 1;
        for k in 2..n {
            let c: Value = sw_path_like(&orders, k, PathLikeVariant::Corrected).unwrap();
            let l: Value = sw_path_like(&orders, k, PathLikeVariant::Literal).unwrap();
            corrected_bad += usize::from(c != values[&k]);
            literal_bad += usize::from(l != values[&k]);
        }
    }
    let c33: Value = sw_path_like(&[3, 3], 2, PathLikeVariant::Corrected).unwrap();
    let l33: Value = sw_path_like(&[3, 3], 2, PathLikeVariant::Literal).unwrap();
    ok &= corrected_bad == 0 && c33 == v(14) && l33 == v(12);
    notes.push(format!(
        "path-like: {sequences} sequences, corrected mismatches {corrected_bad}, literal mismatches {literal_bad}, (3,3): {c33} vs literal {l33}"
    ));
    (ok, notes.join("; "))
}

struct GbsTally {
    moves: usize,
    checks: usize,
    literal_mismatches: usize,
    first_literal: Option<String>,
    exact_mismatches: usize,
    increases: usize,
    first_increase: Option<String>,
}

fn gbs_walks(families: &[(BlockOrderSequence, Vec<Graph>)]) -> GbsTally {
    let mut t = GbsTally {
        moves: 0,
        checks: 0,
        literal_mismatches: 0,
        first_literal: None,
        exact_mismatches: 0,
        increases: 0,
        first_increase: None,
    };
    for (seq, fam) in families {
        for g in fam {
            let n = g.order();
            let before: Vec<Value> = (2..=n)
                .map(|k| sw_vertex_decomposition(g, k).unwrap())
                .collect();
            for mv in proper_moves(g).unwrap() {
                let h = gbs_apply(g, &mv).unwrap();
                t.moves += 1;
                for k in 2..=n {
                    let after: Value = sw_vertex_decomposition(&h, k).unwrap();
                    let drop = &before[k - 2] - &after;
                    if drop < Value::zero() {
                        t.increases += 1;
                        t.first_increase.get_or_insert_with(|| {
                            format!(
                                "orders {:?} x={} y={} path {:?} k={k}: {} -> {after}",
                                seq.orders(),
                                mv.x,
                                mv.y,
                                mv.path,
                                before[k - 2]
                            )
                        });
                    }
                    if k <= 6 {
                        t.checks += 1;
                        let exact: Value = gbs_drop_exact(g, &mv, k).unwrap();
                        t.exact_mismatches += usize::from(exact != drop);
                        let lit: Value =
                            gbs_difference(mv.set_a.len(), mv.set_b.len(), mv.q(), k).unwrap();
                        if lit != drop {
                            t.literal_mismatches += 1;
                            t.first_literal.get_or_insert_with(|| {
                                format!(
                                    "orders {:?} x={} y={} |A|={} |B|={} q={} k={k}: drop {drop}, formula {lit}",
                                    seq.orders(),
                                    mv.x,
                                    mv.y,
                                    mv.set_a.len(),
                                    mv.set_b.len(),
                                    mv.q()
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    t
}

fn extremal_endpoints(families: &[(BlockOrderSequence, Vec<Graph>)]) -> (bool, String) {
    let mut scans = 0usize;
    let mut min_bad = Vec::new();
    let mut max_bad = Vec::new();
    let mut shared_min = 0usize;
    let mut shared_gap = std::collections::BTreeSet::new();
    for (seq, _) in families {
        let n = seq.order();
        for k in 2..=n {
            let r = extremal_scan::<Value>(seq, k, common::FAMILY_LIMIT).unwrap();
            scans += 1;
            if !r.min_at_star_like {
                min_bad.push((seq.orders().to_vec(), k));
            }
            if !r.max_at_path_like {
                max_bad.push((seq.orders().to_vec(), k));
            }
            if !r.min_unique {
                shared_min += 1;
                shared_gap.insert(n - k);
            }
        }
    }
    (
        min_bad.is_empty() && max_bad.is_empty(),
        format!(
            "{} families, {scans} scans; min off star-like/bound: {}, max off path-like: {}; scans with a shared minimum: {shared_min} (n - k in {shared_gap:?})",
            families.len(),
            min_bad.len(),
            max_bad.len()
        ),
    )
}

fn buckley() -> (bool, String) {
    let mut trees = 0usize;
    let mut failures = 0usize;
    for n in 2..=9 {
        let seq = BlockOrderSequence::new(vec![2; n - 1]).unwrap();
        for t in swk_core::extremal::enumerate_family(&seq, common::FAMILY_LIMIT).unwrap() {
            trees += 1;
            failures += usize::from(!buckley_check(&t).unwrap().identity_holds);
        }
    }
    (
        failures == 0 && trees == 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47,
        format!("{trees} trees, {failures} failures"),
    )
}

fn betweenness(corpus: &[Graph]) -> (bool, String) {
    let mut checks = 0usize;
    let mut failures = 0usize;
    let mut non_integral = 0usize;
    for g in corpus.iter().filter(|g| g.order() <= 9) {
        let n = g.order();
        for k in 2..=5.min(n.saturating_sub(1)) {
            let all = oracle().betweenness_all::<Value>(g, k).unwrap();
            for (u, b) in all.iter().enumerate() {
                let fast: Value = steiner_betweenness_blockgraph(g, u, k).unwrap();
                checks += 1;
                non_integral += usize::from(!b.is_integer());
                failures += usize::from(!b.is_integer() || b.to_integer() != fast);
            }
        }
    }
    (failures == 0, format!("{checks} (graph, vertex, k) checks, {failures} mismatches, {non_integral} non-integral"))
}

fn problems() -> (bool, String, Vec<String>) {
    let mut table = Vec::new();
    let mut k2_ok = true;
    let mut rows = 0usize;
    let mut greedy_misses = 0usize;
    let mut caterpillar_misses = 0usize;
    for n in 2..=8 {
        for ds in DegreeSequence::all_for_trees(n) {
            for mode in [ProblemMode::Trees, ProblemMode::LineGraphs] {
                let kmax = if mode == ProblemMode::Trees { n } else { n - 1 };
                for k in 2..=kmax {
                    let r = problem_scan::<Value>(&ds, k, mode).unwrap();
                    rows += 1;
                    if k == 2 {
                        k2_ok &= r.greedy_is_min;
                    }
                    greedy_misses += usize::from(!r.greedy_is_min);
                    caterpillar_misses += usize::from(!r.caterpillar_is_max);
                    if !r.greedy_is_min || !r.caterpillar_is_max {
                        table.push(format!(
                            "    {:?} {:?} k={k}: trees={} min={} greedy={} max={} best caterpillar={}{}",
                            ds.degrees(),
                            mode,
                            r.rows.len(),
                            r.min_value,
                            r.greedy_value,
                            r.max_value,
                            r.caterpillar_value,
                            if r.greedy_is_min { "" } else { "  <-- greedy tree is not a minimizer" }
                        ));
                    }
                }
            }
        }
    }
    (
        k2_ok,
        format!(
            "{rows} (sequence, mode, k) rows; greedy not minimal in {greedy_misses}, no caterpillar maximal in {caterpillar_misses}; k=2 rows confirm greedy minimality: {k2_ok}"
        ),
        table,
    )
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn main() -> ExitCode {
    let corpus = common::corpus();
    let walk_families = common::families(8, 9, 9);
    let mut outcomes: Vec<Outcome> = Vec::new();
    let mut problem_table = Vec::new();

    thread::scope(|s| {
        let c1 = s.spawn(|| timed(figure_reproduction));
        let c2 = s.spawn(|| timed(|| four_way(&corpus)));
        let c3 = s.spawn(|| timed(|| edge_decomposition(&corpus)));
        let c4 = s.spawn(|| timed(closed_forms));
        let c5 = s.spawn(|| timed(|| gbs_walks(&walk_families)));
        let c6 = s.spawn(|| timed(|| extremal_endpoints(&walk_families)));
        let c7 = s.spawn(|| timed(buckley));
        let c8 = s.spawn(|| timed(|| betweenness(&corpus)));
        let c9 = s.spawn(|| timed(problems));

        let mut push = |id, title, ((passed, detail), elapsed): ((bool, String), Duration)| {
            outcomes.push(Outcome {
                id,
                title,
                passed,
                detail,
                elapsed,
            });
        };
        let ((ok, detail), t1) = c1.join().unwrap();
        push(
            "1",
            "illustration graph Steiner distance",
            ((ok && t1 < Duration::from_secs(1), detail), t1),
        );
        let ((ok, detail), t2) = c2.join().unwrap();
        push(
            "2",
            "four-way method agreement",
            ((ok && t2 < Duration::from_secs(300), detail), t2),
        );
        push("3", "edge decomposition", c3.join().unwrap());
        push("4", "closed forms", c4.join().unwrap());
        let (tally, t5) = c5.join().unwrap();
        push(
            "5",
            "GBS drop equals the difference formula; monotone",
            (
                (
                    tally.literal_mismatches == 0 && tally.increases == 0,
                    format!(
                        "{} proper moves, {} (move, k) checks; formula mismatches {} (first: {}); (move, k) pairs where SW_k increased {} (first: {})",
                        tally.moves,
                        tally.checks,
                        tally.literal_mismatches,
                        tally.first_literal.as_deref().unwrap_or("none"),
                        tally.increases,
                        tally.first_increase.as_deref().unwrap_or("none")
                    ),
                ),
                t5,
            ),
        );
        push(
            "5s",
            "GBS drop equals the middle-region count (supporting check)",
            (
                (
                    tally.exact_mismatches == 0,
                    format!(
                        "{} (move, k) checks, {} mismatches",
                        tally.checks, tally.exact_mismatches
                    ),
                ),
                t5,
            ),
        );
        push("6", "extremal endpoints", c6.join().unwrap());
        push("7", "Buckley identity", c7.join().unwrap());
        push("8", "betweenness identity", c8.join().unwrap());
        let ((ok, detail, table), t9) = c9.join().unwrap();
        problem_table = table;
        push("9", "greedy tree / caterpillar harness", ((ok, detail), t9));
    });

    let mut failed = false;
    for o in &outcomes {
        let known = KNOWN_FAILURES.contains(&o.id);
        let status = match (o.passed, known) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "FAIL (known)",
            (true, true) => "PASS (listed as known failure)",
        };
        failed |= o.passed == known;
        println!(
            "[{status}] criterion {} {}: {} ({:.2?})",
            o.id, o.title, o.detail, o.elapsed
        );
    }
    if !problem_table.is_empty() {
        println!("criterion 9 rows where a conjectured extremal tree misses:");
        for line in &problem_table {
            println!("{line}");
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
