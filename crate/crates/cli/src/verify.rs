//! Verification runs: stretch vs. the applicable bound, planarity,
//! crossing-pair lemma bounds, and constructive path bounds, with a
//! machine-readable report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use yao_spanner::analysis::{
    bose_bound, check_planarity, check_quad_lemma, edge_cone, shortest_path_lengths,
    stretch_factor, BoundSpec,
};
use yao_spanner::paths::{
    crossing_path_factor, crossing_short_path, linf_edge_factor, linf_edge_short_path,
    truncated_path, TRUNCATED_PATH_FACTOR,
};
use yao_spanner::yao::YaoGraph;
use yao_spanner::{dist, dist2, Metric};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub summary: String,
    pub details: serde_json::Value,
}

#[derive(Serialize)]
pub struct Report {
    pub k: u32,
    pub metric: String,
    pub tie: String,
    pub nodes: usize,
    pub edges: usize,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl Report {
    pub fn text(&self) -> String {
        let mut out = format!(
            "graph: k={} metric={} tie={} nodes={} edges={}\n",
            self.k, self.metric, self.tie, self.nodes, self.edges
        );
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "info",
            };
            out.push_str(&format!("{tag:>4}  {:<12} {}\n", c.name, c.summary));
        }
        out.push_str(if self.pass { "result: PASS\n" } else { "result: FAIL\n" });
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Stretch,
    Planarity,
    LemmaBounds,
    PathBounds,
}

impl Check {
    pub const ALL: [Check; 4] = [
        Check::Stretch,
        Check::Planarity,
        Check::LemmaBounds,
        Check::PathBounds,
    ];

    pub fn parse(s: &str) -> Option<Check> {
        match s {
            "stretch" => Some(Check::Stretch),
            "planarity" => Some(Check::Planarity),
            "lemma-bounds" => Some(Check::LemmaBounds),
            "path-bounds" => Some(Check::PathBounds),
            _ => None,
        }
    }
}

pub fn run(g: &YaoGraph, checks: &[Check], companion: Option<&YaoGraph>) -> Report {
    let mut results = Vec::new();
    for check in checks {
        results.push(match check {
            Check::Stretch => stretch_check(g),
            Check::Planarity => planarity_check(g),
            Check::LemmaBounds => lemma_bounds_check(g),
            Check::PathBounds => path_bounds_check(g, companion),
        });
    }
    let pass = results.iter().all(|c| c.status != Status::Fail);
    Report {
        k: g.k(),
        metric: g.metric().as_str().to_string(),
        tie: g.tie().as_str().to_string(),
        nodes: g.node_count(),
        edges: g.edges().len(),
        checks: results,
        pass,
    }
}

fn stretch_check(g: &YaoGraph) -> CheckResult {
    let report = stretch_factor(g, g.metric());
    let bound = BoundSpec::for_graph(g.k(), g.metric());
    let bose = bose_bound(g.k()).ok();
    let measured = report.max_stretch;
    let (status, summary) = match &bound {
        Some(b) if measured <= b.value => (
            Status::Pass,
            format!("max stretch {measured:.6} <= bound {:.6}", b.value),
        ),
        Some(b) => (
            Status::Fail,
            format!("max stretch {measured:.6} exceeds bound {:.6}", b.value),
        ),
        None => (
            Status::Info,
            format!("max stretch {measured:.6}; no proven bound for this configuration"),
        ),
    };
    CheckResult {
        name: "stretch".into(),
        status,
        summary,
        details: serde_json::json!({
            "measured_max": measured,
            "bound": bound.map(|b| b.value),
            "cos_sin_bound": bose,
            "witness": report.witness,
            "connected": report.is_connected(),
        }),
    }
}

fn planarity_check(g: &YaoGraph) -> CheckResult {
    let crossings = check_planarity(g);
    let count = crossings.len();
    let sample: Vec<_> = crossings.iter().take(10).collect();
    if g.metric() == Metric::Linf {
        let status = if count == 0 { Status::Pass } else { Status::Fail };
        CheckResult {
            name: "planarity".into(),
            status,
            summary: format!("{count} properly crossing edge pairs"),
            details: serde_json::json!({"crossings": count, "sample": sample}),
        }
    } else {
        CheckResult {
            name: "planarity".into(),
            status: Status::Info,
            summary: format!("{count} crossing pairs (no planarity claim under l2)"),
            details: serde_json::json!({"crossings": count, "sample": sample}),
        }
    }
}

fn lemma_bounds_check(g: &YaoGraph) -> CheckResult {
    if g.k() != 4 || g.metric() != Metric::L2 {
        return CheckResult {
            name: "lemma-bounds".into(),
            status: Status::Info,
            summary: "crossing-pair bounds apply to k=4 l2 graphs only".into(),
            details: serde_json::Value::Null,
        };
    }
    let directed = |e: (usize, usize)| if g.has_edge(e.0, e.1) { e } else { (e.1, e.0) };
    let mut pairs = 0usize;
    let mut violations: Vec<String> = Vec::new();
    for (ue1, ue2) in check_planarity(g) {
        pairs += 1;
        let e1 = directed(ue1);
        let e2 = directed(ue2);
        if edge_cone(g, e1).unwrap() == edge_cone(g, e2).unwrap() {
            violations.push(format!("same-quadrant crossing {e1:?} x {e2:?}"));
            continue;
        }
        match check_quad_lemma(g, e1, e2) {
            Ok(true) => {}
            _ => {
                violations.push(format!("side-ratio bound failed on {e1:?} x {e2:?}"));
                continue;
            }
        }
        match crossing_short_path(g, e1, e2) {
            Ok(w) => {
                let (x, y) = (w.first(), w.last());
                let side_d2 = dist2(g.point(x).unwrap(), g.point(y).unwrap());
                let side = (side_d2 as f64).sqrt();
                if w.length(Metric::L2) > crossing_path_factor() * side
                    || w.max_hop_dist2() > side_d2
                {
                    violations.push(format!("crossing-path bound failed on {e1:?} x {e2:?}"));
                }
            }
            Err(e) => violations.push(format!("crossing path failed on {e1:?} x {e2:?}: {e}")),
        }
    }
    let status = if violations.is_empty() { Status::Pass } else { Status::Fail };
    CheckResult {
        name: "lemma-bounds".into(),
        status,
        summary: format!("{pairs} crossing pairs checked, {} violations", violations.len()),
        details: serde_json::json!({"crossing_pairs": pairs, "violations": violations}),
    }
}

fn path_bounds_check(g: &YaoGraph, companion: Option<&YaoGraph>) -> CheckResult {
    if g.k() != 4 || g.metric() != Metric::L2 {
        return CheckResult {
            name: "path-bounds".into(),
            status: Status::Info,
            summary: "path bounds apply to k=4 l2 graphs only".into(),
            details: serde_json::Value::Null,
        };
    }
    let n = g.node_count();
    let mut violations: Vec<String> = Vec::new();
    let mut queries = 0usize;
    if n >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..500.min(n * (n - 1)) {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n);
            while b == a {
                b = rng.gen_range(0..n);
            }
            queries += 1;
            match truncated_path(g, a, b) {
                Ok(w) => {
                    let pa = g.point(a).unwrap();
                    let pb = g.point(b).unwrap();
                    if w.length(Metric::L2) > TRUNCATED_PATH_FACTOR * dist(pa, pb, Metric::L2)
                        || w.max_hop_dist2() > dist2(pa, pb)
                    {
                        violations.push(format!("truncated-path bound failed on ({a},{b})"));
                    }
                }
                Err(e) => violations.push(format!("truncated path failed on ({a},{b}): {e}")),
            }
        }
    }
    let mut spanned_edges = 0usize;
    if let Some(ginf) = companion {
        let factor = linf_edge_factor();
        let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in ginf.edges() {
            by_source[a].push(b);
        }
        for (a, targets) in by_source.into_iter().enumerate() {
            if targets.is_empty() {
                continue;
            }
            let oracle = shortest_path_lengths(g, a, Metric::L2).unwrap();
            for b in targets {
                spanned_edges += 1;
                match linf_edge_short_path(g, a, b) {
                    Ok(w) => {
                        let direct = dist(g.point(a).unwrap(), g.point(b).unwrap(), Metric::L2);
                        let len = w.length(Metric::L2);
                        if len > factor * direct {
                            violations.push(format!("spanning-walk bound failed on ({a},{b})"));
                        }
                        if oracle[b] > len * (1.0 + 1e-9) {
                            violations
                                .push(format!("oracle beat spanning walk length on ({a},{b})"));
                        }
                    }
                    Err(e) => violations.push(format!("spanning walk failed on ({a},{b}): {e}")),
                }
            }
        }
    }
    let status = if violations.is_empty() { Status::Pass } else { Status::Fail };
    CheckResult {
        name: "path-bounds".into(),
        status,
        summary: format!(
            "{queries} truncated-path queries, {spanned_edges} companion edges, {} violations",
            violations.len()
        ),
        details: serde_json::json!({
            "truncated_path_queries": queries,
            "companion_edges": spanned_edges,
            "violations": violations,
        }),
    }
}
