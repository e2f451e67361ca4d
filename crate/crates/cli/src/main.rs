//! `yao`: build Yao graphs, verify their spanner properties, construct the
//! certifying walks, and render everything as SVG.
//!
//! Exit codes: 0 success / all checks pass, 1 check failure or runtime
//! error, 2 usage or parse error.

mod io;
mod svg;
mod verify;

use std::fmt;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use yao_spanner::analysis::{bose_bound, theta_bound, y4_stretch_bound, Y4_INF_STRETCH_BOUND};
use yao_spanner::generate::{generate, Distribution};
use yao_spanner::paths::{
    directed_path, linf_edge_factor, linf_edge_short_path, quadrant_walk, truncated_path,
    Walk, TRUNCATED_PATH_FACTOR,
};
use yao_spanner::yao::{build_yao, TiePolicy, YaoGraph};
use yao_spanner::{dist, linf_dist, Metric, Quadrant};

/// Error class mapped to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Parser)]
#[command(
    name = "yao",
    version,
    about = "Yao graph construction and spanner verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistArg {
    Uniform,
    Grid,
    Convex,
    Cluster,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    L2,
    Linf,
}

#[derive(Clone, Copy, ValueEnum)]
enum TieArg {
    LowestIndex,
    MostCcw,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a seeded random point set as CSV.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "uniform")]
        dist: DistArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build a Yao graph from a point CSV and write it as JSON.
    Build {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum)]
        metric: MetricArg,
        /// Defaults to lowest-index for l2 and most-ccw for linf.
        #[arg(long, value_enum)]
        tie: Option<TieArg>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run verification checks against a graph file.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated subset of stretch,planarity,lemma-bounds,path-bounds.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// Companion Y_4^inf graph on the same points; enables the
        /// edge-spanning sweep inside path-bounds.
        #[arg(long)]
        companion: Option<PathBuf>,
        /// Write the JSON report here (text always goes to stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Construct a walk (p, pr, quadrant:I, linf-span) and print it as JSON.
    Path {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        kind: String,
        /// Y_4^inf graph holding the edge (from,to); required for linf-span.
        #[arg(long)]
        companion: Option<PathBuf>,
        /// Render the graph with the walk highlighted.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Render a graph (and optional walk JSON overlay) as SVG.
    Svg {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Walk JSON produced by `yao path` (its nodes are highlighted).
        #[arg(long)]
        overlay: Option<PathBuf>,
    },
    /// Print the proven stretch bounds for a cone count or cone angle.
    Bound {
        #[arg(long)]
        k: Option<u32>,
        /// Cone angle in radians, 0 < theta < pi/3.
        #[arg(long)]
        theta: Option<f64>,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<UsageError>() {
                2
            } else {
                1
            }
        }
    });
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Gen { n, dist, seed, out } => {
            let dist = match dist {
                DistArg::Uniform => Distribution::Uniform,
                DistArg::Grid => Distribution::Grid,
                DistArg::Convex => Distribution::Convex,
                DistArg::Cluster => Distribution::Cluster,
            };
            let ps = generate(dist, n, seed).map_err(|e| UsageError(e.to_string()))?;
            io::write_points(&ps, &out)?;
            Ok(0)
        }
        Cmd::Build {
            input,
            k,
            metric,
            tie,
            out,
        } => {
            let ps = io::read_points(&input)?;
            let metric = match metric {
                MetricArg::L2 => Metric::L2,
                MetricArg::Linf => Metric::Linf,
            };
            let tie = match tie {
                Some(TieArg::LowestIndex) => TiePolicy::LowestIndex,
                Some(TieArg::MostCcw) => TiePolicy::MostCounterclockwise,
                None => match metric {
                    Metric::L2 => TiePolicy::LowestIndex,
                    Metric::Linf => TiePolicy::MostCounterclockwise,
                },
            };
            let g = build_yao(ps, k, metric, tie).map_err(|e| UsageError(e.to_string()))?;
            io::write_graph(&g, &out)?;
            Ok(0)
        }
        Cmd::Verify {
            graph,
            checks,
            companion,
            json,
        } => {
            let g = io::read_graph(&graph)?;
            let selected = match checks {
                None => verify::Check::ALL.to_vec(),
                Some(names) => {
                    let mut v = Vec::new();
                    for name in names {
                        v.push(verify::Check::parse(&name).ok_or_else(|| {
                            UsageError(format!("unknown check {name:?}"))
                        })?);
                    }
                    v
                }
            };
            let companion_graph = match companion {
                Some(p) => Some(load_companion(&g, &p)?),
                None => None,
            };
            let report = verify::run(&g, &selected, companion_graph.as_ref());
            print!("{}", report.text());
            if let Some(path) = json {
                std::fs::write(&path, serde_json::to_string_pretty(&report)? + "\n")?;
            }
            Ok(if report.pass { 0 } else { 1 })
        }
        Cmd::Path {
            graph,
            from,
            to,
            kind,
            companion,
            svg: svg_out,
        } => {
            let g = io::read_graph(&graph)?;
            let report = run_path(&g, from, to, &kind, companion.as_deref())?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            if let Some(path) = svg_out {
                std::fs::write(&path, svg::render(&g, Some(&report.nodes)))?;
            }
            Ok(if report.pass { 0 } else { 1 })
        }
        Cmd::Svg {
            graph,
            out,
            overlay,
        } => {
            let g = io::read_graph(&graph)?;
            let nodes: Option<Vec<usize>> = match overlay {
                Some(p) => {
                    let raw = std::fs::read_to_string(&p)?;
                    let v: serde_json::Value = serde_json::from_str(&raw)
                        .map_err(|e| UsageError(format!("bad overlay JSON: {e}")))?;
                    let nodes = v
                        .get("nodes")
                        .and_then(|n| n.as_array())
                        .ok_or_else(|| UsageError("overlay JSON has no nodes array".into()))?
                        .iter()
                        .map(|x| x.as_u64().map(|u| u as usize))
                        .collect::<Option<Vec<usize>>>()
                        .ok_or_else(|| UsageError("overlay nodes must be ids".into()))?;
                    for &id in &nodes {
                        if id >= g.node_count() {
                            bail!(UsageError(format!("overlay node {id} not in graph")));
                        }
                    }
                    Some(nodes)
                }
                None => None,
            };
            std::fs::write(&out, svg::render(&g, nodes.as_deref()))?;
            Ok(0)
        }
        Cmd::Bound { k, theta } => run_bound(k, theta),
    }
}

fn load_companion(g: &YaoGraph, path: &std::path::Path) -> Result<YaoGraph> {
    let companion = io::read_graph(path)?;
    if companion.points() != g.points() {
        bail!(UsageError(
            "companion graph is built on a different point set".into()
        ));
    }
    if companion.metric() != Metric::Linf || companion.k() != 4 {
        bail!(UsageError("companion graph must be a Y_4^inf (k=4, linf) graph".into()));
    }
    Ok(companion)
}

#[derive(Serialize)]
struct HopJson {
    from: usize,
    to: usize,
    forward: bool,
    length: f64,
}

#[derive(Serialize)]
struct WalkReport {
    kind: String,
    from: usize,
    to: usize,
    nodes: Vec<usize>,
    hops: Vec<HopJson>,
    total: f64,
    direct: f64,
    bound_name: Option<String>,
    bound_value: Option<f64>,
    pass: bool,
}

fn walk_report(kind: &str, from: usize, to: usize, w: &Walk<'_>, metric: Metric) -> WalkReport {
    let g = w.graph();
    let unscale = g.points().scale_divisor();
    let hops = (0..w.hop_count())
        .map(|i| {
            let (u, v, forward) = w.hop(i);
            HopJson {
                from: u,
                to: v,
                forward,
                length: dist(g.point(u).unwrap(), g.point(v).unwrap(), metric) / unscale,
            }
        })
        .collect();
    WalkReport {
        kind: kind.to_string(),
        from,
        to,
        nodes: w.nodes().to_vec(),
        hops,
        total: w.length(metric) / unscale,
        direct: dist(g.point(from).unwrap(), g.point(to).unwrap(), metric) / unscale,
        bound_name: None,
        bound_value: None,
        pass: true,
    }
}

fn run_path(
    g: &YaoGraph,
    from: usize,
    to: usize,
    kind: &str,
    companion: Option<&std::path::Path>,
) -> Result<WalkReport> {
    g.point(from).map_err(|e| UsageError(e.to_string()))?;
    g.point(to).map_err(|e| UsageError(e.to_string()))?;
    let metric = g.metric();
    let unscale = g.points().scale_divisor();
    match kind {
        "p" => {
            let w = directed_path(g, from, to)?;
            let mut r = walk_report(kind, from, to, &w, metric);
            // containment in the square centered at the target through the source
            let radius = linf_dist(g.point(from).unwrap(), g.point(to).unwrap());
            let contained = w
                .nodes()
                .iter()
                .all(|&u| linf_dist(g.point(u).unwrap(), g.point(to).unwrap()) <= radius);
            r.bound_name = Some("target-square containment".into());
            r.pass = contained;
            Ok(r)
        }
        "pr" => {
            let w = truncated_path(g, from, to)?;
            let mut r = walk_report(kind, from, to, &w, metric);
            let direct = dist(g.point(from).unwrap(), g.point(to).unwrap(), metric) / unscale;
            r.bound_name = Some("sqrt(2) * direct".into());
            r.bound_value = Some(TRUNCATED_PATH_FACTOR * direct);
            r.pass = g.metric() != Metric::L2 || r.total <= TRUNCATED_PATH_FACTOR * direct;
            Ok(r)
        }
        "linf-span" => {
            let companion_path = companion.ok_or_else(|| {
                UsageError("kind linf-span requires --companion <y4inf-graph.json>".into())
            })?;
            let companion = load_companion(g, companion_path)?;
            if g.metric() != Metric::L2 || g.k() != 4 {
                bail!(UsageError("linf-span runs on a k=4 l2 graph".into()));
            }
            if !companion.has_edge(from, to) {
                bail!(UsageError(format!(
                    "({from},{to}) is not a directed edge of the companion graph"
                )));
            }
            let w = linf_edge_short_path(g, from, to)?;
            let mut r = walk_report(kind, from, to, &w, Metric::L2);
            r.bound_name = Some("(29 + 23*sqrt(2)) * direct".into());
            r.bound_value = Some(linf_edge_factor() * r.direct);
            r.pass = r.total <= linf_edge_factor() * r.direct;
            Ok(r)
        }
        other => {
            if let Some(idx) = other.strip_prefix("quadrant:") {
                let i: u8 = idx
                    .parse()
                    .map_err(|_| UsageError(format!("bad quadrant index {idx:?}")))?;
                let q = Quadrant::from_index(i).map_err(|e| UsageError(e.to_string()))?;
                let w = quadrant_walk(g, from, q, |n| n == to)?;
                let mut r = walk_report(other, from, to, &w, metric);
                r.pass = true;
                Ok(r)
            } else {
                bail!(UsageError(format!(
                    "unknown path kind {other:?}; use p, pr, quadrant:I or linf-span"
                )))
            }
        }
    }
}

#[derive(Serialize)]
struct BoundReport {
    k: Option<u32>,
    theta: Option<f64>,
    bounds: serde_json::Value,
}

fn run_bound(k: Option<u32>, theta: Option<f64>) -> Result<i32> {
    let report = match (k, theta) {
        (Some(_), Some(_)) | (None, None) => {
            bail!(UsageError("pass exactly one of --k or --theta".into()))
        }
        (Some(4), None) => BoundReport {
            k: Some(4),
            theta: None,
            bounds: serde_json::json!({
                "y4inf_linf_stretch": Y4_INF_STRETCH_BOUND,
                "y4_l2_stretch": y4_stretch_bound(),
            }),
        },
        (Some(k), None) => {
            let theta_k = std::f64::consts::TAU / k as f64;
            let bounds = match k {
                0 | 1 => serde_json::json!({"note": "no spanner bound"}),
                2 | 3 => serde_json::json!({"note": "not a spanner (known counterexamples)"}),
                5 | 6 => serde_json::json!({"note": "open problem; no proven bound"}),
                _ => serde_json::json!({
                    "theta_bound": theta_bound(theta_k).map_err(|e| UsageError(e.to_string()))?,
                    "cos_sin_bound": bose_bound(k).ok(),
                }),
            };
            BoundReport {
                k: Some(k),
                theta: Some(theta_k),
                bounds,
            }
        }
        (None, Some(t)) => BoundReport {
            k: None,
            theta: Some(t),
            bounds: serde_json::json!({
                "theta_bound": theta_bound(t).map_err(|e| UsageError(e.to_string()))?,
            }),
        },
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(0)
}
