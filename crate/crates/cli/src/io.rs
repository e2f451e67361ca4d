//! File formats: decimal CSV point lists and the JSON graph container.
//! Coordinates travel as decimal strings so the exact lattice ingestion is
//! lossless in both directions.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use yao_spanner::yao::{TiePolicy, YaoGraph};
use yao_spanner::{Error as CoreError, Metric, PointSet};

use crate::UsageError;

/// Read a point CSV: one `x,y` pair per line, optional `x,y` header,
/// node id = data line order.
pub fn read_points(path: &Path) -> Result<PointSet> {
    let raw = fs::read_to_string(path)
        .with_context(|| format!("cannot read point file {}", path.display()))?;
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut data_lines: Vec<usize> = Vec::new();
    for (lineno, line) in raw.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if lineno == 0 && line.eq_ignore_ascii_case("x,y") {
            continue;
        }
        let Some((x, y)) = line.split_once(',') else {
            bail!(UsageError(format!(
                "{}:{}: expected \"x,y\", got {line:?}",
                path.display(),
                lineno + 1
            )));
        };
        pairs.push((x.trim().to_string(), y.trim().to_string()));
        data_lines.push(lineno + 1);
    }
    if pairs.is_empty() {
        bail!(UsageError(format!(
            "{}: no points in file",
            path.display()
        )));
    }
    match PointSet::from_decimal_pairs(&pairs) {
        Ok(ps) => Ok(ps),
        Err(CoreError::CoincidentPoints { first, second }) => bail!(UsageError(format!(
            "{}: duplicate coordinates on lines {} and {}",
            path.display(),
            data_lines[first],
            data_lines[second]
        ))),
        Err(e) => bail!(UsageError(format!("{}: {e}", path.display()))),
    }
}

pub fn write_points(ps: &PointSet, path: &Path) -> Result<()> {
    let mut out = String::from("x,y\n");
    for id in 0..ps.len() {
        let (x, y) = ps.decimal_coord(id).expect("valid id");
        out.push_str(&x);
        out.push(',');
        out.push_str(&y);
        out.push('\n');
    }
    fs::write(path, out).with_context(|| format!("cannot write {}", path.display()))
}

/// JSON graph container; deserializing then rebuilding reproduces the
/// in-memory graph exactly.
#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    pub k: u32,
    pub metric: String,
    pub tie: String,
    pub points: Vec<[String; 2]>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &YaoGraph) -> GraphJson {
        let ps = g.points();
        let points = (0..ps.len())
            .map(|id| {
                let (x, y) = ps.decimal_coord(id).expect("valid id");
                [x, y]
            })
            .collect();
        let edges = g.edges().iter().map(|&(u, v)| [u, v]).collect();
        GraphJson {
            k: g.k(),
            metric: g.metric().as_str().to_string(),
            tie: g.tie().as_str().to_string(),
            points,
            edges,
        }
    }

    pub fn into_graph(self) -> Result<YaoGraph> {
        let pairs: Vec<(String, String)> = self
            .points
            .into_iter()
            .map(|[x, y]| (x, y))
            .collect();
        let ps = PointSet::from_decimal_pairs(&pairs)
            .map_err(|e| UsageError(format!("bad points in graph file: {e}")))?;
        let metric = Metric::parse(&self.metric)
            .map_err(|e| UsageError(format!("bad metric in graph file: {e}")))?;
        let tie = TiePolicy::parse(&self.tie)
            .map_err(|e| UsageError(format!("bad tie policy in graph file: {e}")))?;
        let edges = self.edges.into_iter().map(|[u, v]| (u, v)).collect();
        YaoGraph::from_parts(ps, self.k, metric, tie, edges)
            .map_err(|e| UsageError(format!("inconsistent graph file: {e}")).into())
    }
}

pub fn read_graph(path: &Path) -> Result<YaoGraph> {
    let raw = fs::read_to_string(path)
        .with_context(|| format!("cannot read graph file {}", path.display()))?;
    let parsed: GraphJson = serde_json::from_str(&raw)
        .map_err(|e| UsageError(format!("{}: invalid JSON: {e}", path.display())))?;
    parsed.into_graph()
}

pub fn write_graph(g: &YaoGraph, path: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(&GraphJson::from_graph(g))
        .expect("graph serializes");
    fs::write(path, json + "\n").with_context(|| format!("cannot write {}", path.display()))
}
