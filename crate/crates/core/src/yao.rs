//! Directed Yao graph construction: Y_k under L2 for any k ≥ 1, and Y_4^∞
//! under L∞ with the counterclockwise-most tie rule.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{
    cone_of, cross, dist2, linf_dist, Metric, Point, PointSet, Quadrant,
};

/// Deterministic rule for choosing among equidistant cone candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TiePolicy {
    /// Smallest target id wins. Realizes "ties broken arbitrarily"
    /// reproducibly; valid for any k.
    LowestIndex,
    /// The candidate with maximal polar angle within the quadrant wins.
    /// Mandatory for Y_4^∞; defined only for k = 4, where cones span at most
    /// a quarter turn.
    ///
    /// This rule keeps Y_4^∞ plane for point sets in general position
    /// (including full integer grids, whose ties are exactly the
    /// coincident-square configuration the rule resolves). It is not a
    /// panacea: a point lying exactly on the boundary line of another
    /// point's empty square combined with an exact L∞ tie can still force a
    /// crossing, and no per-cone tie rule avoids that (see the
    /// `y4inf_planarity_needs_general_position` test).
    MostCounterclockwise,
}

impl TiePolicy {
    pub fn as_str(&self) -> &'static str {
        match self {
            TiePolicy::LowestIndex => "lowest_index",
            TiePolicy::MostCounterclockwise => "most_ccw",
        }
    }

    pub fn parse(s: &str) -> Result<TiePolicy> {
        match s {
            "lowest_index" => Ok(TiePolicy::LowestIndex),
            "most_ccw" => Ok(TiePolicy::MostCounterclockwise),
            other => Err(Error::DomainError(format!("unknown tie policy {other:?}"))),
        }
    }
}

/// Immutable directed Yao graph over a [`PointSet`].
#[derive(Clone, Debug, PartialEq)]
pub struct YaoGraph {
    points: PointSet,
    k: u32,
    metric: Metric,
    tie: TiePolicy,
    edges: BTreeSet<(usize, usize)>,
    /// out[node][cone] = chosen target, if the cone is nonempty.
    out: Vec<Vec<Option<usize>>>,
}

impl YaoGraph {
    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn tie(&self) -> TiePolicy {
        self.tie
    }

    pub fn node_count(&self) -> usize {
        self.points.len()
    }

    /// Directed edges, ordered by (source, target).
    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn has_undirected_edge(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    /// Target of the unique outgoing edge of `node` in `cone`, if any.
    pub fn out_in_cone(&self, node: usize, cone: usize) -> Option<usize> {
        self.out.get(node).and_then(|cones| *cones.get(cone)?)
    }

    pub fn point(&self, id: usize) -> Result<Point> {
        self.points.get(id)
    }

    /// Edge set with directions dropped and duplicates merged; pairs are
    /// normalized to (min, max).
    pub fn undirected_view(&self) -> BTreeSet<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect()
    }

    /// Assemble a graph from an explicit edge list (deserialization and
    /// hand-built test graphs). Validates ids, self-loops and the
    /// one-edge-per-cone structure, but does not check Yao minimality.
    pub fn from_parts(
        points: PointSet,
        k: u32,
        metric: Metric,
        tie: TiePolicy,
        edge_list: Vec<(usize, usize)>,
    ) -> Result<YaoGraph> {
        validate_config(&points, k, metric, tie)?;
        let n = points.len();
        let mut out = vec![vec![None; k as usize]; n];
        let mut edges = BTreeSet::new();
        for (u, v) in edge_list {
            if u >= n {
                return Err(Error::UnknownNode(u));
            }
            if v >= n {
                return Err(Error::UnknownNode(v));
            }
            if u == v {
                return Err(Error::InvalidPoints(format!("self-loop at node {u}")));
            }
            let cone = cone_of(points.get(u)?, points.get(v)?, k)?;
            if let Some(prev) = out[u][cone] {
                if prev != v {
                    return Err(Error::InvalidPoints(format!(
                        "node {u} has two outgoing edges ({prev}, {v}) in cone {cone}"
                    )));
                }
            }
            out[u][cone] = Some(v);
            edges.insert((u, v));
        }
        Ok(YaoGraph {
            points,
            k,
            metric,
            tie,
            edges,
            out,
        })
    }
}

fn validate_config(points: &PointSet, k: u32, metric: Metric, tie: TiePolicy) -> Result<()> {
    if points.is_empty() {
        return Err(Error::InvalidPoints("point set is empty".into()));
    }
    if k == 0 {
        return Err(Error::UnsupportedConfig("k must be >= 1".into()));
    }
    if metric == Metric::Linf && (k != 4 || tie != TiePolicy::MostCounterclockwise) {
        return Err(Error::UnsupportedConfig(
            "the L-infinity construction is defined only for k = 4 with the \
             most-counterclockwise tie rule"
                .into(),
        ));
    }
    if tie == TiePolicy::MostCounterclockwise && k != 4 {
        return Err(Error::UnsupportedConfig(
            "the most-counterclockwise tie rule is quadrant-based and requires k = 4".into(),
        ));
    }
    Ok(())
}

/// Exact distance comparison key under either metric.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum DistKey {
    L2(i128),
    Linf(i64),
}

fn dist_key(p: Point, q: Point, m: Metric) -> DistKey {
    match m {
        Metric::L2 => DistKey::L2(dist2(p, q)),
        Metric::Linf => DistKey::Linf(linf_dist(p, q)),
    }
}

/// True when `cand`'s direction from `origin` is strictly counterclockwise
/// of `best`'s. Both directions lie within one quadrant (span ≤ 90°), so the
/// exact cross-product sign decides.
fn more_ccw(origin: Point, best: Point, cand: Point) -> bool {
    cross(origin, best, cand) > 0
}

/// Build the directed Yao graph: per node and per nonempty cone, keep one
/// shortest edge, ties resolved by `tie`. Naive O(n²k) scan.
pub fn build_yao(points: PointSet, k: u32, metric: Metric, tie: TiePolicy) -> Result<YaoGraph> {
    validate_config(&points, k, metric, tie)?;
    let n = points.len();
    let mut out = vec![vec![None::<usize>; k as usize]; n];
    let mut edges = BTreeSet::new();
    for u in 0..n {
        let pu = points.get(u)?;
        let mut best: Vec<Option<(DistKey, usize)>> = vec![None; k as usize];
        for v in 0..n {
            if v == u {
                continue;
            }
            let pv = points.get(v)?;
            let cone = cone_of(pu, pv, k)?;
            let key = dist_key(pu, pv, metric);
            match &best[cone] {
                None => best[cone] = Some((key, v)),
                Some((cur_key, cur_v)) => {
                    if key < *cur_key {
                        best[cone] = Some((key, v));
                    } else if key == *cur_key {
                        let replace = match tie {
                            // v ascending, so the incumbent already has the
                            // lowest id.
                            TiePolicy::LowestIndex => false,
                            TiePolicy::MostCounterclockwise => {
                                more_ccw(pu, points.get(*cur_v)?, pv)
                            }
                        };
                        if replace {
                            best[cone] = Some((key, v));
                        }
                    }
                }
            }
        }
        for (cone, slot) in best.into_iter().enumerate() {
            if let Some((_, v)) = slot {
                out[u][cone] = Some(v);
                edges.insert((u, v));
            }
        }
    }
    Ok(YaoGraph {
        points,
        k,
        metric,
        tie,
        edges,
        out,
    })
}

/// Among candidates in one quadrant of `origin`, return the one whose
/// direction has maximal polar angle (the counterclockwise-most). Intended
/// for equidistant candidates, where the winner is unique because two
/// distinct points on one ray cannot tie in distance.
pub fn most_ccw_among(origin: Point, candidates: &[Point], quadrant: Quadrant) -> Result<Point> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let mut best: Option<Point> = None;
    for &c in candidates {
        if crate::geometry::quadrant_of(origin, c)? != quadrant {
            return Err(Error::CandidateOutsideQuadrant(c.id));
        }
        best = Some(match best {
            None => c,
            Some(b) if more_ccw(origin, b, c) => c,
            Some(b) => b,
        });
    }
    Ok(best.unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_integers(coords.to_vec()).unwrap()
    }

    /// Independent per-cone minimization over all candidates, used as the
    /// oracle for the construction tests.
    fn brute_edges(ps: &PointSet, k: u32, metric: Metric) -> BTreeSet<(usize, usize)> {
        let mut edges = BTreeSet::new();
        for u in 0..ps.len() {
            let pu = ps.get(u).unwrap();
            for cone in 0..k as usize {
                let mut cands: Vec<usize> = (0..ps.len())
                    .filter(|&v| v != u)
                    .filter(|&v| cone_of(pu, ps.get(v).unwrap(), k).unwrap() == cone)
                    .collect();
                cands.sort_by_key(|&v| (dist_key(pu, ps.get(v).unwrap(), metric), v));
                if let Some(&v) = cands.first() {
                    let d0 = dist_key(pu, ps.get(v).unwrap(), metric);
                    // keep the lowest-index minimizer
                    let winner = cands
                        .iter()
                        .copied()
                        .filter(|&w| dist_key(pu, ps.get(w).unwrap(), metric) == d0)
                        .min()
                        .unwrap();
                    edges.insert((u, winner));
                }
            }
        }
        edges
    }

    #[test]
    fn two_points_link_both_ways() {
        let g = build_yao(pts(&[(0, 0), (5, 1)]), 4, Metric::L2, TiePolicy::LowestIndex).unwrap();
        let expected: BTreeSet<_> = [(0, 1), (1, 0)].into_iter().collect();
        assert_eq!(g.edges(), &expected);
    }

    #[test]
    fn unit_square_l2_has_only_side_edges() {
        let ps = pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let g = build_yao(ps.clone(), 4, Metric::L2, TiePolicy::LowestIndex).unwrap();
        assert_eq!(g.edges().len(), 8);
        assert_eq!(g.edges(), &brute_edges(&ps, 4, Metric::L2));
        // no diagonals
        assert!(!g.has_undirected_edge(0, 2));
        assert!(!g.has_undirected_edge(1, 3));
        assert_eq!(g.undirected_view().len(), 4);
    }

    #[test]
    fn cone_minimization_picks_the_closer_candidate() {
        // (4,1) and (4,2) share Q1 of node 0; the closer one wins.
        let ps = pts(&[(0, 0), (4, 1), (4, 2)]);
        let g = build_yao(ps.clone(), 4, Metric::L2, TiePolicy::LowestIndex).unwrap();
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edges(), &brute_edges(&ps, 4, Metric::L2));
    }

    #[test]
    fn linf_requires_k4_and_ccw_ties() {
        let ps = pts(&[(0, 0), (5, 1)]);
        assert!(matches!(
            build_yao(ps.clone(), 6, Metric::Linf, TiePolicy::MostCounterclockwise),
            Err(Error::UnsupportedConfig(_))
        ));
        assert!(matches!(
            build_yao(ps.clone(), 4, Metric::Linf, TiePolicy::LowestIndex),
            Err(Error::UnsupportedConfig(_))
        ));
        assert!(matches!(
            build_yao(ps, 6, Metric::L2, TiePolicy::MostCounterclockwise),
            Err(Error::UnsupportedConfig(_))
        ));
    }

    #[test]
    fn linf_square_tie_breaks_toward_the_sides() {
        // All pairwise L∞ distances are 1; the CCW rule must select the four
        // sides and never a diagonal.
        let g = build_yao(
            pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]),
            4,
            Metric::Linf,
            TiePolicy::MostCounterclockwise,
        )
        .unwrap();
        let expected: BTreeSet<_> = [
            (0, 1),
            (0, 3),
            (1, 0),
            (1, 2),
            (2, 1),
            (2, 3),
            (3, 0),
            (3, 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(g.edges(), &expected);
    }

    #[test]
    fn most_ccw_examples() {
        let o = Point::new(0, 0, 0);
        let c = |x, y, id| Point::new(x, y, id);
        let winner = most_ccw_among(
            o,
            &[c(2, 1, 1), c(2, 2, 2), c(1, 2, 3)],
            Quadrant::Q1,
        )
        .unwrap();
        assert_eq!((winner.x, winner.y), (1, 2));
        let single = most_ccw_among(o, &[c(7, 3, 1)], Quadrant::Q1).unwrap();
        assert_eq!(single.id, 1);
        let q2 = most_ccw_among(o, &[c(-1, 2, 1), c(-2, 2, 2)], Quadrant::Q2).unwrap();
        assert_eq!((q2.x, q2.y), (-2, 2));
        assert!(matches!(
            most_ccw_among(o, &[], Quadrant::Q1),
            Err(Error::EmptyCandidates)
        ));
        assert!(matches!(
            most_ccw_among(o, &[c(1, 1, 1)], Quadrant::Q2),
            Err(Error::CandidateOutsideQuadrant(1))
        ));
    }

    #[test]
    fn determinism_and_outdegree() {
        let coords: Vec<(i64, i64)> = vec![
            (0, 0),
            (13, 4),
            (-7, 9),
            (-3, -12),
            (8, -5),
            (2, 17),
            (-15, -1),
            (6, 6),
        ];
        let a = build_yao(pts(&coords), 4, Metric::L2, TiePolicy::LowestIndex).unwrap();
        let b = build_yao(pts(&coords), 4, Metric::L2, TiePolicy::LowestIndex).unwrap();
        assert_eq!(a.edges(), b.edges());
        for u in 0..a.node_count() {
            let outdeg = a.edges().iter().filter(|&&(s, _)| s == u).count();
            assert!(outdeg <= 4);
            let nonempty = (0..4)
                .filter(|&c| a.out_in_cone(u, c).is_some())
                .count();
            assert_eq!(outdeg, nonempty);
        }
    }

    #[test]
    fn undirected_view_merges() {
        let ps = pts(&[(0, 0), (5, 1)]);
        let g = build_yao(ps, 4, Metric::L2, TiePolicy::LowestIndex).unwrap();
        let und = g.undirected_view();
        assert_eq!(und.len(), 1);
        assert!(und.contains(&(0, 1)));
    }

    #[test]
    fn from_parts_validates() {
        let ps = pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let g = YaoGraph::from_parts(
            ps.clone(),
            4,
            Metric::L2,
            TiePolicy::LowestIndex,
            vec![(0, 2), (1, 3)],
        )
        .unwrap();
        assert_eq!(g.edges().len(), 2);
        assert!(YaoGraph::from_parts(
            ps.clone(),
            4,
            Metric::L2,
            TiePolicy::LowestIndex,
            vec![(0, 9)]
        )
        .is_err());
        assert!(YaoGraph::from_parts(
            ps,
            4,
            Metric::L2,
            TiePolicy::LowestIndex,
            vec![(0, 1), (0, 2)] // (0,1) lies in Q4, (0,2) in Q1: distinct cones
        )
        .is_ok());
    }
}
