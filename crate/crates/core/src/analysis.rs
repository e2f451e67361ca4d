//! Oracle-grade verification: exact shortest paths on the undirected view,
//! all-pairs stretch reports, planarity checking, closed-form stretch bounds,
//! and the geometric property checkers used as test oracles.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use crate::error::{Error, Result};
use crate::geometry::{
    cone_of, dist, dist2, properly_cross, Metric, Segment,
};
use crate::paths::Walk;
use crate::yao::YaoGraph;

/// Worst-case stretch of Y_4^∞ under the L∞ metric.
pub const Y4_INF_STRETCH_BOUND: f64 = 8.0;

/// Worst-case stretch of Y_4 under L2: 8(29 + 23√2) ≈ 492.2153.
pub fn y4_stretch_bound() -> f64 {
    8.0 * (29.0 + 23.0 * std::f64::consts::SQRT_2)
}

/// Stretch bound for cones of angle θ, valid for 0 < θ < π/3:
/// t = (1 + √(2 − 2cos θ)) / (2cos θ − 1). Monotone increasing on the domain;
/// the denominator vanishes at θ = π/3.
pub fn theta_bound(theta: f64) -> Result<f64> {
    if !theta.is_finite() || theta <= 0.0 || theta >= std::f64::consts::FRAC_PI_3 {
        return Err(Error::DomainError(format!(
            "theta = {theta} outside the open interval (0, pi/3)"
        )));
    }
    let c = theta.cos();
    Ok((1.0 + (2.0 - 2.0 * c).sqrt()) / (2.0 * c - 1.0))
}

/// The older cone bound 1/(cos 2π/k − sin 2π/k), valid for k ≥ 9. Exposed
/// alongside [`theta_bound`] so callers can report both.
pub fn bose_bound(k: u32) -> Result<f64> {
    if k < 9 {
        return Err(Error::DomainError(format!(
            "the cos-sin bound requires k >= 9, got {k}"
        )));
    }
    let theta = std::f64::consts::TAU / k as f64;
    Ok(1.0 / (theta.cos() - theta.sin()))
}

/// A theoretical stretch constant attached to a graph configuration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundKind {
    /// Y_4^∞ under L∞: 8.
    Y4Inf,
    /// Y_4 under L2: 8(29 + 23√2).
    Y4,
    /// Y_k under L2 with cone angle θ = 2π/k, k ≥ 7.
    Theta { theta: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundSpec {
    pub kind: BoundKind,
    pub value: f64,
}

impl BoundSpec {
    pub fn y4_inf() -> BoundSpec {
        BoundSpec {
            kind: BoundKind::Y4Inf,
            value: Y4_INF_STRETCH_BOUND,
        }
    }

    pub fn y4() -> BoundSpec {
        BoundSpec {
            kind: BoundKind::Y4,
            value: y4_stretch_bound(),
        }
    }

    pub fn theta(theta: f64) -> Result<BoundSpec> {
        Ok(BoundSpec {
            kind: BoundKind::Theta { theta },
            value: theta_bound(theta)?,
        })
    }

    /// The proven bound for a (k, metric) configuration, when one exists.
    pub fn for_graph(k: u32, metric: Metric) -> Option<BoundSpec> {
        match (k, metric) {
            (4, Metric::Linf) => Some(BoundSpec::y4_inf()),
            (4, Metric::L2) => Some(BoundSpec::y4()),
            (k, Metric::L2) if k >= 7 => {
                BoundSpec::theta(std::f64::consts::TAU / k as f64).ok()
            }
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
struct HeapEntry {
    cost: f64,
    node: usize,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed for a min-heap
        other
            .cost
            .partial_cmp(&self.cost)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn undirected_adjacency(g: &YaoGraph, m: Metric) -> Vec<Vec<(usize, f64)>> {
    let mut adj = vec![Vec::new(); g.node_count()];
    for &(u, v) in &g.undirected_view() {
        let w = dist(g.point(u).unwrap(), g.point(v).unwrap(), m);
        adj[u].push((v, w));
        adj[v].push((u, w));
    }
    adj
}

fn dijkstra(adj: &[Vec<(usize, f64)>], src: usize) -> (Vec<f64>, Vec<usize>) {
    let n = adj.len();
    let mut distv = vec![f64::INFINITY; n];
    let mut parent = vec![usize::MAX; n];
    let mut heap = BinaryHeap::new();
    distv[src] = 0.0;
    heap.push(HeapEntry {
        cost: 0.0,
        node: src,
    });
    while let Some(HeapEntry { cost, node }) = heap.pop() {
        if cost > distv[node] {
            continue;
        }
        for &(next, w) in &adj[node] {
            let cand = cost + w;
            if cand < distv[next] {
                distv[next] = cand;
                parent[next] = node;
                heap.push(HeapEntry {
                    cost: cand,
                    node: next,
                });
            }
        }
    }
    (distv, parent)
}

/// Exact single-pair shortest path on the undirected view, with per-edge
/// weight `dist(·,·,m)`. `None` when the pair is disconnected.
pub fn shortest_path<'g>(
    g: &'g YaoGraph,
    u: usize,
    v: usize,
    m: Metric,
) -> Result<Option<(f64, Walk<'g>)>> {
    g.point(u)?;
    g.point(v)?;
    let adj = undirected_adjacency(g, m);
    let (distv, parent) = dijkstra(&adj, u);
    if distv[v].is_infinite() {
        return Ok(None);
    }
    let mut nodes = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        nodes.push(cur);
    }
    nodes.reverse();
    Ok(Some((distv[v], Walk::new(g, nodes)?)))
}

/// All shortest-path lengths from `src`; `f64::INFINITY` marks unreachable
/// nodes.
pub fn shortest_path_lengths(g: &YaoGraph, src: usize, m: Metric) -> Result<Vec<f64>> {
    g.point(src)?;
    let adj = undirected_adjacency(g, m);
    Ok(dijkstra(&adj, src).0)
}

/// Per-pair and worst-case dilation of the undirected graph under `metric`.
#[derive(Clone, Debug)]
pub struct StretchReport {
    pub metric: Metric,
    /// (u, v) with u < v → shortest-path length / dist(u, v). Unreachable
    /// pairs carry `f64::INFINITY`.
    pub per_pair: BTreeMap<(usize, usize), f64>,
    pub max_stretch: f64,
    pub witness: Option<(usize, usize)>,
}

impl StretchReport {
    pub fn is_connected(&self) -> bool {
        self.max_stretch.is_finite()
    }
}

/// All-pairs stretch via one Dijkstra per source.
pub fn stretch_factor(g: &YaoGraph, metric: Metric) -> StretchReport {
    let n = g.node_count();
    let adj = undirected_adjacency(g, metric);
    let mut per_pair = BTreeMap::new();
    let mut max_stretch = 1.0f64;
    let mut witness = None;
    for u in 0..n {
        let (distv, _) = dijkstra(&adj, u);
        for v in u + 1..n {
            let direct = dist(g.point(u).unwrap(), g.point(v).unwrap(), metric);
            let ratio = distv[v] / direct;
            per_pair.insert((u, v), ratio);
            if witness.is_none() || ratio > max_stretch {
                max_stretch = ratio;
                witness = Some((u, v));
            }
        }
    }
    if n < 2 {
        max_stretch = 1.0;
    }
    StretchReport {
        metric,
        per_pair,
        max_stretch,
        witness,
    }
}

/// Every properly crossing pair of undirected edges; the empty list certifies
/// a plane straight-line graph. Y_4^∞ instances must always return empty;
/// Euclidean Y_4 instances may not.
pub fn check_planarity(g: &YaoGraph) -> Vec<((usize, usize), (usize, usize))> {
    let edges: Vec<(usize, usize)> = g.undirected_view().into_iter().collect();
    let seg = |e: (usize, usize)| {
        Segment::new(g.point(e.0).unwrap(), g.point(e.1).unwrap()).unwrap()
    };
    let mut crossings = Vec::new();
    for i in 0..edges.len() {
        let s1 = seg(edges[i]);
        for j in i + 1..edges.len() {
            if properly_cross(s1, seg(edges[j])) {
                crossings.push((edges[i], edges[j]));
            }
        }
    }
    crossings
}

/// Cone index (under the graph's k) of a directed edge at its source.
pub fn edge_cone(g: &YaoGraph, e: (usize, usize)) -> Result<usize> {
    cone_of(g.point(e.0)?, g.point(e.1)?, g.k())
}

/// Shrink inequality |bc| ≤ |ab| − |ac|/t(θ) for a triangle with |ac| ≤ |ab|
/// and ∠bac ≤ θ < π/3, checked with 1e-12 relative tolerance. Precondition
/// violations are errors, not `false`.
pub fn check_shrink_lemma(
    a: (f64, f64),
    b: (f64, f64),
    c: (f64, f64),
    theta: f64,
) -> Result<bool> {
    let t = theta_bound(theta)?;
    let ab = hypot(a, b);
    let ac = hypot(a, c);
    let bc = hypot(b, c);
    if ab == 0.0 {
        return Err(Error::DegenerateInput("a and b coincide".into()));
    }
    if ac > ab {
        return Err(Error::DomainError("|ac| must not exceed |ab|".into()));
    }
    if ac > 0.0 {
        let cos_alpha = (((b.0 - a.0) * (c.0 - a.0)) + ((b.1 - a.1) * (c.1 - a.1))) / (ab * ac);
        let alpha = cos_alpha.clamp(-1.0, 1.0).acos();
        // 1e-9 slack absorbs the float round-trip of sampled rotations.
        if alpha > theta + 1e-9 {
            return Err(Error::DomainError(format!(
                "angle bac = {alpha} exceeds theta = {theta}"
            )));
        }
    }
    Ok(bc <= ab - ac / t + 1e-12 * ab)
}

/// Crossing-diagonal inequality for a nondegenerate convex quadrilateral
/// abcd (in order): |ac| + |bd| strictly exceeds both sums of opposite
/// sides. Degenerate or nonconvex input is an error.
pub fn check_quad_proposition(
    a: (f64, f64),
    b: (f64, f64),
    c: (f64, f64),
    d: (f64, f64),
) -> Result<bool> {
    let cross2 = |o: (f64, f64), p: (f64, f64), q: (f64, f64)| {
        (p.0 - o.0) * (q.1 - o.1) - (p.1 - o.1) * (q.0 - o.0)
    };
    let turns = [
        cross2(a, b, c),
        cross2(b, c, d),
        cross2(c, d, a),
        cross2(d, a, b),
    ];
    if turns.iter().any(|&t| t == 0.0)
        || !(turns.iter().all(|&t| t > 0.0) || turns.iter().all(|&t| t < 0.0))
    {
        return Err(Error::DegenerateInput(
            "abcd is not a nondegenerate convex quadrilateral".into(),
        ));
    }
    let diag = hypot(a, c) + hypot(b, d);
    Ok(diag > hypot(a, b) + hypot(c, d) && diag > hypot(b, c) + hypot(d, a))
}

/// Law-of-Cosines trichotomy: the comparison of |ac|² against |ab|² + |bc|²
/// agrees with the comparison of ∠abc against π/2. The two routes are
/// computed independently (squared lengths vs. `acos` of the normalized dot
/// product); a 1e-12 relative band around either boundary counts as
/// agreement.
pub fn check_triangle_trichotomy(
    a: (f64, f64),
    b: (f64, f64),
    c: (f64, f64),
) -> Result<bool> {
    let ab = hypot(a, b);
    let bc = hypot(b, c);
    if ab == 0.0 || bc == 0.0 {
        return Err(Error::DegenerateInput(
            "triangle has coincident vertices".into(),
        ));
    }
    let lhs = hypot(a, c).powi(2);
    let rhs = ab * ab + bc * bc;
    let scale = lhs.max(rhs);
    let squared_sign = if (lhs - rhs).abs() <= 1e-12 * scale {
        0
    } else if lhs < rhs {
        -1
    } else {
        1
    };
    let cosang = (((a.0 - b.0) * (c.0 - b.0)) + ((a.1 - b.1) * (c.1 - b.1))) / (ab * bc);
    let angle = cosang.clamp(-1.0, 1.0).acos();
    let angle_sign = if (angle - std::f64::consts::FRAC_PI_2).abs() <= 1e-12 {
        0
    } else if angle < std::f64::consts::FRAC_PI_2 {
        -1
    } else {
        1
    };
    Ok(squared_sign == angle_sign || squared_sign == 0 || angle_sign == 0)
}

/// Shortest-side bounds for two properly crossing Y_4 edges: the shortest
/// side of the quadrilateral acbd is (i) at most the longer diagonal divided
/// by √2 and (ii) strictly shorter than both diagonals. Exact on the lattice.
pub fn check_quad_lemma(g: &YaoGraph, ab: (usize, usize), cd: (usize, usize)) -> Result<bool> {
    if !g.has_edge(ab.0, ab.1) {
        return Err(Error::MissingEdge(ab.0, ab.1));
    }
    if !g.has_edge(cd.0, cd.1) {
        return Err(Error::MissingEdge(cd.0, cd.1));
    }
    let pa = g.point(ab.0)?;
    let pb = g.point(ab.1)?;
    let pc = g.point(cd.0)?;
    let pd = g.point(cd.1)?;
    if !properly_cross(Segment::new(pa, pb)?, Segment::new(pc, pd)?) {
        return Err(Error::NotCrossing);
    }
    let sides = [
        dist2(pa, pc),
        dist2(pc, pb),
        dist2(pb, pd),
        dist2(pd, pa),
    ];
    let min_side = *sides.iter().min().unwrap();
    let diag_ab = dist2(pa, pb);
    let diag_cd = dist2(pc, pd);
    let ratio_ok = 2 * min_side <= diag_ab.max(diag_cd);
    let strict_ok = min_side < diag_ab && min_side < diag_cd;
    Ok(ratio_ok && strict_ok)
}

fn hypot(p: (f64, f64), q: (f64, f64)) -> f64 {
    ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt()
}

/// Exact squared-distance helper for sweeps over crossing pairs.
pub fn node_dist2(g: &YaoGraph, u: usize, v: usize) -> Result<i128> {
    Ok(dist2(g.point(u)?, g.point(v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yao::{build_yao, TiePolicy};
    use crate::PointSet;

    fn y4(coords: &[(i64, i64)]) -> YaoGraph {
        build_yao(
            PointSet::from_integers(coords.to_vec()).unwrap(),
            4,
            Metric::L2,
            TiePolicy::LowestIndex,
        )
        .unwrap()
    }

    #[test]
    fn shortest_path_basics() {
        let g = y4(&[(0, 0), (3, 4)]);
        let (len, w) = shortest_path(&g, 0, 1, Metric::L2).unwrap().unwrap();
        assert_eq!(len, 5.0);
        assert_eq!(w.nodes(), &[0, 1]);
        let (zero, w0) = shortest_path(&g, 1, 1, Metric::L2).unwrap().unwrap();
        assert_eq!(zero, 0.0);
        assert_eq!(w0.nodes(), &[1]);
    }

    #[test]
    fn unit_square_opposite_corners() {
        let g = y4(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let (len, w) = shortest_path(&g, 0, 2, Metric::L2).unwrap().unwrap();
        assert_eq!(len, 2.0);
        assert_eq!(w.nodes().len(), 3);
    }

    #[test]
    fn stretch_reports() {
        let g = y4(&[(0, 0), (3, 4)]);
        let r = stretch_factor(&g, Metric::L2);
        assert_eq!(r.max_stretch, 1.0);
        assert_eq!(r.witness, Some((0, 1)));

        // collinear equally spaced: chain edges only, stretch exactly 1
        let chain = y4(&[(0, 0), (2, 0), (4, 0), (6, 0), (8, 0)]);
        let rc = stretch_factor(&chain, Metric::L2);
        assert_eq!(rc.max_stretch, 1.0);
        assert!(rc.per_pair.values().all(|&v| v == 1.0));
    }

    #[test]
    fn disconnected_graph_marks_infinity() {
        // Hand-built: two nodes, no edges.
        let ps = PointSet::from_integers(vec![(0, 0), (9, 9)]).unwrap();
        let g = crate::yao::YaoGraph::from_parts(ps, 4, Metric::L2, TiePolicy::LowestIndex, vec![])
            .unwrap();
        assert!(shortest_path(&g, 0, 1, Metric::L2).unwrap().is_none());
        let r = stretch_factor(&g, Metric::L2);
        assert!(r.max_stretch.is_infinite());
        assert!(!r.is_connected());
    }

    #[test]
    fn planarity_reports_hand_built_crossing() {
        let ps = PointSet::from_integers(vec![(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        let g = crate::yao::YaoGraph::from_parts(
            ps,
            4,
            Metric::L2,
            TiePolicy::LowestIndex,
            vec![(0, 2), (1, 3)],
        )
        .unwrap();
        let crossings = check_planarity(&g);
        assert_eq!(crossings, vec![((0, 2), (1, 3))]);
    }

    #[test]
    fn y4inf_instances_are_planar() {
        use crate::generate::{generate, Distribution};
        for dist in [
            Distribution::Uniform,
            Distribution::GridJitter,
            Distribution::Convex,
        ] {
            for seed in 0..12u64 {
                let ps = generate(dist, 60, seed).unwrap();
                let g = build_yao(ps, 4, Metric::Linf, TiePolicy::MostCounterclockwise).unwrap();
                assert!(
                    check_planarity(&g).is_empty(),
                    "{dist:?} seed {seed} not planar"
                );
            }
        }
        // Full integer grids carry maximal L∞ ties in the configuration the
        // counterclockwise rule is designed for; they stay planar.
        for m in 2..=20i64 {
            let grid: Vec<(i64, i64)> = (0..m)
                .flat_map(|y| (0..m).map(move |x| (x, y)))
                .collect();
            let g = build_yao(
                PointSet::from_integers(grid).unwrap(),
                4,
                Metric::Linf,
                TiePolicy::MostCounterclockwise,
            )
            .unwrap();
            assert!(check_planarity(&g).is_empty(), "{m}x{m} grid not planar");
        }
    }

    /// The plane-graph guarantee needs general position: with a node exactly
    /// on the boundary line of another node's empty square plus an exact L∞
    /// tie, two forced/tied choices can cross. This pins the known minimal
    /// degenerate configuration so the limitation stays visible.
    #[test]
    fn y4inf_planarity_needs_general_position() {
        let ps =
            PointSet::from_integers(vec![(42, 33), (57, 13), (55, 38), (42, 27)]).unwrap();
        let g = build_yao(ps, 4, Metric::Linf, TiePolicy::MostCounterclockwise).unwrap();
        // node 2 = (55,38) ties at L∞ distance 13 between nodes 0 and 3 and
        // the counterclockwise-most choice (node 3) crosses the forced edge
        // 0 -> 1.
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(2, 3));
        assert_eq!(check_planarity(&g), vec![((0, 1), (2, 3))]);
    }

    #[test]
    fn theta_bound_values_and_domain() {
        // frozen from a 30-digit evaluation of the closed form
        let t7 = theta_bound(2.0 * std::f64::consts::PI / 7.0).unwrap();
        assert!((t7 - 7.562436128822012).abs() < 1e-9);
        let t8 = theta_bound(std::f64::consts::FRAC_PI_4).unwrap();
        assert!((t8 - 4.261972627395669).abs() < 1e-9);
        assert!(theta_bound(std::f64::consts::FRAC_PI_3).is_err());
        assert!(theta_bound(0.0).is_err());
        assert!(theta_bound(-0.5).is_err());
        // monotone increasing on the domain
        let mut prev = 0.0;
        for i in 1..100 {
            let th = i as f64 * std::f64::consts::FRAC_PI_3 / 100.0;
            let t = theta_bound(th).unwrap();
            assert!(t > prev);
            prev = t;
        }
        let b9 = bose_bound(9).unwrap();
        assert!((b9 - 8.113140441403066).abs() < 1e-9);
        assert!(bose_bound(8).is_err());
    }

    #[test]
    fn bound_spec_selection() {
        assert_eq!(BoundSpec::for_graph(4, Metric::Linf).unwrap().value, 8.0);
        let y4b = BoundSpec::for_graph(4, Metric::L2).unwrap().value;
        assert!((y4b - 492.2152954766495).abs() < 1e-9);
        assert!(BoundSpec::for_graph(7, Metric::L2).is_some());
        assert!(BoundSpec::for_graph(6, Metric::L2).is_none());
        assert!(BoundSpec::for_graph(7, Metric::Linf).is_none());
    }

    #[test]
    fn shrink_lemma_examples() {
        let theta = 2.0 * std::f64::consts::PI / 7.0;
        // collinear: c just short of b along ab
        assert!(check_shrink_lemma((0.0, 0.0), (1.0, 0.0), (0.999, 0.0), theta).unwrap());
        // c = b
        assert!(check_shrink_lemma((0.0, 0.0), (1.0, 0.0), (1.0, 0.0), theta).unwrap());
        // precondition violations are errors
        assert!(check_shrink_lemma((0.0, 0.0), (1.0, 0.0), (2.0, 0.0), theta).is_err());
        assert!(check_shrink_lemma((0.0, 0.0), (1.0, 0.0), (0.0, 0.9), theta).is_err());
        assert!(check_shrink_lemma((0.0, 0.0), (1.0, 0.0), (0.5, 0.0), 2.0).is_err());
    }

    #[test]
    fn quad_proposition_examples() {
        let sq = check_quad_proposition((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)).unwrap();
        assert!(sq);
        // degenerate: collinear points
        assert!(
            check_quad_proposition((0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)).is_err()
        );
        // nonconvex order
        assert!(
            check_quad_proposition((0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)).is_err()
        );
    }

    #[test]
    fn trichotomy_examples() {
        // right triangle
        assert!(check_triangle_trichotomy((0.0, 0.0), (3.0, 0.0), (3.0, 4.0)).unwrap());
        // obtuse at b
        assert!(check_triangle_trichotomy((0.0, 0.0), (1.0, 0.0), (2.5, 0.2)).unwrap());
        // acute
        assert!(check_triangle_trichotomy((0.0, 0.0), (2.0, 0.1), (1.0, 3.0)).unwrap());
        assert!(check_triangle_trichotomy((0.0, 0.0), (0.0, 0.0), (1.0, 1.0)).is_err());
    }

    #[test]
    fn quad_lemma_requires_crossing() {
        let g = y4(&[(0, 0), (1, 1), (5, 5), (6, 6)]);
        let e = *g.edges().iter().next().unwrap();
        assert!(matches!(
            check_quad_lemma(&g, e, (0, 3)),
            Err(Error::MissingEdge(0, 3))
        ));
    }
}
