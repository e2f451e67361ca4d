//! Constructive path procedures over a k = 4 Yao graph: quadrant-following
//! walks, the target-directed path P(a→b), its rectangle-truncated prefix
//! P_R(a→b), the recursive short path between endpoints of two crossing
//! edges, and the spanning path in Y_4 for an edge of Y_4^∞.
//!
//! Every procedure returns a [`Walk`], an ordered node sequence whose
//! consecutive pairs are graph edges; hops may traverse an edge against its
//! direction (stretch lives on the undirected graph) and the traversal
//! direction is recorded per hop.

use crate::error::{Error, Result};
use crate::geometry::{
    dist, dist2, linf_dist, properly_cross, quadrant_of, Metric, Quadrant, Segment,
};
use crate::yao::YaoGraph;

/// Length bound factor of the truncated path: |P_R(a→b)| ≤ √2·|ab|.
pub const TRUNCATED_PATH_FACTOR: f64 = std::f64::consts::SQRT_2;

/// Length bound factor of the crossing short path: 6/(√2−1) ≈ 14.4853.
pub fn crossing_path_factor() -> f64 {
    6.0 / (std::f64::consts::SQRT_2 - 1.0)
}

/// Length bound factor of the Y_4 walk spanning one Y_4^∞ edge:
/// 29 + 23√2 ≈ 61.5269.
pub fn linf_edge_factor() -> f64 {
    29.0 + 23.0 * std::f64::consts::SQRT_2
}

/// Recursion guard for the crossing-path construction. The shortest side
/// shrinks by at least √2 per level and lattice distances stay below 2^55,
/// so this depth is unreachable on valid inputs.
const MAX_RECURSION_DEPTH: usize = 128;

/// An ordered node sequence realizing a constructive path in a Yao graph.
#[derive(Clone, Debug)]
pub struct Walk<'g> {
    graph: &'g YaoGraph,
    nodes: Vec<usize>,
    /// forward[i] is true when the graph holds the directed edge
    /// nodes[i] → nodes[i+1], false when only the reverse exists.
    forward: Vec<bool>,
}

impl<'g> PartialEq for Walk<'g> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.graph, other.graph) && self.nodes == other.nodes
    }
}

impl<'g> Walk<'g> {
    /// Validate that consecutive nodes are joined by graph edges (in either
    /// direction) and record per-hop traversal directions.
    pub fn new(graph: &'g YaoGraph, nodes: Vec<usize>) -> Result<Walk<'g>> {
        if nodes.is_empty() {
            return Err(Error::InvalidPoints("walk needs at least one node".into()));
        }
        for &n in &nodes {
            graph.point(n)?;
        }
        let mut forward = Vec::with_capacity(nodes.len().saturating_sub(1));
        for w in nodes.windows(2) {
            let (u, v) = (w[0], w[1]);
            if graph.has_edge(u, v) {
                forward.push(true);
            } else if graph.has_edge(v, u) {
                forward.push(false);
            } else {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        Ok(Walk {
            graph,
            nodes,
            forward,
        })
    }

    pub fn single(graph: &'g YaoGraph, node: usize) -> Result<Walk<'g>> {
        Walk::new(graph, vec![node])
    }

    pub fn graph(&self) -> &'g YaoGraph {
        self.graph
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn first(&self) -> usize {
        self.nodes[0]
    }

    pub fn last(&self) -> usize {
        *self.nodes.last().unwrap()
    }

    pub fn hop_count(&self) -> usize {
        self.forward.len()
    }

    /// Hop i as (tail, head, forward?) in traversal order.
    pub fn hop(&self, i: usize) -> (usize, usize, bool) {
        (self.nodes[i], self.nodes[i + 1], self.forward[i])
    }

    /// Hop i oriented as the directed edge stored in the graph.
    pub fn hop_as_graph_edge(&self, i: usize) -> (usize, usize) {
        if self.forward[i] {
            (self.nodes[i], self.nodes[i + 1])
        } else {
            (self.nodes[i + 1], self.nodes[i])
        }
    }

    fn hop_segment(&self, i: usize) -> Segment {
        let a = self.graph.point(self.nodes[i]).unwrap();
        let b = self.graph.point(self.nodes[i + 1]).unwrap();
        Segment::new(a, b).expect("walk hops join distinct nodes")
    }

    /// Total length under the metric, in scaled units.
    pub fn length(&self, m: Metric) -> f64 {
        self.nodes
            .windows(2)
            .map(|w| {
                dist(
                    self.graph.point(w[0]).unwrap(),
                    self.graph.point(w[1]).unwrap(),
                    m,
                )
            })
            .sum()
    }

    /// Exact squared Euclidean length of the longest hop.
    pub fn max_hop_dist2(&self) -> i128 {
        self.nodes
            .windows(2)
            .map(|w| {
                dist2(
                    self.graph.point(w[0]).unwrap(),
                    self.graph.point(w[1]).unwrap(),
                )
            })
            .max()
            .unwrap_or(0)
    }

    /// Index of the first occurrence of `node`.
    pub fn position_of(&self, node: usize) -> Option<usize> {
        self.nodes.iter().position(|&n| n == node)
    }

    pub fn contains_node(&self, node: usize) -> bool {
        self.position_of(node).is_some()
    }

    /// Subwalk spanning node indices from..=to (inclusive).
    pub fn slice(&self, from: usize, to: usize) -> Walk<'g> {
        debug_assert!(from <= to && to < self.nodes.len());
        Walk {
            graph: self.graph,
            nodes: self.nodes[from..=to].to_vec(),
            forward: self.forward[from..to].to_vec(),
        }
    }

    pub fn reversed(&self) -> Walk<'g> {
        let mut nodes = self.nodes.clone();
        nodes.reverse();
        let mut forward: Vec<bool> = self.forward.iter().map(|f| !f).collect();
        forward.reverse();
        Walk {
            graph: self.graph,
            nodes,
            forward,
        }
    }

    /// Concatenation: `self.last()` must equal `other.first()`.
    pub fn concat(&self, other: &Walk<'g>) -> Result<Walk<'g>> {
        if self.last() != other.first() {
            return Err(Error::BadConcat(self.last(), other.first()));
        }
        let mut nodes = self.nodes.clone();
        nodes.extend_from_slice(&other.nodes[1..]);
        let mut forward = self.forward.clone();
        forward.extend_from_slice(&other.forward);
        Ok(Walk {
            graph: self.graph,
            nodes,
            forward,
        })
    }
}

fn require_k4(g: &YaoGraph) -> Result<()> {
    if g.k() != 4 {
        return Err(Error::UnsupportedConfig(
            "path procedures require a k = 4 graph".into(),
        ));
    }
    Ok(())
}

fn require_l2(g: &YaoGraph) -> Result<()> {
    if g.metric() != Metric::L2 {
        return Err(Error::UnsupportedConfig(
            "this construction is defined on the Euclidean Y_4 graph".into(),
        ));
    }
    Ok(())
}

/// Walk from `start` that repeatedly follows the outgoing edge in the given
/// quadrant, stopping when `stop` holds at the current node or the quadrant
/// has no outgoing edge. Realizes P_i(a) and, with `stop = |n| n == b`,
/// P_i(a, b).
pub fn quadrant_walk<'g, F>(
    g: &'g YaoGraph,
    start: usize,
    quadrant: Quadrant,
    mut stop: F,
) -> Result<Walk<'g>>
where
    F: FnMut(usize) -> bool,
{
    require_k4(g)?;
    g.point(start)?;
    let mut nodes = vec![start];
    let mut cur = start;
    while !stop(cur) {
        let Some(next) = g.out_in_cone(cur, quadrant.cone()) else {
            break;
        };
        // Each hop advances strictly along the quadrant's strict coordinate,
        // so a revisit is impossible; the guard documents that.
        debug_assert!(hop_in_quadrant(g, cur, next, quadrant));
        nodes.push(next);
        cur = next;
        if nodes.len() > g.node_count() {
            return Err(Error::CycleDetected);
        }
    }
    Walk::new(g, nodes)
}

fn hop_in_quadrant(g: &YaoGraph, cur: usize, next: usize, q: Quadrant) -> bool {
    let a = g.point(cur).unwrap();
    let b = g.point(next).unwrap();
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    match q {
        Quadrant::Q1 => dx >= 0 && dy > 0,
        Quadrant::Q2 => dx < 0 && dy >= 0,
        Quadrant::Q3 => dx <= 0 && dy < 0,
        Quadrant::Q4 => dx > 0 && dy <= 0,
    }
}

/// The directed path P(a→b): from each node, follow the outgoing edge in the
/// quadrant that contains b; terminates at b. The walk stays inside the
/// closed square centered at b whose boundary contains a (checked per hop:
/// the L∞ distance to b never grows).
pub fn directed_path<'g>(g: &'g YaoGraph, a: usize, b: usize) -> Result<Walk<'g>> {
    require_k4(g)?;
    let pb = g.point(b)?;
    let mut cur = g.point(a)?;
    let mut nodes = vec![a];
    let guard = g.node_count().saturating_mul(g.node_count()) + 1;
    let mut radius = linf_dist(cur, pb);
    while cur.id != b {
        let q = quadrant_of(cur, pb)?;
        let next = g.out_in_cone(cur.id, q.cone()).ok_or_else(|| {
            Error::ConstructionFailed(format!(
                "node {} has no outgoing edge in the cone containing node {b}; \
                 the graph is not a complete Yao construction",
                cur.id
            ))
        })?;
        cur = g.point(next)?;
        nodes.push(next);
        let r = linf_dist(cur, pb);
        debug_assert!(r <= radius, "directed path left the bounding square");
        radius = r;
        if nodes.len() > guard {
            return Err(Error::HopGuardExceeded);
        }
    }
    let _ = radius;
    Walk::new(g, nodes)
}

/// The truncated path P_R(a→b): the prefix of P(a→b) ending at the first
/// node (after a) that is not strictly interior to the rectangle with
/// diagonal ab. On Euclidean graphs its length is at most √2·|ab| and no hop
/// is longer than |ab|.
pub fn truncated_path<'g>(g: &'g YaoGraph, a: usize, b: usize) -> Result<Walk<'g>> {
    let full = directed_path(g, a, b)?;
    let pa = g.point(a)?;
    let pb = g.point(b)?;
    let rect = crate::geometry::Rect::with_diagonal(pa, pb);
    let mut end = full.nodes().len() - 1;
    for (i, &n) in full.nodes().iter().enumerate().skip(1) {
        if !rect.strictly_interior(g.point(n)?) {
            end = i;
            break;
        }
    }
    let walk = full.slice(0, end);
    if g.metric() == Metric::L2 {
        debug_assert!(
            walk.length(Metric::L2) <= TRUNCATED_PATH_FACTOR * dist(pa, pb, Metric::L2),
            "truncated path exceeds sqrt(2) times the diagonal"
        );
        debug_assert!(
            walk.max_hop_dist2() <= dist2(pa, pb),
            "truncated path hop exceeds the diagonal"
        );
    }
    Ok(walk)
}

fn edge_segment(g: &YaoGraph, e: (usize, usize)) -> Result<Segment> {
    Segment::new(g.point(e.0)?, g.point(e.1)?)
}

/// First hop of `w` that properly crosses `seg`.
fn first_hop_crossing(w: &Walk<'_>, seg: Segment) -> Option<usize> {
    (0..w.hop_count()).find(|&i| properly_cross(w.hop_segment(i), seg))
}

/// Join two walks that intersect as point sets. Returns a walk from
/// `w1.first()` to `w2.first()`, spliced at the earliest shared node
/// (preferred) or through the recursive crossing-path at the first properly
/// crossing hop pair. `Ok(None)` means the walks are disjoint.
///
/// Yao-graph walks can meet only at shared nodes or proper hop crossings: a
/// node strictly inside an edge would contradict that edge's cone minimality.
fn connect_walks<'g>(
    g: &'g YaoGraph,
    w1: &Walk<'g>,
    w2: &Walk<'g>,
    depth: usize,
) -> Result<Option<Walk<'g>>> {
    // Shared node first: cheaper, and the tighter bound.
    let mut in_w2 = std::collections::HashMap::new();
    for (i, &n) in w2.nodes().iter().enumerate() {
        in_w2.entry(n).or_insert(i);
    }
    for (i1, &n) in w1.nodes().iter().enumerate() {
        if let Some(&i2) = in_w2.get(&n) {
            let joined = w1.slice(0, i1).concat(&w2.slice(0, i2).reversed())?;
            return Ok(Some(joined));
        }
    }
    for h1 in 0..w1.hop_count() {
        let s1 = w1.hop_segment(h1);
        for h2 in 0..w2.hop_count() {
            if properly_cross(s1, w2.hop_segment(h2)) {
                let e1 = w1.hop_as_graph_edge(h1);
                let e2 = w2.hop_as_graph_edge(h2);
                let bridge = crossing_walk(g, e1, e2, depth)?;
                let x = bridge.first();
                let y = bridge.last();
                let i1 = if w1.nodes()[h1] == x { h1 } else { h1 + 1 };
                let i2 = if w2.nodes()[h2] == y { h2 } else { h2 + 1 };
                debug_assert_eq!(w1.nodes()[i1], x);
                debug_assert_eq!(w2.nodes()[i2], y);
                let joined = w1
                    .slice(0, i1)
                    .concat(&bridge)?
                    .concat(&w2.slice(0, i2).reversed())?;
                return Ok(Some(joined));
            }
        }
    }
    Ok(None)
}

/// Endpoint pair (x from e1, y from e2) of a shortest side of the
/// quadrilateral spanned by two crossing edges, with its squared length.
fn shortest_side(
    g: &YaoGraph,
    e1: (usize, usize),
    e2: (usize, usize),
) -> Result<(usize, usize, i128)> {
    let sides = [(e1.0, e2.0), (e1.0, e2.1), (e1.1, e2.0), (e1.1, e2.1)];
    let mut best: Option<(usize, usize, i128)> = None;
    for (x, y) in sides {
        let d = dist2(g.point(x)?, g.point(y)?);
        if best.map_or(true, |(_, _, bd)| d < bd) {
            best = Some((x, y, d));
        }
    }
    Ok(best.unwrap())
}

/// Recursive construction of a short walk between the endpoints of a
/// shortest side of two properly crossing edges.
fn crossing_walk<'g>(
    g: &'g YaoGraph,
    e1: (usize, usize),
    e2: (usize, usize),
    depth: usize,
) -> Result<Walk<'g>> {
    if depth > MAX_RECURSION_DEPTH {
        return Err(Error::RecursionBoundViolated);
    }
    let (x, y, _side_d2) = shortest_side(g, e1, e2)?;
    if x == y {
        return Walk::single(g, x);
    }
    let seg2 = edge_segment(g, e2)?;
    let mut pf = truncated_path(g, x, y)?;
    let pb;
    if let Some(h) = first_hop_crossing(&pf, seg2) {
        // Splice rule: truncate after the far endpoint t of the crossing hop
        // and continue toward y; the return path aims back at t.
        let t = pf.nodes()[h + 1];
        pf = pf.slice(0, h + 1).concat(&truncated_path(g, t, y)?)?;
        pb = truncated_path(g, y, t)?;
    } else {
        pb = truncated_path(g, y, x)?;
    }
    let walk = connect_walks(g, &pf, &pb, depth + 1)?
        .ok_or_else(|| Error::ConstructionFailed("crossing-edge paths do not meet".into()))?;
    debug_assert_eq!(walk.first(), x);
    debug_assert_eq!(walk.last(), y);
    Ok(walk)
}

/// Short walk between the endpoints of a shortest side of the quadrilateral
/// formed by two properly crossing directed edges of Y_4 (L2). The result
/// runs from an endpoint of `ab` to an endpoint of `cd`, has length at most
/// 6/(√2−1) times that side, and no hop longer than the side.
pub fn crossing_short_path<'g>(
    g: &'g YaoGraph,
    ab: (usize, usize),
    cd: (usize, usize),
) -> Result<Walk<'g>> {
    require_k4(g)?;
    require_l2(g)?;
    if !g.has_edge(ab.0, ab.1) {
        return Err(Error::MissingEdge(ab.0, ab.1));
    }
    if !g.has_edge(cd.0, cd.1) {
        return Err(Error::MissingEdge(cd.0, cd.1));
    }
    let ids = [ab.0, ab.1, cd.0, cd.1];
    for i in 0..4 {
        for j in i + 1..4 {
            if ids[i] == ids[j] {
                return Err(Error::DegenerateInput(
                    "crossing edges must have four distinct endpoints".into(),
                ));
            }
        }
    }
    if !properly_cross(edge_segment(g, ab)?, edge_segment(g, cd)?) {
        return Err(Error::NotCrossing);
    }
    let walk = crossing_walk(g, ab, cd, 0)?;
    #[cfg(debug_assertions)]
    {
        let (x, y, xy_d2) = shortest_side(g, ab, cd)?;
        let side = dist(g.point(x).unwrap(), g.point(y).unwrap(), Metric::L2);
        debug_assert!(walk.length(Metric::L2) <= crossing_path_factor() * side);
        debug_assert!(walk.max_hop_dist2() <= xy_d2);
    }
    Ok(walk)
}

/// Spanning walk in Y_4 (L2) for a directed edge (a, b) of Y_4^∞ built on the
/// same point set, of Euclidean length at most (29 + 23√2)·|ab|.
///
/// Follows the three-way case split on how P_R(b→c) and P_R(b'→a) meet the
/// edge ac and the segment ab, where c is a's Y_4 target in the quadrant of b
/// and b' is the far endpoint of P_R(b→c).
pub fn linf_edge_short_path<'g>(g2: &'g YaoGraph, a: usize, b: usize) -> Result<Walk<'g>> {
    require_k4(g2)?;
    require_l2(g2)?;
    let pa = g2.point(a)?;
    let pb = g2.point(b)?;
    if a == b {
        return Err(Error::DegenerateInput("edge endpoints coincide".into()));
    }
    let walk = linf_edge_walk(g2, a, b)?;
    debug_assert_eq!(walk.first(), a);
    debug_assert_eq!(walk.last(), b);
    debug_assert!(
        walk.length(Metric::L2) <= linf_edge_factor() * dist(pa, pb, Metric::L2),
        "spanning walk exceeds the (29 + 23*sqrt(2)) factor"
    );
    Ok(walk)
}

fn linf_edge_walk<'g>(g2: &'g YaoGraph, a: usize, b: usize) -> Result<Walk<'g>> {
    if g2.has_undirected_edge(a, b) {
        return Walk::new(g2, vec![a, b]);
    }
    let pa = g2.point(a)?;
    let pb = g2.point(b)?;
    let q = quadrant_of(pa, pb)?;
    let c = g2.out_in_cone(a, q.cone()).ok_or_else(|| {
        Error::ConstructionFailed(format!(
            "node {a} has no Y_4 edge in the quadrant of node {b}"
        ))
    })?;
    // c is a's closest Euclidean neighbor in the quadrant of b, so |ac| ≤ |ab|.
    debug_assert!(dist2(pa, g2.point(c)?) <= dist2(pa, pb));
    let walk_ac = Walk::new(g2, vec![a, c])?;
    let pr_bc = truncated_path(g2, b, c)?;

    // Case 1: P_R(b→c) meets the edge ac.
    if let Some(w) = connect_walks(g2, &walk_ac, &pr_bc, 0)? {
        return Ok(w);
    }

    let b_prime = pr_bc.last();
    let pr_ba = truncated_path(g2, b_prime, a)?;

    // Case 3, trivial form: P_R(b'→a) reaches a itself.
    if let Some(ia) = pr_ba.position_of(a) {
        return Ok(pr_bc.concat(&pr_ba.slice(0, ia))?.reversed());
    }

    // Case 3: some hop (d→e) of P_R(b'→a) properly crosses the segment ab.
    let seg_ab = Segment::new(pa, pb)?;
    if let Some(h) = first_hop_crossing(&pr_ba, seg_ab) {
        let (d, e) = (pr_ba.nodes()[h], pr_ba.nodes()[h + 1]);
        let p_ae = case3_meet(g2, a, d, e)?;
        let back = pr_ba.slice(0, h + 1).reversed(); // e → … → b'
        return p_ae.concat(&back)?.concat(&pr_bc.reversed());
    }

    // Case 2(i): P_R(b'→a) meets the edge ac.
    if let Some(w) = connect_walks(g2, &walk_ac, &pr_ba, 0)? {
        return w.concat(&pr_bc.reversed());
    }

    // Case 2(ii): P_R(c→b') must meet P_R(b→c) ⊕ P_R(b'→a).
    let pr_cb = truncated_path(g2, c, b_prime)?;
    let u = pr_bc.concat(&pr_ba)?;
    if let Some(w) = connect_walks(g2, &pr_cb, &u, 0)? {
        return walk_ac.concat(&w);
    }

    Err(Error::ConstructionFailed(
        "no spanning-path case applied to the L-infinity edge".into(),
    ))
}

/// Case 3 meeting: a walk from `a` to `e`, where (d→e) is the hop of
/// P_R(b'→a) crossing ab. P_R(a→e) must meet P_R(e→a) ⊕ de.
fn case3_meet<'g>(g2: &'g YaoGraph, a: usize, d: usize, e: usize) -> Result<Walk<'g>> {
    let p_ae = truncated_path(g2, a, e)?;
    let p_ea = truncated_path(g2, e, a)?;
    if let Some(w) = connect_walks(g2, &p_ae, &p_ea, 0)? {
        return Ok(w);
    }
    if let Some(id_) = p_ae.position_of(d) {
        return p_ae.slice(0, id_).concat(&Walk::new(g2, vec![d, e])?);
    }
    let seg_de = edge_segment(g2, (d, e))?;
    if let Some(h) = first_hop_crossing(&p_ae, seg_de) {
        let bridge = crossing_walk(g2, p_ae.hop_as_graph_edge(h), (d, e), 0)?;
        let x = bridge.first();
        let i1 = if p_ae.nodes()[h] == x { h } else { h + 1 };
        let mut w = p_ae.slice(0, i1).concat(&bridge)?;
        if w.last() == d {
            w = w.concat(&Walk::new(g2, vec![d, e])?)?;
        }
        debug_assert_eq!(w.last(), e);
        return Ok(w);
    }
    Err(Error::ConstructionFailed(
        "detour paths toward the crossing hop do not meet".into(),
    ))
}
