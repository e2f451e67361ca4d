//! Deterministic SVG rendering: nodes as circles, directed edges as arrows,
//! optional highlighted walk overlay. Same input bytes in, same SVG out.

use std::fmt::Write;

use yao_spanner::yao::YaoGraph;

/// Render `g` with an optional overlay walk (node id sequence). The viewBox
/// fits the bounding box with a 5% margin.
pub fn render(g: &YaoGraph, overlay: Option<&[usize]>) -> String {
    let ps = g.points();
    let coords: Vec<(f64, f64)> = (0..ps.len())
        .map(|id| ps.display_coord(id).expect("valid id"))
        .collect();
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &coords {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let margin = 0.05 * span;
    let width = max_x - min_x + 2.0 * margin;
    let height = max_y - min_y + 2.0 * margin;
    // SVG y grows downward; flip into plot coordinates.
    let place = |(x, y): (f64, f64)| (x - min_x + margin, max_y - y + margin);
    let node_r = 0.008 * span;
    let stroke = 0.003 * span;

    let mut out = String::new();
    let _ = write!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width} {height}\">\n\
         <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" \
         markerWidth=\"5\" markerHeight=\"5\" orient=\"auto-start-reverse\">\
         <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#555\"/></marker></defs>\n"
    );
    for &(u, v) in g.edges() {
        let (x1, y1) = place(coords[u]);
        let (x2, y2) = place(coords[v]);
        // pull the head back so the arrow tip is visible outside the circle
        let (dx, dy) = (x2 - x1, y2 - y1);
        let len = (dx * dx + dy * dy).sqrt().max(1e-12);
        let (hx, hy) = (x2 - dx / len * node_r * 1.6, y2 - dy / len * node_r * 1.6);
        let _ = write!(
            out,
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{hx}\" y2=\"{hy}\" stroke=\"#555\" \
             stroke-width=\"{stroke}\" marker-end=\"url(#arrow)\"/>\n"
        );
    }
    if let Some(walk) = overlay {
        if !walk.is_empty() {
            let pts: Vec<String> = walk
                .iter()
                .map(|&id| {
                    let (x, y) = place(coords[id]);
                    format!("{x},{y}")
                })
                .collect();
            let _ = write!(
                out,
                "<polyline class=\"overlay\" points=\"{}\" fill=\"none\" stroke=\"#d22\" \
                 stroke-width=\"{}\" stroke-linecap=\"round\"/>\n",
                pts.join(" "),
                stroke * 2.5
            );
        }
    }
    for &(x, y) in &coords {
        let (cx, cy) = place((x, y));
        let _ = write!(
            out,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{node_r}\" fill=\"#1a6\" \
             stroke=\"#063\" stroke-width=\"{}\"/>\n",
            stroke * 0.5
        );
    }
    out.push_str("</svg>\n");
    out
}
