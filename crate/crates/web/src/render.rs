//! SVG drawings of labeled graphs.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use stallings::StallingsGraph;

pub const SPACING: f64 = 70.0;
const RADIUS: f64 = 9.0;
const PAD: f64 = 45.0;
const PALETTE: [&str; 6] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

fn colour(label: usize) -> &'static str {
    PALETTE[label % PALETTE.len()]
}

/// Breadth-first order of the vertices from the base, ignoring orientation.
/// `order[v]` is the position of vertex `v`.
pub fn bfs_positions(g: &StallingsGraph) -> Vec<usize> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    let mut edges = g.edges().to_vec();
    edges.sort_by_key(|e| (e.label, e.source, e.target));
    for e in &edges {
        adj[e.source].push(e.target);
        adj[e.target].push(e.source);
    }
    let mut order = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    let mut queue = VecDeque::from([g.base()]);
    order[g.base()] = 0;
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if order[u] == usize::MAX {
                next += 1;
                order[u] = next;
                queue.push_back(u);
            }
        }
    }
    order
}

pub fn horizontal(g: &StallingsGraph) -> Vec<(f64, f64)> {
    bfs_positions(g).iter().map(|&i| (i as f64 * SPACING, 0.0)).collect()
}

pub fn vertical(g: &StallingsGraph) -> Vec<(f64, f64)> {
    bfs_positions(g).iter().map(|&i| (0.0, i as f64 * SPACING)).collect()
}

/// Pair vertices placed on the grid spanned by the two factor orderings.
pub fn grid(pairs: &[(usize, usize)], h: &StallingsGraph, k: &StallingsGraph) -> Vec<(f64, f64)> {
    let (ph, pk) = (bfs_positions(h), bfs_positions(k));
    pairs
        .iter()
        .map(|&(u, v)| (ph[u] as f64 * SPACING, pk[v] as f64 * SPACING))
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct Style {
    /// Vertices drawn faded, such as hanging trees.
    pub faded: Vec<bool>,
    /// Vertices drawn highlighted, such as a membership trace.
    pub marked: Vec<bool>,
}

pub fn svg(g: &StallingsGraph, pos: &[(f64, f64)], style: &Style) -> String {
    let faded = |v: usize| style.faded.get(v).copied().unwrap_or(false);
    let marked = |v: usize| style.marked.get(v).copied().unwrap_or(false);
    let (min_x, max_x) = bounds(pos.iter().map(|p| p.0));
    let (min_y, max_y) = bounds(pos.iter().map(|p| p.1));
    let (w, h) = (max_x - min_x + 2.0 * PAD, max_y - min_y + 2.0 * PAD);
    let shift = |(x, y): (f64, f64)| (x - min_x + PAD, y - min_y + PAD);

    let mut out = String::new();
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w:.0} {h:.0}" width="{w:.0}" height="{h:.0}" font-family="sans-serif" font-size="12">"#
    );
    out.push_str("<defs>");
    for label in 0..g.alphabet().rank() {
        let _ = write!(
            out,
            r#"<marker id="arrow{label}" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" fill="{}"/></marker>"#,
            colour(label)
        );
    }
    out.push_str("</defs>");

    // parallel edges between the same two vertices fan out
    let mut bundles: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        let key = (e.source.min(e.target), e.source.max(e.target));
        bundles.entry(key).or_default().push(i);
    }
    let mut keys: Vec<_> = bundles.keys().copied().collect();
    keys.sort_unstable();
    for key in keys {
        let members = &bundles[&key];
        for (slot, &i) in members.iter().enumerate() {
            let e = g.edges()[i];
            let opacity = if faded(e.source) || faded(e.target) { 0.25 } else { 1.0 };
            let name = g.alphabet().name(e.label);
            let c = colour(e.label);
            let p = shift(pos[e.source]);
            if e.source == e.target {
                let angle = -std::f64::consts::FRAC_PI_2 + slot as f64 * 0.9;
                draw_loop(&mut out, p, angle, e.label, c, name, opacity);
                continue;
            }
            let q = shift(pos[e.target]);
            let (lo, hi) = (shift(pos[key.0]), shift(pos[key.1]));
            let (dx, dy) = (hi.0 - lo.0, hi.1 - lo.1);
            let len = (dx * dx + dy * dy).sqrt().max(1e-9);
            let normal = (-dy / len, dx / len);
            let base_bend = if len > 1.5 * SPACING { 0.22 * len } else { 0.0 };
            let bend = base_bend + (slot as f64 - (members.len() as f64 - 1.0) / 2.0) * 22.0;
            let mid = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
            let apex = (mid.0 + normal.0 * bend, mid.1 + normal.1 * bend);
            let ctrl = (2.0 * apex.0 - mid.0, 2.0 * apex.1 - mid.1);
            let start = toward(p, ctrl, RADIUS);
            let end = toward(q, ctrl, RADIUS + 1.0);
            let _ = write!(
                out,
                r#"<path d="M{:.1},{:.1} Q{:.1},{:.1} {:.1},{:.1}" fill="none" stroke="{c}" stroke-width="1.6" opacity="{opacity}" marker-end="url(#arrow{})"/>"#,
                start.0, start.1, ctrl.0, ctrl.1, end.0, end.1, e.label
            );
            let _ = write!(
                out,
                r#"<text x="{:.1}" y="{:.1}" fill="{c}" opacity="{opacity}" text-anchor="middle" dy="-3">{name}</text>"#,
                apex.0, apex.1
            );
        }
    }

    for (v, &p) in pos.iter().enumerate().take(g.vertex_count()) {
        let (x, y) = shift(p);
        let opacity = if faded(v) { 0.3 } else { 1.0 };
        let fill = if marked(v) { "#ffd84d" } else { "#ffffff" };
        let _ = write!(
            out,
            r##"<circle cx="{x:.1}" cy="{y:.1}" r="{RADIUS}" fill="{fill}" stroke="#222" stroke-width="1.4" opacity="{opacity}"><title>{v}</title></circle>"##
        );
        if v == g.base() {
            let _ = write!(
                out,
                r##"<circle cx="{x:.1}" cy="{y:.1}" r="{}" fill="none" stroke="#222" stroke-width="1.4"/>"##,
                RADIUS + 3.5
            );
        }
    }
    out.push_str("</svg>");
    out
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold(None, |acc: Option<(f64, f64)>, v| match acc {
        None => Some((v, v)),
        Some((lo, hi)) => Some((lo.min(v), hi.max(v))),
    })
    .unwrap_or((0.0, 0.0))
}

fn toward(from: (f64, f64), to: (f64, f64), by: f64) -> (f64, f64) {
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    let len = (dx * dx + dy * dy).sqrt();
    if len < 1e-9 {
        return from;
    }
    (from.0 + dx / len * by, from.1 + dy / len * by)
}

fn draw_loop(
    out: &mut String,
    p: (f64, f64),
    angle: f64,
    label: usize,
    c: &str,
    name: char,
    opacity: f64,
) {
    let reach = 34.0;
    let spread = 0.45;
    let at = |a: f64, r: f64| (p.0 + r * a.cos(), p.1 + r * a.sin());
    let start = at(angle - spread, RADIUS);
    let end = at(angle + spread, RADIUS + 1.0);
    let c1 = at(angle - spread, reach);
    let c2 = at(angle + spread, reach);
    let text = at(angle, reach * 0.85);
    let _ = write!(
        out,
        r#"<path d="M{:.1},{:.1} C{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}" fill="none" stroke="{c}" stroke-width="1.6" opacity="{opacity}" marker-end="url(#arrow{label})"/>"#,
        start.0, start.1, c1.0, c1.1, c2.0, c2.1, end.0, end.1
    );
    let _ = write!(
        out,
        r#"<text x="{:.1}" y="{:.1}" fill="{c}" opacity="{opacity}" text-anchor="middle" dominant-baseline="middle">{name}</text>"#,
        text.0, text.1
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use stallings::{family_k, Alphabet};

    #[test]
    fn draws_every_vertex_and_edge() {
        let k = StallingsGraph::subgroup(&family_k(3).unwrap(), &Alphabet::free_ab()).unwrap();
        let out = svg(&k, &vertical(&k), &Style::default());
        assert!(out.starts_with("<svg") && out.ends_with("</svg>"));
        assert_eq!(out.matches("marker-end=").count(), k.edge_count());
        // one circle per vertex plus the base ring
        assert_eq!(out.matches("<circle").count(), k.vertex_count() + 1);
    }

    #[test]
    fn bfs_positions_are_a_permutation() {
        let k = StallingsGraph::subgroup(&family_k(4).unwrap(), &Alphabet::free_ab()).unwrap();
        let mut p = bfs_positions(&k);
        assert_eq!(p[k.base()], 0);
        p.sort_unstable();
        assert_eq!(p, (0..k.vertex_count()).collect::<Vec<_>>());
    }
}
