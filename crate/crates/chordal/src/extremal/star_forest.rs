//! A drawing family whose crossing graph is a star forest — the weakest
//! possible crossing structure — even though contracting the pendant edges
//! onto one apex leaves a radius-1 graph with a large complete minor.

use super::{ConstructionDrawing, ConstructionError, LabeledConstruction, Witness};
use crate::drawing::StraightLineDrawing;
use crate::geom::{rat, rat_int, Point, Rat};
use crate::graph::minors::MinorCertificate;
use crate::graph::{Graph, VertexId};
use std::collections::BTreeMap;

/// Hard cap on `t`: the subdivision cascade grows the construction roughly
/// geometrically, so larger parameters are refused rather than attempted.
const MAX_T: usize = 10;

/// One upward edge of the half-built drawing. Red column edges are vertical;
/// pendant edges all share one small positive slope, so no two of them can
/// ever cross each other.
#[derive(Clone)]
enum Upward {
    /// Vertical segment at integer `x` between lines `ylo` and `yhi`.
    Red { x: Rat, ylo: usize, yhi: usize },
    /// Slanted segment from `(x0, y0)` up to the top line.
    Pendant { x0: Rat, y0: usize },
}

impl Upward {
    /// Where this edge passes the horizontal line `y`, endpoints excluded.
    fn x_at_line(&self, y: usize, mu: &Rat) -> Option<Rat> {
        match self {
            Upward::Red { x, ylo, yhi } => (*ylo < y && y < *yhi).then(|| x.clone()),
            Upward::Pendant { x0, y0 } => {
                (*y0 < y).then(|| x0 + mu * rat_int((y - y0) as i64))
            }
        }
    }
}

/// Lines `1..=t` carry one vertex per unordered pair `{i, j}` containing the
/// line number, all pairs sharing a column of integer x-coordinates. Each
/// column gets a vertical "red" edge joining its two line vertices, and every
/// line vertex sends a near-vertical pendant up to a common top line, where a
/// path strings the pendant tips together. Whenever two upward edges cross
/// the same horizontal edge, a new vertex (with its own pendant) is inserted
/// between the two crossing points, lines processed bottom-up, until every
/// horizontal edge is crossed at most once.
///
/// The result: crossings only ever pair one upward edge with one horizontal
/// edge, and each horizontal edge crosses at most once, so the crossing graph
/// is a disjoint union of stars centred on upward edges. Contracting the
/// pendants and the top path into a single apex turns line `i` into a path
/// `P_i`, any two of which are joined by a red edge — so the contracted graph
/// has radius 1 and contains a complete minor on `t + 1` branch sets.
pub fn star_forest_construction(t: usize) -> Result<LabeledConstruction, ConstructionError> {
    if t == 0 {
        return Err(ConstructionError::BadParameter("need at least one line".into()));
    }
    if t > MAX_T {
        return Err(ConstructionError::TooLarge { found: t, cap: MAX_T });
    }

    // All pendants share the slope dx/dy = mu. Any degeneracy (a pendant
    // grazing a vertex, tips colliding, three edges concurrent) is an affine
    // condition in mu that fails for at most one value, so halving escapes
    // it; the validator in StraightLineDrawing::new is the detector.
    let mut mu = rat(1, 1i64 << (t + 3));
    let mut last = String::new();
    for _ in 0..8 {
        match build(t, &mu) {
            Ok(c) => return Ok(c),
            Err(ConstructionError::Drawing(e)) => {
                last = e.to_string();
                mu /= rat_int(2);
            }
            Err(e) => return Err(e),
        }
    }
    Err(ConstructionError::InternalContract(format!(
        "no generic pendant slope found: {last}"
    )))
}

fn build(t: usize, mu: &Rat) -> Result<LabeledConstruction, ConstructionError> {
    let pairs: Vec<(usize, usize)> = (1..=t)
        .flat_map(|i| (i + 1..=t).map(move |j| (i, j)))
        .collect();

    // lines[i] = x-coordinates of the vertices on line i (1-based index).
    let mut lines: Vec<Vec<Rat>> = vec![Vec::new(); t + 1];
    let mut ups: Vec<Upward> = Vec::new();
    for (c, &(i, j)) in pairs.iter().enumerate() {
        let x = rat_int(c as i64 + 1);
        lines[i].push(x.clone());
        lines[j].push(x.clone());
        ups.push(Upward::Red { x, ylo: i, yhi: j });
    }
    for (y0, xs) in lines.iter().enumerate().skip(1) {
        for x0 in xs {
            ups.push(Upward::Pendant { x0: x0.clone(), y0 });
        }
    }

    // Bottom-up subdivision. When line i is processed every upward edge that
    // can pass it already exists: reds are fixed from the start and pendants
    // only ever point up, so later lines cannot spawn crossers for line i.
    #[allow(clippy::needless_range_loop)] // the body appends to lines[i]
    for i in 1..=t {
        let xs = &lines[i];
        if xs.len() < 2 {
            continue;
        }
        let mut crossers: Vec<Rat> = ups.iter().filter_map(|u| u.x_at_line(i, mu)).collect();
        crossers.sort();
        let mut fresh: Vec<Rat> = Vec::new();
        for gap in xs.windows(2) {
            let inside: Vec<&Rat> = crossers
                .iter()
                .filter(|x| **x > gap[0] && **x < gap[1])
                .collect();
            for pair in inside.windows(2) {
                fresh.push((pair[0] + pair[1]) / rat_int(2));
            }
        }
        for x0 in fresh {
            lines[i].push(x0.clone());
            ups.push(Upward::Pendant { x0, y0: i });
        }
        lines[i].sort();
    }

    // Assemble: vertex ids run line by line, x ascending, top line last.
    let mut g = Graph::new();
    let mut coords: BTreeMap<VertexId, Point> = BTreeMap::new();
    let mut id_at: BTreeMap<(usize, Rat), VertexId> = BTreeMap::new();
    let mut next: VertexId = 0;
    let mut line_ids: Vec<Vec<VertexId>> = vec![Vec::new(); t + 1];
    for (y, xs) in lines.iter().enumerate().skip(1) {
        for x in xs {
            g.add_vertex(next);
            coords.insert(next, Point::new(x.clone(), rat_int(y as i64)));
            id_at.insert((y, x.clone()), next);
            line_ids[y].push(next);
            next += 1;
        }
    }
    let lower_count = next;

    let top_y = rat_int(t as i64 + 1);
    let mut tips: Vec<(Rat, VertexId)> = Vec::new();
    for u in &ups {
        if let Upward::Pendant { x0, y0 } = u {
            let tip_x = x0 + mu * rat_int((t + 1 - y0) as i64);
            g.add_vertex(next);
            coords.insert(next, Point::new(tip_x.clone(), top_y.clone()));
            g.add_edge(id_at[&(*y0, x0.clone())], next)?;
            tips.push((tip_x, next));
            next += 1;
        }
    }
    tips.sort();
    for w in tips.windows(2) {
        g.add_edge(w[0].1, w[1].1)?;
    }
    for ids in &line_ids {
        for w in ids.windows(2) {
            g.add_edge(w[0], w[1])?;
        }
    }
    for u in &ups {
        if let Upward::Red { x, ylo, yhi } = u {
            g.add_edge(id_at[&(*ylo, x.clone())], id_at[&(*yhi, x.clone())])?;
        }
    }

    let d = StraightLineDrawing::new(g, coords, false)?;

    // Contract all pendants and the top path into one apex.
    let apex = lower_count;
    let mut contracted = Graph::new();
    for v in 0..lower_count {
        contracted.add_vertex(v);
    }
    contracted.add_vertex(apex);
    for (u, v) in d.graph().edges() {
        if u < lower_count && v < lower_count {
            contracted.add_edge(u, v)?;
        }
    }
    for v in 0..lower_count {
        contracted.add_edge(v, apex)?;
    }
    let radius = contracted.radius()? as i64;

    let x = d.crossing_graph();
    let components: Vec<Vec<crate::graph::EdgeId>> = x
        .graph()
        .connected_components()
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect();

    let mut out = LabeledConstruction {
        drawing: ConstructionDrawing::Straight(d),
        witnesses: BTreeMap::new(),
        notes: Vec::new(),
    }
    .with("star_forest", Witness::EdgeSets(components))
    .with("radius1", Witness::Value(radius))
    .with("contracted_graph", Witness::Graph(contracted))
    .note("crossings pair one upward edge with one horizontal edge, at most once each")
    .note("contracting pendants and the top path yields a radius-1 graph");

    if t >= 2 {
        let mut parts: Vec<Vec<VertexId>> = line_ids[1..].to_vec();
        parts.push(vec![apex]);
        out = out
            .with("kt1_minor", Witness::Minor(MinorCertificate { parts }))
            .note("line paths plus the apex form a complete minor on t+1 branch sets");
    }
    Ok(out)
}
