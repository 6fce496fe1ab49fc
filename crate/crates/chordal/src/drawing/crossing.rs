//! The crossing graph of a drawing: one vertex per drawn edge, adjacent when
//! the edges cross.

use crate::geom::{rat_from_str, rat_to_string, Point};
use crate::graph::{EdgeId, Graph, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::DrawingError;

/// Crossing graph with the exact crossing point per edge pair. Vertex ids are
/// the edge ids of the drawn graph (indices into its lex-sorted edge list);
/// every drawn edge appears as a vertex, crossing-free edges as isolated ones.
///
/// Drawings without rational crossing coordinates (linear drawings, whose
/// semicircles meet at algebraic points) carry an empty point map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CrossingGraphRepr", into = "CrossingGraphRepr")]
pub struct CrossingGraph {
    graph: Graph,
    points: BTreeMap<(EdgeId, EdgeId), Point>,
}

impl CrossingGraph {
    pub(crate) fn from_parts(
        edge_count: usize,
        pairs: Vec<(EdgeId, EdgeId)>,
        points: BTreeMap<(EdgeId, EdgeId), Point>,
    ) -> Self {
        let mut graph = Graph::default();
        for e in 0..edge_count as u32 {
            graph.add_vertex(e);
        }
        for (e, f) in pairs {
            graph.add_edge(e, f).expect("crossing pair within edge ids");
        }
        CrossingGraph { graph, points }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Crossing points keyed by the crossing pair `(e, f)` with `e < f`.
    pub fn points(&self) -> &BTreeMap<(EdgeId, EdgeId), Point> {
        &self.points
    }

    pub fn crossing_count(&self) -> usize {
        self.graph.edge_count()
    }
}

/// The crossing graph a circular drawing would have with the given order,
/// computed purely from endpoint interleavings — no coordinates. Used when
/// scanning many orders of the same graph.
pub fn crossing_graph_of_order(g: &Graph, order: &[VertexId]) -> Result<Graph, DrawingError> {
    let vertex_set: std::collections::BTreeSet<VertexId> = g.vertices().collect();
    let order_set: std::collections::BTreeSet<VertexId> = order.iter().copied().collect();
    if order_set.len() != order.len() || order_set != vertex_set {
        return Err(DrawingError::NotAPermutation);
    }
    let positions: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges = crate::graph::EdgeIndex::of(g);
    let mut x = Graph::default();
    for e in 0..edges.len() as u32 {
        x.add_vertex(e);
    }
    for (e, f) in super::interleaving_pairs(&edges, &positions) {
        x.add_edge(e, f).expect("edge ids present");
    }
    Ok(x)
}

#[derive(Serialize, Deserialize)]
struct CrossingGraphRepr {
    graph: Graph,
    crossing_points: BTreeMap<String, [String; 2]>,
}

impl From<CrossingGraph> for CrossingGraphRepr {
    fn from(x: CrossingGraph) -> Self {
        CrossingGraphRepr {
            crossing_points: x
                .points
                .iter()
                .map(|((e, f), p)| {
                    (
                        format!("{e},{f}"),
                        [rat_to_string(&p.x), rat_to_string(&p.y)],
                    )
                })
                .collect(),
            graph: x.graph,
        }
    }
}

impl TryFrom<CrossingGraphRepr> for CrossingGraph {
    type Error = String;

    fn try_from(repr: CrossingGraphRepr) -> Result<Self, String> {
        let mut points = BTreeMap::new();
        for (k, [xs, ys]) in &repr.crossing_points {
            let (e, f) = k
                .split_once(',')
                .ok_or_else(|| format!("bad crossing key `{k}`"))?;
            let e: EdgeId = e.trim().parse().map_err(|_| format!("bad edge id `{e}`"))?;
            let f: EdgeId = f.trim().parse().map_err(|_| format!("bad edge id `{f}`"))?;
            if e >= f {
                return Err(format!("crossing key `{k}` not in increasing order"));
            }
            if !repr.graph.has_edge(e, f) {
                return Err(format!("crossing key `{k}` not an edge of the graph"));
            }
            let x = rat_from_str(xs).ok_or_else(|| format!("bad rational `{xs}`"))?;
            let y = rat_from_str(ys).ok_or_else(|| format!("bad rational `{ys}`"))?;
            points.insert((e, f), Point::new(x, y));
        }
        Ok(CrossingGraph {
            graph: repr.graph,
            points,
        })
    }
}
