//! The map graph of a planarised drawing: one vertex per face, adjacent when
//! the faces share a vertex of the plane graph.

use crate::graph::{Graph, VertexId};
use std::collections::BTreeSet;

use super::Planarisation;

/// Map graph of a planarisation. Vertex `i` is face `i` of the planarisation
/// (the outer face included), and two faces are adjacent when their boundaries
/// meet in at least one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapGraph {
    graph: Graph,
    outer_face: VertexId,
}

impl MapGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The map-graph vertex corresponding to the outer face.
    pub fn outer_face(&self) -> VertexId {
        self.outer_face
    }

    pub fn radius(&self) -> Result<usize, crate::graph::GraphError> {
        self.graph.radius()
    }
}

pub fn map_graph(p: &Planarisation) -> MapGraph {
    let sets: Vec<BTreeSet<VertexId>> = p.faces().iter().map(|f| f.vertex_set()).collect();
    let mut g = Graph::default();
    for i in 0..sets.len() {
        g.add_vertex(i as VertexId);
    }
    for i in 0..sets.len() {
        for j in (i + 1)..sets.len() {
            if !sets[i].is_disjoint(&sets[j]) {
                g.add_edge(i as VertexId, j as VertexId).expect("face ids");
            }
        }
    }
    MapGraph {
        graph: g,
        outer_face: p.outer_face() as VertexId,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::CircularDrawing;
    use crate::graph::{generate, Graph};

    #[test]
    fn k4_map_graph_is_k5_with_radius_one() {
        let p = CircularDrawing::make_circular(generate::complete(4), &[0, 1, 2, 3])
            .unwrap()
            .planarise()
            .unwrap();
        let m = map_graph(&p);
        assert_eq!(m.graph(), &generate::complete(5));
        assert_eq!(m.radius().unwrap(), 1);
        assert_eq!(m.outer_face(), 4);
    }

    #[test]
    fn single_chord_map_graph_is_a_point() {
        let g = Graph::from_parts([0, 1], [(0, 1)]).unwrap();
        let p = CircularDrawing::make_circular(g, &[0, 1]).unwrap().planarise().unwrap();
        let m = map_graph(&p);
        assert_eq!(m.graph().vertex_count(), 1);
        assert_eq!(m.graph().edge_count(), 0);
        assert_eq!(m.radius().unwrap(), 0);
    }

    #[test]
    fn triangle_map_graph_is_an_edge() {
        let p = CircularDrawing::make_circular(generate::cycle(3).unwrap(), &[0, 1, 2])
            .unwrap()
            .planarise()
            .unwrap();
        let m = map_graph(&p);
        assert_eq!(m.graph(), &generate::complete(2));
    }

    #[test]
    fn map_graph_is_connected_on_disconnected_drawings() {
        let g = Graph::from_parts([0, 1, 2, 3], [(0, 1), (2, 3)]).unwrap();
        let p = CircularDrawing::make_circular(g, &[0, 1, 2, 3]).unwrap().planarise().unwrap();
        let m = map_graph(&p);
        assert!(m.graph().is_connected());
    }
}
