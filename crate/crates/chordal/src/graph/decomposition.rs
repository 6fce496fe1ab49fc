//! Tree decompositions and their validation.

use super::{Graph, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// A tree decomposition: a tree over node ids plus one bag of graph vertices
/// per node. Empty bags are allowed (they arise naturally when lifting a
/// decomposition to the crossing graph of a crossing-free drawing).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    /// Edges of the decomposition tree; a single-node tree has none.
    pub tree_edges: Vec<(u32, u32)>,
    /// Bag contents per tree node. Every node id in `tree_edges` must be a
    /// key here, and every key is a node of the tree.
    pub bags: BTreeMap<u32, BTreeSet<VertexId>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("decomposition nodes do not form a tree")]
    NotATree,
    #[error("tree edge references node {0} that has no bag")]
    UnknownNode(u32),
    #[error("vertex {0} appears in no bag")]
    VertexUncovered(VertexId),
    #[error("the bags containing vertex {0} do not induce a connected subtree")]
    VertexNotConnected(VertexId),
    #[error("edge {0}-{1} is contained in no bag")]
    EdgeUncovered(VertexId, VertexId),
    #[error("bag {node} contains vertex {vertex} that is not in the graph")]
    ForeignVertex { node: u32, vertex: VertexId },
}

impl TreeDecomposition {
    /// Single node with one bag.
    pub fn single(bag: BTreeSet<VertexId>) -> Self {
        TreeDecomposition {
            tree_edges: Vec::new(),
            bags: BTreeMap::from([(0, bag)]),
        }
    }

    pub fn width(&self) -> i64 {
        self.bags
            .values()
            .map(|b| b.len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Decomposition tree as a `Graph` over node ids.
    pub fn tree(&self) -> Graph {
        Graph::from_parts(self.bags.keys().copied(), self.tree_edges.iter().copied())
            .expect("tree edges are loop-free")
    }

    /// Applies a map to every bag element, keeping the tree shape.
    pub fn map_bags<F>(&self, mut f: F) -> TreeDecomposition
    where
        F: FnMut(VertexId) -> Vec<VertexId>,
    {
        let bags = self
            .bags
            .iter()
            .map(|(&n, bag)| (n, bag.iter().flat_map(|&v| f(v)).collect()))
            .collect();
        TreeDecomposition {
            tree_edges: self.tree_edges.clone(),
            bags,
        }
    }
}

/// Checks the three tree-decomposition axioms for `td` against `g` and
/// returns the width. Vertices in bags must belong to `g`; every vertex and
/// every edge of `g` must be covered; the nodes holding any fixed vertex must
/// induce a connected subtree.
pub fn validate_decomposition(
    g: &Graph,
    td: &TreeDecomposition,
) -> Result<i64, DecompositionError> {
    for &(a, b) in &td.tree_edges {
        if !td.bags.contains_key(&a) {
            return Err(DecompositionError::UnknownNode(a));
        }
        if !td.bags.contains_key(&b) {
            return Err(DecompositionError::UnknownNode(b));
        }
    }
    let tree = self_loop_free_tree(&td.tree_edges, td.bags.keys().copied())
        .ok_or(DecompositionError::NotATree)?;

    for (&node, bag) in &td.bags {
        for &v in bag {
            if !g.has_vertex(v) {
                return Err(DecompositionError::ForeignVertex { node, vertex: v });
            }
        }
    }

    // Vertex coverage and subtree connectivity.
    for v in g.vertices() {
        let holders: BTreeSet<u32> = td
            .bags
            .iter()
            .filter(|(_, bag)| bag.contains(&v))
            .map(|(&n, _)| n)
            .collect();
        let Some(&start) = holders.iter().next() else {
            return Err(DecompositionError::VertexUncovered(v));
        };
        // BFS restricted to holder nodes.
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(n) = stack.pop() {
            for m in tree.neighbours(n) {
                if holders.contains(&m) && seen.insert(m) {
                    stack.push(m);
                }
            }
        }
        if seen.len() != holders.len() {
            return Err(DecompositionError::VertexNotConnected(v));
        }
    }

    for (u, v) in g.edges() {
        let covered = td.bags.values().any(|bag| bag.contains(&u) && bag.contains(&v));
        if !covered {
            return Err(DecompositionError::EdgeUncovered(u, v));
        }
    }

    Ok(td.width())
}

fn self_loop_free_tree(
    edges: &[(u32, u32)],
    nodes: impl Iterator<Item = u32>,
) -> Option<Graph> {
    let mut tree = Graph::new();
    for n in nodes {
        tree.add_vertex(n);
    }
    for &(a, b) in edges {
        if a == b || tree.has_edge(a, b) {
            return None;
        }
        tree.add_edge(a, b).ok()?;
    }
    if tree.vertex_count() == 0 || tree.is_tree() {
        Some(tree)
    } else {
        None
    }
}
