//! Simple undirected graphs with integer vertex ids, plus the exact solvers
//! and witness types built on top of them.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

pub mod canon;
pub mod decomposition;
pub mod degeneracy;
pub mod generate;
pub mod minors;
pub mod reference;
pub mod subgraphs;
pub mod topminors;
pub mod treewidth;

pub use decomposition::TreeDecomposition;
pub use minors::MinorCertificate;
pub use topminors::TopologicalMinorCertificate;

pub type VertexId = u32;

/// Index of an edge in the lexicographically sorted edge list of its graph.
/// Crossing graphs use these as vertex ids.
pub type EdgeId = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(VertexId),
    #[error("vertex {0} does not exist")]
    MissingVertex(VertexId),
    #[error("edge {0}-{1} does not exist")]
    MissingEdge(VertexId, VertexId),
    #[error("graph is disconnected, operation requires a connected graph")]
    Disconnected,
    #[error("graph has {found} vertices, solver is capped at {cap} (override the cap to force)")]
    SizeAboveCap { found: usize, cap: usize },
    #[error("expected a tree, found a graph with a cycle or disconnection")]
    NotATree,
    #[error("parameter out of range: {0}")]
    BadParameter(String),
}

/// Undirected simple graph. Vertices are arbitrary `u32` ids; adjacency is
/// kept in ordered maps so every iteration order (and every serialization)
/// is deterministic. Vertices may carry optional string labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
    labels: BTreeMap<VertexId, String>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Builds a graph from explicit vertex and edge lists.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (u, v) in edges {
            g.add_vertex(u);
            g.add_vertex(v);
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let present = self.adj.get(&u).is_some_and(|s| s.contains(&v));
        if !present {
            return Err(GraphError::MissingEdge(u, v));
        }
        self.adj.get_mut(&u).unwrap().remove(&v);
        self.adj.get_mut(&v).unwrap().remove(&u);
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        let neighbours = self.adj.remove(&v).ok_or(GraphError::MissingVertex(v))?;
        for u in neighbours {
            self.adj.get_mut(&u).unwrap().remove(&v);
        }
        self.labels.remove(&v);
        Ok(())
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) -> Result<(), GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::MissingVertex(v));
        }
        self.labels.insert(v, label.into());
        Ok(())
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&u, nbrs) in &self.adj {
            for &v in nbrs.range((u + 1)..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, |s| s.len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.adj.keys().next_back().copied()
    }

    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Graph {
        let mut g = Graph::new();
        for &v in keep {
            if self.has_vertex(v) {
                g.add_vertex(v);
            }
        }
        for (u, v) in self.edges() {
            if keep.contains(&u) && keep.contains(&v) {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Contracts edge `uv`, keeping the smaller id. The merged vertex absorbs
    /// both neighbourhoods (parallel edges collapse, loops vanish).
    pub fn contract_edge(&mut self, u: VertexId, v: VertexId) -> Result<VertexId, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let moved: Vec<VertexId> = self.neighbours(gone).collect();
        self.remove_vertex(gone)?;
        for w in moved {
            if w != keep {
                self.add_edge(keep, w)?;
            }
        }
        Ok(keep)
    }

    pub fn bfs_distances(&self, source: VertexId) -> BTreeMap<VertexId, usize> {
        let mut dist = BTreeMap::new();
        if !self.has_vertex(source) {
            return dist;
        }
        dist.insert(source, 0usize);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for w in self.neighbours(v) {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                    e.insert(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(v) => self.bfs_distances(v).len() == self.vertex_count(),
        }
    }

    pub fn connected_components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp: BTreeSet<VertexId> = self.bfs_distances(v).into_keys().collect();
            seen.extend(comp.iter().copied());
            comps.push(comp);
        }
        comps
    }

    pub fn is_tree(&self) -> bool {
        !self.adj.is_empty()
            && self.is_connected()
            && self.edge_count() == self.vertex_count() - 1
    }

    /// Eccentricity-minimizing distance: `max_u dist(v, u)` minimized over `v`.
    /// Errors on disconnected or empty graphs.
    pub fn radius(&self) -> Result<usize, GraphError> {
        if self.adj.is_empty() || !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut best = usize::MAX;
        for v in self.vertices() {
            let ecc = self.bfs_distances(v).into_values().max().unwrap();
            best = best.min(ecc);
        }
        Ok(best)
    }

    /// Vertices achieving the minimum eccentricity, smallest id first.
    pub fn centers(&self) -> Result<Vec<VertexId>, GraphError> {
        let r = self.radius()?;
        Ok(self
            .vertices()
            .filter(|&v| self.bfs_distances(v).into_values().max().unwrap() == r)
            .collect())
    }

    /// GraphViz DOT rendering.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in self.vertices() {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<VertexId, String>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            vertices: self.vertices().collect(),
            edges: self.edges(),
            labels: self.labels.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        for &(u, v) in &repr.edges {
            if !repr.vertices.contains(&u) || !repr.vertices.contains(&v) {
                return Err(D::Error::custom(format!(
                    "edge {u}-{v} references a vertex missing from the vertex list"
                )));
            }
        }
        let mut g = Graph::from_parts(repr.vertices, repr.edges).map_err(D::Error::custom)?;
        for (v, label) in repr.labels {
            g.set_label(v, label).map_err(D::Error::custom)?;
        }
        Ok(g)
    }
}

/// Stable edge numbering: edges sorted lexicographically as `(min, max)`
/// pairs, ids are positions in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIndex {
    pairs: Vec<(VertexId, VertexId)>,
    ids: BTreeMap<(VertexId, VertexId), EdgeId>,
}

impl EdgeIndex {
    pub fn of(graph: &Graph) -> Self {
        let pairs = graph.edges();
        let ids = pairs
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as EdgeId))
            .collect();
        EdgeIndex { pairs, ids }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn id_of(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.ids.get(&key).copied()
    }

    pub fn pair(&self, id: EdgeId) -> (VertexId, VertexId) {
        self.pairs[id as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, (VertexId, VertexId))> + '_ {
        self.pairs.iter().enumerate().map(|(i, &e)| (i as EdgeId, e))
    }
}
