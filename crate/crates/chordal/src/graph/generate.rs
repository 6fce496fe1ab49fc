//! Graph family generators, the strong product, and edge subdivision.
//!
//! Vertex id conventions are fixed per family and documented on each
//! constructor so callers (and serialized artifacts) can rely on them.

use super::{EdgeIndex, Graph, GraphError, VertexId};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// `n x n` grid. Vertex `(row r, column c)` has id `r*n + c`, rows and
/// columns both `0..n`.
pub fn grid(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadParameter("grid size must be positive".into()));
    }
    let idx = |r: usize, c: usize| (r * n + c) as VertexId;
    let mut g = Graph::new();
    for r in 0..n {
        for c in 0..n {
            g.add_vertex(idx(r, c));
            if c + 1 < n {
                g.add_edge(idx(r, c), idx(r, c + 1))?;
            }
            if r + 1 < n {
                g.add_edge(idx(r, c), idx(r + 1, c))?;
            }
        }
    }
    Ok(g)
}

/// Complete graph on vertices `0..n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v as VertexId);
        for u in 0..v {
            g.add_edge(u as VertexId, v as VertexId).unwrap();
        }
    }
    g
}

/// Complete bipartite graph: left part `0..a`, right part `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new();
    for v in 0..(a + b) {
        g.add_vertex(v as VertexId);
    }
    for u in 0..a {
        for v in a..(a + b) {
            g.add_edge(u as VertexId, v as VertexId).unwrap();
        }
    }
    g
}

/// Complete binary tree of the given height (a single root for height 0).
/// Heap layout: the children of `i` are `2i+1` and `2i+2`.
pub fn complete_binary_tree(height: usize) -> Graph {
    let n = (1usize << (height + 1)) - 1;
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v as VertexId);
    }
    for v in 1..n {
        g.add_edge(v as VertexId, ((v - 1) / 2) as VertexId).unwrap();
    }
    g
}

/// Path on vertices `0..n` in order.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadParameter("path needs a vertex".into()));
    }
    let mut g = Graph::new();
    g.add_vertex(0);
    for v in 1..n {
        g.add_vertex(v as VertexId);
        g.add_edge((v - 1) as VertexId, v as VertexId)?;
    }
    Ok(g)
}

/// Cycle on vertices `0..n` in order (`n >= 3`).
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParameter("cycle needs >= 3 vertices".into()));
    }
    let mut g = path(n)?;
    g.add_edge(0, (n - 1) as VertexId)?;
    Ok(g)
}

/// Random tree on vertices `0..size` with maximum degree `max_degree`,
/// deterministic in `seed`. Vertex `v` attaches to a uniformly random
/// earlier vertex that still has spare degree.
pub fn random_tree(size: usize, max_degree: usize, seed: u64) -> Result<Graph, GraphError> {
    if size == 0 {
        return Err(GraphError::BadParameter("tree needs a vertex".into()));
    }
    if size > 1 && max_degree < 2 {
        return Err(GraphError::BadParameter(
            "max_degree < 2 only fits a single edge or vertex".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new();
    g.add_vertex(0);
    for v in 1..size {
        let candidates: Vec<VertexId> = g.vertices().filter(|&u| g.degree(u) < max_degree).collect();
        if candidates.is_empty() {
            return Err(GraphError::BadParameter(format!(
                "cannot grow a tree of size {size} with max degree {max_degree}"
            )));
        }
        let u = candidates[rng.gen_range(0..candidates.len())];
        g.add_vertex(v as VertexId);
        g.add_edge(u, v as VertexId)?;
    }
    Ok(g)
}

/// Strong product `g ⊠ h`. Vertices are pairs `(u, v)`; the id of a pair is
/// `rank(u) * |V(h)| + rank(v)` where ranks are positions in the sorted
/// vertex orders of the factors.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    let gv: Vec<VertexId> = g.vertices().collect();
    let hv: Vec<VertexId> = h.vertices().collect();
    let id = |gi: usize, hi: usize| (gi * hv.len() + hi) as VertexId;
    let mut out = Graph::new();
    for gi in 0..gv.len() {
        for hi in 0..hv.len() {
            out.add_vertex(id(gi, hi));
        }
    }
    for gi in 0..gv.len() {
        for gj in 0..gv.len() {
            let g_adj = g.has_edge(gv[gi], gv[gj]);
            let g_same = gi == gj;
            if !(g_adj || g_same) {
                continue;
            }
            for hi in 0..hv.len() {
                for hj in 0..hv.len() {
                    let h_adj = h.has_edge(hv[hi], hv[hj]);
                    let h_same = hi == hj;
                    let adjacent = (g_same && h_adj) || (g_adj && h_same) || (g_adj && h_adj);
                    if adjacent && id(gi, hi) < id(gj, hj) {
                        out.add_edge(id(gi, hi), id(gj, hj)).unwrap();
                    }
                }
            }
        }
    }
    out
}

/// Subdivides edges of `g`. `counts` maps an edge (as an unordered pair) to
/// the number of division vertices to insert; unlisted edges are kept as-is.
/// Fresh ids start at `max_id + 1` and are assigned edge by edge in the
/// lexicographic edge order, then along each edge from its smaller endpoint.
pub fn subdivide(
    g: &Graph,
    counts: &BTreeMap<(VertexId, VertexId), usize>,
) -> Result<Graph, GraphError> {
    for &(u, v) in counts.keys() {
        let key_ok = u < v && g.has_edge(u, v);
        if !key_ok {
            return Err(GraphError::MissingEdge(u, v));
        }
    }
    let mut out = Graph::new();
    for v in g.vertices() {
        out.add_vertex(v);
    }
    let mut next = g.max_vertex_id().map_or(0, |m| m + 1);
    for (_, (u, v)) in EdgeIndex::of(g).iter() {
        let k = counts.get(&(u, v)).copied().unwrap_or(0);
        let mut prev = u;
        for _ in 0..k {
            out.add_vertex(next);
            out.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        out.add_edge(prev, v)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_counts() {
        let g = grid(3).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 12);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 3) && g.has_edge(4, 5));
        assert!(!g.has_edge(2, 3)); // row wrap is not an edge
    }

    #[test]
    fn bipartite_and_complete_counts() {
        assert_eq!(complete(5).edge_count(), 10);
        let k23 = complete_bipartite(2, 3);
        assert_eq!(k23.edge_count(), 6);
        assert!(!k23.has_edge(0, 1) && !k23.has_edge(2, 3));
    }

    #[test]
    fn binary_tree_shape() {
        let t = complete_binary_tree(2);
        assert_eq!(t.vertex_count(), 7);
        assert!(t.is_tree());
        assert_eq!(t.degree(0), 2);
        assert_eq!(t.degree(1), 3);
        assert_eq!(t.degree(3), 1);
    }

    #[test]
    fn random_tree_respects_degree_and_seed() {
        let a = random_tree(12, 3, 7).unwrap();
        let b = random_tree(12, 3, 7).unwrap();
        let c = random_tree(12, 3, 8).unwrap();
        assert_eq!(a, b);
        assert!(a.is_tree());
        assert!(a.max_degree() <= 3);
        assert_ne!(a, c, "different seeds should give different trees");
    }

    #[test]
    fn strong_product_path_times_edge() {
        // P_3 ⊠ K_2: 6 vertices; 3 within-column edges, 4 aligned edges,
        // 4 diagonal edges = 11 total.
        let g = strong_product(&path(3).unwrap(), &complete(2));
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 11);
    }

    #[test]
    fn strong_product_with_k1_is_identity_shape() {
        let g = grid(2).unwrap();
        let p = strong_product(&g, &complete(1));
        assert_eq!(p.vertex_count(), g.vertex_count());
        assert_eq!(p.edge_count(), g.edge_count());
    }

    #[test]
    fn subdivide_every_edge_once() {
        // K_{2,3} with every edge subdivided once: 5 + 6 vertices, 12 edges.
        let g = complete_bipartite(2, 3);
        let counts: BTreeMap<_, _> = g.edges().into_iter().map(|e| (e, 1usize)).collect();
        let s = subdivide(&g, &counts).unwrap();
        assert_eq!(s.vertex_count(), 11);
        assert_eq!(s.edge_count(), 12);
        assert_eq!(s.max_degree(), 3);
    }

    #[test]
    fn subdivide_rejects_unknown_edge() {
        let g = path(3).unwrap();
        let counts = BTreeMap::from([((0, 2), 1usize)]);
        assert_eq!(subdivide(&g, &counts), Err(GraphError::MissingEdge(0, 2)));
    }
}
