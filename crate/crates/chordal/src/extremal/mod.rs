//! Families of drawings with extreme crossing-graph structure, each bundled
//! with the certificate objects (decompositions, minor witnesses, edge
//! bundles) that pin down why the family is extreme.

mod expander;
mod star_forest;

pub(crate) use expander::connector_interval;
pub use expander::two_degenerate_expander;
pub use star_forest::star_forest_construction;

use crate::drawing::{map_graph, CircularDrawing, CrossingGraph, DrawingError, StraightLineDrawing};
use crate::graph::decomposition::TreeDecomposition;
use crate::graph::minors::MinorCertificate;
use crate::graph::{generate, EdgeId, Graph, GraphError, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("input must be a tree")]
    NotATree,
    #[error("tree vertex degree exceeds three")]
    DegreeExceedsThree,
    #[error("instance too large: {found} exceeds cap {cap}")]
    TooLarge { found: usize, cap: usize },
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal contract violated: {0}")]
    InternalContract(String),
}

/// A construction is drawn either on the circle or in the plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstructionDrawing {
    Circular(CircularDrawing),
    Straight(StraightLineDrawing),
}

impl ConstructionDrawing {
    pub fn graph(&self) -> &Graph {
        match self {
            ConstructionDrawing::Circular(d) => d.graph(),
            ConstructionDrawing::Straight(d) => d.graph(),
        }
    }

    pub fn crossing_graph(&self) -> CrossingGraph {
        match self {
            ConstructionDrawing::Circular(d) => d.crossing_graph(),
            ConstructionDrawing::Straight(d) => d.crossing_graph(),
        }
    }

    pub fn circular(&self) -> Option<&CircularDrawing> {
        match self {
            ConstructionDrawing::Circular(d) => Some(d),
            ConstructionDrawing::Straight(_) => None,
        }
    }
}

/// One checkable claim attached to a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    Minor(MinorCertificate),
    Decomposition(TreeDecomposition),
    EdgeSets(Vec<Vec<EdgeId>>),
    Graph(Graph),
    Value(i64),
}

/// A drawing together with named witnesses for the properties that make it
/// interesting. Witnesses are data, not proofs: the test suites re-validate
/// every one of them against the drawing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledConstruction {
    pub drawing: ConstructionDrawing,
    pub witnesses: BTreeMap<String, Witness>,
    pub notes: Vec<String>,
}

impl LabeledConstruction {
    fn circular(d: CircularDrawing) -> Self {
        LabeledConstruction {
            drawing: ConstructionDrawing::Circular(d),
            witnesses: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    fn straight(d: StraightLineDrawing) -> Self {
        LabeledConstruction {
            drawing: ConstructionDrawing::Straight(d),
            witnesses: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    fn with(mut self, name: &str, w: Witness) -> Self {
        self.witnesses.insert(name.to_owned(), w);
        self
    }

    fn note(mut self, s: &str) -> Self {
        self.notes.push(s.to_owned());
        self
    }
}

/// The n×n grid drawn row by row. Any two crossing edges touch a common row,
/// so the edge sets `E_i` ("all edges incident to row i") form a path
/// decomposition of the crossing graph of width under `3n`, even though the
/// grid itself has treewidth `n`.
pub fn grid_row_drawing(n: usize) -> Result<LabeledConstruction, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::BadParameter("grid size must be positive".into()));
    }
    let g = generate::grid(n)?;
    let order: Vec<VertexId> = (0..(n * n) as VertexId).collect();
    let d = CircularDrawing::make_circular(g, &order)?;

    let edges = d.edge_ids();
    let row = |v: VertexId| v as usize / n;
    let mut bags: BTreeMap<u32, BTreeSet<EdgeId>> = BTreeMap::new();
    for i in 0..n {
        let bag = (0..edges.len() as EdgeId)
            .filter(|&e| {
                let (u, v) = edges.pair(e);
                row(u) == i || row(v) == i
            })
            .collect();
        bags.insert(i as u32, bag);
    }
    let td = TreeDecomposition {
        tree_edges: (0..n.saturating_sub(1) as u32).map(|i| (i, i + 1)).collect(),
        bags,
    };

    Ok(LabeledConstruction::circular(d)
        .with("E_path_decomposition", Witness::Decomposition(td))
        .note("row-by-row circular drawing of the square grid")
        .note("bag i = edges incident to row i; crossing edges always share a row"))
}

/// A chord diagram whose crossing graph is exactly K_{t,t}: two nested
/// bundles of t chords each, arranged so that chords within a bundle are
/// pairwise disjoint while every cross-bundle pair interleaves.
pub fn ktt_chord_diagram(t: usize) -> Result<LabeledConstruction, ConstructionError> {
    if t == 0 {
        return Err(ConstructionError::BadParameter("bundle size must be positive".into()));
    }
    let t32 = t as VertexId;
    let mut g = Graph::new();
    for v in 0..4 * t32 {
        g.add_vertex(v);
    }
    for i in 1..=t32 {
        g.add_edge(i - 1, 3 * t32 - i)?; // a_i, nested around the far arc
    }
    for j in 1..=t32 {
        g.add_edge(t32 + j - 1, 4 * t32 - j)?; // b_j, nested around the wrap
    }
    let order: Vec<VertexId> = (0..4 * t32).collect();
    let d = CircularDrawing::make_circular(g, &order)?;

    let bundles = vec![
        (0..t as EdgeId).collect::<Vec<_>>(),
        (t as EdgeId..2 * t as EdgeId).collect::<Vec<_>>(),
    ];
    Ok(LabeledConstruction::circular(d)
        .with("bundles", Witness::EdgeSets(bundles))
        .note("crossing graph is K_{t,t} with the two bundles as its sides"))
}

/// A tree of maximum degree three plus a vertex adjacent to everything. The
/// result has treewidth 2 (witnessed by an explicit decomposition along the
/// tree) yet contains no K_{2,4} topological minor.
pub fn tree_plus_dominant(tree: &Graph) -> Result<LabeledConstruction, ConstructionError> {
    if !tree.is_tree() {
        return Err(ConstructionError::NotATree);
    }
    if tree.max_degree() > 3 {
        return Err(ConstructionError::DegreeExceedsThree);
    }

    let apex = tree.max_vertex_id().expect("trees are nonempty") + 1;
    let mut g = tree.clone();
    g.add_vertex(apex);
    for v in tree.vertices() {
        g.add_edge(v, apex)?;
    }

    // One bag per tree vertex: itself, its parent, and the apex.
    let root = tree.vertices().next().expect("trees are nonempty");
    let mut bags: BTreeMap<u32, BTreeSet<VertexId>> = BTreeMap::new();
    let mut tree_edges = Vec::new();
    bags.insert(root, BTreeSet::from([root, apex]));
    let mut queue = VecDeque::from([root]);
    let mut seen = BTreeSet::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in tree.neighbours(v) {
            if seen.insert(w) {
                bags.insert(w, BTreeSet::from([w, v, apex]));
                tree_edges.push((v, w));
                queue.push_back(w);
            }
        }
    }
    let td = TreeDecomposition { tree_edges, bags };

    let order: Vec<VertexId> = g.vertices().collect();
    let d = CircularDrawing::make_circular(g, &order)?;
    Ok(LabeledConstruction::circular(d)
        .with("width2_decomposition", Witness::Decomposition(td))
        .note("tree of maximum degree three plus a dominant apex")
        .note("no K_{2,4} topological minor despite treewidth 2"))
}

/// The strong product of a tree with K_m, drawn by expanding each vertex of
/// a crossing-free circular drawing of the tree into a block of m points.
/// Crossing edges always touch a common block, so the sets `W_v` of edges
/// incident to block v form a tree decomposition of the crossing graph of
/// width under `(Δ+1)·m²`.
pub fn product_drawing(tree: &Graph, m: usize) -> Result<LabeledConstruction, ConstructionError> {
    if !tree.is_tree() {
        return Err(ConstructionError::NotATree);
    }
    if m == 0 {
        return Err(ConstructionError::BadParameter("block size must be positive".into()));
    }

    let prod = generate::strong_product(tree, &generate::complete(m));
    let tv: Vec<VertexId> = tree.vertices().collect();
    let rank: BTreeMap<VertexId, usize> = tv.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // DFS preorder gives an outerplanar order of the tree: blocks of
    // adjacent tree vertices never interleave, so tree edges never cross.
    let start = tv[0];
    let mut order_tree = Vec::with_capacity(tv.len());
    let mut stack = vec![start];
    let mut seen = BTreeSet::from([start]);
    while let Some(v) = stack.pop() {
        order_tree.push(v);
        let mut fresh: Vec<VertexId> = tree.neighbours(v).filter(|w| seen.insert(*w)).collect();
        fresh.reverse();
        stack.extend(fresh);
    }

    let order: Vec<VertexId> = order_tree
        .iter()
        .flat_map(|v| (0..m).map(|i| (rank[v] * m + i) as VertexId))
        .collect();
    let d = CircularDrawing::make_circular(prod, &order)?;

    let edges = d.edge_ids();
    let block_of = |p: VertexId| tv[p as usize / m];
    let mut bags: BTreeMap<u32, BTreeSet<EdgeId>> = tv.iter().map(|&v| (v, BTreeSet::new())).collect();
    for e in 0..edges.len() as EdgeId {
        let (u, v) = edges.pair(e);
        bags.get_mut(&block_of(u)).unwrap().insert(e);
        bags.get_mut(&block_of(v)).unwrap().insert(e);
    }
    let td = TreeDecomposition {
        tree_edges: tree.edges(),
        bags,
    };

    Ok(LabeledConstruction::circular(d)
        .with("Wv_decomposition", Witness::Decomposition(td))
        .note("strong product of a tree with a clique, blocks drawn consecutively")
        .note("crossing edges share a block, so incidence bags decompose the crossing graph"))
}

/// Concentric rings of m pairwise-crossing chords, each ring also crossing
/// the next one, used as a deep-map-graph fixture. The achieved map-graph
/// radius is measured and attached, not assumed.
pub fn nested_polygon_drawing(layers: usize, m: usize) -> Result<LabeledConstruction, ConstructionError> {
    if layers == 0 {
        return Err(ConstructionError::BadParameter("need at least one layer".into()));
    }
    if m < 3 {
        return Err(ConstructionError::BadParameter("need at least three chords per layer".into()));
    }
    let total = (2 * m * layers) as VertexId;
    let l = layers as VertexId;
    let mut g = Graph::new();
    for v in 0..total {
        g.add_vertex(v);
    }
    let mut ring_chords: Vec<Vec<(VertexId, VertexId)>> = Vec::with_capacity(layers);
    for k in 0..l {
        let mut chords = Vec::with_capacity(m);
        for i in 0..m as VertexId {
            let a = (2 * l * i + l - 1 - k) % total;
            let b = (2 * l * (i + 1) + l + k) % total;
            g.add_edge(a, b)?;
            chords.push((a, b));
        }
        ring_chords.push(chords);
    }
    let order: Vec<VertexId> = (0..total).collect();
    let d = CircularDrawing::make_circular(g, &order)?;

    let edges = d.edge_ids();
    let rings: Vec<Vec<EdgeId>> = ring_chords
        .iter()
        .map(|chords| {
            chords
                .iter()
                .map(|&(a, b)| edges.id_of(a, b).expect("chord was just added"))
                .collect()
        })
        .collect();

    let rad = map_graph(&d.planarise()?).radius()?;
    Ok(LabeledConstruction::circular(d)
        .with("rings", Witness::EdgeSets(rings))
        .with("map_radius", Witness::Value(rad as i64))
        .note("each ring induces a cycle in the crossing graph; rings cross their neighbours"))
}

/// K_{2,n} and all of its subdivisions with at most `max_division` division
/// vertices, deduplicated up to swapping the two hubs and permuting the
/// leaves. Total vertex count is capped at 10 to keep downstream exhaustive
/// order enumeration feasible.
pub fn k2n_subdivision_suite(n: usize, max_division: usize) -> Result<Vec<Graph>, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::BadParameter("need at least one leaf".into()));
    }
    let found = 2 + n + max_division;
    if found > 10 {
        return Err(ConstructionError::TooLarge { found, cap: 10 });
    }
    let base = generate::complete_bipartite(2, n);

    // A subdivision assigns a division count to each of the 2n edges; encode
    // it per leaf as the pair (count towards hub 0, count towards hub 1).
    let mut configs: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut pairs = vec![(0usize, 0usize); n];
    fill_configs(&mut pairs, 0, max_division, &mut configs);

    let mut out = Vec::new();
    for config in configs {
        let mut counts: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
        for (leaf, &(x, y)) in config.iter().enumerate() {
            let lv = (2 + leaf) as VertexId;
            counts.insert((0, lv), x);
            counts.insert((1, lv), y);
        }
        out.push(generate::subdivide(&base, &counts)?);
    }
    Ok(out)
}

fn fill_configs(
    pairs: &mut Vec<(usize, usize)>,
    leaf: usize,
    budget: usize,
    out: &mut BTreeSet<Vec<(usize, usize)>>,
) {
    if leaf == pairs.len() {
        let mut sorted = pairs.clone();
        sorted.sort_unstable();
        let mut swapped: Vec<(usize, usize)> = pairs.iter().map(|&(x, y)| (y, x)).collect();
        swapped.sort_unstable();
        out.insert(sorted.min(swapped));
        return;
    }
    for x in 0..=budget {
        for y in 0..=budget - x {
            pairs[leaf] = (x, y);
            fill_configs(pairs, leaf + 1, budget - x - y, out);
        }
    }
    pairs[leaf] = (0, 0);
}

#[cfg(test)]
#[allow(clippy::int_plus_one)] // bounds are asserted in their stated `k − 1` form
mod tests {
    use super::*;
    use crate::dominance::{extract_cycle_layers, validate_cycle_layers};
    use crate::graph::decomposition::validate_decomposition;
    use crate::graph::topminors::find_topological_minor;
    use crate::graph::treewidth::treewidth_exact;
    use crate::graph::{canon, subgraphs};

    fn crossing_graph_of(c: &LabeledConstruction) -> Graph {
        c.drawing.crossing_graph().graph().clone()
    }

    fn decomposition<'a>(c: &'a LabeledConstruction, name: &str) -> &'a TreeDecomposition {
        match &c.witnesses[name] {
            Witness::Decomposition(td) => td,
            other => panic!("expected decomposition for {name}, got {other:?}"),
        }
    }

    #[test]
    fn single_row_grid_has_no_crossings() {
        let c = grid_row_drawing(1).unwrap();
        let x = crossing_graph_of(&c);
        assert_eq!(x.edge_count(), 0);
        validate_decomposition(&x, decomposition(&c, "E_path_decomposition")).unwrap();
    }

    #[test]
    fn grid_rows_decompose_the_crossing_graph() {
        for n in [2, 3, 4] {
            let c = grid_row_drawing(n).unwrap();
            let x = crossing_graph_of(&c);
            let td = decomposition(&c, "E_path_decomposition");
            assert!(td.bags.values().all(|b| b.len() <= 3 * n - 1));
            let width = validate_decomposition(&x, td).unwrap();
            assert!(width <= 3 * n as i64);
        }
    }

    #[test]
    fn grid_four_has_treewidth_four() {
        let c = grid_row_drawing(4).unwrap();
        let (tw, _) = treewidth_exact(c.drawing.graph(), 18).unwrap();
        assert_eq!(tw, 4);
    }

    #[test]
    fn chord_bundles_cross_exactly_across() {
        for t in 1..=4usize {
            let c = ktt_chord_diagram(t).unwrap();
            let x = crossing_graph_of(&c);
            let t = t as EdgeId;
            for e in 0..t {
                for f in 0..t {
                    assert!(x.has_edge(e, t + f), "a_{e} should cross b_{f}");
                    if e < f {
                        assert!(!x.has_edge(e, f), "bundle a is nested");
                        assert!(!x.has_edge(t + e, t + f), "bundle b is nested");
                    }
                }
            }
        }
    }

    #[test]
    fn small_chord_diagrams_match_known_graphs() {
        let x1 = crossing_graph_of(&ktt_chord_diagram(1).unwrap());
        assert!(canon::isomorphic(&x1, &generate::path(2).unwrap()).unwrap());

        let x2 = crossing_graph_of(&ktt_chord_diagram(2).unwrap());
        assert!(canon::isomorphic(&x2, &generate::cycle(4).unwrap()).unwrap());

        let x3 = crossing_graph_of(&ktt_chord_diagram(3).unwrap());
        assert!(canon::isomorphic(&x3, &generate::complete_bipartite(3, 3)).unwrap());
        let (tw, _) = treewidth_exact(&x3, 18).unwrap();
        assert_eq!(tw, 3);
    }

    #[test]
    fn dominated_tree_has_width_two_and_no_k24_subdivision() {
        let path = generate::path(4).unwrap();
        let c = tree_plus_dominant(&path).unwrap();
        let g = c.drawing.graph();
        validate_decomposition(g, decomposition(&c, "width2_decomposition")).unwrap();
        assert_eq!(decomposition(&c, "width2_decomposition").width(), 2);
        let (tw, _) = treewidth_exact(g, 18).unwrap();
        assert_eq!(tw, 2);

        let pattern = generate::complete_bipartite(2, 4);
        assert!(find_topological_minor(g, &pattern).is_none());
    }

    #[test]
    fn dominated_binary_tree_is_k24_free() {
        let t = generate::complete_binary_tree(2);
        let c = tree_plus_dominant(&t).unwrap();
        let g = c.drawing.graph();
        let (tw, _) = treewidth_exact(g, 18).unwrap();
        assert_eq!(tw, 2);
        assert!(find_topological_minor(g, &generate::complete_bipartite(2, 4)).is_none());
    }

    #[test]
    fn dominated_single_vertex_is_an_edge() {
        let mut k1 = Graph::new();
        k1.add_vertex(0);
        let c = tree_plus_dominant(&k1).unwrap();
        assert_eq!(c.drawing.graph().edge_count(), 1);
        let (tw, _) = treewidth_exact(c.drawing.graph(), 18).unwrap();
        assert_eq!(tw, 1);
    }

    #[test]
    fn dominant_rejects_bad_input() {
        assert_eq!(
            tree_plus_dominant(&generate::cycle(4).unwrap()).unwrap_err(),
            ConstructionError::NotATree
        );
        assert_eq!(
            tree_plus_dominant(&generate::complete_bipartite(1, 4)).unwrap_err(),
            ConstructionError::DegreeExceedsThree
        );
    }

    #[test]
    fn product_with_single_block_is_crossing_free() {
        let tree = generate::random_tree(6, 3, 11).unwrap();
        let c = product_drawing(&tree, 1).unwrap();
        assert_eq!(crossing_graph_of(&c).edge_count(), 0);
        validate_decomposition(&crossing_graph_of(&c), decomposition(&c, "Wv_decomposition"))
            .unwrap();
    }

    #[test]
    fn product_path_decomposition_respects_the_bound() {
        let tree = generate::path(3).unwrap();
        let c = product_drawing(&tree, 2).unwrap();
        let x = crossing_graph_of(&c);
        let td = decomposition(&c, "Wv_decomposition");
        let width = validate_decomposition(&x, td).unwrap();
        assert!(width <= 3 * 4 - 1);
    }

    #[test]
    fn product_crossings_share_a_tree_vertex() {
        let star = generate::complete_bipartite(1, 3);
        let m = 2;
        let c = product_drawing(&star, m).unwrap();
        let d = c.drawing.circular().unwrap();
        let edges = d.edge_ids();
        let tv: Vec<VertexId> = star.vertices().collect();
        let block_of = |p: VertexId| tv[p as usize / m];
        for (e, f) in d.crossing_pairs() {
            let (a, b) = edges.pair(e);
            let (x, y) = edges.pair(f);
            let eb = BTreeSet::from([block_of(a), block_of(b)]);
            let fb = BTreeSet::from([block_of(x), block_of(y)]);
            assert!(!eb.is_disjoint(&fb), "crossing pair without a shared block");
        }
        let td = decomposition(&c, "Wv_decomposition");
        let width = validate_decomposition(&crossing_graph_of(&c), td).unwrap();
        assert!(width <= 4 * 4 - 1, "Δ=3 star blocks stay within (Δ+1)m²");
    }

    #[test]
    fn single_ring_is_the_crossing_triangle() {
        let c = nested_polygon_drawing(1, 3).unwrap();
        let x = crossing_graph_of(&c);
        assert!(canon::isomorphic(&x, &generate::cycle(3).unwrap()).unwrap());
        assert_eq!(c.witnesses["map_radius"], Witness::Value(1));
    }

    #[test]
    fn every_ring_induces_a_cycle() {
        for (layers, m) in [(2usize, 5usize), (3, 4), (4, 4)] {
            let c = nested_polygon_drawing(layers, m).unwrap();
            let x = crossing_graph_of(&c);
            let rings = match &c.witnesses["rings"] {
                Witness::EdgeSets(r) => r,
                other => panic!("expected edge sets, got {other:?}"),
            };
            assert_eq!(rings.len(), layers);
            for ring in rings {
                assert_eq!(ring.len(), m);
                let induced = x.induced_subgraph(&ring.iter().copied().collect());
                assert!(induced.is_connected());
                assert!(induced.vertices().all(|v| induced.degree(v) == 2));
            }
        }
    }

    #[test]
    fn deep_rings_admit_cycle_extraction() {
        let c = nested_polygon_drawing(2, 5).unwrap();
        let d = c.drawing.circular().unwrap();
        let rad = match c.witnesses["map_radius"] {
            Witness::Value(v) => v,
            _ => unreachable!(),
        };
        assert!(rad >= 2);
        let layers = extract_cycle_layers(d, 1).unwrap();
        validate_cycle_layers(&d.crossing_graph(), &layers).unwrap();

        let c = nested_polygon_drawing(4, 4).unwrap();
        let d = c.drawing.circular().unwrap();
        let rad = match c.witnesses["map_radius"] {
            Witness::Value(v) => v,
            _ => unreachable!(),
        };
        assert!(rad >= 4, "four rings reach map radius 4, got {rad}");
        let layers = extract_cycle_layers(d, 2).unwrap();
        assert_eq!(layers.layers.len(), 2);
        validate_cycle_layers(&d.crossing_graph(), &layers).unwrap();
    }

    #[test]
    fn polygon_rejects_degenerate_parameters() {
        assert!(matches!(
            nested_polygon_drawing(0, 4),
            Err(ConstructionError::BadParameter(_))
        ));
        assert!(matches!(
            nested_polygon_drawing(2, 2),
            Err(ConstructionError::BadParameter(_))
        ));
    }

    #[test]
    fn undivided_suite_is_the_base_graph() {
        let suite = k2n_subdivision_suite(4, 0).unwrap();
        assert_eq!(suite.len(), 1);
        assert!(canon::isomorphic(&suite[0], &generate::complete_bipartite(2, 4)).unwrap());
    }

    #[test]
    fn small_suites_have_the_expected_size() {
        // Division classes with ≤ 2 division vertices: none, one on a single
        // edge, two on one edge, two on the two edges of one leaf, two on
        // same-hub edges of different leaves, two on opposite-hub edges.
        for n in [3, 4] {
            let suite = k2n_subdivision_suite(n, 2).unwrap();
            assert_eq!(suite.len(), 6, "n = {n}");
            let max = 2 + n + 2;
            assert!(suite.iter().all(|g| g.vertex_count() <= max));
        }
    }

    #[test]
    fn suite_distinguishes_hubs_beyond_isomorphism() {
        // Placing two divisions on different hub sides of different leaves
        // gives the same abstract graph as placing them on the same side, but
        // the hub assignment differs, so both members stay in the suite: only
        // pattern symmetry is quotiented out, not graph isomorphism.
        let suite = k2n_subdivision_suite(3, 2).unwrap();
        let classes: BTreeSet<_> = suite
            .iter()
            .map(|g| canon::canonical_form(g).unwrap())
            .collect();
        assert_eq!(classes.len(), 4);
    }

    #[test]
    fn suite_enforces_the_size_cap() {
        assert_eq!(
            k2n_subdivision_suite(7, 2).unwrap_err(),
            ConstructionError::TooLarge { found: 11, cap: 10 }
        );
    }

    #[test]
    fn k2n_graphs_still_contain_the_hubs() {
        for g in k2n_subdivision_suite(3, 2).unwrap() {
            let w = subgraphs::find_kst_subgraph(&g, 1, 3);
            assert!(w.is_some(), "hub of degree 3 survives subdivision");
        }
    }
}
