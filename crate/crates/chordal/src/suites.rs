//! Verification suites: each sweeps one family of instances — seeded random
//! drawings or exhaustive small cases — and re-checks every claim the library
//! makes about it, collecting quantified failures instead of panicking.
//!
//! All randomness flows through one seeded generator, so reports are
//! reproducible; wall time is measured but kept out of the serialized form to
//! keep written reports byte-stable.

use crate::decompositions::{check_section3_bounds, triangulate_via_map, TransferError};
use crate::dominance::{extract_cycle_layers, validate_cycle_layers};
use crate::drawing::{crossing_graph_of_order, CircularDrawing, DrawingError, OrderEnumerator};
use crate::exec::map_items;
use crate::extremal::{
    connector_interval, grid_row_drawing, k2n_subdivision_suite, ktt_chord_diagram,
    nested_polygon_drawing, product_drawing, star_forest_construction, two_degenerate_expander,
    ConstructionDrawing, ConstructionError, Witness,
};
use crate::graph::canon::{enumerate_graphs_up_to_iso, enumerate_trees_up_to_iso, isomorphic};
use crate::graph::decomposition::validate_decomposition;
use crate::graph::degeneracy::degeneracy;
use crate::graph::minors::{hadwiger_exact, validate_minor_certificate};
use crate::graph::reference;
use crate::graph::subgraphs::has_kst_subgraph;
use crate::graph::topminors::hajos_exact;
use crate::graph::treewidth::treewidth_exact;
use crate::graph::{generate, EdgeId, EdgeIndex, Graph, GraphError, VertexId};
use crate::Caps;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::time::Instant;
use thiserror::Error;

/// One failed check: which instance, which inequality or property, and the
/// two sides of the comparison that did not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
}

/// Outcome of one suite run. `wall_time_ms` is informational only and is not
/// serialized: written reports must be byte-identical across runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Transfer(#[from] TransferError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// Scale knobs shared by all suites; every suite reads only the knobs it
/// understands and falls back to the documented default for the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Number of random drawings for the seeded suites.
    pub seeds: usize,
    /// RNG seed for the seeded suites.
    pub seed: u64,
    /// Largest family parameter `t` for the parameterised suites.
    pub t: Option<usize>,
    /// Largest `k` for the K_{k,k}-subgraph suite.
    pub k: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seeds: 200,
            seed: 0,
            t: None,
            k: None,
        }
    }
}

/// Every suite name accepted by [`run_suite`], in documentation order.
pub const SUITE_NAMES: [&str; 11] = [
    "section3",
    "triangulation",
    "cycles-lemma",
    "expander",
    "nok2k",
    "subdivisions",
    "grid",
    "product",
    "star-forest",
    "ktt",
    "solver-oracles",
];

/// Dispatches a suite by name.
pub fn run_suite(
    name: &str,
    opts: &SuiteOptions,
    jobs: usize,
    caps: &Caps,
) -> Result<VerificationReport, SuiteError> {
    match name {
        "section3" => section3_suite(opts.seeds, opts.seed, jobs, caps),
        "triangulation" => triangulation_suite(opts.seeds, opts.seed, jobs),
        "cycles-lemma" => cycles_suite(opts.t.unwrap_or(3), jobs),
        "expander" => expander_suite(opts.t.unwrap_or(6), jobs),
        "nok2k" => nok2k_suite(opts.k.unwrap_or(2), jobs, caps),
        "subdivisions" => subdivision_suite(jobs, caps),
        "grid" => grid_suite(jobs, caps),
        "product" => product_suite(jobs),
        "star-forest" => star_forest_suite(opts.t.unwrap_or(5), jobs),
        "ktt" => ktt_suite(jobs, caps),
        "solver-oracles" => solver_oracle_suite(jobs, caps),
        other => Err(SuiteError::UnknownSuite(other.to_owned())),
    }
}

fn fail(instance: &str, name: &str, lhs: i64, rhs: i64) -> Failure {
    Failure {
        instance: instance.to_owned(),
        name: name.to_owned(),
        lhs,
        rhs,
    }
}

fn report(suite: &str, instances: usize, failures: Vec<Failure>, started: Instant) -> VerificationReport {
    VerificationReport {
        suite: suite.to_owned(),
        instances,
        failures,
        wall_time_ms: started.elapsed().as_millis() as u64,
    }
}

/// `count` random connected circular drawings, deterministic in `seed`:
/// 3–9 vertices, a random spanning tree plus random extra edges up to at most
/// 14 edges total, in a uniformly shuffled circular order.
pub fn random_drawings(count: usize, seed: u64) -> Vec<CircularDrawing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=9usize);
            let mut g = generate::random_tree(n, n, rng.gen())
                .expect("tree parameters are in range");
            let most = (n * (n - 1) / 2).min(14);
            let target = rng.gen_range(n - 1..=most);
            let mut spare: Vec<(VertexId, VertexId)> = Vec::new();
            for u in 0..n as VertexId {
                for v in u + 1..n as VertexId {
                    if !g.has_edge(u, v) {
                        spare.push((u, v));
                    }
                }
            }
            spare.shuffle(&mut rng);
            while g.edge_count() < target {
                let (u, v) = spare.pop().expect("target stays below the clique");
                g.add_edge(u, v).expect("edge was absent");
            }
            let mut order: Vec<VertexId> = (0..n as VertexId).collect();
            order.shuffle(&mut rng);
            CircularDrawing::make_circular(g, &order).expect("order is a permutation")
        })
        .collect()
}

/// Checks the width/radius inequality set on seeded random drawings,
/// including the two lifted decompositions, whose widths are validated
/// against the graphs they claim to decompose.
pub fn section3_suite(
    count: usize,
    seed: u64,
    jobs: usize,
    caps: &Caps,
) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let caps = *caps;
    let items: Vec<(usize, CircularDrawing)> =
        random_drawings(count, seed).into_iter().enumerate().collect();
    let failures = map_items(jobs, items, move |(i, d)| {
        let id = format!("drawing-{i}");
        match check_section3_bounds(&d, &caps) {
            Ok(bounds) => bounds
                .failures()
                .into_iter()
                .map(|e| fail(&id, &e.name, e.lhs, e.rhs))
                .collect(),
            Err(e) => vec![fail(&id, &format!("bounds computation failed: {e}"), 0, 0)],
        }
    });
    Ok(report("section3", count, failures.concat(), started))
}

/// Triangulates the planarisation of each seeded random drawing and checks
/// the radius bound plus the descent property of the face-distance labels:
/// every non-root vertex must have a neighbour strictly closer to the root.
pub fn triangulation_suite(
    count: usize,
    seed: u64,
    jobs: usize,
) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let items: Vec<(usize, CircularDrawing)> =
        random_drawings(count, seed).into_iter().enumerate().collect();
    let failures = map_items(jobs, items, |(i, d)| {
        let id = format!("drawing-{i}");
        let mut fs = Vec::new();
        let p = match d.planarise() {
            Ok(p) => p,
            Err(e) => return vec![fail(&id, &format!("planarise failed: {e}"), 0, 0)],
        };
        let tri = match triangulate_via_map(&p) {
            Ok(t) => t,
            Err(e) => return vec![fail(&id, &format!("triangulation failed: {e}"), 0, 0)],
        };
        let rad_mg = tri.labeling.dist0.values().copied().max().unwrap_or(0);
        if tri.radius > rad_mg + 1 {
            fs.push(fail(
                &id,
                "triangulation radius <= map radius + 1",
                tri.radius as i64,
                rad_mg as i64 + 1,
            ));
        }
        if let Some(f) = tri.faces.iter().find(|f| f.len() != 3) {
            fs.push(fail(&id, "all faces triangular", f.len() as i64, 3));
        }
        for v in tri.graph.vertices() {
            let rv = tri.labeling.rho[&v];
            if rv < 0 {
                continue;
            }
            let best = tri
                .graph
                .neighbours(v)
                .map(|w| tri.labeling.rho[&w])
                .min()
                .unwrap_or(rv);
            if best >= rv {
                fs.push(fail(&id, &format!("descent at vertex {v}"), best, rv - 1));
            }
        }
        fs
    });
    Ok(report("triangulation", count, failures.concat(), started))
}

/// Builds nested-ring fixtures of increasing depth, confirms their map
/// radius is at least `2t`, and checks the cycle-layer extraction succeeds
/// and validates for each `t` up to `t_max`.
pub fn cycles_suite(t_max: usize, jobs: usize) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let items: Vec<usize> = (1..=t_max).collect();
    let failures = map_items(jobs, items, |t| {
        let id = format!("t-{t}");
        let mut fs = Vec::new();
        let c = match nested_polygon_drawing(2 * t, 4) {
            Ok(c) => c,
            Err(e) => return vec![fail(&id, &format!("fixture failed: {e}"), 0, 0)],
        };
        let rad = match &c.witnesses["map_radius"] {
            Witness::Value(v) => *v,
            _ => return vec![fail(&id, "map_radius witness missing", 0, 0)],
        };
        if rad < 2 * t as i64 {
            fs.push(fail(&id, "map radius >= 2t", rad, 2 * t as i64));
        }
        let d = c.drawing.circular().expect("rings are drawn on the circle");
        match extract_cycle_layers(d, t) {
            Ok(layers) => {
                if layers.layers.len() != t {
                    fs.push(fail(&id, "extracted layer count", layers.layers.len() as i64, t as i64));
                }
                if let Err(e) = validate_cycle_layers(&d.crossing_graph(), &layers) {
                    fs.push(fail(&id, &format!("layer validation: {e}"), 0, 0));
                }
            }
            Err(e) => fs.push(fail(&id, &format!("extraction failed: {e}"), 0, 0)),
        }
        fs
    });
    Ok(report("cycles-lemma", t_max, failures.concat(), started))
}

/// Re-checks the expander family: degree bound, 2-degenerate crossing graph,
/// complete-minor certificate, disjoint connector intervals, and crossing-free
/// connectors.
pub fn expander_suite(t_max: usize, jobs: usize) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let items: Vec<usize> = (1..=t_max).collect();
    let failures = map_items(jobs, items, |t| {
        let id = format!("t-{t}");
        let mut fs = Vec::new();
        let c = match two_degenerate_expander(t) {
            Ok(c) => c,
            Err(e) => return vec![fail(&id, &format!("construction failed: {e}"), 0, 0)],
        };
        let g = c.drawing.graph();
        let delta = g.max_degree() as i64;
        if delta > 3 || (t >= 3 && delta != 3) {
            fs.push(fail(&id, "maximum degree is three", delta, 3));
        }
        let x = c.drawing.crossing_graph();
        let (degen, _) = degeneracy(x.graph());
        if degen > 2 {
            fs.push(fail(&id, "crossing graph 2-degenerate", degen as i64, 2));
        }
        let cert = match &c.witnesses["kt_minor"] {
            Witness::Minor(m) => m,
            _ => return vec![fail(&id, "kt_minor witness missing", 0, 0)],
        };
        if cert.order() != t {
            fs.push(fail(&id, "minor certificate order", cert.order() as i64, t as i64));
        }
        if let Err(e) = validate_minor_certificate(g, cert) {
            fs.push(fail(&id, &format!("minor certificate invalid: {e}"), 0, 0));
        }
        // Connectors are the edges joining two different paths of the
        // certificate; each must cross nothing, and their x-intervals must be
        // pairwise disjoint.
        let part_of = |v: VertexId| cert.parts.iter().position(|p| p.contains(&v));
        let edges = match &c.drawing {
            ConstructionDrawing::Straight(d) => d.edge_ids(),
            _ => return vec![fail(&id, "expected straight-line drawing", 0, 0)],
        };
        let mut crossing_connectors = 0;
        for e in 0..edges.len() as EdgeId {
            let (u, v) = edges.pair(e);
            if part_of(u) != part_of(v) && x.graph().degree(e) > 0 {
                crossing_connectors += 1;
            }
        }
        if crossing_connectors > 0 {
            fs.push(fail(&id, "connectors cross nothing", crossing_connectors, 0));
        }
        let mut intervals = Vec::new();
        for s in 1..t {
            for r in 0..s {
                intervals.push(connector_interval(r, s));
            }
        }
        intervals.sort();
        let overlaps = intervals.windows(2).filter(|w| w[0].1 >= w[1].0).count();
        if overlaps > 0 {
            fs.push(fail(&id, "connector intervals disjoint", overlaps as i64, 0));
        }
        fs
    });
    Ok(report("expander", t_max, failures.concat(), started))
}

/// Exhaustively checks that every circular order of K_{2,4k−1} produces a
/// crossing graph containing K_{k,k}, for each k up to `k_max`. The report's
/// instance count is the exact number of orders enumerated.
pub fn nok2k_suite(k_max: usize, jobs: usize, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let mut instances = 0usize;
    let mut failures = Vec::new();
    for k in 1..=k_max {
        let g = generate::complete_bipartite(2, 4 * k - 1);
        let en = OrderEnumerator::new(&g, caps.enumeration)?;
        let chunks = en.chunks(64);
        let en = &en;
        let g = &g;
        let results = map_items(jobs, chunks, move |(lo, hi)| {
            let mut checked = 0usize;
            let mut fs = Vec::new();
            for idx in lo..hi {
                let Some(order) = en.order_at(idx) else { continue };
                checked += 1;
                match crossing_graph_of_order(g, &order) {
                    Ok(x) => {
                        if !has_kst_subgraph(&x, k, k) {
                            fs.push(fail(
                                &format!("k{k}-order-{idx}"),
                                "crossing graph contains K_{k,k}",
                                0,
                                1,
                            ));
                        }
                    }
                    Err(e) => fs.push(fail(
                        &format!("k{k}-order-{idx}"),
                        &format!("crossing graph failed: {e}"),
                        0,
                        0,
                    )),
                }
            }
            (checked, fs)
        });
        for (checked, fs) in results {
            instances += checked;
            failures.extend(fs);
        }
    }
    Ok(report("nok2k", instances, failures, started))
}

/// For every member of the two small subdivision families and every circular
/// order: subdivided K_{2,3} must keep some crossing-graph component touching
/// both degree-3 vertices, and subdivided K_{2,4} must always cross at least
/// once.
pub fn subdivision_suite(jobs: usize, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let mut items: Vec<(String, Graph, bool)> = Vec::new();
    for (mi, member) in k2n_subdivision_suite(3, 2)?.into_iter().enumerate() {
        items.push((format!("k23-m{mi}"), member, true));
    }
    for (mi, member) in k2n_subdivision_suite(4, 2)?.into_iter().enumerate() {
        items.push((format!("k24-m{mi}"), member, false));
    }
    let cap = caps.enumeration;
    let results = map_items(jobs, items, move |(id, member, link_hubs)| {
        let mut checked = 0usize;
        let mut fs = Vec::new();
        let hubs: Vec<VertexId> = member.vertices().filter(|&v| member.degree(v) == 3).collect();
        if link_hubs && hubs.len() != 2 {
            fs.push(fail(&id, "exactly two degree-3 vertices", hubs.len() as i64, 2));
            return (checked, fs);
        }
        let en = match OrderEnumerator::new(&member, cap) {
            Ok(en) => en,
            Err(e) => {
                fs.push(fail(&id, &format!("enumeration failed: {e}"), 0, 0));
                return (checked, fs);
            }
        };
        let edges = EdgeIndex::of(&member);
        for idx in 0..en.slot_count() {
            let Some(order) = en.order_at(idx) else { continue };
            checked += 1;
            let x = match crossing_graph_of_order(&member, &order) {
                Ok(x) => x,
                Err(e) => {
                    fs.push(fail(&id, &format!("crossing graph failed: {e}"), 0, 0));
                    continue;
                }
            };
            if link_hubs {
                let linked = x.connected_components().iter().any(|comp| {
                    let touched: BTreeSet<VertexId> = comp
                        .iter()
                        .flat_map(|&e| {
                            let (u, v) = edges.pair(e);
                            [u, v]
                        })
                        .collect();
                    hubs.iter().all(|h| touched.contains(h))
                });
                if !linked {
                    fs.push(fail(
                        &format!("{id}-order-{idx}"),
                        "a component touches both hubs",
                        0,
                        1,
                    ));
                }
            } else if x.edge_count() == 0 {
                fs.push(fail(&format!("{id}-order-{idx}"), "at least one crossing", 0, 1));
            }
        }
        (checked, fs)
    });
    let mut instances = 0;
    let mut failures = Vec::new();
    for (checked, fs) in results {
        instances += checked;
        failures.extend(fs);
    }
    Ok(report("subdivisions", instances, failures, started))
}

/// Validates the row decomposition of the grid drawing's crossing graph and
/// the grid's exact treewidth for n in 2..=4.
pub fn grid_suite(jobs: usize, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let caps = *caps;
    let items: Vec<usize> = (2..=4).collect();
    let failures = map_items(jobs, items, move |n| {
        let id = format!("grid-{n}");
        let mut fs = Vec::new();
        let c = match grid_row_drawing(n) {
            Ok(c) => c,
            Err(e) => return vec![fail(&id, &format!("construction failed: {e}"), 0, 0)],
        };
        let x = c.drawing.crossing_graph();
        let td = match &c.witnesses["E_path_decomposition"] {
            Witness::Decomposition(td) => td,
            _ => return vec![fail(&id, "decomposition witness missing", 0, 0)],
        };
        let biggest = td.bags.values().map(|b| b.len()).max().unwrap_or(0) as i64;
        if biggest > 3 * n as i64 - 1 {
            fs.push(fail(&id, "bag size <= 3n-1", biggest, 3 * n as i64 - 1));
        }
        match validate_decomposition(x.graph(), td) {
            Ok(width) => {
                if width > 3 * n as i64 {
                    fs.push(fail(&id, "row decomposition width <= 3n", width, 3 * n as i64));
                }
            }
            Err(e) => fs.push(fail(&id, &format!("row decomposition invalid: {e}"), 0, 0)),
        }
        match treewidth_exact(c.drawing.graph(), caps.treewidth) {
            Ok((tw, _)) => {
                if tw != n as i64 {
                    fs.push(fail(&id, "grid treewidth == n", tw, n as i64));
                }
            }
            Err(e) => fs.push(fail(&id, &format!("treewidth failed: {e}"), 0, 0)),
        }
        fs
    });
    Ok(report("grid", 3, failures.concat(), started))
}

/// Validates the block-incidence decomposition of every product drawing of a
/// small tree (≤ 6 vertices, max degree 3) with K_m, m in {2, 3}.
pub fn product_suite(jobs: usize) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let mut failures = Vec::new();
    let expected = [1usize, 1, 1, 2, 2, 4];
    let mut items: Vec<(String, Graph, usize)> = Vec::new();
    for n in 1..=6usize {
        let trees = enumerate_trees_up_to_iso(n, 3)?;
        if trees.len() != expected[n - 1] {
            failures.push(fail(
                &format!("trees-{n}"),
                "tree enumeration count",
                trees.len() as i64,
                expected[n - 1] as i64,
            ));
        }
        for (i, tree) in trees.into_iter().enumerate() {
            for m in [2usize, 3] {
                items.push((format!("tree-{n}-{i}-m{m}"), tree.clone(), m));
            }
        }
    }
    let instances = items.len();
    let results = map_items(jobs, items, |(id, tree, m)| {
        let mut fs = Vec::new();
        let delta = tree.max_degree();
        let c = match product_drawing(&tree, m) {
            Ok(c) => c,
            Err(e) => return vec![fail(&id, &format!("construction failed: {e}"), 0, 0)],
        };
        let x = c.drawing.crossing_graph();
        let td = match &c.witnesses["Wv_decomposition"] {
            Witness::Decomposition(td) => td,
            _ => return vec![fail(&id, "decomposition witness missing", 0, 0)],
        };
        match validate_decomposition(x.graph(), td) {
            Ok(width) => {
                let bound = ((delta + 1) * m * m) as i64 - 1;
                if width > bound {
                    fs.push(fail(&id, "block decomposition width bound", width, bound));
                }
            }
            Err(e) => fs.push(fail(&id, &format!("block decomposition invalid: {e}"), 0, 0)),
        }
        fs
    });
    failures.extend(results.concat());
    Ok(report("product", instances, failures, started))
}

/// Re-checks the star-forest family for t in 2..=t_max: the crossing graph
/// decomposes into stars, the contracted graph has radius 1, and its
/// complete-minor certificate of order t+1 validates.
pub fn star_forest_suite(t_max: usize, jobs: usize) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let items: Vec<usize> = (2..=t_max).collect();
    let instances = items.len();
    let failures = map_items(jobs, items, |t| {
        let id = format!("t-{t}");
        let mut fs = Vec::new();
        let c = match star_forest_construction(t) {
            Ok(c) => c,
            Err(e) => return vec![fail(&id, &format!("construction failed: {e}"), 0, 0)],
        };
        let x = c.drawing.crossing_graph();
        let comps = x.graph().connected_components();
        let mut bad = 0i64;
        for comp in &comps {
            let sub = x.graph().induced_subgraph(comp);
            let star = sub.edge_count() == sub.vertex_count() - 1
                && sub.vertices().filter(|&v| sub.degree(v) >= 2).count() <= 1;
            if !star {
                bad += 1;
            }
        }
        if bad > 0 {
            fs.push(fail(&id, "every crossing component is a star", bad, 0));
        }
        match &c.witnesses["star_forest"] {
            Witness::EdgeSets(sets) => {
                let witness: BTreeSet<BTreeSet<EdgeId>> =
                    sets.iter().map(|s| s.iter().copied().collect()).collect();
                let actual: BTreeSet<BTreeSet<EdgeId>> = comps.into_iter().collect();
                if witness != actual {
                    fs.push(fail(&id, "star components match the witness", 0, 1));
                }
            }
            _ => fs.push(fail(&id, "star_forest witness missing", 0, 0)),
        }
        let contracted = match &c.witnesses["contracted_graph"] {
            Witness::Graph(g) => g,
            _ => return vec![fail(&id, "contracted_graph witness missing", 0, 0)],
        };
        match contracted.radius() {
            Ok(r) => {
                if r != 1 {
                    fs.push(fail(&id, "contracted radius == 1", r as i64, 1));
                }
            }
            Err(e) => fs.push(fail(&id, &format!("radius failed: {e}"), 0, 0)),
        }
        match &c.witnesses["kt1_minor"] {
            Witness::Minor(cert) => {
                if cert.order() != t + 1 {
                    fs.push(fail(&id, "minor order == t+1", cert.order() as i64, t as i64 + 1));
                }
                if let Err(e) = validate_minor_certificate(contracted, cert) {
                    fs.push(fail(&id, &format!("minor certificate invalid: {e}"), 0, 0));
                }
            }
            _ => fs.push(fail(&id, "kt1_minor witness missing", 0, 0)),
        }
        fs
    });
    Ok(report("star-forest", instances, failures.concat(), started))
}

/// Checks the two-bundle chord diagrams for t in {2, 3}: the crossing graph
/// is K_{t,t} with treewidth t, Hadwiger number t+1, and a Hajós number no
/// larger than the Hadwiger number.
pub fn ktt_suite(jobs: usize, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let caps = *caps;
    let items: Vec<usize> = vec![2, 3];
    let failures = map_items(jobs, items, move |t| {
        let id = format!("t-{t}");
        let mut fs = Vec::new();
        let c = match ktt_chord_diagram(t) {
            Ok(c) => c,
            Err(e) => return vec![fail(&id, &format!("construction failed: {e}"), 0, 0)],
        };
        let x = c.drawing.crossing_graph().graph().clone();
        match isomorphic(&x, &generate::complete_bipartite(t, t)) {
            Ok(true) => {}
            Ok(false) => fs.push(fail(&id, "crossing graph is K_{t,t}", 0, 1)),
            Err(e) => fs.push(fail(&id, &format!("isomorphism test failed: {e}"), 0, 0)),
        }
        match treewidth_exact(&x, caps.treewidth) {
            Ok((tw, _)) => {
                if tw != t as i64 {
                    fs.push(fail(&id, "crossing treewidth == t", tw, t as i64));
                }
            }
            Err(e) => fs.push(fail(&id, &format!("treewidth failed: {e}"), 0, 0)),
        }
        let mut h = None;
        match hadwiger_exact(&x, caps.hadwiger) {
            Ok((got, _)) => {
                h = Some(got);
                if got != t + 1 {
                    fs.push(fail(&id, "Hadwiger number == t+1", got as i64, t as i64 + 1));
                }
            }
            Err(e) => fs.push(fail(&id, &format!("Hadwiger failed: {e}"), 0, 0)),
        }
        match hajos_exact(&x, caps.hajos) {
            Ok((ht, _)) => {
                if let Some(h) = h {
                    if ht > h {
                        fs.push(fail(&id, "Hajós <= Hadwiger", ht as i64, h as i64));
                    }
                }
            }
            Err(e) => fs.push(fail(&id, &format!("Hajós failed: {e}"), 0, 0)),
        }
        fs
    });
    Ok(report("ktt", 2, failures.concat(), started))
}

/// Cross-checks the optimised solvers against the brute-force references on
/// every graph with at most 7 vertices, one representative per isomorphism
/// class, and freezes the class counts themselves.
pub fn solver_oracle_suite(jobs: usize, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let caps = *caps;
    let expected = [1usize, 2, 4, 11, 34, 156, 1044];
    let mut failures = Vec::new();
    let mut items: Vec<(String, Graph)> = Vec::new();
    for n in 1..=7usize {
        let graphs = enumerate_graphs_up_to_iso(n)?;
        if graphs.len() != expected[n - 1] {
            failures.push(fail(
                &format!("graphs-{n}"),
                "isomorphism class count",
                graphs.len() as i64,
                expected[n - 1] as i64,
            ));
        }
        for (i, g) in graphs.into_iter().enumerate() {
            items.push((format!("g{n}-{i}"), g));
        }
    }
    let instances = items.len();
    let results = map_items(jobs, items, move |(id, g)| {
        let mut fs = Vec::new();
        match treewidth_exact(&g, caps.treewidth) {
            Ok((tw, _)) => {
                let brute = reference::treewidth_brute(&g);
                if tw != brute {
                    fs.push(fail(&id, "treewidth solver == brute force", tw, brute));
                }
            }
            Err(e) => fs.push(fail(&id, &format!("treewidth failed: {e}"), 0, 0)),
        }
        match hadwiger_exact(&g, caps.hadwiger) {
            Ok((h, _)) => {
                let brute = reference::hadwiger_brute(&g);
                if h != brute {
                    fs.push(fail(&id, "Hadwiger solver == brute force", h as i64, brute as i64));
                }
            }
            Err(e) => fs.push(fail(&id, &format!("Hadwiger failed: {e}"), 0, 0)),
        }
        match hajos_exact(&g, caps.hajos) {
            Ok((ht, _)) => {
                let brute = reference::hajos_brute(&g);
                if ht != brute {
                    fs.push(fail(&id, "Hajós solver == brute force", ht as i64, brute as i64));
                }
            }
            Err(e) => fs.push(fail(&id, &format!("Hajós failed: {e}"), 0, 0)),
        }
        let (degen, _) = degeneracy(&g);
        let brute = reference::degeneracy_brute(&g);
        if degen != brute {
            fs.push(fail(&id, "degeneracy solver == brute force", degen as i64, brute as i64));
        }
        fs
    });
    failures.extend(results.concat());
    Ok(report("solver-oracles", instances, failures, started))
}
