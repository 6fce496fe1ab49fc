//! Moving tree decompositions between a drawing, its planarisation, and its
//! crossing graph, plus the map-graph-guided triangulation and a per-drawing
//! report of the width/radius inequalities those transfers certify.

use crate::drawing::{map_graph, CircularDrawing, DrawingError, Planarisation};
use crate::graph::decomposition::{validate_decomposition, DecompositionError, TreeDecomposition};
use crate::graph::minors::hadwiger_exact;
use crate::graph::topminors::hajos_exact;
use crate::graph::treewidth::{treewidth_exact, treewidth_greedy};
use crate::graph::{EdgeId, Graph, GraphError, VertexId};
use crate::Caps;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransferError {
    #[error("input decomposition is not valid for the planarised graph: {0}")]
    InvalidInputDecomposition(DecompositionError),
    #[error("orientation must pick one endpoint of every drawn edge")]
    BadOrientation,
    #[error("triangulation needs at least three vertices")]
    TooSmall,
    #[error("triangulation needs a connected graph")]
    Disconnected,
    #[error("instance too large for the exact solvers: {found} vertices over cap {cap}")]
    TooLargeInstance { found: usize, cap: usize },
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal contract violated: {0}")]
    InternalContract(String),
}

/// Distance labels that steer the triangulation: faces carry their map-graph
/// distance from a central root face, vertices the minimum over their
/// incident faces, and the root vertex sits one layer below everything.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceLabeling {
    pub dist0: BTreeMap<usize, usize>,
    pub rho: BTreeMap<VertexId, i64>,
    pub root_face: usize,
    pub root_vertex: VertexId,
}

/// Output of [`triangulate_via_map`]: a plane supergraph with every face a
/// triangle, the faces as vertex cycles, the labeling that guided the chord
/// insertions, and the resulting graph radius.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationResult {
    pub graph: Graph,
    pub faces: Vec<Vec<VertexId>>,
    pub labeling: FaceLabeling,
    pub radius: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityEntry {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

/// Exact widths and radii of one drawing together with every inequality the
/// decomposition transfers promise for them. `tw_pd` falls back to a greedy
/// upper bound (flagged by `tw_pd_exact`) when the planarisation outgrows the
/// cap; the inequalities that stay valid under an upper bound are still
/// checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub tw_g: i64,
    pub tw_xd: i64,
    pub tw_pd: i64,
    pub tw_pd_exact: bool,
    pub rad_md: usize,
    pub checks: Vec<InequalityEntry>,
}

impl BoundsReport {
    pub fn failures(&self) -> Vec<&InequalityEntry> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// The head choice used when no explicit orientation is given: every drawn
/// edge points at its larger endpoint.
pub fn default_orientation(p: &Planarisation) -> BTreeMap<EdgeId, VertexId> {
    let edges = p.original_edge_index();
    (0..edges.len() as EdgeId)
        .map(|e| {
            let (u, v) = edges.pair(e);
            (e, u.max(v))
        })
        .collect()
}

/// Turns a tree decomposition of the planarised graph into one of the drawn
/// graph: a dummy vertex is replaced by the heads of the two edges whose
/// crossing it stands for, so bags at most double and the result has width
/// at most `2w + 1`. A decomposition of a crossing-free planarisation passes
/// through unchanged.
pub fn td_lift_to_graph(
    td: &TreeDecomposition,
    p: &Planarisation,
    heads: &BTreeMap<EdgeId, VertexId>,
) -> Result<TreeDecomposition, TransferError> {
    validate_decomposition(p.plane_graph(), td)
        .map_err(TransferError::InvalidInputDecomposition)?;
    let edges = p.original_edge_index();
    for e in 0..edges.len() as EdgeId {
        let (u, v) = edges.pair(e);
        match heads.get(&e) {
            Some(&h) if h == u || h == v => {}
            _ => return Err(TransferError::BadOrientation),
        }
    }

    let lifted = td.map_bags(|x| match p.dummy_origin(x) {
        Some((e, f)) => vec![heads[&e], heads[&f]],
        None => vec![x],
    });

    let w_out = validate_decomposition(p.original_graph(), &lifted).map_err(|e| {
        TransferError::InternalContract(format!("lift to the drawn graph broke validity: {e}"))
    })?;
    if w_out > 2 * td.width() + 1 {
        return Err(TransferError::InternalContract(format!(
            "lifted width {w_out} exceeds 2*{}+1",
            td.width()
        )));
    }
    Ok(lifted)
}

/// Turns a tree decomposition of the planarised graph into one of the
/// crossing graph: a dummy vertex becomes the pair of edge ids that cross
/// there, original vertices vanish (possibly leaving empty bags), and each
/// crossing-free edge gets a singleton leaf bag so the vertex set is covered.
/// Width is again at most `2w + 1`.
pub fn td_lift_to_crossing(
    td: &TreeDecomposition,
    p: &Planarisation,
) -> Result<TreeDecomposition, TransferError> {
    validate_decomposition(p.plane_graph(), td)
        .map_err(TransferError::InvalidInputDecomposition)?;

    let mut lifted = td.map_bags(|x| match p.dummy_origin(x) {
        Some((e, f)) => vec![e, f],
        None => Vec::new(),
    });

    let m = p.original_graph().edge_count() as EdgeId;
    let covered: BTreeSet<EdgeId> = lifted.bags.values().flatten().copied().collect();
    let anchor = *lifted.bags.keys().next().expect("decompositions are nonempty");
    let mut next = lifted.bags.keys().max().copied().unwrap_or(0) + 1;
    for e in 0..m {
        if !covered.contains(&e) {
            lifted.bags.insert(next, BTreeSet::from([e]));
            lifted.tree_edges.push((anchor, next));
            next += 1;
        }
    }

    let crossing = crossing_graph_from(p);
    let w_out = validate_decomposition(&crossing, &lifted).map_err(|e| {
        TransferError::InternalContract(format!("lift to the crossing graph broke validity: {e}"))
    })?;
    if w_out > 2 * td.width() + 1 {
        return Err(TransferError::InternalContract(format!(
            "lifted width {w_out} exceeds 2*{}+1",
            td.width()
        )));
    }
    Ok(lifted)
}

/// The crossing graph recovered from a planarisation: one vertex per drawn
/// edge, adjacent when some dummy subdivides both.
pub fn crossing_graph_from(p: &Planarisation) -> Graph {
    let m = p.original_graph().edge_count() as EdgeId;
    Graph::from_parts(0..m, p.crossing_pairs()).expect("crossing pairs are loop-free")
}

/// Adds chords to a connected plane graph until every face is a triangle,
/// steering the chords by map-graph distance so the radius grows by at most
/// one: each face is fanned from its boundary vertex closest to a central
/// root face, and leftover non-triangular faces are ear-clipped.
pub fn triangulate_via_map(p: &Planarisation) -> Result<TriangulationResult, TransferError> {
    let g = p.plane_graph();
    if g.vertex_count() < 3 {
        return Err(TransferError::TooSmall);
    }
    if !g.is_connected() {
        return Err(TransferError::Disconnected);
    }

    let m = map_graph(p);
    let rad_mg = m.radius()?;
    let root_face = *m.graph().centers()?.first().expect("map graph is nonempty") as usize;
    let dist0: BTreeMap<usize, usize> = m
        .graph()
        .bfs_distances(root_face as VertexId)
        .into_iter()
        .map(|(f, d)| (f as usize, d))
        .collect();

    let mut rho: BTreeMap<VertexId, i64> = BTreeMap::new();
    for (i, face) in p.faces().iter().enumerate() {
        let d = dist0[&i] as i64;
        for v in face.vertex_set() {
            rho.entry(v).and_modify(|r| *r = (*r).min(d)).or_insert(d);
        }
    }
    let root_vertex = *p.faces()[root_face]
        .vertex_set()
        .iter()
        .next()
        .expect("a face of a connected graph has boundary vertices");
    rho.insert(root_vertex, -1);

    let mut h = g.clone();
    let mut fanned: Vec<Vec<VertexId>> = Vec::new();

    // Fan every face from its lowest-labelled boundary vertex. Splitting a
    // walk at the hub keeps the hub on both halves, so one worklist per face
    // exhausts it.
    for face in p.faces() {
        let walk = vertex_cycle(face)?;
        let hub = face
            .vertex_set()
            .into_iter()
            .min_by_key(|&v| (rho[&v], v))
            .expect("nonempty boundary");
        let mut work = vec![walk];
        while let Some(w) = work.pop() {
            if w.len() == 3 {
                fanned.push(w);
                continue;
            }
            let i = w
                .iter()
                .position(|&v| v == hub)
                .ok_or_else(|| TransferError::InternalContract("hub lost while fanning".into()))?;
            let k = w.len();
            let target = (2..k - 1)
                .map(|off| (i + off) % k)
                .find(|&j| w[j] != hub && !h.has_edge(hub, w[j]));
            match target {
                Some(j) => {
                    h.add_edge(hub, w[j])?;
                    let (w1, w2) = split_cycle(&w, i, j);
                    work.push(w1);
                    work.push(w2);
                }
                None => fanned.push(w),
            }
        }
    }

    // Ear-clip whatever the fans left behind (faces whose whole boundary was
    // already adjacent to the hub).
    let mut faces: Vec<Vec<VertexId>> = Vec::new();
    let mut work = fanned;
    while let Some(w) = work.pop() {
        let k = w.len();
        if k == 3 {
            faces.push(w);
            continue;
        }
        let ear = (0..k).find(|&i| {
            let u = w[(i + k - 1) % k];
            let x = w[(i + 1) % k];
            u != x && !h.has_edge(u, x)
        });
        if let Some(i) = ear {
            let u = w[(i + k - 1) % k];
            let x = w[(i + 1) % k];
            h.add_edge(u, x)?;
            faces.push(vec![u, w[i], x]);
            let mut rest = w;
            rest.remove(i);
            work.push(rest);
            continue;
        }
        let chord = (0..k)
            .flat_map(|i| (2..k - 1).map(move |off| (i, (i + off) % k)))
            .find(|&(i, j)| w[i] != w[j] && !h.has_edge(w[i], w[j]));
        let Some((i, j)) = chord else {
            return Err(TransferError::InternalContract(format!(
                "face {w:?} admits no chord"
            )));
        };
        h.add_edge(w[i], w[j])?;
        let (w1, w2) = split_cycle(&w, i, j);
        work.push(w1);
        work.push(w2);
    }

    // A connected plane graph with only triangular faces is edge-maximal.
    let (vn, en) = (h.vertex_count(), h.edge_count());
    if en != 3 * vn - 6 {
        return Err(TransferError::InternalContract(format!(
            "triangulation has {en} edges on {vn} vertices, expected {}",
            3 * vn - 6
        )));
    }

    let radius = h.radius()?;
    if radius > rad_mg + 1 {
        return Err(TransferError::InternalContract(format!(
            "triangulation radius {radius} exceeds map radius {rad_mg} plus one"
        )));
    }

    Ok(TriangulationResult {
        graph: h,
        faces,
        labeling: FaceLabeling {
            dist0,
            rho,
            root_face,
            root_vertex,
        },
        radius,
    })
}

/// Computes the exact widths and radii of a drawing and checks every
/// inequality the decomposition transfers give for them, including the
/// constructive routes through both lifts and the triangulation. The Hadwiger
/// and Hajós links are only emitted when the crossing graph fits under those
/// caps, and the `rad <= 2h - 3` link additionally needs a crossing to exist.
pub fn check_section3_bounds(
    d: &CircularDrawing,
    caps: &Caps,
) -> Result<BoundsReport, TransferError> {
    let p = d.planarise()?;
    let x = d.crossing_graph();
    let m = map_graph(&p);
    let rad_md = m.radius()?;

    let too_large = |e: GraphError| match e {
        GraphError::SizeAboveCap { found, cap } => TransferError::TooLargeInstance { found, cap },
        other => TransferError::Graph(other),
    };
    let (tw_g, _) = treewidth_exact(d.graph(), caps.treewidth).map_err(too_large)?;
    let (tw_xd, _) = treewidth_exact(x.graph(), caps.treewidth).map_err(too_large)?;

    let pd = p.plane_graph();
    let (pd_td, tw_pd_exact) = if pd.vertex_count() <= caps.treewidth {
        (treewidth_exact(pd, caps.treewidth).map_err(too_large)?.1, true)
    } else {
        (treewidth_greedy(pd), false)
    };
    let tw_pd = pd_td.width();

    let mut checks = Vec::new();
    let push = |checks: &mut Vec<InequalityEntry>, name: &str, lhs: i64, rhs: i64| {
        checks.push(InequalityEntry {
            name: name.to_owned(),
            lhs,
            rhs,
            pass: lhs <= rhs,
        });
    };
    let rad = rad_md as i64;

    push(&mut checks, "tw_g <= 6*rad_md + 7", tw_g, 6 * rad + 7);
    push(&mut checks, "tw_xd <= 6*rad_md + 7", tw_xd, 6 * rad + 7);

    let lifted_g = td_lift_to_graph(&pd_td, &p, &default_orientation(&p))?;
    let lifted_x = td_lift_to_crossing(&pd_td, &p)?;
    push(&mut checks, "tw_g <= 2*tw_pd + 1", tw_g, 2 * tw_pd + 1);
    push(&mut checks, "tw_xd <= 2*tw_pd + 1", tw_xd, 2 * tw_pd + 1);
    push(
        &mut checks,
        "lift_to_graph_width <= 2*tw_pd + 1",
        lifted_g.width(),
        2 * tw_pd + 1,
    );
    push(
        &mut checks,
        "lift_to_crossing_width <= 2*tw_pd + 1",
        lifted_x.width(),
        2 * tw_pd + 1,
    );
    if tw_pd_exact {
        push(&mut checks, "tw_pd <= 3*rad_md + 3", tw_pd, 3 * rad + 3);
    }

    if pd.vertex_count() >= 3 && pd.is_connected() {
        let tri = triangulate_via_map(&p)?;
        push(&mut checks, "rad_h <= rad_md + 1", tri.radius as i64, rad + 1);
    }

    let xn = x.graph().vertex_count();
    if xn <= caps.hadwiger {
        let (h, _) = hadwiger_exact(x.graph(), caps.hadwiger)?;
        let h = h as i64;
        if x.crossing_count() > 0 {
            push(&mut checks, "6*rad_md + 7 <= 12*h_xd - 11", 6 * rad + 7, 12 * h - 11);
        }
        push(&mut checks, "12*h_xd - 11 <= 12*tw_xd + 1", 12 * h - 11, 12 * tw_xd + 1);
    }
    if xn <= caps.hajos {
        let (ht, _) = hajos_exact(x.graph(), caps.hajos)?;
        let ht = ht as i64;
        push(
            &mut checks,
            "rad_md <= h_top_xd^2 + 3*h_top_xd + 1",
            rad,
            ht * ht + 3 * ht + 1,
        );
    }

    Ok(BoundsReport {
        tw_g,
        tw_xd,
        tw_pd,
        tw_pd_exact,
        rad_md,
        checks,
    })
}

/// The boundary of a face of a connected plane graph as one vertex cycle.
fn vertex_cycle(face: &crate::drawing::Face) -> Result<Vec<VertexId>, TransferError> {
    match face.walks() {
        [walk] => Ok(walk.iter().map(|&(u, _)| u).collect()),
        other => Err(TransferError::InternalContract(format!(
            "face of a connected graph has {} walks",
            other.len()
        ))),
    }
}

/// Splits a vertex cycle along a chord between two of its positions; the two
/// halves share exactly the chord's endpoints.
fn split_cycle(w: &[VertexId], i: usize, j: usize) -> (Vec<VertexId>, Vec<VertexId>) {
    let (a, b) = (i.min(j), i.max(j));
    let w1 = w[a..=b].to_vec();
    let w2 = w[b..].iter().chain(&w[..=a]).copied().collect();
    (w1, w2)
}
