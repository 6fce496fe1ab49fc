//! Drawings of graphs: vertices placed at exact rational coordinates with
//! straight-line (or chord) edges, plus the derived combinatorial objects —
//! crossing graphs, planarisations and map graphs.
//!
//! Two concrete drawing kinds exist. A [`CircularDrawing`] places every vertex
//! on the unit circle via the rational parametrization of [`circle_point`] and
//! draws edges as chords. A [`StraightLineDrawing`] places vertices anywhere in
//! the plane; with its `linear` flag set, all vertices sit on the x-axis and
//! edges are read as semicircles above the axis, so two edges cross exactly
//! when their x-intervals interleave.

use crate::geom::{
    circle_point, dot, on_open_segment, rat_from_str, rat_int, rat_to_string, segments_meet,
    Point, Rat, SegmentMeet,
};
use crate::graph::{EdgeId, EdgeIndex, Graph, GraphError, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

mod crossing;
mod enumerate;
mod map;
mod planar;
mod svg;

pub use crossing::{crossing_graph_of_order, CrossingGraph};
pub use enumerate::OrderEnumerator;
pub use map::{map_graph, MapGraph};
pub use planar::{planarise_points, Face, Planarisation};
pub use svg::{export_svg_circular, export_svg_straight};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DrawingError {
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("anchors are not strictly increasing along the order")]
    AnchorsNotMonotone,
    #[error("vertex {0} has no coordinate")]
    MissingCoordinate(VertexId),
    #[error("coordinate given for unknown vertex {0}")]
    UnknownCoordinate(VertexId),
    #[error("two vertices share a coordinate")]
    DuplicateCoordinate,
    #[error("linear drawing requires vertex {0} on the x-axis")]
    NotOnAxis(VertexId),
    #[error("vertex {vertex} lies inside edge {u}-{v}")]
    VertexInsideEdge {
        vertex: VertexId,
        u: VertexId,
        v: VertexId,
    },
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("operation needs straight-line coordinates; wrap the linear drawing first")]
    UnsupportedLinear,
    #[error("drawing is not linear")]
    NotLinear,
    #[error("instance has {found} vertices, enumeration is capped at {cap}")]
    TooLarge { found: usize, cap: usize },
    #[error("bad drawing data: {0}")]
    BadData(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal contract violated: {0}")]
    InternalContract(String),
}

/// Maximum number of rounds of anchor perturbation before `make_circular`
/// gives up. One round fixes one concurrent-crossing point; real inputs need
/// zero or one.
const MAX_NUDGE_ROUNDS: usize = 100;

/// A graph drawn on the unit circle: every vertex sits at the rational circle
/// point of its anchor parameter, edges are straight chords. Anchors increase
/// strictly along `order`, so `order` is the counterclockwise circular order.
///
/// The drawing is generic: no three chords pass through a common interior
/// point. `make_circular` enforces this by perturbing anchors; `from_parts`
/// rejects non-generic input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CircularDrawingRepr", into = "CircularDrawingRepr")]
pub struct CircularDrawing {
    graph: Graph,
    order: Vec<VertexId>,
    anchors: BTreeMap<VertexId, Rat>,
    edges: EdgeIndex,
    positions: BTreeMap<VertexId, usize>,
}

impl CircularDrawing {
    /// Draws `graph` with the given circular order, anchoring vertex `order[i]`
    /// at parameter `i + 1`. If three chords happen to pass through one point,
    /// the anchor of the highest-id vertex involved is nudged by the smallest
    /// power of one half that restores genericity, and the check is retried.
    pub fn make_circular(graph: Graph, order: &[VertexId]) -> Result<Self, DrawingError> {
        let anchors = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, rat_int(i as i64 + 1)))
            .collect();
        Self::with_anchors(graph, order.to_vec(), anchors, true)
    }

    /// Builds a drawing from explicit anchors, validating the permutation,
    /// monotonicity and genericity. Degenerate anchor sets are rejected rather
    /// than repaired.
    pub fn from_parts(
        graph: Graph,
        order: Vec<VertexId>,
        anchors: BTreeMap<VertexId, Rat>,
    ) -> Result<Self, DrawingError> {
        Self::with_anchors(graph, order, anchors, false)
    }

    fn with_anchors(
        graph: Graph,
        order: Vec<VertexId>,
        mut anchors: BTreeMap<VertexId, Rat>,
        repair: bool,
    ) -> Result<Self, DrawingError> {
        let vertex_set: BTreeSet<VertexId> = graph.vertices().collect();
        let order_set: BTreeSet<VertexId> = order.iter().copied().collect();
        if order_set.len() != order.len() || order_set != vertex_set {
            return Err(DrawingError::NotAPermutation);
        }
        if anchors.len() != order.len() || !order.iter().all(|v| anchors.contains_key(v)) {
            return Err(DrawingError::AnchorsNotMonotone);
        }
        for pair in order.windows(2) {
            if anchors[&pair[0]] >= anchors[&pair[1]] {
                return Err(DrawingError::AnchorsNotMonotone);
            }
        }

        let edges = EdgeIndex::of(&graph);
        let positions: BTreeMap<VertexId, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        let mut rounds = 0;
        while let Some(involved) = concurrency_violation(&edges, &positions, &anchors) {
            if !repair {
                return Err(DrawingError::DegenerateGeometry(format!(
                    "three chords meet in one point (edges {involved:?})"
                )));
            }
            rounds += 1;
            if rounds > MAX_NUDGE_ROUNDS {
                return Err(DrawingError::DegenerateGeometry(
                    "could not restore genericity by perturbing anchors".into(),
                ));
            }
            let culprit = involved
                .iter()
                .flat_map(|&e| {
                    let (u, v) = edges.pair(e);
                    [u, v]
                })
                .max()
                .expect("concurrent crossing has edges");
            nudge_anchor(culprit, &order, &positions, &mut anchors, &edges)?;
        }

        Ok(CircularDrawing {
            graph,
            order,
            anchors,
            edges,
            positions,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn anchor(&self, v: VertexId) -> Option<&Rat> {
        self.anchors.get(&v)
    }

    pub fn edge_ids(&self) -> &EdgeIndex {
        &self.edges
    }

    /// Index of `v` in the circular order.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.positions.get(&v).copied()
    }

    /// Exact coordinates of `v` on the unit circle.
    pub fn point(&self, v: VertexId) -> Point {
        circle_point(&self.anchors[&v])
    }

    /// All crossing edge pairs `(e, f)` with `e < f`, decided combinatorially:
    /// two chords cross exactly when their endpoints interleave in the
    /// circular order.
    pub fn crossing_pairs(&self) -> Vec<(EdgeId, EdgeId)> {
        interleaving_pairs(&self.edges, &self.positions)
    }

    /// The crossing graph: one vertex per edge of the drawn graph, adjacent
    /// when the edges cross, with the exact crossing point recorded per pair.
    pub fn crossing_graph(&self) -> CrossingGraph {
        let pairs = self.crossing_pairs();
        let mut points = BTreeMap::new();
        for &(e, f) in &pairs {
            let (a, b) = self.edges.pair(e);
            let (c, d) = self.edges.pair(f);
            match segments_meet(&self.point(a), &self.point(b), &self.point(c), &self.point(d)) {
                SegmentMeet::Proper(p) => {
                    points.insert((e, f), p);
                }
                other => unreachable!(
                    "interleaving chords {e},{f} must cross properly, got {other:?}"
                ),
            }
        }
        CrossingGraph::from_parts(self.edges.len(), pairs, points)
    }

    /// Subdivides every crossing with a dummy vertex and returns the resulting
    /// plane graph with its rotation system and faces.
    pub fn planarise(&self) -> Result<Planarisation, DrawingError> {
        let coords: BTreeMap<VertexId, Point> =
            self.graph.vertices().map(|v| (v, self.point(v))).collect();
        let x = self.crossing_graph();
        planarise_points(&self.graph, &coords, &self.edges, x.points())
    }

    /// Chord endpoints of edge `e` as exact points.
    pub fn chord(&self, e: EdgeId) -> (Point, Point) {
        let (u, v) = self.edges.pair(e);
        (self.point(u), self.point(v))
    }
}

/// Edge pairs whose endpoints interleave in the circular order given by
/// `positions`. Pairs sharing an endpoint never cross.
fn interleaving_pairs(
    edges: &EdgeIndex,
    positions: &BTreeMap<VertexId, usize>,
) -> Vec<(EdgeId, EdgeId)> {
    let m = edges.len() as u32;
    let mut pairs = Vec::new();
    for e in 0..m {
        let (a, b) = edges.pair(e);
        for f in (e + 1)..m {
            let (c, d) = edges.pair(f);
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if order_interleaves(positions, (a, b), (c, d)) {
                pairs.push((e, f));
            }
        }
    }
    pairs
}

fn order_interleaves(
    positions: &BTreeMap<VertexId, usize>,
    (a, b): (VertexId, VertexId),
    (c, d): (VertexId, VertexId),
) -> bool {
    let (pa, pb) = (positions[&a], positions[&b]);
    let (lo, hi) = if pa < pb { (pa, pb) } else { (pb, pa) };
    let inside = |v: VertexId| {
        let p = positions[&v];
        lo < p && p < hi
    };
    inside(c) != inside(d)
}

/// Looks for three (or more) chords through a common interior point. Returns
/// the edge ids meeting at the lexicographically smallest violating point.
fn concurrency_violation(
    edges: &EdgeIndex,
    positions: &BTreeMap<VertexId, usize>,
    anchors: &BTreeMap<VertexId, Rat>,
) -> Option<BTreeSet<EdgeId>> {
    let mut through: BTreeMap<Point, BTreeSet<EdgeId>> = BTreeMap::new();
    for (e, f) in interleaving_pairs(edges, positions) {
        let (a, b) = edges.pair(e);
        let (c, d) = edges.pair(f);
        let meet = segments_meet(
            &circle_point(&anchors[&a]),
            &circle_point(&anchors[&b]),
            &circle_point(&anchors[&c]),
            &circle_point(&anchors[&d]),
        );
        match meet {
            SegmentMeet::Proper(p) => {
                let entry = through.entry(p).or_default();
                entry.insert(e);
                entry.insert(f);
            }
            other => unreachable!("interleaving chords must cross properly, got {other:?}"),
        }
    }
    through.into_iter().find(|(_, s)| s.len() >= 3).map(|(_, s)| s)
}

/// Moves the anchor of `culprit` forward by the smallest power of one half
/// that keeps the anchors strictly monotone and removes all concurrent
/// crossings involving previously violating chords. The order (and therefore
/// the crossing graph) is unchanged.
fn nudge_anchor(
    culprit: VertexId,
    order: &[VertexId],
    positions: &BTreeMap<VertexId, usize>,
    anchors: &mut BTreeMap<VertexId, Rat>,
    edges: &EdgeIndex,
) -> Result<(), DrawingError> {
    let pos = positions[&culprit];
    let upper = order.get(pos + 1).map(|v| anchors[v].clone());
    let base = anchors[&culprit].clone();
    let mut step = crate::geom::rat(1, 2);
    for _ in 0..64 {
        let candidate = &base + &step;
        let monotone = upper.as_ref().is_none_or(|u| &candidate < u);
        if monotone {
            anchors.insert(culprit, candidate);
            let still_bad = concurrency_violation(edges, positions, anchors)
                .is_some_and(|s| s.iter().any(|&e| {
                    let (u, v) = edges.pair(e);
                    u == culprit || v == culprit
                }));
            if !still_bad {
                return Ok(());
            }
            anchors.insert(culprit, base.clone());
        }
        step /= rat_int(2);
    }
    Err(DrawingError::DegenerateGeometry(format!(
        "no dyadic nudge of vertex {culprit} restores genericity"
    )))
}

/// A graph drawn with straight segments at arbitrary rational coordinates.
///
/// With `linear` set, every vertex lies on the x-axis and edges are read as
/// semicircles above the axis: two edges cross exactly when their x-intervals
/// properly interleave, and no segment geometry is involved. Without it,
/// edges are the straight segments between their endpoints and the drawing
/// must be generic: no vertex inside a non-incident edge, no collinear
/// overlaps, no three edges through one interior point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StraightLineDrawingRepr", into = "StraightLineDrawingRepr")]
pub struct StraightLineDrawing {
    graph: Graph,
    coords: BTreeMap<VertexId, Point>,
    linear: bool,
    edges: EdgeIndex,
}

impl StraightLineDrawing {
    pub fn new(
        graph: Graph,
        coords: BTreeMap<VertexId, Point>,
        linear: bool,
    ) -> Result<Self, DrawingError> {
        for v in graph.vertices() {
            if !coords.contains_key(&v) {
                return Err(DrawingError::MissingCoordinate(v));
            }
        }
        if let Some(&v) = coords.keys().find(|v| !graph.has_vertex(**v)) {
            return Err(DrawingError::UnknownCoordinate(v));
        }
        let distinct: BTreeSet<&Point> = coords.values().collect();
        if distinct.len() != coords.len() {
            return Err(DrawingError::DuplicateCoordinate);
        }
        let edges = EdgeIndex::of(&graph);
        let drawing = StraightLineDrawing {
            graph,
            coords,
            linear,
            edges,
        };
        if linear {
            drawing.validate_linear()?;
        } else {
            drawing.validate_straight()?;
        }
        Ok(drawing)
    }

    fn validate_linear(&self) -> Result<(), DrawingError> {
        for (v, p) in &self.coords {
            if !num::Zero::is_zero(&p.y) {
                return Err(DrawingError::NotOnAxis(*v));
            }
        }
        Ok(())
    }

    fn validate_straight(&self) -> Result<(), DrawingError> {
        // No vertex interior to a non-incident edge.
        for e in 0..self.edges.len() as u32 {
            let (u, v) = self.edges.pair(e);
            let (a, b) = (&self.coords[&u], &self.coords[&v]);
            for (&w, p) in &self.coords {
                if w != u && w != v && on_open_segment(p, a, b) {
                    return Err(DrawingError::VertexInsideEdge { vertex: w, u, v });
                }
            }
        }
        // Pairwise segment checks: collect proper crossing points, reject
        // degenerate contacts and triple concurrencies.
        let mut through: BTreeMap<Point, BTreeSet<EdgeId>> = BTreeMap::new();
        let m = self.edges.len() as u32;
        for e in 0..m {
            let (a, b) = self.edges.pair(e);
            for f in (e + 1)..m {
                let (c, d) = self.edges.pair(f);
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                match segments_meet(
                    &self.coords[&a],
                    &self.coords[&b],
                    &self.coords[&c],
                    &self.coords[&d],
                ) {
                    SegmentMeet::None => {}
                    SegmentMeet::Proper(p) => {
                        let entry = through.entry(p).or_default();
                        entry.insert(e);
                        entry.insert(f);
                    }
                    SegmentMeet::Degenerate => {
                        return Err(DrawingError::DegenerateGeometry(format!(
                            "edges {e} and {f} overlap or touch degenerately"
                        )));
                    }
                }
            }
        }
        if let Some((p, s)) = through.iter().find(|(_, s)| s.len() >= 3) {
            return Err(DrawingError::DegenerateGeometry(format!(
                "edges {s:?} all pass through {p:?}"
            )));
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_linear(&self) -> bool {
        self.linear
    }

    pub fn edge_ids(&self) -> &EdgeIndex {
        &self.edges
    }

    pub fn point(&self, v: VertexId) -> &Point {
        &self.coords[&v]
    }

    pub fn coords(&self) -> &BTreeMap<VertexId, Point> {
        &self.coords
    }

    /// Crossing pairs. For linear drawings this is the x-interval interleaving
    /// test; otherwise exact segment intersection.
    pub fn crossing_pairs(&self) -> Vec<(EdgeId, EdgeId)> {
        if self.linear {
            let by_x = self.positions_by_x();
            return interleaving_pairs(&self.edges, &by_x);
        }
        let mut pairs = Vec::new();
        let m = self.edges.len() as u32;
        for e in 0..m {
            let (a, b) = self.edges.pair(e);
            for f in (e + 1)..m {
                let (c, d) = self.edges.pair(f);
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if let SegmentMeet::Proper(_) = segments_meet(
                    &self.coords[&a],
                    &self.coords[&b],
                    &self.coords[&c],
                    &self.coords[&d],
                ) {
                    pairs.push((e, f));
                }
            }
        }
        pairs
    }

    fn positions_by_x(&self) -> BTreeMap<VertexId, usize> {
        let mut vs: Vec<VertexId> = self.graph.vertices().collect();
        vs.sort_by(|a, b| self.coords[a].x.cmp(&self.coords[b].x));
        vs.into_iter().enumerate().map(|(i, v)| (v, i)).collect()
    }

    /// The crossing graph. Exact crossing points are recorded for straight
    /// segments; a linear drawing's semicircle intersections are not rational,
    /// so its point map is empty.
    pub fn crossing_graph(&self) -> CrossingGraph {
        let pairs = self.crossing_pairs();
        let mut points = BTreeMap::new();
        if !self.linear {
            for &(e, f) in &pairs {
                let (a, b) = self.edges.pair(e);
                let (c, d) = self.edges.pair(f);
                match segments_meet(
                    &self.coords[&a],
                    &self.coords[&b],
                    &self.coords[&c],
                    &self.coords[&d],
                ) {
                    SegmentMeet::Proper(p) => {
                        points.insert((e, f), p);
                    }
                    other => {
                        unreachable!("validated crossing pair {e},{f} must meet, got {other:?}")
                    }
                }
            }
        }
        CrossingGraph::from_parts(self.edges.len(), pairs, points)
    }

    /// Planarisation by subdividing crossings. Linear drawings have no
    /// rational crossing coordinates; wrap them into a circular drawing first.
    pub fn planarise(&self) -> Result<Planarisation, DrawingError> {
        if self.linear {
            return Err(DrawingError::UnsupportedLinear);
        }
        let x = self.crossing_graph();
        planarise_points(&self.graph, &self.coords, &self.edges, x.points())
    }
}

/// Rolls a linear drawing onto the circle: vertices in x-order become the
/// circular order. Interleaving is preserved, so the crossing graph of the
/// result equals the linear drawing's crossing graph edge-id for edge-id.
pub fn wrap_linear(d: &StraightLineDrawing) -> Result<CircularDrawing, DrawingError> {
    if !d.is_linear() {
        return Err(DrawingError::NotLinear);
    }
    let mut vs: Vec<VertexId> = d.graph().vertices().collect();
    vs.sort_by(|a, b| d.point(*a).x.cmp(&d.point(*b).x));
    CircularDrawing::make_circular(d.graph().clone(), &vs)
}

#[derive(Serialize, Deserialize)]
struct CircularDrawingRepr {
    graph: Graph,
    order: Vec<VertexId>,
    anchors: BTreeMap<String, String>,
}

impl From<CircularDrawing> for CircularDrawingRepr {
    fn from(d: CircularDrawing) -> Self {
        CircularDrawingRepr {
            anchors: d
                .anchors
                .iter()
                .map(|(v, r)| (v.to_string(), rat_to_string(r)))
                .collect(),
            graph: d.graph,
            order: d.order,
        }
    }
}

impl TryFrom<CircularDrawingRepr> for CircularDrawing {
    type Error = String;

    fn try_from(repr: CircularDrawingRepr) -> Result<Self, String> {
        let mut anchors = BTreeMap::new();
        for (k, v) in &repr.anchors {
            let id: VertexId = k.parse().map_err(|_| format!("bad vertex id `{k}`"))?;
            let r = rat_from_str(v).ok_or_else(|| format!("bad rational `{v}`"))?;
            anchors.insert(id, r);
        }
        CircularDrawing::from_parts(repr.graph, repr.order, anchors).map_err(|e| e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
struct StraightLineDrawingRepr {
    graph: Graph,
    coords: BTreeMap<String, [String; 2]>,
    linear: bool,
}

impl From<StraightLineDrawing> for StraightLineDrawingRepr {
    fn from(d: StraightLineDrawing) -> Self {
        StraightLineDrawingRepr {
            coords: d
                .coords
                .iter()
                .map(|(v, p)| (v.to_string(), [rat_to_string(&p.x), rat_to_string(&p.y)]))
                .collect(),
            graph: d.graph,
            linear: d.linear,
        }
    }
}

impl TryFrom<StraightLineDrawingRepr> for StraightLineDrawing {
    type Error = String;

    fn try_from(repr: StraightLineDrawingRepr) -> Result<Self, String> {
        let mut coords = BTreeMap::new();
        for (k, [xs, ys]) in &repr.coords {
            let id: VertexId = k.parse().map_err(|_| format!("bad vertex id `{k}`"))?;
            let x = rat_from_str(xs).ok_or_else(|| format!("bad rational `{xs}`"))?;
            let y = rat_from_str(ys).ok_or_else(|| format!("bad rational `{ys}`"))?;
            coords.insert(id, Point::new(x, y));
        }
        StraightLineDrawing::new(repr.graph, coords, repr.linear).map_err(|e| e.to_string())
    }
}

/// Position of `p` along the segment from `a` to `b`, as the (unnormalized)
/// projection value; used to sort crossing points along an edge.
pub(crate) fn along_edge(p: &Point, a: &Point, b: &Point) -> Rat {
    dot(&p.sub(a), &b.sub(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;
    use crate::graph::generate;

    fn k4_natural() -> CircularDrawing {
        CircularDrawing::make_circular(generate::complete(4), &[0, 1, 2, 3]).unwrap()
    }

    #[test]
    fn k4_has_one_crossing() {
        let d = k4_natural();
        // edges lex-sorted: 01,02,03,12,13,23 -> ids 0..5; diagonals 02 and 13
        assert_eq!(d.crossing_pairs(), vec![(1, 4)]);
        let x = d.crossing_graph();
        assert_eq!(x.graph().vertex_count(), 6);
        assert_eq!(x.graph().edge_count(), 1);
        assert!(x.graph().has_edge(1, 4));
    }

    #[test]
    fn matching_interleaved_order_crosses_pairwise() {
        let g = Graph::from_parts([1, 2, 3, 4, 5, 6], [(1, 2), (3, 4), (5, 6)]).unwrap();
        let d = CircularDrawing::make_circular(g, &[1, 3, 5, 2, 4, 6]).unwrap();
        assert_eq!(d.crossing_pairs().len(), 3);
        let x = d.crossing_graph();
        assert_eq!(x.graph().edge_count(), 3); // triangle on 3 edge-vertices
    }

    #[test]
    fn shared_endpoints_never_cross() {
        let d = CircularDrawing::make_circular(generate::complete(3), &[0, 1, 2]).unwrap();
        assert!(d.crossing_pairs().is_empty());
    }

    #[test]
    fn order_must_be_a_permutation() {
        let g = generate::complete(3);
        assert_eq!(
            CircularDrawing::make_circular(g.clone(), &[0, 1]).unwrap_err(),
            DrawingError::NotAPermutation
        );
        assert_eq!(
            CircularDrawing::make_circular(g, &[0, 1, 1]).unwrap_err(),
            DrawingError::NotAPermutation
        );
    }

    #[test]
    fn from_parts_rejects_three_concurrent_diameters() {
        // anchors t and -1/t are antipodal, so these three chords are all
        // diameters through the origin
        let g = Graph::from_parts([0, 1, 2, 3, 4, 5], [(0, 3), (1, 4), (2, 5)]).unwrap();
        let anchors: BTreeMap<VertexId, Rat> = [
            (0, rat(-1, 2)),
            (1, rat(-1, 3)),
            (2, rat(-1, 5)),
            (3, rat_int(2)),
            (4, rat_int(3)),
            (5, rat_int(5)),
        ]
        .into();
        let err =
            CircularDrawing::from_parts(g, vec![0, 1, 2, 3, 4, 5], anchors).unwrap_err();
        assert!(matches!(err, DrawingError::DegenerateGeometry(_)));
    }

    #[test]
    fn nudge_repairs_three_concurrent_diameters() {
        let g = Graph::from_parts([0, 1, 2, 3, 4, 5], [(0, 3), (1, 4), (2, 5)]).unwrap();
        let anchors: BTreeMap<VertexId, Rat> = [
            (0, rat(-1, 2)),
            (1, rat(-1, 3)),
            (2, rat(-1, 5)),
            (3, rat_int(2)),
            (4, rat_int(3)),
            (5, rat_int(5)),
        ]
        .into();
        let d = CircularDrawing::with_anchors(g, vec![0, 1, 2, 3, 4, 5], anchors, true).unwrap();
        // all three chords still pairwise cross, but no common point remains
        assert_eq!(d.crossing_pairs().len(), 3);
        assert!(concurrency_violation(&d.edges, &d.positions, &d.anchors).is_none());
        // the culprit (highest involved id = 5) moved by a dyadic step
        assert_eq!(d.anchor(5).unwrap(), &(rat_int(5) + rat(1, 2)));
    }

    #[test]
    fn circular_json_round_trip() {
        let d = k4_natural();
        let s = serde_json::to_string(&d).unwrap();
        let back: CircularDrawing = serde_json::from_str(&s).unwrap();
        assert_eq!(d, back);
        // schema shape: anchors keyed by vertex id, rational strings
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["order"], serde_json::json!([0, 1, 2, 3]));
        assert_eq!(v["anchors"]["0"], "1/1");
    }

    #[test]
    fn straight_line_validation() {
        let g = generate::path(3).unwrap();
        // vertex 1 interior to the segment 0-2 is fine (edge 0-2 absent), but
        // a vertex inside an actual edge is rejected
        let coords: BTreeMap<VertexId, Point> = [
            (0, Point::new(rat_int(0), rat_int(0))),
            (1, Point::new(rat_int(1), rat_int(0))),
            (2, Point::new(rat_int(2), rat_int(0))),
        ]
        .into();
        // path edges 0-1, 1-2 are collinear but only touch at vertex 1
        StraightLineDrawing::new(g, coords.clone(), false).unwrap();

        let h = Graph::from_parts([0, 1, 2], [(0, 2)]).unwrap();
        let err = StraightLineDrawing::new(h, coords, false).unwrap_err();
        assert_eq!(
            err,
            DrawingError::VertexInsideEdge {
                vertex: 1,
                u: 0,
                v: 2
            }
        );
    }

    #[test]
    fn straight_line_rejects_duplicate_coordinates() {
        let g = Graph::from_parts([0, 1], []).unwrap();
        let coords: BTreeMap<VertexId, Point> = [
            (0, Point::new(rat_int(0), rat_int(0))),
            (1, Point::new(rat_int(0), rat_int(0))),
        ]
        .into();
        assert_eq!(
            StraightLineDrawing::new(g, coords, false).unwrap_err(),
            DrawingError::DuplicateCoordinate
        );
    }

    #[test]
    fn linear_crossings_are_interleavings() {
        // edges 0-2 and 1-3 interleave on the axis; 0-2 and 3-... do not
        let g = Graph::from_parts([0, 1, 2, 3], [(0, 2), (1, 3)]).unwrap();
        let coords: BTreeMap<VertexId, Point> = (0..4)
            .map(|v| (v, Point::new(rat_int(v as i64), rat_int(0))))
            .collect();
        let d = StraightLineDrawing::new(g, coords, true).unwrap();
        assert_eq!(d.crossing_pairs(), vec![(0, 1)]);
        assert!(d.crossing_graph().points().is_empty());
    }

    #[test]
    fn linear_requires_axis() {
        let g = Graph::from_parts([0, 1], []).unwrap();
        let coords: BTreeMap<VertexId, Point> = [
            (0, Point::new(rat_int(0), rat_int(0))),
            (1, Point::new(rat_int(1), rat_int(1))),
        ]
        .into();
        assert_eq!(
            StraightLineDrawing::new(g, coords, true).unwrap_err(),
            DrawingError::NotOnAxis(1)
        );
    }

    #[test]
    fn wrap_preserves_crossing_graph() {
        let g = Graph::from_parts([0, 1, 2, 3, 4, 5], [(0, 3), (1, 4), (2, 5), (0, 5)]).unwrap();
        let coords: BTreeMap<VertexId, Point> = (0..6)
            .map(|v| (v, Point::new(rat_int(v as i64 * 2), rat_int(0))))
            .collect();
        let d = StraightLineDrawing::new(g, coords, true).unwrap();
        let wrapped = wrap_linear(&d).unwrap();
        assert_eq!(
            d.crossing_graph().graph(),
            wrapped.crossing_graph().graph()
        );
    }

    #[test]
    fn wrap_requires_linear_flag() {
        let g = Graph::from_parts([0, 1], [(0, 1)]).unwrap();
        let coords: BTreeMap<VertexId, Point> = [
            (0, Point::new(rat_int(0), rat_int(0))),
            (1, Point::new(rat_int(1), rat_int(2))),
        ]
        .into();
        let d = StraightLineDrawing::new(g, coords, false).unwrap();
        assert_eq!(wrap_linear(&d).unwrap_err(), DrawingError::NotLinear);
    }

    #[test]
    fn straight_json_round_trip() {
        let g = Graph::from_parts([0, 1, 2, 3], [(0, 2), (1, 3)]).unwrap();
        let coords: BTreeMap<VertexId, Point> = (0..4)
            .map(|v| (v, Point::new(rat_int(v as i64), rat_int(0))))
            .collect();
        let d = StraightLineDrawing::new(g, coords, true).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        let back: StraightLineDrawing = serde_json::from_str(&s).unwrap();
        assert_eq!(d, back);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["linear"], serde_json::json!(true));
    }
}
