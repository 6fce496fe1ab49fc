//! Directional dominance of chords around a reference point, and the peeling
//! of crossing cycles from a circular drawing.
//!
//! From a point `p` off every chord, a chord occupies an open arc of ray
//! directions of width below a half turn. A chord set dominates `p` when
//! those open arcs cover the full direction circle. Peeling extracts an
//! inclusion structure from a dominating set: keep only chords with maximal
//! arcs, then greedily thin to a minimal dominating subset. Around a point in
//! a face at map-graph distance at least `2t` from the outer face, `t`
//! successive peels yield disjoint edge sets that induce cycles in the
//! crossing graph.

use crate::drawing::{map_graph, CircularDrawing, CrossingGraph, DrawingError, MapGraph, Planarisation};
use crate::geom::{
    cross, dir_in_open_cone, dot, on_open_segment, rat_from_str, rat_int, rat_to_string, Dir,
    Point,
};
use crate::graph::{EdgeId, GraphError, VertexId};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominanceError {
    #[error("drawing has a single face, so no interior reference point exists")]
    NoInteriorFace,
    #[error("point lies on the chord of edge {0}")]
    PointOnChord(EdgeId),
    #[error("point lies on the supporting line of edge {0} outside the chord")]
    DegeneratePosition(EdgeId),
    #[error("chords do not dominate the point")]
    NotDominant,
    #[error("map-graph radius {found} is below the required {needed}")]
    RadiusTooSmall { needed: usize, found: usize },
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal contract violated: {0}")]
    InternalContract(String),
}

/// An open arc of directions, counterclockwise from `start` to `end`, of
/// width strictly between zero and a half turn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngularInterval {
    start: Dir,
    end: Dir,
}

impl AngularInterval {
    /// Normalizes two boundary directions into an arc; `None` when they are
    /// parallel (zero width or a half turn).
    pub fn new(a: Dir, b: Dir) -> Option<Self> {
        match cross(&a, &b).cmp(&rat_int(0)) {
            Ordering::Greater => Some(AngularInterval { start: a, end: b }),
            Ordering::Less => Some(AngularInterval { start: b, end: a }),
            Ordering::Equal => None,
        }
    }

    pub fn start(&self) -> &Dir {
        &self.start
    }

    pub fn end(&self) -> &Dir {
        &self.end
    }

    /// Strict membership of a direction in the open arc.
    pub fn contains(&self, d: &Dir) -> bool {
        dir_in_open_cone(d, &self.start, &self.end)
    }

    fn contains_closed(&self, d: &Dir) -> bool {
        self.contains(d) || d.same_ray(&self.start) || d.same_ray(&self.end)
    }

    /// Whether this arc is contained in `other`, boundaries included. Both
    /// arcs are narrower than a half turn, so containment of the two boundary
    /// directions suffices.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.contains_closed(&self.start) && other.contains_closed(&self.end)
    }

    pub fn same_arc(&self, other: &Self) -> bool {
        self.start.same_ray(&other.start) && self.end.same_ray(&other.end)
    }
}

/// The open arc of directions in which rays from `p` hit the open chord of
/// edge `e`.
pub fn edge_interval(
    d: &CircularDrawing,
    p: &Point,
    e: EdgeId,
) -> Result<AngularInterval, DominanceError> {
    let (a, b) = d.chord(e);
    let da = a.sub(p);
    let db = b.sub(p);
    if da.is_zero() || db.is_zero() || on_open_segment(p, &a, &b) {
        return Err(DominanceError::PointOnChord(e));
    }
    let positive = dot(&da, &db) > rat_int(0);
    match AngularInterval::new(da, db) {
        Some(iv) => Ok(iv),
        // collinear: beyond an endpoint the chord subtends a single direction,
        // which no open arc of positive width can represent
        None if positive => Err(DominanceError::DegeneratePosition(e)),
        None => Err(DominanceError::PointOnChord(e)),
    }
}

/// Arcs of all edges of the drawing around `p`, keyed by edge id.
pub fn edge_intervals(
    d: &CircularDrawing,
    p: &Point,
) -> Result<BTreeMap<EdgeId, AngularInterval>, DominanceError> {
    (0..d.edge_ids().len() as u32)
        .map(|e| Ok((e, edge_interval(d, p, e)?)))
        .collect()
}

/// Minimum and maximum, over all directions, of the number of arcs covering
/// the direction. Coverage is piecewise constant between arc boundary
/// directions, so evaluating at every boundary and once per gap between
/// consecutive boundaries is exact.
pub fn coverage_range(intervals: &[&AngularInterval]) -> (usize, usize) {
    if intervals.is_empty() {
        return (0, 0);
    }
    let mut events: Vec<Dir> = Vec::with_capacity(2 * intervals.len());
    for iv in intervals {
        events.push(iv.start.clone());
        events.push(iv.end.clone());
    }
    events.sort_by(crate::geom::cmp_dir);
    events.dedup_by(|a, b| crate::geom::cmp_dir(a, b) == Ordering::Equal);
    let k = events.len();

    let slot = |d: &Dir| -> usize {
        events
            .binary_search_by(|e| crate::geom::cmp_dir(e, d))
            .expect("arc boundary is an event")
    };
    let mut starts_at = vec![0usize; k];
    let mut ends_at = vec![0usize; k];
    for iv in intervals {
        starts_at[slot(&iv.start)] += 1;
        ends_at[slot(&iv.end)] += 1;
    }

    let c0 = intervals.iter().filter(|iv| iv.contains(&events[0])).count();
    let mut c = c0;
    let (mut lo, mut hi) = (usize::MAX, 0);
    for i in 0..k {
        lo = lo.min(c);
        hi = hi.max(c);
        // arcs ending here stop covering, arcs starting here cover the open
        // gap that follows
        let g = c + starts_at[i];
        lo = lo.min(g);
        hi = hi.max(g);
        c = g - ends_at[(i + 1) % k];
    }
    debug_assert_eq!(c, c0, "coverage sweep must close up around the circle");
    (lo, hi)
}

/// Whether the union of the open arcs is the full direction circle.
pub fn is_dominant(intervals: &[&AngularInterval]) -> bool {
    coverage_range(intervals).0 >= 1
}

/// Minimum number of chords internally crossed by a ray from `p`, over all
/// ray directions.
pub fn min_ray_coverage(d: &CircularDrawing, p: &Point) -> Result<usize, DominanceError> {
    let ivs = edge_intervals(d, p)?;
    Ok(coverage_range(&ivs.values().collect::<Vec<_>>()).0)
}

/// Peels one layer from `edges`: restrict to chords whose arcs are maximal
/// within the set, then greedily (ascending edge id) drop chords while the
/// rest keep dominating. The result is minimally dominant and all its arcs
/// are maximal.
pub fn peel_layer(
    edges: &BTreeSet<EdgeId>,
    d: &CircularDrawing,
    p: &Point,
) -> Result<Vec<EdgeId>, DominanceError> {
    let mut intervals = BTreeMap::new();
    for &e in edges {
        intervals.insert(e, edge_interval(d, p, e)?);
    }
    peel_from_intervals(&intervals)
}

fn peel_from_intervals(
    intervals: &BTreeMap<EdgeId, AngularInterval>,
) -> Result<Vec<EdgeId>, DominanceError> {
    if !is_dominant(&intervals.values().collect::<Vec<_>>()) {
        return Err(DominanceError::NotDominant);
    }

    // An arc loses to a strictly larger arc; among equal arcs only the
    // smallest edge id survives, so coverage is preserved.
    let mut maximal: BTreeSet<EdgeId> = BTreeSet::new();
    'outer: for (&e, ive) in intervals {
        for (&f, ivf) in intervals {
            if f == e {
                continue;
            }
            if ive.is_subset_of(ivf) && !ive.same_arc(ivf) {
                continue 'outer;
            }
            if ive.same_arc(ivf) && f < e {
                continue 'outer;
            }
        }
        maximal.insert(e);
    }

    let dominant = |keep: &BTreeSet<EdgeId>| -> bool {
        is_dominant(&keep.iter().map(|e| &intervals[e]).collect::<Vec<_>>())
    };
    if !dominant(&maximal) {
        return Err(DominanceError::InternalContract(
            "restriction to maximal arcs lost dominance".into(),
        ));
    }

    let mut layer = maximal.clone();
    for e in maximal {
        layer.remove(&e);
        if !dominant(&layer) {
            layer.insert(e);
        }
    }
    Ok(layer.into_iter().collect())
}

/// Picks the reference point: a face at maximum map-graph distance from the
/// outer face (smallest face index on ties) together with the centroid of its
/// boundary vertices, which is interior because bounded faces of circular
/// drawings are convex.
pub fn reference_point(
    p: &Planarisation,
    m: &MapGraph,
) -> Result<(usize, Point), DominanceError> {
    if p.face_count() == 1 {
        return Err(DominanceError::NoInteriorFace);
    }
    let dist = m.graph().bfs_distances(m.outer_face());
    let face = (0..p.face_count())
        .filter(|&i| i != p.outer_face())
        .max_by_key(|&i| (dist[&(i as VertexId)], std::cmp::Reverse(i)))
        .expect("at least one bounded face");

    let corners: Vec<VertexId> = p.faces()[face].vertex_set().into_iter().collect();
    let centroid = |pts: &[Point]| {
        let n = rat_int(pts.len() as i64);
        let mut cx = rat_int(0);
        let mut cy = rat_int(0);
        for q in pts {
            cx += &q.x;
            cy += &q.y;
        }
        Point::new(cx / &n, cy / &n)
    };
    let corner_points: Vec<Point> = corners.iter().map(|v| p.coords()[v].clone()).collect();
    let point = centroid(&corner_points);

    let on_some_edge = |q: &Point| -> bool {
        (0..p.plane_edge_ids().len() as u32).any(|e| {
            let (u, v) = p.plane_edge_ids().pair(e);
            let (a, b) = (&p.coords()[&u], &p.coords()[&v]);
            q == a || q == b || on_open_segment(q, a, b)
        })
    };
    if !on_some_edge(&point) {
        return Ok((face, point));
    }
    // Unreachable for convex faces; guards degenerate geometry by sliding
    // towards the average of two boundary dummies.
    let dummies: Vec<Point> = corners
        .iter()
        .filter(|&&v| p.is_dummy(v))
        .take(2)
        .map(|v| p.coords()[v].clone())
        .collect();
    if dummies.len() == 2 {
        let target = centroid(&dummies);
        let mut step = target.sub(&point);
        for _ in 0..40 {
            step = Dir::new(step.x / rat_int(2), step.y / rat_int(2));
            let cand = Point::new(&point.x + &step.x, &point.y + &step.y);
            if !on_some_edge(&cand) {
                return Ok((face, cand));
            }
        }
    }
    Err(DominanceError::InternalContract(
        "no interior reference point near the face centroid".into(),
    ))
}

/// Edge layers peeled around a reference point, with the face the point was
/// chosen in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CycleLayersRepr", into = "CycleLayersRepr")]
pub struct CycleLayers {
    pub face: usize,
    pub center: Point,
    pub layers: Vec<Vec<EdgeId>>,
}

#[derive(Serialize, Deserialize)]
struct CycleLayersRepr {
    face: usize,
    center: [String; 2],
    layers: Vec<Vec<EdgeId>>,
}

impl From<CycleLayers> for CycleLayersRepr {
    fn from(cl: CycleLayers) -> Self {
        CycleLayersRepr {
            face: cl.face,
            center: [rat_to_string(&cl.center.x), rat_to_string(&cl.center.y)],
            layers: cl.layers,
        }
    }
}

impl TryFrom<CycleLayersRepr> for CycleLayers {
    type Error = String;

    fn try_from(r: CycleLayersRepr) -> Result<Self, String> {
        let x = rat_from_str(&r.center[0]).ok_or_else(|| "bad rational".to_string())?;
        let y = rat_from_str(&r.center[1]).ok_or_else(|| "bad rational".to_string())?;
        Ok(CycleLayers {
            face: r.face,
            center: Point::new(x, y),
            layers: r.layers,
        })
    }
}

/// Peels `t` layers around the automatically chosen reference point. Requires
/// map-graph radius at least `2t`; with `t = 0` the layer list is empty and
/// no reference point is needed.
pub fn extract_cycle_layers(d: &CircularDrawing, t: usize) -> Result<CycleLayers, DominanceError> {
    let p = d.planarise()?;
    let m = map_graph(&p);
    if t == 0 {
        return Ok(CycleLayers {
            face: p.outer_face(),
            center: Point::new(rat_int(0), rat_int(0)),
            layers: Vec::new(),
        });
    }
    let rad = m.radius()?;
    if rad < 2 * t {
        return Err(DominanceError::RadiusTooSmall {
            needed: 2 * t,
            found: rad,
        });
    }
    let (face, center) = reference_point(&p, &m)?;
    let mut remaining = edge_intervals(d, &center)?;
    let mut layers = Vec::with_capacity(t);
    for _ in 0..t {
        let layer = peel_from_intervals(&remaining)?;
        for e in &layer {
            remaining.remove(e);
        }
        layers.push(layer);
    }
    Ok(CycleLayers {
        face,
        center,
        layers,
    })
}

/// Checks the structural claims on peeled layers against a crossing graph:
/// layers are disjoint, each induces a cycle, every edge of an earlier layer
/// crosses at least two edges of each later layer, and no edge crosses more
/// than four edges of any single layer. The error names the first failing
/// assertion.
pub fn validate_cycle_layers(x: &CrossingGraph, cl: &CycleLayers) -> Result<(), String> {
    let xg = x.graph();
    let mut seen: BTreeSet<EdgeId> = BTreeSet::new();
    for (i, layer) in cl.layers.iter().enumerate() {
        let set: BTreeSet<EdgeId> = layer.iter().copied().collect();
        if set.len() != layer.len() {
            return Err(format!("layer {i} repeats an edge"));
        }
        if let Some(&e) = set.iter().find(|&&e| !xg.has_vertex(e)) {
            return Err(format!("layer {i} names unknown edge {e}"));
        }
        if let Some(e) = set.intersection(&seen).next() {
            return Err(format!("edge {e} appears in two layers"));
        }
        seen.extend(&set);

        let ind = xg.induced_subgraph(&set);
        if ind.vertex_count() < 3 {
            return Err(format!("layer {i} has fewer than three edges"));
        }
        if !ind.is_connected() {
            return Err(format!("layer {i} does not induce a connected subgraph"));
        }
        let bad = ind.vertices().find(|&v| ind.degree(v) != 2);
        if let Some(v) = bad {
            return Err(format!(
                "layer {i} is not an induced cycle: edge {v} crosses {} others in it",
                ind.degree(v)
            ));
        }
    }
    for (i, inner) in cl.layers.iter().enumerate() {
        for (j, outer) in cl.layers.iter().enumerate().skip(i + 1) {
            let outer_set: BTreeSet<EdgeId> = outer.iter().copied().collect();
            for &e in inner {
                let hits = xg.neighbours(e).filter(|f| outer_set.contains(f)).count();
                if hits < 2 {
                    return Err(format!(
                        "edge {e} of layer {i} crosses only {hits} edges of layer {j}"
                    ));
                }
            }
        }
    }
    for (i, layer) in cl.layers.iter().enumerate() {
        let set: BTreeSet<EdgeId> = layer.iter().copied().collect();
        for e in xg.vertices() {
            let hits = xg.neighbours(e).filter(|f| set.contains(f)).count();
            if hits > 4 {
                return Err(format!("edge {e} crosses {hits} edges of layer {i}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;
    use crate::graph::{generate, Graph};

    /// Three pairwise-crossing chords: the arrangement's only bounded face is
    /// the central triangle with the three dummies as corners.
    fn three_crossing_chords() -> CircularDrawing {
        let g = Graph::from_parts([1, 2, 3, 4, 5, 6], [(1, 2), (3, 4), (5, 6)]).unwrap();
        CircularDrawing::make_circular(g, &[1, 3, 5, 2, 4, 6]).unwrap()
    }

    fn center_of(d: &CircularDrawing) -> (usize, Point) {
        let p = d.planarise().unwrap();
        let m = map_graph(&p);
        reference_point(&p, &m).unwrap()
    }

    #[test]
    fn single_chord_does_not_dominate() {
        let g = Graph::from_parts([0, 1], [(0, 1)]).unwrap();
        let d = CircularDrawing::make_circular(g, &[0, 1]).unwrap();
        let p = Point::new(rat(1, 3), rat(1, 3));
        assert_eq!(min_ray_coverage(&d, &p).unwrap(), 0);
        let ivs = edge_intervals(&d, &p).unwrap();
        assert!(!is_dominant(&ivs.values().collect::<Vec<_>>()));
        assert!(!is_dominant(&[]));
    }

    #[test]
    fn crossing_triangle_dominates_with_coverage_one() {
        let d = three_crossing_chords();
        let (_, p) = center_of(&d);
        assert_eq!(min_ray_coverage(&d, &p).unwrap(), 1);
        let ivs = edge_intervals(&d, &p).unwrap();
        assert!(is_dominant(&ivs.values().collect::<Vec<_>>()));
        // pairwise overlapping arcs
        let v: Vec<_> = ivs.values().collect();
        for i in 0..3 {
            for j in (i + 1)..3 {
                let overlap = v[i].contains_closed(v[j].start())
                    || v[i].contains_closed(v[j].end())
                    || v[j].is_subset_of(v[i]);
                assert!(overlap, "arcs {i} and {j} do not overlap");
            }
        }
    }

    #[test]
    fn reference_point_is_the_dummy_centroid() {
        let d = three_crossing_chords();
        let p = d.planarise().unwrap();
        let m = map_graph(&p);
        let (face, point) = reference_point(&p, &m).unwrap();
        assert_ne!(face, p.outer_face());
        // the unique bounded face is the central triangle on the 3 dummies
        let corners = p.faces()[face].vertex_set();
        assert_eq!(corners.len(), 3);
        assert!(corners.iter().all(|&v| p.is_dummy(v)));
        let mut cx = rat_int(0);
        let mut cy = rat_int(0);
        for v in &corners {
            cx += &p.coords()[v].x;
            cy += &p.coords()[v].y;
        }
        assert_eq!(point, Point::new(cx / rat_int(3), cy / rat_int(3)));
    }

    #[test]
    fn point_on_chord_is_rejected() {
        let d = three_crossing_chords();
        let (a, b) = d.chord(0);
        let mid = Point::new((&a.x + &b.x) / rat_int(2), (&a.y + &b.y) / rat_int(2));
        assert_eq!(
            edge_interval(&d, &mid, 0).unwrap_err(),
            DominanceError::PointOnChord(0)
        );
        assert_eq!(
            edge_interval(&d, &a, 0).unwrap_err(),
            DominanceError::PointOnChord(0)
        );
    }

    #[test]
    fn point_on_extension_is_degenerate() {
        let g = Graph::from_parts([0, 1], [(0, 1)]).unwrap();
        let d = CircularDrawing::make_circular(g, &[0, 1]).unwrap();
        let (a, b) = d.chord(0);
        let p = Point::new(&b.x + (&b.x - &a.x), &b.y + (&b.y - &a.y));
        assert_eq!(
            edge_interval(&d, &p, 0).unwrap_err(),
            DominanceError::DegeneratePosition(0)
        );
    }

    #[test]
    fn peel_keeps_all_three_crossing_chords() {
        let d = three_crossing_chords();
        let (_, p) = center_of(&d);
        let edges: BTreeSet<EdgeId> = (0..3).collect();
        let layer = peel_layer(&edges, &d, &p).unwrap();
        assert_eq!(layer, vec![0, 1, 2]);
        // idempotent on its own output
        let again = peel_layer(&layer.iter().copied().collect(), &d, &p).unwrap();
        assert_eq!(again, layer);
    }

    #[test]
    fn peeled_layer_is_minimal() {
        let d = three_crossing_chords();
        let (_, p) = center_of(&d);
        let layer = peel_layer(&(0..3).collect(), &d, &p).unwrap();
        let ivs = edge_intervals(&d, &p).unwrap();
        for &e in &layer {
            let rest: Vec<&AngularInterval> = layer
                .iter()
                .filter(|&&f| f != e)
                .map(|f| &ivs[f])
                .collect();
            assert!(!is_dominant(&rest), "edge {e} is redundant");
        }
    }

    #[test]
    fn nested_chord_is_peeled_away() {
        // three pairwise-crossing chords plus a short chord tucked behind one
        // of them; the short chord's arc nests inside that side's arc
        let g = Graph::from_parts(
            [1, 2, 3, 4, 5, 6, 7, 8],
            [(1, 2), (3, 4), (5, 6), (7, 8)],
        )
        .unwrap();
        let d = CircularDrawing::make_circular(g, &[1, 3, 7, 8, 5, 2, 4, 6]).unwrap();
        // chords (1,2),(3,4),(5,6) still pairwise cross; (7,8) crosses nothing
        assert_eq!(d.crossing_pairs(), vec![(0, 1), (0, 2), (1, 2)]);
        let (_, p) = center_of(&d);
        let ivs = edge_intervals(&d, &p).unwrap();
        let nested = (0..3).any(|e| ivs[&3].is_subset_of(&ivs[&e]));
        assert!(nested, "short chord's arc is not nested");
        let layer = peel_layer(&(0..4).collect(), &d, &p).unwrap();
        assert_eq!(layer, vec![0, 1, 2]);
    }

    #[test]
    fn no_interior_face_is_reported() {
        let g = Graph::from_parts([0, 1], [(0, 1)]).unwrap();
        let d = CircularDrawing::make_circular(g, &[0, 1]).unwrap();
        let p = d.planarise().unwrap();
        let m = map_graph(&p);
        assert_eq!(
            reference_point(&p, &m).unwrap_err(),
            DominanceError::NoInteriorFace
        );
    }

    #[test]
    fn extraction_needs_radius() {
        let d = CircularDrawing::make_circular(generate::complete(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!(
            extract_cycle_layers(&d, 1).unwrap_err(),
            DominanceError::RadiusTooSmall {
                needed: 2,
                found: 1
            }
        );
        let zero = extract_cycle_layers(&d, 0).unwrap();
        assert!(zero.layers.is_empty());
        assert!(validate_cycle_layers(&d.crossing_graph(), &zero).is_ok());
    }

    #[test]
    fn crossing_triangle_layer_validates_as_a_cycle() {
        let d = three_crossing_chords();
        let (face, center) = center_of(&d);
        let layer = peel_layer(&(0..3).collect(), &d, &center).unwrap();
        let cl = CycleLayers {
            face,
            center,
            layers: vec![layer],
        };
        validate_cycle_layers(&d.crossing_graph(), &cl).unwrap();
    }

    #[test]
    fn validation_rejects_a_broken_layer() {
        let d = three_crossing_chords();
        let (face, center) = center_of(&d);
        let cl = CycleLayers {
            face,
            center,
            layers: vec![vec![0, 1]],
        };
        let err = validate_cycle_layers(&d.crossing_graph(), &cl).unwrap_err();
        assert!(err.contains("fewer than three"), "{err}");
    }

    #[test]
    fn coverage_matches_direct_ray_shooting() {
        // dual oracle: arc membership versus exact ray-segment intersection
        let d = three_crossing_chords();
        let (_, p) = center_of(&d);
        let ivs = edge_intervals(&d, &p).unwrap();
        let mut checked = 0;
        for dx in -8i64..=8 {
            for dy in -8i64..=8 {
                if dx == 0 && dy == 0 {
                    continue;
                }
                let dir = Dir::new(rat_int(dx), rat_int(dy));
                let by_arc = ivs.values().filter(|iv| iv.contains(&dir)).count();
                let mut by_ray = 0;
                let mut clean = true;
                for e in 0..d.edge_ids().len() as u32 {
                    let (a, b) = d.chord(e);
                    let ab = b.sub(&a);
                    let denom = cross(&ab, &dir);
                    if denom == rat_int(0) {
                        clean = false;
                        break;
                    }
                    // a + t(b - a) = p + s * dir
                    let ap = p.sub(&a);
                    let t = cross(&ap, &dir) / &denom;
                    let s = cross(&ap, &ab) / &denom;
                    if t == rat_int(0) || t == rat_int(1) || s == rat_int(0) {
                        clean = false;
                        break;
                    }
                    if rat_int(0) < t && t < rat_int(1) && s > rat_int(0) {
                        by_ray += 1;
                    }
                }
                if clean {
                    assert_eq!(by_arc, by_ray, "direction ({dx},{dy})");
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn reference_point_avoids_all_chords() {
        let d = CircularDrawing::make_circular(generate::complete(4), &[0, 1, 2, 3]).unwrap();
        let (face, p) = center_of(&d);
        assert!(face < 4);
        for e in 0..d.edge_ids().len() as u32 {
            let (a, b) = d.chord(e);
            assert!(!on_open_segment(&p, &a, &b));
            assert_ne!(p, a);
            assert_ne!(p, b);
        }
    }

    #[test]
    fn cycle_layers_json_round_trip() {
        let cl = CycleLayers {
            face: 2,
            center: Point::new(rat(1, 3), rat(-2, 7)),
            layers: vec![vec![0, 2, 4], vec![1, 3, 5]],
        };
        let s = serde_json::to_string(&cl).unwrap();
        let back: CycleLayers = serde_json::from_str(&s).unwrap();
        assert_eq!(cl, back);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["center"][0], "1/3");
    }
}
