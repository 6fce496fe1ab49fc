//! Planarisation of a drawing: each crossing becomes a degree-4 dummy vertex,
//! and the faces of the resulting plane graph are traced from the rotation
//! system induced by the coordinates.

use crate::geom::{cmp_dir, point_in_walk, walk_signed_area2, Dir, Point};
use crate::graph::{EdgeId, EdgeIndex, Graph, VertexId};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use super::{along_edge, DrawingError};

/// A face of a planarisation, as one or more closed dart walks. Bounded faces
/// have a single counterclockwise walk; the outer face collects the clockwise
/// outer walks of all components that are not nested inside another
/// component's face. A bounded face enclosing a whole other component also
/// carries that component's outer walk as a hole boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    walks: Vec<Vec<(VertexId, VertexId)>>,
}

impl Face {
    pub fn walks(&self) -> &[Vec<(VertexId, VertexId)>] {
        &self.walks
    }

    /// All vertices on the boundary of this face.
    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.walks
            .iter()
            .flat_map(|w| w.iter().map(|&(u, _)| u))
            .collect()
    }

    pub fn dart_count(&self) -> usize {
        self.walks.iter().map(Vec::len).sum()
    }
}

/// A drawing with all crossings subdivided: the plane graph, exact coordinates
/// for original and dummy vertices, the counterclockwise rotation system, and
/// the traced faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planarisation {
    plane_graph: Graph,
    coords: BTreeMap<VertexId, Point>,
    rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    dummy_origin: BTreeMap<VertexId, (EdgeId, EdgeId)>,
    faces: Vec<Face>,
    outer_face: usize,
    plane_edges: EdgeIndex,
    original_graph: Graph,
    original: BTreeSet<VertexId>,
}

impl Planarisation {
    pub fn plane_graph(&self) -> &Graph {
        &self.plane_graph
    }

    pub fn coords(&self) -> &BTreeMap<VertexId, Point> {
        &self.coords
    }

    /// Incident plane edges of `v` in counterclockwise order.
    pub fn rotation(&self, v: VertexId) -> Option<&[EdgeId]> {
        self.rotation.get(&v).map(Vec::as_slice)
    }

    /// For a dummy vertex, the pair of original edges whose crossing it
    /// subdivides (ids in the drawn graph's edge index, smaller first).
    pub fn dummy_origin(&self, v: VertexId) -> Option<(EdgeId, EdgeId)> {
        self.dummy_origin.get(&v).copied()
    }

    pub fn dummies(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.dummy_origin.keys().copied()
    }

    pub fn dummy_count(&self) -> usize {
        self.dummy_origin.len()
    }

    pub fn is_dummy(&self, v: VertexId) -> bool {
        self.dummy_origin.contains_key(&v)
    }

    pub fn original_vertices(&self) -> &BTreeSet<VertexId> {
        &self.original
    }

    /// The drawn graph before crossings were replaced by dummy vertices.
    pub fn original_graph(&self) -> &Graph {
        &self.original_graph
    }

    pub fn original_edge_index(&self) -> EdgeIndex {
        EdgeIndex::of(&self.original_graph)
    }

    /// Pairs of original edge ids that cross, in dummy-id order.
    pub fn crossing_pairs(&self) -> impl Iterator<Item = (EdgeId, EdgeId)> + '_ {
        self.dummy_origin.values().copied()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn plane_edge_ids(&self) -> &EdgeIndex {
        &self.plane_edges
    }

    /// Face indices whose boundary contains `v`.
    pub fn faces_at(&self, v: VertexId) -> Vec<usize> {
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.vertex_set().contains(&v))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Builds the planarisation of a drawing given its exact geometry and the
/// crossing points per crossing edge pair. Dummy ids are allocated above the
/// largest original vertex id, in lexicographic order of the crossing pairs.
pub fn planarise_points(
    graph: &Graph,
    coords: &BTreeMap<VertexId, Point>,
    edges: &EdgeIndex,
    crossings: &BTreeMap<(EdgeId, EdgeId), Point>,
) -> Result<Planarisation, DrawingError> {
    let original: BTreeSet<VertexId> = graph.vertices().collect();
    let base = graph.max_vertex_id().map_or(0, |m| m + 1);

    let mut plane = Graph::default();
    let mut plane_coords: BTreeMap<VertexId, Point> = BTreeMap::new();
    for v in &original {
        plane.add_vertex(*v);
        plane_coords.insert(*v, coords[v].clone());
    }

    let mut dummy_origin: BTreeMap<VertexId, (EdgeId, EdgeId)> = BTreeMap::new();
    let mut on_edge: BTreeMap<EdgeId, Vec<(VertexId, Point)>> = BTreeMap::new();
    for (k, (&(e, f), p)) in crossings.iter().enumerate() {
        let d = base + k as u32;
        plane.add_vertex(d);
        plane_coords.insert(d, p.clone());
        dummy_origin.insert(d, (e, f));
        on_edge.entry(e).or_default().push((d, p.clone()));
        on_edge.entry(f).or_default().push((d, p.clone()));
    }

    // Replace each crossed edge by its chain through the dummies, sorted by
    // position along the segment.
    for e in 0..edges.len() as u32 {
        let (u, v) = edges.pair(e);
        let (a, b) = (&coords[&u], &coords[&v]);
        let mut chain = vec![u];
        if let Some(ds) = on_edge.get_mut(&e) {
            ds.sort_by_key(|(_, p)| along_edge(p, a, b));
            chain.extend(ds.iter().map(|&(d, _)| d));
        }
        chain.push(v);
        for pair in chain.windows(2) {
            plane
                .add_edge(pair[0], pair[1])
                .map_err(|e| DrawingError::InternalContract(format!("chain edge: {e}")))?;
        }
    }

    let plane_edges = EdgeIndex::of(&plane);

    // Counterclockwise rotation at every vertex, by exact direction compare.
    let mut rotation: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    for v in plane.vertices() {
        let mut inc: Vec<(Dir, EdgeId)> = plane
            .neighbours(v)
            .map(|w| {
                let id = plane_edges.id_of(v, w).expect("incident edge indexed");
                (plane_coords[&w].sub(&plane_coords[&v]), id)
            })
            .collect();
        inc.sort_by(|(d1, _), (d2, _)| cmp_dir(d1, d2));
        for pair in inc.windows(2) {
            if cmp_dir(&pair[0].0, &pair[1].0) == Ordering::Equal {
                return Err(DrawingError::InternalContract(format!(
                    "two plane edges leave vertex {v} in the same direction"
                )));
            }
        }
        rotation.insert(v, inc.into_iter().map(|(_, id)| id).collect());
    }
    let rotation_pos: BTreeMap<VertexId, BTreeMap<EdgeId, usize>> = rotation
        .iter()
        .map(|(&v, rot)| (v, rot.iter().enumerate().map(|(i, &e)| (e, i)).collect()))
        .collect();

    // Trace every dart once. The successor of dart (u, v) leaves v along the
    // counterclockwise predecessor of the edge vu, which walks bounded faces
    // counterclockwise (interior on the left) and outer walks clockwise.
    let next_dart = |u: VertexId, v: VertexId| -> (VertexId, VertexId) {
        let rot = &rotation[&v];
        let id = plane_edges.id_of(u, v).expect("dart along a plane edge");
        let pos = rotation_pos[&v][&id];
        let pred = rot[(pos + rot.len() - 1) % rot.len()];
        let (a, b) = plane_edges.pair(pred);
        (v, if a == v { b } else { a })
    };

    let mut visited: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut walks: Vec<Vec<(VertexId, VertexId)>> = Vec::new();
    for e in 0..plane_edges.len() as u32 {
        let (u, v) = plane_edges.pair(e);
        for start in [(u, v), (v, u)] {
            if visited.contains(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut dart = start;
            loop {
                visited.insert(dart);
                walk.push(dart);
                dart = next_dart(dart.0, dart.1);
                if dart == start {
                    break;
                }
            }
            walks.push(walk);
        }
    }

    // Per component: find the outer walk via the leftmost vertex. The gap in
    // its rotation containing direction (-1, 0) is the outer corner, and the
    // walk leaving along the counterclockwise-earlier edge of that gap is the
    // outer walk.
    let components = plane.connected_components();
    let mut comp_of: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, comp) in components.iter().enumerate() {
        for &v in comp {
            comp_of.insert(v, i);
        }
    }
    let walk_comp: Vec<usize> = walks.iter().map(|w| comp_of[&w[0].0]).collect();

    let left = Dir::new(crate::geom::rat_int(-1), crate::geom::rat_int(0));
    let mut outer_walk_of_comp: BTreeMap<usize, usize> = BTreeMap::new();
    for (ci, comp) in components.iter().enumerate() {
        let vstar = comp
            .iter()
            .copied()
            .min_by(|a, b| plane_coords[a].cmp(&plane_coords[b]))
            .expect("nonempty component");
        let rot = &rotation[&vstar];
        if rot.is_empty() {
            continue; // isolated vertex: no walks, lives in its host face
        }
        let dirs: Vec<Dir> = rot
            .iter()
            .map(|&e| {
                let (a, b) = plane_edges.pair(e);
                let w = if a == vstar { b } else { a };
                plane_coords[&w].sub(&plane_coords[&vstar])
            })
            .collect();
        if dirs.iter().any(|d| cmp_dir(d, &left) == Ordering::Equal) {
            return Err(DrawingError::InternalContract(format!(
                "edge points left at leftmost vertex {vstar}"
            )));
        }
        // Largest rotation slot whose direction precedes (-1, 0); the gap to
        // its successor contains (-1, 0). With none, the gap wrapping past
        // angle zero does.
        let i = match dirs.iter().rposition(|d| cmp_dir(d, &left) == Ordering::Less) {
            Some(i) => i,
            None => rot.len() - 1,
        };
        let (a, b) = plane_edges.pair(rot[i]);
        let out = if a == vstar { b } else { a };
        let outer_dart = (vstar, out);
        let wi = walks
            .iter()
            .position(|w| w.contains(&outer_dart))
            .ok_or_else(|| {
                DrawingError::InternalContract("outer dart not on any walk".into())
            })?;
        outer_walk_of_comp.insert(ci, wi);
    }

    // Euler check per component: vertices - edges + bounded walks + 1 == 2.
    for (ci, comp) in components.iter().enumerate() {
        let vs = comp.len() as i64;
        let es = (0..plane_edges.len() as u32)
            .filter(|&e| comp.contains(&plane_edges.pair(e).0))
            .count() as i64;
        let bounded = walk_comp
            .iter()
            .enumerate()
            .filter(|&(wi, &c)| c == ci && outer_walk_of_comp.get(&ci) != Some(&wi))
            .count() as i64;
        if vs - es + bounded + 1 != 2 {
            return Err(DrawingError::InternalContract(format!(
                "component {ci} violates the Euler relation: V={vs} E={es} bounded={bounded}"
            )));
        }
    }

    // Bounded faces in trace order. A component drawn inside a bounded face
    // of another component contributes its outer walk to that face as a hole;
    // all remaining outer walks join the single outer face, appended last.
    let bounded_idx: Vec<usize> = (0..walks.len())
        .filter(|&wi| outer_walk_of_comp.get(&walk_comp[wi]) != Some(&wi))
        .collect();
    let mut face_walks: Vec<Vec<usize>> = bounded_idx.iter().map(|&wi| vec![wi]).collect();
    let mut outer_walks: Vec<usize> = Vec::new();

    for (ci, comp) in components.iter().enumerate() {
        let Some(&owi) = outer_walk_of_comp.get(&ci) else {
            continue;
        };
        let probe = comp
            .iter()
            .copied()
            .min_by(|a, b| plane_coords[a].cmp(&plane_coords[b]))
            .map(|v| plane_coords[&v].clone())
            .expect("nonempty component");
        // Innermost bounded walk of another component strictly containing the
        // probe point; boundaries of distinct components are disjoint, so the
        // containing walks are nested and the smallest area wins.
        let host = bounded_idx
            .iter()
            .enumerate()
            .filter(|&(_, &wi)| walk_comp[wi] != ci)
            .filter(|&(_, &wi)| {
                let poly: Vec<Point> =
                    walks[wi].iter().map(|&(u, _)| plane_coords[&u].clone()).collect();
                point_in_walk(&probe, &poly)
            })
            .min_by_key(|&(_, &wi)| {
                let poly: Vec<Point> =
                    walks[wi].iter().map(|&(u, _)| plane_coords[&u].clone()).collect();
                walk_signed_area2(&poly)
            })
            .map(|(slot, _)| slot);
        match host {
            Some(slot) => face_walks[slot].push(owi),
            None => outer_walks.push(owi),
        }
    }

    let mut faces: Vec<Face> = face_walks
        .into_iter()
        .map(|wis| Face {
            walks: wis.into_iter().map(|wi| walks[wi].clone()).collect(),
        })
        .collect();
    faces.push(Face {
        walks: outer_walks.into_iter().map(|wi| walks[wi].clone()).collect(),
    });
    let outer_face = faces.len() - 1;

    debug_assert!(dummy_origin.keys().all(|&d| plane.degree(d) == 4));

    Ok(Planarisation {
        plane_graph: plane,
        coords: plane_coords,
        rotation,
        dummy_origin,
        faces,
        outer_face,
        plane_edges,
        original_graph: graph.clone(),
        original,
    })
}
