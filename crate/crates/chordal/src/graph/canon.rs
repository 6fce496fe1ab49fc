//! Canonical forms and exhaustive enumeration for small graphs.
//!
//! The canonical form of a graph on at most [`MAX_CANON_VERTICES`] vertices is
//! the lexicographically smallest upper-triangle adjacency bitstring over all
//! relabellings. That is expensive in general but instant at these sizes, and
//! it gives exact isomorphism tests plus duplicate-free enumeration.

use super::{Graph, GraphError, VertexId};
use std::collections::BTreeMap;

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 8;

/// Isomorphism-invariant fingerprint: vertex count plus the minimal adjacency
/// bitstring. Two graphs are isomorphic iff their forms are equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: u64,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

fn pair_bit(n: usize, a: usize, b: usize) -> u64 {
    debug_assert!(a < b && b < n);
    let idx = a * (2 * n - a - 1) / 2 + (b - a - 1);
    1u64 << idx
}

fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, used: &mut u32, perm: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if perm.len() == n {
            f(perm);
            return;
        }
        for v in 0..n {
            if *used & (1 << v) == 0 {
                *used |= 1 << v;
                perm.push(v);
                rec(n, used, perm, f);
                perm.pop();
                *used &= !(1 << v);
            }
        }
    }
    let mut perm = Vec::with_capacity(n);
    let mut used = 0u32;
    rec(n, &mut used, &mut perm, f);
}

/// Computes the canonical form of `g`. Fails with [`GraphError::SizeAboveCap`]
/// beyond [`MAX_CANON_VERTICES`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let verts: Vec<VertexId> = g.vertices().collect();
    let n = verts.len();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::SizeAboveCap {
            found: n,
            cap: MAX_CANON_VERTICES,
        });
    }
    let index: BTreeMap<VertexId, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (index[&u], index[&v]))
        .collect();
    let mut best = u64::MAX;
    for_each_permutation(n, &mut |perm| {
        let mut bits = 0u64;
        for &(i, j) in &edges {
            let (a, b) = if perm[i] < perm[j] {
                (perm[i], perm[j])
            } else {
                (perm[j], perm[i])
            };
            bits |= pair_bit(n, a, b);
        }
        if bits < best {
            best = bits;
        }
    });
    if n == 0 {
        best = 0;
    }
    Ok(CanonicalForm { n, bits: best })
}

/// Exact isomorphism test for graphs within the canonical-form size cap.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// All graphs on exactly `n` vertices up to isomorphism, one labelled
/// representative each (vertex ids `0..n`). Built by extending the
/// representatives on `n - 1` vertices with every possible attachment of a new
/// vertex and deduplicating; every graph arises this way because deleting any
/// vertex of an `n`-vertex graph leaves an `(n-1)`-vertex graph.
pub fn enumerate_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Ok(vec![Graph::new()]);
    }
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::SizeAboveCap {
            found: n,
            cap: MAX_CANON_VERTICES,
        });
    }
    let mut single = Graph::new();
    single.add_vertex(0);
    let mut level = vec![single];
    for k in 1..n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u32..(1 << k) {
                let mut h = g.clone();
                h.add_vertex(k as VertexId);
                for i in 0..k {
                    if mask & (1 << i) != 0 {
                        h.add_edge(i as VertexId, k as VertexId).unwrap();
                    }
                }
                let form = canonical_form(&h)?;
                next.entry(form).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// All trees on exactly `n` vertices with maximum degree at most `max_degree`,
/// up to isomorphism. Labelled trees come from decoding every possible Prüfer
/// sequence; canonical forms strip the relabellings.
pub fn enumerate_trees_up_to_iso(
    n: usize,
    max_degree: usize,
) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::SizeAboveCap {
            found: n,
            cap: MAX_CANON_VERTICES,
        });
    }
    let mut out = Vec::new();
    match n {
        0 => {}
        1 => {
            let mut g = Graph::new();
            g.add_vertex(0);
            out.push(g);
        }
        2 => {
            if max_degree >= 1 {
                let mut g = Graph::new();
                g.add_edge(0, 1).unwrap();
                out.push(g);
            }
        }
        _ => {
            let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
            let count = (n as u64).pow((n - 2) as u32);
            let mut seq = vec![0usize; n - 2];
            for code in 0..count {
                let mut c = code;
                for slot in seq.iter_mut() {
                    *slot = (c % n as u64) as usize;
                    c /= n as u64;
                }
                let g = prufer_decode(n, &seq);
                if g.max_degree() <= max_degree {
                    let form = canonical_form(&g)?;
                    seen.entry(form).or_insert(g);
                }
            }
            out = seen.into_values().collect();
        }
    }
    Ok(out)
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v as VertexId);
    }
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf as VertexId, s as VertexId).unwrap();
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let a = last.next().unwrap();
    let b = last.next().unwrap();
    g.add_edge(a as VertexId, b as VertexId).unwrap();
    g
}
