//! Complete-minor search with checkable branch-set certificates.

use super::{Graph, GraphError, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashSet};
use thiserror::Error;

/// Default size cap for [`hadwiger_exact`].
pub const DEFAULT_HADWIGER_CAP: usize = 14;

/// Witness that `K_t` is a minor: `t` branch sets, each inducing a connected
/// subgraph, pairwise joined by at least one edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCertificate {
    pub parts: Vec<Vec<VertexId>>,
}

impl MinorCertificate {
    /// The order of the complete graph this certificate exhibits.
    pub fn order(&self) -> usize {
        self.parts.len()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MinorCertificateError {
    #[error("branch set {0} is empty")]
    EmptyPart(usize),
    #[error("branch set {part} mentions vertex {vertex} not in the graph")]
    UnknownVertex { part: usize, vertex: VertexId },
    #[error("vertex {0} appears in more than one branch set")]
    OverlappingParts(VertexId),
    #[error("branch set {0} does not induce a connected subgraph")]
    PartDisconnected(usize),
    #[error("no edge joins branch sets {0} and {1}")]
    PartsNotAdjacent(usize, usize),
}

/// Checks that `cert` really witnesses a `K_t` minor of `g` with
/// `t = cert.order()`.
pub fn validate_minor_certificate(
    g: &Graph,
    cert: &MinorCertificate,
) -> Result<(), MinorCertificateError> {
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    for (i, part) in cert.parts.iter().enumerate() {
        if part.is_empty() {
            return Err(MinorCertificateError::EmptyPart(i));
        }
        for &v in part {
            if !g.has_vertex(v) {
                return Err(MinorCertificateError::UnknownVertex { part: i, vertex: v });
            }
            if !seen.insert(v) {
                return Err(MinorCertificateError::OverlappingParts(v));
            }
        }
        let sub = g.induced_subgraph(&part.iter().copied().collect());
        if !sub.is_connected() {
            return Err(MinorCertificateError::PartDisconnected(i));
        }
    }
    for i in 0..cert.parts.len() {
        for j in (i + 1)..cert.parts.len() {
            let joined = cert.parts[i]
                .iter()
                .any(|&u| cert.parts[j].iter().any(|&v| g.has_edge(u, v)));
            if !joined {
                return Err(MinorCertificateError::PartsNotAdjacent(i, j));
            }
        }
    }
    Ok(())
}

/// Largest `t` such that `K_t` is a minor of `g`, with a certificate.
///
/// Branch-and-bound over quotients of `g` by edge contractions: every complete
/// minor is a clique of some quotient, so each explored quotient contributes
/// its exact maximum clique as a candidate and states with too few parts to
/// beat the incumbent are cut. Visited partitions are memoised under the
/// canonical "each vertex mapped to the smallest id in its part" key, which
/// collapses the many contraction orders reaching the same quotient.
pub fn hadwiger_exact(
    g: &Graph,
    cap: usize,
) -> Result<(usize, MinorCertificate), GraphError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::SizeAboveCap { found: n, cap });
    }
    if n == 0 {
        return Ok((0, MinorCertificate { parts: Vec::new() }));
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (index[&u], index[&v]))
        .collect();

    let mut best = 0usize;
    let mut best_parts: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let root: Vec<u8> = (0..n as u8).collect();
    let mut stack = vec![root.clone()];
    seen.insert(root);

    while let Some(labels) = stack.pop() {
        // Quotient nodes are the distinct labels; collect members per part.
        let mut members: BTreeMap<u8, Vec<usize>> = BTreeMap::new();
        for (v, &l) in labels.iter().enumerate() {
            members.entry(l).or_default().push(v);
        }
        let parts: Vec<u8> = members.keys().copied().collect();
        let qidx: BTreeMap<u8, usize> =
            parts.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let p = parts.len();
        let mut qadj = vec![0u64; p];
        for &(u, v) in &edges {
            let (a, b) = (qidx[&labels[u]], qidx[&labels[v]]);
            if a != b {
                qadj[a] |= 1 << b;
                qadj[b] |= 1 << a;
            }
        }
        let (size, mask) = max_clique(&qadj);
        if size > best {
            best = size;
            best_parts = (0..p)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| members[&parts[i]].clone())
                .collect();
        }
        if p <= best + 1 {
            // A child quotient has p - 1 nodes, so its cliques cannot win.
            continue;
        }
        for a in 0..p {
            let mut rest = qadj[a] & !((1u64 << (a + 1)) - 1);
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let (la, lb) = (parts[a], parts[b]);
                let keep = la.min(lb);
                let drop = la.max(lb);
                let mut child = labels.clone();
                for l in child.iter_mut() {
                    if *l == drop {
                        *l = keep;
                    }
                }
                if seen.insert(child.clone()) {
                    stack.push(child);
                }
            }
        }
    }

    let cert = MinorCertificate {
        parts: best_parts
            .into_iter()
            .map(|part| part.into_iter().map(|i| verts[i]).collect())
            .collect(),
    };
    debug_assert!(validate_minor_certificate(g, &cert).is_ok());
    Ok((best, cert))
}

/// Exact maximum clique of a bitmask adjacency, returning size and members.
fn max_clique(adj: &[u64]) -> (usize, u64) {
    let n = adj.len();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut best = 0usize;
    let mut best_mask = 0u64;
    bk(adj, 0, 0, full, 0, &mut best, &mut best_mask);
    (best, best_mask)
}

fn bk(adj: &[u64], r: u64, rsize: usize, p: u64, x: u64, best: &mut usize, bm: &mut u64) {
    if p == 0 && x == 0 {
        if rsize > *best {
            *best = rsize;
            *bm = r;
        }
        return;
    }
    if rsize + p.count_ones() as usize <= *best {
        return;
    }
    // Pivot on the candidate covering most of `p`; only its non-neighbours
    // need to be branched on.
    let mut pivot = usize::MAX;
    let mut pivot_cover = u64::MAX;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let uncovered = p & !adj[u];
        if (uncovered.count_ones() as u64) < pivot_cover {
            pivot_cover = uncovered.count_ones() as u64;
            pivot = u;
        }
    }
    let mut cand = if pivot == usize::MAX { p } else { p & !adj[pivot] };
    let mut p = p;
    let mut x = x;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        cand &= cand - 1;
        bk(adj, r | bit, rsize + 1, p & adj[v], x & adj[v], best, bm);
        p &= !bit;
        x |= bit;
    }
}
