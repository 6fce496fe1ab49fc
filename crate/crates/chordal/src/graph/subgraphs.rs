//! Complete-bipartite subgraph detection.

use super::{Graph, VertexId};
use std::collections::BTreeSet;

/// Searches for a (not necessarily induced) `K_{s,t}` subgraph and returns the
/// two sides on success. Enumerates `s`-subsets and intersects their
/// neighbourhoods, so it is only meant for the small `s` used here.
pub fn find_kst_subgraph(
    g: &Graph,
    s: usize,
    t: usize,
) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    if s == 0 || t == 0 {
        return Some((Vec::new(), Vec::new()));
    }
    // Searching for the smaller side first keeps the subset enumeration cheap.
    if s > t {
        return find_kst_subgraph(g, t, s).map(|(a, b)| (b, a));
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut side = vec![0usize; s];
    subsets(&verts, 0, 0, &mut side, &mut |chosen| {
        let mut common: Option<BTreeSet<VertexId>> = None;
        for &i in chosen.iter() {
            let nb: BTreeSet<VertexId> = g.neighbours(verts[i]).collect();
            common = Some(match common {
                None => nb,
                Some(prev) => prev.intersection(&nb).copied().collect(),
            });
        }
        let mut common = common.unwrap();
        for &i in chosen.iter() {
            common.remove(&verts[i]);
        }
        if common.len() >= t {
            let left: Vec<VertexId> = chosen.iter().map(|&i| verts[i]).collect();
            let right: Vec<VertexId> = common.into_iter().take(t).collect();
            return Some((left, right));
        }
        None
    })
}

/// `true` iff `g` contains `K_{s,t}` as a subgraph.
pub fn has_kst_subgraph(g: &Graph, s: usize, t: usize) -> bool {
    find_kst_subgraph(g, s, t).is_some()
}

/// Checks that `left`/`right` really span a `K_{s,t}` subgraph in `g`.
pub fn validate_kst_witness(
    g: &Graph,
    left: &[VertexId],
    right: &[VertexId],
) -> bool {
    let lset: BTreeSet<_> = left.iter().copied().collect();
    let rset: BTreeSet<_> = right.iter().copied().collect();
    if lset.len() != left.len() || rset.len() != right.len() {
        return false;
    }
    if !lset.is_disjoint(&rset) {
        return false;
    }
    lset.iter()
        .all(|&u| rset.iter().all(|&v| g.has_edge(u, v)))
}

fn subsets<T>(
    verts: &[VertexId],
    start: usize,
    depth: usize,
    buf: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    let want = buf.len();
    if depth == want {
        return f(buf);
    }
    let remaining = want - depth;
    let mut i = start;
    while i + remaining <= verts.len() {
        buf[depth] = i;
        if let Some(hit) = subsets(verts, i + 1, depth + 1, buf, f) {
            return Some(hit);
        }
        i += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn complete_bipartite_contains_itself() {
        let g = generate::complete_bipartite(2, 3);
        let (l, r) = find_kst_subgraph(&g, 2, 3).unwrap();
        assert!(validate_kst_witness(&g, &l, &r));
        assert!(!has_kst_subgraph(&g, 2, 4));
        assert!(!has_kst_subgraph(&g, 3, 3));
    }

    #[test]
    fn complete_graph_contains_small_bicliques() {
        let g = generate::complete(5);
        assert!(has_kst_subgraph(&g, 2, 3));
        assert!(has_kst_subgraph(&g, 2, 2));
        assert!(!has_kst_subgraph(&g, 2, 4));
    }

    #[test]
    fn asymmetric_query_order_does_not_matter() {
        let g = generate::complete_bipartite(3, 5);
        assert!(has_kst_subgraph(&g, 5, 3));
        let (l, r) = find_kst_subgraph(&g, 5, 3).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(r.len(), 3);
        assert!(validate_kst_witness(&g, &l, &r));
    }

    #[test]
    fn paths_have_no_k22() {
        let g = generate::path(6).unwrap();
        assert!(!has_kst_subgraph(&g, 2, 2));
        assert!(has_kst_subgraph(&g, 1, 2));
    }

    #[test]
    fn witness_validation_rejects_overlap_and_nonedges() {
        let g = generate::complete_bipartite(2, 2);
        assert!(validate_kst_witness(&g, &[0, 1], &[2, 3]));
        assert!(!validate_kst_witness(&g, &[0, 1], &[1, 2]));
        assert!(!validate_kst_witness(&g, &[0, 2], &[1, 3]));
        assert!(!validate_kst_witness(&g, &[0, 0], &[2, 3]));
    }
}
