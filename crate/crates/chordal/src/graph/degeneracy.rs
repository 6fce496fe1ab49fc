//! Degeneracy by repeated minimum-degree removal.

use super::{Graph, VertexId};
use std::collections::BTreeMap;

/// Degeneracy of `g` together with a witness removal order. At each step the
/// minimum-degree vertex is removed (smallest id on ties); the degeneracy is
/// the largest degree seen at removal time. Replaying the order and checking
/// each removal degree against the reported value verifies the witness.
pub fn degeneracy(g: &Graph) -> (usize, Vec<VertexId>) {
    let mut work = g.clone();
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut worst = 0usize;
    while work.vertex_count() > 0 {
        let v = work
            .vertices()
            .min_by_key(|&v| (work.degree(v), v))
            .unwrap();
        worst = worst.max(work.degree(v));
        order.push(v);
        work.remove_vertex(v).unwrap();
    }
    (worst, order)
}

/// Replays a removal order and returns the max degree seen, or `None` if the
/// order does not cover the graph exactly.
pub fn replay_removal_order(g: &Graph, order: &[VertexId]) -> Option<usize> {
    if order.len() != g.vertex_count() {
        return None;
    }
    let mut work = g.clone();
    let mut worst = 0usize;
    for &v in order {
        if !work.has_vertex(v) {
            return None;
        }
        worst = worst.max(work.degree(v));
        work.remove_vertex(v).unwrap();
    }
    Some(worst)
}

/// Checks `k`-degeneracy directly: every subgraph must contain a vertex of
/// degree at most `k`. Equivalent to `degeneracy(g).0 <= k`.
pub fn is_k_degenerate(g: &Graph, k: usize) -> bool {
    degeneracy(g).0 <= k
}

/// Convenience: max degree per vertex at removal, as a map, for diagnostics.
pub fn removal_degrees(g: &Graph) -> BTreeMap<VertexId, usize> {
    let mut work = g.clone();
    let mut out = BTreeMap::new();
    while work.vertex_count() > 0 {
        let v = work
            .vertices()
            .min_by_key(|&v| (work.degree(v), v))
            .unwrap();
        out.insert(v, work.degree(v));
        work.remove_vertex(v).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn known_degeneracies() {
        assert_eq!(degeneracy(&generate::path(5).unwrap()).0, 1);
        assert_eq!(degeneracy(&generate::cycle(5).unwrap()).0, 2);
        assert_eq!(degeneracy(&generate::complete(4)).0, 3);
        assert_eq!(degeneracy(&generate::grid(3).unwrap()).0, 2);
        assert_eq!(degeneracy(&Graph::new()).0, 0);
    }

    #[test]
    fn witness_replays_to_the_same_value() {
        let g = generate::grid(4).unwrap();
        let (d, order) = degeneracy(&g);
        assert_eq!(replay_removal_order(&g, &order), Some(d));
    }

    #[test]
    fn ties_break_to_smallest_id() {
        let g = generate::cycle(4).unwrap();
        let (_, order) = degeneracy(&g);
        assert_eq!(order[0], 0);
    }

    #[test]
    fn replay_rejects_bad_orders() {
        let g = generate::path(3).unwrap();
        assert_eq!(replay_removal_order(&g, &[0, 1]), None);
        assert_eq!(replay_removal_order(&g, &[0, 1, 9]), None);
    }
}
