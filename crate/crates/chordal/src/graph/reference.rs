//! Brute-force reference solvers.
//!
//! Each function here answers the same question as one of the optimised
//! solvers but by unpruned exhaustion over a different formulation, so the two
//! routes share no shortcuts. They are only usable on very small graphs and
//! exist to cross-check the real solvers.

use super::{Graph, VertexId};
use std::collections::{BTreeMap, BTreeSet};

/// Treewidth as the minimum over all elimination orders of the largest
/// back-degree, simulating every one of the `n!` orders directly.
pub fn treewidth_brute(g: &Graph) -> i64 {
    let verts: Vec<VertexId> = g.vertices().collect();
    if verts.is_empty() {
        return -1;
    }
    let mut best = i64::MAX;
    let mut order = Vec::with_capacity(verts.len());
    let mut used = vec![false; verts.len()];
    eliminate_orders(g, &verts, &mut order, &mut used, &mut best);
    best
}

fn eliminate_orders(
    g: &Graph,
    verts: &[VertexId],
    order: &mut Vec<VertexId>,
    used: &mut Vec<bool>,
    best: &mut i64,
) {
    if order.len() == verts.len() {
        let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = verts
            .iter()
            .map(|&v| (v, g.neighbours(v).collect()))
            .collect();
        let mut width = 0i64;
        for &v in order.iter() {
            let nb: Vec<VertexId> = adj[&v].iter().copied().collect();
            width = width.max(nb.len() as i64);
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    adj.get_mut(&a).unwrap().insert(b);
                    adj.get_mut(&b).unwrap().insert(a);
                }
            }
            adj.remove(&v);
            for set in adj.values_mut() {
                set.remove(&v);
            }
        }
        *best = (*best).min(width);
        return;
    }
    for i in 0..verts.len() {
        if !used[i] {
            used[i] = true;
            order.push(verts[i]);
            eliminate_orders(g, verts, order, used, best);
            order.pop();
            used[i] = false;
        }
    }
}

/// Largest complete minor by enumerating every partition of every vertex
/// subset and keeping the partitions whose blocks are connected and pairwise
/// adjacent.
pub fn hadwiger_brute(g: &Graph) -> usize {
    let verts: Vec<VertexId> = g.vertices().collect();
    let n = verts.len();
    let mut best = 0usize;
    for mask in 1u32..(1u32 << n) {
        let sub: Vec<VertexId> = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| verts[i])
            .collect();
        let mut assignment = vec![0usize; sub.len()];
        partitions(&sub, 1, &mut assignment, &mut |blocks| {
            if blocks.len() > best && is_complete_minor_model(g, blocks) {
                best = blocks.len();
            }
        });
    }
    best
}

/// Restricted-growth enumeration: element `i` joins one of the existing
/// blocks or opens block `max + 1`.
fn partitions(
    sub: &[VertexId],
    next: usize,
    assignment: &mut Vec<usize>,
    f: &mut impl FnMut(&[Vec<VertexId>]),
) {
    let i = next;
    if i == sub.len() {
        let blocks_count = assignment.iter().copied().max().unwrap_or(0) + 1;
        let mut blocks = vec![Vec::new(); blocks_count];
        for (j, &b) in assignment.iter().enumerate() {
            blocks[b].push(sub[j]);
        }
        f(&blocks);
        return;
    }
    let current_max = assignment[..i].iter().copied().max().unwrap();
    for b in 0..=(current_max + 1) {
        assignment[i] = b;
        partitions(sub, i + 1, assignment, f);
    }
}

fn is_complete_minor_model(g: &Graph, blocks: &[Vec<VertexId>]) -> bool {
    for block in blocks {
        if !g
            .induced_subgraph(&block.iter().copied().collect())
            .is_connected()
        {
            return false;
        }
    }
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            let touch = a.iter().any(|&u| b.iter().any(|&v| g.has_edge(u, v)));
            if !touch {
                return false;
            }
        }
    }
    true
}

/// Largest complete topological minor by trying every branch-vertex subset and
/// every combination of internally disjoint connecting paths.
pub fn hajos_brute(g: &Graph) -> usize {
    let n = g.vertex_count();
    for t in (2..=n).rev() {
        if has_clique_subdivision_brute(g, t) {
            return t;
        }
    }
    usize::from(n >= 1)
}

fn has_clique_subdivision_brute(g: &Graph, t: usize) -> bool {
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut chosen = Vec::new();
    combinations(&verts, t, 0, &mut chosen, &mut |branch| {
        let mut pairs = Vec::new();
        for i in 0..t {
            for j in (i + 1)..t {
                pairs.push((branch[i], branch[j]));
            }
        }
        let branch_set: BTreeSet<VertexId> = branch.iter().copied().collect();
        embed_pairs(g, &branch_set, &pairs, 0, &BTreeSet::new())
    })
}

fn combinations(
    verts: &[VertexId],
    t: usize,
    from: usize,
    chosen: &mut Vec<VertexId>,
    f: &mut impl FnMut(&[VertexId]) -> bool,
) -> bool {
    if chosen.len() == t {
        return f(chosen);
    }
    let need = t - chosen.len();
    let mut i = from;
    while i + need <= verts.len() {
        chosen.push(verts[i]);
        if combinations(verts, t, i + 1, chosen, f) {
            chosen.pop();
            return true;
        }
        chosen.pop();
        i += 1;
    }
    false
}

fn embed_pairs(
    g: &Graph,
    branch: &BTreeSet<VertexId>,
    pairs: &[(VertexId, VertexId)],
    k: usize,
    used: &BTreeSet<VertexId>,
) -> bool {
    if k == pairs.len() {
        return true;
    }
    let (a, b) = pairs[k];
    let mut path = vec![a];
    all_paths(g, b, branch, used, &mut path, &mut |interior| {
        let mut used2 = used.clone();
        used2.extend(interior.iter().copied());
        embed_pairs(g, branch, pairs, k + 1, &used2)
    })
}

/// Enumerates every simple path from the tail of `path` to `target` whose
/// interior avoids branch vertices and `used`; calls `f` with each interior.
fn all_paths(
    g: &Graph,
    target: VertexId,
    branch: &BTreeSet<VertexId>,
    used: &BTreeSet<VertexId>,
    path: &mut Vec<VertexId>,
    f: &mut impl FnMut(&[VertexId]) -> bool,
) -> bool {
    let cur = *path.last().unwrap();
    for next in g.neighbours(cur) {
        if next == target {
            if f(&path[1..]) {
                return true;
            }
        } else if !branch.contains(&next) && !used.contains(&next) && !path.contains(&next) {
            path.push(next);
            if all_paths(g, target, branch, used, path, f) {
                return true;
            }
            path.pop();
        }
    }
    false
}

/// Degeneracy as the maximum over all induced subgraphs of the minimum degree.
pub fn degeneracy_brute(g: &Graph) -> usize {
    let verts: Vec<VertexId> = g.vertices().collect();
    let n = verts.len();
    let mut best = 0usize;
    for mask in 1u32..(1u32 << n) {
        let keep: BTreeSet<VertexId> = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| verts[i])
            .collect();
        let sub = g.induced_subgraph(&keep);
        let min_deg = sub.vertices().map(|v| sub.degree(v)).min().unwrap();
        best = best.max(min_deg);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::enumerate_graphs_up_to_iso;
    use crate::graph::degeneracy::degeneracy;
    use crate::graph::generate;
    use crate::graph::minors::hadwiger_exact;
    use crate::graph::topminors::hajos_exact;
    use crate::graph::treewidth::treewidth_exact;

    #[test]
    fn known_values() {
        let k4 = generate::complete(4);
        assert_eq!(treewidth_brute(&k4), 3);
        assert_eq!(hadwiger_brute(&k4), 4);
        assert_eq!(hajos_brute(&k4), 4);
        assert_eq!(degeneracy_brute(&k4), 3);

        let c5 = generate::cycle(5).unwrap();
        assert_eq!(treewidth_brute(&c5), 2);
        assert_eq!(hadwiger_brute(&c5), 3);
        assert_eq!(hajos_brute(&c5), 3);
        assert_eq!(degeneracy_brute(&c5), 2);

        assert_eq!(treewidth_brute(&Graph::new()), -1);
        assert_eq!(hadwiger_brute(&Graph::new()), 0);
        assert_eq!(hajos_brute(&Graph::new()), 0);
    }

    #[test]
    fn k33_matches_the_hand_checked_values() {
        let g = generate::complete_bipartite(3, 3);
        assert_eq!(hadwiger_brute(&g), 4);
        assert_eq!(hajos_brute(&g), 4);
        assert_eq!(treewidth_brute(&g), 3);
    }

    #[test]
    fn all_four_solvers_agree_on_every_graph_up_to_five_vertices() {
        for n in 1..=5 {
            for g in enumerate_graphs_up_to_iso(n).unwrap() {
                assert_eq!(treewidth_brute(&g), treewidth_exact(&g, 18).unwrap().0);
                assert_eq!(hadwiger_brute(&g), hadwiger_exact(&g, 14).unwrap().0);
                assert_eq!(hajos_brute(&g), hajos_exact(&g, 12).unwrap().0);
                assert_eq!(degeneracy_brute(&g), degeneracy(&g).0);
            }
        }
    }
}
