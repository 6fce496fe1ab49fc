//! Exact treewidth via dynamic programming over elimination orders, plus a
//! greedy elimination heuristic for graphs beyond the exact cap.
//!
//! The exact solver uses the classic subset recurrence: for an eliminated set
//! `S` and a vertex `v ∈ S` eliminated last, the cost of `v` is the number of
//! remaining vertices reachable from `v` through `S`. Treewidth is the min
//! over orders of the max cost, and an optimal order is recovered from the
//! DP table to build a witness decomposition.

use super::decomposition::TreeDecomposition;
use super::{Graph, GraphError, VertexId};
use std::collections::{BTreeMap, BTreeSet};

pub const DEFAULT_TREEWIDTH_CAP: usize = 18;

/// Exact treewidth and a witness decomposition of that width.
/// Errors if the graph has more than `cap` vertices.
pub fn treewidth_exact(
    g: &Graph,
    cap: usize,
) -> Result<(i64, TreeDecomposition), GraphError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::SizeAboveCap { found: n, cap });
    }
    if n == 0 {
        return Ok((-1, TreeDecomposition::single(BTreeSet::new())));
    }

    let verts: Vec<VertexId> = g.vertices().collect();
    let mut adj = vec![0u32; n];
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate() {
            if g.has_edge(u, v) {
                adj[i] |= 1 << j;
            }
        }
    }

    // q_size(S, v): vertices outside S ∪ {v} reachable from v inside S ∪ {v}.
    let q_set = |s: u32, v: usize| -> u32 {
        let inside = s | (1 << v);
        let mut reach = 1u32 << v;
        loop {
            let mut frontier = 0u32;
            let mut r = reach;
            while r != 0 {
                let i = r.trailing_zeros() as usize;
                r &= r - 1;
                frontier |= adj[i];
            }
            let grown = reach | (frontier & inside);
            if grown == reach {
                let mut boundary = 0u32;
                let mut r = reach;
                while r != 0 {
                    let i = r.trailing_zeros() as usize;
                    r &= r - 1;
                    boundary |= adj[i];
                }
                return boundary & !inside;
            }
            reach = grown;
        }
    };

    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    // cost[S] = best max-cost over orders eliminating exactly S first.
    let mut cost = vec![u8::MAX; 1 << n];
    let mut last = vec![u8::MAX; 1 << n];
    cost[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut best_v = u8::MAX;
        let mut m = s;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let prev = s & !(1 << v);
            if cost[prev as usize] == u8::MAX {
                continue;
            }
            let q = q_set(prev, v).count_ones() as u8;
            let c = cost[prev as usize].max(q);
            if c < best {
                best = c;
                best_v = v as u8;
            }
        }
        cost[s as usize] = best;
        last[s as usize] = best_v;
    }
    let width = cost[full as usize] as i64;

    // Recover the elimination order (first eliminated first).
    let mut order = vec![0usize; n];
    let mut s = full;
    for slot in (0..n).rev() {
        let v = last[s as usize] as usize;
        order[slot] = v;
        s &= !(1 << v);
    }

    let td = decomposition_from_order(&verts, &adj, &order);
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

/// Greedy min-fill elimination. Always returns a valid decomposition; its
/// width is an upper bound on the treewidth. Used where the exact solver's
/// cap would be exceeded (for example on large planarisations).
pub fn treewidth_greedy(g: &Graph) -> TreeDecomposition {
    let n = g.vertex_count();
    if n == 0 {
        return TreeDecomposition::single(BTreeSet::new());
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let rank: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for (u, v) in g.edges() {
        adj[rank[&u]].insert(rank[&v]);
        adj[rank[&v]].insert(rank[&u]);
    }

    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    while !alive.is_empty() {
        // min fill-in, ties by degree then index
        let pick = alive
            .iter()
            .copied()
            .min_by_key(|&v| {
                let nbrs: Vec<usize> = adj[v].iter().copied().collect();
                let mut fill = 0usize;
                for (i, &a) in nbrs.iter().enumerate() {
                    for &b in &nbrs[i + 1..] {
                        if !adj[a].contains(&b) {
                            fill += 1;
                        }
                    }
                }
                (fill, nbrs.len(), v)
            })
            .unwrap();
        let nbrs: Vec<usize> = adj[pick].iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &nbrs {
            adj[a].remove(&pick);
        }
        adj[pick].clear();
        alive.remove(&pick);
        order.push(pick);
    }

    // Rebuild bit adjacency for witness construction on the original graph.
    let mut bit_adj = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        bit_adj[rank[&u]].push(rank[&v]);
        bit_adj[rank[&v]].push(rank[&u]);
    }
    decomposition_from_order_sets(&verts, &bit_adj, &order)
}

/// Builds the decomposition for an elimination order using bitmask adjacency
/// (exact path, n <= cap).
fn decomposition_from_order(verts: &[VertexId], adj: &[u32], order: &[usize]) -> TreeDecomposition {
    let n = verts.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Replay the elimination with set adjacency to collect fill-in edges.
    let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for v in 0..n {
        let mut m = adj[v];
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            sets[v].insert(u);
        }
    }
    build_bags_from_elimination(verts, &mut sets, order, &pos)
}

fn decomposition_from_order_sets(
    verts: &[VertexId],
    adj: &[Vec<usize>],
    order: &[usize],
) -> TreeDecomposition {
    let n = verts.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for v in 0..n {
        sets[v] = adj[v].iter().copied().collect();
    }
    build_bags_from_elimination(verts, &mut sets, order, &pos)
}

fn build_bags_from_elimination(
    verts: &[VertexId],
    sets: &mut [BTreeSet<usize>],
    order: &[usize],
    pos: &[usize],
) -> TreeDecomposition {
    let n = verts.len();
    let mut madj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in order {
        let later: Vec<usize> = sets[v].iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        madj[v] = later.clone();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                sets[a].insert(b);
                sets[b].insert(a);
            }
        }
    }

    // Bag i = {order[i]} ∪ madj(order[i]); attach to the bag of the earliest
    // eliminated member of madj, chaining parentless bags to the next node so
    // the result is a single tree.
    let mut bags = BTreeMap::new();
    let mut tree_edges = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let mut bag: BTreeSet<VertexId> = BTreeSet::from([verts[v]]);
        bag.extend(madj[v].iter().map(|&u| verts[u]));
        bags.insert(i as u32, bag);
    }
    for (i, &v) in order.iter().enumerate() {
        if let Some(&parent) = madj[v].iter().min_by_key(|&&u| pos[u]) {
            tree_edges.push((i as u32, pos[parent] as u32));
        } else if i + 1 < n {
            tree_edges.push((i as u32, i as u32 + 1));
        }
    }
    TreeDecomposition { tree_edges, bags }
}
