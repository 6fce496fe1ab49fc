//! Topological-minor search: branch vertices plus internally disjoint paths.

use super::{Graph, GraphError, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Default size cap for [`hajos_exact`].
pub const DEFAULT_HAJOS_CAP: usize = 12;

/// Witness that `pattern` is a topological minor of a host graph: an injective
/// branch-vertex map and, per pattern edge, a host path between the two branch
/// vertices. All paths are internally disjoint from each other and from every
/// branch vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologicalMinorCertificate {
    pub branch: BTreeMap<VertexId, VertexId>,
    pub paths: Vec<PathEmbedding>,
}

/// One embedded pattern edge: its endpoints in the pattern and the host route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathEmbedding {
    pub pattern_edge: (VertexId, VertexId),
    pub route: Vec<VertexId>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopMinorCertificateError {
    #[error("branch map does not cover the pattern vertices exactly")]
    BranchMismatch,
    #[error("two pattern vertices share the branch vertex {0}")]
    BranchNotInjective(VertexId),
    #[error("vertex {0} is not in the host graph")]
    UnknownVertex(VertexId),
    #[error("pattern edge ({0}, {1}) has no embedded path")]
    PathMissing(VertexId, VertexId),
    #[error("embedded path for ({0}, {1}) does not run between its branch vertices")]
    PathEndpointMismatch(VertexId, VertexId),
    #[error("embedded path for ({0}, {1}) is not a simple host path")]
    PathNotAPath(VertexId, VertexId),
    #[error("vertex {0} is interior to two embedded paths or is a branch vertex")]
    InteriorReused(VertexId),
}

/// Checks that `cert` embeds `pattern` into `host` as a topological minor.
pub fn validate_topminor_certificate(
    host: &Graph,
    pattern: &Graph,
    cert: &TopologicalMinorCertificate,
) -> Result<(), TopMinorCertificateError> {
    let pattern_vertices: BTreeSet<VertexId> = pattern.vertices().collect();
    let mapped: BTreeSet<VertexId> = cert.branch.keys().copied().collect();
    if mapped != pattern_vertices {
        return Err(TopMinorCertificateError::BranchMismatch);
    }
    let mut images: BTreeSet<VertexId> = BTreeSet::new();
    for &b in cert.branch.values() {
        if !host.has_vertex(b) {
            return Err(TopMinorCertificateError::UnknownVertex(b));
        }
        if !images.insert(b) {
            return Err(TopMinorCertificateError::BranchNotInjective(b));
        }
    }
    let mut need: BTreeSet<(VertexId, VertexId)> = pattern.edges().into_iter().collect();
    let mut interiors: BTreeSet<VertexId> = BTreeSet::new();
    for emb in &cert.paths {
        let (u, v) = emb.pattern_edge;
        let key = (u.min(v), u.max(v));
        if !need.remove(&key) {
            return Err(TopMinorCertificateError::PathMissing(key.0, key.1));
        }
        let route = &emb.route;
        if route.len() < 2
            || route.first() != Some(&cert.branch[&u])
            || route.last() != Some(&cert.branch[&v])
        {
            return Err(TopMinorCertificateError::PathEndpointMismatch(key.0, key.1));
        }
        let distinct: BTreeSet<VertexId> = route.iter().copied().collect();
        if distinct.len() != route.len() {
            return Err(TopMinorCertificateError::PathNotAPath(key.0, key.1));
        }
        for w in route.windows(2) {
            if !host.has_edge(w[0], w[1]) {
                return Err(TopMinorCertificateError::PathNotAPath(key.0, key.1));
            }
        }
        for &w in &route[1..route.len() - 1] {
            if images.contains(&w) || !interiors.insert(w) {
                return Err(TopMinorCertificateError::InteriorReused(w));
            }
        }
    }
    if let Some(&(u, v)) = need.iter().next() {
        return Err(TopMinorCertificateError::PathMissing(u, v));
    }
    Ok(())
}

struct Host {
    verts: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
    masks: Vec<u64>,
    degrees: Vec<usize>,
}

impl Host {
    fn of(g: &Graph) -> Option<Host> {
        let verts: Vec<VertexId> = g.vertices().collect();
        if verts.len() > 64 {
            return None;
        }
        let index: BTreeMap<VertexId, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); verts.len()];
        let mut masks = vec![0u64; verts.len()];
        for (u, v) in g.edges() {
            let (a, b) = (index[&u], index[&v]);
            adj[a].push(b);
            adj[b].push(a);
            masks[a] |= 1 << b;
            masks[b] |= 1 << a;
        }
        let degrees = adj.iter().map(Vec::len).collect();
        Some(Host {
            verts,
            adj,
            masks,
            degrees,
        })
    }
}

/// Embeds the pattern edges one by one; `blocked` holds every branch vertex
/// and all interior vertices claimed so far. Routes aiming straight for the
/// target are tried before detours, which finds edge-paths without search in
/// the common case.
fn embed_edges(
    host: &Host,
    branch: &[usize],
    pedges: &[(usize, usize)],
    k: usize,
    blocked: u64,
    routes: &mut Vec<Vec<usize>>,
) -> bool {
    if k == pedges.len() {
        return true;
    }
    let (pa, pb) = pedges[k];
    let (a, b) = (branch[pa], branch[pb]);
    let mut route = vec![a];
    explore(host, branch, pedges, k, blocked, a, b, &mut route, routes)
}

#[allow(clippy::too_many_arguments)]
fn explore(
    host: &Host,
    branch: &[usize],
    pedges: &[(usize, usize)],
    k: usize,
    blocked: u64,
    cur: usize,
    target: usize,
    route: &mut Vec<usize>,
    routes: &mut Vec<Vec<usize>>,
) -> bool {
    if host.masks[cur] & (1 << target) != 0 {
        route.push(target);
        let interior: u64 = route[1..route.len() - 1]
            .iter()
            .fold(0u64, |m, &v| m | (1 << v));
        routes.push(route.clone());
        if embed_edges(host, branch, pedges, k + 1, blocked | interior, routes) {
            return true;
        }
        routes.pop();
        route.pop();
    }
    let on_route: u64 = route.iter().fold(0u64, |m, &v| m | (1 << v));
    for &next in &host.adj[cur] {
        if next == target || blocked & (1 << next) != 0 || on_route & (1 << next) != 0 {
            continue;
        }
        route.push(next);
        if explore(host, branch, pedges, k, blocked, next, target, route, routes) {
            return true;
        }
        route.pop();
    }
    false
}

fn certificate_from(
    host: &Host,
    pattern_vertices: &[VertexId],
    pedges_local: &[(usize, usize)],
    branch: &[usize],
    routes: &[Vec<usize>],
) -> TopologicalMinorCertificate {
    let branch_map: BTreeMap<VertexId, VertexId> = pattern_vertices
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, host.verts[branch[i]]))
        .collect();
    let paths = pedges_local
        .iter()
        .zip(routes.iter())
        .map(|(&(pa, pb), route)| PathEmbedding {
            pattern_edge: (pattern_vertices[pa], pattern_vertices[pb]),
            route: route.iter().map(|&i| host.verts[i]).collect(),
        })
        .collect();
    TopologicalMinorCertificate {
        branch: branch_map,
        paths,
    }
}

/// Searches for `pattern` as a topological minor of `g`. Branch vertices are
/// assigned by backtracking over degree-feasible host vertices, then every
/// pattern edge is embedded as an internally disjoint host path.
pub fn find_topological_minor(
    g: &Graph,
    pattern: &Graph,
) -> Option<TopologicalMinorCertificate> {
    let host = Host::of(g)?;
    let pverts: Vec<VertexId> = pattern.vertices().collect();
    let pn = pverts.len();
    if pn > host.verts.len() || pattern.edge_count() > g.edge_count() {
        return None;
    }
    let pindex: BTreeMap<VertexId, usize> =
        pverts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let pdeg: Vec<usize> = pverts.iter().map(|&v| pattern.degree(v)).collect();
    let pedges: Vec<(usize, usize)> = pattern
        .edges()
        .into_iter()
        .map(|(u, v)| (pindex[&u], pindex[&v]))
        .collect();
    // Assign high-degree pattern vertices first so infeasible hosts die early.
    let mut order: Vec<usize> = (0..pn).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(pdeg[i]));

    let mut branch = vec![usize::MAX; pn];
    let mut used = 0u64;
    assign(&host, &pdeg, &pedges, &order, 0, &mut branch, &mut used)
        .map(|(branch, routes)| certificate_from(&host, &pverts, &pedges, &branch, &routes))
}

#[allow(clippy::too_many_arguments)]
fn assign(
    host: &Host,
    pdeg: &[usize],
    pedges: &[(usize, usize)],
    order: &[usize],
    depth: usize,
    branch: &mut Vec<usize>,
    used: &mut u64,
) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    if depth == order.len() {
        let blocked: u64 = branch.iter().fold(0u64, |m, &v| m | (1 << v));
        let mut routes = Vec::new();
        if embed_edges(host, branch, pedges, 0, blocked, &mut routes) {
            return Some((branch.clone(), routes));
        }
        return None;
    }
    let p = order[depth];
    for h in 0..host.verts.len() {
        if *used & (1 << h) != 0 || host.degrees[h] < pdeg[p] {
            continue;
        }
        branch[p] = h;
        *used |= 1 << h;
        let hit = assign(host, pdeg, pedges, order, depth + 1, branch, used);
        *used &= !(1 << h);
        branch[p] = usize::MAX;
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Largest `t` such that `K_t` is a topological minor of `g`, with a witness.
/// Because complete patterns are symmetric, branch sets are enumerated as
/// subsets rather than ordered assignments.
pub fn hajos_exact(
    g: &Graph,
    cap: usize,
) -> Result<(usize, TopologicalMinorCertificate), GraphError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::SizeAboveCap { found: n, cap });
    }
    let empty = TopologicalMinorCertificate {
        branch: BTreeMap::new(),
        paths: Vec::new(),
    };
    if n == 0 {
        return Ok((0, empty));
    }
    let host = Host::of(g).expect("cap keeps hosts small");
    let mut upper = 1usize;
    for t in 2..=n {
        let enough = host.degrees.iter().filter(|&&d| d >= t - 1).count() >= t;
        if enough && t * (t - 1) / 2 <= g.edge_count() {
            upper = t;
        }
    }
    for t in (1..=upper).rev() {
        if let Some(cert) = find_clique_subdivision(&host, t) {
            return Ok((t, cert));
        }
    }
    unreachable!("every nonempty graph admits a single branch vertex");
}

fn find_clique_subdivision(host: &Host, t: usize) -> Option<TopologicalMinorCertificate> {
    let candidates: Vec<usize> = (0..host.verts.len())
        .filter(|&v| host.degrees[v] >= t.saturating_sub(1))
        .collect();
    if candidates.len() < t {
        return None;
    }
    let pattern_vertices: Vec<VertexId> = (0..t as VertexId).collect();
    let mut pedges = Vec::new();
    for i in 0..t {
        for j in (i + 1)..t {
            pedges.push((i, j));
        }
    }
    let mut chosen = vec![0usize; t];
    pick_subset(host, &candidates, &pedges, 0, 0, &mut chosen).map(|(branch, routes)| {
        certificate_from(host, &pattern_vertices, &pedges, &branch, &routes)
    })
}

fn pick_subset(
    host: &Host,
    candidates: &[usize],
    pedges: &[(usize, usize)],
    from: usize,
    depth: usize,
    chosen: &mut Vec<usize>,
) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    let t = chosen.len();
    if depth == t {
        let blocked: u64 = chosen.iter().fold(0u64, |m, &v| m | (1 << v));
        let mut routes = Vec::new();
        if embed_edges(host, chosen, pedges, 0, blocked, &mut routes) {
            return Some((chosen.clone(), routes));
        }
        return None;
    }
    let remaining = t - depth;
    let mut i = from;
    while i + remaining <= candidates.len() {
        chosen[depth] = candidates[i];
        if let Some(hit) = pick_subset(host, candidates, pedges, i + 1, depth + 1, chosen) {
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

    fn hajos(g: &Graph) -> usize {
        let (t, cert) = hajos_exact(g, DEFAULT_HAJOS_CAP).unwrap();
        if t > 0 {
            validate_topminor_certificate(g, &generate::complete(t), &cert).unwrap();
        }
        t
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(hajos(&generate::complete(5)), 5);
        assert_eq!(hajos(&generate::complete(1)), 1);
        assert_eq!(hajos(&Graph::new()), 0);
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(hajos(&generate::path(6).unwrap()), 2);
        assert_eq!(hajos(&generate::cycle(8).unwrap()), 3);
    }

    #[test]
    fn k33_has_a_k4_subdivision_but_no_k5() {
        assert_eq!(hajos(&generate::complete_bipartite(3, 3)), 4);
    }

    #[test]
    fn subdividing_preserves_the_clique_subdivision() {
        let k4 = generate::complete(4);
        let counts = k4.edges().into_iter().map(|e| (e, 1usize)).collect();
        let g = generate::subdivide(&k4, &counts).unwrap();
        assert_eq!(hajos(&g), 4);
    }

    #[test]
    fn generic_patterns() {
        let c6 = generate::cycle(6).unwrap();
        let c3 = generate::cycle(3).unwrap();
        let cert = find_topological_minor(&c6, &c3).unwrap();
        validate_topminor_certificate(&c6, &c3, &cert).unwrap();
        assert!(find_topological_minor(&generate::path(6).unwrap(), &c3).is_none());

        let k24 = generate::complete_bipartite(2, 4);
        let k23 = generate::complete_bipartite(2, 3);
        assert!(find_topological_minor(&k23, &k24).is_none());
        assert!(find_topological_minor(&k24, &k23).is_some());
    }

    #[test]
    fn validation_rejects_broken_embeddings() {
        let host = generate::cycle(6).unwrap();
        let pattern = generate::path(2).unwrap();
        let mut branch = BTreeMap::new();
        branch.insert(0u32, 0u32);
        branch.insert(1u32, 3u32);
        let good = TopologicalMinorCertificate {
            branch: branch.clone(),
            paths: vec![PathEmbedding {
                pattern_edge: (0, 1),
                route: vec![0, 1, 2, 3],
            }],
        };
        validate_topminor_certificate(&host, &pattern, &good).unwrap();

        let bad_route = TopologicalMinorCertificate {
            branch: branch.clone(),
            paths: vec![PathEmbedding {
                pattern_edge: (0, 1),
                route: vec![0, 2, 3],
            }],
        };
        assert_eq!(
            validate_topminor_certificate(&host, &pattern, &bad_route),
            Err(TopMinorCertificateError::PathNotAPath(0, 1))
        );

        let missing = TopologicalMinorCertificate {
            branch,
            paths: Vec::new(),
        };
        assert_eq!(
            validate_topminor_certificate(&host, &pattern, &missing),
            Err(TopMinorCertificateError::PathMissing(0, 1))
        );
    }

    #[test]
    fn cap_is_enforced() {
        let g = generate::complete(13);
        assert!(matches!(
            hajos_exact(&g, 12),
            Err(GraphError::SizeAboveCap { found: 13, cap: 12 })
        ));
    }
}
