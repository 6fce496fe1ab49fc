//! A drawing family whose crossing graph stays 2-degenerate while the drawn
//! graph contains arbitrarily large complete minors.

use super::{ConstructionError, LabeledConstruction, Witness};
use crate::drawing::StraightLineDrawing;
use crate::geom::{rat, rat_int, Point, Rat};
use crate::graph::minors::MinorCertificate;
use crate::graph::{Graph, VertexId};
use std::collections::BTreeMap;

/// Largest `t` we are willing to build: the construction has 2^t − 1
/// vertices, so this caps the instance at 65 535 vertices.
const MAX_T: usize = 16;

/// Builds `t` horizontal paths `P_0, …, P_{t−1}` on the x-axis plus one
/// connecting edge per pair of paths, placed so that every connecting edge
/// spans an interval free of other vertices. Contracting each path yields
/// K_t, yet no edge of the drawing crosses anything: the only crossings come
/// from path edges nested inside each other, which keeps the crossing graph
/// 2-degenerate and the maximum degree of the drawn graph at three.
///
/// `P_0` sits on the integers `1..=t`; `P_s` subdivides each unit interval
/// `[s, s+1], …` into points `s + (2k+1)/2^s`, dense enough that the
/// connecting edge between `P_r` and `P_s` (for `r < s`) can run from
/// `s + 2^{−r} − 2^{−s}` to `s + 2^{−r}` without passing over any vertex.
pub fn two_degenerate_expander(t: usize) -> Result<LabeledConstruction, ConstructionError> {
    if t == 0 {
        return Err(ConstructionError::BadParameter("need at least one path".into()));
    }
    if t > MAX_T {
        return Err(ConstructionError::TooLarge {
            found: (1usize << t.min(32)) - 1,
            cap: (1 << MAX_T) - 1,
        });
    }

    let pow2_neg = |s: usize| rat(1, 1i64 << s);

    let mut paths: Vec<Vec<Rat>> = Vec::with_capacity(t);
    paths.push((1..=t as i64).map(rat_int).collect());
    for s in 1..t {
        let step = rat(2, 1i64 << s);
        let count = (t - s) << (s - 1);
        let mut x = rat_int(s as i64) + pow2_neg(s);
        let mut xs = Vec::with_capacity(count);
        for _ in 0..count {
            xs.push(x.clone());
            x += &step;
        }
        paths.push(xs);
    }

    let mut g = Graph::new();
    let mut coords = BTreeMap::new();
    let mut id_of: BTreeMap<Rat, VertexId> = BTreeMap::new();
    let mut parts: Vec<Vec<VertexId>> = Vec::with_capacity(t);
    let mut next: VertexId = 0;
    for xs in &paths {
        let mut ids = Vec::with_capacity(xs.len());
        for x in xs {
            g.add_vertex(next);
            coords.insert(next, Point::new(x.clone(), rat_int(0)));
            id_of.insert(x.clone(), next);
            ids.push(next);
            next += 1;
        }
        for w in ids.windows(2) {
            g.add_edge(w[0], w[1])?;
        }
        parts.push(ids);
    }

    for s in 1..t {
        for r in 0..s {
            let hi = rat_int(s as i64) + pow2_neg(r);
            let lo = &hi - pow2_neg(s);
            g.add_edge(id_of[&lo], id_of[&hi])?;
        }
    }

    let d = StraightLineDrawing::new(g, coords, true)?;
    Ok(LabeledConstruction::straight(d)
        .with("kt_minor", Witness::Minor(MinorCertificate { parts }))
        .note("paths on the x-axis joined by one vertex-free connector per pair")
        .note("contracting each path yields a complete graph; the crossing graph stays 2-degenerate"))
}

/// The closed x-interval spanned by the connector between `P_r` and `P_s`.
pub(crate) fn connector_interval(r: usize, s: usize) -> (Rat, Rat) {
    let hi = rat_int(s as i64) + rat(1, 1i64 << r);
    let lo = &hi - rat(1, 1i64 << s);
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::wrap_linear;
    use crate::graph::degeneracy::degeneracy;
    use crate::graph::minors::validate_minor_certificate;
    use crate::graph::EdgeId;
    use num::Zero;

    fn built(t: usize) -> (crate::drawing::StraightLineDrawing, MinorCertificate) {
        let c = two_degenerate_expander(t).unwrap();
        let d = match &c.drawing {
            super::super::ConstructionDrawing::Straight(d) => d.clone(),
            other => panic!("expected a straight-line drawing, got {other:?}"),
        };
        let cert = match &c.witnesses["kt_minor"] {
            Witness::Minor(m) => m.clone(),
            other => panic!("expected a minor certificate, got {other:?}"),
        };
        (d, cert)
    }

    #[test]
    fn four_paths_have_the_expected_shape() {
        let (d, cert) = built(4);
        assert_eq!(d.graph().vertex_count(), 15);
        assert_eq!(d.graph().edge_count(), 17);
        assert_eq!(cert.parts[0].len(), 4);
        let p0: Vec<Rat> = cert.parts[0].iter().map(|&v| d.point(v).x.clone()).collect();
        assert_eq!(p0, (1..=4).map(rat_int).collect::<Vec<_>>());
        assert!(d.coords().values().all(|p| p.y.is_zero()));
    }

    #[test]
    fn complete_minor_certificates_validate() {
        for t in [1, 2, 4, 6] {
            let (d, cert) = built(t);
            assert_eq!(cert.order(), t);
            validate_minor_certificate(d.graph(), &cert).unwrap();
        }
    }

    #[test]
    fn degree_stays_at_most_three() {
        assert_eq!(built(1).0.graph().max_degree(), 0);
        assert_eq!(built(2).0.graph().max_degree(), 2);
        for t in [3, 5, 6] {
            assert_eq!(built(t).0.graph().max_degree(), 3);
        }
    }

    #[test]
    fn crossing_graph_is_two_degenerate() {
        for t in [2, 4, 6] {
            let (d, _) = built(t);
            let x = d.crossing_graph();
            let (deg, _) = degeneracy(x.graph());
            assert!(deg <= 2, "t = {t} gave degeneracy {deg}");
        }
    }

    #[test]
    fn connectors_cross_nothing() {
        for t in [3, 4, 6] {
            let (d, _) = built(t);
            let x = d.crossing_graph();
            let edges = d.edge_ids();
            for s in 1..t {
                for r in 0..s {
                    let (lo, hi) = connector_interval(r, s);
                    let e = edges
                        .id_of(
                            d.graph()
                                .vertices()
                                .find(|&v| d.point(v).x == lo)
                                .unwrap(),
                            d.graph()
                                .vertices()
                                .find(|&v| d.point(v).x == hi)
                                .unwrap(),
                        )
                        .unwrap();
                    assert_eq!(x.graph().degree(e as EdgeId), 0);
                }
            }
        }
    }

    #[test]
    fn connector_intervals_are_pairwise_disjoint() {
        for t in 2..=6usize {
            let mut ivs: Vec<(Rat, Rat)> = Vec::new();
            for s in 1..t {
                for r in 0..s {
                    ivs.push(connector_interval(r, s));
                }
            }
            ivs.sort();
            for w in ivs.windows(2) {
                assert!(w[0].1 < w[1].0, "t = {t}: {:?} meets {:?}", w[0], w[1]);
            }
        }
    }

    #[test]
    fn semicircle_reading_matches_the_circle() {
        let (d, _) = built(4);
        let wrapped = wrap_linear(&d).unwrap();
        assert_eq!(wrapped.crossing_pairs(), d.crossing_pairs());
    }

    #[test]
    fn tiny_and_oversized_parameters_are_refused() {
        assert!(matches!(
            two_degenerate_expander(0),
            Err(ConstructionError::BadParameter(_))
        ));
        assert!(matches!(
            two_degenerate_expander(17),
            Err(ConstructionError::TooLarge { .. })
        ));
    }
}
