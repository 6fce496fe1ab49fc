//! SVG rendering of drawings. Coordinates are converted to floating point for
//! output only; nothing downstream consumes these files exactly.

use crate::geom::{Point, Rat};
use num::ToPrimitive;
use std::fmt::Write;

use super::{CircularDrawing, StraightLineDrawing};

fn f(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

fn xy(p: &Point) -> (f64, f64) {
    // SVG's y-axis points down; flip so the drawing keeps its orientation.
    (f(&p.x), -f(&p.y))
}

/// Renders a circular drawing: the unit circle, one line per chord, a marker
/// per crossing and a labelled dot per vertex.
pub fn export_svg_circular(d: &CircularDrawing) -> String {
    let mut s = String::new();
    s.push_str(concat!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\">\n",
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"0.008\"/>\n",
    ));
    for e in 0..d.edge_ids().len() as u32 {
        let (a, b) = d.chord(e);
        let (x1, y1) = xy(&a);
        let (x2, y2) = xy(&b);
        writeln!(
            s,
            "<line x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\" \
             stroke=\"#225\" stroke-width=\"0.012\"/>"
        )
        .unwrap();
    }
    for p in d.crossing_graph().points().values() {
        let (cx, cy) = xy(p);
        writeln!(
            s,
            "<circle class=\"crossing\" cx=\"{cx:.4}\" cy=\"{cy:.4}\" r=\"0.025\" fill=\"#c33\"/>"
        )
        .unwrap();
    }
    for v in d.graph().vertices() {
        let (cx, cy) = xy(&d.point(v));
        writeln!(s, "<circle cx=\"{cx:.4}\" cy=\"{cy:.4}\" r=\"0.03\" fill=\"#000\"/>").unwrap();
        writeln!(
            s,
            "<text x=\"{:.4}\" y=\"{:.4}\" font-size=\"0.1\">{v}</text>",
            cx * 1.12,
            cy * 1.12
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// Renders a straight-line drawing. With the linear flag set, edges become
/// semicircular arcs above the axis and crossing markers are omitted (their
/// coordinates are not rational).
pub fn export_svg_straight(d: &StraightLineDrawing) -> String {
    let pts: Vec<(f64, f64)> = d.graph().vertices().map(|v| xy(d.point(v))).collect();
    let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let (min_x, max_x, min_y, max_y) = if pts.is_empty() {
        (0.0, 1.0, 0.0, 1.0)
    } else {
        (min_x, max_x, min_y, max_y)
    };
    let w = (max_x - min_x).max(1.0);
    let h = (max_y - min_y).max(1.0);
    // linear drawings need headroom for arcs spanning the widest edge
    let pad = if d.is_linear() { w / 2.0 } else { 0.1 * w.max(h) };
    let stroke = w.max(h) / 150.0;

    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.4} {:.4} {:.4} {:.4}\">",
        min_x - pad,
        min_y - pad,
        w + 2.0 * pad,
        h + 2.0 * pad
    )
    .unwrap();
    for e in 0..d.edge_ids().len() as u32 {
        let (u, v) = d.edge_ids().pair(e);
        let (x1, y1) = xy(d.point(u));
        let (x2, y2) = xy(d.point(v));
        if d.is_linear() {
            let (lo, hi) = if x1 <= x2 { (x1, x2) } else { (x2, x1) };
            let r = (hi - lo) / 2.0;
            writeln!(
                s,
                "<path d=\"M {lo:.4} 0 A {r:.4} {r:.4} 0 0 1 {hi:.4} 0\" \
                 fill=\"none\" stroke=\"#225\" stroke-width=\"{stroke:.4}\"/>"
            )
            .unwrap();
        } else {
            writeln!(
                s,
                "<line x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\" \
                 stroke=\"#225\" stroke-width=\"{stroke:.4}\"/>"
            )
            .unwrap();
        }
    }
    if !d.is_linear() {
        for p in d.crossing_graph().points().values() {
            let (cx, cy) = xy(p);
            writeln!(
                s,
                "<circle class=\"crossing\" cx=\"{cx:.4}\" cy=\"{cy:.4}\" r=\"{:.4}\" \
                 fill=\"#c33\"/>",
                stroke * 2.0
            )
            .unwrap();
        }
    }
    for (v, (cx, cy)) in d.graph().vertices().zip(pts) {
        writeln!(
            s,
            "<circle cx=\"{cx:.4}\" cy=\"{cy:.4}\" r=\"{:.4}\" fill=\"#000\"/>",
            stroke * 2.5
        )
        .unwrap();
        writeln!(
            s,
            "<text x=\"{:.4}\" y=\"{:.4}\" font-size=\"{:.4}\">{v}</text>",
            cx + stroke * 3.0,
            cy - stroke * 3.0,
            stroke * 8.0
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat_int;
    use crate::graph::{generate, Graph, VertexId};
    use std::collections::BTreeMap;

    #[test]
    fn k4_renders_six_chords() {
        let d = CircularDrawing::make_circular(generate::complete(4), &[0, 1, 2, 3]).unwrap();
        let svg = export_svg_circular(&d);
        assert_eq!(svg.matches("<line ").count(), 6);
        assert_eq!(svg.matches("class=\"crossing\"").count(), 1);
        assert!(svg.starts_with("<svg "));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn empty_drawing_is_still_valid_svg() {
        let d = CircularDrawing::make_circular(Graph::default(), &[]).unwrap();
        let svg = export_svg_circular(&d);
        assert!(svg.starts_with("<svg "));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<line ").count(), 0);
    }

    #[test]
    fn linear_drawing_renders_arcs_without_markers() {
        let g = Graph::from_parts([0, 1, 2, 3], [(0, 2), (1, 3)]).unwrap();
        let coords: BTreeMap<VertexId, crate::geom::Point> = (0..4)
            .map(|v| (v, crate::geom::Point::new(rat_int(v as i64), rat_int(0))))
            .collect();
        let d = StraightLineDrawing::new(g, coords, true).unwrap();
        let svg = export_svg_straight(&d);
        assert_eq!(svg.matches("<path ").count(), 2);
        assert_eq!(svg.matches("class=\"crossing\"").count(), 0);
    }

    #[test]
    fn straight_drawing_renders_lines_and_markers() {
        let g = Graph::from_parts([0, 1, 2, 3], [(0, 1), (2, 3)]).unwrap();
        let coords: BTreeMap<VertexId, crate::geom::Point> = [
            (0, crate::geom::Point::new(rat_int(0), rat_int(0))),
            (1, crate::geom::Point::new(rat_int(2), rat_int(2))),
            (2, crate::geom::Point::new(rat_int(0), rat_int(2))),
            (3, crate::geom::Point::new(rat_int(2), rat_int(0))),
        ]
        .into();
        let d = StraightLineDrawing::new(g, coords, false).unwrap();
        let svg = export_svg_straight(&d);
        assert_eq!(svg.matches("<line ").count(), 2);
        assert_eq!(svg.matches("class=\"crossing\"").count(), 1);
    }
}
