//! Standalone SVG figures of a body and one bisection.

use std::fmt::Write as _;

use crate::geom::{Chord, ConvexPolygon, Point};

/// What to draw besides the body.
#[derive(Debug, Clone, Default)]
pub struct Figure {
    pub chord: Option<Chord>,
    /// Pairs of points at full diameter, drawn dashed.
    pub diametrical: Vec<(Point, Point)>,
    /// Marked points, drawn as small dots.
    pub landmarks: Vec<Point>,
}

fn f(x: f64) -> String {
    // Fixed precision keeps the bytes stable; -0 prints as 0.
    let s = format!("{:.9}", x + 0.0);
    if s.starts_with("-0.000000000") { s[1..].to_string() } else { s }
}

/// Renders `poly` with y pointing up. The view box is the bounding box
/// grown by 5% of its larger side on every edge.
pub fn render(poly: &ConvexPolygon, fig: &Figure) -> String {
    let (lo, hi) = poly.bbox();
    let span = (hi.x - lo.x).max(hi.y - lo.y);
    let m = 0.05 * span;
    let (x0, y0) = (lo.x - m, -hi.y - m);
    let (w, h) = (hi.x - lo.x + 2.0 * m, hi.y - lo.y + 2.0 * m);
    let stroke = 0.004 * span;
    let pt = |p: Point| (f(p.x), f(-p.y));

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        f(x0),
        f(y0),
        f(w),
        f(h),
        (600.0 * w / w.max(h)).round(),
        (600.0 * h / w.max(h)).round()
    );
    let mut path = String::new();
    for (i, v) in poly.vertices().iter().enumerate() {
        let (x, y) = pt(*v);
        let _ = write!(path, "{}{x},{y}", if i == 0 { "" } else { " " });
    }
    let _ = writeln!(
        out,
        "  <polygon class=\"body\" points=\"{path}\" fill=\"#dbe6f3\" stroke=\"#1f3b5c\" stroke-width=\"{}\"/>",
        f(stroke)
    );
    for (a, b) in &fig.diametrical {
        let ((ax, ay), (bx, by)) = (pt(*a), pt(*b));
        let _ = writeln!(
            out,
            "  <line class=\"diametrical\" x1=\"{ax}\" y1=\"{ay}\" x2=\"{bx}\" y2=\"{by}\" stroke=\"#7a7a7a\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>",
            f(0.5 * stroke),
            f(3.0 * stroke),
            f(2.0 * stroke)
        );
    }
    if let Some(c) = &fig.chord {
        let ((ax, ay), (bx, by)) = (pt(c.p), pt(c.q));
        let _ = writeln!(
            out,
            "  <line class=\"chord\" x1=\"{ax}\" y1=\"{ay}\" x2=\"{bx}\" y2=\"{by}\" stroke=\"#c0392b\" stroke-width=\"{}\"/>",
            f(1.5 * stroke)
        );
    }
    for p in &fig.landmarks {
        let (x, y) = pt(*p);
        let _ = writeln!(
            out,
            "  <circle class=\"landmark\" cx=\"{x}\" cy=\"{y}\" r=\"{}\" fill=\"#1f3b5c\"/>",
            f(2.0 * stroke)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_with_chord() {
        let sq = ConvexPolygon::from_points(&[
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let fig = Figure {
            chord: Some(Chord::new(&sq, 0.125, 0.625).unwrap()),
            diametrical: vec![(Point::new(0.0, 0.0), Point::new(1.0, 1.0))],
            landmarks: vec![],
        };
        let svg = render(&sq, &fig);
        assert!(svg.contains("viewBox=\"-0.050000000 -1.050000000 1.100000000 1.100000000\""));
        assert_eq!(svg.matches("class=\"chord\"").count(), 1);
        assert!(svg.contains("stroke-dasharray"));
        assert_eq!(svg, render(&sq, &fig));
        // The top edge y = 1 maps to -1.
        assert!(svg.contains("1.000000000,-1.000000000"));
    }
}
