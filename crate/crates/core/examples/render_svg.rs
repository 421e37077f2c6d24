//! Writes an SVG of Q with its minimizing chord and the marked points.
//!
//! cargo run --release --example render_svg -- q.svg

use fairsect::bisect::{min_bisect_diameter, SearchOptions};
use fairsect::catalog::make_q;
use fairsect::svg::{render, Figure};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "q.svg".into());
    let e = make_q(512).unwrap();
    let r = min_bisect_diameter(&e.polygon, &SearchOptions::default());
    let (_, (i, j)) = e.polygon.diameter();
    let fig = Figure {
        chord: Some(r.chord),
        diametrical: vec![(e.polygon.vertex(i), e.polygon.vertex(j))],
        landmarks: e.landmarks.clone(),
    };
    std::fs::write(&path, render(&e.polygon, &fig)).unwrap();
    println!("wrote {path}: D_B = {:.9}", r.value);
}
