//! Steiner symmetrization keeps the area and never increases the diameter.
//! Repeating it in many directions drives a body towards a disk; each step
//! about doubles the vertex count.
//!
//! cargo run --release --example steiner

use std::f64::consts::PI;

use fairsect::catalog::random_polygon;
use fairsect::geom::Point;

fn main() {
    let mut p = random_polygon(5, 9).unwrap().polygon;
    let a = p.area();
    println!("step  vertices  area          diameter      A/D²");
    for step in 0..=8 {
        let d = p.diameter().0;
        println!("{step:>4}  {:>8}  {:.10}  {d:.10}  {:.6}", p.len(), p.area(), p.area() / (d * d));
        p = p.steiner_symmetrize(Point::polar(step as f64 * PI * 0.382)).unwrap();
    }
    println!("area drift {:.1e}; disk value π/4 = {:.6}", (p.area() - a).abs() / a, PI / 4.0);
}
