//! Area, diameter, width and both bisection functionals for a few bodies.
//!
//! cargo run --release --example measure

use fairsect::bisect::{min_bisect_diameter, min_bisect_width, SearchOptions};
use fairsect::catalog::{make_disk, make_equilateral, make_q, make_rect};

fn main() {
    let bodies = [
        make_equilateral(1.0).unwrap(),
        make_rect(2.0, 4.0).unwrap(),
        make_disk(1024, 1.0).unwrap(),
        make_q(1024).unwrap(),
    ];
    println!("{:<12} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}", "body", "A", "D", "w", "D_B", "w_B", "A/D_B²", "A/w_B²");
    for e in &bodies {
        let p = &e.polygon;
        let a = p.area();
        let d_b = min_bisect_diameter(p, &SearchOptions::default()).value;
        let w_b = min_bisect_width(p).value;
        println!(
            "{:<12} {:>9.6} {:>9.6} {:>9.6} {:>9.6} {:>9.6} {:>9.6} {:>9.6}",
            e.name,
            a,
            p.diameter().0,
            p.width().0,
            d_b,
            w_b,
            a / (d_b * d_b),
            a / (w_b * w_b)
        );
    }
    println!("upper bound for A/D_B²: 2·atan(3/4) = {:.6}", 2.0 * 0.75f64.atan());
}
