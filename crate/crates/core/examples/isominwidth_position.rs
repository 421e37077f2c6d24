//! Minimizes A/w_B² over affine images. Parallelograms sit at 4, the
//! equilateral triangle at 4/√3 in every position.
//!
//! cargo run --release --example isominwidth_position

use fairsect::catalog::{make_equilateral, make_parallelogram, make_regular_ngon, random_polygon};
use fairsect::position::{optimize_position, PositionOptions, Quotient, Sense};

fn main() {
    let bodies = [
        make_equilateral(1.0).unwrap(),
        make_parallelogram(2.0, 1.0, 0.7).unwrap(),
        make_regular_ngon(6, 1.0).unwrap(),
        random_polygon(8, 12).unwrap(),
    ];
    for e in &bodies {
        let p = &e.polygon;
        let w_b = 0.5 * p.width().0;
        let r = optimize_position(p, Quotient::AreaBisectWidth, Sense::Min, &PositionOptions::default()).unwrap();
        println!("{:<14} start {:.9}  minimized {:.9}", e.name, p.area() / (w_b * w_b), r.quotient);
    }
    println!("bounds: 4/√3 = {:.9} <= A/w_B², minimized value <= 4", 4.0 / 3f64.sqrt());
}
