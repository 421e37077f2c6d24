//! Searches affine images for the largest A/D_B² and checks the necessary
//! condition at the result.
//!
//! cargo run --release --example bisecting_position

use fairsect::bisect::SearchOptions;
use fairsect::catalog::{make_equilateral, make_square};
use fairsect::geom::affine_apply;
use fairsect::position::{behrend_bisecting_check, optimize_position, PositionOptions, Quotient, Sense};

fn main() {
    for e in [make_equilateral(1.0).unwrap(), make_square(1.0).unwrap()] {
        let r = optimize_position(&e.polygon, Quotient::AreaBisectDiameter, Sense::Max, &PositionOptions::default())
            .unwrap();
        println!("{}: A/D_B² = {:.7} at r = {:.5}, α = {:.5}", e.name, r.quotient, r.r, r.alpha);
        println!("  matrix {:?}", r.matrix);
        let img = affine_apply(&r.map(), &e.polygon).unwrap();
        let check = behrend_bisecting_check(&img, &SearchOptions::default());
        for c in &check.checks {
            println!(
                "  bisector {:?} -> {:?}: pieces {:.6} / {:.6}, cover {}",
                c.bisector.chord.p, c.bisector.chord.q, c.bisector.piece_values[0], c.bisector.piece_values[1], c.pass
            );
        }
        println!("  necessary condition holds: {}", check.pass);
    }
    println!("triangle optimum 4/(3√3) = {:.7}", 4.0 / (3.0 * 3f64.sqrt()));
}
