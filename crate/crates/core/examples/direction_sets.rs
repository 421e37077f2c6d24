//! Diametrical directions before and after moving a body to the position
//! of largest A/D², with the π/4 cover test and the rank-one decomposition.
//!
//! cargo run --release --example direction_sets

use fairsect::catalog::make_isosceles;
use fairsect::geom::affine_apply;
use fairsect::position::*;

fn show(tag: &str, v: &DirectionSet) {
    let deg: Vec<String> = v.angles.iter().map(|a| format!("{:.3}°", a.to_degrees())).collect();
    let c = coverage_check(v, CoverageMode::AtLeast).unwrap();
    println!("{tag}: directions [{}], cover {} (largest gap {:.4} rad)", deg.join(", "), c.holds, c.max_gap);
    if let Ok(Some(d)) = decomposition_check(v) {
        println!("  identity = Σ λ u uᵀ with λ = {:?}, residual {:.1e}", d.weights, d.residual);
    }
}

fn main() {
    let p = make_isosceles(0.5).unwrap().polygon;
    show("start", &diametrical_directions(&p, 1e-9));
    let r = optimize_position(&p, Quotient::AreaDiameter, Sense::Max, &PositionOptions::default()).unwrap();
    let img = affine_apply(&r.map(), &p).unwrap();
    println!("A/D² = {:.9} (√3/4 = {:.9})", r.quotient, 3f64.sqrt() / 4.0);
    show("optimized", &diametrical_directions(&img, 1e-6));
}
