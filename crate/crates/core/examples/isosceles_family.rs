//! D_B of the isosceles triangles with base 2 against the closed form, and
//! the apex angle where A/D_B² peaks.
//!
//! cargo run --release --example isosceles_family

use std::f64::consts::PI;

use fairsect::bisect::{min_bisect_diameter, SearchOptions};
use fairsect::catalog::make_isosceles;
use fairsect::position::{isosceles_bisect_diameter, isosceles_quotient};

fn main() {
    println!("θ/π     search D_B     closed form    A/D_B²");
    for k in 1..=12 {
        let theta = k as f64 * PI / 12.0 - if k == 12 { 0.01 } else { 0.0 };
        let p = make_isosceles(theta).unwrap().polygon;
        let s = min_bisect_diameter(&p, &SearchOptions::default()).value;
        let c = isosceles_bisect_diameter(theta).unwrap();
        println!("{:.4}  {s:.10}  {c:.10}  {:.8}", theta / PI, isosceles_quotient(theta).unwrap());
    }
    let tm = (2.0f64 / 3.0).sqrt().acos();
    println!("peak at θ = arccos(√(2/3)) = {tm:.7} with A/D_B² = {:.7}", isosceles_quotient(tm).unwrap());
}
