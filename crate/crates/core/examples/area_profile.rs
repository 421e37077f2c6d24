//! Area of the region between the unit disks about (±b, 0) and the lines
//! x = ±b, and its maximum at b = 1/√5 where the region is Q.
//!
//! cargo run --release --example area_profile

use fairsect::position::{area_profile, argmax_area_profile};

fn main() {
    for k in 0..=10 {
        let b = 0.05 * k as f64;
        println!("b = {b:.2}  A = {:.10}", area_profile(b).unwrap());
    }
    let (b, a) = argmax_area_profile();
    println!("argmax b = {b:.15} (1/√5 = {:.15})", 1.0 / 5f64.sqrt());
    println!("max    A = {a:.15} (2·atan(3/4) = {:.15})", 2.0 * 0.75f64.atan());
}
