//! Compares the multi-start chord search with the exhaustive lattice oracle.
//!
//! cargo run --release --example bisect_oracle

use std::time::Instant;

use fairsect::bisect::{min_bisect_diameter, min_bisect_diameter_oracle, SearchOptions};
use fairsect::catalog::{make_lens, random_polygon};

fn main() {
    let bodies = [random_polygon(3, 14).unwrap(), make_lens(0.5, 256).unwrap()];
    for e in &bodies {
        let t = Instant::now();
        let s = min_bisect_diameter(&e.polygon, &SearchOptions::default());
        let ts = t.elapsed();
        println!("{} ({} vertices)", e.name, e.polygon.len());
        println!("  search  D_B = {:.12} in {ts:.2?}, chord {:?} -> {:?}", s.value, s.chord.p, s.chord.q);
        println!("  pieces  {:.12} / {:.12}, {} near-optimal chords", s.piece_values[0], s.piece_values[1], s.near_optima.len());
        for g in [64, 256] {
            let t = Instant::now();
            let o = min_bisect_diameter_oracle(&e.polygon, g);
            println!("  oracle({g:>3}) D_B = {:.12} in {:.2?}", o.value, t.elapsed());
        }
    }
}
