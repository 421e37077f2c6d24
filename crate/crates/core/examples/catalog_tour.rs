//! Every catalog body with its reference values, recomputed.
//!
//! cargo run --release --example catalog_tour

use fairsect::bisect::{min_bisect_diameter, min_bisect_width, SearchOptions};
use fairsect::catalog::coarse_catalog;

fn main() {
    for e in coarse_catalog() {
        let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v:.4}")).collect();
        println!("{} [{}] {} vertices", e.name, params.join(", "), e.polygon.len());
        for (key, r) in &e.reference_values {
            let p = &e.polygon;
            let now = match key.as_str() {
                "area" => p.area(),
                "diameter" => p.diameter().0,
                "width" => p.width().0,
                "w_b" => min_bisect_width(p).value,
                _ => min_bisect_diameter(p, &SearchOptions::default()).value,
            };
            println!("  {key:<8} {:.12} ({:?}, tol {:.1e})  recomputed {now:.12}", r.value, r.provenance, r.tol);
        }
    }
}
