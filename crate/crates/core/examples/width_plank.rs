//! The width functional: w_B is half the width, and any chord cut leaves
//! pieces whose widths add up to at least the width.
//!
//! cargo run --release --example width_plank

use fairsect::bisect::{bang_check, min_bisect_width};
use fairsect::catalog::random_polygon;
use fairsect::geom::{clip_by_chord, Chord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let p = random_polygon(21, 10).unwrap().polygon;
    let w = p.width().0;
    let r = min_bisect_width(&p);
    println!("w = {w:.12}, w_B = {:.12}", r.value);
    let (w1, w2, _) = bang_check(&p, &r.chord).unwrap();
    println!("mid-chord pieces: {w1:.12} + {w2:.12} = {:.12}", w1 + w2);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut slack = f64::INFINITY;
    for _ in 0..1000 {
        let (s, t) = (rng.gen::<f64>(), rng.gen::<f64>());
        let Ok(c) = Chord::new(&p, s, t) else { continue };
        let cut = clip_by_chord(&p, &c).unwrap();
        // Ends on a common edge cut off nothing.
        if cut.piece1.area().min(cut.piece2.area()) > 0.0 {
            slack = slack.min(cut.piece1.width() + cut.piece2.width() - w);
        }
    }
    println!("smallest w(K1) + w(K2) - w(K) over 1000 random chords: {slack:.3e}");
}
