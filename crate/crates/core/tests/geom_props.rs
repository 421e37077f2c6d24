use std::f64::consts::PI;

use fairsect::geom::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cloud() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 3..40)
}

fn hull(pts: &[(f64, f64)]) -> Option<ConvexPolygon> {
    let pts: Vec<Point> = pts.iter().map(|&(x, y)| Point::new(x, y)).collect();
    ConvexPolygon::from_points(&pts).ok().filter(|p| p.area() > 1e-6)
}

fn brute_diameter(v: &[Point]) -> f64 {
    let mut d: f64 = 0.0;
    for a in v {
        for b in v {
            d = d.max(a.dist(*b));
        }
    }
    d
}

/// Minimum over edge normals of the extent; the width of a polygon is
/// attained with one supporting line through an edge.
fn brute_width(v: &[Point]) -> f64 {
    let n = v.len();
    (0..n)
        .map(|i| {
            let e = (v[(i + 1) % n] - v[i]).normalized();
            v.iter().map(|p| e.cross(*p - v[i]).abs()).fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

proptest! {
    #[test]
    fn hull_is_convex_and_ccw(pts in cloud()) {
        let Some(p) = hull(&pts) else { return Ok(()) };
        let v = p.vertices();
        for i in 0..v.len() {
            let turn = (p.vertex(i + 1) - v[i]).cross(p.vertex(i + 2) - p.vertex(i + 1));
            prop_assert!(turn > 0.0);
        }
        for &(x, y) in &pts {
            let q = Point::new(x, y);
            for i in 0..v.len() {
                prop_assert!((p.vertex(i + 1) - v[i]).cross(q - v[i]) >= -1e-12);
            }
        }
    }

    #[test]
    fn calipers_match_brute_force(pts in cloud()) {
        let Some(p) = hull(&pts) else { return Ok(()) };
        let v = p.vertices();
        prop_assert!((p.diameter().0 - brute_diameter(v)).abs() <= 1e-12);
        prop_assert!((p.width().0 - brute_width(v)).abs() <= 1e-12);
    }

    #[test]
    fn bieberbach_and_pal(pts in cloud()) {
        let Some(p) = hull(&pts) else { return Ok(()) };
        let (a, d, w) = (p.area(), p.diameter().0, p.width().0);
        prop_assert!(a <= PI / 4.0 * d * d);
        prop_assert!(a >= w * w / 3f64.sqrt() * (1.0 - 1e-12));
    }

    #[test]
    fn boundary_parameter_round_trip(pts in cloud(), t in 0.0f64..1.0) {
        let Some(p) = hull(&pts) else { return Ok(()) };
        let q = p.boundary_point(t);
        let back = p.param_of_point(q);
        let gap = (back - t).abs().min(1.0 - (back - t).abs());
        prop_assert!(gap <= 1e-12);
    }

    #[test]
    fn steiner_symmetral(pts in cloud(), a in 0.0f64..PI) {
        let Some(p) = hull(&pts) else { return Ok(()) };
        let u = Point::polar(a);
        let s = p.steiner_symmetrize(u).unwrap();
        let d = p.diameter().0;
        prop_assert!((s.area() - p.area()).abs() <= 1e-9 * p.area());
        prop_assert!(s.diameter().0 <= d + 1e-12);
        // Reflection in the line spanned by u maps the symmetral to itself.
        for v in s.vertices() {
            let r = u * (2.0 * v.dot(u)) - *v;
            let nearest = s.vertices().iter().map(|w| w.dist(r)).fold(f64::INFINITY, f64::min);
            prop_assert!(nearest <= 1e-9 * d);
        }
    }

    #[test]
    fn affine_maps_scale_area(pts in cloud(), r in 1.0f64..8.0, a in 0.0f64..PI) {
        let Some(p) = hull(&pts) else { return Ok(()) };
        let m = AffineMap::unimodular(r, a);
        prop_assert!((m.det() - 1.0).abs() <= 1e-12);
        let img = affine_apply(&m, &p).unwrap();
        prop_assert!((img.area() - p.area()).abs() <= 1e-12 * p.area().max(1.0) * r * r);
    }
}

#[test]
fn clip_area_additivity_on_seeded_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut done = 0;
    while done < 1000 {
        let k = rng.gen_range(3..24);
        let pts: Vec<Point> = (0..k).map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let Ok(p) = ConvexPolygon::from_points(&pts) else { continue };
        let Ok(c) = Chord::new(&p, rng.gen(), rng.gen()) else { continue };
        let cut = clip_by_chord(&p, &c).unwrap();
        let sum = cut.piece1.area() + cut.piece2.area();
        assert!((sum - p.area()).abs() <= 1e-9 * p.area(), "{sum} vs {}", p.area());
        done += 1;
    }
}

#[test]
fn chord_through_vertex_pair_keeps_both_pieces() {
    let sq = ConvexPolygon::from_points(&[
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ])
    .unwrap();
    let s = sq.param_of_point(Point::new(0.0, 0.0));
    let t = sq.param_of_point(Point::new(1.0, 1.0));
    let cut = clip_by_chord(&sq, &Chord::new(&sq, s, t).unwrap()).unwrap();
    assert!((cut.piece1.area() - 0.5).abs() < 1e-15);
    assert!((cut.piece2.area() - 0.5).abs() < 1e-15);
}

#[test]
fn edge_chord_gives_a_segment_piece() {
    let tri = ConvexPolygon::from_points(&[Point::new(0.0, 0.0), Point::new(2.0, 0.0), Point::new(0.0, 1.0)]).unwrap();
    let s = tri.param_of_point(Point::new(0.0, 0.0));
    let t = tri.param_of_point(Point::new(2.0, 0.0));
    let cut = clip_by_chord(&tri, &Chord::new(&tri, s, t).unwrap()).unwrap();
    let degenerate = [cut.piece1.is_degenerate(), cut.piece2.is_degenerate()];
    assert_eq!(degenerate.iter().filter(|d| **d).count(), 1);
    assert!((cut.piece1.area() + cut.piece2.area() - 1.0).abs() < 1e-15);
}
