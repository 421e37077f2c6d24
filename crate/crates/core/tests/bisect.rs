use std::f64::consts::PI;

use fairsect::bisect::*;
use fairsect::catalog::*;
use fairsect::geom::*;
use proptest::prelude::*;

/// Independent chord oracle: walks the boundary by arclength, splits the
/// vertex cycle between the two chord endpoints, and takes brute-force
/// diameters of both vertex lists.
struct Oracle {
    v: Vec<Point>,
    cum: Vec<f64>,
    per: f64,
}

impl Oracle {
    fn new(p: &ConvexPolygon) -> Self {
        let v = p.vertices().to_vec();
        let n = v.len();
        let mut cum = vec![0.0];
        for i in 0..n {
            cum.push(cum[i] + v[i].dist(v[(i + 1) % n]));
        }
        let per = cum[n];
        Self { v, cum, per }
    }

    /// Edge index and point at arclength fraction `t`.
    fn at(&self, t: f64) -> (usize, Point) {
        let l = t * self.per;
        let n = self.v.len();
        let i = (0..n).rev().find(|&i| self.cum[i] <= l).unwrap_or(0);
        let f = (l - self.cum[i]) / (self.cum[i + 1] - self.cum[i]);
        (i, self.v[i] + (self.v[(i + 1) % n] - self.v[i]) * f)
    }

    fn diam(pts: &[Point]) -> f64 {
        let mut d: f64 = 0.0;
        for a in pts {
            for b in pts {
                d = d.max(a.dist(*b));
            }
        }
        d
    }

    /// Larger piece diameter for the chord `(s, t)` with `s < t`.
    fn value(&self, s: f64, t: f64) -> f64 {
        let n = self.v.len();
        let (i, p) = self.at(s);
        let (j, q) = self.at(t);
        let mut one = vec![p];
        let mut k = (i + 1) % n;
        let steps = (j + n - i) % n;
        for _ in 0..steps {
            one.push(self.v[k]);
            k = (k + 1) % n;
        }
        one.push(q);
        let mut two = vec![q];
        let mut k = (j + 1) % n;
        for _ in 0..(n - steps) {
            two.push(self.v[k]);
            k = (k + 1) % n;
        }
        two.push(p);
        Self::diam(&one).max(Self::diam(&two))
    }

    /// Lattice minimum refined by repeatedly searching a shrinking window
    /// around the best point.
    fn min_zoom(&self, g: usize) -> f64 {
        let mut best = (f64::INFINITY, 0.0, 0.0);
        for a in 0..g {
            for b in a + 1..g {
                let (s, t) = (a as f64 / g as f64, b as f64 / g as f64);
                let v = self.value(s, t);
                if v < best.0 {
                    best = (v, s, t);
                }
            }
        }
        let mut h = 1.0 / g as f64;
        for _ in 0..40 {
            let (_, s0, t0) = best;
            for i in -10..=10 {
                for j in -10..=10 {
                    let s = s0 + h * i as f64 / 10.0;
                    let t = t0 + h * j as f64 / 10.0;
                    if s < 0.0 || t >= 1.0 || t - s < 1e-9 {
                        continue;
                    }
                    let v = self.value(s, t);
                    if v < best.0 {
                        best = (v, s, t);
                    }
                }
            }
            h *= 0.5;
        }
        best.0
    }

    fn min(&self, g: usize) -> f64 {
        let mut best = f64::INFINITY;
        for a in 0..g {
            for b in a + 1..g {
                best = best.min(self.value(a as f64 / g as f64, b as f64 / g as f64));
            }
        }
        best
    }
}

fn poly(v: &[(f64, f64)]) -> ConvexPolygon {
    let pts: Vec<Point> = v.iter().map(|&(x, y)| Point::new(x, y)).collect();
    ConvexPolygon::from_points(&pts).unwrap()
}

#[test]
fn oracle_agrees_with_evaluate_bisection() {
    let p = random_polygon(5, 11).unwrap().polygon;
    let o = Oracle::new(&p);
    for k in 0..200 {
        let s = (k as f64 * 0.618034).fract();
        let t = (k as f64 * 0.414214 + 0.3).fract();
        let (s, t) = if s < t { (s, t) } else { (t, s) };
        if t - s < 1e-3 {
            continue;
        }
        let (v, _) = evaluate_bisection(&p, s, t, Functional::Diameter).unwrap();
        assert!((v - o.value(s, t)).abs() <= 1e-12, "chord ({s}, {t})");
    }
}

#[test]
fn unit_square() {
    let sq = poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
    let r = min_bisect_diameter(&sq, &SearchOptions::default());
    assert!((r.value - 1.25f64.sqrt()).abs() < 1e-9);
    assert!(r.balanced);
    assert!((r.chord.length() - 1.0).abs() < 1e-6);
}

#[test]
fn rectangle_is_cut_across_its_long_side() {
    let e = make_rect(2.0, 4.0).unwrap();
    let r = min_bisect_diameter(&e.polygon, &SearchOptions::default());
    assert!((r.value - 8f64.sqrt()).abs() < 1e-9);
    assert!(r.chord.p.y.abs() < 1e-6 && r.chord.q.y.abs() < 1e-6);
}

#[test]
fn equilateral_cannot_beat_its_diameter() {
    let e = make_equilateral(1.0).unwrap();
    let r = min_bisect_diameter(&e.polygon, &SearchOptions::default());
    assert!((r.value - 1.0).abs() < 1e-9);
}

#[test]
fn q_value_converges() {
    for n in [64, 256, 1024] {
        let e = make_q(n).unwrap();
        let r = min_bisect_diameter(&e.polygon, &SearchOptions::default());
        assert!((r.value - 1.0).abs() < 1e-6, "n = {n}: {}", r.value);
        // The cut runs between the two landmark points.
        let ends = [r.chord.p, r.chord.q];
        for l in &e.landmarks {
            assert!(ends.iter().any(|x| x.dist(*l) < 1e-4), "{ends:?}");
        }
    }
}

#[test]
fn isosceles_family_against_test_oracle() {
    for k in 1..=12 {
        let theta = k as f64 * PI / 18.0;
        let p = make_isosceles(theta).unwrap().polygon;
        let search = min_bisect_diameter(&p, &SearchOptions::default()).value;
        let grid = Oracle::new(&p).min(600);
        assert!(search <= grid * (1.0 + 1e-9), "θ = {theta}: {search} vs {grid}");
        assert!(grid <= search * (1.0 + 1e-2), "θ = {theta}: {search} vs {grid}");
    }
}

#[test]
fn library_lattice_oracle_matches_search() {
    for e in coarse_catalog() {
        let p = &e.polygon;
        let search = min_bisect_diameter(p, &SearchOptions::default()).value;
        let lattice = min_bisect_diameter_oracle(p, 256).value;
        assert!(search <= lattice * (1.0 + 1e-9), "{}: {search} vs {lattice}", e.name);
        assert!((lattice - search) / search <= 1e-2, "{}: {search} vs {lattice}", e.name);
    }
}

#[test]
fn lattice_oracle_examples() {
    let eq = make_equilateral(1.0).unwrap().polygon;
    assert!((min_bisect_diameter_oracle(&eq, 512).value - 1.0).abs() < 1e-6);
    let theta: f64 = 0.4;
    let p = make_isosceles(theta).unwrap().polygon;
    let h = ((PI - theta) / 2.0).tan();
    let closed = fairsect::position::lambda_m(theta).unwrap() * (1.0 + h * h).sqrt();
    let o = min_bisect_diameter_oracle(&p, 1024);
    assert!(o.value >= closed - 1e-12 && o.value - closed < 1e-4, "{}", o.value);
    let sq = make_square(1.0).unwrap().polygon;
    let o = min_bisect_diameter_oracle(&sq, 256).value;
    assert!((o - min_bisect_diameter(&sq, &SearchOptions::default()).value).abs() < 1e-2);
}

/// Values from the zooming test oracle, frozen.
#[test]
fn frozen_values() {
    let cases = [
        (random_polygon(7, 9).unwrap().polygon, 1.196621618342),
        (random_symmetric_polygon(11, 10).unwrap().polygon, 1.090284481915),
        (make_isosceles(0.5).unwrap().polygon, 2.302901559777),
    ];
    for (p, v) in cases {
        let r = min_bisect_diameter(&p, &SearchOptions::default());
        assert!((r.value - v).abs() < 1e-8, "{} vs {v}", r.value);
        assert!((Oracle::new(&p).min_zoom(200) - v).abs() < 1e-9);
    }
}

#[test]
fn symmetric_search_on_centered_bodies() {
    let e = make_rect(2.0, 4.0).unwrap();
    let r = symmetric_min_bisect(&e.polygon).unwrap();
    assert!((r.value - 8f64.sqrt()).abs() < 1e-9);
    let p = random_symmetric_polygon(4, 12).unwrap().polygon;
    let sym = symmetric_min_bisect(&p).unwrap().value;
    let full = min_bisect_diameter(&p, &SearchOptions::default()).value;
    assert!(full <= sym + 1e-9);
    let tri = make_equilateral(1.0).unwrap().polygon;
    assert_eq!(symmetric_min_bisect(&tri).unwrap_err(), fairsect::error::Error::NotSymmetric);
}

#[test]
fn width_chord_halves_the_width() {
    for e in coarse_catalog() {
        let p = &e.polygon;
        let w = p.width().0;
        let r = min_bisect_width(p);
        assert!((r.value - 0.5 * w).abs() <= 1e-12 * w.max(1.0));
        assert!(r.piece_values.iter().all(|&x| x <= 0.5 * w + 1e-12));
        let (w1, w2, ww) = bang_check(p, &r.chord).unwrap();
        assert!((w1 + w2 - ww).abs() <= 1e-12 * w.max(1.0));
    }
}

#[test]
fn balance_chord_balances() {
    let p = make_q(256).unwrap().polygon;
    let c = Chord::new(&p, 0.1, 0.55).unwrap();
    let b = balance_chord(&p, &c, Functional::Diameter);
    assert!(!b.no_balance);
    assert!((b.piece_values[0] - b.piece_values[1]).abs() <= 1e-9 * p.diameter().0);
    assert!((b.chord.direction.cross(c.direction)).abs() < 1e-12);
}

#[test]
fn bad_chords_are_rejected() {
    let p = make_square(1.0).unwrap().polygon;
    assert!(matches!(evaluate_bisection(&p, 0.3, 0.3, Functional::Diameter), Err(fairsect::error::Error::InvalidChord(_))));
}

#[test]
fn search_is_deterministic() {
    let p = random_polygon(9, 14).unwrap().polygon;
    let a = min_bisect_diameter(&p, &SearchOptions::default());
    let b = min_bisect_diameter(&p, &SearchOptions::default());
    assert_eq!(a, b);
}

fn random_body() -> impl Strategy<Value = ConvexPolygon> {
    (0u64..10_000, 3usize..16).prop_filter_map("degenerate", |(seed, k)| random_polygon(seed, k).ok().map(|e| e.polygon))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn search_bounds(p in random_body()) {
        let d = p.diameter().0;
        let r = min_bisect_diameter(&p, &SearchOptions::default());
        prop_assert!(r.value >= 0.5 * d * (1.0 - 1e-12));
        prop_assert!(r.value <= d * (1.0 + 1e-12));
        prop_assert!(r.value <= Oracle::new(&p).min(96) * (1.0 + 1e-9));
        let (v, _) = evaluate_bisection(&p, r.chord.s, r.chord.t, Functional::Diameter).unwrap();
        prop_assert!((v - r.value).abs() <= 1e-12 * d);
    }

    #[test]
    fn chord_orientation_does_not_matter(p in random_body(), s in 0.0f64..1.0, t in 0.0f64..1.0) {
        prop_assume!((s - t).abs() > 1e-3 && (s - t).abs() < 1.0 - 1e-3);
        let (a, pa) = evaluate_bisection(&p, s, t, Functional::Width).unwrap();
        let (b, pb) = evaluate_bisection(&p, t, s, Functional::Width).unwrap();
        prop_assert!((a - b).abs() <= 1e-15);
        prop_assert!((pa[0] - pb[1]).abs() <= 1e-15 && (pa[1] - pb[0]).abs() <= 1e-15);
    }
}
