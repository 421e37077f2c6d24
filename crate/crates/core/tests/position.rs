use std::f64::consts::PI;

use fairsect::bisect::*;
use fairsect::catalog::*;
use fairsect::geom::*;
use fairsect::position::*;

fn cheap_position(p: &ConvexPolygon, q: Quotient) -> (PositionReport, ConvexPolygon) {
    let r = optimize_position(p, q, q.natural_sense(), &PositionOptions::default()).unwrap();
    let img = affine_apply(&r.map(), p).unwrap();
    (r, img)
}

#[test]
fn diameter_position_satisfies_the_cover_condition() {
    for e in coarse_catalog() {
        let (r, img) = cheap_position(&e.polygon, Quotient::AreaDiameter);
        let v = diametrical_directions(&img, 1e-6);
        let c = coverage_check(&v, CoverageMode::AtLeast).unwrap();
        assert!(c.holds, "{} {:?}: {:?} at r = {}", e.name, e.params, v.angles, r.r);
        let d = decomposition_check(&v).unwrap();
        assert!(d.is_some_and(|d| d.residual < 1e-6), "{} {:?}", e.name, v.angles);
    }
}

#[test]
fn diameter_position_quotients() {
    let tri = make_isosceles(0.3).unwrap();
    let (r, _) = cheap_position(&tri.polygon, Quotient::AreaDiameter);
    assert!((r.quotient - 3f64.sqrt() / 4.0).abs() < 1e-9);
    let par = make_parallelogram(2.0, 1.0, PI / 4.0).unwrap();
    let (r, img) = cheap_position(&par.polygon, Quotient::AreaDiameter);
    assert!((r.quotient - 0.5).abs() < 1e-9);
    // The optimal parallelogram is a square.
    assert!((img.width().0 * 2f64.sqrt() - img.diameter().0).abs() < 1e-6);
}

#[test]
fn width_position_bounds() {
    for e in coarse_catalog() {
        let (r, _) = cheap_position(&e.polygon, Quotient::AreaBisectWidth);
        assert!(r.quotient >= 4.0 / 3f64.sqrt() - 1e-9, "{}", e.name);
        assert!(r.quotient <= 4.0 + 1e-6, "{}: {}", e.name, r.quotient);
        if e.polygon.len() == 4 {
            assert!((r.quotient - 4.0).abs() < 1e-6, "{}: {}", e.name, r.quotient);
        }
        let (w, _) = cheap_position(&e.polygon, Quotient::AreaWidth);
        assert!((4.0 * w.quotient - r.quotient).abs() < 1e-9 * r.quotient);
    }
}

#[test]
fn sense_must_match_the_quotient() {
    let p = make_square(1.0).unwrap().polygon;
    let err = optimize_position(&p, Quotient::AreaBisectDiameter, Sense::Min, &PositionOptions::default());
    assert!(matches!(err, Err(fairsect::error::Error::Inconsistent(_))));
}

#[test]
fn report_round_trips_bit_for_bit() {
    let p = make_square(1.0).unwrap().polygon;
    let (r, _) = cheap_position(&p, Quotient::AreaDiameter);
    let text = serde_json::to_string(&r).unwrap();
    let back: PositionReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    let v = diametrical_directions(&p, 1e-9);
    let back: DirectionSet = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(back, v);
}

/// `λ_m` equalizes the distances from the leg point to the apex and to the
/// far base vertex.
#[test]
fn lambda_m_equalizes_distances() {
    for k in 1..30 {
        let theta = k as f64 * (PI / 2.0) / 30.0;
        let l = lambda_m(theta).unwrap();
        let h = ((PI - theta) / 2.0).tan();
        let (apex, p2, p3) = (Point::new(0.0, h), Point::new(1.0, 0.0), Point::new(-1.0, 0.0));
        let q = apex.lerp(p2, l);
        assert!((q.dist(apex) - q.dist(p3)).abs() < 1e-12, "θ = {theta}");
    }
    assert!(lambda_m(PI / 2.0).is_err());
}

#[test]
fn isosceles_closed_form_matches_search() {
    for k in 1..36 {
        let theta = k as f64 * PI / 36.0;
        let p = make_isosceles(theta).unwrap().polygon;
        let search = min_bisect_diameter(&p, &SearchOptions::default()).value;
        let closed = isosceles_bisect_diameter(theta).unwrap();
        assert!((search - closed).abs() < 1e-6 * closed, "θ = {theta}: {search} vs {closed}");
    }
}

#[test]
fn isosceles_quotient_pieces() {
    // Acute apex below the crossover, between the crossover and π/3, and
    // obtuse.
    let q = |t: f64| isosceles_quotient(t).unwrap();
    for t in [0.1, 0.3, 0.6] {
        assert!((q(t) - 2.0 * t.cos().powi(2) * t.sin()).abs() < 1e-12);
    }
    for t in [0.7, 0.9, 1.0] {
        assert!((q(t) - 0.25 / (0.5 * t).tan()).abs() < 1e-12);
    }
    for t in [1.2, 2.0, 3.0] {
        assert!((q(t) - 0.5 * t.sin()).abs() < 1e-12);
    }
    let c = ISOSCELES_BASE_CROSSOVER;
    assert!((q(c - 1e-12) - q(c + 1e-12)).abs() < 1e-9);
    let tm = (2.0f64 / 3.0).sqrt().acos();
    assert!((q(tm) - 4.0 / (3.0 * 3f64.sqrt())).abs() < 1e-12);
}

#[test]
fn area_profile_values() {
    assert!((area_profile(0.5).unwrap() - (4.0 * PI - 3.0 * 3f64.sqrt()) / 6.0).abs() < 1e-12);
    assert!(area_profile(0.0).unwrap().abs() < 1e-15);
    assert!(area_profile(0.6).is_err());
    for k in 1..50 {
        let b = k as f64 / 100.0;
        let h = 1e-6;
        let fd = (area_profile(b + h).unwrap() - area_profile(b - h).unwrap()) / (2.0 * h);
        assert!((fd - area_profile_slope(b)).abs() < 1e-6, "b = {b}");
    }
    let (b, a) = argmax_area_profile();
    assert!((b - 1.0 / 5f64.sqrt()).abs() < 1e-12);
    assert!((a - 2.0 * 0.75f64.atan()).abs() < 1e-14);
}

#[test]
fn behrend_checks_on_named_bodies() {
    let opts = SearchOptions::default();
    let rect = make_rect(2.0, 4.0).unwrap().polygon;
    assert!(behrend_bisecting_check(&rect, &opts).pass);
    let tri = make_isosceles(PI / 6.0).unwrap().polygon;
    assert!(behrend_bisecting_check(&tri, &opts).pass);
    let eq = make_equilateral(1.0).unwrap().polygon;
    let r = behrend_bisecting_check(&eq, &opts);
    assert!(r.pass && r.checks.iter().all(|c| c.bisector.degenerate));
    let rh = make_rhombus();
    let r = behrend_bisecting_check(&rh.polygon, &opts);
    assert!(r.pass && r.checks.iter().all(|c| c.pieces_in_behrend_position));
}

/// At θ = π/4 the balanced minimizing chords form a family. The horizontal
/// one passes the cover condition, tilted ones do not.
#[test]
fn quarter_turn_isosceles_has_failing_bisectors() {
    let p = make_isosceles(PI / 4.0).unwrap().polygon;
    let r = behrend_bisecting_check(&p, &SearchOptions::default());
    assert!((r.d_b - 2.0).abs() < 1e-9);
    assert!(!r.pass);
    let failing: Vec<_> = r.checks.iter().filter(|c| !c.pass).collect();
    assert!(!failing.is_empty());
    for c in failing {
        assert!(c.bisector.chord.direction.y.abs() > 1e-6, "{:?}", c.bisector.chord);
    }
    // A horizontal chord at the right height is a balanced minimizer that
    // passes.
    let h = (3.0 * PI / 8.0).tan();
    let leg = (1.0 + h * h).sqrt();
    let y = h * (1.0 - 2.0 / leg);
    let chord = p.line_chord(Point::new(0.0, 1.0), y).unwrap();
    let cut = clip_by_chord(&p, &chord).unwrap();
    assert!((cut.piece1.diameter() - 2.0).abs() < 1e-12 && (cut.piece2.diameter() - 2.0).abs() < 1e-12);
    let union = piece_directions(&cut.piece1, 1e-9).union(&piece_directions(&cut.piece2, 1e-9));
    assert!(coverage_check(&union, CoverageMode::AtLeast).unwrap().holds);
    assert!(coverage_check(&union, CoverageMode::AtMost).unwrap().holds);
}
