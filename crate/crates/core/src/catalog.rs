//! Named bodies and seeded random polygons.
//!
//! Curved bodies are always inscribed polygons, so their areas approach the
//! smooth values from below.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Point};
use crate::position::{area_profile, isosceles_bisect_diameter};

/// Where a reference value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Exact value for the polygon as built.
    Exact,
    /// Value of the smooth body the polygon approximates.
    Limit,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Reference {
    pub value: f64,
    /// Absolute tolerance a recomputation from the polygon must meet.
    pub tol: f64,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: BTreeMap<String, f64>,
    pub polygon: ConvexPolygon,
    /// Upper bound on the area lost by inscribing; 0 for exact polygons.
    pub approx_error_area: f64,
    /// Keys among `area`, `diameter`, `width`, `d_b`, `w_b`.
    pub reference_values: BTreeMap<String, Reference>,
    /// Marked boundary points that are not vertices.
    pub landmarks: Vec<Point>,
}

impl CatalogEntry {
    fn new(name: &str, params: &[(&str, f64)], polygon: ConvexPolygon) -> Self {
        Self {
            name: name.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            polygon,
            approx_error_area: 0.0,
            reference_values: BTreeMap::new(),
            landmarks: Vec::new(),
        }
    }

    fn with_ref(mut self, key: &str, value: f64, tol: f64, provenance: Provenance) -> Self {
        self.reference_values.insert(
            key.to_string(),
            Reference {
                value,
                tol,
                provenance,
            },
        );
        self
    }

    /// Attaches exact area, diameter, width and `w_B` computed from the
    /// vertex formulas' polygon.
    fn with_exact_measures(self) -> Self {
        let p = &self.polygon;
        let (a, d, w) = (p.area(), p.diameter().0, p.width().0);
        let tol = 1e-12 * d.max(1.0) * d.max(1.0);
        self.with_ref("area", a, tol, Provenance::Exact)
            .with_ref("diameter", d, 1e-12 * d, Provenance::Exact)
            .with_ref("width", w, 1e-12 * d, Provenance::Exact)
            .with_ref("w_b", 0.5 * w, 1e-12 * d, Provenance::Exact)
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive, got {v}")))
    }
}

fn poly_of(pts: &[Point]) -> Result<ConvexPolygon> {
    ConvexPolygon::from_points(pts)
}

/// `m` points on the circle of radius 1 about `c`, angles from `a0` to `a1`
/// inclusive.
fn arc(c: Point, a0: f64, a1: f64, m: usize) -> Vec<Point> {
    (0..m)
        .map(|i| c + Point::polar(a0 + (a1 - a0) * i as f64 / (m - 1) as f64))
        .collect()
}

/// Area lost by inscribing `m` points (`m - 1` segments) in an arc of unit
/// radius and angular span `span`.
fn arc_deficit(span: f64, m: usize) -> f64 {
    let h = span / (m - 1) as f64;
    0.5 * (m - 1) as f64 * (h - h.sin())
}

/// Four mirror images of a first-quadrant chain.
fn mirror4(quarter: &[Point]) -> Vec<Point> {
    let mut out = Vec::with_capacity(4 * quarter.len());
    for &(sx, sy) in &[(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
        out.extend(quarter.iter().map(|p| Point::new(sx * p.x, sy * p.y)));
    }
    out
}

/// The region between the unit disks about `(±a, 0)` and the lines
/// `x = ±a`, for `0 < a < 1/2`, with `n` samples per circle.
///
/// Each circle contributes an upper and a lower arc of `n / 2` points each.
pub fn make_r(a: f64, n: usize) -> Result<CatalogEntry> {
    if !(a > 0.0 && a < 0.5) {
        return Err(Error::Domain(format!("a must lie in (0, 1/2), got {a}")));
    }
    if n < 8 {
        return Err(Error::Domain(format!("n must be at least 8, got {n}")));
    }
    let m = n / 2;
    let y0 = (1.0 - 4.0 * a * a).sqrt();
    let top = (1.0 - a * a).sqrt();
    let a0 = y0.atan2(2.0 * a);
    let a1 = top.atan2(a);
    // Upper right arc lies on the circle about (-a, 0).
    let mut quarter = arc(Point::new(-a, 0.0), a0, a1, m);
    quarter[0] = Point::new(a, y0);
    quarter[m - 1] = Point::new(0.0, top);
    let polygon = poly_of(&mirror4(&quarter))?;
    let mut e = CatalogEntry::new("R", &[("a", a), ("n", n as f64)], polygon);
    e.approx_error_area = 4.0 * arc_deficit(a1 - a0, m);
    e.landmarks = vec![Point::new(-a, 0.0), Point::new(a, 0.0)];
    let tol = e.approx_error_area + 1e-12;
    Ok(e.with_ref("area", area_profile(a)?, tol, Provenance::Limit))
}

/// The extremal body `{|x| <= 1/√5, (x ± 1/√5)² + y² <= 1}` with `n`
/// samples per circle.
pub fn make_q(n: usize) -> Result<CatalogEntry> {
    let a = 1.0 / 5f64.sqrt();
    let mut e = make_r(a, n)?;
    e.name = "Q".to_string();
    e.params.remove("a");
    let tol = e.approx_error_area + 1e-12;
    e = e
        .with_ref("area", 2.0 * 0.75f64.atan(), tol, Provenance::Limit)
        .with_ref("diameter", 4.0 / 5f64.sqrt(), 1e-12, Provenance::Exact)
        .with_ref("d_b", 1.0, 1e-6, Provenance::Limit);
    Ok(e)
}

/// Intersection of the unit disks about `(±a, 0)`, `0 < a < 1`.
pub fn make_lens(a: f64, n: usize) -> Result<CatalogEntry> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Domain(format!("a must lie in (0, 1), got {a}")));
    }
    if n < 8 {
        return Err(Error::Domain(format!("n must be at least 8, got {n}")));
    }
    let m = n / 2;
    let g = a.acos();
    let mut quarter = arc(Point::new(-a, 0.0), 0.0, g, m);
    quarter[0] = Point::new(1.0 - a, 0.0);
    quarter[m - 1] = Point::new(0.0, (1.0 - a * a).sqrt());
    let polygon = poly_of(&mirror4(&quarter))?;
    let mut e = CatalogEntry::new("lens", &[("a", a), ("n", n as f64)], polygon);
    e.approx_error_area = 4.0 * arc_deficit(g, m);
    let exact = 2.0 * (g - a * (1.0 - a * a).sqrt());
    let tol = e.approx_error_area + 1e-12;
    Ok(e.with_ref("area", exact, tol, Provenance::Limit))
}

/// Regular `k`-gon with a vertex on the positive x-axis, centered at the
/// origin. Even `k` gives exact central symmetry.
fn regular(k: usize, r: f64) -> Result<ConvexPolygon> {
    let mut pts: Vec<Point> = (0..k)
        .map(|i| Point::polar(2.0 * PI * i as f64 / k as f64) * r)
        .collect();
    if k % 2 == 0 {
        for i in 0..k / 2 {
            pts[i + k / 2] = -pts[i];
        }
    }
    poly_of(&pts)
}

/// Inscribed `n`-gon of the disk of radius `r`.
pub fn make_disk(n: usize, r: f64) -> Result<CatalogEntry> {
    positive("r", r)?;
    if n < 8 {
        return Err(Error::Domain(format!("n must be at least 8, got {n}")));
    }
    let polygon = regular(n, r)?;
    let mut e = CatalogEntry::new("disk", &[("n", n as f64), ("r", r)], polygon);
    e.approx_error_area = PI * r * r - 0.5 * n as f64 * r * r * (2.0 * PI / n as f64).sin();
    let tol = e.approx_error_area + 1e-12;
    let chord_deficit = r * (1.0 - (PI / n as f64).cos());
    Ok(e.with_ref("area", PI * r * r, tol, Provenance::Limit)
        .with_ref("diameter", 2.0 * r, 2.0 * chord_deficit + 1e-12, Provenance::Limit)
        .with_ref("d_b", 2.0 * r, 2.0 * chord_deficit + 1e-6, Provenance::Limit))
}

pub fn make_regular_ngon(k: usize, circumradius: f64) -> Result<CatalogEntry> {
    positive("circumradius", circumradius)?;
    if k < 3 {
        return Err(Error::Domain(format!("k must be at least 3, got {k}")));
    }
    let polygon = regular(k, circumradius)?;
    Ok(CatalogEntry::new("ngon", &[("k", k as f64), ("r", circumradius)], polygon).with_exact_measures())
}

/// Isosceles triangle with apex angle `theta`, base `(±1, 0)` and apex
/// `(0, tan((π - θ)/2))`.
pub fn make_isosceles(theta: f64) -> Result<CatalogEntry> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::Domain(format!("theta must lie in (0, π), got {theta}")));
    }
    let h = ((PI - theta) / 2.0).tan();
    let polygon = poly_of(&[Point::new(1.0, 0.0), Point::new(0.0, h), Point::new(-1.0, 0.0)])?;
    let leg = (1.0 + h * h).sqrt();
    let d_b = isosceles_bisect_diameter(theta)?;
    // The minimum sits on a kink of the chord functional, so a numeric
    // search lands within about 1e-11 relative rather than at rounding level.
    Ok(CatalogEntry::new("isosceles", &[("theta", theta)], polygon)
        .with_exact_measures()
        .with_ref("d_b", d_b, 1e-9 * leg, Provenance::Exact))
}

/// Equilateral triangle with one edge on the x-axis from the origin.
pub fn make_equilateral(side: f64) -> Result<CatalogEntry> {
    positive("side", side)?;
    let polygon = poly_of(&[
        Point::new(0.0, 0.0),
        Point::new(side, 0.0),
        Point::new(0.5 * side, 0.5 * 3f64.sqrt() * side),
    ])?;
    Ok(CatalogEntry::new("equilateral", &[("side", side)], polygon)
        .with_exact_measures()
        .with_ref("d_b", side, 1e-12 * side, Provenance::Exact))
}

/// Axis-parallel rectangle of width `a` and height `b` centered at the
/// origin.
pub fn make_rect(a: f64, b: f64) -> Result<CatalogEntry> {
    positive("a", a)?;
    positive("b", b)?;
    let (x, y) = (0.5 * a, 0.5 * b);
    let polygon = poly_of(&[Point::new(-x, -y), Point::new(x, -y), Point::new(x, y), Point::new(-x, y)])?;
    let (lo, hi) = (a.min(b), a.max(b));
    // Cut across the middle of the long side.
    let d_b = (lo * lo + 0.25 * hi * hi).sqrt();
    Ok(CatalogEntry::new("rect", &[("a", a), ("b", b)], polygon)
        .with_exact_measures()
        .with_ref("d_b", d_b, 1e-12 * hi, Provenance::Exact))
}

pub fn make_square(side: f64) -> Result<CatalogEntry> {
    let mut e = make_rect(side, side)?;
    e.name = "square".to_string();
    e.params = [("side".to_string(), side)].into_iter().collect();
    Ok(e)
}

/// Parallelogram with vertices `0`, `base·e₁`, and `side` along the direction
/// at `angle` from the x-axis.
pub fn make_parallelogram(base: f64, side: f64, angle: f64) -> Result<CatalogEntry> {
    positive("base", base)?;
    positive("side", side)?;
    if !(angle > 0.0 && angle < PI) {
        return Err(Error::Domain(format!("angle must lie in (0, π), got {angle}")));
    }
    let u = Point::polar(angle) * side;
    let b = Point::new(base, 0.0);
    let polygon = poly_of(&[Point::new(0.0, 0.0), b, b + u, u])?;
    Ok(CatalogEntry::new(
        "parallelogram",
        &[("base", base), ("side", side), ("angle", angle)],
        polygon,
    )
    .with_exact_measures())
}

/// Rhombus made of two unit equilateral triangles.
pub fn make_rhombus() -> CatalogEntry {
    let mut e = make_parallelogram(1.0, 1.0, PI / 3.0).expect("valid parameters");
    e.name = "rhombus".to_string();
    e.params.clear();
    e.with_ref("d_b", 1.0, 1e-12, Provenance::Exact)
}

fn disk_point<R: Rng>(rng: &mut R) -> Point {
    let r = rng.gen::<f64>().sqrt();
    let a = rng.gen::<f64>() * 2.0 * PI;
    Point::polar(a) * r
}

/// Hull of `k` seeded uniform points in the unit disk.
pub fn random_polygon(seed: u64, k: usize) -> Result<CatalogEntry> {
    if k < 3 {
        return Err(Error::Domain(format!("k must be at least 3, got {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        let pts: Vec<Point> = (0..k).map(|_| disk_point(&mut rng)).collect();
        if let Ok(p) = poly_of(&pts) {
            return Ok(CatalogEntry::new("random", &[("seed", seed as f64), ("k", k as f64)], p).with_exact_measures());
        }
    }
    Err(Error::DegenerateInput(format!("no proper hull after 16 draws (seed {seed}, k {k})")))
}

/// Hull of `k / 2` seeded points and their mirror images through the origin.
pub fn random_symmetric_polygon(seed: u64, k: usize) -> Result<CatalogEntry> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::Domain(format!("k must be even and at least 4, got {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        let half: Vec<Point> = (0..k / 2).map(|_| disk_point(&mut rng)).collect();
        let pts: Vec<Point> = half.iter().copied().chain(half.iter().map(|&p| -p)).collect();
        if let Ok(p) = poly_of(&pts) {
            return Ok(
                CatalogEntry::new("random-symmetric", &[("seed", seed as f64), ("k", k as f64)], p)
                    .with_exact_measures(),
            );
        }
    }
    Err(Error::DegenerateInput(format!("no proper hull after 16 draws (seed {seed}, k {k})")))
}

/// Constructor parameters accepted by [`by_name`]; unset fields take the
/// constructor's default.
#[derive(Debug, Clone, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub side: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub theta: Option<f64>,
    pub r: Option<f64>,
    pub k: Option<usize>,
    pub seed: Option<u64>,
    pub angle: Option<f64>,
    pub base: Option<f64>,
}

/// Names and parameter lists understood by [`by_name`].
pub const NAMES: &[(&str, &str)] = &[
    ("Q", "n=1024"),
    ("R", "a, n=1024"),
    ("lens", "a=0.5, n=1024"),
    ("disk", "n=1024, r=1"),
    ("ngon", "k=6, r=1"),
    ("isosceles", "theta"),
    ("equilateral", "side=1"),
    ("rect", "a=2, b=4"),
    ("square", "side=2"),
    ("parallelogram", "base=1, side=1, angle=π/3"),
    ("rhombus", ""),
    ("random", "seed=1, k=12"),
    ("random-symmetric", "seed=1, k=12"),
];

pub fn by_name(name: &str, p: &Params) -> Result<CatalogEntry> {
    let need = |v: Option<f64>, what: &str| {
        v.ok_or_else(|| Error::Domain(format!("{name} requires --{what}")))
    };
    match name {
        "Q" | "q" => make_q(p.n.unwrap_or(1024)),
        "R" | "r" => make_r(need(p.a, "a")?, p.n.unwrap_or(1024)),
        "lens" => make_lens(p.a.unwrap_or(0.5), p.n.unwrap_or(1024)),
        "disk" => make_disk(p.n.unwrap_or(1024), p.r.unwrap_or(1.0)),
        "ngon" => make_regular_ngon(p.k.unwrap_or(6), p.r.unwrap_or(1.0)),
        "isosceles" => make_isosceles(need(p.theta, "theta")?),
        "equilateral" => make_equilateral(p.side.unwrap_or(1.0)),
        "rect" => make_rect(p.a.unwrap_or(2.0), p.b.unwrap_or(4.0)),
        "square" => make_square(p.side.unwrap_or(2.0)),
        "parallelogram" => make_parallelogram(
            p.base.unwrap_or(1.0),
            p.side.unwrap_or(1.0),
            p.angle.unwrap_or(PI / 3.0),
        ),
        "rhombus" => Ok(make_rhombus()),
        "random" => random_polygon(p.seed.unwrap_or(1), p.k.unwrap_or(12)),
        "random-symmetric" => random_symmetric_polygon(p.seed.unwrap_or(1), p.k.unwrap_or(12)),
        _ => Err(Error::Domain(format!("unknown catalog entry `{name}`"))),
    }
}

/// Every named body at resolution `n` for the curved ones.
pub fn catalog_at(n: usize) -> Vec<CatalogEntry> {
    let ok = |r: Result<CatalogEntry>| r.expect("catalog parameters are valid");
    vec![
        ok(make_q(n)),
        ok(make_r(0.1, n)),
        ok(make_r(0.3, n)),
        ok(make_r(0.49, n)),
        ok(make_lens(0.5, n)),
        ok(make_lens(0.8, n)),
        ok(make_disk(n, 1.0)),
        ok(make_regular_ngon(5, 1.0)),
        ok(make_regular_ngon(6, 1.0)),
        ok(make_isosceles(PI / 6.0)),
        ok(make_isosceles(PI / 4.0)),
        ok(make_isosceles(0.4)),
        ok(make_isosceles(PI / 3.0)),
        ok(make_isosceles(PI / 2.0)),
        ok(make_isosceles(2.0 * PI / 3.0)),
        ok(make_equilateral(1.0)),
        ok(make_rect(2.0, 4.0)),
        ok(make_rect(1.0, 3.0)),
        ok(make_square(2.0)),
        ok(make_parallelogram(2.0, 1.0, PI / 4.0)),
        make_rhombus(),
        ok(random_polygon(7, 9)),
        ok(random_symmetric_polygon(11, 10)),
    ]
}

/// The catalog at full resolution.
pub fn standard_catalog() -> Vec<CatalogEntry> {
    catalog_at(1024)
}

/// The catalog with coarse curved bodies, for nested optimizations.
pub fn coarse_catalog() -> Vec<CatalogEntry> {
    catalog_at(64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::is_centrally_symmetric;

    #[test]
    fn q_contains_flats_and_marks() {
        let q = make_q(256).unwrap();
        let a = 1.0 / 5f64.sqrt();
        for v in q.polygon.vertices() {
            assert!(v.x.abs() <= a + 1e-15);
        }
        assert!(q.polygon.vertices().iter().any(|v| v.x == a && (v.y - a).abs() < 1e-15));
        for m in &q.landmarks {
            assert!((q.polygon.boundary_point(q.polygon.param_of_point(*m)).dist(*m)) < 1e-14);
        }
        assert!((q.polygon.diameter().0 - 4.0 / 5f64.sqrt()).abs() < 1e-12);
        assert!(is_centrally_symmetric(&q.polygon, 1e-12).is_some());
    }

    #[test]
    fn q_area_increases_to_limit() {
        let limit = 2.0 * 0.75f64.atan();
        let mut last = 0.0;
        for n in [64, 256, 1024, 4096] {
            let a = make_q(n).unwrap().polygon.area();
            assert!(a >= last && a <= limit);
            last = a;
        }
        assert!((limit - last).abs() < 1e-5);
    }

    #[test]
    fn deficit_bound_is_the_true_gap() {
        for e in [make_q(128).unwrap(), make_lens(0.5, 128).unwrap(), make_disk(128, 1.0).unwrap()] {
            let r = e.reference_values["area"];
            let gap = r.value - e.polygon.area();
            assert!((gap - e.approx_error_area).abs() < 1e-12, "{}: {gap}", e.name);
        }
    }

    #[test]
    fn polygonal_examples() {
        let t = make_isosceles(PI / 3.0).unwrap();
        let v = t.polygon.vertices();
        assert_eq!(v[0], Point::new(-1.0, 0.0));
        assert!((v[2].y - 3f64.sqrt()).abs() < 1e-15);
        let r = make_rect(2.0, 4.0).unwrap();
        assert!((r.reference_values["d_b"].value - 8f64.sqrt()).abs() < 1e-15);
        assert!((make_disk(1024, 1.0).unwrap().polygon.area() - PI).abs() < 1e-4);
        assert!(matches!(make_square(0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_polygon(1, 12).unwrap(), random_polygon(1, 12).unwrap());
        let s = random_symmetric_polygon(2, 10).unwrap();
        let c = is_centrally_symmetric(&s.polygon, 1e-12).unwrap();
        assert!(c.norm() < 1e-12);
    }
}
