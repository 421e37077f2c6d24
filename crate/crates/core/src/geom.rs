//! Convex polygon primitives.
//!
//! A [`ConvexPolygon`] is the canonical representation of a planar convex
//! body: a counter-clockwise vertex list starting at the lexicographically
//! smallest vertex, with no duplicate and no collinear vertices. Curved bodies
//! are handled through inscribed polygons (see [`crate::catalog`]).
//!
//! The boundary is parameterized by normalized arclength `t ∈ [0, 1)` measured
//! counter-clockwise from vertex 0. Chords are addressed by a pair of such
//! parameters.
//!
//! Diameter and width use rotating calipers. Ties in the attaining pair or
//! edge are broken by the smallest index so that direction sets extracted
//! from them are reproducible.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Collinearity and degeneracy tolerance.
pub const EPS_GEO: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector at angle `a`.
    pub fn polar(a: f64) -> Self {
        Self::new(a.cos(), a.sin())
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Point {
        let n = self.norm();
        Point::new(self.x / n, self.y / n)
    }

    pub fn lerp(self, o: Point, f: f64) -> Point {
        self + (o - self) * f
    }

    fn lex_cmp(&self, o: &Point) -> std::cmp::Ordering {
        self.x.total_cmp(&o.x).then(self.y.total_cmp(&o.y))
    }
}

impl From<[f64; 2]> for Point {
    fn from(a: [f64; 2]) -> Self {
        Point::new(a[0], a[1])
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Angle of the line spanned by `v`, folded into `[0, π)`.
pub fn line_angle(v: Point) -> f64 {
    let a = v.y.atan2(v.x).rem_euclid(std::f64::consts::PI);
    if a >= std::f64::consts::PI {
        0.0
    } else {
        a
    }
}

/// Shoelace signed area of a closed point sequence.
pub fn signed_area(pts: &[Point]) -> f64 {
    let n = pts.len();
    if n < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..n {
        acc += pts[i].cross(pts[(i + 1) % n]);
    }
    0.5 * acc
}

/// Diameter of a convex counter-clockwise point sequence by rotating calipers.
///
/// Collinear points are allowed; coincident consecutive points must already be
/// removed. Returns the distance and the attaining index pair `(i, j)`, `i < j`,
/// preferring the lowest pair among exact ties.
pub fn calipers_diameter(pts: &[Point]) -> (f64, usize, usize) {
    let n = pts.len();
    match n {
        0 | 1 => return (0.0, 0, 0),
        2 => return (pts[0].dist(pts[1]), 0, 1),
        _ => {}
    }
    let mut best2 = -1.0;
    let mut best = (0, 0);
    let consider = |a: usize, b: usize, best2: &mut f64, best: &mut (usize, usize)| {
        if a == b {
            return;
        }
        let pair = if a < b { (a, b) } else { (b, a) };
        let d2 = (pts[a] - pts[b]).norm2();
        if d2 > *best2 || (d2 == *best2 && pair < *best) {
            *best2 = d2;
            *best = pair;
        }
    };
    let mut j = 1;
    let mut steps = 0usize;
    for i in 0..n {
        let ni = (i + 1) % n;
        let e = pts[ni] - pts[i];
        loop {
            let nj = (j + 1) % n;
            if steps < 4 * n && e.cross(pts[nj] - pts[j]) > 0.0 {
                j = nj;
                steps += 1;
            } else {
                break;
            }
        }
        consider(i, j, &mut best2, &mut best);
        consider(ni, j, &mut best2, &mut best);
    }
    (best2.max(0.0).sqrt(), best.0, best.1)
}

/// Minimum width of a convex counter-clockwise point sequence by rotating
/// calipers. Returns the width and the index of the attaining edge
/// (edge `i` joins `i` and `i + 1`); ties go to the smallest edge index.
pub fn calipers_width(pts: &[Point]) -> (f64, usize) {
    let n = pts.len();
    if n < 3 {
        return (0.0, 0);
    }
    let mut best = f64::INFINITY;
    let mut best_edge = 0;
    let mut j = 1;
    let mut steps = 0usize;
    for i in 0..n {
        let ni = (i + 1) % n;
        let e = pts[ni] - pts[i];
        let len = e.norm();
        if len == 0.0 {
            continue;
        }
        if j == i || j == ni {
            j = (ni + 1) % n;
        }
        loop {
            let nj = (j + 1) % n;
            if steps < 4 * n && nj != i && e.cross(pts[nj] - pts[i]) > e.cross(pts[j] - pts[i]) {
                j = nj;
                steps += 1;
            } else {
                break;
            }
        }
        let h = e.cross(pts[j] - pts[i]) / len;
        if h < best {
            best = h;
            best_edge = i;
        }
    }
    (best.max(0.0), best_edge)
}

/// Canonical convex polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
    cumulative: Vec<f64>,
    perimeter: f64,
    area: f64,
    centroid: Point,
}

impl ConvexPolygon {
    /// Convex hull of `points` in canonical order.
    ///
    /// Duplicates and collinear points are dropped. Fails with
    /// [`Error::DegenerateInput`] when fewer than three hull vertices remain or
    /// the enclosed area vanishes.
    pub fn from_points(points: &[Point]) -> Result<Self> {
        if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::DegenerateInput("non-finite coordinate".into()));
        }
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort_by(Point::lex_cmp);
        if pts.is_empty() {
            return Err(Error::DegenerateInput("no points".into()));
        }
        let diag = bbox_diagonal(&pts);
        let dup = EPS_GEO * diag.max(f64::MIN_POSITIVE);
        pts.dedup_by(|a, b| a.dist(*b) <= dup);

        let turn_ok = |o: Point, a: Point, b: Point| {
            let u = a - o;
            let v = b - o;
            u.cross(v) > EPS_GEO * u.norm() * v.norm()
        };
        let mut hull: Vec<Point> = Vec::with_capacity(pts.len() + 1);
        for &p in &pts {
            while hull.len() >= 2 && !turn_ok(hull[hull.len() - 2], hull[hull.len() - 1], p) {
                hull.pop();
            }
            hull.push(p);
        }
        let lower_len = hull.len() + 1;
        for &p in pts.iter().rev().skip(1) {
            while hull.len() >= lower_len && !turn_ok(hull[hull.len() - 2], hull[hull.len() - 1], p) {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
        // Seam points may survive the two passes; sweep once more cyclically.
        let mut changed = true;
        while changed && hull.len() >= 3 {
            changed = false;
            let n = hull.len();
            for i in 0..n {
                let a = hull[(i + n - 1) % n];
                let b = hull[i];
                let c = hull[(i + 1) % n];
                if !turn_ok(a, b, c) || b.dist(c) <= dup {
                    hull.remove(i);
                    changed = true;
                    break;
                }
            }
        }
        if hull.len() < 3 {
            return Err(Error::DegenerateInput(format!(
                "hull has {} vertices",
                hull.len()
            )));
        }
        let start = (0..hull.len())
            .min_by(|&a, &b| hull[a].lex_cmp(&hull[b]))
            .unwrap();
        hull.rotate_left(start);
        let poly = Self::from_canonical(hull);
        if poly.area <= EPS_GEO * diag * diag {
            return Err(Error::DegenerateInput(format!("area {:e}", poly.area)));
        }
        Ok(poly)
    }

    fn from_canonical(vertices: Vec<Point>) -> Self {
        let n = vertices.len();
        let mut cumulative = Vec::with_capacity(n + 1);
        let mut acc = 0.0;
        cumulative.push(0.0);
        for i in 0..n {
            acc += vertices[i].dist(vertices[(i + 1) % n]);
            cumulative.push(acc);
        }
        let area = signed_area(&vertices);
        let mut cx = 0.0;
        let mut cy = 0.0;
        let o = vertices[0];
        for i in 0..n {
            let a = vertices[i] - o;
            let b = vertices[(i + 1) % n] - o;
            let w = a.cross(b);
            cx += (a.x + b.x) * w;
            cy += (a.y + b.y) * w;
        }
        let centroid = Point::new(o.x + cx / (6.0 * area), o.y + cy / (6.0 * area));
        Self {
            vertices,
            cumulative,
            perimeter: acc,
            area,
            centroid,
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn centroid(&self) -> Point {
        self.centroid
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    /// Diameter and the attaining vertex pair.
    pub fn diameter(&self) -> (f64, (usize, usize)) {
        let (d, i, j) = calipers_diameter(&self.vertices);
        (d, (i, j))
    }

    /// Minimum width and the unit normal of the attaining supporting lines,
    /// folded to angle `[0, π)`.
    pub fn width(&self) -> (f64, Point) {
        let (w, i) = calipers_width(&self.vertices);
        let e = self.vertex(i + 1) - self.vertex(i);
        let normal = Point::new(e.y, -e.x).normalized();
        (w, Point::polar(line_angle(normal)))
    }

    /// Minimum and maximum of `x · n` over the body.
    pub fn support_range(&self, n: Point) -> (f64, f64) {
        self.vertices
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                let h = v.dot(n);
                (lo.min(h), hi.max(h))
            })
    }

    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    /// Edge index containing parameter `t` and the boundary point there.
    pub fn locate(&self, t: f64) -> (usize, Point) {
        let n = self.vertices.len();
        let t = t.rem_euclid(1.0);
        let l = t * self.perimeter;
        let i = match self.cumulative.binary_search_by(|c| c.total_cmp(&l)) {
            Ok(i) => i,
            Err(i) => i.saturating_sub(1),
        }
        .min(n - 1);
        let len = self.cumulative[i + 1] - self.cumulative[i];
        let f = if len > 0.0 {
            ((l - self.cumulative[i]) / len).clamp(0.0, 1.0)
        } else {
            0.0
        };
        (i, self.vertices[i].lerp(self.vertex(i + 1), f))
    }

    /// Point at normalized arclength `t` from vertex 0, counter-clockwise.
    pub fn boundary_point(&self, t: f64) -> Point {
        self.locate(t).1
    }

    /// Parameter of a point known to lie on edge `edge`.
    pub fn param_on_edge(&self, edge: usize, p: Point) -> f64 {
        let l = self.cumulative[edge] + self.vertices[edge].dist(p);
        (l / self.perimeter).rem_euclid(1.0)
    }

    /// Parameter of the boundary point nearest to `p`.
    pub fn param_of_point(&self, p: Point) -> f64 {
        let n = self.vertices.len();
        let mut best = (f64::INFINITY, 0, p);
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertex(i + 1);
            let e = b - a;
            let f = ((p - a).dot(e) / e.norm2()).clamp(0.0, 1.0);
            let c = a.lerp(b, f);
            let d = c.dist(p);
            if d < best.0 {
                best = (d, i, c);
            }
        }
        self.param_on_edge(best.1, best.2)
    }

    /// The chord cut by the line `{x : x · n = c}`, oriented so that the
    /// boundary run from `s` to `t` lies on the side `x · n < c`.
    ///
    /// Returns `None` when the line misses the interior.
    pub fn line_chord(&self, n: Point, c: f64) -> Option<Chord> {
        let m = self.vertices.len();
        let mut enter = None;
        let mut exit = None;
        for i in 0..m {
            let a = self.vertices[i];
            let b = self.vertex(i + 1);
            let ha = a.dot(n) - c;
            let hb = b.dot(n) - c;
            if ha >= 0.0 && hb < 0.0 {
                enter = Some((i, a.lerp(b, ha / (ha - hb))));
            } else if ha < 0.0 && hb >= 0.0 {
                exit = Some((i, a.lerp(b, ha / (ha - hb))));
            }
        }
        let (ei, p) = enter?;
        let (xi, q) = exit?;
        if p.dist(q) <= EPS_GEO * self.perimeter {
            return None;
        }
        Some(Chord::from_parts(
            self.param_on_edge(ei, p),
            self.param_on_edge(xi, q),
            p,
            q,
        ))
    }

    /// Boundary run from parameter `s` to `t` (counter-clockwise), closed by the
    /// chord `q → p`. Consecutive coincident points are dropped.
    pub(crate) fn chain_into(&self, s: f64, t: f64, out: &mut Vec<Point>) {
        let n = self.vertices.len();
        let (es, p) = self.locate(s);
        let (et, q) = self.locate(t);
        out.clear();
        out.push(p);
        let same_edge_ahead = es == et && t.rem_euclid(1.0) >= s.rem_euclid(1.0);
        if !same_edge_ahead {
            let mut k = (es + 1) % n;
            loop {
                push_distinct(out, self.vertices[k], self.perimeter);
                if k == et {
                    break;
                }
                k = (k + 1) % n;
            }
        }
        push_distinct(out, q, self.perimeter);
        while out.len() > 1 && out[0].dist(out[out.len() - 1]) <= EPS_GEO * self.perimeter {
            out.pop();
        }
    }

    /// Steiner symmetral about the line through the origin spanned by `u`.
    pub fn steiner_symmetrize(&self, u: Point) -> Result<ConvexPolygon> {
        let u = u.normalized();
        let v = u.perp();
        let mut levels: Vec<f64> = self.vertices.iter().map(|p| p.dot(u)).collect();
        levels.sort_by(f64::total_cmp);
        levels.dedup();
        let n = self.vertices.len();
        let mut pts = Vec::with_capacity(2 * levels.len());
        for &a in &levels {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for i in 0..n {
                let p = self.vertices[i];
                let q = self.vertex(i + 1);
                let (ap, aq) = (p.dot(u), q.dot(u));
                let hit = if ap == a {
                    Some(p.dot(v))
                } else if (ap - a) * (aq - a) < 0.0 {
                    Some(p.lerp(q, (a - ap) / (aq - ap)).dot(v))
                } else {
                    None
                };
                if let Some(b) = hit {
                    lo = lo.min(b);
                    hi = hi.max(b);
                }
            }
            let half = 0.5 * (hi - lo).max(0.0);
            pts.push(u * a + v * half);
            pts.push(u * a - v * half);
        }
        ConvexPolygon::from_points(&pts)
    }

    /// Center of symmetry when the body is centrally symmetric within
    /// `tol · diameter`.
    pub fn center_of_symmetry(&self, tol: f64) -> Option<Point> {
        let n = self.vertices.len();
        if n % 2 != 0 {
            return None;
        }
        let h = n / 2;
        let d = self.diameter().0;
        let c2 = self.centroid * 2.0;
        let mut acc = Point::default();
        for i in 0..n {
            let s = self.vertices[i] + self.vertices[(i + h) % n];
            if (s - c2).norm() > tol * d {
                return None;
            }
            acc = acc + s;
        }
        Some(acc * (0.5 / n as f64))
    }
}

/// Center of symmetry of `p`, or `None`.
pub fn is_centrally_symmetric(p: &ConvexPolygon, tol: f64) -> Option<Point> {
    p.center_of_symmetry(tol)
}

fn push_distinct(out: &mut Vec<Point>, p: Point, perimeter: f64) {
    if out.last().map_or(true, |l| l.dist(p) > EPS_GEO * perimeter) {
        out.push(p);
    }
}

fn bbox_diagonal(pts: &[Point]) -> f64 {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for v in pts {
        lo.x = lo.x.min(v.x);
        lo.y = lo.y.min(v.y);
        hi.x = hi.x.max(v.x);
        hi.y = hi.y.max(v.y);
    }
    lo.dist(hi)
}

/// A segment with both endpoints on the boundary, addressed by boundary
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "ChordRepr", into = "ChordRepr")]
pub struct Chord {
    pub s: f64,
    pub t: f64,
    pub p: Point,
    pub q: Point,
    pub direction: Point,
}

#[derive(Serialize, Deserialize)]
struct ChordRepr {
    s: f64,
    t: f64,
    p: Point,
    q: Point,
}

impl From<ChordRepr> for Chord {
    fn from(r: ChordRepr) -> Self {
        Chord::from_parts(r.s, r.t, r.p, r.q)
    }
}

impl From<Chord> for ChordRepr {
    fn from(c: Chord) -> Self {
        ChordRepr {
            s: c.s,
            t: c.t,
            p: c.p,
            q: c.q,
        }
    }
}

impl Chord {
    pub fn new(poly: &ConvexPolygon, s: f64, t: f64) -> Result<Self> {
        let s = s.rem_euclid(1.0);
        let t = t.rem_euclid(1.0);
        let p = poly.boundary_point(s);
        let q = poly.boundary_point(t);
        if p.dist(q) <= EPS_GEO * poly.perimeter() {
            return Err(Error::InvalidChord(format!(
                "endpoints coincide (s = {s}, t = {t})"
            )));
        }
        Ok(Self::from_parts(s, t, p, q))
    }

    pub(crate) fn from_parts(s: f64, t: f64, p: Point, q: Point) -> Self {
        let d = q - p;
        let n = d.norm();
        let direction = if n > 0.0 { d * (1.0 / n) } else { Point::new(1.0, 0.0) };
        Self {
            s,
            t,
            p,
            q,
            direction,
        }
    }

    pub fn length(&self) -> f64 {
        self.p.dist(self.q)
    }

    /// Same chord with endpoints swapped.
    pub fn reversed(&self) -> Self {
        Self::from_parts(self.t, self.s, self.q, self.p)
    }
}

/// One side of a chord cut: a convex polygon, or the chord segment itself when
/// the side has (numerically) no area.
#[derive(Debug, Clone, PartialEq)]
pub enum Piece {
    Polygon(ConvexPolygon),
    Segment(Point, Point),
}

impl Piece {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Piece::Segment(..))
    }

    pub fn area(&self) -> f64 {
        match self {
            Piece::Polygon(p) => p.area(),
            Piece::Segment(..) => 0.0,
        }
    }

    pub fn diameter(&self) -> f64 {
        match self {
            Piece::Polygon(p) => p.diameter().0,
            Piece::Segment(a, b) => a.dist(*b),
        }
    }

    pub fn width(&self) -> f64 {
        match self {
            Piece::Polygon(p) => p.width().0,
            Piece::Segment(..) => 0.0,
        }
    }

    pub fn points(&self) -> Vec<Point> {
        match self {
            Piece::Polygon(p) => p.vertices().to_vec(),
            Piece::Segment(a, b) => vec![*a, *b],
        }
    }
}

/// A chord together with the two pieces it cuts. `piece1` is the boundary run
/// from `chord.s` to `chord.t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bisection {
    pub chord: Chord,
    pub piece1: Piece,
    pub piece2: Piece,
    pub parent_area: f64,
}

/// Cuts `poly` along `chord`.
pub fn clip_by_chord(poly: &ConvexPolygon, chord: &Chord) -> Result<Bisection> {
    if chord.p.dist(chord.q) <= EPS_GEO * poly.perimeter() {
        return Err(Error::InvalidChord("endpoints coincide".into()));
    }
    let mut buf = Vec::new();
    let floor = EPS_GEO * poly.area();
    let mut piece = |s: f64, t: f64, p: Point, q: Point| {
        poly.chain_into(s, t, &mut buf);
        if signed_area(&buf).abs() <= floor {
            return Piece::Segment(p, q);
        }
        match ConvexPolygon::from_points(&buf) {
            Ok(pp) => Piece::Polygon(pp),
            Err(_) => Piece::Segment(p, q),
        }
    };
    let piece1 = piece(chord.s, chord.t, chord.p, chord.q);
    let piece2 = piece(chord.t, chord.s, chord.q, chord.p);
    Ok(Bisection {
        chord: *chord,
        piece1,
        piece2,
        parent_area: poly.area(),
    })
}

/// Affine map `x ↦ A x + b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineMap {
    pub matrix: [[f64; 2]; 2],
    pub translation: Point,
}

impl AffineMap {
    pub fn identity() -> Self {
        Self::linear([[1.0, 0.0], [0.0, 1.0]])
    }

    pub fn linear(matrix: [[f64; 2]; 2]) -> Self {
        Self {
            matrix,
            translation: Point::default(),
        }
    }

    pub fn rotation(alpha: f64) -> Self {
        let (s, c) = alpha.sin_cos();
        Self::linear([[c, -s], [s, c]])
    }

    pub fn scaling(sx: f64, sy: f64) -> Self {
        Self::linear([[sx, 0.0], [0.0, sy]])
    }

    /// Horizontal shear `(x, y) ↦ (x + k y, y)`.
    pub fn shear(k: f64) -> Self {
        Self::linear([[1.0, k], [0.0, 1.0]])
    }

    /// Symmetric unimodular map `R(α)ᵀ · diag(r, 1/r) · R(α)`.
    pub fn unimodular(r: f64, alpha: f64) -> Self {
        let (s, c) = alpha.sin_cos();
        let ir = 1.0 / r;
        // Rᵀ D R with R = [[c, -s], [s, c]]
        let a = c * c * r + s * s * ir;
        let b = c * s * (ir - r);
        let d = s * s * r + c * c * ir;
        Self::linear([[a, b], [b, d]])
    }

    pub fn det(&self) -> f64 {
        let m = self.matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn apply(&self, p: Point) -> Point {
        let m = self.matrix;
        Point::new(
            m[0][0] * p.x + m[0][1] * p.y + self.translation.x,
            m[1][0] * p.x + m[1][1] * p.y + self.translation.y,
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let a = self.matrix;
        let b = other.matrix;
        let mut m = [[0.0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        AffineMap {
            matrix: m,
            translation: self.apply(other.translation),
        }
    }
}

/// Image of `poly` under `m`, canonicalized.
pub fn affine_apply(m: &AffineMap, poly: &ConvexPolygon) -> Result<ConvexPolygon> {
    let det = m.det();
    if !(det.abs() > EPS_GEO) {
        return Err(Error::SingularMap(det));
    }
    let pts: Vec<Point> = poly.vertices().iter().map(|&p| m.apply(p)).collect();
    ConvexPolygon::from_points(&pts)
}
