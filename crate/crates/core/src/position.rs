//! Direction sets, position conditions and affine position search.
//!
//! Two direction sets drive the position conditions: the diametrical
//! directions `V` (segments of full diameter inside the body) and the
//! bisector directions `B` (chords of balanced minimizing bisections).
//! Directions are lines through the origin, stored as angles in `[0, π)`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bisect::{balance_chord, min_bisect_diameter, Functional, SearchOptions};
use crate::error::{Error, Result};
use crate::geom::{affine_apply, line_angle, AffineMap, Chord, ConvexPolygon, Piece, Point, clip_by_chord};

/// Angular tolerance under which two stored directions are the same.
pub const ANGLE_MERGE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DirectionSource {
    Diametrical,
    Bisector,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectionSet {
    pub angles: Vec<f64>,
    pub source: DirectionSource,
    pub tol: f64,
}

impl DirectionSet {
    /// Folds to `[0, π)`, sorts, and merges angles closer than `merge`
    /// (cyclically).
    pub fn with_merge(angles: impl IntoIterator<Item = f64>, source: DirectionSource, tol: f64, merge: f64) -> Self {
        let mut a: Vec<f64> = angles
            .into_iter()
            .map(|x| {
                let f = x.rem_euclid(PI);
                if f >= PI { 0.0 } else { f }
            })
            .collect();
        a.sort_by(f64::total_cmp);
        let mut out: Vec<f64> = Vec::with_capacity(a.len());
        for x in a {
            if out.last().map_or(true, |&l| x - l > merge) {
                out.push(x);
            }
        }
        if out.len() > 1 && out[0] + PI - out[out.len() - 1] <= merge {
            out.pop();
        }
        Self { angles: out, source, tol }
    }

    pub fn new(angles: impl IntoIterator<Item = f64>, source: DirectionSource, tol: f64) -> Self {
        Self::with_merge(angles, source, tol, ANGLE_MERGE)
    }

    pub fn directions(&self) -> Vec<Point> {
        self.angles.iter().map(|&a| Point::polar(a)).collect()
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// Union of two sets, keeping `self`'s source and the larger tolerance.
    pub fn union(&self, other: &DirectionSet) -> DirectionSet {
        DirectionSet::new(
            self.angles.iter().chain(&other.angles).copied(),
            self.source,
            self.tol.max(other.tol),
        )
    }
}

fn point_directions(pts: &[Point], tol: f64) -> Vec<f64> {
    let mut d2: f64 = 0.0;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            d2 = d2.max((*a - *b).norm2());
        }
    }
    let cut = (1.0 - tol) * (1.0 - tol) * d2;
    let mut out = Vec::new();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            let v = *b - *a;
            if v.norm2() >= cut {
                out.push(line_angle(v));
            }
        }
    }
    out
}

/// Directions of all vertex pairs at distance at least `(1 - tol)` times the
/// diameter.
pub fn diametrical_directions(poly: &ConvexPolygon, tol: f64) -> DirectionSet {
    DirectionSet::new(point_directions(poly.vertices(), tol), DirectionSource::Diametrical, tol)
}

/// Diametrical directions of a bisection piece; a segment has its own
/// direction.
pub fn piece_directions(piece: &Piece, tol: f64) -> DirectionSet {
    match piece {
        Piece::Polygon(p) => diametrical_directions(p, tol),
        Piece::Segment(a, b) => DirectionSet::new([line_angle(*b - *a)], DirectionSource::Diametrical, tol),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverageMode {
    /// Every line is within π/4 of some direction (`|u·v| >= 1/√2`).
    AtLeast,
    /// Every line is at least π/4 away from some direction (`|u·v| <= 1/√2`).
    AtMost,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coverage {
    pub holds: bool,
    /// Largest angular gap between consecutive directions (after the
    /// rotation by π/2 for [`CoverageMode::AtMost`]).
    pub max_gap: f64,
    /// A violating unit vector when the condition fails.
    pub witness: Option<Point>,
}

/// Exact π/4-arc cover test with the default slack of `1e-9` rad.
pub fn coverage_check(v: &DirectionSet, mode: CoverageMode) -> Result<Coverage> {
    coverage_check_with_slack(v, mode, 1e-9)
}

/// Arcs of half-width π/4 around each direction cover the projective circle
/// iff no gap between consecutive directions exceeds π/2 (+ `slack`).
pub fn coverage_check_with_slack(v: &DirectionSet, mode: CoverageMode, slack: f64) -> Result<Coverage> {
    if v.is_empty() {
        return Err(Error::EmptySet);
    }
    let shift = match mode {
        CoverageMode::AtLeast => 0.0,
        CoverageMode::AtMost => FRAC_PI_2,
    };
    let mut a: Vec<f64> = v.angles.iter().map(|x| (x + shift).rem_euclid(PI)).collect();
    a.sort_by(f64::total_cmp);
    let mut best = (a[0] + PI - a[a.len() - 1], a[a.len() - 1]);
    for w in a.windows(2) {
        let g = w[1] - w[0];
        if g > best.0 {
            best = (g, w[0]);
        }
    }
    let (gap, start) = best;
    let holds = gap <= FRAC_PI_2 + slack;
    Ok(Coverage {
        holds,
        max_gap: gap,
        witness: (!holds).then(|| Point::polar((start + 0.5 * gap).rem_euclid(PI))),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub directions: [Point; 3],
    pub weights: [f64; 3],
    pub residual: f64,
}

/// Entries `(xx, xy, yy)` of `u uᵀ`.
fn outer(u: Point) -> [f64; 3] {
    [u.x * u.x, u.x * u.y, u.y * u.y]
}

fn residual(cols: &[[f64; 3]], lam: &[f64]) -> f64 {
    let mut r = [-1.0, 0.0, -1.0];
    for (c, l) in cols.iter().zip(lam) {
        for k in 0..3 {
            r[k] += l * c[k];
        }
    }
    (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt()
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Looks for `Σ λᵢ uᵢuᵢᵀ = I` with `λᵢ >= 0` over pairs, then triples, of
/// directions in `v`. A pair `(uᵢ, uⱼ)` is reported as `(uᵢ, uⱼ, uⱼ)` with
/// weights `(a, b, 0)`.
pub fn decomposition_check(v: &DirectionSet) -> Result<Option<Decomposition>> {
    if v.is_empty() {
        return Err(Error::EmptySet);
    }
    let dirs = v.directions();
    let cols: Vec<[f64; 3]> = dirs.iter().map(|&u| outer(u)).collect();
    let accept = |lam: &[f64]| lam.iter().all(|&l| l >= -1e-12);
    for i in 0..dirs.len() {
        for j in i + 1..dirs.len() {
            let (a, b) = (cols[i], cols[j]);
            // Normal equations of the 3×2 least-squares problem.
            let g = [
                [a[0] * a[0] + a[1] * a[1] + a[2] * a[2], a[0] * b[0] + a[1] * b[1] + a[2] * b[2]],
                [0.0, b[0] * b[0] + b[1] * b[1] + b[2] * b[2]],
            ];
            let (g00, g01, g11) = (g[0][0], g[0][1], g[1][1]);
            let det = g00 * g11 - g01 * g01;
            if det.abs() < 1e-14 {
                continue;
            }
            let (ra, rb) = (a[0] + a[2], b[0] + b[2]);
            let la = (g11 * ra - g01 * rb) / det;
            let lb = (g00 * rb - g01 * ra) / det;
            let res = residual(&[a, b], &[la, lb]);
            if res < 1e-9 && accept(&[la, lb]) {
                return Ok(Some(Decomposition {
                    directions: [dirs[i], dirs[j], dirs[j]],
                    weights: [la.max(0.0), lb.max(0.0), 0.0],
                    residual: res,
                }));
            }
        }
    }
    for i in 0..dirs.len() {
        for j in i + 1..dirs.len() {
            for k in j + 1..dirs.len() {
                let m = [
                    [cols[i][0], cols[j][0], cols[k][0]],
                    [cols[i][1], cols[j][1], cols[k][1]],
                    [cols[i][2], cols[j][2], cols[k][2]],
                ];
                let d = det3(m);
                if d.abs() < 1e-14 {
                    continue;
                }
                let rhs = [1.0, 0.0, 1.0];
                let mut lam = [0.0; 3];
                for (c, l) in lam.iter_mut().enumerate() {
                    let mut mc = m;
                    for r in 0..3 {
                        mc[r][c] = rhs[r];
                    }
                    *l = det3(mc) / d;
                }
                let res = residual(&[cols[i], cols[j], cols[k]], &lam);
                if res < 1e-9 && accept(&lam) {
                    return Ok(Some(Decomposition {
                        directions: [dirs[i], dirs[j], dirs[k]],
                        weights: lam.map(|l| l.max(0.0)),
                        residual: res,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// A balanced minimizing bisection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bisector {
    pub chord: Chord,
    pub piece_values: [f64; 2],
    /// The chord runs along an edge of full diameter, cutting off a segment.
    pub degenerate: bool,
}

/// Relative gap under which `D_B` is taken to equal the diameter.
const FULL_DIAMETER_REL: f64 = 1e-7;

/// Balanced minimizing bisections and the `D_B` they attain.
///
/// When `D_B` equals the diameter every bisection is minimizing; the
/// bisectors reported are then the edges of full diameter, each cutting off
/// a degenerate piece.
pub fn bisectors(poly: &ConvexPolygon, opts: &SearchOptions) -> (f64, Vec<Bisector>) {
    let d = poly.diameter().0;
    let res = min_bisect_diameter(poly, opts);
    let n = poly.len();
    if res.value >= d * (1.0 - FULL_DIAMETER_REL) {
        let mut out = Vec::new();
        for i in 0..n {
            let (a, b) = (poly.vertex(i), poly.vertex(i + 1));
            if a.dist(b) >= d * (1.0 - 1e-9) {
                let s = poly.param_of_point(a);
                let t = poly.param_of_point(b);
                if let Ok(chord) = Chord::new(poly, s, t) {
                    out.push(Bisector {
                        chord,
                        piece_values: [d, d],
                        degenerate: true,
                    });
                }
            }
        }
        if !out.is_empty() {
            return (d, out);
        }
    }
    let mut d_b = res.value;
    let mut found: Vec<Bisector> = Vec::new();
    for c in &res.near_optima {
        let b = balance_chord(poly, c, Functional::Diameter);
        if b.no_balance {
            continue;
        }
        d_b = d_b.min(b.value());
        found.push(Bisector {
            chord: b.chord,
            piece_values: b.piece_values,
            degenerate: false,
        });
    }
    let tol = opts.near_tol.max(1e-9);
    let same = 1e-6 * poly.perimeter();
    let mut out: Vec<Bisector> = Vec::new();
    for b in found {
        let ok = b.piece_values.iter().all(|&v| (v - d_b).abs() <= tol * d_b);
        let dup = out.iter().any(|o| {
            (o.chord.p.dist(b.chord.p) <= same && o.chord.q.dist(b.chord.q) <= same)
                || (o.chord.p.dist(b.chord.q) <= same && o.chord.q.dist(b.chord.p) <= same)
        });
        if ok && !dup {
            out.push(b);
        }
    }
    (d_b, out)
}

/// Directions of the balanced minimizing chords.
pub fn bisector_directions(poly: &ConvexPolygon, opts: &SearchOptions) -> DirectionSet {
    let (_, list) = bisectors(poly, opts);
    DirectionSet::with_merge(
        list.iter().map(|b| line_angle(b.chord.direction)),
        DirectionSource::Bisector,
        opts.near_tol,
        1e-6,
    )
}

/// Per-bisector outcome of [`behrend_bisecting_check`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BisectorCheck {
    pub bisector: Bisector,
    /// Diametrical directions of the two pieces combined.
    pub union: DirectionSet,
    pub at_least: Coverage,
    pub at_most: Coverage,
    /// Two directions of `union` with the smallest `|u₁·u₂|`, and that value.
    pub closest_to_orthogonal: Option<(f64, f64, f64)>,
    /// Some pair of `union` has `|u₁·u₂| <= 1/2`.
    pub angle_pair_ok: bool,
    /// Each non-degenerate piece passes the π/4 cover test on its own.
    pub pieces_in_behrend_position: bool,
    /// Both cover tests pass.
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BehrendBisectingReport {
    pub d_b: f64,
    pub checks: Vec<BisectorCheck>,
    pub no_bisector_found: bool,
    /// Every bisector passes both cover tests.
    pub pass: bool,
}

/// Attainment tolerance for piece direction sets cut by computed chords.
pub const PIECE_DIRECTION_TOL: f64 = 1e-6;

/// Necessary conditions for a maximizer of `A / D_B²`: for each bisector,
/// the pieces' diametrical directions must cover the circle in both π/4
/// senses.
pub fn behrend_bisecting_check(poly: &ConvexPolygon, opts: &SearchOptions) -> BehrendBisectingReport {
    let (d_b, list) = bisectors(poly, opts);
    let slack = 1e-6;
    let checks: Vec<BisectorCheck> = list
        .into_iter()
        .filter_map(|b| {
            let cut = clip_by_chord(poly, &b.chord).ok()?;
            let v1 = piece_directions(&cut.piece1, PIECE_DIRECTION_TOL);
            let v2 = piece_directions(&cut.piece2, PIECE_DIRECTION_TOL);
            let union = v1.union(&v2);
            let at_least = coverage_check_with_slack(&union, CoverageMode::AtLeast, slack).ok()?;
            let at_most = coverage_check_with_slack(&union, CoverageMode::AtMost, slack).ok()?;
            let mut closest: Option<(f64, f64, f64)> = None;
            for (i, &a) in union.angles.iter().enumerate() {
                for &c in &union.angles[i + 1..] {
                    let dot = (a - c).cos().abs();
                    if closest.map_or(true, |x| dot < x.2) {
                        closest = Some((a, c, dot));
                    }
                }
            }
            let angle_pair_ok = closest.map_or(false, |x| x.2 <= 0.5 + 1e-9);
            let pieces_in_behrend_position = [(&cut.piece1, &v1), (&cut.piece2, &v2)]
                .iter()
                .filter(|(p, _)| !p.is_degenerate())
                .all(|(_, v)| {
                    coverage_check_with_slack(v, CoverageMode::AtLeast, slack).map_or(false, |c| c.holds)
                });
            Some(BisectorCheck {
                bisector: b,
                union,
                at_least,
                at_most,
                closest_to_orthogonal: closest,
                angle_pair_ok,
                pieces_in_behrend_position,
                pass: at_least.holds && at_most.holds,
            })
        })
        .collect();
    let no_bisector_found = checks.is_empty();
    BehrendBisectingReport {
        d_b,
        pass: !no_bisector_found && checks.iter().all(|c| c.pass),
        checks,
        no_bisector_found,
    }
}

/// Scale-invariant quotients optimized over affine positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quotient {
    #[serde(rename = "A/D^2")]
    AreaDiameter,
    #[serde(rename = "A/D_B^2")]
    AreaBisectDiameter,
    #[serde(rename = "A/w^2")]
    AreaWidth,
    #[serde(rename = "A/w_B^2")]
    AreaBisectWidth,
}

impl Quotient {
    /// The sense in which the quotient has a meaningful optimal position.
    pub fn natural_sense(self) -> Sense {
        match self {
            Quotient::AreaDiameter | Quotient::AreaBisectDiameter => Sense::Max,
            Quotient::AreaWidth | Quotient::AreaBisectWidth => Sense::Min,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Quotient::AreaDiameter => "A/D^2",
            Quotient::AreaBisectDiameter => "A/D_B^2",
            Quotient::AreaWidth => "A/w^2",
            Quotient::AreaBisectWidth => "A/w_B^2",
        }
    }

    /// Value at `poly`; `search` only matters for `A/D_B²`.
    pub fn eval(self, poly: &ConvexPolygon, search: &SearchOptions) -> f64 {
        let a = poly.area();
        match self {
            Quotient::AreaDiameter => a / poly.diameter().0.powi(2),
            Quotient::AreaBisectDiameter => a / min_bisect_diameter(poly, search).value.powi(2),
            Quotient::AreaWidth => a / poly.width().0.powi(2),
            Quotient::AreaBisectWidth => a / (0.5 * poly.width().0).powi(2),
        }
    }
}

impl std::str::FromStr for Quotient {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "A/D^2" | "A/D2" | "diameter" => Ok(Quotient::AreaDiameter),
            "A/D_B^2" | "A/DB2" | "bisect-diameter" => Ok(Quotient::AreaBisectDiameter),
            "A/w^2" | "A/w2" | "width" => Ok(Quotient::AreaWidth),
            "A/w_B^2" | "A/wB2" | "bisect-width" => Ok(Quotient::AreaBisectWidth),
            _ => Err(format!("unknown quotient `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Max,
    Min,
}

impl std::str::FromStr for Sense {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "max" => Ok(Sense::Max),
            "min" => Ok(Sense::Min),
            _ => Err(format!("unknown sense `{s}` (expected max or min)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PositionOptions {
    /// Largest stretch factor `r` on the grid.
    pub r_max: f64,
    /// Log-spaced grid points in `[1, r_max]`.
    pub r_steps: usize,
    /// Grid points in `[0, π)`.
    pub alpha_steps: usize,
    /// Pattern search stops once both parameter steps fall below this.
    pub tol: f64,
    /// Inner `D_B` search during the grid scan and pattern search. The
    /// default skips the direction polish, which only moves `D_B` by about
    /// `1e-7` relative.
    pub inner: SearchOptions,
    /// `D_B` search for the reported quotient.
    pub outer: SearchOptions,
}

impl Default for PositionOptions {
    fn default() -> Self {
        Self {
            r_max: 16.0,
            r_steps: 33,
            alpha_steps: 64,
            tol: 1e-4,
            inner: SearchOptions {
                polish: false,
                ..SearchOptions::reduced()
            },
            outer: SearchOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub r: f64,
    pub alpha: f64,
    pub quotient: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PositionReport {
    pub matrix: [[f64; 2]; 2],
    pub r: f64,
    pub alpha: f64,
    pub quotient: f64,
    pub functional: Quotient,
    pub sense: Sense,
    pub trace: Vec<TraceStep>,
}

impl PositionReport {
    pub fn map(&self) -> AffineMap {
        AffineMap::linear(self.matrix)
    }
}

const RING: usize = 32;

/// Searches the stretch family `M(r, α) = R(α)ᵀ diag(r, 1/r) R(α)` for the
/// best value of `functional`.
///
/// Rigid motions, translations and dilations leave every quotient
/// unchanged, so this family reaches every affine class representative.
pub fn optimize_position(
    poly: &ConvexPolygon,
    functional: Quotient,
    sense: Sense,
    opts: &PositionOptions,
) -> Result<PositionReport> {
    if sense != functional.natural_sense() {
        return Err(Error::Inconsistent(format!(
            "{} is optimized with sense {:?}",
            functional.label(),
            functional.natural_sense()
        )));
    }
    if !(opts.r_max > 1.0) || opts.r_steps < 2 || opts.alpha_steps < 1 {
        return Err(Error::Domain("position grid needs r_max > 1 and at least 2×1 points".into()));
    }
    let sign = match sense {
        Sense::Max => -1.0,
        Sense::Min => 1.0,
    };
    // Minimized objective in (ln r, α).
    let objective = |rho: f64, alpha: f64| -> f64 {
        let m = AffineMap::unimodular(rho.exp(), alpha);
        match affine_apply(&m, poly) {
            Ok(img) => sign * functional.eval(&img, &opts.inner),
            Err(_) => f64::INFINITY,
        }
    };
    let rho_max = opts.r_max.ln();
    let d_rho = rho_max / (opts.r_steps - 1) as f64;
    let d_alpha = PI / opts.alpha_steps as f64;
    let cells: Vec<(usize, usize)> = (0..opts.r_steps)
        .flat_map(|i| (0..opts.alpha_steps).map(move |j| (i, j)))
        .collect();
    let values: Vec<f64> = cells
        .par_iter()
        .map(|&(i, j)| {
            if i == 0 && j > 0 {
                // r = 1 is the identity for every α.
                f64::INFINITY
            } else {
                objective(i as f64 * d_rho, j as f64 * d_alpha)
            }
        })
        .collect();
    let mut best_k = 0;
    for (k, v) in values.iter().enumerate() {
        if *v < values[best_k] {
            best_k = k;
        }
    }
    let (bi, bj) = cells[best_k];
    let (mut rho, mut alpha, mut val) = (bi as f64 * d_rho, bj as f64 * d_alpha, values[best_k]);
    let mut trace = vec![TraceStep {
        r: rho.exp(),
        alpha,
        quotient: sign * val,
    }];
    let normalize = |rho: f64, alpha: f64| -> (f64, f64) {
        let (rho, alpha) = if rho < 0.0 { (-rho, alpha + FRAC_PI_2) } else { (rho, alpha) };
        (rho.min(rho_max), alpha.rem_euclid(PI))
    };
    let tol = opts.tol;
    // Compass directions first; a ring of extra directions before each step
    // reduction gets the search along ridges where the quotient has a kink.
    let compass = [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0)];
    let ring: Vec<(f64, f64)> = (0..RING)
        .filter(|k| k % 4 != 0)
        .map(|k| {
            let a = 2.0 * PI * k as f64 / RING as f64;
            (a.cos(), a.sin())
        })
        .collect();
    let (mut h_rho, mut h_alpha) = (d_rho, d_alpha);
    let mut iters = 0;
    while (h_rho >= tol || h_alpha >= tol) && iters < 100_000 {
        iters += 1;
        let mut moved = false;
        for &(dr, da) in compass.iter().chain(&ring) {
            let (nr, na) = normalize(rho + dr * h_rho, alpha + da * h_alpha);
            let nv = objective(nr, na);
            if nv < val {
                (rho, alpha, val) = (nr, na, nv);
                trace.push(TraceStep {
                    r: rho.exp(),
                    alpha,
                    quotient: sign * val,
                });
                moved = true;
                break;
            }
        }
        if !moved {
            if h_rho >= tol {
                h_rho *= 0.5;
            }
            if h_alpha >= tol {
                h_alpha *= 0.5;
            }
        }
    }
    if functional != Quotient::AreaBisectDiameter {
        if let Some((r, a)) = exact_finish(poly, functional, rho.exp(), alpha) {
            let (nr, na) = normalize(r.ln(), a);
            let nv = objective(nr, na);
            if nv < val {
                (rho, alpha, val) = (nr, na, nv);
                trace.push(TraceStep {
                    r: rho.exp(),
                    alpha,
                    quotient: sign * val,
                });
            }
        }
    }
    let map = AffineMap::unimodular(rho.exp(), alpha);
    let image = affine_apply(&map, poly)?;
    Ok(PositionReport {
        matrix: map.matrix,
        r: rho.exp(),
        alpha,
        quotient: functional.eval(&image, &opts.outer),
        functional,
        sense,
        trace,
    })
}

/// Constraints `c · vᵀSv` whose maximum over the list is `D²` (pairs of
/// vertices) or `1/w²` (edges, with `c = 1/H²` for the edge's affine
/// height `H`) of the image under `S^{1/2}`.
fn quadratic_constraints(poly: &ConvexPolygon, functional: Quotient) -> Vec<(Point, f64)> {
    let v = poly.vertices();
    let n = v.len();
    match functional {
        Quotient::AreaDiameter => {
            let mut out = Vec::with_capacity(n * (n - 1) / 2);
            for i in 0..n {
                for j in i + 1..n {
                    out.push((v[j] - v[i], 1.0));
                }
            }
            out
        }
        _ => (0..n)
            .map(|i| {
                let e = poly.vertex(i + 1) - v[i];
                let h = v.iter().map(|&p| e.cross(p - v[i])).fold(0.0, f64::max);
                (e, 1.0 / (h * h))
            })
            .collect(),
    }
}

fn quad(s: [f64; 3], v: Point) -> f64 {
    s[0] * v.x * v.x + 2.0 * s[1] * v.x * v.y + s[2] * v.y * v.y
}

/// `(r, α)` with `M(r, α)² = S` for symmetric `S = [[a, b], [b, c]]` of
/// determinant 1.
fn stretch_of(s: [f64; 3]) -> (f64, f64) {
    let [a, b, c] = s;
    let half_tr = 0.5 * (a + c);
    let disc = (0.25 * (a - c) * (a - c) + b * b).sqrt();
    let lmax = half_tr + disc;
    // Eigenvector of the larger eigenvalue is (cos α, -sin α); take the
    // better conditioned of the two row forms.
    let ev = if a >= c { Point::new(lmax - c, b) } else { Point::new(b, lmax - a) };
    let ev = if ev.norm2() == 0.0 { Point::new(1.0, 0.0) } else { ev };
    (lmax.sqrt(), (-ev.y.atan2(ev.x)).rem_euclid(PI) + 0.0)
}

/// Closed-form minimizer of the largest of two or three forms over
/// `det S = 1`: the value `t` and `S`.
fn equalize(set: &[(Point, f64)]) -> Option<(f64, [f64; 3])> {
    match *set {
        [(v1, c1), (v2, c2)] => {
            let d = v1.cross(v2);
            if d.abs() < 1e-14 * v1.norm() * v2.norm() {
                return None;
            }
            let t = d.abs() * (c1 * c2).sqrt();
            // S = V⁻ᵀ diag(t/c1, t/c2) V⁻¹ with V = [v1 v2].
            let inv = [[v2.y / d, -v2.x / d], [-v1.y / d, v1.x / d]];
            let (p, q) = (t / c1, t / c2);
            Some((
                t,
                [
                    p * inv[0][0] * inv[0][0] + q * inv[1][0] * inv[1][0],
                    p * inv[0][0] * inv[0][1] + q * inv[1][0] * inv[1][1],
                    p * inv[0][1] * inv[0][1] + q * inv[1][1] * inv[1][1],
                ],
            ))
        }
        [a, b, c] => {
            let rows = [a, b, c].map(|(v, c)| [c * v.x * v.x, 2.0 * c * v.x * v.y, c * v.y * v.y]);
            let det = det3(rows);
            if det.abs() < 1e-14 {
                return None;
            }
            let mut sol = [0.0; 3];
            for (col, x) in sol.iter_mut().enumerate() {
                let mut mc = rows;
                for row in mc.iter_mut() {
                    row[col] = 1.0;
                }
                *x = det3(mc) / det;
            }
            let ds = sol[0] * sol[2] - sol[1] * sol[1];
            (ds > 0.0 && sol[0] > 0.0).then(|| {
                let t = 1.0 / ds.sqrt();
                (t, sol.map(|x| x * t))
            })
        }
        _ => None,
    }
}

fn worst(cons: &[(Point, f64)], s: [f64; 3]) -> (f64, usize) {
    cons.iter()
        .enumerate()
        .map(|(k, &(v, c))| (c * quad(s, v), k))
        .fold((f64::NEG_INFINITY, 0), |b, x| if x.0 > b.0 { x } else { b })
}

/// Exact optimum of the cheap quotients, started from `(r, α)`.
///
/// With `S = M²`, both `D²` and `1/w²` of the image are maxima of linear
/// forms in `S`, so the best position minimizes a convex function over
/// `det S = 1`. The minimum is fixed by two or three forms. An exchange
/// loop solves the problem over a working set of forms in closed form and
/// adds the most violated form until none is violated.
fn exact_finish(poly: &ConvexPolygon, functional: Quotient, r: f64, alpha: f64) -> Option<(f64, f64)> {
    let cons = quadratic_constraints(poly, functional);
    let m = AffineMap::unimodular(r, alpha).matrix;
    let s0 = [
        m[0][0] * m[0][0] + m[0][1] * m[0][1],
        m[0][0] * m[0][1] + m[0][1] * m[1][1],
        m[0][1] * m[0][1] + m[1][1] * m[1][1],
    ];
    let mut order: Vec<(f64, usize)> = cons.iter().enumerate().map(|(k, &(v, c))| (c * quad(s0, v), k)).collect();
    order.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    // Seed with the largest forms of distinct directions.
    let mut work: Vec<usize> = Vec::new();
    for &(_, k) in &order {
        let dir = line_angle(cons[k].0);
        if work.iter().all(|&w| line_gap(line_angle(cons[w].0), dir) > 1e-9) {
            work.push(k);
            if work.len() == 3 {
                break;
            }
        }
    }
    let mut best: Option<[f64; 3]> = None;
    for _ in 0..200 {
        let set: Vec<(Point, f64)> = work.iter().map(|&k| cons[k]).collect();
        let mut sub: Option<(f64, [f64; 3])> = None;
        let mut consider = |idx: &[usize]| {
            let pick: Vec<(Point, f64)> = idx.iter().map(|&k| set[k]).collect();
            if let Some((t, s)) = equalize(&pick) {
                if sub.map_or(true, |b| t < b.0) && worst(&set, s).0 <= t * (1.0 + 1e-12) {
                    sub = Some((t, s));
                }
            }
        };
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                consider(&[i, j]);
                for k in j + 1..set.len() {
                    consider(&[i, j, k]);
                }
            }
        }
        let (t, s) = sub?;
        best = Some(s);
        let (f, k) = worst(&cons, s);
        if f <= t * (1.0 + 1e-10) || work.contains(&k) {
            break;
        }
        work.push(k);
    }
    best.map(stretch_of)
}

/// Position of the minimizing chord along the legs of the isosceles
/// triangle with apex angle `theta`.
pub fn lambda_m(theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(Error::Domain(format!("theta must lie in (0, π/2), got {theta}")));
    }
    let t2 = ((PI - theta) / 2.0).tan().powi(2);
    Ok((1.0 + t2) / (2.0 * (t2 - 1.0)))
}

/// Apex angle below which the balanced horizontal chord beats the base:
/// `cos θ · sin(θ/2) = 1/4` at `θ = π/5`.
pub const ISOSCELES_BASE_CROSSOVER: f64 = PI / 5.0;

/// `D_B` of the isosceles triangle with apex angle `theta`, base `(±1, 0)`.
///
/// For `θ <= π/3` both base vertices share a piece, so `D_B >= 2`; the
/// balanced horizontal chord at `λ_m` attains `λ_m · leg`, which exceeds the
/// base only for `θ <= π/5`. For `θ >= π/3` the apex-to-midpoint chord
/// attains the leg length, and some piece always holds two vertices.
pub fn isosceles_bisect_diameter(theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::Domain(format!("theta must lie in (0, π), got {theta}")));
    }
    let leg = 1.0 / (0.5 * theta).sin();
    Ok(if theta >= PI / 3.0 { leg } else { (lambda_m(theta)? * leg).max(2.0) })
}

/// `A / D_B²` of the isosceles triangle with apex angle `theta`.
///
/// Equals `2cos²θ sinθ` for `θ <= π/5`, `cot(θ/2) / 4` on `[π/5, π/3]` and
/// `sin θ / 2` for `θ >= π/3`.
pub fn isosceles_quotient(theta: f64) -> Result<f64> {
    let d_b = isosceles_bisect_diameter(theta)?;
    Ok(1.0 / (0.5 * theta).tan() / (d_b * d_b))
}

/// Area of the region between the unit disks about `(±b, 0)` and the lines
/// `x = ±b`.
pub fn area_profile(b: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&b) {
        return Err(Error::Domain(format!("b must lie in [0, 1/2], got {b}")));
    }
    let r4 = (1.0 - 4.0 * b * b).max(0.0).sqrt();
    let r1 = (1.0 - b * b).sqrt();
    Ok(2.0 * (2.0 * b * r4 - b * r1 + (2.0 * b).atan2(r4) - (b / r1).atan()))
}

/// Derivative of [`area_profile`], `8√(1-4b²) - 4√(1-b²)`.
pub fn area_profile_slope(b: f64) -> f64 {
    8.0 * (1.0 - 4.0 * b * b).max(0.0).sqrt() - 4.0 * (1.0 - b * b).sqrt()
}

/// Maximizer of [`area_profile`] on `[0, 1/2]` and the maximum.
///
/// Golden-section search brackets the peak; the bracket is then shrunk by
/// bisection on the sign of the slope, which resolves the argmax far below
/// the flat-top limit of comparing function values.
pub fn argmax_area_profile() -> (f64, f64) {
    let f = |b: f64| area_profile(b).expect("inside [0, 1/2]");
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let (mut lo, mut hi) = (0.0, 0.5);
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > 1e-6 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if area_profile_slope(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let b = 0.5 * (lo + hi);
    (b, f(b))
}

/// `|u·v| >= 1/√2` for unit `u`, `v`.
pub fn within_quarter(u: Point, v: Point) -> bool {
    u.dot(v).abs() >= FRAC_1_SQRT_2
}

/// Angle between two lines, in `[0, π/2]`.
pub fn line_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}
