//! Minimizing chord bisections.
//!
//! Only straight chords are searched: any curve bisection can be replaced by
//! the chord joining its endpoints without increasing the larger piece
//! diameter or width.
//!
//! The maximum bisecting diameter is found numerically. A coarse lattice over
//! pairs of boundary parameters `(s, t)` seeds a compass search, and every
//! refined chord is then polished along the one remaining degree of freedom
//! that matters: for a fixed chord direction the two piece diameters are
//! monotone in the chord offset, so the best chord in that direction is the
//! balanced one, found by bisection on the offset. The polish is a 1-D search
//! over the direction.
//!
//! The maximum bisecting width needs no search: it is half the minimum width,
//! attained by the chord halfway between the two width-attaining supporting
//! lines.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{
    calipers_diameter, calipers_width, clip_by_chord, line_angle, signed_area, Chord,
    ConvexPolygon, Point, EPS_GEO,
};

/// Relative balance tolerance (scaled by the body's diameter).
pub const TOL_BAL_REL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Functional {
    Diameter,
    Width,
}

impl Functional {
    pub fn of_polygon(self, p: &ConvexPolygon) -> f64 {
        match self {
            Functional::Diameter => p.diameter().0,
            Functional::Width => p.width().0,
        }
    }
}

impl std::str::FromStr for Functional {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "diameter" | "D" => Ok(Functional::Diameter),
            "width" | "w" => Ok(Functional::Width),
            _ => Err(format!("unknown functional `{s}` (expected diameter or width)")),
        }
    }
}

/// Search budget for [`min_bisect_diameter`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Lattice resolution per boundary parameter.
    pub grid: usize,
    /// Number of lattice cells refined by compass search.
    pub starts: usize,
    /// Compass search stops once the parameter step falls below this.
    pub step_tol: f64,
    /// Relative tolerance defining the near-optimal chord set.
    pub near_tol: f64,
    /// Run the balanced-direction polish after compass search.
    pub polish: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            grid: 64,
            starts: 8,
            step_tol: 1e-7,
            near_tol: 1e-6,
            polish: true,
        }
    }
}

impl SearchOptions {
    /// Budget used inside nested optimizations.
    pub fn reduced() -> Self {
        Self {
            grid: 48,
            starts: 4,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BisectResult {
    pub value: f64,
    pub chord: Chord,
    pub piece_values: [f64; 2],
    pub balanced: bool,
    pub near_optima: Vec<Chord>,
}

/// Outcome of [`balance_chord`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Balanced {
    pub chord: Chord,
    pub piece_values: [f64; 2],
    /// Set when the value difference never changed sign over the offset
    /// range; `chord` is then the offset closest to balance.
    pub no_balance: bool,
}

impl Balanced {
    pub fn value(&self) -> f64 {
        self.piece_values[0].max(self.piece_values[1])
    }
}

/// Reusable evaluator of chord bisections of one polygon.
pub(crate) struct Evaluator<'a> {
    poly: &'a ConvexPolygon,
    functional: Functional,
    floor: f64,
    full: f64,
    buf: Vec<Point>,
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(poly: &'a ConvexPolygon, functional: Functional) -> Self {
        Self {
            poly,
            functional,
            floor: EPS_GEO * poly.area(),
            full: functional.of_polygon(poly),
            buf: Vec::with_capacity(poly.len() + 2),
        }
    }

    fn piece_value(&mut self, s: f64, t: f64) -> f64 {
        self.poly.chain_into(s, t, &mut self.buf);
        let pts = &self.buf;
        if pts.len() < 3 || signed_area(pts).abs() <= self.floor {
            return match self.functional {
                Functional::Width => 0.0,
                Functional::Diameter if pts.len() <= 8 => {
                    let mut d: f64 = 0.0;
                    for a in pts {
                        for b in pts {
                            d = d.max(a.dist(*b));
                        }
                    }
                    d
                }
                Functional::Diameter => calipers_diameter(pts).0,
            };
        }
        match self.functional {
            Functional::Diameter => calipers_diameter(pts).0,
            Functional::Width => calipers_width(pts).0,
        }
    }

    /// `(max, [piece1, piece2])`, or `None` for a chord with coincident ends.
    pub(crate) fn eval(&mut self, s: f64, t: f64) -> Option<(f64, [f64; 2])> {
        let p = self.poly.boundary_point(s);
        let q = self.poly.boundary_point(t);
        if p.dist(q) <= EPS_GEO * self.poly.perimeter() {
            return None;
        }
        let a = self.piece_value(s, t);
        let b = self.piece_value(t, s);
        Some((a.max(b), [a, b]))
    }

    /// Objective used by the searches; coincident ends score the whole body.
    pub(crate) fn value(&mut self, s: f64, t: f64) -> f64 {
        self.eval(s, t).map_or(self.full, |e| e.0)
    }

    /// Balanced chord with normal `n`. `start` is returned unchanged when it
    /// already balances.
    fn balance_on_normal(&mut self, n: Point, start: Option<f64>, tol: f64) -> Option<Balanced> {
        self.balance_near(n, start, None, tol)
    }

    /// As [`Self::balance_on_normal`]; `bracket = (c, w)` first tries the
    /// offsets `[c - w, c + w]` and falls back to the full range when they do
    /// not bracket the balance point.
    fn balance_near(&mut self, n: Point, start: Option<f64>, bracket: Option<(f64, f64)>, tol: f64) -> Option<Balanced> {
        let (lo, hi) = self.poly.support_range(n);
        let span = hi - lo;
        let at = |ev: &mut Self, c: f64| -> Option<(Chord, [f64; 2])> {
            let chord = ev.poly.line_chord(n, c)?;
            let (_, v) = ev.eval(chord.s, chord.t)?;
            Some((chord, v))
        };
        if let Some(c0) = start {
            if let Some((ch, v)) = at(self, c0) {
                if (v[0] - v[1]).abs() <= tol {
                    return Some(Balanced {
                        chord: ch,
                        piece_values: v,
                        no_balance: false,
                    });
                }
            }
        }
        let (a0, b0) = (lo + 1e-9 * span, hi - 1e-9 * span);
        let mut narrow = None;
        if let Some((c, w)) = bracket {
            let (a, b) = ((c - w).max(a0), (c + w).min(b0));
            if a < b {
                if let (Some(ea), Some(eb)) = (at(self, a), at(self, b)) {
                    if ea.1[0] - ea.1[1] <= 0.0 && eb.1[0] - eb.1[1] >= 0.0 {
                        narrow = Some((a, b, ea, eb));
                    }
                }
            }
        }
        let (mut a, mut b, mut ea, mut eb) = match narrow {
            Some(x) => x,
            None => (a0, b0, at(self, a0)?, at(self, b0)?),
        };
        let ha = ea.1[0] - ea.1[1];
        let hb = eb.1[0] - eb.1[1];
        if ha > 0.0 || hb < 0.0 {
            let pick = if ea.1[0].max(ea.1[1]) <= eb.1[0].max(eb.1[1]) { ea } else { eb };
            return Some(Balanced {
                chord: pick.0,
                piece_values: pick.1,
                no_balance: true,
            });
        }
        for _ in 0..64 {
            if b - a <= 1e-15 * span.max(f64::MIN_POSITIVE) {
                break;
            }
            let mid = 0.5 * (a + b);
            let Some(em) = at(self, mid) else { break };
            let h = em.1[0] - em.1[1];
            if h.abs() <= 0.1 * tol {
                ea = em;
                eb = em;
                break;
            }
            if h < 0.0 {
                a = mid;
                ea = em;
            } else if h > 0.0 {
                b = mid;
                eb = em;
            } else {
                ea = em;
                eb = em;
                break;
            }
        }
        let pick = if ea.1[0].max(ea.1[1]) <= eb.1[0].max(eb.1[1]) { ea } else { eb };
        Some(Balanced {
            chord: pick.0,
            piece_values: pick.1,
            no_balance: (pick.1[0] - pick.1[1]).abs() > tol,
        })
    }
}

/// Cuts along the chord `(s, t)` and returns the larger piece value and both
/// piece values.
pub fn evaluate_bisection(
    poly: &ConvexPolygon,
    s: f64,
    t: f64,
    functional: Functional,
) -> Result<(f64, [f64; 2])> {
    Evaluator::new(poly, functional)
        .eval(s.rem_euclid(1.0), t.rem_euclid(1.0))
        .ok_or_else(|| Error::InvalidChord(format!("endpoints coincide (s = {s}, t = {t})")))
}

/// Best chord starting at `s`: the piece from `s` to `t` only grows as `t`
/// advances, so the optimum is where the two piece diameters cross.
fn best_from(ev: &mut Evaluator, s: f64) -> (f64, f64, f64) {
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..56 {
        let m = 0.5 * (lo + hi);
        let grows = match ev.eval(s, (s + m).rem_euclid(1.0)) {
            Some((_, [a, b])) => a < b,
            None => m < 0.5,
        };
        if grows {
            lo = m;
        } else {
            hi = m;
        }
    }
    let mut best = (f64::INFINITY, s, s);
    for m in [lo, hi] {
        let t = (s + m).rem_euclid(1.0);
        if let Some((v, _)) = ev.eval(s, t) {
            if v < best.0 {
                best = (v, s.min(t), s.max(t));
            }
        }
    }
    best
}

const ORACLE_REFINE: usize = 64;

/// Exhaustive lattice minimum of the larger piece diameter.
///
/// Every lattice chord `(i/grid, j/grid)` is evaluated, and so is the best
/// chord from each lattice point (see [`best_from`]). The neighbourhood of
/// the winning lattice point is then rescanned on a finer lattice. Every
/// candidate is a real chord, so the result is an upper bound on `D_B`.
/// The crossing pass removes most of the lattice spacing error when the
/// minimum sits on a kink in one endpoint.
pub fn min_bisect_diameter_oracle(poly: &ConvexPolygon, grid: usize) -> BisectResult {
    let g = grid.max(8);
    let h = 1.0 / g as f64;
    let better = |a: (f64, f64, f64), b: (f64, f64, f64)| if b.0 < a.0 { b } else { a };
    let rows: Vec<((f64, f64, f64), (f64, f64, f64))> = (0..g)
        .into_par_iter()
        .map_init(
            || Evaluator::new(poly, Functional::Diameter),
            |ev, i| {
                let s = i as f64 * h;
                let mut best = (f64::INFINITY, s, s);
                for j in i + 1..g {
                    let t = j as f64 * h;
                    best = better(best, (ev.value(s, t), s, t));
                }
                (best, best_from(ev, s))
            },
        )
        .collect();
    let none = (f64::INFINITY, 0.0, 0.0);
    let lattice = rows.iter().fold(none, |acc, r| better(acc, r.0));
    let (crossing, at) = rows
        .iter()
        .enumerate()
        .fold((none, 0), |acc, (i, r)| if r.1 .0 < acc.0 .0 { (r.1, i) } else { acc });
    let mut ev = Evaluator::new(poly, Functional::Diameter);
    let mut best = better(lattice, crossing);
    for k in 1..2 * ORACLE_REFINE {
        let s = (at as f64 * h + (k as f64 / ORACLE_REFINE as f64 - 1.0) * h).rem_euclid(1.0);
        best = better(best, best_from(&mut ev, s));
    }
    finish(poly, Functional::Diameter, best.1, best.2, Vec::new())
}

fn finish(
    poly: &ConvexPolygon,
    functional: Functional,
    s: f64,
    t: f64,
    near_optima: Vec<Chord>,
) -> BisectResult {
    let chord = Chord::new(poly, s, t).expect("search returns proper chords");
    let (value, piece_values) =
        evaluate_bisection(poly, s, t, functional).expect("search returns proper chords");
    BisectResult {
        value,
        chord,
        piece_values,
        balanced: (piece_values[0] - piece_values[1]).abs() <= TOL_BAL_REL * poly.diameter().0,
        near_optima,
    }
}

const COMPASS: [(f64, f64); 8] = [
    (1.0, 0.0),
    (-1.0, 0.0),
    (0.0, 1.0),
    (0.0, -1.0),
    (1.0, 1.0),
    (-1.0, -1.0),
    (1.0, -1.0),
    (-1.0, 1.0),
];

fn compass_search(ev: &mut Evaluator, start: (f64, f64, f64), step: f64, tol: f64) -> (f64, f64, f64) {
    let (mut s, mut t, mut v) = start;
    let mut h = step;
    let mut iters = 0;
    while h >= tol && iters < 100_000 {
        iters += 1;
        let mut best = (v, s, t);
        for (dx, dy) in COMPASS {
            let ns = (s + dx * h).rem_euclid(1.0);
            let nt = (t + dy * h).rem_euclid(1.0);
            let nv = ev.value(ns, nt);
            if nv < best.0 {
                best = (nv, ns, nt);
            }
        }
        if best.0 < v {
            (v, s, t) = best;
        } else {
            h *= 0.5;
        }
    }
    (s, t, v)
}

/// 1-D search over the chord direction, each direction scored by its
/// balanced chord.
fn direction_polish(ev: &mut Evaluator, chord: &Chord, value: f64, step: f64) -> Option<(Chord, f64)> {
    let tol = TOL_BAL_REL * ev.poly.diameter().0;
    let mut phi = line_angle(chord.direction.perp());
    let d = ev.poly.diameter().0;
    // A turn by `h` moves the balanced offset by at most about `h · D`.
    let score = |ev: &mut Evaluator, a: f64, near: Option<(f64, f64)>| {
        let n = Point::polar(a);
        ev.balance_near(n, None, near, tol)
            .map(|b| (b.value(), b.chord))
    };
    let (mut best, mut best_chord) = score(ev, phi, None)?;
    let mut h = step;
    let mut iters = 0;
    while h > 1e-11 && iters < 400 {
        iters += 1;
        let mut moved = false;
        for a in [phi + h, phi - h] {
            let n = Point::polar(a);
            let near = Some((n.dot(best_chord.p), 2.0 * h * d + 2.0 * tol));
            if let Some((v, c)) = score(ev, a, near) {
                if v < best {
                    best = v;
                    best_chord = c;
                    phi = a;
                    moved = true;
                    break;
                }
            }
        }
        if !moved {
            h *= 0.5;
        }
    }
    (best <= value).then_some((best_chord, best))
}

fn canonical(poly: &ConvexPolygon, c: Chord) -> Chord {
    let c = if c.s <= c.t { c } else { c.reversed() };
    Chord::new(poly, c.s, c.t).unwrap_or(c)
}

fn same_chord(a: &Chord, b: &Chord, tol: f64) -> bool {
    (a.p.dist(b.p) <= tol && a.q.dist(b.q) <= tol) || (a.p.dist(b.q) <= tol && a.q.dist(b.p) <= tol)
}

/// Lattice cells that are local minima on the parameter torus, best first,
/// topped up with the best remaining cells.
fn seed_cells(table: &[f64], m: usize, k: usize) -> Vec<(usize, usize)> {
    let at = |i: usize, j: usize| table[i * m + j];
    let mut cells: Vec<(f64, usize, usize, bool)> = Vec::with_capacity(m * m / 2);
    for i in 0..m {
        for j in i + 1..m {
            let v = at(i, j);
            let mut local = true;
            'n: for di in [m - 1, 0, 1] {
                for dj in [m - 1, 0, 1] {
                    if di == 0 && dj == 0 {
                        continue;
                    }
                    if at((i + di) % m, (j + dj) % m) < v {
                        local = false;
                        break 'n;
                    }
                }
            }
            cells.push((v, i, j, local));
        }
    }
    cells.sort_by(|a, b| {
        b.3.cmp(&a.3)
            .then(a.0.total_cmp(&b.0))
            .then((a.1, a.2).cmp(&(b.1, b.2)))
    });
    cells.into_iter().take(k).map(|c| (c.1, c.2)).collect()
}

/// Lattice + compass search + balanced polish for the given functional.
pub fn search_min_bisection(
    poly: &ConvexPolygon,
    functional: Functional,
    opts: &SearchOptions,
) -> BisectResult {
    let m = opts.grid.max(4);
    let full = functional.of_polygon(poly);
    let rows: Vec<Vec<f64>> = (0..m)
        .into_par_iter()
        .map_init(
            || Evaluator::new(poly, functional),
            |ev, i| {
                (0..m)
                    .map(|j| {
                        if j <= i {
                            f64::NAN
                        } else {
                            ev.value(i as f64 / m as f64, j as f64 / m as f64)
                        }
                    })
                    .collect()
            },
        )
        .collect();
    let mut table = vec![full; m * m];
    for i in 0..m {
        for j in i + 1..m {
            table[i * m + j] = rows[i][j];
            table[j * m + i] = rows[i][j];
        }
    }
    let seeds = seed_cells(&table, m, opts.starts.max(1));
    let step = 1.0 / m as f64;
    let refined: Vec<(Chord, f64)> = seeds
        .par_iter()
        .map_init(
            || Evaluator::new(poly, functional),
            |ev, &(i, j)| {
                let s0 = i as f64 / m as f64;
                let t0 = j as f64 / m as f64;
                let (s, t, v) = compass_search(ev, (s0, t0, table[i * m + j]), step, opts.step_tol);
                let chord = Chord::new(poly, s, t).ok()?;
                let mut out = (chord, v);
                if opts.polish {
                    if let Some(better) = direction_polish(ev, &chord, v, PI / (2.0 * m as f64)) {
                        out = better;
                    }
                }
                Some((canonical(poly, out.0), out.1))
            },
        )
        .flatten()
        .collect();

    let mut ordered = refined;
    ordered.sort_by(|a, b| {
        a.1.total_cmp(&b.1)
            .then(a.0.s.total_cmp(&b.0.s))
            .then(a.0.t.total_cmp(&b.0.t))
    });
    let Some((best, best_v)) = ordered.first().copied() else {
        // Every seed collapsed; fall back to the best lattice cell.
        let (i, j) = seeds[0];
        return finish(poly, functional, i as f64 / m as f64, j as f64 / m as f64, Vec::new());
    };
    let dedup_tol = 1e-7 * poly.perimeter();
    let mut near: Vec<Chord> = Vec::new();
    for (c, v) in &ordered {
        if *v <= best_v * (1.0 + opts.near_tol) && !near.iter().any(|n| same_chord(n, c, dedup_tol)) {
            near.push(*c);
        }
    }
    let mut out = finish(poly, functional, best.s, best.t, near);
    out.chord = best;
    out
}

/// Approximate `D_B`: the least possible larger-piece diameter over all chord
/// bisections.
pub fn min_bisect_diameter(poly: &ConvexPolygon, opts: &SearchOptions) -> BisectResult {
    search_min_bisection(poly, Functional::Diameter, opts)
}

/// `w_B`, constructively: the chord halfway between the two supporting lines
/// that realize the minimum width.
pub fn min_bisect_width(poly: &ConvexPolygon) -> BisectResult {
    let (w, n) = poly.width();
    let (lo, hi) = poly.support_range(n);
    let chord = poly
        .line_chord(n, 0.5 * (lo + hi))
        .expect("mid-width line crosses the interior");
    let (_, piece_values) =
        evaluate_bisection(poly, chord.s, chord.t, Functional::Width).expect("proper chord");
    BisectResult {
        value: 0.5 * w,
        chord,
        piece_values,
        balanced: (piece_values[0] - piece_values[1]).abs() <= TOL_BAL_REL * poly.diameter().0,
        near_optima: Vec::new(),
    }
}

/// Translates `chord` along its normal until both pieces have equal
/// functional values.
pub fn balance_chord(poly: &ConvexPolygon, chord: &Chord, functional: Functional) -> Balanced {
    let tol = TOL_BAL_REL * poly.diameter().0;
    let n = chord.direction.perp();
    let mut ev = Evaluator::new(poly, functional);
    if let Some((_, v)) = ev.eval(chord.s, chord.t) {
        if (v[0] - v[1]).abs() <= tol {
            return Balanced {
                chord: *chord,
                piece_values: v,
                no_balance: false,
            };
        }
    }
    ev.balance_on_normal(n, Some(n.dot(chord.p)), tol).unwrap_or_else(|| {
        let v = ev.eval(chord.s, chord.t).map_or([0.0; 2], |e| e.1);
        Balanced {
            chord: *chord,
            piece_values: v,
            no_balance: true,
        }
    })
}

/// Minimizing bisection of a centrally symmetric body among chords through
/// its center.
pub fn symmetric_min_bisect(poly: &ConvexPolygon) -> Result<BisectResult> {
    poly.center_of_symmetry(1e-9).ok_or(Error::NotSymmetric)?;
    const GRID: usize = 512;
    let f = |ev: &mut Evaluator, s: f64| ev.value(s, s + 0.5);
    let mut ev = Evaluator::new(poly, Functional::Diameter);
    let vals: Vec<f64> = (0..GRID).map(|i| f(&mut ev, 0.5 * i as f64 / GRID as f64)).collect();
    let mut cells: Vec<(f64, usize, bool)> = (0..GRID)
        .map(|i| {
            let l = vals[(i + GRID - 1) % GRID];
            let r = vals[(i + 1) % GRID];
            (vals[i], i, vals[i] <= l && vals[i] <= r)
        })
        .collect();
    cells.sort_by(|a, b| b.2.cmp(&a.2).then(a.0.total_cmp(&b.0)).then(a.1.cmp(&b.1)));
    let mut refined: Vec<(f64, f64)> = Vec::new();
    for &(v0, i, _) in cells.iter().take(4) {
        let mut s = 0.5 * i as f64 / GRID as f64;
        let mut v = v0;
        let mut h = 0.5 / GRID as f64;
        while h > 1e-11 {
            let mut moved = false;
            for ns in [s + h, s - h] {
                let nv = f(&mut ev, ns);
                if nv < v {
                    v = nv;
                    s = ns.rem_euclid(1.0);
                    moved = true;
                    break;
                }
            }
            if !moved {
                h *= 0.5;
            }
        }
        refined.push((v, s.rem_euclid(0.5)));
    }
    refined.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let (best_v, best_s) = refined[0];
    let dedup_tol = 1e-7 * poly.perimeter();
    let mut near: Vec<Chord> = Vec::new();
    for &(v, s) in &refined {
        if v <= best_v * (1.0 + 1e-6) {
            if let Ok(c) = Chord::new(poly, s, s + 0.5) {
                if !near.iter().any(|n| same_chord(n, &c, dedup_tol)) {
                    near.push(c);
                }
            }
        }
    }
    Ok(finish(poly, Functional::Diameter, best_s, best_s + 0.5, near))
}

/// Widths of both pieces cut by `chord` and of the whole body.
pub fn bang_check(poly: &ConvexPolygon, chord: &Chord) -> Result<(f64, f64, f64)> {
    let b = clip_by_chord(poly, chord)?;
    Ok((b.piece1.width(), b.piece2.width(), poly.width().0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[(f64, f64)]) -> ConvexPolygon {
        let pts: Vec<Point> = v.iter().map(|&(x, y)| Point::new(x, y)).collect();
        ConvexPolygon::from_points(&pts).unwrap()
    }

    fn unit_square() -> ConvexPolygon {
        poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)])
    }

    fn equilateral() -> ConvexPolygon {
        poly(&[(0., 0.), (1., 0.), (0.5, 3f64.sqrt() / 2.)])
    }

    #[test]
    fn evaluate_square_mid_chord() {
        let sq = unit_square();
        let (m, v) = evaluate_bisection(&sq, 0.125, 0.625, Functional::Diameter).unwrap();
        assert!((m - 1.25f64.sqrt()).abs() < 1e-15);
        assert_eq!(v[0], v[1]);
        let (m, _) = evaluate_bisection(&sq, 0.125, 0.625, Functional::Width).unwrap();
        assert!((m - 0.5).abs() < 1e-15);
        assert!(matches!(
            evaluate_bisection(&sq, 0.2, 0.2, Functional::Width),
            Err(Error::InvalidChord(_))
        ));
    }

    #[test]
    fn equilateral_edge_chord_has_degenerate_piece_of_full_diameter() {
        let t = equilateral();
        let (m, v) = evaluate_bisection(&t, 0.0, 1.0 / 3.0, Functional::Diameter).unwrap();
        assert!((m - 1.0).abs() < 1e-15);
        assert!((v[0] - 1.0).abs() < 1e-15 && (v[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn square_search_finds_midline() {
        let sq = poly(&[(-1., -1.), (1., -1.), (1., 1.), (-1., 1.)]);
        let r = min_bisect_diameter(&sq, &SearchOptions::default());
        assert!((r.value - 5f64.sqrt()).abs() < 1e-9, "{}", r.value);
        assert!(r.balanced);
        assert!((r.value - r.piece_values[0].max(r.piece_values[1])).abs() <= 1e-12);
        // both midlines are found
        assert_eq!(r.near_optima.len(), 2);
    }

    #[test]
    fn balance_square_chord() {
        let sq = unit_square();
        let c = sq.line_chord(Point::new(1.0, 0.0), 0.3).unwrap();
        let b = balance_chord(&sq, &c, Functional::Diameter);
        assert!(!b.no_balance);
        assert!((b.chord.p.x - 0.5).abs() < 1e-9 && (b.chord.q.x - 0.5).abs() < 1e-9);
        // already balanced: unchanged
        let mid = Chord::new(&sq, 0.125, 0.625).unwrap();
        assert_eq!(balance_chord(&sq, &mid, Functional::Diameter).chord, mid);
    }

    #[test]
    fn width_bisection_of_equilateral_joins_edge_midpoints() {
        let t = equilateral();
        let r = min_bisect_width(&t);
        assert!((r.value - 3f64.sqrt() / 4.0).abs() < 1e-15);
        let mids = [Point::new(0.25, 3f64.sqrt() / 4.0), Point::new(0.75, 3f64.sqrt() / 4.0)];
        for e in [r.chord.p, r.chord.q] {
            assert!(mids.iter().any(|m| m.dist(e) < 1e-12), "{e:?}");
        }
        assert!(r.piece_values.iter().all(|&w| w <= r.value + 1e-12));
    }

    #[test]
    fn symmetric_search_requires_symmetry() {
        assert_eq!(symmetric_min_bisect(&equilateral()), Err(Error::NotSymmetric));
        let r = symmetric_min_bisect(&poly(&[(-1., -2.), (1., -2.), (1., 2.), (-1., 2.)])).unwrap();
        assert!((r.value - 8f64.sqrt()).abs() < 1e-4);
    }

    #[test]
    fn bang_on_square() {
        let sq = unit_square();
        let c = sq.line_chord(Point::new(1.0, 0.0), 0.3).unwrap();
        let (w1, w2, w) = bang_check(&sq, &c).unwrap();
        assert!((w1 - 0.3).abs() < 1e-15 && (w2 - 0.7).abs() < 1e-15 && w == 1.0);
        assert!((w1 + w2 - w).abs() < 1e-15);
    }
}
