//! Command-line front end. The `fairsect` binary only forwards to [`run`].
//!
//! Exit codes: 0 success, 1 invariant violation, 2 bad input or arguments,
//! 3 degenerate geometry.

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bisect::{
    min_bisect_diameter, min_bisect_diameter_oracle, min_bisect_width, search_min_bisection,
    symmetric_min_bisect, BisectResult, Functional, SearchOptions, TOL_BAL_REL,
};
use crate::catalog::{self, CatalogEntry, Params};
use crate::error::Error;
use crate::geom::{clip_by_chord, Chord, ConvexPolygon, EPS_GEO};
use crate::io::{read_polygon, write_catalog_entry};
use crate::position::{
    argmax_area_profile, area_profile, behrend_bisecting_check, optimize_position, PositionOptions,
    Quotient, Sense,
};
use crate::svg::{render, Figure};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

/// `2·arctan(3/4)`, the largest possible `A / D_B²`.
pub const ISO_DIAM_MAX: f64 = 1.2870022175865685;

#[derive(Debug, Parser)]
#[command(name = "fairsect", version, about = "Minimizing chord bisections of convex polygons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Area, diameter, width, D_B, w_B and the two quotients.
    Measure {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Minimizing chord for one functional.
    Bisect {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, default_value = "diameter")]
        functional: Functional,
        /// Search only chords through the center (centrally symmetric input).
        #[arg(long)]
        symmetric: bool,
        /// Exhaustive lattice search at this resolution instead.
        #[arg(long, value_name = "GRID")]
        oracle: Option<usize>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Best affine position for a quotient.
    Position {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        search: SearchArgs,
        /// One of A/D^2, A/D_B^2, A/w^2, A/w_B^2.
        #[arg(long, default_value = "A/D_B^2")]
        quotient: Quotient,
        /// Defaults to the quotient's natural sense.
        #[arg(long)]
        sense: Option<Sense>,
        #[arg(long, default_value_t = 16.0)]
        r_max: f64,
        #[arg(long, default_value_t = 33)]
        r_steps: usize,
        #[arg(long, default_value_t = 64)]
        alpha_steps: usize,
        /// Stopping step of the (ln r, α) pattern search.
        #[arg(long, default_value_t = 1e-4)]
        position_tol: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check inequalities and position conditions.
    Verify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        search: SearchArgs,
        /// `random:N` (seeds 0..N, `--k` vertices) or `catalog`.
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, value_enum, default_value = "core")]
        suite: Suite,
        /// Random chords per body in the bang suite.
        #[arg(long, default_value_t = 100)]
        chords: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// CSV of the area of the region between the disks about (±b, 0) and the
    /// lines x = ±b, with the maximizing row last.
    ProfileAb {
        #[arg(long, default_value_t = 500)]
        steps: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// SVG of the body, optionally with a minimizing chord.
    Render {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        bisect: Option<Functional>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Named bodies.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Names and parameters.
    List,
    /// One entry as polygon JSON with a `meta` block.
    Show {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Bang,
    Behrend,
    All,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub side: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub angle: Option<f64>,
    #[arg(long)]
    pub base: Option<f64>,
}

impl ParamArgs {
    fn params(&self) -> Params {
        Params {
            n: self.n,
            side: self.side,
            a: self.a,
            b: self.b,
            theta: self.theta,
            r: self.r,
            k: self.k,
            seed: self.seed,
            angle: self.angle,
            base: self.base,
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct Source {
    /// Catalog entry name (see `catalog list`).
    #[arg(long, conflicts_with = "input")]
    pub catalog: Option<String>,
    /// Polygon JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Lattice resolution of the D_B search.
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    /// Lattice cells refined by compass search.
    #[arg(long, default_value_t = 8)]
    pub starts: usize,
    /// Compass search step tolerance.
    #[arg(long, default_value_t = 1e-7)]
    pub tol: f64,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            grid: self.grid,
            starts: self.starts,
            step_tol: self.tol,
            ..SearchOptions::default()
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct OutArgs {
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A resolved input body.
#[derive(Debug, Clone)]
pub struct Body {
    pub label: String,
    pub polygon: ConvexPolygon,
    pub entry: Option<CatalogEntry>,
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateInput(_) | Error::SingularMap(_) | Error::InvalidChord(_) => EXIT_DEGENERATE,
            _ => EXIT_PARSE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_PARSE,
        message: message.into(),
    }
}

fn describe(entry: &CatalogEntry) -> String {
    let mut s = entry.name.clone();
    for (k, v) in &entry.params {
        s.push_str(&format!(" {k}={v}"));
    }
    s
}

pub fn load(source: &Source) -> Result<Body, Failure> {
    match (&source.catalog, &source.input) {
        (Some(name), _) => {
            let entry = catalog::by_name(name, &source.params.params())?;
            Ok(Body {
                label: describe(&entry),
                polygon: entry.polygon.clone(),
                entry: Some(entry),
            })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| parse_failure(format!("cannot read {}: {e}", path.display())))?;
            Ok(Body {
                label: path.display().to_string(),
                polygon: read_polygon(&text)?,
                entry: None,
            })
        }
        (None, None) => Err(parse_failure("one of --catalog or --input is required")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quotients {
    /// `A / D_B²`.
    pub iso_diam: f64,
    /// `A / w_B²`.
    pub iso_width: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MinimizingChords {
    pub diameter: Chord,
    pub width: Chord,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub balance_rel: f64,
    pub near_rel: f64,
    pub step: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportProvenance {
    pub tool: String,
    pub version: String,
    pub source: String,
    pub search: SearchOptions,
    pub tolerances: Tolerances,
}

impl ReportProvenance {
    fn new(source: &str, search: &SearchOptions) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            source: source.to_string(),
            search: *search,
            tolerances: Tolerances {
                balance_rel: TOL_BAL_REL,
                near_rel: search.near_tol,
                step: search.step_tol,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub area: f64,
    pub diameter: f64,
    pub width: f64,
    pub d_b: f64,
    pub w_b: f64,
    pub quotients: Quotients,
    pub chords: MinimizingChords,
    pub provenance: ReportProvenance,
}

pub fn measure(body: &Body, search: &SearchOptions) -> MeasureReport {
    let p = &body.polygon;
    let db = min_bisect_diameter(p, search);
    let wb = min_bisect_width(p);
    let area = p.area();
    MeasureReport {
        area,
        diameter: p.diameter().0,
        width: p.width().0,
        d_b: db.value,
        w_b: wb.value,
        quotients: Quotients {
            iso_diam: area / (db.value * db.value),
            iso_width: area / (wb.value * wb.value),
        },
        chords: MinimizingChords {
            diameter: db.chord,
            width: wb.chord,
        },
        provenance: ReportProvenance::new(&body.label, search),
    }
}

/// One checked inequality: holds iff `margin >= -tol`, where `margin` is
/// positive on the safe side of `bound`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub margin: f64,
    pub tol: f64,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<serde_json::Value>,
}

impl Check {
    fn new(name: &str, value: f64, bound: f64, margin: f64, tol: f64) -> Self {
        Self {
            name: name.to_string(),
            value,
            bound,
            margin,
            tol,
            holds: margin >= -tol,
            witness: None,
        }
    }

    fn at_most(name: &str, value: f64, bound: f64, tol: f64) -> Self {
        Self::new(name, value, bound, bound - value, tol)
    }

    fn at_least(name: &str, value: f64, bound: f64, tol: f64) -> Self {
        Self::new(name, value, bound, value - bound, tol)
    }

    fn equal(name: &str, value: f64, bound: f64, tol: f64) -> Self {
        Self::new(name, value, bound, -(value - bound).abs(), tol)
    }

    fn witness(mut self, w: impl FnOnce() -> serde_json::Value) -> Self {
        if !self.holds {
            self.witness = Some(w());
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BodyChecks {
    pub body: String,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub bodies: Vec<BodyChecks>,
    pub failures: usize,
    pub pass: bool,
}

fn vertices_value(p: &ConvexPolygon) -> serde_json::Value {
    serde_json::json!({ "vertices": p.vertices() })
}

/// Isodiametric and isominwidth inequalities and the `D_B`, `w_B` bounds.
pub fn core_checks(p: &ConvexPolygon, search: &SearchOptions) -> Vec<Check> {
    let (a, d, w) = (p.area(), p.diameter().0, p.width().0);
    let db = min_bisect_diameter(p, search);
    let wb = min_bisect_width(p);
    let chord = db.chord;
    vec![
        Check::at_most("isodiametric", a / (d * d), PI / 4.0, 1e-12),
        Check::at_least("isominwidth", a / (w * w), 1.0 / 3f64.sqrt(), 1e-12),
        Check::at_least("d_b_at_least_half_diameter", db.value, 0.5 * d, 1e-12 * d),
        Check::equal("w_b_half_width", wb.value, 0.5 * w, 1e-12),
        Check::at_most("bisecting_isodiametric", a / (db.value * db.value), ISO_DIAM_MAX, 1e-6)
            .witness(|| serde_json::json!({ "chord": chord })),
        Check::at_least("bisecting_isominwidth", a / (wb.value * wb.value), 4.0 / 3f64.sqrt(), 1e-9),
    ]
    .into_iter()
    .map(|c| c.witness(|| vertices_value(p)))
    .collect()
}

/// Piece widths of `count` seeded random chords, and of the mid-width chord.
pub fn bang_checks(p: &ConvexPolygon, count: usize, seed: u64) -> Vec<Check> {
    let w = p.width().0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: Option<(f64, Chord)> = None;
    let mut tested = 0;
    while tested < count {
        let (s, t): (f64, f64) = (rng.gen(), rng.gen());
        let Ok(c) = Chord::new(p, s, t) else { continue };
        let Ok(cut) = clip_by_chord(p, &c) else { continue };
        // Both ends on one edge leave a flat piece, not a bisection.
        if cut.piece1.area().min(cut.piece2.area()) <= EPS_GEO * p.area() {
            continue;
        }
        tested += 1;
        let sum = cut.piece1.width() + cut.piece2.width();
        if worst.map_or(true, |x| sum - w < x.0) {
            worst = Some((sum - w, c));
        }
    }
    let mut out = Vec::new();
    if let Some((m, c)) = worst {
        out.push(Check::new("bang_random_chords", w + m, w, m, 1e-9).witness(|| serde_json::json!({ "chord": c })));
    }
    let mid = min_bisect_width(p);
    let sum = mid.piece_values[0] + mid.piece_values[1];
    out.push(Check::equal("bang_mid_chord_equality", sum, w, 1e-12 * w.max(1.0)));
    out.into_iter().map(|c| c.witness(|| vertices_value(p))).collect()
}

/// `4/(3√3)`, the best `A / D_B²` among triangles.
pub const TRIANGLE_OPTIMUM: f64 = 0.769800358919501;

/// The bisecting position conditions, plus optimality of the quotient for
/// triangles and parallelograms.
pub fn behrend_checks(p: &ConvexPolygon, search: &SearchOptions) -> Vec<Check> {
    let report = behrend_bisecting_check(p, search);
    let worst_gap = report
        .checks
        .iter()
        .map(|c| c.at_least.max_gap.max(c.at_most.max_gap))
        .fold(if report.no_bisector_found { f64::INFINITY } else { 0.0 }, f64::max);
    let mut nec = Check::at_most("bisecting_position_necessary", worst_gap, 0.5 * PI, 1e-6);
    nec.holds = report.pass;
    let mut out = vec![nec.witness(|| serde_json::to_value(&report).expect("report serializes"))];
    let q = p.area() / (report.d_b * report.d_b);
    if p.len() == 3 {
        out.push(Check::at_least("triangle_quotient_optimal", q, TRIANGLE_OPTIMUM, 1e-4));
    } else if p.len() == 4 && p.center_of_symmetry(1e-9).is_some() {
        out.push(Check::at_least("parallelogram_quotient_optimal", q, 1.0, 1e-4));
    }
    out.into_iter().map(|c| c.witness(|| vertices_value(p))).collect()
}

pub fn verify(bodies: &[Body], suite: Suite, search: &SearchOptions, chords: usize, seed: u64) -> VerifyReport {
    let list: Vec<BodyChecks> = bodies
        .iter()
        .map(|b| {
            let p = &b.polygon;
            let mut checks = Vec::new();
            if matches!(suite, Suite::Core | Suite::All) {
                checks.extend(core_checks(p, search));
            }
            if matches!(suite, Suite::Bang | Suite::All) {
                checks.extend(bang_checks(p, chords, seed));
            }
            if matches!(suite, Suite::Behrend | Suite::All) {
                checks.extend(behrend_checks(p, search));
            }
            BodyChecks {
                body: b.label.clone(),
                checks,
            }
        })
        .collect();
    let failures = list.iter().flat_map(|b| &b.checks).filter(|c| !c.holds).count();
    VerifyReport {
        suite,
        bodies: list,
        failures,
        pass: failures == 0,
    }
}

fn corpus(which: &str, params: &ParamArgs) -> Result<Vec<Body>, Failure> {
    let to_body = |e: CatalogEntry| Body {
        label: describe(&e),
        polygon: e.polygon.clone(),
        entry: Some(e),
    };
    if which == "catalog" {
        return Ok(catalog::standard_catalog().into_iter().map(to_body).collect());
    }
    let count = which
        .strip_prefix("random:")
        .and_then(|n| n.parse::<u64>().ok())
        .ok_or_else(|| parse_failure(format!("bad corpus `{which}` (expected random:N or catalog)")))?;
    let k = params.k.unwrap_or(12);
    (0..count)
        .map(|seed| Ok(to_body(catalog::random_polygon(seed, k)?)))
        .collect()
}

/// Rows `b, area` for `b = i / (2·steps)`, then the maximizing row.
pub fn profile_csv(steps: usize) -> String {
    let steps = steps.max(1);
    let mut out = String::from("b,area\n");
    for i in 0..=steps {
        let b = 0.5 * i as f64 / steps as f64;
        let a = area_profile(b).expect("inside [0, 1/2]");
        out.push_str(&format!("{b:.17e},{a:.17e}\n"));
    }
    let (b, a) = argmax_area_profile();
    out.push_str(&format!("{b:.17e},{a:.17e}\n"));
    out
}

pub fn render_body(body: &Body, bisect: Option<Functional>, search: &SearchOptions) -> String {
    let p = &body.polygon;
    let chord = bisect.map(|f| match f {
        Functional::Diameter => min_bisect_diameter(p, search).chord,
        Functional::Width => min_bisect_width(p).chord,
    });
    let d = p.diameter().0;
    let v = p.vertices();
    let mut diametrical = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i].dist(v[j]) >= d * (1.0 - 1e-9) {
                diametrical.push((v[i], v[j]));
            }
        }
    }
    let fig = Figure {
        chord,
        diametrical,
        landmarks: body.entry.as_ref().map_or_else(Vec::new, |e| e.landmarks.clone()),
    };
    render(p, &fig)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn emit(out: &OutArgs, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &out.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| parse_failure(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| parse_failure(format!("cannot write output: {e}"))),
    }
}

fn bisect_cmd(
    body: &Body,
    search: &SearchOptions,
    functional: Functional,
    symmetric: bool,
    oracle: Option<usize>,
) -> Result<BisectResult, Failure> {
    let p = &body.polygon;
    Ok(match (functional, oracle, symmetric) {
        (Functional::Width, _, _) => min_bisect_width(p),
        (Functional::Diameter, Some(g), _) => min_bisect_diameter_oracle(p, g),
        (Functional::Diameter, None, true) => symmetric_min_bisect(p)?,
        (Functional::Diameter, None, false) => search_min_bisection(p, functional, search),
    })
}

fn dispatch(cli: Cli, stdout: &mut Vec<u8>) -> Result<i32, Failure> {
    match cli.command {
        Command::Measure { source, search, out } => {
            let body = load(&source)?;
            emit(&out, &to_json(&measure(&body, &search.options())), stdout)?;
        }
        Command::Bisect {
            source,
            search,
            functional,
            symmetric,
            oracle,
            out,
        } => {
            let body = load(&source)?;
            let r = bisect_cmd(&body, &search.options(), functional, symmetric, oracle)?;
            emit(&out, &to_json(&r), stdout)?;
        }
        Command::Position {
            source,
            search,
            quotient,
            sense,
            r_max,
            r_steps,
            alpha_steps,
            position_tol,
            out,
        } => {
            let body = load(&source)?;
            let opts = PositionOptions {
                r_max,
                r_steps,
                alpha_steps,
                tol: position_tol,
                outer: search.options(),
                ..PositionOptions::default()
            };
            let sense = sense.unwrap_or(quotient.natural_sense());
            let r = optimize_position(&body.polygon, quotient, sense, &opts)?;
            emit(&out, &to_json(&r), stdout)?;
        }
        Command::Verify {
            source,
            search,
            corpus: which,
            suite,
            chords,
            out,
        } => {
            let bodies = match &which {
                Some(s) => corpus(s, &source.params)?,
                None => vec![load(&source)?],
            };
            let seed = source.params.seed.unwrap_or(0);
            let report = verify(&bodies, suite, &search.options(), chords, seed);
            emit(&out, &to_json(&report), stdout)?;
            if !report.pass {
                return Ok(EXIT_VIOLATION);
            }
        }
        Command::ProfileAb { steps, out } => emit(&out, &profile_csv(steps), stdout)?,
        Command::Render {
            source,
            search,
            bisect,
            out,
        } => {
            let body = load(&source)?;
            emit(&out, &render_body(&body, bisect, &search.options()), stdout)?;
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => {
                let mut text = String::new();
                for (name, params) in catalog::NAMES {
                    text.push_str(&format!("{name:<18}{params}\n"));
                }
                stdout
                    .write_all(text.as_bytes())
                    .map_err(|e| parse_failure(e.to_string()))?;
            }
            CatalogCommand::Show { name, params, out } => {
                let entry = catalog::by_name(&name, &params.params())?;
                emit(&out, &write_catalog_entry(&entry), stdout)?;
            }
        },
    }
    Ok(EXIT_OK)
}

fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("FAIRSECT_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| parse_failure(format!("FAIRSECT_THREADS must be a positive integer, got `{v}`")))?;
        b = b.num_threads(n.max(1));
    }
    b.build().map_err(|e| parse_failure(e.to_string()))
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Errors go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
            } else {
                let _ = stdout.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut buf: Vec<u8> = Vec::new();
    let result = thread_pool().and_then(|pool| pool.install(|| dispatch(cli, &mut buf)));
    let _ = stdout.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

/// [`run`] with captured output: `(code, stdout, stderr)`.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
