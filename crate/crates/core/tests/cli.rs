use fairsect::bisect::BisectResult;
use fairsect::cli::*;
use fairsect::io::read_polygon;
use fairsect::position::PositionReport;

fn run(args: &[&str]) -> (i32, String, String) {
    run_captured(std::iter::once("fairsect").chain(args.iter().copied()))
}

#[test]
fn measure_equilateral() {
    let (code, out, _) = run(&["measure", "--catalog", "equilateral", "--side", "1"]);
    assert_eq!(code, 0);
    let r: MeasureReport = serde_json::from_str(&out).unwrap();
    assert!((r.quotients.iso_width - 4.0 / 3f64.sqrt()).abs() < 1e-9);
    assert_eq!(r.w_b, 0.5 * r.width);
    assert!((r.quotients.iso_diam - r.area / (r.d_b * r.d_b)).abs() < 1e-12);
    assert!((r.quotients.iso_width - r.area / (r.w_b * r.w_b)).abs() < 1e-12);
    assert_eq!(r.provenance.search.grid, 64);
    // Round trip.
    let again: MeasureReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);
}

#[test]
fn measure_disk() {
    let (code, out, _) = run(&["measure", "--catalog", "disk", "--n", "1024"]);
    assert_eq!(code, 0);
    let r: MeasureReport = serde_json::from_str(&out).unwrap();
    assert!((r.quotients.iso_diam - std::f64::consts::FRAC_PI_4).abs() < 1e-3);
}

#[test]
fn bisect_rectangle() {
    let (code, out, _) = run(&["bisect", "--catalog", "rect", "--a", "2", "--b", "4", "--functional", "diameter"]);
    assert_eq!(code, 0);
    let r: BisectResult = serde_json::from_str(&out).unwrap();
    assert!((r.value - 8f64.sqrt()).abs() < 1e-3);
    assert!(r.chord.p.y.abs() < 1e-6 && r.chord.q.y.abs() < 1e-6);
    assert!((r.chord.p.x.abs() - 1.0).abs() < 1e-6);
}

#[test]
fn bisect_variants() {
    let (code, out, _) = run(&["bisect", "--catalog", "square", "--symmetric"]);
    assert_eq!(code, 0);
    let r: BisectResult = serde_json::from_str(&out).unwrap();
    assert!((r.value - 5f64.sqrt()).abs() < 1e-9);
    let (code, out, _) = run(&["bisect", "--catalog", "square", "--oracle", "64"]);
    assert_eq!(code, 0);
    let o: BisectResult = serde_json::from_str(&out).unwrap();
    assert!(o.value >= r.value - 1e-12);
    let (code, out, _) = run(&["bisect", "--catalog", "square", "--functional", "width"]);
    assert_eq!(code, 0);
    let w: BisectResult = serde_json::from_str(&out).unwrap();
    assert!((w.value - 1.0).abs() < 1e-12);
    let (code, _, err) = run(&["bisect", "--catalog", "equilateral", "--symmetric"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("not centrally symmetric"));
}

#[test]
fn verify_suites() {
    let (code, out, _) = run(&["verify", "--catalog", "equilateral", "--suite", "behrend"]);
    assert_eq!(code, EXIT_VIOLATION);
    let r: VerifyReport = serde_json::from_str(&out).unwrap();
    let bad: Vec<_> = r.bodies[0].checks.iter().filter(|c| !c.holds).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].name, "triangle_quotient_optimal");
    assert!(bad[0].witness.is_some());

    let (code, out, _) = run(&["verify", "--catalog", "Q", "--n", "1024", "--suite", "core"]);
    assert_eq!(code, EXIT_OK);
    let r: VerifyReport = serde_json::from_str(&out).unwrap();
    let c = r.bodies[0].checks.iter().find(|c| c.name == "bisecting_isodiametric").unwrap();
    assert!(c.holds && c.margin.abs() < 1e-3);

    let (code, out, _) = run(&["verify", "--corpus", "random:20", "--suite", "core"]);
    assert_eq!(code, EXIT_OK);
    let r: VerifyReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.bodies.len(), 20);
    assert!(r.pass);

    let (code, _, _) = run(&["verify", "--catalog", "rect", "--suite", "all"]);
    assert_eq!(code, EXIT_OK);
    let (code, _, _) = run(&["verify", "--corpus", "random:5", "--suite", "bang", "--chords", "200"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn profile_has_the_argmax_last() {
    let (code, out, _) = run(&["profile-ab", "--steps", "500"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "b,area");
    assert_eq!(lines.len(), 1 + 501 + 1);
    let last: Vec<f64> = lines.last().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert!((last[0] - 0.4472136).abs() < 1e-6);
    for l in &lines[1..lines.len() - 1] {
        let a: f64 = l.split(',').nth(1).unwrap().parse().unwrap();
        assert!(a <= last[1]);
    }
}

#[test]
fn render_q() {
    let (code, out, _) = run(&["render", "--catalog", "Q", "--n", "256", "--bisect", "diameter"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("<svg"));
    assert_eq!(out.matches("class=\"chord\"").count(), 1);
    let line = out.lines().find(|l| l.contains("class=\"chord\"")).unwrap();
    let attr = |name: &str| -> f64 {
        let key = format!("{name}=\"");
        let i = line.find(&key).unwrap() + key.len();
        line[i..].split('"').next().unwrap().parse().unwrap()
    };
    let a = 1.0 / 5f64.sqrt();
    assert!((attr("x1").abs() - a).abs() < 1e-4 && (attr("x2").abs() - a).abs() < 1e-4);
    assert!(attr("y1").abs() < 1e-4 && attr("y2").abs() < 1e-4);
    assert!(out.contains("stroke-dasharray"));
    let (_, again, _) = run(&["render", "--catalog", "Q", "--n", "256", "--bisect", "diameter"]);
    assert_eq!(out, again);
}

#[test]
fn position_command() {
    let (code, out, _) = run(&["position", "--catalog", "square", "--quotient", "A/w_B^2"]);
    assert_eq!(code, 0);
    let r: PositionReport = serde_json::from_str(&out).unwrap();
    assert!((r.quotient - 4.0).abs() < 1e-9);
    let (code, _, err) = run(&["position", "--catalog", "square", "--quotient", "A/D^2", "--sense", "min"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("inconsistent"));
}

#[test]
fn catalog_commands() {
    let (code, out, _) = run(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("Q ")));
    let (code, out, _) = run(&["catalog", "show", "Q", "--n", "64"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["meta"]["reference_values"]["area"]["provenance"], "limit");
    assert_eq!(read_polygon(&out).unwrap().len(), 126);
}

#[test]
fn input_files_and_exit_codes() {
    let dir = std::env::temp_dir().join(format!("fairsect-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    std::fs::write(&good, r#"{"vertices": [[0,0],[2,0],[2,1],[0,1]]}"#).unwrap();
    let (code, out, _) = run(&["measure", "--input", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r: MeasureReport = serde_json::from_str(&out).unwrap();
    assert!((r.area - 2.0).abs() < 1e-15);

    let flat = dir.join("flat.json");
    std::fs::write(&flat, r#"{"vertices": [[0,0],[1,1],[2,2]]}"#).unwrap();
    assert_eq!(run(&["measure", "--input", flat.to_str().unwrap()]).0, EXIT_DEGENERATE);

    let junk = dir.join("junk.json");
    std::fs::write(&junk, "not json").unwrap();
    assert_eq!(run(&["measure", "--input", junk.to_str().unwrap()]).0, EXIT_PARSE);
    assert_eq!(run(&["measure"]).0, EXIT_PARSE);
    assert_eq!(run(&["measure", "--catalog", "nope"]).0, EXIT_PARSE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_PARSE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);

    let out_file = dir.join("m.json");
    let (code, out, _) = run(&["measure", "--catalog", "square", "--out", out_file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let r: MeasureReport = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    assert!((r.d_b - 5f64.sqrt()).abs() < 1e-9);
    std::fs::remove_dir_all(&dir).unwrap();
}
