use std::process::{Command, Output};

use tbk::apoly_format::parse_apoly;
use tbk::cli::PolygonJson;
use tbk::report::KnotReport;
use tbk::suite::PaperReport;
use tbk_core::MultiPoly;

fn tbk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tbk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn slopes_json_round_trips() {
    let o = tbk(&["slopes", "4/15", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let report: KnotReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["knot", "expansions", "symmetric_slopes", "all_slopes"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    let e = &value["expansions"][0];
    for key in ["entries", "representative", "slope", "symmetric", "ideal_points"] {
        assert!(e.get(key).is_some(), "missing expansions[].{key}");
    }
    assert_eq!(value["knot"], serde_json::json!({"p": 4, "q": 15}));
}

#[test]
fn figure_eight_slopes_table() {
    let o = tbk(&["slopes", "2/5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all slopes:       {-4, 0, 4}"), "{}", stdout(&o));
}

#[test]
fn invalid_input_exit_code() {
    for args in [
        &["expand", "4/15x"][..],
        &["slopes", "2/4"],
        &["jkl", "3", "5"],
        &["verify", "--paper", "--n-min", "4", "--n-max", "3"],
        &["polygon", "/no/such/file"],
        &["apoly"],
    ] {
        let o = tbk(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn apoly_to_polygon_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k2.apoly");
    let path_s = path.to_str().unwrap();
    let o = tbk(&["apoly", "4/15", "--out", path_s]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let (poly, vars) = parse_apoly(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(vars, ["L", "M"]);
    assert_eq!(poly.degree_in("L"), Some(5));
    assert_eq!(poly.degree_in("M"), Some(22));

    let o = tbk(&["polygon", path_s]);
    assert_eq!(o.status.code(), Some(0));
    let j: PolygonJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j.corners, vec![(2, 0), (5, 0), (4, 14), (3, 22), (0, 22), (1, 8)]);
    assert_eq!(j.edge_slopes, vec!["-14", "-8", "0"]);

    let o = tbk(&["polygon", path_s, "--convention", "ml", "--negate"]);
    let j: PolygonJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j.edge_slopes, vec!["1/14", "1/8", "1/0"]);
}

#[test]
fn apoly_keep_abelian_adds_the_factor() {
    let plain = tbk(&["apoly", "2/5"]);
    let with = tbk(&["apoly", "2/5", "--keep-abelian"]);
    let (f, _) = parse_apoly(&stdout(&plain)).unwrap();
    let (g, _) = parse_apoly(&stdout(&with)).unwrap();
    let abelian = MultiPoly::from_terms(&["L", "M"], [(vec![1, 0], 1), (vec![0, 0], -1)]);
    assert_eq!(g.div_exact(&abelian).map(|q| q.normalize_sign()), Some(f.normalize_sign()));
}

#[test]
fn valuation_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.txt");
    std::fs::write(&path, "# unipotent pair\n[[1, 1/t], [0, 1]]\n[[1, 0], [1/t, 1]]\n").unwrap();
    let o = tbk(&["valuation", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("certificate: g0*g1 (ord tr = -2)"), "{out}");

    std::fs::write(&path, "t, 0, 0, t\n").unwrap();
    let o = tbk(&["valuation", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn verify_small_range() {
    let o = tbk(&["verify", "--paper", "--n-min", "2", "--n-max", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: PaperReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report.passed());
    assert_eq!(report.knots.len(), 3);
    // A-polynomial data only for n <= 3, with the published corners alongside
    assert!(report.knots[0].polygon.as_ref().is_some_and(|p| !p.comparisons.is_empty()));
    assert!(report.knots[2].polygon.is_none());
    assert_eq!(serde_json::from_str::<PaperReport>(&report.to_json()).unwrap(), report);

    let o = tbk(&["verify", "--paper", "--n-min", "4", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("2 knots, 0 hard-check failures: PASS\n"));
}
