use ordkit_cli::output::*;
use serde::de::DeserializeOwned;
use std::process::{Command, Output};

fn ordkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = ordkit(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

/// Parses the output into its document type and checks it serializes back
/// to the same JSON.
fn doc<T: DeserializeOwned + serde::Serialize>(args: &[&str]) -> T {
    let out = ok(args);
    let parsed: T = serde_json::from_str(&out).unwrap();
    let reparsed: serde_json::Value = serde_json::to_value(&parsed).unwrap();
    assert_eq!(reparsed, serde_json::from_str::<serde_json::Value>(&out).unwrap());
    parsed
}

fn error(args: &[&str]) -> ErrorDoc {
    let o = ordkit(args);
    assert_eq!(o.status.code(), Some(1), "{args:?}");
    serde_json::from_slice(&o.stderr).unwrap()
}

#[test]
fn compare_examples() {
    assert_eq!(ok(&["compare", "--group", "b3", "--order", "dd", "a", "b"]), "a < b\n");
    assert_eq!(ok(&["compare", "--group", "b3", "--order", "dd", "a", "a"]), "a = a\n");
    assert_eq!(ok(&["compare", "e", "a"]), "e < a\n");
    assert_eq!(ok(&["compare", "--order", "c1", "b", "a"]), "b > a\n");
    assert_eq!(ok(&["compare", "--order", "c5", "a.b.a.b.a.b.a.b.a.b.T.T.T.T", "e"]), "a.b.a.b.a.b.a.b.a.b.T.T.T.T < e\n");
    let d: CompareDoc = doc(&["compare", "--group", "z", "--format", "json", "e1^-1", "e1"]);
    assert_eq!((d.relation.as_str(), d.schema.as_str()), ("<", "ordkit.compare/1"));
    assert_eq!(ok(&["compare", "--group", "dyadic:3", "--order", "reciprocal", "q1", "q2"]), "q1 < q2\n");
}

#[test]
fn rot_examples() {
    let e = error(&["rot", "--k", "6"]);
    assert_eq!(e.kind, "NoLift");
    assert_eq!(e.schema, "ordkit.error/1");
    let d: RotDoc = doc(&["rot", "--k", "5", "--element", "al.be"]);
    assert_eq!((d.k, d.element.as_str()), (5, "al.be"));
    assert_eq!(d.rot, RationalJson { num: 1, den: 5 });
    let d: RotDoc = doc(&["rot", "--k", "7"]);
    assert_eq!(d.rot, RationalJson { num: 6, den: 7 });
    assert_eq!(ok(&["rot", "--k", "11", "--format", "text"]), "2/11\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compare", "a"][..],
        &["compare", "--group", "f2", "a", "b"],
        &["compare", "--order", "nope", "a", "b"],
        &["frobnicate"],
        &["cones", "--format", "csv"],
    ] {
        assert_eq!(ordkit(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn domain_errors_are_json() {
    assert_eq!(error(&["compare", "a", "q"]).kind, "UnknownGenerator");
    assert_eq!(error(&["circular", "--rep", "modular"]).kind, "NotFree");
    assert_eq!(error(&["compare", "--group", "psl2z", "al", "be"]).kind, "NoLeftOrder");
    assert_eq!(error(&["circular", "--rep", "deformed:1,-1"]).kind, "InvalidDeformation");
}

#[test]
fn ball_listing() {
    assert_eq!(ok(&["ball", "--group", "z", "--radius", "1"]), "e\ne1\ne1^-1\n");
    let d: BallDoc = doc(&["ball", "--group", "psl2z", "--radius", "1", "--format", "json"]);
    assert_eq!(d.elements, ["e", "al", "be", "be2"]);
}

#[test]
fn realize_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("orbit.csv");
    let svg_path = dir.path().join("orbit.svg");
    ok(&[
        "realize",
        "--group",
        "b3",
        "--order",
        "dd",
        "-n",
        "200",
        "--out",
        csv_path.to_str().unwrap(),
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(reader.headers().unwrap(), vec!["index", "word", "numerator", "exponent"]);
    let rows: Vec<OrbitRow> = reader.deserialize().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 200);
    assert_eq!((rows[0].word.as_str(), rows[0].numerator.as_str()), ("e", "0"));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<?xml") && svg.contains("<rect") && svg.trim_end().ends_with("</svg>"));

    let z = ok(&["realize", "--group", "z", "-n", "4"]);
    assert_eq!(z, "index,word,numerator,exponent\n0,e,0,0\n1,e1,1,0\n2,e1^-1,-1,0\n3,e1^2,2,0\n");
    let d: RealizeDoc = doc(&["realize", "--group", "z", "-n", "3", "--x0", "3/8", "--format", "json"]);
    assert_eq!(d.x0, "3/2^3");
    assert_eq!(d.entries[0].numerator, "3");
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["realize", "-n", "300", "--shuffle", "--seed", "7"][..],
        &["svg-circle", "--radius", "3"],
        &["circular", "--ball", "3"],
        &["cones", "--group", "klein", "--radius", "2"],
    ] {
        assert_eq!(ok(args), ok(args), "{args:?}");
    }
    assert_ne!(
        ok(&["realize", "-n", "50", "--shuffle", "--seed", "1"]),
        ok(&["realize", "-n", "50", "--shuffle", "--seed", "2"])
    );
}

#[test]
fn cones_and_isolation() {
    let d: ConesDoc = doc(&["cones", "--group", "z", "--radius", "3"]);
    assert_eq!(d.count, 2);
    let d: ConesDoc = doc(&["cones", "--group", "klein", "--radius", "3", "--require", "x,y"]);
    assert!(d.count >= 1);
    for s in &d.survivors {
        assert!(s.assignment.iter().any(|e| e.word == "x" && e.sign == 1));
    }
    let d: IsolationDoc = doc(&["isolation", "--group", "z", "--radius", "4", "--require", "e1"]);
    assert_eq!(d.survivor_count, 1);
    let d: IsolationDoc = doc(&["isolation", "--group", "z2", "--radius", "5", "--require", "e1"]);
    assert!(d.survivor_count >= 2 && d.order_survives);
    let d: IsolationDoc = doc(&["isolation", "--radius", "3", "--require", "a.b.T.a,A.a.A.b.B.b.b.T.t"]);
    assert!(d.order_survives);
}

#[test]
fn tararin_listing() {
    let d: TararinDoc = doc(&["tararin"]);
    assert_eq!(d.group, "klein");
    assert_eq!(d.orders.len(), 4);
    assert!(d.orders.iter().all(|o| o.axioms_clean));
    let d: TararinDoc = doc(&["tararin", "--group", "tararin:2", "--radius", "2"]);
    assert_eq!(d.orders.len(), 8);
    assert_eq!(ok(&["compare", "--group", "klein", "--order", "+-", "e", "y"]), "e > y\n");
}

#[test]
fn circular_configuration() {
    let d: CircularDoc = doc(&["circular", "--rep", "deformed", "--ball", "1"]);
    let words: Vec<&str> = d.points.iter().map(|p| p.word.as_str()).collect();
    assert_eq!(words, ["e", "al", "be", "be2"]);
    assert_eq!(d.points[1].point, PointJson::Infinite { inf: true });
    assert_eq!(
        d.points[2].point,
        PointJson::Finite {
            num: "-49".into(),
            den: "39".into()
        }
    );
    let text = ok(&["circular", "--ball", "1", "--format", "text"]);
    assert_eq!(text, "e\t0\nal\tinf\nbe\t-49/39\nbe2\t-49/55\n");
}

#[test]
fn pingpong_reports() {
    let d: PingpongDoc = doc(&["pingpong", "--rep", "deformed"]);
    assert!(d.passed && d.witness.is_none());
    assert_eq!(d.intervals.len(), 4);
    assert_eq!(d.gammas, ["be2.al.be.al".to_string(), "al.be.al.be2".to_string()]);
    let d: PingpongDoc = doc(&["pingpong", "--rep", "modular", "--radius", "4"]);
    assert!(!d.passed);
    assert!(d.witness.is_some());
}

#[test]
fn lifts() {
    let d: LiftDoc = doc(&["lift", "--element", "t"]);
    assert_eq!((d.winding, d.over.as_str(), d.sign), (1, "e", Some(1)));
    let d: LiftDoc = doc(&["lift", "--element", "B"]);
    assert_eq!(d.sign, Some(-1));
    let d: LiftDoc = doc(&["lift", "--element", "a.A"]);
    assert_eq!((d.winding, d.sign), (0, None));
    let d: LiftDoc = doc(&["lift", "--element", "a.b.a.b.a.b.a.b.a.b.T.T.T.T", "--k", "5"]);
    assert_eq!(d.sign, Some(-1));
    assert_eq!(error(&["lift", "--element", "a", "--k", "4"]).kind, "NoLift");
}

#[test]
fn reconstruction() {
    let d: ReconstructDoc = doc(&["reconstruct", "--depth", "0"]);
    assert_eq!(d.size, 10);
    let d: ReconstructDoc = doc(&["reconstruct", "--depth", "2"]);
    assert_eq!(d.size, 138);
    assert!(d.matches_direct_evaluation);
}

#[test]
fn svg_circle_draws_the_orbit() {
    let svg = ok(&["svg-circle", "--radius", "2"]);
    assert!(svg.contains("<title>J1-</title>"));
    assert_eq!(svg.matches("r=\"2\"").count(), 8);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.svg");
    assert_eq!(ok(&["svg-circle", "--out", path.to_str().unwrap()]), "");
    assert!(std::fs::read_to_string(path).unwrap().contains("al.be2"));
}
