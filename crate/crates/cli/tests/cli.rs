use std::path::PathBuf;
use std::process::Command;

use jetalg_cli::{build, check, enumerate, schur, Document, InputError, Params, Report, SchurCommand};
use proptest::prelude::*;
use serde_json::{json, Value};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn doc(name: &str) -> Document {
    jetalg_cli::load(&fixture(name)).unwrap()
}

fn verdict<'a>(r: &'a Report, name: &str) -> &'a jetalg_cli::Verdict {
    r.verdicts
        .iter()
        .find(|v| v.name == name)
        .unwrap_or_else(|| panic!("no verdict {name}"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_jetalg")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

const FIXTURES: [&str; 14] = [
    "abelian_empty.toml",
    "abelian_line.toml",
    "cocycle.toml",
    "crossed.toml",
    "delta1.toml",
    "gerbe.toml",
    "heisenberg_law.toml",
    "point.toml",
    "sl2.toml",
    "sl2_mutated.toml",
    "young_111.toml",
    "young_22.toml",
    "z2.toml",
    "z3.toml",
];

#[test]
fn sl2_passes_jacobi() {
    let r = check(&doc("sl2.toml")).unwrap();
    assert!(r.all_ok(), "{}", r.to_text());
    assert_eq!(r.objects["dimension"], json!(3));
}

#[test]
fn mutated_sl2_fails_with_a_witness_triple() {
    let r = check(&doc("sl2_mutated.toml")).unwrap();
    let jacobi = verdict(&r, "jacobi");
    assert!(!jacobi.ok);
    assert!(jacobi.witness.as_ref().unwrap().contains("at (e, f, h)"));
    let q = verdict(&r, "ce_q_squared");
    assert!(q.witness.as_ref().unwrap().starts_with("Q²(ξh)"));
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn empty_abelian_algebra_passes() {
    let r = check(&doc("abelian_empty.toml")).unwrap();
    assert!(r.all_ok());
    assert_eq!(r.objects["dimension"], json!(0));
}

#[test]
fn heisenberg_nerve_jet_is_ce_isomorphic() {
    let r = build(Some(&doc("heisenberg_law.toml")), "nerve_one_jet", &Params::default()).unwrap();
    assert!(r.all_ok(), "{}", r.to_text());
    for v in ["q_squared", "intertwines_ce", "to_ce_invertible", "degree_bound"] {
        assert!(verdict(&r, v).ok);
    }
    assert_eq!(r.objects["degrees"], json!({"ξx": 1, "ξy": 1, "ξz": 1}));
    assert_eq!(r.objects["Q"], json!({"ξz": "-ξx*ξy"}));
}

#[test]
fn abelian_weil_algebra() {
    let r = build(Some(&doc("abelian_line.toml")), "weil", &Params::default()).unwrap();
    assert!(r.all_ok());
    // d ξ = t and d t = 0, so only ξ appears
    assert_eq!(r.objects["d"], json!({"ξa": "ta"}));
    assert_eq!(r.objects["degrees"], json!({"ξa": 1, "ta": 2}));
}

#[test]
fn gerbe_two_form_is_closed() {
    let r = build(Some(&doc("gerbe.toml")), "gerbe_two_form", &Params::default()).unwrap();
    assert!(r.all_ok());
    assert_eq!(r.objects["omega"], json!("du*dv"));
    assert_eq!(r.objects["d_omega"], json!("0"));
}

#[test]
fn enumerate_group_nerves() {
    for (file, size, count) in [
        ("z2.toml", 2, 2),
        ("z3.toml", 3, 9),
        ("z2.toml", 1, 1),
        ("z3.toml", 1, 1),
    ] {
        let r = enumerate(&doc(file), size).unwrap();
        assert!(r.all_ok(), "{}", r.to_text());
        assert_eq!(r.objects["count"], json!(count), "{file}, |S| = {size}");
        assert_eq!(r.objects["oracle_count"], json!(count));
    }
}

#[test]
fn enumerate_names_the_failing_precondition() {
    let err = enumerate(&doc("delta1.toml"), 2).unwrap_err();
    let InputError::Precondition(msg) = err else {
        panic!("{err:?}")
    };
    assert!(msg.contains("not Kan") && msg.contains("horn(2, 0)"), "{msg}");
}

#[test]
fn explicit_point_enumerates_once() {
    let r = enumerate(&doc("point.toml"), 3).unwrap();
    assert!(r.all_ok());
    assert_eq!(r.objects["count"], json!(1));
}

#[test]
fn schur_examples() {
    let r = schur(
        Some(&doc("young_22.toml")),
        SchurCommand::Series,
        None,
        &Params::default(),
    )
    .unwrap();
    assert_eq!(r.objects["series"], json!([[2, 2], [3, 1]]));
    let r = schur(
        Some(&doc("young_111.toml")),
        SchurCommand::Dim,
        None,
        &Params::default(),
    )
    .unwrap();
    assert_eq!(r.objects["dim"], json!(4));
    let r = schur(None, SchurCommand::Closed, None, &Params::parse("k=1,n=1").unwrap()).unwrap();
    assert_eq!(r.objects["dim"], json!(1));
    let r = schur(None, SchurCommand::Omega2, Some(3), &Params::default()).unwrap();
    assert!(r.all_ok());
}

#[test]
fn series_rejects_non_two_column_diagrams() {
    let d = Document::parse("kind = \"young\"\nrows = [3, 1]\n").unwrap();
    assert!(matches!(
        schur(Some(&d), SchurCommand::Series, None, &Params::default()),
        Err(InputError::Field { .. })
    ));
}

#[test]
fn crossed_module_and_cocycle_documents() {
    let r = check(&doc("crossed.toml")).unwrap();
    assert_eq!(r.verdicts.len(), 7);
    assert!(r.all_ok());
    let r = build(Some(&doc("crossed.toml")), "crossed_to_dgla", &Params::default()).unwrap();
    assert!(r.all_ok());
    let r = build(Some(&doc("cocycle.toml")), "cocycle_to_linfty", &Params::default()).unwrap();
    assert!(r.all_ok());
    assert_eq!(r.objects["van_est"], json!({"(x, y)": "c"}));
}

#[test]
fn broken_crossed_module_reports_each_axiom() {
    let src = std::fs::read_to_string(fixture("crossed.toml")).unwrap();
    let d = Document::parse(&src.replace("hb = { b = \"1\" }", "hb = { a = \"1\" }")).unwrap();
    let r = check(&d).unwrap();
    let failed: Vec<&str> = r.verdicts.iter().filter(|v| !v.ok).map(|v| v.name.as_str()).collect();
    assert!(failed.contains(&"equivariance"), "{failed:?}");
    assert!(r.verdicts.iter().filter(|v| !v.ok).all(|v| v.witness.is_some()));
}

#[test]
fn failing_cocycle_is_a_verdict() {
    let src = std::fs::read_to_string(fixture("cocycle.toml")).unwrap();
    let d = Document::parse(&src.replace("x[1]*y[2]", "x[1]*y[1]*y[2]")).unwrap();
    let r = check(&d).unwrap();
    assert!(verdict(&r, "cocycle").witness.as_ref().unwrap().contains("defect"));
}

#[test]
fn descent_and_pair_maps_constructions() {
    let r = build(
        Some(&doc("heisenberg_law.toml")),
        "descent_mc",
        &Params::parse("q=2").unwrap(),
    )
    .unwrap();
    assert!(r.all_ok());
    assert_eq!(r.objects["descent_dim"], json!(6));
    let r = build(None, "pair_maps_jet", &Params::parse("1").unwrap()).unwrap();
    assert!(r.all_ok());
    assert_eq!(r.objects["canonical"], json!({"x": "ξ", "τ": "t"}));
    assert_eq!(r.objects["degrees"], json!({"x": 0, "ξ": 1, "τ": 1, "t": 2}));
}

#[test]
fn inapplicable_pairings_are_usage_errors() {
    assert!(matches!(
        build(Some(&doc("z2.toml")), "weil", &Params::default()),
        Err(InputError::Usage(_))
    ));
    assert!(matches!(
        build(None, "nerve_one_jet", &Params::default()),
        Err(InputError::Usage(_))
    ));
    assert!(matches!(
        build(None, "nope", &Params::default()),
        Err(InputError::Usage(_))
    ));
    assert!(matches!(enumerate(&doc("sl2.toml"), 2), Err(InputError::Usage(_))));
}

#[test]
fn schema_errors_name_the_line_and_field() {
    let err = Document::parse("kind = \"lie_algebra\"\nnamez = [\"a\"]\n").unwrap_err();
    assert_eq!(
        err.to_string(),
        "schema error: line 2: unknown field `namez`, expected `names` or `brackets`"
    );
    let err = Document::parse(
        "kind = \"lie_algebra\"\nnames = [\"a\"]\n[[brackets]]\nleft = \"a\"\nright = \"q\"\nvalue = {}\n",
    )
    .and_then(|d| check(&d))
    .unwrap_err();
    assert_eq!(err.to_string(), "field `brackets[0].right`: unknown name `q`");
    let err = Document::parse("kind = \"lie_algebra\"\nnames = [\"a\", \"b\"]\n[[brackets]]\nleft = \"a\"\nright = \"b\"\nvalue = { a = \"1/0\" }\n")
        .and_then(|d| check(&d))
        .unwrap_err();
    assert!(err.to_string().starts_with("field `brackets[0].value.a`"), "{err}");
}

#[test]
fn round_trip_of_fixtures_is_byte_identical() {
    for f in FIXTURES {
        let d = doc(f);
        let canonical = d.to_canonical();
        let again = Document::parse(&canonical).unwrap();
        assert_eq!(again, d, "{f}");
        assert_eq!(again.to_canonical(), canonical, "{f}");
    }
}

#[test]
fn reports_are_deterministic() {
    for f in FIXTURES {
        let a = check(&doc(f)).map(|r| r.to_json());
        let b = check(&doc(f)).map(|r| r.to_json());
        assert_eq!(a, b, "{f}");
    }
    let a = enumerate(&doc("z3.toml"), 3).unwrap().to_json();
    assert_eq!(a, enumerate(&doc("z3.toml"), 3).unwrap().to_json());
}

#[test]
fn binary_exit_codes() {
    let (code, out, _) = run(&["check", "--input", &path("sl2.toml")]);
    assert_eq!(code, 0);
    assert!(out.contains("ok    jacobi"));
    let (code, out, _) = run(&["check", "--input", &path("sl2_mutated.toml")]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL  jacobi"));
    let (code, _, err) = run(&["enumerate", "--input", &path("delta1.toml"), "--set-size", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("not Kan"));
    let (code, _, _) = run(&["check", "--input", "/nonexistent/x.toml"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["schur", "series", "--input", &path("sl2.toml")]);
    assert_eq!(code, 2);
}

#[test]
fn structured_output_is_versioned_json() {
    let (code, out, _) = run(&[
        "enumerate",
        "--input",
        &path("z2.toml"),
        "--set-size",
        "2",
        "--format",
        "structured",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], json!(jetalg_cli::SCHEMA_VERSION));
    assert_eq!(v["command"]["name"], json!("enumerate"));
    assert_eq!(v["objects"]["count"], json!(2));
    assert!(v["verdicts"].as_array().unwrap().iter().all(|x| x["ok"] == json!(true)));
}

#[test]
fn binary_runs_constructions_without_a_document() {
    let (code, out, _) = run(&["schur", "closed", "--params", "k=1,n=1"]);
    assert_eq!(code, 0);
    assert!(out.contains("dim: 1"));
    let (code, out, _) = run(&["build", "--construction", "pair_maps_jet", "--params", "p=1"]);
    assert_eq!(code, 0, "{out}");
}

fn lie_doc() -> impl Strategy<Value = Document> {
    let names = prop::collection::btree_set("[a-z]{1,3}", 1..4).prop_map(|s| s.into_iter().collect::<Vec<_>>());
    names
        .prop_flat_map(|names| {
            let n = names.len();
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let values = prop::collection::vec(prop::collection::vec((-3i64..4, 1i64..4), n), pairs.len());
            (Just(names), Just(pairs), values)
        })
        .prop_map(|(names, pairs, values)| {
            let brackets = pairs
                .iter()
                .zip(values)
                .map(|(&(i, j), v)| jetalg_cli::document::BracketDoc {
                    left: names[i].clone(),
                    right: names[j].clone(),
                    value: names
                        .iter()
                        .zip(v)
                        .filter(|(_, (p, _))| *p != 0)
                        .map(|(k, (p, q))| (k.clone(), format!("{p}/{q}")))
                        .collect(),
                })
                .collect();
            Document::LieAlgebra(jetalg_cli::document::LieAlgebraDoc { names, brackets })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_a_fixed_point(d in lie_doc()) {
        let once = d.to_canonical();
        let parsed = Document::parse(&once).unwrap();
        prop_assert_eq!(&parsed, &d);
        prop_assert_eq!(parsed.to_canonical(), once);
    }

    #[test]
    fn jacobi_verdict_matches_q_squared(d in lie_doc()) {
        let r = check(&d).unwrap();
        prop_assert_eq!(verdict(&r, "jacobi").ok, verdict(&r, "ce_q_squared").ok);
        prop_assert_eq!(r.to_json(), check(&d).unwrap().to_json());
    }
}
