use std::path::{Path, PathBuf};
use std::process::Command;

use leibxmod::cli::format::{encode, load, parse_str, to_canonical_string, Object, Workspace};
use leibxmod::cli::run;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn leibxmod(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_leibxmod"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

fn p(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn check_exit_codes() {
    assert_eq!(leibxmod(&["check", &p("n2.algebra")]).0, 0);
    let (code, out, _) = leibxmod(&["check", &p("bad_dim1.algebra")]);
    assert_eq!(code, 1);
    assert!(out.contains("(e, e, e)"), "{out}");
    let (code, _, err) = leibxmod(&["check", &p("bad_rational.algebra")]);
    assert_eq!(code, 2);
    assert!(err.contains("1/0"), "{err}");
    assert_eq!(leibxmod(&["check", &p("bad_hom.hom")]).0, 1);
    assert_eq!(leibxmod(&["check", &p("no_such_file.algebra")]).0, 2);
    assert_eq!(leibxmod(&["no-such-command"]).0, 2);
}

#[test]
fn every_fixture_file_is_valid_or_deliberately_broken() {
    for entry in std::fs::read_dir(fixture("")).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_str().unwrap().to_string();
        let ex = run(["leibxmod", "check", path.to_str().unwrap()]);
        let expected = if name.starts_with("bad_rational") {
            2
        } else if name.starts_with("bad_") {
            1
        } else {
            0
        };
        assert_eq!(ex.code, expected, "{name}: {}{}", ex.stdout, ex.stderr);
    }
}

#[test]
fn documented_outputs() {
    let (code, out, _) = leibxmod(&["multiplier", &p("k_zero.xmod")]);
    assert_eq!(code, 0);
    assert!(out.contains("M = (0, 1), rank δ| = 0"), "{out}");
    assert!(leibxmod(&["multiplier", &p("n2_id.xmod")]).1.contains("M = (1, 1)"));
    assert!(leibxmod(&["multiplier", &p("sl2_id.xmod")]).1.contains("M = (0, 0)"));

    let (code, out, _) = leibxmod(&["classify", &p("n2_over_k.extension")]);
    assert_eq!(code, 0);
    assert!(out.contains("central ✓ stem ✓ cover ✓"), "{out}");
    let (_, out, _) = leibxmod(&["classify-extension", &p("split.extension")]);
    assert!(out.contains("central ✓ stem ✗ cover ✗"), "{out}");

    let (code, out, _) = leibxmod(&["verify", &p("n2_over_k.extension")]);
    assert_eq!(code, 0);
    assert!(out.contains("exact at 4/4 interior nodes"), "{out}");

    let (code, out, _) = leibxmod(&["hl", &p("n2.algebra"), "2"]);
    assert_eq!((code, out.as_str()), (0, "1\n"));
}

#[test]
fn precondition_failures_explain_themselves() {
    let (code, _, err) = leibxmod(&["verify-sequence", &p("not_central.extension")]);
    assert_eq!(code, 1);
    assert!(err.contains("not central"), "{err}");
    let (code, _, err) = leibxmod(&["stemcover", &p("n2_id.xmod")]);
    assert_eq!(code, 1);
    assert!(err.contains("not perfect"), "{err}");
    let (code, _, err) = leibxmod(&["hl", &p("n2_id.xmod"), "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("expected algebra"), "{err}");
}

#[test]
fn names_resolve_within_the_fixture_directory() {
    let ws = Workspace::scan(&fixture(""));
    let names: Vec<(&str, &str)> = ws.names().collect();
    assert!(names.contains(&("algebra", "N2")));
    assert!(names.contains(&("hom", "N2 onto K")));
    match load(&fixture("n2_over_k.extension")).unwrap() {
        Object::Extension { projection, .. } => {
            assert_eq!(projection.source().name(), "(0,N2,i)");
            assert_eq!(projection.target().base().basis_names(), ["e"]);
        }
        other => panic!("unexpected {}", other.kind()),
    }
}

#[test]
fn emitted_fixtures_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (cmd, src) in [
        ("stemcover", "sl2_id.xmod"),
        ("liezation", "leibniz3_id.xmod"),
        ("liezation", "n2_module.xmod"),
    ] {
        let out = dir.path().join(format!("{cmd}-{src}"));
        let (code, _, err) = leibxmod(&[cmd, &p(src), "--out", out.to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
        let text = std::fs::read_to_string(&out).unwrap();
        let obj = load(&out).unwrap();
        assert_eq!(to_canonical_string(&encode(&obj)), text);
        assert_eq!(leibxmod(&["check", out.to_str().unwrap()]).0, 0);
    }
    for name in ["n2_over_k.extension", "split.extension", "n2_module.xmod", "n2_on_k.action", "sl2.algebra"] {
        let obj = load(&fixture(name)).unwrap();
        let text = to_canonical_string(&encode(&obj));
        let back = Workspace::default().decode(&parse_str(&text).unwrap()).unwrap();
        assert_eq!(back, obj, "{name}");
    }
}

#[test]
fn json_output_is_stable() {
    for args in [
        vec!["classify", "n2_over_k.extension"],
        vec!["verify", "n2_over_k.extension"],
        vec!["multiplier", "n2_id.xmod"],
        vec!["check", "bad_dim1.algebra"],
    ] {
        let mut full: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        full[1] = p(args[1]);
        full.push("--json".into());
        let refs: Vec<&str> = full.iter().map(|s| s.as_str()).collect();
        let a = leibxmod(&refs);
        let b = leibxmod(&refs);
        assert_eq!(a, b);
        serde_json::from_str::<serde_json::Value>(&a.1).expect("valid JSON");
    }
}
