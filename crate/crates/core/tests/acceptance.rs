use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use leibxmod::cli::format::{load, Object};
use leibxmod::extensions::{
    classify, prop41_crosscheck, six_term_report, stem_cover_of_perfect, theta_star_with, Extension, SectionPolicy,
};
use leibxmod::fixtures;
use leibxmod::homology::hl;
use leibxmod::tensor::{
    exterior_product, exterior_square_data, schur_multiplier, tensor_product, MutualActionPair, QuotientPresentation,
};
use leibxmod::{CrossedModule, LeibnizAlgebra};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn ker_mu_dim(q: &LeibnizAlgebra) -> usize {
    let d = exterior_square_data(&CrossedModule::identity(q)).expect("exterior square");
    d.mu_q.kernel().dim()
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let named = fixtures::algebras();
    let random = fixtures::random_corpus(12, 2024);
    let mut mismatches = Vec::new();
    for q in named.iter().chain(&random) {
        let (m, h) = (ker_mu_dim(q), hl(q, 2).expect("degree 2"));
        if m != h {
            mismatches.push(format!("{}: ker μ = {m}, HL2 = {h}", q.name()));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches.is_empty() && elapsed < Duration::from_secs(5),
        format!(
            "{} named + {} random algebras, {} mismatches {:?}, {:.2?}",
            named.len(),
            random.len(),
            mismatches.len(),
            mismatches,
            elapsed
        ),
    )
}

fn derived_values() -> Outcome {
    let m = |xm: CrossedModule| schur_multiplier(&xm).expect("multiplier").dims();
    let got = [
        m(CrossedModule::zero_top(&fixtures::k())),
        m(CrossedModule::identity(&fixtures::n2())),
        m(CrossedModule::identity(&fixtures::sl2())),
    ];
    let hl_n2 = hl(&fixtures::n2(), 2).expect("degree 2");
    let pass = got == [(0, 1), (1, 1), (0, 0)] && hl_n2 == 1;
    outcome(pass, format!("M = {got:?}, HL2(N2) = {hl_n2}"))
}

fn stem_cover_classification() -> Outcome {
    let e = fixtures::n2_over_k();
    let c = classify(&e).expect("classify");
    let six = six_term_report(&e).expect("six-term");
    let exact = six.nodes.iter().filter(|n| n.exact).count();
    let split = fixtures::split_extension(&CrossedModule::zero_top(&fixtures::n2()), &fixtures::abelian_xmod(0, 1, 0));
    let cs = classify(&split).expect("classify");
    let from_file = |name: &str| match load(&fixture(name)).expect("fixture loads") {
        Object::Extension { name, projection } => {
            classify(&Extension::from_projection(name, projection).expect("extension")).expect("classify")
        }
        other => panic!("{name} is a {}", other.kind()),
    };
    let files_agree = from_file("n2_over_k.extension") == c && from_file("split.extension") == cs;
    let pass = c.central
        && c.stem_extension
        && c.stem_cover
        && six.is_exact()
        && cs.central
        && !cs.stem_extension
        && files_agree;
    outcome(
        pass,
        format!(
            "n2_over_k {:?}, exact at {exact}/{} nodes; split stem = {}; fixture files agree = {files_agree}",
            c,
            six.nodes.len(),
            cs.stem_extension
        ),
    )
}

fn prop41_suite() -> Outcome {
    let es = fixtures::central_extensions();
    let mut part_i = 0;
    let mut part_ii = 0;
    let mut failures = Vec::new();
    for e in &es {
        let r = prop41_crosscheck(e).expect("crosscheck");
        part_i += r.part_i_agrees() as usize;
        part_ii += (r.cover == r.theta_bijective) as usize;
        if !r.agrees() {
            failures.push(e.name().to_string());
        }
    }
    let n = es.len();
    outcome(
        n >= 20 && part_i == n && part_ii == n && failures.is_empty(),
        format!("{n} extensions, stem criteria {part_i}/{n}, cover criteria {part_ii}/{n}, disagreements {failures:?}"),
    )
}

fn perfect_theorem() -> Outcome {
    let sl2 = CrossedModule::identity(&fixtures::sl2());
    let cover = stem_cover_of_perfect(&sl2);
    let cover_ok = cover.as_ref().is_ok_and(|e| {
        let total = e.total();
        let ab = total.abelianization().expect("abelianization").0.dims();
        classify(e).expect("classify").stem_cover
            && ab == (0, 0)
            && schur_multiplier(total).expect("multiplier").dims() == (0, 0)
    });
    let refused = stem_cover_of_perfect(&CrossedModule::identity(&fixtures::n2())).is_err();
    outcome(
        cover_ok && refused,
        format!("sl2 cover accepted = {cover_ok}, N2 refused = {refused}"),
    )
}

fn presentation_ok(p: &QuotientPresentation) -> bool {
    p.checks().all() && p.recheck().all() && p.algebra().check_leibniz().is_valid()
}

fn well_definedness() -> Outcome {
    let mut xms = fixtures::crossed_modules();
    xms.extend(fixtures::random_corpus(10, 99).iter().map(CrossedModule::identity));
    let mut constructions = 0;
    let mut bad = Vec::new();
    let mut note = |ok: bool, what: String| {
        constructions += 1;
        if !ok {
            bad.push(what);
        }
    };
    for xm in &xms {
        let d = exterior_square_data(xm).expect("exterior square");
        note(presentation_ok(&d.qn), format!("q^n of {}", xm.name()));
        note(presentation_ok(&d.qq), format!("q^q of {}", xm.name()));
        note(d.crossed.check().is_valid(), format!("exterior crossed module of {}", xm.name()));
        let id = CrossedModule::identity(xm.base());
        let pair = MutualActionPair::from_crossed_modules(&id, xm).expect("mutual actions");
        note(presentation_ok(&tensor_product(&pair).expect("tensor")), format!("q*n of {}", xm.name()));
    }
    for a in &xms {
        for b in &xms {
            if a.base() != b.base() {
                continue;
            }
            let ext = exterior_product(a, b).expect("exterior product");
            note(presentation_ok(&ext), format!("{} ^ {}", a.name(), b.name()));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{constructions} constructions, failures {bad:?}"),
    )
}

fn theta_section_independence() -> Outcome {
    let es = fixtures::central_extensions();
    let mut differ = Vec::new();
    for e in &es {
        let m = schur_multiplier(e.quotient()).expect("multiplier");
        let a = theta_star_with(e, &m, SectionPolicy::FirstPivots).expect("theta");
        for policy in [SectionPolicy::LastPivots, SectionPolicy::Shifted] {
            if theta_star_with(e, &m, policy).expect("theta") != a {
                differ.push(format!("{} ({policy:?})", e.name()));
            }
        }
    }
    outcome(
        differ.is_empty(),
        format!("{} extensions x 3 policies, differing {differ:?}", es.len()),
    )
}

fn corpus_json_run() -> Vec<u8> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixture(""))
        .expect("fixture dir")
        .map(|e| e.expect("entry").path())
        .collect();
    files.sort();
    let mut out = Vec::new();
    for f in files {
        let ext = f.extension().and_then(|e| e.to_str()).unwrap_or_default().to_string();
        let path = f.to_str().expect("utf-8 path").to_string();
        let mut runs: Vec<Vec<String>> = vec![vec!["check".into(), path.clone()]];
        match ext.as_str() {
            "algebra" => runs.push(vec!["hl".into(), path.clone(), "2".into()]),
            "xmod" => {
                for cmd in ["multiplier", "exterior", "liezation", "stemcover"] {
                    runs.push(vec![cmd.into(), path.clone()]);
                }
            }
            "extension" => {
                runs.push(vec!["classify-extension".into(), path.clone()]);
                runs.push(vec!["verify-sequence".into(), path.clone()]);
            }
            _ => {}
        }
        for mut args in runs {
            args.push("--json".into());
            let o = Command::new(env!("CARGO_BIN_EXE_leibxmod"))
                .args(&args)
                .output()
                .expect("binary runs");
            out.extend(format!("{args:?} -> {:?}\n", o.status.code()).bytes());
            out.extend(o.stdout);
            out.extend(o.stderr);
        }
    }
    out
}

fn determinism() -> Outcome {
    let a = corpus_json_run();
    let b = corpus_json_run();
    outcome(!a.is_empty() && a == b, format!("{} bytes per run", a.len()))
}

fn report(n: usize, name: &str, f: fn() -> Outcome) {
    let o = f();
    println!(
        "criterion {n} {name}: {} ({})",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail
    );
    assert!(o.pass, "criterion {n} failed: {}", o.detail);
}

#[test]
fn criterion_1_oracle_equivalence() {
    report(1, "oracle equivalence", oracle_equivalence);
}

#[test]
fn criterion_2_derived_values() {
    report(2, "derived values", derived_values);
}

#[test]
fn criterion_3_stem_cover_classification() {
    report(3, "stem-cover classification", stem_cover_classification);
}

#[test]
fn criterion_4_stem_and_cover_criteria_agree() {
    report(4, "stem and cover criteria agree", prop41_suite);
}

#[test]
fn criterion_5_perfect_crossed_modules() {
    report(5, "perfect crossed modules", perfect_theorem);
}

#[test]
fn criterion_6_well_definedness() {
    report(6, "well-definedness", well_definedness);
}

#[test]
fn criterion_7_theta_section_independence() {
    report(7, "theta* section independence", theta_section_independence);
}

#[test]
fn criterion_8_determinism() {
    report(8, "determinism", determinism);
}
