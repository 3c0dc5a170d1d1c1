mod common;

use common::{corpus, spbw};
use spbw::classify::ClassificationReport;
use spbw::cli::{parse_presentation, print_presentation};
use spbw::gradings::BigradedDims;
use spbw::koszul::{AbarReport, KoszulCertificate, TensorReport, Verdict};

#[test]
fn validation_exit_codes() {
    for (file, code) in [
        ("qplane", 0),
        ("qplane-f7", 0),
        ("weyl", 0),
        ("weyl-ore", 0),
        ("diffusion", 0),
        ("dual-x", 0),
        ("polynomial3", 0),
        ("weighted", 0),
        ("qplane-dual", 0),
        ("scaled-qplane-dual", 0),
        ("zero-c", 2),
        ("broken-overlap", 2),
        ("malformed", 1),
    ] {
        let (got, _, _) = spbw(&["validate", &corpus(file)]);
        assert_eq!(got, code, "{file}");
    }
}

#[test]
fn invalid_presentations_print_a_witness() {
    let (code, _, err) = spbw(&["validate", &corpus("broken-overlap")]);
    assert_eq!(code, 2);
    assert!(err.contains("witness"), "{err}");
    let (code, _, err) = spbw(&["nf", &corpus("zero-c"), "x2*x1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error"), "{err}");
}

#[test]
fn malformed_input_and_bad_arguments() {
    assert_eq!(spbw(&["classify", &corpus("malformed")]).0, 1);
    assert_eq!(spbw(&["classify", "/nonexistent/file.spbw"]).0, 1);
    assert_eq!(spbw(&["frobnicate"]).0, 1);
    assert_eq!(spbw(&["nf", &corpus("qplane"), "x1 +* x2"]).0, 1);
    assert_eq!(spbw(&["nf", &corpus("qplane"), "z"]).0, 1);
    assert_eq!(spbw(&["--help"]).0, 0);
}

#[test]
fn normal_forms_on_the_command_line() {
    let (code, out, _) = spbw(&["nf", &corpus("qplane"), "x2*x1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(2)·x1^1·x2^1");
    let (_, out, _) = spbw(&["nf", &corpus("weyl"), "x2*x1*x1"]);
    assert_eq!(out.trim(), "(1)·x1^2·x2^1 + (2)·x1^1");
    let (_, out, _) = spbw(&["mul", &corpus("weyl"), "x2", "x1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["product"], "(1)·x1^1·x2^1 + (1)");
}

#[test]
fn koszul_exit_codes() {
    assert_eq!(spbw(&["koszul", &corpus("qplane"), "classical", "4", "8"]).0, 0);
    assert_eq!(spbw(&["koszul", &corpus("qplane"), "classical", "4", "5"]).0, 4);
    assert_eq!(spbw(&["koszul", &corpus("weighted"), "classical", "4", "8"]).0, 3);
    assert_eq!(spbw(&["koszul", &corpus("weyl"), "classical"]).0, 5);
    assert_eq!(spbw(&["koszul", &corpus("dual-x"), "generalized", "--bounds", "3", "6"]).0, 0);
    assert_eq!(spbw(&["tensor-check", &corpus("diffusion"), "2", "4", "3"]).0, 0);
    assert_eq!(spbw(&["tensor-check", &corpus("weyl-ore")]).0, 5);
    assert_eq!(spbw(&["abar", &corpus("qplane-dual"), "3", "5"]).0, 0);
}

#[test]
fn json_reports_deserialize() {
    let (_, out, _) = spbw(&["koszul", &corpus("qplane"), "classical", "4", "8", "--json"]);
    let cert: KoszulCertificate = serde_json::from_str(&out).unwrap();
    assert_eq!(cert.verdict, Verdict::CertifiedToBounds);
    assert_eq!(cert.ranks(), vec![1, 2, 1, 0, 0]);

    let (_, out, _) = spbw(&["classify", &corpus("diffusion"), "--json"]);
    let report: ClassificationReport = serde_json::from_str(&out).unwrap();
    assert!(report.constant && !report.quasi_commutative);

    let (_, out, _) = spbw(&["tensor-check", &corpus("diffusion"), "--json"]);
    let report: TensorReport = serde_json::from_str(&out).unwrap();
    assert!(report.verified);

    let (_, out, _) = spbw(&["abar", &corpus("dual-x"), "3", "5", "--json"]);
    let report: AbarReport = serde_json::from_str(&out).unwrap();
    assert!(report.agree);

    let (_, out, _) = spbw(&["hilbert", &corpus("diffusion"), "base-induced", "2", "2", "--json"]);
    let dims: BigradedDims = serde_json::from_str(&out).unwrap();
    assert_eq!(dims.get((2, 2)), 9);
}

#[test]
fn gr_output_is_a_presentation() {
    let (code, out, _) = spbw(&["gr", &corpus("weyl")]);
    assert_eq!(code, 0);
    let gr = parse_presentation(&out).unwrap();
    assert!(spbw::classify::classify(&gr).unwrap().quasi_commutative);
    for file in ["qplane", "diffusion", "weyl-ore", "scaled-qplane-dual", "qplane-f7"] {
        let text = std::fs::read_to_string(corpus(file)).unwrap();
        let pres = parse_presentation(&text).unwrap();
        assert_eq!(parse_presentation(&print_presentation(&pres)).unwrap(), pres, "{file}");
    }
}

#[test]
fn augmentation_report() {
    let (code, out, _) = spbw(&["aug", &corpus("weyl"), "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["r_augmented"], false);
    let w = &v["multiplicativity_witnesses"][0];
    assert_eq!((w["left"].as_str(), w["right"].as_str()), (Some("x2"), Some("x1")));
    let (_, out, _) = spbw(&["aug", &corpus("qplane"), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["constant_term_is_ring_hom"], true);
}

#[test]
fn seeds_change_only_the_spot_checks() {
    let a = spbw(&["validate", &corpus("diffusion"), "--seed", "1", "--json"]);
    let b = spbw(&["validate", &corpus("diffusion"), "--seed", "2", "--json"]);
    assert_eq!((a.0, b.0), (0, 0));
    let va: serde_json::Value = serde_json::from_str(&a.1).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&b.1).unwrap();
    assert_eq!(va["passed"], vb["passed"]);
}
