use std::process::Command;

use proptest::prelude::*;
use qcag::{Alphabet, GenSymbol, Poly, RatFunc, Word};
use qcag_cli::parse_any;

fn qcag(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qcag")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn convert_examples() {
    let (code, out, _) = qcag(&["convert", "--from", "q-cag", "--to", "q-chevalley", "--expr", "a2-"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "e1 e2 - (1/q) e2 e1");
    let (code, out, _) = qcag(&["convert", "--from", "q-chevalley", "--to", "q-cag", "--expr", "k2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "L2 Lbar1");
}

#[test]
fn symbol_outside_alphabet_is_a_usage_error() {
    let (code, _, err) = qcag(&["convert", "--from", "cl-cag", "--to", "cl-chevalley", "--expr", "h1"]);
    assert_eq!(code, 2);
    assert!(err.contains("h1"), "{err}");
}

#[test]
fn coproduct_examples() {
    let (code, out, _) = qcag(&["--ascii", "coproduct", "--n", "2", "--gen", "a1-", "--mode", "cag"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.trim(), "a1- (x) 1 + Lbar1 (x) a1-");
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = qcag(&["verify", "--algebra", "quantum-cag", "--n", "2", "--rep", "vector"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["nonzero"], 0);
    let (code, out, _) = qcag(&["verify", "--algebra", "quantum-cag", "--n", "2", "--rep", "vector", "--corrupt"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["summary"]["nonzero"].as_u64().unwrap() > 0);
}

#[test]
fn oversized_symbolic_runs_are_refused() {
    let (code, _, err) = qcag(&["verify", "--algebra", "quantum-cag", "--n", "7", "--rep", "vector"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn identities_and_controls() {
    assert_eq!(qcag(&["identity"]).0, 0);
    for id in ["16a", "16b", "23"] {
        let (code, out, _) = qcag(&["identity", "--id", id, "--corrupt"]);
        assert_eq!(code, 1, "{id}: {out}");
    }
}

#[test]
fn selftest_passes() {
    let (code, out, _) = qcag(&["selftest", "--seed", "3", "--cases", "40"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("seed=3"));
}

fn coeff() -> impl Strategy<Value = RatFunc> {
    prop_oneof![
        (-4i64..=4).prop_filter("nonzero", |c| *c != 0).prop_map(RatFunc::from_int),
        (-3i64..=3).prop_map(RatFunc::q_pow),
        (1i64..=4, -2i64..=2).prop_map(|(d, e)| RatFunc::q_pow(e).checked_div(&RatFunc::from_int(d)).unwrap()),
        Just(&RatFunc::q() - &RatFunc::q_pow(-1)),
        Just(&RatFunc::q_pow(2) + &RatFunc::from_int(1)),
    ]
}

fn poly() -> impl Strategy<Value = Poly> {
    let syms: Vec<GenSymbol> = Alphabet::quantum_chevalley(3)
        .union(&Alphabet::quantum_cag(3))
        .union(&Alphabet::classical_chevalley(3))
        .symbols()
        .collect();
    let word = prop::collection::vec(prop::sample::select(syms), 0..4).prop_map(Word);
    prop::collection::vec((word, coeff()), 0..5).prop_map(Poly::from_terms)
}

proptest! {
    #[test]
    fn printed_polynomials_parse_back(p in poly()) {
        let text = p.to_string();
        let back = parse_any(&text).map(|e| e.lower());
        prop_assert_eq!(back.as_ref().ok(), Some(&p), "{}", text);
    }
}
