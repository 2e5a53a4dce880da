//! Acceptance criteria 1-11. Runs without the libtest harness so each
//! criterion prints exactly one PASS/FAIL line; exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qcag::fock::{fock_matrix_rep, fock_module};
use qcag::matrep::defining_rep_classical;
use qcag::morphisms::{cag_from_chevalley_quantum, coproduct_on_cag, CoproductMode};
use qcag::presentations::{cartan_sum, classical_cag, quantum_cag, quantum_chevalley};
use qcag::scalar::rational;
use qcag::verify::{check_identity, IdentityId};
use qcag::verify::{
    classical_limit_check, quantum_cag_rep, quantum_combined_rep, quantum_tensor_rep, round_trip_check,
    verify_named_consequences, verify_presentation, Direction, VerificationReport,
};
use qcag::GenSymbol::*;
use qcag::{Poly, QMode, RatFunc, Rational, Tensor};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn all_zero(label: &str, r: qcag::Result<VerificationReport>) -> Check {
    let r = r.map_err(|e| format!("{label}: {e}"))?;
    match r.results.iter().find(|o| !o.residual.is_empty()) {
        None => Ok(()),
        Some(o) => Err(format!("{label}: {} nonzero ({})", o.id, o.residual)),
    }
}

fn within(start: Instant, limit: u64, what: &str) -> Check {
    let t = start.elapsed();
    if t <= Duration::from_secs(limit) {
        Ok(())
    } else {
        Err(format!("{what} took {:.1}s, limit {limit}s", t.as_secs_f64()))
    }
}

fn c1() -> Check {
    let start = Instant::now();
    for n in 1..=4 {
        let pres = quantum_cag(n).map_err(|e| e.to_string())?;
        let rep = quantum_cag_rep::<RatFunc>(n, &QMode::Symbolic).map_err(|e| e.to_string())?;
        all_zero(&format!("symbolic n={n}"), verify_presentation(&pres, &rep))?;
    }
    within(start, 60, "symbolic n=1..4")?;
    let start = Instant::now();
    let mode = QMode::Numeric(rational(3, 2));
    for n in 5..=8 {
        let pres = quantum_cag(n).map_err(|e| e.to_string())?;
        let rep = quantum_cag_rep::<Rational>(n, &mode).map_err(|e| e.to_string())?;
        all_zero(&format!("q=3/2 n={n}"), verify_presentation(&pres, &rep))?;
    }
    within(start, 120, "q=3/2 n=5..8")
}

fn c2() -> Check {
    let start = Instant::now();
    for n in 1..=6 {
        let rep = defining_rep_classical::<Rational>(n).map_err(|e| e.to_string())?;
        for extended in [false, true] {
            let pres = classical_cag(n, extended).map_err(|e| e.to_string())?;
            all_zero(&format!("defining n={n} extended={extended}"), verify_presentation(&pres, &rep))?;
        }
    }
    for n in 1..=4 {
        let pres = classical_cag(n, true).map_err(|e| e.to_string())?;
        for p in 0..=5 {
            let module = fock_module(n, p).map_err(|e| e.to_string())?;
            let rep = fock_matrix_rep::<Rational>(&module).map_err(|e| e.to_string())?;
            all_zero(&format!("fock n={n} p={p}"), verify_presentation(&pres, &rep))?;
        }
    }
    within(start, 60, "defining and Fock runs")
}

fn named(n: usize) -> qcag::Result<VerificationReport> {
    let rep = quantum_combined_rep::<RatFunc>(n, &QMode::Symbolic)?;
    verify_named_consequences(n, &rep)
}

fn restricted(label: &str, n: usize, prefixes: &[&str], expected_min: usize) -> Check {
    let r = named(n).map_err(|e| format!("{label} n={n}: {e}"))?;
    let picked: Vec<_> = r.results.iter().filter(|o| prefixes.iter().any(|p| o.id.starts_with(p))).collect();
    if picked.len() < expected_min {
        return Err(format!("{label} n={n}: only {} instances generated", picked.len()));
    }
    match picked.iter().find(|o| !o.residual.is_empty()) {
        None => Ok(()),
        Some(o) => Err(format!("{label} n={n}: {} nonzero ({})", o.id, o.residual)),
    }
}

fn c3() -> Check {
    for n in 1..=4usize {
        // 4 mixed relations per (i, j) with i ≥ 2, one Serre consequence per 2 ≤ i ≤ n-1.
        let expected = 4 * (n - 1) * n + n.saturating_sub(2);
        restricted("mixed/Serre", n, &["15", "17/"], expected)?;
    }
    Ok(())
}

fn c4() -> Check {
    for n in 1..=4usize {
        restricted("Cartan pairing", n, &["18a/", "18b/", "18a-vs-11c/"], n + 2 * (n - 1) + 1)?;
    }
    Ok(())
}

fn c5() -> Check {
    for id in IdentityId::ALL {
        let good = check_identity(id, false);
        if !good.holds {
            return Err(format!("{} residual {}", id.as_str(), good.residual));
        }
        if check_identity(id, true).holds {
            return Err(format!("{} corrupted control did not fail", id.as_str()));
        }
    }
    Ok(())
}

fn c6() -> Check {
    for n in 1..=5 {
        let rep = defining_rep_classical::<Rational>(n).map_err(|e| e.to_string())?;
        all_zero(&format!("classical n={n}"), round_trip_check(Direction::Classical, n, &rep))?;
    }
    for n in 1..=4 {
        let rep = quantum_combined_rep::<RatFunc>(n, &QMode::Symbolic).map_err(|e| e.to_string())?;
        all_zero(&format!("quantum n={n}"), round_trip_check(Direction::Quantum, n, &rep))?;
    }
    Ok(())
}

fn c7() -> Check {
    for n in 1..=5 {
        let m = cag_from_chevalley_quantum(n).map_err(|e| e.to_string())?;
        for i in 1..=n as u32 {
            let minus = m.image(Aminus(i)).map_err(|e| e.to_string())?;
            let plus = m.image(Aplus(i)).map_err(|e| e.to_string())?;
            if minus.star().map_err(|e| e.to_string())? != *plus {
                return Err(format!("n={n} i={i}: star(a{i}-) differs from a{i}+"));
            }
        }
    }
    Ok(())
}

fn c8() -> Check {
    let g = |s| Poly::gen(s);
    let one = Poly::one();
    let d1 = coproduct_on_cag(2, 1, -1, CoproductMode::Cag).map_err(|e| e.to_string())?;
    let e1 = &Tensor::pure(&g(Aminus(1)), &one) + &Tensor::pure(&g(Lbar(1)), &g(Aminus(1)));
    if d1 != e1 {
        return Err(format!("Delta a1- = {d1}"));
    }
    let d2 = coproduct_on_cag(2, 2, -1, CoproductMode::Cag).map_err(|e| e.to_string())?;
    let q_minus_qbar = &RatFunc::q() - &RatFunc::q_pow(-1);
    let e2 = &(&Tensor::pure(&g(Aminus(2)), &one) + &Tensor::pure(&g(Lbar(2)), &g(Aminus(2))))
        + &Tensor::pure(&Poly::commutator(&g(Aplus(1)), &g(Aminus(2))), &g(Aminus(1))).scale(&q_minus_qbar);
    if d2 != e2 {
        return Err(format!("Delta a2- = {d2}"));
    }
    for n in 1..=3 {
        let rep = quantum_tensor_rep::<RatFunc>(n, &QMode::Symbolic).map_err(|e| e.to_string())?;
        let chev = quantum_chevalley(n).map_err(|e| e.to_string())?;
        all_zero(&format!("tensor q-chevalley n={n}"), verify_presentation(&chev, &rep))?;
        let cag = quantum_cag(n).map_err(|e| e.to_string())?;
        all_zero(&format!("tensor q-cag n={n}"), verify_presentation(&cag, &rep))?;
    }
    Ok(())
}

fn c9() -> Check {
    for n in 1..=8 {
        for i in 1..=n {
            for j in 1..=n {
                let s = cartan_sum(n, i, j).map_err(|e| e.to_string())?;
                if s != 1 + i64::from(i == j) {
                    return Err(format!("n={n} i={i} j={j}: {s}"));
                }
            }
        }
    }
    Ok(())
}

fn c10() -> Check {
    for n in 1..=6 {
        let rep = defining_rep_classical::<Rational>(n).map_err(|e| e.to_string())?;
        all_zero(&format!("defining n={n}"), classical_limit_check(n, &rep))?;
    }
    for n in 1..=4 {
        for p in 0..=5 {
            let module = fock_module(n, p).map_err(|e| e.to_string())?;
            let rep = fock_matrix_rep::<Rational>(&module).map_err(|e| e.to_string())?;
            all_zero(&format!("fock n={n} p={p}"), classical_limit_check(n, &rep))?;
        }
    }
    Ok(())
}

fn run_bin(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qcag")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn c11() -> Check {
    for n in ["1", "2", "3"] {
        let (code, out) = run_bin(&["verify", "--algebra", "quantum-cag", "--n", n, "--rep", "vector", "--corrupt"])?;
        let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        let nonzero = v["summary"]["nonzero"].as_u64().unwrap_or(0);
        if code == 0 || nonzero == 0 {
            return Err(format!("sign-flipped n={n}: exit {code}, {nonzero} nonzero"));
        }
    }
    let (code, out) = run_bin(&["identity", "--id", "23", "--corrupt"])?;
    if code == 0 || !out.contains("FAILS") {
        return Err(format!("wrong-condition 23: exit {code}: {}", out.trim()));
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("quantum CAG relations in the vector representation", c1),
        ("classical CAG relations in defining and Fock representations", c2),
        ("mixed relations and Serre consequence", c3),
        ("Cartan pairing relations", c4),
        ("bracket identities and corrupted controls", c5),
        ("Chevalley -> CAG -> Chevalley round trips", c6),
        ("star maps a_i^- to a_i^+", c7),
        ("coproduct closed forms and tensor-square relations", c8),
        ("Cartan-sum identity", c9),
        ("classical limit at q = 1", c10),
        ("negative controls report nonzero", c11),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
