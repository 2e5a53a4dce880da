//! Randomized checks of the free-algebra and evaluation layers.

use qcag::verify::quantum_combined_rep;
use qcag::{Alphabet, GenSymbol, Poly, QMode, RatFunc, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::commands::{Format, Output};
use crate::parser::parse_any;
use crate::CliError;

const RANK: usize = 2;

fn random_coeff(rng: &mut ChaCha8Rng) -> RatFunc {
    let q = RatFunc::q;
    match rng.gen_range(0..6) {
        0 => RatFunc::from_int(rng.gen_range(1..4)),
        1 => RatFunc::from_int(-rng.gen_range(1..4)),
        2 => q(),
        3 => RatFunc::q_pow(-1),
        4 => &q() - &RatFunc::q_pow(-1),
        _ => RatFunc::from_int(1).checked_div(&RatFunc::from_int(2)).expect("nonzero"),
    }
}

fn random_poly(rng: &mut ChaCha8Rng, symbols: &[GenSymbol]) -> Poly {
    let terms = rng.gen_range(1..4);
    Poly::from_terms((0..terms).map(|_| {
        let len = rng.gen_range(0..4);
        let w = Word((0..len).map(|_| symbols[rng.gen_range(0..symbols.len())]).collect());
        (w, random_coeff(rng))
    }))
}

pub fn run_selftest(seed: u64, cases: usize, format: Format) -> Result<Output, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = Alphabet::quantum_chevalley(RANK).union(&Alphabet::quantum_cag(RANK));
    let symbols: Vec<GenSymbol> = alphabet.symbols().collect();
    let rep = quantum_combined_rep::<RatFunc>(RANK, &QMode::Symbolic)?;
    let names = ["parser-round-trip", "associativity", "star-antiautomorphism", "eval-homomorphism"];
    let mut passed = [0usize; 4];
    for _ in 0..cases {
        let (a, b, c) = (
            random_poly(&mut rng, &symbols),
            random_poly(&mut rng, &symbols),
            random_poly(&mut rng, &symbols),
        );
        let ab = &a * &b;
        let checks = [
            parse_any(&ab.to_string()).map(|e| e.lower() == ab).unwrap_or(false),
            &ab * &c == &a * &(&b * &c),
            ab.star()? == &b.star()? * &a.star()?,
            rep.eval(&ab)? == rep.eval(&a)?.mul(&rep.eval(&b)?)?,
        ];
        for (slot, ok) in passed.iter_mut().zip(checks) {
            *slot += usize::from(ok);
        }
    }
    let ok = passed.iter().all(|&p| p == cases);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "seed": seed,
            "cases": cases,
            "properties": names.iter().zip(passed).map(|(n, p)| json!({"name": n, "passed": p})).collect::<Vec<_>>(),
        }))
        .expect("json"),
        Format::Text => {
            let mut s = format!("seed={seed} cases={cases}\n");
            for (n, p) in names.iter().zip(passed) {
                s.push_str(&format!("  {n}: {p}/{cases}\n"));
            }
            s
        }
    };
    Ok(Output { text, exit: if ok { 0 } else { 1 } })
}
