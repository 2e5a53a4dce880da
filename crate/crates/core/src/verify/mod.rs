//! Relation-vanishing checks in representations, round trips, the classical
//! limit, and the free-algebra identity checker.
//!
//! Every check is exact: a relation passes only when every matrix entry of its
//! image is the canonical zero. Finite representations cannot prove that a
//! relation set presents an algebra, so reports are labelled as
//! representation-level evidence.

mod identity;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use identity::{check_identity, IdentityId, IdentityResult};

use crate::error::{Error, Result};
use crate::freealg::{GenSymbol, NCPoly};
use crate::matrep::{pullback_rep, tensor_square_rep, vector_rep_quantum, Matrix, MatrixRep};
use crate::morphisms::{
    cag_from_chevalley_classical, cag_from_chevalley_quantum, chevalley_from_cag_classical,
    chevalley_from_cag_quantum, coproduct_chevalley, GenMap,
};
use crate::presentations::{cartan_pairing_21c, quantum_cag, triple_relation_21d, Presentation};
use crate::scalar::{Assignment, Coeff, QMode, RatFunc, Rational, Specialize, Var};
use crate::Poly;

use GenSymbol::*;

pub const EVIDENCE_NOTE: &str = "representation-level evidence";

/// Residual entries shown before truncation.
pub const RESIDUAL_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Zero,
    Nonzero,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportMeta {
    pub presentation: String,
    pub n: usize,
    pub representation: String,
    pub q_mode: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome {
    pub id: String,
    pub status: Status,
    pub residual: String,
    pub ms: f64,
    #[serde(skip)]
    full_residual: Vec<String>,
}

impl Outcome {
    fn new(id: String, entries: Vec<String>, ms: f64) -> Self {
        let status = if entries.is_empty() { Status::Zero } else { Status::Nonzero };
        let mut out = Outcome { id, status, residual: String::new(), ms, full_residual: entries };
        out.residual = out.render(Some(RESIDUAL_LIMIT));
        out
    }

    fn render(&self, limit: Option<usize>) -> String {
        let entries = &self.full_residual;
        let shown = limit.unwrap_or(entries.len()).min(entries.len());
        let mut text = entries[..shown].join("; ");
        if shown < entries.len() {
            text.push_str(&format!("; ... (+{} more)", entries.len() - shown));
        }
        text
    }

    pub fn full_residual(&self) -> &[String] {
        &self.full_residual
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub zero: usize,
    pub nonzero: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub meta: ReportMeta,
    pub results: Vec<Outcome>,
    pub summary: Summary,
    pub wall_ms: f64,
}

impl VerificationReport {
    fn assemble(meta: ReportMeta, mut results: Vec<Outcome>, wall_ms: f64) -> Self {
        results.sort_by(|a, b| a.id.cmp(&b.id));
        let zero = results.iter().filter(|o| o.status == Status::Zero).count();
        let summary = Summary { total: results.len(), zero, nonzero: results.len() - zero };
        VerificationReport { meta, results, summary, wall_ms }
    }

    pub fn all_zero(&self) -> bool {
        self.summary.nonzero == 0
    }

    pub fn outcome(&self, id: &str) -> Option<&Outcome> {
        self.results.iter().find(|o| o.id == id)
    }

    /// Replace truncated residuals by the complete ones.
    pub fn with_full_residuals(mut self) -> Self {
        for o in &mut self.results {
            o.residual = o.render(None);
        }
        self
    }

    /// JSON form with all timing fields zeroed.
    pub fn without_timing(&self) -> Self {
        let mut out = self.clone();
        out.wall_ms = 0.0;
        for o in &mut out.results {
            o.ms = 0.0;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let m = &self.meta;
        let mut s = format!(
            "{} n={} rep={} q={} ({})\n",
            m.presentation, m.n, m.representation, m.q_mode, m.note
        );
        for o in &self.results {
            match o.status {
                Status::Zero => s.push_str(&format!("  zero     {}\n", o.id)),
                Status::Nonzero => s.push_str(&format!("  NONZERO  {}: {}\n", o.id, o.residual)),
            }
        }
        s.push_str(&format!(
            "{} relations: {} zero, {} nonzero\n",
            self.summary.total, self.summary.zero, self.summary.nonzero
        ));
        s
    }
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn matrix_residual<S: Coeff>(m: &Matrix<S>) -> Vec<String> {
    m.nonzero_entries().map(|(r, c, x)| format!("({r},{c}): {x}")).collect()
}

fn meta<S>(presentation: &str, n: usize, rep: &MatrixRep<S>) -> ReportMeta {
    ReportMeta {
        presentation: presentation.to_string(),
        n,
        representation: rep.id.clone(),
        q_mode: rep.q_mode.as_ref().map_or_else(|| "none".to_string(), QMode::label),
        note: EVIDENCE_NOTE.to_string(),
    }
}

fn mode_of<S>(rep: &MatrixRep<S>) -> QMode {
    rep.q_mode.clone().unwrap_or(QMode::Symbolic)
}

/// Evaluate each relation in `rep`, concurrently, and collect the outcomes.
pub fn verify_relations<S: Coeff>(
    meta: ReportMeta,
    relations: &[(String, NCPoly<S>)],
    rep: &MatrixRep<S>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    for (_, r) in relations {
        for g in r.symbols() {
            if !rep.alphabet.contains(g) {
                return Err(Error::AlphabetMismatch(g, rep.alphabet.name().to_string()));
            }
        }
    }
    let results = relations
        .par_iter()
        .map(|(id, r)| {
            let t = Instant::now();
            let m = rep.eval(r)?;
            Ok(Outcome::new(id.clone(), matrix_residual(&m), millis(t)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::assemble(meta, results, millis(start)))
}

pub fn verify_presentation<S: Specialize>(pres: &Presentation, rep: &MatrixRep<S>) -> Result<VerificationReport> {
    for g in pres.alphabet.symbols() {
        if !rep.alphabet.contains(g) {
            return Err(Error::AlphabetMismatch(g, rep.alphabet.name().to_string()));
        }
    }
    let rels = pres.relations_in::<S>(&mode_of(rep))?;
    let name = serde_json::to_value(pres.kind).expect("kind serializes");
    verify_relations(meta(name.as_str().unwrap_or("presentation"), pres.n, rep), &rels, rep)
}

/// The quantum CAG presentation with the sign of the L-term in every
/// Cartan-pairing relation reversed; a negative control.
pub fn sign_flipped_21c(n: usize) -> Result<Presentation> {
    let mut pres = quantum_cag(n)?;
    for i in 1..=n {
        let lhs = Poly::commutator(&Poly::gen(Aminus(i as u32)), &Poly::gen(Aplus(i as u32)));
        let flipped = &(&lhs + &lhs) - &cartan_pairing_21c(i);
        pres = pres.with_relation(&format!("q-cag/21c/i={i}"), flipped)?;
    }
    Ok(pres)
}

/// Pullback of the vector representation to the CAG alphabet.
pub fn quantum_cag_rep<S: Specialize>(n: usize, mode: &QMode) -> Result<MatrixRep<S>> {
    let vector = vector_rep_quantum::<S>(n, mode)?;
    pullback_rep(&cag_from_chevalley_quantum(n)?.specialize::<S>(mode)?, &vector)
}

/// Vector representation carrying both quantum alphabets.
pub fn quantum_combined_rep<S: Specialize>(n: usize, mode: &QMode) -> Result<MatrixRep<S>> {
    let vector = vector_rep_quantum::<S>(n, mode)?;
    let cag = pullback_rep(&cag_from_chevalley_quantum(n)?.specialize::<S>(mode)?, &vector)?;
    vector.merged(&cag)
}

/// Tensor square of the vector representation, carrying both quantum alphabets.
pub fn quantum_tensor_rep<S: Specialize>(n: usize, mode: &QMode) -> Result<MatrixRep<S>> {
    let vector = vector_rep_quantum::<S>(n, mode)?;
    let square = tensor_square_rep(&vector, &coproduct_chevalley(n)?.specialize::<S>(mode)?)?;
    let cag = pullback_rep(&cag_from_chevalley_quantum(n)?.specialize::<S>(mode)?, &square)?;
    square.merged(&cag)
}

fn delta(i: usize, j: usize) -> i64 {
    i64::from(i == j)
}

fn qp(m: i64) -> RatFunc {
    RatFunc::q_pow(m)
}

fn gp(g: GenSymbol) -> Poly {
    Poly::gen(g)
}

fn product(syms: impl IntoIterator<Item = GenSymbol>) -> Poly {
    syms.into_iter().fold(Poly::one(), |acc, g| &acc * &gp(g))
}

/// Mixed relations between Chevalley generators and CAGs, the Serre
/// consequence for `2 ≤ i ≤ n-1`, and the Cartan-pairing relations.
pub fn named_consequences(n: usize) -> Vec<(String, Poly)> {
    let u = |i: usize| i as u32;
    let mut out = Vec::new();
    for i in 2..=n {
        for j in 1..=n {
            let x = qp(delta(i - 1, j) - delta(i, j));
            let (e, f) = (gp(E(u(i))), gp(F(u(i))));
            let a = Poly::bracket(&e, &gp(Aminus(u(j))), &x);
            let rhs = gp(Aminus(u(i))).scale(&(&qp(1) * &RatFunc::from_int(-delta(i - 1, j))));
            out.push((format!("15a/i={i}/j={j}"), &a - &rhs));
            let b = Poly::bracket(&f, &gp(Aplus(u(j))), &x);
            let rhs = gp(Aplus(u(i))).scale(&RatFunc::from_int(delta(i - 1, j)));
            out.push((format!("15b/i={i}/j={j}"), &b - &rhs));
            let c = Poly::commutator(&e, &gp(Aplus(u(j))));
            let rhs = (&gp(Aplus(u(i - 1))) * &gp(Kbar(u(i)))).scale(&RatFunc::from_int(delta(i, j)));
            out.push((format!("15c/i={i}/j={j}"), &c - &rhs));
            let d = Poly::commutator(&f, &gp(Aminus(u(j))));
            let rhs = (&gp(K(u(i))) * &gp(Aminus(u(i - 1)))).scale(&RatFunc::from_int(-delta(i, j)));
            out.push((format!("15d/i={i}/j={j}"), &d - &rhs));
        }
    }
    for i in 2..n {
        let inner = Poly::bracket(&gp(E(u(i - 1))), &gp(E(u(i))), &qp(-1));
        let mid = Poly::bracket(&inner, &gp(E(u(i + 1))), &qp(-1));
        out.push((format!("17/i={i}"), Poly::commutator(&gp(E(u(i))), &mid)));
    }
    let inv = (&qp(1) - &qp(-1)).inv().expect("q - 1/q is nonzero");
    for i in 1..=n {
        let ks = product((1..=i).map(|r| K(u(r))));
        let kbs = product((1..=i).map(|r| Kbar(u(r))));
        let lhs = Poly::commutator(&gp(Aminus(u(i))), &gp(Aplus(u(i))));
        out.push((format!("18a/i={i}"), &lhs - &(&ks - &kbs).scale(&inv)));
        if i < n {
            let l1 = Poly::commutator(&gp(Aminus(u(i))), &gp(Aplus(u(i + 1))));
            out.push((format!("18b/minus-plus/i={i}"), &l1 + &(&ks * &gp(F(u(i + 1))))));
            let l2 = Poly::commutator(&gp(Aminus(u(i + 1))), &gp(Aplus(u(i))));
            out.push((format!("18b/plus-minus/i={i}"), &l2 + &(&gp(E(u(i + 1))) * &kbs)));
        }
    }
    out
}

/// Checks the named consequences in a representation carrying both quantum
/// alphabets; also compares the two sides of the i = 1 Cartan pairing with
/// the corresponding Chevalley relation, entry by entry.
pub fn verify_named_consequences<S: Specialize>(n: usize, rep: &MatrixRep<S>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mode = mode_of(rep);
    let rels = named_consequences(n)
        .into_iter()
        .map(|(id, p)| Ok((id, p.try_map_coeffs(|c| S::specialize(c, &mode))?)))
        .collect::<Result<Vec<_>>>()?;
    let mut report = verify_relations(meta("named-consequences", n, rep), &rels, rep)?;
    let t = Instant::now();
    let cag_side = rep.eval(&Poly::commutator(&gp(Aminus(1)), &gp(Aplus(1))).try_map_coeffs(|c| S::specialize(c, &mode))?)?;
    let chev_side = rep.eval(&Poly::commutator(&gp(E(1)), &gp(F(1))).try_map_coeffs(|c| S::specialize(c, &mode))?)?;
    let extra = Outcome::new("18a-vs-11c/i=1".into(), matrix_residual(&cag_side.sub(&chev_side)?), millis(t));
    let mut results = std::mem::take(&mut report.results);
    results.push(extra);
    Ok(VerificationReport::assemble(report.meta, results, millis(start)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Classical,
    Quantum,
}

/// For each Chevalley generator g, compares the matrix of g with the matrix
/// of its image under Chevalley → CAG → Chevalley.
pub fn round_trip_check<S: Specialize>(direction: Direction, n: usize, rep: &MatrixRep<S>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mode = mode_of(rep);
    let (to_cag, to_chev): (GenMap<RatFunc>, GenMap<RatFunc>) = match direction {
        Direction::Classical => (chevalley_from_cag_classical(n)?, cag_from_chevalley_classical(n)?),
        Direction::Quantum => (chevalley_from_cag_quantum(n)?, cag_from_chevalley_quantum(n)?),
    };
    let composed = to_chev.compose(&to_cag)?.specialize::<S>(&mode)?;
    let results = composed
        .images()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(g, img)| {
            let t = Instant::now();
            let diff = rep.eval(img)?.sub(rep.matrix(*g)?)?;
            Ok(Outcome::new(format!("round-trip/{g}"), matrix_residual(&diff), millis(t)))
        })
        .collect::<Result<Vec<_>>>()?;
    let label = match direction {
        Direction::Classical => "round-trip-classical",
        Direction::Quantum => "round-trip-quantum",
    };
    Ok(VerificationReport::assemble(meta(label, n, rep), results, millis(start)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeRow {
    pub i: usize,
    pub xi: i64,
    pub eta: i64,
    pub j: usize,
    pub status: Status,
}

/// Evaluates every generated instance of the triple relation over all
/// `(i, ξ, η, j)` with `1 ≤ i, i+ξ ≤ n`.
pub fn probe_21d_range<S: Specialize>(n: usize, rep: &MatrixRep<S>) -> Result<Vec<ProbeRow>> {
    let mode = mode_of(rep);
    let mut cases = Vec::new();
    for i in 1..=n {
        for xi in [1i64, -1] {
            let ixi = i as i64 + xi;
            if ixi < 1 || ixi > n as i64 {
                continue;
            }
            for eta in [1i64, -1] {
                for j in 1..=n {
                    cases.push((i, xi, eta, j));
                }
            }
        }
    }
    cases
        .par_iter()
        .map(|&(i, xi, eta, j)| {
            let rel = triple_relation_21d(xi, eta, i, j).try_map_coeffs(|c| S::specialize(c, &mode))?;
            let status = if rep.eval(&rel)?.is_zero() { Status::Zero } else { Status::Nonzero };
            Ok(ProbeRow { i, xi, eta, j, status })
        })
        .collect()
}

/// Builds the quantum CAG generators on a classical representation with
/// `a ↦ â` and `L_i ↦ q^{H_i}`, `H_i = [â_i^-, â_i^+]`, evaluates every quantum
/// CAG relation symbolically and specializes the residual at q = 1.
///
/// `H_i` must be diagonal with integer entries.
pub fn classical_limit_check(n: usize, classical: &MatrixRep<Rational>) -> Result<VerificationReport> {
    let start = Instant::now();
    let lift = |m: &Matrix<Rational>| m.try_map(|x| Ok(RatFunc::from_rational(x)));
    let mut asg = BTreeMap::new();
    for i in 1..=n as u32 {
        let (am, ap) = (classical.matrix(Aminus(i))?, classical.matrix(Aplus(i))?);
        let h = am.mul(ap)?.sub(&ap.mul(am)?)?;
        if !h.is_diagonal() {
            return Err(Error::RepresentationInvalid(format!("[a{i}-, a{i}+] is not diagonal")));
        }
        let exps = h
            .diagonal_entries()
            .iter()
            .map(|x| {
                if x.is_integer() {
                    i64::try_from(x.to_integer()).map_err(|_| Error::RepresentationInvalid(x.to_string()))
                } else {
                    Err(Error::RepresentationInvalid(format!("non-integer weight {x}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        asg.insert(Aminus(i), lift(am)?);
        asg.insert(Aplus(i), lift(ap)?);
        asg.insert(L(i), Matrix::diagonal(exps.iter().map(|&e| qp(e)).collect()));
        asg.insert(Lbar(i), Matrix::diagonal(exps.iter().map(|&e| qp(-e)).collect()));
    }
    let rep = MatrixRep::new(
        format!("q^H-lift({})", classical.id),
        crate::freealg::Alphabet::quantum_cag(n),
        classical.dim,
        Some(QMode::Symbolic),
        asg,
    )?;
    let at_one: Assignment = [(Var::Q, Rational::from_integer(1.into()))].into_iter().collect();
    let pres = quantum_cag(n)?;
    let results = pres
        .relations
        .par_iter()
        .map(|r| {
            let t = Instant::now();
            let m = rep.eval(&r.poly)?;
            let mut entries = Vec::new();
            for (row, col, x) in m.nonzero_entries() {
                match x.eval(&at_one) {
                    Ok(v) if v == Rational::from_integer(0.into()) => {}
                    Ok(v) => entries.push(format!("({row},{col}): {v}")),
                    Err(_) => entries.push(format!("({row},{col}): pole at q=1")),
                }
            }
            Ok(Outcome::new(r.id.clone(), entries, millis(t)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut m = meta("classical-limit(q-cag)", n, &rep);
    m.q_mode = "q=1".into();
    Ok(VerificationReport::assemble(m, results, millis(start)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{fock_matrix_rep, fock_module};
    use crate::matrep::defining_rep_classical;
    use crate::presentations::{classical_cag, quantum_chevalley};

    #[test]
    fn core_oracle_run_n2() {
        let rep = quantum_cag_rep::<RatFunc>(2, &QMode::Symbolic).unwrap();
        let report = verify_presentation(&quantum_cag(2).unwrap(), &rep).unwrap();
        assert!(report.all_zero(), "{}", report.to_text());
        assert_eq!(report.meta.note, EVIDENCE_NOTE);
    }

    #[test]
    fn fock_oracle_run() {
        let rep = fock_matrix_rep::<Rational>(&fock_module(3, 2).unwrap()).unwrap();
        assert!(verify_presentation(&classical_cag(3, true).unwrap(), &rep).unwrap().all_zero());
    }

    #[test]
    fn sign_flip_is_caught() {
        let rep = quantum_cag_rep::<RatFunc>(1, &QMode::Symbolic).unwrap();
        let report = verify_presentation(&sign_flipped_21c(1).unwrap(), &rep).unwrap();
        let o = report.outcome("q-cag/21c/i=1").unwrap();
        assert_eq!(o.status, Status::Nonzero);
        assert_eq!(o.residual, "(0,0): 2; (1,1): -2");
        assert_eq!(report.summary.nonzero, 1);
    }

    #[test]
    fn named_consequence_examples() {
        let rep = quantum_combined_rep::<RatFunc>(3, &QMode::Symbolic).unwrap();
        let report = verify_named_consequences(3, &rep).unwrap();
        assert!(report.all_zero(), "{}", report.to_text());
        for id in ["15c/i=2/j=2", "15a/i=2/j=1", "18b/minus-plus/i=1", "17/i=2", "18a-vs-11c/i=1"] {
            assert!(report.outcome(id).is_some(), "{id}");
        }
        let rels: BTreeMap<_, _> = named_consequences(2).into_iter().collect();
        let expected = &Poly::bracket(&gp(E(2)), &gp(Aminus(1)), &qp(1)) + &gp(Aminus(2)).scale(&qp(1));
        assert_eq!(rels["15a/i=2/j=1"], expected);
    }

    #[test]
    fn round_trips() {
        let rep = defining_rep_classical::<Rational>(3).unwrap();
        assert!(round_trip_check(Direction::Classical, 3, &rep).unwrap().all_zero());
        let rep = vector_rep_quantum::<RatFunc>(2, &QMode::Symbolic).unwrap();
        assert!(round_trip_check(Direction::Quantum, 2, &rep).unwrap().all_zero());
        let rep = vector_rep_quantum::<RatFunc>(1, &QMode::Symbolic).unwrap();
        assert!(round_trip_check(Direction::Quantum, 1, &rep).unwrap().all_zero());
    }

    #[test]
    fn probe_examples() {
        let rep = quantum_cag_rep::<RatFunc>(2, &QMode::Symbolic).unwrap();
        let rows = probe_21d_range(2, &rep).unwrap();
        let row = rows.iter().find(|r| (r.i, r.xi, r.eta, r.j) == (1, 1, 1, 2)).unwrap();
        assert_eq!(row.status, Status::Zero);
        let rep1 = quantum_cag_rep::<RatFunc>(1, &QMode::Symbolic).unwrap();
        assert!(probe_21d_range(1, &rep1).unwrap().is_empty());
    }

    #[test]
    fn classical_limit_on_defining_rep() {
        let rep = defining_rep_classical::<Rational>(2).unwrap();
        let report = classical_limit_check(2, &rep).unwrap();
        assert!(report.all_zero(), "{}", report.to_text());
    }

    #[test]
    fn tensor_square_satisfies_relations() {
        let rep = quantum_tensor_rep::<RatFunc>(2, &QMode::Symbolic).unwrap();
        assert!(verify_presentation(&quantum_chevalley(2).unwrap(), &rep).unwrap().all_zero());
        assert!(verify_presentation(&quantum_cag(2).unwrap(), &rep).unwrap().all_zero());
    }

    #[test]
    fn reports_are_deterministic() {
        let rep = quantum_cag_rep::<Rational>(3, &QMode::default_numeric()).unwrap();
        let pres = quantum_cag(3).unwrap();
        let a = verify_presentation(&pres, &rep).unwrap().without_timing().to_json();
        let b = verify_presentation(&pres, &rep).unwrap().without_timing().to_json();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn residual_truncation() {
        let entries: Vec<String> = (0..25).map(|i| format!("e{i}")).collect();
        let o = Outcome::new("x".into(), entries, 0.0);
        assert!(o.residual.ends_with("; ... (+5 more)"));
        assert_eq!(o.render(None).matches(';').count(), 24);
    }
}
