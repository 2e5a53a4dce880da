//! Builders for the four presentations: classical and quantum, each in the
//! Chevalley and in the creation/annihilation generator (CAG) form.
//!
//! A presentation is a list of relations, each an element of the free algebra
//! that must vanish in every admissible representation. Relation ids are
//! structured strings such as `q-cag/21d/xi=+1/eta=-1/i=2/j=3`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, GenSymbol, NCPoly};
use crate::scalar::{Coeff, QMode, RatFunc, Specialize};
use crate::Poly;

use GenSymbol::*;

/// Type A_n Cartan matrix, 1-based access.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 1 {
        Err(Error::InvalidRank(n))
    } else {
        Ok(())
    }
}

fn delta(i: usize, j: usize) -> i64 {
    i64::from(i == j)
}

fn alpha(i: usize, j: usize) -> i64 {
    2 * delta(i, j) - delta(i, j + 1) - delta(i + 1, j)
}

pub fn cartan_matrix(n: usize) -> Result<CartanMatrix> {
    check_rank(n)?;
    let entries = (1..=n).map(|i| (1..=n).map(|j| alpha(i, j)).collect()).collect();
    Ok(CartanMatrix { n, entries })
}

/// Sum of the Cartan entries over the upper-left `i x j` block.
pub fn cartan_sum(n: usize, i: usize, j: usize) -> Result<i64> {
    let a = cartan_matrix(n)?;
    for idx in [i, j] {
        if idx < 1 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, n });
        }
    }
    Ok((1..=i).flat_map(|r| (1..=j).map(move |s| (r, s))).map(|(r, s)| a.get(r, s)).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PresentationKind {
    ClassicalChevalley,
    ClassicalCag,
    QuantumChevalley,
    QuantumCag,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub id: String,
    pub poly: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weight {
    Homogeneous(Vec<i64>),
    Inhomogeneous,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Presentation {
    pub kind: PresentationKind,
    pub n: usize,
    pub alphabet: Alphabet,
    pub relations: Vec<Relation>,
    pub weights: BTreeMap<GenSymbol, Vec<i64>>,
}

impl Presentation {
    fn new(kind: PresentationKind, n: usize, alphabet: Alphabet, relations: Vec<Relation>) -> Self {
        let weights = alphabet.symbols().map(|g| (g, symbol_weight(n, g))).collect();
        Presentation { kind, n, alphabet, relations, weights }
    }

    pub fn relation(&self, id: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.id == id)
    }

    /// Replace the polynomial of one relation, keeping its id and position.
    pub fn with_relation(&self, id: &str, poly: Poly) -> Result<Presentation> {
        let mut out = self.clone();
        let slot = out
            .relations
            .iter_mut()
            .find(|r| r.id == id)
            .ok_or_else(|| Error::UnknownRelation(id.to_string()))?;
        slot.poly = poly;
        Ok(out)
    }

    /// Relations with coefficients specialized for the given q-mode.
    pub fn relations_in<S: Specialize>(&self, mode: &QMode) -> Result<Vec<(String, NCPoly<S>)>> {
        self.relations
            .iter()
            .map(|r| Ok((r.id.clone(), r.poly.try_map_coeffs(|c| S::specialize(c, mode))?)))
            .collect()
    }

    pub fn weight_of<S: Coeff>(&self, poly: &NCPoly<S>) -> Weight {
        weight_of(self.n, poly)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.kind,
            "n": self.n,
            "alphabet": self.alphabet.symbols().map(|g| g.to_string()).collect::<Vec<_>>(),
            "relations": self
                .relations
                .iter()
                .map(|r| serde_json::json!({"id": r.id, "relation": r.poly.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Weight of a generator in the epsilon basis `(ε_0, …, ε_n)`.
pub fn symbol_weight(n: usize, g: GenSymbol) -> Vec<i64> {
    let mut w = vec![0; n + 1];
    let mut set = |a: u32, b: u32| {
        if (a as usize) <= n && (b as usize) <= n {
            w[a as usize] += 1;
            w[b as usize] -= 1;
        }
    };
    match g {
        E(i) => set(i - 1, i),
        F(i) => set(i, i - 1),
        Aplus(i) => set(i, 0),
        Aminus(i) => set(0, i),
        H(_) | K(_) | Kbar(_) | L(_) | Lbar(_) | Free(_) => {}
    }
    w
}

/// Common weight of every word of `poly`, or [`Weight::Inhomogeneous`].
pub fn weight_of<S: Coeff>(n: usize, poly: &NCPoly<S>) -> Weight {
    let mut common: Option<Vec<i64>> = None;
    for (w, _) in poly.terms() {
        let mut total = vec![0; n + 1];
        for g in w.symbols() {
            for (t, x) in total.iter_mut().zip(symbol_weight(n, *g)) {
                *t += x;
            }
        }
        match &common {
            None => common = Some(total),
            Some(c) if *c == total => {}
            Some(_) => return Weight::Inhomogeneous,
        }
    }
    Weight::Homogeneous(common.unwrap_or_else(|| vec![0; n + 1]))
}

fn g(s: GenSymbol) -> Poly {
    Poly::gen(s)
}

fn int(x: i64) -> RatFunc {
    RatFunc::from_int(x)
}

fn comm(a: &Poly, b: &Poly) -> Poly {
    Poly::commutator(a, b)
}

fn br(a: &Poly, b: &Poly, x: &RatFunc) -> Poly {
    Poly::bracket(a, b, x)
}

fn qp(m: i64) -> RatFunc {
    RatFunc::q_pow(m)
}

/// `1/(q - q̄)`.
fn inv_q_minus_qbar() -> RatFunc {
    (&qp(1) - &qp(-1)).inv().expect("q - 1/q is nonzero")
}

fn sgn(x: i64) -> &'static str {
    if x > 0 {
        "+1"
    } else {
        "-1"
    }
}

fn a_sym(i: usize, sign: i64) -> GenSymbol {
    if sign > 0 {
        Aplus(i as u32)
    } else {
        Aminus(i as u32)
    }
}

fn rel(id: String, poly: Poly) -> Relation {
    Relation { id, poly }
}

/// Cartan and Serre relations of U[sl(n+1)] on ê, f̂, ĥ.
pub fn classical_chevalley(n: usize) -> Result<Presentation> {
    check_rank(n)?;
    let mut rels = Vec::new();
    let e = |i: usize| g(E(i as u32));
    let f = |i: usize| g(F(i as u32));
    let h = |i: usize| g(H(i as u32));
    for i in 1..=n {
        for j in i + 1..=n {
            rels.push(rel(format!("cl-chev/5/hh/i={i}/j={j}"), comm(&h(i), &h(j))));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let a = int(alpha(i, j));
            rels.push(rel(
                format!("cl-chev/5/he/i={i}/j={j}"),
                &comm(&h(i), &e(j)) - &e(j).scale(&a),
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let a = int(alpha(i, j));
            rels.push(rel(
                format!("cl-chev/5/hf/i={i}/j={j}"),
                &comm(&h(i), &f(j)) + &f(j).scale(&a),
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let rhs = if i == j { h(i) } else { Poly::zero() };
            rels.push(rel(format!("cl-chev/5/ef/i={i}/j={j}"), &comm(&e(i), &f(j)) - &rhs));
        }
    }
    for i in 1..=n {
        for j in i + 2..=n {
            rels.push(rel(format!("cl-chev/6/ee/i={i}/j={j}"), comm(&e(i), &e(j))));
            rels.push(rel(format!("cl-chev/6/ff/i={i}/j={j}"), comm(&f(i), &f(j))));
        }
    }
    for i in 1..=n {
        for j in [i.wrapping_sub(1), i + 1] {
            if j < 1 || j > n {
                continue;
            }
            rels.push(rel(
                format!("cl-chev/6/eee/i={i}/j={j}"),
                comm(&e(i), &comm(&e(i), &e(j))),
            ));
            rels.push(rel(
                format!("cl-chev/6/fff/i={i}/j={j}"),
                comm(&f(i), &comm(&f(i), &f(j))),
            ));
        }
    }
    Ok(Presentation::new(PresentationKind::ClassicalChevalley, n, Alphabet::classical_chevalley(n), rels))
}

/// CAG presentation of U[sl(n+1)]: the minimal set, or with `extended` every
/// triple relation and every pairwise commutation among same-type CAGs.
pub fn classical_cag(n: usize, extended: bool) -> Result<Presentation> {
    check_rank(n)?;
    let a = |i: usize, s: i64| g(a_sym(i, s));
    let mut rels = Vec::new();
    for xi in [1i64, -1] {
        for i in 1..=n {
            for j in i + 1..=n {
                if extended || (i == 1 && j == 2) {
                    rels.push(rel(
                        format!("cl-cag/comm/xi={}/i={i}/j={j}", sgn(xi)),
                        comm(&a(i, xi), &a(j, xi)),
                    ));
                }
            }
        }
    }
    for xi in [1i64, -1] {
        for i in 1..=n {
            for j in 1..=n {
                if !extended && i.abs_diff(j) > 1 {
                    continue;
                }
                for k in 1..=n {
                    let lhs = comm(&comm(&a(i, xi), &a(j, -xi)), &a(k, xi));
                    let rhs = &a(i, xi).scale(&int(delta(j, k))) + &a(k, xi).scale(&int(delta(i, j)));
                    rels.push(rel(
                        format!("cl-cag/triple/xi={}/i={i}/j={j}/k={k}", sgn(xi)),
                        &lhs - &rhs,
                    ));
                }
            }
        }
    }
    Ok(Presentation::new(PresentationKind::ClassicalCag, n, Alphabet::classical_cag(n), rels))
}

/// Chevalley presentation of U_q[sl(n+1)] on e, f, k, k̄.
pub fn quantum_chevalley(n: usize) -> Result<Presentation> {
    check_rank(n)?;
    let e = |i: usize| g(E(i as u32));
    let f = |i: usize| g(F(i as u32));
    let k = |i: usize| g(K(i as u32));
    let kb = |i: usize| g(Kbar(i as u32));
    let one = Poly::one();
    let mut rels = Vec::new();
    for i in 1..=n {
        rels.push(rel(format!("q-chev/11a/kkbar/i={i}"), &(&k(i) * &kb(i)) - &one));
        rels.push(rel(format!("q-chev/11a/kbark/i={i}"), &(&kb(i) * &k(i)) - &one));
        for j in i + 1..=n {
            rels.push(rel(format!("q-chev/11a/kk/i={i}/j={j}"), comm(&k(i), &k(j))));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let a = alpha(i, j);
            rels.push(rel(format!("q-chev/11b/ke/i={i}/j={j}"), br(&k(i), &e(j), &qp(a))));
            rels.push(rel(format!("q-chev/11b/kf/i={i}/j={j}"), br(&k(i), &f(j), &qp(-a))));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let rhs = if i == j {
                (&k(i) - &kb(i)).scale(&inv_q_minus_qbar())
            } else {
                Poly::zero()
            };
            rels.push(rel(format!("q-chev/11c/i={i}/j={j}"), &comm(&e(i), &f(j)) - &rhs));
        }
    }
    for i in 1..=n {
        for j in i + 2..=n {
            rels.push(rel(format!("q-chev/12a/ee/i={i}/j={j}"), comm(&e(i), &e(j))));
            rels.push(rel(format!("q-chev/12a/ff/i={i}/j={j}"), comm(&f(i), &f(j))));
        }
    }
    for i in 1..=n {
        for j in [i.wrapping_sub(1), i + 1] {
            if j < 1 || j > n {
                continue;
            }
            for (label, inner, outer) in [("qbar-q", qp(-1), qp(1)), ("q-qbar", qp(1), qp(-1))] {
                rels.push(rel(
                    format!("q-chev/12b/e/{label}/i={i}/j={j}"),
                    br(&e(i), &br(&e(i), &e(j), &inner), &outer),
                ));
                rels.push(rel(
                    format!("q-chev/12b/f/{label}/i={i}/j={j}"),
                    br(&f(i), &br(&f(i), &f(j), &inner), &outer),
                ));
            }
        }
    }
    Ok(Presentation::new(PresentationKind::QuantumChevalley, n, Alphabet::quantum_chevalley(n), rels))
}

/// `L_j^{e}` for `e = ±1`.
fn l_pow(j: usize, e: i64) -> GenSymbol {
    if e > 0 {
        L(j as u32)
    } else {
        Lbar(j as u32)
    }
}

/// The (21d) triple relation for one index tuple.
pub fn triple_relation_21d(xi: i64, eta: i64, i: usize, j: usize) -> Poly {
    let a = |idx: usize, s: i64| g(a_sym(idx, s));
    let ixi = (i as i64 + xi) as usize;
    let exponent = xi * (1 + delta(i, j));
    let lhs = br(&comm(&a(i, eta), &a(ixi, -eta)), &a(j, eta), &qp(exponent));
    if j == ixi {
        &lhs - &(&g(l_pow(j, -xi * eta)) * &a(i, eta))
    } else {
        lhs
    }
}

/// The (21c) relation `[a_i^-, a_i^+] - (L_i - L̄_i)/(q - q̄)`.
pub fn cartan_pairing_21c(i: usize) -> Poly {
    let lhs = comm(&g(Aminus(i as u32)), &g(Aplus(i as u32)));
    &lhs - &(&g(L(i as u32)) - &g(Lbar(i as u32))).scale(&inv_q_minus_qbar())
}

/// The CAG presentation of U_q[sl(n+1)]: generators a_i^±, L_i, L̄_i.
///
/// The triple relations are generated for every `j` in `1..=n`; which of them
/// vanish is checked, never assumed.
pub fn quantum_cag(n: usize) -> Result<Presentation> {
    check_rank(n)?;
    let a = |i: usize, s: i64| g(a_sym(i, s));
    let l = |i: usize| g(L(i as u32));
    let lb = |i: usize| g(Lbar(i as u32));
    let one = Poly::one();
    let mut rels = Vec::new();
    for i in 1..=n {
        rels.push(rel(format!("q-cag/21a/LLbar/i={i}"), &(&l(i) * &lb(i)) - &one));
        rels.push(rel(format!("q-cag/21a/LbarL/i={i}"), &(&lb(i) * &l(i)) - &one));
        for j in i + 1..=n {
            rels.push(rel(format!("q-cag/21a/LL/i={i}/j={j}"), comm(&l(i), &l(j))));
        }
    }
    for sign in [1i64, -1] {
        for i in 1..=n {
            for j in 1..=n {
                let x = qp(-sign * (1 + delta(i, j)));
                rels.push(rel(
                    format!("q-cag/21b/sign={}/i={i}/j={j}", sgn(sign)),
                    br(&l(i), &a(j, sign), &x),
                ));
            }
        }
    }
    for i in 1..=n {
        rels.push(rel(format!("q-cag/21c/i={i}"), cartan_pairing_21c(i)));
    }
    for xi in [1i64, -1] {
        for eta in [1i64, -1] {
            for i in 1..=n {
                let ixi = i as i64 + xi;
                if ixi < 1 || ixi > n as i64 {
                    continue;
                }
                for j in 1..=n {
                    rels.push(rel(
                        format!("q-cag/21d/xi={}/eta={}/i={i}/j={j}", sgn(xi), sgn(eta)),
                        triple_relation_21d(xi, eta, i, j),
                    ));
                }
            }
        }
    }
    if n >= 2 {
        for eta in [1i64, -1] {
            rels.push(rel(
                format!("q-cag/21e/eta={}", sgn(eta)),
                br(&a(1, eta), &a(2, eta), &qp(1)),
            ));
        }
    }
    Ok(Presentation::new(PresentationKind::QuantumCag, n, Alphabet::quantum_cag(n), rels))
}
