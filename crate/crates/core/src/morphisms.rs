//! Generator-substitution homomorphisms between presentations and the
//! coproduct on Chevalley generators and CAGs.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, GenSymbol, NCPoly, TensorPoly, Word};
use crate::scalar::{Coeff, QMode, RatFunc, Specialize};
use crate::{Poly, Tensor};

use GenSymbol::*;

/// A homomorphism of free algebras given by the images of generators.
#[derive(Debug, Clone, PartialEq)]
pub struct GenMap<S> {
    pub name: String,
    pub source: Alphabet,
    pub target: Alphabet,
    images: BTreeMap<GenSymbol, NCPoly<S>>,
}

#[derive(Serialize)]
struct ImageEntry {
    source: String,
    image: String,
}

impl<S: Coeff> GenMap<S> {
    pub fn new(
        name: impl Into<String>,
        source: Alphabet,
        target: Alphabet,
        images: BTreeMap<GenSymbol, NCPoly<S>>,
    ) -> Result<Self> {
        for g in source.symbols() {
            let img = images.get(&g).ok_or(Error::UnassignedSymbol(g))?;
            target.check(img)?;
        }
        Ok(GenMap { name: name.into(), source, target, images })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = alphabet.symbols().map(|g| (g, NCPoly::gen(g))).collect();
        GenMap {
            name: format!("id({})", alphabet.name()),
            source: alphabet.clone(),
            target: alphabet.clone(),
            images,
        }
    }

    pub fn image(&self, g: GenSymbol) -> Result<&NCPoly<S>> {
        self.images.get(&g).ok_or(Error::UnassignedSymbol(g))
    }

    pub fn images(&self) -> impl Iterator<Item = (GenSymbol, &NCPoly<S>)> {
        self.images.iter().map(|(g, p)| (*g, p))
    }

    /// Homomorphic extension to the whole free algebra.
    pub fn apply(&self, p: &NCPoly<S>) -> Result<NCPoly<S>> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NCPoly::scalar(c.clone());
            for g in w.symbols() {
                acc = &acc * self.image(*g)?;
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &GenMap<S>) -> Result<GenMap<S>> {
        let images = inner
            .images
            .iter()
            .map(|(g, p)| Ok((*g, self.apply(p)?)))
            .collect::<Result<_>>()?;
        Ok(GenMap {
            name: format!("{} . {}", self.name, inner.name),
            source: inner.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .images
            .iter()
            .map(|(g, p)| ImageEntry { source: g.to_string(), image: p.to_string() })
            .collect();
        serde_json::to_value(entries).expect("image entries serialize")
    }
}

impl GenMap<RatFunc> {
    pub fn specialize<T: Specialize>(&self, mode: &QMode) -> Result<GenMap<T>> {
        let images = self
            .images
            .iter()
            .map(|(g, p)| Ok((*g, p.try_map_coeffs(|c| T::specialize(c, mode))?)))
            .collect::<Result<_>>()?;
        Ok(GenMap {
            name: self.name.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            images,
        })
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 1 {
        Err(Error::InvalidRank(n))
    } else {
        Ok(())
    }
}

fn g(s: GenSymbol) -> Poly {
    Poly::gen(s)
}

fn qp(m: i64) -> RatFunc {
    RatFunc::q_pow(m)
}

fn u(i: usize) -> u32 {
    i as u32
}

/// Classical CAGs as nested commutators of Chevalley generators.
pub fn cag_from_chevalley_classical(n: usize) -> Result<GenMap<RatFunc>> {
    check_rank(n)?;
    let mut images = BTreeMap::new();
    let mut minus = g(E(1));
    let mut plus = g(F(1));
    for i in 1..=n {
        if i > 1 {
            minus = Poly::commutator(&minus, &g(E(u(i))));
            plus = Poly::commutator(&g(F(u(i))), &plus);
        }
        images.insert(Aminus(u(i)), minus.clone());
        images.insert(Aplus(u(i)), plus.clone());
    }
    GenMap::new(
        "cl-cag<-cl-chevalley",
        Alphabet::classical_cag(n),
        Alphabet::classical_chevalley(n),
        images,
    )
}

/// Classical Chevalley generators as polynomials in the CAGs.
pub fn chevalley_from_cag_classical(n: usize) -> Result<GenMap<RatFunc>> {
    check_rank(n)?;
    let am = |i: usize| g(Aminus(u(i)));
    let ap = |i: usize| g(Aplus(u(i)));
    let mut images = BTreeMap::new();
    for i in 1..=n {
        let h = Poly::commutator(&am(i), &ap(i));
        if i == 1 {
            images.insert(E(1), am(1));
            images.insert(F(1), ap(1));
            images.insert(H(1), h);
        } else {
            images.insert(E(u(i)), Poly::commutator(&ap(i - 1), &am(i)));
            images.insert(F(u(i)), Poly::commutator(&ap(i), &am(i - 1)));
            images.insert(H(u(i)), &h - &Poly::commutator(&am(i - 1), &ap(i - 1)));
        }
    }
    GenMap::new(
        "cl-chevalley<-cl-cag",
        Alphabet::classical_chevalley(n),
        Alphabet::classical_cag(n),
        images,
    )
}

/// Deformed CAGs and L-generators in terms of the quantum Chevalley generators.
pub fn cag_from_chevalley_quantum(n: usize) -> Result<GenMap<RatFunc>> {
    check_rank(n)?;
    let mut images = BTreeMap::new();
    let mut minus = g(E(1));
    let mut plus = g(F(1));
    let mut l = g(K(1));
    let mut lbar = g(Kbar(1));
    for i in 1..=n {
        if i > 1 {
            minus = Poly::bracket(&minus, &g(E(u(i))), &qp(-1));
            plus = Poly::bracket(&g(F(u(i))), &plus, &qp(1));
            l = &l * &g(K(u(i)));
            lbar = &g(Kbar(u(i))) * &lbar;
        }
        images.insert(Aminus(u(i)), minus.clone());
        images.insert(Aplus(u(i)), plus.clone());
        images.insert(L(u(i)), l.clone());
        images.insert(Lbar(u(i)), lbar.clone());
    }
    GenMap::new(
        "q-cag<-q-chevalley",
        Alphabet::quantum_cag(n),
        Alphabet::quantum_chevalley(n),
        images,
    )
}

/// Quantum Chevalley generators in terms of the deformed CAGs and L-generators.
pub fn chevalley_from_cag_quantum(n: usize) -> Result<GenMap<RatFunc>> {
    check_rank(n)?;
    let am = |i: usize| g(Aminus(u(i)));
    let ap = |i: usize| g(Aplus(u(i)));
    let l = |i: usize| g(L(u(i)));
    let lb = |i: usize| g(Lbar(u(i)));
    let minus_one = RatFunc::from_int(-1);
    let mut images = BTreeMap::new();
    images.insert(E(1), am(1));
    images.insert(F(1), ap(1));
    images.insert(K(1), l(1));
    images.insert(Kbar(1), lb(1));
    for i in 1..n {
        let e = &Poly::commutator(&am(i + 1), &ap(i)) * &l(i);
        let f = &lb(i) * &Poly::commutator(&am(i), &ap(i + 1));
        images.insert(E(u(i + 1)), e.scale(&minus_one));
        images.insert(F(u(i + 1)), f.scale(&minus_one));
        images.insert(K(u(i + 1)), &l(i + 1) * &lb(i));
        images.insert(Kbar(u(i + 1)), &l(i) * &lb(i + 1));
    }
    GenMap::new(
        "q-chevalley<-q-cag",
        Alphabet::quantum_chevalley(n),
        Alphabet::quantum_cag(n),
        images,
    )
}

/// An algebra map into the tensor square, given on generators.
#[derive(Debug, Clone, PartialEq)]
pub struct CoproductMap<S> {
    pub alphabet: Alphabet,
    images: BTreeMap<GenSymbol, TensorPoly<S>>,
}

impl<S: Coeff> CoproductMap<S> {
    pub fn image(&self, g: GenSymbol) -> Result<&TensorPoly<S>> {
        self.images.get(&g).ok_or(Error::UnassignedSymbol(g))
    }

    pub fn images(&self) -> impl Iterator<Item = (GenSymbol, &TensorPoly<S>)> {
        self.images.iter().map(|(g, t)| (*g, t))
    }

    pub fn apply(&self, p: &NCPoly<S>) -> Result<TensorPoly<S>> {
        let mut out = TensorPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = TensorPoly::one().scale(c);
            for g in w.symbols() {
                acc = &acc * self.image(*g)?;
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

impl CoproductMap<RatFunc> {
    pub fn specialize<T: Specialize>(&self, mode: &QMode) -> Result<CoproductMap<T>> {
        let images = self
            .images
            .iter()
            .map(|(g, t)| Ok((*g, t.try_map_coeffs(|c| T::specialize(c, mode))?)))
            .collect::<Result<_>>()?;
        Ok(CoproductMap { alphabet: self.alphabet.clone(), images })
    }
}

/// Δe = e⊗1 + k̄⊗e, Δf = f⊗k + 1⊗f, Δk = k⊗k, Δk̄ = k̄⊗k̄.
pub fn coproduct_chevalley(n: usize) -> Result<CoproductMap<RatFunc>> {
    check_rank(n)?;
    let one = Poly::one();
    let mut images = BTreeMap::new();
    for i in 1..=n {
        let (e, f, k, kb) = (g(E(u(i))), g(F(u(i))), g(K(u(i))), g(Kbar(u(i))));
        images.insert(E(u(i)), &Tensor::pure(&e, &one) + &Tensor::pure(&kb, &e));
        images.insert(F(u(i)), &Tensor::pure(&f, &k) + &Tensor::pure(&one, &f));
        images.insert(K(u(i)), Tensor::pure(&k, &k));
        images.insert(Kbar(u(i)), Tensor::pure(&kb, &kb));
    }
    Ok(CoproductMap { alphabet: Alphabet::quantum_chevalley(n), images })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoproductMode {
    /// Slots in the Chevalley alphabet.
    Raw,
    /// Slots rewritten in the a/L alphabet.
    Cag,
}

/// Δa_i^± obtained by applying Δ to the nested-bracket expression of a_i^±.
pub fn coproduct_on_cag(n: usize, i: usize, sign: i64, mode: CoproductMode) -> Result<Tensor> {
    check_rank(n)?;
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let target = if sign < 0 { Aminus(u(i)) } else { Aplus(u(i)) };
    coproduct_of(n, target, mode)
}

/// Δ of any quantum generator; CAG-alphabet symbols go through their
/// Chevalley expressions.
pub fn coproduct_of(n: usize, gen: GenSymbol, mode: CoproductMode) -> Result<Tensor> {
    check_rank(n)?;
    let delta = coproduct_chevalley(n)?;
    if let Ok(t) = delta.image(gen) {
        return Ok(t.clone());
    }
    let cag = cag_from_chevalley_quantum(n)?;
    let image = cag
        .image(gen)
        .map_err(|_| Error::AlphabetMismatch(gen, "q-chevalley+q-cag".into()))?;
    let raw = delta.apply(image)?;
    match mode {
        CoproductMode::Raw => Ok(raw),
        CoproductMode::Cag => rewrite_in_cag(n, &raw, &cag)
            .ok_or_else(|| Error::NoClosedForm(format!("Delta({gen})"))),
    }
}

/// Exponent vector `d` with the Cartan letter equal to `q^{d·h}` in the ε-basis.
pub fn cartan_vector(n: usize, g: GenSymbol) -> Option<Vec<i64>> {
    let mut d = vec![0; n + 1];
    let (a, b, s) = match g {
        K(i) => (i - 1, i, 1),
        Kbar(i) => (i - 1, i, -1),
        L(i) => (0, i, 1),
        Lbar(i) => (0, i, -1),
        _ => return None,
    };
    d[a as usize] += s;
    d[b as usize] -= s;
    Some(d)
}

fn pairing(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Move every Cartan letter of `w` to the right.
///
/// Returns the remaining word, the collected Cartan vector, and the power of
/// q picked up by the commutations.
fn split_cartan(n: usize, w: &Word) -> (Word, Vec<i64>, i64) {
    let mut rest = Vec::new();
    let mut d = vec![0; n + 1];
    let mut qexp = 0;
    for g in w.symbols() {
        match cartan_vector(n, *g) {
            Some(c) => d.iter_mut().zip(c).for_each(|(x, y)| *x += y),
            None => {
                qexp += pairing(&d, &crate::presentations::symbol_weight(n, *g));
                rest.push(*g);
            }
        }
    }
    (Word(rest), d, qexp)
}

/// Word `L_1^{l_1} ⋯ L_n^{l_n}` with `d = Σ l_i (ε_0 - ε_i)`.
fn l_word(d: &[i64]) -> Option<Word> {
    let mut out = Vec::new();
    let mut total = 0;
    for (i, &di) in d.iter().enumerate().skip(1) {
        let l = -di;
        total += l;
        let sym = if l > 0 { L(i as u32) } else { Lbar(i as u32) };
        out.extend(std::iter::repeat_n(sym, l.unsigned_abs() as usize));
    }
    (total == d[0]).then_some(Word(out))
}

/// A Cartan-free Chevalley polynomial `chev` with `chev = cag · q^{shift·h}`.
struct DictEntry {
    chev: Poly,
    cag: Poly,
    shift: Vec<i64>,
}

fn dictionary(n: usize, cag: &GenMap<RatFunc>) -> Vec<DictEntry> {
    let zero = vec![0; n + 1];
    let mut out = vec![DictEntry { chev: Poly::one(), cag: Poly::one(), shift: zero.clone() }];
    for i in 1..=n {
        for s in [Aminus(u(i)), Aplus(u(i))] {
            let chev = cag.image(s).expect("CAG image").clone();
            out.push(DictEntry { chev, cag: g(s), shift: zero.clone() });
        }
    }
    for j in 2..=n {
        out.push(DictEntry {
            chev: g(E(u(j))),
            cag: Poly::commutator(&g(Aplus(u(j - 1))), &g(Aminus(u(j)))),
            shift: cartan_vector(n, L(u(j - 1))).unwrap(),
        });
        out.push(DictEntry {
            chev: g(F(u(j))),
            cag: Poly::commutator(&g(Aplus(u(j))), &g(Aminus(u(j - 1)))).scale(&qp(-1)),
            shift: cartan_vector(n, Lbar(u(j - 1))).unwrap(),
        });
    }
    out
}

/// `Some(λ)` with `p = λ·base`.
fn ratio(p: &Poly, base: &Poly) -> Option<RatFunc> {
    if p.len() != base.len() || p.is_zero() {
        return None;
    }
    let (w0, c0) = base.terms().next()?;
    let lambda = p.coeff(w0).checked_div(c0).ok()?;
    if lambda.is_zero() {
        return None;
    }
    base.terms().all(|(w, c)| p.coeff(w) == c * &lambda).then_some(lambda)
}

/// Express `p · q^{d·h}` over the a/L alphabet.
fn recognize(dict: &[DictEntry], p: &Poly, d: &[i64]) -> Option<Poly> {
    dict.iter().find_map(|entry| {
        let lambda = ratio(p, &entry.chev)?;
        let total: Vec<i64> = d.iter().zip(&entry.shift).map(|(a, b)| a + b).collect();
        let lw = Poly::word(l_word(&total)?.symbols());
        Some((&entry.cag * &lw).scale(&lambda))
    })
}

fn rewrite_in_cag(n: usize, raw: &Tensor, cag: &GenMap<RatFunc>) -> Option<Tensor> {
    type Key = (Vec<i64>, Vec<i64>);
    let mut groups: BTreeMap<Key, BTreeMap<Word, Poly>> = BTreeMap::new();
    for ((lw, rw), c) in raw.terms() {
        let (lrest, dl, el) = split_cartan(n, lw);
        let (rrest, dr, er) = split_cartan(n, rw);
        let coeff = c * &qp(el + er);
        let slot = groups.entry((dl, dr)).or_default().entry(rrest).or_insert_with(Poly::zero);
        *slot = &*slot + &Poly::term(lrest, coeff);
    }
    let dict = dictionary(n, cag);
    let mut out = Tensor::zero();
    for ((dl, dr), by_right) in groups {
        // Merge right words sharing a left factor up to a scalar.
        let mut buckets: Vec<(Poly, Poly)> = Vec::new();
        for (rw, left) in by_right {
            if left.is_zero() {
                continue;
            }
            let right = Poly::word(rw.symbols());
            match buckets.iter_mut().find_map(|(l, r)| ratio(&left, l).map(|x| (r, x))) {
                Some((r, x)) => *r = &*r + &right.scale(&x),
                None => buckets.push((left, right)),
            }
        }
        for (left, right) in buckets {
            let l = recognize(&dict, &left, &dl)?;
            let r = recognize(&dict, &right, &dr)?;
            out = &out + &Tensor::pure(&l, &r);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: GenSymbol) -> Poly {
        g(s)
    }

    #[test]
    fn apply_basics() {
        let alpha = Alphabet::quantum_chevalley(2);
        let id = GenMap::identity(&alpha);
        let w = &p(E(1)) * &p(E(2));
        assert_eq!(id.apply(&w).unwrap(), w);
        assert_eq!(id.apply(&Poly::one()).unwrap(), Poly::one());
        let two = RatFunc::from_int(2);
        let a = Alphabet::new("single", [E(1)]);
        let m = GenMap::new("double", a.clone(), a, [(E(1), p(E(1)).scale(&two))].into()).unwrap();
        let ww = &p(E(1)) * &p(E(1));
        assert_eq!(m.apply(&ww).unwrap(), ww.scale(&RatFunc::from_int(4)));
        assert_eq!(m.apply(&p(F(1))), Err(Error::UnassignedSymbol(F(1))));
    }

    #[test]
    fn k1_is_l1() {
        let to_cag = chevalley_from_cag_quantum(2).unwrap();
        assert_eq!(to_cag.apply(&p(K(1))).unwrap(), p(L(1)));
        assert_eq!(to_cag.image(K(2)).unwrap().to_string(), "L2 Lbar1");
    }

    #[test]
    fn classical_maps() {
        let m = cag_from_chevalley_classical(3).unwrap();
        assert_eq!(m.image(Aminus(2)).unwrap(), &Poly::commutator(&p(E(1)), &p(E(2))));
        assert_eq!(m.image(Aplus(1)).unwrap(), &p(F(1)));
        let a3 = m.image(Aplus(3)).unwrap();
        assert_eq!(a3.len(), 4);
        assert!(a3.terms().all(|(_, c)| c.as_rational().is_some_and(|r| r.numer().magnitude() == &1u32.into())));
        let back = chevalley_from_cag_classical(2).unwrap();
        assert_eq!(back.image(H(1)).unwrap(), &Poly::commutator(&p(Aminus(1)), &p(Aplus(1))));
        assert_eq!(back.image(E(2)).unwrap(), &Poly::commutator(&p(Aplus(1)), &p(Aminus(2))));
        assert_eq!(back.image(F(1)).unwrap(), &p(Aplus(1)));
    }

    /// Expand `[f_i, [… [f_2, f_1]_q …]]_q` word by word.
    fn brute_force_plus(i: usize) -> BTreeMap<Word, RatFunc> {
        let mut terms: BTreeMap<Word, RatFunc> = [(Word(vec![F(1)]), RatFunc::from_int(1))].into();
        for j in 2..=i as u32 {
            let mut next: BTreeMap<Word, RatFunc> = BTreeMap::new();
            for (w, c) in &terms {
                let left = Word(std::iter::once(F(j)).chain(w.0.iter().copied()).collect());
                let right = Word(w.0.iter().copied().chain(std::iter::once(F(j))).collect());
                let zero = RatFunc::from_int(0);
                let l = next.get(&left).unwrap_or(&zero) + c;
                next.insert(left, l);
                let r = next.get(&right).unwrap_or(&zero) - &(c * &qp(1));
                next.insert(right, r);
            }
            terms = next;
        }
        terms
    }

    #[test]
    fn quantum_maps() {
        let m = cag_from_chevalley_quantum(3).unwrap();
        let expected = &(&p(E(1)) * &p(E(2))) - &(&p(E(2)) * &p(E(1))).scale(&qp(-1));
        assert_eq!(m.image(Aminus(2)).unwrap(), &expected);
        assert_eq!(m.image(L(2)).unwrap(), &(&p(K(1)) * &p(K(2))));
        let a3 = m.image(Aplus(3)).unwrap();
        assert_eq!(a3.len(), 4);
        assert_eq!(a3.coeff(&Word(vec![F(1), F(2), F(3)])), qp(2));
        let oracle = brute_force_plus(3);
        assert_eq!(*a3, Poly::from_terms(oracle));
        let back = chevalley_from_cag_quantum(2).unwrap();
        assert_eq!(back.image(E(1)).unwrap(), &p(Aminus(1)));
        let f2 = (&p(Lbar(1)) * &Poly::commutator(&p(Aminus(1)), &p(Aplus(2)))).scale(&RatFunc::from_int(-1));
        assert_eq!(back.image(F(2)).unwrap(), &f2);
    }

    #[test]
    fn star_maps_minus_images_to_plus_images() {
        for n in 1..=5 {
            let m = cag_from_chevalley_quantum(n).unwrap();
            for i in 1..=n as u32 {
                let minus = m.image(Aminus(i)).unwrap();
                assert_eq!(&minus.star().unwrap(), m.image(Aplus(i)).unwrap());
            }
        }
    }

    #[test]
    fn coproduct_on_chevalley_generators() {
        let d = coproduct_chevalley(1).unwrap();
        assert_eq!(d.image(E(1)).unwrap().to_string(), "e1 ⊗ 1 + kbar1 ⊗ e1");
        assert_eq!(d.image(K(1)).unwrap().to_string(), "k1 ⊗ k1");
        assert_eq!(d.image(F(1)).unwrap().to_string(), "1 ⊗ f1 + f1 ⊗ k1");
    }

    #[test]
    fn coproduct_closed_forms() {
        let a1 = coproduct_on_cag(2, 1, -1, CoproductMode::Cag).unwrap();
        let expected = &Tensor::pure(&p(Aminus(1)), &Poly::one()) + &Tensor::pure(&p(Lbar(1)), &p(Aminus(1)));
        assert_eq!(a1, expected);
        let a1p = coproduct_on_cag(2, 1, 1, CoproductMode::Cag).unwrap();
        let expected = &Tensor::pure(&p(Aplus(1)), &p(L(1))) + &Tensor::pure(&Poly::one(), &p(Aplus(1)));
        assert_eq!(a1p, expected);
        let a2 = coproduct_on_cag(2, 2, -1, CoproductMode::Cag).unwrap();
        let q_minus_qbar = &qp(1) - &qp(-1);
        let third = Tensor::pure(&Poly::commutator(&p(Aplus(1)), &p(Aminus(2))), &p(Aminus(1)));
        let expected = &(&Tensor::pure(&p(Aminus(2)), &Poly::one()) + &Tensor::pure(&p(Lbar(2)), &p(Aminus(2))))
            + &third.scale(&q_minus_qbar);
        assert_eq!(a2, expected);
    }

    #[test]
    fn split_cartan_collects_q_powers() {
        // k̄1 e2 = q e2 k̄1
        let (rest, d, e) = split_cartan(2, &Word(vec![Kbar(1), E(2)]));
        assert_eq!(rest, Word(vec![E(2)]));
        assert_eq!(d, vec![-1, 1, 0]);
        assert_eq!(e, 1);
        assert_eq!(l_word(&d), Some(Word(vec![Lbar(1)])));
    }

    #[test]
    fn coproduct_of_l_generators() {
        let t = coproduct_of(2, L(2), CoproductMode::Cag).unwrap();
        assert_eq!(t, Tensor::pure(&p(L(2)), &p(L(2))));
        let t = coproduct_of(2, Lbar(1), CoproductMode::Cag).unwrap();
        assert_eq!(t, Tensor::pure(&p(Lbar(1)), &p(Lbar(1))));
    }

    #[test]
    fn out_of_range_index() {
        assert_eq!(
            coproduct_on_cag(2, 3, -1, CoproductMode::Raw),
            Err(Error::IndexOutOfRange { index: 3, n: 2 })
        );
        assert_eq!(cag_from_chevalley_quantum(0), Err(Error::InvalidRank(0)));
    }
}
