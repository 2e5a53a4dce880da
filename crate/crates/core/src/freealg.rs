//! The free associative algebra with unit over a coefficient field.
//!
//! [`NCPoly`] is a finite linear combination of [`Word`]s and [`TensorPoly`] a
//! finite combination of word pairs. Neither type rewrites modulo any relation:
//! two elements are equal exactly when their canonical term maps agree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Coeff, RatFunc, Var};

/// A generator. The derived order (kind, then index) is the letter order used
/// for canonical word ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenSymbol {
    E(u32),
    F(u32),
    H(u32),
    K(u32),
    Kbar(u32),
    L(u32),
    Lbar(u32),
    Aplus(u32),
    Aminus(u32),
    Free(char),
}

impl GenSymbol {
    /// Star partner in the quantum alphabets: e <-> f, k <-> kbar, L <-> Lbar, a+ <-> a-.
    pub fn star(self) -> Option<GenSymbol> {
        use GenSymbol::*;
        Some(match self {
            E(i) => F(i),
            F(i) => E(i),
            K(i) => Kbar(i),
            Kbar(i) => K(i),
            L(i) => Lbar(i),
            Lbar(i) => L(i),
            Aplus(i) => Aminus(i),
            Aminus(i) => Aplus(i),
            H(_) | Free(_) => return None,
        })
    }

    pub fn index(self) -> Option<u32> {
        use GenSymbol::*;
        match self {
            E(i) | F(i) | H(i) | K(i) | Kbar(i) | L(i) | Lbar(i) | Aplus(i) | Aminus(i) => Some(i),
            Free(_) => None,
        }
    }

    pub fn is_cartan(self) -> bool {
        matches!(self, GenSymbol::H(_) | GenSymbol::K(_) | GenSymbol::Kbar(_) | GenSymbol::L(_) | GenSymbol::Lbar(_))
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GenSymbol::*;
        match self {
            E(i) => write!(f, "e{i}"),
            F(i) => write!(f, "f{i}"),
            H(i) => write!(f, "h{i}"),
            K(i) => write!(f, "k{i}"),
            Kbar(i) => write!(f, "kbar{i}"),
            L(i) => write!(f, "L{i}"),
            Lbar(i) => write!(f, "Lbar{i}"),
            Aplus(i) => write!(f, "a{i}+"),
            Aminus(i) => write!(f, "a{i}-"),
            Free(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for GenSymbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A monomial in the free algebra; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<GenSymbol>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn symbols(&self) -> &[GenSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<GenSymbol>> for Word {
    fn from(v: Vec<GenSymbol>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// An element of the free algebra: a finite map from words to nonzero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct NCPoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Coeff> NCPoly<S> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NCPoly::scalar(S::one())
    }

    pub fn scalar(c: S) -> Self {
        NCPoly::term(Word::unit(), c)
    }

    pub fn term(w: Word, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn gen(g: GenSymbol) -> Self {
        NCPoly::term(Word(vec![g]), S::one())
    }

    pub fn word(symbols: &[GenSymbol]) -> Self {
        NCPoly::term(Word(symbols.to_vec()), S::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: &S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = existing.add_ref(c);
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn symbols(&self) -> BTreeSet<GenSymbol> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).collect()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul_ref(c))).collect(),
        }
    }

    pub fn try_map_coeffs<T: Coeff>(&self, f: impl Fn(&S) -> Result<T>) -> Result<NCPoly<T>> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Apply a word-level rewrite to every term and recollect.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    /// `a b - x b a`.
    pub fn bracket(a: &Self, b: &Self, x: &S) -> Self {
        &(a * b) - &(b * a).scale(x)
    }

    /// `a b - b a`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        NCPoly::bracket(a, b, &S::one())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl NCPoly<RatFunc> {
    /// The linear antiinvolution: reverse every word, swap each generator with
    /// its star partner and send q to 1/q in the coefficients.
    pub fn star(&self) -> Result<Self> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut rev = Vec::with_capacity(w.0.len());
            for g in w.0.iter().rev() {
                rev.push(g.star().ok_or(Error::NoStarTable(*g))?);
            }
            out.add_term(Word(rev), &c.invert_var(Var::Q));
        }
        Ok(out)
    }
}

impl<'a, S: Coeff> Add<&'a NCPoly<S>> for &'a NCPoly<S> {
    type Output = NCPoly<S>;

    fn add(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl<'a, S: Coeff> Sub<&'a NCPoly<S>> for &'a NCPoly<S> {
    type Output = NCPoly<S>;

    fn sub(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), &c.neg_ref());
        }
        out
    }
}

impl<'a, S: Coeff> Mul<&'a NCPoly<S>> for &'a NCPoly<S> {
    type Output = NCPoly<S>;

    fn mul(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), &ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<S: Coeff> Neg for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn neg(self) -> NCPoly<S> {
        self.scale(&S::one().neg_ref())
    }
}

macro_rules! owned_ops {
    ($ty:ident) => {
        impl<S: Coeff> Add for $ty<S> {
            type Output = $ty<S>;
            fn add(self, rhs: $ty<S>) -> $ty<S> {
                &self + &rhs
            }
        }
        impl<S: Coeff> Sub for $ty<S> {
            type Output = $ty<S>;
            fn sub(self, rhs: $ty<S>) -> $ty<S> {
                &self - &rhs
            }
        }
        impl<S: Coeff> Mul for $ty<S> {
            type Output = $ty<S>;
            fn mul(self, rhs: $ty<S>) -> $ty<S> {
                &self * &rhs
            }
        }
        impl<S: Coeff> Neg for $ty<S> {
            type Output = $ty<S>;
            fn neg(self) -> $ty<S> {
                -&self
            }
        }
    };
}

owned_ops!(NCPoly);
owned_ops!(TensorPoly);

/// Text for a coefficient in front of a word: integers and bare powers of a
/// single indeterminate print as-is, anything else is parenthesized.
fn coeff_text<S: Coeff>(c: &S) -> String {
    let t = c.to_string();
    let simple = t.chars().all(|ch| ch.is_ascii_digit())
        || (t.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '^')
            && t.chars().next().is_some_and(|ch| ch.is_ascii_alphabetic()));
    if simple {
        t
    } else {
        format!("({t})")
    }
}

/// Writes `±c body` terms joined with `+`/`-`.
fn write_sum<S: Coeff>(f: &mut fmt::Formatter<'_>, terms: Vec<(S, String)>) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (k, (c, body)) in terms.into_iter().enumerate() {
        let neg = c.looks_negative();
        let a = if neg { c.neg_ref() } else { c };
        match (k, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        if body.is_empty() {
            f.write_str(&coeff_text(&a))?;
        } else if a.is_one() {
            f.write_str(&body)?;
        } else {
            write!(f, "{} {}", coeff_text(&a), body)?;
        }
    }
    Ok(())
}

impl<S: Coeff> fmt::Display for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (c.clone(), if w.is_unit() { String::new() } else { w.to_string() }))
            .collect();
        write_sum(f, terms)
    }
}

/// An element of the two-fold tensor product of the free algebra with itself.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorPoly<S> {
    terms: BTreeMap<(Word, Word), S>,
}

impl<S: Coeff> TensorPoly<S> {
    pub fn zero() -> Self {
        TensorPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        let mut t = TensorPoly::zero();
        t.add_term(Word::unit(), Word::unit(), &S::one());
        t
    }

    /// `a ⊗ b` for free-algebra elements.
    pub fn pure(a: &NCPoly<S>, b: &NCPoly<S>) -> Self {
        let mut t = TensorPoly::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(wa.clone(), wb.clone(), &ca.mul_ref(cb));
            }
        }
        t
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: &S) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = existing.add_ref(c);
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = TensorPoly::zero();
        for ((l, r), x) in &self.terms {
            out.add_term(l.clone(), r.clone(), &x.mul_ref(c));
        }
        out
    }

    pub fn bracket(a: &Self, b: &Self, x: &S) -> Self {
        &(a * b) - &(b * a).scale(x)
    }

    pub fn try_map_coeffs<T: Coeff>(&self, f: impl Fn(&S) -> Result<T>) -> Result<TensorPoly<T>> {
        let mut out = TensorPoly::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(l.clone(), r.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Text form grouped by right factor, e.g. `a1- ⊗ 1 + Lbar1 ⊗ a1-`. When a
    /// right factor carries several left words, the first coefficient is
    /// factored out.
    pub fn to_text(&self, sep: &str) -> String {
        struct Sum<S>(Vec<(S, String)>);
        impl<S: Coeff> fmt::Display for Sum<S> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_sum(f, self.0.clone())
            }
        }
        let mut groups: BTreeMap<&Word, Vec<(&Word, &S)>> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            groups.entry(r).or_default().push((l, c));
        }
        let mut out: Vec<(S, String)> = Vec::new();
        for (right, lefts) in groups {
            if lefts.len() == 1 {
                let (l, c) = lefts[0];
                out.push((c.clone(), format!("{l} {sep} {right}")));
                continue;
            }
            let lead = lefts[0].1.clone();
            let inner: Vec<(S, String)> = lefts
                .iter()
                .map(|(l, c)| {
                    let ratio = c.try_div(&lead).expect("stored coefficients are nonzero");
                    (ratio, if l.is_unit() { String::new() } else { l.to_string() })
                })
                .collect();
            out.push((lead, format!("({}) {sep} {right}", Sum(inner))));
        }
        Sum(out).to_string()
    }
}

impl<'a, S: Coeff> Add<&'a TensorPoly<S>> for &'a TensorPoly<S> {
    type Output = TensorPoly<S>;

    fn add(self, rhs: &TensorPoly<S>) -> TensorPoly<S> {
        let mut out = self.clone();
        for ((l, r), c) in &rhs.terms {
            out.add_term(l.clone(), r.clone(), c);
        }
        out
    }
}

impl<'a, S: Coeff> Sub<&'a TensorPoly<S>> for &'a TensorPoly<S> {
    type Output = TensorPoly<S>;

    fn sub(self, rhs: &TensorPoly<S>) -> TensorPoly<S> {
        let mut out = self.clone();
        for ((l, r), c) in &rhs.terms {
            out.add_term(l.clone(), r.clone(), &c.neg_ref());
        }
        out
    }
}

impl<'a, S: Coeff> Mul<&'a TensorPoly<S>> for &'a TensorPoly<S> {
    type Output = TensorPoly<S>;

    /// `(u ⊗ v)(u' ⊗ v') = uu' ⊗ vv'`, no braiding.
    fn mul(self, rhs: &TensorPoly<S>) -> TensorPoly<S> {
        let mut out = TensorPoly::zero();
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &rhs.terms {
                out.add_term(la.concat(lb), ra.concat(rb), &ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<S: Coeff> Neg for &TensorPoly<S> {
    type Output = TensorPoly<S>;

    fn neg(self) -> TensorPoly<S> {
        self.scale(&S::one().neg_ref())
    }
}

impl<S: Coeff> fmt::Display for TensorPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("⊗"))
    }
}

/// A named set of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    name: String,
    symbols: BTreeSet<GenSymbol>,
}

impl Alphabet {
    pub fn new(name: impl Into<String>, symbols: impl IntoIterator<Item = GenSymbol>) -> Self {
        Alphabet { name: name.into(), symbols: symbols.into_iter().collect() }
    }

    fn indexed(name: &str, n: usize, kinds: &[fn(u32) -> GenSymbol]) -> Self {
        let symbols = kinds.iter().flat_map(|k| (1..=n as u32).map(k));
        Alphabet::new(name, symbols)
    }

    pub fn classical_chevalley(n: usize) -> Self {
        Alphabet::indexed("classical-chevalley", n, &[GenSymbol::E, GenSymbol::F, GenSymbol::H])
    }

    pub fn classical_cag(n: usize) -> Self {
        Alphabet::indexed("classical-cag", n, &[GenSymbol::Aplus, GenSymbol::Aminus])
    }

    pub fn quantum_chevalley(n: usize) -> Self {
        Alphabet::indexed(
            "quantum-chevalley",
            n,
            &[GenSymbol::E, GenSymbol::F, GenSymbol::K, GenSymbol::Kbar],
        )
    }

    pub fn quantum_cag(n: usize) -> Self {
        Alphabet::indexed(
            "quantum-cag",
            n,
            &[GenSymbol::L, GenSymbol::Lbar, GenSymbol::Aplus, GenSymbol::Aminus],
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn symbols(&self) -> impl Iterator<Item = GenSymbol> + '_ {
        self.symbols.iter().copied()
    }

    pub fn contains(&self, g: GenSymbol) -> bool {
        self.symbols.contains(&g)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet {
            name: format!("{}+{}", self.name, other.name),
            symbols: self.symbols.union(&other.symbols).copied().collect(),
        }
    }

    pub fn check<S: Coeff>(&self, p: &NCPoly<S>) -> Result<()> {
        for g in p.symbols() {
            if !self.contains(g) {
                return Err(Error::AlphabetMismatch(g, self.name.clone()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{RatFunc, Rational};
    use num_traits::One;
    use GenSymbol::*;

    type P = NCPoly<RatFunc>;

    fn g(s: GenSymbol) -> P {
        P::gen(s)
    }

    fn qbar() -> RatFunc {
        RatFunc::q_pow(-1)
    }

    #[test]
    fn product_concatenates() {
        let p = &g(E(1)) * &g(E(2));
        assert_eq!(p, P::word(&[E(1), E(2)]));
        assert_eq!(&P::one() * &g(F(3)), g(F(3)));
        let s = &g(E(1)) + &g(F(1));
        let d = &g(E(1)) - &g(F(1));
        let prod = &s * &d;
        assert_eq!(prod.len(), 4);
        assert_eq!(prod.coeff(&Word(vec![E(1), F(1)])), -RatFunc::one());
        assert_eq!(prod.coeff(&Word(vec![F(1), E(1)])), RatFunc::one());
        assert_eq!(prod.coeff(&Word(vec![F(1), F(1)])), -RatFunc::one());
    }

    #[test]
    fn q_bracket_examples() {
        let a2m = P::bracket(&g(E(1)), &g(E(2)), &qbar());
        assert_eq!(a2m.to_string(), "e1 e2 - (1/q) e2 e1");
        let x = RatFunc::var(Var::named("x"));
        let gg = P::bracket(&g(E(1)), &g(E(1)), &x);
        assert_eq!(gg, P::word(&[E(1), E(1)]).scale(&(&RatFunc::one() - &x)));
        let a2p = P::bracket(&g(F(2)), &g(F(1)), &RatFunc::q());
        assert_eq!(a2p.to_string(), "-q f1 f2 + f2 f1");
    }

    #[test]
    fn star_examples() {
        assert_eq!(g(E(2)).star().unwrap(), g(F(2)));
        let a2m = P::bracket(&g(E(1)), &g(E(2)), &qbar());
        let a2p = P::bracket(&g(F(2)), &g(F(1)), &RatFunc::q());
        assert_eq!(a2m.star().unwrap(), a2p);
        let kf = P::word(&[K(1), F(3)]);
        assert_eq!(kf.star().unwrap().star().unwrap(), kf);
        assert_eq!(g(H(1)).star(), Err(Error::NoStarTable(H(1))));
    }

    #[test]
    fn tensor_product_has_no_braiding() {
        let e1 = g(E(1));
        let one = P::one();
        let l = TensorPoly::pure(&e1, &one);
        let r = TensorPoly::pure(&one, &e1);
        assert_eq!(&l * &r, TensorPoly::pure(&e1, &e1));
        let kb = TensorPoly::pure(&g(Kbar(1)), &e1);
        let e2 = TensorPoly::pure(&g(E(2)), &one);
        assert_eq!(&kb * &e2, TensorPoly::pure(&P::word(&[Kbar(1), E(2)]), &e1));
        let delta = &l + &kb;
        assert_eq!((&delta * &delta).len(), 4);
    }

    #[test]
    fn tensor_text_groups_by_right_factor() {
        let t = &TensorPoly::pure(&g(Aminus(1)), &P::one())
            + &TensorPoly::pure(&g(Lbar(1)), &g(Aminus(1)));
        assert_eq!(t.to_string(), "a1- ⊗ 1 + Lbar1 ⊗ a1-");
        assert_eq!(t.to_text("(x)"), "a1- (x) 1 + Lbar1 (x) a1-");
    }

    #[test]
    fn numeric_coefficients_print() {
        let p: NCPoly<Rational> = NCPoly::gen(E(1)).scale(&crate::scalar::rational(-3, 2));
        assert_eq!(p.to_string(), "-(3/2) e1");
    }

    #[test]
    fn alphabet_check() {
        let a = Alphabet::quantum_cag(2);
        assert!(a.check(&g(Aplus(2))).is_ok());
        assert!(matches!(a.check(&g(E(1))), Err(Error::AlphabetMismatch(E(1), _))));
    }
}
