//! Multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Terms are kept sorted in descending graded-lexicographic order with no zero
//! coefficients, so structural equality is mathematical equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::var::Var;
use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector indexed by [`Var`] id, with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: u32) -> Self {
        let mut exps = vec![0; v.index() + 1];
        exps[v.index()] = exp;
        Monomial::from_exps(exps)
    }

    pub fn from_exps(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0.get(v.index()).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let exps = (0..len)
            .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
            .collect();
        Monomial(exps)
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let exps = self
            .0
            .iter()
            .enumerate()
            .map(|(i, e)| e - other.0.get(i).unwrap_or(&0))
            .collect();
        Monomial::from_exps(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect();
        Monomial::from_exps(exps)
    }

    fn without(&self, v: Var) -> Monomial {
        let mut exps = self.0.clone();
        if let Some(e) = exps.get_mut(v.index()) {
            *e = 0;
        }
        Monomial::from_exps(exps)
    }

    fn with_exp(&self, v: Var, exp: u32) -> Monomial {
        let mut exps = self.0.clone();
        if exps.len() <= v.index() {
            exps.resize(v.index() + 1, 0);
        }
        exps[v.index()] = exp;
        Monomial::from_exps(exps)
    }

    fn fmt_vars(&self) -> String {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| {
                let name = Var::from_index(i).name();
                if *e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent of the
    /// earliest declared indeterminate.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.0.len().max(other.0.len());
            for i in 0..len {
                let a = self.0.get(i).unwrap_or(&0);
                let b = other.0.get(i).unwrap_or(&0);
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            IntPoly::zero()
        } else {
            IntPoly { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: Var) -> Self {
        IntPoly::monomial(Monomial::var(v, 1), BigInt::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        IntPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term under graded-lex order. Panics on zero.
    pub fn leading(&self) -> &(Monomial, BigInt) {
        &self.terms[0]
    }

    pub fn leading_coeff_positive(&self) -> bool {
        self.terms.first().is_none_or(|(_, c)| c.is_positive())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.merge(other, true)
    }

    fn merge(&self, other: &IntPoly, negate: bool) -> IntPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sgn = |c: &BigInt| if negate { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), sgn(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sgn(c))));
        IntPoly { terms: out }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if other.is_monomial() {
            let (m, c) = other.leading();
            return self.mul_term(m, c);
        }
        if self.is_monomial() {
            let (m, c) = self.leading();
            return other.mul_term(m, c);
        }
        IntPoly::from_terms(self.terms.iter().flat_map(|(ma, ca)| {
            other.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb))
        }))
    }

    /// Multiplication by a single term keeps the order, so no re-sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Nonnegative gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Exact division by an integer; caller guarantees divisibility.
    pub fn div_int(&self, c: &BigInt) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(m, cc)| (m.clone(), cc / c)).collect(),
        }
    }

    /// Exact multivariate division. Returns `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division of polynomial by zero");
        if d.is_one() {
            return Some(self.clone());
        }
        let (dm, dc) = d.leading().clone();
        if d.is_monomial() {
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(&dc);
                if !dm.divides(m) || !r.is_zero() {
                    return None;
                }
                out.push((m.div(&dm), q));
            }
            return Some(IntPoly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading();
            if !dm.divides(rm) {
                return None;
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let m = rm.div(&dm);
            rem = rem.sub(&d.mul_term(&m, &q));
            quot.push((m, q));
        }
        Some(IntPoly::from_terms(quot))
    }

    /// Flip the sign so the leading coefficient is positive.
    pub fn normalize_sign(&self) -> IntPoly {
        if self.leading_coeff_positive() {
            self.clone()
        } else {
            self.neg()
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    pub fn first_var(&self) -> Option<Var> {
        self.terms
            .iter()
            .filter_map(|(m, _)| m.exps().iter().position(|e| *e > 0))
            .min()
            .map(Var::from_index)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Coefficients as a polynomial in `v`: entry `k` multiplies `v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<IntPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.without(v), c.clone()));
        }
        buckets.into_iter().map(IntPoly::from_terms).collect()
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[IntPoly]) -> IntPoly {
        IntPoly::from_terms(coeffs.iter().enumerate().flat_map(|(k, p)| {
            p.terms.iter().map(move |(m, c)| (m.with_exp(v, k as u32), c.clone()))
        }))
    }

    /// Reflect exponents of `v`: returns `(P~, d)` with `P(1/v) = P~(v) / v^d`.
    pub fn reflect(&self, v: Var) -> (IntPoly, u32) {
        let d = self.degree_in(v);
        let p = IntPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.with_exp(v, d - m.exp(v)), c.clone())),
        );
        (p, d)
    }

    pub fn eval(&self, point: &dyn Fn(Var) -> Option<Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = Rational::from_integer(c.clone());
            for (i, e) in m.exps().iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                let v = Var::from_index(i);
                let x = point(v).ok_or_else(|| Error::MissingIndeterminate(v.name()))?;
                t *= x.pow(*e as i32);
            }
            total += t;
        }
        Ok(total)
    }

    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        poly_gcd(self, other)
    }
}

fn list_content(list: &[IntPoly]) -> IntPoly {
    let mut g = IntPoly::zero();
    for p in list.iter().filter(|p| !p.is_zero()) {
        g = poly_gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

fn list_div(list: &[IntPoly], d: &IntPoly) -> Vec<IntPoly> {
    list.iter()
        .map(|p| p.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn trim(list: &mut Vec<IntPoly>) {
    while list.last().is_some_and(IntPoly::is_zero) {
        list.pop();
    }
}

/// Pseudo-remainder of univariate polynomials with polynomial coefficients.
fn pseudo_rem(a: &[IntPoly], b: &[IntPoly]) -> Vec<IntPoly> {
    let n = b.len() - 1;
    let lcb = &b[n];
    let mut r = a.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > n {
        let lcr = r.last().cloned().expect("nonempty");
        let shift = r.len() - 1 - n;
        for c in r.iter_mut() {
            *c = c.mul(lcb);
        }
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] = r[k + shift].sub(&lcr.mul(bk));
        }
        trim(&mut r);
    }
    r
}

/// Primitive polynomial remainder sequence for primitive inputs.
fn primitive_prs(mut a: Vec<IntPoly>, mut b: Vec<IntPoly>) -> Vec<IntPoly> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.len() == 1 {
            return vec![IntPoly::one()];
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return b;
        }
        let c = list_content(&r);
        let r = list_div(&r, &c);
        a = b;
        b = r;
    }
}

fn monomial_gcd(mono: &IntPoly, other: &IntPoly) -> IntPoly {
    let (m, c) = mono.leading();
    let mut g = m.clone();
    for (om, _) in other.terms() {
        g = g.gcd(om);
    }
    IntPoly::monomial(g, c.gcd(&other.content()))
}

/// Greatest common divisor over Z[vars], normalized to a positive leading coefficient.
fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.normalize_sign();
    }
    if b.is_zero() {
        return a.normalize_sign();
    }
    if let Some(c) = a.as_constant() {
        return IntPoly::constant(c.gcd(&b.content()));
    }
    if let Some(c) = b.as_constant() {
        return IntPoly::constant(c.gcd(&a.content()));
    }
    if a.is_monomial() {
        return monomial_gcd(a, b);
    }
    if b.is_monomial() {
        return monomial_gcd(b, a);
    }
    let v = match (a.first_var(), b.first_var()) {
        (Some(x), Some(y)) => x.min(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => unreachable!("constants handled above"),
    };
    if !a.contains_var(v) {
        return poly_gcd(a, &list_content(&b.coeffs_in(v)));
    }
    if !b.contains_var(v) {
        return poly_gcd(&list_content(&a.coeffs_in(v)), b);
    }
    let ac = a.coeffs_in(v);
    let bc = b.coeffs_in(v);
    let ca = list_content(&ac);
    let cb = list_content(&bc);
    let g_content = poly_gcd(&ca, &cb);
    let prim = primitive_prs(list_div(&ac, &ca), list_div(&bc, &cb));
    IntPoly::from_coeffs_in(v, &prim).mul(&g_content).normalize_sign()
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&m.fmt_vars())?;
            } else {
                write!(f, "{a}*{}", m.fmt_vars())?;
            }
        }
        Ok(())
    }
}
