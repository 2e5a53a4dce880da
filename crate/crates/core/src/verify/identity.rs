use serde::Serialize;

use crate::freealg::{GenSymbol, NCPoly, Word};
use crate::scalar::{RatFunc, Var};

type P = NCPoly<RatFunc>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IdentityId {
    #[serde(rename = "16a")]
    Id16a,
    #[serde(rename = "16b")]
    Id16b,
    #[serde(rename = "23")]
    Id23,
}

impl IdentityId {
    pub const ALL: [IdentityId; 3] = [IdentityId::Id16a, IdentityId::Id16b, IdentityId::Id23];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Id16a => "16a",
            IdentityId::Id16b => "16b",
            IdentityId::Id23 => "23",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityResult {
    pub id: IdentityId,
    /// Whether the hypothesis or parameter condition was deliberately broken.
    pub corrupted: bool,
    pub holds: bool,
    pub residual: String,
    pub rewrite_steps: usize,
}

fn sym(c: char) -> P {
    P::gen(GenSymbol::Free(c))
}

fn var(name: &str) -> RatFunc {
    RatFunc::var(Var::named(name))
}

fn br(a: &P, b: &P, x: &RatFunc) -> P {
    P::bracket(a, b, x)
}

fn comm(a: &P, b: &P) -> P {
    P::commutator(a, b)
}

/// Pairs `(i < j)` with `w_i = hi`, `w_j = lo`.
fn inversions(w: &[GenSymbol], hi: GenSymbol, lo: GenSymbol) -> usize {
    let mut seen_hi = 0;
    let mut count = 0;
    for g in w {
        if *g == hi {
            seen_hi += 1;
        } else if *g == lo {
            count += seen_hi;
        }
    }
    count
}

/// Normal form modulo `hi lo -> lo hi` (the two symbols commute).
fn commute_rewrite(p: &P, hi: GenSymbol, lo: GenSymbol, steps: &mut usize) -> P {
    let mut out = P::zero();
    for (w, c) in p.terms() {
        let mut v = w.symbols().to_vec();
        let mut measure = inversions(&v, hi, lo);
        while let Some(k) = v.windows(2).position(|pair| pair[0] == hi && pair[1] == lo) {
            v.swap(k, k + 1);
            *steps += 1;
            let next = inversions(&v, hi, lo);
            assert!(next < measure, "rewrite must strictly reduce inversions");
            measure = next;
        }
        out.add_term(Word(v), c);
    }
    out
}

/// Checks one of the bracket identities in the free algebra over formal
/// parameters. With `corrupted`, the hypothesis or the parameter condition is
/// replaced by a wrong one; the check must then fail.
pub fn check_identity(id: IdentityId, corrupted: bool) -> IdentityResult {
    let mut steps = 0;
    let residual = match id {
        IdentityId::Id16a => {
            let (a, b, c) = (sym('a'), sym('b'), sym('c'));
            let (q, p) = (var("q"), var("p"));
            let diff = &br(&br(&a, &c, &q), &b, &p) - &br(&a, &br(&c, &b, &p), &q);
            let (hi, lo) = if corrupted { ('c', 'a') } else { ('b', 'a') };
            commute_rewrite(&diff, GenSymbol::Free(hi), GenSymbol::Free(lo), &mut steps)
        }
        IdentityId::Id16b => {
            let (a, b, c) = (sym('a'), sym('b'), sym('c'));
            let x = var("x");
            let xbar = x.inv().expect("x is nonzero");
            let x2 = &x * &x;
            let bc = br(&b, &c, &x);
            let lhs = comm(&b, &br(&a, &bc, &x)).scale(&(&x + &xbar));
            let r1 = br(&a, &br(&b, &bc, &xbar), &x2);
            let r2 = br(&br(&b, &br(&b, &a, &x), &xbar), &c, &x2);
            let diff = &lhs - &(&r1 - &r2);
            let (hi, lo) = if corrupted { ('b', 'a') } else { ('c', 'a') };
            commute_rewrite(&diff, GenSymbol::Free(hi), GenSymbol::Free(lo), &mut steps)
        }
        IdentityId::Id23 => {
            let (a, b, c) = (sym('A'), sym('B'), sym('C'));
            let (z, s, r) = (var("z"), var("s"), var("r"));
            let x = &z * &s;
            let y = &z * &r;
            let t = if corrupted { &z * &s } else { &(&z * &s) * &r };
            let lhs = br(&a, &br(&b, &c, &x), &y);
            let rhs = &br(&br(&a, &b, &z), &c, &t) + &br(&b, &br(&a, &c, &r), &s).scale(&z);
            &lhs - &rhs
        }
    };
    IdentityResult {
        id,
        corrupted,
        holds: residual.is_zero(),
        residual: if residual.is_zero() { String::new() } else { residual.to_string() },
        rewrite_steps: steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        for id in IdentityId::ALL {
            let r = check_identity(id, false);
            assert!(r.holds, "{}: {}", id.as_str(), r.residual);
            assert!(r.residual.is_empty());
        }
    }

    #[test]
    fn corrupted_conditions_fail() {
        for id in IdentityId::ALL {
            let r = check_identity(id, true);
            assert!(!r.holds, "{}", id.as_str());
            assert!(!r.residual.is_empty());
        }
    }

    #[test]
    fn rewrite_counts_steps() {
        let w = &(&sym('b') * &sym('b')) * &sym('a');
        let mut steps = 0;
        let out = commute_rewrite(&w, GenSymbol::Free('b'), GenSymbol::Free('a'), &mut steps);
        assert_eq!(steps, 2);
        assert_eq!(out, &sym('a') * &(&sym('b') * &sym('b')));
    }

    #[test]
    fn ids_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::parse(id.as_str()), Some(id));
        }
    }
}
