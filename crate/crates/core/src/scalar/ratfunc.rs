use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{IntPoly, Monomial};
use super::var::Var;
use super::Rational;
use crate::error::{Error, Result};

/// Values for indeterminates when specializing a rational function.
pub type Assignment = BTreeMap<Var, Rational>;

/// An element of the fraction field Q(vars), stored as a reduced quotient of
/// integer polynomials.
///
/// Invariants: numerator and denominator are coprime over Z[vars] (integer
/// content included), the denominator has a positive leading coefficient under
/// graded-lex order, and zero is `0/1`. Hence derived equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if !den.leading_coeff_positive() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn from_poly(num: IntPoly) -> Self {
        RatFunc { num, den: IntPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_poly(IntPoly::constant(BigInt::from(n)))
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::reduce(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from_poly(IntPoly::var(v))
    }

    /// `v^exp` for any integer exponent; negative exponents give `1/v^|exp|`.
    pub fn monomial(v: Var, exp: i64) -> Self {
        let m = IntPoly::monomial(Monomial::var(v, exp.unsigned_abs() as u32), BigInt::one());
        if exp >= 0 {
            RatFunc::from_poly(m)
        } else {
            RatFunc { num: IntPoly::one(), den: m }
        }
    }

    pub fn q() -> Self {
        RatFunc::var(Var::Q)
    }

    /// `q^m`.
    pub fn q_pow(m: i64) -> Self {
        RatFunc::monomial(Var::Q, m)
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(Rational::new(n, d))
    }

    /// True when the leading numerator coefficient is negative; used to pull a
    /// sign out when printing sums.
    pub fn looks_negative(&self) -> bool {
        !self.num.leading_coeff_positive()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if !den.leading_coeff_positive() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc { num, den })
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at a point.
    pub fn eval(&self, point: &Assignment) -> Result<Rational> {
        let lookup = |v: Var| point.get(&v).cloned();
        let d = self.den.eval(&lookup)?;
        let n = self.num.eval(&lookup)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(n / d)
    }

    /// Substitute `v -> 1/v`.
    pub fn invert_var(&self, v: Var) -> RatFunc {
        let (n, dn) = self.num.reflect(v);
        let (d, dd) = self.den.reflect(v);
        let shift = dd as i64 - dn as i64;
        let vpow = |e: i64| IntPoly::monomial(Monomial::var(v, e as u32), BigInt::one());
        let (n, d) = if shift >= 0 {
            (n.mul(&vpow(shift)), d)
        } else {
            (n, d.mul(&vpow(-shift)))
        };
        Self::reduce(n, d)
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut seen: Vec<Var> = Vec::new();
        for (m, _) in self.num.terms().iter().chain(self.den.terms()) {
            for (i, e) in m.exps().iter().enumerate() {
                let v = Var::from_index(i);
                if *e > 0 && !seen.contains(&v) {
                    seen.push(v);
                }
            }
        }
        seen.sort();
        seen
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_int(1)
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return RatFunc::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        RatFunc::reduce(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&rhs.num));
        }
        // Cross-cancel so the product is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let div = |p: &IntPoly, g: &IntPoly| p.div_exact(g).expect("gcd divides");
        let mut num = div(&self.num, &g1).mul(&div(&rhs.num, &g2));
        let mut den = div(&self.den, &g2).mul(&div(&rhs.den, &g1));
        if !den.leading_coeff_positive() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;

            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for RatFunc {
    /// `q^2 - 1`, `1/q`, `(q^2 - 1)/(q)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.is_monomial() && self.den.is_monomial() {
            let (_, nc) = self.num.leading();
            // `1/2*q` would read back as `q/2`.
            let den = self.den.to_string();
            let den = if den.contains('*') { format!("({den})") } else { den };
            if nc.is_negative() {
                return write!(f, "-{}/{den}", self.num.neg());
            }
            return write!(f, "{}/{den}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    fn qbar() -> RatFunc {
        RatFunc::q_pow(-1)
    }

    fn at_q(v: Rational) -> Assignment {
        [(Var::Q, v)].into_iter().collect()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn clearing_denominators() {
        let r = &q() - &qbar();
        assert_eq!(r.to_string(), "(q^2 - 1)/(q)");
        let half_qbar = RatFunc::q_pow(-1).checked_div(&RatFunc::from_int(2)).unwrap();
        assert_eq!(half_qbar.to_string(), "1/(2*q)");
    }

    #[test]
    fn factor_cancellation() {
        let one = RatFunc::one();
        let a = &(&q() * &q()) - &one;
        let b = &q() - &one;
        assert_eq!(a.checked_div(&b).unwrap(), &q() + &one);
    }

    #[test]
    fn field_inverse() {
        let d = &q() - &qbar();
        assert!(d.checked_div(&d).unwrap().is_one());
        assert_eq!(RatFunc::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation_examples() {
        let r = &q() - &qbar();
        assert_eq!(r.eval(&at_q(rat(2, 1))).unwrap(), rat(3, 2));
        assert_eq!(r.eval(&at_q(rat(1, 1))).unwrap(), rat(0, 1));
        assert_eq!(r.inv().unwrap().eval(&at_q(rat(1, 1))), Err(Error::PoleAtPoint));
        assert_eq!(
            r.eval(&Assignment::new()),
            Err(Error::MissingIndeterminate("q".into()))
        );
    }

    #[test]
    fn monomials() {
        assert_eq!(RatFunc::monomial(Var::Q, 1), q());
        assert_eq!(RatFunc::monomial(Var::Q, -1).to_string(), "1/q");
        assert!(RatFunc::monomial(Var::Q, 0).is_one());
    }

    #[test]
    fn invert_var_is_an_involution() {
        let r = (&q() - &qbar()).inv().unwrap();
        let s = &(&r * &q()) + &RatFunc::from_int(3);
        assert_eq!(s.invert_var(Var::Q).invert_var(Var::Q), s);
        assert_eq!(q().invert_var(Var::Q), qbar());
        assert_eq!(r.invert_var(Var::Q), -&r);
    }

    #[test]
    fn sign_lives_in_numerator() {
        let r = RatFunc::from_int(1).checked_div(&RatFunc::from_int(-2)).unwrap();
        assert_eq!(r.to_string(), "-1/2");
        assert!(r.denom().leading_coeff_positive());
    }
}
