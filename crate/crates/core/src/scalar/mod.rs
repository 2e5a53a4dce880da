//! Exact coefficient arithmetic.
//!
//! Every algebraic structure in the crate is generic over [`Coeff`]. Two
//! coefficient types are provided: [`Rational`] (arbitrary-precision
//! rationals, used for numeric-q runs) and [`RatFunc`] (the fraction field of
//! integer polynomials in named indeterminates, used for symbolic runs).

mod poly;
mod ratfunc;
mod var;

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use poly::{IntPoly, Monomial};
pub use ratfunc::{Assignment, RatFunc};
pub use var::Var;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// An exact field of coefficients.
pub trait Coeff: Clone + PartialEq + Debug + Display + Send + Sync + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn try_div(&self, rhs: &Self) -> Result<Self>;
    fn from_int(n: i64) -> Self;

    /// Whether printing should pull out a leading minus sign.
    fn looks_negative(&self) -> bool;
}

impl Coeff for RatFunc {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs)
    }

    fn from_int(n: i64) -> Self {
        RatFunc::from_int(n)
    }

    fn looks_negative(&self) -> bool {
        RatFunc::looks_negative(self)
    }
}

impl Coeff for Rational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn looks_negative(&self) -> bool {
        *self < Rational::zero()
    }
}

/// How the deformation parameter is treated in a computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QMode {
    Symbolic,
    Numeric(Rational),
}

impl QMode {
    /// The default evaluation point for large-rank runs.
    pub fn default_numeric() -> Self {
        QMode::Numeric(Rational::new(BigInt::from(3), BigInt::from(2)))
    }

    pub fn label(&self) -> String {
        match self {
            QMode::Symbolic => "symbolic".to_string(),
            QMode::Numeric(v) => v.to_string(),
        }
    }

    pub fn check_generic(&self) -> Result<()> {
        if let QMode::Numeric(v) = self {
            if v.is_zero() || v.is_one() || *v == -Rational::one() {
                return Err(Error::InvalidNumericQ(v.to_string()));
            }
        }
        Ok(())
    }
}

/// Coefficient types a symbolic [`RatFunc`] can be specialized into.
pub trait Specialize: Coeff {
    fn specialize(s: &RatFunc, mode: &QMode) -> Result<Self>;
}

impl Specialize for RatFunc {
    fn specialize(s: &RatFunc, mode: &QMode) -> Result<Self> {
        match mode {
            QMode::Symbolic => Ok(s.clone()),
            QMode::Numeric(v) => {
                let point: Assignment = [(Var::Q, v.clone())].into_iter().collect();
                Ok(RatFunc::from_rational(&s.eval(&point)?))
            }
        }
    }
}

impl Specialize for Rational {
    fn specialize(s: &RatFunc, mode: &QMode) -> Result<Self> {
        match mode {
            QMode::Symbolic => s.as_rational().ok_or(Error::SymbolicInNumericMode),
            QMode::Numeric(v) => {
                let point: Assignment = [(Var::Q, v.clone())].into_iter().collect();
                s.eval(&point)
            }
        }
    }
}

/// Convenience constructor for rationals in tests and builders.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
