use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{parse_rational, Indeterminate, LaurentPoly, Rational, Scalar};
use crate::error::{Error, Result};

/// A rational or a Laurent polynomial over the rationals.
///
/// Values are kept normalized: a Laurent polynomial with no non-constant
/// terms is always stored as `Rational`, so derived equality and hashing
/// agree with mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ScalarValue {
    Rational(Rational),
    Laurent(LaurentPoly<Rational>),
}

impl ScalarValue {
    pub fn normalize(self) -> Self {
        match self {
            ScalarValue::Laurent(p) => match p.as_constant() {
                Some(c) => ScalarValue::Rational(c),
                None => ScalarValue::Laurent(p),
            },
            r => r,
        }
    }

    pub fn to_laurent(&self) -> LaurentPoly<Rational> {
        match self {
            ScalarValue::Rational(q) => LaurentPoly::constant(q.clone()),
            ScalarValue::Laurent(p) => p.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ScalarValue::Rational(q) => Some(q),
            ScalarValue::Laurent(_) => None,
        }
    }

    fn combine(
        self,
        rhs: Self,
        rat: impl FnOnce(Rational, Rational) -> Rational,
        poly: impl FnOnce(LaurentPoly<Rational>, LaurentPoly<Rational>) -> LaurentPoly<Rational>,
    ) -> Self {
        match (self, rhs) {
            (ScalarValue::Rational(a), ScalarValue::Rational(b)) => ScalarValue::Rational(rat(a, b)),
            (a, b) => ScalarValue::Laurent(poly(a.to_laurent(), b.to_laurent())).normalize(),
        }
    }
}

impl From<Rational> for ScalarValue {
    fn from(q: Rational) -> Self {
        ScalarValue::Rational(q)
    }
}

impl From<LaurentPoly<Rational>> for ScalarValue {
    fn from(p: LaurentPoly<Rational>) -> Self {
        ScalarValue::Laurent(p).normalize()
    }
}

impl From<i64> for ScalarValue {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl Zero for ScalarValue {
    fn zero() -> Self {
        ScalarValue::Rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        matches!(self, ScalarValue::Rational(q) if q.is_zero())
    }
}

impl One for ScalarValue {
    fn one() -> Self {
        ScalarValue::Rational(Rational::one())
    }
}

impl Add for ScalarValue {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl Sub for ScalarValue {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl Mul for ScalarValue {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b| a * b, |a, b| a * b)
    }
}

impl Neg for ScalarValue {
    type Output = Self;

    fn neg(self) -> Self {
        match self {
            ScalarValue::Rational(q) => ScalarValue::Rational(-q),
            ScalarValue::Laurent(p) => ScalarValue::Laurent(-p),
        }
    }
}

impl Scalar for ScalarValue {
    fn from_rational(q: Rational) -> Self {
        ScalarValue::Rational(q)
    }

    fn checked_inv(&self) -> Option<Self> {
        match self {
            ScalarValue::Rational(q) => q.checked_inv().map(ScalarValue::Rational),
            ScalarValue::Laurent(p) => p.checked_inv().map(ScalarValue::from),
        }
    }
}

impl Indeterminate for ScalarValue {
    fn t() -> Self {
        ScalarValue::Laurent(LaurentPoly::t())
    }
}

impl fmt::Display for ScalarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarValue::Rational(q) => write!(f, "{q}"),
            ScalarValue::Laurent(p) => write!(f, "{p}"),
        }
    }
}

/// Rational text (`p/q`, `p`) or, when a `t` occurs, a Laurent polynomial.
impl FromStr for ScalarValue {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.contains('t') {
            Ok(text.parse::<LaurentPoly<Rational>>()?.into())
        } else {
            Ok(ScalarValue::Rational(parse_rational(text)?))
        }
    }
}
