//! Exact scalar rings: the rationals, Laurent polynomials over a scalar ring,
//! and a tagged value type used at the text boundary.

mod laurent;
mod rational;
mod value;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use laurent::LaurentPoly;
pub use rational::{parse_rational, Rational};
pub use value::ScalarValue;

/// An exact commutative ring with decidable equality and unit detection.
///
/// Every scalar ring used here contains the rationals, so constants can be
/// injected with [`Scalar::from_rational`].
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(q: Rational) -> Self;

    /// Multiplicative inverse, when `self` is a unit.
    fn checked_inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    fn is_unit(&self) -> bool {
        self.checked_inv().is_some()
    }

    fn inv(&self) -> Result<Self> {
        self.checked_inv().ok_or_else(|| Error::NonUnit(self.to_string()))
    }

    /// Integer power. Negative exponents require a unit; `0^0 = 1`.
    fn pow_int(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(pow_u64(base, e.unsigned_abs()))
    }
}

/// Scalar rings with a distinguished invertible indeterminate `t`.
pub trait Indeterminate: Scalar {
    fn t() -> Self;
}

pub(crate) fn pow_u64<S: Clone + One + Mul<Output = S>>(base: S, mut e: u64) -> S {
    let mut acc = S::one();
    let mut sq = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * sq.clone();
        }
        e >>= 1;
        if e > 0 {
            sq = sq.clone() * sq;
        }
    }
    acc
}

/// `p! / (i! j! k!)` for `i + j + k = p`.
pub fn multinomial_coeff(p: u64, i: u64, j: u64, k: u64) -> Result<BigInt> {
    if i.checked_add(j).and_then(|s| s.checked_add(k)) != Some(p) {
        return Err(Error::MultinomialMismatch { p, i, j, k });
    }
    Ok(binomial(p, i) * binomial(p - i, j))
}

fn binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for m in 0..k {
        acc = acc * BigInt::from(n - m) / BigInt::from(m + 1);
    }
    acc
}

/// Smallest `1 <= r <= r_max` with `a^r = 1`.
pub fn root_of_unity_order<S: Scalar>(a: &S, r_max: u64) -> Result<Option<u64>> {
    if a.is_zero() {
        return Err(Error::InvalidParameter("root of unity test on zero".into()));
    }
    let mut power = a.clone();
    for r in 1..=r_max {
        if power.is_one() {
            return Ok(Some(r));
        }
        power = power * a.clone();
    }
    Ok(None)
}
