use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{parse_rational, Indeterminate, Rational, Scalar};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in one variable `t`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<i64, R>,
}

impl<R: Scalar> LaurentPoly<R> {
    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: R, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (i64, R)>) -> Self {
        let mut poly = Self::zero();
        for (exp, c) in iter {
            poly.add_term(exp, c);
        }
        poly
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> R {
        self.terms.get(&exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient when `self` has no non-constant terms.
    pub fn as_constant(&self) -> Option<R> {
        match self.terms.len() {
            0 => Some(R::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, exp: i64, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }
}

impl<R: Scalar> Zero for LaurentPoly<R> {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Scalar> One for LaurentPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Scalar> Add for LaurentPoly<R> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (exp, c) in rhs.terms {
            self.add_term(exp, c);
        }
        self
    }
}

impl<R: Scalar> Neg for LaurentPoly<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<R: Scalar> Sub for LaurentPoly<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Scalar> Mul for LaurentPoly<R> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Scalar> Scalar for LaurentPoly<R> {
    fn from_rational(q: Rational) -> Self {
        Self::constant(R::from_rational(q))
    }

    /// Units of `R[t, t^-1]` are the monomials with unit coefficient.
    fn checked_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (exp, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.checked_inv()?, -exp))
    }
}

impl<R: Scalar> Indeterminate for LaurentPoly<R> {
    fn t() -> Self {
        Self::monomial(R::one(), 1)
    }
}

/// Canonical form `c1*t^e1 + c2*t^e2 + ...`, descending exponents.
impl<R: Scalar> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*t^{exp}")?;
        }
        Ok(())
    }
}

/// Accepts the canonical form as well as shorthand such as `1 - t`, `-t^-1`, `1/2*t^2`.
impl FromStr for LaurentPoly<Rational> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        let mut poly = Self::zero();
        for (negative, term) in split_signed_terms(&compact)? {
            let (exp, c) =
                parse_term(term).map_err(|_| Error::Parse(format!("invalid Laurent term `{term}` in `{text}`")))?;
            poly.add_term(exp, if negative { -c } else { c });
        }
        Ok(poly)
    }
}

fn split_signed_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    let mut negative = false;
    for i in 1..bytes.len() {
        // a sign right after `^`, `*`, `/` or another sign belongs to a number
        let separates = matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'^' | b'*' | b'/' | b'+' | b'-');
        if separates {
            out.push((negative, &s[start..i]));
            negative = bytes[i] == b'-';
            start = i + 1;
        }
    }
    if start >= s.len() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    out.push((negative, &s[start..]));
    Ok(out)
}

fn parse_term(term: &str) -> Result<(i64, Rational)> {
    let bad = || Error::Parse(term.to_string());
    match term.find('t') {
        None => Ok((0, parse_rational(term)?)),
        Some(pos) => {
            let coeff = term[..pos].trim_end_matches('*');
            let c = match coeff {
                "" | "+" => Rational::one(),
                "-" => -Rational::one(),
                other => parse_rational(other)?,
            };
            let rest = &term[pos + 1..];
            let exp = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?
            };
            Ok((exp, c))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    type L = LaurentPoly<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn t() -> L {
        L::t()
    }

    #[test]
    fn unit_products() {
        let minus_t = -t();
        let minus_t_inv = L::monomial(q(-1), -1);
        assert_eq!(minus_t.clone() * minus_t_inv.clone(), L::one());
        assert_eq!(minus_t.inv().unwrap(), minus_t_inv);
        let one_minus_t = L::one() - t();
        assert_eq!(one_minus_t.clone() * t(), L::from_terms([(1, q(1)), (2, q(-1))]));
        assert!(one_minus_t.checked_inv().is_none());
        assert!(L::zero().checked_inv().is_none());
        assert!(matches!(one_minus_t.pow_int(-1), Err(Error::NonUnit(_))));
        assert_eq!(minus_t.pow_int(2).unwrap(), L::monomial(q(1), 2));
    }

    #[test]
    fn display_is_canonical() {
        let p = L::from_terms([(1, q(-1)), (-1, q(1))]);
        assert_eq!(p.to_string(), "-1*t^1 + 1*t^-1");
        assert_eq!(L::zero().to_string(), "0");
        assert_eq!("-1*t^1 + 1*t^-1".parse::<L>().unwrap(), p);
    }

    #[test]
    fn parses_shorthand() {
        assert_eq!("t".parse::<L>().unwrap(), t());
        assert_eq!("-t".parse::<L>().unwrap(), -t());
        assert_eq!("1-t".parse::<L>().unwrap(), L::one() - t());
        assert_eq!(
            "1/2*t^-2 - 3".parse::<L>().unwrap(),
            L::from_terms([(-2, Rational::new(1.into(), 2.into())), (0, q(-3))])
        );
        assert_eq!("2*t^1 + -2*t^1".parse::<L>().unwrap(), L::zero());
        assert!("t^".parse::<L>().is_err());
        assert!("1 +".parse::<L>().is_err());
        assert!("s".parse::<L>().is_err());
    }

    fn small_poly() -> impl Strategy<Value = L> {
        prop::collection::vec((-4i64..=4, -5i64..=5, 1i64..=3), 0..5)
            .prop_map(|ts| L::from_terms(ts.into_iter().map(|(e, n, d)| (e, Rational::new(n.into(), d.into())))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            prop_assert_eq!(a.clone() - a.clone(), L::zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn product_matches_shifted_convolution(a in small_poly(), b in small_poly()) {
            // dense convolution over the shifted exponent window [-8, 8]
            let mut dense = BTreeMap::new();
            for ea in -4i64..=4 {
                for eb in -4i64..=4 {
                    let x = a.coeff(ea) * b.coeff(eb);
                    let slot = dense.entry(ea + eb).or_insert_with(Rational::zero);
                    *slot = slot.clone() + x;
                }
            }
            let prod = a * b;
            for (e, c) in dense {
                prop_assert_eq!(prod.coeff(e), c);
            }
        }

        #[test]
        fn display_parse_roundtrip(a in small_poly()) {
            prop_assert_eq!(a.to_string().parse::<L>().unwrap(), a);
        }

        #[test]
        fn monomial_units_invert(e in -6i64..=6, n in -5i64..=5, d in 1i64..=4) {
            prop_assume!(n != 0);
            let m = L::monomial(Rational::new(n.into(), d.into()), e);
            prop_assert_eq!(m.clone() * m.inv().unwrap(), L::one());
        }
    }
}
