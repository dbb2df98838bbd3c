use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// The algebra `K[X] / (X^s - d_s)` with basis `X^0, ..., X^{s-1}`.
///
/// When `M^s = d_s · I` and no smaller power of `M` is scalar, `X ↦ M`
/// identifies it with the span of the powers of `M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicAlgebra<S> {
    s: usize,
    twist: S,
}

/// Coefficients over `X^0, ..., X^{s-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicElement<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> CyclicElement<S> {
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len()
    }
}

impl<S: Scalar> CyclicAlgebra<S> {
    pub fn new(s: usize, twist: S) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter("cyclic algebra needs s >= 1".into()));
        }
        if twist.is_zero() {
            return Err(Error::InvalidParameter("cyclic twist d_s must be nonzero".into()));
        }
        Ok(Self { s, twist })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn twist(&self) -> &S {
        &self.twist
    }

    fn check(&self, x: &CyclicElement<S>) {
        assert_eq!(x.coeffs.len(), self.s, "cyclic element of the wrong size");
    }

    pub fn from_coeffs(&self, coeffs: Vec<S>) -> Result<CyclicElement<S>> {
        if coeffs.len() != self.s {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a cyclic algebra with s = {}",
                coeffs.len(),
                self.s
            )));
        }
        Ok(CyclicElement { coeffs })
    }

    pub fn scalar(&self, c: S) -> CyclicElement<S> {
        let mut coeffs = vec![S::zero(); self.s];
        coeffs[0] = c;
        CyclicElement { coeffs }
    }

    pub fn zero(&self) -> CyclicElement<S> {
        self.scalar(S::zero())
    }

    pub fn one(&self) -> CyclicElement<S> {
        self.scalar(S::one())
    }

    /// `X^k` for any integer `k`; uses `X^{-1} = d_s^{-1} X^{s-1}`.
    pub fn x_power(&self, k: i64) -> Result<CyclicElement<S>> {
        let s = self.s as i64;
        let (q, r) = (k.div_euclid(s), k.rem_euclid(s));
        let mut out = self.zero();
        out.coeffs[r as usize] = self.twist.pow_int(q)?;
        Ok(out)
    }

    pub fn add(&self, x: &CyclicElement<S>, y: &CyclicElement<S>) -> CyclicElement<S> {
        self.check(x);
        self.check(y);
        let coeffs = x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        CyclicElement { coeffs }
    }

    pub fn scale(&self, x: &CyclicElement<S>, c: &S) -> CyclicElement<S> {
        self.check(x);
        CyclicElement { coeffs: x.coeffs.iter().map(|a| c.clone() * a.clone()).collect() }
    }

    pub fn mul(&self, x: &CyclicElement<S>, y: &CyclicElement<S>) -> CyclicElement<S> {
        self.check(x);
        self.check(y);
        let s = self.s;
        let mut out = self.zero();
        for (i, a) in x.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let prod = a.clone() * b.clone();
                let (k, prod) = if i + j >= s { (i + j - s, prod * self.twist.clone()) } else { (i + j, prod) };
                out.coeffs[k] = out.coeffs[k].clone() + prod;
            }
        }
        out
    }

    pub fn as_scalar(&self, x: &CyclicElement<S>) -> Option<S> {
        self.check(x);
        x.coeffs[1..].iter().all(|c| c.is_zero()).then(|| x.coeffs[0].clone())
    }

    pub fn is_identity(&self, x: &CyclicElement<S>) -> bool {
        self.as_scalar(x).is_some_and(|c| c.is_one())
    }
}

/// `c0 + c1*X^1 + ...`, zero terms omitted.
impl<S: Scalar> fmt::Display for CyclicElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*X^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
