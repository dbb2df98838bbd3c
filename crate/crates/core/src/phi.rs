//! The extension `Φ_{a,b,c}` of a braid representation to singular braids.

use std::fmt;

use num_rational::BigRational;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::reps::BraidRep;
use crate::scalars::{multinomial_coeff, Scalar};
use crate::words::{relation_instances, Letter, RelationFamily, RelationInstance, SmWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhiParams<S> {
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: Scalar> PhiParams<S> {
    pub fn new(a: S, b: S, c: S) -> Self {
        Self { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        Self::new(S::from_i64(a), S::from_i64(b), S::from_i64(c))
    }
}

impl<S: Scalar> fmt::Display for PhiParams<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// `σ_i^{±1} ↦ ρ(σ_i^{±1})`, `τ_i ↦ a ρ(σ_i) + b ρ(σ_i)^{-1} + c · 1`.
#[derive(Debug, Clone)]
pub struct Phi<S> {
    rep: BraidRep<S>,
    params: PhiParams<S>,
    tau_images: Vec<AlgebraElement<S>>,
}

impl<S: Scalar> Phi<S> {
    pub fn new(rep: BraidRep<S>, params: PhiParams<S>) -> Result<Self> {
        let b = rep.backend();
        let tau_images = (1..rep.n())
            .map(|i| {
                let x = b.scale(rep.sigma(i)?, &params.a)?;
                let y = b.scale(rep.sigma_inv(i)?, &params.b)?;
                b.add(&b.add(&x, &y)?, &b.scalar(params.c.clone()))
            })
            .collect::<Result<_>>()?;
        Ok(Self { rep, params, tau_images })
    }

    pub fn rep(&self) -> &BraidRep<S> {
        &self.rep
    }

    pub fn params(&self) -> &PhiParams<S> {
        &self.params
    }

    pub fn letter_image(&self, l: Letter) -> Result<&AlgebraElement<S>> {
        match l {
            Letter::Tau(i) => {
                if i == 0 || i >= self.rep.n() {
                    return Err(Error::IndexOutOfRange { index: i, n: self.rep.n() });
                }
                Ok(&self.tau_images[i - 1])
            }
            other => self.rep.letter_image(other),
        }
    }

    /// Product of letter images, strictly left to right.
    pub fn eval(&self, w: &SmWord) -> Result<AlgebraElement<S>> {
        let b = self.rep.backend();
        let mut acc = b.one();
        for &l in w.letters() {
            acc = b.mul(&acc, self.letter_image(l)?)?;
        }
        Ok(acc)
    }

    pub fn is_kernel_element(&self, w: &SmWord) -> Result<bool> {
        Ok(self.eval(w)?.is_identity())
    }

    pub fn check_relations(&self) -> Result<RelationReport<S>> {
        check_relations_by(self.rep.n(), |w| self.eval(w), |w| self.eval(w))
    }
}

pub fn phi_eval<S: Scalar>(phi: &Phi<S>, w: &SmWord) -> Result<AlgebraElement<S>> {
    phi.eval(w)
}

/// Exact equality of `Φ(w1)` and `Φ(w2)`.
pub fn phi_image_equal<S: Scalar>(phi: &Phi<S>, w1: &SmWord, w2: &SmWord) -> Result<bool> {
    if w1.n() != w2.n() {
        return Err(Error::StrandCountMismatch { expected: w1.n(), got: w2.n() });
    }
    Ok(phi.eval(w1)? == phi.eval(w2)?)
}

#[derive(Debug, Clone)]
pub struct RelationCheck<S> {
    pub instance: RelationInstance,
    pub lhs: AlgebraElement<S>,
    pub rhs: AlgebraElement<S>,
}

impl<S: Scalar> RelationCheck<S> {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Both sides of every relation instance on `n` strands.
#[derive(Debug, Clone)]
pub struct RelationReport<S> {
    pub n: usize,
    pub checks: Vec<RelationCheck<S>>,
}

impl<S: Scalar> RelationReport<S> {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }

    /// A family passes when all its instances do; families without
    /// instances on `n` strands pass vacuously.
    pub fn family_passes(&self, family: RelationFamily) -> bool {
        self.checks.iter().filter(|c| c.instance.family == family).all(RelationCheck::passed)
    }

    pub fn families_passed(&self) -> usize {
        RelationFamily::ALL.iter().filter(|&&f| self.family_passes(f)).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck<S>> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl<S: Scalar> fmt::Display for RelationReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}/{} relation families pass", self.families_passed(), RelationFamily::ALL.len())?;
        for c in self.failures() {
            writeln!(f, "FAIL {}: {} != {}", c.instance, c.lhs, c.rhs)?;
        }
        Ok(())
    }
}

/// Relation check with separate evaluators for the two sides, so that a
/// deliberately broken evaluator can be compared against a correct one.
pub fn check_relations_by<S, L, R>(n: usize, eval_lhs: L, eval_rhs: R) -> Result<RelationReport<S>>
where
    S: Scalar,
    L: Fn(&SmWord) -> Result<AlgebraElement<S>>,
    R: Fn(&SmWord) -> Result<AlgebraElement<S>>,
{
    let checks = relation_instances(n)
        .into_iter()
        .map(|instance| {
            let lhs = eval_lhs(&instance.lhs)?;
            let rhs = eval_rhs(&instance.rhs)?;
            Ok(RelationCheck { instance, lhs, rhs })
        })
        .collect::<Result<_>>()?;
    Ok(RelationReport { n, checks })
}

fn big<S: Scalar>(x: num_bigint::BigInt) -> S {
    S::from_rational(BigRational::from_integer(x))
}

/// `Σ_{i+j+k=p} p!/(i! j! k!) a^i b^j c^k d^{i-j+q}`, the image of
/// `τ_1^p σ_1^q` when `ρ(σ_1) = d`.
pub fn tau_power_expand<S: Scalar>(params: &PhiParams<S>, d: &S, p: u64, q: i64) -> Result<S> {
    let mut acc = S::zero();
    for i in 0..=p {
        for j in 0..=p - i {
            let k = p - i - j;
            let coeff = big::<S>(multinomial_coeff(p, i, j, k)?)
                * params.a.pow_int(i as i64)?
                * params.b.pow_int(j as i64)?
                * params.c.pow_int(k as i64)?;
            if coeff.is_zero() {
                continue;
            }
            acc = acc + coeff * d.pow_int(i as i64 - j as i64 + q)?;
        }
    }
    Ok(acc)
}

/// `(a d + b d^{-1} + c)^p d^q` by repeated multiplication.
pub fn tau_power_direct<S: Scalar>(params: &PhiParams<S>, d: &S, p: u64, q: i64) -> Result<S> {
    let mut tau = params.a.clone() * d.clone() + params.c.clone();
    if !params.b.is_zero() {
        tau = tau + params.b.clone() * d.inv()?;
    }
    let mut acc = S::one();
    for _ in 0..p {
        acc = acc * tau.clone();
    }
    Ok(acc * d.pow_int(q)?)
}
