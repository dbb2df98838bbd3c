use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::algebra::{AlgebraElement, Permutation};
use crate::error::{Error, Result};
use crate::phi::{Phi, PhiParams};
use crate::reps::BraidRep;
use crate::scalars::Scalar;
use crate::words::{sm2_normal_form, BraidWord, Letter, Sm2NormalForm, SmWord};

/// Which single parameter of `(a, b, c)` is nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `Φ_{a,0,0}`
    A,
    /// `Φ_{0,b,0}`
    B,
    /// `Φ_{0,0,c}`
    C,
}

impl Family {
    pub fn params<S: Scalar>(self, val: S) -> PhiParams<S> {
        let z = S::zero;
        match self {
            Family::A => PhiParams::new(val, z(), z()),
            Family::B => PhiParams::new(z(), val, z()),
            Family::C => PhiParams::new(z(), z(), val),
        }
    }

    /// The braid word whose image matches `τ_1^k` under this family's `Φ`
    /// once the scalar factor is absorbed: `σ_1^k`, `σ_1^{-k}`, or empty.
    pub fn partner(self, n: usize, k: u64) -> SmWord {
        let k = k as i64;
        match self {
            Family::A => BraidWord::sigma_power(n, 1, k).into_word(),
            Family::B => BraidWord::sigma_power(n, 1, -k).into_word(),
            Family::C => SmWord::identity(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "a00",
            Family::B => "0b0",
            Family::C => "00c",
        })
    }
}

/// A monoid invariant on which two words disagree, proving them distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Sm2NormalForm(Sm2NormalForm, Sm2NormalForm),
    TauCount(u64, u64),
    SigmaExponent(i64, i64),
    Permutation(Permutation, Permutation),
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Sm2NormalForm(x, y) => write!(f, "SM_2 normal form {x} != {y}"),
            Certificate::TauCount(x, y) => write!(f, "tau count {x} != {y}"),
            Certificate::SigmaExponent(x, y) => write!(f, "sigma exponent sum {x} != {y}"),
            Certificate::Permutation(x, y) => write!(f, "permutation {x} != {y}"),
        }
    }
}

/// First invariant separating `w1` and `w2`; on two strands the normal form
/// is complete, so `None` there means the words are equal.
pub fn distinctness_certificate(w1: &SmWord, w2: &SmWord) -> Option<Certificate> {
    if w1.n() == 2 && w2.n() == 2 {
        let (x, y) = (sm2_normal_form(w1).ok()?, sm2_normal_form(w2).ok()?);
        return (x != y).then_some(Certificate::Sm2NormalForm(x, y));
    }
    let (t1, t2) = (w1.tau_count(), w2.tau_count());
    if t1 != t2 {
        return Some(Certificate::TauCount(t1, t2));
    }
    let (e1, e2) = (w1.sigma_exponent_sum(), w2.sigma_exponent_sum());
    if e1 != e2 {
        return Some(Certificate::SigmaExponent(e1, e2));
    }
    let (p1, p2) = (w1.permutation_image(), w2.permutation_image());
    (p1 != p2).then_some(Certificate::Permutation(p1, p2))
}

/// Two distinct words with one image. Both facts are checked by [`Self::new`].
#[derive(Debug, Clone)]
pub struct UnfaithfulnessWitness<S> {
    pub w1: SmWord,
    pub w2: SmWord,
    pub certificate: Certificate,
    pub image: AlgebraElement<S>,
}

impl<S: Scalar> UnfaithfulnessWitness<S> {
    pub fn new(phi: &Phi<S>, w1: SmWord, w2: SmWord) -> Result<Self> {
        let certificate = distinctness_certificate(&w1, &w2)
            .ok_or_else(|| Error::Precondition(format!("no invariant separates {w1} and {w2}")))?;
        let image = phi.eval(&w1)?;
        let other = phi.eval(&w2)?;
        if image != other {
            return Err(Error::Precondition(format!("images differ: {image} vs {other}")));
        }
        Ok(Self { w1, w2, certificate, image })
    }
}

impl<S: Scalar> fmt::Display for UnfaithfulnessWitness<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] and [{}] share image {} ({})", self.w1, self.w2, self.image, self.certificate)
    }
}

/// `val^r = 1`: `τ_1^r` and its partner have the same image.
pub fn witness_root<S: Scalar>(rep: &BraidRep<S>, family: Family, val: &S, r: u64) -> Result<UnfaithfulnessWitness<S>> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    if !val.pow_int(r as i64)?.is_one() {
        return Err(Error::Precondition(format!("({val})^{r} != 1")));
    }
    let n = rep.n();
    let phi = Phi::new(rep.clone(), family.params(val.clone()))?;
    UnfaithfulnessWitness::new(&phi, SmWord::tau_power(n, 1, r), family.partner(n, r))
}

/// `ρ(v) = val^{-s}`: `τ_1^s v` and its partner have the same image.
pub fn witness_scalar<S: Scalar>(
    rep: &BraidRep<S>,
    family: Family,
    val: &S,
    v: &BraidWord,
    s: u64,
) -> Result<UnfaithfulnessWitness<S>> {
    if s == 0 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    let target = val.pow_int(-(s as i64))?;
    if rep.eval(v)?.as_scalar() != Some(target.clone()) {
        return Err(Error::Precondition(format!("rho({v}) is not {target} times the identity")));
    }
    let n = rep.n();
    let phi = Phi::new(rep.clone(), family.params(val.clone()))?;
    let w1 = SmWord::tau_power(n, 1, s).concat(v.as_word());
    UnfaithfulnessWitness::new(&phi, w1, family.partner(n, s))
}

/// Breadth-first search for a braid `v` of length `<= len_max` with
/// `ρ(v) = val^{-s}`, `0 < |s| <= s_max`.
///
/// Group elements already reached by a shorter word are not expanded again.
/// A hit with `s < 0` is reported as `(v^{-1}, -s)`. `None` only means the
/// bounded search found nothing.
pub fn find_scalar_witness<S: Scalar>(
    rep: &BraidRep<S>,
    val: &S,
    s_max: u64,
    len_max: usize,
) -> Result<Option<(BraidWord, u64)>> {
    let targets: Vec<(i64, S)> =
        (1..=s_max as i64).flat_map(|s| [s, -s]).map(|s| Ok((s, val.pow_int(-s)?))).collect::<Result<_>>()?;
    let n = rep.n();
    let letters: Vec<Letter> = (1..n).flat_map(|i| [Letter::Sigma(i), Letter::SigmaInv(i)]).collect();
    let backend = rep.backend();
    let mut seen: HashSet<String> = HashSet::new();
    let mut queue: VecDeque<(BraidWord, AlgebraElement<S>)> = VecDeque::new();
    let start = backend.one();
    seen.insert(start.canonical_key());
    queue.push_back((BraidWord::identity(n), start));
    while let Some((word, img)) = queue.pop_front() {
        if let Some(lambda) = img.as_scalar() {
            if let Some((s, _)) = targets.iter().find(|(_, t)| *t == lambda) {
                return Ok(Some(if *s > 0 { (word, *s as u64) } else { (word.inverse(), s.unsigned_abs()) }));
            }
        }
        if word.len() >= len_max {
            continue;
        }
        for &l in &letters {
            let next = backend.mul(&img, rep.letter_image(l)?)?;
            if seen.insert(next.canonical_key()) {
                let mut w = word.as_word().clone();
                w.push(l)?;
                queue.push_back((w.to_braid().expect("braid letters only"), next));
            }
        }
    }
    Ok(None)
}
