//! Words in the generators of the braid group `B_n` and the singular braid
//! monoid `SM_n`.
//!
//! Words are literal letter sequences. Nothing here normalizes a word behind
//! the caller's back; the only reductions are the explicit free reductions in
//! [`BraidWord::free_reduce`] and in the enumerator.

mod enumerate;
mod relations;
mod rewrite;

use std::fmt;
use std::ops::Add;

use crate::algebra::Permutation;
use crate::error::{Error, Result};

pub use enumerate::{enumerate_braid_words, BraidWordEnumerator};
pub use relations::{relation_instances, RelationFamily, RelationInstance};
pub use rewrite::{
    conjugate, lemma9_decompose, strip_v_powers, tau_conjugator, theorem10_shape, to_sigma1_x_generators, Lemma9Block,
    Lemma9Form, ShapeBlock, ShapeForm, XLetter, XWord,
};

/// A generator letter with its 1-based strand index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Sigma(usize),
    SigmaInv(usize),
    Tau(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Sigma(i) | Letter::SigmaInv(i) | Letter::Tau(i) => i,
        }
    }

    pub fn is_tau(self) -> bool {
        matches!(self, Letter::Tau(_))
    }

    /// `None` for singular letters, which have no inverse.
    pub fn inverse(self) -> Option<Letter> {
        match self {
            Letter::Sigma(i) => Some(Letter::SigmaInv(i)),
            Letter::SigmaInv(i) => Some(Letter::Sigma(i)),
            Letter::Tau(_) => None,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.inverse() == Some(other)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Sigma(i) => write!(f, "s{i}"),
            Letter::SigmaInv(i) => write!(f, "S{i}"),
            Letter::Tau(i) => write!(f, "t{i}"),
        }
    }
}

/// A word in `SM_n`. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmWord {
    n: usize,
    letters: Vec<Letter>,
}

impl SmWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        check_strands(n)?;
        if let Some(bad) = letters.iter().find(|l| l.index() == 0 || l.index() >= n) {
            return Err(Error::IndexOutOfRange { index: bad.index(), n });
        }
        Ok(Self { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        Self { n, letters: Vec::new() }
    }

    /// Parses whitespace-separated tokens `s<k>`, `S<k>`, `t<k>`, `x`, `X`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        check_strands(n)?;
        let mut letters = Vec::new();
        for token in text.split_ascii_whitespace() {
            match token {
                "x" => letters.extend((1..n).map(Letter::Sigma)),
                "X" => letters.extend((1..n).rev().map(Letter::SigmaInv)),
                _ => {
                    let (head, digits) = token.split_at(1);
                    let index: usize = digits
                        .parse()
                        .ok()
                        .filter(|_| digits.bytes().all(|b| b.is_ascii_digit()))
                        .ok_or_else(|| Error::Parse(format!("unknown token `{token}`")))?;
                    let letter = match head {
                        "s" => Letter::Sigma(index),
                        "S" => Letter::SigmaInv(index),
                        "t" => Letter::Tau(index),
                        _ => return Err(Error::Parse(format!("unknown token `{token}`"))),
                    };
                    if index == 0 || index >= n {
                        return Err(Error::IndexOutOfRange { index, n });
                    }
                    letters.push(letter);
                }
            }
        }
        Ok(Self { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn tau_count(&self) -> u64 {
        self.letters.iter().filter(|l| l.is_tau()).count() as u64
    }

    /// Number of positive minus number of negative crossings.
    pub fn sigma_exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::Sigma(_) => 1,
                Letter::SigmaInv(_) => -1,
                Letter::Tau(_) => 0,
            })
            .sum()
    }

    /// Strand permutation; every letter with index `i` swaps strands `i` and `i+1`.
    pub fn permutation_image(&self) -> Permutation {
        self.letters.iter().fold(Permutation::identity(self.n), |acc, l| {
            acc.then(&Permutation::transposition(self.n, l.index() - 1, l.index()))
        })
    }

    /// Panics if the strand counts differ.
    pub fn concat(&self, other: &SmWord) -> SmWord {
        assert_eq!(self.n, other.n, "concatenating words on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        SmWord { n: self.n, letters }
    }

    pub fn pow(&self, k: u64) -> SmWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k as usize);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        SmWord { n: self.n, letters }
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if letter.index() == 0 || letter.index() >= self.n {
            return Err(Error::IndexOutOfRange { index: letter.index(), n: self.n });
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn is_braid(&self) -> bool {
        !self.letters.iter().any(|l| l.is_tau())
    }

    pub fn to_braid(&self) -> Option<BraidWord> {
        self.is_braid().then(|| BraidWord(self.clone()))
    }

    /// `τ_i^k` on `n` strands.
    pub fn tau_power(n: usize, i: usize, k: u64) -> SmWord {
        SmWord { n, letters: vec![Letter::Tau(i); k as usize] }
    }

    /// `τ_1^p σ_1^q`, the SM_2-style word with normal form `(p, q)`.
    pub fn tau_sigma(n: usize, p: u64, q: i64) -> SmWord {
        SmWord::tau_power(n, 1, p).concat(BraidWord::sigma_power(n, 1, q).as_word())
    }
}

impl Add<&SmWord> for &SmWord {
    type Output = SmWord;

    fn add(self, rhs: &SmWord) -> SmWord {
        self.concat(rhs)
    }
}

/// Canonical token form; the empty word prints as the empty string.
impl fmt::Display for SmWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn check_strands(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidStrandCount(n))
    } else {
        Ok(())
    }
}

/// A word with no singular letters, i.e. an element of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord(SmWord);

impl BraidWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(l) = letters.iter().find(|l| l.is_tau()) {
            return Err(Error::Parse(format!("singular letter {l} in a braid word")));
        }
        Ok(BraidWord(SmWord::new(n, letters)?))
    }

    pub fn identity(n: usize) -> Self {
        BraidWord(SmWord::identity(n))
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let w = SmWord::parse(text, n)?;
        w.to_braid().ok_or_else(|| Error::Parse(format!("`{text}` contains singular letters")))
    }

    /// `σ_i^k` for any integer `k`.
    pub fn sigma_power(n: usize, i: usize, k: i64) -> Self {
        let letter = if k >= 0 { Letter::Sigma(i) } else { Letter::SigmaInv(i) };
        BraidWord(SmWord { n, letters: vec![letter; k.unsigned_abs() as usize] })
    }

    pub fn as_word(&self) -> &SmWord {
        &self.0
    }

    pub fn into_word(self) -> SmWord {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0.letters
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        let letters =
            self.0.letters.iter().rev().map(|l| l.inverse().expect("braid words have no singular letters")).collect();
        BraidWord(SmWord { n: self.0.n, letters })
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        BraidWord(self.0.concat(&other.0))
    }

    /// Removes adjacent letter/inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in self.letters() {
            if out.last().is_some_and(|&prev| prev.cancels(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord(SmWord { n: self.0.n, letters: out })
    }

    /// `prefix · self`, cancelling only across the junction.
    pub fn prepend_reduced(&self, prefix: &BraidWord) -> BraidWord {
        let mut front: Vec<Letter> = prefix.letters().to_vec();
        let mut rest = self.letters();
        while let (Some(&last), Some(&first)) = (front.last(), rest.first()) {
            if !last.cancels(first) {
                break;
            }
            front.pop();
            rest = &rest[1..];
        }
        front.extend_from_slice(rest);
        BraidWord(SmWord { n: self.0.n, letters: front })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Normal form `τ_1^p σ_1^q` of an element of `SM_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sm2NormalForm {
    pub p: u64,
    pub q: i64,
}

impl Add for Sm2NormalForm {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Sm2NormalForm { p: self.p + rhs.p, q: self.q + rhs.q }
    }
}

impl fmt::Display for Sm2NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// `SM_2` is the commutative monoid `N × Z`, so the letter counts decide equality.
pub fn sm2_normal_form(w: &SmWord) -> Result<Sm2NormalForm> {
    if w.n != 2 {
        return Err(Error::StrandCountMismatch { expected: 2, got: w.n });
    }
    Ok(Sm2NormalForm { p: w.tau_count(), q: w.sigma_exponent_sum() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(text: &str, n: usize) -> SmWord {
        SmWord::parse(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("t1 s1", 2).letters(), &[Letter::Tau(1), Letter::Sigma(1)]);
        assert_eq!(w("x", 3).letters(), &[Letter::Sigma(1), Letter::Sigma(2)]);
        assert_eq!(w("X", 3).letters(), &[Letter::SigmaInv(2), Letter::SigmaInv(1)]);
        assert_eq!(SmWord::parse("s3", 3), Err(Error::IndexOutOfRange { index: 3, n: 3 }));
        assert_eq!(SmWord::parse("s1", 1), Err(Error::InvalidStrandCount(1)));
        assert!(matches!(SmWord::parse("q1", 3), Err(Error::Parse(_))));
        assert!(matches!(SmWord::parse("s", 3), Err(Error::Parse(_))));
        assert!(matches!(SmWord::parse("s+1", 3), Err(Error::Parse(_))));
        assert!(matches!(SmWord::parse("s0", 3), Err(Error::IndexOutOfRange { .. })));
        assert!(w("", 3).is_empty());
        assert!(w("  \t ", 3).is_empty());
    }

    #[test]
    fn serialization_is_canonical() {
        assert_eq!(w("x  t2\nS1", 3).to_string(), "s1 s2 t2 S1");
        assert_eq!(SmWord::identity(4).to_string(), "");
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(w("t1 s1", 2).tau_count(), 1);
        assert_eq!(w("s1 s2 t1", 3).tau_count(), 1);
        assert_eq!(w("t2 s1 s2", 3).tau_count(), 1);
        assert_eq!(SmWord::identity(2).tau_count(), 0);
        assert_eq!(w("s1 S1", 2).sigma_exponent_sum(), 0);
        assert_eq!(w("s1 s2 s1", 3).sigma_exponent_sum(), 3);
        assert_eq!(w("s2 s1 s2", 3).sigma_exponent_sum(), 3);
        assert_eq!(w("t1 s1 s1", 2).sigma_exponent_sum(), 2);
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w("s1", 2).permutation_image().images(), &[1, 0]);
        assert!(w("t1 t1", 2).permutation_image().is_identity());
        // relation (7) on three strands
        assert_eq!(w("s2 s1 t2", 3).permutation_image(), w("t1 s2 s1", 3).permutation_image());
    }

    #[test]
    fn sm2_examples() {
        assert_eq!(sm2_normal_form(&w("t1 s1", 2)).unwrap(), Sm2NormalForm { p: 1, q: 1 });
        assert_eq!(sm2_normal_form(&w("S1 t1 s1", 2)).unwrap(), Sm2NormalForm { p: 1, q: 0 });
        assert_ne!(sm2_normal_form(&w("t1 s1", 2)).unwrap(), sm2_normal_form(&w("t1", 2)).unwrap());
        assert!(sm2_normal_form(&w("t1", 3)).is_err());
    }

    #[test]
    fn braid_inverse_and_reduction() {
        let b = BraidWord::parse("s1 S2 s2 s1", 3).unwrap();
        assert_eq!(b.inverse().to_string(), "S1 S2 s2 S1");
        assert_eq!(b.free_reduce().to_string(), "s1 s1");
        assert_eq!(b.concat(&b.inverse()).free_reduce(), BraidWord::identity(3));
        assert!(BraidWord::parse("t1", 3).is_err());
        let tail = BraidWord::parse("s1 s2", 3).unwrap();
        let head = BraidWord::parse("s2 S1", 3).unwrap();
        assert_eq!(tail.prepend_reduced(&head).to_string(), "s2 s2");
    }

    fn sm2_word() -> impl Strategy<Value = SmWord> {
        prop::collection::vec(0u8..3, 0..20).prop_map(|codes| {
            let letters = codes
                .into_iter()
                .map(|c| match c {
                    0 => Letter::Sigma(1),
                    1 => Letter::SigmaInv(1),
                    _ => Letter::Tau(1),
                })
                .collect();
            SmWord::new(2, letters).unwrap()
        })
    }

    proptest! {
        #[test]
        fn sm2_normal_form_is_additive(a in sm2_word(), b in sm2_word()) {
            let lhs = sm2_normal_form(&a.concat(&b)).unwrap();
            let rhs = sm2_normal_form(&a).unwrap() + sm2_normal_form(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn parse_display_roundtrip(a in sm2_word()) {
            prop_assert_eq!(SmWord::parse(&a.to_string(), 2).unwrap(), a);
        }
    }
}
