//! Rewriting transforms that move a word onto the generators `σ_1^{±1}`,
//! `x^{±1}`, `τ_1` and into block shapes `τ_1^{r_1} u_1 ... τ_1^{r_k} u_k`.
//!
//! Each transform returns a word whose image agrees with the input under
//! every representation of `SM_n`; none of them changes the number of
//! singular letters.

use std::fmt;

use super::{BraidWord, Letter, SmWord};
use crate::error::{Error, Result};

/// The braid `w_i` with `τ_i = w_i τ_1 w_i^{-1}`.
///
/// From `σ_i σ_{i+1} τ_i = τ_{i+1} σ_i σ_{i+1}` we get
/// `w_1 = e` and `w_{i+1} = σ_i σ_{i+1} w_i`.
pub fn tau_conjugator(i: usize, n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::InvalidStrandCount(n));
    }
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let mut letters = Vec::new();
    for k in (1..i).rev() {
        letters.push(Letter::Sigma(k));
        letters.push(Letter::Sigma(k + 1));
    }
    BraidWord::new(n, letters)
}

/// Letters of the two-generator presentation `<σ_1^{±1}, x^{±1}, τ_1>`,
/// where `x = σ_1 σ_2 ... σ_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum XLetter {
    Sigma1,
    Sigma1Inv,
    X,
    XInv,
    Tau1,
}

impl fmt::Display for XLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            XLetter::Sigma1 => "s1",
            XLetter::Sigma1Inv => "S1",
            XLetter::X => "x",
            XLetter::XInv => "X",
            XLetter::Tau1 => "t1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XWord {
    pub n: usize,
    pub letters: Vec<XLetter>,
}

impl XWord {
    /// Rewrites into the standard generators, expanding `x` and `x^{-1}`.
    pub fn expand(&self) -> SmWord {
        let n = self.n;
        let mut letters = Vec::new();
        for l in &self.letters {
            match l {
                XLetter::Sigma1 => letters.push(Letter::Sigma(1)),
                XLetter::Sigma1Inv => letters.push(Letter::SigmaInv(1)),
                XLetter::Tau1 => letters.push(Letter::Tau(1)),
                XLetter::X => letters.extend((1..n).map(Letter::Sigma)),
                XLetter::XInv => letters.extend((1..n).rev().map(Letter::SigmaInv)),
            }
        }
        SmWord { n, letters }
    }
}

/// Same token grammar as [`SmWord`]; parses back to the expanded word.
impl fmt::Display for XWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&tokens.join(" "))
    }
}

/// Rewrites `w` over `σ_1^{±1}, x^{±1}, τ_1` using `σ_i = x^{i-1} σ_1 x^{-(i-1)}`
/// and `τ_i = w_i τ_1 w_i^{-1}`.
pub fn to_sigma1_x_generators(w: &SmWord) -> XWord {
    let n = w.n();
    let mut out = Vec::new();
    let push_conjugated = |out: &mut Vec<XLetter>, i: usize, core: XLetter| {
        out.extend(std::iter::repeat_n(XLetter::X, i - 1));
        out.push(core);
        out.extend(std::iter::repeat_n(XLetter::XInv, i - 1));
    };
    let push_braid_letter = |out: &mut Vec<XLetter>, l: Letter| match l {
        Letter::Sigma(i) => push_conjugated(out, i, XLetter::Sigma1),
        Letter::SigmaInv(i) => push_conjugated(out, i, XLetter::Sigma1Inv),
        Letter::Tau(_) => unreachable!("conjugators are braid words"),
    };
    for &l in w.letters() {
        match l {
            Letter::Tau(i) => {
                let conj = tau_conjugator(i, n).expect("index validated by SmWord");
                for &c in conj.letters() {
                    push_braid_letter(&mut out, c);
                }
                out.push(XLetter::Tau1);
                for &c in conj.inverse().letters() {
                    push_braid_letter(&mut out, c);
                }
            }
            other => push_braid_letter(&mut out, other),
        }
    }
    XWord { n, letters: out }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lemma9Block {
    pub tau_power: u64,
    pub braid: BraidWord,
}

/// `w = τ_1^{r_1} u_1 τ_1^{r_2} u_2 ... τ_1^{r_k} u_k`.
///
/// Only the first block may have `r_1 = 0`; its braid is then the leading
/// conjugator `u_0`, and `u_0^{-1} w u_0` (see [`Lemma9Form::rotated`]) starts
/// with `τ_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lemma9Form {
    pub n: usize,
    pub blocks: Vec<Lemma9Block>,
}

impl Lemma9Form {
    pub fn assemble(&self) -> SmWord {
        let mut w = SmWord::identity(self.n);
        for b in &self.blocks {
            w = w.concat(&SmWord::tau_power(self.n, 1, b.tau_power)).concat(b.braid.as_word());
        }
        w
    }

    pub fn leading_conjugator(&self) -> Option<&BraidWord> {
        self.blocks.first().filter(|b| b.tau_power == 0).map(|b| &b.braid)
    }

    pub fn tau_count(&self) -> u64 {
        self.blocks.iter().map(|b| b.tau_power).sum()
    }

    /// The conjugate `u_0^{-1} w u_0`, which begins with `τ_1` whenever `w`
    /// contains a singular letter.
    pub fn rotated(&self) -> Lemma9Form {
        match self.leading_conjugator() {
            Some(u0) if self.blocks.len() > 1 => {
                let mut blocks = self.blocks[1..].to_vec();
                let last = blocks.last_mut().expect("at least one block remains");
                last.braid = last.braid.concat(u0);
                Lemma9Form { n: self.n, blocks }
            }
            _ => self.clone(),
        }
    }
}

/// Replaces each `τ_i` by `w_i τ_1 w_i^{-1}` and groups the result into blocks.
pub fn lemma9_decompose(w: &SmWord) -> Lemma9Form {
    let n = w.n();
    let mut blocks: Vec<Lemma9Block> = Vec::new();
    let push_braid = |blocks: &mut Vec<Lemma9Block>, l: Letter| {
        if blocks.is_empty() {
            blocks.push(Lemma9Block { tau_power: 0, braid: BraidWord::identity(n) });
        }
        let b = blocks.last_mut().expect("nonempty");
        b.braid.0.letters.push(l);
    };
    let push_tau = |blocks: &mut Vec<Lemma9Block>| match blocks.last_mut() {
        Some(b) if b.braid.is_empty() => b.tau_power += 1,
        _ => blocks.push(Lemma9Block { tau_power: 1, braid: BraidWord::identity(n) }),
    };
    for &l in w.letters() {
        match l {
            Letter::Tau(i) => {
                let conj = tau_conjugator(i, n).expect("index validated by SmWord");
                for &c in conj.letters() {
                    push_braid(&mut blocks, c);
                }
                push_tau(&mut blocks);
                for &c in conj.inverse().letters() {
                    push_braid(&mut blocks, c);
                }
            }
            other => push_braid(&mut blocks, other),
        }
    }
    Lemma9Form { n, blocks }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeBlock {
    /// Leftover singular power, `0 <= r < p`.
    pub r: u64,
    /// Power of `v = τ_1^p σ_1^q`.
    pub m: u64,
    pub braid: BraidWord,
}

/// `w = τ_1^{r_1} v^{m_1} u_1 ... τ_1^{r_k} v^{m_k} u_k` with `v = τ_1^p σ_1^q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeForm {
    pub n: usize,
    pub p: u64,
    pub q: i64,
    pub blocks: Vec<ShapeBlock>,
}

impl ShapeForm {
    pub fn v(&self) -> SmWord {
        SmWord::tau_sigma(self.n, self.p, self.q)
    }

    pub fn assemble(&self) -> SmWord {
        let v = self.v();
        let mut w = SmWord::identity(self.n);
        for b in &self.blocks {
            w = w.concat(&SmWord::tau_power(self.n, 1, b.r)).concat(&v.pow(b.m)).concat(b.braid.as_word());
        }
        w
    }
}

/// Splits every `τ_1^s` of the block decomposition of `w` as
/// `τ_1^{s mod p} v^{s div p} σ_1^{-(s div p) q}` and merges the trailing
/// `σ_1` power into the following braid.
pub fn theorem10_shape(w: &SmWord, p: u64, q: i64) -> Result<ShapeForm> {
    if p == 0 {
        return Err(Error::InvalidParameter("v = τ_1^p σ_1^q needs p >= 1".into()));
    }
    let n = w.n();
    let blocks = lemma9_decompose(w)
        .blocks
        .into_iter()
        .map(|b| {
            let m = b.tau_power / p;
            let shift = BraidWord::sigma_power(n, 1, -(m as i64) * q);
            ShapeBlock { r: b.tau_power % p, m, braid: b.braid.prepend_reduced(&shift) }
        })
        .collect();
    Ok(ShapeForm { n, p, q, blocks })
}

/// Drops every `v^{m_i}` factor.
pub fn strip_v_powers(sf: &ShapeForm) -> SmWord {
    let mut w = SmWord::identity(sf.n);
    for b in &sf.blocks {
        w = w.concat(&SmWord::tau_power(sf.n, 1, b.r)).concat(b.braid.as_word());
    }
    w
}

/// `u w u^{-1}`.
pub fn conjugate(w: &SmWord, u: &BraidWord) -> Result<SmWord> {
    if w.n() != u.n() {
        return Err(Error::StrandCountMismatch { expected: w.n(), got: u.n() });
    }
    Ok(u.as_word().concat(w).concat(u.inverse().as_word()))
}
