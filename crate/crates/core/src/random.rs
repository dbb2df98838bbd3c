//! Seeded generators for randomized checks.

use num_bigint::BigInt;
use rand::Rng;

use crate::phi::PhiParams;
use crate::scalars::{Rational, Scalar};
use crate::words::{BraidWord, Letter, ShapeBlock, ShapeForm, SmWord};

/// `p/q` with `|p| <= num_max`, `1 <= q <= den_max`.
pub fn rational<R: Rng>(rng: &mut R, num_max: i64, den_max: i64) -> Rational {
    let p = rng.gen_range(-num_max..=num_max);
    let q = rng.gen_range(1..=den_max);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, num_max: i64, den_max: i64) -> Rational {
    loop {
        let x = rational(rng, num_max, den_max);
        if x != Rational::from_integer(BigInt::from(0)) {
            return x;
        }
    }
}

pub fn params<S: Scalar, R: Rng>(rng: &mut R) -> PhiParams<S> {
    let mut draw = || S::from_rational(rational(rng, 9, 5));
    PhiParams::new(draw(), draw(), draw())
}

pub fn nonzero_params<S: Scalar, R: Rng>(rng: &mut R) -> PhiParams<S> {
    let mut draw = || S::from_rational(nonzero_rational(rng, 9, 5));
    PhiParams::new(draw(), draw(), draw())
}

fn braid_letter<R: Rng>(rng: &mut R, n: usize) -> Letter {
    let i = rng.gen_range(1..n);
    if rng.gen_bool(0.5) {
        Letter::Sigma(i)
    } else {
        Letter::SigmaInv(i)
    }
}

/// Uniform length in `0..=max_len`, letters uniform over `σ_i^{±1}`.
pub fn braid_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| braid_letter(rng, n)).collect();
    BraidWord::new(n, letters).expect("indices drawn in range")
}

/// Letters uniform over `σ_i`, `σ_i^{-1}`, `τ_i`.
pub fn sm_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> SmWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            match rng.gen_range(0..3) {
                0 => Letter::Sigma(i),
                1 => Letter::SigmaInv(i),
                _ => Letter::Tau(i),
            }
        })
        .collect();
    SmWord::new(n, letters).expect("indices drawn in range")
}

/// A shape form over `v = τ_1^p σ_1^q` with `1..=max_blocks` blocks.
pub fn shape_form<R: Rng>(
    rng: &mut R,
    n: usize,
    p: u64,
    q: i64,
    max_blocks: usize,
    max_m: u64,
    max_braid_len: usize,
) -> ShapeForm {
    let k = rng.gen_range(1..=max_blocks);
    let blocks = (0..k)
        .map(|_| ShapeBlock {
            r: rng.gen_range(0..p),
            m: rng.gen_range(0..=max_m),
            braid: braid_word(rng, n, max_braid_len),
        })
        .collect();
    ShapeForm { n, p, q, blocks }
}
