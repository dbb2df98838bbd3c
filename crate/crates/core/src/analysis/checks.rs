use crate::error::{Error, Result};
use crate::phi::{Phi, PhiParams};
use crate::reps::burau_reduced;
use crate::scalars::Indeterminate;
use crate::scalars::Scalar;
use crate::words::{conjugate, strip_v_powers, theorem10_shape, BraidWord, ShapeForm, SmWord};

/// Whether every conjugate `u w u^{-1}` of the kernel element `w` is again in the kernel.
pub fn lemma8_check<S: Scalar>(phi: &Phi<S>, kernel_word: &SmWord, conjugators: &[BraidWord]) -> Result<bool> {
    if !phi.is_kernel_element(kernel_word)? {
        return Err(Error::Precondition(format!("{kernel_word} is not in the kernel")));
    }
    for u in conjugators {
        if !phi.is_kernel_element(&conjugate(kernel_word, u)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether dropping the `v` powers of a shape form keeps its image.
/// Requires `Φ(v) = 1`.
pub fn strip_preserves_image<S: Scalar>(phi: &Phi<S>, sf: &ShapeForm) -> Result<bool> {
    if !phi.is_kernel_element(&sf.v())? {
        return Err(Error::Precondition(format!("v = {} is not in the kernel", sf.v())));
    }
    Ok(phi.eval(&sf.assemble())? == phi.eval(&strip_v_powers(sf))?)
}

/// `Φ(w) = Φ(strip(shape(w)))` for `v = τ_1^p σ_1^q` in the kernel.
pub fn shape_round_trip<S: Scalar>(phi: &Phi<S>, w: &SmWord, p: u64, q: i64) -> Result<bool> {
    let sf = theorem10_shape(w, p, q)?;
    Ok(strip_preserves_image(phi, &sf)? && phi.eval(w)? == phi.eval(&strip_v_powers(&sf))?)
}

/// Equality in `SM_3` through `Φ_{1,-1,0}` over reduced Burau in the formal
/// algebra of `GL_2`.
///
/// A `true` answer proves equality only through two external results: that
/// reduced Burau is faithful on `B_3`, and that this singular extension of a
/// faithful representation is injective. A `false` answer is unconditional.
#[derive(Debug, Clone)]
pub struct Sm3Oracle<S> {
    phi: Phi<S>,
}

impl<S: Indeterminate> Sm3Oracle<S> {
    pub fn new() -> Result<Self> {
        let rep = burau_reduced::<S>(3)?.into_formal()?;
        Ok(Self { phi: Phi::new(rep, PhiParams::from_i64(1, -1, 0))? })
    }

    pub fn equal(&self, w1: &SmWord, w2: &SmWord) -> Result<bool> {
        for w in [w1, w2] {
            if w.n() != 3 {
                return Err(Error::StrandCountMismatch { expected: 3, got: w.n() });
            }
        }
        Ok(self.phi.eval(w1)? == self.phi.eval(w2)?)
    }
}

pub fn sm3_word_equality<S: Indeterminate>(w1: &SmWord, w2: &SmWord) -> Result<bool> {
    Sm3Oracle::<S>::new()?.equal(w1, w2)
}
