//! Representations of the braid group `B_n` inside an algebra backend.

use std::fmt;

use crate::algebra::{
    make_group, AlgebraElement, Backend, CyclicAlgebra, GroupElement, GroupKind, Matrix, Permutation,
};
use crate::error::{Error, Result};
use crate::scalars::{root_of_unity_order, Indeterminate, Scalar};
use crate::words::{BraidWord, Letter};

/// What is known about injectivity of `ρ`. Declarative only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Faithfulness {
    KnownFaithful(String),
    /// A reason, and a nontrivial braid mapping to the identity when one is at hand.
    KnownUnfaithful(String, Option<BraidWord>),
    Unknown,
}

impl fmt::Display for Faithfulness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Faithfulness::KnownFaithful(why) => write!(f, "known faithful ({why})"),
            Faithfulness::KnownUnfaithful(why, Some(w)) => write!(f, "known unfaithful ({why}; witness {w})"),
            Faithfulness::KnownUnfaithful(why, None) => write!(f, "known unfaithful ({why})"),
            Faithfulness::Unknown => write!(f, "unknown"),
        }
    }
}

/// `ρ: B_n → A` given by `σ_i ↦ unit_i · g_i`.
///
/// Images and inverse images are computed once at construction, and the
/// braid relations are checked on them.
#[derive(Debug, Clone)]
pub struct BraidRep<S> {
    n: usize,
    backend: Backend<S>,
    generators: Vec<(S, GroupElement<S>)>,
    images: Vec<AlgebraElement<S>>,
    inverse_images: Vec<AlgebraElement<S>>,
    faithfulness: Faithfulness,
    label: String,
}

impl<S: Scalar> BraidRep<S> {
    pub fn from_generators(
        n: usize,
        backend: Backend<S>,
        generators: Vec<(S, GroupElement<S>)>,
        faithfulness: Faithfulness,
        label: impl Into<String>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidStrandCount(n));
        }
        if generators.len() != n - 1 {
            return Err(Error::StrandCountMismatch { expected: n - 1, got: generators.len() });
        }
        let mut images = Vec::with_capacity(n - 1);
        let mut inverse_images = Vec::with_capacity(n - 1);
        for (unit, g) in &generators {
            let unit_inv = unit.inv()?;
            let g_inv = backend.invert_group_element(g)?;
            let img = backend.scale(&backend.embed(g)?, unit)?;
            let inv = backend.scale(&backend.embed(&g_inv)?, &unit_inv)?;
            if !backend.mul(&img, &inv)?.is_identity() {
                return Err(Error::RelationViolation(format!("image {img} is not invertible")));
            }
            images.push(img);
            inverse_images.push(inv);
        }
        let rep = Self { n, backend, generators, images, inverse_images, faithfulness, label: label.into() };
        rep.check_braid_relations()?;
        Ok(rep)
    }

    fn check_braid_relations(&self) -> Result<()> {
        let b = &self.backend;
        let img = &self.images;
        for i in 0..self.n - 1 {
            if i + 1 < self.n - 1 {
                let lhs = b.mul(&b.mul(&img[i], &img[i + 1])?, &img[i])?;
                let rhs = b.mul(&b.mul(&img[i + 1], &img[i])?, &img[i + 1])?;
                if lhs != rhs {
                    return Err(Error::RelationViolation(format!(
                        "s{} s{} s{} != s{} s{} s{}",
                        i + 1,
                        i + 2,
                        i + 1,
                        i + 2,
                        i + 1,
                        i + 2
                    )));
                }
            }
            for j in i + 2..self.n - 1 {
                if b.mul(&img[i], &img[j])? != b.mul(&img[j], &img[i])? {
                    return Err(Error::RelationViolation(format!("s{} s{} != s{} s{}", i + 1, j + 1, j + 1, i + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn backend(&self) -> &Backend<S> {
        &self.backend
    }

    pub fn generators(&self) -> &[(S, GroupElement<S>)] {
        &self.generators
    }

    pub fn faithfulness(&self) -> &Faithfulness {
        &self.faithfulness
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `ρ(σ_i)`, 1-based.
    pub fn sigma(&self, i: usize) -> Result<&AlgebraElement<S>> {
        self.check_index(i)?;
        Ok(&self.images[i - 1])
    }

    /// `ρ(σ_i^{-1})`, 1-based.
    pub fn sigma_inv(&self, i: usize) -> Result<&AlgebraElement<S>> {
        self.check_index(i)?;
        Ok(&self.inverse_images[i - 1])
    }

    /// Image of a braid letter. Singular letters have no image under `ρ`.
    pub fn letter_image(&self, l: Letter) -> Result<&AlgebraElement<S>> {
        match l {
            Letter::Sigma(i) => self.sigma(i),
            Letter::SigmaInv(i) => self.sigma_inv(i),
            Letter::Tau(_) => Err(Error::Precondition(format!("{l} is not a braid letter"))),
        }
    }

    pub fn eval(&self, w: &BraidWord) -> Result<AlgebraElement<S>> {
        let mut acc = self.backend.one();
        for &l in w.letters() {
            acc = self.backend.mul(&acc, self.letter_image(l)?)?;
        }
        Ok(acc)
    }

    /// The same assignment in the formal group algebra of the underlying group.
    pub fn into_formal(self) -> Result<Self> {
        let kind = match self.generators.first().map(|(_, g)| g) {
            Some(GroupElement::Perm(p)) => GroupKind::Symmetric(p.degree()),
            Some(GroupElement::Exponents(v)) => GroupKind::FreeAbelian(v.len()),
            Some(GroupElement::Matrix(m)) => GroupKind::Matrix(m.dim()),
            Some(GroupElement::Identity) | None => GroupKind::Trivial,
        };
        let backend = Backend::Formal(make_group(kind)?);
        let label = format!("{} [formal]", self.label);
        Self::from_generators(self.n, backend, self.generators, self.faithfulness, label)
    }
}

/// `rep_eval` as a free function.
pub fn rep_eval<S: Scalar>(rep: &BraidRep<S>, w: &BraidWord) -> Result<AlgebraElement<S>> {
    rep.eval(w)
}

fn burau_block<S: Indeterminate>(n: usize, i: usize) -> Matrix<S> {
    let t = S::t();
    let mut m = Matrix::identity(n);
    m.set(i - 1, i - 1, S::one() - t.clone());
    m.set(i - 1, i, t);
    m.set(i, i - 1, S::one());
    m.set(i, i, S::zero());
    m
}

fn matrix_generators<S: Scalar>(ms: Vec<Matrix<S>>) -> Vec<(S, GroupElement<S>)> {
    ms.into_iter().map(|m| (S::one(), GroupElement::Matrix(m))).collect()
}

/// Unreduced Burau: `σ_i` acts by `[[1-t, t], [1, 0]]` on coordinates `i, i+1`.
pub fn burau_unreduced<S: Indeterminate>(n: usize) -> Result<BraidRep<S>> {
    if n < 2 {
        return Err(Error::InvalidStrandCount(n));
    }
    let faithfulness = match n {
        2 | 3 => Faithfulness::KnownFaithful("Burau is faithful for n <= 3".into()),
        4 => Faithfulness::Unknown,
        _ => Faithfulness::KnownUnfaithful("Burau is unfaithful for n >= 5".into(), None),
    };
    let ms = (1..n).map(|i| burau_block(n, i)).collect();
    BraidRep::from_generators(
        n,
        Backend::Matrix { dim: n },
        matrix_generators(ms),
        faithfulness,
        format!("burau-unreduced({n})"),
    )
}

/// Reduced Burau for two or three strands.
pub fn burau_reduced<S: Indeterminate>(n: usize) -> Result<BraidRep<S>> {
    let t = S::t();
    let (one, zero) = (S::one(), S::zero());
    let faithfulness = Faithfulness::KnownFaithful("Burau is faithful for n <= 3".into());
    let label = format!("burau-reduced({n})");
    match n {
        2 => BraidRep::from_generators(
            2,
            Backend::Matrix { dim: 1 },
            vec![(-t, GroupElement::Identity)],
            faithfulness,
            label,
        ),
        3 => {
            let s1 = Matrix::from_rows(vec![vec![-t.clone(), one.clone()], vec![zero.clone(), one.clone()]])?;
            let s2 = Matrix::from_rows(vec![vec![one, zero], vec![t.clone(), -t]])?;
            BraidRep::from_generators(
                3,
                Backend::Matrix { dim: 2 },
                matrix_generators(vec![s1, s2]),
                faithfulness,
                label,
            )
        }
        _ => Err(Error::InvalidParameter(format!("reduced Burau is provided for n = 2, 3 only, not {n}"))),
    }
}

/// `σ_i ↦ (i i+1)` in the formal algebra of `S_n`.
pub fn permutation_rep<S: Scalar>(n: usize) -> Result<BraidRep<S>> {
    if n < 2 {
        return Err(Error::InvalidStrandCount(n));
    }
    let gens = (1..n).map(|i| (S::one(), GroupElement::Perm(Permutation::transposition(n, i - 1, i)))).collect();
    let witness = BraidWord::sigma_power(n, 1, 2);
    BraidRep::from_generators(
        n,
        Backend::Formal(make_group(GroupKind::Symmetric(n))?),
        gens,
        Faithfulness::KnownUnfaithful("transpositions have order 2".into(), Some(witness)),
        format!("perm({n})"),
    )
}

/// `σ_i ↦ d` for every `i`, as a `1 × 1` matrix.
pub fn scalar_char<S: Scalar>(d: S, n: usize) -> Result<BraidRep<S>> {
    if n < 2 {
        return Err(Error::InvalidStrandCount(n));
    }
    if !d.is_unit() {
        return Err(Error::NonUnit(d.to_string()));
    }
    // The only roots of unity among rationals and Laurent units are ±1.
    let faithfulness = if n >= 3 {
        let commutator =
            BraidWord::new(n, vec![Letter::Sigma(1), Letter::Sigma(2), Letter::SigmaInv(1), Letter::SigmaInv(2)])?;
        Faithfulness::KnownUnfaithful("abelian image".into(), Some(commutator))
    } else {
        match root_of_unity_order(&d, 2)? {
            Some(r) => Faithfulness::KnownUnfaithful(
                format!("d is a root of unity of order {r}"),
                Some(BraidWord::sigma_power(2, 1, r as i64)),
            ),
            None => Faithfulness::KnownFaithful("B_2 is infinite cyclic and d has infinite order".into()),
        }
    };
    let label = format!("scalar({d}, {n})");
    let gens = (1..n).map(|_| (d.clone(), GroupElement::Identity)).collect();
    BraidRep::from_generators(n, Backend::Matrix { dim: 1 }, gens, faithfulness, label)
}

/// Matrix images for `σ_1, ..., σ_{n-1}`.
pub fn matrix_rep_from_images<S: Scalar>(n: usize, matrices: Vec<Matrix<S>>) -> Result<BraidRep<S>> {
    let dim = matrices
        .first()
        .map(Matrix::dim)
        .ok_or(Error::StrandCountMismatch { expected: n.saturating_sub(1), got: 0 })?;
    if let Some(m) = matrices.iter().find(|m| m.dim() != dim) {
        return Err(Error::DimensionMismatch(format!("{}x{} image among {dim}x{dim} images", m.dim(), m.dim())));
    }
    if matrices.iter().any(|m| !m.det().is_unit()) {
        return Err(Error::SingularMatrix);
    }
    BraidRep::from_generators(
        n,
        Backend::Matrix { dim },
        matrix_generators(matrices),
        Faithfulness::Unknown,
        format!("matrix({n}, {dim})"),
    )
}

/// `σ_1 ↦ X` in `K[X] / (X^s - d_s)`, on two strands.
pub fn cyclic_rep<S: Scalar>(s: usize, twist: S) -> Result<BraidRep<S>> {
    let label = format!("cyclic({s}, {twist})");
    let backend = Backend::Cyclic(CyclicAlgebra::new(s, twist)?);
    BraidRep::from_generators(
        2,
        backend,
        vec![(S::one(), GroupElement::Exponents(vec![1]))],
        Faithfulness::Unknown,
        label,
    )
}
