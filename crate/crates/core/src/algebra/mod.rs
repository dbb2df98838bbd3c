//! Group models, the formal group algebra, and the concrete matrix and
//! twisted-cyclic backends.

mod cyclic;
mod formal;
mod group;
mod matrix;
mod permutation;

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Scalar;

pub use cyclic::{CyclicAlgebra, CyclicElement};
pub use formal::FormalElement;
pub use group::{
    make_group, FreeAbelianGroup, Group, GroupElement, GroupKind, GroupModel, MatrixGroup, SymmetricGroup, TrivialGroup,
};
pub use matrix::{parse_matrix, parse_matrix_list, Matrix};
pub use permutation::Permutation;

/// Where algebra elements live.
///
/// `Formal` is the group algebra `K[G]`, in which distinct group elements
/// are linearly independent. `Matrix` and `Cyclic` are concrete algebras in
/// which a group element can equal a scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend<S> {
    Formal(Group<S>),
    Matrix { dim: usize },
    Cyclic(CyclicAlgebra<S>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AlgebraElement<S> {
    Formal(FormalElement<GroupElement<S>, S>),
    Matrix(Matrix<S>),
    Cyclic(CyclicElement<S>),
}

impl<S: Scalar> AlgebraElement<S> {
    /// `Some(c)` when the element is `c` times the algebra identity.
    pub fn as_scalar(&self) -> Option<S> {
        match self {
            AlgebraElement::Formal(x) => match x.support_size() {
                0 => Some(S::zero()),
                1 => x.terms().find(|(_, g, _)| is_group_identity(g)).map(|(_, _, c)| c.clone()),
                _ => None,
            },
            AlgebraElement::Matrix(m) => m.as_scalar(),
            AlgebraElement::Cyclic(x) => x.coeffs()[1..].iter().all(|c| c.is_zero()).then(|| x.coeffs()[0].clone()),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_zero())
    }

    /// Canonical text; equal elements of one backend give equal keys.
    pub fn canonical_key(&self) -> String {
        match self {
            AlgebraElement::Formal(x) => format!("formal:{x}"),
            AlgebraElement::Matrix(m) => format!("matrix:{m}"),
            AlgebraElement::Cyclic(x) => format!("cyclic:{}", join(x.coeffs())),
        }
    }
}

fn join<S: Scalar>(xs: &[S]) -> String {
    xs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn is_group_identity<S: Scalar>(g: &GroupElement<S>) -> bool {
    match g {
        GroupElement::Perm(p) => p.is_identity(),
        GroupElement::Exponents(v) => v.iter().all(|&x| x == 0),
        GroupElement::Matrix(m) => m.is_identity(),
        GroupElement::Identity => true,
    }
}

impl<S: Scalar> fmt::Display for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraElement::Formal(x) => write!(f, "{x}"),
            AlgebraElement::Matrix(m) => write!(f, "{m}"),
            AlgebraElement::Cyclic(x) => write!(f, "{x}"),
        }
    }
}

fn mismatch<T>(op: &str) -> Result<T> {
    Err(Error::BackendMismatch(format!("{op}: operands belong to different backends")))
}

impl<S: Scalar> Backend<S> {
    pub fn name(&self) -> String {
        match self {
            Backend::Formal(g) => format!("formal({:?})", g.kind()),
            Backend::Matrix { dim } => format!("matrix({dim})"),
            Backend::Cyclic(c) => format!("cyclic({}, {})", c.s(), c.twist()),
        }
    }

    pub fn scalar(&self, c: S) -> AlgebraElement<S> {
        match self {
            Backend::Formal(g) => AlgebraElement::Formal(FormalElement::monomial(g, g.identity(), c)),
            Backend::Matrix { dim } => AlgebraElement::Matrix(Matrix::scalar(*dim, c)),
            Backend::Cyclic(a) => AlgebraElement::Cyclic(a.scalar(c)),
        }
    }

    pub fn one(&self) -> AlgebraElement<S> {
        self.scalar(S::one())
    }

    pub fn zero(&self) -> AlgebraElement<S> {
        match self {
            Backend::Formal(_) => AlgebraElement::Formal(FormalElement::zero()),
            _ => self.scalar(S::zero()),
        }
    }

    fn owns(&self, x: &AlgebraElement<S>) -> bool {
        match (self, x) {
            (Backend::Formal(_), AlgebraElement::Formal(_)) => true,
            (Backend::Matrix { dim }, AlgebraElement::Matrix(m)) => m.dim() == *dim,
            (Backend::Cyclic(a), AlgebraElement::Cyclic(c)) => c.degree_bound() == a.s(),
            _ => false,
        }
    }

    fn check(&self, op: &str, xs: &[&AlgebraElement<S>]) -> Result<()> {
        if xs.iter().all(|x| self.owns(x)) {
            Ok(())
        } else {
            mismatch(op)
        }
    }

    pub fn add(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        self.check("add", &[x, y])?;
        Ok(match (self, x, y) {
            (_, AlgebraElement::Formal(x), AlgebraElement::Formal(y)) => AlgebraElement::Formal(x.add(y)),
            (_, AlgebraElement::Matrix(x), AlgebraElement::Matrix(y)) => AlgebraElement::Matrix(x.add(y)),
            (Backend::Cyclic(a), AlgebraElement::Cyclic(x), AlgebraElement::Cyclic(y)) => {
                AlgebraElement::Cyclic(a.add(x, y))
            }
            _ => return mismatch("add"),
        })
    }

    pub fn scale(&self, x: &AlgebraElement<S>, c: &S) -> Result<AlgebraElement<S>> {
        self.check("scale", &[x])?;
        Ok(match (self, x) {
            (_, AlgebraElement::Formal(x)) => AlgebraElement::Formal(x.scale(c)),
            (_, AlgebraElement::Matrix(x)) => AlgebraElement::Matrix(x.scale(c)),
            (Backend::Cyclic(a), AlgebraElement::Cyclic(x)) => AlgebraElement::Cyclic(a.scale(x, c)),
            _ => return mismatch("scale"),
        })
    }

    pub fn sub(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        self.add(x, &self.scale(y, &-S::one())?)
    }

    pub fn mul(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        self.check("mul", &[x, y])?;
        Ok(match (self, x, y) {
            (Backend::Formal(g), AlgebraElement::Formal(x), AlgebraElement::Formal(y)) => {
                AlgebraElement::Formal(x.mul(y, g))
            }
            (_, AlgebraElement::Matrix(x), AlgebraElement::Matrix(y)) => AlgebraElement::Matrix(x.mul(y)),
            (Backend::Cyclic(a), AlgebraElement::Cyclic(x), AlgebraElement::Cyclic(y)) => {
                AlgebraElement::Cyclic(a.mul(x, y))
            }
            _ => return mismatch("mul"),
        })
    }

    /// Square-and-multiply.
    pub fn pow(&self, x: &AlgebraElement<S>, e: u64) -> Result<AlgebraElement<S>> {
        self.check("pow", &[x])?;
        let mut acc = self.one();
        let mut sq = x.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq)?;
            }
        }
        Ok(acc)
    }

    /// `1 · [g]` in the formal backend, `g` itself in the matrix backend, and
    /// `X^k` for a rank-one exponent `k` in the cyclic backend.
    pub fn embed(&self, g: &GroupElement<S>) -> Result<AlgebraElement<S>> {
        match (self, g) {
            (Backend::Formal(group), g) if group.contains(g) => {
                Ok(AlgebraElement::Formal(FormalElement::basis(group, g.clone())))
            }
            (Backend::Matrix { dim }, GroupElement::Matrix(m)) if m.dim() == *dim => {
                Ok(AlgebraElement::Matrix(m.clone()))
            }
            (Backend::Matrix { dim }, GroupElement::Identity) => Ok(AlgebraElement::Matrix(Matrix::identity(*dim))),
            (Backend::Cyclic(a), GroupElement::Exponents(v)) if v.len() == 1 => {
                Ok(AlgebraElement::Cyclic(a.x_power(v[0])?))
            }
            (Backend::Cyclic(a), GroupElement::Identity) => Ok(AlgebraElement::Cyclic(a.one())),
            _ => Err(Error::BackendMismatch(format!("cannot embed {g} into {}", self.name()))),
        }
    }

    /// Inverse of a group element of this backend's underlying group.
    pub fn invert_group_element(&self, g: &GroupElement<S>) -> Result<GroupElement<S>> {
        match (self, g) {
            (Backend::Formal(group), g) if group.contains(g) => Ok(group.invert(g)),
            (_, GroupElement::Matrix(m)) => Ok(GroupElement::Matrix(m.inverse()?)),
            (_, GroupElement::Exponents(v)) => Ok(GroupElement::Exponents(v.iter().map(|x| -x).collect())),
            (_, GroupElement::Identity) => Ok(GroupElement::Identity),
            _ => Err(Error::BackendMismatch(format!("{g} is not in {}", self.name()))),
        }
    }
}
