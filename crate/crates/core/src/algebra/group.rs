use std::fmt;
use std::marker::PhantomData;

use super::{Matrix, Permutation};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// A group given by its operations on concrete elements.
///
/// `canonical_key` must be injective on elements: equal keys mean equal
/// elements. The formal group algebra indexes its basis by these keys.
pub trait GroupModel {
    type Element: Clone + PartialEq + fmt::Debug;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, g: &Self::Element, h: &Self::Element) -> Self::Element;
    fn invert(&self, g: &Self::Element) -> Self::Element;
    fn canonical_key(&self, g: &Self::Element) -> String;

    fn contains(&self, g: &Self::Element) -> bool;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetricGroup {
    pub n: usize,
}

impl GroupModel for SymmetricGroup {
    type Element = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.n)
    }

    fn multiply(&self, g: &Permutation, h: &Permutation) -> Permutation {
        g.then(h)
    }

    fn invert(&self, g: &Permutation) -> Permutation {
        g.inverse()
    }

    fn canonical_key(&self, g: &Permutation) -> String {
        let images: Vec<String> = g.images().iter().map(|x| x.to_string()).collect();
        format!("[{}]", images.join(","))
    }

    fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.n
    }
}

/// `Z^rank` as exponent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeAbelianGroup {
    pub rank: usize,
}

impl GroupModel for FreeAbelianGroup {
    type Element = Vec<i64>;

    fn identity(&self) -> Vec<i64> {
        vec![0; self.rank]
    }

    fn multiply(&self, g: &Vec<i64>, h: &Vec<i64>) -> Vec<i64> {
        g.iter().zip(h).map(|(a, b)| a + b).collect()
    }

    fn invert(&self, g: &Vec<i64>) -> Vec<i64> {
        g.iter().map(|a| -a).collect()
    }

    fn canonical_key(&self, g: &Vec<i64>) -> String {
        let parts: Vec<String> = g.iter().map(|x| x.to_string()).collect();
        parts.join(",")
    }

    fn contains(&self, g: &Vec<i64>) -> bool {
        g.len() == self.rank
    }
}

/// Invertible `dim × dim` matrices over a scalar ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixGroup<S> {
    pub dim: usize,
    _scalar: PhantomData<S>,
}

impl<S> MatrixGroup<S> {
    pub fn new(dim: usize) -> Self {
        Self { dim, _scalar: PhantomData }
    }
}

impl<S: Scalar> GroupModel for MatrixGroup<S> {
    type Element = Matrix<S>;

    fn identity(&self) -> Matrix<S> {
        Matrix::identity(self.dim)
    }

    fn multiply(&self, g: &Matrix<S>, h: &Matrix<S>) -> Matrix<S> {
        g.mul(h)
    }

    fn invert(&self, g: &Matrix<S>) -> Matrix<S> {
        g.inverse().expect("matrix group elements have unit determinant")
    }

    /// Row-major entries in canonical scalar form.
    fn canonical_key(&self, g: &Matrix<S>) -> String {
        g.to_string()
    }

    fn contains(&self, g: &Matrix<S>) -> bool {
        g.dim() == self.dim && g.det().is_unit()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TrivialGroup;

impl GroupModel for TrivialGroup {
    type Element = ();

    fn identity(&self) {}

    fn multiply(&self, _: &(), _: &()) {}

    fn invert(&self, _: &()) {}

    fn canonical_key(&self, _: &()) -> String {
        "e".into()
    }

    fn contains(&self, _: &()) -> bool {
        true
    }
}

/// Which group to build with [`make_group`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Symmetric(usize),
    FreeAbelian(usize),
    Matrix(usize),
    Trivial,
}

/// An element of any of the supported group models.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement<S> {
    Perm(Permutation),
    Exponents(Vec<i64>),
    Matrix(Matrix<S>),
    Identity,
}

impl<S: Scalar> fmt::Display for GroupElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Exponents(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            GroupElement::Matrix(m) => write!(f, "{m}"),
            GroupElement::Identity => write!(f, "e"),
        }
    }
}

/// Runtime choice of group model over the scalar ring `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Group<S> {
    Symmetric(SymmetricGroup),
    FreeAbelian(FreeAbelianGroup),
    Matrix(MatrixGroup<S>),
    Trivial(TrivialGroup),
}

pub fn make_group<S: Scalar>(kind: GroupKind) -> Result<Group<S>> {
    match kind {
        GroupKind::Symmetric(n) if n >= 1 => Ok(Group::Symmetric(SymmetricGroup { n })),
        GroupKind::FreeAbelian(rank) if rank >= 1 => Ok(Group::FreeAbelian(FreeAbelianGroup { rank })),
        GroupKind::Matrix(dim) if dim >= 1 => Ok(Group::Matrix(MatrixGroup::new(dim))),
        GroupKind::Trivial => Ok(Group::Trivial(TrivialGroup)),
        other => Err(Error::InvalidParameter(format!("group {other:?} needs size >= 1"))),
    }
}

impl<S: Scalar> Group<S> {
    pub fn kind(&self) -> GroupKind {
        match self {
            Group::Symmetric(g) => GroupKind::Symmetric(g.n),
            Group::FreeAbelian(g) => GroupKind::FreeAbelian(g.rank),
            Group::Matrix(g) => GroupKind::Matrix(g.dim),
            Group::Trivial(_) => GroupKind::Trivial,
        }
    }
}

fn mismatch<S: Scalar>(group: &Group<S>, g: &GroupElement<S>) -> ! {
    panic!("element {g} does not belong to group {:?}", group.kind())
}

impl<S: Scalar> GroupModel for Group<S> {
    type Element = GroupElement<S>;

    fn identity(&self) -> GroupElement<S> {
        match self {
            Group::Symmetric(g) => GroupElement::Perm(g.identity()),
            Group::FreeAbelian(g) => GroupElement::Exponents(g.identity()),
            Group::Matrix(g) => GroupElement::Matrix(g.identity()),
            Group::Trivial(_) => GroupElement::Identity,
        }
    }

    fn multiply(&self, a: &GroupElement<S>, b: &GroupElement<S>) -> GroupElement<S> {
        match (self, a, b) {
            (Group::Symmetric(g), GroupElement::Perm(x), GroupElement::Perm(y)) => GroupElement::Perm(g.multiply(x, y)),
            (Group::FreeAbelian(g), GroupElement::Exponents(x), GroupElement::Exponents(y)) => {
                GroupElement::Exponents(g.multiply(x, y))
            }
            (Group::Matrix(g), GroupElement::Matrix(x), GroupElement::Matrix(y)) => {
                GroupElement::Matrix(g.multiply(x, y))
            }
            (Group::Trivial(_), GroupElement::Identity, GroupElement::Identity) => GroupElement::Identity,
            _ => mismatch(self, if self.contains(a) { b } else { a }),
        }
    }

    fn invert(&self, a: &GroupElement<S>) -> GroupElement<S> {
        match (self, a) {
            (Group::Symmetric(g), GroupElement::Perm(x)) => GroupElement::Perm(g.invert(x)),
            (Group::FreeAbelian(g), GroupElement::Exponents(x)) => GroupElement::Exponents(g.invert(x)),
            (Group::Matrix(g), GroupElement::Matrix(x)) => GroupElement::Matrix(g.invert(x)),
            (Group::Trivial(_), GroupElement::Identity) => GroupElement::Identity,
            _ => mismatch(self, a),
        }
    }

    fn canonical_key(&self, a: &GroupElement<S>) -> String {
        match (self, a) {
            (Group::Symmetric(g), GroupElement::Perm(x)) => g.canonical_key(x),
            (Group::FreeAbelian(g), GroupElement::Exponents(x)) => g.canonical_key(x),
            (Group::Matrix(g), GroupElement::Matrix(x)) => g.canonical_key(x),
            (Group::Trivial(g), GroupElement::Identity) => g.canonical_key(&()),
            _ => mismatch(self, a),
        }
    }

    fn contains(&self, a: &GroupElement<S>) -> bool {
        match (self, a) {
            (Group::Symmetric(g), GroupElement::Perm(x)) => g.contains(x),
            (Group::FreeAbelian(g), GroupElement::Exponents(x)) => g.contains(x),
            (Group::Matrix(g), GroupElement::Matrix(x)) => g.contains(x),
            (Group::Trivial(_), GroupElement::Identity) => true,
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ScalarValue;
    use proptest::prelude::*;

    type V = ScalarValue;

    #[test]
    fn make_group_examples() {
        let s3: Group<V> = make_group(GroupKind::Symmetric(3)).unwrap();
        let a = GroupElement::Perm(Permutation::transposition(3, 0, 1));
        let b = GroupElement::Perm(Permutation::transposition(3, 1, 2));
        match s3.multiply(&a, &b) {
            GroupElement::Perm(p) => assert_eq!(p.cycles().iter().map(Vec::len).collect::<Vec<_>>(), vec![3]),
            other => panic!("unexpected {other:?}"),
        }

        let z: Group<V> = make_group(GroupKind::FreeAbelian(1)).unwrap();
        assert_eq!(z.canonical_key(&GroupElement::Exponents(vec![5])), "5");

        let gl2: Group<V> = make_group(GroupKind::Matrix(2)).unwrap();
        assert_eq!(gl2.identity(), GroupElement::Matrix(Matrix::identity(2)));
        assert_eq!(gl2.canonical_key(&gl2.identity()), "[[1, 0], [0, 1]]");

        assert!(make_group::<V>(GroupKind::Matrix(0)).is_err());
        assert!(make_group::<V>(GroupKind::Symmetric(0)).is_err());
    }

    #[test]
    fn membership() {
        let gl2: Group<V> = make_group(GroupKind::Matrix(2)).unwrap();
        let sing = Matrix::from_rows(vec![vec![V::from(1), V::from(1)], vec![V::from(1), V::from(1)]]).unwrap();
        assert!(!gl2.contains(&GroupElement::Matrix(sing)));
        assert!(!gl2.contains(&GroupElement::Identity));
        let s2: Group<V> = make_group(GroupKind::Symmetric(2)).unwrap();
        assert!(!s2.contains(&GroupElement::Perm(Permutation::identity(3))));
    }

    fn perm3() -> impl Strategy<Value = Permutation> {
        Just(vec![0usize, 1, 2]).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn symmetric_group_axioms(a in perm3(), b in perm3(), c in perm3()) {
            let g: Group<V> = make_group(GroupKind::Symmetric(3)).unwrap();
            let (a, b, c) = (GroupElement::Perm(a), GroupElement::Perm(b), GroupElement::Perm(c));
            prop_assert_eq!(g.multiply(&g.multiply(&a, &b), &c), g.multiply(&a, &g.multiply(&b, &c)));
            prop_assert_eq!(g.multiply(&a, &g.invert(&a)), g.identity());
            prop_assert_eq!(g.multiply(&g.identity(), &a), a.clone());
            prop_assert_eq!(g.canonical_key(&a) == g.canonical_key(&b), a == b);
        }

        #[test]
        fn free_abelian_axioms(a in prop::collection::vec(-9i64..9, 2), b in prop::collection::vec(-9i64..9, 2)) {
            let g: Group<V> = make_group(GroupKind::FreeAbelian(2)).unwrap();
            let (a, b) = (GroupElement::Exponents(a), GroupElement::Exponents(b));
            prop_assert_eq!(g.multiply(&a, &b), g.multiply(&b, &a));
            prop_assert_eq!(g.multiply(&a, &g.invert(&a)), g.identity());
            prop_assert_eq!(g.canonical_key(&a) == g.canonical_key(&b), a == b);
        }
    }
}
