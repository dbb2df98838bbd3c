use std::collections::BTreeMap;
use std::fmt;

use super::GroupModel;
use crate::scalars::Scalar;

/// A finite formal combination `Σ c_g [g]` in the group algebra `K[G]`.
///
/// Terms are keyed by the model's canonical key, and each entry carries the
/// group element it names, so products are computed directly from stored
/// terms. Zero coefficients are removed after every operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalElement<E, S> {
    terms: BTreeMap<String, (E, S)>,
}

impl<E: Clone + PartialEq + fmt::Debug, S: Scalar> FormalElement<E, S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn basis<G: GroupModel<Element = E>>(model: &G, g: E) -> Self {
        Self::monomial(model, g, S::one())
    }

    pub fn monomial<G: GroupModel<Element = E>>(model: &G, g: E, c: S) -> Self {
        let mut out = Self::zero();
        out.add_term(model.canonical_key(&g), g, c);
        out
    }

    pub fn one<G: GroupModel<Element = E>>(model: &G) -> Self {
        Self::basis(model, model.identity())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// `(key, element, coefficient)` in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&str, &E, &S)> {
        self.terms.iter().map(|(k, (g, c))| (k.as_str(), g, c))
    }

    pub fn coeff(&self, key: &str) -> S {
        self.terms.get(key).map(|(_, c)| c.clone()).unwrap_or_else(S::zero)
    }

    fn add_term(&mut self, key: String, g: E, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some((g_old, old)) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(key, (g_old, sum));
                }
            }
            None => {
                self.terms.insert(key, (g, c));
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, (g, c)) in &other.terms {
            out.add_term(k.clone(), g.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, (g, c))| (k.clone(), (g.clone(), s.clone() * c.clone())))
            .filter(|(_, (_, c))| !c.is_zero())
            .collect();
        Self { terms }
    }

    /// Convolution `(Σ a_g [g]) (Σ b_h [h]) = Σ a_g b_h [gh]`.
    pub fn mul<G: GroupModel<Element = E>>(&self, other: &Self, model: &G) -> Self {
        let mut out = Self::zero();
        for (g, a) in self.terms.values() {
            for (h, b) in other.terms.values() {
                let gh = model.multiply(g, h);
                out.add_term(model.canonical_key(&gh), gh, a.clone() * b.clone());
            }
        }
        out
    }

    pub fn is_identity<G: GroupModel<Element = E>>(&self, model: &G) -> bool {
        self.as_scalar(model).is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the element is `c · [e]`.
    pub fn as_scalar<G: GroupModel<Element = E>>(&self, model: &G) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => {
                let key = model.canonical_key(&model.identity());
                self.terms.get(&key).map(|(_, c)| c.clone())
            }
            _ => None,
        }
    }
}

/// `c1 * <key1> + c2 * <key2> + ...` in key order.
impl<E, S: Scalar> fmt::Display for FormalElement<E, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, (_, c))) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c} * <{k}>")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Permutation;
    use crate::algebra::{FreeAbelianGroup, SymmetricGroup};
    use crate::scalars::ScalarValue;
    use proptest::prelude::*;
    use std::collections::HashMap;

    type V = ScalarValue;
    type F = FormalElement<Vec<i64>, V>;

    const Z: FreeAbelianGroup = FreeAbelianGroup { rank: 1 };

    fn g(k: i64) -> Vec<i64> {
        vec![k]
    }

    fn v(s: &str) -> V {
        s.parse().unwrap()
    }

    #[test]
    fn convolution_with_singleton() {
        let (a, c) = (v("3"), v("-1/2"));
        let x = F::monomial(&Z, g(1), a.clone()).add(&F::monomial(&Z, g(0), c.clone()));
        let y = F::basis(&Z, g(-1));
        let expected = F::monomial(&Z, g(0), a).add(&F::monomial(&Z, g(-1), c));
        assert_eq!(x.mul(&y, &Z), expected);
    }

    #[test]
    fn square_of_three_term_element() {
        let (a, b, c) = (v("2"), v("3"), v("5"));
        let x = F::monomial(&Z, g(1), a.clone()).add(&F::monomial(&Z, g(-1), b.clone())).add(&F::monomial(
            &Z,
            g(0),
            c.clone(),
        ));
        let sq = x.mul(&x, &Z);
        let two = v("2");
        assert_eq!(sq.coeff("2"), a.clone() * a.clone());
        assert_eq!(sq.coeff("1"), two.clone() * a.clone() * c.clone());
        assert_eq!(sq.coeff("0"), two.clone() * a.clone() * b.clone() + c.clone() * c.clone());
        assert_eq!(sq.coeff("-1"), two * b.clone() * c);
        assert_eq!(sq.coeff("-2"), b.clone() * b);
        assert_eq!(sq.support_size(), 5);
    }

    #[test]
    fn identity_tests() {
        assert!(F::one(&Z).is_identity(&Z));
        assert!(!F::basis(&Z, g(1)).is_identity(&Z));
        assert!(!F::zero().is_identity(&Z));
        assert!(F::basis(&Z, g(1)).add(&F::basis(&Z, g(1)).scale(&v("-1"))).is_zero());
        let s2 = SymmetricGroup { n: 2 };
        let swap = Permutation::transposition(2, 0, 1);
        let x = FormalElement::<Permutation, V>::basis(&s2, swap.clone());
        assert!(x.mul(&x, &s2).is_identity(&s2));
        assert_eq!(x.to_string(), "1 * <[1,0]>");
    }

    fn element() -> impl Strategy<Value = F> {
        prop::collection::vec((-3i64..=3, -4i64..=4), 0..5)
            .prop_map(|ts| ts.into_iter().fold(F::zero(), |acc, (k, c)| acc.add(&F::monomial(&Z, g(k), V::from(c)))))
    }

    proptest! {
        #[test]
        fn product_matches_double_loop(x in element(), y in element()) {
            let mut oracle: HashMap<i64, V> = HashMap::new();
            for (_, gx, cx) in x.terms() {
                for (_, gy, cy) in y.terms() {
                    let slot = oracle.entry(gx[0] + gy[0]).or_insert_with(|| V::from(0));
                    *slot = slot.clone() + cx.clone() * cy.clone();
                }
            }
            let prod = x.mul(&y, &Z);
            for (k, c) in &oracle {
                prop_assert_eq!(prod.coeff(&k.to_string()), c.clone());
            }
            prop_assert!(prod.terms().all(|(_, _, c)| !num_traits::Zero::is_zero(c)));
        }

        #[test]
        fn algebra_axioms(x in element(), y in element(), z in element()) {
            prop_assert_eq!(x.mul(&y, &Z).mul(&z, &Z), x.mul(&y.mul(&z, &Z), &Z));
            prop_assert_eq!(x.mul(&y.add(&z), &Z), x.mul(&y, &Z).add(&x.mul(&z, &Z)));
            prop_assert_eq!(x.mul(&F::one(&Z), &Z), x.clone());
        }
    }
}
