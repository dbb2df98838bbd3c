use std::fmt;

use super::{Letter, SmWord};

/// The seven defining relation families of `SM_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationFamily {
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`
    BraidTriple = 1,
    /// `σ_i σ_j = σ_j σ_i`, `|i - j| >= 2`
    FarSigma = 2,
    /// `τ_i τ_j = τ_j τ_i`, `|i - j| >= 2`
    FarTau = 3,
    /// `τ_i σ_j = σ_j τ_i`, `|i - j| >= 2`
    FarMixed = 4,
    /// `τ_i σ_i = σ_i τ_i`
    SameIndex = 5,
    /// `σ_i σ_{i+1} τ_i = τ_{i+1} σ_i σ_{i+1}`
    SlideUp = 6,
    /// `σ_{i+1} σ_i τ_{i+1} = τ_i σ_{i+1} σ_i`
    SlideDown = 7,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 7] = [
        RelationFamily::BraidTriple,
        RelationFamily::FarSigma,
        RelationFamily::FarTau,
        RelationFamily::FarMixed,
        RelationFamily::SameIndex,
        RelationFamily::SlideUp,
        RelationFamily::SlideDown,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    /// Whether the relation holds in `B_n` alone.
    pub fn is_braid_relation(self) -> bool {
        matches!(self, RelationFamily::BraidTriple | RelationFamily::FarSigma)
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: RelationFamily,
    pub i: usize,
    pub j: usize,
    pub lhs: SmWord,
    pub rhs: SmWord,
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} i={} j={}: {} = {}", self.family, self.i, self.j, self.lhs, self.rhs)
    }
}

/// Every instance of the defining relations on `n` strands.
///
/// Families (2) and (3) are listed once per unordered pair, family (4) once
/// per ordered pair.
pub fn relation_instances(n: usize) -> Vec<RelationInstance> {
    use Letter::{Sigma as S, Tau as T};
    let word = |letters: Vec<Letter>| SmWord { n, letters };
    let mut out = Vec::new();
    let mut push = |family, i, j, lhs: Vec<Letter>, rhs: Vec<Letter>| {
        out.push(RelationInstance { family, i, j, lhs: word(lhs), rhs: word(rhs) });
    };
    for i in 1..n.saturating_sub(1) {
        push(RelationFamily::BraidTriple, i, i + 1, vec![S(i), S(i + 1), S(i)], vec![S(i + 1), S(i), S(i + 1)]);
    }
    for i in 1..n {
        for j in (i + 2)..n {
            push(RelationFamily::FarSigma, i, j, vec![S(i), S(j)], vec![S(j), S(i)]);
        }
    }
    for i in 1..n {
        for j in (i + 2)..n {
            push(RelationFamily::FarTau, i, j, vec![T(i), T(j)], vec![T(j), T(i)]);
        }
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                push(RelationFamily::FarMixed, i, j, vec![T(i), S(j)], vec![S(j), T(i)]);
            }
        }
    }
    for i in 1..n {
        push(RelationFamily::SameIndex, i, i, vec![T(i), S(i)], vec![S(i), T(i)]);
    }
    for i in 1..n.saturating_sub(1) {
        push(RelationFamily::SlideUp, i, i + 1, vec![S(i), S(i + 1), T(i)], vec![T(i + 1), S(i), S(i + 1)]);
    }
    for i in 1..n.saturating_sub(1) {
        push(RelationFamily::SlideDown, i, i + 1, vec![S(i + 1), S(i), T(i + 1)], vec![T(i), S(i + 1), S(i)]);
    }
    out
}
