use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Square matrix over a scalar ring, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!("row of length {} in a {dim}x{dim} matrix", bad.len())));
        }
        Ok(Self { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: vec![S::zero(); dim * dim] }
    }

    pub fn scalar(dim: usize, s: S) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = s.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim)
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_dim(other);
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() + b.clone()).collect();
        Self { dim: self.dim, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        let entries = self.entries.iter().map(|a| s.clone() * a.clone()).collect();
        Self { dim: self.dim, entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_dim(other);
        let d = self.dim;
        let mut out = Self::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.entries[i * d + j];
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(self.dim);
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().is_some_and(|s| s.is_one())
    }

    /// `Some(λ)` when the matrix equals `λ · I`.
    pub fn as_scalar(&self) -> Option<S> {
        let d = self.dim;
        let lambda = self.entries[0].clone();
        for i in 0..d {
            for j in 0..d {
                let x = &self.entries[i * d + j];
                let ok = if i == j { *x == lambda } else { x.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let d = self.dim;
        let entries = (0..d)
            .filter(|&i| i != row)
            .flat_map(|i| (0..d).filter(move |&j| j != col).map(move |j| (i, j)))
            .map(|(i, j)| self.entries[i * d + j].clone())
            .collect();
        Self { dim: d - 1, entries }
    }

    /// Laplace expansion; works over any commutative ring. Intended for the
    /// small dimensions that arise from braid representations.
    pub fn det(&self) -> S {
        match self.dim {
            1 => self.entries[0].clone(),
            2 => self.entries[0].clone() * self.entries[3].clone() - self.entries[1].clone() * self.entries[2].clone(),
            d => {
                let mut acc = S::zero();
                for j in 0..d {
                    let a = &self.entries[j];
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.clone() * self.minor(0, j).det();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    pub fn adjugate(&self) -> Self {
        let d = self.dim;
        if d == 1 {
            return Self::identity(1);
        }
        let mut out = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                let cof = self.minor(i, j).det();
                let cof = if (i + j) % 2 == 0 { cof } else { -cof };
                out.entries[j * d + i] = cof;
            }
        }
        out
    }

    /// Inverse over the scalar ring; exists exactly when the determinant is a unit.
    pub fn inverse(&self) -> Result<Self> {
        let det_inv = self.det().checked_inv().ok_or(Error::SingularMatrix)?;
        Ok(self.adjugate().scale(&det_inv))
    }
}

/// `[[a, b], [c, d]]`
impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Parses the matrix file format: one row per line, entries comma-separated.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_matrix<S: Scalar + FromStr<Err = Error>>(text: &str) -> Result<Matrix<S>> {
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(',').map(|cell| cell.trim().parse::<S>()).collect::<Result<Vec<S>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

/// Several matrices separated by blank lines, one per braid generator.
pub fn parse_matrix_list<S: Scalar + FromStr<Err = Error>>(text: &str) -> Result<Vec<Matrix<S>>> {
    let mut blocks: Vec<Vec<&str>> = vec![Vec::new()];
    for line in text.lines().map(str::trim) {
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !blocks.last().expect("nonempty").is_empty() {
                blocks.push(Vec::new());
            }
        } else {
            blocks.last_mut().expect("nonempty").push(line);
        }
    }
    blocks.into_iter().filter(|b| !b.is_empty()).map(|b| parse_matrix(&b.join("\n"))).collect()
}
