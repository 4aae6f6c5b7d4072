//! Divisors over a generator basis, the intersection pairing, and exact
//! linear algebra on Gram submatrices.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("generator index {index} outside a basis of size {size}")]
    BasisMismatch { index: usize, size: usize },
    #[error("Gram submatrix on {0:?} is singular")]
    Singular(Vec<usize>),
}

/// Sparse rational combination of generators. Index 0 is the anticanonical
/// class in every model.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DivisorExpr {
    coeffs: BTreeMap<usize, Q>,
}

impl DivisorExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(i: usize) -> Self {
        Self::term(i, Q::from_integer(1.into()))
    }

    pub fn term(i: usize, c: Q) -> Self {
        let mut d = Self::zero();
        d.add_term(i, &c);
        d
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(it: I) -> Self {
        let mut d = Self::zero();
        for (i, c) in it {
            d.add_term(i, &c);
        }
        d
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, i: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut d = self.clone();
        for (i, c) in other.terms() {
            d.add_term(i, c);
        }
        d
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::from_integer(1.into())))
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(i, c)| (*i, c * s)).collect(),
        }
    }

    /// `self + s·other`
    pub fn axpy(&self, s: &Q, other: &Self) -> Self {
        let mut d = self.clone();
        for (i, c) in other.terms() {
            d.add_term(i, &(c * s));
        }
        d
    }
}

/// Symmetric intersection matrix, one row per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Vec<Vec<Q>>,
}

impl GramMatrix {
    /// Takes rows as given; symmetry is a validation concern, not a
    /// construction one, so that malformed catalog files can still be loaded
    /// and reported on.
    pub fn new(entries: Vec<Vec<Q>>) -> Self {
        Self { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.entries[i][j] = x;
    }

    pub fn is_square(&self) -> bool {
        self.entries.iter().all(|r| r.len() == self.entries.len())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    fn check(&self, d: &DivisorExpr) -> Result<(), LatticeError> {
        match d.max_index() {
            Some(i) if i >= self.size() => Err(LatticeError::BasisMismatch {
                index: i,
                size: self.size(),
            }),
            _ => Ok(()),
        }
    }

    pub fn pair(&self, a: &DivisorExpr, b: &DivisorExpr) -> Result<Q, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        let mut s = Q::zero();
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                s += x * y * &self.entries[i][j];
            }
        }
        Ok(s)
    }

    /// `d · generator_j`
    pub fn pair_gen(&self, d: &DivisorExpr, j: usize) -> Result<Q, LatticeError> {
        self.pair(d, &DivisorExpr::generator(j))
    }

    fn submatrix(&self, support: &[usize]) -> Vec<Vec<Q>> {
        support
            .iter()
            .map(|&i| {
                support
                    .iter()
                    .map(|&j| self.entries[i][j].clone())
                    .collect()
            })
            .collect()
    }

    /// Leading principal minors satisfy `(-1)^k det_k > 0`.
    pub fn is_negative_definite(&self, support: &[usize]) -> bool {
        if support.iter().any(|&i| i >= self.size()) {
            return false;
        }
        let sub = self.submatrix(support);
        (1..=support.len()).all(|k| {
            let minor: Vec<Vec<Q>> = sub[..k].iter().map(|r| r[..k].to_vec()).collect();
            let d = determinant(minor);
            if k % 2 == 0 {
                d.is_positive()
            } else {
                d.is_negative()
            }
        })
    }

    /// Solve `G|_support · x = rhs` exactly.
    pub fn solve(&self, support: &[usize], rhs: &[Q]) -> Result<Vec<Q>, LatticeError> {
        if let Some(&i) = support.iter().find(|&&i| i >= self.size()) {
            return Err(LatticeError::BasisMismatch {
                index: i,
                size: self.size(),
            });
        }
        assert_eq!(support.len(), rhs.len(), "rhs length must match support");
        solve_dense(self.submatrix(support), rhs.to_vec())
            .ok_or_else(|| LatticeError::Singular(support.to_vec()))
    }
}

/// Determinant by exact Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut det = Q::from_integer(1.into());
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let piv = m[col][col].clone();
        det *= &piv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &piv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

fn solve_dense(mut m: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = m.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        b.swap(p, col);
        let piv = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &piv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    Some((0..n).map(|i| &b[i] / &m[i][i]).collect())
}
