//! Univariate polynomials in the ray parameter `v`, exact coefficients.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{fmt_q, sqrt_exact, Q};

/// `c[0] + c[1]·v + c[2]·v² + …`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    c: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("polynomial {poly} has an irrational root (discriminant {disc})")]
pub struct IrrationalRoot {
    pub poly: String,
    pub disc: String,
}

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Self { c }
    }

    pub fn constant(x: Q) -> Self {
        Self::new(vec![x])
    }

    pub fn affine(c0: Q, c1: Q) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Coefficient of `v^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficients padded to at least `n` entries.
    pub fn padded(&self, n: usize) -> Vec<Q> {
        (0..n.max(self.c.len())).map(|k| self.coeff(k)).collect()
    }

    pub fn eval(&self, v: &Q) -> Q {
        self.c.iter().rev().fold(Q::zero(), |acc, x| acc * v + x)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::new(self.c.iter().map(|x| x * s).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, x)| x * Q::from_integer(k.into()))
                .collect(),
        )
    }

    /// Exact `∫_lo^hi p(v) dv`.
    pub fn integrate(&self, lo: &Q, hi: &Q) -> Q {
        let anti = |v: &Q| -> Q {
            let mut acc = Q::zero();
            let mut pw = v.clone();
            for (k, x) in self.c.iter().enumerate() {
                acc += x * &pw / Q::from_integer((k + 1).into());
                pw *= v;
            }
            acc
        };
        anti(hi) - anti(lo)
    }

    /// Real roots for degree ≤ 2, ascending. Errors when the roots exist but
    /// are irrational. The zero polynomial has no isolated roots.
    pub fn rational_roots(&self) -> Result<Vec<Q>, IrrationalRoot> {
        match self.degree() {
            None | Some(0) => Ok(vec![]),
            Some(1) => Ok(vec![-self.coeff(0) / self.coeff(1)]),
            Some(2) => {
                let (a, b, c) = (self.coeff(2), self.coeff(1), self.coeff(0));
                let disc = &b * &b - Q::from_integer(4.into()) * &a * &c;
                if disc.is_negative() {
                    return Ok(vec![]);
                }
                let r = sqrt_exact(&disc).ok_or_else(|| IrrationalRoot {
                    poly: self.to_string(),
                    disc: fmt_q(&disc),
                })?;
                let two_a = Q::from_integer(2.into()) * &a;
                let mut rs = vec![(-&b - &r) / &two_a, (-&b + &r) / &two_a];
                rs.sort();
                rs.dedup();
                Ok(rs)
            }
            Some(d) => panic!("root finding supports degree ≤ 2, got {d}"),
        }
    }
}

impl fmt::Display for Poly {
    /// `(q0) + (q1)v + (q2)v²` style, always listing at least the constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.c.len().max(1);
        let mut parts = Vec::with_capacity(n);
        for k in 0..n {
            let x = fmt_q(&self.coeff(k));
            parts.push(match k {
                0 => format!("({x})"),
                1 => format!("({x})v"),
                2 => format!("({x})v²"),
                _ => format!("({x})v^{k}"),
            });
        }
        f.write_str(&parts.join(" + "))
    }
}
