//! Shared test helpers, including a brute-force Zariski oracle that shares no
//! code path with the fixpoint solver or the walker.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use delta_core::catalog::SurfaceModel;
use delta_core::zariski::ZariskiProfile;
use delta_core::{builtin_models, find_model, parse_q, Q};
use num_traits::{One, Signed, Zero};

pub fn q(s: &str) -> Q {
    parse_q(s).expect("rational literal")
}

pub fn model(name: &str) -> SurfaceModel {
    let all = builtin_models();
    find_model(&all, name)
        .unwrap_or_else(|| panic!("no model {name}"))
        .clone()
}

pub fn idx(m: &SurfaceModel, name: &str) -> usize {
    m.index_of(name)
        .unwrap_or_else(|| panic!("{} has no curve {name}", m.name))
}

pub fn incident(m: &SurfaceModel, names: &[&str]) -> BTreeMap<usize, u32> {
    names.iter().map(|n| (idx(m, n), 1)).collect()
}

/// Every model reachable from the builtin list, auxiliaries included.
pub fn all_models() -> Vec<SurfaceModel> {
    builtin_models()
        .iter()
        .flat_map(|m| m.walk())
        .cloned()
        .collect()
}

/// `D = −K + Σ (A−1)E − v·flag`, written out by hand.
pub fn ray_at(m: &SurfaceModel, flag: usize, v: &Q) -> Vec<Q> {
    let mut d = vec![Q::zero(); m.generator_count()];
    d[0] = Q::one();
    for i in m.curve_indices() {
        let c = m.curve(i).unwrap();
        if c.kind.is_exceptional() {
            d[i] += &c.a_value - Q::one();
        }
    }
    d[flag] -= v;
    d
}

fn gram(m: &SurfaceModel, i: usize, j: usize) -> Q {
    m.gram.rows()[i][j].clone()
}

fn dot(m: &SurfaceModel, d: &[Q], j: usize) -> Q {
    d.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| c * gram(m, i, j))
        .sum()
}

/// Independent Gaussian elimination; `None` when singular.
fn gauss(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[c][c];
                for k in 0..n {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
                let t = &f * &b[c];
                b[r] -= t;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Negative definiteness by completing squares (LDLᵀ pivots all negative).
pub fn negative_definite(m: &SurfaceModel, s: &[usize]) -> bool {
    let mut a: Vec<Vec<Q>> = s
        .iter()
        .map(|&i| s.iter().map(|&j| gram(m, i, j)).collect())
        .collect();
    let n = s.len();
    for c in 0..n {
        if !a[c][c].is_negative() {
            return false;
        }
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    true
}

/// All negative-definite curve subsets, grown depth first; negative
/// definiteness passes to principal subsets so pruning is exact.
pub fn definite_subsets(m: &SurfaceModel) -> Vec<Vec<usize>> {
    fn grow(m: &SurfaceModel, cur: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
        for i in from..=m.curves.len() {
            cur.push(i);
            if negative_definite(m, cur) {
                out.push(cur.clone());
                grow(m, cur, i + 1, out);
            }
            cur.pop();
        }
    }
    let mut out = vec![vec![]];
    grow(m, &mut Vec::new(), 1, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleDecomposition {
    pub negative: BTreeMap<usize, Q>,
    pub psq: Q,
}

/// Brute-force oracle for the ray `a − v·b`: each negative-definite subset
/// carries the solutions for `a` and `b` separately, so a given `v` only
/// needs a linear combination per subset.
pub struct RayOracle<'m> {
    m: &'m SurfaceModel,
    a: Vec<Q>,
    b: Vec<Q>,
    solved: Vec<Solved>,
}

/// Per-subset solution `x(v) = xa − v·xb`, positive exactly for `v` in the
/// open window `(lo, hi)` (`None` = unbounded).
struct Solved {
    support: Vec<usize>,
    xa: Vec<Q>,
    xb: Vec<Q>,
    lo: Option<Q>,
    hi: Option<Q>,
}

impl Solved {
    fn new(support: Vec<usize>, xa: Vec<Q>, xb: Vec<Q>) -> Option<Self> {
        let (mut lo, mut hi): (Option<Q>, Option<Q>) = (None, None);
        for (p, r) in xa.iter().zip(&xb) {
            if r.is_zero() {
                if !p.is_positive() {
                    return None;
                }
                continue;
            }
            let t = p / r;
            if r.is_positive() {
                hi = Some(hi.map_or(t.clone(), |h| h.min(t)));
            } else {
                lo = Some(lo.map_or(t.clone(), |l| l.max(t)));
            }
        }
        Some(Self {
            support,
            xa,
            xb,
            lo,
            hi,
        })
    }

    fn positive_at(&self, v: &Q) -> bool {
        self.lo.as_ref().is_none_or(|l| l < v) && self.hi.as_ref().is_none_or(|h| v < h)
    }
}

impl<'m> RayOracle<'m> {
    pub fn new(m: &'m SurfaceModel, subsets: &[Vec<usize>], a: Vec<Q>, b: Vec<Q>) -> Self {
        let solved = subsets
            .iter()
            .filter_map(|s| {
                let g: Vec<Vec<Q>> = s
                    .iter()
                    .map(|&i| s.iter().map(|&j| gram(m, i, j)).collect())
                    .collect();
                let xa = gauss(g.clone(), s.iter().map(|&i| dot(m, &a, i)).collect())?;
                let xb = gauss(g, s.iter().map(|&i| dot(m, &b, i)).collect())?;
                Solved::new(s.clone(), xa, xb)
            })
            .collect();
        Self { m, a, b, solved }
    }

    /// Ray of a flag curve from the pulled-back anticanonical class.
    pub fn for_flag(m: &'m SurfaceModel, subsets: &[Vec<usize>], flag: usize) -> Self {
        let a = ray_at(m, flag, &Q::zero());
        let mut b = vec![Q::zero(); m.generator_count()];
        b[flag] = Q::one();
        Self::new(m, subsets, a, b)
    }

    /// The unique support whose coefficients are all positive and whose
    /// positive part is nef on every curve.
    pub fn decompose(&self, v: &Q) -> OracleDecomposition {
        let m = self.m;
        let d: Vec<Q> = self.a.iter().zip(&self.b).map(|(x, y)| x - v * y).collect();
        let mut found: Vec<OracleDecomposition> = Vec::new();
        for sol in self.solved.iter().filter(|s| s.positive_at(v)) {
            let s = &sol.support;
            let x: Vec<Q> = sol.xa.iter().zip(&sol.xb).map(|(p, r)| p - v * r).collect();
            let mut p = d.clone();
            for (&i, c) in s.iter().zip(&x) {
                p[i] -= c;
            }
            if m.curve_indices().any(|j| dot(m, &p, j).is_negative()) {
                continue;
            }
            let psq: Q = (0..p.len()).map(|j| &p[j] * dot(m, &p, j)).sum();
            found.push(OracleDecomposition {
                negative: s.iter().copied().zip(x).collect(),
                psq,
            });
        }
        assert_eq!(
            found.len(),
            1,
            "{}: oracle found {} decompositions at v = {v}",
            m.name,
            found.len()
        );
        found.pop().unwrap()
    }
}

/// Flags whose profiles the catalog actually consumes.
pub fn used_flags(m: &SurfaceModel) -> BTreeSet<usize> {
    let mut f: BTreeSet<usize> = m
        .points
        .iter()
        .filter(|p| p.blowup.is_none())
        .map(|p| p.flag)
        .collect();
    f.extend(
        m.checks
            .iter()
            .filter(|c| c.model.is_none())
            .map(|c| c.flag),
    );
    f
}

pub fn check_segments(m: &SurfaceModel, p: &ZariskiProfile) {
    let name = &m.name;
    assert_eq!(p.segments[0].v_lo, q("0"), "{name}");
    for w in p.segments.windows(2) {
        assert_eq!(w[0].v_hi, w[1].v_lo, "{name}: segments abut");
        let v = &w[0].v_hi;
        assert_eq!(
            w[0].psq.eval(v),
            w[1].psq.eval(v),
            "{name}: volume continuity at {v}"
        );
    }
    let last = p.segments.last().unwrap();
    assert_eq!(last.v_hi, p.tau);
    assert!(
        last.psq.eval(&p.tau).is_zero(),
        "{name}: volume vanishes at tau"
    );
    for s in &p.segments {
        assert!(s.v_lo < s.v_hi, "{name}: nonempty segment");
        assert!(m.gram.is_negative_definite(&s.support) || s.support.is_empty());
        for end in [&s.v_lo, &s.v_hi] {
            for c in &s.coeff {
                assert!(
                    !c.eval(end).is_negative(),
                    "{name}: coefficient negative at {end}"
                );
            }
            for i in m.curve_indices() {
                let pc = s.pdot[i].eval(end);
                assert!(!pc.is_negative(), "{name}: P.C < 0 at {end}");
                if s.support.contains(&i) {
                    assert!(pc.is_zero(), "{name}: supported curve not orthogonal to P");
                }
            }
        }
        assert!(!s.psq.eval(&s.v_hi).is_negative());
        assert!(
            s.psq.eval(&s.v_lo) >= s.psq.eval(&s.v_hi),
            "{name}: volume decreasing"
        );
    }
}
