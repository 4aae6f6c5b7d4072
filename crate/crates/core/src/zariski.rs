//! Zariski decomposition along rays `D(v) = a − v·b`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::catalog::SurfaceModel;
use crate::lattice::{DivisorExpr, LatticeError};
use crate::poly::{IrrationalRoot, Poly};
use crate::rational::{fmt_q, q, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZariskiError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(
        "{model}: no Zariski decomposition found for the divisor; support {support:?} is not negative definite \
         (divisor outside the pseudo-effective cone or a curve missing from the catalog)"
    )]
    NotPseudoEffective { model: String, support: Vec<String> },
    #[error("{model}: fixpoint did not stabilise within {cap} rounds")]
    NoConvergence { model: String, cap: usize },
    #[error("{model}: ray has P(0)^2 = {psq0}, expected a big starting class")]
    MalformedRay { model: String, psq0: String },
    #[error("{model}: walker exceeded {cap} segments")]
    WalkerCap { model: String, cap: usize },
    #[error("{model}: threshold is not rational: {source}")]
    IrrationalThreshold {
        model: String,
        source: IrrationalRoot,
    },
    #[error("{model}: walker stalled at v = {at}: {detail}")]
    Stalled {
        model: String,
        at: String,
        detail: String,
    },
    #[error("v = {v} outside [0, {tau}]")]
    OutOfRange { v: String, tau: String },
}

/// `D = P + N` at a fixed parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub positive: DivisorExpr,
    /// Curve index → strictly positive coefficient.
    pub negative: BTreeMap<usize, Q>,
}

impl Decomposition {
    pub fn support(&self) -> Vec<usize> {
        self.negative.keys().copied().collect()
    }
}

fn names(m: &SurfaceModel, s: &[usize]) -> Vec<String> {
    s.iter().map(|&i| m.generator_name(i).to_string()).collect()
}

/// Fixpoint construction: grow the support by every curve the current
/// positive part meets negatively and re-solve, until nothing is negative.
pub fn decompose_at(m: &SurfaceModel, d: &DivisorExpr) -> Result<Decomposition, ZariskiError> {
    let g = &m.gram;
    let cap = m.curves.len() + 1;
    let mut support: Vec<usize> = Vec::new();
    for _ in 0..cap {
        let coeffs = if support.is_empty() {
            vec![]
        } else {
            let rhs = support
                .iter()
                .map(|&i| g.pair_gen(d, i))
                .collect::<Result<Vec<_>, _>>()?;
            g.solve(&support, &rhs)?
        };
        let mut p = d.clone();
        for (&i, c) in support.iter().zip(&coeffs) {
            p.add_term(i, &-c);
        }
        let mut grew = false;
        for i in m.curve_indices() {
            if !support.contains(&i) && g.pair_gen(&p, i)?.is_negative() {
                support.push(i);
                grew = true;
            }
        }
        if !grew {
            let negative: BTreeMap<usize, Q> = support
                .iter()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .map(|(&i, c)| (i, c))
                .collect();
            if negative.values().any(|c| c.is_negative()) {
                return Err(ZariskiError::NotPseudoEffective {
                    model: m.name.clone(),
                    support: names(m, &support),
                });
            }
            return Ok(Decomposition {
                positive: p,
                negative,
            });
        }
        support.sort_unstable();
        if !g.is_negative_definite(&support) {
            return Err(ZariskiError::NotPseudoEffective {
                model: m.name.clone(),
                support: names(m, &support),
            });
        }
    }
    Err(ZariskiError::NoConvergence {
        model: m.name.clone(),
        cap,
    })
}

/// One stretch of the ray on which the negative support is constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZariskiSegment {
    pub v_lo: Q,
    pub v_hi: Q,
    pub support: Vec<usize>,
    /// Affine coefficient of each supported curve, in support order.
    pub coeff: Vec<Poly>,
    /// `P(v)²`
    pub psq: Poly,
    /// `P(v)·C` for every generator curve, indexed by generator (entry 0
    /// holds `P(v)·(−K)`).
    pub pdot: Vec<Poly>,
}

impl ZariskiSegment {
    pub fn coeff_of(&self, curve: usize) -> Poly {
        self.support
            .iter()
            .position(|&i| i == curve)
            .map(|k| self.coeff[k].clone())
            .unwrap_or_else(Poly::zero)
    }

    pub fn contains(&self, v: &Q) -> bool {
        &self.v_lo <= v && v <= &self.v_hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZariskiProfile {
    pub segments: Vec<ZariskiSegment>,
    pub tau: Q,
    /// Starting class `a` of the ray and its square, the normalisation of `S`.
    pub base_square: Q,
}

impl ZariskiProfile {
    pub fn segment_at(&self, v: &Q) -> Option<&ZariskiSegment> {
        self.segments.iter().find(|s| s.contains(v))
    }
}

/// `P(v)²` at a point of `[0, τ]`.
pub fn volume_at(p: &ZariskiProfile, v: &Q) -> Result<Q, ZariskiError> {
    p.segment_at(v)
        .map(|s| s.psq.eval(v))
        .ok_or_else(|| ZariskiError::OutOfRange {
            v: fmt_q(v),
            tau: fmt_q(&p.tau),
        })
}

/// Affine data for a fixed support: the negative part is `x0 + v·x1` where
/// both solve the Gram system with the right-hand sides of `a` and `−b`.
fn affine_segment(
    m: &SurfaceModel,
    a: &DivisorExpr,
    b: &DivisorExpr,
    support: &[usize],
) -> Result<(Vec<Poly>, Poly, Vec<Poly>), ZariskiError> {
    let g = &m.gram;
    let (x0, x1) = if support.is_empty() {
        (vec![], vec![])
    } else {
        let ra = support
            .iter()
            .map(|&i| g.pair_gen(a, i))
            .collect::<Result<Vec<_>, _>>()?;
        let rb = support
            .iter()
            .map(|&i| g.pair_gen(b, i).map(|x| -x))
            .collect::<Result<Vec<_>, _>>()?;
        (g.solve(support, &ra)?, g.solve(support, &rb)?)
    };
    // P(v) = p0 + v·p1
    let mut p0 = a.clone();
    let mut p1 = b.scale(&q(-1));
    for (k, &i) in support.iter().enumerate() {
        p0.add_term(i, &-&x0[k]);
        p1.add_term(i, &-&x1[k]);
    }
    let coeff = (0..support.len())
        .map(|k| Poly::affine(x0[k].clone(), x1[k].clone()))
        .collect();
    let psq = Poly::new(vec![
        g.pair(&p0, &p0)?,
        q(2) * g.pair(&p0, &p1)?,
        g.pair(&p1, &p1)?,
    ]);
    let pdot = (0..m.generator_count())
        .map(|i| Ok(Poly::affine(g.pair_gen(&p0, i)?, g.pair_gen(&p1, i)?)))
        .collect::<Result<Vec<_>, ZariskiError>>()?;
    Ok((coeff, psq, pdot))
}

/// Smallest root of an affine function strictly after `v0`, optionally only
/// where the function is decreasing.
fn affine_root_after(f: &Poly, v0: &Q, decreasing_only: bool) -> Option<Q> {
    let slope = f.coeff(1);
    if slope.is_zero() || (decreasing_only && slope.is_positive()) {
        return None;
    }
    let r = -f.coeff(0) / slope;
    (r > *v0).then_some(r)
}

/// First zero of `psq` in `(v0, hi]` (or after `v0` when unbounded). Roots are
/// only computed when one is known to lie in range, so an irrational root past
/// the segment end is never an error.
fn first_vanishing(
    m: &SurfaceModel,
    psq: &Poly,
    v0: &Q,
    hi: Option<&Q>,
) -> Result<Option<Q>, ZariskiError> {
    let needed = match hi {
        None => true,
        Some(h) => {
            let vertex_dips = psq.coeff(2).is_positive() && {
                let x = -psq.coeff(1) / (q(2) * psq.coeff(2));
                &x > v0 && &x < h && !psq.eval(&x).is_positive()
            };
            !psq.eval(h).is_positive() || vertex_dips
        }
    };
    if !needed {
        return Ok(None);
    }
    let roots = psq
        .rational_roots()
        .map_err(|e| ZariskiError::IrrationalThreshold {
            model: m.name.clone(),
            source: e,
        })?;
    Ok(roots
        .into_iter()
        .find(|r| r > v0 && hi.is_none_or(|h| r <= h)))
}

/// Support just past `v`: free curves whose degree reaches zero while
/// decreasing join, supported curves whose coefficient reaches zero while
/// decreasing leave. Iterated since each change moves the others.
fn support_after(
    m: &SurfaceModel,
    a: &DivisorExpr,
    b: &DivisorExpr,
    mut support: Vec<usize>,
    v: &Q,
) -> Result<Vec<usize>, ZariskiError> {
    for _ in 0..=m.curves.len() {
        let (coeff, _, pdot) = affine_segment(m, a, b, &support)?;
        let mut next: Vec<usize> = support
            .iter()
            .zip(&coeff)
            .filter(|(_, c)| !(c.eval(v).is_zero() && c.coeff(1).is_negative()))
            .map(|(&i, _)| i)
            .collect();
        for i in m.curve_indices() {
            let d = &pdot[i];
            if !support.contains(&i) && d.eval(v).is_zero() && d.coeff(1).is_negative() {
                next.push(i);
            }
        }
        next.sort_unstable();
        if next == support {
            return Ok(support);
        }
        support = next;
    }
    Ok(support)
}

/// Walk the ray `a − v·b` from `v = 0` to the pseudo-effective threshold.
pub fn parametric_profile(
    m: &SurfaceModel,
    a: &DivisorExpr,
    b: &DivisorExpr,
) -> Result<ZariskiProfile, ZariskiError> {
    let g = &m.gram;
    let base_square = g.pair(a, a)?;
    let cap = 4 * m.curves.len().max(1);
    let mut segments: Vec<ZariskiSegment> = Vec::new();
    let mut v0 = q(0);
    let start = decompose_at(m, a)?;
    let psq0 = g.pair(&start.positive, &start.positive)?;
    if !psq0.is_positive() {
        return Err(ZariskiError::MalformedRay {
            model: m.name.clone(),
            psq0: fmt_q(&psq0),
        });
    }
    let at = |v: &Q| a.axpy(&-v, b);
    let mut support = start.support();
    for _ in 0..cap {
        support = support_after(m, a, b, support, &v0)?;
        let mut accepted = None;
        for _ in 0..cap {
            let (coeff, psq, pdot) = affine_segment(m, a, b, &support)?;
            // (i) coefficient roots, (ii) decreasing pdot roots of free curves.
            let mut hi: Option<Q> = None;
            let mut consider = |r: Option<Q>| {
                if let Some(r) = r {
                    if hi.as_ref().is_none_or(|h| r < *h) {
                        hi = Some(r);
                    }
                }
            };
            for c in &coeff {
                consider(affine_root_after(c, &v0, false));
            }
            for i in m.curve_indices() {
                if !support.contains(&i) {
                    consider(affine_root_after(&pdot[i], &v0, true));
                }
            }
            // (iii) the volume vanishing ends the walk.
            let (end, last) = match first_vanishing(m, &psq, &v0, hi.as_ref())? {
                Some(r) => (r, true),
                None => match hi {
                    Some(h) => (h, false),
                    None => {
                        return Err(ZariskiError::Stalled {
                            model: m.name.clone(),
                            at: fmt_q(&v0),
                            detail: "no breakpoint ahead and the volume never vanishes".into(),
                        })
                    }
                },
            };
            let mid = (&v0 + &end) / q(2);
            let probe = decompose_at(m, &at(&mid))?.support();
            if probe == support {
                accepted = Some((
                    ZariskiSegment {
                        v_lo: v0.clone(),
                        v_hi: end.clone(),
                        support: support.clone(),
                        coeff,
                        psq,
                        pdot,
                    },
                    last,
                ));
                break;
            }
            support = probe;
        }
        let Some((seg, last)) = accepted else {
            return Err(ZariskiError::Stalled {
                model: m.name.clone(),
                at: fmt_q(&v0),
                detail: "support probe did not settle".into(),
            });
        };
        v0 = seg.v_hi.clone();
        support = seg.support.clone();
        segments.push(seg);
        if last {
            return Ok(ZariskiProfile {
                tau: v0,
                segments,
                base_square,
            });
        }
    }
    Err(ZariskiError::WalkerCap {
        model: m.name.clone(),
        cap,
    })
}

/// Profile of `ray_base − v·E` for a generator curve `flag`.
pub fn flag_profile(m: &SurfaceModel, flag: usize) -> Result<ZariskiProfile, ZariskiError> {
    parametric_profile(m, &m.ray_base(), &DivisorExpr::generator(flag))
}
