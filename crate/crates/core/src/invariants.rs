//! Integral invariants of flag profiles: `S(E)`, `h(v)` and `S(W^C; P)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::catalog::SurfaceModel;
use crate::poly::Poly;
use crate::rational::{q, Q};
use crate::zariski::{flag_profile, ZariskiError, ZariskiProfile};

/// Piecewise polynomial on consecutive intervals; no continuity is assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewisePoly {
    /// `pieces[k]` lives on `[breakpoints[k], breakpoints[k + 1]]`.
    pub breakpoints: Vec<Q>,
    pub pieces: Vec<Poly>,
}

impl PiecewisePoly {
    pub fn integral(&self) -> Q {
        self.pieces
            .iter()
            .enumerate()
            .map(|(k, p)| p.integrate(&self.breakpoints[k], &self.breakpoints[k + 1]))
            .sum()
    }
}

pub fn tau(p: &ZariskiProfile) -> Q {
    p.tau.clone()
}

/// `∫₀^τ P(v)² dv`, unnormalised.
pub fn volume_integral(p: &ZariskiProfile) -> Q {
    p.segments
        .iter()
        .map(|s| s.psq.integrate(&s.v_lo, &s.v_hi))
        .sum()
}

/// `S(E) = (1/a²)·∫₀^τ P(v)² dv` with `a` the ray's starting class.
pub fn s_of_profile(p: &ZariskiProfile) -> Q {
    volume_integral(p) / &p.base_square
}

/// `h(v) = (P·C)·Σ coeff_D·mult + (P·C)²/2` over incident supported curves.
pub fn h_profile(
    p: &ZariskiProfile,
    flag: usize,
    incident: &BTreeMap<usize, u32>,
) -> PiecewisePoly {
    let mut breakpoints = vec![q(0)];
    let mut pieces = Vec::new();
    for s in &p.segments {
        let pc = &s.pdot[flag];
        let mut local = Poly::zero();
        for (&d, &mult) in incident {
            local = local.add(&s.coeff_of(d).scale(&q(mult as i64)));
        }
        pieces.push(
            pc.mul(&local)
                .add(&pc.mul(pc).scale(&Q::new(1.into(), 2.into()))),
        );
        breakpoints.push(s.v_hi.clone());
    }
    PiecewisePoly {
        breakpoints,
        pieces,
    }
}

/// `S(W^C; P) = (2/a²)·∫₀^τ h(v) dv`.
pub fn s_flag_of_profile(p: &ZariskiProfile, flag: usize, incident: &BTreeMap<usize, u32>) -> Q {
    q(2) * h_profile(p, flag, incident).integral() / &p.base_square
}

/// Profiles memoised per `(model, flag)`; shareable across threads.
#[derive(Default)]
pub struct Evaluator {
    cache: Mutex<HashMap<(String, usize), Arc<ZariskiProfile>>>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn profile(
        &self,
        m: &SurfaceModel,
        flag: usize,
    ) -> Result<Arc<ZariskiProfile>, ZariskiError> {
        let key = (m.name.clone(), flag);
        if let Some(p) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(p.clone());
        }
        let p = Arc::new(flag_profile(m, flag)?);
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, p.clone());
        Ok(p)
    }

    pub fn s_divisor(&self, m: &SurfaceModel, flag: usize) -> Result<Q, ZariskiError> {
        Ok(s_of_profile(&*self.profile(m, flag)?))
    }

    pub fn s_flag_point(
        &self,
        m: &SurfaceModel,
        flag: usize,
        incident: &BTreeMap<usize, u32>,
    ) -> Result<Q, ZariskiError> {
        Ok(s_flag_of_profile(&*self.profile(m, flag)?, flag, incident))
    }
}

/// `A_X(E)` of a generator; catalog data per curve kind.
pub fn a_divisor(m: &SurfaceModel, flag: usize) -> Q {
    m.a_divisor(flag)
}

/// `A_{E,Δ}(O)` of a point; catalog data.
pub fn a_point(pt: &crate::catalog::PointSpec) -> Q {
    pt.a_point.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_models;
    use crate::rational::qf;

    #[test]
    fn empty_piecewise_integrates_to_zero() {
        let h = PiecewisePoly {
            breakpoints: vec![q(0)],
            pieces: vec![],
        };
        assert_eq!(h.integral(), q(0));
    }

    #[test]
    fn evaluator_memoises_per_model_and_flag() {
        let m = builtin_models().remove(0);
        let ev = Evaluator::new();
        let a = ev.profile(&m, 1).unwrap();
        let b = ev.profile(&m, 1).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert!(!Arc::ptr_eq(&a, &ev.profile(&m, 2).unwrap()));
    }

    #[test]
    fn multiplicity_scales_the_local_term() {
        let m = crate::catalog::find_model(&builtin_models(), "dp8-F2")
            .unwrap()
            .clone();
        let (s, f) = (m.index_of("s").unwrap(), m.index_of("f").unwrap());
        let p = flag_profile(&m, f).unwrap();
        let once = s_flag_of_profile(&p, f, &BTreeMap::from([(s, 1)]));
        let twice = s_flag_of_profile(&p, f, &BTreeMap::from([(s, 2)]));
        let none = s_flag_of_profile(&p, f, &BTreeMap::new());
        assert_eq!(&twice - &once, &once - &none);
        assert_eq!(once, qf(4, 3));
    }
}
