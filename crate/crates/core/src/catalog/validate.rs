//! Structural checks guarding against transcription slips.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{CheckKind, CurveKind, Method, SurfaceModel};
use crate::lattice::DivisorExpr;
use crate::rational::{fmt_q, q, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub model: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.model, self.message)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Checks deliberately skipped (adjunction on weighted exceptional curves).
    pub notices: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Validate a model and, recursively, its auxiliary models.
pub fn validate_model(m: &SurfaceModel) -> ValidationReport {
    let mut r = ValidationReport::default();
    check_one(m, &mut r);
    for a in &m.auxiliary {
        let sub = validate_model(a);
        r.violations.extend(sub.violations);
        r.notices.extend(sub.notices);
    }
    r
}

fn check_one(m: &SurfaceModel, r: &mut ValidationReport) {
    let mut bad = |msg: String| {
        r.violations.push(Violation {
            model: m.name.clone(),
            message: msg,
        })
    };
    let n = m.generator_count();
    if m.gram.size() != n || !m.gram.is_square() {
        bad(format!(
            "gram must be {n}×{n} (anticanonical plus {} curves)",
            m.curves.len()
        ));
        return;
    }
    if !m.gram.is_symmetric() {
        for i in 0..n {
            for j in 0..i {
                if m.gram.get(i, j) != m.gram.get(j, i) {
                    bad(format!(
                        "gram not symmetric at ({}, {}): {} vs {}",
                        m.generator_name(i),
                        m.generator_name(j),
                        fmt_q(m.gram.get(i, j)),
                        fmt_q(m.gram.get(j, i))
                    ));
                }
            }
        }
    }
    if *m.gram.get(0, 0) != m.degree {
        bad(format!(
            "(-K)^2 = {} but degree is {}",
            fmt_q(m.gram.get(0, 0)),
            fmt_q(&m.degree)
        ));
    }
    let mut notices = Vec::new();
    for i in m.curve_indices() {
        let c = m.curve(i).expect("index in range");
        if *m.gram.get(i, i) != c.self_intersection {
            bad(format!(
                "{}: gram diagonal {} disagrees with self-intersection {}",
                c.name,
                fmt_q(m.gram.get(i, i)),
                fmt_q(&c.self_intersection)
            ));
        }
        match c.kind {
            CurveKind::NegativeCurve => {
                if !c.a_value.is_one() {
                    bad(format!(
                        "{}: negative curve with A = {}",
                        c.name,
                        fmt_q(&c.a_value)
                    ));
                }
                if c.self_intersection != q(-1) && c.self_intersection != q(-2) {
                    bad(format!(
                        "{}: negative curve with self-intersection {}",
                        c.name,
                        fmt_q(&c.self_intersection)
                    ));
                }
            }
            CurveKind::Curve => {
                if !c.a_value.is_one() {
                    bad(format!("{}: curve with A = {}", c.name, fmt_q(&c.a_value)));
                }
            }
            CurveKind::OrdinaryExceptional => {
                if c.a_value != q(2) || c.self_intersection != q(-1) {
                    bad(format!(
                        "{}: ordinary exceptional curve needs A = 2 and self-intersection -1",
                        c.name
                    ));
                }
            }
            CurveKind::WeightedExceptional => {
                if !c.a_value.is_positive() {
                    bad(format!("{}: non-positive A", c.name));
                }
                notices.push(format!(
                    "{}: adjunction not checked for weighted exceptional",
                    c.name
                ));
                continue;
            }
        }
        let kc = m.gram.get(0, i);
        if *kc != q(2) + &c.self_intersection {
            bad(format!(
                "{}: adjunction fails, -K.C = {} but 2 + C^2 = {}",
                c.name,
                fmt_q(kc),
                fmt_q(&(q(2) + &c.self_intersection))
            ));
        }
    }
    let a = m.ray_base();
    let a2 = m.gram.pair(&a, &a).unwrap_or_else(|_| Q::zero());
    if !a2.is_positive() {
        bad(format!(
            "pulled-back anticanonical class has square {}",
            fmt_q(&a2)
        ));
    }
    if let Some(l) = m.lines {
        if l as usize != m.count_lines() {
            bad(format!(
                "declares {l} lines but lists {} (-1)-curves",
                m.count_lines()
            ));
        }
    }
    for p in &m.points {
        let host = match (&p.method, &p.blowup) {
            (Method::Estimate1, None) => m,
            (Method::Estimate2, Some(b)) => match m.auxiliary(b) {
                Some(h) => h,
                None => {
                    bad(format!("point {}: unknown auxiliary model {b}", p.label));
                    continue;
                }
            },
            (Method::Estimate1, Some(_)) => {
                bad(format!(
                    "point {}: estimate-1 point names a blowup",
                    p.label
                ));
                continue;
            }
            (Method::Estimate2, None) => {
                bad(format!(
                    "point {}: estimate-2 point without a blowup",
                    p.label
                ));
                continue;
            }
        };
        let Some(flag) = host.curve(p.flag) else {
            bad(format!(
                "point {}: flag index {} out of range",
                p.label, p.flag
            ));
            continue;
        };
        if p.method == Method::Estimate2 && !flag.kind.is_exceptional() {
            bad(format!(
                "point {}: estimate-2 flag {} is not exceptional",
                p.label, flag.name
            ));
        }
        if !p.a_point.is_positive() || p.a_point > Q::one() {
            bad(format!(
                "point {}: a_point {} outside (0, 1]",
                p.label,
                fmt_q(&p.a_point)
            ));
        }
        check_incidence(host, &p.label, p.flag, &p.incident, &mut bad);
    }
    for c in &m.checks {
        let host = match &c.model {
            None => m,
            Some(b) => match m.auxiliary(b) {
                Some(h) => h,
                None => {
                    bad(format!("check: unknown auxiliary model {b}"));
                    continue;
                }
            },
        };
        if host.curve(c.flag).is_none() {
            bad(format!("check: flag index {} out of range", c.flag));
            continue;
        }
        let want = match c.kind {
            CheckKind::Psq { .. } => 3,
            _ => 1,
        };
        if c.printed.len() != want || c.corrected.as_ref().is_some_and(|v| v.len() != want) {
            bad(format!(
                "check on {}: expected {want} values",
                host.generator_name(c.flag)
            ));
        }
        check_incidence(host, "check", c.flag, &c.incident, &mut bad);
    }
    r.notices
        .extend(notices.into_iter().map(|message| Violation {
            model: m.name.clone(),
            message,
        }));
}

fn check_incidence(
    host: &SurfaceModel,
    label: &str,
    flag: usize,
    incident: &std::collections::BTreeMap<usize, u32>,
    bad: &mut impl FnMut(String),
) {
    for (&d, &mult) in incident {
        if d == flag {
            bad(format!(
                "{label}: flag listed among its own incident curves"
            ));
            continue;
        }
        if host.curve(d).is_none() {
            bad(format!("{label}: incident index {d} out of range"));
            continue;
        }
        if mult == 0 {
            bad(format!(
                "{label}: zero multiplicity for {}",
                host.generator_name(d)
            ));
        }
        let meet = host
            .gram
            .pair(&DivisorExpr::generator(flag), &DivisorExpr::generator(d))
            .unwrap_or_else(|_| Q::zero());
        if !meet.is_positive() {
            bad(format!(
                "{label}: {} does not meet flag {}",
                host.generator_name(d),
                host.generator_name(flag)
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_models;

    #[test]
    fn degree_and_diagonal_mismatch_reported() {
        let mut m = builtin_models().remove(0);
        m.degree = q(7);
        m.gram.set(1, 1, q(-3));
        let r = validate_model(&m);
        let msgs: Vec<&str> = r.violations.iter().map(|v| v.message.as_str()).collect();
        assert!(msgs.iter().any(|s| s.contains("degree is 7")), "{msgs:?}");
        assert!(msgs.iter().any(|s| s.contains("gram diagonal")), "{msgs:?}");
    }

    #[test]
    fn wrong_shape_stops_early() {
        let mut m = builtin_models().remove(0);
        m.curves.pop();
        let r = validate_model(&m);
        assert_eq!(r.violations.len(), 1);
        assert!(r.violations[0].message.starts_with("gram must be"));
    }
}
