//! Local and global δ from the two estimates, and table verification.

use std::fmt;

use serde::Serialize;

use crate::catalog::{validate_model, CheckKind, Expected, Method, PointSpec, SurfaceModel};
use crate::invariants::{s_of_profile, Evaluator};
use crate::rational::{fmt_q, min_q, Q};
use crate::zariski::ZariskiError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeltaError {
    #[error(transparent)]
    Zariski(#[from] ZariskiError),
    #[error("{model}: point `{point}` names unknown auxiliary model `{aux}`")]
    UnknownAuxiliary {
        model: String,
        point: String,
        aux: String,
    },
    #[error("{model}: no points on the exceptional curve {flag}")]
    NoPointsOnExceptional { model: String, flag: String },
    #[error("{0}: empty point list")]
    NoPoints(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaResult {
    #[serde(with = "crate::rational::serde_q")]
    pub lower: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub upper: Q,
    pub exact: bool,
    pub witness: String,
}

impl DeltaResult {
    fn new(lower: Q, upper: Q, witness: String) -> Self {
        Self {
            exact: lower == upper,
            lower,
            upper,
            witness,
        }
    }

    pub fn matches(&self, e: &Expected) -> bool {
        match e {
            Expected::Exact(v) => self.exact && &self.lower == v,
            Expected::Interval { lower, upper } => &self.lower == lower && &self.upper == upper,
        }
    }
}

impl fmt::Display for DeltaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{} (exact)", fmt_q(&self.lower))
        } else {
            write!(f, "[{}, {}]", fmt_q(&self.lower), fmt_q(&self.upper))
        }
    }
}

pub fn fmt_expected(e: &Expected) -> String {
    match e {
        Expected::Exact(v) => format!("{} (exact)", fmt_q(v)),
        Expected::Interval { lower, upper } => format!("[{}, {}]", fmt_q(lower), fmt_q(upper)),
    }
}

/// Local δ at a point type of `m`.
pub fn local_delta(
    ev: &Evaluator,
    m: &SurfaceModel,
    pt: &PointSpec,
) -> Result<DeltaResult, DeltaError> {
    match pt.method {
        Method::Estimate1 => {
            let s = ev.s_divisor(m, pt.flag)?;
            let sw = ev.s_flag_point(m, pt.flag, &pt.incident)?;
            let upper = m.a_divisor(pt.flag) / &s;
            let flag_bound = &pt.a_point / &sw;
            let name = m.generator_name(pt.flag);
            Ok(DeltaResult::new(
                min_q(&upper, &flag_bound).clone(),
                upper.clone(),
                format!(
                    "estimate-1 on {name}: S = {}, S(W) = {}",
                    fmt_q(&s),
                    fmt_q(&sw)
                ),
            ))
        }
        Method::Estimate2 => {
            let aux_name = pt.blowup.as_deref().unwrap_or_default();
            let aux = m
                .auxiliary(aux_name)
                .ok_or_else(|| DeltaError::UnknownAuxiliary {
                    model: m.name.clone(),
                    point: pt.label.clone(),
                    aux: aux_name.to_string(),
                })?;
            let e = pt.flag;
            let name = aux.generator_name(e).to_string();
            let profile = ev.profile(aux, e)?;
            let s = s_of_profile(&profile);
            let upper = aux.a_divisor(e) / &s;
            let mut lower = upper.clone();
            let mut seen = false;
            let mut worst = String::new();
            for o in aux.points.iter().filter(|o| o.flag == e) {
                seen = true;
                let sw = ev.s_flag_point(aux, e, &o.incident)?;
                let b = &o.a_point / &sw;
                if b < lower {
                    lower = b;
                    worst = format!(", worst point {} with S(W) = {}", o.label, fmt_q(&sw));
                }
            }
            if !seen {
                return Err(DeltaError::NoPointsOnExceptional {
                    model: aux.name.clone(),
                    flag: name,
                });
            }
            Ok(DeltaResult::new(
                lower,
                upper,
                format!(
                    "estimate-2 on {name} of {}: S = {}{worst}",
                    aux.name,
                    fmt_q(&s)
                ),
            ))
        }
    }
}

/// Minimum over the model's point types.
pub fn global_delta(ev: &Evaluator, m: &SurfaceModel) -> Result<DeltaResult, DeltaError> {
    let mut best: Option<(DeltaResult, &str)> = None;
    let mut lower: Option<Q> = None;
    for pt in &m.points {
        let r = local_delta(ev, m, pt)?;
        lower = Some(match lower {
            None => r.lower.clone(),
            Some(l) => min_q(&l, &r.lower).clone(),
        });
        if best.as_ref().is_none_or(|(b, _)| r.upper < b.upper) {
            best = Some((r, &pt.label));
        }
    }
    let (b, label) = best.ok_or_else(|| DeltaError::NoPoints(m.name.clone()))?;
    let lower = lower.expect("nonempty");
    Ok(DeltaResult::new(
        lower,
        b.upper.clone(),
        format!("point {label}: {}", b.witness),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Erratum,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Erratum => "ERRATUM",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowKind {
    Validation,
    Global,
    Point,
    Check,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub kind: RowKind,
    pub model: String,
    pub item: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<Row>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }

    pub fn count(&self, kind: RowKind, status: Status) -> usize {
        self.rows
            .iter()
            .filter(|r| r.kind == kind && r.status == status)
            .count()
    }
}

fn render_values(v: &[Q]) -> String {
    v.iter().map(fmt_q).collect::<Vec<_>>().join(", ")
}

fn check_rows(ev: &Evaluator, m: &SurfaceModel, out: &mut Vec<Row>) {
    for c in &m.checks {
        let host = match &c.model {
            None => m,
            Some(n) => match m.auxiliary(n) {
                Some(h) => h,
                None => continue,
            },
        };
        let flag = host.generator_name(c.flag).to_string();
        let computed: Result<Vec<Q>, String> = match &c.kind {
            CheckKind::SDivisor => ev
                .s_divisor(host, c.flag)
                .map(|x| vec![x])
                .map_err(|e| e.to_string()),
            CheckKind::SFlagPoint => ev
                .s_flag_point(host, c.flag, &c.incident)
                .map(|x| vec![x])
                .map_err(|e| e.to_string()),
            CheckKind::Psq { from, to } => match ev.profile(host, c.flag) {
                Err(e) => Err(e.to_string()),
                Ok(p) => p
                    .segments
                    .iter()
                    .find(|s| &s.v_lo <= from && to <= &s.v_hi)
                    .map(|s| s.psq.padded(3))
                    .ok_or_else(|| {
                        format!("no single segment covers [{}, {}]", fmt_q(from), fmt_q(to))
                    }),
            },
        };
        let what = match &c.kind {
            CheckKind::SDivisor => format!("S({flag})"),
            CheckKind::SFlagPoint => {
                let inc: Vec<&str> = c.incident.keys().map(|&i| host.generator_name(i)).collect();
                format!(
                    "S(W^{flag}; {})",
                    if inc.is_empty() {
                        "generic".into()
                    } else {
                        inc.join("+")
                    }
                )
            }
            CheckKind::Psq { from, to } => {
                format!("P^2 on {flag} [{}, {}]", fmt_q(from), fmt_q(to))
            }
        };
        let item = match &c.model {
            Some(n) => format!("{what} on {n}"),
            None => what,
        };
        let (status, shown) = match &computed {
            Err(e) => (Status::Fail, e.clone()),
            Ok(v) if *v == c.printed => (Status::Pass, render_values(v)),
            Ok(v) if c.corrected.as_ref() == Some(v) => (Status::Erratum, render_values(v)),
            Ok(v) => (Status::Fail, render_values(v)),
        };
        let mut note = c.note.clone();
        if status == Status::Erratum {
            note = format!("printed value is a misprint; {note}")
                .trim_end_matches("; ")
                .to_string();
        }
        out.push(Row {
            kind: RowKind::Check,
            model: m.name.clone(),
            item,
            expected: render_values(&c.printed),
            computed: shown,
            status,
            note,
        });
    }
}

/// Rows for one model: validation, global δ, per-point expectations, checks.
pub fn verify_model(ev: &Evaluator, m: &SurfaceModel) -> Vec<Row> {
    let mut out = Vec::new();
    let vr = validate_model(m);
    for v in &vr.violations {
        out.push(Row {
            kind: RowKind::Validation,
            model: m.name.clone(),
            item: v.model.clone(),
            expected: "valid".into(),
            computed: v.message.clone(),
            status: Status::Fail,
            note: String::new(),
        });
    }
    if let Some(exp) = &m.expected_global_delta {
        let (status, computed) = match global_delta(ev, m) {
            Ok(r) if r.exact && &r.lower == exp => (Status::Pass, r.to_string()),
            Ok(r) => (Status::Fail, r.to_string()),
            Err(e) => (Status::Fail, e.to_string()),
        };
        out.push(Row {
            kind: RowKind::Global,
            model: m.name.clone(),
            item: "delta".into(),
            expected: format!("{} (exact)", fmt_q(exp)),
            computed,
            status,
            note: String::new(),
        });
    }
    for pt in &m.points {
        let Some(exp) = &pt.expected else { continue };
        let (status, computed) = match local_delta(ev, m, pt) {
            Ok(r) if r.matches(exp) => (Status::Pass, r.to_string()),
            Ok(r) => (Status::Fail, r.to_string()),
            Err(e) => (Status::Fail, e.to_string()),
        };
        out.push(Row {
            kind: RowKind::Point,
            model: m.name.clone(),
            item: pt.label.clone(),
            expected: fmt_expected(exp),
            computed,
            status,
            note: String::new(),
        });
    }
    check_rows(ev, m, &mut out);
    out
}

/// Verify every model; models are processed in parallel and merged in name
/// order.
pub fn verify_table(models: &[SurfaceModel]) -> VerifyReport {
    let ev = Evaluator::new();
    let mut sorted: Vec<&SurfaceModel> = models.iter().collect();
    sorted.sort_by(|a, b| a.name.cmp(&b.name));
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .clamp(1, 8);
    let chunk = sorted.len().div_ceil(workers).max(1);
    let parts: Vec<Vec<Row>> = std::thread::scope(|s| {
        let handles: Vec<_> = sorted
            .chunks(chunk)
            .map(|ms| {
                let ev = &ev;
                s.spawn(move || {
                    ms.iter()
                        .flat_map(|m| verify_model(ev, m))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verifier thread"))
            .collect()
    });
    VerifyReport {
        rows: parts.into_iter().flatten().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn interval_expectations_match_both_ends() {
        let r = DeltaResult::new(qf(21, 23), qf(21, 19), String::new());
        assert!(!r.exact);
        assert!(r.matches(&Expected::Interval {
            lower: qf(21, 23),
            upper: qf(21, 19)
        }));
        assert!(!r.matches(&Expected::Exact(qf(21, 23))));
        assert_eq!(fmt_expected(&Expected::Exact(qf(3, 4))), "3/4 (exact)");
    }

    #[test]
    fn report_counts_and_status() {
        let row = |status| Row {
            kind: RowKind::Check,
            model: "m".into(),
            item: "i".into(),
            expected: "1".into(),
            computed: "1".into(),
            status,
            note: String::new(),
        };
        let mut r = VerifyReport {
            rows: vec![row(Status::Pass), row(Status::Erratum)],
        };
        assert!(r.ok());
        assert_eq!(r.count(RowKind::Check, Status::Erratum), 1);
        r.rows.push(row(Status::Fail));
        assert!(!r.ok());
        assert_eq!(serde_json::to_value(Status::Erratum).unwrap(), "ERRATUM");
    }
}
