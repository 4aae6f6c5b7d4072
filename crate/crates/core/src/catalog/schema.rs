//! JSON catalog format. Generators and curves are referenced by name in the
//! file and resolved to indices on load.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Check, CheckKind, CurveInfo, CurveKind, Expected, Method, PointSpec, SurfaceModel};
use crate::lattice::GramMatrix;
use crate::rational::{parse_q, q, serde_q, serde_q_mat, serde_q_opt, serde_q_vec, Q};

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("model `{model}`: {field} refers to unknown generator `{name}`")]
    UnknownGenerator {
        model: String,
        field: String,
        name: String,
    },
    #[error("model `{model}`: point `{point}` refers to unknown auxiliary model `{name}`")]
    UnknownAuxiliary {
        model: String,
        point: String,
        name: String,
    },
}

impl From<serde_json::Error> for CatalogError {
    fn from(e: serde_json::Error) -> Self {
        CatalogError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawGenerator {
    name: String,
    kind: CurveKind,
    #[serde(with = "serde_q")]
    self_intersection: Q,
    #[serde(with = "serde_q")]
    a_value: Q,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawExpected {
    Exact(String),
    Interval { lower: String, upper: String },
}

fn one() -> Q {
    q(1)
}

fn is_one(x: &Q) -> bool {
    *x == q(1)
}

#[derive(Serialize, Deserialize)]
struct RawPoint {
    label: String,
    flag: String,
    #[serde(default)]
    incident: BTreeMap<String, u32>,
    #[serde(with = "serde_q", default = "one", skip_serializing_if = "is_one")]
    a_point: Q,
    method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    blowup: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expected: Option<RawExpected>,
}

#[derive(Serialize, Deserialize)]
struct RawCheck {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    model: Option<String>,
    flag: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    incident: BTreeMap<String, u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty", with = "serde_q_vec")]
    interval: Vec<Q>,
    #[serde(with = "serde_q_vec")]
    printed: Vec<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    corrected: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    note: String,
}

#[derive(Serialize, Deserialize)]
struct RawModel {
    name: String,
    #[serde(with = "serde_q")]
    degree: Q,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    singularities: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lines: Option<u32>,
    generators: Vec<RawGenerator>,
    #[serde(with = "serde_q_mat")]
    gram: Vec<Vec<Q>>,
    #[serde(default)]
    points: Vec<RawPoint>,
    #[serde(default, with = "serde_q_opt", skip_serializing_if = "Option::is_none")]
    expected_global_delta: Option<Q>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    provenance: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    auxiliary: Vec<RawModel>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    checks: Vec<RawCheck>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawFile {
    Many(Vec<RawModel>),
    One(Box<RawModel>),
}

fn parse_field(model: &str, field: &str, s: &str) -> Result<Q, CatalogError> {
    parse_q(s).map_err(|e| CatalogError::Parse {
        line: 0,
        column: 0,
        message: format!("model `{model}`, {field}: {e}"),
    })
}

fn resolve(m: &SurfaceModel, field: &str, name: &str) -> Result<usize, CatalogError> {
    m.index_of(name)
        .ok_or_else(|| CatalogError::UnknownGenerator {
            model: m.name.clone(),
            field: field.to_string(),
            name: name.to_string(),
        })
}

fn resolve_incident(
    m: &SurfaceModel,
    field: &str,
    inc: &BTreeMap<String, u32>,
) -> Result<BTreeMap<usize, u32>, CatalogError> {
    inc.iter()
        .map(|(n, &k)| Ok((resolve(m, field, n)?, k)))
        .collect()
}

impl RawModel {
    fn into_model(self) -> Result<SurfaceModel, CatalogError> {
        let auxiliary = self
            .auxiliary
            .into_iter()
            .map(RawModel::into_model)
            .collect::<Result<Vec<_>, _>>()?;
        let mut m = SurfaceModel {
            name: self.name,
            degree: self.degree,
            singularities: self.singularities,
            lines: self.lines,
            curves: self
                .generators
                .into_iter()
                .map(|g| CurveInfo {
                    name: g.name,
                    kind: g.kind,
                    self_intersection: g.self_intersection,
                    a_value: g.a_value,
                })
                .collect(),
            gram: GramMatrix::new(self.gram),
            points: vec![],
            expected_global_delta: self.expected_global_delta,
            provenance: self.provenance,
            auxiliary,
            checks: vec![],
        };
        for p in self.points {
            let field = format!("point `{}`", p.label);
            let host = match &p.blowup {
                None => &m,
                Some(b) => m
                    .auxiliary(b)
                    .ok_or_else(|| CatalogError::UnknownAuxiliary {
                        model: m.name.clone(),
                        point: p.label.clone(),
                        name: b.clone(),
                    })?,
            };
            let flag = resolve(host, &field, &p.flag)?;
            let incident = resolve_incident(host, &field, &p.incident)?;
            let expected = match p.expected {
                None => None,
                Some(RawExpected::Exact(s)) => {
                    Some(Expected::Exact(parse_field(&m.name, &field, &s)?))
                }
                Some(RawExpected::Interval { lower, upper }) => Some(Expected::Interval {
                    lower: parse_field(&m.name, &field, &lower)?,
                    upper: parse_field(&m.name, &field, &upper)?,
                }),
            };
            m.points.push(PointSpec {
                label: p.label,
                flag,
                incident,
                a_point: p.a_point,
                method: p.method,
                blowup: p.blowup,
                expected,
            });
        }
        for c in self.checks {
            let field = format!("check on `{}`", c.flag);
            let host = match &c.model {
                None => &m,
                Some(b) => m
                    .auxiliary(b)
                    .ok_or_else(|| CatalogError::UnknownAuxiliary {
                        model: m.name.clone(),
                        point: field.clone(),
                        name: b.clone(),
                    })?,
            };
            let flag = resolve(host, &field, &c.flag)?;
            let incident = resolve_incident(host, &field, &c.incident)?;
            let kind = match c.kind.as_str() {
                "s-divisor" => CheckKind::SDivisor,
                "s-flag-point" => CheckKind::SFlagPoint,
                "psq" if c.interval.len() == 2 => CheckKind::Psq {
                    from: c.interval[0].clone(),
                    to: c.interval[1].clone(),
                },
                other => {
                    return Err(CatalogError::Parse {
                        line: 0,
                        column: 0,
                        message: format!(
                            "model `{}`: unknown check kind `{other}` (psq needs a two-element interval)",
                            m.name
                        ),
                    })
                }
            };
            let corrected = match c.corrected {
                None => None,
                Some(v) => Some(
                    v.iter()
                        .map(|s| parse_field(&m.name, &field, s))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
            };
            m.checks.push(Check {
                kind,
                model: c.model,
                flag,
                incident,
                printed: c.printed,
                corrected,
                note: c.note,
            });
        }
        Ok(m)
    }

    fn from_model(m: &SurfaceModel) -> Self {
        let host_of = |b: &Option<String>| -> &SurfaceModel {
            b.as_ref().and_then(|b| m.auxiliary(b)).unwrap_or(m)
        };
        let names = |h: &SurfaceModel, inc: &BTreeMap<usize, u32>| -> BTreeMap<String, u32> {
            inc.iter()
                .map(|(&i, &k)| (h.generator_name(i).to_string(), k))
                .collect()
        };
        RawModel {
            name: m.name.clone(),
            degree: m.degree.clone(),
            singularities: m.singularities.clone(),
            lines: m.lines,
            generators: m
                .curves
                .iter()
                .map(|c| RawGenerator {
                    name: c.name.clone(),
                    kind: c.kind,
                    self_intersection: c.self_intersection.clone(),
                    a_value: c.a_value.clone(),
                })
                .collect(),
            gram: m.gram.rows().to_vec(),
            points: m
                .points
                .iter()
                .map(|p| {
                    let h = host_of(&p.blowup);
                    RawPoint {
                        label: p.label.clone(),
                        flag: h.generator_name(p.flag).to_string(),
                        incident: names(h, &p.incident),
                        a_point: p.a_point.clone(),
                        method: p.method,
                        blowup: p.blowup.clone(),
                        expected: p.expected.as_ref().map(|e| match e {
                            Expected::Exact(x) => RawExpected::Exact(crate::rational::fmt_q(x)),
                            Expected::Interval { lower, upper } => RawExpected::Interval {
                                lower: crate::rational::fmt_q(lower),
                                upper: crate::rational::fmt_q(upper),
                            },
                        }),
                    }
                })
                .collect(),
            expected_global_delta: m.expected_global_delta.clone(),
            provenance: m.provenance.clone(),
            auxiliary: m.auxiliary.iter().map(RawModel::from_model).collect(),
            checks: m
                .checks
                .iter()
                .map(|c| {
                    let h = host_of(&c.model);
                    let (kind, interval) = match &c.kind {
                        CheckKind::SDivisor => ("s-divisor", vec![]),
                        CheckKind::SFlagPoint => ("s-flag-point", vec![]),
                        CheckKind::Psq { from, to } => ("psq", vec![from.clone(), to.clone()]),
                    };
                    RawCheck {
                        kind: kind.to_string(),
                        model: c.model.clone(),
                        flag: h.generator_name(c.flag).to_string(),
                        incident: names(h, &c.incident),
                        interval,
                        printed: c.printed.clone(),
                        corrected: c
                            .corrected
                            .as_ref()
                            .map(|v| v.iter().map(crate::rational::fmt_q).collect()),
                        note: c.note.clone(),
                    }
                })
                .collect(),
        }
    }
}

/// Parse a catalog document holding either one model or an array of them.
pub fn from_json(text: &str) -> Result<Vec<SurfaceModel>, CatalogError> {
    match serde_json::from_str::<RawFile>(text) {
        Ok(RawFile::Many(v)) => v.into_iter().map(RawModel::into_model).collect(),
        Ok(RawFile::One(m)) => Ok(vec![m.into_model()?]),
        // The untagged error hides the real location; retry both shapes to
        // surface the more useful diagnostic.
        Err(_) => {
            let trimmed = text.trim_start();
            if trimmed.starts_with('[') {
                serde_json::from_str::<Vec<RawModel>>(text)?;
            } else {
                serde_json::from_str::<RawModel>(text)?;
            }
            Err(CatalogError::Parse {
                line: 0,
                column: 0,
                message: "document is neither a model nor an array of models".into(),
            })
        }
    }
}

pub fn to_json(models: &[SurfaceModel]) -> String {
    let raw: Vec<RawModel> = models.iter().map(RawModel::from_model).collect();
    serde_json::to_string_pretty(&raw).expect("catalog serializes")
}

fn read(path: &Path) -> Result<String, CatalogError> {
    std::fs::read_to_string(path).map_err(|e| CatalogError::Io {
        path: path.display().to_string(),
        source: e,
    })
}

/// Load a single-model file. No validation is performed.
pub fn load_model(path: &Path) -> Result<SurfaceModel, CatalogError> {
    let text = read(path)?;
    let raw: RawModel = serde_json::from_str(&text)?;
    raw.into_model()
}

/// Load a catalog file holding one model or an array of models.
pub fn load_catalog(path: &Path) -> Result<Vec<SurfaceModel>, CatalogError> {
    from_json(&read(path)?)
}
