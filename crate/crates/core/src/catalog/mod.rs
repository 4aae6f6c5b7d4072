//! Surface models: generator bases, Gram matrices, point case splits and the
//! expected values the verifier checks against.

mod build;
mod builtin;
mod schema;
mod validate;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::lattice::{DivisorExpr, GramMatrix};
use crate::rational::Q;

pub use build::{Lattice, ModelBuilder, Pt, TableBuilder};
pub use builtin::builtin_models;
pub use schema::{from_json, load_catalog, load_model, to_json, CatalogError};
pub use validate::{validate_model, ValidationReport, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveKind {
    /// A (−1)- or (−2)-curve on the weak del Pezzo surface.
    NegativeCurve,
    /// Any other smooth rational curve with A = 1 (fibres, rulings, strict
    /// transforms of self-intersection −3, …).
    Curve,
    OrdinaryExceptional,
    WeightedExceptional,
}

impl CurveKind {
    pub fn is_exceptional(self) -> bool {
        matches!(
            self,
            CurveKind::OrdinaryExceptional | CurveKind::WeightedExceptional
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveInfo {
    pub name: String,
    pub kind: CurveKind,
    pub self_intersection: Q,
    pub a_value: Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "estimate-1")]
    Estimate1,
    #[serde(rename = "estimate-2")]
    Estimate2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    Exact(Q),
    Interval { lower: Q, upper: Q },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSpec {
    pub label: String,
    /// Generator index of the flag curve. For estimate-2 points this indexes
    /// the auxiliary model named in `blowup`.
    pub flag: usize,
    pub incident: BTreeMap<usize, u32>,
    pub a_point: Q,
    pub method: Method,
    pub blowup: Option<String>,
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckKind {
    SDivisor,
    SFlagPoint,
    /// Volume polynomial on the segment `[from, to]`, coefficients `[q0, q1, q2]`.
    Psq {
        from: Q,
        to: Q,
    },
}

/// A transcribed intermediate value. When `corrected` is present the printed
/// value is a known misprint and recomputation is expected to land on the
/// corrected one instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub kind: CheckKind,
    pub model: Option<String>,
    pub flag: usize,
    pub incident: BTreeMap<usize, u32>,
    pub printed: Vec<Q>,
    pub corrected: Option<Vec<Q>>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    pub name: String,
    pub degree: Q,
    pub singularities: String,
    pub lines: Option<u32>,
    pub curves: Vec<CurveInfo>,
    pub gram: GramMatrix,
    pub points: Vec<PointSpec>,
    pub expected_global_delta: Option<Q>,
    pub provenance: String,
    pub auxiliary: Vec<SurfaceModel>,
    pub checks: Vec<Check>,
}

impl SurfaceModel {
    pub const ANTICANONICAL: usize = 0;

    pub fn generator_count(&self) -> usize {
        self.curves.len() + 1
    }

    pub fn curve_indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.curves.len()
    }

    /// Curve at generator index `i ≥ 1`.
    pub fn curve(&self, i: usize) -> Option<&CurveInfo> {
        i.checked_sub(1).and_then(|k| self.curves.get(k))
    }

    pub fn generator_name(&self, i: usize) -> &str {
        if i == 0 {
            "-K"
        } else {
            self.curve(i).map(|c| c.name.as_str()).unwrap_or("?")
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.curves
            .iter()
            .position(|c| c.name == name)
            .map(|k| k + 1)
    }

    pub fn is_smooth(&self) -> bool {
        self.singularities.is_empty() || self.singularities == "smooth"
    }

    pub fn auxiliary(&self, name: &str) -> Option<&SurfaceModel> {
        self.auxiliary.iter().find(|m| m.name == name)
    }

    pub fn point(&self, label: &str) -> Option<&PointSpec> {
        self.points.iter().find(|p| p.label == label)
    }

    /// Pullback of the anticanonical class of the underlying Du Val surface:
    /// `−K + Σ (A(E) − 1)·E` over exceptional generators.
    pub fn ray_base(&self) -> DivisorExpr {
        let mut d = DivisorExpr::generator(Self::ANTICANONICAL);
        for i in self.curve_indices() {
            let c = self.curve(i).expect("index in range");
            if c.kind.is_exceptional() {
                d.add_term(i, &(&c.a_value - Q::one()));
            }
        }
        d
    }

    /// `A_X(E)` for a generator.
    pub fn a_divisor(&self, i: usize) -> Q {
        self.curve(i)
            .map(|c| c.a_value.clone())
            .unwrap_or_else(Q::zero)
    }

    /// Number of (−1)-curves among the negative curves, i.e. lines on the
    /// anticanonical model.
    pub fn count_lines(&self) -> usize {
        self.curves
            .iter()
            .filter(|c| c.kind == CurveKind::NegativeCurve && c.self_intersection == -Q::one())
            .count()
    }

    /// This model and all nested auxiliary models, depth first.
    pub fn walk(&self) -> Vec<&SurfaceModel> {
        let mut out = vec![self];
        for a in &self.auxiliary {
            out.extend(a.walk());
        }
        out
    }
}

/// Look a model up by name among `models` and their auxiliaries.
pub fn find_model<'a>(models: &'a [SurfaceModel], name: &str) -> Option<&'a SurfaceModel> {
    models
        .iter()
        .flat_map(|m| m.walk())
        .find(|m| m.name == name)
}
