//! Builders used to transcribe the builtin catalog.
//!
//! Base surfaces and their ordinary blowups are written as classes in an
//! ambient lattice (`H, e1, …` for blowups of the plane) and the Gram matrix
//! is computed from the ambient form. Models that are not blowups of the
//! plane at smooth points (the weighted blowup) are written as explicit
//! intersection tables.

use std::collections::BTreeMap;

use super::{Check, CheckKind, CurveInfo, CurveKind, Expected, Method, PointSpec, SurfaceModel};
use crate::lattice::GramMatrix;
use crate::rational::{parse_q, q, Q};

fn rat(s: &str) -> Q {
    parse_q(s).unwrap_or_else(|e| panic!("bad rational literal `{s}`: {e}"))
}

/// Integral lattice with a symmetric form and a distinguished anticanonical
/// vector.
#[derive(Debug, Clone)]
pub struct Lattice {
    basis: Vec<String>,
    form: Vec<Vec<i64>>,
    anticanonical: Vec<i64>,
}

impl Lattice {
    /// `Z^{1,n}` with basis `H, e1, …, en` and `−K = 3H − Σ ei`.
    pub fn plane(n: usize) -> Self {
        let mut basis = vec!["H".to_string()];
        basis.extend((1..=n).map(|i| format!("e{i}")));
        let form = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        if i != j {
                            0
                        } else if i == 0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect()
            })
            .collect();
        let mut k = vec![-1; n + 1];
        k[0] = 3;
        Self {
            basis,
            form,
            anticanonical: k,
        }
    }

    /// Quadric blown up in `n` points: rulings `l1, l2` with `l1·l2 = 1`,
    /// exceptional `e1..en`, `−K = 2l1 + 2l2 − Σ ei`.
    pub fn quadric(n: usize) -> Self {
        let mut basis = vec!["l1".to_string(), "l2".to_string()];
        basis.extend((1..=n).map(|i| format!("e{i}")));
        let d = n + 2;
        let mut form = vec![vec![0; d]; d];
        form[0][1] = 1;
        form[1][0] = 1;
        for (i, row) in form.iter_mut().enumerate().skip(2) {
            row[i] = -1;
        }
        let mut k = vec![-1; d];
        k[0] = 2;
        k[1] = 2;
        Self {
            basis,
            form,
            anticanonical: k,
        }
    }

    /// Second Hirzebruch surface: negative section `s` and fibre `f`,
    /// `−K = 2s + 4f`.
    pub fn hirzebruch2() -> Self {
        Self {
            basis: vec!["s".into(), "f".into()],
            form: vec![vec![-2, 1], vec![1, 0]],
            anticanonical: vec![2, 4],
        }
    }

    /// Parse a class such as `2H-e1-e2-e3` or `l1-e1`.
    pub fn class(&self, s: &str) -> Vec<i64> {
        let mut v = vec![0i64; self.basis.len()];
        let mut rest = s.trim();
        if rest.is_empty() {
            panic!("empty class");
        }
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body[1..]
                .find(['+', '-'])
                .map(|k| k + 1)
                .unwrap_or(body.len());
            let term = body[..end].trim();
            rest = body[end..].trim();
            let split = term
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or_else(|| panic!("class term `{term}` has no symbol"));
            let coeff: i64 = if split == 0 {
                1
            } else {
                term[..split].parse().expect("digits")
            };
            let sym = &term[split..];
            let k = self
                .basis
                .iter()
                .position(|b| b == sym)
                .unwrap_or_else(|| panic!("unknown basis symbol `{sym}` in `{s}`"));
            v[k] += sign * coeff;
        }
        v
    }

    pub fn dot(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                s += x * y * self.form[i][j];
            }
        }
        s
    }

    pub fn anticanonical(&self) -> &[i64] {
        &self.anticanonical
    }
}

/// Point-spec builder. Names are resolved when the owning model is built.
#[derive(Debug, Clone)]
pub struct Pt {
    label: String,
    flag: String,
    incident: Vec<(String, u32)>,
    a_point: Q,
    method: Method,
    blowup: Option<String>,
    expected: Option<Expected>,
}

impl Pt {
    /// Estimate-1 point on the flag curve `flag`.
    pub fn on(label: &str, flag: &str) -> Self {
        Self {
            label: label.into(),
            flag: flag.into(),
            incident: vec![],
            a_point: q(1),
            method: Method::Estimate1,
            blowup: None,
            expected: None,
        }
    }

    /// Estimate-2 point: exceptional curve `flag` on the auxiliary model `blowup`.
    pub fn blown(label: &str, blowup: &str, flag: &str) -> Self {
        Self {
            method: Method::Estimate2,
            blowup: Some(blowup.into()),
            ..Self::on(label, flag)
        }
    }

    pub fn meets(mut self, curve: &str) -> Self {
        self.incident.push((curve.into(), 1));
        self
    }

    pub fn a(mut self, a: &str) -> Self {
        self.a_point = rat(a);
        self
    }

    pub fn exact(mut self, v: &str) -> Self {
        self.expected = Some(Expected::Exact(rat(v)));
        self
    }

    pub fn between(mut self, lo: &str, hi: &str) -> Self {
        self.expected = Some(Expected::Interval {
            lower: rat(lo),
            upper: rat(hi),
        });
        self
    }
}

#[derive(Debug, Clone)]
struct CheckSpec {
    kind: CheckKind,
    model: Option<String>,
    flag: String,
    incident: Vec<String>,
    printed: Vec<Q>,
    corrected: Option<Vec<Q>>,
    note: String,
}

/// Shared header fields and resolution logic for both builders.
#[derive(Debug, Clone, Default)]
struct Common {
    name: String,
    singularities: String,
    lines: Option<u32>,
    points: Vec<Pt>,
    checks: Vec<CheckSpec>,
    auxiliary: Vec<SurfaceModel>,
    expected: Option<Q>,
    provenance: String,
}

fn resolve_name(m: &SurfaceModel, name: &str) -> usize {
    m.index_of(name)
        .unwrap_or_else(|| panic!("model {}: unknown curve `{name}`", m.name))
}

impl Common {
    fn finish(self, curves: Vec<CurveInfo>, gram: GramMatrix) -> SurfaceModel {
        let mut m = SurfaceModel {
            name: self.name,
            degree: gram.get(0, 0).clone(),
            singularities: self.singularities,
            lines: self.lines,
            curves,
            gram,
            points: vec![],
            expected_global_delta: self.expected,
            provenance: self.provenance,
            auxiliary: self.auxiliary,
            checks: vec![],
        };
        let host = |m: &SurfaceModel, b: &Option<String>| -> SurfaceModel {
            match b {
                None => m.clone(),
                Some(b) => m
                    .auxiliary(b)
                    .unwrap_or_else(|| panic!("model {}: unknown auxiliary `{b}`", m.name))
                    .clone(),
            }
        };
        for p in self.points {
            let h = host(&m, &p.blowup);
            let flag = resolve_name(&h, &p.flag);
            let incident: BTreeMap<usize, u32> = p
                .incident
                .iter()
                .map(|(n, k)| (resolve_name(&h, n), *k))
                .collect();
            m.points.push(PointSpec {
                label: p.label,
                flag,
                incident,
                a_point: p.a_point,
                method: p.method,
                blowup: p.blowup,
                expected: p.expected,
            });
        }
        for c in self.checks {
            let h = host(&m, &c.model);
            let flag = resolve_name(&h, &c.flag);
            let incident = c
                .incident
                .iter()
                .map(|n| (resolve_name(&h, n), 1))
                .collect();
            m.checks.push(Check {
                kind: c.kind,
                model: c.model,
                flag,
                incident,
                printed: c.printed,
                corrected: c.corrected,
                note: c.note,
            });
        }
        m
    }
}

macro_rules! common_setters {
    () => {
        pub fn singularities(mut self, s: &str) -> Self {
            self.common.singularities = s.into();
            self
        }

        pub fn lines(mut self, n: u32) -> Self {
            self.common.lines = Some(n);
            self
        }

        pub fn point(mut self, p: Pt) -> Self {
            self.common.points.push(p);
            self
        }

        pub fn aux(mut self, m: SurfaceModel) -> Self {
            self.common.auxiliary.push(m);
            self
        }

        pub fn delta(mut self, v: &str) -> Self {
            self.common.expected = Some(rat(v));
            self
        }

        pub fn provenance(mut self, s: &str) -> Self {
            self.common.provenance = s.into();
            self
        }

        /// Transcribed `S(E)` for a flag of this model (or of `model`).
        pub fn check_s(self, model: Option<&str>, flag: &str, printed: &str) -> Self {
            self.check(CheckKind::SDivisor, model, flag, &[], &[printed], None, "")
        }

        /// Transcribed `S(W^C; P)`.
        pub fn check_sw(
            self,
            model: Option<&str>,
            flag: &str,
            incident: &[&str],
            printed: &str,
        ) -> Self {
            self.check(
                CheckKind::SFlagPoint,
                model,
                flag,
                incident,
                &[printed],
                None,
                "",
            )
        }

        /// Transcribed volume polynomial `[q0, q1, q2]` on `[from, to]`.
        pub fn check_psq(
            self,
            model: Option<&str>,
            flag: &str,
            from: &str,
            to: &str,
            printed: [&str; 3],
        ) -> Self {
            self.check(
                CheckKind::Psq {
                    from: rat(from),
                    to: rat(to),
                },
                model,
                flag,
                &[],
                &printed,
                None,
                "",
            )
        }

        #[allow(clippy::too_many_arguments)]
        pub fn check(
            mut self,
            kind: CheckKind,
            model: Option<&str>,
            flag: &str,
            incident: &[&str],
            printed: &[&str],
            corrected: Option<&[&str]>,
            note: &str,
        ) -> Self {
            self.common.checks.push(CheckSpec {
                kind,
                model: model.map(str::to_string),
                flag: flag.into(),
                incident: incident.iter().map(|s| s.to_string()).collect(),
                printed: printed.iter().map(|s| rat(s)).collect(),
                corrected: corrected.map(|v| v.iter().map(|s| rat(s)).collect()),
                note: note.into(),
            });
            self
        }
    };
}

/// Model given by classes in an ambient [`Lattice`].
pub struct ModelBuilder {
    lattice: Lattice,
    gens: Vec<(String, Vec<i64>, bool)>,
    common: Common,
}

impl ModelBuilder {
    pub fn new(lattice: Lattice, name: &str) -> Self {
        Self {
            lattice,
            gens: vec![],
            common: Common {
                name: name.into(),
                ..Common::default()
            },
        }
    }

    /// A curve of A-value one; its kind follows from the self-intersection.
    pub fn curve(mut self, name: &str, class: &str) -> Self {
        let v = self.lattice.class(class);
        self.gens.push((name.into(), v, false));
        self
    }

    /// Several curves at once, `(name, class)` pairs.
    pub fn curves(mut self, list: &[(&str, &str)]) -> Self {
        for (n, c) in list {
            self = self.curve(n, c);
        }
        self
    }

    /// Exceptional curve of an ordinary blowup (A = 2).
    pub fn exceptional(mut self, name: &str, class: &str) -> Self {
        let v = self.lattice.class(class);
        self.gens.push((name.into(), v, true));
        self
    }

    common_setters!();

    pub fn build(self) -> SurfaceModel {
        let lat = &self.lattice;
        let mut vecs = vec![lat.anticanonical().to_vec()];
        let mut curves = Vec::new();
        for (name, v, exc) in &self.gens {
            let sq = lat.dot(v, v);
            let kind = if *exc {
                CurveKind::OrdinaryExceptional
            } else if sq == -1 || sq == -2 {
                CurveKind::NegativeCurve
            } else {
                CurveKind::Curve
            };
            curves.push(CurveInfo {
                name: name.clone(),
                kind,
                self_intersection: q(sq),
                a_value: q(if *exc { 2 } else { 1 }),
            });
            vecs.push(v.clone());
        }
        let gram = GramMatrix::new(
            vecs.iter()
                .map(|a| vecs.iter().map(|b| q(lat.dot(a, b))).collect())
                .collect(),
        );
        self.common.finish(curves, gram)
    }
}

/// Model given by an explicit intersection table between curves plus the
/// anticanonical class written in terms of the curves.
pub struct TableBuilder {
    curves: Vec<CurveInfo>,
    meets: Vec<(String, String, Q)>,
    anticanonical: Vec<(String, Q)>,
    common: Common,
}

impl TableBuilder {
    pub fn new(name: &str) -> Self {
        Self {
            curves: vec![],
            meets: vec![],
            anticanonical: vec![],
            common: Common {
                name: name.into(),
                ..Common::default()
            },
        }
    }

    pub fn gen(mut self, name: &str, kind: CurveKind, self_int: &str, a_value: &str) -> Self {
        self.curves.push(CurveInfo {
            name: name.into(),
            kind,
            self_intersection: rat(self_int),
            a_value: rat(a_value),
        });
        self
    }

    /// Off-diagonal intersection number; unlisted pairs are disjoint.
    pub fn meet(mut self, a: &str, b: &str, x: &str) -> Self {
        self.meets.push((a.into(), b.into(), rat(x)));
        self
    }

    /// `−K` of this surface as a combination of the listed curves.
    pub fn anticanonical(mut self, terms: &[(&str, &str)]) -> Self {
        self.anticanonical = terms.iter().map(|(n, c)| (n.to_string(), rat(c))).collect();
        self
    }

    common_setters!();

    pub fn build(self) -> SurfaceModel {
        let n = self.curves.len();
        let idx = |s: &str| -> usize {
            self.curves
                .iter()
                .position(|c| c.name == s)
                .unwrap_or_else(|| panic!("table {}: unknown curve `{s}`", self.common.name))
        };
        let mut g = vec![vec![q(0); n]; n];
        for (i, c) in self.curves.iter().enumerate() {
            g[i][i] = c.self_intersection.clone();
        }
        for (a, b, x) in &self.meets {
            let (i, j) = (idx(a), idx(b));
            g[i][j] = x.clone();
            g[j][i] = x.clone();
        }
        let mut k = vec![q(0); n];
        for (name, c) in &self.anticanonical {
            k[idx(name)] += c;
        }
        let row: Vec<Q> = (0..n)
            .map(|j| (0..n).map(|i| &k[i] * &g[i][j]).sum())
            .collect();
        let kk: Q = (0..n).map(|j| &k[j] * &row[j]).sum();
        let mut full = vec![vec![q(0); n + 1]; n + 1];
        full[0][0] = kk;
        for j in 0..n {
            full[0][j + 1] = row[j].clone();
            full[j + 1][0] = row[j].clone();
            for i in 0..n {
                full[i + 1][j + 1] = g[i][j].clone();
            }
        }
        self.common.finish(self.curves, GramMatrix::new(full))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_parsing_and_form() {
        let l = Lattice::plane(3);
        assert_eq!(l.class("2H-e1-e2-e3"), vec![2, -1, -1, -1]);
        assert_eq!(l.class("e1 - e2"), vec![0, 1, -1, 0]);
        let k = l.anticanonical().to_vec();
        assert_eq!(l.dot(&k, &k), 6);
        let line = l.class("H-e1-e2");
        assert_eq!((l.dot(&line, &line), l.dot(&k, &line)), (-1, 1));
        let q = Lattice::quadric(1);
        assert_eq!(q.dot(q.anticanonical(), q.anticanonical()), 7);
    }

    #[test]
    #[should_panic(expected = "unknown basis symbol")]
    fn unknown_symbol_panics() {
        Lattice::plane(2).class("H-e7");
    }
}
