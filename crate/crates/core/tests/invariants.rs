mod support;

use std::collections::BTreeMap;
use std::sync::LazyLock;

use delta_core::invariants::{
    a_divisor, a_point, h_profile, s_flag_of_profile, s_of_profile, tau, PiecewisePoly,
};
use delta_core::poly::Poly;
use delta_core::zariski::flag_profile;
use delta_core::{Evaluator, Q};
use proptest::prelude::*;
use support::{all_models, definite_subsets, idx, incident, model, q, RayOracle};

fn s_of(name: &str, flag: &str) -> Q {
    let m = model(name);
    Evaluator::new().s_divisor(&m, idx(&m, flag)).unwrap()
}

fn sw_of(name: &str, flag: &str, inc: &[&str]) -> Q {
    let m = model(name);
    Evaluator::new()
        .s_flag_point(&m, idx(&m, flag), &incident(&m, inc))
        .unwrap()
}

fn tau_of(name: &str, flag: &str) -> Q {
    let m = model(name);
    tau(&flag_profile(&m, idx(&m, flag)).unwrap())
}

fn poly(c: &[&str]) -> Poly {
    Poly::new(c.iter().map(|x| q(x)).collect())
}

#[test]
fn thresholds() {
    assert_eq!(tau_of("dp8-F2", "f"), q("4"));
    assert_eq!(tau_of("dp8-P1xP1", "L1"), q("2"));
    assert_eq!(tau_of("dp4-smooth-wblowup", "Ebar"), q("4"));
}

#[test]
fn divisor_integrals() {
    assert_eq!(s_of("dp8-F1", "s"), q("7/6"));
    assert_eq!(s_of("dp8-F2", "f"), q("4/3"));
    assert_eq!(s_of("dp7-smooth-blowup", "EP"), q("38/21"));
}

#[test]
fn flag_point_integrals() {
    assert_eq!(sw_of("dp8-F1", "s", &[]), q("13/12"));
    assert_eq!(sw_of("dp8-P1xP1", "L1", &[]), q("1"));
    assert_eq!(sw_of("dp8-P1xP1", "L1", &["L2"]), q("1"));
    assert_eq!(sw_of("dp6-A1", "L123", &["E1"]), q("10/9"));
}

#[test]
fn h_on_f1_section() {
    let m = model("dp8-F1");
    let s = idx(&m, "s");
    let h = h_profile(&flag_profile(&m, s).unwrap(), s, &BTreeMap::new());
    assert_eq!(h.breakpoints, vec![q("0"), q("2")]);
    // (1 + v)²/2
    assert_eq!(h.pieces, vec![poly(&["1/2", "1", "1/2"])]);
}

#[test]
fn h_on_dp6_a1_line_through_exceptional_point() {
    let m = model("dp6-A1");
    let l = idx(&m, "L123");
    let h = h_profile(&flag_profile(&m, l).unwrap(), l, &incident(&m, &["E1"]));
    assert_eq!(h.breakpoints, vec![q("0"), q("1"), q("3")]);
    // 2v², then (v − 1)(3 − v) + (3 − v)²/2
    assert_eq!(h.pieces[0], poly(&["0", "0", "2"]));
    assert_eq!(h.pieces[1], poly(&["3/2", "1", "-1/2"]));
}

#[test]
fn h_ignores_incidence_without_negative_part() {
    let m = model("dp8-P1xP1");
    let l = idx(&m, "L1");
    let p = flag_profile(&m, l).unwrap();
    assert_eq!(
        h_profile(&p, l, &BTreeMap::new()),
        h_profile(&p, l, &incident(&m, &["L2"]))
    );
}

#[test]
fn log_discrepancies() {
    let f1 = model("dp8-F1");
    assert_eq!(a_divisor(&f1, idx(&f1, "s")), q("1"));
    let b = model("dp7-smooth-blowup");
    assert_eq!(a_divisor(&b, idx(&b, "EP")), q("2"));
    let w = model("dp4-smooth-wblowup");
    assert_eq!(a_divisor(&w, idx(&w, "Ebar")), q("3"));
    assert_eq!(a_point(w.point("Ebar.sing").unwrap()), q("1/2"));
    assert_eq!(a_point(b.point("EP").unwrap()), q("1"));
    assert_eq!(a_point(b.point("EP.L1P").unwrap()), q("1"));
}

fn flags_of(m: &delta_core::SurfaceModel) -> Vec<usize> {
    let mut f: Vec<usize> = m
        .points
        .iter()
        .filter(|p| p.blowup.is_none())
        .map(|p| p.flag)
        .collect();
    f.sort_unstable();
    f.dedup();
    f
}

#[test]
fn s_below_threshold_for_every_flag() {
    let ev = Evaluator::new();
    for m in all_models() {
        for f in flags_of(&m) {
            let p = ev.profile(&m, f).unwrap();
            assert!(
                s_of_profile(&p) < p.tau,
                "{} {}",
                m.name,
                m.generator_name(f)
            );
        }
    }
}

#[test]
fn incidence_never_lowers_flag_integral() {
    let ev = Evaluator::new();
    for m in all_models() {
        for f in flags_of(&m) {
            let p = ev.profile(&m, f).unwrap();
            let base = s_flag_of_profile(&p, f, &BTreeMap::new());
            for d in m.curve_indices().filter(|&d| d != f) {
                let one = BTreeMap::from([(d, 1)]);
                assert!(
                    s_flag_of_profile(&p, f, &one) >= base,
                    "{} {}",
                    m.name,
                    m.generator_name(d)
                );
            }
        }
    }
}

#[test]
fn volume_integral_matches_oracle_simpson() {
    // Simpson's rule is exact on quadratics; the three samples per segment
    // come from the brute-force decomposition, not from the walker.
    for name in [
        "dp8-F1",
        "dp7-smooth-blowup",
        "dp6-A1A2",
        "dp5-A4",
        "dp4-D5",
        "dp4-smooth-wblowup",
    ] {
        let m = model(name);
        let subsets = definite_subsets(&m);
        for f in flags_of(&m) {
            let p = flag_profile(&m, f).unwrap();
            let o = RayOracle::for_flag(&m, &subsets, f);
            let vol = |v: &Q| {
                if *v == p.tau {
                    q("0")
                } else {
                    o.decompose(v).psq
                }
            };
            let mut total = q("0");
            for s in &p.segments {
                let mid = (&s.v_lo + &s.v_hi) / q("2");
                total += (&s.v_hi - &s.v_lo) / q("6")
                    * (vol(&s.v_lo) + q("4") * vol(&mid) + vol(&s.v_hi));
            }
            assert_eq!(
                total / &p.base_square,
                s_of_profile(&p),
                "{name} {}",
                m.generator_name(f)
            );
        }
    }
}

fn refine(h: &PiecewisePoly, cuts: &[(usize, u32)]) -> PiecewisePoly {
    let mut bp = vec![h.breakpoints[0].clone()];
    let mut pieces = Vec::new();
    for (k, piece) in h.pieces.iter().enumerate() {
        let (lo, hi) = (&h.breakpoints[k], &h.breakpoints[k + 1]);
        let mut ts: Vec<u32> = cuts.iter().filter(|c| c.0 == k).map(|c| c.1).collect();
        ts.sort_unstable();
        ts.dedup();
        for t in ts {
            bp.push(lo + (hi - lo) * Q::new(t.into(), 100.into()));
            pieces.push(piece.clone());
        }
        bp.push(hi.clone());
        pieces.push(piece.clone());
    }
    PiecewisePoly {
        breakpoints: bp,
        pieces,
    }
}

static PROFILES: LazyLock<Vec<PiecewisePoly>> = LazyLock::new(|| {
    let cases: [(&str, &str, &[&str]); 4] = [
        ("dp8-F1", "f", &[]),
        ("dp6-A1", "L123", &["E1"]),
        ("dp4-smooth-wblowup", "Ebar", &["Q"]),
        ("dp5-A4", "E3", &["E4"]),
    ];
    cases
        .iter()
        .map(|(name, flag, inc)| {
            let m = model(name);
            let f = idx(&m, flag);
            h_profile(&flag_profile(&m, f).unwrap(), f, &incident(&m, inc))
        })
        .collect()
});

proptest! {
    #[test]
    fn integral_invariant_under_refinement(
        which in 0usize..4,
        cuts in prop::collection::vec((0usize..3, 1u32..100), 0..8),
    ) {
        let h = &PROFILES[which];
        prop_assert_eq!(refine(h, &cuts).integral(), h.integral());
    }
}
