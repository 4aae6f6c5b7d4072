use crate::catalog::{CheckKind, CurveKind, Lattice, ModelBuilder, Pt, SurfaceModel, TableBuilder};

pub fn models() -> Vec<SurfaceModel> {
    vec![
        smooth(),
        a1(),
        two_a1(),
        two_a1_eight_lines(),
        a2(),
        three_a1(),
        a1a2(),
        a3(),
        a3_four_lines(),
        four_a1(),
        two_a1a2(),
        a1a3(),
        a4(),
        d4(),
        two_a1a3(),
        d5(),
    ]
}

/// Blowup at a point where two (−1)-curves cross. Both become (−2)-curves;
/// `third` is the (−1)-curve through the point in the remaining direction.
fn crossing(name: &str, a: &str, b: &str, third: &str) -> SurfaceModel {
    let mut t = TableBuilder::new(name)
        .gen("EP", CurveKind::OrdinaryExceptional, "-1", "2")
        .gen(a, CurveKind::NegativeCurve, "-2", "1")
        .gen(b, CurveKind::NegativeCurve, "-2", "1")
        .gen(third, CurveKind::NegativeCurve, "-1", "1")
        .anticanonical(&[("EP", "2"), (a, "1"), (b, "1"), (third, "1")])
        .point(Pt::on("EP", "EP"));
    for c in [a, b, third] {
        t = t
            .meet("EP", c, "1")
            .point(Pt::on(&format!("EP.{c}"), "EP").meets(c));
    }
    t.provenance("blowup of the crossing point of two lines")
        .build()
}

/// Weighted blowup of a point on a single (−1)-curve `on`, with weights taken
/// along the curve `tangent` tangent to it there. `Ebar` carries an `A1` point.
fn weighted(name: &str, on: &str, tangent: &str) -> SurfaceModel {
    TableBuilder::new(name)
        .gen("Ebar", CurveKind::WeightedExceptional, "-1/2", "3")
        .gen(on, CurveKind::Curve, "-3", "1")
        .gen(tangent, CurveKind::NegativeCurve, "-1", "1")
        .meet("Ebar", on, "1")
        .meet("Ebar", tangent, "1")
        .anticanonical(&[("Ebar", "2"), (on, "1"), (tangent, "1")])
        .point(Pt::on("Ebar", "Ebar"))
        .point(Pt::on("Ebar.sing", "Ebar").a("1/2"))
        .point(Pt::on(&format!("Ebar.{on}"), "Ebar").meets(on))
        .point(Pt::on(&format!("Ebar.{tangent}"), "Ebar").meets(tangent))
        .provenance("weighted blowup of a point on one line, contracting the (-2)-curve")
        .build()
}

/// Checks on the crossing-point template hanging off `base`.
fn x_checks(b: ModelBuilder, base: &str) -> ModelBuilder {
    let x = format!("{base}-xblowup");
    b.check_s(Some(&x), "EP", "3/2")
        .check_psq(Some(&x), "EP", "0", "1", ["4", "0", "-1"])
        .check_psq(Some(&x), "EP", "1", "2", ["5", "-2", "0"])
        .check_psq(Some(&x), "EP", "2", "3", ["9", "-6", "1"])
}

/// Checks on the weighted template hanging off `base`.
fn w_checks(b: ModelBuilder, base: &str) -> ModelBuilder {
    let w = format!("{base}-wblowup");
    b.check_s(Some(&w), "Ebar", "13/6")
        .check_psq(Some(&w), "Ebar", "0", "1", ["4", "0", "-1/2"])
        .check_psq(Some(&w), "Ebar", "1", "3", ["13/3", "-2/3", "-1/6"])
        .check_psq(Some(&w), "Ebar", "3", "4", ["40/3", "-20/3", "5/6"])
        .check_sw(Some(&w), "Ebar", &[], "11/36")
}

/// Checks on the generic-point blowup of `base`.
fn g_checks(b: ModelBuilder, base: &str) -> ModelBuilder {
    let g = format!("{base}-blowup");
    b.check_s(Some(&g), "EP", "4/3")
        .check_psq(Some(&g), "EP", "0", "2", ["4", "0", "-1"])
        .check_sw(Some(&g), "EP", &[], "2/3")
}

fn all_checks(b: ModelBuilder, base: &str) -> ModelBuilder {
    g_checks(w_checks(x_checks(b, base), base), base)
}

/// Generic blowup where `x`, `y` and `EP` are three (−1)-curves meeting
/// pairwise, summing to the anticanonical class.
fn triangle(base: &str, x: &str, y: &str) -> SurfaceModel {
    TableBuilder::new(&format!("{base}-blowup"))
        .gen("EP", CurveKind::OrdinaryExceptional, "-1", "2")
        .gen(x, CurveKind::NegativeCurve, "-1", "1")
        .gen(y, CurveKind::NegativeCurve, "-1", "1")
        .meet("EP", x, "1")
        .meet("EP", y, "1")
        .meet(x, y, "1")
        .anticanonical(&[("EP", "1"), (x, "1"), (y, "1")])
        .point(Pt::on("EP", "EP"))
        .provenance("blowup of a point off the negative curves")
        .build()
}

/// Generic blowup given by classes, the new point being `e6`.
fn lattice_blowup(base: &str, curves: &[(&str, &str)]) -> SurfaceModel {
    ModelBuilder::new(Lattice::plane(6), &format!("{base}-blowup"))
        .curves(curves)
        .exceptional("EP", "e6")
        .point(Pt::on("EP", "EP"))
        .provenance("blowup of a point off the negative curves")
        .build()
}

fn smooth() -> SurfaceModel {
    let mut curves: Vec<(String, String)> = (1..=5)
        .map(|i| (format!("E{i}"), format!("e{i}")))
        .collect();
    for i in 1..=5 {
        for j in i + 1..=5 {
            curves.push((format!("L{i}{j}"), format!("H-e{i}-e{j}")));
        }
    }
    curves.push(("Q".into(), "2H-e1-e2-e3-e4-e5".into()));
    let curves: Vec<(&str, &str)> = curves
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let generic = TableBuilder::new("dp4-smooth-blowup")
        .gen("EP", CurveKind::OrdinaryExceptional, "-1", "2")
        .gen("Q1", CurveKind::NegativeCurve, "-1", "1")
        .gen("L1P", CurveKind::NegativeCurve, "-1", "1")
        .meet("EP", "Q1", "1")
        .meet("EP", "L1P", "1")
        .meet("Q1", "L1P", "1")
        .anticanonical(&[("EP", "1"), ("Q1", "1"), ("L1P", "1")])
        .point(Pt::on("EP", "EP"))
        .provenance("blowup of a point off the lines")
        .build();
    let b = ModelBuilder::new(Lattice::plane(5), "dp4-smooth")
        .singularities("smooth")
        .lines(16)
        .curves(&curves)
        .point(Pt::blown("Q.E1", "dp4-smooth-xblowup", "EP").exact("4/3"))
        .point(Pt::blown("Q", "dp4-smooth-wblowup", "Ebar").exact("18/13"))
        .point(Pt::blown("general", "dp4-smooth-blowup", "EP").exact("3/2"))
        .aux(crossing("dp4-smooth-xblowup", "Q", "E1", "L1"))
        .aux(weighted("dp4-smooth-wblowup", "Q", "LP"))
        .aux(generic)
        .delta("4/3");
    all_checks(b, "dp4-smooth")
        .check_sw(Some("dp4-smooth-xblowup"), "EP", &["Q"], "17/24")
        .check_sw(Some("dp4-smooth-xblowup"), "EP", &["L1"], "1/2")
        .check_sw(Some("dp4-smooth-wblowup"), "Ebar", &["Q"], "17/24")
        .check_sw(Some("dp4-smooth-wblowup"), "Ebar", &["LP"], "3/8")
        .provenance("plane blown up in five general points")
        .build()
}

fn a1() -> SurfaceModel {
    let base = "dp4-A1";
    let curves = [
        ("E1", "e1"),
        ("E2", "e2"),
        ("E3", "e3"),
        ("E4", "e4"),
        ("E5", "e5"),
        ("L123", "H-e1-e2-e3"),
        ("L14", "H-e1-e4"),
        ("L15", "H-e1-e5"),
        ("L24", "H-e2-e4"),
        ("L25", "H-e2-e5"),
        ("L34", "H-e3-e4"),
        ("L35", "H-e3-e5"),
        ("L45", "H-e4-e5"),
    ];
    let generic = TableBuilder::new("dp4-A1-blowup")
        .gen("EP", CurveKind::OrdinaryExceptional, "-1", "2")
        .gen("L123", CurveKind::NegativeCurve, "-2", "1")
        .gen("L45", CurveKind::NegativeCurve, "-1", "1")
        .gen("E1", CurveKind::NegativeCurve, "-1", "1")
        .gen("L1P", CurveKind::NegativeCurve, "-1", "1")
        .meet("L123", "L45", "1")
        .meet("L123", "E1", "1")
        .meet("L45", "L1P", "1")
        .meet("E1", "L1P", "1")
        .meet("EP", "L1P", "1")
        .anticanonical(&[("L123", "1"), ("L45", "1"), ("E1", "1"), ("L1P", "1")])
        .point(Pt::on("EP", "EP"))
        .provenance("blowup of a point off the negative curves")
        .build();
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("A1")
        .lines(12)
        .curves(&curves)
        .point(Pt::on("L123", "L123").exact("1"))
        .point(Pt::on("L123.E1", "L123").meets("E1").exact("1"))
        .point(Pt::on("E1", "E1").exact("6/5"))
        .point(Pt::on("E1.L14", "E1").meets("L14").exact("6/5"))
        .point(Pt::blown("E4.L14", "dp4-A1-xblowup", "EP").exact("4/3"))
        .point(Pt::blown("L14", "dp4-A1-wblowup", "Ebar").exact("18/13"))
        .point(Pt::blown("general", "dp4-A1-blowup", "EP").exact("3/2"))
        .aux(crossing("dp4-A1-xblowup", "E4", "L14", "Q4"))
        .aux(weighted("dp4-A1-wblowup", "L14", "QP"))
        .aux(generic)
        .delta("1")
        .check_s(None, "L123", "1")
        .check_psq(None, "L123", "0", "1", ["4", "0", "-2"])
        .check_psq(None, "L123", "1", "2", ["8", "-8", "2"])
        .check_sw(None, "L123", &["E1"], "5/6")
        .check_s(None, "E1", "5/6")
        .check_psq(None, "E1", "0", "1", ["4", "-2", "-1/2"])
        .check_psq(None, "E1", "1", "2", ["6", "-6", "3/2"])
        .check_sw(None, "E1", &["L14"], "17/24");
    all_checks(b, base)
        .provenance("plane blown up in five points, three of them collinear")
        .build()
}

fn two_a1() -> SurfaceModel {
    let base = "dp4-2A1";
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("2A1")
        .lines(9)
        .curves(&[
            ("E1", "e1-e5"),
            ("L25", "H-e1-e2-e5"),
            ("E2", "e2"),
            ("E3", "e3"),
            ("E4", "e4"),
            ("E5", "e5"),
            ("L13", "H-e1-e3"),
            ("L14", "H-e1-e4"),
            ("L23", "H-e2-e3"),
            ("L24", "H-e2-e4"),
            ("L34", "H-e3-e4"),
        ])
        .point(Pt::on("E1", "E1").exact("1"))
        .point(Pt::on("E1.L13", "E1").meets("L13").exact("1"))
        .point(Pt::on("E1.E5", "E1").meets("E5").exact("1"))
        .point(Pt::on("L25", "L25").exact("1"))
        .point(Pt::on("E2", "E2").exact("6/5"))
        .point(Pt::on("E2.L23", "E2").meets("L23").exact("6/5"))
        .point(Pt::on("E5", "E5").exact("1"))
        .point(Pt::blown("E4.L24", "dp4-2A1-xblowup", "EP").exact("4/3"))
        .point(Pt::blown("L24", "dp4-2A1-wblowup", "Ebar").exact("18/13"))
        .point(Pt::blown("general", "dp4-2A1-blowup", "EP").exact("3/2"))
        .aux(crossing("dp4-2A1-xblowup", "E4", "L24", "Q14"))
        .aux(weighted("dp4-2A1-wblowup", "L24", "Q1P"))
        .aux(triangle(base, "Q1", "L2P"))
        .delta("1")
        .check_s(None, "E1", "1")
        .check_psq(None, "E1", "0", "1", ["4", "0", "-2"])
        .check_psq(None, "E1", "1", "2", ["8", "-8", "2"])
        .check_sw(None, "E1", &[], "2/3")
        .check_sw(None, "E1", &["L13"], "5/6")
        .check_sw(None, "E1", &["E5"], "1")
        .check_s(None, "E2", "5/6")
        .check_sw(None, "E2", &["L23"], "17/24")
        .check_s(None, "E5", "1")
        .check_psq(None, "E5", "0", "2", ["4", "-2", "0"])
        .check_sw(None, "E5", &[], "1/2");
    all_checks(b, base)
        .provenance("plane blown up in four points and a point infinitely near one of them on a line through two")
        .build()
}

fn two_a1_eight_lines() -> SurfaceModel {
    let base = "dp4-2A1-8lines";
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("2A1")
        .lines(8)
        .curves(&[
            ("E1", "e1"),
            ("E2", "e2"),
            ("E3", "e3"),
            ("E4", "e4-e5"),
            ("E5", "e5"),
            ("L123", "H-e1-e2-e3"),
            ("L14", "H-e1-e4"),
            ("L24", "H-e2-e4"),
            ("L34", "H-e3-e4"),
            ("L5", "H-e4-e5"),
        ])
        .point(Pt::on("E4", "E4").exact("1"))
        .point(Pt::on("E4.L14", "E4").meets("L14").exact("1"))
        .point(Pt::on("L123", "L123").exact("1"))
        .point(Pt::on("E1", "E1").exact("6/5"))
        .point(Pt::on("E1.L14", "E1").meets("L14").exact("6/5"))
        .point(Pt::blown("general", "dp4-2A1-8lines-blowup", "EP").exact("3/2"))
        .aux(triangle(base, "Q1", "L1P"))
        .delta("1")
        .check_s(None, "E4", "1")
        .check_sw(None, "E4", &["L14"], "5/6")
        .check_s(None, "E1", "5/6")
        .check_sw(None, "E1", &["L14"], "5/6");
    g_checks(b, base)
        .provenance("three collinear points, a fourth point and a point infinitely near it")
        .build()
}

fn a2() -> SurfaceModel {
    let base = "dp4-A2";
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("A2")
        .lines(8)
        .curves(&[
            ("E1", "e1"),
            ("E2", "e2"),
            ("E3", "e3-e5"),
            ("E4", "e4"),
            ("E5", "e5"),
            ("L123", "H-e1-e2-e3"),
            ("L14", "H-e1-e4"),
            ("L24", "H-e2-e4"),
            ("L34", "H-e3-e4"),
            ("L5", "H-e3-e5"),
        ])
        .point(Pt::on("E3", "E3").exact("6/7"))
        .point(Pt::on("E3.L34", "E3").meets("L34").exact("6/7"))
        .point(Pt::on("E3.L123", "E3").meets("L123").exact("6/7"))
        .point(Pt::on("L123", "L123").exact("6/7"))
        .point(Pt::on("E1", "E1").exact("8/7"))
        .point(Pt::on("E1.L14", "E1").meets("L14").exact("8/7"))
        .point(Pt::blown("E4.L14", "dp4-A2-xblowup", "EP").exact("4/3"))
        .point(Pt::blown("L14", "dp4-A2-wblowup", "Ebar").exact("18/13"))
        .point(Pt::blown("general", "dp4-A2-blowup", "EP").exact("3/2"))
        .aux(crossing("dp4-A2-xblowup", "E4", "L14", "Q4"))
        .aux(weighted("dp4-A2-wblowup", "L14", "QP"))
        .aux(triangle(base, "Q1", "L1P"))
        .delta("6/7")
        .check_s(None, "E3", "7/6")
        .check_psq(None, "E3", "0", "1", ["4", "0", "-3/2"])
        .check_psq(None, "E3", "1", "2", ["6", "-4", "1/2"])
        .check_sw(None, "E3", &[], "7/12")
        .check_sw(None, "E3", &["L34"], "7/8")
        .check_sw(None, "E3", &["L123"], "7/6")
        .check_s(None, "E1", "7/8")
        .check_psq(None, "E1", "0", "1", ["4", "-2", "-1/3"])
        .check_psq(None, "E1", "1", "3/2", ["5", "-4", "2/3"])
        .check_psq(None, "E1", "3/2", "2", ["8", "-8", "2"])
        .check_sw(None, "E1", &["L14"], "17/24");
    all_checks(b, base)
        .provenance("three collinear points, a fourth point, and a point infinitely near one of the collinear ones")
        .build()
}

fn three_a1() -> SurfaceModel {
    let base = "dp4-3A1";
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("3A1")
        .lines(6)
        .curves(&[
            ("E1", "e1-e4"),
            ("E3", "e3-e5"),
            ("L24", "H-e1-e2-e4"),
            ("E2", "e2"),
            ("E4", "e4"),
            ("E5", "e5"),
            ("L13", "H-e1-e3"),
            ("L23", "H-e2-e3"),
            ("L5", "H-e3-e5"),
        ])
        .point(Pt::on("E1", "E1").exact("1"))
        .point(Pt::on("E1.E4", "E1").meets("E4").exact("1"))
        .point(Pt::on("E3", "E3").exact("1"))
        .point(Pt::on("E3.L13", "E3").meets("L13").exact("1"))
        .point(Pt::on("E3.E5", "E3").meets("E5").exact("1"))
        .point(Pt::on("L24", "L24").exact("1"))
        .point(Pt::on("E4", "E4").exact("1"))
        .point(Pt::on("L13", "L13").exact("1"))
        .point(Pt::on("E5", "E5").exact("6/5"))
        .point(Pt::on("E5.L5", "E5").meets("L5").exact("6/5"))
        .point(Pt::blown("general", "dp4-3A1-blowup", "EP").exact("3/2"))
        .aux(triangle(base, "QP", "L2P"))
        .delta("1")
        .check_s(None, "E1", "1")
        .check_sw(None, "E1", &["E4"], "1")
        .check_s(None, "E3", "1")
        .check_sw(None, "E3", &["L13"], "1")
        .check_s(None, "E5", "5/6")
        .check_sw(None, "E5", &["L5"], "5/6")
        .check_s(None, "E4", "1")
        .check_psq(None, "E4", "0", "2", ["4", "-2", "0"])
        .check_sw(None, "E4", &[], "1/2");
    g_checks(b, base)
        .provenance(
            "three points and two infinitely near points, one of them on a line through two",
        )
        .build()
}

fn a1a2() -> SurfaceModel {
    let base = "dp4-A1A2";
    let generic = TableBuilder::new("dp4-A1A2-blowup")
        .gen("EP", CurveKind::OrdinaryExceptional, "-1", "2")
        .gen("L15", CurveKind::NegativeCurve, "-2", "1")
        .gen("L1P", CurveKind::NegativeCurve, "-1", "1")
        .gen("L3P", CurveKind::NegativeCurve, "-1", "1")
        .gen("E1", CurveKind::NegativeCurve, "-2", "1")
        .meet("EP", "L1P", "1")
        .meet("EP", "L3P", "1")
        .meet("L15", "L3P", "1")
        .meet("L15", "E1", "1")
        .meet("L1P", "E1", "1")
        .anticanonical(&[
            ("EP", "1"),
            ("L15", "1"),
            ("L1P", "1"),
            ("L3P", "1"),
            ("E1", "1"),
        ])
        .point(Pt::on("EP", "EP"))
        .provenance("blowup of a point off the negative curves")
        .build();
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("A1A2")
        .lines(6)
        .curves(&[
            ("E1", "e1-e4"),
            ("E2", "e2-e5"),
            ("L15", "H-e1-e2-e5"),
            ("E3", "e3"),
            ("E4", "e4"),
            ("E5", "e5"),
            ("L13", "H-e1-e3"),
            ("L23", "H-e2-e3"),
            ("L4", "H-e1-e4"),
        ])
        .point(Pt::on("L15", "L15").exact("6/7"))
        .point(Pt::on("L15.E5", "L15").meets("E5").exact("6/7"))
        .point(Pt::on("L15.E1", "L15").meets("E1").exact("6/7"))
        .point(Pt::on("E1", "E1").exact("6/7"))
        .point(Pt::on("E1.L13", "E1").meets("L13").exact("6/7"))
        .point(Pt::on("E2", "E2").exact("1"))
        .point(Pt::on("E2.L23", "E2").meets("L23").exact("1"))
        .point(Pt::on("E5", "E5").exact("6/7"))
        .point(Pt::on("E5.E2", "E5").meets("E2").exact("6/7"))
        .point(Pt::on("E4", "E4").exact("8/7"))
        .point(Pt::on("E4.L4", "E4").meets("L4").exact("8/7"))
        .point(Pt::on("L23", "L23").exact("6/5"))
        .point(Pt::on("L23.E3", "L23").meets("E3").exact("6/5"))
        .point(Pt::blown("L4", "dp4-A1A2-wblowup", "Ebar").exact("18/13"))
        .point(Pt::blown("general", "dp4-A1A2-blowup", "EP").exact("3/2"))
        .aux(weighted("dp4-A1A2-wblowup", "L4", "QP"))
        .aux(generic)
        .delta("6/7")
        .check_s(None, "L15", "7/6")
        .check_sw(None, "L15", &["E1"], "7/6")
        .check(
            CheckKind::SFlagPoint,
            None,
            "L15",
            &["E5"],
            &["7/8"],
            Some(&["7/6"]),
            "the E5 coefficient is 2(v-1) and the last term needs the factor 1/2, giving 7/6",
        )
        .check_s(None, "E2", "1")
        .check_sw(None, "E2", &["L23"], "5/6")
        .check_s(None, "E5", "7/6")
        .check_psq(None, "E5", "0", "2", ["4", "-2", "1/6"])
        .check_psq(None, "E5", "2", "3", ["6", "-4", "2/3"])
        .check(
            CheckKind::SFlagPoint,
            None,
            "E5",
            &["E2"],
            &["89/216"],
            Some(&["1"]),
            "the integral as written evaluates to 1",
        )
        .check_s(None, "E4", "7/8")
        .check_sw(None, "E4", &["L4"], "17/24")
        .check_s(None, "L23", "5/6")
        .check_sw(None, "L23", &["E3"], "17/24");
    g_checks(w_checks(b, base), base)
        .provenance(
            "three points and two infinitely near points, one of them on the line through two",
        )
        .build()
}

fn a3() -> SurfaceModel {
    let base = "dp4-A3";
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("A3")
        .lines(5)
        .curves(&[
            ("E1", "e1"),
            ("E2", "e2-e3"),
            ("E3", "e3-e4"),
            ("E4", "e4-e5"),
            ("E5", "e5"),
            ("L12", "H-e1-e2"),
            ("L3", "H-e2-e3"),
            ("Q", "2H-e1-e2-e3-e4-e5"),
        ])
        .point(Pt::on("E3", "E3").exact("3/4"))
        .point(Pt::on("E3.E2", "E3").meets("E2").exact("3/4"))
        .point(Pt::on("E2", "E2").exact("24/29"))
        .point(Pt::on("E2.L12", "E2").meets("L12").exact("24/29"))
        .point(Pt::on("E4", "E4").exact("24/29"))
        .point(Pt::on("L3", "L3").exact("1"))
        .point(Pt::on("E5", "E5").exact("12/11"))
        .point(Pt::on("E5.Q", "E5").meets("Q").exact("12/11"))
        .point(Pt::on("L12", "L12").exact("12/11"))
        .point(Pt::blown("Q.E1", "dp4-A3-xblowup", "EP").exact("4/3"))
        .point(Pt::blown("Q", "dp4-A3-wblowup", "Ebar").exact("18/13"))
        .point(Pt::blown("general", "dp4-A3-blowup", "EP").exact("3/2"))
        .aux(crossing("dp4-A3-xblowup", "Q", "E1", "L1"))
        .aux(weighted("dp4-A3-wblowup", "Q", "LP"))
        .aux(triangle(base, "QP", "L1P"))
        .delta("3/4")
        .check(
            CheckKind::SDivisor,
            None,
            "E3",
            &[],
            &["4/3"],
            Some(&["3/2"]),
            "the decomposition omits L3, which meets E3 and enters at v = 1; S = 3/2",
        )
        .check_psq(None, "E3", "0", "1", ["4", "0", "-1"])
        .check(
            CheckKind::SFlagPoint,
            None,
            "E3",
            &["E2"],
            &["4/3"],
            Some(&["29/24"]),
            "the decomposition omits L3; with it the integral is 29/24",
        )
        .check_s(None, "E2", "29/24")
        .check_psq(None, "E2", "0", "1", ["4", "0", "-4/3"])
        .check_psq(None, "E2", "1", "3/2", ["5", "-2", "-1/3"])
        .check_psq(None, "E2", "3/2", "2", ["8", "-6", "1"])
        .check_sw(None, "E2", &["L12"], "11/12")
        .check_s(None, "L3", "1")
        .check_sw(None, "L3", &[], "1/2")
        .check_s(None, "E5", "11/12")
        .check_psq(None, "E5", "0", "1", ["4", "-2", "-1/4"])
        .check_psq(None, "E5", "1", "2", ["5", "-4", "3/4"])
        .check_sw(None, "E5", &["Q"], "17/24");
    all_checks(b, base)
        .provenance("a point, and a point followed by three infinitely near points")
        .build()
}

fn a3_four_lines() -> SurfaceModel {
    let base = "dp4-A3-4lines";
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("A3")
        .lines(4)
        .curves(&[
            ("E1", "e1"),
            ("E2", "e2"),
            ("E3", "e3-e4"),
            ("E4", "e4-e5"),
            ("E5", "e5"),
            ("L123", "H-e1-e2-e3"),
            ("L4", "H-e3-e4"),
        ])
        .point(Pt::on("E3", "E3").exact("3/4"))
        .point(Pt::on("E3.L123", "E3").meets("L123").exact("3/4"))
        .point(Pt::on("E4", "E4").exact("3/4"))
        .point(Pt::on("E4.E5", "E4").meets("E5").exact("3/4"))
        .point(Pt::on("L123", "L123").exact("3/4"))
        .point(Pt::on("E1", "E1").exact("9/8"))
        .point(Pt::on("E5", "E5").exact("9/8"))
        .point(Pt::blown("general", "dp4-A3-4lines-blowup", "EP").exact("3/2"))
        .aux(triangle(base, "QP", "L1P"))
        .delta("3/4")
        .check_s(None, "E3", "4/3")
        .check_s(None, "E4", "4/3")
        .check_psq(None, "E4", "0", "1", ["4", "0", "-4/3"])
        .check_psq(None, "E4", "1", "3", ["6", "-4", "2/3"])
        .check_sw(None, "E4", &["E5"], "8/9")
        .check_s(None, "E1", "8/9")
        .check_psq(None, "E1", "0", "4/3", ["4", "-2", "-1/4"])
        .check_psq(None, "E1", "4/3", "2", ["8", "-8", "2"])
        .check_sw(None, "E1", &[], "5/9");
    g_checks(b, base)
        .provenance("three collinear points, one followed by two infinitely near points")
        .build()
}

fn four_a1() -> SurfaceModel {
    let base = "dp4-4A1";
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("4A1")
        .lines(4)
        .curves(&[
            ("E1", "e1-e4"),
            ("E3", "e3-e5"),
            ("L24", "H-e1-e2-e4"),
            ("L25", "H-e2-e3-e5"),
            ("E2", "e2"),
            ("E4", "e4"),
            ("E5", "e5"),
            ("L13", "H-e1-e3"),
        ])
        .point(Pt::on("E1", "E1").exact("1"))
        .point(Pt::on("E1.E4", "E1").meets("E4").exact("1"))
        .point(Pt::on("E1.L13", "E1").meets("L13").exact("1"))
        .point(Pt::on("E5", "E5").exact("1"))
        .point(Pt::on("E2", "E2").exact("1"))
        .point(Pt::blown("general", "dp4-4A1-blowup", "EP").exact("3/2"))
        .aux(triangle(base, "QP", "L2P"))
        .delta("1")
        .check_s(None, "E1", "1")
        .check(
            CheckKind::SFlagPoint,
            None,
            "E1",
            &["E4"],
            &["5/6"],
            Some(&["1"]),
            "the E4 coefficient is 2(v-1) on the second segment, giving 1",
        )
        .check_s(None, "E5", "1")
        .check_sw(None, "E5", &[], "1/2");
    g_checks(b, base)
        .provenance("three points, two of them followed by infinitely near points on lines through the second")
        .build()
}

fn two_a1a2() -> SurfaceModel {
    let base = "dp4-2A1A2";
    let generic = TableBuilder::new("dp4-2A1A2-blowup")
        .gen("EP", CurveKind::OrdinaryExceptional, "-1", "2")
        .gen("L35", CurveKind::NegativeCurve, "-2", "1")
        .gen("L1P", CurveKind::NegativeCurve, "-1", "1")
        .gen("E1", CurveKind::NegativeCurve, "-2", "1")
        .meet("EP", "L1P", "1")
        .meet("L35", "L1P", "1")
        .meet("L1P", "E1", "1")
        .anticanonical(&[("EP", "1"), ("L35", "1"), ("L1P", "2"), ("E1", "1")])
        .point(Pt::on("EP", "EP"))
        .provenance("blowup of a point off the negative curves")
        .build();
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("2A1A2")
        .lines(4)
        .curves(&[
            ("E1", "e1-e4"),
            ("E2", "e2-e5"),
            ("L24", "H-e1-e2-e4"),
            ("L35", "H-e2-e3-e5"),
            ("E3", "e3"),
            ("E4", "e4"),
            ("E5", "e5"),
            ("L13", "H-e1-e3"),
        ])
        .point(Pt::on("E2", "E2").exact("6/7"))
        .point(Pt::on("E2.E5", "E2").meets("E5").exact("6/7"))
        .point(Pt::on("E2.L24", "E2").meets("L24").exact("6/7"))
        .point(Pt::on("L24", "L24").exact("6/7"))
        .point(Pt::on("E1", "E1").exact("1"))
        .point(Pt::on("E1.L13", "E1").meets("L13").exact("1"))
        .point(Pt::on("L35", "L35").exact("1"))
        .point(Pt::on("E4", "E4").exact("6/7"))
        .point(Pt::on("E4.E1", "E4").meets("E1").exact("6/7"))
        .point(Pt::on("E5", "E5").exact("6/7"))
        .point(Pt::on("E3", "E3").exact("6/5"))
        .point(Pt::on("E3.L13", "E3").meets("L13").exact("6/5"))
        .point(Pt::blown("general", "dp4-2A1A2-blowup", "EP").exact("3/2"))
        .aux(generic)
        .delta("6/7")
        .check_s(None, "E2", "7/6")
        .check_sw(None, "E2", &["E5"], "7/6")
        .check_s(None, "E1", "1")
        .check_sw(None, "E1", &["L13"], "5/6")
        .check_s(None, "E4", "7/6")
        .check(
            CheckKind::SFlagPoint,
            None,
            "E4",
            &["E1"],
            &["89/216"],
            Some(&["1"]),
            "the integral as written evaluates to 1",
        )
        .check_s(None, "E3", "5/6")
        .check_sw(None, "E3", &["L13"], "5/6");
    g_checks(b, base)
        .provenance("three points and two infinitely near points on lines through the second")
        .build()
}

fn a1a3() -> SurfaceModel {
    let base = "dp4-A1A3";
    let generic = TableBuilder::new("dp4-A1A3-blowup")
        .gen("EP", CurveKind::OrdinaryExceptional, "-1", "2")
        .gen("L123", CurveKind::NegativeCurve, "-2", "1")
        .gen("E3", CurveKind::NegativeCurve, "-2", "1")
        .gen("E4", CurveKind::NegativeCurve, "-2", "1")
        .gen("L3P", CurveKind::NegativeCurve, "-1", "1")
        .meet("EP", "L3P", "1")
        .meet("L123", "E3", "1")
        .meet("E3", "E4", "1")
        .meet("E3", "L3P", "1")
        .anticanonical(&[
            ("EP", "1"),
            ("L3P", "2"),
            ("L123", "1"),
            ("E3", "2"),
            ("E4", "1"),
        ])
        .point(Pt::on("EP", "EP"))
        .provenance("blowup of a point off the negative curves")
        .build();
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("A1A3")
        .lines(3)
        .curves(&[
            ("E1", "e1"),
            ("E2", "e2"),
            ("E3", "e3-e4"),
            ("E4", "e4-e5"),
            ("E5", "e5"),
            ("L123", "H-e1-e2-e3"),
            ("L5", "H-e3-e4-e5"),
        ])
        .point(Pt::on("E3", "E3").exact("3/4"))
        .point(Pt::on("E3.L123", "E3").meets("L123").exact("3/4"))
        .point(Pt::on("E4", "E4").exact("3/4"))
        .point(Pt::on("E4.E5", "E4").meets("E5").exact("3/4"))
        .point(Pt::on("L123", "L123").exact("3/4"))
        .point(Pt::on("L123.E1", "L123").meets("E1").exact("3/4"))
        .point(Pt::on("L5", "L5").exact("1"))
        .point(Pt::on("E5", "E5").exact("3/4"))
        .point(Pt::on("E5.L5", "E5").meets("L5").exact("3/4"))
        .point(Pt::on("E1", "E1").exact("9/8"))
        .point(Pt::blown("general", "dp4-A1A3-blowup", "EP").exact("3/2"))
        .aux(generic)
        .delta("3/4")
        .check_s(None, "E3", "4/3")
        .check_s(None, "E4", "4/3")
        .check_sw(None, "E4", &["E5"], "4/3")
        .check_s(None, "L123", "4/3")
        .check_sw(None, "L123", &["E1"], "8/9")
        .check_s(None, "L5", "1")
        .check_sw(None, "L5", &[], "2/3")
        .check_s(None, "E5", "4/3")
        .check_psq(None, "E5", "0", "4", ["4", "-2", "1/4"])
        .check_sw(None, "E5", &["L5"], "1")
        .check_s(None, "E1", "8/9")
        .check_sw(None, "E1", &[], "5/9");
    g_checks(b, base)
        .provenance("three collinear points, one followed by two infinitely near points on a line")
        .build()
}

fn a4() -> SurfaceModel {
    let base = "dp4-A4";
    let curves = [
        ("E1", "e1-e2"),
        ("E2", "e2-e3"),
        ("E3", "e3-e4"),
        ("E4", "e4-e5"),
        ("E5", "e5"),
        ("L2", "H-e1-e2"),
        ("Q", "2H-e1-e2-e3-e4-e5"),
    ];
    let mut up = curves.to_vec();
    up.extend([("L1P", "H-e1-e6"), ("QP", "2H-e1-e2-e3-e4-e6")]);
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("A4")
        .lines(3)
        .curves(&curves)
        .point(Pt::on("E2", "E2").exact("6/11"))
        .point(Pt::on("E2.E1", "E2").meets("E1").exact("6/11"))
        .point(Pt::on("E2.E3", "E2").meets("E3").exact("6/11"))
        .point(Pt::on("E2.L2", "E2").meets("L2").exact("6/11"))
        .point(Pt::on("E3", "E3").exact("24/37"))
        .point(Pt::on("E3.E4", "E3").meets("E4").exact("24/37"))
        .point(Pt::on("E1", "E1").exact("9/11"))
        .point(Pt::on("E4", "E4").exact("4/5"))
        .point(Pt::on("E4.E5", "E4").meets("E5").exact("4/5"))
        .point(Pt::on("L2", "L2").exact("24/29"))
        .point(Pt::on("E5", "E5").exact("24/23"))
        .point(Pt::on("E5.Q", "E5").meets("Q").exact("24/23"))
        .point(Pt::blown("Q", "dp4-A4-wblowup", "Ebar").exact("18/13"))
        .point(Pt::blown("general", "dp4-A4-blowup", "EP").exact("3/2"))
        .aux(weighted("dp4-A4-wblowup", "Q", "LP"))
        .aux(lattice_blowup(base, &up))
        .delta("6/11")
        .check_s(None, "E2", "11/6")
        .check_psq(None, "E2", "0", "1", ["4", "0", "-5/6"])
        .check_psq(None, "E2", "1", "3", ["5", "-2", "1/6"])
        .check_psq(None, "E2", "3", "4", ["8", "-4", "1/2"])
        .check_sw(None, "E2", &[], "11/36")
        .check_sw(None, "E2", &["E1"], "11/9")
        .check_sw(None, "E2", &["E3"], "37/24")
        .check_sw(None, "E2", &["L2"], "29/24")
        .check_s(None, "E3", "37/24")
        .check_psq(None, "E3", "0", "3/2", ["4", "0", "-5/6"])
        .check_psq(None, "E3", "3/2", "2", ["7", "-4", "1/2"])
        .check_psq(None, "E3", "2", "3", ["9", "-6", "1"])
        .check(
            CheckKind::SFlagPoint,
            None,
            "E3",
            &["E4"],
            &["13/12"],
            Some(&["5/4"]),
            "the middle integrand should read (v/2)(2-v/2); the integral then evaluates to 5/4",
        )
        .check_s(None, "E1", "11/9")
        .check_psq(None, "E1", "0", "4/3", ["4", "0", "-5/4"])
        .check_psq(None, "E1", "4/3", "2", ["8", "-6", "1"])
        .check_sw(None, "E1", &[], "11/18")
        .check_s(None, "E4", "5/4")
        .check_psq(None, "E4", "0", "1", ["4", "0", "-5/4"])
        .check_psq(None, "E4", "1", "2", ["5", "-2", "-1/4"])
        .check_sw(None, "E4", &["E5"], "23/24")
        .check_s(None, "L2", "29/24")
        .check_psq(None, "L2", "0", "5/2", ["4", "-2", "1/5"])
        .check_psq(None, "L2", "5/2", "3", ["9", "-6", "1"])
        .check_sw(None, "L2", &[], "3/8")
        .check_s(None, "E5", "23/24")
        .check_psq(None, "E5", "0", "1", ["4", "-2", "-1/5"])
        .check_psq(None, "E5", "1", "5/2", ["5", "-4", "4/5"])
        .check(
            CheckKind::SFlagPoint,
            None,
            "E5",
            &["Q"],
            &["73/120"],
            Some(&["17/24"]),
            "the integral as written evaluates to 17/24",
        );
    g_checks(w_checks(b, base), base)
        .provenance("a point followed by four infinitely near points, the third off the line")
        .build()
}

fn d4() -> SurfaceModel {
    let base = "dp4-D4";
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("D4")
        .lines(2)
        .curves(&[
            ("E1", "e1"),
            ("E2", "e2-e3"),
            ("E3", "e3-e4"),
            ("E4", "e4-e5"),
            ("E5", "e5"),
            ("L13", "H-e1-e2-e3"),
        ])
        .point(Pt::on("E3", "E3").exact("1/2"))
        .point(Pt::on("E3.E2", "E3").meets("E2").exact("1/2"))
        .point(Pt::on("E3.L13", "E3").meets("L13").exact("1/2"))
        .point(Pt::on("E3.E4", "E3").meets("E4").exact("1/2"))
        .point(Pt::on("E4", "E4").exact("2/3"))
        .point(Pt::on("L13", "L13").exact("2/3"))
        .point(Pt::on("E2", "E2").exact("3/4"))
        .point(Pt::on("E1", "E1").exact("1"))
        .point(Pt::on("E5", "E5").exact("1"))
        .point(Pt::blown("general", "dp4-D4-blowup", "EP").exact("3/2"))
        .aux(triangle(base, "QP", "L1P"))
        .delta("1/2")
        .check_s(None, "E3", "2")
        .check_psq(None, "E3", "0", "2", ["4", "0", "-1/2"])
        .check_psq(None, "E3", "2", "4", ["8", "-4", "1/2"])
        .check_sw(None, "E3", &[], "1/3")
        .check(
            CheckKind::SFlagPoint,
            None,
            "E3",
            &["E2"],
            &["3/2"],
            Some(&["4/3"]),
            "the two incidence cases are swapped; the E2 coefficient is v/2 throughout, giving 4/3",
        )
        .check(
            CheckKind::SFlagPoint,
            None,
            "E3",
            &["L13"],
            &["4/3"],
            Some(&["3/2"]),
            "the two incidence cases are swapped; the L13 coefficient is v-1 on [2, 4], giving 3/2",
        )
        .check_s(None, "E4", "3/2")
        .check_psq(None, "E4", "0", "1", ["4", "0", "-1"])
        .check_psq(None, "E4", "1", "2", ["5", "-2", "0"])
        .check_psq(None, "E4", "2", "3", ["9", "-6", "1"])
        .check(
            CheckKind::SFlagPoint,
            None,
            "E4",
            &["E3"],
            &["1"],
            Some(&["2"]),
            "the E3 coefficient is v then 2(v-1), giving 2",
        )
        .check_s(None, "E2", "4/3")
        .check_sw(None, "E2", &[], "2/3")
        .check_s(None, "E1", "1")
        .check_sw(None, "E1", &[], "1/2");
    g_checks(b, base)
        .provenance(
            "a point, and a point followed by three infinitely near points, the first on the line",
        )
        .build()
}

fn two_a1a3() -> SurfaceModel {
    let base = "dp4-2A1A3";
    let curves = [
        ("E1", "e1-e3"),
        ("E2", "e2-e4"),
        ("E3", "e3"),
        ("E4", "e4-e5"),
        ("E5", "e5"),
        ("L23", "H-e1-e2-e3"),
        ("L5", "H-e2-e4-e5"),
    ];
    let mut up = curves.to_vec();
    up.extend([("L1P", "H-e1-e6"), ("L2P", "H-e2-e6")]);
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("2A1A3")
        .lines(2)
        .curves(&curves)
        .point(Pt::on("E2", "E2").exact("3/4"))
        .point(Pt::on("E2.E4", "E2").meets("E4").exact("3/4"))
        .point(Pt::on("E2.L23", "E2").meets("L23").exact("3/4"))
        .point(Pt::on("E4", "E4").exact("3/4"))
        .point(Pt::on("E4.E5", "E4").meets("E5").exact("3/4"))
        .point(Pt::on("L23", "L23").exact("3/4"))
        .point(Pt::on("E5", "E5").exact("3/4"))
        .point(Pt::on("E5.L5", "E5").meets("L5").exact("3/4"))
        .point(Pt::on("E3", "E3").exact("3/4"))
        .point(Pt::on("L5", "L5").exact("1"))
        .point(Pt::on("E1", "E1").exact("1"))
        .point(Pt::blown("general", "dp4-2A1A3-blowup", "EP").exact("3/2"))
        .aux(lattice_blowup(base, &up))
        .delta("3/4")
        .check_s(None, "E2", "4/3")
        .check_psq(None, "E2", "0", "2", ["4", "0", "-1"])
        .check_sw(None, "E2", &["E4"], "4/3")
        .check_s(None, "E4", "4/3")
        .check_psq(None, "E4", "0", "1", ["4", "0", "-4/3"])
        .check_psq(None, "E4", "1", "3", ["6", "-4", "2/3"])
        .check_sw(None, "E4", &["E5"], "4/3")
        .check_s(None, "E5", "4/3")
        .check_psq(None, "E5", "0", "4", ["4", "-2", "1/4"])
        .check_sw(None, "E5", &["L5"], "1")
        .check_s(None, "L5", "1")
        .check_psq(None, "L5", "0", "1", ["4", "0", "-2"])
        .check_psq(None, "L5", "1", "2", ["8", "-8", "2"])
        .check_sw(None, "L5", &[], "2/3");
    g_checks(b, base)
        .provenance("two points, each followed by infinitely near points, the first on the line")
        .build()
}

fn d5() -> SurfaceModel {
    let base = "dp4-D5";
    let curves = [
        ("E1", "e1-e2"),
        ("E2", "e2-e3"),
        ("E3", "e3-e4"),
        ("E4", "e4-e5"),
        ("E5", "e5"),
        ("L3", "H-e1-e2-e3"),
    ];
    let mut up = curves.to_vec();
    up.push(("L1P", "H-e1-e6"));
    let b = ModelBuilder::new(Lattice::plane(5), base)
        .singularities("D5")
        .lines(1)
        .curves(&curves)
        .point(Pt::on("E3", "E3").exact("3/8"))
        .point(Pt::on("E3.E2", "E3").meets("E2").exact("3/8"))
        .point(Pt::on("E3.E4", "E3").meets("E4").exact("3/8"))
        .point(Pt::on("E3.L3", "E3").meets("L3").exact("3/8"))
        .point(Pt::on("E2", "E2").exact("1/2"))
        .point(Pt::on("E2.E1", "E2").meets("E1").exact("1/2"))
        .point(Pt::on("E4", "E4").exact("1/2"))
        .point(Pt::on("E4.E5", "E4").meets("E5").exact("1/2"))
        .point(Pt::on("E1", "E1").exact("3/4"))
        .point(Pt::on("E5", "E5").exact("3/4"))
        .point(Pt::on("L3", "L3").exact("9/14"))
        .point(Pt::blown("general", "dp4-D5-blowup", "EP").exact("3/2"))
        .aux(lattice_blowup(base, &up))
        .delta("3/8")
        .check_s(None, "E3", "8/3")
        .check_psq(None, "E3", "0", "2", ["4", "0", "-1/3"])
        .check_psq(None, "E3", "2", "6", ["6", "-2", "1/6"])
        .check_sw(None, "E3", &[], "2/9")
        .check_sw(None, "E3", &["E2"], "2")
        .check_sw(None, "E3", &["E4"], "2")
        .check_sw(None, "E3", &["L3"], "14/9")
        .check_s(None, "E2", "2")
        .check_psq(None, "E2", "0", "2", ["4", "0", "-1/2"])
        .check_psq(None, "E2", "2", "4", ["8", "-4", "1/2"])
        .check_sw(None, "E2", &["E1"], "4/3")
        .check_s(None, "E4", "2")
        .check_psq(None, "E4", "0", "1", ["4", "0", "-4/5"])
        .check_psq(None, "E4", "1", "5", ["5", "-2", "1/5"])
        .check_sw(None, "E4", &["E5"], "4/3")
        .check_s(None, "E1", "4/3")
        .check_sw(None, "E1", &[], "2/3")
        .check_s(None, "E5", "4/3")
        .check_psq(None, "E5", "0", "4", ["4", "-2", "1/4"])
        .check_sw(None, "E5", &[], "1/3")
        .check_s(None, "L3", "14/9")
        .check_psq(None, "L3", "0", "5/3", ["4", "0", "-4/5"])
        .check_psq(None, "L3", "5/3", "3", ["9", "-6", "1"])
        .check_sw(None, "L3", &[], "4/9");
    g_checks(b, base)
        .provenance("a point followed by four infinitely near points, the second on the line")
        .build()
}
