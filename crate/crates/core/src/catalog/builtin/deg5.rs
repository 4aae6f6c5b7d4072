use super::psq_on;
use crate::catalog::{CheckKind, Lattice, ModelBuilder, Pt, SurfaceModel};

pub fn models() -> Vec<SurfaceModel> {
    vec![smooth(), a1(), two_a1(), a1a2(), a3(), a2(), a4()]
}

/// Blowup of a general point: the base curves, `EP = e5`, the new lines
/// through it, and a point of `EP` on each new line plus a generic one.
fn general_blowup(name: &str, base: &[(&str, &str)], new: &[(&str, &str)]) -> SurfaceModel {
    let mut b = ModelBuilder::new(Lattice::plane(5), name)
        .curves(base)
        .exceptional("EP", "e5")
        .curves(new)
        .point(Pt::on("EP", "EP"));
    for (c, _) in new {
        b = b.point(Pt::on(&format!("EP.{c}"), "EP").meets(c));
    }
    b.provenance("blowup of a point off the negative curves")
        .build()
}

fn smooth() -> SurfaceModel {
    let curves = [
        ("E1", "e1"),
        ("E2", "e2"),
        ("E3", "e3"),
        ("E4", "e4"),
        ("L12", "H-e1-e2"),
        ("L13", "H-e1-e3"),
        ("L14", "H-e1-e4"),
        ("L23", "H-e2-e3"),
        ("L24", "H-e2-e4"),
        ("L34", "H-e3-e4"),
    ];
    let aux = "dp5-smooth-blowup";
    let blowup = general_blowup(
        aux,
        &curves,
        &[
            ("L1P", "H-e1-e5"),
            ("L2P", "H-e2-e5"),
            ("L3P", "H-e3-e5"),
            ("L4P", "H-e4-e5"),
            ("Q", "2H-e1-e2-e3-e4-e5"),
        ],
    );
    ModelBuilder::new(Lattice::plane(4), "dp5-smooth")
        .singularities("smooth")
        .lines(10)
        .curves(&curves)
        .point(Pt::on("E1", "E1").exact("15/13"))
        .point(Pt::on("E1.L12", "E1").meets("L12").exact("15/13"))
        .point(Pt::blown("general", aux, "EP").exact("4/3"))
        .aux(blowup)
        .delta("15/13")
        .check(
            CheckKind::SDivisor,
            None,
            "E1",
            &[],
            &["15/13"],
            Some(&["13/15"]),
            "the integral evaluates to 13/15; the bound 15/13 is its reciprocal",
        )
        .check(
            CheckKind::SFlagPoint,
            None,
            "E1",
            &["L12"],
            &["15/13"],
            Some(&["13/15"]),
            "the integral evaluates to 13/15",
        )
        .check_psq(None, "E1", "0", "1", ["5", "-2", "-1"])
        .check_psq(None, "E1", "1", "2", ["8", "-8", "2"])
        .check_s(Some(aux), "EP", "3/2")
        .check_psq(Some(aux), "EP", "0", "2", ["5", "0", "-1"])
        .check_psq(Some(aux), "EP", "2", "5/2", ["25", "-20", "4"])
        .check_sw(Some(aux), "EP", &["L1P"], "7/10")
        .provenance("plane blown up in four general points")
        .build()
}

fn a1() -> SurfaceModel {
    let curves = [
        ("E1", "e1"),
        ("E2", "e2"),
        ("E3", "e3"),
        ("E4", "e4"),
        ("L123", "H-e1-e2-e3"),
        ("L1", "H-e1-e4"),
        ("L2", "H-e2-e4"),
        ("L3", "H-e3-e4"),
    ];
    let aux = "dp5-A1-blowup";
    let blowup = general_blowup(
        aux,
        &curves,
        &[
            ("L1P", "H-e1-e5"),
            ("L2P", "H-e2-e5"),
            ("L3P", "H-e3-e5"),
            ("L4P", "H-e4-e5"),
        ],
    );
    ModelBuilder::new(Lattice::plane(4), "dp5-A1")
        .singularities("A1")
        .lines(7)
        .curves(&curves)
        .point(Pt::on("L123", "L123").exact("15/17"))
        .point(Pt::on("L123.E1", "L123").meets("E1").exact("15/17"))
        .point(Pt::on("E1", "E1").exact("1"))
        .point(Pt::on("E1.L1", "E1").meets("L1").exact("1"))
        .point(Pt::on("L1", "L1").exact("15/13"))
        .point(Pt::on("L1.E4", "L1").meets("E4").exact("15/13"))
        .point(Pt::on("E4", "E4").exact("15/13"))
        .point(Pt::blown("general", aux, "EP").exact("4/3"))
        .aux(blowup)
        .delta("15/17")
        .check_s(None, "L123", "17/15")
        .check_psq(None, "L123", "0", "1", ["5", "0", "-2"])
        .check_psq(None, "L123", "1", "2", ["8", "-6", "1"])
        .check_sw(None, "L123", &["E1"], "1")
        .check_s(None, "E1", "1")
        .check_psq(None, "E1", "0", "1", ["5", "-2", "-1/2"])
        .check(
            psq_on("1", "2"),
            None,
            "E1",
            &[],
            &["6", "-2", "-1/2"],
            Some(&["6", "-4", "1/2"]),
            "continuity at v = 1 and S = 1 need (2-v)(6-v)/2",
        )
        .check(
            CheckKind::SFlagPoint,
            None,
            "E1",
            &["L1"],
            &["1"],
            Some(&["13/15"]),
            "the integral as written evaluates to 13/15",
        )
        .check_s(None, "L1", "13/15")
        .check_sw(None, "L1", &["E4"], "13/15")
        .check_s(None, "E4", "13/15")
        .check_s(Some(aux), "EP", "3/2")
        .check_sw(Some(aux), "EP", &["L4P"], "11/15")
        .provenance("three collinear points and a fourth off the line")
        .build()
}

fn two_a1() -> SurfaceModel {
    let curves = [
        ("E1", "e1-e4"),
        ("E2", "e2"),
        ("E3", "e3"),
        ("E4", "e4"),
        ("L13", "H-e1-e3"),
        ("L23", "H-e2-e3"),
        ("L24", "H-e1-e2-e4"),
    ];
    let aux = "dp5-2A1-blowup";
    let blowup = general_blowup(
        aux,
        &curves,
        &[("L1P", "H-e1-e5"), ("L2P", "H-e2-e5"), ("L3P", "H-e3-e5")],
    );
    ModelBuilder::new(Lattice::plane(4), "dp5-2A1")
        .singularities("2A1")
        .lines(5)
        .curves(&curves)
        .point(Pt::on("E4", "E4").exact("15/19"))
        .point(Pt::on("E4.E1", "E4").meets("E1").exact("15/19"))
        .point(Pt::on("E1", "E1").exact("15/17"))
        .point(Pt::on("E1.L13", "E1").meets("L13").exact("15/17"))
        .point(Pt::on("L24", "L24").exact("15/17"))
        .point(Pt::on("L24.E2", "L24").meets("E2").exact("15/17"))
        .point(Pt::on("E2", "E2").exact("1"))
        .point(Pt::on("E2.L23", "E2").meets("L23").exact("1"))
        .point(Pt::on("L13", "L13").exact("1"))
        .point(Pt::on("L13.E3", "L13").meets("E3").exact("1"))
        .point(Pt::on("E3", "E3").exact("15/13"))
        .point(Pt::on("E3.L23", "E3").meets("L23").exact("15/13"))
        .point(Pt::on("L23", "L23").exact("15/13"))
        .point(Pt::blown("general", aux, "EP").exact("4/3"))
        .aux(blowup)
        .delta("15/19")
        .check_s(None, "E4", "19/15")
        .check_psq(None, "E4", "0", "2", ["5", "-2", "0"])
        .check_psq(None, "E4", "2", "3", ["9", "-6", "1"])
        .check_sw(None, "E4", &["E1"], "17/15")
        .check_s(None, "E1", "17/15")
        .check(
            CheckKind::SFlagPoint,
            None,
            "E1",
            &["L13"],
            &["13/15"],
            Some(&["1"]),
            "the integral as written evaluates to 1",
        )
        .check_s(None, "E2", "1")
        .check_psq(None, "E2", "1", "2", ["6", "-4", "1/2"])
        .check_sw(None, "E2", &["L23"], "13/15")
        .check(
            CheckKind::SDivisor,
            None,
            "E3",
            &[],
            &["15/13"],
            Some(&["13/15"]),
            "the integral evaluates to 13/15; the bound 15/13 is its reciprocal",
        )
        .check_s(Some(aux), "EP", "3/2")
        .check_sw(Some(aux), "EP", &["L2P"], "7/10")
        .check_sw(Some(aux), "EP", &["L1P"], "11/15")
        .provenance("three general points and a fourth infinitely near the first along the line to the second")
        .build()
}

fn a1a2() -> SurfaceModel {
    let curves = [
        ("E1", "e1-e3"),
        ("E2", "e2-e4"),
        ("E3", "e3"),
        ("E4", "e4"),
        ("L14", "H-e1-e2-e4"),
        ("L3", "H-e1-e3"),
    ];
    let aux = "dp5-A1A2-blowup";
    let blowup = general_blowup(aux, &curves, &[("L1P", "H-e1-e5"), ("L2P", "H-e2-e5")]);
    ModelBuilder::new(Lattice::plane(4), "dp5-A1A2")
        .singularities("A1A2")
        .lines(3)
        .curves(&curves)
        .point(Pt::on("E4", "E4").exact("15/23"))
        .point(Pt::on("E4.E2", "E4").meets("E2").exact("15/23"))
        .point(Pt::on("E4.L14", "E4").meets("L14").exact("15/23"))
        .point(Pt::on("L14", "L14").exact("5/7"))
        .point(Pt::on("L14.E1", "L14").meets("E1").exact("5/7"))
        .point(Pt::on("E1", "E1").exact("15/19"))
        .point(Pt::on("E1.E3", "E1").meets("E3").exact("15/19"))
        .point(Pt::on("E2", "E2").exact("15/17"))
        .point(Pt::on("E3", "E3").exact("15/17"))
        .point(Pt::on("E3.L3", "E3").meets("L3").exact("15/17"))
        .point(Pt::on("L3", "L3").exact("15/13"))
        .point(Pt::blown("general", aux, "EP").between("30/23", "4/3"))
        .aux(blowup)
        .delta("15/23")
        .check_s(None, "E4", "23/15")
        .check_sw(None, "E4", &[], "11/30")
        .check_sw(None, "E4", &["E2"], "17/15")
        .check_sw(None, "E4", &["L14"], "7/5")
        .check_s(None, "L14", "7/5")
        .check_psq(None, "L14", "0", "1", ["5", "0", "-3/2"])
        .check_psq(None, "L14", "1", "2", ["7", "-4", "1/2"])
        .check_psq(None, "L14", "2", "3", ["9", "-6", "1"])
        .check(
            CheckKind::SFlagPoint,
            None,
            "L14",
            &["E1"],
            &["8/15"],
            Some(&["19/15"]),
            "the E1 coefficient is v-1 on the last segment, giving 19/15",
        )
        .check_s(None, "E1", "19/15")
        .check_sw(None, "E1", &["E3"], "17/15")
        .check_s(None, "E2", "17/15")
        .check_sw(None, "E2", &[], "11/15")
        .check_s(None, "E3", "17/15")
        .check_psq(None, "E3", "0", "1", ["5", "-2", "-1/3"])
        .check_psq(None, "E3", "1", "3", ["6", "-4", "2/3"])
        .check_sw(None, "E3", &["L3"], "13/15")
        .check_s(None, "L3", "13/15")
        .check_sw(None, "L3", &[], "11/15")
        .check_s(Some(aux), "EP", "3/2")
        .check_sw(Some(aux), "EP", &["L1P"], "23/30")
        .provenance("two points, one infinitely near point on each exceptional curve")
        .build()
}

fn a3() -> SurfaceModel {
    let curves = [
        ("E1", "e1"),
        ("E2", "e2-e3"),
        ("E3", "e3-e4"),
        ("E4", "e4"),
        ("L13", "H-e1-e2-e3"),
    ];
    let aux = "dp5-A3-blowup";
    let blowup = general_blowup(aux, &curves, &[("L1P", "H-e1-e5"), ("L2P", "H-e2-e5")]);
    ModelBuilder::new(Lattice::plane(4), "dp5-A3")
        .singularities("A3")
        .lines(2)
        .curves(&curves)
        .point(Pt::on("E3", "E3").exact("5/9"))
        .point(Pt::on("E3.L13", "E3").meets("L13").exact("5/9"))
        .point(Pt::on("E3.E2", "E3").meets("E2").exact("5/9"))
        .point(Pt::on("E3.E4", "E3").meets("E4").exact("5/9"))
        .point(Pt::on("L13", "L13").exact("30/43"))
        .point(Pt::on("L13.E1", "L13").meets("E1").exact("30/43"))
        .point(Pt::on("E2", "E2").exact("10/13"))
        .point(Pt::on("E4", "E4").exact("15/19"))
        .point(Pt::on("E1", "E1").exact("15/16"))
        .point(Pt::blown("general", aux, "EP").between("5/4", "4/3"))
        .aux(blowup)
        .delta("5/9")
        .check_s(None, "E3", "9/5")
        .check_psq(None, "E3", "0", "1", ["5", "0", "-1"])
        .check_psq(None, "E3", "1", "2", ["6", "-2", "0"])
        .check_psq(None, "E3", "2", "4", ["8", "-4", "1/2"])
        .check_sw(None, "E3", &[], "2/5")
        .check_sw(None, "E3", &["L13"], "43/30")
        .check_sw(None, "E3", &["E2"], "13/10")
        .check_sw(None, "E3", &["E4"], "19/15")
        .check_s(None, "L13", "43/30")
        .check_sw(None, "L13", &["E1"], "16/15")
        .check_s(None, "E2", "13/10")
        .check_sw(None, "E2", &[], "4/5")
        .check_s(None, "E4", "19/15")
        .check_sw(None, "E4", &[], "7/15")
        .check_s(None, "E1", "16/15")
        .check(
            psq_on("0", "2"),
            None,
            "E1",
            &[],
            &["10", "-4", "-1/2"],
            Some(&["5", "-2", "-1/4"]),
            "P(0)^2 must equal the degree; S = 16/15 needs (2-v)(10+v)/4",
        )
        .check_sw(None, "E1", &[], "19/30")
        .check_s(Some(aux), "EP", "3/2")
        .check_sw(Some(aux), "EP", &["L2P"], "4/5")
        .provenance("chain of three points along a line through a fourth")
        .build()
}

fn a2() -> SurfaceModel {
    let curves = [
        ("E1", "e1-e3"),
        ("E2", "e2"),
        ("E3", "e3-e4"),
        ("E4", "e4"),
        ("L12", "H-e1-e2"),
        ("L3", "H-e1-e3"),
    ];
    let aux = "dp5-A2-blowup";
    let blowup = general_blowup(
        aux,
        &curves,
        &[
            ("L1P", "H-e1-e5"),
            ("L2P", "H-e2-e5"),
            ("Q", "2H-e1-e2-e3-e4-e5"),
        ],
    );
    ModelBuilder::new(Lattice::plane(4), "dp5-A2")
        .singularities("A2")
        .lines(4)
        .curves(&curves)
        .point(Pt::on("E3", "E3").exact("5/7"))
        .point(Pt::on("E3.E1", "E3").meets("E1").exact("5/7"))
        .point(Pt::on("E3.E4", "E3").meets("E4").exact("5/7"))
        .point(Pt::on("E3.L3", "E3").meets("L3").exact("5/7"))
        .point(Pt::on("E1", "E1").exact("15/19"))
        .point(Pt::on("E1.L12", "E1").meets("L12").exact("15/19"))
        .point(Pt::on("L12", "L12").exact("15/17"))
        .point(Pt::on("L12.E2", "L12").meets("E2").exact("15/17"))
        .point(Pt::on("E4", "E4").exact("30/31"))
        .point(Pt::on("L3", "L3").exact("30/31"))
        .point(Pt::on("E2", "E2").exact("15/13"))
        .point(Pt::blown("general", aux, "EP").between("30/23", "4/3"))
        .aux(blowup)
        .delta("5/7")
        .check_s(None, "E3", "7/5")
        .check_sw(None, "E3", &[], "8/15")
        .check_sw(None, "E3", &["E1"], "19/15")
        .check_sw(None, "E3", &["E4"], "31/30")
        .check_s(None, "E1", "19/15")
        .check_sw(None, "E1", &["L12"], "17/15")
        .check_s(None, "L12", "17/15")
        .check_sw(None, "L12", &["E2"], "13/15")
        .check_s(None, "E4", "31/30")
        .check_psq(None, "E4", "0", "3/2", ["5", "-2", "-1/3"])
        .check_psq(None, "E4", "3/2", "2", ["8", "-6", "1"])
        .check_sw(None, "E4", &[], "19/30")
        .check_s(None, "L3", "31/30")
        .check_s(None, "E2", "13/15")
        .check_sw(None, "E2", &[], "11/15")
        .check_s(Some(aux), "EP", "3/2")
        .check_sw(Some(aux), "EP", &["L1P"], "23/30")
        .provenance(
            "two points, a point infinitely near the first and one more on its exceptional curve",
        )
        .build()
}

fn a4() -> SurfaceModel {
    let curves = [
        ("E1", "e1-e2"),
        ("E2", "e2-e3"),
        ("E3", "e3-e4"),
        ("E4", "e4"),
        ("L3", "H-e1-e2-e3"),
    ];
    let aux = "dp5-A4-blowup";
    let blowup = general_blowup(aux, &curves, &[("L1P", "H-e1-e5")]);
    ModelBuilder::new(Lattice::plane(4), "dp5-A4")
        .singularities("A4")
        .lines(1)
        .curves(&curves)
        .point(Pt::on("E3", "E3").exact("3/7"))
        .point(Pt::on("E3.E2", "E3").meets("E2").exact("3/7"))
        .point(Pt::on("E3.L3", "E3").meets("L3").exact("3/7"))
        .point(Pt::on("E3.E4", "E3").meets("E4").exact("3/7"))
        .point(Pt::on("E2", "E2").exact("6/11"))
        .point(Pt::on("E2.E1", "E2").meets("E1").exact("6/11"))
        .point(Pt::on("E4", "E4").exact("3/5"))
        .point(Pt::on("L3", "L3").exact("9/13"))
        .point(Pt::on("E1", "E1").exact("3/4"))
        .point(Pt::blown("general", aux, "EP").between("6/5", "4/3"))
        .aux(blowup)
        .delta("3/7")
        .check_s(None, "E3", "7/3")
        .check(
            psq_on("0", "1"),
            None,
            "E3",
            &[],
            &["5", "0", "-5/2"],
            Some(&["5", "0", "-5/6"]),
            "S = 7/3 needs 5 - 5v^2/6",
        )
        .check(
            psq_on("1", "6"),
            None,
            "E3",
            &[],
            &["18", "-6", "1/2"],
            Some(&["6", "-2", "1/6"]),
            "continuity at v = 1 and S = 7/3 need (6-v)^2/6",
        )
        .check_sw(None, "E3", &[], "5/18")
        .check_sw(None, "E3", &["E2"], "11/6")
        .check_sw(None, "E3", &["L3"], "13/9")
        .check_sw(None, "E3", &["E4"], "5/3")
        .check_s(None, "E2", "11/6")
        .check_sw(None, "E2", &["E1"], "4/3")
        .check_s(None, "E4", "5/3")
        .check(
            psq_on("0", "5"),
            None,
            "E4",
            &[],
            &["25/2", "-5", "1/2"],
            Some(&["5", "-2", "1/5"]),
            "P(0)^2 must equal the degree; S = 5/3 needs (5-v)^2/5",
        )
        .check_sw(None, "E4", &[], "1/3")
        .check_s(None, "L3", "13/9")
        .check(
            psq_on("0", "4/3"),
            None,
            "L3",
            &[],
            &["10", "0", "-5/2"],
            Some(&["5", "0", "-5/4"]),
            "P(0)^2 must equal the degree; S = 13/9 needs 5(2-v)(2+v)/4",
        )
        .check_sw(None, "L3", &[], "5/9")
        .check_s(None, "E1", "4/3")
        .check(
            psq_on("0", "2"),
            None,
            "E1",
            &[],
            &["10", "0", "-5/2"],
            Some(&["5", "0", "-5/4"]),
            "P(0)^2 must equal the degree; S = 4/3 needs 5(2-v)(2+v)/4",
        )
        .check_sw(None, "E1", &[], "5/6")
        .check_s(Some(aux), "EP", "3/2")
        .check_sw(Some(aux), "EP", &["L1P"], "5/6")
        .provenance(
            "four infinitely near points; the (-2)-curves form an A4 chain ending at the line",
        )
        .build()
}
