use super::psq_on;
use crate::catalog::{Lattice, ModelBuilder, Pt, SurfaceModel};

pub fn models() -> Vec<SurfaceModel> {
    vec![smooth(), a1(), a1_four_lines(), two_a1(), a2(), a1a2()]
}

fn smooth() -> SurfaceModel {
    let lines = [
        ("E1", "e1"),
        ("E2", "e2"),
        ("E3", "e3"),
        ("L1", "H-e2-e3"),
        ("L2", "H-e1-e3"),
        ("L3", "H-e1-e2"),
    ];
    let blowup = ModelBuilder::new(Lattice::plane(4), "dp6-smooth-blowup")
        .curves(&lines)
        .exceptional("EP", "e4")
        .curves(&[("L1P", "H-e1-e4"), ("L2P", "H-e2-e4"), ("L3P", "H-e3-e4")])
        .point(Pt::on("EP", "EP"))
        .point(Pt::on("EP.L1P", "EP").meets("L1P"))
        .provenance("blowup of a point off the hexagon")
        .build();
    ModelBuilder::new(Lattice::plane(3), "dp6-smooth")
        .singularities("smooth")
        .lines(6)
        .curves(&lines)
        .point(Pt::on("E1", "E1").exact("1"))
        .point(Pt::on("E1.L2", "E1").meets("L2").exact("1"))
        .point(Pt::blown("general", "dp6-smooth-blowup", "EP").exact("6/5"))
        .aux(blowup)
        .delta("1")
        .check_s(None, "E1", "1")
        .check_s(Some("dp6-smooth-blowup"), "EP", "5/3")
        .check_psq(Some("dp6-smooth-blowup"), "EP", "0", "2", ["6", "0", "-1"])
        .check_psq(
            Some("dp6-smooth-blowup"),
            "EP",
            "2",
            "3",
            ["18", "-12", "2"],
        )
        .check_sw(Some("dp6-smooth-blowup"), "EP", &["L1P"], "7/9")
        .provenance("plane blown up in three general points; the lines form a hexagon")
        .build()
}

fn a1() -> SurfaceModel {
    let curves = [
        ("E1", "e1"),
        ("E2", "e2"),
        ("E3", "e3"),
        ("L123", "H-e1-e2-e3"),
    ];
    let blowup = ModelBuilder::new(Lattice::plane(4), "dp6-A1-blowup")
        .curves(&curves)
        .exceptional("EP", "e4")
        .curves(&[("L1", "H-e1-e4"), ("L2", "H-e2-e4"), ("L3", "H-e3-e4")])
        .point(Pt::on("EP", "EP"))
        .point(Pt::on("EP.L1", "EP").meets("L1"))
        .provenance("blowup of a point off the negative curves")
        .build();
    ModelBuilder::new(Lattice::plane(3), "dp6-A1")
        .singularities("A1")
        .lines(3)
        .curves(&curves)
        .point(Pt::on("L123", "L123").exact("3/4"))
        .point(Pt::on("L123.E1", "L123").meets("E1").exact("3/4"))
        .point(Pt::on("E1", "E1").exact("9/10"))
        .point(Pt::blown("general", "dp6-A1-blowup", "EP").exact("6/5"))
        .aux(blowup)
        .delta("3/4")
        .check_s(None, "L123", "4/3")
        .check_sw(None, "L123", &["E1"], "10/9")
        .check_s(None, "E1", "10/9")
        .check_psq(None, "E1", "0", "2", ["6", "-2", "-1/2"])
        .check_sw(None, "E1", &[], "7/9")
        .check_s(Some("dp6-A1-blowup"), "EP", "5/3")
        .check_sw(Some("dp6-A1-blowup"), "EP", &["L1"], "7/9")
        .provenance("three collinear points blown up; the line through them is the (-2)-curve")
        .build()
}

fn a1_four_lines() -> SurfaceModel {
    let curves = [
        ("E1", "e1-e3"),
        ("E2", "e2"),
        ("E3", "e3"),
        ("L12", "H-e1-e2"),
        ("L3", "H-e1-e3"),
    ];
    let blowup = ModelBuilder::new(Lattice::plane(4), "dp6-A1-4lines-blowup")
        .curves(&curves)
        .exceptional("EP", "e4")
        .curves(&[("L1P", "H-e1-e4"), ("L2P", "H-e2-e4")])
        .point(Pt::on("EP", "EP"))
        .point(Pt::on("EP.L1P", "EP").meets("L1P"))
        .point(Pt::on("EP.L2P", "EP").meets("L2P"))
        .provenance("blowup of a point off the negative curves")
        .build();
    ModelBuilder::new(Lattice::plane(3), "dp6-A1-4lines")
        .singularities("A1")
        .lines(4)
        .curves(&curves)
        .point(Pt::on("E1", "E1").exact("9/11"))
        .point(Pt::on("E1.L12", "E1").meets("L12").exact("9/11"))
        .point(Pt::on("E3", "E3").exact("9/11"))
        .point(Pt::on("E3.L3", "E3").meets("L3").exact("9/11"))
        .point(Pt::on("L12", "L12").exact("9/11"))
        .point(Pt::on("E2", "E2").exact("1"))
        .point(Pt::on("L3", "L3").exact("1"))
        .point(Pt::blown("general", "dp6-A1-4lines-blowup", "EP").between("9/8", "6/5"))
        .aux(blowup)
        .delta("9/11")
        .check_s(None, "E1", "11/9")
        .check_s(None, "E3", "11/9")
        .check_psq(None, "E3", "0", "1", ["6", "-2", "-1/2"])
        .check_psq(None, "E3", "1", "2", ["7", "-4", "1/2"])
        .check_psq(None, "E3", "2", "3", ["9", "-6", "1"])
        .check_s(None, "E2", "1")
        .check_sw(None, "E2", &[], "7/9")
        .check_s(Some("dp6-A1-4lines-blowup"), "EP", "5/3")
        .check_sw(Some("dp6-A1-4lines-blowup"), "EP", &["L1P"], "8/9")
        .provenance("plane blown up at two points and at a point infinitely near the first")
        .build()
}

fn two_a1() -> SurfaceModel {
    let curves = [
        ("E1", "e1-e3"),
        ("E2", "e2"),
        ("E3", "e3"),
        ("L23", "H-e1-e2-e3"),
    ];
    let blowup = ModelBuilder::new(Lattice::plane(4), "dp6-2A1-blowup")
        .curves(&curves)
        .exceptional("EP", "e4")
        .curves(&[("L1P", "H-e1-e4"), ("L2P", "H-e2-e4")])
        .point(Pt::on("EP", "EP"))
        .point(Pt::on("EP.L1P", "EP").meets("L1P"))
        .point(Pt::on("EP.L2P", "EP").meets("L2P"))
        .provenance("blowup of a point off the negative curves")
        .build();
    ModelBuilder::new(Lattice::plane(3), "dp6-2A1")
        .singularities("2A1")
        .lines(2)
        .curves(&curves)
        .point(Pt::on("E3", "E3").exact("9/14"))
        .point(Pt::on("E3.E1", "E3").meets("E1").exact("9/14"))
        .point(Pt::on("E3.L23", "E3").meets("L23").exact("9/14"))
        .point(Pt::on("L23", "L23").exact("3/4"))
        .point(Pt::on("L23.E2", "L23").meets("E2").exact("3/4"))
        .point(Pt::on("E1", "E1").exact("9/11"))
        .point(Pt::on("E2", "E2").exact("9/10"))
        .point(Pt::blown("general", "dp6-2A1-blowup", "EP").between("9/8", "6/5"))
        .aux(blowup)
        .delta("9/14")
        .check_s(None, "E3", "14/9")
        .check_sw(None, "E3", &["E1"], "11/9")
        .check_sw(None, "E3", &["L23"], "4/3")
        .check_s(None, "L23", "4/3")
        .check_sw(None, "L23", &["E2"], "10/9")
        .check_s(None, "E1", "11/9")
        .check_sw(None, "E1", &[], "8/9")
        .check_s(None, "E2", "10/9")
        .check_s(Some("dp6-2A1-blowup"), "EP", "5/3")
        .provenance("the line through two blown-up points, one of them blown up twice")
        .build()
}

fn a2() -> SurfaceModel {
    let curves = [
        ("E1", "e1-e2"),
        ("E2", "e2-e3"),
        ("E3", "e3"),
        ("L2", "H-e1-e2"),
    ];
    let blowup = ModelBuilder::new(Lattice::plane(4), "dp6-A2-blowup")
        .curves(&curves)
        .exceptional("EP", "e4")
        .curve("L1P", "H-e1-e4")
        .point(Pt::on("EP", "EP"))
        .point(Pt::on("EP.L1P", "EP").meets("L1P"))
        .provenance("blowup of a point off the negative curves")
        .build();
    ModelBuilder::new(Lattice::plane(3), "dp6-A2")
        .singularities("A2")
        .lines(2)
        .curves(&curves)
        .point(Pt::on("E2", "E2").exact("3/5"))
        .point(Pt::on("E2.E3", "E2").meets("E3").exact("3/5"))
        .point(Pt::on("E2.L2", "E2").meets("L2").exact("3/5"))
        .point(Pt::on("E2.E1", "E2").meets("E1").exact("3/5"))
        .point(Pt::on("E1", "E1").exact("3/4"))
        .point(Pt::on("E3", "E3").exact("4/5"))
        .point(Pt::on("L2", "L2").exact("4/5"))
        .point(Pt::blown("general", "dp6-A2-blowup", "EP").between("1", "6/5"))
        .aux(blowup)
        .delta("3/5")
        .check_s(None, "E2", "5/3")
        .check_psq(None, "E2", "0", "1", ["6", "0", "-3/2"])
        .check_psq(None, "E2", "1", "4", ["8", "-4", "1/2"])
        .check_sw(None, "E2", &[], "1/2")
        .check_sw(None, "E2", &["E3"], "5/4")
        .check_sw(None, "E2", &["L2"], "5/4")
        .check_sw(None, "E2", &["E1"], "4/3")
        .check_s(None, "E1", "4/3")
        .check(
            psq_on("0", "2"),
            None,
            "E1",
            &[],
            &["18", "-6", "-3/2"],
            Some(&["6", "0", "-3/2"]),
            "the integral yielding S = 4/3 uses 3(2-v)(2+v)/2",
        )
        .check_s(None, "E3", "5/4")
        .check_psq(None, "E3", "0", "3/2", ["6", "-2", "-1/3"])
        .check_psq(None, "E3", "3/2", "3", ["9", "-6", "1"])
        .check_sw(None, "E3", &[], "7/12")
        .check_s(None, "L2", "5/4")
        .check_s(Some("dp6-A2-blowup"), "EP", "5/3")
        .check_sw(Some("dp6-A2-blowup"), "EP", &["L1P"], "1")
        .provenance("plane blown up three times along a chain of infinitely near points")
        .build()
}

fn a1a2() -> SurfaceModel {
    let curves = [
        ("E1", "e1-e2"),
        ("E2", "e2-e3"),
        ("E3", "e3"),
        ("L3", "H-e1-e2-e3"),
    ];
    let blowup = ModelBuilder::new(Lattice::plane(4), "dp6-A1A2-blowup")
        .curves(&curves)
        .exceptional("EP", "e4")
        .curve("L1P", "H-e1-e4")
        .point(Pt::on("EP", "EP"))
        .point(Pt::on("EP.L1P", "EP").meets("L1P"))
        .provenance("blowup of a point off the negative curves")
        .build();
    ModelBuilder::new(Lattice::plane(3), "dp6-A1A2")
        .singularities("A1A2")
        .lines(1)
        .curves(&curves)
        .point(Pt::on("E3", "E3").exact("1/2"))
        .point(Pt::on("E3.L3", "E3").meets("L3").exact("1/2"))
        .point(Pt::on("E3.E2", "E3").meets("E2").exact("1/2"))
        .point(Pt::on("E2", "E2").exact("3/5"))
        .point(Pt::on("E2.E1", "E2").meets("E1").exact("3/5"))
        .point(Pt::on("E1", "E1").exact("3/4"))
        .point(Pt::on("L3", "L3").exact("3/4"))
        .point(Pt::blown("general", "dp6-A1A2-blowup", "EP").between("1", "6/5"))
        .aux(blowup)
        .delta("1/2")
        .check_s(None, "E3", "2")
        .check(
            psq_on("0", "6"),
            None,
            "E3",
            &[],
            &["18", "-6", "1/2"],
            Some(&["6", "-2", "1/6"]),
            "P(0)^2 must equal the degree; S = 2 needs (6-v)^2/6",
        )
        .check_s(None, "E2", "5/3")
        .check_psq(None, "E2", "0", "1", ["6", "0", "-3/2"])
        .check_psq(None, "E2", "1", "4", ["8", "-4", "1/2"])
        .check_sw(None, "E2", &["E1"], "4/3")
        .check_s(None, "E1", "4/3")
        .check(
            psq_on("0", "2"),
            None,
            "E1",
            &[],
            &["2", "0", "-1/2"],
            Some(&["6", "0", "-3/2"]),
            "the integral yielding S = 4/3 uses 3(2-v)(2+v)/2",
        )
        .check_sw(None, "E1", &[], "1")
        .check_s(None, "L3", "4/3")
        .check_sw(None, "L3", &[], "2/3")
        .check_s(Some("dp6-A1A2-blowup"), "EP", "5/3")
        .check_sw(Some("dp6-A1A2-blowup"), "EP", &["L1P"], "1")
        .provenance("chain of three infinitely near points; the line through the first two becomes the A1 curve")
        .build()
}
