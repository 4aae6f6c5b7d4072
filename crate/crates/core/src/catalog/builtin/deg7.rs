use crate::catalog::{Lattice, ModelBuilder, Pt, SurfaceModel};

pub fn models() -> Vec<SurfaceModel> {
    vec![smooth(), a1()]
}

fn smooth() -> SurfaceModel {
    let blowup = ModelBuilder::new(Lattice::plane(3), "dp7-smooth-blowup")
        .curves(&[("E1", "e1"), ("E2", "e2"), ("L12", "H-e1-e2")])
        .exceptional("EP", "e3")
        .curves(&[("L1P", "H-e1-e3"), ("L2P", "H-e2-e3")])
        .point(Pt::on("EP", "EP"))
        .point(Pt::on("EP.L1P", "EP").meets("L1P"))
        .provenance("blowup of a point off the three lines")
        .build();
    ModelBuilder::new(Lattice::plane(2), "dp7-smooth")
        .singularities("smooth")
        .lines(3)
        .curves(&[("E1", "e1"), ("E2", "e2"), ("L12", "H-e1-e2")])
        .point(Pt::on("L12", "L12").exact("21/25"))
        .point(Pt::on("L12.E1", "L12").meets("E1").exact("21/25"))
        .point(Pt::on("E1", "E1").exact("21/23"))
        .point(Pt::blown("general", "dp7-smooth-blowup", "EP").exact("21/19"))
        .aux(blowup)
        .delta("21/25")
        .check_s(None, "L12", "25/21")
        .check_sw(None, "L12", &[], "5/7")
        .check_sw(None, "L12", &["E1"], "23/21")
        .check_s(None, "E1", "23/21")
        .check_sw(None, "E1", &[], "19/21")
        .check_s(Some("dp7-smooth-blowup"), "EP", "38/21")
        .check_psq(Some("dp7-smooth-blowup"), "EP", "0", "2", ["7", "0", "-1"])
        .check_psq(Some("dp7-smooth-blowup"), "EP", "2", "3", ["15", "-8", "1"])
        .check_sw(Some("dp7-smooth-blowup"), "EP", &["L1P"], "19/21")
        .provenance("plane blown up in two points")
        .build()
}

fn a1() -> SurfaceModel {
    let blowup = ModelBuilder::new(Lattice::plane(3), "dp7-A1-blowup")
        .curves(&[("E1", "e1-e2"), ("E2", "e2"), ("L2", "H-e1-e2")])
        .exceptional("EP", "e3")
        .curve("L1P", "H-e1-e3")
        .point(Pt::on("EP", "EP"))
        .point(Pt::on("EP.L1P", "EP").meets("L1P"))
        .provenance("blowup of a point off the negative curves")
        .build();
    ModelBuilder::new(Lattice::plane(2), "dp7-A1")
        .singularities("A1")
        .lines(2)
        .curves(&[("E1", "e1-e2"), ("E2", "e2"), ("L2", "H-e1-e2")])
        .point(Pt::on("E2", "E2").exact("21/31"))
        .point(Pt::on("E2.E1", "E2").meets("E1").exact("21/31"))
        .point(Pt::on("E2.L2", "E2").meets("L2").exact("21/31"))
        .point(Pt::on("E1", "E1").exact("7/9"))
        .point(Pt::on("L2", "L2").exact("21/25"))
        .point(Pt::blown("general", "dp7-A1-blowup", "EP").between("21/23", "21/19"))
        .aux(blowup)
        .delta("21/31")
        .check_s(None, "L2", "25/21")
        .check_sw(None, "L2", &[], "5/7")
        .check_sw(None, "L2", &["E2"], "31/21")
        .check_s(None, "E1", "9/7")
        .check_sw(None, "E1", &[], "23/21")
        .check_sw(None, "E1", &["E2"], "31/21")
        .check_s(None, "E2", "31/21")
        .check_psq(None, "E2", "1", "4", ["8", "-4", "1/2"])
        .check_sw(None, "E2", &[], "23/42")
        .check_s(Some("dp7-A1-blowup"), "EP", "38/21")
        .check_sw(Some("dp7-A1-blowup"), "EP", &["L1P"], "23/21")
        .provenance("plane blown up at a point and then at a point of the first exceptional curve")
        .build()
}
