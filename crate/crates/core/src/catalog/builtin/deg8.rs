use crate::catalog::{Lattice, ModelBuilder, Pt, SurfaceModel};

pub fn models() -> Vec<SurfaceModel> {
    vec![f1(), quadric(), f2()]
}

fn f1() -> SurfaceModel {
    ModelBuilder::new(Lattice::plane(1), "dp8-F1")
        .singularities("smooth")
        .lines(1)
        .curves(&[("s", "e1"), ("f", "H-e1")])
        .point(Pt::on("s", "s").exact("6/7"))
        .point(Pt::on("f", "f").exact("12/13"))
        .delta("6/7")
        .check_s(None, "s", "7/6")
        .check_psq(None, "s", "0", "2", ["8", "-2", "-1"])
        .check_sw(None, "s", &[], "13/12")
        .check_s(None, "f", "13/12")
        .check_psq(None, "f", "0", "1", ["8", "-4", "0"])
        .check_psq(None, "f", "1", "3", ["9", "-6", "1"])
        .check_sw(None, "f", &[], "5/6")
        .provenance("first Hirzebruch surface; s the (-1)-section, f a fibre")
        .build()
}

fn quadric() -> SurfaceModel {
    ModelBuilder::new(Lattice::quadric(0), "dp8-P1xP1")
        .singularities("smooth")
        .lines(0)
        .curves(&[("L1", "l1"), ("L2", "l2")])
        .point(Pt::on("L1", "L1").exact("1"))
        .delta("1")
        .check_s(None, "L1", "1")
        .check_sw(None, "L1", &[], "1")
        .provenance("two rulings; every point lies on a ruling of either family")
        .build()
}

fn f2() -> SurfaceModel {
    ModelBuilder::new(Lattice::hirzebruch2(), "dp8-F2")
        .singularities("A1")
        .lines(0)
        .curves(&[("s", "s"), ("f", "f")])
        .point(Pt::on("f", "f").exact("3/4"))
        .point(Pt::on("f.s", "f").meets("s").exact("3/4"))
        .delta("3/4")
        .check_s(None, "f", "4/3")
        .check_psq(None, "f", "0", "4", ["8", "-4", "1/2"])
        .check_sw(None, "f", &["s"], "4/3")
        .provenance("second Hirzebruch surface; s the (-2)-section contracted to the A1 point")
        .build()
}
