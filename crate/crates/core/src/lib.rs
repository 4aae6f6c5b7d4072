//! Exact δ-invariants of Du Val del Pezzo surfaces of degree at least four.
//!
//! The engine works on lattice data only: each surface is a set of
//! generators (the anticanonical class and finitely many curves) with a
//! rational Gram matrix. From that it computes Zariski decompositions along
//! rays `−K − v·E`, the integrals `S(E)` and `S(W^C; P)`, and the local and
//! global δ bounds they imply.

pub mod catalog;
pub mod delta;
pub mod invariants;
pub mod lattice;
pub mod poly;
pub mod rational;
pub mod zariski;

pub use catalog::{builtin_models, find_model, SurfaceModel};
pub use delta::{global_delta, local_delta, verify_table, DeltaResult, Status, VerifyReport};
pub use invariants::Evaluator;
pub use lattice::{DivisorExpr, GramMatrix};
pub use rational::{fmt_q, parse_q, Q};
