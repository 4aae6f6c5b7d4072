//! The transcribed catalog, one file per degree.

mod deg4;
mod deg5;
mod deg6;
mod deg7;
mod deg8;

use super::{CheckKind, SurfaceModel};
use crate::rational::parse_q;

/// Volume check kind on `[from, to]`, for errata rows.
fn psq_on(from: &str, to: &str) -> CheckKind {
    CheckKind::Psq {
        from: parse_q(from).expect("literal"),
        to: parse_q(to).expect("literal"),
    }
}

/// Every base model, each carrying its auxiliary blowups.
pub fn builtin_models() -> Vec<SurfaceModel> {
    let mut v = Vec::new();
    v.extend(deg8::models());
    v.extend(deg7::models());
    v.extend(deg6::models());
    v.extend(deg5::models());
    v.extend(deg4::models());
    v
}
