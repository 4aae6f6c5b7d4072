//! Exact rational scalars and their canonical text form.
//!
//! Every number in the engine is a [`Q`]. The text form is `"p/q"` with the
//! sign carried by the numerator, or just `"n"` when the denominator is one.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}` in rational literal")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_q(s: &str) -> Result<Q, ParseRationalError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let int = |x: &str| -> Result<BigInt, ParseRationalError> {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseRationalError::BadInteger(x.trim().to_string()))
    };
    match t.split_once('/') {
        None => Ok(Q::from_integer(int(t)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(t.to_string()));
            }
            Ok(Q::new(int(n)?, d))
        }
    }
}

/// Canonical `"p/q"` / `"n"` rendering. `BigRational` is always reduced with a
/// positive denominator, so this is injective.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact square root, if `x` is the square of a rational.
pub fn sqrt_exact(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &n * &n == *x.numer() && &d * &d == *x.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

pub fn min_q<'a>(a: &'a Q, b: &'a Q) -> &'a Q {
    if b < a {
        b
    } else {
        a
    }
}

/// Display wrapper for use in `format!`.
pub struct Show<'a>(pub &'a Q);

impl fmt::Display for Show<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&fmt_q(self.0))
    }
}

/// `#[serde(with = "serde_q")]` for a single rational field.
pub mod serde_q {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let raw = RawQ::deserialize(d)?;
        raw.into_q().map_err(serde::de::Error::custom)
    }

    /// Accept both `"3/4"` and bare JSON integers.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RawQ {
        Str(String),
        Int(i64),
    }

    impl RawQ {
        pub(crate) fn into_q(self) -> Result<Q, ParseRationalError> {
            match self {
                RawQ::Str(s) => parse_q(&s),
                RawQ::Int(n) => Ok(q(n)),
            }
        }
    }
}

pub mod serde_q_opt {
    use super::serde_q::RawQ;
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(x) => s.serialize_str(&fmt_q(x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        match Option::<RawQ>::deserialize(d)? {
            None => Ok(None),
            Some(r) => r.into_q().map(Some).map_err(serde::de::Error::custom),
        }
    }
}

pub mod serde_q_vec {
    use super::serde_q::RawQ;
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&fmt_q(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<RawQ>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_q().map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod serde_q_mat {
    use super::serde_q::RawQ;
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Q>], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for row in rows {
            let r: Vec<String> = row.iter().map(fmt_q).collect();
            seq.serialize_element(&r)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Q>>, D::Error> {
        let raw = Vec::<Vec<RawQ>>::deserialize(d)?;
        let mut out = Vec::with_capacity(raw.len());
        for (i, row) in raw.into_iter().enumerate() {
            let mut r = Vec::with_capacity(row.len());
            for (j, x) in row.into_iter().enumerate() {
                r.push(
                    x.into_q()
                        .map_err(|e| serde::de::Error::custom(format!("gram[{i}][{j}]: {e}")))?,
                );
            }
            out.push(r);
        }
        Ok(out)
    }
}
