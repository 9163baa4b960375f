//! Elements of the max-plus semiring: `-inf` or an exact rational.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// An element of `R ∪ {-inf}`.
///
/// The derived order puts [`Scalar::NegInf`] strictly below every finite
/// value, and compares finite values as rationals. `BigRational` keeps
/// itself in lowest terms, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    NegInf,
    Finite(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid tropical scalar {text:?}: expected \"-inf\", an integer, or \"p/q\"")]
pub struct ParseScalarError {
    pub text: String,
}

impl Scalar {
    pub const fn neg_inf() -> Self {
        Scalar::NegInf
    }

    /// The multiplicative identity `0`.
    pub fn zero() -> Self {
        Scalar::Finite(BigRational::zero())
    }

    pub fn int(value: i64) -> Self {
        Scalar::Finite(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Scalar::Finite(_))
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, Scalar::NegInf)
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            Scalar::NegInf => None,
            Scalar::Finite(q) => Some(q),
        }
    }

    /// Tropical addition `a ⊕ b = max(a, b)`.
    pub fn oplus(&self, other: &Scalar) -> Scalar {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical multiplication `a ⊗ b = a + b`; `-inf` absorbs.
    pub fn otimes(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Finite(a), Scalar::Finite(b)) => Scalar::Finite(a + b),
            _ => Scalar::NegInf,
        }
    }

    /// Tropical division `a ⊘ b = a - b` for finite `b`.
    pub(crate) fn minus(&self, b: &BigRational) -> Scalar {
        match self {
            Scalar::NegInf => Scalar::NegInf,
            Scalar::Finite(a) => Scalar::Finite(a - b),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Finite(q)
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::int(value)
    }
}

/// Canonical text of a rational: `"p"` or `"p/q"` in lowest terms.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    // Only the numerator may carry a sign.
    if denom.starts_with(['-', '+']) || numer.is_empty() || denom.is_empty() {
        return None;
    }
    let numer = BigInt::from_str(numer).ok()?;
    let denom = BigInt::from_str(denom).ok()?;
    if denom.is_zero() || denom.is_negative() {
        return None;
    }
    Some(BigRational::new(numer, denom))
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("-inf") {
            return Ok(Scalar::NegInf);
        }
        parse_rational(t)
            .map(Scalar::Finite)
            .ok_or_else(|| ParseScalarError { text: s.to_string() })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::NegInf => f.write_str("-inf"),
            Scalar::Finite(q) => f.write_str(&format_rational(q)),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

struct ScalarVisitor;

impl Visitor<'_> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("\"-inf\", a rational string like \"-5/2\", or a JSON integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
        Ok(Scalar::int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
        Ok(Scalar::Finite(BigRational::from_integer(BigInt::from(v))))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Scalar, E> {
        Err(E::custom(format!(
            "floating-point entry {v} is not allowed; write it as a rational string"
        )))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(ScalarVisitor)
    }
}

/// Serde adapter writing finite rationals as canonical strings.
pub(crate) mod rational_text {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(values.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let raw: Vec<Scalar> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|s| match s {
                Scalar::Finite(q) => Ok(q),
                Scalar::NegInf => Err(de::Error::custom("weights must be finite rationals")),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oplus_examples() {
        assert_eq!(Scalar::NegInf.oplus(&Scalar::int(3)), Scalar::int(3));
        assert_eq!(Scalar::int(2).oplus(&Scalar::int(2)), Scalar::int(2));
        assert_eq!(
            Scalar::ratio(1, 2).oplus(&Scalar::ratio(-3, 4)),
            Scalar::ratio(1, 2)
        );
    }

    #[test]
    fn otimes_examples() {
        assert_eq!(Scalar::NegInf.otimes(&Scalar::int(5)), Scalar::NegInf);
        assert_eq!(Scalar::int(5).otimes(&Scalar::NegInf), Scalar::NegInf);
        let x = Scalar::ratio(-7, 3);
        assert_eq!(Scalar::zero().otimes(&x), x);
        assert_eq!(
            Scalar::ratio(3, 2).otimes(&Scalar::ratio(-1, 2)),
            Scalar::int(1)
        );
    }

    #[test]
    fn neg_inf_is_below_everything() {
        assert!(Scalar::NegInf < Scalar::int(-1_000_000));
        assert!(Scalar::ratio(-1, 3) < Scalar::zero());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-inf".parse::<Scalar>().unwrap(), Scalar::NegInf);
        assert_eq!("-5/2".parse::<Scalar>().unwrap(), Scalar::ratio(-5, 2));
        assert_eq!("4/2".parse::<Scalar>().unwrap().to_string(), "2");
        assert_eq!(Scalar::ratio(6, -4).to_string(), "-3/2");
        for bad in ["", "1/0", "1/-2", "abc", "1.5", "inf", "/3"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn stored_in_lowest_terms() {
        let s = Scalar::ratio(10, 4);
        let Scalar::Finite(q) = &s else { unreachable!() };
        let re = BigRational::new(q.numer().clone(), q.denom().clone());
        assert_eq!(q.numer(), re.numer());
        assert_eq!(q.denom(), re.denom());
    }

    #[test]
    fn json_accepts_integers_rejects_floats() {
        let v: Vec<Scalar> = serde_json::from_str(r#"[3, "-1/2", "-inf", -4]"#).unwrap();
        assert_eq!(
            v,
            vec![Scalar::int(3), Scalar::ratio(-1, 2), Scalar::NegInf, Scalar::int(-4)]
        );
        assert!(serde_json::from_str::<Vec<Scalar>>("[1.5]").is_err());
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["3","-1/2","-inf","-4"]"#);
    }
}
