//! Serde helpers for arbitrary-precision integers.
//!
//! Values that fit in an `i64` are written as JSON numbers; anything wider is
//! written as a decimal string. Both forms are accepted on input.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Newtype used to route a single `BigInt` through the number-or-string encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

struct JsonIntVisitor;

impl<'de> Visitor<'de> for JsonIntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
        v.trim()
            .parse::<BigInt>()
            .map(JsonInt)
            .map_err(|_| E::custom(format!("not an integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(JsonIntVisitor)
    }
}

pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    JsonInt(value.clone()).serialize(serializer)
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
    JsonInt::deserialize(deserializer).map(|v| v.0)
}

/// Same encoding for a list of integers.
pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&JsonInt(v.clone()))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<JsonInt>::deserialize(deserializer).map(|v| v.into_iter().map(|x| x.0).collect())
    }
}

/// Same encoding for an optional integer.
pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<BigInt>, serializer: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => serializer.serialize_some(&JsonInt(v.clone())),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Option<BigInt>, D::Error> {
        Option::<JsonInt>::deserialize(deserializer).map(|v| v.map(|x| x.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_are_numbers_wide_values_are_strings() {
        let small = serde_json::to_string(&JsonInt(BigInt::from(-7))).unwrap();
        assert_eq!(small, "-7");
        let wide: BigInt = "123456789012345678901234567890".parse().unwrap();
        let text = serde_json::to_string(&JsonInt(wide.clone())).unwrap();
        assert_eq!(text, "\"123456789012345678901234567890\"");
        let back: JsonInt = serde_json::from_str(&text).unwrap();
        assert_eq!(back.0, wide);
        let from_num: JsonInt = serde_json::from_str("42").unwrap();
        assert_eq!(from_num.0, BigInt::from(42));
    }
}
