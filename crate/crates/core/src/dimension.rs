use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// Value of a dimension, height or transcendence degree.
///
/// `Empty` is the value for the zero ring and for a supremum over an empty
/// index set; it sorts below every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DimensionValue {
    Empty,
    Finite(u64),
}

impl DimensionValue {
    pub fn is_empty(self) -> bool {
        matches!(self, DimensionValue::Empty)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            DimensionValue::Empty => None,
            DimensionValue::Finite(d) => Some(d),
        }
    }

    /// Supremum, treating `Empty` as the identity.
    pub fn sup(self, other: DimensionValue) -> DimensionValue {
        self.max(other)
    }

    /// Sum; `Empty` is absorbing.
    pub fn plus(self, other: DimensionValue) -> DimensionValue {
        match (self, other) {
            (DimensionValue::Finite(a), DimensionValue::Finite(b)) => DimensionValue::Finite(a + b),
            _ => DimensionValue::Empty,
        }
    }
}

impl FromIterator<DimensionValue> for DimensionValue {
    fn from_iter<I: IntoIterator<Item = DimensionValue>>(iter: I) -> Self {
        iter.into_iter().fold(DimensionValue::Empty, DimensionValue::sup)
    }
}

impl PartialOrd for DimensionValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DimensionValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (DimensionValue::Empty, DimensionValue::Empty) => Ordering::Equal,
            (DimensionValue::Empty, _) => Ordering::Less,
            (_, DimensionValue::Empty) => Ordering::Greater,
            (DimensionValue::Finite(a), DimensionValue::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for DimensionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionValue::Empty => f.write_str("empty"),
            DimensionValue::Finite(d) => write!(f, "{d}"),
        }
    }
}

// JSON form: the string "empty" or a non-negative integer.
impl Serialize for DimensionValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DimensionValue::Empty => s.serialize_str("empty"),
            DimensionValue::Finite(d) => s.serialize_u64(*d),
        }
    }
}

impl<'de> Deserialize<'de> for DimensionValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = DimensionValue;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("\"empty\" or a non-negative integer")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<DimensionValue, E> {
                Ok(DimensionValue::Finite(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<DimensionValue, E> {
                u64::try_from(v)
                    .map(DimensionValue::Finite)
                    .map_err(|_| E::custom("negative dimension"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<DimensionValue, E> {
                match v {
                    "empty" => Ok(DimensionValue::Empty),
                    other => Err(E::custom(format!("unexpected `{other}`"))),
                }
            }
        }
        d.deserialize_any(V)
    }
}
