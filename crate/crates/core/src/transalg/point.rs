use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Gaussian;

/// A point of the Riemann sphere with exact finite coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Finite(Gaussian),
    Infinity,
}

impl Point {
    pub fn finite(&self) -> Option<&Gaussian> {
        match self {
            Point::Finite(z) => Some(z),
            Point::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

impl From<Gaussian> for Point {
    fn from(z: Gaussian) -> Self {
        Point::Finite(z)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(z) => write!(f, "{z}"),
            Point::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Point::Finite(z) => z.serialize(s),
            Point::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        if v.as_str() == Some("inf") {
            return Ok(Point::Infinity);
        }
        Gaussian::deserialize(v)
            .map(Point::Finite)
            .map_err(serde::de::Error::custom)
    }
}
