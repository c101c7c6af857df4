use std::fmt;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::transalg::Point;

pub type ApproxComplex = Complex64;

/// A point of the Riemann sphere in floating point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpherePoint {
    Finite(ApproxComplex),
    Infinity,
}

impl SpherePoint {
    pub fn from_point(p: &Point) -> Self {
        match p {
            Point::Finite(z) => SpherePoint::Finite(z.to_complex64()),
            Point::Infinity => SpherePoint::Infinity,
        }
    }
}

impl From<ApproxComplex> for SpherePoint {
    fn from(z: ApproxComplex) -> Self {
        SpherePoint::Finite(z)
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Finite(z) if z.im >= 0.0 => write!(f, "{:.6} + {:.6}i", z.re, z.im),
            SpherePoint::Finite(z) => write!(f, "{:.6} - {:.6}i", z.re, -z.im),
            SpherePoint::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for SpherePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SpherePoint::Finite(z) => [z.re, z.im].serialize(s),
            SpherePoint::Infinity => s.serialize_str("inf"),
        }
    }
}

/// `2|a − b| / √((1+|a|²)(1+|b|²))`, and `2/√(1+|a|²)` to infinity.
pub fn chordal_distance(a: SpherePoint, b: SpherePoint) -> f64 {
    match (a, b) {
        (SpherePoint::Infinity, SpherePoint::Infinity) => 0.0,
        (SpherePoint::Finite(z), SpherePoint::Infinity)
        | (SpherePoint::Infinity, SpherePoint::Finite(z)) => 2.0 / (1.0 + z.norm_sqr()).sqrt(),
        (SpherePoint::Finite(z), SpherePoint::Finite(w)) => {
            2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()) * (1.0 + w.norm_sqr())).sqrt()
        }
    }
}

fn directed(a: &[SpherePoint], b: &[SpherePoint]) -> f64 {
    a.iter()
        .map(|&p| {
            b.iter()
                .map(|&q| chordal_distance(p, q))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Hausdorff distance of two finite sets in the chordal metric.
pub fn hausdorff_distance(a: &[SpherePoint], b: &[SpherePoint]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(directed(a, b).max(directed(b, a)))
}
