use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::point::Point;

/// Algebraic part (signed zero/pole multiplicities) plus transcendental part
/// (orders of exponential singularities).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransalgebraicDivisor {
    pub algebraic: BTreeMap<Point, i64>,
    pub transcendental: BTreeMap<Point, u32>,
}

/// Total transalgebraic degree: `d0` counts algebraic support points that are
/// not singularities, `d_infinity` sums `d_ρ + 1` over singularities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub d0: usize,
    pub d_infinity: u64,
}

impl TransalgebraicDivisor {
    pub fn singularities(&self) -> BTreeSet<Point> {
        self.transcendental.keys().cloned().collect()
    }

    pub fn support(&self) -> BTreeSet<Point> {
        self.algebraic
            .keys()
            .chain(self.transcendental.keys())
            .cloned()
            .collect()
    }

    /// `Σ n_ρ`, zero for the divisor of an actual function.
    pub fn degree(&self) -> i64 {
        self.algebraic.values().sum()
    }

    pub fn degrees(&self) -> DegreeProfile {
        let s = self.singularities();
        DegreeProfile {
            d0: self.algebraic.keys().filter(|p| !s.contains(p)).count(),
            d_infinity: self.transcendental.values().map(|&d| u64::from(d) + 1).sum(),
        }
    }

    /// Sum of algebraic parts. Orders of singularities are not additive
    /// under multiplication, so the transcendental part is left empty.
    pub fn algebraic_sum(&self, other: &Self) -> BTreeMap<Point, i64> {
        let mut out = self.algebraic.clone();
        for (p, n) in &other.algebraic {
            let e = out.entry(p.clone()).or_insert(0);
            *e += n;
            if *e == 0 {
                out.remove(p);
            }
        }
        out
    }

    pub fn negate(&self) -> Self {
        Self {
            algebraic: self.algebraic.iter().map(|(p, n)| (p.clone(), -n)).collect(),
            transcendental: self.transcendental.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraicEntry {
    point: Point,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct TranscendentalEntry {
    point: Point,
    order: u32,
}

#[derive(Serialize, Deserialize)]
struct RawDivisor {
    algebraic: Vec<AlgebraicEntry>,
    transcendental: Vec<TranscendentalEntry>,
}

impl Serialize for TransalgebraicDivisor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawDivisor {
            algebraic: self
                .algebraic
                .iter()
                .map(|(p, &mult)| AlgebraicEntry {
                    point: p.clone(),
                    mult,
                })
                .collect(),
            transcendental: self
                .transcendental
                .iter()
                .map(|(p, &order)| TranscendentalEntry {
                    point: p.clone(),
                    order,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TransalgebraicDivisor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawDivisor::deserialize(d)?;
        let mut out = TransalgebraicDivisor::default();
        for e in raw.algebraic {
            if e.mult != 0 {
                *out.algebraic.entry(e.point).or_insert(0) += e.mult;
            }
        }
        out.algebraic.retain(|_, n| *n != 0);
        for e in raw.transcendental {
            if e.order == 0 {
                return Err(serde::de::Error::custom("singularity order must be ≥ 1"));
            }
            out.transcendental.insert(e.point, e.order);
        }
        Ok(out)
    }
}

impl fmt::Display for TransalgebraicDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self
            .algebraic
            .iter()
            .map(|(p, n)| format!("{n}·({p})"))
            .collect();
        terms.extend(
            self.transcendental
                .iter()
                .map(|(p, d)| format!("{d}·({p})_∞")),
        );
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}
