//! The eñe product in its three guises.
//!
//! * On exponent series, the linearized form `(F ⋆ₑ G)_k = −k·F_k·G_k`,
//!   valid for every `k ∈ ℤ`.
//! * On normalized series `f = 1 + a₁z + …`, `f ⋆ g = exp(log f ⋆ₑ log g)`.
//! * On divisors of roots, multiplicative convolution: zeros `α`, `β` with
//!   multiplicities `n`, `m` give the zero `αβ` with multiplicity `n·m`.
//!
//! The coefficients of `f ⋆ g` are universal integer polynomials in the
//! coefficients of `f` and `g`; they are computed here through exp/log
//! rather than by building those polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Gaussian, Poly, RationalFunction};
use crate::error::{Error, Result};
use crate::series::{series_of_rational, SeriesWindow, TruncatedLaurentSeries};

/// `H_k = −k·F_k·G_k` on the intersection of the two windows.
pub fn ene_exp(f: &TruncatedLaurentSeries, g: &TruncatedLaurentSeries) -> TruncatedLaurentSeries {
    let low = f.low().max(g.low());
    let high = f.high().min(g.high());
    TruncatedLaurentSeries::from_fn(low, high, |k| {
        let (a, b) = (f.coeff(k).expect("known"), g.coeff(k).expect("known"));
        if k == 0 || a.is_zero() || b.is_zero() {
            return Gaussian::zero();
        }
        -(&(&a * &b) * &Gaussian::from_int(k))
    })
}

/// A power series with constant term exactly 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct NormalizedSeries(TruncatedLaurentSeries);

impl NormalizedSeries {
    pub fn new(s: TruncatedLaurentSeries) -> Result<Self> {
        if !s.is_power_series() || s.coeff(0) != Some(Gaussian::one()) {
            return Err(Error::SeriesNotNormalized);
        }
        Ok(Self(s.trim_low()))
    }

    /// `1 + 0·z + …` known through `order`.
    pub fn one(order: i64) -> Self {
        Self(TruncatedLaurentSeries::one(SeriesWindow::order(order)))
    }

    /// Polynomial with `p(0) = 1`.
    pub fn from_poly(p: &Poly, order: i64) -> Result<Self> {
        Self::new(TruncatedLaurentSeries::from_poly(p, order))
    }

    /// `exp(F)` for an exponent with `F₀ = 0`.
    pub fn exp_of(exponent: &TruncatedLaurentSeries) -> Result<Self> {
        Ok(Self(exponent.exp()?))
    }

    /// Divide by the constant term.
    pub fn normalize(s: &TruncatedLaurentSeries) -> Result<Self> {
        let c0 = s.coeff(0).ok_or(Error::SeriesNotNormalized)?;
        if !s.is_power_series() || c0.is_zero() {
            return Err(Error::SeriesNotNormalized);
        }
        Self::new(s.scale(&c0.inv()?))
    }

    pub fn series(&self) -> &TruncatedLaurentSeries {
        &self.0
    }

    pub fn into_series(self) -> TruncatedLaurentSeries {
        self.0
    }

    pub fn order(&self) -> i64 {
        self.0.high()
    }

    pub fn log(&self) -> TruncatedLaurentSeries {
        self.0.log().expect("normalized")
    }

    /// Ordinary product; stays normalized.
    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.mul(&other.0))
    }

    pub fn truncate(&self, order: i64) -> Self {
        Self(self.0.truncate(order))
    }

    /// `f ⋆ g`.
    pub fn ene(&self, other: &Self) -> Self {
        ene_series(self, other)
    }
}

impl Deref for NormalizedSeries {
    type Target = TruncatedLaurentSeries;
    fn deref(&self) -> &TruncatedLaurentSeries {
        &self.0
    }
}

impl<'de> Deserialize<'de> for NormalizedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = TruncatedLaurentSeries::deserialize(d)?;
        Self::new(s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for NormalizedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for NormalizedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Normalized[{}]", self.0)
    }
}

/// `f ⋆ g = exp(log f ⋆ₑ log g)`.
pub fn ene_series(f: &NormalizedSeries, g: &NormalizedSeries) -> NormalizedSeries {
    let h = ene_exp(&f.log(), &g.log());
    NormalizedSeries::exp_of(&h).expect("⋆ₑ has no constant term")
}

/// Signed multiplicities at nonzero points: a formal product
/// `Π (1 − z/α)^{n_α}`. Zero multiplicities are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RootDivisor {
    entries: BTreeMap<Gaussian, i64>,
}

#[derive(Serialize, Deserialize)]
struct RootEntry {
    root: Gaussian,
    mult: i64,
}

impl Serialize for RootDivisor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<RootEntry> = self
            .entries
            .iter()
            .map(|(r, &m)| RootEntry {
                root: r.clone(),
                mult: m,
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootDivisor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<RootEntry>::deserialize(d)?;
        let mut out = RootDivisor::new();
        for e in v {
            out.add(e.root, e.mult).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

impl RootDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (Gaussian, i64)>>(entries: I) -> Result<Self> {
        let mut d = Self::new();
        for (r, m) in entries {
            d.add(r, m)?;
        }
        Ok(d)
    }

    /// Accumulate `mult` at `root`; a zero net multiplicity removes it.
    pub fn add(&mut self, root: Gaussian, mult: i64) -> Result<()> {
        if root.is_zero() {
            return Err(Error::InvalidArgument("0 cannot be a root location".into()));
        }
        if mult == 0 {
            return Ok(());
        }
        let e = self.entries.entry(root.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.entries.remove(&root);
        }
        Ok(())
    }

    pub fn multiplicity(&self, root: &Gaussian) -> i64 {
        self.entries.get(root).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Gaussian, i64)> {
        self.entries.iter().map(|(r, &m)| (r, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Π (1 − z/α)^{n_α}` as a rational function with value 1 at 0.
    pub fn to_rational(&self) -> RationalFunction {
        let mut num = Poly::one();
        let mut den = Poly::one();
        for (root, m) in self.iter() {
            let f = Poly::normalized_factor(root).expect("nonzero root");
            if m > 0 {
                num = &num * &f.pow(m as u32);
            } else {
                den = &den * &f.pow((-m) as u32);
            }
        }
        RationalFunction::new(num, den).expect("nonzero den")
    }
}

impl fmt::Display for RootDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (r, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}: {m}")?;
        }
        f.write_str("}")
    }
}

/// Multiplicative convolution: `{α·β ↦ Σ n_α·m_β}`.
pub fn ene_roots(a: &RootDivisor, b: &RootDivisor) -> RootDivisor {
    let mut out = RootDivisor::new();
    for (alpha, n) in a.iter() {
        for (beta, m) in b.iter() {
            out.add(alpha * beta, n * m).expect("product of nonzero roots");
        }
    }
    out
}

/// Expansion of `Π (1 − z/α)^{n_α}` through `order`.
pub fn poly_from_divisor(d: &RootDivisor, order: i64) -> NormalizedSeries {
    let s = series_of_rational(&d.to_rational(), SeriesWindow::order(order));
    NormalizedSeries::new(s).expect("value 1 at 0")
}

/// `c_n + n·a_n·b_n` where `c_n` is the `z^n` coefficient of
/// `(1 + a₁z + …) ⋆ (1 + b₁z + …)`. Only `a[..n]`, `b[..n]` are read.
pub fn universal_coeff_residual(a: &[Gaussian], b: &[Gaussian], n: usize) -> Result<Gaussian> {
    if n < 1 {
        return Err(Error::InvalidArgument("coefficient index must be ≥ 1".into()));
    }
    if a.len() < n || b.len() < n {
        return Err(Error::InvalidArgument(format!(
            "need {n} coefficients per side, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let build = |c: &[Gaussian]| {
        let mut v = vec![Gaussian::one()];
        v.extend_from_slice(&c[..n]);
        NormalizedSeries::from_poly(&Poly::new(v), n as i64).expect("constant term 1")
    };
    let prod = ene_series(&build(a), &build(b));
    let cn = prod.coeff(n as i64).expect("known through n");
    let n_g = Gaussian::from_int(n as i64);
    Ok(&cn + &(&(&a[n - 1] * &b[n - 1]) * &n_g))
}
