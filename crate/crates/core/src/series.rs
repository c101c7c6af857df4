//! Truncated Laurent series over the Gaussian rationals.
//!
//! A series stores the coefficients `c_k` for `k ∈ [low, high]`. Indices
//! below `low` are zero (the expansion starts there); indices above `high`
//! are *unknown*. Every operation computes the widest window on which its
//! result is provably determined by the known inputs, so identities can be
//! checked exactly "to order N" without ever assuming a truncated tail is
//! zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{power_series_quotient, write_term, Gaussian, Poly, RationalFunction};
use crate::error::{Error, Result};

/// Truncation order used when the caller does not choose one.
pub const DEFAULT_ORDER: i64 = 16;

/// Requested expansion window `[low, high]` with `low ≤ 0 ≤ high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesWindow {
    pub low: i64,
    pub high: i64,
}

impl SeriesWindow {
    pub fn new(low: i64, high: i64) -> Result<Self> {
        if low > 0 || high < 0 {
            return Err(Error::InvalidArgument(format!(
                "series window [{low}, {high}] must contain 0"
            )));
        }
        Ok(Self { low, high })
    }

    /// Power-series window `[0, order]`.
    pub fn order(order: i64) -> Self {
        Self {
            low: 0,
            high: order.max(0),
        }
    }
}

impl Default for SeriesWindow {
    fn default() -> Self {
        Self::order(DEFAULT_ORDER)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSeries")]
pub struct TruncatedLaurentSeries {
    low: i64,
    high: i64,
    coeffs: Vec<Gaussian>,
}

#[derive(Deserialize)]
struct RawSeries {
    low: i64,
    high: i64,
    coeffs: Vec<Gaussian>,
}

impl TryFrom<RawSeries> for TruncatedLaurentSeries {
    type Error = Error;
    fn try_from(raw: RawSeries) -> Result<Self> {
        Self::new(raw.low, raw.high, raw.coeffs)
    }
}

impl TruncatedLaurentSeries {
    /// `coeffs[i]` is the coefficient of `z^(low + i)`; exactly
    /// `high − low + 1` entries are required.
    pub fn new(low: i64, high: i64, coeffs: Vec<Gaussian>) -> Result<Self> {
        if low > 0 {
            return Err(Error::InvalidArgument(format!("low index {low} must be ≤ 0")));
        }
        let expected = (high - low + 1).max(0) as usize;
        if coeffs.len() != expected {
            return Err(Error::InvalidArgument(format!(
                "window [{low}, {high}] needs {expected} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self { low, high, coeffs })
    }

    pub fn from_fn(low: i64, high: i64, mut f: impl FnMut(i64) -> Gaussian) -> Self {
        let low = low.min(0);
        Self {
            low,
            high,
            coeffs: (low..=high).map(&mut f).collect(),
        }
    }

    pub fn zero(window: SeriesWindow) -> Self {
        Self::from_fn(window.low, window.high, |_| Gaussian::zero())
    }

    pub fn one(window: SeriesWindow) -> Self {
        Self::constant(Gaussian::one(), window)
    }

    pub fn constant(c: Gaussian, window: SeriesWindow) -> Self {
        Self::from_fn(window.low, window.high, |k| {
            if k == 0 {
                c.clone()
            } else {
                Gaussian::zero()
            }
        })
    }

    /// `c·z^k`, widening `low` if `k` is negative.
    pub fn monomial(c: Gaussian, k: i64, window: SeriesWindow) -> Self {
        Self::from_fn(window.low.min(k), window.high, |j| {
            if j == k {
                c.clone()
            } else {
                Gaussian::zero()
            }
        })
    }

    /// A polynomial, known exactly through `high`.
    pub fn from_poly(p: &Poly, high: i64) -> Self {
        Self::from_fn(0, high, |k| p.coeff(k as usize))
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.high
    }

    pub fn coeffs(&self) -> &[Gaussian] {
        &self.coeffs
    }

    /// `Some(0)` below the stored range, `None` above the truncation order.
    pub fn coeff(&self, k: i64) -> Option<Gaussian> {
        if k > self.high {
            None
        } else if k < self.low {
            Some(Gaussian::zero())
        } else {
            Some(self.coeffs[(k - self.low) as usize].clone())
        }
    }

    fn at(&self, k: i64) -> &Gaussian {
        &self.coeffs[(k - self.low) as usize]
    }

    /// Lowest index with a known nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.low + i as i64)
    }

    /// Lower bound on the index of the first nonzero coefficient, using the
    /// known window when every known coefficient vanishes.
    fn valuation_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.high + 1)
    }

    /// True when no coefficient at a negative index is nonzero.
    pub fn is_power_series(&self) -> bool {
        (self.low..0.min(self.high + 1)).all(|k| self.at(k).is_zero())
    }

    /// Forget everything above `high`.
    pub fn truncate(&self, high: i64) -> Self {
        let high = high.min(self.high);
        Self::from_fn(self.low, high, |k| self.coeff(k).expect("known"))
    }

    /// Drop zero coefficients stored at negative indices.
    pub fn trim_low(&self) -> Self {
        let v = self.valuation().unwrap_or(0).min(0);
        Self::from_fn(v, self.high, |k| self.coeff(k).expect("known"))
    }

    /// Equality on the common known window.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let lo = self.low.min(other.low);
        let hi = self.high.min(other.high);
        (lo..=hi).all(|k| self.coeff(k) == other.coeff(k))
    }

    /// First index in the common window where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<i64> {
        let lo = self.low.min(other.low);
        let hi = self.high.min(other.high);
        (lo..=hi).find(|&k| self.coeff(k) != other.coeff(k))
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        Self {
            low: self.low,
            high: self.high,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product on the provably known window.
    pub fn mul(&self, other: &Self) -> Self {
        let high = (self.high + other.valuation_bound()).min(other.high + self.valuation_bound());
        let low = (self.low + other.low).min(0);
        Self::from_fn(low, high, |k| {
            let lo = self.low.max(k - other.high);
            let hi = self.high.min(k - other.low);
            let mut acc = Gaussian::zero();
            for i in lo..=hi {
                let a = self.at(i);
                if a.is_zero() {
                    continue;
                }
                acc += &(a * other.at(k - i));
            }
            acc
        })
    }

    /// Multiplicative inverse; needs a known nonzero coefficient.
    pub fn inverse(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::SeriesNotInvertible)?;
        // s = z^v · u with u(0) ≠ 0, u known through high − v.
        let n = (self.high - v + 1) as usize;
        let u: Vec<Gaussian> = (0..n as i64).map(|j| self.at(v + j).clone()).collect();
        let inv = power_series_quotient(&Poly::one(), &Poly::new(u), n);
        Ok(Self::from_fn(-v, self.high - 2 * v, |k| {
            let j = k + v;
            if j < 0 {
                Gaussian::zero()
            } else {
                inv[j as usize].clone()
            }
        }))
    }

    /// `d/dz`.
    pub fn derivative(&self) -> Self {
        Self::from_fn(self.low - 1, self.high - 1, |k| {
            match self.coeff(k + 1) {
                Some(c) => &c * &Gaussian::from_int(k + 1),
                None => Gaussian::zero(),
            }
        })
    }

    /// `θ = z·d/dz`: `c_k ↦ k·c_k`, same window.
    pub fn z_derivative(&self) -> Self {
        Self::from_fn(self.low, self.high, |k| self.at(k) * &Gaussian::from_int(k))
    }

    /// Antiderivative with zero constant term; needs a vanishing `z^{-1}`
    /// coefficient.
    pub fn integrate(&self) -> Result<Self> {
        if self.coeff(-1).is_some_and(|c| !c.is_zero()) {
            return Err(Error::InvalidArgument(
                "cannot integrate a series with a z^-1 term".into(),
            ));
        }
        Ok(Self::from_fn(self.low + 1, self.high + 1, |k| {
            if k == 0 {
                return Gaussian::zero();
            }
            let c = self.coeff(k - 1).unwrap_or_else(Gaussian::zero);
            &c / &Gaussian::from_int(k)
        }))
    }

    /// `s(z/u)`: `c_k ↦ c_k·u^{−k}`.
    pub fn rescale(&self, u: &Gaussian) -> Result<Self> {
        let inv = u.inv()?;
        Ok(Self::from_fn(self.low, self.high, |k| {
            self.at(k) * &inv.pow(k).expect("nonzero")
        }))
    }

    /// Regular part `Σ_{k≥0}` and principal part `Σ_{k<0}`.
    pub fn split_principal(&self) -> (Self, Self) {
        let regular = Self::from_fn(0, self.high, |k| self.coeff(k).expect("known"));
        let principal = Self::from_fn(self.low, self.high, |k| {
            if k < 0 {
                self.at(k).clone()
            } else {
                Gaussian::zero()
            }
        });
        (regular, principal)
    }

    /// Logarithm of a series with constant term exactly 1.
    pub fn log(&self) -> Result<Self> {
        if !self.is_power_series() || self.coeff(0) != Some(Gaussian::one()) {
            return Err(Error::SeriesNotNormalized);
        }
        // n·L_n = n·a_n − Σ_{k=1}^{n−1} k·L_k·a_{n−k}
        let n = self.high.max(0) as usize;
        let a: Vec<Gaussian> = (0..=n as i64).map(|k| self.coeff(k).expect("known")).collect();
        let mut kl: Vec<Gaussian> = vec![Gaussian::zero()];
        for m in 1..=n {
            let mut acc = &a[m] * &Gaussian::from_int(m as i64);
            for k in 1..m {
                if !kl[k].is_zero() && !a[m - k].is_zero() {
                    acc -= &(&kl[k] * &a[m - k]);
                }
            }
            kl.push(acc);
        }
        Ok(Self::from_fn(0, self.high, |k| match k {
            0 => Gaussian::zero(),
            _ => &kl[k as usize] / &Gaussian::from_int(k),
        }))
    }

    /// Exponential of a series with zero constant term and no negative
    /// indices.
    pub fn exp(&self) -> Result<Self> {
        if !self.is_power_series() || self.coeff(0).is_some_and(|c| !c.is_zero()) {
            return Err(Error::ExponentNotNilpotent);
        }
        // n·e_n = Σ_{k=1}^{n} k·F_k·e_{n−k}
        let n = self.high.max(0) as usize;
        let mut e = vec![Gaussian::one()];
        let kf: Vec<Gaussian> = (0..=n as i64)
            .map(|k| self.coeff(k).map_or_else(Gaussian::zero, |c| &c * &Gaussian::from_int(k)))
            .collect();
        for m in 1..=n {
            let mut acc = Gaussian::zero();
            for k in 1..=m {
                if !kf[k].is_zero() {
                    acc += &(&kf[k] * &e[m - k]);
                }
            }
            e.push(&acc / &Gaussian::from_int(m as i64));
        }
        Ok(Self::from_fn(0, self.high, |k| e[k as usize].clone()))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Gaussian, Gaussian) -> Gaussian) -> Self {
        let low = self.low.min(other.low);
        let high = self.high.min(other.high);
        Self::from_fn(low, high, |k| {
            f(self.coeff(k).expect("known"), other.coeff(k).expect("known"))
        })
    }
}

impl<'a> Add<&'a TruncatedLaurentSeries> for &'a TruncatedLaurentSeries {
    type Output = TruncatedLaurentSeries;
    fn add(self, rhs: &TruncatedLaurentSeries) -> TruncatedLaurentSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a TruncatedLaurentSeries> for &'a TruncatedLaurentSeries {
    type Output = TruncatedLaurentSeries;
    fn sub(self, rhs: &TruncatedLaurentSeries) -> TruncatedLaurentSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a TruncatedLaurentSeries> for &'a TruncatedLaurentSeries {
    type Output = TruncatedLaurentSeries;
    fn mul(self, rhs: &TruncatedLaurentSeries) -> TruncatedLaurentSeries {
        TruncatedLaurentSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedLaurentSeries {
    type Output = TruncatedLaurentSeries;
    fn neg(self) -> TruncatedLaurentSeries {
        self.scale(&-Gaussian::one())
    }
}

impl fmt::Display for TruncatedLaurentSeries {
    /// `1 - (1/6)z + O(z^9)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for k in self.low..=self.high {
            let c = self.at(k);
            if !c.is_zero() {
                write_term(&mut out, c, "z", k);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        let next = self.high + 1;
        match next {
            0 => out.push_str(" + O(1)"),
            1 => out.push_str(" + O(z)"),
            _ => out.push_str(&format!(" + O(z^{next})")),
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for TruncatedLaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{self}]")
    }
}

pub fn series_mul(s: &TruncatedLaurentSeries, t: &TruncatedLaurentSeries) -> TruncatedLaurentSeries {
    s.mul(t)
}

pub fn series_log(s: &TruncatedLaurentSeries) -> Result<TruncatedLaurentSeries> {
    s.log()
}

pub fn series_exp(f: &TruncatedLaurentSeries) -> Result<TruncatedLaurentSeries> {
    f.exp()
}

pub fn series_z_derivative(s: &TruncatedLaurentSeries) -> TruncatedLaurentSeries {
    s.z_derivative()
}

pub fn series_rescale(s: &TruncatedLaurentSeries, u: &Gaussian) -> Result<TruncatedLaurentSeries> {
    s.rescale(u)
}

/// Laurent expansion at 0. The stored range always reaches down to the full
/// principal part, even if `window.low` is higher.
pub fn series_of_rational(r: &RationalFunction, window: SeriesWindow) -> TruncatedLaurentSeries {
    if r.is_zero() {
        return TruncatedLaurentSeries::zero(window);
    }
    let m = r.den().valuation().expect("nonzero den") as i64;
    let d1 = Poly::new(r.den().coeffs()[m as usize..].to_vec());
    let n = (window.high + m + 1).max(0) as usize;
    let e = power_series_quotient(r.num(), &d1, n);
    TruncatedLaurentSeries::from_fn(window.low.min(-m), window.high, |k| {
        let j = k + m;
        if j < 0 {
            Gaussian::zero()
        } else {
            e[j as usize].clone()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ser(c: &[i64], high: i64) -> TruncatedLaurentSeries {
        TruncatedLaurentSeries::from_fn(0, high, |k| {
            Gaussian::from_int(*c.get(k as usize).unwrap_or(&0))
        })
    }

    fn geometric(high: i64) -> TruncatedLaurentSeries {
        TruncatedLaurentSeries::from_fn(0, high, |_| Gaussian::one())
    }

    #[test]
    fn square_of_one_plus_z() {
        let s = ser(&[1, 1], 6);
        assert_eq!(s.mul(&s), ser(&[1, 2, 1], 6));
    }

    #[test]
    fn geometric_inverse() {
        let p = ser(&[1, -1], 10);
        let prod = p.mul(&geometric(10));
        assert_eq!(prod, ser(&[1], 10));
    }

    #[test]
    fn log_of_one_minus_z() {
        let l = ser(&[1, -1], 8).log().unwrap();
        for k in 1..=8 {
            assert_eq!(l.coeff(k).unwrap(), Gaussian::ratio(-1, k));
        }
        assert_eq!(l.coeff(0).unwrap(), Gaussian::zero());
        assert_eq!(l.high(), 8);
    }

    #[test]
    fn log_of_one_is_zero() {
        assert_eq!(ser(&[1], 5).log().unwrap(), ser(&[], 5));
    }

    #[test]
    fn log_requires_normalization() {
        assert_eq!(ser(&[2, 1], 5).log(), Err(Error::SeriesNotNormalized));
    }

    #[test]
    fn exp_inverts_log_of_one_minus_z() {
        let f = TruncatedLaurentSeries::from_fn(0, 6, |k| {
            if k == 0 {
                Gaussian::zero()
            } else {
                Gaussian::ratio(-1, k)
            }
        });
        assert_eq!(f.exp().unwrap(), ser(&[1, -1], 6));
        assert_eq!(ser(&[], 4).exp().unwrap(), ser(&[1], 4));
    }

    #[test]
    fn exp_rejects_constant_and_principal_parts() {
        assert_eq!(ser(&[1, 1], 4).exp(), Err(Error::ExponentNotNilpotent));
        let laurent = TruncatedLaurentSeries::monomial(Gaussian::one(), -1, SeriesWindow::order(4));
        assert_eq!(laurent.exp(), Err(Error::ExponentNotNilpotent));
    }

    #[test]
    fn theta_on_laurent_index() {
        let s = TruncatedLaurentSeries::monomial(Gaussian::one(), -2, SeriesWindow::order(3));
        let t = s.z_derivative();
        assert_eq!(t.coeff(-2).unwrap(), Gaussian::from_int(-2));
        let z = TruncatedLaurentSeries::monomial(Gaussian::one(), 1, SeriesWindow::order(3));
        assert_eq!(z.z_derivative(), z);
    }

    #[test]
    fn rescale_geometric() {
        let s = geometric(6).rescale(&Gaussian::from_int(2)).unwrap();
        for k in 0..=6 {
            assert_eq!(s.coeff(k).unwrap(), Gaussian::ratio(1, 1 << k));
        }
        assert_eq!(geometric(6).rescale(&Gaussian::one()).unwrap(), geometric(6));
        assert!(geometric(3).rescale(&Gaussian::zero()).is_err());
    }

    #[test]
    fn rational_expansions() {
        let r = RationalFunction::new(Poly::one(), Poly::from_ints(&[1, -1])).unwrap();
        assert_eq!(series_of_rational(&r, SeriesWindow::order(7)), geometric(7));
        let inv_z = RationalFunction::new(Poly::one(), Poly::z()).unwrap();
        let s = series_of_rational(&inv_z, SeriesWindow::order(3));
        assert_eq!(s.low(), -1);
        assert_eq!(s.coeff(-1).unwrap(), Gaussian::one());
        assert_eq!(s.valuation(), Some(-1));
    }

    #[test]
    fn laurent_product_window() {
        // (1/z)·(1 + z + ... + z^5 + O(z^6)) is known through z^4
        let inv_z = TruncatedLaurentSeries::monomial(Gaussian::one(), -1, SeriesWindow::order(5));
        let p = inv_z.mul(&geometric(5));
        assert_eq!(p.high(), 4);
        assert_eq!(p.coeff(-1).unwrap(), Gaussian::one());
    }

    #[test]
    fn inverse_with_positive_valuation() {
        // 1/(z - z^2) = z^{-1}(1 + z + z^2 + ...)
        let s = ser(&[0, 1, -1], 6);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.low(), -1);
        assert_eq!(inv.high(), 4);
        for k in -1..=4 {
            assert_eq!(inv.coeff(k).unwrap(), Gaussian::one());
        }
    }

    #[test]
    fn display() {
        let s = TruncatedLaurentSeries::from_fn(0, 8, |k| match k {
            0 => Gaussian::one(),
            1 => Gaussian::ratio(-1, 6),
            _ => Gaussian::zero(),
        });
        assert_eq!(s.to_string(), "1 - (1/6)z + O(z^9)");
    }

    #[test]
    fn json_shape() {
        let s = ser(&[1, -1], 2);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v, serde_json::json!({"low": 0, "high": 2, "coeffs": ["1", "-1", "0"]}));
        let back: TruncatedLaurentSeries = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
        let bad = serde_json::json!({"low": 0, "high": 3, "coeffs": ["1"]});
        assert!(serde_json::from_value::<TruncatedLaurentSeries>(bad).is_err());
    }
}
