//! Euler's rational functions `R_k`, their numerators `P_k`, and truncated
//! polylogarithms.
//!
//! For `k ≥ 1`, `R_k(z) = −Σ_{n≥1} n^{k−1} zⁿ = −z·P_k(z)/(1−z)^k` and
//! `R_{k+1} = z·dR_k/dz`. The same coefficient formula `c_n = −n^{k−1}` is
//! used for every `k ∈ ℤ`; it is the only extension downward that keeps the
//! recurrence and `R_k(0) = 0`, and it gives `R_k = −Li_{1−k}` for `k ≤ 0`
//! (so `R_0 = log(1−z)`).

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{Gaussian, Poly, RationalFunction};
use crate::error::{Error, Result};
use crate::series::{SeriesWindow, TruncatedLaurentSeries};

/// `P_k` together with its index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerNumerator {
    pub k: i64,
    pub poly: Poly,
}

fn numerator_cache() -> &'static Mutex<Vec<Poly>> {
    static CACHE: OnceLock<Mutex<Vec<Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Poly::one()]))
}

/// `P_{k+1} = (1 + (k−1)z)·P_k + z(1−z)·P_k′`, from `P_1 = 1`.
fn next_numerator(p: &Poly, k: i64) -> Poly {
    let a = Poly::new(vec![Gaussian::one(), Gaussian::from_int(k - 1)]);
    let b = Poly::from_ints(&[0, 1, -1]);
    &(&a * p) + &(&b * &p.derivative())
}

pub fn euler_p(k: i64) -> Result<EulerNumerator> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!(
            "P_k is defined for k ≥ 1, got {k}; use the series form for k ≤ 0"
        )));
    }
    let mut cache = numerator_cache().lock().expect("cache poisoned");
    while (cache.len() as i64) < k {
        let j = cache.len() as i64;
        let next = next_numerator(cache.last().expect("seeded"), j);
        cache.push(next);
    }
    Ok(EulerNumerator {
        k,
        poly: cache[(k - 1) as usize].clone(),
    })
}

/// `R_k = −z·P_k/(1−z)^k`, reduced.
pub fn euler_r_rational(k: i64) -> Result<RationalFunction> {
    let p = euler_p(k)?.poly;
    r_from_numerator(&p, k)
}

fn r_from_numerator(p: &Poly, k: i64) -> Result<RationalFunction> {
    let num = &Poly::from_ints(&[0, -1]) * p;
    let den = Poly::from_ints(&[1, -1]).pow(k as u32);
    RationalFunction::new(num, den)
}

/// `−n^{k−1}` as an exact rational.
pub fn euler_coefficient(k: i64, n: u64) -> Gaussian {
    let e = k - 1;
    let base = BigInt::from(n);
    let mag = if e >= 0 {
        BigRational::from_integer(num_traits::pow(base, e as usize))
    } else {
        BigRational::new(BigInt::one(), num_traits::pow(base, (-e) as usize))
    };
    Gaussian::from_rational(-mag)
}

/// `−Σ_{n≥1} n^{k−1} zⁿ` through `window.high`, any integer `k`.
pub fn euler_r_series(k: i64, window: SeriesWindow) -> TruncatedLaurentSeries {
    TruncatedLaurentSeries::from_fn(window.low, window.high, |n| {
        if n >= 1 {
            euler_coefficient(k, n as u64)
        } else {
            Gaussian::zero()
        }
    })
}

/// `Li_k(z) = Σ_{n≥1} n^{−k} zⁿ` through `window.high`, `k ≥ 1`.
pub fn polylog_series(k: i64, window: SeriesWindow) -> Result<TruncatedLaurentSeries> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!(
            "Li_k series is taken for k ≥ 1, got {k}"
        )));
    }
    Ok(-&euler_r_series(1 - k, window))
}

/// `R_k(1/z) = (−1)^k R_k(z)`, checked exactly by cross-multiplication.
pub fn check_functional_equation(k: i64) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "the functional equation is stated for k ≥ 2, got {k}"
        )));
    }
    Ok(functional_equation_holds(&euler_p(k)?.poly, k))
}

/// Same check for an arbitrary candidate numerator in place of `P_k`.
pub fn functional_equation_holds(numerator: &Poly, k: i64) -> bool {
    let Ok(r) = r_from_numerator(numerator, k) else {
        return false;
    };
    let lhs = r.invert_argument();
    let rhs = if k % 2 == 0 { r.clone() } else { -&r };
    // a/b == c/d  ⇔  a·d == c·b
    (lhs.num() * rhs.den()) == (rhs.num() * lhs.den())
}

/// `(k−1)!`.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numerators_from_the_table() {
        assert_eq!(euler_p(1).unwrap().poly, Poly::one());
        assert_eq!(euler_p(4).unwrap().poly, Poly::from_ints(&[1, 4, 1]));
        assert_eq!(
            euler_p(7).unwrap().poly,
            Poly::from_ints(&[1, 57, 302, 302, 57, 1])
        );
        assert!(euler_p(0).is_err());
    }

    #[test]
    fn rational_forms() {
        let r1 = euler_r_rational(1).unwrap();
        let expected = RationalFunction::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(r1, expected);
        let r5 = euler_r_rational(5).unwrap();
        let expected = RationalFunction::new(
            &Poly::from_ints(&[0, -1]) * &Poly::from_ints(&[1, 11, 11, 1]),
            Poly::from_ints(&[1, -1]).pow(5),
        )
        .unwrap();
        assert_eq!(r5, expected);
        assert!(euler_r_rational(0).is_err());
    }

    #[test]
    fn series_forms() {
        let w = SeriesWindow::order(5);
        let r3 = euler_r_series(3, w);
        assert_eq!(r3.coeff(2).unwrap(), Gaussian::from_int(-4));
        assert_eq!(r3.coeff(3).unwrap(), Gaussian::from_int(-9));
        let r0 = euler_r_series(0, w);
        assert_eq!(r0.coeff(3).unwrap(), Gaussian::ratio(-1, 3));
        let rm2 = euler_r_series(-2, w);
        assert_eq!(rm2.coeff(2).unwrap(), Gaussian::ratio(-1, 8));
    }

    #[test]
    fn polylog_coefficients() {
        let w = SeriesWindow::order(6);
        assert_eq!(polylog_series(2, w).unwrap().coeff(4).unwrap(), Gaussian::ratio(1, 16));
        assert_eq!(polylog_series(1, w).unwrap().coeff(5).unwrap(), Gaussian::ratio(1, 5));
        assert!(polylog_series(0, w).is_err());
    }

    #[test]
    fn functional_equation() {
        assert!(check_functional_equation(2).unwrap());
        assert!(check_functional_equation(7).unwrap());
        let mut c = euler_p(5).unwrap().poly.into_coeffs();
        c[1] = &c[1] + &Gaussian::one();
        assert!(!functional_equation_holds(&Poly::new(c), 5));
        assert!(check_functional_equation(1).is_err());
    }
}
