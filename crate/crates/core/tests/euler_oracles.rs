mod common;

use common::*;
use ene::algebra::{Gaussian, Poly, RationalFunction};
use ene::ene::ene_exp;
use ene::euler::{euler_coefficient, euler_p, euler_r_rational, euler_r_series, factorial, polylog_series};
use ene::series::{series_of_rational, SeriesWindow};
use num_traits::Zero;

/// Eulerian number `A(n, m) = Σ_{j=0}^{m} (−1)^j C(n+1, j) (m+1−j)^n`.
fn eulerian(n: u64, m: u64) -> i64 {
    (0..=m)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * binomial(n + 1, j) * ((m + 1 - j) as i64).pow(n as u32)
        })
        .sum()
}

#[test]
fn numerators_are_eulerian_numbers() {
    for k in 2..=14i64 {
        let p = euler_p(k).unwrap().poly;
        let n = (k - 1) as u64;
        let expected: Vec<i64> = (0..n).map(|m| eulerian(n, m)).collect();
        assert_eq!(p, Poly::from_ints(&expected), "k = {k}");
    }
}

#[test]
fn value_at_one_is_factorial() {
    for k in 2..=16i64 {
        let p = euler_p(k).unwrap().poly;
        assert_eq!(p.eval(&g(1)), Gaussian::from_bigint(factorial((k - 1) as u64)));
    }
}

#[test]
fn expansion_by_power_sums() {
    for k in 1..=8i64 {
        let s = series_of_rational(&euler_r_rational(k).unwrap(), SeriesWindow::order(24));
        for n in 1..=24i64 {
            assert_eq!(s.coeff(n), Some(g(-n.pow((k - 1) as u32))), "k = {k}, n = {n}");
        }
        assert_eq!(s.coeff(0), Some(Gaussian::zero()));
    }
}

#[test]
fn repeated_self_product_of_r1() {
    // R_k = R_1 ⋆ₑ … ⋆ₑ R_1: each factor multiplies the n-th coefficient by n
    let w = SeriesWindow::order(16);
    let r1 = euler_r_series(1, w);
    let mut acc = r1.clone();
    for k in 2..=6i64 {
        acc = ene_exp(&acc, &r1);
        assert_eq!(acc, euler_r_series(k, w), "k = {k}");
    }
}

#[test]
fn negative_indices_are_polylogarithms() {
    let w = SeriesWindow::order(12);
    for k in 1..=5i64 {
        assert_eq!(euler_r_series(1 - k, w), -&polylog_series(k, w).unwrap());
        for n in 1..=12u64 {
            assert_eq!(euler_coefficient(1 - k, n), -(&g(1) / &g((n as i64).pow(k as u32))));
        }
    }
}

#[test]
fn theta_recurrence() {
    for k in 1..=10i64 {
        let r = euler_r_rational(k).unwrap();
        let theta = &RationalFunction::z() * &r.derivative();
        assert_eq!(theta, euler_r_rational(k + 1).unwrap());
    }
}
