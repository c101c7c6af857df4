#![allow(dead_code)]

use ene::algebra::{Gaussian, Poly};
use ene::ene::NormalizedSeries;
use proptest::prelude::*;

pub fn g(n: i64) -> Gaussian {
    Gaussian::from_int(n)
}

/// Small elements of ℚ(i).
pub fn scalar() -> impl Strategy<Value = Gaussian> {
    (-6i64..=6, 1i64..=4, -3i64..=3, 1i64..=3).prop_map(|(a, b, c, d)| Gaussian::complex(a, b, c, d))
}

pub fn nonzero_scalar() -> impl Strategy<Value = Gaussian> {
    scalar().prop_filter("nonzero", |s| !num_traits::Zero::is_zero(s))
}

/// `1 + a_1 z + … + a_d z^d`.
pub fn normalized_poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(scalar(), 0..=max_degree).prop_map(|mut c| {
        c.insert(0, Gaussian::from_int(1));
        Poly::new(c)
    })
}

pub fn normalized_series(max_degree: usize, order: i64) -> impl Strategy<Value = NormalizedSeries> {
    normalized_poly(max_degree).prop_map(move |p| NormalizedSeries::from_poly(&p, order).expect("p(0) = 1"))
}

/// Naive product of polynomials, truncated to degree `n`.
pub fn truncated_product(a: &[Gaussian], b: &[Gaussian], n: usize) -> Vec<Gaussian> {
    let mut out = vec![Gaussian::from_int(0); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        for (j, y) in b.iter().enumerate() {
            if i + j > n {
                break;
            }
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}
