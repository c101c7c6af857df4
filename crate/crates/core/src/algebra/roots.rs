//! Root location: an approximate simultaneous iteration for complex
//! polynomials, and exact extraction of roots lying in ℚ(i).
//!
//! Exact extraction never trusts floating point. If `s` is square-free with
//! Gaussian-integer coefficients and leading coefficient `L`, every root
//! `r ∈ ℚ(i)` has `L·r` integral over ℤ[i], hence `L·r ∈ ℤ[i]`. Approximate
//! roots only propose the candidates `round(L·r)/L`; each is then checked
//! by exact evaluation.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Zero};

use super::poly::Poly;
use super::scalar::Gaussian;
use crate::error::{Error, Result};

/// Default iteration cap for [`aberth`].
pub const MAX_ITERATIONS: usize = 500;

/// Yun's square-free factorization: `p = c · Π s_i^i` with each `s_i` monic
/// and square-free. Returns the nonconstant `(s_i, i)`.
pub fn squarefree_factorization(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = p.monic();
    let dp = p.derivative();
    let a0 = Poly::gcd(&p, &dp);
    let mut b = p.exact_div(&a0).expect("gcd divides");
    let mut c = dp.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = Poly::gcd(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of a polynomial given by approximate coefficients
/// (lowest degree first), by Aberth–Ehrlich iteration followed by Newton
/// polishing. `tol` bounds the final relative correction step.
pub fn aberth(coeffs: &[Complex64], tol: f64, max_iter: usize) -> Result<Vec<Complex64>> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[n];
    if n == 1 {
        return Ok(vec![-coeffs[0] / lead]);
    }
    // Cauchy bound for the initial circle.
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius * 0.5, theta)
        })
        .collect();

    let mut last_step = f64::INFINITY;
    for _ in 0..max_iter {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = horner(&coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if w.is_finite() {
                z[i] -= w;
                max_step = max_step.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        last_step = max_step;
        if max_step <= tol {
            polish(&coeffs, &mut z);
            return Ok(z);
        }
    }
    let residual = z
        .iter()
        .map(|&r| horner(&coeffs, r).0.norm())
        .fold(0.0, f64::max);
    Err(Error::RootsDidNotConverge {
        iterations: max_iter,
        residual: residual.max(last_step),
        degree: n,
    })
}

fn polish(coeffs: &[Complex64], z: &mut [Complex64]) {
    for r in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(coeffs, *r);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if !step.is_finite() {
                break;
            }
            *r -= step;
        }
    }
}

/// Approximate roots with multiplicities, computed per square-free factor so
/// repeated roots do not slow the iteration down.
pub fn approximate_roots(p: &Poly, tol: f64) -> Result<Vec<(Complex64, usize)>> {
    let mut out = Vec::new();
    for (s, mult) in squarefree_factorization(p) {
        let c: Vec<Complex64> = s.coeffs().iter().map(Gaussian::to_complex64).collect();
        for r in aberth(&c, tol, MAX_ITERATIONS)? {
            out.push((r, mult));
        }
    }
    Ok(out)
}

fn round_to_bigint(x: f64) -> Option<BigInt> {
    BigInt::from_f64(x.round())
}

/// Exact roots with multiplicities, provided `p` splits over ℚ(i).
/// Results are sorted by the scalar ordering. Constant polynomials have no
/// roots; the zero polynomial is rejected.
pub fn gaussian_roots(p: &Poly) -> Result<Vec<(Gaussian, usize)>> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("roots of the zero polynomial".into()));
    }
    let mut out = Vec::new();
    for (s, mult) in squarefree_factorization(p) {
        for r in squarefree_roots(&s)? {
            out.push((r, mult));
        }
    }
    out.sort();
    Ok(out)
}

fn squarefree_roots(s: &Poly) -> Result<Vec<Gaussian>> {
    let deg = s.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Vec::new());
    }
    if deg == 1 {
        return Ok(vec![-(&s.coeff(0) / &s.coeff(1))]);
    }
    // Strip the root at zero first so the integrality scaling stays small.
    if s.coeff(0).is_zero() {
        let rest = s.exact_div(&Poly::z()).expect("z divides");
        let mut roots = squarefree_roots(&rest)?;
        roots.push(Gaussian::zero());
        return Ok(roots);
    }
    let int_coeffs = s.gaussian_integer_coeffs();
    let (lre, lim) = int_coeffs.last().cloned().expect("nonzero");
    let lead = Gaussian::new(BigRational::from_integer(lre), BigRational::from_integer(lim));
    let lead_c = lead.to_complex64();
    let approx = aberth(
        &s.coeffs().iter().map(Gaussian::to_complex64).collect::<Vec<_>>(),
        1e-14,
        MAX_ITERATIONS,
    )
    .map_err(|_| Error::PoleOutsideField)?;

    let mut roots: Vec<Gaussian> = Vec::with_capacity(deg);
    let mut rest = s.clone();
    for r in approx {
        let scaled = r * lead_c;
        let (Some(a), Some(b)) = (round_to_bigint(scaled.re), round_to_bigint(scaled.im)) else {
            return Err(Error::PoleOutsideField);
        };
        let candidate = &Gaussian::new(BigRational::from_integer(a), BigRational::from_integer(b)) / &lead;
        if roots.contains(&candidate) || !rest.eval(&candidate).is_zero() {
            return Err(Error::PoleOutsideField);
        }
        rest = rest
            .exact_div(&Poly::linear_root(&candidate))
            .expect("verified root divides");
        roots.push(candidate);
    }
    Ok(roots)
}
