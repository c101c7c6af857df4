use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{
    partial_fractions, principal_part, Gaussian, Poly, RationalFunction,
};
use crate::error::Result;
use crate::euler::euler_r_rational;

/// `exp = polyAtInfinity + polyAtZero(1/z) + Σ α·R_k(z/z0) + const`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorFactorization {
    pub rat_part: RationalFunction,
    /// Zero constant term.
    pub poly_at_infinity: Poly,
    /// Coefficient `j` multiplies `z^{-j}`; zero constant term.
    pub poly_at_zero: Poly,
    /// `(k, z0, α)`, grouped by `z0` with `k` descending.
    pub polar_terms: Vec<PolarTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarTerm {
    pub k: i64,
    pub z0: Gaussian,
    pub alpha: Gaussian,
}

/// `R_k(z/z0)`.
pub fn euler_generator(k: i64, z0: &Gaussian) -> Result<RationalFunction> {
    euler_r_rational(k)?.rescale_argument(z0)
}

/// Splits the exponent into Euler generators by matching principal parts at
/// each pole, highest order first. `R_k(z/z0)` has a pole of order exactly
/// `k` at `z0`, so the system is triangular.
pub fn factor_generators(
    rat: &RationalFunction,
    exp: &RationalFunction,
) -> Result<GeneratorFactorization> {
    let pf = partial_fractions(exp)?;
    let mut poly_at_infinity = pf.polynomial_part.clone();
    if !poly_at_infinity.is_zero() {
        let mut c = poly_at_infinity.into_coeffs();
        c[0] = Gaussian::zero();
        poly_at_infinity = Poly::new(c);
    }

    let mut poly_at_zero = Poly::zero();
    let mut polar_terms = Vec::new();
    for (z0, cs) in &pf.polar_parts {
        if z0.is_zero() {
            let mut c = vec![Gaussian::zero()];
            c.extend(cs.iter().cloned());
            poly_at_zero = Poly::new(c);
            continue;
        }
        let mut rest = cs.clone();
        for k in (1..=rest.len()).rev() {
            let top = &rest[k - 1];
            if top.is_zero() {
                continue;
            }
            let basis = principal_part(&euler_generator(k as i64, z0)?, z0);
            let alpha = top / &basis[k - 1];
            for (r, b) in rest.iter_mut().zip(&basis) {
                *r = &*r - &(&alpha * b);
            }
            polar_terms.push(PolarTerm {
                k: k as i64,
                z0: z0.clone(),
                alpha,
            });
        }
    }
    Ok(GeneratorFactorization {
        rat_part: rat.clone(),
        poly_at_infinity,
        poly_at_zero,
        polar_terms,
    })
}

impl GeneratorFactorization {
    /// The exponent rebuilt from the generators; equal to the input up to
    /// an additive constant.
    pub fn reassemble_exponent(&self) -> RationalFunction {
        let mut out = RationalFunction::from_poly(self.poly_at_infinity.clone());
        if let Some(d) = self.poly_at_zero.degree() {
            let rev = self.poly_at_zero.reversed(d);
            let at_zero = RationalFunction::new(rev, Poly::monomial(Gaussian::from_int(1), d))
                .expect("nonzero den");
            out = &out + &at_zero;
        }
        for t in &self.polar_terms {
            let g = euler_generator(t.k, &t.z0).expect("k ≥ 1, z0 ≠ 0");
            out = &out + &g.scale(&t.alpha);
        }
        out
    }
}

impl fmt::Display for GeneratorFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.rat_part)?;
        if !self.poly_at_infinity.is_zero() {
            write!(f, "·exp({})", self.poly_at_infinity)?;
        }
        if !self.poly_at_zero.is_zero() {
            write!(f, "·exp(({})|z→1/z)", self.poly_at_zero)?;
        }
        for t in &self.polar_terms {
            write!(f, "·exp(({})·R_{}(z/({})))", t.alpha, t.k, t.z0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    fn g(n: i64) -> Gaussian {
        Gaussian::from_int(n)
    }

    fn alphas(fac: &GeneratorFactorization) -> Vec<(i64, Gaussian, Gaussian)> {
        fac.polar_terms
            .iter()
            .map(|t| (t.k, t.z0.clone(), t.alpha.clone()))
            .collect()
    }

    fn differs_by_constant(a: &RationalFunction, b: &RationalFunction) -> bool {
        (a - b).as_constant().is_some()
    }

    #[test]
    fn simple_pole() {
        let e = rf(&[1], &[1, -1]);
        let fac = factor_generators(&RationalFunction::one(), &e).unwrap();
        assert_eq!(alphas(&fac), vec![(1, g(1), g(-1))]);
        assert!(differs_by_constant(&fac.reassemble_exponent(), &e));
    }

    #[test]
    fn double_pole() {
        let e = rf(&[1], &[1, -2, 1]);
        let fac = factor_generators(&RationalFunction::one(), &e).unwrap();
        assert_eq!(alphas(&fac), vec![(2, g(1), g(-1)), (1, g(1), g(-1))]);
        assert_eq!(&fac.reassemble_exponent() - &e, RationalFunction::constant(g(-1)));
    }

    #[test]
    fn polynomial_exponent() {
        let e = rf(&[0, 0, 1], &[1]);
        let fac = factor_generators(&RationalFunction::one(), &e).unwrap();
        assert_eq!(fac.poly_at_infinity, Poly::from_ints(&[0, 0, 1]));
        assert!(fac.polar_terms.is_empty());
    }

    #[test]
    fn pole_at_zero_and_elsewhere() {
        // 3 + 2z + 1/z² − 5/z + 7/(z − 1/2)³
        let half = Gaussian::ratio(1, 2);
        let cube = Poly::linear_root(&half).pow(3);
        let e = &(&rf(&[3, 2], &[1]) + &rf(&[1, -5], &[0, 0, 1]))
            + &RationalFunction::new(Poly::from_ints(&[7]), cube).unwrap();
        let fac = factor_generators(&RationalFunction::one(), &e).unwrap();
        assert_eq!(fac.poly_at_infinity, Poly::from_ints(&[0, 2]));
        assert_eq!(fac.poly_at_zero, Poly::from_ints(&[0, -5, 1]));
        assert!(fac.polar_terms.iter().all(|t| t.z0 == half));
        assert!(differs_by_constant(&fac.reassemble_exponent(), &e));
    }
}
