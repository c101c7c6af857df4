use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::RationalFunction;
use super::roots::gaussian_roots;
use super::scalar::Gaussian;
use crate::error::Result;

/// `R = polynomial_part + Σ_ρ Σ_j c_j/(z−ρ)^j`. `polar_parts[ρ][j-1]` is `c_j`;
/// the last entry of each list is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarDecomposition {
    pub polynomial_part: Poly,
    pub polar_parts: BTreeMap<Gaussian, Vec<Gaussian>>,
}

impl PolarDecomposition {
    /// Rebuilds the rational function.
    pub fn reassemble(&self) -> RationalFunction {
        let mut acc = RationalFunction::from_poly(self.polynomial_part.clone());
        for (rho, cs) in &self.polar_parts {
            acc = &acc + &polar_term(rho, cs);
        }
        acc
    }

    pub fn poles(&self) -> impl Iterator<Item = &Gaussian> {
        self.polar_parts.keys()
    }
}

/// `Σ_j c_j/(z−ρ)^j` as one rational function.
pub fn polar_term(rho: &Gaussian, cs: &[Gaussian]) -> RationalFunction {
    let m = cs.len();
    // Σ_j c_j (z−ρ)^{m−j} / (z−ρ)^m
    let lin = Poly::linear_root(rho);
    let mut num = Poly::zero();
    for (j, c) in cs.iter().enumerate() {
        num = &num + &lin.pow((m - j - 1) as u32).scale(c);
    }
    RationalFunction::new(num, lin.pow(m as u32)).expect("nonzero den")
}

/// First `n` coefficients of `num/den` at 0; `den(0) ≠ 0`.
pub fn power_series_quotient(num: &Poly, den: &Poly, n: usize) -> Vec<Gaussian> {
    let d0_inv = den.coeff(0).inv().expect("den(0) must be nonzero");
    let dc = den.coeffs();
    let mut out: Vec<Gaussian> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num.coeff(k);
        for (j, d) in dc.iter().enumerate().skip(1).take(k) {
            acc -= &(d * &out[k - j]);
        }
        out.push(&acc * &d0_inv);
    }
    out
}

/// Multiplicity of `z0` as a root of the reduced denominator.
pub fn polar_order(r: &RationalFunction, z0: &Gaussian) -> usize {
    r.den().root_multiplicity(z0)
}

/// Principal part at `z0`: `[c_1, …, c_m]` with `m = polar_order(r, z0)`.
pub fn principal_part(r: &RationalFunction, z0: &Gaussian) -> Vec<Gaussian> {
    let m = polar_order(r, z0);
    if m == 0 {
        return Vec::new();
    }
    let shifted = r.shift_argument(z0);
    let d1 = shifted
        .den()
        .exact_div(&Poly::monomial(Gaussian::from_int(1), m))
        .expect("pole of order m at the shifted origin");
    let e = power_series_quotient(shifted.num(), &d1, m);
    (1..=m).map(|j| e[m - j].clone()).collect()
}

/// Coefficient of `(z−z0)^{−1}`; zero away from poles.
pub fn residue(r: &RationalFunction, z0: &Gaussian) -> Gaussian {
    principal_part(r, z0)
        .into_iter()
        .next()
        .unwrap_or_else(Gaussian::zero)
}

/// Exact partial fractions. Fails with "pole outside scalar field" unless the
/// denominator splits over ℚ(i).
pub fn partial_fractions(r: &RationalFunction) -> Result<PolarDecomposition> {
    let (polynomial_part, proper) = r.split_polynomial_part();
    let mut polar_parts = BTreeMap::new();
    if !proper.is_zero() {
        for (rho, _) in gaussian_roots(proper.den())? {
            let cs = principal_part(&proper, &rho);
            polar_parts.insert(rho, cs);
        }
    }
    Ok(PolarDecomposition {
        polynomial_part,
        polar_parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn already_polar() {
        let d = partial_fractions(&rf(&[1], &[1, -2, 1])).unwrap();
        assert!(d.polynomial_part.is_zero());
        assert_eq!(
            d.polar_parts[&Gaussian::from_int(1)],
            vec![Gaussian::zero(), Gaussian::from_int(1)]
        );
    }

    #[test]
    fn euler_first_rational() {
        // -z/(1-z) = 1 + 1/(z-1)
        let d = partial_fractions(&rf(&[0, -1], &[1, -1])).unwrap();
        assert_eq!(d.polynomial_part, Poly::from_ints(&[1]));
        assert_eq!(d.polar_parts[&Gaussian::from_int(1)], vec![Gaussian::from_int(1)]);
        assert_eq!(d.reassemble(), rf(&[0, -1], &[1, -1]));
    }

    #[test]
    fn monomial_split() {
        let d = partial_fractions(&rf(&[1, 0, 0, 1], &[0, 1])).unwrap();
        assert_eq!(d.polynomial_part, Poly::from_ints(&[0, 0, 1]));
        assert_eq!(d.polar_parts[&Gaussian::zero()], vec![Gaussian::from_int(1)]);
    }

    #[test]
    fn non_split_denominator() {
        assert_eq!(
            partial_fractions(&rf(&[1], &[-2, 0, 1])),
            Err(Error::PoleOutsideField)
        );
    }

    #[test]
    fn residues_and_orders() {
        assert_eq!(residue(&rf(&[3], &[-2, 1]), &Gaussian::from_int(2)), Gaussian::from_int(3));
        assert_eq!(residue(&rf(&[1], &[1, -2, 1]), &Gaussian::from_int(1)), Gaussian::zero());
        assert_eq!(polar_order(&rf(&[1], &[1, -3, 3, -1]), &Gaussian::from_int(1)), 3);
        assert_eq!(polar_order(&rf(&[1, 1], &[1]), &Gaussian::from_int(5)), 0);
    }

    #[test]
    fn log_derivative_residue_counts_zero() {
        // f = (1 - z/2) e^{1/(1-z)}: f'/f = -1/(2 - z) + 1/(1-z)^2
        let zero_part = rf(&[1], &[-2, 1]);
        let exp_part = rf(&[1], &[1, -2, 1]);
        let dlog = &zero_part + &exp_part;
        assert_eq!(residue(&dlog, &Gaussian::from_int(2)), Gaussian::from_int(1));
        assert_eq!(polar_order(&dlog, &Gaussian::from_int(1)), 2);
    }
}
