use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::divisor::TransalgebraicDivisor;
use super::point::Point;
use crate::algebra::{polar_order, roots::gaussian_roots, Gaussian, Poly, RationalFunction};
use crate::error::{Error, Result};

/// `f = rat · e^{exp}` with `rat ≠ 0`. The exponent's polynomial part has
/// zero constant term, so `f` is determined up to a nonzero constant.
///
/// Not to be confused with Euler's `R_1`: `exp` is an arbitrary rational
/// function.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TransalgebraicFunction {
    rat: RationalFunction,
    exp: RationalFunction,
}

#[derive(Deserialize)]
struct RawFunction {
    rat: RationalFunction,
    exp: RationalFunction,
}

impl<'de> Deserialize<'de> for TransalgebraicFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawFunction::deserialize(d)?;
        transalg_make(raw.rat, raw.exp).map_err(serde::de::Error::custom)
    }
}

/// Canonical `rat · e^{exp}`; the constant term of the exponent's polynomial
/// part is dropped.
pub fn transalg_make(rat: RationalFunction, exp: RationalFunction) -> Result<TransalgebraicFunction> {
    if rat.is_zero() {
        return Err(Error::ZeroRationalPart);
    }
    let (q, _) = exp.num().div_rem(exp.den()).expect("nonzero den");
    let c = q.coeff(0);
    let exp = if c.is_zero() {
        exp
    } else {
        &exp - &RationalFunction::constant(c)
    };
    Ok(TransalgebraicFunction { rat, exp })
}

impl TransalgebraicFunction {
    pub fn new(rat: RationalFunction, exp: RationalFunction) -> Result<Self> {
        transalg_make(rat, exp)
    }

    pub fn rational(rat: RationalFunction) -> Result<Self> {
        transalg_make(rat, RationalFunction::zero())
    }

    /// `e^{exp}`.
    pub fn exponential(exp: RationalFunction) -> Self {
        transalg_make(RationalFunction::one(), exp).expect("nonzero")
    }

    pub fn one() -> Self {
        Self::exponential(RationalFunction::zero())
    }

    pub fn rat_part(&self) -> &RationalFunction {
        &self.rat
    }

    pub fn exp_part(&self) -> &RationalFunction {
        &self.exp
    }

    pub fn is_rational(&self) -> bool {
        self.exp.is_zero()
    }

    /// Signed zero/pole multiplicities of the rational part (including the
    /// point at infinity) and singularity orders from the exponent's poles.
    pub fn divisor(&self) -> Result<TransalgebraicDivisor> {
        let mut div = TransalgebraicDivisor::default();
        for (root, m) in gaussian_roots(self.rat.num())? {
            div.algebraic.insert(Point::Finite(root), m as i64);
        }
        for (root, m) in gaussian_roots(self.rat.den())? {
            div.algebraic.insert(Point::Finite(root), -(m as i64));
        }
        let at_inf = self.rat.den().degree().unwrap_or(0) as i64
            - self.rat.num().degree().unwrap_or(0) as i64;
        if at_inf != 0 {
            div.algebraic.insert(Point::Infinity, at_inf);
        }
        for (root, m) in gaussian_roots(self.exp.den())? {
            div.transcendental.insert(Point::Finite(root), m as u32);
        }
        let d_inf = self.order_at_infinity();
        if d_inf > 0 {
            div.transcendental.insert(Point::Infinity, d_inf);
        }
        Ok(div)
    }

    fn order_at_infinity(&self) -> u32 {
        let (q, _) = self.exp.num().div_rem(self.exp.den()).expect("nonzero den");
        q.degree().unwrap_or(0) as u32
    }

    /// `d(f, ρ)`: the exponent's pole order at `ρ`, 0 away from singularities.
    pub fn order(&self, point: &Point) -> u32 {
        match point {
            Point::Finite(z) => polar_order(&self.exp, z) as u32,
            Point::Infinity => self.order_at_infinity(),
        }
    }

    /// `rat′/rat + exp′`.
    pub fn log_derivative(&self) -> RationalFunction {
        let dlog_rat = self
            .rat
            .derivative()
            .checked_div(&self.rat)
            .expect("nonzero rational part");
        &dlog_rat + &self.exp.derivative()
    }

    pub fn mul(&self, other: &Self) -> Self {
        transalg_make(&self.rat * &other.rat, &self.exp + &other.exp).expect("nonzero")
    }

    pub fn inv(&self) -> Self {
        transalg_make(self.rat.inv().expect("nonzero"), -&self.exp).expect("nonzero")
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        transalg_make(self.rat.pow(n)?, self.exp.scale(&Gaussian::from_int(n)))
    }

    /// Equal up to a nonzero multiplicative constant.
    pub fn equals_modulo_constants(&self, other: &Self) -> bool {
        if self.exp != other.exp {
            return false;
        }
        let q = self.rat.checked_div(&other.rat).expect("nonzero");
        q.as_constant().is_some()
    }

    /// Exact value at `z`, when `z` is neither a pole of `rat` nor of `exp`.
    /// The exponential is returned separately: `(rat(z), exp(z))`.
    pub fn eval_parts(&self, z: &Gaussian) -> Option<(Gaussian, Gaussian)> {
        Some((self.rat.eval(z)?, self.exp.eval(z)?))
    }

    pub fn rat_is_polynomial(&self) -> bool {
        self.rat.is_polynomial()
    }

    pub fn rat_num(&self) -> &Poly {
        self.rat.num()
    }
}

pub fn transalg_divisor(f: &TransalgebraicFunction) -> Result<TransalgebraicDivisor> {
    f.divisor()
}

pub fn transalg_order(f: &TransalgebraicFunction, point: &Point) -> u32 {
    f.order(point)
}

pub fn transalg_log_derivative(f: &TransalgebraicFunction) -> RationalFunction {
    f.log_derivative()
}

pub fn transalg_mul(f: &TransalgebraicFunction, g: &TransalgebraicFunction) -> TransalgebraicFunction {
    f.mul(g)
}

pub fn transalg_inv(f: &TransalgebraicFunction) -> TransalgebraicFunction {
    f.inv()
}

impl fmt::Display for TransalgebraicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp.is_zero() {
            return write!(f, "{}", self.rat);
        }
        if self.rat.as_constant() == Some(Gaussian::from_int(1)) {
            return write!(f, "exp({})", self.exp);
        }
        write!(f, "({})·exp({})", self.rat, self.exp)
    }
}

impl fmt::Debug for TransalgebraicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Transalgebraic[{self}]")
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

    fn stock() -> TransalgebraicFunction {
        // (1 - z/2) e^{1/(1-z)}
        let rat = RationalFunction::from_poly(Poly::new(vec![g(1), Gaussian::ratio(-1, 2)]));
        transalg_make(rat, rf(&[1], &[1, -1])).unwrap()
    }

    #[test]
    fn make_canonicalizes_exponent_constant() {
        let f = transalg_make(RationalFunction::one(), rf(&[5, 1], &[1])).unwrap();
        assert_eq!(f.exp_part(), &rf(&[0, 1], &[1]));
        assert_eq!(
            transalg_make(RationalFunction::zero(), RationalFunction::zero()),
            Err(Error::ZeroRationalPart)
        );
    }

    #[test]
    fn stock_divisor() {
        let d = stock().divisor().unwrap();
        assert_eq!(d.algebraic.len(), 2);
        assert_eq!(d.algebraic[&Point::Finite(g(2))], 1);
        assert_eq!(d.algebraic[&Point::Infinity], -1);
        assert_eq!(d.transcendental.len(), 1);
        assert_eq!(d.transcendental[&Point::Finite(g(1))], 1);
        assert_eq!(d.degree(), 0);
    }

    #[test]
    fn entire_exponential_divisor() {
        let f = TransalgebraicFunction::exponential(rf(&[0, 0, 0, 1], &[1]));
        let d = f.divisor().unwrap();
        assert!(d.algebraic.is_empty());
        assert_eq!(d.transcendental[&Point::Infinity], 3);
    }

    #[test]
    fn rational_divisor() {
        let f = TransalgebraicFunction::rational(rf(&[-2, 1], &[-3, 1])).unwrap();
        let d = f.divisor().unwrap();
        assert_eq!(d.algebraic[&Point::Finite(g(2))], 1);
        assert_eq!(d.algebraic[&Point::Finite(g(3))], -1);
        assert!(d.transcendental.is_empty());
    }

    #[test]
    fn orders() {
        let f = TransalgebraicFunction::exponential(rf(&[1], &[0, 0, 1]));
        assert_eq!(f.order(&Point::Finite(Gaussian::zero())), 2);
        assert_eq!(stock().order(&Point::Finite(g(2))), 0);
        assert_eq!(stock().order(&Point::Finite(g(1))), 1);
    }

    #[test]
    fn log_derivatives() {
        use crate::algebra::residue;
        let dl = stock().log_derivative();
        assert_eq!(residue(&dl, &g(2)), g(1));
        assert_eq!(polar_order(&dl, &g(1)), 2);

        let f = TransalgebraicFunction::rational(rf(&[-5, 1], &[1])).unwrap();
        assert_eq!(f.log_derivative(), rf(&[1], &[-5, 1]));
        let e = TransalgebraicFunction::exponential(RationalFunction::z());
        assert_eq!(e.log_derivative(), RationalFunction::one());
    }

    #[test]
    fn group_laws() {
        let f = stock();
        assert_eq!(f.mul(&f.inv()), TransalgebraicFunction::one());
        let a = transalg_make(rf(&[1, -1], &[1]), RationalFunction::z()).unwrap();
        let b = transalg_make(rf(&[1], &[1, -1]), -RationalFunction::z()).unwrap();
        assert_eq!(a.mul(&b), TransalgebraicFunction::one());
    }

    #[test]
    fn divisor_json() {
        let v = serde_json::to_value(stock().divisor().unwrap()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "algebraic": [{"point": "2", "mult": 1}, {"point": "inf", "mult": -1}],
                "transcendental": [{"point": "1", "order": 1}]
            })
        );
        let back: TransalgebraicDivisor = serde_json::from_value(v).unwrap();
        assert_eq!(back, stock().divisor().unwrap());
    }
}
