use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::scalar::Gaussian;
use crate::error::{Error, Result};

/// A reduced quotient `num/den`: `gcd(num, den) = 1` and `den` monic, so
/// structural equality decides equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

#[derive(Deserialize)]
struct RawRational {
    num: Poly,
    den: Poly,
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawRational::deserialize(d)?;
        rational_reduce(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

/// Canonical representative of `num/den`.
pub fn rational_reduce(num: Poly, den: Poly) -> Result<RationalFunction> {
    if den.is_zero() {
        return Err(Error::ZeroPolynomialDivisor);
    }
    if num.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let g = Poly::gcd(&num, &den);
    let num = num.exact_div(&g).expect("gcd divides");
    let den = den.exact_div(&g).expect("gcd divides");
    let lc_inv = den.leading().expect("nonzero").inv()?;
    Ok(RationalFunction {
        num: num.scale(&lc_inv),
        den: den.scale(&lc_inv),
    })
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        rational_reduce(num, den)
    }

    pub fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Gaussian::one())
    }

    pub fn constant(c: Gaussian) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn z() -> Self {
        Self::from_poly(Poly::z())
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Gaussian> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// `deg num − deg den`; `None` for zero.
    pub fn degree_at_infinity(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        Some(n - self.den.degree().expect("nonzero den") as i64)
    }

    /// Value at `z`, or `None` at a pole.
    pub fn eval(&self, z: &Gaussian) -> Option<Gaussian> {
        let d = self.den.eval(z);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(z) / &d)
    }

    pub fn inv(&self) -> Result<Self> {
        rational_reduce(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroPolynomialDivisor);
        }
        rational_reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(n.unsigned_abs())
            .map_err(|_| Error::InvalidArgument(format!("exponent {n} too large")))?;
        Ok(Self {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        rational_reduce(num, &self.den * &self.den).expect("nonzero den")
    }

    /// `R(z/u)`.
    pub fn rescale_argument(&self, u: &Gaussian) -> Result<Self> {
        let c = u.inv()?;
        rational_reduce(self.num.rescale(&c), self.den.rescale(&c))
    }

    /// `R(1/z)`.
    pub fn invert_argument(&self) -> Self {
        let n = self.num.degree().unwrap_or(0);
        let d = self.den.degree().unwrap_or(0);
        let m = n.max(d);
        rational_reduce(self.num.reversed(m), self.den.reversed(m)).expect("nonzero den")
    }

    /// `R(z + a)`.
    pub fn shift_argument(&self, a: &Gaussian) -> Self {
        // a shift keeps num and den coprime and den monic
        Self {
            num: self.num.taylor_shift(a),
            den: self.den.taylor_shift(a),
        }
    }

    /// `(quotient, remainder/den)`: polynomial part and proper part.
    pub fn split_polynomial_part(&self) -> (Poly, RationalFunction) {
        let (q, r) = self.num.div_rem(&self.den).expect("nonzero den");
        let proper = if r.is_zero() {
            Self::zero()
        } else {
            Self {
                num: r,
                den: self.den.clone(),
            }
        };
        (q, proper)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return rational_reduce(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        let g = Poly::gcd(&self.den, &rhs.den);
        let d1 = self.den.exact_div(&g).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return RationalFunction::zero();
        }
        // only factors of g can cancel
        let h = Poly::gcd(&num, &g);
        RationalFunction {
            num: num.exact_div(&h).expect("gcd divides"),
            den: (&self.den * &d2).exact_div(&h).expect("gcd divides"),
        }
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let q = |p: &Poly, g: &Poly| p.exact_div(g).expect("gcd divides");
        // monic gcds keep the denominator monic
        RationalFunction {
            num: &q(&self.num, &g1) * &q(&rhs.num, &g2),
            den: &q(&self.den, &g2) * &q(&rhs.den, &g1),
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_rf_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}

forward_rf_binop!(Add, add);
forward_rf_binop!(Sub, sub);
forward_rf_binop!(Mul, mul);

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl From<Gaussian> for RationalFunction {
    fn from(c: Gaussian) -> Self {
        Self::constant(c)
    }
}

fn wrap(p: &Poly) -> String {
    let s = p.to_string();
    if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            return write!(f, "{}", self.num);
        }
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational[{self}]")
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for Poly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn common_factor_cancels() {
        let r = rational_reduce(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(r.num(), &p(&[1, 1]));
        assert_eq!(r.den(), &p(&[1]));
    }

    #[test]
    fn constant_normalization() {
        let r = rational_reduce(p(&[0, 2]), p(&[2])).unwrap();
        assert_eq!(r, RationalFunction::z());
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(
            rational_reduce(p(&[1]), Poly::zero()).unwrap_err().to_string(),
            "division by zero polynomial"
        );
    }

    #[test]
    fn monic_denominator_gives_structural_equality() {
        // -z/(1-z) == z/(z-1)
        let a = rational_reduce(p(&[0, -1]), p(&[1, -1])).unwrap();
        let b = rational_reduce(p(&[0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.den(), &p(&[-1, 1]));
    }

    #[test]
    fn invert_argument() {
        // R(z) = z/(z-1): R(1/z) = 1/(1 - z)
        let r = rational_reduce(p(&[0, 1]), p(&[-1, 1])).unwrap();
        let inv = r.invert_argument();
        assert_eq!(inv, rational_reduce(p(&[1]), p(&[1, -1])).unwrap());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dz 1/(1-z) = 1/(1-z)^2
        let r = rational_reduce(p(&[1]), p(&[1, -1])).unwrap();
        let d = r.derivative();
        assert_eq!(d, rational_reduce(p(&[1]), p(&[1, -1]).pow(2)).unwrap());
    }
}
