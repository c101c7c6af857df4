//! Exact complex scalars with rational coordinates.
//!
//! [`Gaussian`] is the coefficient field for every exact computation in the
//! crate. Equality is exact and componentwise; the derived ordering
//! (lexicographic on `(re, im)`) has no algebraic meaning and only exists so
//! scalars can key ordered maps deterministically.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type ExactRational = BigRational;

/// A Gaussian rational `re + im·i` with `re, im ∈ ℚ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gaussian {
    pub re: ExactRational,
    pub im: ExactRational,
}

impl Gaussian {
    pub fn new(re: ExactRational, im: ExactRational) -> Self {
        Self { re, im }
    }

    pub fn from_rational(re: ExactRational) -> Self {
        Self {
            re,
            im: ExactRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(ExactRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(ExactRational::from_integer(n))
    }

    /// `p/q` as a real scalar. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(ExactRational::new(p.into(), q.into()))
    }

    /// `(a/b) + (c/d)·i`.
    pub fn complex(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(
            ExactRational::new(a.into(), b.into()),
            ExactRational::new(c.into(), d.into()),
        )
    }

    pub fn i() -> Self {
        Self::new(ExactRational::zero(), ExactRational::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> ExactRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroScalarDivisor);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// The integer this scalar equals, if any.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.im.is_zero() && self.re.is_integer()).then(|| self.re.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Zero for Gaussian {
    fn zero() -> Self {
        Self::new(ExactRational::zero(), ExactRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gaussian {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for Gaussian {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<ExactRational> for Gaussian {
    fn from(r: ExactRational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Gaussian::from_rational(&self.re * &rhs.re);
        }
        Gaussian::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panics on division by zero, like the primitive numeric types. Use
/// [`Gaussian::checked_div`] where the divisor is not known to be nonzero.
impl<'a> Div<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn div(self, rhs: &Gaussian) -> Gaussian {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $m(self, rhs: Gaussian) -> Gaussian {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $m(self, rhs: &Gaussian) -> Gaussian {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Gaussian> for &'a Gaussian {
            type Output = Gaussian;
            fn $m(self, rhs: Gaussian) -> Gaussian {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&Gaussian> for Gaussian {
    fn add_assign(&mut self, rhs: &Gaussian) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Gaussian> for Gaussian {
    fn sub_assign(&mut self, rhs: &Gaussian) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Gaussian> for Gaussian {
    fn mul_assign(&mut self, rhs: &Gaussian) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Gaussian {
    fn sum<I: Iterator<Item = Gaussian>>(iter: I) -> Self {
        iter.fold(Gaussian::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Gaussian {
    /// `3`, `-5/6`, `2i`, `1/2 - 3/4i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", fmt_imag(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}", self.re, sign, fmt_imag(&self.im.abs()))
            }
        }
    }
}

fn fmt_imag(im: &ExactRational) -> String {
    if im.is_one() {
        "i".to_string()
    } else if *im == -ExactRational::one() {
        "-i".to_string()
    } else {
        format!("{im}i")
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `p`, `p/q` (optionally signed).
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("malformed rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(ExactRational::new(p, q))
}

impl Serialize for Gaussian {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.im.is_zero() {
            serializer.serialize_str(&self.re.to_string())
        } else {
            let mut map = serializer.serialize_map(Some(2))?;
            map.serialize_entry("re", &self.re.to_string())?;
            map.serialize_entry("im", &self.im.to_string())?;
            map.end()
        }
    }
}

impl<'de> Deserialize<'de> for Gaussian {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct GaussianVisitor;

        impl<'de> Visitor<'de> for GaussianVisitor {
            type Value = Gaussian;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an object {\"re\", \"im\"}")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Gaussian, E> {
                parse_rational(v)
                    .map(Gaussian::from_rational)
                    .map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Gaussian, E> {
                Ok(Gaussian::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Gaussian, E> {
                Ok(Gaussian::from_bigint(v.into()))
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Gaussian, A::Error> {
                let mut re = None;
                let mut im = None;
                while let Some(key) = map.next_key::<String>()? {
                    let value: String = map.next_value()?;
                    let parsed = parse_rational(&value).map_err(de::Error::custom)?;
                    match key.as_str() {
                        "re" => re = Some(parsed),
                        "im" => im = Some(parsed),
                        other => return Err(de::Error::unknown_field(other, &["re", "im"])),
                    }
                }
                Ok(Gaussian::new(
                    re.unwrap_or_else(ExactRational::zero),
                    im.unwrap_or_else(ExactRational::zero),
                ))
            }
        }

        deserializer.deserialize_any(GaussianVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_one_plus_i() {
        let z = Gaussian::complex(1, 1, 1, 1);
        assert_eq!(z.inv().unwrap(), Gaussian::complex(1, 2, -1, 2));
        assert_eq!(&z * &z.inv().unwrap(), Gaussian::one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(Gaussian::zero().inv(), Err(Error::ZeroScalarDivisor));
    }

    #[test]
    fn negative_powers() {
        let two = Gaussian::from_int(2);
        assert_eq!(two.pow(-3).unwrap(), Gaussian::ratio(1, 8));
        assert_eq!(Gaussian::i().pow(4).unwrap(), Gaussian::one());
        assert_eq!(Gaussian::zero().pow(0).unwrap(), Gaussian::one());
    }

    #[test]
    fn display() {
        assert_eq!(Gaussian::ratio(-5, 6).to_string(), "-5/6");
        assert_eq!(Gaussian::complex(1, 2, -3, 4).to_string(), "1/2 - 3/4i");
        assert_eq!(Gaussian::i().to_string(), "i");
    }

    #[test]
    fn json_format() {
        let r = serde_json::to_string(&Gaussian::ratio(3, -6)).unwrap();
        assert_eq!(r, "\"-1/2\"");
        let z = Gaussian::complex(1, 3, 2, 1);
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, r#"{"re":"1/3","im":"2"}"#);
        let back: Gaussian = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z);
        let back: Gaussian = serde_json::from_str("\"6/4\"").unwrap();
        assert_eq!(back, Gaussian::ratio(3, 2));
    }
}
