use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::Gaussian;
use crate::error::{Error, Result};

/// Dense univariate polynomial over the Gaussian rationals, lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient vector).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<Gaussian>,
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<Gaussian>::deserialize(d).map(Poly::new)
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Gaussian>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Gaussian::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Gaussian::one())
    }

    pub fn constant(c: Gaussian) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(Gaussian::one(), 1)
    }

    pub fn monomial(c: Gaussian, degree: usize) -> Self {
        let mut coeffs = vec![Gaussian::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `z − root`.
    pub fn linear_root(root: &Gaussian) -> Self {
        Self::new(vec![-root, Gaussian::one()])
    }

    /// `1 − z/root`, the normalized factor vanishing at `root ≠ 0`.
    pub fn normalized_factor(root: &Gaussian) -> Result<Self> {
        Ok(Self::new(vec![Gaussian::one(), -root.inv()?]))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Gaussian] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Gaussian> {
        self.coeffs
    }

    /// Coefficient of `z^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Gaussian {
        self.coeffs.get(i).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn leading(&self) -> Option<&Gaussian> {
        self.coeffs.last()
    }

    /// Lowest index with a nonzero coefficient (the order of vanishing at 0).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divide by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn eval(&self, z: &Gaussian) -> Gaussian {
        self.coeffs
            .iter()
            .rev()
            .fold(Gaussian::zero(), |acc, c| &(&acc * z) + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Gaussian::from_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division over the field.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomialDivisor)?;
        let lc_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Gaussian::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &(&c * d);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            // monic remainders keep coefficient growth in check
            b = if r.is_zero() { r } else { r.monic() };
        }
        a.monic()
    }

    /// Multiplicity of `root` as a zero of `self`. Zero polynomial → 0.
    pub fn root_multiplicity(&self, root: &Gaussian) -> usize {
        if self.is_zero() {
            return 0;
        }
        let factor = Self::linear_root(root);
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.exact_div(&factor) {
            p = q;
            m += 1;
        }
        m
    }

    /// `p(z + a)`, via repeated synthetic division.
    pub fn taylor_shift(&self, a: &Gaussian) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += &t;
            }
        }
        Self::new(c)
    }

    /// `p(c·z)`.
    pub fn rescale(&self, c: &Gaussian) -> Self {
        let mut pw = Gaussian::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw = &pw * c;
        }
        Self::new(out)
    }

    /// `z^n · p(1/z)`; requires `n ≥ deg p`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(n + 1, Gaussian::zero());
        c.reverse();
        Self::new(c)
    }

    /// Square-free part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        let g = Self::gcd(self, &self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Scale to Gaussian-integer coefficients `(re, im)` sharing no common
    /// rational integer factor.
    pub fn gaussian_integer_coeffs(&self) -> Vec<(BigInt, BigInt)> {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| {
            acc.lcm(c.re.denom()).lcm(c.im.denom())
        });
        let scaled: Vec<(BigInt, BigInt)> = self
            .coeffs
            .iter()
            .map(|c| {
                (
                    (&c.re * num_rational::BigRational::from_integer(lcm.clone())).to_integer(),
                    (&c.im * num_rational::BigRational::from_integer(lcm.clone())).to_integer(),
                )
            })
            .collect();
        let g = scaled
            .iter()
            .fold(BigInt::zero(), |acc, (a, b)| acc.gcd(a).gcd(b));
        if g.is_zero() || g.is_one() {
            return scaled;
        }
        scaled.into_iter().map(|(a, b)| (a / &g, b / &g)).collect()
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Gaussian::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Writes one signed term `c·v^k` into a running sum. Shared with the series
/// and rational-function printers.
pub(crate) fn write_term(
    out: &mut String,
    c: &Gaussian,
    var: &str,
    k: i64,
) {
    use num_traits::Signed;
    let first = out.is_empty();
    let (negative, mag) = if c.is_real() && c.re.is_negative() {
        (true, -c)
    } else {
        (false, c.clone())
    };
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let mono = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    let coef = if mag.is_real() {
        mag.to_string()
    } else {
        format!("({mag})")
    };
    if k == 0 {
        out.push_str(&coef);
    } else if mag.is_one() {
        out.push_str(&mono);
    } else if mag.is_real() && !mag.re.is_integer() {
        out.push_str(&format!("({coef}){mono}"));
    } else {
        out.push_str(&format!("{coef}{mono}"));
    }
}

impl fmt::Display for Poly {
    /// Lowest degree first: `1 + 4z + z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write_term(&mut out, c, "z", k as i64);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}
