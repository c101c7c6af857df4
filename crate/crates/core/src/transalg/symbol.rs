use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::function::{transalg_make, TransalgebraicFunction};
use super::generators::{euler_generator, factor_generators};
use crate::algebra::{roots::gaussian_roots, Gaussian, Poly, RationalFunction};
use crate::ene::NormalizedSeries;
use crate::error::{Error, Result};
use crate::euler::euler_coefficient;
use crate::series::{SeriesWindow, TruncatedLaurentSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymbolKind {
    InfiniteZero,
    InfinitePole,
    SimpleFactor,
}

/// `exp(w·R_m(z/u))`, with exponent coefficients `F_n = −w·n^{m−1}·u^{−n}`.
///
/// `m ≥ 1` is an infinite-order zero with its singularity at `u`, `m ≤ −1`
/// an eñe pole `exp(−w·Li_{1−m}(z/u))`, and `m = 0` the ordinary factor
/// `(1 − z/u)^w`. The parameter is the singularity itself; the naming
/// `(1 − z/z0)^{m·∞}` corresponds to `u = z0^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EneSymbol {
    pub order: i64,
    pub parameter: Gaussian,
    pub weight: Gaussian,
}

impl EneSymbol {
    pub fn new(order: i64, parameter: Gaussian, weight: Gaussian) -> Result<Self> {
        if parameter.is_zero() {
            return Err(Error::InvalidArgument("symbol parameter must be nonzero".into()));
        }
        Ok(Self {
            order,
            parameter,
            weight,
        })
    }

    /// `(1 − z/z0)` with unit weight.
    pub fn simple_factor(root: Gaussian) -> Result<Self> {
        Self::new(0, root, Gaussian::one())
    }

    /// `(1 − z/z0)^{m·∞}` raised to `weight`.
    pub fn from_euler_naming(m: i64, z0: &Gaussian, weight: Gaussian) -> Result<Self> {
        let u = if m == 0 { z0.clone() } else { z0.pow(m)? };
        Self::new(m, u, weight)
    }

    pub fn kind(&self) -> SymbolKind {
        match self.order {
            m if m >= 1 => SymbolKind::InfiniteZero,
            0 => SymbolKind::SimpleFactor,
            _ => SymbolKind::InfinitePole,
        }
    }

    /// `F_n` for `n ≥ 1`.
    pub fn coefficient(&self, n: u64) -> Gaussian {
        let u_n = self.parameter.pow(-(n as i64)).expect("nonzero parameter");
        &(&euler_coefficient(self.order, n) * &self.weight) * &u_n
    }

    pub fn exponent_series(&self, window: SeriesWindow) -> TruncatedLaurentSeries {
        let inv = self.parameter.inv().expect("nonzero parameter");
        let mut u_n = Gaussian::one();
        TruncatedLaurentSeries::from_fn(window.low, window.high, |n| {
            if n < 1 {
                return Gaussian::zero();
            }
            u_n = &u_n * &inv;
            &(&euler_coefficient(self.order, n as u64) * &self.weight) * &u_n
        })
    }

    pub fn series(&self, order: i64) -> NormalizedSeries {
        NormalizedSeries::exp_of(&self.exponent_series(SeriesWindow::order(order)))
            .expect("no constant term")
    }

    /// `w·R_m(z/u)` for `m ≥ 1`.
    pub fn rational_exponent(&self) -> Option<RationalFunction> {
        (self.order >= 1).then(|| {
            euler_generator(self.order, &self.parameter)
                .expect("m ≥ 1, u ≠ 0")
                .scale(&self.weight)
        })
    }

    pub fn ene(&self, other: &Self) -> Self {
        ene_symbols(self, other)
    }
}

/// Orders add, parameters and weights multiply. When the orders cancel the
/// result is the simple factor `(1 − z/(uv))^{w·w'}`.
pub fn ene_symbols(a: &EneSymbol, b: &EneSymbol) -> EneSymbol {
    EneSymbol {
        order: a.order + b.order,
        parameter: &a.parameter * &b.parameter,
        weight: &a.weight * &b.weight,
    }
}

impl fmt::Display for EneSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 0 {
            if self.weight.is_one() {
                return write!(f, "(1 - z/({}))", self.parameter);
            }
            return write!(f, "(1 - z/({}))^({})", self.parameter, self.weight);
        }
        if self.weight.is_one() {
            write!(f, "exp(R_{}(z/({})))", self.order, self.parameter)
        } else {
            write!(f, "exp(({})·R_{}(z/({})))", self.weight, self.order, self.parameter)
        }
    }
}

/// One factor of a normalized generator product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Generator {
    Symbol(EneSymbol),
    /// `exp(c·z^j)` for `j ≠ 0`; negative `j` is an exponential
    /// singularity at 0.
    Monomial { degree: i64, coeff: Gaussian },
}

impl Generator {
    pub fn monomial(degree: i64, coeff: Gaussian) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("monomial generator needs nonzero degree".into()));
        }
        Ok(Generator::Monomial { degree, coeff })
    }

    /// Coefficient of `z^n` in the exponent.
    pub fn exponent_coefficient(&self, n: i64) -> Gaussian {
        match self {
            Generator::Symbol(s) if n >= 1 => s.coefficient(n as u64),
            Generator::Symbol(_) => Gaussian::zero(),
            Generator::Monomial { degree, coeff } if *degree == n => coeff.clone(),
            Generator::Monomial { .. } => Gaussian::zero(),
        }
    }

    fn is_trivial(&self) -> bool {
        match self {
            Generator::Symbol(s) => s.weight.is_zero(),
            Generator::Monomial { coeff, .. } => coeff.is_zero(),
        }
    }

    /// `None` when the product is the unit `1` of `·` (the ⋆-absorbing
    /// element).
    pub fn ene(&self, other: &Self) -> Option<Self> {
        use Generator::*;
        match (self, other) {
            (Symbol(a), Symbol(b)) => Some(Symbol(ene_symbols(a, b))),
            (Monomial { degree, coeff }, Symbol(s)) | (Symbol(s), Monomial { degree, coeff }) => {
                if *degree < 1 {
                    return None;
                }
                let h = -(&(coeff * &s.coefficient(*degree as u64)) * &Gaussian::from_int(*degree));
                Some(Monomial {
                    degree: *degree,
                    coeff: h,
                })
            }
            (
                Monomial { degree: j, coeff: a },
                Monomial { degree: k, coeff: b },
            ) => (j == k).then(|| Monomial {
                degree: *j,
                coeff: -(&(a * b) * &Gaussian::from_int(*j)),
            }),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Symbol(s) => write!(f, "{s}"),
            Generator::Monomial { degree, coeff } => {
                write!(f, "exp(({coeff})·z^{degree})")
            }
        }
    }
}

/// A finite product of generators, normalized to value 1 at 0 (away from an
/// exponential singularity there). `⋆` distributes over the product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorProduct {
    factors: Vec<Generator>,
}

impl GeneratorProduct {
    /// The empty product `1`.
    pub fn one() -> Self {
        Self::default()
    }

    /// `1 − z`, the unit of `⋆`.
    pub fn ene_unit() -> Self {
        Self::from_factors([Generator::Symbol(
            EneSymbol::simple_factor(Gaussian::one()).expect("nonzero"),
        )])
    }

    pub fn from_factors<I: IntoIterator<Item = Generator>>(factors: I) -> Self {
        Self {
            factors: factors.into_iter().collect(),
        }
        .simplify()
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Collects equal symbols and equal-degree monomials, drops trivial
    /// factors, and sorts.
    pub fn simplify(&self) -> Self {
        let mut symbols: BTreeMap<(i64, Gaussian), Gaussian> = BTreeMap::new();
        let mut monomials: BTreeMap<i64, Gaussian> = BTreeMap::new();
        for g in &self.factors {
            match g {
                Generator::Symbol(s) => {
                    *symbols
                        .entry((s.order, s.parameter.clone()))
                        .or_insert_with(Gaussian::zero) += &s.weight;
                }
                Generator::Monomial { degree, coeff } => {
                    *monomials.entry(*degree).or_insert_with(Gaussian::zero) += coeff;
                }
            }
        }
        let factors = symbols
            .into_iter()
            .map(|((order, parameter), weight)| {
                Generator::Symbol(EneSymbol {
                    order,
                    parameter,
                    weight,
                })
            })
            .chain(
                monomials
                    .into_iter()
                    .map(|(degree, coeff)| Generator::Monomial { degree, coeff }),
            )
            .filter(|g| !g.is_trivial())
            .collect();
        Self { factors }
    }

    /// Ordinary product.
    pub fn mul(&self, other: &Self) -> Self {
        Self::from_factors(self.factors.iter().chain(&other.factors).cloned())
    }

    pub fn inv(&self) -> Self {
        Self::from_factors(self.factors.iter().map(|g| match g {
            Generator::Symbol(s) => Generator::Symbol(EneSymbol {
                weight: -&s.weight,
                ..s.clone()
            }),
            Generator::Monomial { degree, coeff } => Generator::Monomial {
                degree: *degree,
                coeff: -coeff,
            },
        }))
    }

    /// `f ⋆ g`, factor by factor.
    pub fn ene(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() * other.factors.len());
        for a in &self.factors {
            for b in &other.factors {
                out.extend(a.ene(b));
            }
        }
        Self::from_factors(out)
    }

    /// Parameters of the symbols, the support used by the grading.
    pub fn support(&self) -> BTreeSet<Gaussian> {
        self.factors
            .iter()
            .filter_map(|g| match g {
                Generator::Symbol(s) => Some(s.parameter.clone()),
                Generator::Monomial { .. } => None,
            })
            .collect()
    }

    /// Lowest exponent degree, `≤ 0`.
    fn lowest_degree(&self) -> i64 {
        self.factors
            .iter()
            .filter_map(|g| match g {
                Generator::Monomial { degree, .. } => Some(*degree),
                Generator::Symbol(_) => None,
            })
            .min()
            .unwrap_or(0)
            .min(0)
    }

    /// Sum of the factor exponents; the stored range reaches down to the
    /// most negative monomial.
    pub fn exponent_series(&self, window: SeriesWindow) -> TruncatedLaurentSeries {
        let low = window.low.min(self.lowest_degree());
        let parts: Vec<TruncatedLaurentSeries> = self
            .factors
            .iter()
            .map(|g| match g {
                Generator::Symbol(s) => s.exponent_series(SeriesWindow { low, ..window }),
                Generator::Monomial { degree, coeff } => TruncatedLaurentSeries::from_fn(
                    low,
                    window.high,
                    |k| if k == *degree { coeff.clone() } else { Gaussian::zero() },
                ),
            })
            .collect();
        parts.iter().fold(
            TruncatedLaurentSeries::zero(SeriesWindow {
                low,
                high: window.high,
            }),
            |acc, p| &acc + p,
        )
    }

    /// Power series expansion; fails if there is an exponential
    /// singularity at 0.
    pub fn series(&self, order: i64) -> Result<NormalizedSeries> {
        if self.lowest_degree() < 0 {
            return Err(Error::ExponentNotNilpotent);
        }
        NormalizedSeries::exp_of(&self.exponent_series(SeriesWindow::order(order)))
    }

    /// Generators of `f/f(0)`; `f` must have no zero or pole at 0.
    pub fn from_function(f: &TransalgebraicFunction) -> Result<Self> {
        let rat = f.rat_part();
        if rat.num().coeff(0).is_zero() || rat.den().coeff(0).is_zero() {
            return Err(Error::UnsupportedRepresentative);
        }
        let mut factors = Vec::new();
        for (root, m) in gaussian_roots(rat.num())? {
            factors.push(Generator::Symbol(EneSymbol::new(0, root, Gaussian::from_int(m as i64))?));
        }
        for (root, m) in gaussian_roots(rat.den())? {
            factors.push(Generator::Symbol(EneSymbol::new(0, root, Gaussian::from_int(-(m as i64)))?));
        }
        let fac = factor_generators(rat, f.exp_part())?;
        for (j, c) in fac.poly_at_infinity.coeffs().iter().enumerate().skip(1) {
            factors.push(Generator::Monomial {
                degree: j as i64,
                coeff: c.clone(),
            });
        }
        for (j, c) in fac.poly_at_zero.coeffs().iter().enumerate().skip(1) {
            factors.push(Generator::Monomial {
                degree: -(j as i64),
                coeff: c.clone(),
            });
        }
        for t in fac.polar_terms {
            factors.push(Generator::Symbol(EneSymbol::new(t.k, t.z0, t.alpha)?));
        }
        Ok(Self::from_factors(factors))
    }

    /// The product as `R0·e^{R1}`; eñe poles and non-integer powers of
    /// simple factors have no such form.
    pub fn to_function(&self) -> Result<TransalgebraicFunction> {
        let mut num = Poly::one();
        let mut den = Poly::one();
        let mut exp = RationalFunction::zero();
        for g in &self.factors {
            match g {
                Generator::Symbol(s) if s.order >= 1 => {
                    exp = &exp + &s.rational_exponent().expect("m ≥ 1");
                }
                Generator::Symbol(s) if s.order == 0 => {
                    let m = s.weight.as_i64().ok_or_else(|| {
                        Error::InvalidArgument(format!(
                            "simple factor with non-integer power {} is not rational",
                            s.weight
                        ))
                    })?;
                    let p = Poly::normalized_factor(&s.parameter)?.pow(m.unsigned_abs() as u32);
                    if m > 0 {
                        num = &num * &p;
                    } else {
                        den = &den * &p;
                    }
                }
                Generator::Symbol(s) => {
                    return Err(Error::InvalidArgument(format!(
                        "eñe pole {s} is not a transalgebraic function"
                    )))
                }
                Generator::Monomial { degree, coeff } => {
                    let term = if *degree > 0 {
                        RationalFunction::from_poly(Poly::monomial(coeff.clone(), *degree as usize))
                    } else {
                        RationalFunction::new(
                            Poly::constant(coeff.clone()),
                            Poly::monomial(Gaussian::one(), degree.unsigned_abs() as usize),
                        )?
                    };
                    exp = &exp + &term;
                }
            }
        }
        transalg_make(RationalFunction::new(num, den)?, exp)
    }
}

impl fmt::Display for GeneratorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ene::ene_exp;

    fn g(n: i64) -> Gaussian {
        Gaussian::from_int(n)
    }

    fn sym(m: i64, u: Gaussian, w: i64) -> EneSymbol {
        EneSymbol::new(m, u, g(w)).unwrap()
    }

    #[test]
    fn kinds() {
        assert_eq!(sym(2, g(1), 1).kind(), SymbolKind::InfiniteZero);
        assert_eq!(sym(-1, g(1), 1).kind(), SymbolKind::InfinitePole);
        assert_eq!(sym(0, g(3), 1).kind(), SymbolKind::SimpleFactor);
        assert!(EneSymbol::new(1, Gaussian::zero(), g(1)).is_err());
    }

    #[test]
    fn euler_naming_stores_singularity() {
        let s = EneSymbol::from_euler_naming(2, &g(3), g(1)).unwrap();
        assert_eq!(s.parameter, g(9));
        let p = EneSymbol::from_euler_naming(-1, &g(2), g(1)).unwrap();
        assert_eq!(p.parameter, Gaussian::ratio(1, 2));
    }

    #[test]
    fn infinite_zeros_multiply_parameters() {
        let z1 = Gaussian::ratio(1, 2);
        let z2 = Gaussian::complex(1, 1, 1, 1);
        let r = ene_symbols(&sym(1, z1.clone(), 1), &sym(1, z2.clone(), 1));
        assert_eq!(r, sym(2, &z1 * &z2, 1));
    }

    #[test]
    fn opposite_orders_give_simple_factor() {
        for k in 1..5 {
            let r = ene_symbols(&sym(k, g(1), 1), &sym(-k, g(1), 1));
            assert_eq!(r, EneSymbol::simple_factor(g(1)).unwrap());
            let s = r.series(12);
            assert_eq!(s.series(), &TruncatedLaurentSeries::from_poly(&Poly::from_ints(&[1, -1]), 12));
        }
    }

    #[test]
    fn symbol_law_matches_series() {
        let w = SeriesWindow::order(20);
        let a = EneSymbol::new(2, Gaussian::ratio(1, 2), g(3)).unwrap();
        let b = EneSymbol::new(3, Gaussian::complex(1, 1, 1, 1), Gaussian::ratio(-1, 5)).unwrap();
        let lhs = ene_symbols(&a, &b).exponent_series(w);
        let rhs = ene_exp(&a.exponent_series(w), &b.exponent_series(w));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn simple_factor_series() {
        let s = EneSymbol::simple_factor(g(2)).unwrap().series(6);
        let expected = TruncatedLaurentSeries::from_poly(&Poly::new(vec![g(1), Gaussian::ratio(-1, 2)]), 6);
        assert_eq!(s.series(), &expected);
    }

    #[test]
    fn product_round_trip() {
        let rat = RationalFunction::new(Poly::from_ints(&[2, -1]), Poly::from_ints(&[-3, 1])).unwrap();
        let exp = &RationalFunction::new(Poly::from_ints(&[1]), Poly::from_ints(&[1, -1, 0])).unwrap()
            + &RationalFunction::from_poly(Poly::from_ints(&[0, 0, 4]));
        let f = transalg_make(rat, exp).unwrap();
        let p = GeneratorProduct::from_function(&f).unwrap();
        assert!(p.to_function().unwrap().equals_modulo_constants(&f));
    }

    #[test]
    fn unit_and_absorbing() {
        let f = GeneratorProduct::from_factors([
            Generator::Symbol(sym(2, Gaussian::ratio(1, 3), 2)),
            Generator::Monomial { degree: 2, coeff: g(5) },
            Generator::Monomial { degree: -1, coeff: g(1) },
        ]);
        let kept = GeneratorProduct::from_factors([
            Generator::Symbol(sym(2, Gaussian::ratio(1, 3), 2)),
            Generator::Monomial { degree: 2, coeff: g(5) },
        ]);
        assert_eq!(f.ene(&GeneratorProduct::ene_unit()), kept);
        assert!(f.ene(&GeneratorProduct::one()).is_one());
    }

    #[test]
    fn zero_at_origin_is_rejected() {
        let f = TransalgebraicFunction::rational(RationalFunction::z()).unwrap();
        assert_eq!(GeneratorProduct::from_function(&f), Err(Error::UnsupportedRepresentative));
    }
}
