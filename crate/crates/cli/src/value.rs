//! Evaluation of expressions to exact values.

use std::collections::BTreeMap;
use std::fmt;

use ene::algebra::{Gaussian, Poly, RationalFunction};
use ene::ene::ene_exp;
use ene::euler::euler_r_rational;
use ene::series::{series_of_rational, SeriesWindow, TruncatedLaurentSeries};
use ene::transalg::{euler_generator, transalg_make, EneSymbol, Generator, GeneratorProduct};
use num_traits::{One, Zero};

use crate::syntax::Expr;

#[derive(Clone, Debug, PartialEq)]
pub enum EvalError {
    Core(ene::Error),
    Type(String),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Core(e) => write!(f, "{e}"),
            EvalError::Type(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for EvalError {}

impl From<ene::Error> for EvalError {
    fn from(e: ene::Error) -> Self {
        EvalError::Core(e)
    }
}

type Result<T> = std::result::Result<T, EvalError>;

fn type_error<T>(m: impl Into<String>) -> Result<T> {
    Err(EvalError::Type(m.into()))
}

/// A linear combination `rational + Σ w·R_m(z/u)` where the `R_m`, `m ≤ 0`,
/// are not rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponent {
    pub rational: RationalFunction,
    /// `(m, u) ↦ w`, `m ≤ 0`, `w ≠ 0`.
    pub terms: BTreeMap<(i64, Gaussian), Gaussian>,
}

impl Default for Exponent {
    fn default() -> Self {
        Self::from_rational(RationalFunction::zero())
    }
}

impl Exponent {
    pub fn from_rational(r: RationalFunction) -> Self {
        Self {
            rational: r,
            terms: BTreeMap::new(),
        }
    }

    fn term(order: i64, u: Gaussian, w: Gaussian) -> Self {
        let mut e = Self::default();
        e.terms.insert((order, u), w);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (key, w) in &other.terms {
            let e = terms.entry(key.clone()).or_insert_with(Gaussian::zero);
            *e += w;
            if e.is_zero() {
                terms.remove(key);
            }
        }
        Self {
            rational: &self.rational + &other.rational,
            terms,
        }
    }

    fn scale(&self, c: &Gaussian) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self {
            rational: self.rational.scale(c),
            terms: self.terms.iter().map(|(k, w)| (k.clone(), w * c)).collect(),
        }
    }

    /// Laurent expansion at 0.
    pub fn series(&self, window: SeriesWindow) -> TruncatedLaurentSeries {
        let mut s = series_of_rational(&self.rational, window);
        for ((m, u), w) in &self.terms {
            let sym = EneSymbol::new(*m, u.clone(), w.clone()).expect("nonzero parameter");
            s = &s + &sym.exponent_series(window);
        }
        s
    }

    fn symbols(&self) -> impl Iterator<Item = Generator> + '_ {
        self.terms.iter().map(|((m, u), w)| {
            Generator::Symbol(EneSymbol {
                order: *m,
                parameter: u.clone(),
                weight: w.clone(),
            })
        })
    }
}

/// Evaluated expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    /// A rational function, also usable as an exponent.
    Rational(RationalFunction),
    /// An exponent containing non-rational Euler series.
    Exponent(Exponent),
    /// `rat · e^{exponent}` with a nonzero exponent.
    Function { rat: RationalFunction, exponent: Exponent },
    /// `exp(exponent)` of an eñe product, known through the window, plus
    /// its generator form when both factors had one.
    Ene {
        exponent: TruncatedLaurentSeries,
        closed_form: Option<GeneratorProduct>,
    },
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Rational(_) => "rational",
            Value::Exponent(_) => "exponent",
            Value::Function { .. } => "function",
            Value::Ene { .. } => "ene",
        }
    }

    fn as_exponent(&self) -> Option<Exponent> {
        match self {
            Value::Rational(r) => Some(Exponent::from_rational(r.clone())),
            Value::Exponent(e) => Some(e.clone()),
            _ => None,
        }
    }

    fn as_constant(&self) -> Option<Gaussian> {
        match self {
            Value::Rational(r) => r.as_constant(),
            _ => None,
        }
    }

    fn as_function(&self) -> Option<(RationalFunction, Exponent)> {
        match self {
            Value::Rational(r) => Some((r.clone(), Exponent::default())),
            Value::Function { rat, exponent } => Some((rat.clone(), exponent.clone())),
            _ => None,
        }
    }
}

fn exponent_value(e: Exponent) -> Value {
    if e.terms.is_empty() {
        Value::Rational(e.rational)
    } else {
        Value::Exponent(e)
    }
}

/// `rat · e^{exponent}`; integer multiples of `R_0(z/u) = log(1 − z/u)` move
/// into the rational part.
fn function_value(rat: RationalFunction, mut exponent: Exponent) -> Result<Value> {
    if rat.is_zero() {
        return Err(ene::Error::ZeroRationalPart.into());
    }
    let mut rat = rat;
    let logs: Vec<(Gaussian, i64)> = exponent
        .terms
        .iter()
        .filter_map(|((m, u), w)| (*m == 0).then(|| w.as_i64().map(|n| (u.clone(), n))).flatten())
        .collect();
    for (u, n) in logs {
        exponent.terms.remove(&(0, u.clone()));
        let factor = RationalFunction::from_poly(Poly::normalized_factor(&u)?);
        rat = &rat * &factor.pow(n)?;
    }
    if exponent.is_zero() {
        return Ok(Value::Rational(rat));
    }
    Ok(Value::Function { rat, exponent })
}

fn scalar_arg(e: &Expr, what: &str) -> Result<Gaussian> {
    match evaluate(e, SeriesWindow::default())? {
        Value::Rational(r) => r
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| EvalError::Type(format!("{what} must be a nonzero constant, got {r}"))),
        v => type_error(format!("{what} must be a nonzero constant, got a {}", v.kind())),
    }
}

/// Evaluates `e`; `window` sets the expansion range of eñe products.
pub fn evaluate(e: &Expr, window: SeriesWindow) -> Result<Value> {
    Ok(match e {
        Expr::Int(n) => Value::Rational(RationalFunction::constant(Gaussian::from_bigint(n.clone()))),
        Expr::Imag(n) => Value::Rational(RationalFunction::constant(&Gaussian::i() * &Gaussian::from_bigint(n.clone()))),
        Expr::Z => Value::Rational(RationalFunction::z()),
        Expr::Neg(a) => neg(evaluate(a, window)?)?,
        Expr::Add(a, b) => add(evaluate(a, window)?, evaluate(b, window)?)?,
        Expr::Sub(a, b) => add(evaluate(a, window)?, neg(evaluate(b, window)?)?)?,
        Expr::Mul(a, b) => mul(evaluate(a, window)?, evaluate(b, window)?)?,
        Expr::Div(a, b) => mul(evaluate(a, window)?, inv(evaluate(b, window)?)?)?,
        Expr::Pow(a, n) => pow(evaluate(a, window)?, *n)?,
        Expr::Exp(a) => match evaluate(a, window)?.as_exponent() {
            Some(x) => function_value(RationalFunction::one(), x)?,
            None => return type_error("exp expects a rational function or Euler series exponent"),
        },
        Expr::R(k, z0) => euler_value(*k, scalar_arg(z0, "the R parameter")?)?,
        Expr::Li(k) => {
            if *k >= 1 {
                Value::Exponent(Exponent::term(1 - k, Gaussian::one(), -Gaussian::one()))
            } else {
                Value::Rational(-euler_r_rational(1 - k)?)
            }
        }
        Expr::Zinf(m, z0) => {
            if *m == 0 {
                return type_error("zinf order must be nonzero");
            }
            let s = EneSymbol::from_euler_naming(*m, &scalar_arg(z0, "the zinf point")?, Gaussian::one())?;
            let x = match euler_value(s.order, s.parameter)? {
                Value::Rational(r) => Exponent::from_rational(r),
                Value::Exponent(x) => x,
                _ => unreachable!("euler values are exponents"),
            };
            function_value(RationalFunction::one(), x)?
        }
        Expr::Ene(a, b) => ene_values(&evaluate(a, window)?, &evaluate(b, window)?, window)?,
    })
}

/// `R_k(z/u)`: rational for `k ≥ 1`, a series exponent otherwise.
fn euler_value(k: i64, u: Gaussian) -> Result<Value> {
    if k >= 1 {
        Ok(Value::Rational(euler_generator(k, &u)?))
    } else {
        Ok(Value::Exponent(Exponent::term(k, u, Gaussian::one())))
    }
}

fn neg(a: Value) -> Result<Value> {
    match a {
        Value::Rational(r) => Ok(Value::Rational(-r)),
        Value::Exponent(e) => Ok(Value::Exponent(e.scale(&-Gaussian::one()))),
        Value::Function { rat, exponent } => Ok(Value::Function { rat: -rat, exponent }),
        Value::Ene { .. } => type_error("eñe results only combine through ene(...)"),
    }
}

fn add(a: Value, b: Value) -> Result<Value> {
    match (a.as_exponent(), b.as_exponent()) {
        (Some(x), Some(y)) => Ok(exponent_value(x.add(&y))),
        _ => type_error(format!("cannot add a {} and a {}", a.kind(), b.kind())),
    }
}

fn mul(a: Value, b: Value) -> Result<Value> {
    if let (Value::Rational(x), Value::Rational(y)) = (&a, &b) {
        return Ok(Value::Rational(x * y));
    }
    for (c, other) in [(&a, &b), (&b, &a)] {
        if let (Some(c), Value::Exponent(x)) = (c.as_constant(), other) {
            return Ok(exponent_value(x.scale(&c)));
        }
    }
    match (a.as_function(), b.as_function()) {
        (Some((r1, x1)), Some((r2, x2))) => function_value(&r1 * &r2, x1.add(&x2)),
        _ => type_error(format!("cannot multiply a {} by a {}", a.kind(), b.kind())),
    }
}

fn inv(a: Value) -> Result<Value> {
    match a {
        Value::Rational(r) => Ok(Value::Rational(r.inv()?)),
        Value::Function { rat, exponent } => Ok(Value::Function {
            rat: rat.inv()?,
            exponent: exponent.scale(&-Gaussian::one()),
        }),
        v => type_error(format!("cannot divide by a {}", v.kind())),
    }
}

fn pow(a: Value, n: i64) -> Result<Value> {
    match a {
        Value::Rational(r) => Ok(Value::Rational(r.pow(n)?)),
        Value::Function { rat, exponent } => {
            function_value(rat.pow(n)?, exponent.scale(&Gaussian::from_int(n)))
        }
        v if n == 1 => Ok(v),
        v => type_error(format!("cannot raise a {} to a power", v.kind())),
    }
}

/// `log(f/f(0))` at 0, constant term dropped.
pub fn exponent_of(v: &Value, window: SeriesWindow) -> Result<TruncatedLaurentSeries> {
    if let Value::Ene { exponent, .. } = v {
        return Ok(exponent.clone());
    }
    let Some((rat, x)) = v.as_function() else {
        return type_error(format!("expected a function, got a {}; wrap exponents in exp(...)", v.kind()));
    };
    let (n0, d0) = (rat.num().coeff(0), rat.den().coeff(0));
    if n0.is_zero() || d0.is_zero() {
        return Err(ene::Error::UnsupportedRepresentative.into());
    }
    let normalized = rat.scale(&(&d0 / &n0));
    let log_rat = series_of_rational(&normalized, SeriesWindow::order(window.high)).log()?;
    let sum = &x.series(window) + &log_rat;
    Ok(TruncatedLaurentSeries::from_fn(sum.low(), sum.high(), |k| {
        if k == 0 {
            Gaussian::zero()
        } else {
            sum.coeff(k).expect("known")
        }
    }))
}

/// Generator form, when the roots and poles lie in ℚ(i).
pub fn closed_form_of(v: &Value) -> Option<GeneratorProduct> {
    match v {
        Value::Ene { closed_form, .. } => closed_form.clone(),
        _ => {
            let (rat, x) = v.as_function()?;
            let f = transalg_make(rat, x.rational.clone()).ok()?;
            let p = GeneratorProduct::from_function(&f).ok()?;
            Some(p.mul(&GeneratorProduct::from_factors(x.symbols())))
        }
    }
}

pub fn ene_values(a: &Value, b: &Value, window: SeriesWindow) -> Result<Value> {
    let exponent = ene_exp(&exponent_of(a, window)?, &exponent_of(b, window)?);
    let closed_form = match (closed_form_of(a), closed_form_of(b)) {
        (Some(x), Some(y)) => Some(x.ene(&y)),
        _ => None,
    };
    Ok(Value::Ene {
        exponent,
        closed_form,
    })
}

/// Expansion at 0: exact for rationals and exponents, normalized to value 1
/// for functions. The second part is an unexpanded principal exponent.
pub fn expand(v: &Value, window: SeriesWindow) -> Result<(TruncatedLaurentSeries, Option<TruncatedLaurentSeries>)> {
    match v {
        Value::Rational(r) => Ok((series_of_rational(r, window), None)),
        Value::Exponent(x) => Ok((x.series(window), None)),
        _ => {
            let h = exponent_of(v, window)?;
            let (regular, principal) = h.split_principal();
            let principal = principal.trim_low();
            let principal = principal.valuation().is_some_and(|v| v < 0).then_some(principal);
            Ok((regular.exp()?, principal))
        }
    }
}
