//! Values back to expression syntax, plus text and JSON output.

use ene::algebra::{Gaussian, Poly, RationalFunction};
use ene::series::{SeriesWindow, TruncatedLaurentSeries};
use ene::transalg::{transalg_make, EneSymbol, Generator, GeneratorProduct};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value as Json};

use crate::syntax::{scalar_expr, Expr};
use crate::value::{closed_form_of, expand, EvalError, Exponent, Value};

fn bx(e: Expr) -> Box<Expr> {
    Box::new(e)
}

fn int(n: i64) -> Expr {
    Expr::Int(BigInt::from(n))
}

/// Sign used when a coefficient is written after `+`/`-`.
fn is_negative(c: &Gaussian) -> bool {
    c.re.is_negative() || (c.re.is_zero() && c.im.is_negative())
}

fn z_power(k: i64) -> Expr {
    match k {
        1 => Expr::Z,
        _ => Expr::Pow(bx(Expr::Z), k),
    }
}

/// `c·z^k` with `c` taken positive; callers handle the sign.
fn term(c: &Gaussian, k: i64) -> Expr {
    if k == 0 {
        return scalar_expr(c);
    }
    if c.is_one() {
        return z_power(k);
    }
    let s = scalar_expr(c);
    // `z/2` reads better than `1/2*z`
    if c.im.is_zero() && c.re.numer().is_one() {
        return Expr::Div(bx(z_power(k)), bx(int_expr(c.re.denom())));
    }
    Expr::Mul(bx(s), bx(z_power(k)))
}

fn int_expr(n: &BigInt) -> Expr {
    Expr::Int(n.clone())
}

/// Sum of `c_k z^k`, highest-first terms after the constant.
fn sum_expr(terms: Vec<(Gaussian, i64)>) -> Expr {
    let mut out: Option<Expr> = None;
    for (c, k) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = is_negative(&c);
        let mag = if neg { -&c } else { c.clone() };
        let t = term(&mag, k);
        out = Some(match out {
            None if neg => Expr::Neg(bx(t)),
            None => t,
            Some(acc) if neg => Expr::Sub(bx(acc), bx(t)),
            Some(acc) => Expr::Add(bx(acc), bx(t)),
        });
    }
    out.unwrap_or_else(|| int(0))
}

pub fn poly_expr(p: &Poly) -> Expr {
    sum_expr(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k as i64))
            .collect(),
    )
}

pub fn rational_expr(r: &RationalFunction) -> Expr {
    if r.den().is_constant() {
        return poly_expr(r.num());
    }
    // `1/(1 - z)` rather than `-1/(-1 + z)`
    let d0 = r.den().coeff(0);
    let (num, den) = match d0.inv() {
        Ok(s) => (r.num().scale(&s), r.den().scale(&s)),
        Err(_) => (r.num().clone(), r.den().clone()),
    };
    Expr::Div(bx(poly_expr(&num)), bx(poly_expr(&den)))
}

/// `1 − z/u`.
fn simple_factor_expr(u: &Gaussian) -> Expr {
    let inv = u.inv().expect("nonzero parameter");
    sum_expr(vec![(Gaussian::one(), 0), (-inv, 1)])
}

fn weighted(w: &Gaussian, e: Expr) -> Expr {
    if w.is_one() {
        e
    } else if (-w).is_one() {
        Expr::Neg(bx(e))
    } else {
        Expr::Mul(bx(scalar_expr(w)), bx(e))
    }
}

fn euler_term(m: i64, u: &Gaussian) -> Expr {
    Expr::R(m, bx(scalar_expr(u)))
}

pub fn exponent_expr(x: &Exponent) -> Expr {
    let mut out = if x.rational.is_zero() {
        None
    } else {
        Some(rational_expr(&x.rational))
    };
    for ((m, u), w) in &x.terms {
        let neg = is_negative(w);
        let mag = if neg { -w } else { w.clone() };
        let t = weighted(&mag, euler_term(*m, u));
        out = Some(match out {
            None if neg => Expr::Neg(bx(t)),
            None => t,
            Some(acc) if neg => Expr::Sub(bx(acc), bx(t)),
            Some(acc) => Expr::Add(bx(acc), bx(t)),
        });
    }
    out.unwrap_or_else(|| int(0))
}

fn symbol_expr(s: &EneSymbol) -> Expr {
    if s.order == 0 {
        if let Some(n) = s.weight.as_i64() {
            let base = simple_factor_expr(&s.parameter);
            return if n == 1 { base } else { Expr::Pow(bx(base), n) };
        }
    }
    Expr::Exp(bx(weighted(&s.weight, euler_term(s.order, &s.parameter))))
}

fn product(factors: Vec<Expr>) -> Expr {
    factors
        .into_iter()
        .reduce(|a, b| Expr::Mul(bx(a), bx(b)))
        .unwrap_or_else(|| int(1))
}

pub fn generator_product_expr(p: &GeneratorProduct) -> Expr {
    product(
        p.factors()
            .iter()
            .map(|g| match g {
                Generator::Symbol(s) => symbol_expr(s),
                Generator::Monomial { degree, coeff } => {
                    Expr::Exp(bx(weighted(coeff, z_power(*degree))))
                }
            })
            .collect(),
    )
}

pub fn function_expr(rat: &RationalFunction, x: &Exponent) -> Expr {
    let e = Expr::Exp(bx(exponent_expr(x)));
    if rat.is_one() {
        return e;
    }
    Expr::Mul(bx(rational_expr(rat)), bx(e))
}

trait IsOne {
    fn is_one(&self) -> bool;
}

impl IsOne for RationalFunction {
    fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

/// The value itself in expression syntax; eñe results use their generator
/// form when one is known.
pub fn value_expr(v: &Value) -> Option<Expr> {
    match v {
        Value::Rational(r) => Some(rational_expr(r)),
        Value::Exponent(x) => Some(exponent_expr(x)),
        Value::Function { rat, exponent } => Some(function_expr(rat, exponent)),
        Value::Ene { closed_form, .. } => closed_form.as_ref().map(generator_product_expr),
    }
}

fn series_text(s: &TruncatedLaurentSeries, principal: &Option<TruncatedLaurentSeries>) -> String {
    match principal {
        None => s.to_string(),
        Some(p) => format!("exp({p}) * ({s})"),
    }
}

pub fn value_text(v: &Value, window: SeriesWindow) -> Result<String, EvalError> {
    let mut lines = Vec::new();
    if let Some(e) = value_expr(v) {
        lines.push(e.to_string());
    }
    if let Value::Ene { .. } = v {
        let (s, p) = expand(v, window)?;
        lines.push(format!("series: {}", series_text(&s, &p)));
    }
    Ok(lines.join("\n"))
}

pub fn value_json(v: &Value, window: SeriesWindow) -> Result<Json, EvalError> {
    let mut out = json!({
        "kind": v.kind(),
        "expr": value_expr(v).map(|e| e.to_string()),
    });
    match v {
        Value::Rational(r) => {
            out["rational"] = serde_json::to_value(r).expect("serializable");
        }
        Value::Function { rat, exponent } => {
            out["rat"] = serde_json::to_value(rat).expect("serializable");
            out["exp"] = serde_json::to_value(&exponent.rational).expect("serializable");
            if exponent.terms.is_empty() {
                if let Ok(d) = transalg_make(rat.clone(), exponent.rational.clone())
                    .and_then(|f| f.divisor())
                {
                    out["divisor"] = serde_json::to_value(&d).expect("serializable");
                    out["degrees"] = serde_json::to_value(d.degrees()).expect("serializable");
                }
            }
            if let Some(p) = closed_form_of(v) {
                out["generators"] = Json::String(generator_product_expr(&p).to_string());
            }
        }
        Value::Exponent(_) => {}
        Value::Ene { .. } => {
            let (s, p) = expand(v, window)?;
            out["series"] = serde_json::to_value(&s).expect("serializable");
            out["principal_exponent"] = serde_json::to_value(&p).expect("serializable");
        }
    }
    Ok(out)
}

pub fn series_json(s: &TruncatedLaurentSeries, principal: &Option<TruncatedLaurentSeries>, normalized: bool) -> Json {
    json!({
        "kind": "series",
        "normalized": normalized,
        "text": series_text(s, principal),
        "series": s,
        "principal_exponent": principal,
    })
}

pub fn series_line(s: &TruncatedLaurentSeries, principal: &Option<TruncatedLaurentSeries>) -> String {
    series_text(s, principal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;
    use crate::value::evaluate;

    fn round(s: &str) -> String {
        let v = evaluate(&parse(s).unwrap(), SeriesWindow::order(8)).unwrap();
        let e = value_expr(&v).unwrap().to_string();
        let back = evaluate(&parse(&e).unwrap(), SeriesWindow::order(8)).unwrap();
        assert_eq!(value_expr(&back).unwrap().to_string(), e, "{s}");
        e
    }

    #[test]
    fn renders() {
        assert_eq!(round("ene(1 - z/2, 1 - z/3)"), "1 - z/6");
        assert_eq!(round("ene(exp(R(1, 1)), exp(-Li(2)))"), "1 - z");
        assert_eq!(round("(1 - z/2)*exp(1/(1 - z))"), "(1 - z/2)*exp(1/(1 - z))");
        round("exp(2*R(3, 1/2))");
        round("exp(R(-2, 1 + i) - 3*Li(4))*(1 + z^2)");
    }
}
