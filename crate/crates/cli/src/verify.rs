//! Identity and property suites behind `verify SUITE`.

use std::fmt;
use std::str::FromStr;

use ene::algebra::{polar_order, residue, roots::gaussian_roots, Gaussian, Poly, RationalFunction};
use ene::ene::{ene_exp, ene_roots, ene_series, poly_from_divisor, universal_coeff_residual, NormalizedSeries};
use ene::euler::{check_functional_equation, euler_p, euler_r_rational, euler_r_series, factorial, polylog_series};
use ene::limits::{chordal_distance, collapse_witness, euler_limit_error, hausdorff_distance, SampleRegion, SpherePoint};
use ene::series::{series_of_rational, SeriesWindow, TruncatedLaurentSeries};
use ene::transalg::{
    euler_generator, factor_generators, transalg_make, EneSymbol, GeneratorProduct, Point,
    TransalgebraicFunction,
};
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::cases;

/// Smallest window accepted by the suites.
pub const MIN_ORDER: i64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ring,
    Euler,
    Generators,
    Polylog,
    Bridge,
    Limits,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Ring,
        Suite::Euler,
        Suite::Generators,
        Suite::Polylog,
        Suite::Bridge,
        Suite::Limits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ring => "ring",
            Suite::Euler => "euler",
            Suite::Generators => "generators",
            Suite::Polylog => "polylog",
            Suite::Bridge => "bridge",
            Suite::Limits => "limits",
        }
    }

    fn seed(self) -> u64 {
        0x656e_6500 + self as u64
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// Deliberate defects for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Flips the sign of `⋆ₑ` in the bridge suite.
    BridgeSignFlip,
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bridge-sign-flip" => Ok(Fault::BridgeSignFlip),
            _ => Err(format!("unknown fault `{s}`")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub order: i64,
    pub max_k: i64,
    pub cases: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            order: 12,
            max_k: 16,
            cases: 100,
            fault: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub order: i64,
    pub checks: Vec<Check>,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "{status}  {}  ({} cases)", c.name, c.cases)?;
            if let Some(x) = &c.counterexample {
                writeln!(f, "      counterexample: {x}")?;
            }
        }
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{status}  suite {}", self.suite.name())
    }
}

/// Runs cases until the first failure.
fn check<I>(name: &str, cases: I) -> Check
where
    I: IntoIterator<Item = Result<(), String>>,
{
    let mut n = 0;
    for r in cases {
        n += 1;
        if let Err(x) = r {
            return Check {
                name: name.into(),
                passed: false,
                cases: n,
                counterexample: Some(x),
            };
        }
    }
    Check {
        name: name.into(),
        passed: true,
        cases: n,
        counterexample: None,
    }
}

fn ensure(ok: bool, describe: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(describe())
    }
}

pub fn verify(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport, String> {
    if cfg.order < MIN_ORDER {
        return Err(format!("verify needs --order ≥ {MIN_ORDER}, got {}", cfg.order));
    }
    let mut rng = cases::rng(suite.seed());
    let checks = match suite {
        Suite::Ring => ring(&mut rng, cfg),
        Suite::Euler => euler(cfg),
        Suite::Generators => generators(&mut rng, cfg),
        Suite::Polylog => polylog(),
        Suite::Bridge => bridge(&mut rng, cfg),
        Suite::Limits => limits(&mut rng),
    };
    Ok(SuiteReport {
        suite,
        passed: checks.iter().all(|c| c.passed),
        order: cfg.order,
        checks,
    })
}

fn series(p: &GeneratorProduct, order: i64) -> NormalizedSeries {
    p.series(order).expect("regular at 0")
}

pub fn ring(rng: &mut cases::CaseRng, cfg: &VerifyConfig) -> Vec<Check> {
    let n = cfg.order;
    let triples: Vec<[GeneratorProduct; 3]> = (0..cfg.cases)
        .map(|_| {
            [
                cases::generator_product(rng),
                cases::generator_product(rng),
                cases::generator_product(rng),
            ]
        })
        .collect();
    let expanded: Vec<[NormalizedSeries; 3]> = triples
        .iter()
        .map(|t| [series(&t[0], n), series(&t[1], n), series(&t[2], n)])
        .collect();
    let unit = NormalizedSeries::from_poly(&Poly::from_ints(&[1, -1]), n).expect("normalized");
    let one = NormalizedSeries::one(n);
    let show = |t: &[GeneratorProduct; 3]| format!("f = {}, g = {}, h = {}", t[0], t[1], t[2]);

    vec![
        check(
            "commutativity f⋆g = g⋆f",
            triples.iter().zip(&expanded).map(|(t, [f, g, _])| {
                ensure(ene_series(f, g) == ene_series(g, f), || show(t))
            }),
        ),
        check(
            "associativity (f⋆g)⋆h = f⋆(g⋆h)",
            triples.iter().zip(&expanded).map(|(t, [f, g, h])| {
                ensure(ene_series(&ene_series(f, g), h) == ene_series(f, &ene_series(g, h)), || show(t))
            }),
        ),
        check(
            "distributivity f⋆(g·h) = (f⋆g)·(f⋆h)",
            triples.iter().zip(&expanded).map(|(t, [f, g, h])| {
                ensure(ene_series(f, &g.mul(h)) == ene_series(f, g).mul(&ene_series(f, h)), || show(t))
            }),
        ),
        check(
            "unit f⋆(1−z) = f",
            triples.iter().zip(&expanded).map(|(t, [f, ..])| ensure(&ene_series(f, &unit) == f, || show(t))),
        ),
        check(
            "absorbing f⋆1 = 1",
            triples.iter().zip(&expanded).map(|(t, [f, ..])| ensure(ene_series(f, &one) == one, || show(t))),
        ),
        check(
            "generator form matches series",
            triples.iter().zip(&expanded).map(|(t, [f, g, _])| {
                ensure(series(&t[0].ene(&t[1]), n) == ene_series(f, g), || show(t))
            }),
        ),
        check(
            "grading: support of f⋆g within products of supports",
            triples.iter().map(|t| {
                let (sf, sg) = (t[0].support(), t[1].support());
                let ok = t[0].ene(&t[1]).support().iter().all(|w| {
                    sf.iter().any(|a| sg.iter().any(|b| &(a * b) == w))
                });
                ensure(ok, || show(t))
            }),
        ),
    ]
}

pub fn euler(cfg: &VerifyConfig) -> Vec<Check> {
    let ks = 2..=cfg.max_k.max(2);
    let p = |k: i64| euler_p(k).expect("k ≥ 1").poly;
    vec![
        check(
            "deg P_k = k − 2",
            ks.clone().map(|k| ensure(p(k).degree() == Some((k - 2) as usize), || format!("k = {k}"))),
        ),
        check(
            "P_k(0) = 1",
            ks.clone().map(|k| ensure(p(k).coeff(0).is_one(), || format!("k = {k}"))),
        ),
        check(
            "P_k(1) = (k−1)!",
            ks.clone().map(|k| {
                let v = p(k).eval(&Gaussian::one());
                ensure(v == Gaussian::from_bigint(factorial((k - 1) as u64)), || format!("k = {k}: P_k(1) = {v}"))
            }),
        ),
        check(
            "P_k palindromic",
            ks.clone().map(|k| {
                let c = p(k).into_coeffs();
                let mut r = c.clone();
                r.reverse();
                ensure(c == r, || format!("k = {k}"))
            }),
        ),
        check(
            "R_k(1/z) = (−1)^k R_k(z)",
            ks.clone().map(|k| ensure(check_functional_equation(k) == Ok(true), || format!("k = {k}"))),
        ),
        check(
            "R_{k+1} = z·R_k′",
            (1..cfg.max_k.max(2)).map(|k| {
                let r = euler_r_rational(k).expect("k ≥ 1");
                let theta = &RationalFunction::z() * &r.derivative();
                ensure(theta == euler_r_rational(k + 1).expect("k ≥ 1"), || format!("k = {k}"))
            }),
        ),
        check(
            "closed form of R_k expands to −Σ n^{k−1} zⁿ (order 24)",
            (1..=8).map(|k| {
                let w = SeriesWindow::order(24);
                let lhs = series_of_rational(&euler_r_rational(k).expect("k ≥ 1"), w);
                let rhs = TruncatedLaurentSeries::from_fn(0, 24, |n| {
                    if n == 0 {
                        Gaussian::zero()
                    } else {
                        Gaussian::from_bigint(-num_traits::pow(num_bigint::BigInt::from(n), (k - 1) as usize))
                    }
                });
                ensure(lhs == rhs, || format!("k = {k}: first difference at z^{:?}", lhs.first_difference(&rhs)))
            }),
        ),
    ]
}

pub fn generators(rng: &mut cases::CaseRng, cfg: &VerifyConfig) -> Vec<Check> {
    let exps: Vec<RationalFunction> = (0..cfg.cases).map(|_| cases::rational_exponent(rng)).collect();
    let funcs: Vec<TransalgebraicFunction> = (0..cfg.cases).map(|_| cases::transalgebraic(rng)).collect();
    let weights: Vec<(Gaussian, Gaussian)> = (0..64)
        .map(|_| (cases::nonzero_scalar(rng), cases::nonzero_scalar(rng)))
        .collect();
    vec![
        check(
            "factorization reassembles the exponent up to a constant",
            exps.iter().map(|e| {
                let fac = factor_generators(&RationalFunction::one(), e).map_err(|x| format!("{e}: {x}"))?;
                ensure((&fac.reassemble_exponent() - e).as_constant().is_some(), || e.to_string())
            }),
        ),
        check(
            "e^{aR_k(z/u)} ⋆ e^{bR_l(z/v)} = e^{ab·R_{k+l}(z/(uv))} (order 20)",
            generator_law_cases(&weights).into_iter().map(|(a, b)| generator_law(&a, &b, 20)),
        ),
        check(
            "generator law through ene_series, unit weights (order 20)",
            generator_law_cases(&[(Gaussian::one(), Gaussian::one())])
                .into_iter()
                .step_by(7)
                .map(|(a, b)| generator_law_series(&a, &b, 20)),
        ),
        check(
            "residues of f′/f are the algebraic multiplicities",
            funcs.iter().map(log_derivative_residues),
        ),
        check(
            "f′/f has a pole of order d + 1 at each singularity",
            funcs.iter().map(log_derivative_orders),
        ),
        check(
            "divisor of a product is the sum of divisors",
            funcs.chunks(2).filter(|c| c.len() == 2).map(|c| {
                let (f, g) = (&c[0], &c[1]);
                let lhs = f.mul(g).divisor().map_err(|e| e.to_string())?;
                let (df, dg) = (f.divisor().map_err(|e| e.to_string())?, g.divisor().map_err(|e| e.to_string())?);
                ensure(lhs.algebraic == df.algebraic_sum(&dg), || format!("f = {f:?}, g = {g:?}"))
            }),
        ),
    ]
}

/// Every `(k, u) × (l, v)` with `k, l ∈ {−3..4}\{0}` and the parameter
/// pool, with weights cycled from `weights`.
pub fn generator_law_cases(weights: &[(Gaussian, Gaussian)]) -> Vec<(EneSymbol, EneSymbol)> {
    let orders: Vec<i64> = (-3..=4).filter(|&k| k != 0).collect();
    let params = cases::parameter_pool();
    let mut out = Vec::new();
    let mut i = 0;
    for &k in &orders {
        for &l in &orders {
            for u in &params {
                for v in &params {
                    let (a, b) = &weights[i % weights.len()];
                    i += 1;
                    out.push((
                        EneSymbol::new(k, u.clone(), a.clone()).expect("nonzero"),
                        EneSymbol::new(l, v.clone(), b.clone()).expect("nonzero"),
                    ));
                }
            }
        }
    }
    out
}

/// Expected exponent `w·R_m(z/u)` built without the unified coefficient
/// formula: closed forms for `m ≥ 1`, `log(1 − z/u)` for `m = 0`, and
/// polylogarithms for `m ≤ −1`.
pub fn reference_exponent(m: i64, u: &Gaussian, w: &Gaussian, order: i64) -> TruncatedLaurentSeries {
    let win = SeriesWindow::order(order);
    let s = if m >= 1 {
        series_of_rational(&euler_generator(m, u).expect("m ≥ 1"), win)
    } else if m == 0 {
        let lin = Poly::normalized_factor(u).expect("nonzero");
        TruncatedLaurentSeries::from_poly(&lin, order).log().expect("normalized")
    } else {
        let li = polylog_series(1 - m, win).expect("index ≥ 2");
        (-&li).rescale(u).expect("nonzero")
    };
    s.scale(w)
}

/// Exponent-level comparison; `exp` is injective on series with zero
/// constant term, so this decides equality of the products.
pub fn generator_law(a: &EneSymbol, b: &EneSymbol, order: i64) -> Result<(), String> {
    let lhs = ene_exp(
        &reference_exponent(a.order, &a.parameter, &a.weight, order),
        &reference_exponent(b.order, &b.parameter, &b.weight, order),
    );
    let uv = &a.parameter * &b.parameter;
    let rhs = reference_exponent(a.order + b.order, &uv, &(&a.weight * &b.weight), order);
    ensure(lhs == rhs, || format!("{a} ⋆ {b}: first difference at z^{:?}", lhs.first_difference(&rhs)))
}

/// The same law through [`ene_series`] on the expanded factors.
pub fn generator_law_series(a: &EneSymbol, b: &EneSymbol, order: i64) -> Result<(), String> {
    let expand = |s: &EneSymbol| {
        NormalizedSeries::exp_of(&reference_exponent(s.order, &s.parameter, &s.weight, order))
            .map_err(|e| e.to_string())
    };
    let lhs = ene_series(&expand(a)?, &expand(b)?);
    let uv = &a.parameter * &b.parameter;
    let rhs = NormalizedSeries::exp_of(&reference_exponent(a.order + b.order, &uv, &(&a.weight * &b.weight), order))
        .map_err(|e| e.to_string())?;
    ensure(lhs == rhs, || format!("{a} ⋆ {b}: first difference at z^{:?}", lhs.first_difference(&rhs)))
}

fn log_derivative_residues(f: &TransalgebraicFunction) -> Result<(), String> {
    let d = f.divisor().map_err(|e| e.to_string())?;
    let dl = f.log_derivative();
    for root in gaussian_roots(dl.den()).map_err(|e| e.to_string())? {
        let rho = root.0;
        let expected = d.algebraic.get(&Point::Finite(rho.clone())).copied().unwrap_or(0);
        let r = residue(&dl, &rho);
        if r != Gaussian::from_int(expected) {
            return Err(format!("{f:?} at {rho}: residue {r}, multiplicity {expected}"));
        }
    }
    Ok(())
}

fn log_derivative_orders(f: &TransalgebraicFunction) -> Result<(), String> {
    let d = f.divisor().map_err(|e| e.to_string())?;
    let dl = f.log_derivative();
    for (p, order) in &d.transcendental {
        if let Point::Finite(rho) = p {
            let got = polar_order(&dl, rho);
            if got != *order as usize + 1 {
                return Err(format!("{f:?} at {rho}: pole order {got}, d = {order}"));
            }
        }
    }
    Ok(())
}

pub fn polylog() -> Vec<Check> {
    let order = 24;
    let w = SeriesWindow::order(order);
    let linear = TruncatedLaurentSeries::from_poly(&Poly::from_ints(&[1, -1]), order);
    vec![
        check(
            "e^{R_k} ⋆ e^{−Li_{k+1}} = 1 − z (order 24)",
            (0..=6).map(|k| {
                let f = euler_r_series(k, w);
                let g = -&polylog_series(k + 1, w).expect("k + 1 ≥ 1");
                let prod = ene_exp(&f, &g).exp().map_err(|e| e.to_string())?;
                ensure(prod == linear, || format!("k = {k}: got {prod}"))
            }),
        ),
        check(
            "z·Li_{k+1}′ = Li_k",
            (1..=8).map(|k| {
                let lhs = polylog_series(k + 1, w).expect("≥ 1").z_derivative();
                let rhs = polylog_series(k, w).expect("≥ 1");
                ensure(lhs == rhs, || format!("k = {k}"))
            }),
        ),
        check(
            "Li_{−n} = −R_{n+1} is rational",
            (0..=6).map(|n| {
                let r = -&euler_r_rational(n + 1).expect("≥ 1");
                let s = series_of_rational(&r, w);
                let direct = TruncatedLaurentSeries::from_fn(0, order, |j| {
                    if j == 0 {
                        Gaussian::zero()
                    } else {
                        Gaussian::from_bigint(num_traits::pow(num_bigint::BigInt::from(j), n as usize))
                    }
                });
                ensure(s == direct, || format!("n = {n}"))
            }),
        ),
    ]
}

fn ene_with(fault: Option<Fault>, f: &NormalizedSeries, g: &NormalizedSeries) -> NormalizedSeries {
    match fault {
        Some(Fault::BridgeSignFlip) => {
            let h = ene_exp(&f.log(), &g.log());
            NormalizedSeries::exp_of(&-&h).expect("no constant term")
        }
        None => ene_series(f, g),
    }
}

pub fn bridge(rng: &mut cases::CaseRng, cfg: &VerifyConfig) -> Vec<Check> {
    let order = cfg.order;
    let pairs: Vec<_> = (0..200)
        .map(|_| (cases::root_divisor(rng, 4), cases::root_divisor(rng, 4)))
        .collect();
    let coeffs: Vec<(Vec<Gaussian>, Vec<Gaussian>)> = (0..20)
        .map(|_| {
            let n = 10;
            (
                (0..n).map(|_| cases::small_scalar(rng)).collect(),
                (0..n).map(|_| cases::small_scalar(rng)).collect(),
            )
        })
        .collect();
    let alt: Vec<(Gaussian, Gaussian)> = (0..20).map(|_| (cases::small_scalar(rng), cases::small_scalar(rng))).collect();

    vec![
        check(
            "ene_series agrees with the root convolution",
            pairs.iter().map(|(a, b)| {
                let lhs = ene_with(cfg.fault, &poly_from_divisor(a, order), &poly_from_divisor(b, order));
                let rhs = poly_from_divisor(&ene_roots(a, b), order);
                ensure(lhs == rhs, || {
                    format!("{a} ⋆ {b}: first difference at z^{:?}", lhs.first_difference(&rhs))
                })
            }),
        ),
        check(
            "c_1 = −a_1·b_1",
            coeffs.iter().map(|(a, b)| {
                let r = universal_coeff_residual(&a[..1], &b[..1], 1).map_err(|e| e.to_string())?;
                ensure(r.is_zero(), || format!("a_1 = {}, b_1 = {}", a[0], b[0]))
            }),
        ),
        check(
            "c_n + n·a_n·b_n has no a_n·b_n term (n ≤ 10)",
            coeffs.iter().zip(&alt).flat_map(|((a, b), (s, t))| {
                (1..=10).map(move |n| universal_mixed_difference(a, b, s, t, n))
            }),
        ),
        check(
            "c_n + n·a_n·b_n ignores a_n when b_1..b_{n−1} = 0 (n ≤ 10)",
            coeffs.iter().zip(&alt).flat_map(|((a, b), (s, _))| {
                (1..=10).map(move |n| {
                    let mut b0 = vec![Gaussian::zero(); n];
                    b0[n - 1] = b[n - 1].clone();
                    let mut a2 = a[..n].to_vec();
                    a2[n - 1] = &a2[n - 1] + s;
                    let r1 = universal_coeff_residual(&a[..n], &b0, n).map_err(|e| e.to_string())?;
                    let r2 = universal_coeff_residual(&a2, &b0, n).map_err(|e| e.to_string())?;
                    ensure(r1 == r2, || format!("n = {n}"))
                })
            }),
        ),
    ]
}

/// `Δ_{a_n}Δ_{b_n}` of the residual, which must vanish.
pub fn universal_mixed_difference(
    a: &[Gaussian],
    b: &[Gaussian],
    s: &Gaussian,
    t: &Gaussian,
    n: usize,
) -> Result<(), String> {
    let shifted = |v: &[Gaussian], d: &Gaussian| {
        let mut w = v[..n].to_vec();
        w[n - 1] = &w[n - 1] + d;
        w
    };
    let r = |x: &[Gaussian], y: &[Gaussian]| universal_coeff_residual(x, y, n).map_err(|e| e.to_string());
    let (a1, b1) = (shifted(a, s), shifted(b, t));
    let mixed = &(&r(&a1, &b1)? - &r(&a1, &b[..n])?) - &(&r(&a[..n], &b1)? - &r(&a[..n], &b[..n])?);
    ensure(mixed.is_zero(), || format!("n = {n}: mixed difference {mixed}"))
}

/// `e^z` on the unit circle.
pub fn stock_entire() -> (TransalgebraicFunction, SampleRegion) {
    (
        TransalgebraicFunction::exponential(RationalFunction::z()),
        SampleRegion::circle(Complex64::new(0.0, 0.0), 1.0, 64),
    )
}

/// `(1 − z/2)e^{1/(1−z)}` on `|z| = 0.4` and `|z| = 3`.
pub fn stock_singular() -> (TransalgebraicFunction, SampleRegion) {
    let f = transalg_make(
        RationalFunction::from_poly(Poly::new(vec![Gaussian::one(), Gaussian::ratio(-1, 2)])),
        RationalFunction::new(Poly::from_ints(&[1]), Poly::from_ints(&[1, -1])).expect("nonzero"),
    )
    .expect("nonzero");
    let region = SampleRegion::circle(Complex64::new(0.0, 0.0), 0.4, 64).with_circle(Complex64::new(0.0, 0.0), 3.0, 64);
    (f, region)
}

pub const DECAY_KS: [u64; 4] = [64, 128, 256, 512];

/// `error(2k)/error(k)` for `k = 64, 128, 256`.
pub fn decay_ratios(f: &TransalgebraicFunction, region: &SampleRegion) -> Result<Vec<f64>, String> {
    let errs: Vec<f64> = DECAY_KS
        .iter()
        .map(|&k| euler_limit_error(f, k, region).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    Ok(errs.windows(2).map(|w| w[1] / w[0]).collect())
}

pub fn limits(rng: &mut cases::CaseRng) -> Vec<Check> {
    let points: Vec<SpherePoint> = (0..30)
        .map(|_| {
            if rng.random_bool(0.1) {
                SpherePoint::Infinity
            } else {
                SpherePoint::Finite(Complex64::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)))
            }
        })
        .collect();
    let sets: Vec<Vec<SpherePoint>> = points.chunks(3).map(|c| c.to_vec()).collect();
    vec![
        check(
            "Euler limit error halves as k doubles",
            [stock_entire(), stock_singular()].into_iter().map(|(f, region)| {
                let ratios = decay_ratios(&f, &region)?;
                ensure(ratios.iter().all(|r| (0.35..=0.65).contains(r)), || format!("{f:?}: ratios {ratios:?}"))
            }),
        ),
        check(
            "e^{1/(1−z)} at k = 100: one zero cluster and one pole at 1",
            std::iter::once({
                let f = TransalgebraicFunction::exponential(
                    RationalFunction::new(Poly::from_ints(&[1]), Poly::from_ints(&[1, -1])).expect("nonzero"),
                );
                collapse_witness(&f, 100).map_err(|e| e.to_string()).and_then(|r| {
                    let s = &r.singularities;
                    let ok = s.len() == 1
                        && s[0].zeros.len() == 1
                        && s[0].zeros[0].multiplicity == 100
                        && s[0].zeros[0].distance < 0.02
                        && s[0].poles.len() == 1
                        && s[0].poles[0].multiplicity == 100
                        && s[0].distinct_locations() as u64 > s[0].order;
                    ensure(ok, || format!("{r:?}"))
                })
            }),
        ),
        check(
            "chordal Hausdorff distance is a metric",
            sets.windows(3).map(|w| {
                let d = |a: &[SpherePoint], b: &[SpherePoint]| hausdorff_distance(a, b).map_err(|e| e.to_string());
                let (ab, ba, bc, ac) = (d(&w[0], &w[1])?, d(&w[1], &w[0])?, d(&w[1], &w[2])?, d(&w[0], &w[2])?);
                ensure(
                    ab == ba && d(&w[0], &w[0])? == 0.0 && ac <= ab + bc + 1e-12,
                    || format!("{:?}", w),
                )
            }),
        ),
        check(
            "chordal distance to infinity",
            points.iter().map(|&p| {
                let d = chordal_distance(p, SpherePoint::Infinity);
                ensure((0.0..=2.0).contains(&d), || format!("{p}"))
            }),
        ),
    ]
}
