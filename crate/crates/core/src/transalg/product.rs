use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::function::TransalgebraicFunction;
use crate::algebra::Gaussian;
use crate::ene::{ene_exp, NormalizedSeries};
use crate::error::{Error, Result};
use crate::series::{series_of_rational, SeriesWindow, TruncatedLaurentSeries};

/// `f ⋆ g` at 0: the power series of the regular part and, when the
/// exponent keeps negative powers, that principal part unexpanded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EneValue {
    pub series: NormalizedSeries,
    pub principal_exponent: Option<TruncatedLaurentSeries>,
}

impl fmt::Display for EneValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.principal_exponent {
            None => write!(f, "{}", self.series),
            Some(p) => write!(f, "exp({}) · ({})", p, self.series),
        }
    }
}

/// Laurent expansion at 0 of `log(f/f(0))`, with zero constant term.
pub fn exponent_laurent(f: &TransalgebraicFunction, window: SeriesWindow) -> Result<TruncatedLaurentSeries> {
    let rat = f.rat_part();
    let (n0, d0) = (rat.num().coeff(0), rat.den().coeff(0));
    if n0.is_zero() || d0.is_zero() {
        return Err(Error::UnsupportedRepresentative);
    }
    let normalized = rat.scale(&(&d0 / &n0));
    let log_rat = series_of_rational(&normalized, SeriesWindow::order(window.high)).log()?;
    let e = series_of_rational(f.exp_part(), window);
    let sum = &e + &log_rat;
    Ok(TruncatedLaurentSeries::from_fn(sum.low(), sum.high(), |k| {
        if k == 0 {
            Gaussian::zero()
        } else {
            sum.coeff(k).expect("known")
        }
    }))
}

/// Eñe product of two transalgebraic functions, modulo constants, expanded
/// at 0 through `window.high`.
pub fn ene_transalg(
    f: &TransalgebraicFunction,
    g: &TransalgebraicFunction,
    window: SeriesWindow,
) -> Result<EneValue> {
    let h = ene_exp(&exponent_laurent(f, window)?, &exponent_laurent(g, window)?);
    let (regular, principal) = h.split_principal();
    let principal = principal.trim_low();
    let principal_exponent = (principal.valuation().is_some_and(|v| v < 0)).then_some(principal);
    Ok(EneValue {
        series: NormalizedSeries::exp_of(&regular)?,
        principal_exponent,
    })
}
