//! Transalgebraic functions `R0·e^{R1}` on the Riemann sphere, their
//! divisors, factorization into Euler generators, and the eñe product.

mod divisor;
mod function;
mod generators;
mod point;
mod product;
mod symbol;

pub use divisor::{DegreeProfile, TransalgebraicDivisor};
pub use function::{
    transalg_divisor, transalg_inv, transalg_log_derivative, transalg_make, transalg_mul,
    transalg_order, TransalgebraicFunction,
};
pub use generators::{euler_generator, factor_generators, GeneratorFactorization, PolarTerm};
pub use point::Point;
pub use product::{ene_transalg, exponent_laurent, EneValue};
pub use symbol::{ene_symbols, EneSymbol, Generator, GeneratorProduct, SymbolKind};
