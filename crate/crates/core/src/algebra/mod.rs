//! Exact arithmetic substrate: Gaussian-rational scalars, dense
//! polynomials, reduced rational functions and their polar structure.

mod partial;
mod poly;
mod rational;
pub mod roots;
mod scalar;

pub use partial::{
    partial_fractions, polar_order, polar_term, power_series_quotient, principal_part, residue,
    PolarDecomposition,
};
pub use poly::Poly;
pub(crate) use poly::write_term;
pub use rational::{rational_reduce, RationalFunction};
pub use scalar::{parse_rational, ExactRational, Gaussian};
