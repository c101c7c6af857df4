pub mod algebra;
pub mod ene;
pub mod error;
pub mod euler;
pub mod limits;
pub mod series;
pub mod transalg;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/euler.md")]
    mod euler {}
    #[doc = include_str!("../../../book/src/transalgebraic.md")]
    mod transalgebraic {}
    #[doc = include_str!("../../../book/src/limits.md")]
    mod limits {}
}
