//! Expression language, verify suites and subcommands for `ene-cli`.

pub mod app;
pub mod cases;
pub mod render;
pub mod syntax;
pub mod value;
pub mod verify;

pub use app::{run, Output};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
