//! Command-line front end for the reduction engine: query parsing and
//! expression rendering. The binary in `main.rs` wires these into the
//! `reduce`, `verify`, `tables`, and `kappa` subcommands.

pub mod parse;
pub mod render;
