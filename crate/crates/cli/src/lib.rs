//! Library surface of the `cocert` command-line tool: JSON schemas, the
//! univariate polynomial parser, and the command implementations. The
//! binary in `main.rs` is a thin argument-parsing shell over this.

pub mod commands;
pub mod formats;
pub mod parse;
