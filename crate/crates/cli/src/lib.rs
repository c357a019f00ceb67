//! Library side of the `edds` command-line tool.

pub mod crosscheck;
pub mod input;
pub mod render;
