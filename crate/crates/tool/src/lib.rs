//! File formats and command line for the `insider` model checker.

pub mod cli;
pub mod diag;
pub mod door_script;
pub mod dot;
pub mod expr;
pub mod formula;
pub mod json;
pub mod lex;
pub mod model_file;
