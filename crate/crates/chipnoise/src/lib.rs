//! IO companion to `chipnoise-core`: the material database file format, the
//! deterministic CSV/JSON table writers, figure reproduction and the CLI.

// `!(x > 0.0)` guards reject NaN along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod db;
pub mod figures;
pub mod output;
pub mod units;
