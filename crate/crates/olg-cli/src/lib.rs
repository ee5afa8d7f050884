//! Command-line front end for the OLG pension model: scenario config
//! ingestion and the `solve`, `verify`, `sweep`, and `report` commands with
//! deterministic CSV emission.

// `!(x > 0.0)`-style guards reject NaN as well; keep them literal.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod config;
pub mod csv;
