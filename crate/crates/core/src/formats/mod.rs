//! Interchange formats: graph6 and DIMACS.

pub mod dimacs;
pub mod graph6;

pub use dimacs::{encode_dimacs, parse_dimacs};
pub use graph6::{encode_graph6, parse_graph6};
