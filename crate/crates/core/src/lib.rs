//! Partitions of a graph's vertices into classes that avoid a fixed pattern.
//!
//! `χ_G(H)` is the least number of classes in a vertex partition of `H` where
//! no class contains a copy of `G`. This crate computes it exactly for small
//! hosts, evaluates the constructive upper bounds, extracts critical
//! subgraphs, and audits Nordhaus–Gaddum sums `χ_G(H) + χ_G(H̄)` over corpora.
//!
//! Search kernels use one `u64` per adjacency row and accept hosts with at
//! most [`BITSET_LIMIT`] vertices.
//!
//! ```
//! use gfree::{chi_g_exact, named, PatternSpec};
//!
//! let k5 = named::complete(5);
//! let triangle = PatternSpec::single(named::complete(3)).unwrap();
//! assert_eq!(chi_g_exact(&k5, &triangle).unwrap().value, 3);
//! ```

pub mod coloring;
pub mod critical;
pub mod enumerate;
pub mod error;
pub mod formats;
pub mod graph;
pub mod lovasz;
pub mod named;
pub mod ng;
pub mod pattern;

pub use coloring::{
    bound_chromatic, bound_degeneracy, bound_maxdeg, bound_report, chi_g_exact, chi_g_exact_within, chromatic_number,
    decide_k_colorable, decide_k_colorable_within, greedy_degeneracy_coloring, BoundReport, ChiResult, Coloring, Limits,
};
pub use critical::{audit_certificate, extract_critical, is_critical, CriticalCertificate, Subgraph};
pub use enumerate::{canonical_form, enumerate_small_graphs};
pub use error::{Error, Result};
pub use formats::{encode_dimacs, encode_graph6, parse_dimacs, parse_graph6};
pub use graph::{DegreeBounds, Graph, BITSET_LIMIT};
pub use lovasz::{lovasz_decomposition, LovaszPartition};
pub use ng::{check_refined_conditions, ng_sum, verify_corpus, witness_suite, AuditOptions, AuditReport, NgBranch, NgRecord};
pub use pattern::{clique_number, contains_copy, find_copy, girth, Containment, PatternSpec, Witness};
