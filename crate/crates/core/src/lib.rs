//! Exact arithmetic for p-numerical semigroups and the Diophantine triples
//! of x² + y² = zʳ.
//!
//! The crate has two halves that check each other:
//!
//! * a generic engine ([`semigroup`]) that computes denumerants, p-Apéry
//!   sets, p-Frobenius numbers, p-genus and p-Sylvester sums for arbitrary
//!   coprime generator sets by dynamic programming, plus a direct
//!   gap-enumeration oracle;
//! * a closed-form evaluator ([`closed`]) for the triples
//!   (x, y, z) with x² + y² = zʳ (r = 2..5), driven by a per-regime catalog
//!   of Apéry-table shapes, with the regime selected by exact comparison of
//!   the slope s/t against algebraic thresholds ([`algebra`]).
//!
//! Every computation is exact integer arithmetic; no floating point takes
//! part in any decision. The [`method`] module exposes the computation
//! strategies behind one trait so callers can select them by name.

pub mod algebra;
pub mod closed;
pub mod error;
pub mod method;
pub mod semigroup;
pub mod triple;

pub use error::{Error, Result};
pub use semigroup::{
    denumerant_table, gaps_oracle, p_apery_set, stats_from_apery, two_gen_stats, DenumerantTable,
    EngineOptions, GeneratorSet, MethodTag, PAperySet, SemigroupStats,
};
pub use triple::{enumerate_params, general_xyz, ordering_of, Triple, TripleOrdering, TripleParams};
