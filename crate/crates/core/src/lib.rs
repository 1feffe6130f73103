//! Finite semigroups, Q-fuzzy subsets and ideals, extensions of Q-fuzzy
//! subsets by elements, and a harness that checks the associated claims
//! exhaustively over enumerated semigroups.

pub mod enumeration;
pub mod error;
pub mod harness;
pub mod json;
pub mod qfuzzy;
pub mod semigroup;
pub mod transforms;

pub use error::{Error, Result};
pub use qfuzzy::{Grade, QFuzzyKind, QFuzzySubset, QSet};
pub use semigroup::{
    classify, crisp_predicate, ClassFilter, ClassFlags, CrispKind, CrispSubset, Semigroup, SemigroupClass,
};
