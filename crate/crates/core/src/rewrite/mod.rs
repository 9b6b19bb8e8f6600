//! Projection elimination: a rewrite system on finite multisets of terms
//! that pushes `pi`, `pr` through constructors. A multiset stands for the
//! sum of its members; the empty multiset is zero.

mod multiset;
mod normalize;
mod rules;

pub use multiset::TermMultiset;
pub use normalize::{
    is_normal, normalize, normalize_multiset, step_multiset, step_term, FuelExhausted, Normalized, Step, Trace,
    DEFAULT_FUEL,
};
pub use rules::{step_root, Rule};
