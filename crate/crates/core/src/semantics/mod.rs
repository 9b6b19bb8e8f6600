//! Interpretation of terms in a model and executable checks of the
//! soundness theorems: differentiation is the partial derivative in the
//! last variable, and reduction preserves the interpretation.

pub mod fixtures;
pub mod generate;
mod interp;
mod model;
mod theorems;

pub use model::{Model, SemanticsError};
pub use theorems::{check_diff_theorem, check_invariance, InvarianceError, Verdict, DIFFERENTIAL, INVARIANCE};
