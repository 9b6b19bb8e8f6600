//! Exact coherent differentiation.
//!
//! The crate is split along the lines of the theory:
//!
//! * [`syntax`]: types, terms, typing and syntactic differentiation.
//! * [`rewrite`]: the projection-elimination rewrite system on term multisets.
//! * [`ccdc`]: the abstract interface of a coherent differential category,
//!   the constructions derivable from it, and an executable law suite.
//! * [`pcs`] and [`polycdc`]: two concrete models, probabilistic coherence
//!   spaces with analytic maps, and polynomial maps over the rationals.
//! * [`semantics`]: interpretation of terms in any model, and checkers for
//!   the soundness theorems.
//!
//! Everything is exact (arbitrary precision rationals). The crate is
//! `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod carrier;
pub mod ccdc;
pub mod object;
pub mod pcs;
pub mod poly;
pub mod polycdc;
pub mod rational;
pub mod rewrite;
pub mod semantics;
pub mod syntax;

pub use rational::Rational;
