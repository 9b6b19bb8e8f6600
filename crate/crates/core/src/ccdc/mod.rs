//! The interface of a cartesian coherent differential category.
//!
//! An implementation supplies the left summability structure (`D`, its two
//! projections, the sum `sigma` and a way to build pair witnesses), the
//! differential `D f`, and finite products. The structural maps (`iota`,
//! `theta`, `lift`, `swap`) and partial derivatives have defaults built from
//! pair witnesses; models may override them with direct formulas, and the
//! law suite checks that both routes agree.

use alloc::string::String;
use core::fmt;

use crate::poly::DegreeExceeded;

pub mod corrupt;
pub mod derived;
pub mod laws;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CcdcError {
    #[error("cannot compose: codomain {right} does not match domain {left}")]
    NotComposable { left: String, right: String },
    #[error("maps are not parallel: {0}")]
    NotParallel(String),
    #[error(transparent)]
    Degree(#[from] DegreeExceeded),
    #[error("domain {0} is not the product of the given slots")]
    SlotMismatch(String),
    #[error("slot {index} out of range for {arity} slots")]
    SlotOutOfRange { index: usize, arity: usize },
    #[error("no summability witness: {0}")]
    NotSummable(String),
    #[error("object {0} is not a product")]
    NotAProduct(String),
}

pub trait Ccdc {
    type Object: Clone + PartialEq + fmt::Debug + fmt::Display;
    type Morphism: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn name(&self) -> &str;

    fn domain(&self, f: &Self::Morphism) -> Self::Object;
    fn codomain(&self, f: &Self::Morphism) -> Self::Object;
    fn identity(&self, x: &Self::Object) -> Self::Morphism;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism, CcdcError>;
    fn zero(&self, x: &Self::Object, y: &Self::Object) -> Self::Morphism;

    fn d_object(&self, x: &Self::Object) -> Self::Object;
    fn d_morphism(&self, f: &Self::Morphism) -> Result<Self::Morphism, CcdcError>;
    /// `pi_i : D X -> X`.
    fn proj_d(&self, i: u8, x: &Self::Object) -> Self::Morphism;
    /// `sigma : D X -> X`.
    fn sigma(&self, x: &Self::Object) -> Self::Morphism;

    /// The unique `h` with `pi_0 h = f0` and `pi_1 h = f1`, if the pair is
    /// summable. `Ok(None)` means the model could not establish summability.
    fn pair_witness(
        &self,
        f0: &Self::Morphism,
        f1: &Self::Morphism,
    ) -> Result<Option<Self::Morphism>, CcdcError>;

    /// Like [`Ccdc::pair_witness`], with a hint: a morphism `bound` that the
    /// caller expects to dominate the sum. Models with an order may use it to
    /// decide summability exactly.
    fn pair_witness_under(
        &self,
        f0: &Self::Morphism,
        f1: &Self::Morphism,
        bound: &Self::Morphism,
    ) -> Result<Option<Self::Morphism>, CcdcError> {
        let _ = bound;
        self.pair_witness(f0, f1)
    }

    fn terminal(&self) -> Self::Object;
    fn product(&self, x: &Self::Object, y: &Self::Object) -> Self::Object;
    /// The two factors of a product object.
    fn factors(&self, x: &Self::Object) -> Option<(Self::Object, Self::Object)>;
    fn prod_proj(&self, i: u8, x0: &Self::Object, x1: &Self::Object) -> Self::Morphism;
    fn prod_pair(&self, f0: &Self::Morphism, f1: &Self::Morphism) -> Result<Self::Morphism, CcdcError>;

    /// `iota_0 = <id, 0>` and `iota_1 = <0, id>`.
    fn inj_d(&self, i: u8, x: &Self::Object) -> Result<Self::Morphism, CcdcError> {
        derived::inj_via_witness(self, i, x)
    }

    /// The monad sum `theta : D D X -> D X`.
    fn theta(&self, x: &Self::Object) -> Result<Self::Morphism, CcdcError> {
        derived::theta_via_witness(self, x)
    }

    /// `l : D X -> D D X`.
    fn lift(&self, x: &Self::Object) -> Result<Self::Morphism, CcdcError> {
        derived::lift_via_witness(self, x)
    }

    /// `c : D D X -> D D X`.
    fn swap(&self, x: &Self::Object) -> Result<Self::Morphism, CcdcError> {
        derived::swap_via_witness(self, x)
    }

    /// `D_i f = D f ∘ phi_i` for `f` out of `product_n(slots)`.
    fn partial_derivative(
        &self,
        f: &Self::Morphism,
        slots: &[Self::Object],
        i: usize,
    ) -> Result<Self::Morphism, CcdcError> {
        derived::partial_derivative_via_strength(self, f, slots, i)
    }
}

/// Supplies test material for the law suite.
pub trait Sampler<I: Ccdc + ?Sized> {
    /// A random small object.
    fn object(&mut self) -> I::Object;
    /// A random morphism `dom -> cod`.
    fn morphism(&mut self, dom: &I::Object, cod: &I::Object) -> I::Morphism;
    /// A random morphism small enough that any four such maps with the same
    /// domain and codomain have a sum.
    fn small_morphism(&mut self, dom: &I::Object, cod: &I::Object) -> I::Morphism;
    /// A random morphism out of `product_n(slots)`, linear in every slot.
    fn multilinear(&mut self, slots: &[I::Object], cod: &I::Object) -> I::Morphism;
}
