//! The model of probabilistic coherence spaces and analytic maps.

mod category;
mod sampler;
mod space;

pub use category::{zero_vector, Pcs, PcsMorphism};
pub use sampler::PcsSampler;
pub use space::{
    contains, coordinate_bounds, leaf, norm, predual, probes, to_boundary, PcsBase, PcsError, PcsObject,
    PcsVector,
};

/// The unit space `1`.
pub fn one() -> PcsObject {
    leaf(PcsBase::unit())
}

/// Subprobabilities on `{0, .., k}`, named `N`.
pub fn nat(k: usize) -> PcsObject {
    leaf(PcsBase::truncated_nat("N", k))
}
