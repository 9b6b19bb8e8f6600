//! A deliberately broken model for negative controls: everything is
//! delegated to the wrapped model except the sum, which is replaced by the
//! first projection.

use super::{Ccdc, CcdcError, Sampler};

pub struct CorruptedSigma<I>(pub I);

impl<I: Ccdc> Ccdc for CorruptedSigma<I> {
    type Object = I::Object;
    type Morphism = I::Morphism;

    fn name(&self) -> &str {
        "corrupted-sigma"
    }

    fn domain(&self, f: &Self::Morphism) -> Self::Object {
        self.0.domain(f)
    }

    fn codomain(&self, f: &Self::Morphism) -> Self::Object {
        self.0.codomain(f)
    }

    fn identity(&self, x: &Self::Object) -> Self::Morphism {
        self.0.identity(x)
    }

    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism, CcdcError> {
        self.0.compose(g, f)
    }

    fn zero(&self, x: &Self::Object, y: &Self::Object) -> Self::Morphism {
        self.0.zero(x, y)
    }

    fn d_object(&self, x: &Self::Object) -> Self::Object {
        self.0.d_object(x)
    }

    fn d_morphism(&self, f: &Self::Morphism) -> Result<Self::Morphism, CcdcError> {
        self.0.d_morphism(f)
    }

    fn proj_d(&self, i: u8, x: &Self::Object) -> Self::Morphism {
        self.0.proj_d(i, x)
    }

    fn sigma(&self, x: &Self::Object) -> Self::Morphism {
        self.0.proj_d(0, x)
    }

    fn pair_witness(
        &self,
        f0: &Self::Morphism,
        f1: &Self::Morphism,
    ) -> Result<Option<Self::Morphism>, CcdcError> {
        self.0.pair_witness(f0, f1)
    }

    fn terminal(&self) -> Self::Object {
        self.0.terminal()
    }

    fn product(&self, x: &Self::Object, y: &Self::Object) -> Self::Object {
        self.0.product(x, y)
    }

    fn factors(&self, x: &Self::Object) -> Option<(Self::Object, Self::Object)> {
        self.0.factors(x)
    }

    fn prod_proj(&self, i: u8, x0: &Self::Object, x1: &Self::Object) -> Self::Morphism {
        self.0.prod_proj(i, x0, x1)
    }

    fn prod_pair(&self, f0: &Self::Morphism, f1: &Self::Morphism) -> Result<Self::Morphism, CcdcError> {
        self.0.prod_pair(f0, f1)
    }
}

/// Samples the corrupted model with a sampler of the wrapped one: objects
/// and morphisms are the same.
pub struct CorruptedSampler<S>(pub S);

impl<I: Ccdc, S: Sampler<I>> Sampler<CorruptedSigma<I>> for CorruptedSampler<S> {
    fn object(&mut self) -> I::Object {
        self.0.object()
    }

    fn morphism(&mut self, dom: &I::Object, cod: &I::Object) -> I::Morphism {
        self.0.morphism(dom, cod)
    }

    fn small_morphism(&mut self, dom: &I::Object, cod: &I::Object) -> I::Morphism {
        self.0.small_morphism(dom, cod)
    }

    fn multilinear(&mut self, slots: &[I::Object], cod: &I::Object) -> I::Morphism {
        self.0.multilinear(slots, cod)
    }
}
