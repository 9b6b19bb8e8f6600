//! Analytic maps between finite probabilistic coherence spaces.
//!
//! A morphism `X -> Y` is a tuple of polynomials with nonnegative
//! coefficients mapping `P X` into `P Y`. Being a morphism is checked
//! against the probe points of the domain, which is exact for the maps
//! built by the category operations but only a semi-decision for arbitrary
//! polynomials. Summability of `f0, f1` is "`f0 + f1` is a morphism"; when
//! the caller supplies a morphism dominating the sum coefficientwise the
//! answer is exact, since `P Y` is downward closed.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::space::{self, PcsError, PcsObject, PcsVector};
use crate::carrier::{self, Morphism};
use crate::ccdc::{Ccdc, CcdcError};
use crate::object::Object;
use crate::poly::PolyMap;
use crate::rational::Rational;

pub type PcsMorphism = Morphism<alloc::sync::Arc<super::PcsBase>>;

#[derive(Clone, Debug)]
pub struct Pcs {
    pub degree_cap: usize,
    /// Random probe points per object, on top of the structured ones.
    pub random_probes: usize,
    pub seed: u64,
}

impl Default for Pcs {
    fn default() -> Self {
        Pcs { degree_cap: 16, random_probes: 16, seed: 0x5eed }
    }
}

impl Pcs {
    pub fn probes(&self, x: &PcsObject) -> Vec<PcsVector> {
        space::probes(x, self.random_probes, self.seed)
    }

    /// Whether `f` maps every probe of its domain into its codomain.
    pub fn certify(&self, f: &PcsMorphism) -> bool {
        if !f.map().is_nonnegative() {
            return false;
        }
        let pd = space::predual(f.cod());
        self.probes(f.dom()).iter().all(|x| {
            let y = f.map().eval(x);
            pd.iter().all(|w| y.iter().zip(w).map(|(a, b)| a * b).sum::<Rational>() <= Rational::one())
        })
    }

    /// Builds a morphism after checking coefficients and probes.
    pub fn morphism(&self, dom: PcsObject, cod: PcsObject, map: PolyMap) -> Result<PcsMorphism, PcsError> {
        let err = |reason: &str| PcsError::NotAMorphism {
            dom: dom.to_string(),
            cod: cod.to_string(),
            reason: reason.to_string(),
        };
        if map.inputs() != dom.size() || map.output_count() != cod.size() {
            return Err(err("shape does not match the objects"));
        }
        if map.degree() > self.degree_cap {
            return Err(err("degree exceeds the cap"));
        }
        if !map.is_nonnegative() {
            return Err(err("negative coefficient"));
        }
        let f = Morphism::new(dom.clone(), cod.clone(), map);
        if !self.certify(&f) {
            return Err(err("some point of the domain leaves the codomain"));
        }
        Ok(f)
    }

    pub fn eval(&self, f: &PcsMorphism, x: &[Rational]) -> Result<PcsVector, PcsError> {
        if x.len() != f.dom().size() {
            return Err(PcsError::Length { object: f.dom().to_string(), expected: f.dom().size(), got: x.len() });
        }
        if !space::contains(f.dom(), x) {
            return Err(PcsError::NotInSpace(f.dom().to_string()));
        }
        Ok(f.map().eval(x))
    }

    /// Every monomial has degree one.
    pub fn is_linear(&self, f: &PcsMorphism) -> bool {
        carrier::is_linear_support(f)
    }

    /// Every monomial takes exactly one atom from each slot.
    pub fn is_multilinear(&self, f: &PcsMorphism, slots: &[PcsObject]) -> bool {
        carrier::is_multilinear_support(f, slots)
    }

    /// `f(x) + partial f(x, u) <= f(x + u)` coordinatewise, at `<x, u>` in `P (D X)`.
    pub fn monotone_bound(&self, f: &PcsMorphism, xu: &[Rational]) -> Result<bool, PcsError> {
        let x = f.dom();
        let dx = x.d();
        if !space::contains(&dx, xu) {
            return Err(PcsError::NotInSpace(dx.to_string()));
        }
        let [t0, t1] = x.d_table();
        let sum: Vec<Rational> = t0.iter().zip(&t1).map(|(&i, &j)| &xu[i] + &xu[j]).collect();
        let df = carrier::derivative(f);
        let out = df.map().eval(xu);
        let [c0, c1] = f.cod().d_table();
        let fxu = f.map().eval(&sum);
        Ok((0..f.cod().size()).all(|b| &out[c0[b]] + &out[c1[b]] <= fxu[b]))
    }
}

impl Ccdc for Pcs {
    type Object = PcsObject;
    type Morphism = PcsMorphism;

    fn name(&self) -> &str {
        "pcs"
    }

    fn domain(&self, f: &PcsMorphism) -> PcsObject {
        f.dom().clone()
    }

    fn codomain(&self, f: &PcsMorphism) -> PcsObject {
        f.cod().clone()
    }

    fn identity(&self, x: &PcsObject) -> PcsMorphism {
        carrier::identity(x)
    }

    fn compose(&self, g: &PcsMorphism, f: &PcsMorphism) -> Result<PcsMorphism, CcdcError> {
        carrier::compose(g, f, self.degree_cap)
    }

    fn zero(&self, x: &PcsObject, y: &PcsObject) -> PcsMorphism {
        carrier::zero(x, y)
    }

    fn d_object(&self, x: &PcsObject) -> PcsObject {
        x.d()
    }

    fn d_morphism(&self, f: &PcsMorphism) -> Result<PcsMorphism, CcdcError> {
        Ok(carrier::derivative(f))
    }

    fn proj_d(&self, i: u8, x: &PcsObject) -> PcsMorphism {
        carrier::proj_d(i, x)
    }

    fn sigma(&self, x: &PcsObject) -> PcsMorphism {
        carrier::sigma(x)
    }

    fn pair_witness(&self, f0: &PcsMorphism, f1: &PcsMorphism) -> Result<Option<PcsMorphism>, CcdcError> {
        let s = carrier::pointwise_sum(f0, f1)?;
        if self.certify(&s) {
            Ok(Some(carrier::pairing(f0, f1)?))
        } else {
            Ok(None)
        }
    }

    fn pair_witness_under(
        &self,
        f0: &PcsMorphism,
        f1: &PcsMorphism,
        bound: &PcsMorphism,
    ) -> Result<Option<PcsMorphism>, CcdcError> {
        let s = carrier::pointwise_sum(f0, f1)?;
        if s.is_parallel(bound) && s.map().is_nonnegative() && s.map().le_coeffwise(bound.map()) {
            return Ok(Some(carrier::pairing(f0, f1)?));
        }
        self.pair_witness(f0, f1)
    }

    fn terminal(&self) -> PcsObject {
        Object::Top
    }

    fn product(&self, x: &PcsObject, y: &PcsObject) -> PcsObject {
        Object::with(x.clone(), y.clone())
    }

    fn factors(&self, x: &PcsObject) -> Option<(PcsObject, PcsObject)> {
        x.split().map(|(l, r)| (l.clone(), r.clone()))
    }

    fn prod_proj(&self, i: u8, x0: &PcsObject, x1: &PcsObject) -> PcsMorphism {
        carrier::prod_proj(i, x0, x1)
    }

    fn prod_pair(&self, f0: &PcsMorphism, f1: &PcsMorphism) -> Result<PcsMorphism, CcdcError> {
        carrier::prod_pair(f0, f1)
    }

    fn inj_d(&self, i: u8, x: &PcsObject) -> Result<PcsMorphism, CcdcError> {
        Ok(carrier::inj(i, x))
    }

    fn theta(&self, x: &PcsObject) -> Result<PcsMorphism, CcdcError> {
        Ok(carrier::theta(x))
    }

    fn lift(&self, x: &PcsObject) -> Result<PcsMorphism, CcdcError> {
        Ok(carrier::lift(x))
    }

    fn swap(&self, x: &PcsObject) -> Result<PcsMorphism, CcdcError> {
        Ok(carrier::swap(x))
    }

    fn partial_derivative(&self, f: &PcsMorphism, slots: &[PcsObject], i: usize) -> Result<PcsMorphism, CcdcError> {
        carrier::partial_derivative(f, slots, i)
    }
}

/// The origin of `P x`.
pub fn zero_vector(x: &PcsObject) -> PcsVector {
    alloc::vec![Rational::zero(); x.size()]
}
