//! The polynomial model as a coherent differential category: every pair is
//! summable, `sigma` adds the two halves, and `D R^n` has the layout of
//! `R^n & R^n`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::random_map;
use crate::carrier::{self, Morphism};
use crate::ccdc::{Ccdc, CcdcError, Sampler};
use crate::object::{Base, Object};
use crate::poly::{Monomial, PolyMap, Polynomial};
use crate::rational::int;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealSpace {
    name: String,
    dim: usize,
}

impl RealSpace {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        RealSpace { name: name.into(), dim }
    }

    /// `R^n`, named `R<n>`.
    pub fn standard(dim: usize) -> Self {
        RealSpace::new(alloc::format!("R{dim}"), dim)
    }
}

impl Base for RealSpace {
    fn size(&self) -> usize {
        self.dim
    }

    fn name(&self) -> &str {
        &self.name
    }

    fn atom_label(&self, atom: usize) -> String {
        alloc::format!("e{atom}")
    }

    fn atom_index(&self, label: &str) -> Option<usize> {
        label.strip_prefix('e')?.parse().ok().filter(|&a| a < self.dim)
    }
}

pub type PolyObject = Object<RealSpace>;
pub type PolyMorphism = Morphism<RealSpace>;

#[derive(Clone, Debug)]
pub struct PolyCdc {
    pub degree_cap: usize,
}

impl Default for PolyCdc {
    fn default() -> Self {
        PolyCdc { degree_cap: 16 }
    }
}

impl PolyCdc {
    pub fn real(dim: usize) -> PolyObject {
        Object::leaf(RealSpace::standard(dim))
    }

    pub fn morphism(&self, dom: PolyObject, cod: PolyObject, map: PolyMap) -> PolyMorphism {
        Morphism::new(dom, cod, map)
    }
}

impl Ccdc for PolyCdc {
    type Object = PolyObject;
    type Morphism = PolyMorphism;

    fn name(&self) -> &str {
        "poly"
    }

    fn domain(&self, f: &PolyMorphism) -> PolyObject {
        f.dom().clone()
    }

    fn codomain(&self, f: &PolyMorphism) -> PolyObject {
        f.cod().clone()
    }

    fn identity(&self, x: &PolyObject) -> PolyMorphism {
        carrier::identity(x)
    }

    fn compose(&self, g: &PolyMorphism, f: &PolyMorphism) -> Result<PolyMorphism, CcdcError> {
        carrier::compose(g, f, self.degree_cap)
    }

    fn zero(&self, x: &PolyObject, y: &PolyObject) -> PolyMorphism {
        carrier::zero(x, y)
    }

    fn d_object(&self, x: &PolyObject) -> PolyObject {
        x.d()
    }

    fn d_morphism(&self, f: &PolyMorphism) -> Result<PolyMorphism, CcdcError> {
        Ok(carrier::derivative(f))
    }

    fn proj_d(&self, i: u8, x: &PolyObject) -> PolyMorphism {
        carrier::proj_d(i, x)
    }

    fn sigma(&self, x: &PolyObject) -> PolyMorphism {
        carrier::sigma(x)
    }

    fn pair_witness(&self, f0: &PolyMorphism, f1: &PolyMorphism) -> Result<Option<PolyMorphism>, CcdcError> {
        carrier::pairing(f0, f1).map(Some)
    }

    fn terminal(&self) -> PolyObject {
        Object::Top
    }

    fn product(&self, x: &PolyObject, y: &PolyObject) -> PolyObject {
        Object::with(x.clone(), y.clone())
    }

    fn factors(&self, x: &PolyObject) -> Option<(PolyObject, PolyObject)> {
        x.split().map(|(l, r)| (l.clone(), r.clone()))
    }

    fn prod_proj(&self, i: u8, x0: &PolyObject, x1: &PolyObject) -> PolyMorphism {
        carrier::prod_proj(i, x0, x1)
    }

    fn prod_pair(&self, f0: &PolyMorphism, f1: &PolyMorphism) -> Result<PolyMorphism, CcdcError> {
        carrier::prod_pair(f0, f1)
    }

    fn inj_d(&self, i: u8, x: &PolyObject) -> Result<PolyMorphism, CcdcError> {
        Ok(carrier::inj(i, x))
    }

    fn theta(&self, x: &PolyObject) -> Result<PolyMorphism, CcdcError> {
        Ok(carrier::theta(x))
    }

    fn lift(&self, x: &PolyObject) -> Result<PolyMorphism, CcdcError> {
        Ok(carrier::lift(x))
    }

    fn swap(&self, x: &PolyObject) -> Result<PolyMorphism, CcdcError> {
        Ok(carrier::swap(x))
    }

    fn partial_derivative(&self, f: &PolyMorphism, slots: &[PolyObject], i: usize) -> Result<PolyMorphism, CcdcError> {
        carrier::partial_derivative(f, slots, i)
    }
}

pub struct PolySampler {
    rng: ChaCha8Rng,
    objects: Vec<PolyObject>,
    pub max_degree: usize,
}

impl PolySampler {
    /// Objects drawn from `R1`, `R2`, `D R1`, `R1 & R2`.
    pub fn new(seed: u64) -> Self {
        let objects = vec![
            PolyCdc::real(1),
            PolyCdc::real(2),
            PolyCdc::real(1).d(),
            Object::with(PolyCdc::real(1), PolyCdc::real(2)),
        ];
        PolySampler { rng: ChaCha8Rng::seed_from_u64(seed), objects, max_degree: 2 }
    }
}

impl Sampler<PolyCdc> for PolySampler {
    fn object(&mut self) -> PolyObject {
        self.objects.choose(&mut self.rng).cloned().expect("sampler has objects")
    }

    fn morphism(&mut self, dom: &PolyObject, cod: &PolyObject) -> PolyMorphism {
        let map = random_map(&mut self.rng, dom.size(), cod.size(), self.max_degree);
        Morphism::new(dom.clone(), cod.clone(), map)
    }

    fn small_morphism(&mut self, dom: &PolyObject, cod: &PolyObject) -> PolyMorphism {
        self.morphism(dom, cod)
    }

    fn multilinear(&mut self, slots: &[PolyObject], cod: &PolyObject) -> PolyMorphism {
        let dom = Object::product_n(slots);
        let offsets = Object::offsets(slots);
        let sizes: Vec<usize> = slots.iter().map(Object::size).collect();
        if sizes.contains(&0) {
            return carrier::zero(&dom, cod);
        }
        let polys = (0..cod.size())
            .map(|_| {
                let mut p = Polynomial::zero();
                for _ in 0..self.rng.gen_range(0..=3) {
                    let vars: Vec<u32> = sizes
                        .iter()
                        .zip(&offsets)
                        .map(|(&s, &o)| (o + self.rng.gen_range(0..s)) as u32)
                        .collect();
                    let c = self.rng.gen_range(-3..=3);
                    p.add_term(Monomial::from_vars(vars), int(c));
                }
                p
            })
            .collect();
        Morphism::new(dom.clone(), cod.clone(), PolyMap::new(dom.size(), polys))
    }
}
