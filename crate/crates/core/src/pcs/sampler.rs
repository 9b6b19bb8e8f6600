//! Random morphisms of the PCS model that are morphisms by construction:
//! a random nonnegative polynomial is scaled so that its value at the
//! corner of the bounding box of the domain lies in the codomain.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::category::PcsMorphism;
use super::space::{coordinate_bounds, norm, PcsObject};
use super::{nat, one, Pcs};
use crate::carrier::Morphism;
use crate::ccdc::Sampler;
use crate::object::Object;
use crate::poly::{Monomial, PolyMap, Polynomial};
use crate::rational::{ratio, Rational};

pub struct PcsSampler {
    rng: ChaCha8Rng,
    objects: Vec<PcsObject>,
    pub max_degree: usize,
}

impl PcsSampler {
    /// Objects drawn from `1`, `N` (truncated at 2), `D 1`, `1 & 1`, `1 & N`, `D N`.
    pub fn new(seed: u64) -> Self {
        let objects = vec![
            one(),
            nat(2),
            one().d(),
            Object::with(one(), one()),
            Object::with(one(), nat(2)),
            nat(1).d(),
        ];
        PcsSampler::with_objects(seed, objects)
    }

    pub fn with_objects(seed: u64, objects: Vec<PcsObject>) -> Self {
        PcsSampler { rng: ChaCha8Rng::seed_from_u64(seed), objects, max_degree: 2 }
    }

    fn coefficient(&mut self) -> Rational {
        ratio(self.rng.gen_range(1..=4), 4)
    }

    /// Scales `polys` so that the map is a morphism `dom -> cod`.
    fn fit(&mut self, dom: &PcsObject, cod: &PcsObject, polys: Vec<Polynomial>, factor: Rational) -> PcsMorphism {
        let corner = coordinate_bounds(dom);
        let values: Vec<Rational> = polys.iter().map(|p| p.eval(&corner)).collect();
        let n = norm(cod, &values);
        let scale = if n.is_zero() { Rational::one() } else { factor / n };
        let map = PolyMap::new(dom.size(), polys).scale(&scale);
        Morphism::new(dom.clone(), cod.clone(), map)
    }

    fn random_polys(&mut self, dom: &PcsObject, cod: &PcsObject, pick: impl Fn(&mut ChaCha8Rng) -> Vec<u32>) -> Vec<Polynomial> {
        (0..cod.size())
            .map(|_| {
                let mut p = Polynomial::zero();
                if dom.size() == 0 && !self.rng.gen_bool(0.5) {
                    return p;
                }
                for _ in 0..self.rng.gen_range(0..=3) {
                    let vars = pick(&mut self.rng);
                    let c = self.coefficient();
                    p.add_term(Monomial::from_vars(vars), c);
                }
                p
            })
            .collect()
    }

    fn random_morphism(&mut self, dom: &PcsObject, cod: &PcsObject, factor: Rational) -> PcsMorphism {
        let n = dom.size() as u32;
        let max_degree = self.max_degree;
        let polys = self.random_polys(dom, cod, |rng| {
            if n == 0 {
                return Vec::new();
            }
            let degree = rng.gen_range(0..=max_degree);
            (0..degree).map(|_| rng.gen_range(0..n)).collect()
        });
        self.fit(dom, cod, polys, factor)
    }
}

impl Sampler<Pcs> for PcsSampler {
    fn object(&mut self) -> PcsObject {
        self.objects.choose(&mut self.rng).cloned().expect("sampler has objects")
    }

    fn morphism(&mut self, dom: &PcsObject, cod: &PcsObject) -> PcsMorphism {
        // Some draws are tight: the scale puts the corner on the boundary.
        let factor = if self.rng.gen_bool(0.5) { Rational::one() } else { ratio(1, 2) };
        self.random_morphism(dom, cod, factor)
    }

    fn small_morphism(&mut self, dom: &PcsObject, cod: &PcsObject) -> PcsMorphism {
        self.random_morphism(dom, cod, ratio(1, 4))
    }

    fn multilinear(&mut self, slots: &[PcsObject], cod: &PcsObject) -> PcsMorphism {
        let dom = Object::product_n(slots);
        let offsets = Object::offsets(slots);
        let sizes: Vec<usize> = slots.iter().map(Object::size).collect();
        if sizes.contains(&0) {
            return crate::carrier::zero(&dom, cod);
        }
        let polys = self.random_polys(&dom, cod, |rng| {
            sizes
                .iter()
                .zip(&offsets)
                .map(|(&s, &o)| (o + rng.gen_range(0..s)) as u32)
                .collect()
        });
        let factor = if self.rng.gen_bool(0.5) { Rational::one() } else { ratio(1, 2) };
        self.fit(&dom, cod, polys, factor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_certified_morphisms() {
        let pcs = Pcs::default();
        let mut s = PcsSampler::new(3);
        for _ in 0..40 {
            let (x, y) = (s.object(), s.object());
            let f = s.morphism(&x, &y);
            assert!(pcs.certify(&f), "{f}");
            let slots = [s.object(), s.object()];
            let g = s.multilinear(&slots, &y);
            assert!(pcs.is_multilinear(&g, &slots) || g.map().outputs().iter().all(Polynomial::is_zero));
            assert!(pcs.certify(&g));
        }
    }
}
