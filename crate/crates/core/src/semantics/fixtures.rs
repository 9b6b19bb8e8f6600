//! A small standard signature over one ground type `n`, interpreted as
//! sub-probability distributions on `{0, 1, 2}` in the PCS model and as
//! `R^3` in the polynomial model:
//!
//! * `succ : (n) -> n` shifts mass down by one, dropping it at the bottom;
//! * `ifz : (n, n & n) -> n` picks the left branch with the weight of `0`
//!   and the right one with the rest;
//! * `m3 : (n, n, n) -> n` adds its three arguments modulo 3.

use alloc::vec;
use alloc::vec::Vec;

use crate::carrier::Morphism;
use crate::ccdc::Ccdc;
use crate::object::{Base, Object};
use crate::pcs::{nat, Pcs};
use crate::poly::{Monomial, PolyMap, Polynomial};
use crate::polycdc::PolyCdc;
use crate::rational::int;
use crate::syntax::{FunctionType, Signature, Type};

use super::Model;

pub const GROUND: &str = "n";
const WIDTH: usize = 3;

pub fn standard_signature() -> Signature {
    let n = || Type::ground(GROUND);
    let mut sig = Signature::new();
    sig.declare("succ", FunctionType { args: vec![n()], result: n() });
    sig.declare("ifz", FunctionType { args: vec![n(), Type::product(n(), n())], result: n() });
    sig.declare("m3", FunctionType { args: vec![n(), n(), n()], result: n() });
    sig
}

fn monomial(vars: &[usize]) -> Polynomial {
    Polynomial::monomial(Monomial::from_vars(vars.iter().map(|&v| v as u32).collect()), int(1))
}

fn standard_maps() -> Vec<(&'static str, PolyMap)> {
    let w = WIDTH;
    let succ = (0..w).map(|b| if b + 1 < w { monomial(&[b + 1]) } else { Polynomial::zero() }).collect();
    let ifz = (0..w)
        .map(|b| {
            let mut p = monomial(&[0, w + b]);
            for u in 1..w {
                p = p.add(&monomial(&[u, 2 * w + b]));
            }
            p
        })
        .collect();
    let mut m3 = vec![Polynomial::zero(); w];
    for a in 0..w {
        for b in 0..w {
            for c in 0..w {
                m3[(a + b + c) % w].add_term(Monomial::from_vars(vec![a as u32, (w + b) as u32, (2 * w + c) as u32]), int(1));
            }
        }
    }
    vec![
        ("succ", PolyMap::new(w, succ)),
        ("ifz", PolyMap::new(3 * w, ifz)),
        ("m3", PolyMap::new(3 * w, m3)),
    ]
}

fn build<B, I>(inst: I, n: Object<B>) -> Model<I>
where
    B: Base,
    I: Ccdc<Object = Object<B>, Morphism = Morphism<B>>,
{
    let mut model = Model::new(inst, standard_signature());
    model.assign_ground(GROUND, n);
    for (name, map) in standard_maps() {
        let ty = model.signature().get(name).unwrap().clone();
        let slots: Vec<Object<B>> = ty.args.iter().map(|a| model.interp_type(a).unwrap()).collect();
        let dom = Object::product_n(&slots);
        let cod = model.interp_type(&ty.result).unwrap();
        model.assign_symbol(name, Morphism::new(dom, cod, map)).expect("standard symbols are multilinear");
    }
    model
}

pub fn pcs_model() -> Model<Pcs> {
    let model = build(Pcs::default(), nat(WIDTH - 1));
    for (name, _) in standard_maps() {
        debug_assert!(model.inst.certify(model.symbol(name).unwrap()));
    }
    model
}

pub fn poly_model() -> Model<PolyCdc> {
    build(PolyCdc::default(), PolyCdc::real(WIDTH))
}
