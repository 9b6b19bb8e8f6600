//! Polynomial maps between object trees, and the structural maps of a
//! coherent differential category written directly as matrices.
//!
//! Both concrete models use these as their morphisms; they differ only in
//! which objects exist and in when two maps count as summable.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ccdc::CcdcError;
use crate::object::{Base, Object};
use crate::poly::{Monomial, PolyMap, Polynomial};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Morphism<B> {
    dom: Object<B>,
    cod: Object<B>,
    map: PolyMap,
}

impl<B: Base> Morphism<B> {
    /// Panics when the map does not fit the objects.
    pub fn new(dom: Object<B>, cod: Object<B>, map: PolyMap) -> Self {
        assert_eq!(map.inputs(), dom.size(), "map inputs do not match the domain {dom}");
        assert_eq!(map.output_count(), cod.size(), "map outputs do not match the codomain {cod}");
        Morphism { dom, cod, map }
    }

    pub fn dom(&self) -> &Object<B> {
        &self.dom
    }

    pub fn cod(&self) -> &Object<B> {
        &self.cod
    }

    pub fn map(&self) -> &PolyMap {
        &self.map
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        self.dom == other.dom && self.cod == other.cod
    }
}

impl<B: Base> fmt::Display for Morphism<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} : {}", self.dom, self.cod, self.map)
    }
}

fn var(v: usize) -> Polynomial {
    Polynomial::var(v as u32)
}

pub fn identity<B: Base>(x: &Object<B>) -> Morphism<B> {
    Morphism::new(x.clone(), x.clone(), PolyMap::identity(x.size()))
}

pub fn zero<B: Base>(x: &Object<B>, y: &Object<B>) -> Morphism<B> {
    Morphism::new(x.clone(), y.clone(), PolyMap::zero(x.size(), y.size()))
}

pub fn compose<B: Base>(g: &Morphism<B>, f: &Morphism<B>, cap: usize) -> Result<Morphism<B>, CcdcError> {
    if g.dom != f.cod {
        return Err(CcdcError::NotComposable { left: g.dom.to_string(), right: f.cod.to_string() });
    }
    let map = g.map.compose(&f.map, cap)?;
    Ok(Morphism::new(f.dom.clone(), g.cod.clone(), map))
}

pub fn check_parallel<B: Base>(f0: &Morphism<B>, f1: &Morphism<B>) -> Result<(), CcdcError> {
    if f0.is_parallel(f1) {
        Ok(())
    } else {
        Err(CcdcError::NotParallel(alloc::format!(
            "{} -> {} versus {} -> {}",
            f0.dom, f0.cod, f1.dom, f1.cod
        )))
    }
}

/// Places the outputs of `outs[tag]` at `d_atom(tag, b)` of `D cod`.
fn interleave<B: Base>(cod: &Object<B>, outs: [Vec<Polynomial>; 2], inputs: usize) -> PolyMap {
    let [t0, t1] = cod.d_table();
    let mut polys = vec![Polynomial::zero(); 2 * cod.size()];
    for (tag, out) in outs.into_iter().enumerate() {
        let table = if tag == 0 { &t0 } else { &t1 };
        for (b, p) in out.into_iter().enumerate() {
            polys[table[b]] = p;
        }
    }
    PolyMap::new(inputs, polys)
}

/// The map whose two components are `f0` and `f1`, with no summability check.
pub fn pairing<B: Base>(f0: &Morphism<B>, f1: &Morphism<B>) -> Result<Morphism<B>, CcdcError> {
    check_parallel(f0, f1)?;
    let map = interleave(
        &f0.cod,
        [f0.map.outputs().to_vec(), f1.map.outputs().to_vec()],
        f0.dom.size(),
    );
    Ok(Morphism::new(f0.dom.clone(), f0.cod.d(), map))
}

pub fn pointwise_sum<B: Base>(f0: &Morphism<B>, f1: &Morphism<B>) -> Result<Morphism<B>, CcdcError> {
    check_parallel(f0, f1)?;
    Ok(Morphism::new(f0.dom.clone(), f0.cod.clone(), f0.map.add(&f1.map)))
}

pub fn proj_d<B: Base>(i: u8, x: &Object<B>) -> Morphism<B> {
    let source: Vec<usize> = (0..x.size()).map(|a| x.d_atom(i, a)).collect();
    Morphism::new(x.d(), x.clone(), PolyMap::selection(2 * x.size(), &source))
}

pub fn sigma<B: Base>(x: &Object<B>) -> Morphism<B> {
    let map = PolyMap::new(
        2 * x.size(),
        (0..x.size()).map(|a| var(x.d_atom(0, a)).add(&var(x.d_atom(1, a)))).collect(),
    );
    Morphism::new(x.d(), x.clone(), map)
}

pub fn inj<B: Base>(i: u8, x: &Object<B>) -> Morphism<B> {
    let n = x.size();
    let mut outs = [vec![Polynomial::zero(); n], vec![Polynomial::zero(); n]];
    outs[i as usize] = (0..n).map(var).collect();
    Morphism::new(x.clone(), x.d(), interleave(x, outs, n))
}

/// Index in `D D x` of atom `a` under inner tag `inner` and outer tag `outer`.
fn dd_atom<B: Base>(x: &Object<B>, dx: &Object<B>, outer: u8, inner: u8, a: usize) -> usize {
    dx.d_atom(outer, x.d_atom(inner, a))
}

/// `<<x,u>,<v,w>>  |->  <x, u + v>`.
pub fn theta<B: Base>(x: &Object<B>) -> Morphism<B> {
    let dx = x.d();
    let n = x.size();
    let mut polys = vec![Polynomial::zero(); 2 * n];
    for a in 0..n {
        polys[x.d_atom(0, a)] = var(dd_atom(x, &dx, 0, 0, a));
        polys[x.d_atom(1, a)] = var(dd_atom(x, &dx, 0, 1, a)).add(&var(dd_atom(x, &dx, 1, 0, a)));
    }
    Morphism::new(dx.d(), dx, PolyMap::new(4 * n, polys))
}

/// `<x,u>  |->  <<x,0>,<0,u>>`.
pub fn lift<B: Base>(x: &Object<B>) -> Morphism<B> {
    let dx = x.d();
    let n = x.size();
    let mut polys = vec![Polynomial::zero(); 4 * n];
    for a in 0..n {
        polys[dd_atom(x, &dx, 0, 0, a)] = var(x.d_atom(0, a));
        polys[dd_atom(x, &dx, 1, 1, a)] = var(x.d_atom(1, a));
    }
    Morphism::new(dx.clone(), dx.d(), PolyMap::new(2 * n, polys))
}

/// `<<x,u>,<v,w>>  |->  <<x,v>,<u,w>>`.
pub fn swap<B: Base>(x: &Object<B>) -> Morphism<B> {
    let dx = x.d();
    let n = x.size();
    let mut source = vec![0; 4 * n];
    for a in 0..n {
        for outer in 0..2 {
            for inner in 0..2 {
                source[dd_atom(x, &dx, outer, inner, a)] = dd_atom(x, &dx, inner, outer, a);
            }
        }
    }
    Morphism::new(dx.d(), dx.d(), PolyMap::selection(4 * n, &source))
}

/// Formal derivative: `D f <x,u> = <f x, sum_a (df/dx_a)(x) u_a>`.
pub fn derivative<B: Base>(f: &Morphism<B>) -> Morphism<B> {
    let [x_of, u_of] = f.dom.d_table();
    let inputs = 2 * f.dom.size();
    let base: Vec<Polynomial> = f.map.outputs().iter().map(|p| p.rename(|v| x_of[v as usize] as u32)).collect();
    let tangent: Vec<Polynomial> = f
        .map
        .outputs()
        .iter()
        .map(|p| directional(p, |v| Some((x_of[v as usize] as u32, u_of[v as usize] as u32))))
        .collect();
    Morphism::new(f.dom.d(), f.cod.d(), interleave(&f.cod, [base, tangent], inputs))
}

/// `sum_v (dp/dx_v) * u_v` where `route(v) = Some((x_v, u_v))` renames the
/// variable and names its direction; variables routed to `None` are held
/// constant but still renamed through `route`'s first component.
fn directional(p: &Polynomial, route: impl Fn(u32) -> Option<(u32, u32)>) -> Polynomial {
    let mut out = Polynomial::zero();
    let rename = |v: u32| route(v).map_or(v, |(x, _)| x);
    for (m, c) in p.terms() {
        for (v, k) in m.powers() {
            let Some((_, u)) = route(v) else { continue };
            let rest = m.without(v).unwrap().rename(rename);
            out.add_term(rest.mul(&Monomial::var(u)), c * crate::rational::int(k as i64));
        }
    }
    out
}

pub fn terminal_map<B: Base>(x: &Object<B>) -> Morphism<B> {
    zero(x, &Object::Top)
}

pub fn prod_proj<B: Base>(i: u8, x0: &Object<B>, x1: &Object<B>) -> Morphism<B> {
    let (n0, n1) = (x0.size(), x1.size());
    let (offset, len, cod) = if i == 0 { (0, n0, x0) } else { (n0, n1, x1) };
    let source: Vec<usize> = (offset..offset + len).collect();
    Morphism::new(Object::with(x0.clone(), x1.clone()), cod.clone(), PolyMap::selection(n0 + n1, &source))
}

pub fn prod_pair<B: Base>(f0: &Morphism<B>, f1: &Morphism<B>) -> Result<Morphism<B>, CcdcError> {
    if f0.dom != f1.dom {
        return Err(CcdcError::NotParallel(alloc::format!("pairing maps out of {} and {}", f0.dom, f1.dom)));
    }
    Ok(Morphism::new(f0.dom.clone(), Object::with(f0.cod.clone(), f1.cod.clone()), f0.map.concat(&f1.map)))
}

pub fn check_slots<B: Base>(f: &Morphism<B>, slots: &[Object<B>], index: usize) -> Result<(), CcdcError> {
    if index >= slots.len() {
        return Err(CcdcError::SlotOutOfRange { index, arity: slots.len() });
    }
    if Object::product_n(slots) != f.dom {
        return Err(CcdcError::SlotMismatch(f.dom.to_string()));
    }
    Ok(())
}

/// Partial derivative in slot `i` of a map out of `product_n(slots)`.
pub fn partial_derivative<B: Base>(f: &Morphism<B>, slots: &[Object<B>], i: usize) -> Result<Morphism<B>, CcdcError> {
    check_slots(f, slots, i)?;
    let offsets = Object::offsets(slots);
    let mut new_slots = slots.to_vec();
    new_slots[i] = slots[i].d();
    let new_offsets = Object::offsets(&new_slots);
    let [x_of, u_of] = slots[i].d_table();
    let (lo, hi) = (offsets[i], offsets[i + 1]);
    // Where each old variable lives in the new domain; slot i gets its tag-0 copy.
    let relocate = |v: u32| -> u32 {
        let v = v as usize;
        let k = offsets.partition_point(|&o| o <= v) - 1;
        if k == i {
            (new_offsets[i] + x_of[v - lo]) as u32
        } else {
            (new_offsets[k] + v - offsets[k]) as u32
        }
    };
    let route = |v: u32| -> Option<(u32, u32)> {
        let w = v as usize;
        if (lo..hi).contains(&w) {
            Some((relocate(v), (new_offsets[i] + u_of[w - lo]) as u32))
        } else {
            None
        }
    };
    let base: Vec<Polynomial> = f.map.outputs().iter().map(|p| p.rename(relocate)).collect();
    let tangent: Vec<Polynomial> = f
        .map
        .outputs()
        .iter()
        .map(|p| {
            let mut out = Polynomial::zero();
            for (m, c) in p.terms() {
                for (v, k) in m.powers() {
                    let Some((_, u)) = route(v) else { continue };
                    let rest = m.without(v).unwrap().rename(relocate);
                    out.add_term(rest.mul(&Monomial::var(u)), c * crate::rational::int(k as i64));
                }
            }
            out
        })
        .collect();
    let dom = Object::product_n(&new_slots);
    let inputs = dom.size();
    Ok(Morphism::new(dom, f.cod.d(), interleave(&f.cod, [base, tangent], inputs)))
}

/// Scales every coefficient.
pub fn scale<B: Base>(f: &Morphism<B>, c: &Rational) -> Morphism<B> {
    Morphism::new(f.dom.clone(), f.cod.clone(), f.map.scale(c))
}

pub fn is_identity_map<B: Base>(f: &Morphism<B>) -> bool {
    f.dom == f.cod && f.map == PolyMap::identity(f.dom.size())
}

/// Degree of the map in the variables of each slot, for every monomial:
/// true when each monomial has exactly one variable in every slot.
pub fn is_multilinear_support<B: Base>(f: &Morphism<B>, slots: &[Object<B>]) -> bool {
    if Object::product_n(slots) != f.dom {
        return false;
    }
    let offsets = Object::offsets(slots);
    f.map.outputs().iter().all(|p| {
        p.terms().all(|(m, _)| {
            let mut hits = vec![0usize; slots.len()];
            for &v in m.vars() {
                let k = offsets.partition_point(|&o| o <= v as usize) - 1;
                hits[k] += 1;
            }
            hits.iter().all(|&h| h == 1)
        })
    })
}

pub fn is_linear_support<B: Base>(f: &Morphism<B>) -> bool {
    f.map.outputs().iter().all(|p| p.terms().all(|(m, _)| m.degree() == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use alloc::string::String;

    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
    struct Dim(usize);

    impl Base for Dim {
        fn size(&self) -> usize {
            self.0
        }
        fn name(&self) -> &str {
            "R"
        }
        fn atom_label(&self, atom: usize) -> String {
            alloc::format!("e{atom}")
        }
        fn atom_index(&self, label: &str) -> Option<usize> {
            label.strip_prefix('e')?.parse().ok()
        }
    }

    fn r(n: usize) -> Object<Dim> {
        Object::leaf(Dim(n))
    }

    fn square() -> Morphism<Dim> {
        // (a, b) |-> (a^2 b, 3 a)
        let a = Polynomial::var(0);
        let b = Polynomial::var(1);
        Morphism::new(r(2), r(2), PolyMap::new(2, vec![a.mul(&a).mul(&b), a.scale(&int(3))]))
    }

    #[test]
    fn structural_maps_on_points() {
        let x = r(1);
        // Point <<x,u>,<v,w>> = <<2,3>,<5,7>> laid out in D D x.
        let dx = x.d();
        let mut point = vec![int(0); 4];
        for (outer, inner, value) in [(0, 0, 2), (0, 1, 3), (1, 0, 5), (1, 1, 7)] {
            point[dx.d_atom(outer, x.d_atom(inner, 0))] = int(value);
        }
        let t = theta(&x).map().eval(&point);
        assert_eq!((t[x.d_atom(0, 0)].clone(), t[x.d_atom(1, 0)].clone()), (int(2), int(8)));
        let c = swap(&x).map().eval(&point);
        assert_eq!(c[dx.d_atom(0, x.d_atom(1, 0))], int(5));
        assert_eq!(compose(&swap(&x), &swap(&x), 16).unwrap(), identity(&dx.d()));
        let l = compose(&lift(&x), &inj(1, &x), 16).unwrap();
        assert_eq!(compose(&proj_d(1, &dx), &l, 16).unwrap(), inj(1, &x));
    }

    #[test]
    fn derivative_is_directional() {
        let f = square();
        let df = derivative(&f);
        let x = r(2);
        let mut point = vec![int(0); 4];
        for (a, (xv, uv)) in [(ratio(1, 2), int(1)), (int(2), int(3))].into_iter().enumerate() {
            point[x.d_atom(0, a)] = xv;
            point[x.d_atom(1, a)] = uv;
        }
        let out = df.map().eval(&point);
        // d(a^2 b) = 2ab da + a^2 db = 2 + 3/4; d(3a) = 3.
        assert_eq!(out[x.d_atom(1, 0)], ratio(11, 4));
        assert_eq!(out[x.d_atom(1, 1)], int(3));
        assert_eq!(out[x.d_atom(0, 1)], ratio(3, 2));
    }

    #[test]
    fn partial_of_single_slot_is_derivative() {
        let f = square();
        assert_eq!(partial_derivative(&f, &[r(2)], 0).unwrap(), derivative(&f));
        let g = Morphism::new(
            Object::with(r(1), r(1)),
            r(1),
            PolyMap::new(2, vec![Polynomial::var(0).mul(&Polynomial::var(1))]),
        );
        assert!(is_multilinear_support(&g, &[r(1), r(1)]));
        let d1 = partial_derivative(&g, &[r(1), r(1)], 1).unwrap();
        assert!(is_multilinear_support(&d1, &[r(1), r(1).d()]));
        assert_eq!(d1.dom(), &Object::with(r(1), r(1).d()));
    }
}
