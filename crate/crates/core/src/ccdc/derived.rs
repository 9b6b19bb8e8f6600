//! Constructions available in any coherent differential category, built
//! only from the primitive operations of [`Ccdc`].

use alloc::format;
use alloc::vec::Vec;

use super::{Ccdc, CcdcError};

pub type Res<T> = Result<T, CcdcError>;

fn need<I: Ccdc + ?Sized>(w: Option<I::Morphism>, what: &str) -> Res<I::Morphism> {
    w.ok_or_else(|| CcdcError::NotSummable(what.into()))
}

/// Witness for a pair the theory guarantees to be summable; `bound`
/// dominates its sum.
pub fn witness<I: Ccdc + ?Sized>(
    inst: &I,
    f0: &I::Morphism,
    f1: &I::Morphism,
    bound: &I::Morphism,
    what: &str,
) -> Res<I::Morphism> {
    need::<I>(inst.pair_witness_under(f0, f1, bound)?, what)
}

pub fn sum<I: Ccdc + ?Sized>(inst: &I, f0: &I::Morphism, f1: &I::Morphism) -> Res<Option<I::Morphism>> {
    match inst.pair_witness(f0, f1)? {
        Some(h) => Ok(Some(inst.compose(&inst.sigma(&inst.codomain(f0)), &h)?)),
        None => Ok(None),
    }
}

pub fn sum_under<I: Ccdc + ?Sized>(
    inst: &I,
    f0: &I::Morphism,
    f1: &I::Morphism,
    bound: &I::Morphism,
) -> Res<Option<I::Morphism>> {
    match inst.pair_witness_under(f0, f1, bound)? {
        Some(h) => Ok(Some(inst.compose(&inst.sigma(&inst.codomain(f0)), &h)?)),
        None => Ok(None),
    }
}

/// Sum of a finite family of parallel maps, folded from the left; the empty
/// family sums to zero.
pub fn n_ary_sum<I: Ccdc + ?Sized>(
    inst: &I,
    family: &[I::Morphism],
    dom: &I::Object,
    cod: &I::Object,
    bound: Option<&I::Morphism>,
) -> Res<Option<I::Morphism>> {
    let mut iter = family.iter();
    let Some(first) = iter.next() else {
        return Ok(Some(inst.zero(dom, cod)));
    };
    let mut acc = first.clone();
    for f in iter {
        let next = match bound {
            Some(b) => sum_under(inst, &acc, f, b)?,
            None => sum(inst, &acc, f)?,
        };
        match next {
            Some(s) => acc = s,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

pub fn compose_all<I: Ccdc + ?Sized>(inst: &I, chain: &[&I::Morphism]) -> Res<I::Morphism> {
    let (last, rest) = chain.split_last().expect("empty composite");
    let mut acc = (*last).clone();
    for g in rest.iter().rev() {
        acc = inst.compose(g, &acc)?;
    }
    Ok(acc)
}

/// `partial f = pi_1 ∘ D f`.
pub fn partial_differential<I: Ccdc + ?Sized>(inst: &I, f: &I::Morphism) -> Res<I::Morphism> {
    let df = inst.d_morphism(f)?;
    inst.compose(&inst.proj_d(1, &inst.codomain(f)), &df)
}

pub fn d_iter<I: Ccdc + ?Sized>(inst: &I, f: &I::Morphism, k: u32) -> Res<I::Morphism> {
    let mut acc = f.clone();
    for _ in 0..k {
        acc = inst.d_morphism(&acc)?;
    }
    Ok(acc)
}

pub fn d_object_iter<I: Ccdc + ?Sized>(inst: &I, x: &I::Object, k: u32) -> I::Object {
    (0..k).fold(x.clone(), |acc, _| inst.d_object(&acc))
}

/// `theta^n : D^(n+1) X -> D X`, with `theta^0 = id` and
/// `theta^(k+1) = theta^k ∘ theta_(D^k X)`.
pub fn theta_iter<I: Ccdc + ?Sized>(inst: &I, n: u32, x: &I::Object) -> Res<I::Morphism> {
    let mut acc = inst.identity(&inst.d_object(x));
    for k in 0..n {
        let t = inst.theta(&d_object_iter(inst, x, k))?;
        acc = inst.compose(&acc, &t)?;
    }
    Ok(acc)
}

pub fn inj_via_witness<I: Ccdc + ?Sized>(inst: &I, i: u8, x: &I::Object) -> Res<I::Morphism> {
    let id = inst.identity(x);
    let zero = inst.zero(x, x);
    let (f0, f1) = if i == 0 { (&id, &zero) } else { (&zero, &id) };
    witness(inst, f0, f1, &id, "<id, 0>")
}

/// The four coordinates `x, u, v, w` of a point `<<x,u>,<v,w>>` of `D D X`.
fn coordinates<I: Ccdc + ?Sized>(inst: &I, x: &I::Object) -> Res<[I::Morphism; 4]> {
    let dx = inst.d_object(x);
    let outer0 = inst.proj_d(0, &dx);
    let outer1 = inst.proj_d(1, &dx);
    let inner0 = inst.proj_d(0, x);
    let inner1 = inst.proj_d(1, x);
    Ok([
        inst.compose(&inner0, &outer0)?,
        inst.compose(&inner1, &outer0)?,
        inst.compose(&inner0, &outer1)?,
        inst.compose(&inner1, &outer1)?,
    ])
}

fn sigma_sigma<I: Ccdc + ?Sized>(inst: &I, x: &I::Object) -> Res<I::Morphism> {
    inst.compose(&inst.sigma(x), &inst.sigma(&inst.d_object(x)))
}

pub fn theta_via_witness<I: Ccdc + ?Sized>(inst: &I, x: &I::Object) -> Res<I::Morphism> {
    let [xx, u, v, _] = coordinates(inst, x)?;
    let bound = sigma_sigma(inst, x)?;
    let u_plus_v = need::<I>(sum_under(inst, &u, &v, &bound)?, "u + v")?;
    witness(inst, &xx, &u_plus_v, &bound, "<x, u + v>")
}

pub fn lift_via_witness<I: Ccdc + ?Sized>(inst: &I, x: &I::Object) -> Res<I::Morphism> {
    let dx = inst.d_object(x);
    let zero = inst.zero(&dx, x);
    let sigma = inst.sigma(x);
    let first = witness(inst, &inst.proj_d(0, x), &zero, &sigma, "<pi_0, 0>")?;
    let second = witness(inst, &zero, &inst.proj_d(1, x), &sigma, "<0, pi_1>")?;
    witness(inst, &first, &second, &inst.identity(&dx), "<<pi_0,0>,<0,pi_1>>")
}

pub fn swap_via_witness<I: Ccdc + ?Sized>(inst: &I, x: &I::Object) -> Res<I::Morphism> {
    let [xx, u, v, w] = coordinates(inst, x)?;
    let bound = sigma_sigma(inst, x)?;
    let first = witness(inst, &xx, &v, &bound, "<x, v>")?;
    let second = witness(inst, &u, &w, &bound, "<u, w>")?;
    let d_sigma = inst.d_morphism(&inst.sigma(x))?;
    witness(inst, &first, &second, &d_sigma, "<<x,v>,<u,w>>")
}

/// Projection out of the left-nested product of `slots`.
pub fn nary_proj<I: Ccdc + ?Sized>(inst: &I, slots: &[I::Object], k: usize) -> Res<I::Morphism> {
    if k >= slots.len() {
        return Err(CcdcError::SlotOutOfRange { index: k, arity: slots.len() });
    }
    if slots.len() == 1 {
        return Ok(inst.identity(&slots[0]));
    }
    let (last, prefix) = slots.split_last().unwrap();
    let front = product_n(inst, prefix);
    if k == slots.len() - 1 {
        Ok(inst.prod_proj(1, &front, last))
    } else {
        let inner = nary_proj(inst, prefix, k)?;
        inst.compose(&inner, &inst.prod_proj(0, &front, last))
    }
}

pub fn product_n<I: Ccdc + ?Sized>(inst: &I, slots: &[I::Object]) -> I::Object {
    let mut iter = slots.iter();
    match iter.next() {
        None => inst.terminal(),
        Some(first) => iter.fold(first.clone(), |acc, s| inst.product(&acc, s)),
    }
}

/// Tupling into a left-nested product; the empty tuple is the map to the
/// terminal object.
pub fn nary_pair<I: Ccdc + ?Sized>(inst: &I, maps: &[I::Morphism], dom: &I::Object) -> Res<I::Morphism> {
    match maps {
        [] => Ok(inst.zero(dom, &inst.terminal())),
        [only] => Ok(only.clone()),
        _ => {
            let (last, prefix) = maps.split_last().unwrap();
            let front = nary_pair(inst, prefix, dom)?;
            inst.prod_pair(&front, last)
        }
    }
}

/// `f_0 & ... & f_n`.
pub fn nary_with<I: Ccdc + ?Sized>(inst: &I, maps: &[I::Morphism]) -> Res<I::Morphism> {
    let doms: Vec<I::Object> = maps.iter().map(|f| inst.domain(f)).collect();
    let dom = product_n(inst, &doms);
    let mut parts = Vec::with_capacity(maps.len());
    for (k, f) in maps.iter().enumerate() {
        parts.push(inst.compose(f, &nary_proj(inst, &doms, k)?)?);
    }
    nary_pair(inst, &parts, &dom)
}

/// `id & ... & g & ... & id` with `g` in slot `i`.
pub fn single_app<I: Ccdc + ?Sized>(
    inst: &I,
    slots: &[I::Object],
    i: usize,
    g: &I::Morphism,
) -> Res<I::Morphism> {
    let maps: Vec<I::Morphism> = slots
        .iter()
        .enumerate()
        .map(|(k, s)| if k == i { g.clone() } else { inst.identity(s) })
        .collect();
    nary_with(inst, &maps)
}

/// `0 & ... & g & ... & 0`, the maps being endomorphisms apart from `g`.
fn single_app_zero<I: Ccdc + ?Sized>(
    inst: &I,
    slots: &[I::Object],
    i: usize,
    g: &I::Morphism,
) -> Res<I::Morphism> {
    let maps: Vec<I::Morphism> = slots
        .iter()
        .enumerate()
        .map(|(k, s)| if k == i { g.clone() } else { inst.zero(s, s) })
        .collect();
    nary_with(inst, &maps)
}

/// Slots with slot `i` replaced by `D` of it.
pub fn d_slot<I: Ccdc + ?Sized>(inst: &I, slots: &[I::Object], i: usize) -> Vec<I::Object> {
    let mut out = slots.to_vec();
    out[i] = inst.d_object(&slots[i]);
    out
}

/// The strength `phi_i : X_0 & .. & D X_i & .. & X_n -> D (X_0 & .. & X_n)`.
pub fn strength<I: Ccdc + ?Sized>(inst: &I, slots: &[I::Object], i: usize) -> Res<I::Morphism> {
    if i >= slots.len() {
        return Err(CcdcError::SlotOutOfRange { index: i, arity: slots.len() });
    }
    let x = &slots[i];
    let base = single_app(inst, slots, i, &inst.proj_d(0, x))?;
    let tangent = single_app_zero(inst, slots, i, &inst.proj_d(1, x))?;
    let bound = single_app(inst, slots, i, &inst.sigma(x))?;
    witness(inst, &base, &tangent, &bound, "strength")
}

pub fn partial_derivative_via_strength<I: Ccdc + ?Sized>(
    inst: &I,
    f: &I::Morphism,
    slots: &[I::Object],
    i: usize,
) -> Res<I::Morphism> {
    let phi = strength(inst, slots, i)?;
    if inst.codomain(&phi) != inst.d_object(&inst.domain(f)) {
        return Err(CcdcError::SlotMismatch(format!("{}", inst.domain(f))));
    }
    inst.compose(&inst.d_morphism(f)?, &phi)
}

/// Iterated partial derivative: `letters[0]` is applied first.
pub fn partial_word<I: Ccdc + ?Sized>(
    inst: &I,
    f: &I::Morphism,
    slots: &[I::Object],
    letters: &[usize],
) -> Res<(I::Morphism, Vec<I::Object>)> {
    let mut acc = f.clone();
    let mut slots = slots.to_vec();
    for &i in letters {
        acc = inst.partial_derivative(&acc, &slots, i)?;
        slots = d_slot(inst, &slots, i);
    }
    Ok((acc, slots))
}

/// `<D pr_0, D pr_1> : D (X0 & X1) -> D X0 & D X1`.
pub fn c_with<I: Ccdc + ?Sized>(inst: &I, x0: &I::Object, x1: &I::Object) -> Res<I::Morphism> {
    let p0 = inst.d_morphism(&inst.prod_proj(0, x0, x1))?;
    let p1 = inst.d_morphism(&inst.prod_proj(1, x0, x1))?;
    inst.prod_pair(&p0, &p1)
}

/// `<pi_0 & pi_0, pi_1 & pi_1> : D X0 & D X1 -> D (X0 & X1)`.
pub fn c_with_inv<I: Ccdc + ?Sized>(inst: &I, x0: &I::Object, x1: &I::Object) -> Res<I::Morphism> {
    let with = |i: u8| nary_with(inst, &[inst.proj_d(i, x0), inst.proj_d(i, x1)]);
    let bound = nary_with(inst, &[inst.sigma(x0), inst.sigma(x1)])?;
    witness(inst, &with(0)?, &with(1)?, &bound, "<pi_0 & pi_0, pi_1 & pi_1>")
}

/// `h ∘ 0 = 0`, and `h ∘ pi_0`, `h ∘ pi_1` summable with sum `h ∘ sigma`.
pub fn is_additive<I: Ccdc + ?Sized>(inst: &I, h: &I::Morphism) -> Res<bool> {
    let x = inst.domain(h);
    let y = inst.codomain(h);
    if inst.compose(h, &inst.zero(&x, &x))? != inst.zero(&x, &y) {
        return Ok(false);
    }
    let h0 = inst.compose(h, &inst.proj_d(0, &x))?;
    let h1 = inst.compose(h, &inst.proj_d(1, &x))?;
    let hs = inst.compose(h, &inst.sigma(&x))?;
    match sum_under(inst, &h0, &h1, &hs)? {
        Some(s) => Ok(s == hs),
        None => Ok(false),
    }
}

/// Additive with `partial h = h ∘ pi_1`.
pub fn is_d_linear<I: Ccdc + ?Sized>(inst: &I, h: &I::Morphism) -> Res<bool> {
    if !is_additive(inst, h)? {
        return Ok(false);
    }
    let x = inst.domain(h);
    Ok(partial_differential(inst, h)? == inst.compose(h, &inst.proj_d(1, &x))?)
}

/// Linear in every slot, by `pi_1 ∘ D_i f = f ∘ (id & .. & pi_1 & .. & id)`.
pub fn is_multilinear_by_derivative<I: Ccdc + ?Sized>(
    inst: &I,
    f: &I::Morphism,
    slots: &[I::Object],
) -> Res<bool> {
    let y = inst.codomain(f);
    for i in 0..slots.len() {
        let di = inst.partial_derivative(f, slots, i)?;
        let lhs = inst.compose(&inst.proj_d(1, &y), &di)?;
        let rhs = inst.compose(f, &single_app(inst, slots, i, &inst.proj_d(1, &slots[i]))?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
