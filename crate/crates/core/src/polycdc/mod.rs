//! Polynomial maps between real vector spaces, as a cartesian differential
//! category and, through `D X = X & X`, as a coherent one.
//!
//! The flat functions here work on plain [`PolyMap`]s `R^n -> R^m`, with
//! `X & Y` laid out as the concatenation of coordinates and the derivative
//! combinator `d f : X & X -> Y` taking the point first and the direction
//! second.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ccdc::laws::{Counterexample, LawOutcome, LawReport};
use crate::poly::{DegreeExceeded, Monomial, PolyMap, Polynomial};
use crate::rational::int;

mod category;

pub use category::{PolyCdc, PolyObject, PolyMorphism, PolySampler, RealSpace};

const CAP: usize = 64;

/// `d f (x, u) = sum_a (df/dx_a)(x) u_a`, as a map `2n -> m`.
pub fn d_combinator(f: &PolyMap) -> PolyMap {
    let n = f.inputs() as u32;
    let outputs = f
        .outputs()
        .iter()
        .map(|p| {
            let mut out = Polynomial::zero();
            for (m, c) in p.terms() {
                for (v, k) in m.powers() {
                    out.add_term(m.without(v).unwrap().mul(&Monomial::var(n + v)), c * int(k as i64));
                }
            }
            out
        })
        .collect();
    PolyMap::new(2 * f.inputs(), outputs)
}

/// Projection `R^(n0 + n1) -> R^(n_i)`.
pub fn pr(i: u8, n0: usize, n1: usize) -> PolyMap {
    let source: Vec<usize> = if i == 0 { (0..n0).collect() } else { (n0..n0 + n1).collect() };
    PolyMap::selection(n0 + n1, &source)
}

/// `<f, g>` for maps with a common domain.
pub fn pair(f: &PolyMap, g: &PolyMap) -> PolyMap {
    f.concat(g)
}

fn compose(g: &PolyMap, f: &PolyMap) -> Result<PolyMap, DegreeExceeded> {
    g.compose(f, CAP)
}

/// A random polynomial map with small integer coefficients, constants
/// included.
pub fn random_map(rng: &mut ChaCha8Rng, inputs: usize, outputs: usize, max_degree: usize) -> PolyMap {
    let polys = (0..outputs)
        .map(|_| {
            let mut p = Polynomial::zero();
            for _ in 0..rng.gen_range(0..=3) {
                let degree = if inputs == 0 { 0 } else { rng.gen_range(0..=max_degree) };
                let vars: Vec<u32> = (0..degree).map(|_| rng.gen_range(0..inputs as u32)).collect();
                let c = rng.gen_range(-3..=3);
                p.add_term(Monomial::from_vars(vars), int(c));
            }
            p
        })
        .collect();
    PolyMap::new(inputs, polys)
}

fn outcome(name: &str, cases: usize, failure: Option<Counterexample>) -> LawOutcome {
    LawOutcome { name: name.to_string(), cases, counterexample: failure }
}

fn mismatch(what: &str, lhs: &PolyMap, rhs: &PolyMap, inputs: &[&PolyMap]) -> Counterexample {
    let mut dumps = vec![format!("lhs = {lhs}"), format!("rhs = {rhs}")];
    dumps.extend(inputs.iter().enumerate().map(|(k, m)| format!("input {k} = {m}")));
    Counterexample { note: what.to_string(), dumps }
}

/// The six axioms of a cartesian differential category, checked as
/// polynomial identities on `cases` random maps each.
pub fn check_cdc_axioms(cases: usize, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::default();
    type Check = fn(&mut ChaCha8Rng) -> Result<Option<Counterexample>, DegreeExceeded>;
    let checks: [(&str, Check); 6] = [
        ("CDC-1", cdc1),
        ("CDC-2", cdc2),
        ("CDC-3", cdc3),
        ("CDC-4", cdc4),
        ("CDC-5", cdc5),
        ("CDC-6", cdc6),
    ];
    for (name, check) in checks {
        let mut failure = None;
        let mut done = 0;
        for _ in 0..cases {
            done += 1;
            match check(&mut rng) {
                Ok(None) => {}
                Ok(Some(c)) => {
                    failure = Some(c);
                    break;
                }
                Err(e) => {
                    failure = Some(Counterexample { note: e.to_string(), dumps: Vec::new() });
                    break;
                }
            }
        }
        report.outcomes.push(outcome(name, done, failure));
    }
    report
}

fn dims(rng: &mut ChaCha8Rng) -> (usize, usize, usize) {
    (rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3))
}

fn same(what: &str, lhs: PolyMap, rhs: PolyMap, inputs: &[&PolyMap]) -> Option<Counterexample> {
    (lhs != rhs).then(|| mismatch(what, &lhs, &rhs, inputs))
}

fn cdc1(rng: &mut ChaCha8Rng) -> Result<Option<Counterexample>, DegreeExceeded> {
    let (n0, n1, _) = dims(rng);
    let i = rng.gen_range(0..2u8);
    let p = pr(i, n0, n1);
    let rhs = compose(&p, &pr(1, n0 + n1, n0 + n1))?;
    Ok(same("d pr_i = pr_i pr_1", d_combinator(&p), rhs, &[]))
}

fn cdc2(rng: &mut ChaCha8Rng) -> Result<Option<Counterexample>, DegreeExceeded> {
    let (n, m, _) = dims(rng);
    if let Some(c) = same("d 0 = 0", d_combinator(&PolyMap::zero(n, m)), PolyMap::zero(2 * n, m), &[]) {
        return Ok(Some(c));
    }
    let f = random_map(rng, n, m, 3);
    let g = random_map(rng, n, m, 3);
    Ok(same("d (f + g) = d f + d g", d_combinator(&f.add(&g)), d_combinator(&f).add(&d_combinator(&g)), &[&f, &g]))
}

fn cdc3(rng: &mut ChaCha8Rng) -> Result<Option<Counterexample>, DegreeExceeded> {
    let (n, m, k) = dims(rng);
    if let Some(c) = same("d id = pr_1", d_combinator(&PolyMap::identity(n)), pr(1, n, n), &[]) {
        return Ok(Some(c));
    }
    let f = random_map(rng, n, m, 3);
    let g = random_map(rng, m, k, 3);
    let lhs = d_combinator(&compose(&g, &f)?);
    let inner = pair(&compose(&f, &pr(0, n, n))?, &d_combinator(&f));
    let rhs = compose(&d_combinator(&g), &inner)?;
    Ok(same("d (g f) = d g <f pr_0, d f>", lhs, rhs, &[&f, &g]))
}

fn cdc4(rng: &mut ChaCha8Rng) -> Result<Option<Counterexample>, DegreeExceeded> {
    let (n, m, z) = dims(rng);
    let f = random_map(rng, n, m, 3);
    let df = d_combinator(&f);
    let x = random_map(rng, z, n, 2);
    let u = random_map(rng, z, n, 2);
    let v = random_map(rng, z, n, 2);
    let zero = PolyMap::zero(z, n);
    if let Some(c) = same("d f <x, 0> = 0", compose(&df, &pair(&x, &zero))?, PolyMap::zero(z, m), &[&f, &x]) {
        return Ok(Some(c));
    }
    let lhs = compose(&df, &pair(&x, &u.add(&v)))?;
    let rhs = compose(&df, &pair(&x, &u))?.add(&compose(&df, &pair(&x, &v))?);
    Ok(same("d f <x, u + v> = d f <x, u> + d f <x, v>", lhs, rhs, &[&f, &x, &u, &v]))
}

fn cdc5(rng: &mut ChaCha8Rng) -> Result<Option<Counterexample>, DegreeExceeded> {
    let (n, m, z) = dims(rng);
    let f = random_map(rng, n, m, 3);
    let ddf = d_combinator(&d_combinator(&f));
    let x = random_map(rng, z, n, 2);
    let u = random_map(rng, z, n, 2);
    let zero = PolyMap::zero(z, n);
    let arg = pair(&pair(&x, &zero), &pair(&zero, &u));
    let lhs = compose(&ddf, &arg)?;
    let rhs = compose(&d_combinator(&f), &pair(&x, &u))?;
    Ok(same("dd f <<x, 0>, <0, u>> = d f <x, u>", lhs, rhs, &[&f, &x, &u]))
}

fn cdc6(rng: &mut ChaCha8Rng) -> Result<Option<Counterexample>, DegreeExceeded> {
    let (n, m, z) = dims(rng);
    let f = random_map(rng, n, m, 3);
    let ddf = d_combinator(&d_combinator(&f));
    let [x, u, v, w] = [0, 1, 2, 3].map(|_| random_map(rng, z, n, 2));
    let lhs = compose(&ddf, &pair(&pair(&x, &u), &pair(&v, &w)))?;
    let rhs = compose(&ddf, &pair(&pair(&x, &v), &pair(&u, &w)))?;
    Ok(same("dd f <<x, u>, <v, w>> = dd f <<x, v>, <u, w>>", lhs, rhs, &[&f, &x, &u, &v, &w]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn derivative_of_a_cubic() {
        // f(a, b) = a^2 b - 2 b  =>  d f = 2ab da + a^2 db - 2 db.
        let a = Polynomial::var(0);
        let b = Polynomial::var(1);
        let f = PolyMap::new(2, vec![a.mul(&a).mul(&b).sub(&b.scale(&int(2)))]);
        let df = d_combinator(&f);
        let point = [int(3), ratio(1, 2), int(1), int(-1)];
        // 2*3*(1/2)*1 + 9*(-1) - 2*(-1) = 3 - 9 + 2
        assert_eq!(df.eval(&point), vec![int(-4)]);
    }

    #[test]
    fn axioms_hold() {
        let report = check_cdc_axioms(20, 11);
        assert!(report.passed(), "{report}");
    }
}
