use cohdiff_core::ccdc::derived as dv;
use cohdiff_core::ccdc::{Ccdc, Sampler};
use cohdiff_core::poly::{Monomial, PolyMap, Polynomial};
use cohdiff_core::polycdc::{check_cdc_axioms, d_combinator, pr, random_map, PolyCdc, PolySampler};
use cohdiff_core::rational::int;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn x(v: u32) -> Polynomial {
    Polynomial::var(v)
}

#[test]
fn combinator_examples() {
    let p = pr(0, 2, 1);
    assert_eq!(d_combinator(&p), p.compose(&pr(1, 3, 3), 16).unwrap());
    let sq = PolyMap::new(1, vec![x(0).mul(&x(0))]);
    assert_eq!(d_combinator(&sq), PolyMap::new(2, vec![x(0).mul(&x(1)).scale(&int(2))]));
    let c = PolyMap::new(2, vec![Polynomial::constant(int(7))]);
    assert_eq!(d_combinator(&c), PolyMap::zero(4, 1));
}

#[test]
fn six_axioms() {
    let report = check_cdc_axioms(100, 3);
    assert!(report.passed(), "{report}");
}

#[test]
fn summability_is_total() {
    let poly = PolyCdc::default();
    let mut s = PolySampler::new(9);
    for _ in 0..100 {
        let (a, b) = (s.object(), s.object());
        let f = s.morphism(&a, &b);
        let g = s.morphism(&a, &b);
        let sum = dv::sum(&poly, &f, &g).unwrap().expect("every pair is summable");
        assert_eq!(sum.map(), &f.map().add(g.map()));
    }
    let r2 = PolyCdc::real(2);
    let sigma = poly.sigma(&r2);
    let sum = dv::sum(&poly, &poly.proj_d(0, &r2), &poly.proj_d(1, &r2)).unwrap().unwrap();
    assert_eq!(sum, sigma);
}

#[test]
fn additive_and_linear_are_not_vacuous() {
    let poly = PolyCdc::default();
    let r1 = PolyCdc::real(1);
    let m = |p: Polynomial| poly.morphism(r1.clone(), r1.clone(), PolyMap::new(1, vec![p]));
    let square = m(x(0).mul(&x(0)));
    let affine = m(x(0).add(&Polynomial::constant(int(1))));
    let triple = m(x(0).scale(&int(3)));
    for f in [&square, &affine] {
        assert!(!dv::is_additive(&poly, f).unwrap());
        assert!(!dv::is_d_linear(&poly, f).unwrap());
    }
    assert!(dv::is_additive(&poly, &triple).unwrap());
    assert!(dv::is_d_linear(&poly, &triple).unwrap());
}

/// The coefficient of `e` in `f(x + e u)`, with `e` a fresh variable.
fn first_order(f: &PolyMap) -> PolyMap {
    let n = f.inputs() as u32;
    let e = 2 * n;
    let args: Vec<Polynomial> = (0..n).map(|v| x(v).add(&x(e).mul(&x(n + v)))).collect();
    let outputs = f
        .outputs()
        .iter()
        .map(|p| {
            let q = p.substitute(&args, 64).unwrap();
            let mut out = Polynomial::zero();
            for (m, c) in q.terms() {
                if m.multiplicity(e) == 1 {
                    out.add_term(m.without(e).unwrap(), c.clone());
                }
            }
            out
        })
        .collect();
    PolyMap::new(2 * f.inputs(), outputs)
}

proptest! {
    #[test]
    fn combinator_matches_first_order_expansion(seed in any::<u64>(), n in 1usize..4, m in 1usize..3, k in 1usize..5) {
        let f = random_map(&mut ChaCha8Rng::seed_from_u64(seed), n, m, k);
        prop_assert_eq!(d_combinator(&f), first_order(&f));
    }

    #[test]
    fn derivative_is_pairing_with_the_combinator(seed in any::<u64>()) {
        // D f = <f pi_0, d f> under the layout D X = X & X.
        let poly = PolyCdc::default();
        let mut s = PolySampler::new(seed);
        let a = PolyCdc::real(2);
        let b = s.object();
        let f = s.morphism(&a, &b);
        let df = poly.d_morphism(&f).unwrap();
        let base = f.map().compose(&pr(0, 2, 2), 16).unwrap();
        let expected: Vec<Polynomial> = (0..b.size()).map(|j| base.outputs()[j].clone())
            .chain(d_combinator(f.map()).into_outputs())
            .collect();
        let leaf_layout = b.d_table();
        let mut got = vec![Polynomial::zero(); 2 * b.size()];
        for j in 0..b.size() {
            got[j] = df.map().outputs()[leaf_layout[0][j]].clone();
            got[b.size() + j] = df.map().outputs()[leaf_layout[1][j]].clone();
        }
        prop_assert_eq!(got, expected);
    }
}

#[test]
fn monomials_compare_by_multiset() {
    assert_eq!(Monomial::from_vars(vec![2, 0, 0]), Monomial::from_vars(vec![0, 2, 0]));
}
