use cohdiff_core::carrier::{self, Morphism};
use cohdiff_core::ccdc::derived as dv;
use cohdiff_core::ccdc::{Ccdc, Sampler};
use cohdiff_core::object::Object;
use cohdiff_core::pcs::{contains, nat, one, predual, Pcs, PcsMorphism, PcsObject, PcsSampler};
use cohdiff_core::poly::{Monomial, PolyMap, Polynomial};
use cohdiff_core::rational::{int, ratio};
use cohdiff_core::semantics::fixtures::pcs_model;
use cohdiff_core::Rational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn x(v: u32) -> Polynomial {
    Polynomial::var(v)
}

fn map1(p: Polynomial) -> PolyMap {
    PolyMap::new(1, vec![p])
}

fn on_one(pcs: &Pcs, p: Polynomial) -> PcsMorphism {
    pcs.morphism(one(), one(), map1(p)).unwrap()
}

#[test]
fn membership() {
    assert!(contains(&one(), &[ratio(1, 2)]));
    assert!(!contains(&one(), &[ratio(3, 2)]));
    assert!(contains(&one().d(), &[ratio(1, 2), ratio(1, 2)]));
    assert!(!contains(&one().d(), &[ratio(1, 2), ratio(2, 3)]));
    assert!(contains(&Object::Top, &[]));
    let sq = Object::with(one(), one());
    assert!(contains(&sq, &[int(1), int(1)]));
    assert!(!contains(&sq, &[int(1), ratio(101, 100)]));
}

#[test]
fn derived_objects() {
    assert_eq!(one().d().size(), 2);
    assert_eq!(predual(&one().d()), vec![vec![int(1), int(1)]]);
    assert_eq!(predual(&Object::with(one(), one())), vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
    // D pushed below products: D (1 & N) is D 1 & D N on the nose.
    assert_eq!(Object::with(one(), nat(2)).d(), Object::with(one().d(), nat(2).d()));
    assert_eq!(one().d().atom_label(1), "d1.*");
}

#[test]
fn evaluation() {
    let pcs = Pcs::default();
    let id = pcs.identity(&nat(2));
    let v = vec![ratio(1, 3), ratio(1, 6), ratio(1, 4)];
    assert_eq!(pcs.eval(&id, &v).unwrap(), v);
    let sq = on_one(&pcs, x(0).mul(&x(0)));
    assert_eq!(pcs.eval(&sq, &[ratio(1, 2)]).unwrap(), vec![ratio(1, 4)]);
    assert!(pcs.eval(&sq, &[int(2)]).is_err());

    // ifz(u, <x, y>) at u = delta_0 is x.
    let model = pcs_model();
    let ifz = model.symbol("ifz").unwrap();
    let mut point = vec![int(1), int(0), int(0)];
    point.extend([ratio(1, 2), ratio(1, 4), int(0)]);
    point.extend([int(0), int(0), int(1)]);
    assert_eq!(pcs.eval(ifz, &point).unwrap(), vec![ratio(1, 2), ratio(1, 4), int(0)]);
    assert!(pcs.is_multilinear(ifz, &[nat(2), Object::with(nat(2), nat(2))]));
}

#[test]
fn composition() {
    let pcs = Pcs::default();
    let sq = on_one(&pcs, x(0).mul(&x(0)));
    let cube = on_one(&pcs, x(0).mul(&x(0)).mul(&x(0)));
    let six = pcs.compose(&sq, &cube).unwrap();
    assert_eq!(six.map(), &map1(Polynomial::monomial(Monomial::from_vars(vec![0; 6]), int(1))));
    let id = pcs.identity(&one());
    assert_eq!(pcs.compose(&id, &sq).unwrap(), sq);
    assert_eq!(pcs.compose(&sq, &id).unwrap(), sq);
}

#[test]
fn composition_matches_evaluation() {
    let pcs = Pcs::default();
    let mut s = PcsSampler::new(5);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let (a, b, c) = (s.object(), s.object(), s.object());
        let f = s.morphism(&a, &b);
        let g = s.morphism(&b, &c);
        let gf = pcs.compose(&g, &f).unwrap();
        for _ in 0..10 {
            let p = random_point(&mut rng, &a);
            assert_eq!(pcs.eval(&gf, &p).unwrap(), pcs.eval(&g, &pcs.eval(&f, &p).unwrap()).unwrap());
        }
    }
}

#[test]
fn derivative_matrices() {
    let pcs = Pcs::default();
    let id = pcs.identity(&nat(2));
    assert_eq!(pcs.d_morphism(&id).unwrap(), pcs.identity(&nat(2).d()));
    // x^2: the tangent output is 2 x u.
    let sq = on_one(&pcs, x(0).mul(&x(0)));
    let d = pcs.d_morphism(&sq).unwrap();
    let tangent = &d.map().outputs()[1];
    assert_eq!(tangent.coeff(&Monomial::from_vars(vec![0, 1])), int(2));
    assert_eq!(tangent.len(), 1);
    // A truncated exponential-like series: sum c_n x^n.
    let cs = [ratio(1, 8), ratio(1, 8), ratio(1, 16), ratio(1, 48), ratio(1, 192)];
    let mut f = Polynomial::zero();
    let mut df = Polynomial::zero();
    for (n, c) in cs.iter().enumerate() {
        f.add_term(Monomial::from_vars(vec![0; n]), c.clone());
        if n > 0 {
            let mut m = vec![0; n - 1];
            m.push(1);
            df.add_term(Monomial::from_vars(m), c * int(n as i64));
        }
    }
    let f = on_one(&pcs, f);
    assert_eq!(pcs.d_morphism(&f).unwrap().map().outputs()[1], df);
}

#[test]
fn summability() {
    let pcs = Pcs::default();
    let half = on_one(&pcs, Polynomial::constant(ratio(1, 2)));
    let sum = dv::sum(&pcs, &half, &half).unwrap().unwrap();
    assert_eq!(sum.map(), &map1(Polynomial::constant(int(1))));
    let id = pcs.identity(&one());
    assert!(dv::sum(&pcs, &id, &id).unwrap().is_none());
    let sq = on_one(&pcs, x(0).mul(&x(0)));
    assert_eq!(dv::sum(&pcs, &sq, &pcs.zero(&one(), &one())).unwrap(), Some(sq));
    // pi_0, pi_1 pair to the identity and sum to sigma.
    let d1 = one().d();
    let w = pcs.pair_witness(&pcs.proj_d(0, &one()), &pcs.proj_d(1, &one())).unwrap().unwrap();
    assert_eq!(w, pcs.identity(&d1));
    assert_eq!(pcs.sigma(&one()).map(), &PolyMap::new(2, vec![x(0).add(&x(1))]));
    // <id, 0> is iota_0.
    let w = pcs.pair_witness(&id, &pcs.zero(&one(), &one())).unwrap().unwrap();
    assert_eq!(w, pcs.inj_d(0, &one()).unwrap());
}

#[test]
fn n_ary_sums_and_partitions() {
    let pcs = Pcs::default();
    let lin = |c: Rational| on_one(&pcs, x(0).scale(&c));
    let family = [lin(ratio(1, 2)), lin(ratio(1, 4)), lin(ratio(1, 4))];
    let all = dv::n_ary_sum(&pcs, &family, &one(), &one(), None).unwrap().unwrap();
    assert_eq!(all, pcs.identity(&one()));
    let tail = dv::n_ary_sum(&pcs, &family[1..], &one(), &one(), None).unwrap().unwrap();
    let grouped = dv::n_ary_sum(&pcs, &[family[0].clone(), tail], &one(), &one(), None).unwrap().unwrap();
    assert_eq!(grouped, all);
    let reversed: Vec<_> = family.iter().rev().cloned().collect();
    assert_eq!(dv::n_ary_sum(&pcs, &reversed, &one(), &one(), None).unwrap().unwrap(), all);
    assert_eq!(dv::n_ary_sum(&pcs, &[], &one(), &one(), None).unwrap().unwrap(), pcs.zero(&one(), &one()));
    assert_eq!(dv::n_ary_sum(&pcs, &family[..1], &one(), &one(), None).unwrap().unwrap(), family[0]);
}

#[test]
fn structural_maps_on_points() {
    let pcs = Pcs::default();
    let (xx, u, v, w) = (ratio(1, 8), ratio(1, 4), ratio(1, 8), ratio(1, 16));
    let point = vec![xx.clone(), u.clone(), v.clone(), w.clone()];
    let theta = pcs.theta(&one()).unwrap();
    assert_eq!(pcs.eval(&theta, &point).unwrap(), vec![xx.clone(), &u + &v]);
    let swap = pcs.swap(&one()).unwrap();
    assert_eq!(pcs.eval(&swap, &point).unwrap(), vec![xx.clone(), v.clone(), u.clone(), w]);
    assert_eq!(pcs.compose(&swap, &swap).unwrap(), pcs.identity(&one().d().d()));
    let lift = pcs.lift(&one()).unwrap();
    assert_eq!(pcs.eval(&lift, &[xx.clone(), u.clone()]).unwrap(), vec![xx, int(0), int(0), u]);
}

#[test]
fn linearity() {
    let pcs = Pcs::default();
    assert!(pcs.is_linear(&pcs.identity(&nat(2))));
    let sq = on_one(&pcs, x(0).mul(&x(0)));
    assert!(!pcs.is_linear(&sq));
    assert!(!dv::is_d_linear(&pcs, &sq).unwrap());
    assert!(dv::is_d_linear(&pcs, &pcs.identity(&nat(2))).unwrap());
}

fn random_point(rng: &mut ChaCha8Rng, x: &PcsObject) -> Vec<Rational> {
    let v: Vec<Rational> = (0..x.size()).map(|_| ratio(rng.gen_range(0..=6), 6)).collect();
    let n = cohdiff_core::pcs::norm(x, &v);
    let scale = ratio(rng.gen_range(1..=4), 4);
    if n == int(0) {
        v
    } else {
        v.iter().map(|c| c * &scale / &n).collect()
    }
}

fn sampled(seed: u64) -> (Pcs, PcsSampler, ChaCha8Rng) {
    (Pcs::default(), PcsSampler::new(seed), ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn monotone_under_approximation(seed in any::<u64>()) {
        let (pcs, mut s, mut rng) = sampled(seed);
        let (a, b) = (s.object(), s.object());
        let f = s.morphism(&a, &b);
        let xu = random_point(&mut rng, &a.d());
        prop_assert!(pcs.monotone_bound(&f, &xu).unwrap());
    }

    #[test]
    fn chain_rule(seed in any::<u64>()) {
        let (pcs, mut s, _) = sampled(seed);
        let (a, b, c) = (s.object(), s.object(), s.object());
        let f = s.morphism(&a, &b);
        let g = s.morphism(&b, &c);
        let lhs = pcs.d_morphism(&pcs.compose(&g, &f).unwrap()).unwrap();
        let rhs = pcs.compose(&pcs.d_morphism(&g).unwrap(), &pcs.d_morphism(&f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn support_linearity_is_d_linearity(seed in any::<u64>()) {
        let (pcs, mut s, mut rng) = sampled(seed);
        let (a, b) = (s.object(), s.object());
        let f = if rng.gen_bool(0.5) { s.multilinear(std::slice::from_ref(&a), &b) } else { s.morphism(&a, &b) };
        prop_assert_eq!(pcs.is_linear(&f) || f.map().outputs().iter().all(Polynomial::is_zero), dv::is_d_linear(&pcs, &f).unwrap());
    }

    #[test]
    fn witness_is_unique(seed in any::<u64>()) {
        // The witness is determined by its two projections.
        let (pcs, mut s, _) = sampled(seed);
        let (a, b) = (s.object(), s.object());
        let f0 = s.small_morphism(&a, &b);
        let f1 = s.small_morphism(&a, &b);
        let w = pcs.pair_witness(&f0, &f1).unwrap().unwrap();
        prop_assert_eq!(pcs.compose(&pcs.proj_d(0, &b), &w).unwrap(), f0.clone());
        prop_assert_eq!(pcs.compose(&pcs.proj_d(1, &b), &w).unwrap(), f1.clone());
        prop_assert_eq!(w, carrier::pairing(&f0, &f1).unwrap());
    }
}

#[test]
fn rejected_maps() {
    let pcs = Pcs::default();
    assert!(pcs.morphism(one(), one(), map1(x(0).scale(&int(2)))).is_err());
    assert!(pcs.morphism(one(), one(), map1(x(0).scale(&int(-1)))).is_err());
    assert!(pcs.morphism(one(), nat(2), map1(x(0))).is_err());
    let _: Morphism<_> = pcs.morphism(one(), one(), map1(x(0))).unwrap();
}
