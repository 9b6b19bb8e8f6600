use cohdiff_core::rewrite::{
    is_normal, normalize, normalize_multiset, step_multiset, step_root, step_term, Rule, TermMultiset,
};
use cohdiff_core::syntax::{Function, Term};
use proptest::prelude::*;

fn var(x: &str) -> Term {
    Term::var(x)
}

fn b(f: Function, t: Term) -> Term {
    Term::builtin(f, 0, t)
}

fn pi(i: u8, t: Term) -> Term {
    b(Function::Dproj(i), t)
}

fn iota(i: u8, t: Term) -> Term {
    b(Function::Dinj(i), t)
}

fn theta(n: u32, t: Term) -> Term {
    b(Function::DmonadSum(n), t)
}

fn pr(i: u8, t: Term) -> Term {
    b(Function::ProdProj(i), t)
}

fn ms(ts: &[Term]) -> TermMultiset {
    ts.iter().cloned().collect()
}

#[test]
fn root_rules() {
    let (x, y) = (var("x"), var("y"));
    assert_eq!(step_root(&pr(0, Term::pair(x.clone(), y.clone()))), Some((Rule::PrPair, ms(&[x.clone()]))));
    assert_eq!(step_root(&pi(1, iota(0, x.clone()))), Some((Rule::PiIotaOther, ms(&[]))));
    assert_eq!(step_root(&pi(1, iota(1, x.clone()))), Some((Rule::PiIota, ms(&[x.clone()]))));
    assert_eq!(
        step_root(&pi(1, theta(1, x.clone()))),
        Some((Rule::Pi1Theta, ms(&[pi(1, pi(0, x.clone())), pi(0, pi(1, x.clone()))])))
    );
    assert_eq!(step_root(&pi(0, theta(2, x.clone()))), Some((Rule::Pi0Theta, ms(&[pi(0, pi(0, pi(0, x.clone())))]))));
    assert_eq!(step_root(&x), None);
}

#[test]
fn projection_through_an_application() {
    // pi_1(f^[1,0](x, y)) with d = 0: the last letter 0 is removed and
    // pi_1 lands on the first argument with depth |xi|_0 = 0.
    let t = Term::app(Function::symbol("f"), vec![1, 0], vec![var("x"), var("y")]);
    let (rule, out) = step_root(&pi(1, t)).unwrap();
    assert_eq!(rule, Rule::PiApp);
    assert_eq!(out, ms(&[Term::app(Function::symbol("f"), vec![1], vec![pi(1, var("x")), var("y")])]));

    // pi_0^(1)(f^[0,1](x, y)): now xi = [1], so the letter 0 goes and the
    // projection on x keeps depth |[1]|_0 = 0.
    let t = Term::app(Function::symbol("f"), vec![0, 1], vec![var("x"), var("y")]);
    let (_, out) = step_root(&Term::builtin(Function::Dproj(0), 1, t)).unwrap();
    assert_eq!(out, ms(&[Term::app(Function::symbol("f"), vec![1], vec![pi(0, var("x")), var("y")])]));

    // Same with xi = [0]: the projection on x is at depth 1.
    let t = Term::app(Function::symbol("f"), vec![1, 0], vec![var("x"), var("y")]);
    let (_, out) = step_root(&Term::builtin(Function::Dproj(0), 1, t)).unwrap();
    let expected = Term::app(Function::symbol("f"), vec![0], vec![var("x"), Term::builtin(Function::Dproj(0), 0, var("y"))]);
    assert_eq!(out, ms(&[expected]));
}

#[test]
fn depth_must_match() {
    let x = var("x");
    // pi^(1) against a word of length 1 is not a redex.
    let t = Term::app(Function::symbol("f"), vec![0], vec![x.clone()]);
    assert_eq!(step_root(&Term::builtin(Function::Dproj(0), 1, t)), None);
    let t = Term::builtin(Function::Dinj(0), 0, x.clone());
    assert_eq!(step_root(&Term::builtin(Function::Dproj(0), 1, t)), None);
    // A built-in with a longer word is pushed through like any function:
    // pi_0(iota_0^[0](x)) -> [iota_0(pi_0(x))].
    let (rule, out) = step_root(&pi(0, Term::builtin(Function::Dinj(0), 1, x.clone()))).unwrap();
    assert_eq!(rule, Rule::PiApp);
    assert_eq!(out, ms(&[iota(0, pi(0, x))]));
}

#[test]
fn leftmost_outermost() {
    let (x, y, z) = (var("x"), var("y"), var("z"));
    let inner = pi(0, iota(0, x.clone()));
    let t = pr(0, Term::pair(inner.clone(), y.clone()));
    let (rule, path, out) = step_term(&t).unwrap();
    assert_eq!((rule, path), (Rule::PrPair, vec![]));
    assert_eq!(out, ms(&[inner]));

    let t = Term::pair(pr(0, Term::pair(x.clone(), y.clone())), z.clone());
    let (_, path, out) = step_term(&t).unwrap();
    assert_eq!(path, vec![0]);
    assert_eq!(out, ms(&[Term::pair(x.clone(), z.clone())]));
    assert_eq!(step_term(&x), None);
}

#[test]
fn pairs_block_non_singleton_contracta() {
    // <pi_0(iota_1 x), y> would lose y if the empty contractum were
    // plugged into the pair.
    let t = Term::pair(pi(0, iota(1, var("x"))), var("y"));
    assert_eq!(step_term(&t), None);
    // Singletons pass through, and redexes further right are still found.
    let t = Term::pair(pi(0, iota(1, var("x"))), pi(0, iota(0, var("y"))));
    let (rule, path, out) = step_term(&t).unwrap();
    assert_eq!((rule, path), (Rule::PiIota, vec![1]));
    assert_eq!(out, ms(&[Term::pair(pi(0, iota(1, var("x"))), var("y"))]));
    // Below an application the empty contractum is fine.
    let t = Term::app(Function::symbol("f"), vec![], vec![pi(0, iota(1, var("x")))]);
    assert_eq!(step_term(&t).unwrap().2, ms(&[]));
}

#[test]
fn multiset_steps() {
    let (x, y, z) = (var("x"), var("y"), var("z"));
    let l = ms(&[pr(0, Term::pair(x.clone(), y.clone())), z.clone()]);
    assert_eq!(step_multiset(&l).unwrap().result, ms(&[x.clone(), z.clone()]));
    assert!(step_multiset(&ms(&[])).is_none());
    assert!(step_multiset(&ms(&[x.clone(), x.clone()])).is_none());
    assert!(is_normal(&ms(&[x.clone(), x])));
}

#[test]
fn normalize_examples() {
    let (x, y) = (var("x"), var("y"));
    assert_eq!(normalize(&pr(0, Term::pair(x.clone(), y)), 10).unwrap().result, ms(&[x.clone()]));
    let ii = iota(0, iota(0, x.clone()));
    assert_eq!(normalize(&pi(1, theta(1, ii.clone())), 20).unwrap().result, ms(&[]));
    assert_eq!(normalize(&pi(0, theta(1, ii)), 20).unwrap().result, ms(&[x]));
}

#[test]
fn golden_traces() {
    let x = var("x");
    let ii = iota(0, iota(0, x.clone()));
    let run = |t: &Term| {
        let n = normalize(t, 20).unwrap();
        format!("{}=> {}\n", n.trace, n.result)
    };
    assert_eq!(
        run(&pi(0, theta(1, ii.clone()))),
        "#1 pi0-theta @ 0 : [pi0(pi0(iota0(iota0(x))))]\n\
         #2 pi-iota @ 0.0 : [pi0(iota0(x))]\n\
         #3 pi-iota @ 0 : [x]\n\
         => [x]\n"
    );
    assert_eq!(
        run(&pi(1, theta(1, ii))),
        "#1 pi1-theta @ 0 : [pi0(pi1(iota0(iota0(x)))), pi1(pi0(iota0(iota0(x))))]\n\
         #2 pi-iota-other @ 0.0 : [pi1(pi0(iota0(iota0(x))))]\n\
         #3 pi-iota @ 0.0 : [pi1(iota0(x))]\n\
         #4 pi-iota-other @ 0 : []\n\
         => []\n"
    );
    assert_eq!(
        run(&pi(1, theta(2, x))),
        "#1 pi1-theta @ 0 : [pi0(pi0(pi1(x))), pi0(pi1(pi0(x))), pi1(pi0(pi0(x)))]\n\
         => [pi0(pi0(pi1(x))), pi0(pi1(pi0(x))), pi1(pi0(pi0(x)))]\n"
    );
}

#[test]
fn fuel_exhaustion_keeps_the_trace() {
    let t = pi(0, theta(1, iota(0, iota(0, var("x")))));
    let err = normalize(&t, 2).unwrap_err();
    assert_eq!(err.trace.steps.len(), 2);
    assert_eq!(err.trace.last(), &ms(&[pi(0, iota(0, var("x")))]));
    assert!(normalize(&t, 3).is_ok());
}

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop::sample::select(vec!["x", "y", "z"]).prop_map(Term::var);
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::pair(a, b)),
            (0u8..2, 0usize..2, inner.clone()).prop_map(|(i, d, t)| Term::builtin(Function::Dproj(i), d, t)),
            (0u8..2, 0usize..2, inner.clone()).prop_map(|(i, d, t)| Term::builtin(Function::Dinj(i), d, t)),
            (0u32..3, 0usize..2, inner.clone()).prop_map(|(n, d, t)| Term::builtin(Function::DmonadSum(n), d, t)),
            (0u8..2, inner.clone()).prop_map(|(i, t)| pr(i, t)),
            (prop::collection::vec(0u32..2, 0..3), inner.clone(), inner)
                .prop_map(|(w, a, b)| Term::app(Function::symbol("f"), w, vec![a, b])),
        ]
    })
}

fn subterms(t: &Term, additive: bool, out: &mut Vec<(Term, bool)>) {
    out.push((t.clone(), additive));
    let below = additive && matches!(t, Term::App { .. });
    for c in t.children() {
        subterms(c, below, out);
    }
}

proptest! {
    #[test]
    fn rule_six_branch_count(n in 0u32..6, d in 0usize..3) {
        let t = Term::builtin(Function::Dproj(1), d, Term::builtin(Function::DmonadSum(n), d, var("t")));
        let (rule, out) = step_root(&t).unwrap();
        prop_assert_eq!(rule, Rule::Pi1Theta);
        prop_assert_eq!(out.len(), n as usize + 1);
    }

    #[test]
    fn normal_terms_have_no_admissible_redex(t in arb_term()) {
        if step_term(&t).is_none() {
            let mut subs = Vec::new();
            subterms(&t, true, &mut subs);
            for (u, additive) in subs {
                if let Some((_, out)) = step_root(&u) {
                    prop_assert!(!additive && out.len() != 1, "{} has a redex {}", t, u);
                }
            }
        }
    }

    #[test]
    fn union_is_commutative_and_associative(
        a in prop::collection::vec(arb_term(), 0..4),
        b in prop::collection::vec(arb_term(), 0..4),
        c in prop::collection::vec(arb_term(), 0..4),
    ) {
        let (a, b, c) = (ms(&a), ms(&b), ms(&c));
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
        prop_assert_eq!(a.union(&b).len(), a.len() + b.len());
    }

    #[test]
    fn multiset_normalization_is_memberwise(a in arb_term(), b in arb_term()) {
        let (Ok(na), Ok(nb)) = (normalize(&a, 200), normalize(&b, 200)) else { return Ok(()) };
        let both = normalize_multiset(&ms(&[a, b]), 400).unwrap();
        prop_assert_eq!(both.result, na.result.union(&nb.result));
    }
}
