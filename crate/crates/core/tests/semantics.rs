use cohdiff_core::carrier::Morphism;
use cohdiff_core::ccdc::derived as dv;
use cohdiff_core::ccdc::Ccdc;
use cohdiff_core::poly::{PolyMap, Polynomial};
use cohdiff_core::rewrite::{step_root, TermMultiset, DEFAULT_FUEL};
use cohdiff_core::semantics::fixtures::{pcs_model, poly_model, standard_signature, GROUND};
use cohdiff_core::semantics::generate::{projected_derivative, random_case, GenConfig};
use cohdiff_core::semantics::{check_diff_theorem, check_invariance, Model, SemanticsError};
use cohdiff_core::syntax::{Context, Function, Term, Type};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn n() -> Type {
    Type::ground(GROUND)
}

fn x() -> Term {
    Term::var("x")
}

fn sym(name: &str, word: Vec<u32>, args: Vec<Term>) -> Term {
    Term::app(Function::symbol(name), word, args)
}

#[test]
fn variables_and_pairs() {
    let model = pcs_model();
    let inst = &model.inst;
    let ctx = Context::new().with("x", n());
    let nn = model.interp_type(&n()).unwrap();
    assert_eq!(model.interp_term(&ctx, &x()).unwrap(), inst.identity(&nn));
    let pair = model.interp_term(&ctx, &Term::pair(x(), x())).unwrap();
    let id = inst.identity(&nn);
    assert_eq!(pair, inst.prod_pair(&id, &id).unwrap());
}

#[test]
fn applications_use_partial_derivatives() {
    // ifz^[1,0](x, y) = D_1 D_0 ifz composed with <x, y>; word read left to right.
    let model = poly_model();
    let inst = &model.inst;
    let ctx = Context::new().with("x", n().d()).with("y", Type::product(n(), n()).d());
    let t = sym("ifz", vec![0, 1], vec![x(), Term::var("y")]);
    let got = model.interp_term(&ctx, &t).unwrap();
    let f = model.symbol("ifz").unwrap();
    let slots = model.interp_slots(&Context::new().with("a", n()).with("b", Type::product(n(), n()))).unwrap();
    let d0 = inst.partial_derivative(f, &slots, 0).unwrap();
    let slots0 = dv::d_slot(inst, &slots, 0);
    let d10 = inst.partial_derivative(&d0, &slots0, 1).unwrap();
    let dom = model.interp_ctx(&ctx).unwrap();
    let args = dv::nary_pair(inst, &[dv::nary_proj(inst, &model.interp_slots(&ctx).unwrap(), 0).unwrap(), dv::nary_proj(inst, &model.interp_slots(&ctx).unwrap(), 1).unwrap()], &dom).unwrap();
    assert_eq!(got, inst.compose(&d10, &args).unwrap());
}

#[test]
fn empty_multiset_is_zero() {
    let model = pcs_model();
    let ctx = Context::new().with("x", n());
    let got = model.interp_multiset(&ctx, &TermMultiset::empty(), &n(), None).unwrap().unwrap();
    let nn = model.interp_type(&n()).unwrap();
    assert_eq!(got, model.inst.zero(&nn, &nn));
}

#[test]
fn theta_contractum_sums_to_the_redex() {
    let model = pcs_model();
    let ctx = Context::new().with("x", n().d_n(3));
    for i in 0..2 {
        let redex = Term::builtin(Function::Dproj(i), 0, Term::builtin(Function::DmonadSum(2), 0, x()));
        let (_, contractum) = step_root(&redex).unwrap();
        let expected = model.interp_term(&ctx, &redex).unwrap();
        let got = model.interp_multiset(&ctx, &contractum, &n(), Some(&expected)).unwrap().unwrap();
        assert_eq!(got, expected, "pi{i}");
    }
}

#[test]
fn model_rejects_bad_symbols() {
    let mut model = pcs_model();
    let nn = model.interp_type(&n()).unwrap();
    let square = PolyMap::new(3, (0..3).map(|b| Polynomial::var(b).mul(&Polynomial::var(b))).collect());
    let err = model.assign_symbol("succ", Morphism::new(nn.clone(), nn.clone(), square)).unwrap_err();
    assert_eq!(err, SemanticsError::NotMultilinear("succ".into()));
    let wrong = Morphism::new(nn.d(), nn.clone(), PolyMap::zero(6, 3));
    assert!(matches!(model.assign_symbol("succ", wrong), Err(SemanticsError::Shape { .. })));
    assert!(matches!(
        model.assign_symbol("nope", model.inst.identity(&nn)),
        Err(SemanticsError::Undeclared(_))
    ));
}

#[test]
fn unassigned_symbols_are_reported() {
    let mut model = Model::new(cohdiff_core::pcs::Pcs::default(), standard_signature());
    model.assign_ground(GROUND, cohdiff_core::pcs::nat(2));
    assert_eq!(model.missing().len(), 3);
    let err = model.interp_term(&Context::new().with("x", n()), &sym("succ", vec![], vec![x()])).unwrap_err();
    assert_eq!(err, SemanticsError::UnassignedSymbol("succ".into()));
}

fn diff_theorem_on<I: Ccdc>(model: &Model<I>, seed: u64, cases: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let config = GenConfig::default();
    for _ in 0..cases {
        let case = random_case(&mut rng, model.signature(), GROUND, &config);
        let v = check_diff_theorem(model, &case.ctx, &case.x, &case.a, &case.t).unwrap();
        assert!(v.holds, "{v}");
    }
}

#[test]
fn differential_theorem_pcs() {
    diff_theorem_on(&pcs_model(), 21, 60);
}

#[test]
fn differential_theorem_poly() {
    diff_theorem_on(&poly_model(), 22, 60);
}

#[test]
fn invariance_on_projected_derivatives() {
    let model = pcs_model();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let config = GenConfig::default();
    for k in 0..60 {
        let case = random_case(&mut rng, model.signature(), GROUND, &config);
        let (ctx, t) = projected_derivative(&case, (k % 2) as u8);
        let (v, trace) = check_invariance(&model, &ctx, &t, DEFAULT_FUEL).unwrap();
        assert!(v.holds, "{v}\n{trace}");
    }
}
