use cohdiff_core::semantics::fixtures::{standard_signature, GROUND};
use cohdiff_core::semantics::generate::{random_case, GenConfig};
use cohdiff_core::syntax::{differentiate, typecheck, Context, Function, FunctionType, Signature, Term, Type, TypeError};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn abc() -> Signature {
    let mut sig = Signature::new();
    sig.declare("f", FunctionType { args: vec![Type::ground("a"), Type::ground("b")], result: Type::ground("c") });
    sig
}

#[test]
fn d_on_types() {
    let (a, b) = (Type::ground("a"), Type::ground("b"));
    assert_eq!(a.d(), Type::Ground { name: "a".into(), depth: 1 });
    assert_eq!(Type::product(a.clone(), b.clone()).d(), Type::product(a.d(), b.d()));
    assert_eq!(Type::product(a.d_n(2), b.clone()).d(), Type::product(a.d_n(3), b.d()));
}

#[test]
fn builtin_signatures() {
    let a = Type::ground("a");
    let b = Type::ground("b");
    let sig = Signature::new();
    let theta = sig.signature_of(&Function::DmonadSum(1), &[a.clone()]).unwrap();
    assert_eq!(theta.to_string(), "(D D a) -> D a");
    let pi = sig.signature_of(&Function::Dproj(0), &[a.clone()]).unwrap();
    assert_eq!(pi.to_string(), "(D a) -> a");
    let pr = sig.signature_of(&Function::ProdProj(1), &[a, b]).unwrap();
    assert_eq!(pr.args.len(), 1);
    assert_eq!(pr.to_string(), "(a & b) -> b");
    assert!(sig.signature_of(&Function::symbol("g"), &[]).is_none());
}

#[test]
fn typing_examples() {
    let sig = abc();
    let (a, b) = (Type::ground("a"), Type::ground("b"));
    let ctx = Context::new().with("x", a.clone());
    assert_eq!(typecheck(&sig, &ctx, &Term::var("x")), Ok(a.clone()));
    let ctx = Context::new().with("x", a.d()).with("y", b.d());
    let t = Term::app(Function::symbol("f"), vec![1, 0], vec![Term::var("x"), Term::var("y")]);
    assert_eq!(typecheck(&sig, &ctx, &t), Ok(Type::ground("c").d_n(2)));
    let ctx = Context::new().with("x", a.d());
    assert_eq!(typecheck(&sig, &ctx, &Term::builtin(Function::Dproj(0), 0, Term::var("x"))), Ok(a));
}

#[test]
fn typing_errors() {
    let sig = abc();
    let ctx = Context::new().with("x", Type::ground("a"));
    assert_eq!(typecheck(&sig, &ctx, &Term::var("z")), Err(TypeError::UnboundVariable("z".into())));
    let short = Term::app(Function::symbol("f"), vec![], vec![Term::var("x")]);
    assert!(matches!(typecheck(&sig, &ctx, &short), Err(TypeError::Arity { expected: 2, found: 1, .. })));
    let wrong = Term::app(Function::symbol("f"), vec![], vec![Term::var("x"), Term::var("x")]);
    match typecheck(&sig, &ctx, &wrong) {
        Err(TypeError::ArgumentMismatch { position, expected, found, .. }) => {
            assert_eq!((position, expected.as_str(), found), (1, "b", Type::ground("a")));
        }
        other => panic!("{other:?}"),
    }
    let dup = Context::new().with("x", Type::ground("a")).with("x", Type::ground("b"));
    assert_eq!(typecheck(&sig, &dup, &Term::var("x")), Err(TypeError::DuplicateVariable("x".into())));
    let unknown = Term::app(Function::symbol("g"), vec![], vec![]);
    assert_eq!(typecheck(&sig, &ctx, &unknown), Err(TypeError::UnknownFunction("g".into())));
}

#[test]
fn differentiation_examples() {
    let x = Term::var("x");
    assert_eq!(differentiate(&x, "x"), x);
    assert_eq!(differentiate(&Term::var("y"), "x").to_string(), "iota0(y)");
    let t = Term::app(Function::symbol("f"), vec![], vec![Term::var("x"), Term::var("y")]);
    assert_eq!(differentiate(&t, "x").to_string(), "theta_1(f^[1,0](x, iota0(y)))");
    let t = Term::pair(Term::var("y"), Term::var("x"));
    assert_eq!(differentiate(&t, "x").to_string(), "<iota0(y), x>");
}

fn cases() -> impl Strategy<Value = u64> {
    any::<u64>()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn differentiation_preserves_typing(seed in cases()) {
        let sig = standard_signature();
        let case = random_case(&mut ChaCha8Rng::seed_from_u64(seed), &sig, GROUND, &GenConfig::default());
        let full = case.full_context();
        let b = typecheck(&sig, &full, &case.t).unwrap();
        // Typing is a function of the term.
        prop_assert_eq!(typecheck(&sig, &full, &case.t).unwrap(), b.clone());
        let dt = differentiate(&case.t, &case.x);
        prop_assert_eq!(typecheck(&sig, &full.differentiate(&case.x), &dt), Ok(b.d()));
    }

    #[test]
    fn word_bookkeeping(word in prop::collection::vec(0u32..3, 0..5)) {
        let args = vec![Term::var("a"), Term::var("b"), Term::var("c")];
        let t = Term::app(Function::symbol("m3"), word.clone(), args);
        let Term::App { args, .. } = differentiate(&t, "a") else { unreachable!() };
        let Term::App { word: extended, .. } = &args[0] else { unreachable!() };
        for i in 0..3u32 {
            let before = word.iter().filter(|&&l| l == i).count();
            let after = extended.iter().filter(|&&l| l == i).count();
            prop_assert_eq!(after, before + 1);
        }
        prop_assert_eq!(&extended[..word.len()], &word[..]);
    }

    #[test]
    fn d_is_a_product_homomorphism(h in 0u32..4, k in 0u32..4, n in 0u32..3) {
        let a = Type::ground("a").d_n(h);
        let b = Type::ground("b").d_n(k);
        let p = Type::product(a.clone(), b.clone());
        prop_assert_eq!(p.d_n(n), Type::product(a.d_n(n), b.d_n(n)));
        prop_assert_eq!(p.d_n(n).undepth(n), Some(p));
    }
}
