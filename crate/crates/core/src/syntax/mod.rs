//! The first-order differential calculus: types, terms, typing, and the
//! syntactic derivative.

mod diff;
mod term;
mod types;
mod typing;

pub use diff::differentiate;
pub use term::{Context, Function, FunctionType, Signature, Term};
pub use types::Type;
pub use typing::{app_type, typecheck, TypeError};

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn sig() -> Signature {
        let mut s = Signature::new();
        let n = Type::ground("n");
        s.declare("f", FunctionType { args: vec![n.clone(), n.clone()], result: n.clone() });
        s.declare("c", FunctionType { args: vec![], result: n });
        s
    }

    #[test]
    fn printing() {
        let t = Term::app(
            Function::symbol("f"),
            vec![1, 0],
            vec![Term::var("x"), Term::builtin(Function::DmonadSum(1), 0, Term::var("y"))],
        );
        assert_eq!(t.to_string(), "f^[1,0](x, theta_1(y))");
        let ty = Type::product(Type::ground("a").d(), Type::product(Type::ground("b"), Type::ground("c")));
        assert_eq!(ty.to_string(), "D a & (b & c)");
    }

    #[test]
    fn word_letters_raise_argument_depth() {
        let n = Type::ground("n");
        let ctx = Context::new().with("x", n.d()).with("y", n.clone());
        let t = Term::app(Function::symbol("f"), vec![0], vec![Term::var("x"), Term::var("y")]);
        assert_eq!(typecheck(&sig(), &ctx, &t), Ok(n.d()));
        let bad = Term::app(Function::symbol("f"), vec![1], vec![Term::var("x"), Term::var("y")]);
        assert!(matches!(typecheck(&sig(), &ctx, &bad), Err(TypeError::ArgumentMismatch { .. })));
        let out = Term::app(Function::symbol("f"), vec![2], vec![Term::var("x"), Term::var("y")]);
        assert!(matches!(typecheck(&sig(), &ctx, &out), Err(TypeError::LetterOutOfRange { .. })));
    }

    #[test]
    fn builtins_are_inferred() {
        let n = Type::ground("n");
        let ctx = Context::new().with("z", n.d_n(3)).with("p", Type::product(n.d(), n.clone()));
        let z = || Term::var("z");
        assert_eq!(typecheck(&sig(), &ctx, &Term::builtin(Function::Dproj(1), 2, z())), Ok(n.d_n(2)));
        assert!(typecheck(&sig(), &ctx, &Term::builtin(Function::Dproj(1), 3, z())).is_err());
        assert_eq!(typecheck(&sig(), &ctx, &Term::builtin(Function::DmonadSum(1), 1, z())), Ok(n.d_n(2)));
        assert_eq!(typecheck(&sig(), &ctx, &Term::builtin(Function::Dinj(0), 3, z())), Ok(n.d_n(4)));
        assert_eq!(typecheck(&sig(), &ctx, &Term::builtin(Function::ProdProj(0), 0, Term::var("p"))), Ok(n.d()));
        assert!(typecheck(&sig(), &ctx, &Term::builtin(Function::ProdProj(0), 1, Term::var("p"))).is_err());
    }

    #[test]
    fn derivative_shape_and_type() {
        let n = Type::ground("n");
        let ctx = Context::new().with("y", n.clone()).with("x", n.clone());
        let t = Term::app(Function::symbol("f"), vec![], vec![Term::var("y"), Term::var("x")]);
        let dt = differentiate(&t, "x");
        assert_eq!(dt.to_string(), "theta_1(f^[1,0](iota0(y), x))");
        assert_eq!(typecheck(&sig(), &ctx.differentiate("x"), &dt), Ok(n.d()));
        let c = Term::app(Function::symbol("c"), vec![], vec![]);
        let dc = differentiate(&c, "x");
        assert_eq!(typecheck(&sig(), &ctx.differentiate("x"), &dc), Ok(n.d()));
    }
}
