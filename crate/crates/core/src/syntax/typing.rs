use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::term::{Context, Function, Signature, Term};
use super::types::Type;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("variable {0} declared twice in the context")]
    DuplicateVariable(String),
    #[error("unknown function {0}")]
    UnknownFunction(String),
    #[error("{function} expects {expected} arguments, got {found}")]
    Arity { function: String, expected: usize, found: usize },
    #[error("letter {letter} of the word on {function} is not a slot of an arity {arity} function")]
    LetterOutOfRange { function: String, letter: u32, arity: usize },
    #[error("argument {position} of {function}: expected {expected}, found {found}")]
    ArgumentMismatch { function: String, position: usize, expected: String, found: Type },
}

/// `Γ ⊢ t : B`.
pub fn typecheck(sig: &Signature, ctx: &Context, t: &Term) -> Result<Type, TypeError> {
    let mut seen = BTreeSet::new();
    for (name, _) in ctx.entries() {
        if !seen.insert(name.as_str()) {
            return Err(TypeError::DuplicateVariable(name.clone()));
        }
    }
    infer(sig, ctx, t)
}

fn infer(sig: &Signature, ctx: &Context, t: &Term) -> Result<Type, TypeError> {
    match t {
        Term::Var(x) => ctx.get(x).cloned().ok_or_else(|| TypeError::UnboundVariable(x.clone())),
        Term::Pair(a, b) => Ok(Type::product(infer(sig, ctx, a)?, infer(sig, ctx, b)?)),
        Term::App { head, word, args } => {
            let arg_types = args.iter().map(|a| infer(sig, ctx, a)).collect::<Result<Vec<_>, _>>()?;
            app_type(sig, head, word, &arg_types)
        }
    }
}

/// Result type of `head^word` applied to arguments of the given types.
pub fn app_type(sig: &Signature, head: &Function, word: &[u32], arg_types: &[Type]) -> Result<Type, TypeError> {
    let name = format!("{head}");
    let arity = match head {
        Function::Symbol(s) => sig.get(s).ok_or_else(|| TypeError::UnknownFunction(s.clone()))?.args.len(),
        _ => 1,
    };
    if arg_types.len() != arity {
        return Err(TypeError::Arity { function: name, expected: arity, found: arg_types.len() });
    }
    if let Some(&letter) = word.iter().find(|&&l| l as usize >= arity) {
        return Err(TypeError::LetterOutOfRange { function: name, letter, arity });
    }
    let d = word.len() as u32;
    let mismatch = |expected: String| TypeError::ArgumentMismatch {
        function: name.clone(),
        position: 0,
        expected,
        found: arg_types[0].clone(),
    };
    match head {
        Function::Symbol(s) => {
            let ft = sig.get(s).unwrap();
            for (i, (expected, found)) in ft.args.iter().zip(arg_types).enumerate() {
                let count = word.iter().filter(|&&l| l as usize == i).count() as u32;
                let expected = expected.d_n(count);
                if &expected != found {
                    return Err(TypeError::ArgumentMismatch {
                        function: name,
                        position: i,
                        expected: format!("{expected}"),
                        found: found.clone(),
                    });
                }
            }
            Ok(ft.result.d_n(d))
        }
        Function::Dproj(_) => {
            let t = &arg_types[0];
            t.undepth(d + 1).ok_or_else(|| mismatch(format!("a type of the form D^{} A", d + 1)))?;
            Ok(t.undepth(1).unwrap())
        }
        Function::Dinj(_) => {
            let t = &arg_types[0];
            t.undepth(d).ok_or_else(|| mismatch(format!("a type of the form D^{d} A")))?;
            Ok(t.d())
        }
        Function::DmonadSum(n) => {
            let t = &arg_types[0];
            t.undepth(d + n + 1).ok_or_else(|| mismatch(format!("a type of the form D^{} A", d + n + 1)))?;
            Ok(t.undepth(*n).unwrap())
        }
        Function::ProdProj(i) => match &arg_types[0] {
            Type::Product(a, b) if a.undepth(d).is_some() && b.undepth(d).is_some() => {
                Ok(if *i == 0 { (**a).clone() } else { (**b).clone() })
            }
            _ => Err(mismatch(format!("a type of the form D^{d} (A & B)"))),
        },
    }
}
