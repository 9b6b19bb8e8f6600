use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::types::Type;

/// Function symbols. Built-ins are unary and carry no type annotation;
/// their instance is recovered from the argument type when checking.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Function {
    Symbol(String),
    /// `pi_i : D A -> A`.
    Dproj(u8),
    /// `pr_i : A_0 & A_1 -> A_i`.
    ProdProj(u8),
    /// `iota_i : A -> D A`.
    Dinj(u8),
    /// `theta_n : D^(n+1) A -> D A`.
    DmonadSum(u32),
}

impl Function {
    pub fn symbol(name: impl Into<String>) -> Self {
        Function::Symbol(name.into())
    }

    pub fn is_builtin(&self) -> bool {
        !matches!(self, Function::Symbol(_))
    }

    /// The function type of a built-in at its type parameters: `A` for
    /// `pi`, `iota` and `theta`, `A` and `B` for `pr`.
    pub fn builtin_type(&self, a: &Type, b: Option<&Type>) -> Option<FunctionType> {
        let (arg, result) = match self {
            Function::Symbol(_) => return None,
            Function::Dproj(_) => (a.d(), a.clone()),
            Function::Dinj(_) => (a.clone(), a.d()),
            Function::DmonadSum(n) => (a.d_n(n + 1), a.d()),
            Function::ProdProj(i) => {
                let b = b?;
                (Type::product(a.clone(), b.clone()), if *i == 0 { a.clone() } else { b.clone() })
            }
        };
        Some(FunctionType { args: alloc::vec![arg], result })
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Function::Symbol(name) => f.write_str(name),
            Function::Dproj(i) => write!(f, "pi{i}"),
            Function::ProdProj(i) => write!(f, "pr{i}"),
            Function::Dinj(i) => write!(f, "iota{i}"),
            Function::DmonadSum(n) => write!(f, "theta_{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionType {
    pub args: Vec<Type>,
    pub result: Type,
}

impl fmt::Display for FunctionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, a) in self.args.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ") -> {}", self.result)
    }
}

/// User function symbols with their types.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    functions: BTreeMap<String, FunctionType>,
}

impl Signature {
    pub fn new() -> Self {
        Signature::default()
    }

    pub fn declare(&mut self, name: impl Into<String>, ty: FunctionType) -> Option<FunctionType> {
        self.functions.insert(name.into(), ty)
    }

    pub fn get(&self, name: &str) -> Option<&FunctionType> {
        self.functions.get(name)
    }

    pub fn functions(&self) -> impl Iterator<Item = (&String, &FunctionType)> {
        self.functions.iter()
    }

    /// Type of `f`; `params` instantiates a built-in (see
    /// [`Function::builtin_type`]) and is ignored for user symbols.
    pub fn signature_of(&self, f: &Function, params: &[Type]) -> Option<FunctionType> {
        match f {
            Function::Symbol(name) => self.get(name).cloned(),
            _ => f.builtin_type(params.first()?, params.get(1)),
        }
    }
}

/// Terms. `App` carries a word of slot indices: `f^[1,0](..)` is the
/// partial derivative in slot 1 followed by the one in slot 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Pair(Box<Term>, Box<Term>),
    App { head: Function, word: Vec<u32>, args: Vec<Term> },
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn pair(a: Term, b: Term) -> Self {
        Term::Pair(Box::new(a), Box::new(b))
    }

    pub fn app(head: Function, word: Vec<u32>, args: Vec<Term>) -> Self {
        Term::App { head, word, args }
    }

    /// A unary built-in applied with the word `0^d`.
    pub fn builtin(head: Function, d: usize, arg: Term) -> Self {
        Term::app(head, alloc::vec![0; d], alloc::vec![arg])
    }

    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Var(_) => Vec::new(),
            Term::Pair(a, b) => alloc::vec![&**a, &**b],
            Term::App { args, .. } => args.iter().collect(),
        }
    }

    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    /// Replaces the child at `index` (0 and 1 for pairs, argument position
    /// for applications).
    pub fn with_child(&self, index: usize, child: Term) -> Term {
        match self {
            Term::Var(_) => panic!("variables have no children"),
            Term::Pair(a, b) => match index {
                0 => Term::Pair(Box::new(child), b.clone()),
                _ => Term::Pair(a.clone(), Box::new(child)),
            },
            Term::App { head, word, args } => {
                let mut args = args.clone();
                args[index] = child;
                Term::App { head: head.clone(), word: word.clone(), args }
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) => f.write_str(x),
            Term::Pair(a, b) => write!(f, "<{a}, {b}>"),
            Term::App { head, word, args } => {
                write!(f, "{head}")?;
                if !word.is_empty() {
                    f.write_str("^[")?;
                    for (k, l) in word.iter().enumerate() {
                        if k > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{l}")?;
                    }
                    f.write_str("]")?;
                }
                f.write_str("(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Typing context, in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    entries: Vec<(String, Type)>,
}

impl Context {
    pub fn new() -> Self {
        Context::default()
    }

    pub fn from_entries(entries: Vec<(String, Type)>) -> Self {
        Context { entries }
    }

    pub fn push(&mut self, name: impl Into<String>, ty: Type) {
        self.entries.push((name.into(), ty));
    }

    pub fn with(mut self, name: impl Into<String>, ty: Type) -> Self {
        self.push(name, ty);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Type> {
        self.entries.iter().rev().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.entries.iter().rposition(|(n, _)| n == name)
    }

    pub fn entries(&self) -> &[(String, Type)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The context with `x : A` replaced by `x : D A`.
    pub fn differentiate(&self, x: &str) -> Context {
        Context {
            entries: self
                .entries
                .iter()
                .map(|(n, t)| if n == x { (n.clone(), t.d()) } else { (n.clone(), t.clone()) })
                .collect(),
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (n, t)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}: {t}")?;
        }
        Ok(())
    }
}
