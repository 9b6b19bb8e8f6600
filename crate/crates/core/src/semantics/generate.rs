//! Random well-typed terms over a signature whose types are all built from
//! one ground type. Generation is type directed; leaves reach the target
//! type from a context variable through `pr`, `pi` and `iota`, so every
//! request can be met.

use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::syntax::{Context, Function, Signature, Term, Type};

#[derive(Clone, Debug)]
pub struct GenConfig {
    /// Upper bound on the depth of generated terms.
    pub max_depth: usize,
    /// How many user symbols may be nested, which bounds the degree of the
    /// interpretation.
    pub max_nesting: usize,
    /// Upper bound on the `D`-depth of intermediate types.
    pub max_d: u32,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { max_depth: 5, max_nesting: 2, max_d: 3 }
    }
}

/// `ctx, x : a |- t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub ctx: Context,
    pub x: String,
    pub a: Type,
    pub t: Term,
}

impl Case {
    pub fn full_context(&self) -> Context {
        self.ctx.clone().with(self.x.clone(), self.a.clone())
    }
}

struct Gen<'a> {
    rng: &'a mut ChaCha8Rng,
    sig: &'a Signature,
    ctx: &'a Context,
    config: &'a GenConfig,
}

fn depth(t: &Type) -> u32 {
    match t {
        Type::Ground { depth, .. } => *depth,
        Type::Product(a, b) => depth(a).max(depth(b)),
    }
}

impl Gen<'_> {
    fn index(&mut self) -> u8 {
        self.rng.gen_range(0..2)
    }

    fn term(&mut self, target: &Type, budget: usize, nesting: usize) -> Term {
        if budget <= 1 {
            return self.leaf(target);
        }
        let max_d = self.config.max_d;
        let mut options: Vec<(u32, u8)> = Vec::new();
        options.push((2, 0));
        if matches!(target, Type::Product(..)) {
            options.push((3, 1));
        }
        if let Type::Ground { depth, .. } = target {
            if nesting > 0 && *depth <= 2 {
                options.push((5, 2));
            }
        }
        if depth(target) < max_d {
            options.push((4, 3));
            options.push((1, 6));
        }
        if target.min_depth() >= 1 {
            options.push((1, 4));
            if depth(target) < max_d {
                options.push((3, 5));
            }
        }
        let kind = options.choose_weighted(self.rng, |o| o.0).unwrap().1;
        match kind {
            1 => match target {
                Type::Product(a, b) => Term::pair(self.term(a, budget - 1, nesting), self.term(b, budget - 1, nesting)),
                _ => unreachable!(),
            },
            2 => self.app(target, budget, nesting).unwrap_or_else(|| self.leaf(target)),
            3 => {
                // pi_i^(d) : D^(d+1) A -> D^d A, aimed at a redex below.
                let d = self.rng.gen_range(0..=target.min_depth());
                let i = self.index();
                let arg = self.headed(&target.d(), d as usize, budget - 1, nesting);
                Term::builtin(Function::Dproj(i), d as usize, arg)
            }
            4 => {
                let inner = target.undepth(1).unwrap();
                let d = self.rng.gen_range(0..=inner.min_depth());
                let i = self.index();
                Term::builtin(Function::Dinj(i), d as usize, self.term(&inner, budget - 1, nesting))
            }
            5 => self.theta(target, None, budget, nesting),
            6 => {
                let other = if self.rng.gen_bool(0.5) { Type::ground(self.ground()) } else { Type::ground(self.ground()).d() };
                let i = self.index();
                let arg = if i == 0 { Type::product(target.clone(), other.clone()) } else { Type::product(other.clone(), target.clone()) };
                let d = self.rng.gen_range(0..=target.min_depth().min(other.min_depth()));
                Term::builtin(Function::ProdProj(i), d as usize, self.term(&arg, budget - 1, nesting))
            }
            _ => self.leaf(target),
        }
    }

    fn ground(&self) -> String {
        match &self.ctx.entries()[0].1 {
            Type::Ground { name, .. } => name.clone(),
            t => first_ground(t),
        }
    }

    /// A term of type `ty` whose head is, when possible, a redex partner
    /// for `pi^(d)`: an injection or sum at the same `d`, or a user symbol
    /// with a longer word.
    fn headed(&mut self, ty: &Type, d: usize, budget: usize, nesting: usize) -> Term {
        if budget <= 1 {
            return self.leaf(ty);
        }
        match self.rng.gen_range(0..4) {
            0 if ty.min_depth() as usize > d => {
                let inner = ty.undepth(1).unwrap();
                let i = self.index();
                Term::builtin(Function::Dinj(i), d, self.term(&inner, budget - 1, nesting))
            }
            1 if ty.min_depth() as usize > d && depth(ty) < self.config.max_d => self.theta(ty, Some(d), budget, nesting),
            2 => self.app(ty, budget, nesting).unwrap_or_else(|| self.term(ty, budget, nesting)),
            _ => self.term(ty, budget, nesting),
        }
    }

    /// `theta_n^(d) : D^(d+n+1) A -> D^(d+1) A` producing `target`.
    fn theta(&mut self, target: &Type, d: Option<usize>, budget: usize, nesting: usize) -> Term {
        let room = self.config.max_d.saturating_sub(depth(target));
        let n = self.rng.gen_range(0..=room.min(2));
        let d = d.unwrap_or_else(|| self.rng.gen_range(0..target.min_depth()) as usize);
        let arg = target.d_n(n);
        Term::builtin(Function::DmonadSum(n), d, self.term(&arg, budget - 1, nesting))
    }

    /// A user symbol whose word has the `D`-depth of `target`.
    fn app(&mut self, target: &Type, budget: usize, nesting: usize) -> Option<Term> {
        let Type::Ground { name, depth } = target else { return None };
        if nesting == 0 {
            return None;
        }
        let candidates: Vec<(String, Vec<Type>)> = self
            .sig
            .functions()
            .filter(|(_, ft)| matches!(&ft.result, Type::Ground { name: r, depth: 0 } if r == name))
            .filter(|(_, ft)| !ft.args.is_empty() || *depth == 0)
            .map(|(n, ft)| (n.clone(), ft.args.clone()))
            .collect();
        let (f, args) = candidates.choose(self.rng)?.clone();
        let word: Vec<u32> = (0..*depth).map(|_| self.rng.gen_range(0..args.len() as u32)).collect();
        let args = args
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let count = word.iter().filter(|&&l| l as usize == i).count() as u32;
                self.term(&a.d_n(count), budget - 1, nesting - 1)
            })
            .collect();
        Some(Term::app(Function::symbol(f), word, args))
    }

    fn leaf(&mut self, target: &Type) -> Term {
        let (x, ty) = self.ctx.entries().choose(self.rng).expect("nonempty context").clone();
        self.reach(Term::var(x), &ty, target)
    }

    /// Turns `t : from` into a term of type `target`.
    fn reach(&mut self, t: Term, from: &Type, target: &Type) -> Term {
        if from == target {
            return t;
        }
        match (from, target) {
            (Type::Product(l, r), _) if !matches!(target, Type::Product(..)) || self.rng.gen_bool(0.5) => {
                let i = self.index();
                let part = if i == 0 { l } else { r };
                self.reach(Term::builtin(Function::ProdProj(i), 0, t), part, target)
            }
            (_, Type::Product(a, b)) => {
                let left = self.reach(t.clone(), from, a);
                let right = self.reach(t, from, b);
                Term::pair(left, right)
            }
            (Type::Ground { depth: h, .. }, Type::Ground { depth: k, .. }) => {
                let i = self.index();
                if h > k {
                    self.reach(Term::builtin(Function::Dproj(i), 0, t), &from.undepth(1).unwrap(), target)
                } else {
                    self.reach(Term::builtin(Function::Dinj(i), 0, t), &from.d(), target)
                }
            }
            _ => unreachable!(),
        }
    }
}

fn first_ground(t: &Type) -> String {
    match t {
        Type::Ground { name, .. } => name.clone(),
        Type::Product(a, _) => first_ground(a),
    }
}

/// A random term of type `target` in `ctx`, of depth at most
/// `config.max_depth`. All types involved must share one ground type.
pub fn random_term(rng: &mut ChaCha8Rng, sig: &Signature, ctx: &Context, target: &Type, config: &GenConfig) -> Term {
    loop {
        let budget = rng.gen_range(3.min(config.max_depth)..=config.max_depth.max(2) - 1);
        let t = Gen { rng: &mut *rng, sig, ctx, config }.term(target, budget, config.max_nesting);
        if t.depth() <= config.max_depth {
            return t;
        }
    }
}

/// Types used for variables and results: `n`, `D n`, `n & n`.
pub fn small_types(ground: &str) -> [Type; 3] {
    let n = Type::ground(ground);
    [n.clone(), n.d(), Type::product(n.clone(), n)]
}

/// A context `y : C` (present half of the time), a variable `x : A` and a
/// term over both.
pub fn random_case(rng: &mut ChaCha8Rng, sig: &Signature, ground: &str, config: &GenConfig) -> Case {
    let types = small_types(ground);
    let mut ctx = Context::new();
    if rng.gen_bool(0.5) {
        ctx.push("y", types.choose(rng).unwrap().clone());
    }
    let a = types.choose(rng).unwrap().clone();
    let target = types.choose(rng).unwrap().clone();
    let full = ctx.clone().with("x", a.clone());
    let t = random_term(rng, sig, &full, &target, config);
    Case { ctx, x: String::from("x"), a, t }
}

/// Wraps a derivative in a projection, which starts the elimination of
/// the `theta` produced by differentiation: `ctx, x : D A |- pi_i(dt/dx)`.
pub fn projected_derivative(case: &Case, i: u8) -> (Context, Term) {
    let dt = crate::syntax::differentiate(&case.t, &case.x);
    let ctx = case.ctx.clone().with(case.x.clone(), case.a.d());
    (ctx, Term::builtin(Function::Dproj(i), 0, dt))
}
