use alloc::vec::Vec;

use super::term::{Function, Term};

/// Syntactic derivative `∂t/∂x`:
///
/// * `x` stays `x`, any other variable `y` becomes `iota_0(y)`;
/// * pairs are differentiated componentwise;
/// * `f^w(t_0, .., t_n)` becomes `theta_n(f^(w n .. 1 0)(∂t_0, .., ∂t_n))`.
///
/// A constant `c()` (arity zero) becomes `iota_0(c())`.
pub fn differentiate(t: &Term, x: &str) -> Term {
    match t {
        Term::Var(y) if y == x => t.clone(),
        Term::Var(_) => Term::builtin(Function::Dinj(0), 0, t.clone()),
        Term::Pair(a, b) => Term::pair(differentiate(a, x), differentiate(b, x)),
        Term::App { head, word, args } => {
            if args.is_empty() {
                return Term::builtin(Function::Dinj(0), 0, t.clone());
            }
            let n = args.len() as u32 - 1;
            let mut word = word.clone();
            word.extend((0..=n).rev());
            let args: Vec<Term> = args.iter().map(|a| differentiate(a, x)).collect();
            let inner = Term::app(head.clone(), word, args);
            Term::builtin(Function::DmonadSum(n), 0, inner)
        }
    }
}
