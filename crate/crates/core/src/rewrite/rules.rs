use core::fmt;

use super::multiset::TermMultiset;
use crate::syntax::{Function, Term};

/// The six root rules. `d` below is the length of the outer word.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// `pr_i^(d) <t0, t1>  ->  [t_i]`.
    PrPair,
    /// `pi_i^(d) f^(z j x)(..t_j..)  ->  [f^(z x)(.., pi_i^(|x|_j)(t_j), ..)]` when `|x| = d`.
    PiApp,
    /// `pi_i^(d) iota_i^(d) t  ->  [t]`.
    PiIota,
    /// `pi_i^(d) iota_(1-i)^(d) t  ->  []`.
    PiIotaOther,
    /// `pi_0^(d) theta_n^(d) t  ->  [(pi_0^(d))^(n+1) t]`.
    Pi0Theta,
    /// `pi_1^(d) theta_n^(d) t  ->  sum_k [(pi_0^(d))^k pi_1^(d) (pi_0^(d))^(n-k) t]`.
    Pi1Theta,
}

impl Rule {
    pub const ALL: [Rule; 6] = [Rule::PrPair, Rule::PiApp, Rule::PiIota, Rule::PiIotaOther, Rule::Pi0Theta, Rule::Pi1Theta];

    pub fn name(self) -> &'static str {
        match self {
            Rule::PrPair => "pr-pair",
            Rule::PiApp => "pi-app",
            Rule::PiIota => "pi-iota",
            Rule::PiIotaOther => "pi-iota-other",
            Rule::Pi0Theta => "pi0-theta",
            Rule::Pi1Theta => "pi1-theta",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn pis(i: u8, d: usize, times: usize, t: Term) -> Term {
    (0..times).fold(t, |acc, _| Term::builtin(Function::Dproj(i), d, acc))
}

/// Contracts a redex at the root, if there is one. At most one rule
/// matches: rule `PiApp` needs an inner word longer than the outer one,
/// the rules on `iota` and `theta` need equal lengths.
pub fn step_root(t: &Term) -> Option<(Rule, TermMultiset)> {
    let Term::App { head, word, args } = t else { return None };
    let d = word.len();
    match head {
        Function::ProdProj(i) => match &args[0] {
            Term::Pair(a, b) => Some((Rule::PrPair, TermMultiset::singleton(if *i == 0 { (**a).clone() } else { (**b).clone() }))),
            _ => None,
        },
        Function::Dproj(i) => {
            let Term::App { head: inner, word: inner_word, args: inner_args } = &args[0] else { return None };
            let i = *i;
            if inner_word.len() > d {
                let split = inner_word.len() - d - 1;
                let j = inner_word[split] as usize;
                let tail = &inner_word[split + 1..];
                let mut new_word = inner_word[..split].to_vec();
                new_word.extend_from_slice(tail);
                let hits = tail.iter().filter(|&&l| l as usize == j).count();
                let mut new_args = inner_args.clone();
                new_args[j] = Term::builtin(Function::Dproj(i), hits, inner_args[j].clone());
                return Some((Rule::PiApp, TermMultiset::singleton(Term::app(inner.clone(), new_word, new_args))));
            }
            if inner_word.len() < d {
                return None;
            }
            let body = inner_args[0].clone();
            match inner {
                Function::Dinj(k) if *k == i => Some((Rule::PiIota, TermMultiset::singleton(body))),
                Function::Dinj(_) => Some((Rule::PiIotaOther, TermMultiset::empty())),
                Function::DmonadSum(n) => {
                    let n = *n as usize;
                    if i == 0 {
                        Some((Rule::Pi0Theta, TermMultiset::singleton(pis(0, d, n + 1, body))))
                    } else {
                        let members = (0..=n).map(|k| pis(0, d, k, pis(1, d, 1, pis(0, d, n - k, body.clone()))));
                        Some((Rule::Pi1Theta, members.collect()))
                    }
                }
                _ => None,
            }
        }
        _ => None,
    }
}
