use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::multiset::TermMultiset;
use super::rules::{step_root, Rule};
use crate::syntax::Term;

/// Default step budget.
pub const DEFAULT_FUEL: usize = 10_000;

/// One reduction step of a multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    /// Index of the reduced member in canonical order.
    pub member: usize,
    /// Child indices from the member's root to the redex.
    pub path: Vec<usize>,
    /// The multiset after the step.
    pub result: TermMultiset,
}

impl Step {
    /// `member.child.child..`, e.g. `0` for the root of the first member.
    pub fn path_string(&self) -> String {
        let mut s = alloc::format!("{}", self.member);
        for c in &self.path {
            s.push_str(&alloc::format!(".{c}"));
        }
        s
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub start: TermMultiset,
    pub steps: Vec<Step>,
}

impl Trace {
    /// Every multiset along the reduction, the start included.
    pub fn snapshots(&self) -> impl Iterator<Item = &TermMultiset> {
        core::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.result))
    }

    pub fn last(&self) -> &TermMultiset {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }
}

impl fmt::Display for Trace {
    /// One line per step: `#<k> <rule> @ <path> : <multiset>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            writeln!(f, "#{} {} @ {} : {}", k + 1, s.rule, s.path_string(), s.result)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub result: TermMultiset,
    pub trace: Trace,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("reduction did not terminate within {fuel} steps")]
pub struct FuelExhausted {
    pub fuel: usize,
    pub trace: Trace,
}

/// Leftmost-outermost step inside a single term: the root first, then the
/// children from left to right.
///
/// A contractum is plugged back into its context member by member, which
/// is sound only when the context is additive in the hole. Applications
/// are (every function is linear in each argument) but pairs are not:
/// `<0, c>` is not `0`. So a redex below a pair is only contracted when its
/// contractum is a single term; other redexes there are left in place.
pub fn step_term(t: &Term) -> Option<(Rule, Vec<usize>, TermMultiset)> {
    step_at(t, true)
}

fn step_at(t: &Term, additive: bool) -> Option<(Rule, Vec<usize>, TermMultiset)> {
    if let Some((rule, result)) = step_root(t) {
        if additive || result.len() == 1 {
            return Some((rule, Vec::new(), result));
        }
    }
    let below = additive && matches!(t, Term::App { .. });
    for (k, child) in t.children().into_iter().enumerate() {
        if let Some((rule, mut path, result)) = step_at(child, below) {
            path.insert(0, k);
            return Some((rule, path, result.map(|u| t.with_child(k, u.clone()))));
        }
    }
    None
}

/// Reduces the first reducible member in canonical order.
pub fn step_multiset(l: &TermMultiset) -> Option<Step> {
    for (member, t) in l.iter().enumerate() {
        if let Some((rule, path, contractum)) = step_term(t) {
            let mut rest = l.clone();
            rest.remove(t);
            return Some(Step { rule, member, path, result: rest.union(&contractum) });
        }
    }
    None
}

pub fn is_normal(l: &TermMultiset) -> bool {
    l.iter().all(|t| step_term(t).is_none())
}

pub fn normalize(t: &Term, fuel: usize) -> Result<Normalized, FuelExhausted> {
    normalize_multiset(&TermMultiset::singleton(t.clone()), fuel)
}

pub fn normalize_multiset(l: &TermMultiset, fuel: usize) -> Result<Normalized, FuelExhausted> {
    let mut trace = Trace { start: l.clone(), steps: Vec::new() };
    loop {
        let current = trace.last();
        match step_multiset(current) {
            None => {
                let result = current.clone();
                return Ok(Normalized { result, trace });
            }
            Some(_) if trace.steps.len() >= fuel => return Err(FuelExhausted { fuel, trace }),
            Some(step) => trace.steps.push(step),
        }
    }
}
