use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::model::{Model, SemanticsError};
use crate::ccdc::Ccdc;
use crate::rewrite::{normalize, FuelExhausted, Trace};
use crate::syntax::{differentiate, typecheck, Context, Term, Type};

pub const DIFFERENTIAL: &str = "differential";
pub const INVARIANCE: &str = "invariance";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: &'static str,
    pub term: Term,
    pub holds: bool,
    pub dumps: Vec<String>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "HOLDS" } else { "VIOLATED" };
        write!(f, "THEOREM {} {} term={}", self.theorem, status, self.term)?;
        for d in &self.dumps {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InvarianceError {
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Fuel(#[from] FuelExhausted),
}

/// `[[dt/dx]] = D_1 [[t]]` where `ctx, x : a |- t`. For the empty context
/// `[[t]]` has a single slot and `D_1` is just `D`.
pub fn check_diff_theorem<I: Ccdc>(
    model: &Model<I>,
    ctx: &Context,
    x: &str,
    a: &Type,
    t: &Term,
) -> Result<Verdict, SemanticsError> {
    let inst = &model.inst;
    let full = ctx.clone().with(x, a.clone());
    typecheck(model.signature(), &full, t)?;
    let ft = model.interp_term(&full, t)?;
    let xa = model.interp_type(a)?;
    let rhs = if ctx.is_empty() {
        inst.partial_derivative(&ft, &[xa], 0)?
    } else {
        inst.partial_derivative(&ft, &[model.interp_ctx(ctx)?, xa], 1)?
    };
    let dt = differentiate(t, x);
    let lhs = model.interp_term(&ctx.clone().with(x, a.d()), &dt)?;
    let holds = lhs == rhs;
    let dumps = if holds { vec![] } else { vec![format!("derivative term = {dt}"), format!("lhs = {lhs}"), format!("rhs = {rhs}")] };
    Ok(Verdict { theorem: DIFFERENTIAL, term: t.clone(), holds, dumps })
}

/// Normalizes `t` and checks that every multiset along the trace is
/// summable with the same interpretation as `t`. Summability is certified
/// against `[[t]]` as the bound.
pub fn check_invariance<I: Ccdc>(
    model: &Model<I>,
    ctx: &Context,
    t: &Term,
    fuel: usize,
) -> Result<(Verdict, Trace), InvarianceError> {
    let ty = typecheck(model.signature(), ctx, t).map_err(SemanticsError::from)?;
    let expected = model.interp_term(ctx, t)?;
    let trace = normalize(t, fuel)?.trace;
    let mut dumps = Vec::new();
    for (k, l) in trace.snapshots().enumerate() {
        match model.interp_multiset(ctx, l, &ty, Some(&expected))? {
            None => dumps.push(format!("step {k}: {l} is not summable")),
            Some(m) if m != expected => {
                dumps.push(format!("step {k}: {l}"));
                dumps.push(format!("  interpretation = {m}"));
                dumps.push(format!("  expected = {expected}"));
            }
            Some(_) => continue,
        }
        break;
    }
    let verdict = Verdict { theorem: INVARIANCE, term: t.clone(), holds: dumps.is_empty(), dumps };
    Ok((verdict, trace))
}
