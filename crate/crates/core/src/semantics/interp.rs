use alloc::vec::Vec;

use super::model::{Model, SemanticsError};
use crate::ccdc::derived::{self as dv, d_iter, theta_iter};
use crate::ccdc::Ccdc;
use crate::rewrite::TermMultiset;
use crate::syntax::{app_type, typecheck, Context, Function, Term, Type};

impl<I: Ccdc> Model<I> {
    /// `[[t]] : [[ctx]] -> [[A]]` where `ctx |- t : A`.
    pub fn interp_term(&self, ctx: &Context, t: &Term) -> Result<I::Morphism, SemanticsError> {
        typecheck(self.signature(), ctx, t)?;
        let slots = self.interp_slots(ctx)?;
        let dom = dv::product_n(&self.inst, &slots);
        Ok(self.interp(ctx, &slots, &dom, t)?.0)
    }

    fn interp(
        &self,
        ctx: &Context,
        slots: &[I::Object],
        dom: &I::Object,
        t: &Term,
    ) -> Result<(I::Morphism, Type), SemanticsError> {
        let inst = &self.inst;
        match t {
            Term::Var(x) => {
                let k = ctx.position(x).expect("typechecked");
                Ok((dv::nary_proj(inst, slots, k)?, ctx.entries()[k].1.clone()))
            }
            Term::Pair(a, b) => {
                let (fa, ta) = self.interp(ctx, slots, dom, a)?;
                let (fb, tb) = self.interp(ctx, slots, dom, b)?;
                Ok((inst.prod_pair(&fa, &fb)?, Type::product(ta, tb)))
            }
            Term::App { head, word, args } => {
                let mut parts = Vec::with_capacity(args.len());
                let mut types = Vec::with_capacity(args.len());
                for a in args {
                    let (f, ty) = self.interp(ctx, slots, dom, a)?;
                    parts.push(f);
                    types.push(ty);
                }
                let result = app_type(self.signature(), head, word, &types)?;
                let f = self.interp_head(head, word, &types)?;
                let tuple = dv::nary_pair(inst, &parts, dom)?;
                Ok((inst.compose(&f, &tuple)?, result))
            }
        }
    }

    /// `D_word [[head]]`, the word read from left to right.
    fn interp_head(&self, head: &Function, word: &[u32], args: &[Type]) -> Result<I::Morphism, SemanticsError> {
        let inst = &self.inst;
        let d = word.len() as u32;
        let at = |k: u32| self.interp_type(&args[0].undepth(k).expect("typechecked"));
        let f = match head {
            Function::Symbol(name) => {
                let ty = self.signature().get(name).expect("typechecked");
                let slots = ty.args.iter().map(|a| self.interp_type(a)).collect::<Result<Vec<_>, _>>()?;
                let letters: Vec<usize> = word.iter().map(|&l| l as usize).collect();
                return Ok(dv::partial_word(inst, self.symbol(name)?, &slots, &letters)?.0);
            }
            Function::Dproj(i) => inst.proj_d(*i, &at(d + 1)?),
            Function::Dinj(i) => inst.inj_d(*i, &at(d)?)?,
            Function::DmonadSum(n) => theta_iter(inst, *n, &at(d + n + 1)?)?,
            Function::ProdProj(i) => match &args[0] {
                Type::Product(a, b) => {
                    let (a, b) = (a.undepth(d).expect("typechecked"), b.undepth(d).expect("typechecked"));
                    inst.prod_proj(*i, &self.interp_type(&a)?, &self.interp_type(&b)?)
                }
                _ => unreachable!("typechecked"),
            },
        };
        // A unary function has the strength as identity, so D_0 is D.
        Ok(d_iter(inst, &f, d)?)
    }

    /// `[[L]]`, the sum of the members' interpretations, or `None` when they
    /// are not summable. `ty` is the common type; `bound`, when given, is a
    /// morphism known to dominate every partial sum.
    pub fn interp_multiset(
        &self,
        ctx: &Context,
        l: &TermMultiset,
        ty: &Type,
        bound: Option<&I::Morphism>,
    ) -> Result<Option<I::Morphism>, SemanticsError> {
        let mut family = Vec::with_capacity(l.len());
        for t in l.iter() {
            if &typecheck(self.signature(), ctx, t)? != ty {
                return Err(SemanticsError::Heterogeneous);
            }
            family.push(self.interp_term(ctx, t)?);
        }
        let dom = self.interp_ctx(ctx)?;
        let cod = self.interp_type(ty)?;
        Ok(dv::n_ary_sum(&self.inst, &family, &dom, &cod, bound)?)
    }
}
