use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::ccdc::derived::{self as dv, d_object_iter};
use crate::ccdc::{Ccdc, CcdcError};
use crate::syntax::{Context, Signature, Type, TypeError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SemanticsError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Model(#[from] CcdcError),
    #[error("ground type {0} has no interpretation")]
    UnassignedGround(String),
    #[error("function {0} has no interpretation")]
    UnassignedSymbol(String),
    #[error("function {0} is not declared in the signature")]
    Undeclared(String),
    #[error("interpretation of {name} has type {found}, expected {expected}")]
    Shape { name: String, expected: String, found: String },
    #[error("interpretation of {0} is not linear in every argument")]
    NotMultilinear(String),
    #[error("members of the multiset do not have a common type")]
    Heterogeneous,
}

/// A signature together with an interpretation of its ground types and
/// function symbols in a model.
pub struct Model<I: Ccdc> {
    pub inst: I,
    signature: Signature,
    ground: BTreeMap<String, I::Object>,
    symbols: BTreeMap<String, I::Morphism>,
}

impl<I: Ccdc> Model<I> {
    pub fn new(inst: I, signature: Signature) -> Self {
        Model { inst, signature, ground: BTreeMap::new(), symbols: BTreeMap::new() }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn assign_ground(&mut self, name: impl Into<String>, object: I::Object) {
        self.ground.insert(name.into(), object);
    }

    /// Checks the morphism against the declared type and that it is linear
    /// in each argument before recording it.
    pub fn assign_symbol(&mut self, name: &str, f: I::Morphism) -> Result<(), SemanticsError> {
        let ty = self.signature.get(name).ok_or_else(|| SemanticsError::Undeclared(name.into()))?.clone();
        let slots = ty.args.iter().map(|a| self.interp_type(a)).collect::<Result<Vec<_>, _>>()?;
        let dom = dv::product_n(&self.inst, &slots);
        let cod = self.interp_type(&ty.result)?;
        let (found_dom, found_cod) = (self.inst.domain(&f), self.inst.codomain(&f));
        if found_dom != dom || found_cod != cod {
            return Err(SemanticsError::Shape {
                name: name.into(),
                expected: format!("{dom} -> {cod}"),
                found: format!("{found_dom} -> {found_cod}"),
            });
        }
        if !dv::is_multilinear_by_derivative(&self.inst, &f, &slots)? {
            return Err(SemanticsError::NotMultilinear(name.into()));
        }
        self.symbols.insert(name.into(), f);
        Ok(())
    }

    pub fn symbol(&self, name: &str) -> Result<&I::Morphism, SemanticsError> {
        self.symbols.get(name).ok_or_else(|| SemanticsError::UnassignedSymbol(name.into()))
    }

    /// Symbols declared but not interpreted.
    pub fn missing(&self) -> Vec<String> {
        self.signature.functions().filter(|(n, _)| !self.symbols.contains_key(*n)).map(|(n, _)| n.clone()).collect()
    }

    pub fn interp_type(&self, ty: &Type) -> Result<I::Object, SemanticsError> {
        match ty {
            Type::Ground { name, depth } => {
                let base = self.ground.get(name).ok_or_else(|| SemanticsError::UnassignedGround(name.clone()))?;
                Ok(d_object_iter(&self.inst, base, *depth))
            }
            Type::Product(a, b) => Ok(self.inst.product(&self.interp_type(a)?, &self.interp_type(b)?)),
        }
    }

    /// One slot per variable.
    pub fn interp_slots(&self, ctx: &Context) -> Result<Vec<I::Object>, SemanticsError> {
        ctx.entries().iter().map(|(_, t)| self.interp_type(t)).collect()
    }

    /// The left-nested product of the slots; the terminal object for the
    /// empty context.
    pub fn interp_ctx(&self, ctx: &Context) -> Result<I::Object, SemanticsError> {
        Ok(dv::product_n(&self.inst, &self.interp_slots(ctx)?))
    }
}
