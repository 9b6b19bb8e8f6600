//! PCS model files: one `object` per ground type, one `interp` per symbol.
//!
//! ```text
//! object n { web = [e0, e1, e2]; predual = [[1, 1, 1]]; }
//! interp succ { entry (e1) -> e0 : 1; entry (e2) -> e1 : 1; }
//! ```
//!
//! An entry lists one atom per argument slot, so every interpretation is
//! multilinear by construction. Atoms of composite slots use the printed
//! labels of the object, e.g. `l.e0` or `d1.e2`.

use std::collections::BTreeSet;

use cohdiff_core::carrier::Morphism;
use cohdiff_core::object::Object;
use cohdiff_core::pcs::{leaf, Pcs, PcsBase, PcsError, PcsObject};
use cohdiff_core::poly::{Monomial, PolyMap, Polynomial};
use cohdiff_core::rational::{self, Rational};
use cohdiff_core::semantics::{Model, SemanticsError};
use cohdiff_core::syntax::Signature;

use crate::lex::{Cursor, Pos, SyntaxError, Tok};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("{pos}: {message}")]
    Invalid { pos: Pos, message: String },
    #[error("{pos}: {source}")]
    Semantics { pos: Pos, source: SemanticsError },
}

struct Entry {
    atoms: Vec<String>,
    result: String,
    coeff: Rational,
    pos: Pos,
}

struct Interp {
    name: String,
    entries: Vec<Entry>,
    pos: Pos,
}

/// Parses `text` and builds a model of `signature` in the PCS category.
/// Ground types are matched to objects by name.
pub fn load_model(text: &str, signature: &Signature) -> Result<Model<Pcs>, ModelError> {
    let mut cur = Cursor::new(text)?;
    let mut model = Model::new(Pcs::default(), signature.clone());
    let mut objects = BTreeSet::new();
    let mut interps = Vec::new();
    while !cur.at_eof() {
        let pos = cur.pos();
        match cur.peek() {
            Tok::Ident(kw) if kw == "object" => {
                cur.advance();
                let (name, base) = parse_object(&mut cur)?;
                if !objects.insert(name.clone()) {
                    return Err(invalid(pos, format!("object {name} defined twice")));
                }
                model.assign_ground(name, leaf(base));
            }
            Tok::Ident(kw) if kw == "interp" => {
                cur.advance();
                interps.push(parse_interp(&mut cur, pos)?);
            }
            _ => return cur.unexpected("`object` or `interp`").map_err(Into::into),
        }
    }
    let mut seen = BTreeSet::new();
    for interp in interps {
        if !seen.insert(interp.name.clone()) {
            return Err(invalid(interp.pos, format!("interp {} defined twice", interp.name)));
        }
        let f = build_symbol(&model, &interp)?;
        model
            .assign_symbol(&interp.name, f)
            .map_err(|source| ModelError::Semantics { pos: interp.pos, source })?;
    }
    Ok(model)
}

fn invalid(pos: Pos, message: String) -> ModelError {
    ModelError::Invalid { pos, message }
}

fn parse_object(cur: &mut Cursor) -> Result<(String, PcsBase), ModelError> {
    let pos = cur.pos();
    let name = cur.ident()?;
    cur.expect('{')?;
    let (mut web, mut predual) = (None, None);
    while !cur.accept('}') {
        let field_pos = cur.pos();
        let field = cur.ident()?;
        cur.expect('=')?;
        cur.expect('[')?;
        match field.as_str() {
            "web" if web.is_none() => web = Some(cur.list(']', atom)?),
            "predual" if predual.is_none() => {
                predual = Some(cur.list(']', |c| {
                    c.expect('[')?;
                    c.list(']', rational)
                })?)
            }
            "web" | "predual" => return Err(invalid(field_pos, format!("field {field} given twice"))),
            _ => return Err(invalid(field_pos, format!("unknown field {field}"))),
        }
        cur.expect(';')?;
    }
    let web = web.ok_or_else(|| invalid(pos, format!("object {name} has no web")))?;
    let predual = predual.ok_or_else(|| invalid(pos, format!("object {name} has no predual")))?;
    let base = PcsBase::new(name.clone(), web, predual).map_err(|e| invalid(pos, e.to_string()))?;
    Ok((name, base))
}

fn parse_interp(cur: &mut Cursor, pos: Pos) -> Result<Interp, ModelError> {
    let name = cur.ident()?;
    cur.expect('{')?;
    let mut entries = Vec::new();
    while !cur.accept('}') {
        let pos = cur.pos();
        cur.keyword("entry")?;
        cur.expect('(')?;
        let atoms = cur.list(')', atom)?;
        cur.expect_arrow()?;
        let result = atom(cur)?;
        cur.expect(':')?;
        let coeff = rational(cur)?;
        cur.expect(';')?;
        entries.push(Entry { atoms, result, coeff, pos });
    }
    Ok(Interp { name, entries, pos })
}

/// A dotted atom label such as `e0`, `l.d1.e2` or `*`.
fn atom(cur: &mut Cursor) -> Result<String, SyntaxError> {
    let mut label = String::new();
    loop {
        match cur.peek().clone() {
            Tok::Ident(s) | Tok::Nat(s) => label.push_str(&s),
            Tok::Punct('*') => label.push('*'),
            _ => return cur.unexpected("an atom"),
        }
        cur.advance();
        if !cur.accept('.') {
            return Ok(label);
        }
        label.push('.');
    }
}

fn rational(cur: &mut Cursor) -> Result<Rational, SyntaxError> {
    let pos = cur.pos();
    let mut text = String::new();
    if cur.accept('-') {
        text.push('-');
    }
    text.push_str(&cur.nat_text()?);
    if cur.accept('/') {
        text.push('/');
        text.push_str(&cur.nat_text()?);
    }
    rational::parse(&text).ok_or(SyntaxError { pos, message: format!("invalid rational {text}") })
}

fn build_symbol(model: &Model<Pcs>, interp: &Interp) -> Result<Morphism<std::sync::Arc<PcsBase>>, ModelError> {
    let name = &interp.name;
    let ty = model
        .signature()
        .get(name)
        .ok_or_else(|| invalid(interp.pos, format!("function {name} is not declared in the program")))?
        .clone();
    let sem = |e: SemanticsError| ModelError::Semantics { pos: interp.pos, source: e };
    let slots: Vec<PcsObject> = ty.args.iter().map(|a| model.interp_type(a)).collect::<Result<_, _>>().map_err(sem)?;
    let cod = model.interp_type(&ty.result).map_err(sem)?;
    let offsets = Object::offsets(&slots);
    let mut outputs = vec![Polynomial::zero(); cod.size()];
    let mut seen = BTreeSet::new();
    for e in &interp.entries {
        if e.atoms.len() != slots.len() {
            return Err(invalid(e.pos, format!("{name} takes {} arguments, entry lists {}", slots.len(), e.atoms.len())));
        }
        let mut vars = Vec::with_capacity(slots.len());
        for (k, (label, slot)) in e.atoms.iter().zip(&slots).enumerate() {
            let a = slot
                .atom_index(label)
                .ok_or_else(|| invalid(e.pos, format!("{label} is not an atom of argument {k} ({slot})")))?;
            vars.push((offsets[k] + a) as u32);
        }
        let b = cod
            .atom_index(&e.result)
            .ok_or_else(|| invalid(e.pos, format!("{} is not an atom of the result ({cod})", e.result)))?;
        if !seen.insert((vars.clone(), b)) {
            return Err(invalid(e.pos, format!("entry of {name} given twice")));
        }
        outputs[b].add_term(Monomial::from_vars(vars), e.coeff.clone());
    }
    let dom = Object::product_n(&slots);
    let map = PolyMap::new(dom.size(), outputs);
    model.inst.morphism(dom, cod, map).map_err(|e: PcsError| invalid(interp.pos, format!("interp {name}: {e}")))
}
