//! Program files: function declarations and named terms in context.
//!
//! ```text
//! fn f : (n, n & n) -> n;
//! term t [x: n, y: D n] = f^[0](y, <x, x>);
//! ```

use cohdiff_core::syntax::{Context, Function, FunctionType, Signature, Term, Type};

use crate::lex::{Cursor, Pos, SyntaxError, Tok};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermDecl {
    pub name: String,
    pub ctx: Context,
    pub term: Term,
    pub pos: Pos,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    pub signature: Signature,
    pub terms: Vec<TermDecl>,
}

impl Program {
    pub fn term(&self, name: &str) -> Option<&TermDecl> {
        self.terms.iter().find(|d| d.name == name)
    }
}

pub fn parse_program(text: &str) -> Result<Program, SyntaxError> {
    let mut cur = Cursor::new(text)?;
    let mut program = Program::default();
    while !cur.at_eof() {
        let pos = cur.pos();
        match cur.peek() {
            Tok::Ident(kw) if kw == "fn" => {
                cur.advance();
                let name = cur.ident()?;
                if builtin(&name).is_some() {
                    return Err(SyntaxError { pos, message: format!("{name} is a built-in function") });
                }
                cur.expect(':')?;
                cur.expect('(')?;
                let args = cur.list(')', parse_type)?;
                cur.expect_arrow()?;
                let result = parse_type(&mut cur)?;
                cur.expect(';')?;
                if program.signature.declare(name.clone(), FunctionType { args, result }).is_some() {
                    return Err(SyntaxError { pos, message: format!("function {name} declared twice") });
                }
            }
            Tok::Ident(kw) if kw == "term" => {
                cur.advance();
                let name = cur.ident()?;
                let mut ctx = Context::new();
                if cur.accept('[') {
                    for (x, ty) in cur.list(']', |c| {
                        let x = c.ident()?;
                        c.expect(':')?;
                        Ok((x, parse_type(c)?))
                    })? {
                        ctx.push(x, ty);
                    }
                }
                cur.expect('=')?;
                let term = parse_term(&mut cur)?;
                cur.expect(';')?;
                if program.term(&name).is_some() {
                    return Err(SyntaxError { pos, message: format!("term {name} defined twice") });
                }
                program.terms.push(TermDecl { name, ctx, term, pos });
            }
            _ => return cur.unexpected("`fn` or `term`"),
        }
    }
    Ok(program)
}

/// Parses a single term, e.g. from the command line.
pub fn parse_term_str(text: &str) -> Result<Term, SyntaxError> {
    let mut cur = Cursor::new(text)?;
    let t = parse_term(&mut cur)?;
    if !cur.at_eof() {
        return cur.unexpected("end of term");
    }
    Ok(t)
}

pub fn parse_type_str(text: &str) -> Result<Type, SyntaxError> {
    let mut cur = Cursor::new(text)?;
    let t = parse_type(&mut cur)?;
    if !cur.at_eof() {
        return cur.unexpected("end of type");
    }
    Ok(t)
}

fn parse_type(cur: &mut Cursor) -> Result<Type, SyntaxError> {
    let mut ty = parse_type_atom(cur)?;
    while cur.accept('&') {
        ty = Type::product(ty, parse_type_atom(cur)?);
    }
    Ok(ty)
}

fn parse_type_atom(cur: &mut Cursor) -> Result<Type, SyntaxError> {
    match cur.peek().clone() {
        Tok::Ident(s) if s == "D" => {
            cur.advance();
            Ok(parse_type_atom(cur)?.d())
        }
        Tok::Ident(s) => {
            cur.advance();
            Ok(Type::ground(s))
        }
        Tok::Punct('(') => {
            cur.advance();
            let ty = parse_type(cur)?;
            cur.expect(')')?;
            Ok(ty)
        }
        _ => cur.unexpected("a type"),
    }
}

fn builtin(name: &str) -> Option<Function> {
    Some(match name {
        "pi0" => Function::Dproj(0),
        "pi1" => Function::Dproj(1),
        "pr0" => Function::ProdProj(0),
        "pr1" => Function::ProdProj(1),
        "iota0" => Function::Dinj(0),
        "iota1" => Function::Dinj(1),
        _ => {
            let n = name.strip_prefix("theta_")?;
            if n.is_empty() || !n.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            Function::DmonadSum(n.parse().ok()?)
        }
    })
}

fn parse_term(cur: &mut Cursor) -> Result<Term, SyntaxError> {
    if cur.accept('<') {
        let a = parse_term(cur)?;
        cur.expect(',')?;
        let b = parse_term(cur)?;
        cur.expect('>')?;
        return Ok(Term::pair(a, b));
    }
    let name = cur.ident()?;
    let is_app = matches!(cur.peek(), Tok::Punct('(' | '^'));
    if !is_app {
        return Ok(Term::var(name));
    }
    let mut word = Vec::new();
    if cur.accept('^') {
        cur.expect('[')?;
        word = cur.list(']', Cursor::nat)?;
    }
    cur.expect('(')?;
    let args = cur.list(')', parse_term)?;
    let head = builtin(&name).unwrap_or(Function::Symbol(name));
    Ok(Term::app(head, word, args))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declarations() {
        let p = parse_program("fn f : (a, b) -> c;\nterm t = <x, y>;\nterm u = f^[1,0](x, y);").unwrap();
        let f = p.signature.get("f").unwrap();
        assert_eq!(f.args, vec![Type::ground("a"), Type::ground("b")]);
        assert_eq!(f.result, Type::ground("c"));
        assert_eq!(p.term("t").unwrap().term, Term::pair(Term::var("x"), Term::var("y")));
        assert_eq!(
            p.term("u").unwrap().term,
            Term::app(Function::symbol("f"), vec![1, 0], vec![Term::var("x"), Term::var("y")])
        );
    }

    #[test]
    fn type_precedence() {
        let n = Type::ground("n");
        assert_eq!(parse_type_str("D n & n").unwrap(), Type::product(n.d(), n.clone()));
        assert_eq!(parse_type_str("D (n & n)").unwrap(), Type::product(n.d(), n.d()));
        assert_eq!(
            parse_type_str("n & n & n").unwrap(),
            Type::product(Type::product(n.clone(), n.clone()), n.clone())
        );
    }

    #[test]
    fn builtins_and_constants() {
        let t = parse_term_str("pi1(theta_2(iota0^[0](c())))").unwrap();
        assert_eq!(t.to_string(), "pi1(theta_2(iota0^[0](c())))");
        assert_eq!(parse_term_str("theta_x(y)").unwrap(), Term::app(Function::symbol("theta_x"), vec![], vec![Term::var("y")]));
    }

    #[test]
    fn errors_are_located() {
        let e = parse_program("fn f : (n) -> n;\nterm t = f(x;").unwrap_err();
        assert_eq!(e.pos, Pos { line: 2, col: 13 });
        let e = parse_program("fn f : (n) -> n;\nfn f : (n) -> n;").unwrap_err();
        assert_eq!(e.pos.line, 2);
        assert!(parse_program("term t = $;").is_err());
    }
}
