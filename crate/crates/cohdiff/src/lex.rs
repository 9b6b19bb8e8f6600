//! Tokenizer shared by the program and model file formats.

use std::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Nat(String),
    Arrow,
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Nat(s) => write!(f, "number {s}"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
}

const PUNCT: &str = "()[]{}<>,;:=&^/-.*";

/// Splits `text` into tokens. `//` and `#` start line comments.
pub fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' || (c == '/' && text_at(&chars, 1) == Some('/')) {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_') {
                s.push(bump(&mut chars).unwrap());
            }
            out.push((Tok::Ident(s), pos));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(char::is_ascii_digit) {
                s.push(bump(&mut chars).unwrap());
            }
            out.push((Tok::Nat(s), pos));
        } else if c == '-' && text_at(&chars, 1) == Some('>') {
            bump(&mut chars);
            bump(&mut chars);
            out.push((Tok::Arrow, pos));
        } else if PUNCT.contains(c) {
            bump(&mut chars);
            out.push((Tok::Punct(c), pos));
        } else {
            return Err(SyntaxError { pos, message: format!("unexpected character {c:?}") });
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

fn text_at(chars: &std::iter::Peekable<std::str::Chars>, k: usize) -> Option<char> {
    chars.clone().nth(k)
}

/// A cursor over tokens with the usual expect/accept helpers.
pub struct Cursor {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Cursor {
    pub fn new(text: &str) -> Result<Self, SyntaxError> {
        Ok(Cursor { toks: tokenize(text)?, at: 0 })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    pub fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].0
    }

    pub fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    pub fn advance(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    pub fn error<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError { pos: self.pos(), message: message.into() })
    }

    pub fn unexpected<T>(&self, wanted: &str) -> Result<T, SyntaxError> {
        self.error(format!("expected {wanted}, found {}", self.peek()))
    }

    pub fn accept(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.advance();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.accept(c) {
            Ok(())
        } else {
            self.unexpected(&format!("`{c}`"))
        }
    }

    pub fn expect_arrow(&mut self) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::Arrow {
            self.advance();
            Ok(())
        } else {
            self.unexpected("`->`")
        }
    }

    pub fn ident(&mut self) -> Result<String, SyntaxError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.advance();
                Ok(s)
            }
            _ => self.unexpected("an identifier"),
        }
    }

    pub fn keyword(&mut self, kw: &str) -> Result<(), SyntaxError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.advance();
                Ok(())
            }
            _ => self.unexpected(&format!("`{kw}`")),
        }
    }

    pub fn nat(&mut self) -> Result<u32, SyntaxError> {
        match self.peek().clone() {
            Tok::Nat(s) => match s.parse() {
                Ok(n) => {
                    self.advance();
                    Ok(n)
                }
                Err(_) => self.error(format!("number {s} is too large")),
            },
            _ => self.unexpected("a number"),
        }
    }

    /// The digits of a number token, unparsed.
    pub fn nat_text(&mut self) -> Result<String, SyntaxError> {
        match self.peek().clone() {
            Tok::Nat(s) => {
                self.advance();
                Ok(s)
            }
            _ => self.unexpected("a number"),
        }
    }

    pub fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    /// Comma separated items up to `close`, which is consumed.
    pub fn list<T>(
        &mut self,
        close: char,
        mut item: impl FnMut(&mut Self) -> Result<T, SyntaxError>,
    ) -> Result<Vec<T>, SyntaxError> {
        let mut out = Vec::new();
        if self.accept(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.accept(close) {
                return Ok(out);
            }
            if !self.accept(',') {
                return self.unexpected(&format!("`,` or `{close}`"));
            }
        }
    }
}
