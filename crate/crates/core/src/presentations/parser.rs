//! Recursive-descent parser for presentation files.
//!
//! ```text
//! file   := "gens" ident+ ";" ("bound" uint ";")? ("rel" expr ";")*
//! expr   := term (("+"|"-") term)*
//! term   := ("+"|"-")? (scalar ("*"? factor ("*" factor)*)? | factor ("*" factor)*)
//! factor := (ident | "(" expr ")") ("^" uint)?
//! scalar := int ("/" uint)?
//! ```
//! `#` starts a comment running to the end of the line.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::Presentation;
use crate::algebra::{Field, NCPoly, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let token_start = i;
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if "+-*/^();".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Parse {
                line,
                column,
                message: format!("unexpected character {c:?}"),
            });
        };
        column += i - token_start;
        out.push(Spanned {
            tok,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let t = &self.toks[self.pos];
        Error::Parse {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(v)
            }
            _ => Err(self.error("expected an unsigned integer")),
        }
    }

    fn small_uint(&mut self) -> Result<u32> {
        let v = self.uint()?;
        u32::try_from(v).map_err(|_| self.error("exponent too large"))
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::Sym('('))
    }

    fn expr(&mut self) -> Result<NCPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Ring::add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = Ring::sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = if let Tok::Int(_) = self.peek() {
            let num = self.uint()?;
            let den = if self.eat('/') {
                let d = self.uint()?;
                if d.is_zero() {
                    return Err(self.error("zero denominator"));
                }
                d
            } else {
                BigInt::from(1)
            };
            let c = NCPoly::constant(Field::Rational.from_rational(&BigRational::new(num, den))?);
            let explicit = self.eat('*');
            if explicit || self.starts_factor() {
                Ring::mul(&c, &self.factor()?)
            } else {
                c
            }
        } else {
            self.factor()?
        };
        while self.eat('*') {
            acc = Ring::mul(&acc, &self.factor()?);
        }
        Ok(if negate { Ring::neg(&acc) } else { acc })
    }

    fn factor(&mut self) -> Result<NCPoly> {
        let base =
            match self.peek().clone() {
                Tok::Ident(name) => {
                    let t = self.bump();
                    let gen = self.names.iter().position(|n| *n == name).ok_or(
                        Error::UnknownGenerator {
                            name,
                            line: t.line,
                            column: t.column,
                        },
                    )?;
                    NCPoly::generator(Field::Rational, gen + 1)
                }
                Tok::Sym('(') => {
                    self.bump();
                    let e = self.expr()?;
                    self.expect(')')?;
                    e
                }
                _ => return Err(self.error("expected a generator or '('")),
            };
        if self.eat('^') {
            let e = self.small_uint()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }
}

pub(super) fn parse(text: &str) -> Result<Presentation> {
    let toks = lex(text)?;
    let mut header = Parser {
        toks,
        pos: 0,
        names: &[],
    };
    match header.peek() {
        Tok::Ident(k) if k == "gens" => {
            header.bump();
        }
        _ => return Err(header.error("expected \"gens\"")),
    }
    let mut names: Vec<String> = Vec::new();
    while let Tok::Ident(name) = header.peek().clone() {
        if names.contains(&name) {
            return Err(header.error(format!("duplicate generator {name:?}")));
        }
        names.push(name);
        header.bump();
    }
    if names.is_empty() {
        return Err(header.error("expected at least one generator name"));
    }
    header.expect(';')?;
    let mut p = Parser {
        toks: header.toks,
        pos: header.pos,
        names: &names,
    };
    let mut bound = None;
    let mut relations = Vec::new();
    loop {
        match p.peek().clone() {
            Tok::Eof => break,
            Tok::Ident(k) if k == "bound" && bound.is_none() && relations.is_empty() => {
                p.bump();
                let d = p.small_uint()?;
                if d == 0 {
                    return Err(p.error("bound must be positive"));
                }
                bound = Some(d as usize);
                p.expect(';')?;
            }
            Tok::Ident(k) if k == "rel" => {
                p.bump();
                relations.push(p.expr()?);
                p.expect(';')?;
            }
            _ => return Err(p.error("expected \"rel\" or end of input")),
        }
    }
    Presentation::new(names.clone(), relations, bound)
}
