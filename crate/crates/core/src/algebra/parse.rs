//! Text syntax for algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ['^' ['-'] int]
//! atom   := int | '[' int (',' int)* ']' | X | Xinv | s | y | t | k | '(' expr ')'
//! ```
//!
//! `t` and `k` are replaced by their values. Scalars and X may take any
//! integer exponent, `s` only 1 or -1, everything else nonnegative ones.

use super::{AlgebraElement, AlgebraParams, Monomial};
use crate::error::{Error, Result};
use crate::field::Fq;

const EXPONENT_LIMIT: i64 = 1 << 15;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c.is_ascii_whitespace() {
            pos += 1;
        } else if c.is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            out.push((start, Tok::Int(text[start..pos].to_string())));
        } else if c.is_ascii_alphabetic() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                pos += 1;
            }
            out.push((start, Tok::Ident(text[start..pos].to_string())));
        } else if "+-*^()[],".contains(c) {
            out.push((pos, Tok::Sym(c)));
            pos += 1;
        } else {
            return Err(Error::Syntax { pos, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

enum Value {
    Scalar(Fq),
    S,
    X(i64),
    Element(AlgebraElement),
}

struct Parser<'a> {
    params: &'a AlgebraParams,
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected {c:?}"))
        }
    }

    fn expr(&mut self) -> Result<AlgebraElement> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<AlgebraElement> {
        if self.eat('-') {
            return Ok(-self.factor()?);
        }
        let atom = self.atom()?;
        let exp = if self.eat('^') { Some(self.exponent()?) } else { None };
        self.apply(atom, exp)
    }

    fn exponent(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        let Some(Tok::Int(digits)) = self.peek().cloned() else {
            return self.err("expected an integer exponent");
        };
        self.idx += 1;
        let magnitude: i64 = match digits.parse::<i64>() {
            Ok(v) if v <= EXPONENT_LIMIT => v,
            _ => {
                let shown = digits.parse::<i64>().unwrap_or(i64::MAX);
                return Err(Error::ExponentBound(if negative { -shown } else { shown }));
            }
        };
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn atom(&mut self) -> Result<Value> {
        let params = self.params;
        let field = params.field();
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Int(digits)) => {
                self.idx += 1;
                let p = field.characteristic() as u64;
                let r = digits.bytes().fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p);
                Ok(Value::Scalar(field.from_int(r as i64)))
            }
            Some(Tok::Sym('[')) => {
                self.idx += 1;
                let mut coeffs = Vec::new();
                loop {
                    let negative = self.eat('-');
                    let Some(Tok::Int(digits)) = self.peek().cloned() else {
                        return self.err("expected an integer coefficient");
                    };
                    self.idx += 1;
                    let p = field.characteristic() as u64;
                    let r = digits.bytes().fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p) as i64;
                    coeffs.push(if negative { -r } else { r });
                    if !self.eat(',') {
                        break;
                    }
                }
                self.expect(']')?;
                Ok(Value::Scalar(field.from_coeffs(&coeffs)?))
            }
            Some(Tok::Ident(name)) => {
                self.idx += 1;
                match name.as_str() {
                    "X" => Ok(Value::X(1)),
                    "Xinv" => Ok(Value::X(-1)),
                    "s" => Ok(Value::S),
                    "y" => Ok(Value::Element(AlgebraElement::y(params))),
                    "t" => Ok(Value::Scalar(params.t())),
                    "k" => Ok(Value::Scalar(params.k())),
                    _ => {
                        self.idx -= 1;
                        self.err(format!("unknown symbol {name:?}"))
                    }
                }
            }
            Some(Tok::Sym('(')) => {
                self.idx += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Value::Element(e))
            }
            Some(_) => self.err("expected a scalar, generator or '('"),
            None => self.err("unexpected end of input"),
        }
    }

    fn apply(&self, atom: Value, exp: Option<i64>) -> Result<AlgebraElement> {
        let params = self.params;
        let field = params.field();
        let e = exp.unwrap_or(1);
        match atom {
            Value::Scalar(c) => Ok(AlgebraElement::scalar(params, field.powi(c, e)?)),
            Value::S => match e {
                1 | -1 => Ok(AlgebraElement::s(params)),
                _ => Err(Error::ExponentOnS(e)),
            },
            Value::X(sign) => {
                Ok(AlgebraElement::monomial(params, Monomial::new(0, (sign * e) as i32, 0), Fq::ONE))
            }
            Value::Element(el) => {
                if e < 0 {
                    return Err(Error::ExponentBound(e));
                }
                Ok(el.pow(e as u32))
            }
        }
    }
}

/// Parses and normalizes an expression over `params`.
pub fn parse(text: &str, params: &AlgebraParams) -> Result<AlgebraElement> {
    let toks = tokenize(text)?;
    let mut parser = Parser { params, toks, idx: 0, end: text.len() };
    if parser.peek().is_none() {
        return parser.err("empty expression");
    }
    let e = parser.expr()?;
    if parser.peek().is_some() {
        return parser.err("unexpected trailing input");
    }
    Ok(e)
}
