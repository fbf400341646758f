//! Parser for polynomial and derivation expressions.
//!
//! Accepts the plain-text dialect (`x1`, `z`, `d1`, `dz`, `*`, `/`, `^`) and
//! the LaTeX dialect emitted by [`crate::latex`] (`x_{1}`, `\partial_{1}`,
//! `\frac{a}{b}`, `\left( .. \right)`, `\{ .. \}`, implicit products).
//! Layout tokens (`&`, `\\`, `\quad`, `\,`, `\Bigl`, ...) are ignored.
//! Expressions are expanded exactly, so comparisons against parsed text are
//! semantic rather than string based.

use num_bigint::BigInt;

use crate::derivations::Derivation;
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Ring};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Num(BigInt),
    Var(usize),
    Partial(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
    Frac,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Ring,
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    /// Subscript after `x` or `\partial`: `1`, `_1`, `_{1}`, or `z` forms.
    fn subscript(&mut self) -> Result<String> {
        if self.peek() == Some(b'_') {
            self.pos += 1;
        }
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        let out = if self.peek() == Some(b'z') {
            self.pos += 1;
            "z".to_string()
        } else {
            self.digits().ok_or_else(|| parse_err(format!("expected an index at byte {}", self.pos)))?
        };
        if braced {
            if self.peek() != Some(b'}') {
                return Err(parse_err(format!("unclosed subscript at byte {}", self.pos)));
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn var_index(&self, sub: &str) -> Result<usize> {
        if sub == "z" {
            return Ok(self.ring.z_index());
        }
        let i: usize = sub.parse().map_err(|_| parse_err(format!("bad index `{sub}`")))?;
        self.ring.x_index(i)
    }

    fn command(&mut self) -> Result<Option<Token>> {
        // after the backslash
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        if self.pos == start {
            let c = self.peek().ok_or_else(|| parse_err("dangling backslash"))?;
            self.pos += 1;
            return Ok(match c {
                b'{' => Some(Token::Open),
                b'}' => Some(Token::Close),
                b'(' => Some(Token::Open),
                b')' => Some(Token::Close),
                _ => None, // \\  \,  \;  \!  `\ `
            });
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        match name {
            "frac" => Ok(Some(Token::Frac)),
            "cdot" | "times" => Ok(Some(Token::Star)),
            "partial" => {
                let sub = self.subscript()?;
                Ok(Some(Token::Partial(self.var_index(&sub)?)))
            }
            "left" | "right" | "bigl" | "bigr" | "Bigl" | "Bigr" | "biggl" | "biggr" => {
                // the delimiter that follows is lexed on its own
                Ok(None)
            }
            "quad" | "qquad" | "begin" | "end" | "nonumber" => {
                if matches!(name, "begin" | "end") {
                    self.skip_group();
                }
                Ok(None)
            }
            other => Err(parse_err(format!("unsupported command \\{other}"))),
        }
    }

    fn skip_group(&mut self) {
        if self.peek() == Some(b'{') {
            while let Some(c) = self.peek() {
                self.pos += 1;
                if c == b'}' {
                    break;
                }
            }
        }
    }
}

/// Parses a polynomial in `ring`.
pub fn parse_polynomial(src: &str, ring: Ring) -> Result<Polynomial> {
    match parse_value(src, ring)? {
        Value::Scalar(p) => Ok(p),
        Value::Der(_) => Err(parse_err("expected a polynomial, found a derivation")),
    }
}

/// Parses a derivation in `ring`. An optional `name =` prefix is skipped.
pub fn parse_derivation(src: &str, ring: Ring) -> Result<Derivation> {
    let body = src.split_once('=').map_or(src, |(_, rhs)| rhs);
    match parse_value(body, ring)? {
        Value::Der(d) => Ok(d),
        Value::Scalar(p) if p.is_zero() => Ok(Derivation::zero(ring)),
        Value::Scalar(_) => Err(parse_err("expected a derivation, found a polynomial")),
    }
}

#[derive(Clone, Debug)]
enum Value {
    Scalar(Polynomial),
    Der(Derivation),
}

impl Value {
    fn add(self, rhs: Value) -> Result<Value> {
        match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(&a + &b)),
            (Value::Der(a), Value::Der(b)) => Ok(Value::Der(a.try_add(&b)?)),
            (Value::Der(d), Value::Scalar(p)) | (Value::Scalar(p), Value::Der(d)) if p.is_zero() => {
                Ok(Value::Der(d))
            }
            _ => Err(parse_err("cannot add a polynomial to a derivation")),
        }
    }

    fn mul(self, rhs: Value) -> Result<Value> {
        match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(&a * &b)),
            (Value::Scalar(p), Value::Der(d)) | (Value::Der(d), Value::Scalar(p)) => {
                Ok(Value::Der(d.mul_poly(&p)?))
            }
            (Value::Der(_), Value::Der(_)) => Err(parse_err("cannot multiply two derivations")),
        }
    }

    fn neg(self) -> Value {
        match self {
            Value::Scalar(p) => Value::Scalar(-p),
            Value::Der(d) => Value::Der(d.scale(&Rational::from_integer((-1).into()))),
        }
    }

    fn div(self, rhs: Value) -> Result<Value> {
        let c = match rhs {
            Value::Scalar(p) => p
                .as_constant()
                .filter(|c| *c != Rational::from_integer(0.into()))
                .ok_or_else(|| parse_err("division is only by nonzero constants"))?,
            Value::Der(_) => return Err(parse_err("cannot divide by a derivation")),
        };
        let inv = Rational::from_integer(1.into()) / c;
        Ok(match self {
            Value::Scalar(p) => Value::Scalar(p.scale(&inv)),
            Value::Der(d) => Value::Der(d.scale(&inv)),
        })
    }
}

fn parse_value(src: &str, ring: Ring) -> Result<Value> {
    let tokens = lex(src, ring)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        ring,
    };
    let v = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parse_err(format!(
            "unexpected token {:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(v)
}

fn lex(src: &str, ring: Ring) -> Result<Vec<Token>> {
    let mut lx = Lexer {
        src: src.as_bytes(),
        pos: 0,
        ring,
    };
    let mut out = Vec::new();
    while let Some(c) = lx.peek() {
        match c {
            b' ' | b'\t' | b'\n' | b'\r' | b'&' => lx.pos += 1,
            b'0'..=b'9' => {
                let d = lx.digits().expect("digit present");
                out.push(Token::Num(d.parse().expect("digits parse")));
            }
            b'x' => {
                lx.pos += 1;
                let sub = lx.subscript()?;
                out.push(Token::Var(lx.var_index(&sub)?));
            }
            b'z' => {
                lx.pos += 1;
                out.push(Token::Var(ring.z_index()));
            }
            b'd' => {
                lx.pos += 1;
                let sub = lx.subscript()?;
                out.push(Token::Partial(lx.var_index(&sub)?));
            }
            b'+' => {
                lx.pos += 1;
                out.push(Token::Plus);
            }
            b'-' => {
                lx.pos += 1;
                out.push(Token::Minus);
            }
            b'*' => {
                lx.pos += 1;
                out.push(Token::Star);
            }
            b'/' => {
                lx.pos += 1;
                out.push(Token::Slash);
            }
            b'^' => {
                lx.pos += 1;
                out.push(Token::Caret);
            }
            b'(' | b'{' | b'[' => {
                lx.pos += 1;
                out.push(Token::Open);
            }
            b')' | b'}' | b']' => {
                lx.pos += 1;
                out.push(Token::Close);
            }
            b'\\' => {
                lx.pos += 1;
                if let Some(t) = lx.command()? {
                    out.push(t);
                }
            }
            other => {
                return Err(parse_err(format!(
                    "unexpected character `{}` at byte {}",
                    other as char, lx.pos
                )))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    ring: Ring,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_close(&mut self) -> Result<()> {
        match self.next() {
            Some(Token::Close) => Ok(()),
            other => Err(parse_err(format!("expected a closing bracket, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.signed_term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(self.term()?)?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.add(self.term()?.neg())?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_term(&mut self) -> Result<Value> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(self.term()?.neg())
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.term()
            }
            _ => self.term(),
        }
    }

    fn starts_factor(t: &Token) -> bool {
        matches!(
            t,
            Token::Num(_) | Token::Var(_) | Token::Partial(_) | Token::Open | Token::Frac
        )
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(self.power()?)?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    acc = acc.div(self.power()?)?;
                }
                Some(t) if Self::starts_factor(t) => {
                    acc = acc.mul(self.power()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp = match self.next() {
            Some(Token::Num(n)) => n,
            Some(Token::Open) => {
                let n = match self.next() {
                    Some(Token::Num(n)) => n,
                    other => return Err(parse_err(format!("expected an exponent, found {other:?}"))),
                };
                self.expect_close()?;
                n
            }
            other => return Err(parse_err(format!("expected an exponent, found {other:?}"))),
        };
        let exp: u32 = exp.try_into().map_err(|_| parse_err("exponent too large"))?;
        match base {
            Value::Scalar(p) => Ok(Value::Scalar(p.pow(exp))),
            Value::Der(_) => Err(parse_err("cannot raise a derivation to a power")),
        }
    }

    fn atom(&mut self) -> Result<Value> {
        match self.next() {
            Some(Token::Num(n)) => Ok(Value::Scalar(self.ring.constant(Rational::from_integer(n)))),
            Some(Token::Var(v)) => Ok(Value::Scalar(self.ring.var(v))),
            Some(Token::Partial(v)) => Ok(Value::Der(Derivation::partial(self.ring, v)?)),
            Some(Token::Open) => {
                let v = self.expr()?;
                self.expect_close()?;
                Ok(v)
            }
            Some(Token::Frac) => {
                self.expect_open()?;
                let num = self.expr()?;
                self.expect_close()?;
                self.expect_open()?;
                let den = self.expr()?;
                self.expect_close()?;
                num.div(den)
            }
            // unary minus inside a product, e.g. `2*-x`
            Some(Token::Minus) => Ok(self.power()?.neg()),
            other => Err(parse_err(format!("unexpected token {other:?}"))),
        }
    }

    fn expect_open(&mut self) -> Result<()> {
        match self.next() {
            Some(Token::Open) => Ok(()),
            other => Err(parse_err(format!("expected an opening bracket, found {other:?}"))),
        }
    }
}
