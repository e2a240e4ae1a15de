//! Polynomial expressions: integer literals, variables, `+ - * / ^` and
//! parentheses. Multiplication is always explicit.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' integer)?
//! atom  := integer | name | '(' expr ')'
//! ```
//!
//! Division is only by nonzero constants, and must be exact in the
//! coefficient ring. Over `F_{p^k}` with `k > 1` the name `t` denotes the
//! generator of the field, matching how field elements are printed.

use indecomp::algebra::{Domain, FiniteField, Integers, MPoly, MPolyRing, Rationals, Ring};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Op(char),
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Name(text[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return err(i, format!("unexpected character '{ch}'"));
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

/// Coefficient rings the parser can target.
pub trait Coefficients: Domain {
    fn literal(&self, n: &BigInt) -> Self::Element;

    /// A named constant of the ring, such as the field generator `t`.
    fn named(&self, _name: &str) -> Option<Self::Element> {
        None
    }
}

impl Coefficients for Integers {
    fn literal(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
}

impl Coefficients for Rationals {
    fn literal(&self, n: &BigInt) -> num_rational::BigRational {
        num_rational::BigRational::from_integer(n.clone())
    }
}

impl Coefficients for FiniteField {
    fn literal(&self, n: &BigInt) -> indecomp::algebra::Fq {
        let p = BigInt::from(self.p());
        let r = ((n % &p) + &p) % &p;
        self.from_i64(r.to_i64().expect("residue fits"))
    }

    fn named(&self, name: &str) -> Option<indecomp::algebra::Fq> {
        if name == "t" {
            self.generator()
        } else {
            None
        }
    }
}

struct Parser<'a, R: Coefficients> {
    ring: &'a MPolyRing<R>,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

type Poly<R> = MPoly<<R as Ring>::Element>;

impl<'a, R: Coefficients> Parser<'a, R> {
    fn peek(&self) -> &(usize, Tok) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if t.1 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Poly<R>, ParseError> {
        let mut acc = self.term()?;
        while let (_, Tok::Op(c @ ('+' | '-'))) = *self.peek() {
            self.bump();
            let rhs = self.term()?;
            acc = if c == '+' {
                self.ring.add(&acc, &rhs)
            } else {
                self.ring.sub(&acc, &rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<R>, ParseError> {
        let mut acc = self.unary()?;
        while let (at, Tok::Op(c @ ('*' | '/'))) = *self.peek() {
            self.bump();
            let rhs = self.unary()?;
            acc = if c == '*' {
                self.ring.mul(&acc, &rhs)
            } else {
                self.divide(&acc, &rhs, at)?
            };
        }
        Ok(acc)
    }

    fn divide(&self, a: &Poly<R>, b: &Poly<R>, at: usize) -> Result<Poly<R>, ParseError> {
        if b.degree() != Some(0) {
            return err(at, "division is only by nonzero constants");
        }
        let c = self.ring.constant_term(b);
        let base = self.ring.base();
        let mut terms = Vec::new();
        for (m, x) in a.terms() {
            match base.div_exact(x, &c) {
                Some(y) => terms.push((m.clone(), y)),
                None => return err(at, "division is not exact in the coefficient ring"),
            }
        }
        Ok(self.ring.from_terms(terms))
    }

    fn unary(&mut self) -> Result<Poly<R>, ParseError> {
        if let (_, Tok::Op('-')) = self.peek() {
            self.bump();
            let inner = self.unary()?;
            return Ok(self.ring.neg(&inner));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly<R>, ParseError> {
        let base = self.atom()?;
        if let (_, Tok::Op('^')) = self.peek() {
            self.bump();
            let (at, tok) = self.bump();
            let Tok::Int(e) = tok else {
                return err(at, "expected an integer exponent");
            };
            let Some(e) = e.to_u32() else {
                return err(at, "exponent too large");
            };
            return Ok(self.ring.pow(&base, e as u64));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<R>, ParseError> {
        let (at, tok) = self.bump();
        match tok {
            Tok::Int(n) => Ok(self.ring.constant(self.ring.base().literal(&n))),
            Tok::Name(name) => {
                if let Some(i) = self.ring.var_names().iter().position(|v| *v == name) {
                    Ok(self.ring.gen(i))
                } else if let Some(c) = self.ring.base().named(&name) {
                    Ok(self.ring.constant(c))
                } else {
                    err(at, format!("unknown variable '{name}'"))
                }
            }
            Tok::Op('(') => {
                let inner = self.expr()?;
                match self.bump() {
                    (_, Tok::Op(')')) => Ok(inner),
                    (at, _) => err(at, "expected ')'"),
                }
            }
            Tok::End => err(at, "unexpected end of input"),
            Tok::Op(c) => err(at, format!("unexpected '{c}'")),
        }
    }
}

/// Parses `text` as a polynomial of `ring`.
pub fn parse_poly<R: Coefficients>(text: &str, ring: &MPolyRing<R>) -> Result<Poly<R>, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { ring, toks, pos: 0 };
    let f = p.expr()?;
    match p.peek() {
        (_, Tok::End) => Ok(f),
        (at, _) => err(*at, "unexpected trailing input"),
    }
}

/// Variable names used by `text`, in order of first appearance. Names that
/// fail to tokenize are reported by [`parse_poly`] instead.
pub fn names_in(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for (_, t) in tokenize(text).unwrap_or_default() {
        if let Tok::Name(n) = t {
            if !out.contains(&n) {
                out.push(n);
            }
        }
    }
    out
}
