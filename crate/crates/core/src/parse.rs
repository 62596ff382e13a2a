//! Text grammar for polynomials:
//!
//! ```text
//! poly  := ['-'] term (('+'|'-') term)*
//! term  := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' exponent)?
//! coeff := integer ('/' integer)?
//! ```
//!
//! Whitespace is insignificant. Variables must be declared in the variable
//! set; they are never inferred. `emit` produces the canonical form (terms in
//! descending GrevLex order) and `parse(emit(p)) == p`.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::poly::{Monomial, Poly, VarSet};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '0'..='9' => {
                let mut num = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        num.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(num));
            }
            c if c.is_ascii_alphabetic() => {
                let mut id = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(id));
            }
            other => return Err(Error::Parse(format!("unexpected character {:?}", other))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    varset: &'a Arc<VarSet>,
    field: FieldCtx,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_uint(&mut self) -> Result<i64> {
        match self.bump() {
            Some(Token::Int(s)) => s
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("integer {} out of range", s))),
            other => Err(Error::Parse(format!("expected integer, found {:?}", other))),
        }
    }

    /// coefficient := integer ('/' integer)?
    fn parse_coeff(&mut self) -> Result<FieldElem> {
        let num = self.parse_uint()?;
        if matches!(self.peek(), Some(Token::Slash)) {
            self.bump();
            let den = self.parse_uint()?;
            if den == 0 {
                return Err(Error::Parse("zero denominator".into()));
            }
            self.field
                .from_ratio(num, den)
                .map_err(|e| Error::Parse(e.to_string()))
        } else {
            Ok(self.field.from_i64(num))
        }
    }

    /// factor := var ('^' exponent)?
    fn parse_factor(&mut self, expo: &mut [u32]) -> Result<()> {
        match self.bump() {
            Some(Token::Ident(name)) => {
                let idx = self
                    .varset
                    .index_of(&name)
                    .ok_or_else(|| Error::Parse(format!("undeclared variable {:?}", name)))?;
                let e = if matches!(self.peek(), Some(Token::Caret)) {
                    self.bump();
                    let e = self.parse_uint()?;
                    if e < 0 {
                        return Err(Error::Parse("negative exponent".into()));
                    }
                    e as u32
                } else {
                    1
                };
                expo[idx] += e;
                Ok(())
            }
            other => Err(Error::Parse(format!(
                "expected variable, found {:?}",
                other
            ))),
        }
    }

    /// term := coeff ('*' factor)* | factor ('*' factor)*
    fn parse_term(&mut self) -> Result<(Monomial, FieldElem)> {
        let nvars = self.varset.len();
        let mut expo = vec![0u32; nvars];
        let coeff = match self.peek() {
            Some(Token::Int(_)) => self.parse_coeff()?,
            Some(Token::Ident(_)) => {
                self.parse_factor(&mut expo)?;
                self.field.one()
            }
            other => return Err(Error::Parse(format!("expected term, found {:?}", other))),
        };
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            self.parse_factor(&mut expo)?;
        }
        Ok((Monomial(expo), coeff))
    }

    fn parse_poly(&mut self) -> Result<Poly> {
        let mut terms: Vec<(Monomial, FieldElem)> = Vec::new();
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                negate = true;
            }
            Some(Token::Plus) => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let (m, c) = self.parse_term()?;
            let c = if negate {
                self.field
                    .neg(&c)
                    .map_err(|e| Error::Parse(e.to_string()))?
            } else {
                c
            };
            terms.push((m, c));
            match self.bump() {
                None => break,
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                other => {
                    return Err(Error::Parse(format!(
                        "expected '+' or '-', found {:?}",
                        other
                    )))
                }
            }
        }
        Ok(Poly::from_terms(self.varset.clone(), self.field, terms))
    }
}

/// Parse a polynomial over the declared variables.
pub fn parse(s: &str, varset: &Arc<VarSet>, field: FieldCtx) -> Result<Poly> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        varset,
        field,
    };
    p.parse_poly()
}

/// Canonical text form: terms in descending GrevLex order.
pub fn emit(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let terms: Vec<_> = p.terms().collect();
    for (i, (m, c)) in terms.iter().rev().enumerate() {
        let (neg, mag) = coeff_magnitude(p.field(), c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let factors = monomial_factors(p.varset(), m);
        if factors.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&factors.join("*"));
        } else {
            out.push_str(&mag);
            out.push('*');
            out.push_str(&factors.join("*"));
        }
    }
    out
}

fn coeff_magnitude(field: FieldCtx, c: &FieldElem) -> (bool, String) {
    match c {
        FieldElem::Rat(x) => {
            if x.is_negative() {
                let m = field.neg(c).unwrap();
                (true, m.to_string())
            } else {
                (false, c.to_string())
            }
        }
        // Prime-field representatives are printed as-is (0..p-1).
        FieldElem::Mod { .. } => (false, c.to_string()),
    }
}

fn monomial_factors(varset: &Arc<VarSet>, m: &Monomial) -> Vec<String> {
    m.0.iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, e)| {
            if *e == 1 {
                varset.name(i).to_string()
            } else {
                format!("{}^{}", varset.name(i), e)
            }
        })
        .collect()
}
