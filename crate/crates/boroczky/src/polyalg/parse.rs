//! Polynomial text format: `^` powers, explicit `*`, rational coefficients.
//! Printing and parsing round-trip.

use super::{MultiPoly, PolyError, RingRef};
use crate::scalar::FieldElement;
use num::bigint::BigInt;
use std::fmt::Write as _;
use std::str::FromStr;

pub fn format_multipoly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ring = p.ring();
    let mut out = String::new();
    let mut first = true;
    for (m, c) in p.terms() {
        let cs = c.to_string();
        let (neg, mag) = crate::scalar::parse::split_sign(&cs);
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = if crate::scalar::parse::top_level_ops(&mag).0 {
            format!("({mag})")
        } else {
            mag
        };
        let mut vars = String::new();
        for (i, e) in m.iter().enumerate() {
            match e {
                0 => {}
                1 => {
                    if !vars.is_empty() {
                        vars.push('*');
                    }
                    vars.push_str(&ring.vars[i]);
                }
                _ => {
                    if !vars.is_empty() {
                        vars.push('*');
                    }
                    let _ = write!(vars, "{}^{}", ring.vars[i], e);
                }
            }
        }
        match (vars.is_empty(), mag == "1") {
            (true, _) => out.push_str(&mag),
            (false, true) => out.push_str(&vars),
            (false, false) => {
                let _ = write!(out, "{mag}*{vars}");
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(src: &str) -> Result<Vec<Tok>, PolyError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        pos += 1;
        toks.push(match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = pos - 1;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                Tok::Int(BigInt::from_str(std::str::from_utf8(&bytes[start..pos]).unwrap()).unwrap())
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = pos - 1;
                while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                Tok::Name(std::str::from_utf8(&bytes[start..pos]).unwrap().to_string())
            }
            other => return Err(PolyError::Parse(format!("unexpected '{}'", other as char))),
        });
    }
    toks.push(Tok::End);
    Ok(toks)
}

struct P<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a RingRef,
}

impl<'a> P<'a> {
    fn cur(&self) -> &Tok {
        &self.toks[self.pos]
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut lhs = self.term()?;
        loop {
            match self.cur() {
                Tok::Plus => {
                    self.bump();
                    lhs = lhs.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    lhs = lhs.sub(&self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut lhs = self.factor()?;
        loop {
            match self.cur() {
                Tok::Star => {
                    self.bump();
                    lhs = lhs.mul(&self.factor()?);
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.factor()?;
                    if !rhs.is_constant() || rhs.is_zero() {
                        return Err(PolyError::Parse(
                            "division only by nonzero constants".into(),
                        ));
                    }
                    let c = rhs.coefficient(&vec![0; self.ring.num_vars()]);
                    lhs = lhs.scale(&c.inv().map_err(PolyError::Scalar)?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        if *self.cur() == Tok::Minus {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let mut base = self.primary()?;
        if *self.cur() == Tok::Caret {
            self.bump();
            let Tok::Int(e) = self.cur().clone() else {
                return Err(PolyError::Parse("expected integer exponent".into()));
            };
            self.bump();
            let e: u32 = e
                .try_into()
                .map_err(|_| PolyError::Parse("exponent out of range".into()))?;
            base = base.pow(e);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<MultiPoly, PolyError> {
        match self.cur().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(MultiPoly::constant(
                    self.ring,
                    FieldElement::from_bigint(&self.ring.field, n),
                ))
            }
            Tok::Name(name) => {
                self.bump();
                MultiPoly::var_named(self.ring, &name)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.cur() != Tok::RParen {
                    return Err(PolyError::Parse("expected ')'".into()));
                }
                self.bump();
                Ok(inner)
            }
            other => Err(PolyError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl MultiPoly {
    pub fn parse(ring: &RingRef, src: &str) -> Result<MultiPoly, PolyError> {
        let toks = tokenize(src)?;
        let mut p = P { toks, pos: 0, ring };
        let poly = p.expr()?;
        if *p.cur() != Tok::End {
            return Err(PolyError::Parse("trailing input".into()));
        }
        Ok(poly)
    }
}

