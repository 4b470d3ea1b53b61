//! Text form of field elements: printing and the inverse parser.
//!
//! Grammar (round-trips with `Display`):
//! ```text
//! expr    := term (('+'|'-') term)*
//! term    := factor (('*'|'/') factor)*
//! factor  := '-' factor | primary ('^' uint)?
//! primary := integer | name | 'sqrt' '(' expr ')' | '(' expr ')'
//! ```

use super::{FieldDescriptor, FieldElement, FieldRef, Repr, ScalarError};
use num::bigint::BigInt;
use std::fmt;
use std::str::FromStr;

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.repr, self.desc.as_ref()) {
            (Repr::Rat(r), _) => {
                if r.denom() == &BigInt::from(1) {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            (Repr::Mod(m), _) => write!(f, "{m}"),
            (Repr::Quad(u, v), FieldDescriptor::QuadExt { d, .. }) => {
                if v.is_zero() {
                    return write!(f, "{u}");
                }
                let vs = v.to_string();
                let (vneg, vmag) = split_sign(&vs);
                let root = if needs_parens(&d.to_string()) {
                    format!("sqrt(({d}))")
                } else {
                    format!("sqrt({d})")
                };
                let vterm = if vmag == "1" {
                    root
                } else if needs_parens(&vmag) {
                    format!("({vmag})*{root}")
                } else {
                    format!("{vmag}*{root}")
                };
                if u.is_zero() {
                    if vneg {
                        write!(f, "-{vterm}")
                    } else {
                        write!(f, "{vterm}")
                    }
                } else if vneg {
                    write!(f, "{u} - {vterm}")
                } else {
                    write!(f, "{u} + {vterm}")
                }
            }
            (Repr::Frac(num, den), FieldDescriptor::FunctionField { var, .. }) => {
                if num.is_zero() {
                    return write!(f, "0");
                }
                if den.degree() == Some(0) && den.coeff(0).is_one() {
                    write!(f, "{}", num.display(var))
                } else {
                    write!(f, "({})/({})", num.display(var), den.display(var))
                }
            }
            (Repr::Ext(p), FieldDescriptor::QuotientExt { var, .. }) => {
                write!(f, "{}", p.display(var))
            }
            _ => unreachable!("representation matches descriptor"),
        }
    }
}

/// Operators at parenthesis depth zero (ignoring a leading sign).
pub(crate) fn top_level_ops(s: &str) -> (bool, bool) {
    let mut depth = 0usize;
    let mut additive = false;
    let mut any = false;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '+' | '-' if depth == 0 && i > 0 => {
                additive = true;
                any = true;
            }
            '*' | '/' if depth == 0 => any = true,
            _ => {}
        }
    }
    (additive, any)
}

/// Split a printed scalar into (is_negative, magnitude). The sign is only
/// stripped when it applies to the whole string, i.e. when no top-level
/// additive operator follows.
pub(crate) fn split_sign(s: &str) -> (bool, String) {
    if let Some(rest) = s.strip_prefix('-') {
        if !top_level_ops(rest).0 {
            return (true, rest.to_string());
        }
    }
    (false, s.to_string())
}

fn needs_parens(s: &str) -> bool {
    top_level_ops(s).1
}

#[derive(Debug, Clone)]
enum Expr {
    Int(BigInt),
    Name(String),
    Sqrt(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
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

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn next_tok(&mut self) -> Result<Tok, ScalarError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        Ok(match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(BigInt::from_str(s).unwrap())
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Name(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
            }
            other => {
                return Err(ScalarError::Parse(format!(
                    "unexpected character '{}'",
                    other as char
                )))
            }
        })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    cur: Tok,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ScalarError> {
        let mut lexer = Lexer::new(src);
        let cur = lexer.next_tok()?;
        Ok(Parser { lexer, cur })
    }

    fn bump(&mut self) -> Result<(), ScalarError> {
        self.cur = self.lexer.next_tok()?;
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ScalarError> {
        let mut lhs = self.term()?;
        loop {
            match self.cur {
                Tok::Plus => {
                    self.bump()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ScalarError> {
        let mut lhs = self.factor()?;
        loop {
            match self.cur {
                Tok::Star => {
                    self.bump()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ScalarError> {
        if self.cur == Tok::Minus {
            self.bump()?;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let mut base = self.primary()?;
        if self.cur == Tok::Caret {
            self.bump()?;
            let Tok::Int(e) = self.cur.clone() else {
                return Err(ScalarError::Parse("expected integer exponent".into()));
            };
            self.bump()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| ScalarError::Parse("exponent out of range".into()))?;
            base = Expr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ScalarError> {
        match self.cur.clone() {
            Tok::Int(n) => {
                self.bump()?;
                Ok(Expr::Int(n))
            }
            Tok::Name(name) => {
                self.bump()?;
                if name == "sqrt" {
                    if self.cur != Tok::LParen {
                        return Err(ScalarError::Parse("expected '(' after sqrt".into()));
                    }
                    self.bump()?;
                    let inner = self.expr()?;
                    if self.cur != Tok::RParen {
                        return Err(ScalarError::Parse("expected ')'".into()));
                    }
                    self.bump()?;
                    Ok(Expr::Sqrt(Box::new(inner)))
                } else {
                    Ok(Expr::Name(name))
                }
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                if self.cur != Tok::RParen {
                    return Err(ScalarError::Parse("expected ')'".into()));
                }
                self.bump()?;
                Ok(inner)
            }
            other => Err(ScalarError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl Expr {
    fn eval(&self, desc: &FieldRef) -> Result<FieldElement, ScalarError> {
        match self {
            Expr::Int(n) => Ok(FieldElement::from_bigint(desc, n.clone())),
            Expr::Name(name) => resolve_name(desc, name)
                .ok_or_else(|| ScalarError::Parse(format!("unknown name '{name}' in {desc}"))),
            Expr::Sqrt(inner) => resolve_sqrt(desc, inner)
                .ok_or_else(|| ScalarError::Parse(format!("sqrt does not match field {desc}"))),
            Expr::Neg(e) => Ok(e.eval(desc)?.neg()),
            Expr::Add(a, b) => a.eval(desc)?.try_add(&b.eval(desc)?),
            Expr::Sub(a, b) => a.eval(desc)?.try_sub(&b.eval(desc)?),
            Expr::Mul(a, b) => a.eval(desc)?.try_mul(&b.eval(desc)?),
            Expr::Div(a, b) => a.eval(desc)?.try_div(&b.eval(desc)?),
            Expr::Pow(a, e) => Ok(a.eval(desc)?.pow(*e)),
        }
    }
}

fn resolve_name(desc: &FieldRef, name: &str) -> Option<FieldElement> {
    match desc.as_ref() {
        FieldDescriptor::FunctionField { var, .. } if var == name => {
            Some(FieldElement::generator(desc).unwrap())
        }
        FieldDescriptor::QuotientExt { var, .. } if var == name => {
            Some(FieldElement::generator(desc).unwrap())
        }
        _ => {
            let base = desc.base()?;
            Some(resolve_name(base, name)?.lift_to(desc))
        }
    }
}

fn resolve_sqrt(desc: &FieldRef, inner: &Expr) -> Option<FieldElement> {
    if let FieldDescriptor::QuadExt { base, d } = desc.as_ref() {
        if let Ok(v) = inner.eval(base) {
            if v == **d {
                return Some(FieldElement::generator(desc).unwrap());
            }
        }
    }
    let base = desc.base()?;
    Some(resolve_sqrt(base, inner)?.lift_to(desc))
}

impl FieldElement {
    /// Parse the textual form of an element of the field `desc`.
    pub fn parse(desc: &FieldRef, src: &str) -> Result<FieldElement, ScalarError> {
        let mut parser = Parser::new(src)?;
        let expr = parser.expr()?;
        if parser.cur != Tok::End {
            return Err(ScalarError::Parse(format!(
                "trailing input at {:?}",
                parser.cur
            )));
        }
        expr.eval(desc)
    }
}
