//! Scalar expressions.
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := unary ("*" unary)*
//! unary    := "-" unary | postfix
//! postfix  := primary ("^-1")*
//! primary  := literal
//!           | "(" expr ")"
//!           | "r(" expr ":" expr ")"
//!           | "r(" expr "," expr ";" expr ")"
//!           | "cr(" expr "," expr ";" expr "," expr ")"
//!           | "map(" FAMILY ";" expr "," expr "," expr ";" expr ")"
//! ```
//!
//! Binary operators associate left. A `-` directly followed by a digit in
//! operand position is part of the literal, so `-3^-1` is `(-3)⁻¹`.
//! Products are never reordered.

use std::fmt;

use super::syntax::{CliBackend, Cursor, SyntaxError};
use crate::crossratio_maps::{CrossRatioBase, MapError, MapFamily};
use crate::ratios::{self, RatioError};
use crate::skewfield::{FieldError, SkewField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr<E> {
    Lit(E),
    Neg(Box<Expr<E>>),
    Inv(Box<Expr<E>>),
    Add(Box<Expr<E>>, Box<Expr<E>>),
    Sub(Box<Expr<E>>, Box<Expr<E>>),
    Mul(Box<Expr<E>>, Box<Expr<E>>),
    Ratio2(Box<Expr<E>>, Box<Expr<E>>),
    Ratio3(Box<[Expr<E>; 3]>),
    CrossRatio(Box<[Expr<E>; 4]>),
    Map { family: MapFamily, base: Box<[Expr<E>; 3]>, arg: Box<Expr<E>> },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Ratio(#[from] RatioError),
    #[error(transparent)]
    Map(#[from] MapError),
}

impl<E> Expr<E> {
    pub fn add(l: Self, r: Self) -> Self {
        Expr::Add(Box::new(l), Box::new(r))
    }

    pub fn sub(l: Self, r: Self) -> Self {
        Expr::Sub(Box::new(l), Box::new(r))
    }

    pub fn mul(l: Self, r: Self) -> Self {
        Expr::Mul(Box::new(l), Box::new(r))
    }

    pub fn neg(x: Self) -> Self {
        Expr::Neg(Box::new(x))
    }

    pub fn inv(x: Self) -> Self {
        Expr::Inv(Box::new(x))
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Expr::Lit(_) => 1,
            Expr::Neg(x) | Expr::Inv(x) => 1 + x.size(),
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) | Expr::Ratio2(l, r) => 1 + l.size() + r.size(),
            Expr::Ratio3(xs) => 1 + xs.iter().map(Expr::size).sum::<usize>(),
            Expr::CrossRatio(xs) => 1 + xs.iter().map(Expr::size).sum::<usize>(),
            Expr::Map { base, arg, .. } => 1 + arg.size() + base.iter().map(Expr::size).sum::<usize>(),
        }
    }
}

impl<E: fmt::Display> fmt::Display for Expr<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(e) => write!(f, "{e}"),
            Expr::Neg(x) => write!(f, "-({x})"),
            Expr::Inv(x) => match **x {
                Expr::Neg(_) => write!(f, "({x})^-1"),
                _ => write!(f, "{x}^-1"),
            },
            Expr::Add(l, r) => write!(f, "({l} + {r})"),
            Expr::Sub(l, r) => write!(f, "({l} - {r})"),
            Expr::Mul(l, r) => write!(f, "({l} * {r})"),
            Expr::Ratio2(a, b) => write!(f, "r({a}:{b})"),
            Expr::Ratio3(xs) => write!(f, "r({},{};{})", xs[0], xs[1], xs[2]),
            Expr::CrossRatio(xs) => write!(f, "cr({},{};{},{})", xs[0], xs[1], xs[2], xs[3]),
            Expr::Map { family, base, arg } => write!(f, "map({family}; {},{},{}; {arg})", base[0], base[1], base[2]),
        }
    }
}

/// Parses a complete expression over `field`.
pub fn parse_expression<F: CliBackend>(field: &F, text: &str) -> Result<Expr<F::Elem>, SyntaxError> {
    let mut p = Parser { field, cur: Cursor::new(text) };
    let e = p.expr()?;
    p.cur.expect_end()?;
    Ok(e)
}

struct Parser<'a, 'f, F> {
    field: &'f F,
    cur: Cursor<'a>,
}

impl<F: CliBackend> Parser<'_, '_, F> {
    fn expr(&mut self) -> Result<Expr<F::Elem>, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            if self.cur.eat('+') {
                lhs = Expr::add(lhs, self.term()?);
            } else if self.cur.eat('-') {
                lhs = Expr::sub(lhs, self.term()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr<F::Elem>, SyntaxError> {
        let mut lhs = self.unary()?;
        while self.cur.eat('*') {
            lhs = Expr::mul(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr<F::Elem>, SyntaxError> {
        if self.cur.peek() == Some('-') && !self.cur.peek_second().is_some_and(|c| c.is_ascii_digit()) {
            self.cur.eat('-');
            return Ok(Expr::neg(self.unary()?));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr<F::Elem>, SyntaxError> {
        let mut e = self.primary()?;
        while self.cur.eat_str("^-1") {
            e = Expr::inv(e);
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr<F::Elem>, SyntaxError> {
        match self.cur.peek() {
            Some(c) if c.is_ascii_digit() || c == '-' => Ok(Expr::Lit(self.field.parse_number(&mut self.cur)?)),
            Some('(') => {
                if let Some(lit) = self.field.parse_tuple(&mut self.cur) {
                    return Ok(Expr::Lit(lit?));
                }
                self.cur.expect('(')?;
                let e = self.expr()?;
                self.cur.expect(')')?;
                Ok(e)
            }
            _ => {
                if self.cur.eat_str("cr(") {
                    let a = self.expr()?;
                    self.cur.expect(',')?;
                    let b = self.expr()?;
                    self.cur.expect(';')?;
                    let c = self.expr()?;
                    self.cur.expect(',')?;
                    let d = self.expr()?;
                    self.cur.expect(')')?;
                    Ok(Expr::CrossRatio(Box::new([a, b, c, d])))
                } else if self.cur.eat_str("r(") {
                    let a = self.expr()?;
                    if self.cur.eat(':') {
                        let b = self.expr()?;
                        self.cur.expect(')')?;
                        return Ok(Expr::Ratio2(Box::new(a), Box::new(b)));
                    }
                    if !self.cur.eat(',') {
                        return Err(self.cur.error("expected `:` or `,`".to_string()));
                    }
                    let b = self.expr()?;
                    self.cur.expect(';')?;
                    let c = self.expr()?;
                    self.cur.expect(')')?;
                    Ok(Expr::Ratio3(Box::new([a, b, c])))
                } else if self.cur.eat_str("map(") {
                    self.cur.skip_ws();
                    let at = self.cur.pos();
                    let family = match self.cur.peek() {
                        Some(c @ ('A' | 'B' | 'C' | 'D')) => {
                            self.cur.eat(c);
                            c.to_string().parse::<MapFamily>().expect("known family")
                        }
                        _ => return Err(SyntaxError { offset: at, message: "expected map family A, B, C or D".to_string() }),
                    };
                    self.cur.expect(';')?;
                    let p1 = self.expr()?;
                    self.cur.expect(',')?;
                    let p2 = self.expr()?;
                    self.cur.expect(',')?;
                    let p3 = self.expr()?;
                    self.cur.expect(';')?;
                    let arg = self.expr()?;
                    self.cur.expect(')')?;
                    Ok(Expr::Map { family, base: Box::new([p1, p2, p3]), arg: Box::new(arg) })
                } else {
                    Err(self.cur.error("expected a literal, `(`, `r(`, `cr(` or `map(`".to_string()))
                }
            }
        }
    }
}

impl<E: Clone + PartialEq + fmt::Display> Expr<E> {
    pub fn evaluate<F: SkewField<Elem = E>>(&self, field: &F) -> Result<E, EvalError> {
        let ev = |x: &Expr<E>| x.evaluate(field);
        Ok(match self {
            Expr::Lit(e) => e.clone(),
            Expr::Neg(x) => field.neg(&ev(x)?),
            Expr::Inv(x) => field.inv(&ev(x)?)?,
            Expr::Add(l, r) => field.add(&ev(l)?, &ev(r)?),
            Expr::Sub(l, r) => field.sub(&ev(l)?, &ev(r)?),
            Expr::Mul(l, r) => field.mul(&ev(l)?, &ev(r)?),
            Expr::Ratio2(a, b) => ratios::ratio2(field, &ev(a)?, &ev(b)?)?,
            Expr::Ratio3(xs) => ratios::ratio3(field, &ev(&xs[0])?, &ev(&xs[1])?, &ev(&xs[2])?)?,
            Expr::CrossRatio(xs) => ratios::cross_ratio(field, &ev(&xs[0])?, &ev(&xs[1])?, &ev(&xs[2])?, &ev(&xs[3])?)?,
            Expr::Map { family, base, arg } => {
                let base = [ev(&base[0])?, ev(&base[1])?, ev(&base[2])?];
                CrossRatioBase::new(field, *family, base)?.evaluate(field, &ev(arg)?)?
            }
        })
    }
}
