//! Expression parser.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ['^' ['-'] int]
//! atom   := int | 'q' | 'h' | gen interval | '(' expr ')'
//! gen    := 'X+' | 'X-' | 'x+' | 'x-' | 'H' | 'K' | 'K^-1' | 'Kinv' | 'Xi' | 'xi'
//! interval := '[' rational ',' rational ')'
//! ```
//!
//! Division and negative powers are only allowed for invertible scalars.

use super::expr::RawExpr;
use super::word::Gen;
use super::{Algebra, Presentation};
use crate::coeffring::{parse_rat, Scalar};
use crate::error::{Error, Result};
use crate::quiver::{Interval, Quiver};

struct Parser<'a, S: Scalar> {
    src: &'a [u8],
    pos: usize,
    pres: Presentation,
    quiver: &'a Quiver,
    ctx: &'a S::Ctx,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

impl<'a, S: Scalar> Parser<'a, S> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn starts_with(&mut self, s: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn one(&self) -> S {
        S::one(self.ctx)
    }

    fn scalar(&self, c: S) -> RawExpr<S> {
        RawExpr::single(Vec::new(), c)
    }

    fn mul(&self, a: &RawExpr<S>, b: &RawExpr<S>) -> RawExpr<S> {
        let mut out = RawExpr::new();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(w, ca.mul(cb));
            }
        }
        out
    }

    /// The scalar value of an expression without generators.
    fn as_scalar(&self, e: &RawExpr<S>) -> Option<S> {
        if e.is_zero() {
            return Some(S::zero(self.ctx));
        }
        if e.len() == 1 {
            let (w, c) = e.iter().next().unwrap();
            if w.is_empty() {
                return Some(c.clone());
            }
        }
        None
    }

    fn expr(&mut self) -> Result<RawExpr<S>> {
        let mut neg = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            neg = true;
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RawExpr<S>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.mul(&acc, &f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.factor()?;
                    let inv = self.as_scalar(&f).and_then(|s| s.inv());
                    match inv {
                        Some(i) => acc = acc.scale(&i),
                        None => return err(at, "division by a non-invertible element"),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| err(start, "expected an integer"))
    }

    fn factor(&mut self) -> Result<RawExpr<S>> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let n = self.int()?;
        if n >= 0 {
            let mut acc = self.scalar(self.one());
            for _ in 0..n {
                acc = self.mul(&acc, &base);
            }
            Ok(acc)
        } else {
            match self.as_scalar(&base).and_then(|s| s.inv()) {
                Some(i) => {
                    let mut acc = self.one();
                    for _ in 0..-n {
                        acc = acc.mul(&i);
                    }
                    Ok(self.scalar(acc))
                }
                None => err(at, "negative power of a non-invertible element"),
            }
        }
    }

    fn interval(&mut self) -> Result<Interval> {
        let start = self.pos;
        if self.peek() != Some(b'[') {
            return err(start, "expected an interval `[lo,hi)`");
        }
        let close = match self.src[self.pos..].iter().position(|&b| b == b')') {
            Some(k) => self.pos + k,
            None => return err(start, "unterminated interval"),
        };
        let inner = std::str::from_utf8(&self.src[self.pos + 1..close]).unwrap();
        let Some((lo, hi)) = inner.split_once(',') else {
            return err(start, "expected `[lo,hi)`");
        };
        let (Some(lo), Some(hi)) = (parse_rat(lo), parse_rat(hi)) else {
            return err(start, "bad interval endpoint");
        };
        self.pos = close + 1;
        Interval::new(lo, hi).or_else(|_| err(start, "empty interval"))
    }

    fn generator(&mut self, kind: &str, at: usize) -> Result<RawExpr<S>> {
        let iv = self.interval()?;
        let id = self.quiver.id_of(&iv)?;
        let g = match kind {
            "X+" | "x+" => Gen::Xp(id),
            "X-" | "x-" => Gen::Xm(id),
            "H" => Gen::H(id),
            "K" => Gen::K(id),
            "K^-1" | "Kinv" => Gen::Kinv(id),
            _ => Gen::Xi(id),
        };
        if !self.pres.allows(&g) {
            let _ = at;
            return Err(Error::UnknownGenerator { kind: kind.to_string(), presentation: self.pres.name().to_string() });
        }
        Ok(RawExpr::single(vec![g], self.one()))
    }

    fn atom(&mut self) -> Result<RawExpr<S>> {
        let at = {
            self.skip_ws();
            self.pos
        };
        for kind in ["X+", "X-", "x+", "x-", "Xi", "xi", "K^-1", "Kinv", "H", "K"] {
            if self.starts_with(kind) {
                let save = self.pos;
                self.pos += kind.len();
                if self.peek() == Some(b'[') {
                    return self.generator(kind, at);
                }
                self.pos = save;
            }
        }
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return err(self.pos, "expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(self.scalar(S::q_pow(self.ctx, 1)))
            }
            Some(b'h') => {
                self.pos += 1;
                match S::h_pow(self.ctx, 1) {
                    Some(h) => Ok(self.scalar(h)),
                    None => err(at, "`h` is not a scalar of this presentation"),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.int()?;
                Ok(self.scalar(S::from_int(self.ctx, n as i128)))
            }
            Some(_) => err(at, "unexpected character"),
            None => err(at, "unexpected end of input"),
        }
    }
}

/// Parses text into a free-algebra expression over the generators of `pres`.
pub fn parse_raw<S: Scalar>(text: &str, pres: Presentation, quiver: &Quiver, ctx: &S::Ctx) -> Result<RawExpr<S>> {
    let mut p = Parser::<S> { src: text.as_bytes(), pos: 0, pres, quiver, ctx };
    let e = p.expr()?;
    if p.peek().is_some() {
        return err(p.pos, "trailing input");
    }
    Ok(e)
}

impl<S: Scalar> Algebra<S> {
    /// Parses text as a free-algebra expression.
    pub fn parse_raw(&self, text: &str) -> Result<RawExpr<S>> {
        parse_raw(text, self.presentation(), self.quiver(), self.ctx())
    }

    /// Parses text and returns its normal form.
    pub fn parse(&self, text: &str) -> Result<super::Expr<S>> {
        self.eval_raw(&self.parse_raw(text)?)
    }
}
