//! Canonical text forms and the display basis.
//!
//! Words print as generators separated by `*`, e.g.
//! `X+[0,1)*H[1,2)*K^-1[0,1)*X-[0,2)`.  In `Uq` and `UqTilde` a normal form
//! is shown in the basis of ordered monomials `X+… · Π_c H_c^{e_c} K_c^{-f_c} · X-…`
//! with `0 ∈ {e_c, f_c}` on every cell, obtained from `K = 1 + t H`
//! (`t = q - 1`, resp. `t = 1`).

use super::expr::{Expr, Lin, RawExpr, TExpr};
use super::word::{CMono, Gen, Letter, RawWord, Word};
use super::{Algebra, CartanModel, Presentation};
use crate::coeffring::{binom_int, Scalar};
use crate::quiver::Quiver;

/// Text of one generator.
pub fn gen_text(pres: Presentation, q: &Quiver, g: &Gen) -> String {
    let classical = pres == Presentation::ClassicalU;
    let kind = match g {
        Gen::Xp(_) if classical => "x+",
        Gen::Xm(_) if classical => "x-",
        Gen::Xi(_) if classical => "xi",
        Gen::Xp(_) => "X+",
        Gen::Xm(_) => "X-",
        Gen::Xi(_) => "Xi",
        Gen::H(_) => "H",
        Gen::K(_) => "K",
        Gen::Kinv(_) => "K^-1",
    };
    format!("{kind}{}", q.interval(g.interval()))
}

/// Text of a raw word (`1` for the empty word).
pub fn raw_word_text(pres: Presentation, q: &Quiver, w: &RawWord) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|g| gen_text(pres, q, g)).collect::<Vec<_>>().join("*")
}

/// Text of a coefficient times a word.
pub fn term_text<S: Scalar>(coeff: &S, word: &str, one: &S) -> String {
    if coeff == one {
        word.to_string()
    } else if word == "1" {
        format!("({coeff})")
    } else {
        format!("({coeff})*{word}")
    }
}

/// Text of a raw expression (`0` when empty).
pub fn raw_expr_text<S: Scalar>(pres: Presentation, q: &Quiver, e: &RawExpr<S>, one: &S) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.iter().map(|(w, c)| term_text(c, &raw_word_text(pres, q, w), one)).collect::<Vec<_>>().join(" + ")
}

impl<S: Scalar> Algebra<S> {
    /// A word as raw generators, Cartan monomials written with `K^{±1}` or `Ξ`
    /// on cells (no change of basis).
    pub fn word_to_raw(&self, w: &Word) -> RawWord {
        let q = self.quiver();
        let mut out = Vec::new();
        for l in w {
            match l {
                Letter::P(a) => out.push(Gen::Xp(*a)),
                Letter::M(a) => out.push(Gen::Xm(*a)),
                Letter::C(m) => {
                    for c in 0..q.num_cells() {
                        let e = m.0[c];
                        let id = q.cell_id(c);
                        let g = match self.model() {
                            CartanModel::Polynomial => Gen::Xi(id),
                            CartanModel::Exponential if e > 0 => Gen::K(id),
                            CartanModel::Exponential => Gen::Kinv(id),
                        };
                        out.extend(std::iter::repeat_n(g, e.unsigned_abs() as usize));
                    }
                }
            }
        }
        out
    }

    /// Internal text of a word.
    pub fn word_text(&self, w: &Word) -> String {
        raw_word_text(self.presentation(), self.quiver(), &self.word_to_raw(w))
    }

    /// `K_c^m`, `m > 0`, in the display basis: `Σ_i C(m, i) t^i H_c^i`.
    fn positive_k(&self, cell: usize, m: i16) -> Vec<(S, RawWord)> {
        let id = self.quiver().cell_id(cell);
        let t = match self.presentation() {
            Presentation::Uq => self.q_s(1).sub(&self.one_s()),
            _ => self.one_s(),
        };
        let mut out = Vec::new();
        let mut tp = self.one_s();
        for i in 0..=m as u32 {
            let c = self.int_s(binom_int(m as i128, i)).mul(&tp);
            out.push((c, vec![Gen::H(id); i as usize]));
            tp = tp.mul(&t);
        }
        out
    }

    /// A Cartan monomial in the display basis: `H` (or `Ξ`) factors over
    /// cells first, then `K^-1` factors.
    fn cartan_display(&self, m: &CMono) -> Vec<(S, RawWord)> {
        let mut acc: Vec<(S, RawWord)> = vec![(self.one_s(), Vec::new())];
        let q = self.quiver();
        let mut tail = Vec::new();
        for c in 0..q.num_cells() {
            let e = m.0[c];
            if e == 0 {
                continue;
            }
            let factor: Vec<(S, RawWord)> = match self.model() {
                CartanModel::Polynomial => vec![(self.one_s(), vec![Gen::Xi(q.cell_id(c)); e as usize])],
                CartanModel::Exponential if e > 0 => self.positive_k(c, e),
                CartanModel::Exponential => {
                    tail.extend(std::iter::repeat_n(Gen::Kinv(q.cell_id(c)), (-e) as usize));
                    continue;
                }
            };
            let mut next = Vec::new();
            for (c0, w0) in &acc {
                for (c1, w1) in &factor {
                    let mut w = w0.clone();
                    w.extend_from_slice(w1);
                    next.push((c0.mul(c1), w));
                }
            }
            acc = next;
        }
        for (_, w) in acc.iter_mut() {
            w.extend_from_slice(&tail);
        }
        acc
    }

    /// A normal form rewritten in the display basis.
    pub fn to_display(&self, e: &Expr<S>) -> RawExpr<S> {
        let mut out = RawExpr::new();
        for (w, c) in e.iter() {
            let mut pre = Vec::new();
            let mut mid = vec![(self.one_s(), Vec::new())];
            let mut post = Vec::new();
            for l in w {
                match l {
                    Letter::P(a) => pre.push(Gen::Xp(*a)),
                    Letter::M(a) => post.push(Gen::Xm(*a)),
                    Letter::C(m) => mid = self.cartan_display(m),
                }
            }
            for (d, cw) in mid {
                let mut rw = pre.clone();
                rw.extend(cw);
                rw.extend(post.iter().copied());
                out.add_term(rw, c.mul(&d));
            }
        }
        out
    }

    /// Canonical text of a normal form.
    pub fn text(&self, e: &Expr<S>) -> String {
        raw_expr_text(self.presentation(), self.quiver(), &self.to_display(e), &self.one_s())
    }

    /// Canonical text of a tensor, every slot in the display basis; slots are
    /// separated by ` (x) `.
    pub fn tensor_text(&self, t: &TExpr<S>) -> String {
        let mut out: Lin<Vec<RawWord>, S> = Lin::new();
        for (ws, c) in t.iter() {
            let mut acc: Vec<(S, Vec<RawWord>)> = vec![(c.clone(), Vec::new())];
            for w in ws {
                let slot = self.to_display(&Expr::single(w.clone(), self.one_s()));
                let mut next = Vec::new();
                for (c0, rs) in &acc {
                    for (rw, c1) in slot.iter() {
                        let mut rs = rs.clone();
                        rs.push(rw.clone());
                        next.push((c0.mul(c1), rs));
                    }
                }
                acc = next;
            }
            for (c, rs) in acc {
                out.add_term(rs, c);
            }
        }
        if out.is_zero() {
            return "0".into();
        }
        let (pres, q, one) = (self.presentation(), self.quiver(), self.one_s());
        out.iter()
            .map(|(rs, c)| term_text(c, &rs.iter().map(|w| raw_word_text(pres, q, w)).collect::<Vec<_>>().join(" (x) "), &one))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Coefficients of a normal form in the display basis, in canonical word order.
    pub fn coeff_extract(&self, e: &Expr<S>) -> Vec<(String, S)> {
        self.to_display(e)
            .into_terms()
            .map(|(w, c)| (raw_word_text(self.presentation(), self.quiver(), &w), c))
            .collect()
    }
}
