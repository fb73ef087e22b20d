//! Coproduct, counit, antipode and iterated coproducts of every presentation,
//! plus the Hopf pairing between the Borel subalgebras of `UhTrunc`.
//!
//! On root vectors, with `f` the presentation's coproduct factor
//! (`q - 1`, `1`, `q - q^{-1}`, `1`, `0`):
//!
//! ```text
//! Δ(X+_α) = X+_α ⊗ 1 + K_α ⊗ X+_α + f Σ_{α=β⊕γ} p_{β,α} s+_{γβ} K_γ X+_β ⊗ X+_γ
//! Δ(X-_α) = 1 ⊗ X-_α + X-_α ⊗ K_α^{-1} - f Σ_{α=β⊕γ} p_{β,α} s-_{γβ} X-_β ⊗ X-_γ K_β^{-1}
//! ```
//!
//! Group-likes are group-like and `Ξ` is primitive.  The antipode is solved
//! from `m ∘ (S ⊗ id) ∘ Δ = ι ∘ ε` by induction on interval length; the
//! series `Σ_n (-1)^n m^{(n)} ∘ (id - ιε)^{⊗n} ∘ Δ^{(n)}` is available as an
//! independent cross-check.

pub mod pairing;

use std::collections::BTreeMap;

use crate::coeffring::{binom_int, Rat, Scalar};
use crate::error::{Error, Result};
use crate::ncalg::{clean, tensor_extend, Algebra, CMono, CartanModel, Expr, Letter, TExpr, Word};
use crate::quiver::IvId;

fn rat_s<S: Scalar>(alg: &Algebra<S>, r: &Rat, what: &str) -> Result<S> {
    S::from_rat(alg.ctx(), r).ok_or_else(|| Error::Structural(format!("coefficient {what} = {r} is not in the scalar ring")))
}

impl<S: Scalar> Algebra<S> {
    fn t1(&self, a: Word, b: Word, c: S) -> TExpr<S> {
        TExpr::single(vec![clean(a), clean(b)], c)
    }

    /// `Δ` of a Cartan monomial.
    fn coproduct_cartan(&self, m: &CMono) -> TExpr<S> {
        match self.model() {
            CartanModel::Exponential => self.t1(vec![Letter::C(*m)], vec![Letter::C(*m)], self.one_s()),
            CartanModel::Polynomial => {
                // Π_c (Ξ_c ⊗ 1 + 1 ⊗ Ξ_c)^{e_c}
                let mut acc: Vec<(S, CMono, CMono)> = vec![(self.one_s(), CMono::ONE, CMono::ONE)];
                for (c, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let mut next = Vec::new();
                    for (s, l, r) in &acc {
                        for j in 0..=e {
                            let mut l2 = *l;
                            let mut r2 = *r;
                            l2.0[c] += j;
                            r2.0[c] += e - j;
                            next.push((s.mul(&self.int_s(binom_int(e as i128, j as u32))), l2, r2));
                        }
                    }
                    acc = next;
                }
                let out = acc.into_iter().map(|(s, l, r)| (vec![clean(vec![Letter::C(l)]), clean(vec![Letter::C(r)])], s)).collect();
                self.clip_tensor(out)
            }
        }
    }

    fn coproduct_root(&self, l: Letter) -> Result<TExpr<S>> {
        let qv = self.quiver();
        let mut out = TExpr::new();
        let f = self.cop_factor().clone();
        match l {
            Letter::P(a) => {
                out.add_term(vec![vec![l], vec![]], self.one_s());
                for (c, m) in self.grouplike(a, 1) {
                    out.add_term(vec![clean(vec![Letter::C(m)]), vec![l]], c);
                }
                if !f.is_zero() {
                    for &(b, g) in qv.decompositions(a) {
                        let s = qv.row(g, b).splus.ok_or_else(|| Error::Structural("s+ undefined on a decomposition".into()))?;
                        let coeff = f.mul(&self.int_s(qv.p(b, a) as i128)).mul(&rat_s(self, &s, "s+")?);
                        if coeff.is_zero() {
                            continue;
                        }
                        for (c, m) in self.grouplike(g, 1) {
                            let left = self.mul_words(&clean(vec![Letter::C(m)]), &vec![Letter::P(b)])?;
                            let cc = coeff.mul(&c);
                            for (w, d) in left.iter() {
                                out.add_term(vec![w.clone(), vec![Letter::P(g)]], cc.mul(d));
                            }
                        }
                    }
                }
            }
            Letter::M(a) => {
                out.add_term(vec![vec![], vec![l]], self.one_s());
                for (c, m) in self.grouplike(a, -1) {
                    out.add_term(vec![vec![l], clean(vec![Letter::C(m)])], c);
                }
                if !f.is_zero() {
                    for &(b, g) in qv.decompositions(a) {
                        let s = qv.row(g, b).sminus.ok_or_else(|| Error::Structural("s- undefined on a decomposition".into()))?;
                        let coeff = f.mul(&self.int_s(qv.p(b, a) as i128)).mul(&rat_s(self, &s, "s-")?).neg();
                        if coeff.is_zero() {
                            continue;
                        }
                        for (c, m) in self.grouplike(b, -1) {
                            let right = self.mul_words(&vec![Letter::M(g)], &clean(vec![Letter::C(m)]))?;
                            let cc = coeff.mul(&c);
                            for (w, d) in right.iter() {
                                out.add_term(vec![vec![Letter::M(b)], w.clone()], cc.mul(d));
                            }
                        }
                    }
                }
            }
            Letter::C(m) => return Ok(self.coproduct_cartan(&m)),
        }
        Ok(self.clip_tensor(out))
    }

    /// `Δ` of a single letter (memoized).
    pub fn coproduct_letter(&self, l: Letter) -> Result<TExpr<S>> {
        if let Some(hit) = self.cop_cache.lock().unwrap().get(&l) {
            return Ok(hit.clone());
        }
        let res = self.coproduct_root(l)?;
        self.cop_cache.lock().unwrap().insert(l, res.clone());
        Ok(res)
    }

    /// `Δ` of a word, as the product of the letter coproducts.
    pub fn coproduct_word(&self, w: &Word) -> Result<TExpr<S>> {
        let mut acc = TExpr::single(vec![vec![], vec![]], self.one_s());
        for &l in w {
            let d = self.coproduct_letter(l)?;
            acc = self.tensor_mul(&acc, &d)?;
        }
        Ok(acc)
    }

    /// `Δ` of an expression.
    pub fn coproduct(&self, e: &Expr<S>) -> Result<TExpr<S>> {
        let mut out = TExpr::new();
        for (w, c) in e.iter() {
            let d = self.coproduct_word(w)?;
            for (k, v) in d.iter() {
                out.add_term(k.clone(), v.mul(c));
            }
        }
        Ok(self.clip_tensor(out))
    }

    /// Applies a linear map `Word -> TExpr` (of any output arity) in one slot.
    pub fn apply_in_slot(&self, t: &TExpr<S>, slot: usize, f: impl Fn(&Word) -> Result<TExpr<S>>) -> Result<TExpr<S>> {
        let mut out = TExpr::new();
        for (ws, c) in t.iter() {
            let image = f(&ws[slot])?;
            for (mid, d) in image.iter() {
                let mut k: Vec<Word> = ws[..slot].to_vec();
                k.extend(mid.iter().cloned());
                k.extend(ws[slot + 1..].iter().cloned());
                out.add_term(k, c.mul(d));
            }
        }
        Ok(self.clip_tensor(out))
    }

    /// `Δ^{(n)}`: `n = 0` is the identity (arity 1), `n = 1` is `Δ`, higher
    /// powers iterate on the leftmost slot.
    pub fn iterated_coproduct(&self, e: &Expr<S>, n: usize) -> Result<TExpr<S>> {
        let mut t: TExpr<S> = e.iter().map(|(w, c)| (vec![w.clone()], c.clone())).collect();
        for _ in 0..n {
            t = self.apply_in_slot(&t, 0, |w| self.coproduct_word(w))?;
        }
        Ok(t)
    }

    /// `Δ^{(n)}` iterating on the rightmost slot instead.
    pub fn iterated_coproduct_right(&self, e: &Expr<S>, n: usize) -> Result<TExpr<S>> {
        let mut t: TExpr<S> = e.iter().map(|(w, c)| (vec![w.clone()], c.clone())).collect();
        for k in 0..n {
            t = self.apply_in_slot(&t, k, |w| self.coproduct_word(w))?;
        }
        Ok(t)
    }

    /// Counit of a word.
    pub fn counit_word(&self, w: &Word) -> S {
        for l in w {
            match l {
                Letter::P(_) | Letter::M(_) => return self.zero_s(),
                Letter::C(m) => {
                    if self.model() == CartanModel::Polynomial && !m.is_one() {
                        return self.zero_s();
                    }
                }
            }
        }
        self.one_s()
    }

    /// Counit of an expression.
    pub fn counit(&self, e: &Expr<S>) -> S {
        e.iter().fold(self.zero_s(), |acc, (w, c)| acc.add(&c.mul(&self.counit_word(w))))
    }

    /// `(id - ι ε)` on an expression.
    pub fn augment(&self, e: &Expr<S>) -> Expr<S> {
        let mut out = e.clone();
        out.add_term(Vec::new(), self.counit(e).neg());
        out
    }

    /// Multiplies the slots of a tensor expression.
    pub fn multiply_slots(&self, t: &TExpr<S>) -> Result<Expr<S>> {
        let mut out = Expr::new();
        for (ws, c) in t.iter() {
            let mut acc = self.scalar(c.clone());
            for w in ws {
                acc = self.mul(&acc, &Expr::single(w.clone(), self.one_s()))?;
            }
            out = out.add(&acc);
        }
        Ok(self.clip_expr(out))
    }

    /// Contracts one slot with the counit.
    pub fn counit_in_slot(&self, t: &TExpr<S>, slot: usize) -> TExpr<S> {
        let mut out = TExpr::new();
        for (ws, c) in t.iter() {
            let e = self.counit_word(&ws[slot]);
            if e.is_zero() {
                continue;
            }
            let mut k = ws.clone();
            k.remove(slot);
            out.add_term(k, c.mul(&e));
        }
        out
    }

    /// Flattens an arity-1 tensor expression.
    pub fn untensor(&self, t: &TExpr<S>) -> Expr<S> {
        t.iter().map(|(ws, c)| (ws[0].clone(), c.clone())).collect()
    }

    // ----- antipode ------------------------------------------------------

    fn antipode_root(&self, l: Letter) -> Result<Expr<S>> {
        let qv = self.quiver();
        let f = self.cop_factor().clone();
        match l {
            Letter::C(m) => Ok(match self.model() {
                CartanModel::Exponential => self.letter(Letter::C(m.negated())),
                CartanModel::Polynomial => {
                    let sign = if m.degree() % 2 == 0 { self.one_s() } else { self.one_s().neg() };
                    Expr::single(vec![Letter::C(m)], sign)
                }
            }),
            Letter::P(a) => {
                // From m(S⊗id)Δ(X+_α) = 0, using S(K_γ X+_β) = S(X+_β) K_γ^{-1}:
                // S(X+_α) = -K_α^{-1} X+_α - f Σ c S(X+_β) K_γ^{-1} X+_γ
                let kinv = self.grouplike_expr(a, -1);
                let mut out = self.mul(&kinv, &self.letter(l))?.neg();
                if !f.is_zero() {
                    for &(b, g) in qv.decompositions(a) {
                        let s = qv.row(g, b).splus.ok_or_else(|| Error::Structural("s+ undefined on a decomposition".into()))?;
                        let coeff = f.mul(&self.int_s(qv.p(b, a) as i128)).mul(&rat_s(self, &s, "s+")?);
                        if coeff.is_zero() {
                            continue;
                        }
                        // S(K_γ X+_β) X+_γ = S(X+_β) K_γ^{-1} X+_γ
                        let sb = self.antipode_letter(Letter::P(b))?;
                        let rest = self.mul(&self.grouplike_expr(g, -1), &self.letter(Letter::P(g)))?;
                        let term = self.mul(&sb, &rest)?;
                        out.add_scaled(&term, &coeff.neg());
                    }
                }
                Ok(out)
            }
            Letter::M(a) => {
                // From m(S⊗id)Δ(X-_α) = 0:
                // X-_α + S(X-_α) K_α^{-1} - f Σ c S(X-_β) X-_γ K_β^{-1} = 0
                let k = self.grouplike_expr(a, 1);
                let mut inner = self.letter(l).neg();
                if !f.is_zero() {
                    for &(b, g) in qv.decompositions(a) {
                        let s = qv.row(g, b).sminus.ok_or_else(|| Error::Structural("s- undefined on a decomposition".into()))?;
                        let coeff = f.mul(&self.int_s(qv.p(b, a) as i128)).mul(&rat_s(self, &s, "s-")?);
                        if coeff.is_zero() {
                            continue;
                        }
                        let sb = self.antipode_letter(Letter::M(b))?;
                        let rest = self.mul(&self.letter(Letter::M(g)), &self.grouplike_expr(b, -1))?;
                        inner.add_scaled(&self.mul(&sb, &rest)?, &coeff);
                    }
                }
                self.mul(&inner, &k)
            }
        }
    }

    /// `S` of a single letter (memoized).
    pub fn antipode_letter(&self, l: Letter) -> Result<Expr<S>> {
        let key = vec![l];
        if let Some(hit) = self.antipode_cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let res = self.antipode_root(l)?;
        self.antipode_cache.lock().unwrap().insert(key, res.clone());
        Ok(res)
    }

    /// `S` of a word (anti-multiplicative, memoized on prefixes:
    /// `S(w·l) = S(l)·S(w)`).
    pub fn antipode_word(&self, w: &Word) -> Result<Expr<S>> {
        let Some((&last, prefix)) = w.split_last() else {
            return Ok(self.unit());
        };
        if prefix.is_empty() {
            return self.antipode_letter(last);
        }
        if let Some(hit) = self.antipode_cache.lock().unwrap().get(w) {
            return Ok(hit.clone());
        }
        let res = self.mul(&self.antipode_letter(last)?, &self.antipode_word(&prefix.to_vec())?)?;
        self.antipode_cache.lock().unwrap().insert(w.clone(), res.clone());
        Ok(res)
    }

    /// `S` of an expression.
    pub fn antipode(&self, e: &Expr<S>) -> Result<Expr<S>> {
        let mut out = Expr::new();
        for (w, c) in e.iter() {
            out.add_scaled(&self.antipode_word(w)?, c);
        }
        Ok(self.clip_expr(out))
    }

    /// The series `Σ_{n ≥ 0} (±1)^n m^{(n)} (id - ιε)^{⊗n} Δ^{(n)}(e)`, summed
    /// until a term vanishes or `max_terms` terms were added.  Returns the
    /// partial sum and whether the series terminated.
    pub fn antipode_series(&self, e: &Expr<S>, signed: bool, max_terms: usize) -> Result<(Expr<S>, bool)> {
        let mut sum = self.scalar(self.counit(e));
        for n in 1..=max_terms {
            let t = self.iterated_coproduct(e, n - 1)?;
            let mut aug = TExpr::new();
            for (ws, c) in t.iter() {
                let mut acc: TExpr<S> = TExpr::single(Vec::new(), c.clone());
                for w in ws {
                    let a = self.augment(&Expr::single(w.clone(), self.one_s()));
                    acc = tensor_extend(&acc, &a);
                }
                for (k, v) in acc.into_terms() {
                    aug.add_term(k, v);
                }
            }
            let aug = self.clip_tensor(aug);
            if aug.is_zero() {
                return Ok((sum, true));
            }
            let term = self.multiply_slots(&aug)?;
            if signed && n % 2 == 1 {
                sum = sum.sub(&term);
            } else {
                sum = sum.add(&term);
            }
        }
        Ok((sum, false))
    }

    /// `m ∘ (S ⊗ id) ∘ Δ` (`left = true`) or `m ∘ (id ⊗ S) ∘ Δ`.
    pub fn antipode_law(&self, e: &Expr<S>, left: bool) -> Result<Expr<S>> {
        let d = self.coproduct(e)?;
        let slot = if left { 0 } else { 1 };
        // Collect Σ c·S(w_slot) per word in the other slot, then multiply
        // once per distinct word.
        let mut grouped: BTreeMap<&Word, Expr<S>> = BTreeMap::new();
        for (ws, c) in d.iter() {
            let s = self.antipode_word(&ws[slot])?;
            grouped.entry(&ws[1 - slot]).or_default().add_scaled(&s, c);
        }
        let mut out = Expr::new();
        for (w, s) in grouped {
            let other = Expr::single(w.clone(), self.one_s());
            let p = if left { self.mul(&s, &other)? } else { self.mul(&other, &s)? };
            for (k, v) in p.into_terms() {
                out.add_term(k, v);
            }
        }
        Ok(self.clip_expr(out))
    }

    /// The Cartan letter of the group-like `K_α^m` in the exponential model.
    pub fn k_letter(&self, a: IvId, m: i16) -> Letter {
        Letter::C(CMono::on_cells(self.quiver().cell_range(a), m))
    }
}
