//! The defining relations of each presentation as free-algebra identities
//! `lhs = rhs` over raw generators.
//!
//! Cartan elements are written in the generators of the presentation
//! (`K^{±1}`, `H` on arbitrary intervals for `Uq`/`UqTilde`; `Ξ` for the
//! formal and classical ones), so that evaluating `lhs - rhs` in the algebra
//! is a genuine check of the rewriting engine and of the cell expansion.

use super::expr::RawExpr;
use super::word::{Gen, RawWord};
use super::{Algebra, CartanModel, Presentation, Sign};
use crate::coeffring::Scalar;
use crate::error::Result;
use crate::quiver::IvId;

/// One defining relation.
#[derive(Clone, Debug)]
pub struct Relation<S> {
    /// Short description, e.g. `mixed [0,1) [0,2)`.
    pub name: String,
    pub lhs: RawExpr<S>,
    pub rhs: RawExpr<S>,
}

impl<S: Scalar> Algebra<S> {
    fn raw1(&self, w: RawWord) -> RawExpr<S> {
        RawExpr::single(w, self.one_s())
    }

    fn raw_scaled(&self, w: RawWord, c: S) -> RawExpr<S> {
        RawExpr::single(w, c)
    }

    /// `K_α^m` over raw generators.
    fn raw_grouplike(&self, a: IvId, m: i64) -> Vec<(S, RawWord)> {
        match self.model() {
            CartanModel::Exponential => {
                let g = if m >= 0 { Gen::K(a) } else { Gen::Kinv(a) };
                vec![(self.one_s(), vec![g; m.unsigned_abs() as usize])]
            }
            CartanModel::Polynomial => self
                .grouplike(a, m)
                .into_iter()
                .map(|(c, mono)| (c, self.word_to_raw(&vec![super::Letter::C(mono)])))
                .collect(),
        }
    }

    fn name_of(&self, a: IvId) -> String {
        self.quiver().interval(a).to_string()
    }

    /// Right-hand side of the mixed relation over raw generators.
    pub fn raw_mixed_rhs(&self, a: IvId, b: IvId) -> RawExpr<S> {
        let qv = self.quiver();
        let mut out = RawExpr::new();
        if a == b {
            match self.model() {
                CartanModel::Exponential => {
                    // λ (1 + K_α^{-1}) H_α
                    out.add_term(vec![Gen::H(a)], self.lambda().clone());
                    out.add_term(vec![Gen::Kinv(a), Gen::H(a)], self.lambda().clone());
                }
                CartanModel::Polynomial => {
                    for (c, m) in self.cartan_term(a) {
                        out.add_term(self.word_to_raw(&vec![super::Letter::C(m)]), c);
                    }
                }
            }
        }
        let row = qv.row(a, b);
        let p = row.p;
        if p != 0 {
            let lp = self.lambda().mul(&self.int_s(p as i128));
            if let (Some(d), Some(cp)) = (qv.odiff(a, b), row.cplus.as_ref()) {
                let base = lp.mul(&self.q_s(crate::quiver::integral(cp).unwrap()));
                for (c, mut w) in self.raw_grouplike(b, p) {
                    w.insert(0, Gen::Xp(d));
                    out.add_term(w, base.mul(&c));
                }
            }
            if let (Some(d), Some(cm)) = (qv.odiff(b, a), row.cminus.as_ref()) {
                let base = lp.mul(&self.q_s(crate::quiver::integral(cm).unwrap())).neg();
                for (c, mut w) in self.raw_grouplike(a, p) {
                    w.push(Gen::Xm(d));
                    out.add_term(w, base.mul(&c));
                }
            }
        }
        if let (Some(bba), Some(bab), Some(u), Some(i)) =
            (qv.row(b, a).b, row.b, qv.strict_union(a, b), qv.strict_intersection(a, b))
        {
            if let (Some(up), Some(um), true) = (qv.odiff(u, b), qv.odiff(u, a), bba != 0) {
                let base = self.int_s(bba as i128).mul(&self.q_s(bba)).mul(self.qmqi());
                for (c, w) in self.raw_grouplike(i, bab) {
                    let mut full = vec![Gen::Xp(up)];
                    full.extend(w);
                    full.push(Gen::Xm(um));
                    out.add_term(full, base.mul(&c));
                }
            }
        }
        out
    }

    /// All defining relations on the current quiver.
    pub fn relations(&self) -> Vec<Relation<S>> {
        let qv = self.quiver();
        let ids: Vec<IvId> = qv.ids().collect();
        let mut rels = Vec::new();
        let mut push = |name: String, lhs: RawExpr<S>, rhs: RawExpr<S>| rels.push(Relation { name, lhs, rhs });
        let one = self.raw1(Vec::new());

        // Cartan part.
        match self.model() {
            CartanModel::Exponential => {
                let t = match self.presentation() {
                    Presentation::Uq => self.q_s(1).sub(&self.one_s()),
                    _ => self.one_s(),
                };
                for &a in &ids {
                    let n = self.name_of(a);
                    push(format!("inverse {n}"), self.raw1(vec![Gen::K(a), Gen::Kinv(a)]), one.clone());
                    push(format!("inverse' {n}"), self.raw1(vec![Gen::Kinv(a), Gen::K(a)]), one.clone());
                    push(
                        format!("K = 1 + tH {n}"),
                        self.raw1(vec![Gen::K(a)]),
                        one.add(&self.raw_scaled(vec![Gen::H(a)], t.clone())),
                    );
                    for &b in &ids {
                        let m = self.name_of(b);
                        push(
                            format!("HH {n} {m}"),
                            self.raw1(vec![Gen::H(a), Gen::H(b)]),
                            self.raw1(vec![Gen::H(b), Gen::H(a)]),
                        );
                        push(
                            format!("KH {n} {m}"),
                            self.raw1(vec![Gen::Kinv(a), Gen::H(b)]),
                            self.raw1(vec![Gen::H(b), Gen::Kinv(a)]),
                        );
                        let v = qv.sym(a, b);
                        push(
                            format!("KX+ {n} {m}"),
                            self.raw1(vec![Gen::K(a), Gen::Xp(b)]),
                            self.raw_scaled(vec![Gen::Xp(b), Gen::K(a)], self.q_s(v)),
                        );
                        push(
                            format!("KX- {n} {m}"),
                            self.raw1(vec![Gen::K(a), Gen::Xm(b)]),
                            self.raw_scaled(vec![Gen::Xm(b), Gen::K(a)], self.q_s(-v)),
                        );
                        // H X± - q^{±v} X± H = ((q^{±v} - 1)/t) X±
                        for (sign, g) in [(1, Gen::Xp(b)), (-1, Gen::Xm(b))] {
                            let qv_ = self.q_s(sign * v);
                            let diff = qv_.sub(&self.one_s());
                            let c = match self.presentation() {
                                Presentation::Uq => diff.mul(&S::qm1_inv(self.ctx()).unwrap()),
                                _ => diff,
                            };
                            let lhs = self.raw1(vec![Gen::H(a), g]).sub(&self.raw_scaled(vec![g, Gen::H(a)], qv_));
                            push(format!("HX{} {n} {m}", if sign > 0 { '+' } else { '-' }), lhs, self.raw_scaled(vec![g], c));
                        }
                        if let Some(s) = qv.osum(a, b) {
                            push(format!("K additive {n} {m}"), self.raw1(vec![Gen::K(s)]), self.raw1(vec![Gen::K(a), Gen::K(b)]));
                            push(
                                format!("H additive {n} {m}"),
                                self.raw1(vec![Gen::H(s)]),
                                self.raw1(vec![Gen::H(a), Gen::K(b)]).add(&self.raw1(vec![Gen::H(b)])),
                            );
                        }
                    }
                }
            }
            CartanModel::Polynomial => {
                let shift = match self.presentation() {
                    Presentation::UhTildeTrunc => S::h_pow(self.ctx(), 1).unwrap(),
                    _ => self.one_s(),
                };
                for &a in &ids {
                    let n = self.name_of(a);
                    for &b in &ids {
                        let m = self.name_of(b);
                        push(
                            format!("XiXi {n} {m}"),
                            self.raw1(vec![Gen::Xi(a), Gen::Xi(b)]),
                            self.raw1(vec![Gen::Xi(b), Gen::Xi(a)]),
                        );
                        let v = self.int_s(qv.sym(a, b) as i128).mul(&shift);
                        push(
                            format!("XiX+ {n} {m}"),
                            self.raw1(vec![Gen::Xi(a), Gen::Xp(b)]).sub(&self.raw1(vec![Gen::Xp(b), Gen::Xi(a)])),
                            self.raw_scaled(vec![Gen::Xp(b)], v.clone()),
                        );
                        push(
                            format!("XiX- {n} {m}"),
                            self.raw1(vec![Gen::Xi(a), Gen::Xm(b)]).sub(&self.raw1(vec![Gen::Xm(b), Gen::Xi(a)])),
                            self.raw_scaled(vec![Gen::Xm(b)], v.neg()),
                        );
                        if let Some(s) = qv.osum(a, b) {
                            push(
                                format!("Xi additive {n} {m}"),
                                self.raw1(vec![Gen::Xi(s)]),
                                self.raw1(vec![Gen::Xi(a)]).add(&self.raw1(vec![Gen::Xi(b)])),
                            );
                        }
                    }
                }
            }
        }

        // Root vectors.
        for &a in &ids {
            for &b in &ids {
                let (n, m) = (self.name_of(a), self.name_of(b));
                let lhs = self.raw1(vec![Gen::Xp(a), Gen::Xm(b)]).sub(&self.raw1(vec![Gen::Xm(b), Gen::Xp(a)]));
                push(format!("mixed {n} {m}"), lhs, self.raw_mixed_rhs(a, b));
                if qv.in_serre(a, b) {
                    let r = qv.row(a, b).r;
                    for sign in [Sign::Plus, Sign::Minus] {
                        let g = |x| match sign {
                            Sign::Plus => Gen::Xp(x),
                            Sign::Minus => Gen::Xm(x),
                        };
                        let lhs = self.raw1(vec![g(a), g(b)]).sub(&self.raw_scaled(vec![g(b), g(a)], self.q_s(r)));
                        let mut rhs = RawExpr::new();
                        for (c, w) in self.same_sign_rhs(sign, a, b) {
                            rhs.add_term(self.word_to_raw(&w), c);
                        }
                        let tag = if sign == Sign::Plus { '+' } else { '-' };
                        push(format!("serre{tag} {n} {m}"), lhs, rhs);
                    }
                }
            }
        }
        rels
    }

    /// Evaluates `lhs - rhs` of every relation; returns the names of those
    /// that do not vanish.
    pub fn check_relations(&self) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        for rel in self.relations() {
            let d = self.eval_raw(&rel.lhs.sub(&rel.rhs))?;
            if !d.is_zero() {
                bad.push(rel.name);
            }
        }
        Ok(bad)
    }
}
