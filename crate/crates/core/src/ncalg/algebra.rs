//! A presented algebra on a fixed quiver, with memoized PBW rewriting.
//!
//! All five presentations are handled by one engine.  Each is the formal
//! quantum group with root vectors rescaled as `X' = λ X`:
//!
//! | presentation | λ            | Cartan model                      |
//! |--------------|--------------|-----------------------------------|
//! | `Uq`         | `1 + q^-1`   | group-likes `K_c^{±1}`            |
//! | `UqTilde`    | `q - q^-1`   | group-likes `K_c^{±1}`            |
//! | `UhTrunc`    | `1`          | polynomials in `Ξ_c`, mod `h^N`   |
//! | `UhTildeTrunc` | `q - q^-1` | polynomials in `Ξ̄_c = hΞ_c`       |
//! | `ClassicalU` | `1`          | polynomials in `ξ_c`, at `h = 0`  |
//!
//! so that the mixed relation reads
//! `[X+_α, X-_β] = δ_{αβ} λ² (K_α - K_α^{-1})/(q - q^{-1}) + λ p_{αβ}(…) + b_{βα} q^{b_{βα}} (q - q^{-1}) X+ K X-`
//! and the same-sign relation
//! `X_α X_β - q^{r_{αβ}} X_β X_α = b_{αβ}(±λ q^{s±_{αβ}} X_{α⊕β} + (q - q^{-1}) X_{α∪̄β} X_{α∩̄β})`.
//!
//! Cartan generators on composite intervals are always expanded over cells.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use super::expr::{Expr, RawExpr, TExpr};
use super::word::{CMono, Gen, Letter, RawWord, Word};
use super::{CartanModel, Presentation, Sign};
use crate::coeffring::{binom_int, Rat, Scalar, SeriesH};
use crate::error::{Error, Result};
use crate::quiver::{integral, IvId, Quiver};

/// Default rewrite budget per normalization request.
pub const DEFAULT_FUEL: usize = 10_000;

/// Scalars attached to a presentation.
#[derive(Clone, Debug)]
struct Consts<S> {
    /// Rescaling factor `λ` of the root vectors.
    lambda: S,
    /// Factor in front of the decomposition sum of the coproduct.
    cop: S,
    /// `q - q^{-1}`.
    qmqi: S,
    /// Exponential model: coefficient of `K_α - K_α^{-1}` in the Cartan term.
    d_exp: Option<S>,
    /// Polynomial model: coefficients of `Ξ_α^k` in the Cartan term.
    d_poly: Vec<S>,
    /// Polynomial model: the shift `Ξ_c -> Ξ_c + σ (c|β)` uses `σ = shift`.
    shift: Option<S>,
    /// Polynomial model: group-likes are `exp(m · gl · Ξ / 2)`.
    gl: Option<S>,
}

/// A presented algebra with its rewriting engine and caches.
pub struct Algebra<S: Scalar> {
    pres: Presentation,
    quiver: Arc<Quiver>,
    ctx: S::Ctx,
    /// Truncation order (series order, and weight bound for `UhTildeTrunc`).
    order: usize,
    fuel: usize,
    consts: Consts<S>,
    /// `v_β[c] = (c|β)` for every interval `β` and cell `c`.
    cell_v: Vec<Vec<i64>>,
    append_cache: Mutex<HashMap<(Word, Letter), Expr<S>>>,
    pub(crate) cop_cache: Mutex<HashMap<Letter, TExpr<S>>>,
    pub(crate) antipode_cache: Mutex<HashMap<Word, Expr<S>>>,
}

impl<S: Scalar> std::fmt::Debug for Algebra<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("presentation", &self.pres)
            .field("grid", self.quiver.grid())
            .field("order", &self.order)
            .finish()
    }
}

fn factorial(k: usize) -> i128 {
    (1..=k as i128).product()
}

/// `κ` with `q - q^{-1} = h κ`, i.e. `κ = 2 sinh(h/2)/h`.
pub fn kappa(n: usize) -> SeriesH {
    let coeffs = (0..n)
        .map(|k| {
            if k % 2 == 0 {
                Rat::new(1, (1i128 << k) * factorial(k + 1))
            } else {
                Rat::zero()
            }
        })
        .collect();
    SeriesH::from_coeffs(n, coeffs)
}

impl<S: Scalar> Algebra<S> {
    /// Builds the algebra; `order` is the truncation order of the formal
    /// presentations (ignored by the polynomial ones, forced to 1 for the
    /// classical enveloping algebra).
    pub fn new(pres: Presentation, quiver: Arc<Quiver>, ctx: S::Ctx, order: usize, fuel: usize) -> Result<Self> {
        let model = pres.model();
        let one = S::one(&ctx);
        let q = |k| S::q_pow(&ctx, k);
        let qmqi = q(1).sub(&q(-1));
        let mismatch = || Error::Config(format!("scalar ring does not support presentation {}", pres.name()));
        let consts = match pres {
            Presentation::Uq | Presentation::UqTilde => {
                let inv_t = S::qm1_inv(&ctx).ok_or_else(mismatch)?;
                if pres == Presentation::Uq {
                    let lambda = one.add(&q(-1));
                    Consts {
                        d_exp: Some(lambda.mul(&inv_t)),
                        lambda,
                        cop: q(1).sub(&one),
                        qmqi,
                        d_poly: vec![],
                        shift: None,
                        gl: None,
                    }
                } else {
                    Consts {
                        lambda: qmqi.clone(),
                        cop: one.clone(),
                        d_exp: Some(qmqi.clone()),
                        qmqi,
                        d_poly: vec![],
                        shift: None,
                        gl: None,
                    }
                }
            }
            Presentation::UhTrunc | Presentation::ClassicalU => {
                let n = if pres == Presentation::ClassicalU { 1 } else { order };
                let kinv = kappa(n).inv().expect("kappa is a unit");
                let kinv = S::from_series(&ctx, &kinv).ok_or_else(mismatch)?;
                // (K - K^{-1})/(q - q^{-1}) = Σ_{k odd} 2 (1/2)^k h^{k-1} Ξ^k / k! · κ^{-1}
                let d_poly = (0..=n)
                    .map(|k| {
                        if k % 2 == 1 {
                            let c = Rat::new(2, (1i128 << k) * factorial(k));
                            let hp = S::h_pow(&ctx, k - 1).expect("series ring");
                            S::from_rat(&ctx, &c).unwrap().mul(&hp).mul(&kinv)
                        } else {
                            S::zero(&ctx)
                        }
                    })
                    .collect();
                Consts {
                    lambda: one.clone(),
                    cop: qmqi.clone(),
                    qmqi,
                    d_exp: None,
                    d_poly,
                    shift: Some(one.clone()),
                    gl: Some(S::h_pow(&ctx, 1).ok_or_else(mismatch)?),
                }
            }
            Presentation::UhTildeTrunc => {
                // (q - q^{-1})(K̄ - K̄^{-1}) = (q - q^{-1}) Σ_{k odd} 2 (1/2)^k Ξ̄^k / k!
                let d_poly = (0..=order)
                    .map(|k| {
                        if k % 2 == 1 {
                            let c = Rat::new(2, (1i128 << k) * factorial(k));
                            S::from_rat(&ctx, &c).unwrap().mul(&qmqi)
                        } else {
                            S::zero(&ctx)
                        }
                    })
                    .collect();
                Consts {
                    lambda: qmqi.clone(),
                    cop: one.clone(),
                    qmqi,
                    d_exp: None,
                    d_poly,
                    shift: Some(S::h_pow(&ctx, 1).ok_or_else(mismatch)?),
                    gl: Some(one.clone()),
                }
            }
        };
        if model == CartanModel::Polynomial && S::from_series(&ctx, &SeriesH::zero(1)).is_none() {
            return Err(mismatch());
        }
        let cells = quiver.num_cells();
        let cell_v = quiver.ids().map(|b| (0..cells).map(|c| quiver.sym_cell(c, b)).collect()).collect();
        let order = if pres == Presentation::ClassicalU { 1 } else { order };
        Ok(Algebra {
            pres,
            quiver,
            ctx,
            order,
            fuel,
            consts,
            cell_v,
            append_cache: Mutex::new(HashMap::new()),
            cop_cache: Mutex::new(HashMap::new()),
            antipode_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn presentation(&self) -> Presentation {
        self.pres
    }
    pub fn model(&self) -> CartanModel {
        self.pres.model()
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn quiver_arc(&self) -> Arc<Quiver> {
        self.quiver.clone()
    }
    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }
    pub fn order(&self) -> usize {
        self.order
    }
    pub fn fuel(&self) -> usize {
        self.fuel
    }

    // ----- scalars -------------------------------------------------------

    pub fn zero_s(&self) -> S {
        S::zero(&self.ctx)
    }
    pub fn one_s(&self) -> S {
        S::one(&self.ctx)
    }
    pub fn int_s(&self, n: i128) -> S {
        S::from_int(&self.ctx, n)
    }
    pub fn q_s(&self, k: i64) -> S {
        S::q_pow(&self.ctx, k)
    }
    /// `λ`, the root-vector rescaling of the presentation.
    pub fn lambda(&self) -> &S {
        &self.consts.lambda
    }
    /// `q - q^{-1}`.
    pub fn qmqi(&self) -> &S {
        &self.consts.qmqi
    }
    /// Factor in front of the coproduct decomposition sums.
    pub fn cop_factor(&self) -> &S {
        &self.consts.cop
    }

    // ----- expressions ---------------------------------------------------

    /// The unit.
    pub fn unit(&self) -> Expr<S> {
        Expr::single(Vec::new(), self.one_s())
    }

    /// A scalar multiple of the unit.
    pub fn scalar(&self, c: S) -> Expr<S> {
        Expr::single(Vec::new(), c)
    }

    /// A single letter.
    pub fn letter(&self, l: Letter) -> Expr<S> {
        Expr::single(clean(vec![l]), self.one_s())
    }

    /// `(c|β)` for every cell `c`.
    pub fn cell_vector(&self, b: IvId) -> &[i64] {
        &self.cell_v[b as usize]
    }

    /// Weight used by the weighted truncation: number of root vectors plus
    /// total Cartan degree (polynomial model only).
    pub fn weight(&self, w: &Word) -> usize {
        w.iter()
            .map(|l| match l {
                Letter::P(_) | Letter::M(_) => 1,
                Letter::C(m) => match self.model() {
                    CartanModel::Polynomial => m.degree() as usize,
                    CartanModel::Exponential => 0,
                },
            })
            .sum()
    }

    /// Applies the truncation of `UhTildeTrunc` (terms of weight plus
    /// `h`-degree at least the order vanish); the identity elsewhere.
    pub fn clip(&self, weight: usize, mut c: S) -> Option<S> {
        if self.pres != Presentation::UhTildeTrunc {
            return if c.is_zero() { None } else { Some(c) };
        }
        if weight >= self.order {
            return None;
        }
        c.truncate_h(self.order - weight);
        (!c.is_zero()).then_some(c)
    }

    /// Applies [`Algebra::clip`] to every term.
    pub fn clip_expr(&self, e: Expr<S>) -> Expr<S> {
        if self.pres != Presentation::UhTildeTrunc {
            return e;
        }
        e.into_terms().filter_map(|(w, c)| self.clip(self.weight(&w), c).map(|c| (w, c))).collect()
    }

    /// Clips a tensor expression by total weight.
    pub fn clip_tensor(&self, t: TExpr<S>) -> TExpr<S> {
        if self.pres != Presentation::UhTildeTrunc {
            return t;
        }
        t.into_terms()
            .filter_map(|(ws, c)| {
                let w = ws.iter().map(|w| self.weight(w)).sum();
                self.clip(w, c).map(|c| (ws, c))
            })
            .collect()
    }

    // ----- Cartan building blocks -----------------------------------------

    /// `Ξ_α^k` expanded over the cells of `α` (polynomial model).
    fn xi_power(&self, a: IvId, k: usize) -> Vec<(Rat, CMono)> {
        let cells: Vec<usize> = self.quiver.cell_range(a).collect();
        let mut out = Vec::new();
        // Multinomial expansion of (Σ_c Ξ_c)^k.
        fn rec(cells: &[usize], k: usize, cur: &mut CMono, coeff: Rat, out: &mut Vec<(Rat, CMono)>) {
            if cells.len() == 1 {
                cur.0[cells[0]] += k as i16;
                out.push((coeff, *cur));
                cur.0[cells[0]] -= k as i16;
                return;
            }
            for j in 0..=k {
                cur.0[cells[0]] += j as i16;
                let c = coeff * Rat::from_integer(binom_int(k as i128, j as u32));
                rec(&cells[1..], k - j, cur, c, out);
                cur.0[cells[0]] -= j as i16;
            }
        }
        let mut cur = CMono::ONE;
        rec(&cells, k, &mut cur, Rat::one(), &mut out);
        out
    }

    /// The group-like `K_α^m` as a combination of Cartan monomials.
    pub fn grouplike(&self, a: IvId, m: i64) -> Vec<(S, CMono)> {
        match self.model() {
            CartanModel::Exponential => vec![(self.one_s(), CMono::on_cells(self.quiver.cell_range(a), m as i16))],
            CartanModel::Polynomial => {
                // exp(m · gl · Ξ_α / 2) = Σ_k (m/2)^k gl^k Ξ_α^k / k!
                let gl = self.consts.gl.as_ref().unwrap();
                let mut out = Vec::new();
                let mut glk = self.one_s();
                for k in 0..self.order {
                    if glk.is_zero() {
                        break;
                    }
                    let c = num_traits::pow(Rat::new(m as i128, 2), k) / Rat::from_integer(factorial(k));
                    let base = S::from_rat(&self.ctx, &c).unwrap().mul(&glk);
                    for (r, mono) in self.xi_power(a, k) {
                        out.push((base.mul(&S::from_rat(&self.ctx, &r).unwrap()), mono));
                    }
                    glk = glk.mul(gl);
                }
                out
            }
        }
    }

    /// The group-like `K_α^m` as an expression.
    pub fn grouplike_expr(&self, a: IvId, m: i64) -> Expr<S> {
        self.grouplike(a, m).into_iter().map(|(c, mono)| (clean(vec![Letter::C(mono)]), c)).collect()
    }

    /// `Ξ_α` as an expression (polynomial model).
    pub fn xi_expr(&self, a: IvId) -> Expr<S> {
        self.xi_power(a, 1)
            .into_iter()
            .map(|(r, mono)| (vec![Letter::C(mono)], S::from_rat(&self.ctx, &r).unwrap()))
            .collect()
    }

    /// Moves a Cartan monomial past a root vector on `β`:
    /// `C(m) · X+_β = Σ c_i X+_β · C(m_i)` and `X-_β · C(m) = Σ c_i C(m_i) · X-_β`.
    pub fn shift(&self, m: &CMono, b: IvId) -> Vec<(S, CMono)> {
        let v = self.cell_vector(b);
        match self.model() {
            CartanModel::Exponential => vec![(self.q_s(m.dot(v)), *m)],
            CartanModel::Polynomial => {
                // Π_c (Ξ_c + σ v_c)^{e_c}
                let sigma = self.consts.shift.as_ref().unwrap();
                let mut acc: Vec<(S, CMono)> = vec![(self.one_s(), CMono::ONE)];
                for (c, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let mut next = Vec::new();
                    for (coeff, mono) in &acc {
                        for j in 0..=e as u32 {
                            let rest = e as u32 - j;
                            let scal = Rat::from_integer(binom_int(e as i128, j)) * num_traits::pow(Rat::from_integer(v[c] as i128), rest as usize);
                            if scal.is_zero() {
                                continue;
                            }
                            let mut s = coeff.mul(&S::from_rat(&self.ctx, &scal).unwrap());
                            for _ in 0..rest {
                                s = s.mul(sigma);
                            }
                            if s.is_zero() {
                                continue;
                            }
                            let mut nm = *mono;
                            nm.0[c] += j as i16;
                            next.push((s, nm));
                        }
                    }
                    acc = next;
                }
                acc
            }
        }
    }

    /// `λ² (K_α - K_α^{-1})/(q - q^{-1})` expanded over Cartan monomials.
    pub fn cartan_term(&self, a: IvId) -> Vec<(S, CMono)> {
        match self.model() {
            CartanModel::Exponential => {
                let d = self.consts.d_exp.clone().unwrap();
                let m = CMono::on_cells(self.quiver.cell_range(a), 1);
                vec![(d.clone(), m), (d.neg(), m.negated())]
            }
            CartanModel::Polynomial => {
                let mut out = Vec::new();
                for (k, d) in self.consts.d_poly.iter().enumerate() {
                    if d.is_zero() {
                        continue;
                    }
                    for (r, mono) in self.xi_power(a, k) {
                        out.push((d.mul(&S::from_rat(&self.ctx, &r).unwrap()), mono));
                    }
                }
                out
            }
        }
    }

    /// Right-hand side of `X+_α X-_β - X-_β X+_α` as unnormalized words.
    pub fn mixed_rhs(&self, a: IvId, b: IvId) -> Vec<(S, Word)> {
        let qv = &self.quiver;
        let mut out = Vec::new();
        if a == b {
            for (c, m) in self.cartan_term(a) {
                out.push((c, clean(vec![Letter::C(m)])));
            }
        }
        let row = qv.row(a, b);
        let p = row.p;
        if p != 0 {
            let lp = self.consts.lambda.mul(&self.int_s(p as i128));
            if let (Some(d), Some(cp)) = (qv.odiff(a, b), row.cplus.as_ref()) {
                let e = integral(cp).expect("integral exponent c+");
                let base = lp.mul(&self.q_s(e));
                for (c, m) in self.grouplike(b, p) {
                    out.push((base.mul(&c), clean(vec![Letter::P(d), Letter::C(m)])));
                }
            }
            if let (Some(d), Some(cm)) = (qv.odiff(b, a), row.cminus.as_ref()) {
                let e = integral(cm).expect("integral exponent c-");
                let base = lp.mul(&self.q_s(e)).neg();
                for (c, m) in self.grouplike(a, p) {
                    out.push((base.mul(&c), clean(vec![Letter::C(m), Letter::M(d)])));
                }
            }
        }
        let bba = qv.row(b, a).b;
        let bab = row.b;
        if let (Some(bba), Some(bab), Some(u), Some(i)) = (bba, bab, qv.strict_union(a, b), qv.strict_intersection(a, b)) {
            if bba != 0 {
                if let (Some(up), Some(um)) = (qv.odiff(u, b), qv.odiff(u, a)) {
                    let base = self.int_s(bba as i128).mul(&self.q_s(bba)).mul(&self.consts.qmqi);
                    for (c, m) in self.grouplike(i, bab) {
                        out.push((base.mul(&c), clean(vec![Letter::P(up), Letter::C(m), Letter::M(um)])));
                    }
                }
            }
        }
        out
    }

    /// Right-hand side of `X_α X_β - q^{r_{αβ}} X_β X_α` for the given sign.
    pub fn same_sign_rhs(&self, sign: Sign, a: IvId, b: IvId) -> Vec<(S, Word)> {
        let qv = &self.quiver;
        let row = qv.row(a, b);
        let mk = |x: IvId| match sign {
            Sign::Plus => Letter::P(x),
            Sign::Minus => Letter::M(x),
        };
        let mut out = Vec::new();
        let Some(bv) = row.b else { return out };
        if bv == 0 {
            return out;
        }
        let bs = self.int_s(bv as i128);
        if let Some(s) = qv.osum(a, b) {
            let sp = match sign {
                Sign::Plus => row.splus.as_ref(),
                Sign::Minus => row.sminus.as_ref(),
            };
            let e = integral(sp.expect("s± defined with ⊕")).expect("integral exponent s±");
            let mut c = bs.mul(&self.consts.lambda).mul(&self.q_s(e));
            if sign == Sign::Minus {
                c = c.neg();
            }
            out.push((c, vec![mk(s)]));
        }
        if let (Some(u), Some(i)) = (qv.strict_union(a, b), qv.strict_intersection(a, b)) {
            out.push((bs.mul(&self.consts.qmqi), vec![mk(u), mk(i)]));
        }
        out
    }

    /// Rewrites the out-of-order pair `X_b X_a` (`rank b > rank a`), or
    /// `None` when neither `(a,b)` nor `(b,a)` is a Serre pair.
    pub fn reorder(&self, sign: Sign, b: IvId, a: IvId) -> Option<Vec<(S, Word)>> {
        let qv = &self.quiver;
        let mk = |x: IvId| match sign {
            Sign::Plus => Letter::P(x),
            Sign::Minus => Letter::M(x),
        };
        if qv.in_serre(b, a) {
            // X_b X_a = q^{r_ba} X_a X_b + RHS(b, a)
            let mut out = vec![(self.q_s(qv.row(b, a).r), vec![mk(a), mk(b)])];
            out.extend(self.same_sign_rhs(sign, b, a));
            Some(out)
        } else if qv.in_serre(a, b) {
            // X_a X_b - q^{r_ab} X_b X_a = RHS(a, b)
            let qi = self.q_s(-qv.row(a, b).r);
            let mut out = vec![(qi.clone(), vec![mk(a), mk(b)])];
            for (c, w) in self.same_sign_rhs(sign, a, b) {
                out.push((c.mul(&qi).neg(), w));
            }
            Some(out)
        } else {
            None
        }
    }

    /// Whether the same-sign pair `(b, a)` with `rank b > rank a` can be reordered.
    pub fn orderable(&self, b: IvId, a: IvId) -> bool {
        self.quiver.in_serre(b, a) || self.quiver.in_serre(a, b)
    }

    // ----- memoized normal forms -----------------------------------------

    fn burn(&self, fuel: &mut usize, w: &Word) -> Result<()> {
        if *fuel == 0 {
            return Err(Error::FuelExhausted { fuel: self.fuel, word: self.word_text(w) });
        }
        *fuel -= 1;
        Ok(())
    }

    /// Normal form of `w · l` for a normal word `w`.
    fn append(&self, w: &Word, l: Letter, fuel: &mut usize) -> Result<Expr<S>> {
        if let Letter::C(m) = l {
            if m.is_one() {
                return Ok(Expr::single(w.clone(), self.one_s()));
            }
        }
        let key = (w.clone(), l);
        if let Some(hit) = self.append_cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let res = self.append_uncached(w, l, fuel)?;
        let res = self.clip_expr(res);
        self.append_cache.lock().unwrap().insert(key, res.clone());
        Ok(res)
    }

    fn append_uncached(&self, w: &Word, l: Letter, fuel: &mut usize) -> Result<Expr<S>> {
        let one = self.one_s();
        let Some(&last) = w.last() else {
            return Ok(Expr::single(vec![l], one));
        };
        let u: Word = w[..w.len() - 1].to_vec();
        let pushed = || {
            let mut v = w.clone();
            v.push(l);
            Expr::single(v, self.one_s())
        };
        match (last, l) {
            // Cartan letters.
            (Letter::P(_), Letter::C(_)) => Ok(pushed()),
            (Letter::C(m0), Letter::C(m)) => {
                let mut v = u;
                let merged = m0.plus(&m);
                if !merged.is_one() {
                    v.push(Letter::C(merged));
                }
                Ok(Expr::single(v, one))
            }
            (Letter::M(b), Letter::C(m)) => {
                self.burn(fuel, w)?;
                let mut out = Expr::new();
                for (c, mi) in self.shift(&m, b) {
                    let part = self.append(&u, Letter::C(mi), fuel)?;
                    let part = self.append_expr(&part, Letter::M(b), fuel)?;
                    out.add_scaled(&part, &c);
                }
                Ok(out)
            }
            // Positive root vectors.
            (Letter::P(b), Letter::P(a)) => {
                let qv = &self.quiver;
                if qv.rank(b) <= qv.rank(a) {
                    return Ok(pushed());
                }
                match self.reorder(Sign::Plus, b, a) {
                    None => Ok(pushed()),
                    Some(terms) => {
                        self.burn(fuel, w)?;
                        self.mul_word_terms(&u, &terms, fuel)
                    }
                }
            }
            (Letter::C(m), Letter::P(a)) => {
                self.burn(fuel, w)?;
                let base = self.append(&u, Letter::P(a), fuel)?;
                let mut out = Expr::new();
                for (c, mi) in self.shift(&m, a) {
                    let part = self.append_expr(&base, Letter::C(mi), fuel)?;
                    out.add_scaled(&part, &c);
                }
                Ok(out)
            }
            (Letter::M(b), Letter::P(a)) => {
                self.burn(fuel, w)?;
                // X-_b X+_a = X+_a X-_b - mixed(a, b)
                let base = self.append(&u, Letter::P(a), fuel)?;
                let mut out = self.append_expr(&base, Letter::M(b), fuel)?;
                let rhs: Vec<(S, Word)> = self.mixed_rhs(a, b).into_iter().map(|(c, w)| (c.neg(), w)).collect();
                let corr = self.mul_word_terms(&u, &rhs, fuel)?;
                out = out.add(&corr);
                Ok(out)
            }
            // Negative root vectors.
            (Letter::M(b), Letter::M(a)) => {
                let qv = &self.quiver;
                if qv.rank(b) <= qv.rank(a) {
                    return Ok(pushed());
                }
                match self.reorder(Sign::Minus, b, a) {
                    None => Ok(pushed()),
                    Some(terms) => {
                        self.burn(fuel, w)?;
                        self.mul_word_terms(&u, &terms, fuel)
                    }
                }
            }
            (_, Letter::M(_)) => Ok(pushed()),
        }
    }

    /// `Σ c · nf(u · word)` for a normal word `u`.
    fn mul_word_terms(&self, u: &Word, terms: &[(S, Word)], fuel: &mut usize) -> Result<Expr<S>> {
        let mut out = Expr::new();
        for (c, word) in terms {
            let mut cur = Expr::single(u.clone(), self.one_s());
            for &l in word {
                cur = self.append_expr(&cur, l, fuel)?;
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }

    fn append_expr(&self, e: &Expr<S>, l: Letter, fuel: &mut usize) -> Result<Expr<S>> {
        let mut out = Expr::new();
        for (w, c) in e.iter() {
            let part = self.append(w, l, fuel)?;
            out.add_scaled(&part, c);
        }
        Ok(self.clip_expr(out))
    }

    /// Normal form of an arbitrary word.
    pub fn normalize_word(&self, w: &Word) -> Result<Expr<S>> {
        let mut fuel = self.fuel;
        let mut cur = self.unit();
        for &l in w {
            cur = self.append_expr(&cur, l, &mut fuel)?;
        }
        Ok(cur)
    }

    /// Normal form of an arbitrary expression.
    pub fn normalize(&self, e: &Expr<S>) -> Result<Expr<S>> {
        let mut out = Expr::new();
        for (w, c) in e.iter() {
            let n = self.normalize_word(w)?;
            out.add_scaled(&n, c);
        }
        Ok(self.clip_expr(out))
    }

    /// Product of two normal-form expressions, in normal form.
    pub fn mul(&self, a: &Expr<S>, b: &Expr<S>) -> Result<Expr<S>> {
        let mut out = Expr::new();
        for (wb, cb) in b.iter() {
            let mut cur = a.clone();
            let mut fuel = self.fuel;
            for &l in wb {
                cur = self.append_expr(&cur, l, &mut fuel)?;
            }
            out.add_scaled(&cur, cb);
        }
        Ok(self.clip_expr(out))
    }

    /// Product of normal words.
    pub fn mul_words(&self, a: &Word, b: &Word) -> Result<Expr<S>> {
        let mut fuel = self.fuel;
        let mut cur = Expr::single(a.clone(), self.one_s());
        for &l in b {
            cur = self.append_expr(&cur, l, &mut fuel)?;
        }
        Ok(cur)
    }

    /// `a · b - b · a`.
    pub fn commutator(&self, a: &Expr<S>, b: &Expr<S>) -> Result<Expr<S>> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// Integer power of a normal-form expression.
    pub fn pow(&self, a: &Expr<S>, n: usize) -> Result<Expr<S>> {
        let mut acc = self.unit();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    // ----- tensors ---------------------------------------------------------

    /// Slotwise normal form of a tensor expression.
    pub fn tensor_normalize(&self, t: &TExpr<S>) -> Result<TExpr<S>> {
        let mut out = TExpr::new();
        for (ws, c) in t.iter() {
            let mut acc: TExpr<S> = TExpr::single(Vec::new(), c.clone());
            for w in ws {
                let n = self.normalize_word(w)?;
                acc = tensor_extend(&acc, &n);
            }
            for (k, v) in acc.into_terms() {
                out.add_term(k, v);
            }
        }
        Ok(self.clip_tensor(out))
    }

    /// Slotwise product of two normal tensor expressions of equal arity.
    pub fn tensor_mul(&self, a: &TExpr<S>, b: &TExpr<S>) -> Result<TExpr<S>> {
        let mut out = TExpr::new();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                debug_assert_eq!(wa.len(), wb.len());
                let c = ca.mul(cb);
                let mut acc: TExpr<S> = TExpr::single(Vec::new(), c);
                for (x, y) in wa.iter().zip(wb) {
                    let p = self.mul_words(x, y)?;
                    acc = tensor_extend(&acc, &p);
                    if acc.is_zero() {
                        break;
                    }
                }
                for (k, v) in acc.into_terms() {
                    out.add_term(k, v);
                }
            }
        }
        Ok(self.clip_tensor(out))
    }

    // ----- raw generators ------------------------------------------------

    /// The image of a raw generator.
    pub fn gen_expr(&self, g: Gen) -> Result<Expr<S>> {
        let qv = &self.quiver;
        let unavailable = |kind: &str| Error::UnknownGenerator { kind: kind.to_string(), presentation: self.pres.name().to_string() };
        match (g, self.model()) {
            (Gen::Xp(a), _) => Ok(self.letter(Letter::P(a))),
            (Gen::Xm(a), _) => Ok(self.letter(Letter::M(a))),
            (Gen::K(a), _) => Ok(self.grouplike_expr(a, 1)),
            (Gen::Kinv(a), _) => Ok(self.grouplike_expr(a, -1)),
            (Gen::H(a), CartanModel::Exponential) => {
                // Uq: (K - 1)/(q - 1);  UqTilde: K - 1.
                let k = CMono::on_cells(qv.cell_range(a), 1);
                let c = match self.pres {
                    Presentation::Uq => S::qm1_inv(&self.ctx).unwrap(),
                    _ => self.one_s(),
                };
                let mut e = Expr::single(vec![Letter::C(k)], c.clone());
                e.add_term(Vec::new(), c.neg());
                Ok(e)
            }
            (Gen::H(_), CartanModel::Polynomial) => Err(unavailable("H")),
            (Gen::Xi(a), CartanModel::Polynomial) => Ok(self.xi_expr(a)),
            (Gen::Xi(_), CartanModel::Exponential) => Err(unavailable("Xi")),
        }
    }

    /// Evaluates a free-algebra expression in normal form.
    pub fn eval_raw(&self, raw: &RawExpr<S>) -> Result<Expr<S>> {
        let mut out = Expr::new();
        for (rw, c) in raw.iter() {
            let mut cur = self.scalar(c.clone());
            for g in rw {
                let ge = self.gen_expr(*g)?;
                cur = self.mul(&cur, &ge)?;
            }
            out = out.add(&cur);
        }
        Ok(self.clip_expr(out))
    }

    /// Evaluates a single raw word.
    pub fn eval_raw_word(&self, rw: &RawWord) -> Result<Expr<S>> {
        self.eval_raw(&RawExpr::single(rw.clone(), self.one_s()))
    }

    // ----- shape ---------------------------------------------------------

    /// Whether the word has the triangular shape `X+^* C? X-^*`.
    pub fn is_triangular(&self, w: &Word) -> bool {
        let phase = |l: &Letter| match l {
            Letter::P(_) => 0,
            Letter::C(_) => 1,
            Letter::M(_) => 2,
        };
        let mut cartans = 0;
        for pair in w.windows(2) {
            if phase(&pair[0]) > phase(&pair[1]) {
                return false;
            }
        }
        for l in w {
            if let Letter::C(m) = l {
                cartans += 1;
                if m.is_one() {
                    return false;
                }
            }
        }
        cartans <= 1
    }

    /// Whether every adjacent same-sign pair is in nondecreasing interval order.
    pub fn is_ordered(&self, w: &Word) -> bool {
        let qv = &self.quiver;
        w.windows(2).all(|p| match (p[0], p[1]) {
            (Letter::P(b), Letter::P(a)) | (Letter::M(b), Letter::M(a)) => qv.rank(b) <= qv.rank(a),
            _ => true,
        })
    }

    /// Words of a normal form that could not be fully ordered (no Serre relation).
    pub fn unordered_words<'a>(&self, e: &'a Expr<S>) -> Vec<&'a Word> {
        e.iter().map(|(w, _)| w).filter(|w| !self.is_ordered(w)).collect()
    }

    /// Number of cached append results (diagnostics).
    pub fn cache_size(&self) -> usize {
        self.append_cache.lock().unwrap().len()
    }
}

/// Removes identity Cartan letters.
pub fn clean(mut w: Word) -> Word {
    w.retain(|l| !matches!(l, Letter::C(m) if m.is_one()));
    w
}

/// `t ⊗ e` (adds one slot).
pub fn tensor_extend<S: Scalar>(t: &TExpr<S>, e: &Expr<S>) -> TExpr<S> {
    let mut out = TExpr::new();
    for (ws, c) in t.iter() {
        for (w, d) in e.iter() {
            let mut k = ws.clone();
            k.push(w.clone());
            out.add_term(k, c.mul(d));
        }
    }
    out
}

/// Tensor product of expressions.
pub fn tensor_of<S: Scalar>(parts: &[&Expr<S>], one: S) -> TExpr<S> {
    let mut acc = TExpr::single(Vec::new(), one);
    for p in parts {
        acc = tensor_extend(&acc, p);
    }
    acc
}
