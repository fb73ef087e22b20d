//! Semiclassical limits: `q → 1` for the polynomial presentations and
//! `h → 0` for the formal ones.
//!
//! * `Uq` and `UhTrunc` specialize to `U(g_X)` (the `ClassicalU`
//!   presentation): `K ↦ 1`, `H ↦ ξ`, `X± ↦ 2x±` for `Uq`; `Ξ ↦ ξ`,
//!   `X± ↦ x±` for `UhTrunc`.
//! * `UqTilde` and `UhTildeTrunc` specialize to commutative coordinate rings,
//!   [`CommPoly`] in the variables `X+_α`, `K_c^{±1}` (resp. `Ξ_c`), `X-_α`.
//!
//! First-order data: the Poisson bracket `[a, b]/t mod t` and the cobracket
//! `(Δ − Δ^op)(a)/t mod t` (`t = q − 1` or `h`), read on generators through
//! the augmentation ideal `I/I²` ([`linear_part`]) or through the degree-one
//! words of `U(g_X)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{LieElem, LieGen, LieTensor};
use crate::coeffring::{LaurentQ, LocalLaurent, Rat, Scalar, SeriesH};
use crate::error::{Error, Result};
use crate::ncalg::{Algebra, CartanModel, Expr, Gen, Letter, Presentation, RawExpr, TExpr, Word};
use crate::quiver::{IvId, Quiver};

/// Coefficient rings that have a classical value and a first-order value.
pub trait Specialize: Scalar {
    /// Name of the deformation parameter (`q - 1` or `h`).
    const PARAMETER: &'static str;
    /// Value at `q = 1` (resp. `h = 0`); `None` for a pole.
    fn classical(&self) -> Option<Rat>;
    /// Value of `self / t` at `t = 0`, `None` if `t` does not divide `self`
    /// (or the first order is beyond the truncation).
    fn first_order(&self) -> Option<Rat>;
    /// `(c_0, c_1)` with `self = c_0 + c_1 t + O(t^2)`; `None` for a pole.
    fn jet(&self) -> Option<(Rat, Rat)>;
}

impl Specialize for LocalLaurent {
    const PARAMETER: &'static str = "q - 1";
    fn classical(&self) -> Option<Rat> {
        self.eval_q1().map(Rat::from_integer)
    }
    fn first_order(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.valuation()? < 1 {
            return None;
        }
        self.mul_qm1_pow(-1).classical()
    }
    fn jet(&self) -> Option<(Rat, Rat)> {
        let c0 = self.classical()?;
        let rest = self.sub(&LocalLaurent::from_laurent(LaurentQ::constant(*c0.numer())));
        Some((c0, rest.first_order()?))
    }
}

impl Specialize for SeriesH {
    const PARAMETER: &'static str = "h";
    fn classical(&self) -> Option<Rat> {
        Some(self.coeff(0))
    }
    fn first_order(&self) -> Option<Rat> {
        if !self.coeff(0).is_zero() || self.order() < 2 {
            return None;
        }
        Some(self.coeff(1))
    }
    fn jet(&self) -> Option<(Rat, Rat)> {
        if self.order() < 2 {
            return None;
        }
        Some((self.coeff(0), self.coeff(1)))
    }
}

fn classical_of<S: Specialize>(c: &S, what: &dyn Fn() -> String) -> Result<Rat> {
    c.classical().ok_or_else(|| Error::Valuation(format!("coefficient {c} of {} has a pole at {} = 0", what(), S::PARAMETER)))
}

fn first_order_of<S: Specialize>(c: &S, what: &dyn Fn() -> String) -> Result<Rat> {
    c.first_order().ok_or_else(|| Error::Divisibility(format!("coefficient {c} of {} is not divisible by {}", what(), S::PARAMETER)))
}

/// `U(g_X)` on the quiver of `alg`.
pub fn enveloping_of<S: Scalar>(alg: &Algebra<S>) -> Result<Algebra<SeriesH>> {
    Algebra::new(Presentation::ClassicalU, alg.quiver_arc(), 1, 1, alg.fuel())
}

/// The image of a raw generator in `U(g_X)`: a scale and a classical
/// generator (`None` for the unit).
fn enveloping_gen(pres: Presentation, g: &Gen) -> Result<(Rat, Option<Gen>)> {
    let two = Rat::from_integer(2);
    match (pres, g) {
        (Presentation::Uq, Gen::Xp(_) | Gen::Xm(_)) => Ok((two, Some(*g))),
        (Presentation::Uq, Gen::H(a)) => Ok((Rat::one(), Some(Gen::Xi(*a)))),
        (Presentation::Uq, Gen::K(_) | Gen::Kinv(_)) => Ok((Rat::one(), None)),
        (Presentation::UhTrunc | Presentation::ClassicalU, Gen::Xp(_) | Gen::Xm(_) | Gen::Xi(_)) => Ok((Rat::one(), Some(*g))),
        _ => Err(Error::Domain(format!("no specialization to U(g_X) from {}", pres.name()))),
    }
}

fn enveloping_raw<S: Specialize>(alg: &Algebra<S>, raw: &RawExpr<S>, first_order: bool) -> Result<RawExpr<SeriesH>> {
    let pres = alg.presentation();
    let q = alg.quiver();
    let mut out = RawExpr::new();
    for (rw, c) in raw.iter() {
        let what = || crate::ncalg::display::raw_word_text(pres, q, rw);
        let mut coeff = if first_order { first_order_of(c, &what)? } else { classical_of(c, &what)? };
        let mut word = Vec::new();
        for g in rw {
            let (s, img) = enveloping_gen(pres, g)?;
            coeff *= s;
            word.extend(img);
        }
        out.add_term(word, SeriesH::constant(1, coeff));
    }
    Ok(out)
}

/// The specialization `Uq → U(g_X)` (`K ↦ 1`, `H ↦ ξ`, `X± ↦ 2x±`) or
/// `UhTrunc → U(g_X)` (`Ξ ↦ ξ`, `X± ↦ x±`), applied to a raw expression
/// (no normal form is taken on the quantum side).
pub fn limit_raw<S: Specialize>(alg: &Algebra<S>, cl: &Algebra<SeriesH>, raw: &RawExpr<S>) -> Result<Expr<SeriesH>> {
    cl.eval_raw(&enveloping_raw(alg, raw, false)?)
}

/// The specialization to `U(g_X)` of an element, read in the display basis.
pub fn limit_enveloping<S: Specialize>(alg: &Algebra<S>, cl: &Algebra<SeriesH>, e: &Expr<S>) -> Result<Expr<SeriesH>> {
    limit_raw(alg, cl, &alg.to_display(e))
}

/// Variable of a commutative coordinate ring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CVar {
    Xp(IvId),
    /// `K_c` (polynomial side, any integer exponent) or `Ξ_c` (formal side).
    Cartan(usize),
    Xm(IvId),
}

/// Monomial: variables with non-zero exponents.
pub type CMonomial = BTreeMap<CVar, i32>;

/// Polynomial (Laurent in the `K` variables) with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommPoly {
    pub model: CartanModel,
    pub terms: BTreeMap<CMonomial, Rat>,
}

impl CommPoly {
    pub fn new(model: CartanModel) -> Self {
        CommPoly { model, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, m: CMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn text(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let cartan = match self.model {
            CartanModel::Exponential => "K",
            CartanModel::Polynomial => "Xi",
        };
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut factors = Vec::new();
            for (v, e) in m {
                let name = match *v {
                    CVar::Xp(a) => format!("X+{}", q.interval(a)),
                    CVar::Cartan(k) => format!("{cartan}{}", q.interval(q.cell_id(k))),
                    CVar::Xm(a) => format!("X-{}", q.interval(a)),
                };
                factors.push(if *e == 1 { name } else { format!("{name}^{e}") });
            }
            let body = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
            parts.push(super::coeff_text(c, &body));
        }
        parts.join(" + ")
    }
}

/// The commuting monomial of a word of `UqTilde` / `UhTildeTrunc`.
fn monomial_of(w: &Word, cells: usize) -> CMonomial {
    let mut m = CMonomial::new();
    let mut bump = |v: CVar, e: i32| {
        if e == 0 {
            return;
        }
        let slot = m.entry(v).or_insert(0);
        *slot += e;
        if *slot == 0 {
            m.remove(&v);
        }
    };
    for l in w {
        match l {
            Letter::P(a) => bump(CVar::Xp(*a), 1),
            Letter::M(a) => bump(CVar::Xm(*a), 1),
            Letter::C(c) => {
                for k in 0..cells {
                    bump(CVar::Cartan(k), c.0[k] as i32);
                }
            }
        }
    }
    m
}

fn check_coordinate<S: Scalar>(alg: &Algebra<S>) -> Result<()> {
    match alg.presentation() {
        Presentation::UqTilde | Presentation::UhTildeTrunc => Ok(()),
        p => Err(Error::Domain(format!("{} does not specialize to a coordinate ring", p.name()))),
    }
}

fn coordinate_with<S: Specialize>(alg: &Algebra<S>, e: &Expr<S>, first_order: bool) -> Result<CommPoly> {
    check_coordinate(alg)?;
    let cells = alg.quiver().num_cells();
    let mut out = CommPoly::new(alg.model());
    for (w, c) in e.iter() {
        let what = || alg.word_text(w);
        let v = if first_order { first_order_of(c, &what)? } else { classical_of(c, &what)? };
        out.add_term(monomial_of(w, cells), v);
    }
    Ok(out)
}

/// `UqTilde → k[X+, K^{±1}, X-]` at `q = 1`, or `UhTildeTrunc → k[X+, Ξ, X-]`
/// at `h = 0`, of a normal form.
pub fn limit_coordinate<S: Specialize>(alg: &Algebra<S>, e: &Expr<S>) -> Result<CommPoly> {
    coordinate_with(alg, &alg.normalize(e)?, false)
}

/// Poisson bracket `{a, b} = [a, b]/t mod t` in the coordinate ring.
/// Errors with a divisibility error when `t` does not divide the commutator.
pub fn poisson_bracket<S: Specialize>(alg: &Algebra<S>, a: &Expr<S>, b: &Expr<S>) -> Result<CommPoly> {
    check_coordinate(alg)?;
    coordinate_with(alg, &alg.commutator(a, b)?, true)
}

/// Scale of `X±` in the identification `I/I² ≅ g_X`: `X̄± ↦ 2x±` on the
/// polynomial side, `X̄± ↦ x±` on the formal side.
fn root_scale(model: CartanModel) -> Rat {
    match model {
        CartanModel::Exponential => Rat::from_integer(2),
        CartanModel::Polynomial => Rat::one(),
    }
}

/// Constant term and class in `I/I² ≅ g_X` of a coordinate-ring element.
///
/// On the polynomial side `K_c = 1 + H̄_c`, so `Π K_c^{m_c} ≡ 1 + Σ m_c H̄_c`
/// and `H̄_c ↦ ξ_c`; on the formal side `Ξ̄_c ↦ ξ_c`.  Monomials of total
/// degree ≥ 2 in the generators of `I` vanish.
pub fn split_linear(p: &CommPoly) -> (Rat, LieElem) {
    let mut constant = Rat::zero();
    let mut lin = LieElem::new();
    let scale = root_scale(p.model);
    for (m, c) in &p.terms {
        let roots: Vec<(CVar, i32)> = m.iter().filter(|(v, _)| !matches!(v, CVar::Cartan(_))).map(|(v, e)| (*v, *e)).collect();
        let cartan: Vec<(usize, i32)> = m.iter().filter_map(|(v, e)| if let CVar::Cartan(k) = v { Some((*k, *e)) } else { None }).collect();
        let root_degree: i32 = roots.iter().map(|(_, e)| e).sum();
        match p.model {
            CartanModel::Exponential => match root_degree {
                0 => {
                    constant += c;
                    for (k, e) in cartan {
                        lin.add_term(LieGen::Xi(k), c * Rat::from_integer(e as i128));
                    }
                }
                1 => {
                    let g = match roots[0].0 {
                        CVar::Xp(a) => LieGen::Xp(a),
                        CVar::Xm(a) => LieGen::Xm(a),
                        CVar::Cartan(_) => unreachable!(),
                    };
                    lin.add_term(g, c * scale);
                }
                _ => {}
            },
            CartanModel::Polynomial => {
                let cartan_degree: i32 = cartan.iter().map(|(_, e)| e).sum();
                match (root_degree, cartan_degree) {
                    (0, 0) => constant += c,
                    (0, 1) => lin.add_term(LieGen::Xi(cartan[0].0), *c),
                    (1, 0) => {
                        let g = match roots[0].0 {
                            CVar::Xp(a) => LieGen::Xp(a),
                            CVar::Xm(a) => LieGen::Xm(a),
                            CVar::Cartan(_) => unreachable!(),
                        };
                        lin.add_term(g, c * scale);
                    }
                    _ => {}
                }
            }
        }
    }
    (constant, lin)
}

/// Class in `I/I²` of an element of the augmentation ideal.
pub fn linear_part(p: &CommPoly) -> Result<LieElem> {
    let (constant, lin) = split_linear(p);
    if !constant.is_zero() {
        return Err(Error::Domain(format!("element has constant term {constant}; it is not in the augmentation ideal")));
    }
    Ok(lin)
}

/// The first-order bracket read in `g_X`: `{a, b}` mod `I²`.
pub fn first_order_bracket<S: Specialize>(alg: &Algebra<S>, a: &Expr<S>, b: &Expr<S>) -> Result<LieElem> {
    linear_part(&poisson_bracket(alg, a, b)?)
}

fn swap<S: Scalar>(t: &TExpr<S>) -> TExpr<S> {
    t.iter().map(|(ws, c)| (vec![ws[1].clone(), ws[0].clone()], c.clone())).collect()
}

/// `(Δ − Δ^op)(a)` of a coordinate-ring generator read in `I/I² ⊗ I/I²`
/// (the Lie bracket of the dual, transported to `g_X`).  The parts in
/// `1 ⊗ I` and `I ⊗ 1` must cancel.
pub fn coordinate_cobracket<S: Specialize>(alg: &Algebra<S>, a: &Expr<S>) -> Result<LieTensor> {
    check_coordinate(alg)?;
    let d = alg.coproduct(a)?;
    let diff = d.sub(&swap(&d));
    let cells = alg.quiver().num_cells();
    let mut out = LieTensor::new();
    let mut edge = LieTensor::new();
    for (ws, c) in diff.iter() {
        let what = || format!("{} (x) {}", alg.word_text(&ws[0]), alg.word_text(&ws[1]));
        let v = classical_of(c, &what)?;
        let split = |w: &Word| {
            let mut p = CommPoly::new(alg.model());
            p.add_term(monomial_of(w, cells), Rat::one());
            split_linear(&p)
        };
        let (c0, l0) = split(&ws[0]);
        let (c1, l1) = split(&ws[1]);
        out.add_scaled(&LieTensor::tensor(&l0, &l1), v);
        // Track the 1⊗I and I⊗1 parts (with a marker generator slot).
        for (g, x) in l1.iter() {
            edge.add_term(vec![*g], v * c0 * x);
        }
        for (g, x) in l0.iter() {
            edge.add_term(vec![*g], v * c1 * x);
        }
    }
    if !edge.is_zero() {
        return Err(Error::Structural("(Δ - Δ^op)(a) has a non-vanishing part in 1 (x) I + I (x) 1".into()));
    }
    Ok(out)
}

/// `(Δ − Δ^op)(a)/t mod t` for `Uq` or `UhTrunc`, specialized to
/// `U(g_X) ⊗ U(g_X)` and read in `g_X ⊗ g_X`.
///
/// Each tensor factor is expanded to first order in `t` inside `U(g_X)`
/// (`K^{±1} ≡ 1 ± tξ`, coefficients `c ≡ c_0 + c_1 t`); the order-zero part
/// must cancel, and the order-one part must lie in `g_X ⊗ g_X`.
pub fn enveloping_cobracket<S: Specialize>(alg: &Algebra<S>, cl: &Algebra<SeriesH>, a: &Expr<S>) -> Result<LieTensor> {
    let d = alg.coproduct(a)?;
    let diff = d.sub(&swap(&d));
    let mut order0: TExpr<SeriesH> = TExpr::new();
    let mut order1: TExpr<SeriesH> = TExpr::new();
    let lift = |w: &Word| -> Result<Vec<Jet>> {
        let raw = alg.to_display(&Expr::single(w.clone(), alg.one_s()));
        let mut out = Vec::new();
        for (rw, c) in raw.iter() {
            let (c0, c1) = c.jet().ok_or_else(|| Error::Valuation(format!("coefficient {c} has a pole at {} = 0", S::PARAMETER)))?;
            let j = jet_of_word(alg.presentation(), cl, rw)?;
            out.push(j.scale_jet(c0, c1));
        }
        Ok(out)
    };
    for (ws, c) in diff.iter() {
        let (c0, c1) = c.jet().ok_or_else(|| Error::Valuation(format!("coefficient {c} has a pole at {} = 0", S::PARAMETER)))?;
        let rights = lift(&ws[1])?;
        for left in lift(&ws[0])? {
            for right in &rights {
                let l = left.scale_jet(c0, c1);
                add_tensor(&mut order0, &l.0, &right.0);
                add_tensor(&mut order1, &l.1, &right.0);
                add_tensor(&mut order1, &l.0, &right.1);
            }
        }
    }
    if !order0.is_zero() {
        return Err(Error::Divisibility(format!("(Δ - Δ^op)(a) is not divisible by {}", S::PARAMETER)));
    }
    let mut out = LieTensor::new();
    for (ws, c) in order1.iter() {
        let single = |w: &Word| lie_of_enveloping(cl, &Expr::single(w.clone(), SeriesH::constant(1, Rat::one())));
        out.add_scaled(&LieTensor::tensor(&single(&ws[0])?, &single(&ws[1])?), c.coeff(0));
    }
    Ok(out)
}

/// A first-order jet `(x_0, x_1)` in `U(g_X)`: `x_0 + t x_1 mod t^2`.
struct Jet(Expr<SeriesH>, Expr<SeriesH>);

impl Jet {
    fn scale_jet(&self, c0: Rat, c1: Rat) -> Jet {
        let s = |r: Rat| SeriesH::constant(1, r);
        let mut one = self.1.scale(&s(c0));
        one.add_scaled(&self.0, &s(c1));
        Jet(self.0.scale(&s(c0)), one)
    }
}

fn add_tensor(acc: &mut TExpr<SeriesH>, a: &Expr<SeriesH>, b: &Expr<SeriesH>) {
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            acc.add_term(vec![wa.clone(), wb.clone()], ca.mul(cb));
        }
    }
}

fn jet_of_word(pres: Presentation, cl: &Algebra<SeriesH>, rw: &[Gen]) -> Result<Jet> {
    let mut cur = Jet(cl.unit(), Expr::new());
    for g in rw {
        let next = match (pres, g) {
            (Presentation::Uq, Gen::K(a)) => Jet(cl.unit(), cl.gen_expr(Gen::Xi(*a))?),
            (Presentation::Uq, Gen::Kinv(a)) => Jet(cl.unit(), cl.gen_expr(Gen::Xi(*a))?.neg()),
            _ => {
                let (s, img) = enveloping_gen(pres, g)?;
                let e = match img {
                    Some(h) => cl.gen_expr(h)?,
                    None => cl.unit(),
                };
                Jet(e.scale(&SeriesH::constant(1, s)), Expr::new())
            }
        };
        cur = Jet(cl.mul(&cur.0, &next.0)?, cl.mul(&cur.0, &next.1)?.add(&cl.mul(&cur.1, &next.0)?));
    }
    Ok(cur)
}

/// An element of `U(g_X)` of degree one, read in `g_X`.
pub fn lie_of_enveloping(cl: &Algebra<SeriesH>, e: &Expr<SeriesH>) -> Result<LieElem> {
    let q = cl.quiver();
    let mut out = LieElem::new();
    for (w, c) in e.iter() {
        let c = c.coeff(0);
        match w.as_slice() {
            [Letter::P(a)] => out.add_term(LieGen::Xp(*a), c),
            [Letter::M(a)] => out.add_term(LieGen::Xm(*a), c),
            [Letter::C(m)] if m.degree() == 1 => {
                let k = (0..q.num_cells()).find(|&k| m.0[k] == 1).expect("degree-one Cartan monomial");
                out.add_term(LieGen::Xi(k), c);
            }
            _ => return Err(Error::Domain(format!("{} is not of degree one in U(g_X)", cl.text(e)))),
        }
    }
    Ok(out)
}

/// `g_X → U(g_X)`.
pub fn enveloping_of_lie(x: &LieElem) -> Expr<SeriesH> {
    let mut out = Expr::new();
    for (g, c) in x.iter() {
        let letter = match *g {
            LieGen::Xp(a) => Letter::P(a),
            LieGen::Xm(a) => Letter::M(a),
            LieGen::Xi(k) => {
                let mut m = crate::ncalg::CMono::ONE;
                m.0[k] = 1;
                Letter::C(m)
            }
        };
        out.add_term(vec![letter], SeriesH::constant(1, *c));
    }
    out
}
