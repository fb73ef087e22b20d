//! The Lie bialgebra `g_X` and the semiclassical limits of the quantum
//! presentations.
//!
//! [`LieBialgebra`] evaluates the bracket and cobracket of `g_X` on linear
//! combinations of the generators `x±_α` (any grid interval) and `ξ_c` (one
//! per cell; `ξ_α = Σ_{c ⊆ α} ξ_c`, which builds in `ξ_{α⊕β} = ξ_α + ξ_β`).
//! Brackets:
//!
//! * `[ξ_α, ξ_β] = 0`, `[ξ_α, x±_β] = ±(α|β) x±_β`;
//! * `[x+_α, x-_β] = δ_{αβ} ξ_α + p_{αβ} (x+_{α⊖β} − x-_{β⊖α})`;
//! * `[x±_α, x±_β] = ± p_{α,α⊕β} x±_{α⊕β}` for `(α, β) ∈ S_X` (zero when
//!   `α ⊕ β` is undefined), extended by antisymmetry; same-sign pairs with
//!   neither order in `S_X` are set to zero and flagged as not imposed.
//!
//! The cobracket is `δ(ξ_α) = 0`, `δ(x±_α) = ξ_α ∧ x±_α + Σ_{β⊕γ=α} p_{β,α}
//! x±_β ∧ x±_γ` with `a ∧ b = (a⊗b − b⊗a)/2`.
//!
//! The [`limit`] submodule maps the quantum presentations to `U(g_X)` or to
//! the commutative coordinate ring at `q = 1` (resp. `h = 0`).

pub mod limit;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::coeffring::Rat;
use crate::error::{Error, Result};
use crate::quiver::{IvId, Quiver};

/// A generator of `g_X`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LieGen {
    /// `ξ` on the `k`-th cell.
    Xi(usize),
    Xp(IvId),
    Xm(IvId),
}

impl LieGen {
    pub fn text(&self, q: &Quiver) -> String {
        match *self {
            LieGen::Xp(a) => format!("x+{}", q.interval(a)),
            LieGen::Xi(c) => format!("xi{}", q.interval(q.cell_id(c))),
            LieGen::Xm(a) => format!("x-{}", q.interval(a)),
        }
    }
}

fn coeff_text(c: &Rat, body: &str) -> String {
    if c.is_one() {
        body.to_string()
    } else {
        format!("({c})*{body}")
    }
}

/// Finitely supported rational combination of keys (no stored zeros).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatLin<K: Ord> {
    terms: BTreeMap<K, Rat>,
}

impl<K: Ord> Default for RatLin<K> {
    fn default() -> Self {
        RatLin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> RatLin<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Rat) -> Self {
        let mut out = Self::new();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add_scaled(&mut self, o: &Self, c: Rat) {
        for (k, v) in &o.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, Rat::one());
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, -Rat::one());
        out
    }

    pub fn scale(&self, c: Rat) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rat)> {
        self.terms.iter()
    }

    pub fn get(&self, k: &K) -> Rat {
        self.terms.get(k).copied().unwrap_or_else(Rat::zero)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rat)> for RatLin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rat)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

/// Element of `g_X`.
pub type LieElem = RatLin<LieGen>;
/// Element of `g_X^{⊗n}`: tuples of generators.
pub type LieTensor = RatLin<Vec<LieGen>>;

impl LieElem {
    pub fn gen(g: LieGen) -> Self {
        Self::single(g, Rat::one())
    }

    /// Canonical text, e.g. `x+[0,1) + (-1)*xi[1,2)`; `0` when empty.
    pub fn text(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.iter().map(|(g, c)| coeff_text(c, &g.text(q))).collect::<Vec<_>>().join(" + ")
    }
}

impl LieTensor {
    /// `a ⊗ b`.
    pub fn tensor(a: &LieElem, b: &LieElem) -> Self {
        let mut out = Self::new();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_term(vec![*x, *y], c * d);
            }
        }
        out
    }

    /// `a ∧ b = (a⊗b − b⊗a)/2`.
    pub fn wedge(a: &LieElem, b: &LieElem) -> Self {
        Self::tensor(a, b).sub(&Self::tensor(b, a)).scale(Rat::new(1, 2))
    }

    /// Slots permuted: slot `i` of the result is slot `perm[i]` of the input.
    pub fn permute(&self, perm: &[usize]) -> Self {
        self.iter().map(|(k, c)| (perm.iter().map(|&i| k[i]).collect(), *c)).collect()
    }

    pub fn text(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.iter()
            .map(|(k, c)| coeff_text(c, &k.iter().map(|g| g.text(q)).collect::<Vec<_>>().join("(x)")))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A cobracket value in wedge coordinates: `Σ c_{ab} a ∧ b` over ordered
/// pairs `a < b`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CobracketValue {
    pub wedges: BTreeMap<(LieGen, LieGen), Rat>,
}

impl CobracketValue {
    /// Reads an antisymmetric 2-tensor; errors if it is not antisymmetric.
    pub fn from_tensor(t: &LieTensor) -> Result<Self> {
        let mut wedges = BTreeMap::new();
        for (k, c) in t.iter() {
            if k.len() != 2 {
                return Err(Error::Domain("a cobracket value is a 2-tensor".into()));
            }
            let (a, b) = (k[0], k[1]);
            if t.get(&vec![b, a]) != -c {
                return Err(Error::Structural("2-tensor is not antisymmetric".into()));
            }
            if a < b {
                // a∧b contributes 1/2 to the (a, b) entry.
                wedges.insert((a, b), c * Rat::from_integer(2));
            }
        }
        Ok(CobracketValue { wedges })
    }

    pub fn to_tensor(&self) -> LieTensor {
        let mut out = LieTensor::new();
        for ((a, b), c) in &self.wedges {
            out.add_scaled(&LieTensor::wedge(&LieElem::gen(*a), &LieElem::gen(*b)), *c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.wedges.is_empty()
    }

    pub fn text(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.wedges.iter().map(|((a, b), c)| coeff_text(c, &format!("{}^{}", a.text(q), b.text(q)))).collect::<Vec<_>>().join(" + ")
    }
}

/// A generator bracket together with whether the value is imposed by a
/// defining relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BracketValue {
    pub value: LieElem,
    pub imposed: bool,
}

/// `g_X` on a fixed quiver.
#[derive(Clone)]
pub struct LieBialgebra {
    quiver: Arc<Quiver>,
}

impl LieBialgebra {
    pub fn new(quiver: Arc<Quiver>) -> Self {
        LieBialgebra { quiver }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// All generators: `ξ_c`, `x+_α`, `x-_α`.
    pub fn generators(&self) -> Vec<LieGen> {
        let q = &self.quiver;
        let mut out: Vec<LieGen> = (0..q.num_cells()).map(LieGen::Xi).collect();
        out.extend(q.ids().map(LieGen::Xp));
        out.extend(q.ids().map(LieGen::Xm));
        out
    }

    /// `ξ_α` as a sum over the cells of `α`.
    pub fn xi(&self, a: IvId) -> LieElem {
        self.quiver.cell_range(a).map(|c| (LieGen::Xi(c), Rat::one())).collect()
    }

    /// `[ξ_α, x±_β]` for an arbitrary interval `α`, read directly off the
    /// Euler form (used to audit additivity against the cell expansion).
    pub fn xi_action(&self, a: IvId, g: LieGen) -> LieElem {
        let q = &self.quiver;
        match g {
            LieGen::Xp(b) => LieElem::single(g, Rat::from_integer(q.sym(a, b) as i128)),
            LieGen::Xm(b) => LieElem::single(g, Rat::from_integer(-q.sym(a, b) as i128)),
            LieGen::Xi(_) => LieElem::new(),
        }
    }

    fn root(&self, plus: bool, a: Option<IvId>) -> LieElem {
        match a {
            Some(a) => LieElem::gen(if plus { LieGen::Xp(a) } else { LieGen::Xm(a) }),
            None => LieElem::new(),
        }
    }

    /// Bracket of two generators.
    pub fn bracket_gens(&self, g: LieGen, h: LieGen) -> BracketValue {
        let q = &self.quiver;
        let imposed = |value| BracketValue { value, imposed: true };
        match (g, h) {
            (LieGen::Xi(_), LieGen::Xi(_)) => imposed(LieElem::new()),
            (LieGen::Xi(c), x) => imposed(self.xi_action(q.cell_id(c), x)),
            (_, LieGen::Xi(_)) => {
                let v = self.bracket_gens(h, g);
                BracketValue { value: v.value.scale(-Rat::one()), imposed: v.imposed }
            }
            (LieGen::Xp(a), LieGen::Xm(b)) => {
                let mut v = if a == b { self.xi(a) } else { LieElem::new() };
                let p = Rat::from_integer(q.p(a, b) as i128);
                v.add_scaled(&self.root(true, q.odiff(a, b)), p);
                v.add_scaled(&self.root(false, q.odiff(b, a)), -p);
                imposed(v)
            }
            (LieGen::Xm(_), LieGen::Xp(_)) => {
                let v = self.bracket_gens(h, g);
                BracketValue { value: v.value.scale(-Rat::one()), imposed: v.imposed }
            }
            (LieGen::Xp(a), LieGen::Xp(b)) | (LieGen::Xm(a), LieGen::Xm(b)) => {
                let plus = matches!(g, LieGen::Xp(_));
                let sign = if plus { Rat::one() } else { -Rat::one() };
                if a == b {
                    return imposed(LieElem::new());
                }
                let rule = |x: IvId, y: IvId| -> LieElem {
                    match q.osum(x, y) {
                        Some(s) => self.root(plus, Some(s)).scale(sign * Rat::from_integer(q.p(x, s) as i128)),
                        None => LieElem::new(),
                    }
                };
                if q.in_serre(a, b) {
                    imposed(rule(a, b))
                } else if q.in_serre(b, a) {
                    imposed(rule(b, a).scale(-Rat::one()))
                } else {
                    BracketValue { value: LieElem::new(), imposed: false }
                }
            }
        }
    }

    /// Bilinear bracket.
    pub fn bracket(&self, a: &LieElem, b: &LieElem) -> LieElem {
        self.bracket_flagged(a, b).0
    }

    /// Bracket together with the generator pairs whose value was not imposed.
    pub fn bracket_flagged(&self, a: &LieElem, b: &LieElem) -> (LieElem, Vec<(LieGen, LieGen)>) {
        let mut out = LieElem::new();
        let mut flagged = Vec::new();
        for (g, c) in a.iter() {
            for (h, d) in b.iter() {
                let v = self.bracket_gens(*g, *h);
                if !v.imposed {
                    flagged.push((*g, *h));
                }
                out.add_scaled(&v.value, c * d);
            }
        }
        (out, flagged)
    }

    /// Cobracket of a generator as a 2-tensor.
    pub fn cobracket_gen(&self, g: LieGen) -> LieTensor {
        let q = &self.quiver;
        match g {
            LieGen::Xi(_) => LieTensor::new(),
            LieGen::Xp(a) | LieGen::Xm(a) => {
                let plus = matches!(g, LieGen::Xp(_));
                let mut out = LieTensor::wedge(&self.xi(a), &LieElem::gen(g));
                for &(b, c) in q.decompositions(a) {
                    let p = Rat::from_integer(q.p(b, a) as i128);
                    out.add_scaled(&LieTensor::wedge(&self.root(plus, Some(b)), &self.root(plus, Some(c))), p);
                }
                out
            }
        }
    }

    pub fn cobracket(&self, a: &LieElem) -> LieTensor {
        let mut out = LieTensor::new();
        for (g, c) in a.iter() {
            out.add_scaled(&self.cobracket_gen(*g), *c);
        }
        out
    }

    /// Cobracket in wedge coordinates.
    pub fn cobracket_wedge(&self, a: &LieElem) -> CobracketValue {
        CobracketValue::from_tensor(&self.cobracket(a)).expect("the cobracket is antisymmetric by construction")
    }

    /// Adjoint action of `x` on every slot of a tensor.
    pub fn act(&self, x: &LieElem, t: &LieTensor) -> LieTensor {
        let mut out = LieTensor::new();
        for (k, c) in t.iter() {
            for slot in 0..k.len() {
                let v = self.bracket(x, &LieElem::gen(k[slot]));
                for (g, d) in v.iter() {
                    let mut key = k.clone();
                    key[slot] = *g;
                    out.add_term(key, c * d);
                }
            }
        }
        out
    }

    /// `δ` applied to one slot of a tensor (the slot is replaced by two).
    pub fn cobracket_in_slot(&self, t: &LieTensor, slot: usize) -> LieTensor {
        let mut out = LieTensor::new();
        for (k, c) in t.iter() {
            for (pair, d) in self.cobracket_gen(k[slot]).iter() {
                let mut key = k[..slot].to_vec();
                key.extend(pair.iter().copied());
                key.extend(k[slot + 1..].iter().copied());
                out.add_term(key, c * d);
            }
        }
        out
    }

    /// Jacobi identity on all generator triples; returns the failing triples.
    pub fn jacobi_defects(&self) -> Vec<String> {
        let gens = self.generators();
        let q = &self.quiver;
        let mut bad = Vec::new();
        for &a in &gens {
            for &b in &gens {
                for &c in &gens {
                    let (x, y, z) = (LieElem::gen(a), LieElem::gen(b), LieElem::gen(c));
                    let s = self
                        .bracket(&x, &self.bracket(&y, &z))
                        .add(&self.bracket(&y, &self.bracket(&z, &x)))
                        .add(&self.bracket(&z, &self.bracket(&x, &y)));
                    if !s.is_zero() {
                        bad.push(format!("({}, {}, {}): {}", a.text(q), b.text(q), c.text(q), s.text(q)));
                    }
                }
            }
        }
        bad
    }

    /// Antisymmetry of the bracket on generator pairs.
    pub fn antisymmetry_defects(&self) -> Vec<String> {
        let gens = self.generators();
        let q = &self.quiver;
        let mut bad = Vec::new();
        for &a in &gens {
            for &b in &gens {
                let s = self.bracket(&LieElem::gen(a), &LieElem::gen(b)).add(&self.bracket(&LieElem::gen(b), &LieElem::gen(a)));
                if !s.is_zero() {
                    bad.push(format!("({}, {})", a.text(q), b.text(q)));
                }
            }
        }
        bad
    }

    /// co-Jacobi: `Σ_cyclic (δ ⊗ id) δ(x) = 0` for every generator.
    pub fn co_jacobi_defects(&self) -> Vec<String> {
        let q = &self.quiver;
        let mut bad = Vec::new();
        for g in self.generators() {
            let t = self.cobracket_in_slot(&self.cobracket_gen(g), 0);
            let s = t.add(&t.permute(&[1, 2, 0])).add(&t.permute(&[2, 0, 1]));
            if !s.is_zero() {
                bad.push(format!("{}: {}", g.text(q), s.text(q)));
            }
        }
        bad
    }

    /// 1-cocycle: `δ([a, b]) = a·δ(b) − b·δ(a)` on generator pairs.
    pub fn cocycle_defects(&self) -> Vec<String> {
        let gens = self.generators();
        let q = &self.quiver;
        let mut bad = Vec::new();
        for &a in &gens {
            for &b in &gens {
                let (x, y) = (LieElem::gen(a), LieElem::gen(b));
                let lhs = self.cobracket(&self.bracket(&x, &y));
                let rhs = self.act(&x, &self.cobracket(&y)).sub(&self.act(&y, &self.cobracket(&x)));
                let d = lhs.sub(&rhs);
                if !d.is_zero() {
                    bad.push(format!("({}, {}): {}", a.text(q), b.text(q), d.text(q)));
                }
            }
        }
        bad
    }

    /// Additivity: `ξ_{α⊕β} = ξ_α + ξ_β` in the cell representation, and the
    /// action of `ξ_{α⊕β}` read off the Euler form equals the sum of the
    /// actions of `ξ_α` and `ξ_β`.
    pub fn additivity_defects(&self) -> Vec<String> {
        let q = &self.quiver;
        let mut bad = Vec::new();
        for a in q.ids() {
            for b in q.ids() {
                let Some(s) = q.osum(a, b) else { continue };
                if self.xi(s) != self.xi(a).add(&self.xi(b)) {
                    bad.push(format!("xi{} != xi{} + xi{}", q.interval(s), q.interval(a), q.interval(b)));
                }
                for g in self.generators() {
                    let lhs = self.xi_action(s, g);
                    let rhs = self.xi_action(a, g).add(&self.xi_action(b, g));
                    let cells = self.bracket(&self.xi(s), &LieElem::gen(g));
                    if lhs != rhs || lhs != cells {
                        bad.push(format!("[xi{}, {}]", q.interval(s), g.text(q)));
                    }
                }
            }
        }
        bad
    }

    /// Generator pairs whose bracket is not imposed by a defining relation.
    pub fn unimposed_pairs(&self) -> Vec<(LieGen, LieGen)> {
        let gens = self.generators();
        let mut out = Vec::new();
        for &a in &gens {
            for &b in &gens {
                if a < b && !self.bracket_gens(a, b).imposed {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl fmt::Debug for LieBialgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieBialgebra({} intervals)", self.quiver.len())
    }
}
