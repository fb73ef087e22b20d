//! Hopf pairing between the positive and negative Borel parts of `UhTrunc`.
//!
//! On generators: `(1|1) = 1`, `(Ξ_α|Ξ_β) = c · (α|β)/h` (with `c` the Cartan
//! scale, `1` by default), `(X+_α|X-_β) = δ_{αβ}/(q - q^{-1})`, zero otherwise.
//! Products are split with the Hopf pairing laws; the side on which the
//! coproduct is opposed is configurable.  Values are Laurent series in `h`
//! with tracked precision: coefficients of the algebra are known modulo
//! `h^N`, and pairing a degree-`k` Cartan monomial divides by `h^k`, so a
//! value is reported only to the order that survives.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::coeffring::{LSeries, Rat, SeriesH};
use crate::error::{Error, Result};
use crate::ncalg::{kappa, Algebra, CMono, Expr, Letter, Presentation, Word};
use crate::quiver::IvId;

/// Which coproducts are taken opposite when a product is split.
///
/// Splitting a product `ab` in the positive part pairs `a ⊗ b` against the
/// coproduct of the negative argument; splitting `cd` in the negative part
/// pairs the coproduct of the positive argument against `c ⊗ d`.  Either
/// coproduct may enter in its opposite form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairingSide {
    /// `(ab|c) = (a⊗b|Δ(c))` and `(a|cd) = (Δ(a)|c⊗d)`.
    Plain,
    /// `(ab|c) = (a⊗b|Δ(c))` and `(a|cd) = (Δ^cop(a)|c⊗d)`.
    CopPlus,
    /// `(ab|c) = (a⊗b|Δ^cop(c))` and `(a|cd) = (Δ(a)|c⊗d)`.
    CopMinus,
    /// Both coproducts opposite.
    CopBoth,
}

impl PairingSide {
    pub const ALL: [PairingSide; 4] = [PairingSide::Plain, PairingSide::CopPlus, PairingSide::CopMinus, PairingSide::CopBoth];

    pub fn name(&self) -> &'static str {
        match self {
            PairingSide::Plain => "plain",
            PairingSide::CopPlus => "cop-plus",
            PairingSide::CopMinus => "cop-minus",
            PairingSide::CopBoth => "cop-both",
        }
    }

    fn swap_minus_coproduct(&self) -> bool {
        matches!(self, PairingSide::CopMinus | PairingSide::CopBoth)
    }

    fn swap_plus_coproduct(&self) -> bool {
        matches!(self, PairingSide::CopPlus | PairingSide::CopBoth)
    }
}

/// Which argument is split first when both are products.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SplitFirst {
    Plus,
    Minus,
}

/// Pairing conventions.
#[derive(Clone, Debug)]
pub struct PairingOptions {
    pub side: PairingSide,
    /// Multiplier of `(Ξ_α|Ξ_β) = (α|β)/h`.
    pub cartan_scale: Rat,
    pub split_first: SplitFirst,
}

impl Default for PairingOptions {
    fn default() -> Self {
        PairingOptions { side: PairingSide::CopPlus, cartan_scale: Rat::from_integer(1), split_first: SplitFirst::Plus }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum PGen {
    Xp(IvId),
    Xi(usize),
    Xm(IvId),
}

type Key = (Vec<PGen>, Vec<PGen>);

/// The pairing on a fixed `UhTrunc` algebra.
pub struct Pairing<'a> {
    alg: &'a Algebra<SeriesH>,
    opts: PairingOptions,
    prec: i64,
    memo: Mutex<HashMap<Key, LSeries>>,
}

impl<'a> Pairing<'a> {
    pub fn new(alg: &'a Algebra<SeriesH>, opts: PairingOptions) -> Result<Self> {
        if alg.presentation() != Presentation::UhTrunc {
            return Err(Error::Domain("the pairing is defined on UhTrunc".into()));
        }
        Ok(Pairing { alg, opts, prec: *alg.ctx() as i64, memo: Mutex::new(HashMap::new()) })
    }

    pub fn options(&self) -> &PairingOptions {
        &self.opts
    }

    fn exact(&self, low: i64, c: Rat) -> LSeries {
        LSeries::new(low, self.prec, vec![c])
    }

    fn gens(&self, w: &Word, plus: bool) -> Result<Vec<PGen>> {
        let mut out = Vec::new();
        for l in w {
            match *l {
                Letter::P(a) if plus => out.push(PGen::Xp(a)),
                Letter::M(a) if !plus => out.push(PGen::Xm(a)),
                Letter::C(m) => {
                    for (c, &e) in m.0.iter().enumerate() {
                        for _ in 0..e {
                            out.push(PGen::Xi(c));
                        }
                    }
                }
                _ => return Err(Error::Domain("pairing arguments must lie in the positive, resp. negative, Borel part".into())),
            }
        }
        Ok(out)
    }

    fn word_of(gens: &[PGen]) -> Word {
        gens.iter()
            .map(|g| match *g {
                PGen::Xp(a) => Letter::P(a),
                PGen::Xm(a) => Letter::M(a),
                PGen::Xi(c) => {
                    let mut m = CMono::ONE;
                    m.0[c] = 1;
                    Letter::C(m)
                }
            })
            .collect()
    }

    fn base(&self, g: PGen, h: PGen) -> LSeries {
        let q = self.alg.quiver();
        match (g, h) {
            (PGen::Xi(c), PGen::Xi(d)) => {
                let v = q.sym(q.cell_id(c), q.cell_id(d));
                self.exact(-1, self.opts.cartan_scale * Rat::from_integer(v as i128))
            }
            (PGen::Xp(a), PGen::Xm(b)) if a == b => {
                // 1/(q - q^{-1}) = κ^{-1}/h
                let n = self.prec as usize;
                LSeries::from_series(&kappa(n).inv().expect("kappa is a unit"), -1)
            }
            _ => LSeries::zero(self.prec),
        }
    }

    fn pair_gens(&self, u: &[PGen], v: &[PGen]) -> Result<LSeries> {
        if u.is_empty() || v.is_empty() {
            let eps = |w: &[PGen]| if w.is_empty() { Rat::from_integer(1) } else { Rat::from_integer(0) };
            return Ok(self.exact(0, eps(u) * eps(v)));
        }
        if u.len() == 1 && v.len() == 1 {
            return Ok(self.base(u[0], v[0]));
        }
        let key = (u.to_vec(), v.to_vec());
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let split_plus = u.len() >= 2 && (v.len() == 1 || self.opts.split_first == SplitFirst::Plus);
        let mut acc = LSeries::zero(self.prec);
        if split_plus {
            // (u' g | v) = Σ (u'|v_(i)) (g|v_(j))
            let (head, last) = u.split_at(u.len() - 1);
            let d = self.alg.coproduct_word(&Self::word_of(v))?;
            for (ws, c) in d.iter() {
                let (first, second) = if self.opts.side.swap_minus_coproduct() { (&ws[1], &ws[0]) } else { (&ws[0], &ws[1]) };
                let x = self.pair_gens(head, &self.gens(first, false)?)?;
                let y = self.pair_gens(last, &self.gens(second, false)?)?;
                acc = acc.add(&x.mul(&y).mul(&LSeries::from_series(c, 0)));
            }
        } else {
            // (u | v' h) = Σ (u_(1)|v') (u_(2)|h)
            let (head, last) = v.split_at(v.len() - 1);
            let d = self.alg.coproduct_word(&Self::word_of(u))?;
            for (ws, c) in d.iter() {
                let (first, second) = if self.opts.side.swap_plus_coproduct() { (&ws[1], &ws[0]) } else { (&ws[0], &ws[1]) };
                let x = self.pair_gens(&self.gens(first, true)?, head)?;
                let y = self.pair_gens(&self.gens(second, true)?, last)?;
                acc = acc.add(&x.mul(&y).mul(&LSeries::from_series(c, 0)));
            }
        }
        self.memo.lock().unwrap().insert(key, acc.clone());
        Ok(acc)
    }

    /// `(u | v)` for `u` in the positive and `v` in the negative Borel part.
    pub fn pair(&self, u: &Expr<SeriesH>, v: &Expr<SeriesH>) -> Result<LSeries> {
        let mut acc = LSeries::zero(self.prec);
        for (wu, cu) in u.iter() {
            let gu = self.gens(wu, true)?;
            for (wv, cv) in v.iter() {
                let gv = self.gens(wv, false)?;
                let x = self.pair_gens(&gu, &gv)?;
                acc = acc.add(&x.mul(&LSeries::from_series(&cu.mul(cv), 0)));
            }
        }
        Ok(acc)
    }

    /// `(u | v)` on words that need not be in normal form: the pairing laws
    /// are applied to the letters as written.  Agreement with [`Pairing::pair`]
    /// on the normal forms is the check that the pairing respects the
    /// defining relations.
    pub fn pair_words(&self, u: &Word, v: &Word) -> Result<LSeries> {
        self.pair_gens(&self.gens(u, true)?, &self.gens(v, false)?)
    }

    /// `(K_α | K_β)` with both grouplikes expanded to Cartan degree
    /// `≤ degree`.  The dropped terms are `O(h^{degree+1})`; the result is
    /// further limited by the algebra's truncation, to `O(h^{N - degree})`.
    pub fn pair_grouplikes(&self, a: IvId, b: IvId, degree: usize) -> Result<LSeries> {
        let cut = |id: IvId| -> Expr<SeriesH> {
            self.alg
                .grouplike_expr(id, 1)
                .iter()
                .filter(|(w, _)| w.iter().map(|l| if let Letter::C(m) = l { m.degree() as usize } else { 1 }).sum::<usize>() <= degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect()
        };
        let v = self.pair(&cut(a), &cut(b))?;
        Ok(v.truncate_abs((degree as i64 + 1).min(self.prec - degree as i64)))
    }
}
