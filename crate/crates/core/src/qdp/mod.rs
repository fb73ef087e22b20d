//! Drinfeld functors and the quantum duality checks.
//!
//! * [`delta_n`]: `δ_n = (id − ιε)^{⊗n} ∘ Δ^{(n−1)}`, applied slotwise.
//! * [`membership`]: `δ_n(η) ∈ t^n U^{⊗n}` for `n ≤ N`, with `t = q − 1` on
//!   `Uq` and `t = h` on `UhTrunc`.
//! * [`kminus_membership_certificate`]: the telescoping expansion of `K^{-1}`
//!   in `UqTilde`, together with the membership of `K^{-1}`.
//! * [`commutativity_check`]: `Ũ` is commutative modulo `t`.
//! * [`dual_group_shape_check`]: the `q = 1` coordinate ring of `UqTilde` is
//!   the free commutative (Laurent) ring on `X+_α`, `K_c^{±1}`, `X-_α`, and the
//!   `X+K`, `K`, `KX-` parts are closed under product and coproduct.
//!
//! Coefficients for the `q`-adic test are read in the basis of `Uq` made of
//! ordered root-vector words times, per cell, `Ḣ^a` or `(K^{-1}Ḣ)^b`: the
//! Cartan monomial `K^m` is `(1 + tḢ)^m` for `m ≥ 0` and `(1 − tK^{-1}Ḣ)^{-m}`
//! for `m < 0`.  Every basis element lies in the integral form, so a pass is
//! a certificate of membership; the `h`-adic test reads the normal-form
//! coefficients of `UhTrunc` directly.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classical::limit::{limit_coordinate, CVar, CMonomial};
use crate::coeffring::{binom_int, expand_laurent, LaurentQ, LocalLaurent, Rat, Scalar, SeriesH};
use crate::error::{Error, Result};
use crate::ncalg::{Algebra, CMono, Expr, Gen, Letter, Presentation, TExpr, Word};
use crate::quiver::IvId;

/// `(id − ιε)` applied in every slot of `Δ^{(n−1)}(e)` (arity `n`).
pub fn delta_n<S: Scalar>(alg: &Algebra<S>, e: &Expr<S>, n: usize) -> Result<TExpr<S>> {
    if n == 0 {
        return Err(Error::Config("δ_n needs n ≥ 1".into()));
    }
    let mut t = alg.iterated_coproduct(e, n - 1)?;
    for slot in 0..n {
        t = alg.apply_in_slot(&t, slot, |w| {
            let mut out = TExpr::single(vec![w.clone()], alg.one_s());
            out.add_term(vec![Vec::new()], alg.counit_word(w).neg());
            Ok(out)
        })?;
    }
    Ok(t)
}

/// A letter of the membership basis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum BLetter {
    P(IvId),
    /// `Ḣ_c^a` (`Uq`) or `Ξ_c^a` (`UhTrunc`).
    H(usize, u32),
    /// `(K_c^{-1} Ḣ_c)^b`.
    Hneg(usize, u32),
    M(IvId),
}

type BWord = Vec<BLetter>;

/// Which adic test a presentation uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    QAdic,
    HAdic,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::QAdic => "q-adic",
            Side::HAdic => "h-adic",
        }
    }

    pub fn of(pres: Presentation) -> Result<Side> {
        match pres {
            Presentation::Uq => Ok(Side::QAdic),
            Presentation::UhTrunc => Ok(Side::HAdic),
            p => Err(Error::Domain(format!("membership in U' is defined on Uq and UhTrunc, not on {}", p.name()))),
        }
    }
}

/// Scalars with a `t`-adic valuation.
pub trait Adic: Scalar {
    /// `t`-adic valuation, `None` for zero (for truncated series: zero modulo
    /// the truncation).
    fn t_valuation(&self) -> Option<i64>;
}

impl Adic for LocalLaurent {
    fn t_valuation(&self) -> Option<i64> {
        self.valuation()
    }
}

impl Adic for SeriesH {
    fn t_valuation(&self) -> Option<i64> {
        self.h_valuation().map(|v| v as i64)
    }
}

/// A non-divisible coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub word: String,
    pub coefficient: String,
}

/// Verdict at one depth.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verdict {
    pub n: usize,
    pub divisible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Membership of an element in `U'`, certified up to a finite depth.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MembershipReport {
    pub element: String,
    pub depth: usize,
    pub verdicts: Vec<Verdict>,
    pub pass: bool,
}

impl MembershipReport {
    /// The first depth at which divisibility fails.
    pub fn first_failure(&self) -> Option<usize> {
        self.verdicts.iter().find(|v| !v.divisible).map(|v| v.n)
    }
}

fn expand_word<S: Scalar>(alg: &Algebra<S>, w: &Word) -> Vec<(BWord, S)> {
    let polynomial = alg.presentation() == Presentation::Uq;
    let t = alg.q_s(1).sub(&alg.one_s());
    let mut acc: Vec<(BWord, S)> = vec![(Vec::new(), alg.one_s())];
    for l in w {
        let options: Vec<(Vec<BLetter>, S)> = match *l {
            Letter::P(a) => vec![(vec![BLetter::P(a)], alg.one_s())],
            Letter::M(a) => vec![(vec![BLetter::M(a)], alg.one_s())],
            Letter::C(m) => {
                let mut opts: Vec<(Vec<BLetter>, S)> = vec![(Vec::new(), alg.one_s())];
                for (c, &e) in m.0.iter().enumerate().take(alg.quiver().num_cells()) {
                    if e == 0 {
                        continue;
                    }
                    let factor: Vec<(Option<BLetter>, S)> = if !polynomial {
                        vec![(Some(BLetter::H(c, e as u32)), alg.one_s())]
                    } else {
                        // K^e = Σ_k C(|e|, k) (±t)^k X^k with X = Ḣ or K^{-1}Ḣ.
                        let n = e.unsigned_abs() as u32;
                        let sign = if e > 0 { alg.one_s() } else { alg.one_s().neg() };
                        let mut st = alg.one_s();
                        let mut out = Vec::new();
                        for k in 0..=n {
                            let letter = match k {
                                0 => None,
                                _ if e > 0 => Some(BLetter::H(c, k)),
                                _ => Some(BLetter::Hneg(c, k)),
                            };
                            out.push((letter, st.mul(&alg.int_s(binom_int(n as i128, k)))));
                            st = st.mul(&sign).mul(&t);
                        }
                        out
                    };
                    let mut next = Vec::new();
                    for (prefix, c0) in &opts {
                        for (letter, c1) in &factor {
                            let mut p = prefix.clone();
                            p.extend(letter.iter().copied());
                            next.push((p, c0.mul(c1)));
                        }
                    }
                    opts = next;
                }
                opts
            }
        };
        let mut next = Vec::new();
        for (prefix, c0) in &acc {
            for (letters, c1) in &options {
                let mut p = prefix.clone();
                p.extend(letters.iter().copied());
                next.push((p, c0.mul(c1)));
            }
        }
        acc = next;
    }
    acc
}

fn bword_text<S: Scalar>(alg: &Algebra<S>, w: &BWord) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let q = alg.quiver();
    let cartan = if alg.presentation() == Presentation::Uq { "H" } else { "Xi" };
    let pow = |base: String, k: u32| if k == 1 { base } else { format!("{base}^{k}") };
    w.iter()
        .map(|l| match *l {
            BLetter::P(a) => format!("X+{}", q.interval(a)),
            BLetter::M(a) => format!("X-{}", q.interval(a)),
            BLetter::H(c, k) => pow(format!("{cartan}{}", q.interval(q.cell_id(c))), k),
            BLetter::Hneg(c, k) => pow(format!("(K^-1*H){}", q.interval(q.cell_id(c))), k),
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Coefficients of a tensor expression in the membership basis.
fn basis_coefficients<S: Scalar>(alg: &Algebra<S>, t: &TExpr<S>) -> BTreeMap<Vec<BWord>, S> {
    let mut out: BTreeMap<Vec<BWord>, S> = BTreeMap::new();
    for (ws, c) in t.iter() {
        let mut acc: Vec<(Vec<BWord>, S)> = vec![(Vec::new(), c.clone())];
        for w in ws {
            let ex = expand_word(alg, w);
            let mut next = Vec::with_capacity(acc.len() * ex.len());
            for (k, c0) in &acc {
                for (bw, c1) in &ex {
                    let mut key = k.clone();
                    key.push(bw.clone());
                    next.push((key, c0.mul(c1)));
                }
            }
            acc = next;
        }
        for (k, v) in acc {
            let slot = out.entry(k.clone()).or_insert_with(|| alg.zero_s());
            *slot = slot.add(&v);
            if slot.is_zero() {
                out.remove(&k);
            }
        }
    }
    out
}

/// Tests `δ_n(e) ∈ t^n U^{⊗n}` for `n = 1..=depth`.
pub fn membership<S: Adic>(alg: &Algebra<S>, e: &Expr<S>, depth: usize) -> Result<MembershipReport> {
    let side = Side::of(alg.presentation())?;
    if depth == 0 {
        return Err(Error::Config("membership depth must be at least 1".into()));
    }
    if side == Side::HAdic && alg.order() <= depth {
        return Err(Error::Config(format!("series truncation {} must exceed the membership depth {depth}", alg.order())));
    }
    let e = alg.normalize(e)?;
    let mut verdicts = Vec::new();
    for n in 1..=depth {
        let d = delta_n(alg, &e, n)?;
        let coeffs = basis_coefficients(alg, &d);
        let bad = coeffs.iter().find(|(_, c)| c.t_valuation().is_some_and(|v| v < n as i64));
        let witness = bad.map(|(k, c)| Witness {
            word: k.iter().map(|w| bword_text(alg, w)).collect::<Vec<_>>().join(" (x) "),
            coefficient: c.to_string(),
        });
        verdicts.push(Verdict { n, divisible: witness.is_none(), witness });
    }
    let pass = verdicts.iter().all(|v| v.divisible);
    Ok(MembershipReport { element: alg.text(&e), depth, verdicts, pass })
}

/// The image of a `Uq` element in `UhTrunc` under `q = exp(h/2)`:
/// `Ẋ± ↦ (1 + q^{-1}) X±`, `K^{±1} ↦ exp(±hΞ/2)`, `Ḣ ↦ (exp(hΞ/2) − 1)/(q − 1)`.
/// The element is read in its display basis, whose coefficients must be
/// regular at `q = 1`.
pub fn expand_to_formal(uq: &Algebra<LocalLaurent>, uh: &Algebra<SeriesH>, e: &Expr<LocalLaurent>) -> Result<Expr<SeriesH>> {
    if uq.presentation() != Presentation::Uq || uh.presentation() != Presentation::UhTrunc {
        return Err(Error::Domain("expansion maps Uq to UhTrunc".into()));
    }
    let n = *uh.ctx();
    let scalar = |c: &LocalLaurent| -> Result<SeriesH> {
        let pole = || Error::Valuation(format!("coefficient {c} has a pole at q = 1"));
        let mut exact = c.num().clone();
        for _ in 0..c.den() {
            exact = exact.div_qm1().ok_or_else(pole)?;
        }
        Ok(expand_laurent(&exact, n))
    };
    let lam = expand_laurent(&(&LaurentQ::constant(1) + &LaurentQ::q_pow(-1)), n);
    // h/(q - 1), from (q - 1)/h = Σ_{k≥1} h^{k-1}/(2^k k!).
    let mut qm1_over_h = SeriesH::zero(n);
    let mut fact = Rat::from_integer(1);
    for k in 1..=n {
        fact *= Rat::from_integer(2 * k as i128);
        qm1_over_h = qm1_over_h.add(&SeriesH::monomial(n, fact.recip(), k - 1));
    }
    let h_over_qm1 = qm1_over_h.inv().expect("(q - 1)/h is a unit");
    let h_dot = |a: IvId| -> Result<Expr<SeriesH>> {
        // (exp(hΞ/2) − 1)/h = Σ_{k≥1} Ξ^k h^{k-1}/(2^k k!).
        let xi = uh.xi_expr(a);
        let mut out = Expr::new();
        let mut power = uh.unit();
        let mut fact = Rat::from_integer(1);
        for k in 1..=n {
            power = uh.mul(&power, &xi)?;
            fact *= Rat::from_integer(2 * k as i128);
            out = out.add(&power.scale(&SeriesH::monomial(n, fact.recip(), k - 1)));
        }
        Ok(out.scale(&h_over_qm1))
    };
    let mut out = Expr::new();
    for (rw, c) in uq.to_display(e).iter() {
        let mut cur = uh.scalar(scalar(c)?);
        for g in rw {
            let f = match *g {
                Gen::Xp(a) => uh.letter(Letter::P(a)).scale(&lam),
                Gen::Xm(a) => uh.letter(Letter::M(a)).scale(&lam),
                Gen::K(a) => uh.grouplike_expr(a, 1),
                Gen::Kinv(a) => uh.grouplike_expr(a, -1),
                Gen::H(a) => h_dot(a)?,
                Gen::Xi(_) => return Err(Error::Domain("Uq has no Ξ generator".into())),
            };
            cur = uh.mul(&cur, &f)?;
        }
        out = out.add(&cur);
    }
    Ok(out)
}

/// Outcome of the `K^{-1}` certificate.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct KInverseCertificate {
    pub interval: String,
    pub order: usize,
    /// `K^{-1} = Σ_{n<N} (−1)^n H̄^n + (−1)^N H̄^N K^{-1}` holds in `UqTilde`.
    pub identity_holds: bool,
    pub membership: MembershipReport,
}

/// Verifies the telescoping expansion of `K_α^{-1}` in `UqTilde` and the
/// membership of `K_α^{-1}` in `Uq` to depth `N`.
pub fn kminus_membership_certificate(
    tilde: &Algebra<LocalLaurent>,
    uq: &Algebra<LocalLaurent>,
    a: IvId,
    order: usize,
) -> Result<KInverseCertificate> {
    if tilde.presentation() != Presentation::UqTilde || uq.presentation() != Presentation::Uq {
        return Err(Error::Domain("the certificate needs UqTilde and Uq".into()));
    }
    if order == 0 {
        return Err(Error::Config("certificate order must be at least 1".into()));
    }
    let kinv = tilde.grouplike_expr(a, -1);
    let hbar = tilde.grouplike_expr(a, 1).sub(&tilde.unit());
    let mut rhs = Expr::new();
    let mut power = tilde.unit();
    for n in 0..order {
        let sign = if n % 2 == 0 { tilde.one_s() } else { tilde.one_s().neg() };
        rhs = rhs.add(&power.scale(&sign));
        power = tilde.mul(&power, &hbar)?;
    }
    let sign = if order.is_multiple_of(2) { tilde.one_s() } else { tilde.one_s().neg() };
    rhs = rhs.add(&tilde.mul(&power, &kinv)?.scale(&sign));
    let identity_holds = tilde.normalize(&rhs)? == tilde.normalize(&kinv)?;
    let membership = membership(uq, &uq.grouplike_expr(a, -1), order)?;
    Ok(KInverseCertificate { interval: uq.quiver().interval(a).to_string(), order, identity_holds, membership })
}

/// Commutator of one generator pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PairCommutator {
    pub left: String,
    pub right: String,
    /// Least `t`-adic valuation of a commutator coefficient (`None`: zero).
    pub valuation: Option<i64>,
    /// Whether a defining relation orders the pair.
    pub imposed: bool,
}

/// `Ũ` commutative modulo `t`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CommutativityReport {
    pub presentation: String,
    pub pairs: Vec<PairCommutator>,
    /// Least valuation over all pairs ordered by a relation.
    pub worst_valuation: Option<i64>,
    /// Pairs ordered by a relation with a non-divisible commutator.
    pub failures: Vec<String>,
    /// Pairs not ordered by any relation (nested same-sign root vectors
    /// under the conservative pair set), with non-divisible commutator.
    pub unimposed_failures: Vec<String>,
    /// Every generator pair, ordered by a relation or not, commutes mod `t`.
    pub pass: bool,
}

/// Generators of `Ũ`: `X̄±_α`, `H̄_c = K_c − 1` and `K_c^{-1}` (polynomial),
/// or `X̄±_α`, `Ξ̄_c` (formal).
pub fn tilde_generators<S: Scalar>(alg: &Algebra<S>) -> Result<Vec<(String, Expr<S>)>> {
    let q = alg.quiver();
    let mut out = Vec::new();
    for a in q.ids() {
        out.push((format!("X+{}", q.interval(a)), alg.letter(Letter::P(a))));
    }
    for c in 0..q.num_cells() {
        let cell = q.interval(q.cell_id(c));
        let mono = |e: i16| {
            let mut m = CMono::ONE;
            m.0[c] = e;
            alg.letter(Letter::C(m))
        };
        match alg.presentation() {
            Presentation::UqTilde => {
                out.push((format!("Hbar{cell}"), mono(1).sub(&alg.unit())));
                out.push((format!("K^-1{cell}"), mono(-1)));
            }
            Presentation::UhTildeTrunc => out.push((format!("Xibar{cell}"), mono(1))),
            p => return Err(Error::Domain(format!("{} is not one of the integral forms", p.name()))),
        }
    }
    for a in q.ids() {
        out.push((format!("X-{}", q.interval(a)), alg.letter(Letter::M(a))));
    }
    Ok(out)
}

fn imposed_pair<S: Scalar>(alg: &Algebra<S>, x: &Expr<S>, y: &Expr<S>) -> bool {
    let root = |e: &Expr<S>| -> Option<(bool, IvId)> {
        let (w, _) = e.iter().next()?;
        match w.as_slice() {
            [Letter::P(a)] if e.len() == 1 => Some((true, *a)),
            [Letter::M(a)] if e.len() == 1 => Some((false, *a)),
            _ => None,
        }
    };
    match (root(x), root(y)) {
        (Some((s, a)), Some((t, b))) if s == t && a != b => alg.quiver().in_serre(a, b) || alg.quiver().in_serre(b, a),
        _ => true,
    }
}

/// Every generator commutator of `Ũ` lies in `t Ũ`.
pub fn commutativity_check<S: Adic>(alg: &Algebra<S>) -> Result<CommutativityReport> {
    let gens = tilde_generators(alg)?;
    let mut pairs = Vec::new();
    let mut failures = Vec::new();
    let mut unimposed_failures = Vec::new();
    let mut worst: Option<i64> = None;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (ln, x) = &gens[i];
            let (rn, y) = &gens[j];
            let c = alg.commutator(x, y)?;
            let valuation = c.iter().filter_map(|(_, s)| s.t_valuation()).min();
            let imposed = imposed_pair(alg, x, y);
            let divisible = valuation.is_none_or(|v| v >= 1);
            if imposed {
                if let Some(v) = valuation {
                    worst = Some(worst.map_or(v, |w| w.min(v)));
                }
                if !divisible {
                    failures.push(format!("[{ln}, {rn}]"));
                }
            } else if !divisible {
                unimposed_failures.push(format!("[{ln}, {rn}]"));
            }
            pairs.push(PairCommutator { left: ln.clone(), right: rn.clone(), valuation, imposed });
        }
    }
    let pass = failures.is_empty() && unimposed_failures.is_empty();
    Ok(CommutativityReport { presentation: alg.presentation().name().into(), pairs, worst_valuation: worst, failures, unimposed_failures, pass })
}

/// Shape of the `q = 1` coordinate ring of `UqTilde`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DualShapeReport {
    pub degree: usize,
    pub words: usize,
    /// Words whose `q = 1` normal form is not the commutative monomial of
    /// their letters.
    pub mismatches: Vec<String>,
    pub distinct_monomials: usize,
    pub free_count: usize,
    pub plus_cartan_closed: bool,
    pub cartan_closed: bool,
    pub cartan_minus_closed: bool,
    pub pass: bool,
}

/// Number of exponent vectors (`e ≥ 0` on `roots` variables, `k ∈ Z` on
/// `cells` variables) with `Σ e + Σ |k| ≤ degree`.
pub fn free_commutative_count(roots: usize, cells: usize, degree: usize) -> usize {
    // f[d] = number of vectors of total weight exactly d.
    let mut f = vec![0usize; degree + 1];
    f[0] = 1;
    for _ in 0..roots {
        let prev = f.clone();
        for d in 0..=degree {
            f[d] = (0..=d).map(|k| prev[d - k]).sum();
        }
    }
    for _ in 0..cells {
        let prev = f.clone();
        for d in 0..=degree {
            f[d] = prev[d] + (1..=d).map(|k| 2 * prev[d - k]).sum::<usize>();
        }
    }
    f.iter().sum()
}

fn closure<S: Scalar>(alg: &Algebra<S>, letters: &[Letter], allowed: impl Fn(&Letter) -> bool) -> Result<bool> {
    let ok_word = |w: &Word| w.iter().all(&allowed);
    for a in letters {
        for w in alg.coproduct(&alg.letter(*a))?.iter().flat_map(|(ws, _)| ws.iter()) {
            if !ok_word(w) {
                return Ok(false);
            }
        }
        for b in letters {
            let p = alg.mul(&alg.letter(*a), &alg.letter(*b))?;
            if !p.iter().all(|(w, _)| ok_word(w)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that the `q = 1` normal forms of all words of length `≤ degree`
/// in `X̄±_α`, `K_c^{±1}` are the commutative monomials of their letters,
/// counts them against the free commutative count, and checks the closure
/// of the `X+K`, `K` and `KX-` parts.
pub fn dual_group_shape_check(alg: &Algebra<LocalLaurent>, degree: usize) -> Result<DualShapeReport> {
    if alg.presentation() != Presentation::UqTilde {
        return Err(Error::Domain("the dual group shape is read on UqTilde".into()));
    }
    let q = alg.quiver();
    let cells = q.num_cells();
    let mut letters: Vec<Letter> = Vec::new();
    for a in q.ids() {
        letters.push(Letter::P(a));
        letters.push(Letter::M(a));
    }
    for c in 0..cells {
        for e in [1, -1] {
            let mut m = CMono::ONE;
            m.0[c] = e;
            letters.push(Letter::C(m));
        }
    }
    let expected = |w: &[Letter]| -> CMonomial {
        let mut m = CMonomial::new();
        for l in w {
            let mut bump = |v: CVar, e: i32| {
                let s = m.entry(v).or_insert(0);
                *s += e;
                if *s == 0 {
                    m.remove(&v);
                }
            };
            match *l {
                Letter::P(a) => bump(CVar::Xp(a), 1),
                Letter::M(a) => bump(CVar::Xm(a), 1),
                Letter::C(mono) => {
                    for c in 0..cells {
                        if mono.0[c] != 0 {
                            bump(CVar::Cartan(c), mono.0[c] as i32);
                        }
                    }
                }
            }
        }
        m
    };
    let mut words = 0;
    let mut mismatches = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..=degree {
        let mut next = Vec::new();
        for w in &frontier {
            words += 1;
            let mut e = alg.unit();
            for l in w {
                e = alg.mul(&e, &alg.letter(*l))?;
            }
            let lim = limit_coordinate(alg, &e)?;
            let want = expected(w);
            let exact = lim.terms.len() == 1 && lim.terms.get(&want).is_some_and(|c| *c == Rat::from_integer(1));
            if !exact {
                mismatches.push(format!("{} -> {}", alg.word_text(w), lim.text(q)));
            }
            seen.insert(want);
            if w.len() < degree {
                for l in &letters {
                    let mut x = w.clone();
                    x.push(*l);
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    let free_count = free_commutative_count(2 * q.len(), cells, degree);
    let plus_k: Vec<Letter> = letters.iter().copied().filter(|l| !matches!(l, Letter::M(_))).collect();
    let k_only: Vec<Letter> = letters.iter().copied().filter(|l| matches!(l, Letter::C(_))).collect();
    let k_minus: Vec<Letter> = letters.iter().copied().filter(|l| !matches!(l, Letter::P(_))).collect();
    let plus_cartan_closed = closure(alg, &plus_k, |l| !matches!(l, Letter::M(_)))?;
    let cartan_closed = closure(alg, &k_only, |l| matches!(l, Letter::C(_)))?;
    let cartan_minus_closed = closure(alg, &k_minus, |l| !matches!(l, Letter::P(_)))?;
    let pass = mismatches.is_empty() && seen.len() == free_count && plus_cartan_closed && cartan_closed && cartan_minus_closed;
    Ok(DualShapeReport {
        degree,
        words,
        mismatches,
        distinct_monomials: seen.len(),
        free_count,
        plus_cartan_closed,
        cartan_closed,
        cartan_minus_closed,
        pass,
    })
}
