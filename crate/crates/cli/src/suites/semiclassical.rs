//! `semiclassical-match`: specialization of `Uq` at `q = 1` and the
//! first-order brackets and cobrackets of every presentation against the Lie
//! bialgebra `g_X`.
//!
//! Normalizations: in `UqTilde` the coordinates are `K - 1 ↦ ξ` and
//! `X̄± ↦ 2x±`, under which the first-order bracket is exact and
//! `(Δ - Δ^op)/(q - 1)` reads `2δ`; in `UhTildeTrunc` and `UhTrunc` all
//! generators map to themselves; in `Uq` the root vectors specialize to
//! `2x±` and the cobracket again reads `2δ`.

use cqg_core::classical::limit::{coordinate_cobracket, enveloping_cobracket, enveloping_of, first_order_bracket, limit_enveloping, limit_raw, Specialize};
use cqg_core::classical::{LieBialgebra, LieElem, LieGen};
use cqg_core::coeffring::{LocalLaurent, Rat, SeriesH};
use cqg_core::ncalg::{Algebra, AnyAlgebra, Expr, Letter, Presentation};

use super::{cartan_letter, grid_label};
use crate::config::RunConfig;
use crate::report::{check, CheckRecord};

const RELATIONS: &str = "every defining relation of Uq specializes to 0 in U(g_X) under K ↦ 1, H ↦ ξ, X± ↦ 2x±";
const GENERATORS: &str = "generators specialize as K ↦ 1, H ↦ ξ, X± ↦ 2x± at q = 1";
const BRACKET_TILDE: &str = "first-order bracket ([a,b]/(q-1) at q = 1) of UqTilde reproduces the Lie bracket, [X̄+_α, X̄+_β] ↦ ±4p_{αβ} x+_{α⊕β}";
const BRACKET_FORMAL: &str = "first-order bracket ([a,b]/h at h = 0) of UhTildeTrunc reproduces the Lie bracket of g_X";
const COBRACKET_TILDE: &str = "first-order cobracket of UqTilde reproduces the Lie cobracket δ (as 2δ(2x) in the X̄ ↦ 2x coordinates)";
const COBRACKET_FORMAL: &str = "first-order cobracket of UhTildeTrunc reproduces the Lie cobracket δ";
const COBRACKET_UQ: &str = "(Δ - Δ^op)/(q - 1) of Uq root vectors specializes to 2δ(2x±)";
const COBRACKET_UH: &str = "(Δ - Δ^op)/h of UhTrunc generators specializes to δ";

fn rat(n: i128) -> Rat {
    Rat::from_integer(n)
}

pub(super) fn semiclassical_match(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for g in cfg.sub_grids() {
        let name = |what: &str| format!("semiclassical-match/{}/{what}", grid_label(&g));
        let lie = LieBialgebra::new(cfg.quiver(&g));
        let poly = |p: Presentation| match cfg.spec(p, &g).build()? {
            AnyAlgebra::Poly(a) => Ok(a),
            AnyAlgebra::Formal(_) => unreachable!("polynomial presentation"),
        };
        let formal = |p: Presentation, n: usize| match cfg.spec(p, &g).with_truncation(n).build()? {
            AnyAlgebra::Formal(a) => Ok(a),
            AnyAlgebra::Poly(_) => unreachable!("formal presentation"),
        };
        let uq = poly(Presentation::Uq);
        out.push(check(name("specialization-relations"), RELATIONS, || specialization_relations(uq.as_ref().map_err(Clone::clone)?)));
        out.push(check(name("specialization-generators"), GENERATORS, || specialization_generators(uq.as_ref().map_err(Clone::clone)?)));
        out.push(check(name("bracket-UqTilde"), BRACKET_TILDE, || brackets(&lie, &poly(Presentation::UqTilde)?, true)));
        out.push(check(name("bracket-UhTildeTrunc"), BRACKET_FORMAL, || brackets(&lie, &formal(Presentation::UhTildeTrunc, cfg.truncation)?, false)));
        out.push(check(name("cobracket-UqTilde"), COBRACKET_TILDE, || coordinate_cobrackets(&lie, &poly(Presentation::UqTilde)?, true)));
        out.push(check(name("cobracket-UhTildeTrunc"), COBRACKET_FORMAL, || {
            coordinate_cobrackets(&lie, &formal(Presentation::UhTildeTrunc, cfg.truncation)?, false)
        }));
        out.push(check(name("cobracket-Uq"), COBRACKET_UQ, || enveloping_cobrackets(&lie, uq.as_ref().map_err(Clone::clone)?, true)));
        out.push(check(name("cobracket-UhTrunc"), COBRACKET_UH, || enveloping_cobrackets(&lie, &formal(Presentation::UhTrunc, cfg.truncation)?, false)));
    }
    out
}

fn specialization_relations(a: &Algebra<LocalLaurent>) -> cqg_core::Result<Option<String>> {
    let cl = enveloping_of(a)?;
    for r in a.relations() {
        let diff = limit_raw(a, &cl, &r.lhs)?.sub(&limit_raw(a, &cl, &r.rhs)?);
        if !diff.is_zero() {
            return Ok(Some(format!("{}: lhs - rhs ↦ {}", r.name, cl.text(&diff))));
        }
    }
    Ok(None)
}

fn specialization_generators(a: &Algebra<LocalLaurent>) -> cqg_core::Result<Option<String>> {
    let cl = enveloping_of(a)?;
    let q = a.quiver();
    for id in q.ids() {
        let iv = q.interval(id);
        let cases = [
            (format!("K{iv}"), "1".to_string()),
            (format!("K^-1{iv}"), "1".to_string()),
            (format!("H{iv}"), format!("xi{iv}")),
            (format!("X+{iv}"), format!("2*x+{iv}")),
            (format!("X-{iv}"), format!("2*x-{iv}")),
        ];
        for (src, dst) in cases {
            let got = limit_enveloping(a, &cl, &a.parse(&src)?)?;
            if got != cl.parse(&dst)? {
                return Ok(Some(format!("{src} ↦ {}, expected {dst}", cl.text(&got))));
            }
        }
    }
    Ok(None)
}

/// The generator of a presentation standing for `g`, and the Lie element it
/// specializes to.
fn lift<S: Specialize>(a: &Algebra<S>, g: LieGen, doubled: bool) -> (Expr<S>, LieElem) {
    let scale = if doubled { rat(2) } else { rat(1) };
    match g {
        LieGen::Xp(x) => (a.letter(Letter::P(x)), LieElem::single(g, scale)),
        LieGen::Xm(x) => (a.letter(Letter::M(x)), LieElem::single(g, scale)),
        LieGen::Xi(k) if a.presentation() == Presentation::UqTilde => (a.letter(cartan_letter(k, 1)).sub(&a.unit()), LieElem::gen(g)),
        LieGen::Xi(k) => (a.letter(cartan_letter(k, 1)), LieElem::gen(g)),
    }
}

fn brackets<S: Specialize>(lie: &LieBialgebra, a: &Algebra<S>, doubled: bool) -> cqg_core::Result<Option<String>> {
    let q = a.quiver();
    for g in lie.generators() {
        for h in lie.generators() {
            let (x, gx) = lift(a, g, doubled);
            let (y, hy) = lift(a, h, doubled);
            let expected = lie.bracket(&gx, &hy);
            match first_order_bracket(a, &x, &y) {
                Ok(got) if got == expected => {}
                Ok(got) => return Ok(Some(format!("[{}, {}] ↦ {}, expected {}", g.text(q), h.text(q), got.text(q), expected.text(q)))),
                Err(e) => return Ok(Some(format!("[{}, {}]: {e}", g.text(q), h.text(q)))),
            }
        }
    }
    Ok(None)
}

fn coordinate_cobrackets<S: Specialize>(lie: &LieBialgebra, a: &Algebra<S>, doubled: bool) -> cqg_core::Result<Option<String>> {
    let q = a.quiver();
    let factor = if doubled { rat(2) } else { rat(1) };
    for g in lie.generators() {
        let (x, gx) = lift(a, g, doubled);
        let expected = lie.cobracket(&gx).scale(factor);
        let got = coordinate_cobracket(a, &x)?;
        if got != expected {
            return Ok(Some(format!("δ({}) ↦ {}, expected {}", g.text(q), got.text(q), expected.text(q))));
        }
    }
    Ok(None)
}

fn enveloping_cobrackets<S: Specialize>(lie: &LieBialgebra, a: &Algebra<S>, doubled: bool) -> cqg_core::Result<Option<String>> {
    let cl: Algebra<SeriesH> = enveloping_of(a)?;
    let q = a.quiver();
    let factor = if doubled { rat(2) } else { rat(1) };
    for g in lie.generators() {
        // In Uq the Cartan generators are grouplike or their logarithms are
        // not letters; only root vectors are compared there.
        if doubled && matches!(g, LieGen::Xi(_)) {
            continue;
        }
        let (x, gx) = lift(a, g, doubled);
        let expected = lie.cobracket(&gx).scale(factor);
        let got = enveloping_cobracket(a, &cl, &x)?;
        if got != expected {
            return Ok(Some(format!("δ({}) ↦ {}, expected {}", g.text(q), got.text(q), expected.text(q))));
        }
    }
    Ok(None)
}
