//! `confluence` and `hopf-axioms`: the rewriting engine and the Hopf
//! structure of every presentation.

use cqg_core::coeffring::Scalar;
use cqg_core::ncalg::display::term_text;
use cqg_core::ncalg::step::{normalize_steps, Strategy};
use cqg_core::ncalg::{Algebra, Expr, Presentation, TExpr};
use cqg_core::sample::{random_expr, rng, Letters};
use cqg_core::Error;

use super::{generators, grid_label, stream_seed, with_algebra};
use crate::config::RunConfig;
use crate::report::{check, CheckRecord};

const AGREEMENT: &str = "normal forms are independent of the rewriting strategy (leftmost, rightmost, memoized)";
const TERMINATION: &str = "rewriting terminates within the fuel budget";
const TRIANGULAR: &str = "every normal form is a combination of triangular X+ · Cartan · X- monomials";
const ASSOCIATIVITY: &str = "multiplication of normal forms is associative";
const COASSOCIATIVITY: &str = "(Δ ⊗ id)Δ = (id ⊗ Δ)Δ on generators and sampled elements";
const COUNIT: &str = "(ε ⊗ id)Δ = id = (id ⊗ ε)Δ on generators and sampled elements";
const ANTIPODE: &str = "m(S ⊗ id)Δ = ιε = m(id ⊗ S)Δ on generators and the first sampled elements";
const MORPHISM: &str = "Δ is an algebra morphism: Δ(xy) = Δ(x)Δ(y) on random pairs";

/// Confluence inputs: up to two words of length at most four.
const MAX_TERMS: usize = 2;
const MAX_LEN: usize = 4;

pub(super) fn confluence(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for p in cfg.presentations(&Presentation::ALL) {
        let name = |what: &str| format!("confluence/{}/{}/{what}", p.name(), grid_label(&cfg.grid));
        let alg = match cfg.spec(p, &cfg.grid).build() {
            Ok(a) => a,
            Err(e) => {
                out.push(check(name("build"), "the presentation can be built", || Err(e)));
                continue;
            }
        };
        with_algebra!(&alg, a => {
            let stats = run_confluence(cfg, a);
            out.push(check(name("agreement"), AGREEMENT, || Ok(stats.disagreement.clone())));
            out.push(check(name("termination"), TERMINATION, || Ok(stats.nontermination.clone())));
            out.push(check(name("triangular-shape"), TRIANGULAR, || Ok(stats.non_triangular.clone())));
            out.push(check(name("associativity"), ASSOCIATIVITY, || associativity(cfg, a)));
        });
    }
    out
}

#[derive(Default)]
struct ConfluenceStats {
    disagreement: Option<String>,
    nontermination: Option<String>,
    non_triangular: Option<String>,
}

fn run_confluence<S: Scalar>(cfg: &RunConfig, a: &Algebra<S>) -> ConfluenceStats {
    let mut stats = ConfluenceStats::default();
    let mut r = rng(stream_seed(cfg.seed, &format!("confluence/{}", a.presentation())));
    for _ in 0..cfg.samples {
        let e = random_expr(a, &mut r, MAX_TERMS, MAX_LEN, Letters::All);
        let input = word_form_text(a, &e);
        let results: Vec<_> = [a.normalize(&e), normalize_steps(a, &e, Strategy::Leftmost).map(|r| r.0), normalize_steps(a, &e, Strategy::Rightmost).map(|r| r.0)]
            .into_iter()
            .collect();
        let mut forms = Vec::new();
        for res in results {
            match res {
                Ok(f) => forms.push(f),
                Err(err @ Error::FuelExhausted { .. }) => {
                    stats.nontermination.get_or_insert_with(|| format!("{input}: {err}"));
                }
                Err(err) => {
                    stats.disagreement.get_or_insert_with(|| format!("{input}: {err}"));
                }
            }
        }
        if forms.windows(2).any(|w| w[0] != w[1]) {
            stats.disagreement.get_or_insert_with(|| format!("{input}: {}", forms.iter().map(|f| a.text(f)).collect::<Vec<_>>().join(" | ")));
        }
        if let Some(f) = forms.first() {
            if let Some((w, _)) = f.iter().find(|(w, _)| !a.is_triangular(w)) {
                stats.non_triangular.get_or_insert_with(|| format!("{input} has normal-form word {}", a.word_text(w)));
            }
        }
    }
    stats
}

/// Text of an expression that is not in normal form, word by word.
fn word_form_text<S: Scalar>(a: &Algebra<S>, e: &Expr<S>) -> String {
    e.iter().map(|(w, c)| term_text(c, &a.word_text(w), &a.one_s())).collect::<Vec<_>>().join(" + ")
}

fn associativity<S: Scalar>(cfg: &RunConfig, a: &Algebra<S>) -> cqg_core::Result<Option<String>> {
    let mut r = rng(stream_seed(cfg.seed, &format!("associativity/{}", a.presentation())));
    for _ in 0..cfg.triples {
        let mut sample = || a.normalize(&random_expr(a, &mut r, 2, 2, Letters::All));
        let (x, y, z) = (sample()?, sample()?, sample()?);
        let left = a.mul(&a.mul(&x, &y)?, &z)?;
        let right = a.mul(&x, &a.mul(&y, &z)?)?;
        if left != right {
            return Ok(Some(format!("({})({})({}): {} vs {}", a.text(&x), a.text(&y), a.text(&z), a.text(&left), a.text(&right))));
        }
    }
    Ok(None)
}

pub(super) fn hopf_axioms(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for g in cfg.sub_grids() {
        for p in cfg.presentations(&Presentation::ALL) {
            let name = |what: &str| format!("hopf-axioms/{}/{}/{what}", p.name(), grid_label(&g));
            let alg = match cfg.spec(p, &g).build() {
                Ok(a) => a,
                Err(e) => {
                    out.push(check(name("build"), "the presentation can be built", || Err(e)));
                    continue;
                }
            };
            with_algebra!(&alg, a => {
                let elems = hopf_elements(cfg, a);
                out.push(check(name("coassociativity"), COASSOCIATIVITY, || coassociativity(a, &elems)));
                out.push(check(name("counit"), COUNIT, || counit(a, &elems)));
                out.push(check(name("antipode"), ANTIPODE, || antipode(a, &elems, generators(a).len() + cfg.antipode_samples)));
                out.push(check(name("delta-morphism"), MORPHISM, || morphism(cfg, a)));
            });
        }
    }
    out
}

/// Generators plus sampled elements of degree at most three.
fn hopf_elements<S: Scalar>(cfg: &RunConfig, a: &Algebra<S>) -> cqg_core::Result<Vec<Expr<S>>> {
    let mut elems = generators(a);
    let mut r = rng(stream_seed(cfg.seed, &format!("hopf/{}/{}", a.presentation(), a.quiver().num_cells())));
    for _ in 0..cfg.hopf_samples {
        elems.push(a.normalize(&random_expr(a, &mut r, 2, 3, Letters::All))?);
    }
    Ok(elems)
}

fn coassociativity<S: Scalar>(a: &Algebra<S>, elems: &cqg_core::Result<Vec<Expr<S>>>) -> cqg_core::Result<Option<String>> {
    for e in elems.as_ref().map_err(Clone::clone)? {
        if a.iterated_coproduct(e, 2)? != a.iterated_coproduct_right(e, 2)? {
            return Ok(Some(a.text(e)));
        }
    }
    Ok(None)
}

fn counit<S: Scalar>(a: &Algebra<S>, elems: &cqg_core::Result<Vec<Expr<S>>>) -> cqg_core::Result<Option<String>> {
    for e in elems.as_ref().map_err(Clone::clone)? {
        let d = a.coproduct(e)?;
        let id: TExpr<S> = e.iter().map(|(w, c)| (vec![w.clone()], c.clone())).collect();
        for slot in [0, 1] {
            if a.tensor_normalize(&a.counit_in_slot(&d, slot))? != id {
                return Ok(Some(format!("{} (counit in slot {slot})", a.text(e))));
            }
        }
    }
    Ok(None)
}

fn antipode<S: Scalar>(a: &Algebra<S>, elems: &cqg_core::Result<Vec<Expr<S>>>, count: usize) -> cqg_core::Result<Option<String>> {
    for e in elems.as_ref().map_err(Clone::clone)?.iter().take(count) {
        let eps = a.scalar(a.counit(e));
        for left in [true, false] {
            let got = a.antipode_law(e, left)?;
            if got != eps {
                let side = if left { "m(S ⊗ id)Δ" } else { "m(id ⊗ S)Δ" };
                return Ok(Some(format!("{side}({}) = {}, ε = {}", a.text(e), a.text(&got), a.text(&eps))));
            }
        }
    }
    Ok(None)
}

fn morphism<S: Scalar>(cfg: &RunConfig, a: &Algebra<S>) -> cqg_core::Result<Option<String>> {
    let mut r = rng(stream_seed(cfg.seed, &format!("morphism/{}/{}", a.presentation(), a.quiver().num_cells())));
    for _ in 0..cfg.pairs {
        let x = a.normalize(&random_expr(a, &mut r, 2, 2, Letters::All))?;
        let y = a.normalize(&random_expr(a, &mut r, 2, 2, Letters::All))?;
        if a.coproduct(&a.mul(&x, &y)?)? != a.tensor_mul(&a.coproduct(&x)?, &a.coproduct(&y)?)? {
            return Ok(Some(format!("x = {}, y = {}", a.text(&x), a.text(&y))));
        }
    }
    Ok(None)
}
