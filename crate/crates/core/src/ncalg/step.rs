//! Small-step rewriting with a selectable redex strategy.
//!
//! Independent of the memoized engine in [`Algebra`]: every step rewrites
//! exactly one adjacent pair of one word.  Comparing the fixed points reached
//! with the leftmost and rightmost strategies is the empirical confluence
//! check; the termination measure is recorded for every step.

use super::algebra::clean;
use super::expr::Expr;
use super::word::{Letter, Word};
use super::{Algebra, Sign};
use crate::coeffring::Scalar;
use crate::error::{Error, Result};

/// Which redex of a word is rewritten first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Lexicographic termination measure of a word: number of root vectors,
/// total cell length of their intervals, number of order inversions, number
/// of letters.
pub type Measure = (usize, usize, usize, usize);

/// Statistics of one small-step normalization.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StepStats {
    pub steps: usize,
    /// Steps producing a word whose measure is not strictly smaller.
    pub measure_violations: usize,
}

fn phase(l: &Letter) -> u8 {
    match l {
        Letter::P(_) => 0,
        Letter::C(_) => 1,
        Letter::M(_) => 2,
    }
}

/// The termination measure of a word.
pub fn measure<S: Scalar>(alg: &Algebra<S>, w: &Word) -> Measure {
    let q = alg.quiver();
    let mut nx = 0;
    let mut len = 0;
    for l in w {
        if let Letter::P(a) | Letter::M(a) = l {
            nx += 1;
            len += q.length(*a);
        }
    }
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let out_of_order = match (w[i], w[j]) {
                (Letter::P(b), Letter::P(a)) | (Letter::M(b), Letter::M(a)) => q.rank(b) > q.rank(a),
                (x, y) => phase(&x) > phase(&y),
            };
            inv += out_of_order as usize;
        }
    }
    (nx, len, inv, w.len())
}

/// Rewrite of the pair at `i, i+1`, if it is a redex.
fn rewrite_pair<S: Scalar>(alg: &Algebra<S>, x: Letter, y: Letter) -> Option<Vec<(S, Word)>> {
    let q = alg.quiver();
    match (x, y) {
        (Letter::C(m0), Letter::C(m1)) => Some(vec![(alg.one_s(), clean(vec![Letter::C(m0.plus(&m1))]))]),
        (Letter::C(m), Letter::P(a)) => {
            Some(alg.shift(&m, a).into_iter().map(|(c, mi)| (c, clean(vec![Letter::P(a), Letter::C(mi)]))).collect())
        }
        (Letter::M(b), Letter::C(m)) => {
            Some(alg.shift(&m, b).into_iter().map(|(c, mi)| (c, clean(vec![Letter::C(mi), Letter::M(b)]))).collect())
        }
        (Letter::M(b), Letter::P(a)) => {
            let mut out = vec![(alg.one_s(), vec![Letter::P(a), Letter::M(b)])];
            out.extend(alg.mixed_rhs(a, b).into_iter().map(|(c, w)| (c.neg(), w)));
            Some(out)
        }
        (Letter::P(b), Letter::P(a)) if q.rank(b) > q.rank(a) => alg.reorder(Sign::Plus, b, a),
        (Letter::M(b), Letter::M(a)) if q.rank(b) > q.rank(a) => alg.reorder(Sign::Minus, b, a),
        _ => None,
    }
}

fn find_redex<S: Scalar>(alg: &Algebra<S>, w: &Word, strategy: Strategy) -> Option<(usize, Vec<(S, Word)>)> {
    let n = w.len();
    if n < 2 {
        return None;
    }
    let positions: Box<dyn Iterator<Item = usize>> = match strategy {
        Strategy::Leftmost => Box::new(0..n - 1),
        Strategy::Rightmost => Box::new((0..n - 1).rev()),
    };
    for i in positions {
        if let Some(r) = rewrite_pair(alg, w[i], w[i + 1]) {
            return Some((i, r));
        }
    }
    None
}

/// Normalizes by single pair rewrites until no redex is left.
///
/// The budget is the algebra's fuel per input term.
pub fn normalize_steps<S: Scalar>(alg: &Algebra<S>, e: &Expr<S>, strategy: Strategy) -> Result<(Expr<S>, StepStats)> {
    let budget = alg.fuel() * e.len().max(1);
    let mut stats = StepStats::default();
    let mut pending: Expr<S> = e.iter().map(|(w, c)| (clean(w.clone()), c.clone())).collect();
    pending = alg.clip_expr(pending);
    let mut done = Expr::new();
    loop {
        let next = match strategy {
            Strategy::Leftmost => pending.iter().next(),
            Strategy::Rightmost => pending.iter().next_back(),
        }
        .map(|(w, c)| (w.clone(), c.clone()));
        let Some((w, c)) = next else { break };
        pending.add_term(w.clone(), c.neg());
        let Some((i, repl)) = find_redex(alg, &w, strategy) else {
            done.add_term(w, c);
            continue;
        };
        stats.steps += 1;
        if stats.steps > budget {
            return Err(Error::FuelExhausted { fuel: budget, word: alg.word_text(&w) });
        }
        let before = measure(alg, &w);
        let mut produced = Expr::new();
        for (d, mid) in repl {
            let mut nw: Word = w[..i].to_vec();
            nw.extend(mid);
            nw.extend_from_slice(&w[i + 2..]);
            let nw = clean(nw);
            if measure(alg, &nw) >= before {
                stats.measure_violations += 1;
            }
            produced.add_term(nw, c.mul(&d));
        }
        let produced = alg.clip_expr(produced);
        for (k, v) in produced.into_terms() {
            pending.add_term(k, v);
        }
    }
    Ok((done, stats))
}
