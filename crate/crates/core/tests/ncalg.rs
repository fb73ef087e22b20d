//! Rewriting engine: defining relations, worked examples, and agreement of
//! the memoized engine with the small-step rewriter.

use cqg_core::coeffring::{LaurentQ, LocalLaurent};
use cqg_core::ncalg::step::{normalize_steps, Strategy};
use cqg_core::ncalg::{Algebra, AlgebraSpec, AnyAlgebra, Expr, Presentation};
use cqg_core::quiver::{Grid, IntervalOrder};

fn grid(n: usize) -> Grid {
    Grid::integers(n).unwrap()
}

fn uq(n: usize) -> Algebra<LocalLaurent> {
    match AlgebraSpec::new(Presentation::Uq, grid(n)).build().unwrap() {
        AnyAlgebra::Poly(a) => a,
        _ => unreachable!(),
    }
}

fn each_algebra(n: usize, order: IntervalOrder, mut f: impl FnMut(&str, Result<Vec<String>, String>)) {
    for p in Presentation::ALL {
        let spec = AlgebraSpec::new(p, grid(n)).with_truncation(4).with_order(order);
        match spec.build().unwrap() {
            AnyAlgebra::Poly(a) => f(p.name(), a.check_relations().map_err(|e| e.to_string())),
            AnyAlgebra::Formal(a) => f(p.name(), a.check_relations().map_err(|e| e.to_string())),
        }
    }
}

#[test]
fn defining_relations_hold_in_normal_form() {
    for n in [2, 3, 4] {
        for order in [IntervalOrder::Lex, IntervalOrder::RevLex] {
            each_algebra(n, order, |name, res| {
                let bad = res.unwrap();
                assert!(bad.is_empty(), "{name} on {n} breakpoints ({order:?}): {bad:?}");
            });
        }
    }
}

#[test]
fn same_sign_rule_on_two_cells() {
    let a = uq(3);
    let e = a.parse("X+[1,2)*X+[0,1)").unwrap();
    let expected = a.parse("q*X+[0,1)*X+[1,2) - q*(1 + q^-1)*X+[0,2)").unwrap();
    assert_eq!(e, expected);
}

#[test]
fn mixed_rule_on_a_cell() {
    let a = uq(3);
    let e = a.parse("X-[0,1)*X+[0,1)").unwrap();
    let expected = a.parse("X+[0,1)*X-[0,1) - (1 + q^-1)*(1 + K^-1[0,1))*H[0,1)").unwrap();
    assert_eq!(e, expected);
    assert_eq!(a.parse("K[0,1)*K^-1[0,1)").unwrap(), a.unit());
    let w = a.parse("X+[0,1)*H[1,2)*K^-1[0,1)*X-[0,2)").unwrap();
    assert_eq!(a.text(&w), "X+[0,1)*H[1,2)*K^-1[0,1)*X-[0,2)");
}

#[test]
fn coefficient_extraction() {
    let a = uq(3);
    let e = a.parse("q*X+[0,1) - X+[0,1)").unwrap();
    let c = a.coeff_extract(&e);
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].0, "X+[0,1)");
    assert_eq!(c[0].1, LocalLaurent::from_laurent(LaurentQ::qm1()));
}

/// The input as words without any rewriting (generators concatenated).
fn free_words(a: &Algebra<LocalLaurent>, text: &str) -> Expr<LocalLaurent> {
    let mut out = Expr::new();
    for (rw, c) in a.parse_raw(text).unwrap().iter() {
        let mut acc = Expr::single(Vec::new(), c.clone());
        for g in rw {
            let ge = a.gen_expr(*g).unwrap();
            let mut next = Expr::new();
            for (w0, c0) in acc.iter() {
                for (w1, c1) in ge.iter() {
                    let mut w = w0.clone();
                    w.extend(w1.iter().copied());
                    next.add_term(w, c0.mul(c1));
                }
            }
            acc = next;
        }
        out = out.add(&acc);
    }
    out
}

#[test]
fn small_step_agrees_with_memoized_engine() {
    let a = uq(4);
    for text in [
        "X-[0,3)*X+[1,2)*X-[0,1)*X+[0,2)",
        "X-[1,3)*X-[0,2)*X+[0,3)*K^-1[1,2)",
        "H[0,2)*X-[2,3)*X+[1,3)*X+[0,1)",
    ] {
        let word_form = free_words(&a, text);
        let memo = a.normalize(&word_form).unwrap();
        for s in [Strategy::Leftmost, Strategy::Rightmost] {
            let (nf, _) = normalize_steps(&a, &word_form, s).unwrap();
            assert_eq!(nf, memo, "{text} under {s:?}");
        }
    }
}
