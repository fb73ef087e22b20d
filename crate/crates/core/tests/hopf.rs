//! Hopf structure: coassociativity, counit and antipode laws, the
//! Δ-is-multiplicative audit, and worked coproduct/antipode examples.

use cqg_core::coeffring::Scalar;
use cqg_core::ncalg::{Algebra, AlgebraSpec, AnyAlgebra, CMono, Expr, Letter, Presentation, TExpr};
use cqg_core::quiver::Grid;
use cqg_core::sample::{random_expr, rng, Letters};

fn generators<S: Scalar>(a: &Algebra<S>) -> Vec<Expr<S>> {
    let q = a.quiver();
    let mut out = Vec::new();
    for id in q.ids() {
        out.push(a.letter(Letter::P(id)));
        out.push(a.letter(Letter::M(id)));
    }
    for c in 0..q.num_cells() {
        let mut m = CMono::ONE;
        m.0[c] = 1;
        out.push(a.letter(Letter::C(m)));
        m.0[c] = -1;
        if a.model() == cqg_core::ncalg::CartanModel::Exponential {
            out.push(a.letter(Letter::C(m)));
        }
    }
    out
}

fn check_axioms<S: Scalar>(a: &Algebra<S>, samples: usize) {
    let name = a.presentation().name();
    let mut elems = generators(a);
    let mut r = rng(7);
    for _ in 0..samples {
        let e = random_expr(a, &mut r, 2, 3, Letters::All);
        elems.push(a.normalize(&e).unwrap());
    }
    for e in &elems {
        let left = a.iterated_coproduct(e, 2).unwrap();
        let right = a.iterated_coproduct_right(e, 2).unwrap();
        assert_eq!(left, right, "{name}: coassociativity on {}", a.text(e));
        let d = a.coproduct(e).unwrap();
        let l = a.tensor_normalize(&a.counit_in_slot(&d, 0)).unwrap();
        let r1 = a.tensor_normalize(&a.counit_in_slot(&d, 1)).unwrap();
        let id: TExpr<S> = e.iter().map(|(w, c)| (vec![w.clone()], c.clone())).collect();
        assert_eq!(l, id, "{name}: left counit on {}", a.text(e));
        assert_eq!(r1, id, "{name}: right counit on {}", a.text(e));
    }
    for e in generators(a) {
        let eps = a.scalar(a.counit(&e));
        assert_eq!(a.antipode_law(&e, true).unwrap(), eps, "{name}: left antipode on {}", a.text(&e));
        assert_eq!(a.antipode_law(&e, false).unwrap(), eps, "{name}: right antipode on {}", a.text(&e));
    }
    let mut r = rng(11);
    for _ in 0..samples {
        let x = a.normalize(&random_expr(a, &mut r, 2, 2, Letters::All)).unwrap();
        let y = a.normalize(&random_expr(a, &mut r, 2, 2, Letters::All)).unwrap();
        let lhs = a.coproduct(&a.mul(&x, &y).unwrap()).unwrap();
        let rhs = a.tensor_mul(&a.coproduct(&x).unwrap(), &a.coproduct(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "{name}: Δ multiplicative on {} · {}", a.text(&x), a.text(&y));
    }
}

#[test]
fn hopf_axioms_all_presentations() {
    for n in [3, 4] {
        for p in Presentation::ALL {
            let spec = AlgebraSpec::new(p, Grid::integers(n).unwrap()).with_truncation(4);
            match spec.build().unwrap() {
                AnyAlgebra::Poly(a) => check_axioms(&a, 10),
                AnyAlgebra::Formal(a) => check_axioms(&a, 10),
            }
        }
    }
}

#[test]
fn worked_coproducts_and_antipodes() {
    let uq = match AlgebraSpec::new(Presentation::Uq, Grid::integers(3).unwrap()).build().unwrap() {
        AnyAlgebra::Poly(a) => a,
        AnyAlgebra::Formal(_) => unreachable!(),
    };
    let k = uq.parse("K[0,1)").unwrap();
    let kkk = cqg_core::ncalg::tensor_of(&[&k, &k, &k], uq.one_s());
    assert_eq!(uq.iterated_coproduct(&k, 2).unwrap(), uq.tensor_normalize(&kkk).unwrap());
    // (Δ ⊗ id)Δ(X+_{[0,2)}): three terms from Δ(X+_{[0,2)}) ⊗ 1, one from
    // K ⊗ K ⊗ X+, two from Δ(K_{[1,2)} X+_{[0,1)}) ⊗ X+_{[1,2)}.
    let x = uq.parse("X+[0,2)").unwrap();
    assert_eq!(uq.iterated_coproduct(&x, 2).unwrap().len(), 6);
    assert_eq!(uq.coproduct(&x).unwrap().len(), 3);
    assert_eq!(uq.antipode(&k).unwrap(), uq.parse("K^-1[0,1)").unwrap());
    let x01 = uq.parse("X+[0,1)").unwrap();
    assert_eq!(uq.antipode(&x01).unwrap(), uq.parse("-K^-1[0,1)*X+[0,1)").unwrap());
    assert_eq!(uq.text(&uq.antipode(&x01).unwrap()), "(-q^-2)*X+[0,1)*K^-1[0,1)");
    assert_eq!(uq.tensor_text(&uq.coproduct(&x01).unwrap()), "1 (x) X+[0,1) + X+[0,1) (x) 1 + (-1 + q)*H[0,1) (x) X+[0,1)");

    let uh = match AlgebraSpec::new(Presentation::UhTrunc, Grid::integers(3).unwrap()).with_truncation(4).build().unwrap() {
        AnyAlgebra::Formal(a) => a,
        AnyAlgebra::Poly(_) => unreachable!(),
    };
    let xi = uh.parse("Xi[0,1)").unwrap();
    assert_eq!(uh.tensor_text(&uh.iterated_coproduct(&xi, 2).unwrap()), "1 (x) 1 (x) Xi[0,1) + 1 (x) Xi[0,1) (x) 1 + Xi[0,1) (x) 1 (x) 1");
    assert_eq!(uh.antipode(&xi).unwrap(), xi.neg());
    // The signed series agrees with the axiom-solved antipode.
    let xp = uh.parse("X+[0,1)").unwrap();
    let (series, _) = uh.antipode_series(&xp, true, 6).unwrap();
    assert_eq!(series, uh.antipode(&xp).unwrap());
}
