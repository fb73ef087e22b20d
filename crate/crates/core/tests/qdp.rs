//! Drinfeld functors: `δ_n`, membership in `U'` (positive and negative
//! controls on both sides), the `K^{-1}` certificate, commutativity of the
//! integral forms modulo `t`, and the shape of the dual group.

use cqg_core::coeffring::{LocalLaurent, SeriesH};
use cqg_core::ncalg::{Algebra, AlgebraSpec, AnyAlgebra, Presentation, TExpr};
use cqg_core::qdp::{
    commutativity_check, delta_n, dual_group_shape_check, expand_to_formal, free_commutative_count, kminus_membership_certificate, membership,
};
use cqg_core::quiver::{Grid, Interval, SerreVariant};
use cqg_core::sample::{random_expr, rng, Letters};
use cqg_core::Error;

fn poly(pres: Presentation, bp: usize) -> Algebra<LocalLaurent> {
    match AlgebraSpec::new(pres, Grid::integers(bp).unwrap()).build().unwrap() {
        AnyAlgebra::Poly(a) => a,
        AnyAlgebra::Formal(_) => unreachable!(),
    }
}

fn formal(pres: Presentation, bp: usize, n: usize) -> Algebra<SeriesH> {
    match AlgebraSpec::new(pres, Grid::integers(bp).unwrap()).with_truncation(n).build().unwrap() {
        AnyAlgebra::Formal(a) => a,
        AnyAlgebra::Poly(_) => unreachable!(),
    }
}

fn tensor_text<S: cqg_core::coeffring::Scalar>(a: &Algebra<S>, t: &TExpr<S>) -> String {
    if t.is_zero() {
        return "0".into();
    }
    t.iter()
        .map(|(ws, c)| format!("({c})*{}", ws.iter().map(|w| a.word_text(w)).collect::<Vec<_>>().join(" (x) ")))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[test]
fn delta_n_examples() {
    let uh = formal(Presentation::UhTrunc, 2, 4);
    let xi = uh.parse("Xi[0,1)").unwrap();
    let d1 = delta_n(&uh, &xi, 1).unwrap();
    assert_eq!(d1, xi.iter().map(|(w, c)| (vec![w.clone()], c.clone())).collect());
    assert!(delta_n(&uh, &xi, 2).unwrap().is_zero());
    let uq = poly(Presentation::Uq, 2);
    let k = uq.parse("K[0,1)").unwrap();
    let km1 = uq.normalize(&k.sub(&uq.unit())).unwrap();
    let want = uq.tensor_normalize(&cqg_core::ncalg::tensor_of(&[&km1, &km1], uq.one_s())).unwrap();
    assert_eq!(delta_n(&uq, &k, 2).unwrap(), want, "{}", tensor_text(&uq, &delta_n(&uq, &k, 2).unwrap()));
    assert!(matches!(delta_n(&uq, &k, 0), Err(Error::Config(_))));
}

#[test]
fn polynomial_controls() {
    let uq = poly(Presentation::Uq, 3);
    let pass = ["(q-1)*H[0,1)", "(q-1)*X+[0,1)", "(q-1)*X-[1,2)", "(q-1)*X+[0,2)", "(q-1)*X-[0,2)", "K[0,1)", "K^-1[0,1)", "K^-1[0,2)"];
    for s in pass {
        let r = membership(&uq, &uq.parse(s).unwrap(), 4).unwrap();
        assert!(r.pass, "{s} should pass: {r:?}");
    }
    for s in ["H[0,1)", "X+[0,1)", "X-[0,1)", "X+[0,2)"] {
        let r = membership(&uq, &uq.parse(s).unwrap(), 2).unwrap();
        assert_eq!(r.first_failure(), Some(1), "{s}: {r:?}");
        let w = r.verdicts[0].witness.as_ref().unwrap();
        assert_eq!(w.coefficient, "1", "{s}");
    }
}

#[test]
fn formal_controls() {
    let uh = formal(Presentation::UhTrunc, 3, 8);
    for s in ["h*Xi[0,1)", "h*Xi[0,2)", "(q-q^-1)*X+[0,1)", "(q-q^-1)*X-[0,1)", "(q-q^-1)*X+[0,2)", "(q-q^-1)*X-[0,2)"] {
        let r = membership(&uh, &uh.parse(s).unwrap(), 4).unwrap();
        assert!(r.pass, "{s} should pass: {r:?}");
    }
    for s in ["Xi[0,1)", "X+[0,1)", "X-[0,2)"] {
        let r = membership(&uh, &uh.parse(s).unwrap(), 1).unwrap();
        assert_eq!(r.first_failure(), Some(1), "{s}");
    }
    // Depth must stay below the truncation.
    assert!(matches!(membership(&uh, &uh.parse("h*Xi[0,1)").unwrap(), 8), Err(Error::Config(_))));
    let tilde = poly(Presentation::UqTilde, 2);
    assert!(matches!(membership(&tilde, &tilde.unit(), 1), Err(Error::Domain(_))));
}

#[test]
fn membership_report_json() {
    let uq = poly(Presentation::Uq, 2);
    let r = membership(&uq, &uq.parse("H[0,1)").unwrap(), 2).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["element"], "H[0,1)");
    assert_eq!(v["depth"], 2);
    assert_eq!(v["pass"], false);
    assert_eq!(v["verdicts"][0]["n"], 1);
    assert_eq!(v["verdicts"][0]["divisible"], false);
    assert_eq!(v["verdicts"][0]["witness"]["word"], "H[0,1)");
    let ok = serde_json::to_value(membership(&uq, &uq.parse("K[0,1)").unwrap(), 1).unwrap()).unwrap();
    assert!(ok["verdicts"][0].get("witness").is_none());
}

#[test]
fn kinverse_certificate() {
    let tilde = poly(Presentation::UqTilde, 3);
    let uq = poly(Presentation::Uq, 3);
    let q = uq.quiver();
    for iv in [Interval::int(0, 1), Interval::int(0, 2)] {
        let a = q.id_of(&iv).unwrap();
        for n in 1..=4 {
            let c = kminus_membership_certificate(&tilde, &uq, a, n).unwrap();
            assert!(c.identity_holds, "{iv} N={n}");
            assert!(c.membership.pass, "{iv} N={n}");
        }
    }
}

#[test]
fn integral_words_are_in_u_prime() {
    // Words of length ≤ 3 in the generators of the integral form.
    let uq = poly(Presentation::Uq, 3);
    let gens = ["(q-1)*H[0,1)", "(q-1)*X+[0,1)", "(q-1)*X-[1,2)", "(q-1)*X+[0,2)", "K^-1[1,2)"];
    let elems: Vec<_> = gens.iter().map(|s| uq.parse(s).unwrap()).collect();
    for a in &elems {
        for b in &elems {
            let ab = uq.mul(a, b).unwrap();
            assert!(membership(&uq, &ab, 3).unwrap().pass, "{}", uq.text(&ab));
        }
    }
    for (a, b, c) in [(0, 1, 2), (2, 3, 4), (1, 2, 1), (3, 0, 2)] {
        let abc = uq.mul(&uq.mul(&elems[a], &elems[b]).unwrap(), &elems[c]).unwrap();
        assert!(membership(&uq, &abc, 3).unwrap().pass, "{}", uq.text(&abc));
    }
    let uh = formal(Presentation::UhTrunc, 3, 8);
    let gens = ["h*Xi[0,1)", "(q-q^-1)*X+[0,1)", "(q-q^-1)*X-[1,2)", "(q-q^-1)*X+[0,2)"];
    let elems: Vec<_> = gens.iter().map(|s| uh.parse(s).unwrap()).collect();
    for a in &elems {
        for b in &elems {
            let ab = uh.mul(a, b).unwrap();
            assert!(membership(&uh, &ab, 3).unwrap().pass, "{}", uh.text(&ab));
        }
    }
}

#[test]
fn q_adic_and_h_adic_verdicts_agree() {
    let uq = poly(Presentation::Uq, 3);
    let uh = formal(Presentation::UhTrunc, 3, 6);
    let mut r = rng(23);
    let mut samples: Vec<_> = ["H[0,1)", "(q-1)*H[0,1)", "(q-1)^2*X+[0,1)*X-[0,1)", "X+[1,2)", "(q-1)*X-[0,2)"]
        .iter()
        .map(|s| uq.parse(s).unwrap())
        .collect();
    for _ in 0..6 {
        let e = random_expr(&uq, &mut r, 2, 2, Letters::All);
        samples.push(uq.mul(&uq.normalize(&e).unwrap(), &uq.parse("(q-1)^2").unwrap()).unwrap());
    }
    for e in samples {
        let f = expand_to_formal(&uq, &uh, &e).unwrap();
        let a = membership(&uq, &e, 2).unwrap();
        let b = membership(&uh, &f, 2).unwrap();
        let va: Vec<bool> = a.verdicts.iter().map(|v| v.divisible).collect();
        let vb: Vec<bool> = b.verdicts.iter().map(|v| v.divisible).collect();
        assert_eq!(va, vb, "{} vs {}", a.element, b.element);
    }
}

#[test]
fn integral_forms_commute_modulo_t() {
    for bp in 2..=4 {
        {
            let pres = Presentation::UqTilde;
            let r = commutativity_check(&poly(pres, bp)).unwrap();
            assert!(r.pass, "{:?}", r.failures);
            assert_eq!(r.worst_valuation, Some(1));
        }
        let r = commutativity_check(&formal(Presentation::UhTildeTrunc, bp, 4)).unwrap();
        assert!(r.pass, "{:?}", r.failures);
        assert_eq!(r.worst_valuation, Some(1));
    }
    // Under the conservative pair set, nested same-sign root vectors have no
    // ordering relation and do not commute mod t; the default set (with
    // nested pairs) makes every generator pair commute.
    let conservative = match AlgebraSpec::new(Presentation::UqTilde, Grid::integers(3).unwrap()).with_serre(SerreVariant::Conservative).build().unwrap() {
        AnyAlgebra::Poly(a) => a,
        AnyAlgebra::Formal(_) => unreachable!(),
    };
    let r = commutativity_check(&conservative).unwrap();
    assert!(!r.pass && r.failures.is_empty());
    assert_eq!(r.unimposed_failures, vec!["[X+[0,1), X+[0,2)]", "[X+[0,2), X+[1,2)]", "[X-[0,1), X-[0,2)]", "[X-[0,2), X-[1,2)]"]);
    let r = commutativity_check(&poly(Presentation::UqTilde, 4)).unwrap();
    assert!(r.pass && r.unimposed_failures.is_empty(), "{r:?}");
}

#[test]
fn commutativity_examples() {
    let a = poly(Presentation::UqTilde, 2);
    let r = commutativity_check(&a).unwrap();
    let find = |l: &str, rr: &str| r.pairs.iter().find(|p| p.left == l && p.right == rr).unwrap().valuation;
    assert_eq!(find("Hbar[0,1)", "K^-1[0,1)"), None);
    assert!(find("X+[0,1)", "Hbar[0,1)").unwrap() >= 1);
    assert!(find("X+[0,1)", "X-[0,1)").unwrap() >= 1);
}

#[test]
fn dual_group_shape() {
    assert_eq!(free_commutative_count(2, 1, 2), 14);
    let r = dual_group_shape_check(&poly(Presentation::UqTilde, 2), 2).unwrap();
    assert_eq!((r.distinct_monomials, r.free_count), (14, 14));
    assert!(r.pass, "{r:?}");
    let r = dual_group_shape_check(&poly(Presentation::UqTilde, 3), 3).unwrap();
    assert!(r.mismatches.is_empty(), "{:?}", &r.mismatches[..r.mismatches.len().min(5)]);
    assert_eq!(r.distinct_monomials, r.free_count);
    assert!(r.plus_cartan_closed && r.cartan_closed && r.cartan_minus_closed);
}

mod closure {
    use super::*;
    use proptest::prelude::*;

    /// Rescaled generators of `Uq` on two breakpoints, all members of `U′`.
    const MEMBERS: [&str; 5] = ["(q-1)*H[0,1)", "(q-1)*X+[0,1)", "(q-1)*X-[0,1)", "K[0,1)", "K^-1[0,1)"];

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// `U′` is a subalgebra: products and sums of members stay members.
        #[test]
        fn u_prime_is_closed_under_products(i in 0..MEMBERS.len(), j in 0..MEMBERS.len(), k in 0..MEMBERS.len()) {
            let a = poly(Presentation::Uq, 2);
            let x = a.parse(MEMBERS[i]).unwrap();
            let y = a.parse(MEMBERS[j]).unwrap();
            let z = a.parse(MEMBERS[k]).unwrap();
            let e = a.mul(&a.mul(&x, &y).unwrap(), &z).unwrap().add(&x);
            let r = membership(&a, &e, 3).unwrap();
            prop_assert!(r.pass, "{} fails at n = {:?}", a.text(&e), r.first_failure());
        }
    }
}
