//! Hopf pairing between the Borel parts of the formal presentation:
//! generator values, the grouplike values against an exponential oracle,
//! and compatibility with the defining relations under each convention.

use cqg_core::coeffring::{LSeries, Rat, SeriesH};
use cqg_core::hopf::pairing::{Pairing, PairingOptions, PairingSide, SplitFirst};
use cqg_core::ncalg::{Algebra, AlgebraSpec, AnyAlgebra, CMono, Expr, Letter, Presentation, Word};
use cqg_core::quiver::Grid;

fn uh(n: usize, order: usize) -> Algebra<SeriesH> {
    match AlgebraSpec::new(Presentation::UhTrunc, Grid::integers(n).unwrap()).with_truncation(order).build().unwrap() {
        AnyAlgebra::Formal(a) => a,
        _ => unreachable!(),
    }
}

fn opts(side: PairingSide, scale: i128, split_first: SplitFirst) -> PairingOptions {
    PairingOptions { side, cartan_scale: Rat::from_integer(scale), split_first }
}

/// `exp(a h)` to `O(h^prec)`, with rational arithmetic only.
fn exp_oracle(a: Rat, prec: usize) -> LSeries {
    let mut coeffs = vec![Rat::from_integer(1)];
    for k in 1..prec {
        let prev = coeffs[k - 1];
        coeffs.push(prev * a / Rat::from_integer(k as i128));
    }
    LSeries::new(0, prec as i64, coeffs)
}

/// All words of length `≤ len` in the positive (resp. negative) Borel letters.
fn words(a: &Algebra<SeriesH>, plus: bool, len: usize) -> Vec<Word> {
    let q = a.quiver();
    let mut letters: Vec<Letter> = q.ids().map(|i| if plus { Letter::P(i) } else { Letter::M(i) }).collect();
    for c in 0..q.num_cells() {
        let mut m = CMono::ONE;
        m.0[c] = 1;
        letters.push(Letter::C(m));
    }
    let mut layer: Vec<Word> = vec![vec![]];
    let mut out = layer.clone();
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |l| {
                    let mut w = w.clone();
                    w.push(*l);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Counts (relation violations, split-order disagreements) over all pairs of
/// words of length `≤ len`.
fn consistency(a: &Algebra<SeriesH>, side: PairingSide, scale: i128, len: usize) -> (usize, usize) {
    let p = Pairing::new(a, opts(side, scale, SplitFirst::Plus)).unwrap();
    let p2 = Pairing::new(a, opts(side, scale, SplitFirst::Minus)).unwrap();
    let (mut rel, mut split) = (0, 0);
    let minus = words(a, false, len);
    for u in words(a, true, len) {
        let nu = a.normalize(&Expr::single(u.clone(), a.one_s())).unwrap();
        for v in &minus {
            let nv = a.normalize(&Expr::single(v.clone(), a.one_s())).unwrap();
            let raw = p.pair_words(&u, v).unwrap();
            if !raw.agrees_with(&p.pair(&nu, &nv).unwrap()) {
                rel += 1;
            }
            if !raw.agrees_with(&p2.pair_words(&u, v).unwrap()) {
                split += 1;
            }
        }
    }
    (rel, split)
}

#[test]
fn generator_values() {
    let a = uh(3, 8);
    let p = Pairing::new(&a, PairingOptions::default()).unwrap();
    let q = a.quiver();
    assert_eq!(p.pair(&a.unit(), &a.unit()).unwrap(), LSeries::new(0, 8, vec![Rat::from_integer(1)]));
    for c in 0..q.num_cells() {
        for d in 0..q.num_cells() {
            let (x, y) = (a.parse(&format!("Xi{}", q.interval(q.cell_id(c)))).unwrap(), a.parse(&format!("Xi{}", q.interval(q.cell_id(d)))).unwrap());
            let s = q.sym(q.cell_id(c), q.cell_id(d));
            let expected = LSeries::new(-1, 8, vec![Rat::from_integer(s as i128)]);
            assert!(p.pair(&x, &y).unwrap().agrees_with(&expected));
        }
    }
    let qmqi = LSeries::from_series(&SeriesH::q_pow(8, 1).sub(&SeriesH::q_pow(8, -1)), 0);
    for x in q.ids() {
        for y in q.ids() {
            let u = a.parse(&format!("X+{}", q.interval(x))).unwrap();
            let v = a.parse(&format!("X-{}", q.interval(y))).unwrap();
            let got = p.pair(&u, &v).unwrap().mul(&qmqi);
            let delta = if x == y { 1 } else { 0 };
            assert!(got.agrees_with(&LSeries::new(0, 6, vec![Rat::from_integer(delta)])), "{got}");
            assert!(got.prec() >= 6);
        }
    }
}

#[test]
fn default_convention_is_cop_on_the_positive_coproduct() {
    let o = PairingOptions::default();
    assert_eq!(o.side, PairingSide::CopPlus);
    assert_eq!(o.cartan_scale, Rat::from_integer(1));
}

/// With `(Ξ_α|Ξ_β) = (α|β)/h` and `K = exp(hΞ/2)`, the grouplikes pair to
/// `exp(h (α|β)/4) = q^{(α|β)/2}`, not `q^{(α|β)}`.
#[test]
fn grouplike_values_at_the_stated_cartan_scale() {
    let a = uh(3, 15);
    let p = Pairing::new(&a, PairingOptions::default()).unwrap();
    let q = a.quiver();
    for x in q.ids() {
        for y in q.ids() {
            let got = p.pair_grouplikes(x, y, 7).unwrap();
            assert!(got.prec() >= 8);
            let s = q.sym(x, y) as i128;
            assert!(got.agrees_with(&exp_oracle(Rat::new(s, 4), 8)), "({}|{}) = {got}", q.interval(x), q.interval(y));
            if s != 0 {
                assert!(!got.agrees_with(&exp_oracle(Rat::new(s, 2), 8)));
            }
        }
    }
}

/// Doubling the Cartan value reproduces `(K_α|K_β) = q^{(α|β)}`.
#[test]
fn grouplike_values_at_the_doubled_cartan_scale() {
    let a = uh(3, 15);
    let p = Pairing::new(&a, opts(PairingSide::CopPlus, 2, SplitFirst::Plus)).unwrap();
    let q = a.quiver();
    for x in q.ids() {
        for y in q.ids() {
            let got = p.pair_grouplikes(x, y, 7).unwrap();
            let oracle = LSeries::from_series(&SeriesH::q_pow(8, q.sym(x, y)), 0);
            assert!(got.agrees_with(&oracle) && got.prec() >= 8, "({}|{}) = {got}", q.interval(x), q.interval(y));
        }
    }
}

/// Only the cop-on-positive convention with the doubled Cartan value is
/// compatible with the defining relations and independent of the split order.
#[test]
fn relation_compatibility_by_convention() {
    let a = uh(3, 6);
    assert_eq!(consistency(&a, PairingSide::CopPlus, 2, 2), (0, 0));
    for side in [PairingSide::Plain, PairingSide::CopMinus, PairingSide::CopBoth] {
        let (rel, split) = consistency(&a, side, 2, 2);
        assert!(rel > 0 && split > 0, "{side:?}");
    }
    let (rel, split) = consistency(&a, PairingSide::CopPlus, 1, 2);
    assert!(rel > 0 && split > 0);
}

#[test]
fn rejects_other_presentations_and_wrong_borel_parts() {
    match AlgebraSpec::new(Presentation::UhTildeTrunc, Grid::integers(3).unwrap()).build().unwrap() {
        AnyAlgebra::Formal(b) => assert!(Pairing::new(&b, PairingOptions::default()).is_err()),
        _ => unreachable!(),
    }
    let a = uh(3, 4);
    let p = Pairing::new(&a, PairingOptions::default()).unwrap();
    let x = a.parse("X-[0,1)").unwrap();
    assert!(p.pair(&x, &x).is_err());
}
