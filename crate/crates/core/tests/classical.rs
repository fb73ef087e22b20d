//! The Lie bialgebra `g_X` against an independent `sl_{n+1}` matrix model,
//! its structural identities, and the semiclassical limits of the quantum
//! presentations.

use std::collections::BTreeMap;
use std::sync::Arc;

use cqg_core::classical::limit::{
    coordinate_cobracket, enveloping_cobracket, enveloping_of, first_order_bracket, limit_coordinate, limit_enveloping, limit_raw, linear_part,
    poisson_bracket,
};
use cqg_core::classical::{CobracketValue, LieBialgebra, LieElem, LieGen, LieTensor};
use cqg_core::coeffring::Rat;
use cqg_core::ncalg::{Algebra, AlgebraSpec, AnyAlgebra, CMono, Expr, Letter, Presentation};
use cqg_core::quiver::{Grid, Interval, Quiver};
use cqg_core::Error;

fn quiver(breakpoints: usize) -> Arc<Quiver> {
    Arc::new(Quiver::standard(Grid::integers(breakpoints).unwrap()))
}

fn id(q: &Quiver, lo: i64, hi: i64) -> u8 {
    q.id_of(&Interval::int(lo, hi)).unwrap()
}

fn rat(n: i128) -> Rat {
    Rat::from_integer(n)
}

// ----- sl_{n+1} oracle --------------------------------------------------

type Matrix = BTreeMap<(usize, usize), Rat>;
type MTensor = BTreeMap<(usize, usize, usize, usize), Rat>;

fn mat_add(acc: &mut Matrix, k: (usize, usize), c: Rat) {
    let v = acc.entry(k).or_insert_with(|| rat(0));
    *v += c;
    if *v == rat(0) {
        acc.remove(&k);
    }
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::new();
    for (&(i, j), x) in a {
        for (&(k, l), y) in b {
            if j == k {
                mat_add(&mut out, (i, l), x * y);
            }
        }
    }
    out
}

fn mat_bracket(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = mat_mul(a, b);
    for (k, c) in mat_mul(b, a) {
        mat_add(&mut out, k, -c);
    }
    out
}

/// The linear map `g_X → sl_{n+1}` with root signs `eps[id]`:
/// `x+_{[i,j)} ↦ ε E_ij`, `x-_{[i,j)} ↦ ε E_ji`, `ξ_k ↦ E_kk − E_{k+1,k+1}`.
struct Oracle<'a> {
    q: &'a Quiver,
    eps: Vec<i128>,
}

impl Oracle<'_> {
    fn gen(&self, g: LieGen) -> Matrix {
        let mut m = Matrix::new();
        match g {
            LieGen::Xp(a) => {
                let (i, j) = self.q.endpoints(a);
                mat_add(&mut m, (i, j), rat(self.eps[a as usize]));
            }
            LieGen::Xm(a) => {
                let (i, j) = self.q.endpoints(a);
                mat_add(&mut m, (j, i), rat(self.eps[a as usize]));
            }
            LieGen::Xi(k) => {
                mat_add(&mut m, (k, k), rat(1));
                mat_add(&mut m, (k + 1, k + 1), rat(-1));
            }
        }
        m
    }

    fn elem(&self, x: &LieElem) -> Matrix {
        let mut out = Matrix::new();
        for (g, c) in x.iter() {
            for (k, v) in self.gen(*g) {
                mat_add(&mut out, k, v * c);
            }
        }
        out
    }

    fn tensor(&self, t: &LieTensor) -> MTensor {
        let mut out = MTensor::new();
        for (k, c) in t.iter() {
            for (&(i, j), x) in &self.gen(k[0]) {
                for (&(a, b), y) in &self.gen(k[1]) {
                    let v = out.entry((i, j, a, b)).or_insert_with(|| rat(0));
                    *v += c * x * y;
                }
            }
        }
        out.retain(|_, v| *v != rat(0));
        out
    }

    fn is_hom(&self, lie: &LieBialgebra) -> bool {
        let gens = lie.generators();
        gens.iter().all(|&a| {
            gens.iter().all(|&b| {
                let lhs = self.elem(&lie.bracket(&LieElem::gen(a), &LieElem::gen(b)));
                lhs == mat_bracket(&self.gen(a), &self.gen(b))
            })
        })
    }
}

/// `ad_x(r)` for `r = Σ_{i<j} (E_ij ⊗ E_ji − E_ji ⊗ E_ij)`.
fn ad_r(x: &Matrix, size: usize) -> MTensor {
    let unit = |i, j| Matrix::from([((i, j), rat(1))]);
    let mut out = MTensor::new();
    let mut put = |a: &Matrix, b: &Matrix, s: Rat| {
        for (&(i, j), x) in a {
            for (&(k, l), y) in b {
                *out.entry((i, j, k, l)).or_insert_with(|| rat(0)) += s * x * y;
            }
        }
    };
    for i in 0..size {
        for j in i + 1..size {
            for (a, b, s) in [(unit(i, j), unit(j, i), rat(1)), (unit(j, i), unit(i, j), rat(-1))] {
                put(&mat_bracket(x, &a), &b, s);
                put(&a, &mat_bracket(x, &b), s);
            }
        }
    }
    out.retain(|_, v| *v != rat(0));
    out
}

/// All sign vectors making the map a Lie homomorphism.
fn hom_signs(q: &Quiver, lie: &LieBialgebra) -> Vec<Vec<i128>> {
    let n = q.len();
    (0..1u32 << n)
        .map(|mask| (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect::<Vec<_>>())
        .filter(|eps| Oracle { q, eps: eps.clone() }.is_hom(lie))
        .collect()
}

#[test]
fn bracket_is_the_sl_bracket() {
    for bp in 2..=4 {
        let q = quiver(bp);
        let lie = LieBialgebra::new(q.clone());
        let signs = hom_signs(&q, &lie);
        assert!(!signs.is_empty(), "no sign choice realises g_X as sl_{bp} on {bp} breakpoints");
        // Pairs left unimposed by the defining relations commute in sl_{n+1}.
        let oracle = Oracle { q: &q, eps: signs[0].clone() };
        for (a, b) in lie.unimposed_pairs() {
            assert!(mat_bracket(&oracle.gen(a), &oracle.gen(b)).is_empty(), "{} {}", a.text(&q), b.text(&q));
        }
    }
}

#[test]
fn cobracket_is_the_standard_coboundary() {
    for bp in 2..=4 {
        let q = quiver(bp);
        let lie = LieBialgebra::new(q.clone());
        let oracle = Oracle { q: &q, eps: hom_signs(&q, &lie)[0].clone() };
        let mut scale: Option<Rat> = None;
        for g in lie.generators() {
            let ours = oracle.tensor(&lie.cobracket_gen(g));
            let reference = ad_r(&oracle.gen(g), bp);
            assert_eq!(ours.is_empty(), reference.is_empty(), "{}", g.text(&q));
            if let Some((k, v)) = reference.iter().next() {
                let s = *scale.get_or_insert_with(|| ours.get(k).copied().unwrap_or(rat(0)) / v);
                let scaled: MTensor = reference.iter().map(|(k, v)| (*k, v * s)).filter(|(_, v)| *v != rat(0)).collect();
                assert_eq!(ours, scaled, "cobracket of {} is not a fixed multiple of ad(r)", g.text(&q));
            }
        }
        // With a ∧ b = (a⊗b − b⊗a)/2, δ(x) = ½ ad_x(Σ_{i<j} E_ji ⊗ E_ij − E_ij ⊗ E_ji).
        assert_eq!(scale, Some(Rat::new(-1, 2)));
    }
}

#[test]
fn lie_bialgebra_identities() {
    for bp in 2..=5 {
        let lie = LieBialgebra::new(quiver(bp));
        assert!(lie.antisymmetry_defects().is_empty());
        assert_eq!(lie.jacobi_defects(), Vec::<String>::new(), "Jacobi on {bp} breakpoints");
        assert_eq!(lie.co_jacobi_defects(), Vec::<String>::new(), "co-Jacobi on {bp} breakpoints");
        assert_eq!(lie.cocycle_defects(), Vec::<String>::new(), "cocycle on {bp} breakpoints");
        assert_eq!(lie.additivity_defects(), Vec::<String>::new(), "additivity on {bp} breakpoints");
    }
}

#[test]
fn worked_brackets_and_cobrackets() {
    let q = quiver(3);
    let lie = LieBialgebra::new(q.clone());
    let (a01, a12, a02) = (id(&q, 0, 1), id(&q, 1, 2), id(&q, 0, 2));
    let x = |g| LieElem::gen(g);
    assert_eq!(lie.bracket(&x(LieGen::Xp(a01)), &x(LieGen::Xp(a12))).text(&q), "x+[0,2)");
    assert_eq!(lie.bracket(&x(LieGen::Xp(a02)), &x(LieGen::Xm(a12))).text(&q), "x+[0,1)");
    assert_eq!(lie.bracket(&x(LieGen::Xp(a02)), &x(LieGen::Xm(a02))), lie.xi(a02));
    assert_eq!(lie.cobracket_wedge(&x(LieGen::Xp(a01))).text(&q), "xi[0,1)^x+[0,1)");
    assert_eq!(lie.cobracket_wedge(&x(LieGen::Xp(a02))).text(&q), "xi[0,1)^x+[0,2) + xi[1,2)^x+[0,2) + (2)*x+[0,1)^x+[1,2)");
    assert!(lie.cobracket_wedge(&x(LieGen::Xi(0))).is_zero());
    let round = CobracketValue::from_tensor(&lie.cobracket_wedge(&x(LieGen::Xm(a02))).to_tensor()).unwrap();
    assert_eq!(round, lie.cobracket_wedge(&x(LieGen::Xm(a02))));
}

// ----- limits -----------------------------------------------------------

fn poly(pres: Presentation, bp: usize) -> Algebra<cqg_core::coeffring::LocalLaurent> {
    match AlgebraSpec::new(pres, Grid::integers(bp).unwrap()).build().unwrap() {
        AnyAlgebra::Poly(a) => a,
        AnyAlgebra::Formal(_) => unreachable!(),
    }
}

fn formal(pres: Presentation, bp: usize, n: usize) -> Algebra<cqg_core::coeffring::SeriesH> {
    match AlgebraSpec::new(pres, Grid::integers(bp).unwrap()).with_truncation(n).build().unwrap() {
        AnyAlgebra::Formal(a) => a,
        AnyAlgebra::Poly(_) => unreachable!(),
    }
}

fn cartan(k: usize, e: i16) -> Letter {
    let mut m = CMono::ONE;
    m.0[k] = e;
    Letter::C(m)
}

#[test]
fn uq_specializes_to_the_enveloping_algebra() {
    let a = poly(Presentation::Uq, 3);
    let cl = enveloping_of(&a).unwrap();
    let k = a.parse("K[0,1)").unwrap();
    assert_eq!(cl.text(&limit_enveloping(&a, &cl, &k).unwrap()), "1");
    let h = a.parse("H[0,1)").unwrap();
    assert_eq!(cl.text(&limit_enveloping(&a, &cl, &h).unwrap()), "xi[0,1)");
    let x = a.parse("X+[0,1)*X-[1,2)").unwrap();
    assert_eq!(cl.text(&limit_enveloping(&a, &cl, &x).unwrap()), "(4)*x+[0,1)*x-[1,2)");
    // q-commutators of the root vectors die at q = 1 only to leading order.
    let xk = a.parse("K[0,1)*X+[1,2) - X+[1,2)*K[0,1)").unwrap();
    assert_eq!(cl.text(&limit_enveloping(&a, &cl, &xk).unwrap()), "0");
}

#[test]
fn uq_relations_specialize_to_the_classical_relations() {
    for bp in 2..=4 {
        let a = poly(Presentation::Uq, bp);
        let cl = enveloping_of(&a).unwrap();
        for r in a.relations() {
            let lhs = limit_raw(&a, &cl, &r.lhs);
            let rhs = limit_raw(&a, &cl, &r.rhs);
            match (lhs, rhs) {
                (Ok(l), Ok(rr)) => assert!(l.sub(&rr).is_zero(), "{}: {} != {}", r.name, cl.text(&l), cl.text(&rr)),
                (l, rr) => panic!("{}: specialization failed: {:?} / {:?}", r.name, l.err(), rr.err()),
            }
        }
    }
}

#[test]
fn formal_coordinate_limit_recovers_the_lie_bialgebra() {
    for bp in 2..=4 {
        let a = formal(Presentation::UhTildeTrunc, bp, 4);
        let lie = LieBialgebra::new(a.quiver_arc());
        let q = a.quiver();
        let lift = |g: LieGen| -> Expr<_> {
            a.letter(match g {
                LieGen::Xp(x) => Letter::P(x),
                LieGen::Xm(x) => Letter::M(x),
                LieGen::Xi(k) => cartan(k, 1),
            })
        };
        for g in lie.generators() {
            let cob = coordinate_cobracket(&a, &lift(g)).unwrap();
            assert_eq!(cob, lie.cobracket_gen(g), "cobracket of {}", g.text(q));
            for h in lie.generators() {
                let br = first_order_bracket(&a, &lift(g), &lift(h));
                if lie.bracket_gens(g, h).imposed {
                    assert_eq!(br.unwrap(), lie.bracket(&LieElem::gen(g), &LieElem::gen(h)), "[{}, {}]", g.text(q), h.text(q));
                } else {
                    // Unordered nested pairs: the commutator is not divisible.
                    assert!(matches!(br, Err(Error::Divisibility(_))), "[{}, {}]", g.text(q), h.text(q));
                }
            }
        }
    }
}

#[test]
fn polynomial_coordinate_limit_recovers_the_lie_bialgebra() {
    // Generators X̄± ↦ 2x±, K − 1 ↦ ξ: the bracket is exact and the
    // cobracket of (Δ − Δ^op) comes out as 2δ in these coordinates.
    for bp in 2..=4 {
        let a = poly(Presentation::UqTilde, bp);
        let lie = LieBialgebra::new(a.quiver_arc());
        let q = a.quiver();
        let lift = |g: LieGen| -> Expr<_> {
            match g {
                LieGen::Xp(x) => a.letter(Letter::P(x)),
                LieGen::Xm(x) => a.letter(Letter::M(x)),
                LieGen::Xi(k) => a.letter(cartan(k, 1)).sub(&a.unit()),
            }
        };
        let image = |g: LieGen| -> LieElem {
            match g {
                LieGen::Xi(_) => LieElem::gen(g),
                _ => LieElem::single(g, rat(2)),
            }
        };
        for g in lie.generators() {
            let cob = coordinate_cobracket(&a, &lift(g)).unwrap();
            assert_eq!(cob, lie.cobracket(&image(g)).scale(rat(2)), "cobracket of {}", g.text(q));
            for h in lie.generators() {
                let br = first_order_bracket(&a, &lift(g), &lift(h));
                if lie.bracket_gens(g, h).imposed {
                    assert_eq!(br.unwrap(), lie.bracket(&image(g), &image(h)), "[{}, {}]", g.text(q), h.text(q));
                } else {
                    // Unordered nested pairs: the commutator is not divisible.
                    assert!(matches!(br, Err(Error::Divisibility(_))), "[{}, {}]", g.text(q), h.text(q));
                }
            }
        }
    }
}

#[test]
fn worked_poisson_brackets() {
    let a = poly(Presentation::UqTilde, 3);
    let q = a.quiver();
    let x = a.parse("X+[0,1)").unwrap();
    let y = a.parse("X+[1,2)").unwrap();
    let br = poisson_bracket(&a, &x, &y).unwrap();
    let pv = q.p(id(q, 0, 1), id(q, 0, 2));
    assert_eq!(pv, 1);
    assert_eq!(br.text(q), "(-1)*X+[0,1)*X+[1,2) + (2)*X+[0,2)");
    assert_eq!(linear_part(&br).unwrap(), LieElem::single(LieGen::Xp(id(q, 0, 2)), rat(4 * pv as i128)));
    let k = a.parse("K[0,1)").unwrap();
    assert_eq!(limit_coordinate(&a, &k).unwrap().text(q), "K[0,1)");
    assert!(matches!(linear_part(&limit_coordinate(&a, &k).unwrap()), Err(Error::Domain(_))));
    // The limit map refuses the non-commutative presentations.
    let uq = poly(Presentation::Uq, 3);
    assert!(matches!(limit_coordinate(&uq, &uq.parse("K[0,1)").unwrap()), Err(Error::Domain(_))));
}

#[test]
fn enveloping_cobrackets() {
    for bp in 2..=4 {
        let a = formal(Presentation::UhTrunc, bp, 3);
        let u = poly(Presentation::Uq, bp);
        let cl = enveloping_of(&a).unwrap();
        let lie = LieBialgebra::new(a.quiver_arc());
        for g in lie.generators() {
            let (letter, xi) = match g {
                LieGen::Xp(x) => (Letter::P(x), false),
                LieGen::Xm(x) => (Letter::M(x), false),
                LieGen::Xi(k) => (cartan(k, 1), true),
            };
            let d = enveloping_cobracket(&a, &cl, &a.letter(letter)).unwrap();
            assert_eq!(d, lie.cobracket_gen(g), "UhTrunc cobracket of {}", g.text(a.quiver()));
            if !xi {
                let d = enveloping_cobracket(&u, &cl, &u.letter(letter)).unwrap();
                assert_eq!(d, lie.cobracket(&LieElem::single(g, rat(2))).scale(rat(2)), "Uq cobracket of {}", g.text(a.quiver()));
            }
        }
    }
}
