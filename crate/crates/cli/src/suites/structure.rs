//! `quiver-audit` and `jacobi`: the combinatorics of intervals and the
//! classical Lie bialgebra.

use std::collections::BTreeSet;

use cqg_core::classical::LieBialgebra;
use cqg_core::quiver::{self, EulerVariant, Grid, Interval, IvId, Quiver};

use super::grid_label;
use crate::config::RunConfig;
use crate::report::{check, first_defect, CheckRecord};

const PARTIAL_OPS: &str = "partial operations ⊕, ⊖, strict union and strict intersection agree with set-theoretic computation on cells";
const EULER_FORM: &str = "the Euler form is the equioriented A_n form on cell-indicator dimension vectors (transpose for the opposite variant)";
const SYMMETRY: &str = "the symmetrized Euler form (α|β) is symmetric";
const SELF_PAIRING: &str = "(α|α) = 2 for every interval";
const B_IDENTITY: &str = "b_{αβ} = p_{α,α⊕β} whenever α⊕β is defined";

/// Set of cells covered by an interval.
type Cells = BTreeSet<usize>;

fn cells(g: &Grid, iv: &Interval) -> Cells {
    let lo = g.position(&iv.lo).expect("grid interval");
    let hi = g.position(&iv.hi).expect("grid interval");
    (lo..hi).collect()
}

/// The interval covering a non-empty contiguous set of cells.
fn interval_of(g: &Grid, s: &Cells) -> Option<Interval> {
    let (&lo, &hi) = (s.first()?, s.last()?);
    if hi - lo + 1 != s.len() {
        return None;
    }
    let b = g.breakpoints();
    Some(Interval { lo: b[lo], hi: b[hi + 1] })
}

/// Brute-force partial operations on cell sets.
fn brute_osum(g: &Grid, a: &Cells, b: &Cells) -> Option<Interval> {
    if !a.is_disjoint(b) {
        return None;
    }
    interval_of(g, &a.union(b).copied().collect())
}

fn brute_odiff(g: &Grid, a: &Cells, b: &Cells) -> Option<Interval> {
    if !(b.is_subset(a) && a != b) {
        return None;
    }
    interval_of(g, &a.difference(b).copied().collect())
}

fn brute_union(g: &Grid, a: &Cells, b: &Cells) -> Option<Interval> {
    if a.is_subset(b) || b.is_subset(a) {
        return None;
    }
    interval_of(g, &a.union(b).copied().collect())
}

fn brute_intersection(g: &Grid, a: &Cells, b: &Cells) -> Option<Interval> {
    if a.is_subset(b) || b.is_subset(a) {
        return None;
    }
    interval_of(g, &a.intersection(b).copied().collect())
}

fn partial_operations(g: &Grid, q: &Quiver) -> Option<String> {
    type FreeOp = fn(&Interval, &Interval) -> Option<Interval>;
    type BruteOp = fn(&Grid, &Cells, &Cells) -> Option<Interval>;
    type TableOp = fn(&Quiver, IvId, IvId) -> Option<IvId>;
    let ops: [(&str, FreeOp, BruteOp, TableOp); 4] = [
        ("osum", quiver::osum, brute_osum, Quiver::osum),
        ("odiff", quiver::odiff, brute_odiff, Quiver::odiff),
        ("strict_union", quiver::strict_union, brute_union, Quiver::strict_union),
        ("strict_intersection", quiver::strict_intersection, brute_intersection, Quiver::strict_intersection),
    ];
    for a in q.ids() {
        for b in q.ids() {
            let (ia, ib) = (q.interval(a), q.interval(b));
            let (ca, cb) = (cells(g, ia), cells(g, ib));
            for (name, free, brute, table) in ops {
                let expected = brute(g, &ca, &cb);
                let got = free(ia, ib);
                let tabled = table(q, a, b).map(|id| q.interval(id).clone());
                if got != expected || tabled != expected {
                    let show = |x: &Option<Interval>| x.as_ref().map_or("undefined".to_string(), |i| i.to_string());
                    return Some(format!("{name}({ia}, {ib}): computed {}, table {}, brute force {}", show(&got), show(&tabled), show(&expected)));
                }
            }
        }
    }
    None
}

/// `⟨d, e⟩ = Σ_k d_k e_k − Σ_k d_k e_{k+1}` for arrows `k → k+1`.
fn a_n_euler(variant: EulerVariant, d: &Cells, e: &Cells) -> i64 {
    let diag = d.intersection(e).count() as i64;
    let arrows = match variant {
        EulerVariant::Equioriented => d.iter().filter(|k| e.contains(&(*k + 1))).count(),
        EulerVariant::Opposite => e.iter().filter(|k| d.contains(&(*k + 1))).count(),
    } as i64;
    diag - arrows
}

fn euler_form(g: &Grid, q: &Quiver) -> Option<String> {
    for a in q.ids() {
        for b in q.ids() {
            let expected = a_n_euler(q.euler_variant(), &cells(g, q.interval(a)), &cells(g, q.interval(b)));
            if q.nonsym(a, b) != expected {
                return Some(format!("<{}, {}> = {}, quiver form gives {expected}", q.interval(a), q.interval(b), q.nonsym(a, b)));
            }
        }
    }
    None
}

fn symmetry(q: &Quiver) -> Option<String> {
    q.ids()
        .flat_map(|a| q.ids().map(move |b| (a, b)))
        .find(|&(a, b)| q.sym(a, b) != q.sym(b, a) || q.sym(a, b) != q.nonsym(a, b) + q.nonsym(b, a))
        .map(|(a, b)| format!("({}|{}) = {} but ({}|{}) = {}", q.interval(a), q.interval(b), q.sym(a, b), q.interval(b), q.interval(a), q.sym(b, a)))
}

fn self_pairing(q: &Quiver) -> Option<String> {
    q.ids().find(|&a| q.sym(a, a) != 2).map(|a| format!("({}|{}) = {}", q.interval(a), q.interval(a), q.sym(a, a)))
}

fn b_identity(q: &Quiver) -> Option<String> {
    for a in q.ids() {
        for b in q.ids() {
            if let Some(s) = q.osum(a, b) {
                let expected = q.p(a, s);
                if q.row(a, b).b != Some(expected) {
                    return Some(format!("b({}, {}) = {:?}, p({}, {}) = {expected}", q.interval(a), q.interval(b), q.row(a, b).b, q.interval(a), q.interval(s)));
                }
            }
        }
    }
    None
}

pub(super) fn quiver_audit(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for g in cfg.sub_grids() {
        let q = cfg.quiver(&g);
        let name = |what: &str| format!("quiver-audit/{}/{what}", grid_label(&g));
        out.push(check(name("partial-operations"), PARTIAL_OPS, || Ok(partial_operations(&g, &q))));
        out.push(check(name("euler-form"), EULER_FORM, || Ok(euler_form(&g, &q))));
        out.push(check(name("symmetry"), SYMMETRY, || Ok(symmetry(&q))));
        out.push(check(name("self-pairing"), SELF_PAIRING, || Ok(self_pairing(&q))));
        out.push(check(name("b-identity"), B_IDENTITY, || Ok(b_identity(&q))));
    }
    out
}

pub(super) fn jacobi(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for g in cfg.sub_grids() {
        let lie = LieBialgebra::new(cfg.quiver(&g));
        let name = |what: &str| format!("jacobi/{}/{what}", grid_label(&g));
        type Defects = fn(&LieBialgebra) -> Vec<String>;
        let items: [(&str, &str, Defects); 5] = [
            ("antisymmetry", "the bracket of g_X is antisymmetric on generator pairs", LieBialgebra::antisymmetry_defects),
            ("jacobi-identity", "Σ_cyclic [a,[b,c]] = 0 on every generator triple", LieBialgebra::jacobi_defects),
            ("co-jacobi", "the cobracket satisfies co-Jacobi on every generator", LieBialgebra::co_jacobi_defects),
            ("cocycle", "δ([a,b]) = a·δ(b) − b·δ(a) on every generator pair", LieBialgebra::cocycle_defects),
            ("cartan-additivity", "ξ_{α⊕β} = ξ_α + ξ_β whenever α⊕β is defined", LieBialgebra::additivity_defects),
        ];
        for (what, anchor, f) in items {
            out.push(check(name(what), anchor, || Ok(first_defect(&f(&lie)))));
        }
    }
    out
}
