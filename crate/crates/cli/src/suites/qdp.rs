//! `qdp-membership`, `commutativity` and `dual-shape`: the Drinfeld functors
//! on the integral forms.

use cqg_core::ncalg::{AnyAlgebra, Presentation};
use cqg_core::qdp::{commutativity_check, dual_group_shape_check, kminus_membership_certificate, membership, MembershipReport};

use super::{grid_label, with_algebra};
use crate::config::RunConfig;
use crate::report::{check, CheckRecord};

const POSITIVE: &str = "rescaled generators lie in U′: δ_n(e) ∈ t^n U^{⊗n} for every n up to the depth";
const NEGATIVE: &str = "unrescaled generators are not in U′: δ_1(e) is not divisible by t";
const ELEMENT: &str = "the element lies in U′ up to the depth";
const CERTIFICATE: &str =
    "K^{-1} = Σ_{n<N} (-1)^n H̄^n + (-1)^N H̄^N K^{-1} holds in Ũ for N up to the depth, and K^{-1} passes membership in U′ to depth N";
const COMMUTES: &str = "the rescaled integral form Ũ is commutative modulo t on every generator pair";
const COUNT: &str = "monomials of degree ≤ d of the q = 1 coordinate ring are independent: their number is the free commutative count";
const CLOSED: &str = "the X+K, Cartan and KX- sub-coordinate rings are closed under the coproduct";

/// Text of the first failing verdict of a membership report.
fn membership_witness(r: &MembershipReport) -> Option<String> {
    let v = r.verdicts.iter().find(|v| !v.divisible)?;
    Some(match &v.witness {
        Some(w) => format!("n={}: coefficient {} of {} is not divisible by t^{}", v.n, w.coefficient, w.word, v.n),
        None => format!("n={}: not divisible", v.n),
    })
}

pub(super) fn membership_suite(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let g = &cfg.grid;
    let label = grid_label(g);
    let depth = cfg.depth;
    for p in [Presentation::Uq, Presentation::UhTrunc] {
        let alg = match cfg.spec(p, g).build() {
            Ok(a) => a,
            Err(e) => {
                out.push(check(format!("qdp-membership/{p}/{label}/build"), "the presentation can be built", || Err(e)));
                continue;
            }
        };
        let q = cfg.quiver(g);
        let (positive, negative): (Vec<String>, Vec<String>) = {
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for id in q.ids() {
                let iv = q.interval(id);
                match p {
                    Presentation::Uq => {
                        pos.extend([format!("(q-1)*H{iv}"), format!("(q-1)*X+{iv}"), format!("(q-1)*X-{iv}"), format!("K{iv}"), format!("K^-1{iv}")]);
                        neg.extend([format!("H{iv}"), format!("X+{iv}"), format!("X-{iv}")]);
                    }
                    _ => {
                        pos.extend([format!("h*Xi{iv}"), format!("(q-q^-1)*X+{iv}"), format!("(q-q^-1)*X-{iv}")]);
                        neg.extend([format!("Xi{iv}"), format!("X+{iv}"), format!("X-{iv}")]);
                    }
                }
            }
            (pos, neg)
        };
        with_algebra!(&alg, a => {
            for text in &positive {
                out.push(check(format!("qdp-membership/{p}/{label}/positive/{text}"), POSITIVE, || {
                    let r = membership(a, &a.parse(text)?, depth)?;
                    Ok(membership_witness(&r))
                }));
            }
            for text in &negative {
                out.push(check(format!("qdp-membership/{p}/{label}/negative/{text}"), NEGATIVE, || {
                    let r = membership(a, &a.parse(text)?, 1)?;
                    Ok(match r.first_failure() {
                        Some(1) if r.verdicts[0].witness.is_some() => None,
                        _ => Some(format!("{text} passes δ_1, expected a non-divisible coefficient")),
                    })
                }));
            }
            if p == cfg.element_presentation() {
                for text in &cfg.elements {
                    out.push(check(format!("qdp-membership/{p}/{label}/element/{text}"), ELEMENT, || {
                        let r = membership(a, &a.parse(text)?, depth)?;
                        Ok(membership_witness(&r))
                    }));
                }
            }
        });
    }
    out.extend(certificates(cfg));
    out
}

fn certificates(cfg: &RunConfig) -> Vec<CheckRecord> {
    let g = &cfg.grid;
    let label = grid_label(g);
    let built = (cfg.spec(Presentation::UqTilde, g).build(), cfg.spec(Presentation::Uq, g).build());
    let (tilde, uq) = match built {
        (Ok(AnyAlgebra::Poly(t)), Ok(AnyAlgebra::Poly(u))) => (t, u),
        (Err(e), _) | (_, Err(e)) => return vec![check(format!("qdp-membership/UqTilde/{label}/build"), "the presentation can be built", || Err(e))],
        _ => unreachable!("UqTilde and Uq are polynomial"),
    };
    let q = uq.quiver();
    q.ids()
        .map(|id| {
            check(format!("qdp-membership/UqTilde/{label}/kinverse-certificate/{}", q.interval(id)), CERTIFICATE, || {
                for n in 1..=cfg.depth {
                    let c = kminus_membership_certificate(&tilde, &uq, id, n)?;
                    if !c.identity_holds {
                        return Ok(Some(format!("N={n}: telescoping identity fails")));
                    }
                    if !c.membership.pass {
                        return Ok(Some(format!("N={n}: {}", membership_witness(&c.membership).unwrap_or_default())));
                    }
                }
                Ok(None)
            })
        })
        .collect()
}

pub(super) fn commutativity(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for g in cfg.sub_grids() {
        for p in [Presentation::UqTilde, Presentation::UhTildeTrunc] {
            let name = format!("commutativity/{p}/{}/generator-pairs", grid_label(&g));
            let alg = cfg.spec(p, &g).build();
            out.push(check(name, COMMUTES, || {
                let alg = alg?;
                let r = with_algebra!(&alg, a => commutativity_check(a)?);
                if r.pass {
                    return Ok(None);
                }
                let all: Vec<&String> = r.failures.iter().chain(&r.unimposed_failures).collect();
                Ok(Some(format!(
                    "{} generator commutators not divisible by t, e.g. {}{}",
                    all.len(),
                    all[0],
                    if r.unimposed_failures.is_empty() { "" } else { " (pairs without an ordering relation)" }
                )))
            }));
        }
    }
    out
}

pub(super) fn dual_shape(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for g in cfg.sub_grids() {
        let label = grid_label(&g);
        let report = match cfg.spec(Presentation::UqTilde, &g).build() {
            Ok(AnyAlgebra::Poly(a)) => dual_group_shape_check(&a, cfg.degree),
            Ok(AnyAlgebra::Formal(_)) => unreachable!("UqTilde is polynomial"),
            Err(e) => Err(e),
        };
        out.push(check(format!("dual-shape/{label}/monomial-count"), COUNT, || {
            let r = report.clone()?;
            Ok(if !r.mismatches.is_empty() {
                Some(format!("{} mismatches, first: {}", r.mismatches.len(), r.mismatches[0]))
            } else if r.distinct_monomials != r.free_count {
                Some(format!("{} distinct monomials, free count {}", r.distinct_monomials, r.free_count))
            } else {
                None
            })
        }));
        out.push(check(format!("dual-shape/{label}/sub-coordinate-rings"), CLOSED, || {
            let r = report.clone()?;
            let open: Vec<&str> = [(r.plus_cartan_closed, "X+K"), (r.cartan_closed, "Cartan"), (r.cartan_minus_closed, "KX-")]
                .into_iter()
                .filter(|(closed, _)| !closed)
                .map(|(_, n)| n)
                .collect();
            Ok((!open.is_empty()).then(|| format!("not coproduct-closed: {}", open.join(", "))))
        }));
    }
    out
}
