//! The verification suites and their orchestration.
//!
//! Each suite turns a validated [`RunConfig`] into check records.  Suites
//! run on separate threads; the report is assembled by the caller alone and
//! sorted by check name, so the thread schedule never shows in the output.

mod pairing;
mod qdp;
mod rewriting;
mod semiclassical;
mod structure;

use std::thread;

use cqg_core::coeffring::Scalar;
use cqg_core::ncalg::{Algebra, CMono, CartanModel, Expr, Letter};
use cqg_core::quiver::Grid;

use crate::config::{RunConfig, Suite};
use crate::error::Result;
use crate::report::{CheckRecord, Report};

/// Runs `$body` with `$a` bound to the algebra inside an `AnyAlgebra`.
macro_rules! with_algebra {
    ($any:expr, $a:ident => $body:expr) => {
        match $any {
            cqg_core::ncalg::AnyAlgebra::Poly($a) => $body,
            cqg_core::ncalg::AnyAlgebra::Formal($a) => $body,
        }
    };
}
pub(crate) use with_algebra;

/// Validates the configuration, runs the selected suites and assembles the
/// report.  Configuration errors are returned before any check runs.
pub fn run_suite(cfg: &RunConfig) -> Result<Report> {
    let suites = cfg.validate()?;
    let checks = thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run_one(cfg, s))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("suite threads do not panic")).collect::<Vec<_>>()
    });
    Ok(Report::new(cfg.clone(), checks))
}

/// The check records of one suite.
pub fn run_one(cfg: &RunConfig, suite: Suite) -> Vec<CheckRecord> {
    match suite {
        Suite::QuiverAudit => structure::quiver_audit(cfg),
        Suite::Jacobi => structure::jacobi(cfg),
        Suite::Confluence => rewriting::confluence(cfg),
        Suite::HopfAxioms => rewriting::hopf_axioms(cfg),
        Suite::Pairing => pairing::pairing(cfg),
        Suite::QdpMembership => qdp::membership_suite(cfg),
        Suite::Commutativity => qdp::commutativity(cfg),
        Suite::DualShape => qdp::dual_shape(cfg),
        Suite::SemiclassicalMatch => semiclassical::semiclassical_match(cfg),
    }
}

/// `{0,1,2}`-style label of a grid.
pub(crate) fn grid_label(g: &Grid) -> String {
    format!("{{{}}}", g.to_strings().join(","))
}

/// Seed of a sample stream, derived from the run seed and a stream label.
pub(crate) fn stream_seed(seed: u64, label: &str) -> u64 {
    label.bytes().fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// The Cartan letter `K_c^e` (exponential model) or `Ξ_c^e` (polynomial model).
pub(crate) fn cartan_letter(cell: usize, e: i16) -> Letter {
    let mut m = CMono::ONE;
    m.0[cell] = e;
    Letter::C(m)
}

/// The algebra generators: root vectors of every interval, and the Cartan
/// letters of every cell (with their inverses in the exponential model).
pub(crate) fn generators<S: Scalar>(a: &Algebra<S>) -> Vec<Expr<S>> {
    let q = a.quiver();
    let mut out = Vec::new();
    for id in q.ids() {
        out.push(a.letter(Letter::P(id)));
        out.push(a.letter(Letter::M(id)));
    }
    for c in 0..q.num_cells() {
        out.push(a.letter(cartan_letter(c, 1)));
        if a.model() == CartanModel::Exponential {
            out.push(a.letter(cartan_letter(c, -1)));
        }
    }
    out
}
