//! Acceptance suite: runs every acceptance criterion through the suite
//! runner and prints one pass/fail line per criterion.  The test fails when
//! any criterion fails.

use cqg_cli::{run_suite, CheckRecord, Report, RunConfig, Status};
use cqg_core::quiver::Grid;

struct Criterion {
    number: usize,
    description: &'static str,
    suites: &'static [&'static str],
    config: fn(&mut RunConfig),
    /// Which checks of the selected suites belong to the criterion.
    selects: fn(&CheckRecord) -> bool,
}

fn grid(text: &str) -> Grid {
    Grid::parse_list(text).expect("valid grid")
}

fn all(_: &CheckRecord) -> bool {
    true
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            description: "quiver audit on grids with ≤ 4 breakpoints: partial operations match brute force, (α|β) symmetric, (α|α) = 2, b_{αβ} = p_{α,α⊕β}",
            suites: &["quiver-audit"],
            config: |c| c.grid = grid("0,1,2,3"),
            selects: all,
        },
        Criterion {
            number: 2,
            description: "classical Lie bialgebra on grids with ≤ 4 breakpoints: Jacobi, co-Jacobi, cocycle and ξ-additivity hold exactly",
            suites: &["jacobi"],
            config: |c| c.grid = grid("0,1,2,3"),
            selects: all,
        },
        Criterion {
            number: 3,
            description: "rewriting: strategy-independent normal forms on 200 inputs per presentation, termination, triangular shape, associativity on 100 triples",
            suites: &["confluence"],
            config: |c| {
                c.samples = 200;
                c.triples = 100;
            },
            selects: all,
        },
        Criterion {
            number: 4,
            description: "Hopf axioms: coassociativity, counit and antipode laws on generators and sampled degree-≤3 elements (formal presentations mod h^8); Δ is multiplicative on 100 random pairs",
            suites: &["hopf-axioms"],
            config: |c| {
                c.truncation = 8;
                c.pairs = 100;
            },
            selects: all,
        },
        Criterion {
            number: 5,
            description: "Hopf pairing on grids with ≤ 3 breakpoints: (1|1) = 1, (Ξ_α|Ξ_β) = (α|β)/h, (X+_α|X-_β) = δ_{αβ}/(q - q^-1), and (K_α|K_β) = q^{(α|β)} to order h^8",
            suites: &["pairing"],
            config: |c| c.truncation = 8,
            selects: |r| !r.name.ends_with("doubled-cartan-value"),
        },
        Criterion {
            number: 6,
            description: "membership in U′: rescaled generators pass to depth 4, unrescaled generators fail at n = 1, the K^-1 telescoping certificate holds for N ≤ 4",
            suites: &["qdp-membership"],
            config: |c| {
                c.depth = 4;
                c.truncation = 8;
            },
            selects: all,
        },
        Criterion {
            number: 7,
            description: "semiclassical limit of Ũ: commutative modulo t on generator pairs; first-order brackets and cobrackets reproduce the Lie bialgebra g_X",
            suites: &["commutativity", "semiclassical-match"],
            config: |_| {},
            selects: |r| r.name.starts_with("commutativity/") || r.name.contains("/bracket-") || r.name.contains("/cobracket-"),
        },
        Criterion {
            number: 8,
            description: "dual group shape: degree-≤3 monomials of the q = 1 coordinate ring are free; the X+K, Cartan and KX- sub-coordinate rings are coproduct-closed",
            suites: &["dual-shape"],
            config: |c| c.degree = 3,
            selects: all,
        },
        Criterion {
            number: 9,
            description: "specialization at q = 1: every defining relation of Uq maps to 0 in U(g_X) under K ↦ 1, H ↦ ξ, X± ↦ 2x±",
            suites: &["semiclassical-match"],
            config: |_| {},
            selects: |r| r.name.contains("/specialization-"),
        },
    ]
}

fn run(c: &Criterion) -> Report {
    let mut cfg = RunConfig { suites: c.suites.iter().map(|s| s.to_string()).collect(), ..RunConfig::default() };
    (c.config)(&mut cfg);
    run_suite(&cfg).unwrap_or_else(|e| panic!("criterion {}: configuration rejected: {e}", c.number))
}

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for c in criteria() {
        let report = run(&c);
        let checks: Vec<&CheckRecord> = report.checks.iter().filter(|r| (c.selects)(r)).collect();
        let failure = checks.iter().find(|r| r.status != Status::Pass);
        let line = match (checks.is_empty(), failure) {
            (true, _) => format!("criterion {}: FAIL — {} (no checks ran)", c.number, c.description),
            (false, None) => format!("criterion {}: PASS — {} ({} checks)", c.number, c.description, checks.len()),
            (false, Some(f)) => format!(
                "criterion {}: FAIL — {} (first failing check {}: {})",
                c.number,
                c.description,
                f.name,
                f.witness.as_deref().unwrap_or("no witness")
            ),
        };
        println!("{line}");
        if checks.is_empty() || failure.is_some() {
            failed.push(c.number);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
