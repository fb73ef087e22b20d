//! Run configuration: the JSON document, flag overrides and validation.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use cqg_core::classical::LieBialgebra;
use cqg_core::ncalg::{AlgebraSpec, AnyAlgebra, Presentation, DEFAULT_FUEL};
use cqg_core::quiver::{EulerVariant, Grid, IntervalOrder, Quiver, SerreVariant};
use cqg_core::Error;

use crate::error::{CliError, Result};

/// The verification suites, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    QuiverAudit,
    Confluence,
    HopfAxioms,
    Jacobi,
    Pairing,
    QdpMembership,
    Commutativity,
    DualShape,
    SemiclassicalMatch,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::QuiverAudit,
        Suite::Confluence,
        Suite::HopfAxioms,
        Suite::Jacobi,
        Suite::Pairing,
        Suite::QdpMembership,
        Suite::Commutativity,
        Suite::DualShape,
        Suite::SemiclassicalMatch,
    ];

    /// Identifier used in configurations and check names.
    pub fn name(self) -> &'static str {
        match self {
            Suite::QuiverAudit => "quiver-audit",
            Suite::Confluence => "confluence",
            Suite::HopfAxioms => "hopf-axioms",
            Suite::Jacobi => "jacobi",
            Suite::Pairing => "pairing",
            Suite::QdpMembership => "qdp-membership",
            Suite::Commutativity => "commutativity",
            Suite::DualShape => "dual-shape",
            Suite::SemiclassicalMatch => "semiclassical-match",
        }
    }

    pub fn parse(name: &str) -> cqg_core::Result<Self> {
        Suite::ALL.into_iter().find(|s| s.name() == name.trim()).ok_or_else(|| {
            let known = Suite::ALL.map(|s| s.name()).join(", ");
            Error::Config(format!("unknown suite `{name}` (known suites: {known})"))
        })
    }
}

/// Everything a run needs.  Missing fields take their defaults; unknown
/// fields are rejected.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Breakpoints of the largest grid.  Suites that sweep grids run on every
    /// prefix with at least two breakpoints.
    pub grid: Grid,
    /// Restricts the suites that sweep presentations to this one; also the
    /// presentation of `elements` and of the one-shot subcommands (default
    /// `Uq` there).
    pub presentation: Option<Presentation>,
    pub euler: EulerVariant,
    pub serre: SerreVariant,
    pub interval_order: IntervalOrder,
    /// Series truncation order `N` of the formal presentations.
    pub truncation: usize,
    /// Depth of the `δ_n` membership tests.
    pub depth: usize,
    /// Rewrite budget per normalization request.
    pub fuel: usize,
    /// Suites to run (all when empty).
    pub suites: Vec<String>,
    /// Extra elements tested by the `qdp-membership` suite.
    pub elements: Vec<String>,
    /// Random inputs per presentation in the `confluence` suite.
    pub samples: usize,
    /// Random associativity triples per presentation.
    pub triples: usize,
    /// Random pairs of the Δ-morphism audit per presentation and grid.
    pub pairs: usize,
    /// Random degree-≤3 elements (besides generators) checked for
    /// coassociativity and the counit law.
    pub hopf_samples: usize,
    /// How many of those samples are also checked against the antipode law.
    pub antipode_samples: usize,
    /// Maximal monomial degree of the `dual-shape` suite.
    pub degree: usize,
    /// Seed of every random sample.
    pub seed: u64,
    /// Where the JSON report is written (standard output when absent).
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            grid: Grid::integers(3).expect("the default grid is valid"),
            presentation: None,
            euler: EulerVariant::default(),
            serre: SerreVariant::default(),
            interval_order: IntervalOrder::default(),
            truncation: 8,
            depth: 4,
            fuel: DEFAULT_FUEL,
            suites: Vec::new(),
            elements: Vec::new(),
            samples: 200,
            triples: 100,
            pairs: 100,
            hopf_samples: 50,
            antipode_samples: 10,
            degree: 3,
            seed: 1,
            out: None,
        }
    }
}

/// Command-line overrides of configuration fields.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub grid: Option<String>,
    pub presentation: Option<String>,
    pub suites: Vec<String>,
    pub depth: Option<usize>,
    pub truncation: Option<usize>,
    pub out: Option<PathBuf>,
    pub expr: Option<String>,
}

impl RunConfig {
    /// Reads a configuration document.
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Reads the configuration file, or the defaults when no path is given.
    pub fn load(path: Option<&Path>) -> Result<Self> {
        match path {
            None => Ok(RunConfig::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|source| CliError::Io { path: p.display().to_string(), source })?;
                RunConfig::from_json(&text)
            }
        }
    }

    /// Applies flag overrides; `--expr` adds an element to `elements`.
    pub fn apply(&mut self, o: &Overrides) -> Result<()> {
        if let Some(g) = &o.grid {
            self.grid = Grid::parse_list(g)?;
        }
        if let Some(p) = &o.presentation {
            self.presentation = Some(p.parse()?);
        }
        if !o.suites.is_empty() {
            self.suites = o.suites.clone();
        }
        if let Some(d) = o.depth {
            self.depth = d;
        }
        if let Some(n) = o.truncation {
            self.truncation = n;
        }
        if let Some(out) = &o.out {
            self.out = Some(out.clone());
        }
        if let Some(e) = &o.expr {
            self.elements.push(e.clone());
        }
        Ok(())
    }

    /// The algebra specification of a presentation on a grid under this
    /// configuration's conventions.
    pub fn spec(&self, presentation: Presentation, grid: &Grid) -> AlgebraSpec {
        let mut spec = AlgebraSpec::new(presentation, grid.clone())
            .with_truncation(self.truncation)
            .with_order(self.interval_order)
            .with_serre(self.serre)
            .with_fuel(self.fuel);
        spec.euler = self.euler;
        spec
    }

    /// The quiver tables of a grid under this configuration's conventions.
    pub fn quiver(&self, grid: &Grid) -> Arc<Quiver> {
        Arc::new(Quiver::new(grid.clone(), self.euler, self.serre, self.interval_order))
    }

    /// Every prefix of the grid with at least two breakpoints.
    pub fn sub_grids(&self) -> Vec<Grid> {
        let pts = self.grid.breakpoints();
        (2..=pts.len()).map(|k| Grid::new(pts[..k].to_vec()).expect("a prefix of a valid grid is valid")).collect()
    }

    /// The presentations swept by suites that run on several of them.
    pub fn presentations(&self, candidates: &[Presentation]) -> Vec<Presentation> {
        match self.presentation {
            Some(p) if candidates.contains(&p) => vec![p],
            Some(_) => Vec::new(),
            None => candidates.to_vec(),
        }
    }

    /// Presentation of `elements` and of the one-shot subcommands.
    pub fn element_presentation(&self) -> Presentation {
        self.presentation.unwrap_or(Presentation::Uq)
    }

    /// Checks the configuration and returns the selected suites in canonical
    /// order.  Nothing is executed when this fails.
    pub fn validate(&self) -> Result<Vec<Suite>> {
        let mut suites = if self.suites.is_empty() {
            Suite::ALL.to_vec()
        } else {
            self.suites.iter().map(|s| Suite::parse(s)).collect::<cqg_core::Result<Vec<_>>>()?
        };
        suites.sort();
        suites.dedup();
        let bad = |m: String| -> Result<Vec<Suite>> { Err(Error::Config(m).into()) };
        if self.fuel == 0 {
            return bad("rewrite fuel must be positive".into());
        }
        if self.depth == 0 {
            return bad("the δ_n depth must be positive".into());
        }
        if self.degree == 0 {
            return bad("the dual-shape degree must be positive".into());
        }
        if self.truncation <= self.depth {
            return bad(format!("series truncation {} must exceed the δ_n depth {} for h-adic runs", self.truncation, self.depth));
        }
        if !self.elements.is_empty() {
            let p = self.element_presentation();
            if !matches!(p, Presentation::Uq | Presentation::UhTrunc) {
                return bad(format!("membership elements need presentation Uq or UhTrunc, not {p}"));
            }
            let alg = self.spec(p, &self.grid).build()?;
            for e in &self.elements {
                match &alg {
                    AnyAlgebra::Poly(a) => a.parse(e).map(drop)?,
                    AnyAlgebra::Formal(a) => a.parse(e).map(drop)?,
                }
            }
        }
        if self.euler != EulerVariant::default() {
            self.audit_euler_variant()?;
        }
        Ok(suites)
    }

    /// A non-default Euler form is accepted only if the classical Lie
    /// bialgebra it defines passes the Jacobi, co-Jacobi and cocycle checks.
    fn audit_euler_variant(&self) -> Result<()> {
        let lie = LieBialgebra::new(self.quiver(&self.grid));
        let defects: Vec<String> = [lie.jacobi_defects(), lie.co_jacobi_defects(), lie.cocycle_defects()].concat();
        if let Some(first) = defects.first() {
            return Err(Error::Config(format!(
                "Euler-form variant `{}` fails the convention audit ({} defects, first: {first})",
                self.euler.name(),
                defects.len()
            ))
            .into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip_through_json() {
        let c = RunConfig::default();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(RunConfig::from_json(&text).unwrap(), c);
        assert_eq!(RunConfig::from_json("{}").unwrap(), c);
    }

    #[test]
    fn unknown_fields_and_suites_are_rejected() {
        assert!(RunConfig::from_json(r#"{"gird": ["0","1"]}"#).is_err());
        let c = RunConfig { suites: vec!["hopf-axioms".into(), "nope".into()], ..RunConfig::default() };
        let e = c.validate().unwrap_err();
        assert!(e.is_config() && e.to_string().contains("unknown suite `nope`"), "{e}");
    }

    #[test]
    fn overrides_take_precedence() {
        let mut c = RunConfig::from_json(r#"{"grid": ["0","1"], "depth": 2, "suites": ["jacobi"]}"#).unwrap();
        let o = Overrides {
            grid: Some("0,1/2,1".into()),
            presentation: Some("uqtilde".into()),
            suites: vec!["pairing".into()],
            depth: Some(3),
            expr: Some("H[0,1/2)".into()),
            ..Overrides::default()
        };
        c.apply(&o).unwrap();
        assert_eq!(c.grid.to_strings(), vec!["0", "1/2", "1"]);
        assert_eq!(c.presentation, Some(Presentation::UqTilde));
        assert_eq!((c.depth, c.suites.clone(), c.elements.clone()), (3, vec!["pairing".to_string()], vec!["H[0,1/2)".to_string()]));
    }

    #[test]
    fn validation_rules() {
        let c = RunConfig { depth: 8, ..RunConfig::default() };
        assert!(c.validate().unwrap_err().to_string().contains("must exceed"));
        let c = RunConfig { elements: vec!["X+[0,5)".into()], ..RunConfig::default() };
        assert!(matches!(c.validate(), Err(CliError::Core(Error::OffGrid(_)))));
        let c = RunConfig { elements: vec!["H[0,1)".into()], presentation: Some(Presentation::UqTilde), ..RunConfig::default() };
        assert!(c.validate().is_err());
        let c = RunConfig { suites: vec!["pairing".into(), "jacobi".into(), "pairing".into()], ..RunConfig::default() };
        assert_eq!(c.validate().unwrap(), vec![Suite::Jacobi, Suite::Pairing]);
        assert_eq!(RunConfig::default().sub_grids().len(), 2);
    }
}
