//! Noncommutative expressions, the relation systems of the presentations, and
//! rewriting to PBW normal form `X+ block · Cartan block · X- block`.
//!
//! * [`Algebra`] owns a presentation on a quiver and a memoized normal-form
//!   engine (the production path).
//! * [`step`] is an independent small-step rewriter with selectable strategy,
//!   used for confluence and termination diagnostics.
//! * [`relations`] lists the defining relations as free-algebra identities.
//! * [`parse`] and [`display`] convert between text and expressions.

mod algebra;
pub mod display;
mod expr;
pub mod parse;
pub mod relations;
pub mod step;
mod word;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use algebra::{clean, kappa, tensor_extend, tensor_of, Algebra, DEFAULT_FUEL};
pub use expr::{Expr, Lin, RawExpr, TExpr};
pub use word::{CMono, Gen, Letter, RawWord, Word};

use crate::coeffring::{LocalLaurent, SeriesH};
use crate::error::{Error, Result};
use crate::quiver::{EulerVariant, Grid, IntervalOrder, Quiver, SerreVariant};

/// Default series truncation order.
pub const DEFAULT_ORDER: usize = 8;

/// The presentations of the quantum group of a quiver.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Presentation {
    /// Polynomial form over `Z[q, q^-1]` with generators `K^{±1}`, `H`, `X±`.
    Uq,
    /// Its rescaled subalgebra with generators `K̄^{-1}`, `H̄`, `X̄±`.
    UqTilde,
    /// Formal form over `Q[[h]]` with generators `Ξ`, `X±`, truncated at `h^N`.
    UhTrunc,
    /// Its rescaled subalgebra with generators `Ξ̄`, `X̄±`.
    UhTildeTrunc,
    /// Classical enveloping algebra with generators `ξ`, `x±`.
    ClassicalU,
}

/// How Cartan elements are stored in words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CartanModel {
    /// Monomials in group-likes `K_c^{±1}` over the cells.
    Exponential,
    /// Polynomials in `Ξ_c` over the cells.
    Polynomial,
}

/// Sign of a root vector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Presentation {
    pub const ALL: [Presentation; 5] =
        [Presentation::Uq, Presentation::UqTilde, Presentation::UhTrunc, Presentation::UhTildeTrunc, Presentation::ClassicalU];

    pub fn name(&self) -> &'static str {
        match self {
            Presentation::Uq => "Uq",
            Presentation::UqTilde => "UqTilde",
            Presentation::UhTrunc => "UhTrunc",
            Presentation::UhTildeTrunc => "UhTildeTrunc",
            Presentation::ClassicalU => "ClassicalU",
        }
    }

    pub fn model(&self) -> CartanModel {
        match self {
            Presentation::Uq | Presentation::UqTilde => CartanModel::Exponential,
            _ => CartanModel::Polynomial,
        }
    }

    /// Whether coefficients live in `Z[q, q^-1]` (localized at `q - 1`).
    pub fn is_polynomial(&self) -> bool {
        self.model() == CartanModel::Exponential
    }

    /// Generator kinds accepted in user input.
    pub fn allows(&self, g: &Gen) -> bool {
        match self {
            Presentation::Uq | Presentation::UqTilde => !matches!(g, Gen::Xi(_)),
            _ => matches!(g, Gen::Xp(_) | Gen::Xm(_) | Gen::Xi(_)),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Presentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Presentation::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Config(format!("unknown presentation {s:?}")))
    }
}

/// A presentation together with all conventions needed to build it.
#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    pub presentation: Presentation,
    pub grid: Grid,
    pub euler: EulerVariant,
    pub serre: SerreVariant,
    pub order: IntervalOrder,
    /// Series truncation order `N`.
    pub truncation: usize,
    /// Rewrite budget per normalization request.
    pub fuel: usize,
}

impl AlgebraSpec {
    /// Default conventions on the given grid.
    pub fn new(presentation: Presentation, grid: Grid) -> Self {
        AlgebraSpec {
            presentation,
            grid,
            euler: EulerVariant::Equioriented,
            serre: SerreVariant::default(),
            order: IntervalOrder::Lex,
            truncation: DEFAULT_ORDER,
            fuel: DEFAULT_FUEL,
        }
    }

    pub fn with_truncation(mut self, n: usize) -> Self {
        self.truncation = n;
        self
    }

    pub fn with_order(mut self, order: IntervalOrder) -> Self {
        self.order = order;
        self
    }

    pub fn with_serre(mut self, serre: SerreVariant) -> Self {
        self.serre = serre;
        self
    }

    pub fn with_fuel(mut self, fuel: usize) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn quiver(&self) -> Result<Arc<Quiver>> {
        Ok(Arc::new(Quiver::new(self.grid.clone(), self.euler, self.serre, self.order)))
    }

    /// Builds the algebra with its natural coefficient ring.
    pub fn build(&self) -> Result<AnyAlgebra> {
        if self.fuel == 0 {
            return Err(Error::Config("rewrite fuel must be positive".into()));
        }
        if self.truncation == 0 {
            return Err(Error::Config("truncation order must be positive".into()));
        }
        let q = self.quiver()?;
        Ok(match self.presentation.model() {
            CartanModel::Exponential => AnyAlgebra::Poly(Algebra::new(self.presentation, q, (), self.truncation, self.fuel)?),
            CartanModel::Polynomial => {
                let n = if self.presentation == Presentation::ClassicalU { 1 } else { self.truncation };
                AnyAlgebra::Formal(Algebra::new(self.presentation, q, n, self.truncation, self.fuel)?)
            }
        })
    }
}

/// An algebra over its natural scalar ring.
#[derive(Debug)]
pub enum AnyAlgebra {
    /// `Uq`, `UqTilde` over `Z[q, q^-1, (q-1)^-1]`.
    Poly(Algebra<LocalLaurent>),
    /// `UhTrunc`, `UhTildeTrunc`, `ClassicalU` over `Q[[h]]/(h^N)`.
    Formal(Algebra<SeriesH>),
}

impl AnyAlgebra {
    pub fn presentation(&self) -> Presentation {
        match self {
            AnyAlgebra::Poly(a) => a.presentation(),
            AnyAlgebra::Formal(a) => a.presentation(),
        }
    }
}
