//! Exact symbolic engine for the continuous quantum group of a discretized
//! continuum quiver.
//!
//! * [`quiver`]: intervals over a rational grid, partial operations, Euler
//!   forms and the relation coefficients.
//! * [`coeffring`]: exact scalars (Laurent polynomials in `q`, truncated
//!   series in `h`).
//! * [`ncalg`]: presentations, PBW rewriting, tensor expressions.
//! * [`hopf`]: coproduct, counit, antipode, iterated coproducts, pairing.
//! * [`classical`]: the Lie bialgebra and semiclassical limits.
//! * [`qdp`]: Drinfeld functors and duality checks.

pub mod classical;
pub mod coeffring;
pub mod ncalg;
pub mod error;
pub mod hopf;
pub mod qdp;
pub mod quiver;
pub mod sample;

pub use error::{Error, Result};
