//! Logarithmic coefficients of univalent function classes.
//!
//! The crate is organized bottom-up:
//!
//! * [`series`]: truncated power series over exact rationals or complex doubles.
//! * [`classes`]: class specifications, Schwarz functions and member construction.
//! * [`logcoeff`]: logarithmic and pre-Schwarzian coefficients, recurrence cross-checks
//!   and weighted energies.
//! * [`bounds`]: closed-form coefficient and energy bounds, the dilogarithm and the
//!   Prokhorov–Szynal functional.
//! * [`explorer`]: seeded sampling and optimization over Schur parameters.
//! * [`cli`]: the `logcoeff` command-line front end.

pub mod bounds;
pub mod classes;
pub mod cli;
pub mod coeff;
pub mod error;
pub mod explorer;
pub mod logcoeff;
pub mod par;
pub mod param;
pub mod series;

pub use classes::{ClassKind, ClassSpec, SchwarzFn};
pub use coeff::{Backend, Coeff, Exact, Exponent, Float};
pub use error::{Error, Result};
pub use logcoeff::{BetaDelta, GammaVector, Weight};
pub use param::Param;
pub use series::Series;
