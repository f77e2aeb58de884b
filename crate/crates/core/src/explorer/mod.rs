//! Seeded sampling and optimization over Schwarz functions.
//!
//! Every report carries a [`ReportHeader`] naming the seed, backend and
//! budget, and every run is reproducible from it regardless of worker count.

mod conjecture;
mod optimize;
mod ps_oracle;
pub mod sample;
mod search;
mod verify;

use serde::Serialize;

use crate::classes::ClassSpec;
use crate::Backend;

pub use conjecture::{
    conjecture_report, f3_truncated_energy, Conjecture, ConjectureEntry, ConjectureReport, CONJECTURE_LABEL,
    DEFAULT_BUDGET, G_GRID,
};
pub use optimize::{maximize, Incumbent, OptResult, Point};
pub use ps_oracle::{ps_functional, ps_oracle, PsOracleResult};
pub use search::{gamma_modulus, search_extremal, SearchResult};
pub use verify::{
    verify_bounds, verify_members, write_report_csv, BoundReport, CheckKind, CheckResult, Skipped, VerifyConfig,
    Violation, ENERGY_TRUNCATION, FLOAT_TOL,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportHeader {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<ClassSpec>,
    pub seed: u64,
    pub backend: Backend,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energy_truncation: Option<usize>,
}
