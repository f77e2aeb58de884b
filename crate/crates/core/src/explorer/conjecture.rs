use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::optimize::{maximize, Point};
use super::sample::trial_rng;
use super::search::search_extremal;
use super::verify::{ENERGY_TRUNCATION, FLOAT_TOL};
use super::ReportHeader;
use crate::bounds::f3_energy_constant;
use crate::classes::{member_from_schwarz, ClassSpec, SchwarzFn};
use crate::coeff::Float;
use crate::error::{Error, Result};
use crate::logcoeff::log_coefficients;
use crate::par::{map_indexed, trial_seed, Execution};
use crate::param::Param;
use crate::Backend;

pub const CONJECTURE_LABEL: &str = "conjectural — violation would be a finding, not a bug";
pub const DEFAULT_BUDGET: usize = 20_000;
pub const G_GRID: [f64; 4] = [0.25, 0.5, 0.75, 1.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conjecture {
    #[serde(rename = "F3_pointwise")]
    F3Pointwise,
    #[serde(rename = "F3_energy")]
    F3Energy,
    #[serde(rename = "G_general")]
    GGeneral,
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjecture::F3Pointwise => "F3_pointwise",
            Conjecture::F3Energy => "F3_energy",
            Conjecture::GGeneral => "G_general",
        })
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F3_pointwise" => Ok(Conjecture::F3Pointwise),
            "F3_energy" => Ok(Conjecture::F3Energy),
            "G_general" => Ok(Conjecture::GGeneral),
            _ => Err(Error::Parse(format!(
                "unknown conjecture '{s}' (expected F3_pointwise, F3_energy or G_general)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub conjectured_bound: f64,
    pub best_found: f64,
    pub margin: f64,
    /// `best_found <= conjectured_bound + 1e-9`.
    pub consistent: bool,
    /// `best_found` within a relative 1e-6 of the bound.
    pub attained: bool,
    pub best_schur: Vec<[f64; 2]>,
    pub evaluations: usize,
    pub label: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub header: ReportHeader,
    pub conjecture: Conjecture,
    pub entries: Vec<ConjectureEntry>,
    /// Entries where the search beat the conjectured value.
    pub findings: usize,
}

fn entry(c: Option<f64>, n: Option<usize>, bound: f64, best: f64, schur: Vec<[f64; 2]>, evaluations: usize) -> ConjectureEntry {
    ConjectureEntry {
        c,
        n,
        conjectured_bound: bound,
        best_found: best,
        margin: bound - best,
        consistent: best <= bound + FLOAT_TOL,
        attained: best >= bound * (1.0 - 1e-6),
        best_schur: schur,
        evaluations,
        label: CONJECTURE_LABEL,
    }
}

/// Truncated `sum_{n<=64} |gamma_n|^2` of the `F(3)` member driven by `schur`.
pub fn f3_truncated_energy(schur: &[Float]) -> f64 {
    let order = ENERGY_TRUNCATION + 1;
    let spec = ClassSpec::f(3).expect("F(3) is valid");
    let eval = || -> Result<f64> {
        let phi = SchwarzFn::<Float>::from_schur(schur, order)?;
        let f = member_from_schwarz(&spec, &phi, order)?;
        let g = log_coefficients(&f, ENERGY_TRUNCATION)?;
        Ok(g.values().iter().map(|z| z.norm_sqr()).sum())
    };
    eval().unwrap_or(f64::NEG_INFINITY)
}

/// Probes one conjecture by optimization within `budget` evaluations per entry.
pub fn conjecture_report(which: Conjecture, budget: usize, seed: u64, exec: Execution) -> Result<ConjectureReport> {
    if budget == 0 {
        return Err(Error::InvalidSpec("explore needs a budget of at least 1".into()));
    }
    let entries: Vec<ConjectureEntry> = match which {
        Conjecture::F3Pointwise => {
            let spec = ClassSpec::f(3)?;
            map_indexed(8, exec, |i| {
                let n = i + 1;
                let r = search_extremal(&spec, n, budget, trial_seed(seed, i as u64)).expect("valid search");
                let bound = (1.0 - 0.5f64.powi(n as i32 + 1)) / n as f64;
                entry(None, Some(n), bound, r.best_value, r.best_schur, r.budget_used)
            })
        }
        Conjecture::GGeneral => {
            let cells: Vec<(f64, usize)> = G_GRID.iter().flat_map(|&c| (1..=6).map(move |n| (c, n))).collect();
            map_indexed(cells.len(), exec, |i| {
                let (c, n) = cells[i];
                let spec = ClassSpec::g(Param::from_f64(c)).expect("grid values are valid");
                let r = search_extremal(&spec, n, budget, trial_seed(seed, i as u64)).expect("valid search");
                let bound = c / (2.0 * n as f64 * (n as f64 + 1.0));
                entry(Some(c), Some(n), bound, r.best_value, r.best_schur, r.budget_used)
            })
        }
        Conjecture::F3Energy => {
            let mut rng = trial_rng(seed, 0);
            let r = maximize(super::sample::DEFAULT_DEPTH, false, budget, &[], &mut rng, |p: &Point| {
                f3_truncated_energy(&p.schur)
            });
            vec![entry(
                Some(3.0),
                None,
                f3_energy_constant(),
                r.value,
                r.best.schur.iter().map(|z| [z.re, z.im]).collect(),
                r.evaluations,
            )]
        }
    };
    let findings = entries.iter().filter(|e| !e.consistent).count();
    Ok(ConjectureReport {
        header: ReportHeader {
            command: "explore".into(),
            spec: None,
            seed,
            backend: Backend::Float,
            samples: None,
            budget: Some(budget),
            n: None,
            depth: None,
            tolerance: FLOAT_TOL,
            energy_truncation: (which == Conjecture::F3Energy).then_some(ENERGY_TRUNCATION),
        },
        conjecture: which,
        entries,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_general_first_cell_is_attained() {
        let r = conjecture_report(Conjecture::GGeneral, 400, 1, Execution::default()).unwrap();
        let e = r.entries.iter().find(|e| e.c == Some(1.0) && e.n == Some(1)).unwrap();
        assert_eq!(e.conjectured_bound, 0.25);
        assert!(e.attained && e.consistent);
        assert_eq!(r.entries.len(), 24);
        assert!(r.entries.iter().all(|e| e.label == CONJECTURE_LABEL));
    }

    #[test]
    fn f3_energy_identity_sample() {
        let r = conjecture_report(Conjecture::F3Energy, 2, 0, Execution::Sequential).unwrap();
        let e = &r.entries[0];
        assert!((e.conjectured_bound - 1.129_606_700_153_9).abs() < 1e-12);
        // phi = z: the truncated energy sits below the full constant by about 1/64
        assert!(e.best_found < e.conjectured_bound && e.best_found > e.conjectured_bound - 0.02);
        assert_eq!(e.best_schur, vec![[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]);
    }

    #[test]
    fn f3_second_coefficient_is_consistent() {
        let r = conjecture_report(Conjecture::F3Pointwise, 500, 3, Execution::default()).unwrap();
        let e = &r.entries[1];
        assert_eq!(e.conjectured_bound, 7.0 / 16.0);
        assert!(e.best_found <= 7.0 / 16.0 + 1e-9);
        assert_eq!(r.findings, 0);
    }

    #[test]
    fn names_round_trip() {
        for c in [Conjecture::F3Pointwise, Conjecture::F3Energy, Conjecture::GGeneral] {
            assert_eq!(c.to_string().parse::<Conjecture>().unwrap(), c);
            let j = serde_json::to_string(&c).unwrap();
            assert_eq!(j, format!("\"{c}\""));
        }
        assert!("nope".parse::<Conjecture>().is_err());
    }
}
