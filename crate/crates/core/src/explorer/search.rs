use serde::Serialize;

use super::optimize::{maximize, Incumbent, Point};
use super::sample::trial_rng;
use super::ReportHeader;
use crate::classes::{member_from_schwarz, ClassSpec, SchwarzFn};
use crate::coeff::Float;
use crate::error::Result;
use crate::logcoeff::log_coefficients;
use crate::Backend;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub header: ReportHeader,
    pub target: usize,
    pub best_value: f64,
    pub best_schur: Vec<[f64; 2]>,
    pub best_theta: f64,
    pub trajectory: Vec<Incumbent>,
    pub budget_used: usize,
    /// `best_value` recomputed from the stored parameters matched bit for bit.
    pub replay_ok: bool,
}

/// `|gamma_n|` of the member driven by `schur` rotated by `theta`; `-inf` on failure.
pub fn gamma_modulus(spec: &ClassSpec, n: usize, schur: &[Float], theta: f64) -> f64 {
    let order = n + 1;
    let eval = || -> Result<f64> {
        let phi = SchwarzFn::<Float>::from_schur(schur, order)?;
        let phi = if theta != 0.0 { phi.rotated(theta) } else { phi };
        let f = member_from_schwarz(spec, &phi, order)?;
        Ok(log_coefficients(&f, n)?.gamma(n).norm())
    };
    eval().unwrap_or(f64::NEG_INFINITY)
}

/// Maximizes `|gamma_n|` over Schur parameter vectors of dimension `n + 2` and a
/// rotation angle, within `budget` evaluations.
pub fn search_extremal(spec: &ClassSpec, n: usize, budget: usize, seed: u64) -> Result<SearchResult> {
    spec.validate()?;
    if n == 0 {
        return Err(crate::Error::Domain("search target index must be >= 1".into()));
    }
    let spec = ClassSpec {
        theta: None,
        ..spec.clone()
    };
    let mut rng = trial_rng(seed, n);
    let objective = |p: &Point| gamma_modulus(&spec, n, &p.schur, p.angle);
    let r = maximize(n + 2, true, budget, &[], &mut rng, objective);
    let replay = gamma_modulus(&spec, n, &r.best.schur, r.best.angle);
    Ok(SearchResult {
        header: ReportHeader {
            command: "search".into(),
            spec: Some(spec.clone()),
            seed,
            backend: Backend::Float,
            samples: None,
            budget: Some(budget),
            n: Some(n),
            depth: Some(n + 2),
            tolerance: 0.0,
            energy_truncation: None,
        },
        target: n,
        best_value: r.value,
        best_schur: r.best.schur.iter().map(|z| [z.re, z.im]).collect(),
        best_theta: r.best.angle,
        trajectory: r.trajectory,
        budget_used: r.evaluations,
        replay_ok: replay.to_bits() == r.value.to_bits(),
    })
}
