use num_complex::Complex64;
use serde::Serialize;

use super::optimize::{maximize, Point};
use super::sample::trial_rng;
use crate::bounds::{ps_phi, PsValue};
use crate::classes::SchwarzFn;
use crate::coeff::Float;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsOracleResult {
    pub mu: f64,
    pub upsilon: f64,
    pub oracle: f64,
    pub schur: Vec<[f64; 2]>,
    pub evaluations: usize,
    /// Closed form, when `(mu, upsilon)` is covered.
    pub phi: Option<PsValue>,
    /// `oracle <= phi + 1e-9`, when covered.
    pub dominated: Option<bool>,
}

/// `|c_3 + mu c_1 c_2 + upsilon c_1^3|` for the Schwarz function with Schur parameters `schur`.
pub fn ps_functional(mu: f64, upsilon: f64, schur: &[Float]) -> f64 {
    let Ok(c) = SchwarzFn::<Float>::from_schur(schur, 3).and_then(|phi| phi.coefficients_of(3)) else {
        return f64::NEG_INFINITY;
    };
    (c[2] + c[0] * c[1] * mu + c[0] * c[0] * c[0] * upsilon).norm()
}

/// Brute-force maximum of the functional over three Schur parameters.
pub fn ps_oracle(mu: f64, upsilon: f64, budget: usize, seed: u64) -> PsOracleResult {
    let mut rng = trial_rng(seed, 0);
    // real-axis starts cover the real extremals of every quoted region
    let extra: Vec<Point> = [0.25, 0.5, 0.75]
        .iter()
        .map(|&r| Point {
            schur: vec![Complex64::new(r, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            angle: 0.0,
        })
        .collect();
    let r = maximize(3, false, budget, &extra, &mut rng, |p: &Point| {
        ps_functional(mu, upsilon, &p.schur)
    });
    let phi = ps_phi(mu, upsilon).ok();
    PsOracleResult {
        mu,
        upsilon,
        oracle: r.value,
        schur: r.best.schur.iter().map(|z| [z.re, z.im]).collect(),
        evaluations: r.evaluations,
        dominated: phi.map(|p| r.value <= p.value + 1e-9),
        phi,
    }
}
