use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::{Coeff, Exact, Float};
use crate::par::trial_seed;

/// Default number of Schur parameters per sampled Schwarz function.
pub const DEFAULT_DEPTH: usize = 6;
/// Fraction of samples with one parameter forced onto the unit circle.
pub const BOUNDARY_FRACTION: f64 = 0.2;
/// Denominator of the exact sampler's grid `k/16`, `k = -16..=16`.
pub const EXACT_GRID: i64 = 16;

pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(seed, index as u64))
}

/// Uniform point of the closed unit disk.
pub fn disk_point<R: Rng>(rng: &mut R) -> Complex64 {
    let r = rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(-PI..PI))
}

/// Backends that can draw random Schur parameters.
pub trait SampleCoeff: Coeff {
    fn interior<R: Rng>(rng: &mut R) -> Self;
    fn unimodular<R: Rng>(rng: &mut R) -> Self;
}

impl SampleCoeff for Float {
    fn interior<R: Rng>(rng: &mut R) -> Self {
        disk_point(rng)
    }

    fn unimodular<R: Rng>(rng: &mut R) -> Self {
        Complex64::from_polar(1.0, rng.gen_range(-PI..PI))
    }
}

impl SampleCoeff for Exact {
    fn interior<R: Rng>(rng: &mut R) -> Self {
        Exact::ratio(rng.gen_range(-EXACT_GRID..=EXACT_GRID), EXACT_GRID)
    }

    fn unimodular<R: Rng>(rng: &mut R) -> Self {
        if rng.gen_bool(0.5) {
            Exact::ratio(1, 1)
        } else {
            Exact::ratio(-1, 1)
        }
    }
}

/// Schur parameters for trial `index`: `depth` interior draws, and for a
/// [`BOUNDARY_FRACTION`] of trials one position replaced by a unimodular value
/// (a finite Blaschke product).
pub fn sample_schur<C: SampleCoeff>(seed: u64, index: usize, depth: usize) -> Vec<C> {
    let mut rng = trial_rng(seed, index);
    let mut params: Vec<C> = (0..depth).map(|_| C::interior(&mut rng)).collect();
    if depth > 0 && rng.gen_bool(BOUNDARY_FRACTION) {
        let at = rng.gen_range(0..depth);
        params[at] = C::unimodular(&mut rng);
    }
    params
}
