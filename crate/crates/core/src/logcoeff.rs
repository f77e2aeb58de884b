//! Logarithmic coefficients `gamma_n`, pre-Schwarzian coefficients `beta_n`,
//! `delta_n = 2 n gamma_n`, and weighted energies `sum w_n |gamma_n|^2`.

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::coeff::{Backend, Coeff};
use crate::error::{Error, Result};
use crate::series::Series;

/// `gamma_1..gamma_N` of a function, with `log(f/z) = 2 sum gamma_n z^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaVector<C> {
    values: Vec<C>,
    pub source: String,
}

impl<C: Coeff> GammaVector<C> {
    pub fn new(values: Vec<C>, source: impl Into<String>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        Ok(GammaVector {
            values,
            source: source.into(),
        })
    }

    /// `values()[n - 1]` is `gamma_n`.
    pub fn values(&self) -> &[C] {
        &self.values
    }

    pub fn gamma(&self, n: usize) -> &C {
        &self.values[n - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn backend(&self) -> Backend {
        C::BACKEND
    }

    pub fn moduli(&self) -> Vec<f64> {
        self.values.iter().map(Coeff::abs_f64).collect()
    }

    /// `delta_n = 2 n gamma_n`.
    pub fn deltas(&self) -> Vec<C> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, g)| C::from_i64(2 * (i as i64 + 1)) * g)
            .collect()
    }
}

/// Exact values serialize as `"p/q"` strings, float values as `[re, im]` pairs.
impl<C: Coeff> Serialize for GammaVector<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.values.len()))?;
        for v in &self.values {
            match C::BACKEND {
                Backend::Exact => seq.serialize_element(&v.to_string())?,
                Backend::Float => {
                    let z = v.to_complex();
                    seq.serialize_element(&[z.re, z.im])?
                }
            }
        }
        seq.end()
    }
}

/// Pre-Schwarzian coefficients and the matching `delta_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaDelta<C> {
    /// `beta_1..beta_N` of `1 + z f''/f'` (`beta_0 = 1` implicit).
    pub beta: Vec<C>,
    /// `delta_1..delta_N`, `delta_n = 2 n gamma_n`.
    pub delta: Vec<C>,
}

fn check_normalized<C: Coeff>(f: &Series<C>, n: usize) -> Result<()> {
    if f.order() < n + 1 {
        return Err(Error::OrderTooSmall {
            have: f.order(),
            need: n + 1,
        });
    }
    if !f.coeff(0).is_zero_coeff() {
        return Err(Error::Normalization("f(0) must be 0"));
    }
    if !f.coeff(1).is_one_coeff() {
        return Err(Error::Normalization("f'(0) must be 1"));
    }
    Ok(())
}

/// `gamma_1..gamma_n` of `f`; `f` must have order at least `n + 1`.
pub fn log_coefficients<C: Coeff>(f: &Series<C>, n: usize) -> Result<GammaVector<C>> {
    check_normalized(f, n)?;
    let log = f.truncate(n + 1).shift_down()?.log_unit()?;
    let half = C::ratio(1, 2);
    let values = log.coeffs()[1..=n]
        .iter()
        .map(|l| l.clone() * &half)
        .collect();
    GammaVector::new(values, "series")
}

/// `beta_n` from the log-derivative of `f'`: `1 + z f''/f' = 1 + z (log f')'`.
pub fn pre_schwarzian_coeffs<C: Coeff>(f: &Series<C>, n: usize) -> Result<BetaDelta<C>> {
    check_normalized(f, n)?;
    let log_fp = f.truncate(n + 1).derivative().log_unit()?;
    let beta = (1..=n)
        .map(|k| C::from_i64(k as i64) * log_fp.coeff(k))
        .collect();
    let delta = log_coefficients(f, n)?.deltas();
    Ok(BetaDelta { beta, delta })
}

/// `gamma_1..gamma_5` from `beta_1..beta_5` through the coefficient identities
/// obtained from `(zf'/f)(1 + zf''/f') = (zf'/f)^2 + z (zf'/f)'`:
///
/// * `gamma_1 = beta_1/4`
/// * `gamma_2 = (beta_2 + beta_1^2/4)/12`
/// * `gamma_3 = (beta_3 + beta_1 beta_2/2)/24`
/// * `5 delta_4 = beta_4 + beta_3 delta_1 + beta_2 delta_2 - delta_2^2`
/// * `6 delta_5 = beta_5 + beta_4 delta_1 + delta_2 (beta_3 - delta_3) + delta_3 (beta_2 - delta_2)`
pub fn gamma_from_beta<C: Coeff>(bd: &BetaDelta<C>) -> Result<[C; 5]> {
    if bd.beta.len() < 5 {
        return Err(Error::OrderTooSmall {
            have: bd.beta.len(),
            need: 5,
        });
    }
    let b = &bd.beta;
    let r = |n, d| C::ratio(n, d);
    let g1 = b[0].clone() * &r(1, 4);
    let g2 = (b[1].clone() + b[0].clone() * &b[0] * &r(1, 4)) * &r(1, 12);
    let g3 = (b[2].clone() + b[0].clone() * &b[1] * &r(1, 2)) * &r(1, 24);
    let d1 = g1.clone() * &r(2, 1);
    let d2 = g2.clone() * &r(4, 1);
    let d3 = g3.clone() * &r(6, 1);
    let d4 = (b[3].clone() + b[2].clone() * &d1 + b[1].clone() * &d2 - d2.clone() * &d2) * &r(1, 5);
    let d5 = (b[4].clone()
        + b[3].clone() * &d1
        + d2.clone() * &(b[2].clone() - d3.clone())
        + d3.clone() * &(b[1].clone() - d2.clone()))
        * &r(1, 6);
    let g4 = d4 * &r(1, 8);
    let g5 = d5 * &r(1, 10);
    Ok([g1, g2, g3, g4, g5])
}

/// Weight sequences for `sum w_n |gamma_n|^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "weight", content = "t")]
pub enum Weight {
    Ones,
    NSquared,
    /// `(n + 1)^t`; the known bound needs `t <= 2`.
    PowT(f64),
    /// `p_n = (n/(n+1))^2`.
    RothPn,
}

impl Weight {
    pub fn at(&self, n: usize) -> f64 {
        let n = n as f64;
        match *self {
            Weight::Ones => 1.0,
            Weight::NSquared => n * n,
            Weight::PowT(t) => (n + 1.0).powf(t),
            Weight::RothPn => (n / (n + 1.0)).powi(2),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Weight::Ones => "ones".into(),
            Weight::NSquared => "n_squared".into(),
            Weight::PowT(t) => format!("pow_t({t})"),
            Weight::RothPn => "roth_p_n".into(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "ones" => Ok(Weight::Ones),
            "n_squared" | "n2" => Ok(Weight::NSquared),
            "roth" | "roth_p_n" => Ok(Weight::RothPn),
            _ => {
                let t = s
                    .strip_prefix("pow_t(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| s.strip_prefix("t="))
                    .ok_or_else(|| Error::Parse(format!("unknown weight '{s}'")))?;
                t.parse::<f64>()
                    .map(Weight::PowT)
                    .map_err(|_| Error::Parse(format!("bad exponent in weight '{s}'")))
            }
        }
    }
}

/// Partial sums `S_k = sum_{n<=k} w_n |gamma_n|^2` for `k = 1..N`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyTrajectory {
    pub weight: Weight,
    pub partial_sums: Vec<f64>,
    /// Set for `(n+1)^t` with `t > 2`, where no bound is known.
    pub outside_hypothesis: bool,
}

impl EnergyTrajectory {
    pub fn total(&self) -> f64 {
        self.partial_sums.last().copied().unwrap_or(0.0)
    }
}

pub fn weighted_energy<C: Coeff>(gamma: &GammaVector<C>, weight: Weight) -> EnergyTrajectory {
    weighted_energy_of_moduli(&gamma.moduli(), weight)
}

/// Same as [`weighted_energy`] on precomputed `|gamma_n|`.
pub fn weighted_energy_of_moduli(moduli: &[f64], weight: Weight) -> EnergyTrajectory {
    let mut acc = 0.0;
    let partial_sums = moduli
        .iter()
        .enumerate()
        .map(|(i, g)| {
            acc += weight.at(i + 1) * g * g;
            acc
        })
        .collect();
    EnergyTrajectory {
        weight,
        partial_sums,
        outside_hypothesis: matches!(weight, Weight::PowT(t) if t > 2.0),
    }
}

/// `zf'/f` and `1 + zf''/f'` as series of order `N - 1` for `f` of order `N`.
pub fn starlike_and_convex_quotients<C: Coeff>(f: &Series<C>) -> Result<(Series<C>, Series<C>)> {
    check_normalized(f, 1)?;
    let fp = f.derivative();
    let f_over_z = f.shift_down()?;
    let zfp_f = fp.div(&f_over_z)?;
    let fpp = fp.derivative();
    let conv = if fpp.order() + 1 == fp.order() {
        fpp.shift_up().div(&fp)?.add_constant(&C::one())
    } else {
        Series::one(fp.order())
    };
    Ok((zfp_f, conv))
}

/// `gamma_n` for complex doubles, convenient for reporting.
pub fn gamma_complex<C: Coeff>(g: &GammaVector<C>) -> Vec<Complex64> {
    g.values.iter().map(Coeff::to_complex).collect()
}
