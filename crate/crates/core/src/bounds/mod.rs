//! Closed-form bounds for logarithmic coefficients and their weighted energies.
//!
//! Every right-hand side is returned as a [`BoundValue`] that records whether it
//! is proven or conjectural, whether equality is attained by a known extremal,
//! and whether the class parameters satisfy its hypotheses.

mod dilog;
mod ps;

use std::f64::consts::PI;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::classes::{ClassKind, ClassSpec};
use crate::error::Result;
use crate::logcoeff::Weight;
use crate::param::Param;

pub use dilog::{dilog, dilog_over_x};
pub(crate) use dilog::power_tail;
pub use ps::{ps_phi, ps_regions, PsRegion, PsValue};

/// Upper end of the `gamma_4` polynomial branch, `144/55`.
pub fn f4_poly_max() -> BigRational {
    BigRational::new(144.into(), 55.into())
}
/// Lower (open) end of the `|I_2|` branch; decimal literal of the D9 edge root.
pub const F4_I2_MIN: f64 = 2.71569;
/// Upper end of the `gamma_5` polynomial branch, `80/61`.
pub fn f5_poly_max() -> BigRational {
    BigRational::new(80.into(), 61.into())
}
/// Lower (open) end of the `|I_3|` branch; decimal literal of the D9 edge root.
pub const F5_I3_MIN: f64 = 1.35541;

/// Roth-weight right-hand side `sum p_n / n^2 = sum 1/(n+1)^2 = pi^2/6 - 1`.
pub const ROTH_RHS: f64 = PI * PI / 6.0 - 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundStatus {
    Proven,
    Conjectural,
}

fn ser_opt_rational<S: Serializer>(
    v: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(q) => s.serialize_some(&q.to_string()),
        None => s.serialize_none(),
    }
}

/// A labelled right-hand side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundValue {
    pub value: Option<f64>,
    #[serde(serialize_with = "ser_opt_rational")]
    pub exact: Option<BigRational>,
    pub sharp: bool,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub status: BoundStatus,
    pub citation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<&'static str>,
    /// Neighbouring formulas evaluated where no bound is asserted.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub alternatives: Vec<(String, f64)>,
}

impl BoundValue {
    fn proven(value: f64, sharp: bool, citation: &'static str) -> Self {
        BoundValue {
            value: Some(value),
            exact: None,
            sharp,
            applicable: true,
            reason: None,
            status: BoundStatus::Proven,
            citation,
            branch: None,
            alternatives: Vec::new(),
        }
    }

    fn exact(q: BigRational, sharp: bool, citation: &'static str) -> Self {
        let mut b = Self::proven(q.to_f64().unwrap_or(f64::NAN), sharp, citation);
        b.exact = Some(q);
        b
    }

    /// Exact when `q` is available, float otherwise.
    fn maybe_exact(q: Option<BigRational>, value: f64, sharp: bool, citation: &'static str) -> Self {
        match q {
            Some(q) => Self::exact(q, sharp, citation),
            None => Self::proven(value, sharp, citation),
        }
    }

    fn inapplicable(reason: impl Into<String>, citation: &'static str) -> Self {
        BoundValue {
            value: None,
            exact: None,
            sharp: false,
            applicable: false,
            reason: Some(reason.into()),
            status: BoundStatus::Proven,
            citation,
            branch: None,
            alternatives: Vec::new(),
        }
    }

    fn conjectural(mut self) -> Self {
        self.status = BoundStatus::Conjectural;
        self
    }

    fn branch(mut self, b: &'static str) -> Self {
        self.branch = Some(b);
        self
    }

    pub fn is_proven(&self) -> bool {
        self.status == BoundStatus::Proven
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn pexact(p: &Param) -> Option<BigRational> {
    p.exact().cloned()
}

/// Generalized binomial coefficient `binom(alpha, k)`.
fn gen_binom(alpha: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (alpha - j as f64) / (j as f64 + 1.0))
}

/// `A_n(alpha) = sum_{k=1}^{n} binom(n-1, k-1) binom(alpha, k) 2^k`, the coefficients of
/// `((1+z)/(1-z))^alpha`.
///
/// The finite sum cancels badly for large `n`; [`a_n_alpha_sequence`] is the
/// stable route for long sequences.
pub fn a_n_alpha(n: usize, alpha: f64) -> f64 {
    assert!(n >= 1, "A_n(alpha) needs n >= 1");
    let mut sum = 0.0;
    let mut choose = 1.0; // binom(n-1, k-1)
    for k in 1..=n {
        sum += choose * gen_binom(alpha, k) * 2f64.powi(k as i32);
        choose = choose * (n - k) as f64 / k as f64;
    }
    sum
}

/// `A_1..A_N` by the recurrence `(n+1) A_{n+1} = 2 alpha A_n + (n-1) A_{n-1}`, from
/// `(1 - z^2) h' = 2 alpha h`.
pub fn a_n_alpha_sequence(alpha: f64, big_n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(big_n);
    let (mut prev, mut cur) = (1.0, 2.0 * alpha);
    for n in 1..=big_n {
        out.push(cur);
        let next = (2.0 * alpha * cur + (n as f64 - 1.0) * prev) / (n as f64 + 1.0);
        prev = cur;
        cur = next;
    }
    out
}

/// `(1/4) sum A_n(alpha)^2 / n^2` summed to `N` terms with an Euler–Maclaurin tail.
pub fn strongly_starlike_energy(alpha: f64) -> f64 {
    const N: usize = 1_000_000;
    let seq = a_n_alpha_sequence(alpha, N);
    let head: f64 = seq
        .iter()
        .enumerate()
        .rev()
        .map(|(i, a)| a * a / ((i + 1) as f64).powi(2))
        .sum();
    let a_n = seq[N - 1];
    let scale = a_n * a_n * (N as f64).powf(2.0 - 2.0 * alpha);
    let tail = scale * power_tail(2.0 * alpha - 4.0, N);
    (head + tail) / 4.0
}

/// `sum_{n>=1} (n+1)^t |B|^{2n} / n^2`; `None` when it diverges (`|B| = 1`, `t >= 1`).
pub fn weighted_geometric_sum(b: f64, t: f64) -> Option<f64> {
    let b2 = b * b;
    if b2 == 0.0 {
        return Some(0.0);
    }
    if b2 < 1.0 {
        let mut sum = 0.0;
        let mut p = 1.0;
        for n in 1..200_000_000u64 {
            p *= b2;
            let nf = n as f64;
            let term = (nf + 1.0).powf(t) * p / (nf * nf);
            sum += term;
            if term * b2 / (1.0 - b2) < 1e-17 * sum.max(1e-300) || p == 0.0 {
                break;
            }
        }
        return Some(sum);
    }
    if t >= 1.0 {
        return None;
    }
    // |B| = 1: (n+1)^t/n^2 = sum_j binom(t, j) n^{t-2-j}
    const N: usize = 2000;
    let head: f64 = (1..=N)
        .rev()
        .map(|n| (n as f64 + 1.0).powf(t) / (n as f64).powi(2))
        .sum();
    let tail: f64 = (0..16)
        .map(|j| gen_binom(t, j) * power_tail(t - 2.0 - j as f64, N))
        .sum();
    Some(head + tail)
}

struct JanowskiParams {
    a: f64,
    b: f64,
    a_exact: Option<BigRational>,
    b_exact: Option<BigRational>,
}

/// Real `A`, `B` with `-1 <= B < A <= 1`, or the reason the hypothesis fails.
fn janowski_hypothesis(spec: &ClassSpec) -> std::result::Result<JanowskiParams, String> {
    let ClassKind::Janowski { a, a_imag, b } = &spec.kind else {
        return Err("not a janowski class".into());
    };
    if a_imag.as_ref().is_some_and(|im| !im.is_zero()) {
        return Err("outside theorem hypothesis: complex A".into());
    }
    let (av, bv) = (a.value(), b.value());
    if !(-1.0 <= bv && bv < av && av <= 1.0) {
        return Err(format!(
            "outside theorem hypothesis: needs -1 <= B < A <= 1, got A = {a}, B = {b}"
        ));
    }
    Ok(JanowskiParams {
        a: av,
        b: bv,
        a_exact: pexact(a),
        b_exact: pexact(b),
    })
}

fn is_value(p: &Param, v: i64) -> bool {
    match p.exact() {
        Some(x) => *x == BigRational::from_integer(v.into()),
        None => p.value() == v as f64,
    }
}

/// Bound on `|gamma_4|` or `|gamma_5|` for `F(c)`, with the c-range gates.
fn f_gamma45(c: &Param, n: usize) -> BoundValue {
    let cv = c.value();
    let (poly_max, i_min, poly_cite, env_cite) = if n == 4 {
        (f4_poly_max(), F4_I2_MIN, "f_gamma4_polynomial", "f_gamma4_i2_envelope")
    } else {
        (f5_poly_max(), F5_I3_MIN, "f_gamma5_polynomial", "f_gamma5_i3_envelope")
    };
    let in_poly = match c.exact() {
        Some(x) => x.is_positive() && *x <= poly_max,
        None => cv > 0.0 && cv <= poly_max.to_f64().unwrap_or(0.0),
    };
    let poly = |cv: f64| {
        if n == 4 {
            (cv + cv * cv / 18.0 * (13.0 + cv / 2.0 - cv * cv / 8.0)) / 40.0
        } else {
            (cv + cv * cv / 12.0 * (11.0 + cv - cv * cv / 4.0)) / 60.0
        }
    };
    let envelope = |cv: f64| {
        let which = if n == 4 { Envelope::I2 } else { Envelope::I3 };
        let i = d9_envelope(cv, which);
        if n == 4 {
            (cv + 2.0 * cv * cv / 9.0 + cv * cv / 2.0 * i) / 40.0
        } else {
            (cv + cv * cv / 2.0 + cv.powi(3) / 24.0 + 5.0 * cv * cv / 12.0 * i) / 60.0
        }
    };
    if in_poly {
        let exact = c.exact().map(|x| {
            let x = x.clone();
            if n == 4 {
                (x.clone() + x.clone() * &x / q(18, 1) * (q(13, 1) + x.clone() / q(2, 1) - x.clone() * &x / q(8, 1)))
                    / q(40, 1)
            } else {
                (x.clone() + x.clone() * &x / q(12, 1) * (q(11, 1) + x.clone() - x.clone() * &x / q(4, 1)))
                    / q(60, 1)
            }
        });
        return BoundValue::maybe_exact(exact, poly(cv), true, poly_cite).branch("D6");
    }
    if cv > i_min && cv <= 3.0 {
        return BoundValue::proven(envelope(cv), false, env_cite).branch("D9");
    }
    let lo = poly_max.to_f64().unwrap_or(f64::NAN);
    let mut b = BoundValue::inapplicable(
        format!("no bound asserted for c in ({lo:.5}, {i_min})"),
        if n == 4 { "f_gamma4_gap" } else { "f_gamma5_gap" },
    );
    b.alternatives = vec![
        ("polynomial branch (not asserted)".into(), poly(cv)),
        ("envelope branch (not asserted)".into(), envelope(cv)),
    ];
    b
}

/// All labelled bounds on `|gamma_n|` for `spec`: proven bounds first, then
/// older proven bounds, then conjectures.
pub fn gamma_bounds(spec: &ClassSpec, n: usize) -> Vec<BoundValue> {
    assert!(n >= 1, "gamma bounds are indexed from 1");
    let nn = n as i64;
    match &spec.kind {
        ClassKind::Janowski { b, .. } => {
            let cite = if b.is_zero() {
                "janowski_b0_gamma"
            } else {
                "janowski_gamma"
            };
            match janowski_hypothesis(spec) {
                Ok(p) => {
                    let exact = match (p.a_exact, p.b_exact) {
                        (Some(a), Some(b)) => Some((a - b) / q(2 * nn, 1)),
                        _ => None,
                    };
                    vec![BoundValue::maybe_exact(exact, (p.a - p.b) / (2.0 * n as f64), true, cite)]
                }
                Err(reason) => vec![BoundValue::inapplicable(reason, cite)],
            }
        }
        ClassKind::Spiral { alpha, beta } => vec![BoundValue::proven(
            (1.0 - beta.value()) * alpha.value().cos() / n as f64,
            true,
            "spiral_gamma",
        )],
        ClassKind::StronglyStarlike { alpha } => vec![BoundValue::maybe_exact(
            pexact(alpha).map(|a| a / q(nn, 1)),
            alpha.value() / n as f64,
            true,
            "strongly_starlike_gamma",
        )],
        ClassKind::F { c } => {
            let cv = c.value();
            let mut out = Vec::new();
            match n {
                1..=3 => {
                    let (num, ex): (f64, Option<BigRational>) = match n {
                        1 => (cv / 4.0, pexact(c).map(|x| x / q(4, 1))),
                        2 => (
                            (4.0 * cv + cv * cv) / 48.0,
                            pexact(c).map(|x| (q(4, 1) * &x + x.clone() * &x) / q(48, 1)),
                        ),
                        _ => (
                            (2.0 * cv + cv * cv) / 48.0,
                            pexact(c).map(|x| (q(2, 1) * &x + x.clone() * &x) / q(48, 1)),
                        ),
                    };
                    out.push(BoundValue::maybe_exact(ex, num, true, "f_gamma_1_3"));
                }
                4 | 5 => out.push(f_gamma45(c, n)),
                _ => {
                    if !is_value(c, 3) {
                        out.push(BoundValue::inapplicable(
                            "no bound stated for F(c), n >= 6",
                            "f_gamma_none",
                        ));
                    }
                }
            }
            if is_value(c, 3) {
                let ex = q(1, nn) * (q(1, 1) - q(1, 1i64 << (n + 1).min(62)));
                let v = (1.0 - 0.5f64.powi(n as i32 + 1)) / n as f64;
                let ex = if n < 62 { Some(ex) } else { None };
                out.push(
                    BoundValue::maybe_exact(ex, v, true, "f3_conjecture_gamma").conjectural(),
                );
            }
            out
        }
        ClassKind::G { c } => {
            let cv = c.value();
            let cex = pexact(c);
            let conj_exact = cex.clone().map(|x| x / q(2 * nn * (nn + 1), 1));
            let conj_val = cv / (2.0 * n as f64 * (n as f64 + 1.0));
            let mut out = Vec::new();
            if n <= 3 {
                out.push(BoundValue::maybe_exact(conj_exact.clone(), conj_val, true, "g_gamma_1_3"));
            }
            out.push(BoundValue::maybe_exact(
                cex.map(|x| x.clone() / (q(2, 1) * (x + q(1, 1)) * q(nn, 1))),
                cv / (2.0 * (cv + 1.0) * n as f64),
                false,
                "g_prior_gamma",
            ));
            if n >= 4 {
                out.push(
                    BoundValue::maybe_exact(conj_exact, conj_val, true, "g_conjecture_gamma")
                        .conjectural(),
                );
            }
            out
        }
    }
}

/// The primary bound on `|gamma_n|`: the first applicable proven bound, else the
/// first labelled entry (a conjecture or an inapplicability record).
pub fn gamma_bound(spec: &ClassSpec, n: usize) -> BoundValue {
    let all = gamma_bounds(spec, n);
    all.iter()
        .find(|b| b.applicable && b.is_proven())
        .or_else(|| all.iter().find(|b| b.applicable))
        .unwrap_or(&all[0])
        .clone()
}

/// Which `|I|` functional of the `gamma_4`/`gamma_5` estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Envelope {
    I2,
    I3,
}

impl Envelope {
    /// `(mu, upsilon)` of the functional at `c`.
    pub fn mu_upsilon(self, c: f64) -> (f64, f64) {
        match self {
            Envelope::I2 => (2.0 + c / 18.0, 1.0 + c / 18.0 - c * c / 72.0),
            Envelope::I3 => (2.0 + c / 10.0, 1.0 + c / 10.0 - c * c / 20.0),
        }
    }
}

fn d9_envelope(c: f64, which: Envelope) -> f64 {
    match which {
        Envelope::I2 => (54.0 + c) / 27.0 * (4.0 * (54.0 + c) / (3.0 * (288.0 + 8.0 * c - c * c))).sqrt(),
        Envelope::I3 => (30.0 + c) / 15.0 * (2.0 * (30.0 + c) / (3.0 * (80.0 + 4.0 * c - c * c))).sqrt(),
    }
}

/// Bound on `|I_2|` or `|I_3|` at `c`: `|upsilon|` on the D6 range, the D9 closed
/// form on the upper range, inapplicable in between.
pub fn i_envelope(c: &Param, which: Envelope) -> BoundValue {
    let cv = c.value();
    let (max_d6, min_d9, cite) = match which {
        Envelope::I2 => (f4_poly_max(), F4_I2_MIN, "i2_envelope"),
        Envelope::I3 => (f5_poly_max(), F5_I3_MIN, "i3_envelope"),
    };
    let in_d6 = match c.exact() {
        Some(x) => x.is_positive() && *x <= max_d6,
        None => cv > 0.0 && cv <= max_d6.to_f64().unwrap_or(0.0),
    };
    if in_d6 {
        let (_, u) = which.mu_upsilon(cv);
        let exact = c.exact().map(|x| {
            let x = x.clone();
            match which {
                Envelope::I2 => q(1, 1) + x.clone() / q(18, 1) - x.clone() * &x / q(72, 1),
                Envelope::I3 => q(1, 1) + x.clone() / q(10, 1) - x.clone() * &x / q(20, 1),
            }
            .abs()
        });
        return BoundValue::maybe_exact(exact, u.abs(), true, cite).branch("D6");
    }
    if cv > min_d9 && cv <= 3.0 {
        return BoundValue::proven(d9_envelope(cv, which), true, cite).branch("D9");
    }
    BoundValue::inapplicable(
        format!("c = {c} lies outside (0, {:.5}] and ({min_d9}, 3]", max_d6.to_f64().unwrap_or(f64::NAN)),
        cite,
    )
}

/// `(pi^2/6) + Li_2(1/4)/4 - Li_2(1/2)`, the energy of the `F(3)` extremal.
pub fn f3_energy_constant() -> f64 {
    PI * PI / 6.0 + dilog(0.25).unwrap_or(f64::NAN) / 4.0 - dilog(0.5).unwrap_or(f64::NAN)
}

fn in_class_s(spec: &ClassSpec) -> std::result::Result<(), String> {
    match &spec.kind {
        ClassKind::Janowski { .. } => janowski_hypothesis(spec).map(|_| ()),
        _ => Ok(()),
    }
}

/// Bound on `sum w_n |gamma_n|^2` for `spec`.
pub fn energy_bound(spec: &ClassSpec, weight: Weight) -> BoundValue {
    if weight == Weight::RothPn {
        return match in_class_s(spec) {
            Ok(()) => BoundValue::proven(ROTH_RHS, true, "roth"),
            Err(reason) => BoundValue::inapplicable(reason, "roth"),
        };
    }
    let none = |what: &str| {
        BoundValue::inapplicable(
            format!("no {what} energy bound for {}", spec.name()),
            "energy_none",
        )
    };
    match &spec.kind {
        ClassKind::Janowski { .. } => {
            let p = match janowski_hypothesis(spec) {
                Ok(p) => p,
                Err(reason) => return BoundValue::inapplicable(reason, "janowski_energy"),
            };
            let (a, b) = (p.a, p.b);
            match weight {
                Weight::Ones => {
                    if b == 0.0 {
                        let ex = p.a_exact.map(|a| a.clone() * &a / q(4, 1));
                        BoundValue::maybe_exact(ex, a * a / 4.0, true, "janowski_b0_energy")
                    } else {
                        let k = (a - b) / (2.0 * b);
                        BoundValue::proven(k * k * dilog(b * b).unwrap_or(f64::NAN), true, "janowski_energy")
                    }
                }
                Weight::NSquared => {
                    if b == -1.0 {
                        return BoundValue::inapplicable(
                            "n^2-weighted bound needs B != -1",
                            "janowski_n2_energy",
                        );
                    }
                    let ex = match (p.a_exact, p.b_exact) {
                        (Some(ae), Some(be)) => {
                            let d = ae - be.clone();
                            Some(d.clone() * &d / (q(4, 1) * (q(1, 1) - be.clone() * &be)))
                        }
                        _ => None,
                    };
                    BoundValue::maybe_exact(ex, (a - b).powi(2) / (4.0 * (1.0 - b * b)), false, "janowski_n2_energy")
                }
                Weight::PowT(t) => {
                    if t > 2.0 {
                        return BoundValue::inapplicable(
                            format!("outside hypothesis: t = {t} > 2"),
                            "janowski_weighted_energy",
                        );
                    }
                    if b == 0.0 {
                        return BoundValue::proven(a * a / 4.0 * 2f64.powf(t), false, "janowski_weighted_energy");
                    }
                    let k = (a - b) / (2.0 * b);
                    let v = weighted_geometric_sum(b, t).map_or(f64::INFINITY, |s| k * k * s);
                    BoundValue::proven(v, false, "janowski_weighted_energy")
                }
                Weight::RothPn => unreachable!(),
            }
        }
        ClassKind::Spiral { alpha, beta } => match weight {
            Weight::Ones => {
                let v = PI * PI / 6.0 * (1.0 - beta.value()).powi(2) * alpha.value().cos().powi(2);
                BoundValue::proven(v, true, "spiral_energy")
            }
            _ => none(&weight.label()),
        },
        ClassKind::StronglyStarlike { alpha } => match weight {
            Weight::Ones => BoundValue::proven(
                strongly_starlike_energy(alpha.value()),
                true,
                "strongly_starlike_energy",
            ),
            _ => none(&weight.label()),
        },
        ClassKind::F { c } => match weight {
            Weight::Ones if is_value(c, 3) => {
                BoundValue::proven(f3_energy_constant(), true, "f3_conjecture_energy").conjectural()
            }
            _ => none(&weight.label()),
        },
        ClassKind::G { .. } => none(&weight.label()),
    }
}

/// Right-hand side of `sum_{n<=k} n^2 |gamma_n|^2 <= ((A-B)/(2B))^2 sum_{n<=k} |B|^{2n}`
/// (or `A^2/4` when `B = 0`), valid for every truncation `k`.
pub fn janowski_n2_partial_bound(spec: &ClassSpec, k: usize) -> Option<f64> {
    let p = janowski_hypothesis(spec).ok()?;
    if p.b == 0.0 {
        return Some(p.a * p.a / 4.0);
    }
    let kk = (p.a - p.b) / (2.0 * p.b);
    let b2 = p.b * p.b;
    let s: f64 = (1..=k).map(|n| b2.powi(n as i32)).sum();
    Some(kk * kk * s)
}

/// One row of an exported bound table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    pub class: String,
    pub params: String,
    pub n: String,
    pub bound: String,
    pub sharp: bool,
    pub applicable: bool,
    pub citation: String,
}

fn bound_text(b: &BoundValue) -> String {
    match (&b.exact, b.value) {
        (Some(q), _) => q.to_string(),
        (None, Some(v)) => format!("{v}"),
        (None, None) => String::new(),
    }
}

/// Every gamma bound for `n = 1..=n_max` followed by every energy bound.
pub fn bound_table(spec: &ClassSpec, n_max: usize) -> Vec<BoundRow> {
    let mut rows = Vec::new();
    let row = |n: String, b: &BoundValue| BoundRow {
        class: spec.name().to_string(),
        params: spec.params_label(),
        n,
        bound: bound_text(b),
        sharp: b.sharp,
        applicable: b.applicable,
        citation: match b.status {
            BoundStatus::Proven => b.citation.to_string(),
            BoundStatus::Conjectural => format!("{} (conjectural)", b.citation),
        },
    };
    for n in 1..=n_max {
        for b in gamma_bounds(spec, n) {
            rows.push(row(n.to_string(), &b));
        }
    }
    for w in [Weight::Ones, Weight::NSquared, Weight::PowT(2.0), Weight::RothPn] {
        rows.push(row(format!("sum:{}", w.label()), &energy_bound(spec, w)));
    }
    rows
}

/// Writes rows as CSV with header `class,params,n,bound,sharp,applicable,citation`.
pub fn write_bound_csv<W: std::io::Write>(rows: &[BoundRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)
            .map_err(|e| crate::error::Error::Parse(e.to_string()))?;
    }
    w.flush().map_err(|e| crate::error::Error::Parse(e.to_string()))?;
    Ok(())
}

#[cfg(test)]
mod tests;
