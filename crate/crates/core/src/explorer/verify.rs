use std::time::{Duration, Instant};

use num_rational::BigRational;
use serde::Serialize;

use super::sample::{sample_schur, SampleCoeff, DEFAULT_DEPTH};
use super::ReportHeader;
use crate::bounds::{energy_bound, gamma_bounds, janowski_n2_partial_bound, BoundStatus, BoundValue};
use crate::classes::{member_from_schwarz, ClassKind, ClassSpec, SchwarzFn};
use crate::coeff::{Coeff, Exact, Float};
use crate::error::Result;
use crate::logcoeff::{log_coefficients, weighted_energy_of_moduli, Weight};
use crate::par::{map_reduce, Execution};
use crate::Backend;

/// Float-backend violation tolerance.
pub const FLOAT_TOL: f64 = 1e-9;
/// Truncation of energy sums on the float backend.
pub const ENERGY_TRUNCATION: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub depth: usize,
    pub backend: Backend,
    pub exec: Execution,
}

impl VerifyConfig {
    pub fn new(n: usize, samples: usize, seed: u64) -> Self {
        VerifyConfig {
            n,
            samples,
            seed,
            depth: DEFAULT_DEPTH,
            backend: Backend::Float,
            exec: Execution::default(),
        }
    }

    /// Energy sums run to 64 on the float backend and to `n` on the exact one.
    pub fn energy_truncation(&self) -> usize {
        match self.backend {
            Backend::Float => ENERGY_TRUNCATION.max(self.n),
            Backend::Exact => self.n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CheckKind {
    /// `|gamma_n| <= bound`.
    Gamma { n: usize },
    /// Truncated `sum w_n |gamma_n|^2 <= bound`.
    Energy { weight: Weight },
    /// `sum_{n<=k} n^2 |gamma_n|^2 <= bound_k`.
    N2Partial { k: usize },
}

impl CheckKind {
    pub fn label(&self) -> String {
        match self {
            CheckKind::Gamma { n } => format!("gamma_{n}"),
            CheckKind::Energy { weight } => format!("energy:{}", weight.label()),
            CheckKind::N2Partial { k } => format!("n2_partial_{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub sample: usize,
    pub schur: Vec<[f64; 2]>,
    pub observed: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed_exact: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    #[serde(flatten)]
    pub kind: CheckKind,
    pub bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_exact: Option<String>,
    pub status: BoundStatus,
    pub citation: &'static str,
    pub max_observed: f64,
    pub argmax_sample: Option<usize>,
    pub margin: f64,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Skipped {
    pub check: String,
    pub citation: &'static str,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub header: ReportHeader,
    pub checks: Vec<CheckResult>,
    pub skipped: Vec<Skipped>,
    pub proven_violations: usize,
    pub conjecture_violations: usize,
    #[serde(skip)]
    pub wall_clock: Duration,
}

impl BoundReport {
    pub fn is_clean(&self) -> bool {
        self.proven_violations == 0
    }
}

struct Check {
    kind: CheckKind,
    bound: BoundValue,
}

fn plan(spec: &ClassSpec, n: usize) -> (Vec<Check>, Vec<Skipped>) {
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let mut push = |kind: CheckKind, b: BoundValue| {
        if b.applicable && b.value.is_some() {
            checks.push(Check { kind, bound: b });
        } else {
            skipped.push(Skipped {
                check: kind.label(),
                citation: b.citation,
                reason: b.reason.clone().unwrap_or_else(|| "no value".into()),
            });
        }
    };
    for k in 1..=n {
        for b in gamma_bounds(spec, k) {
            push(CheckKind::Gamma { n: k }, b);
        }
    }
    let mut weights = vec![Weight::Ones, Weight::NSquared, Weight::RothPn];
    if matches!(spec.kind, ClassKind::Janowski { .. }) {
        weights.extend([Weight::PowT(1.0), Weight::PowT(2.0)]);
    }
    for w in weights {
        push(CheckKind::Energy { weight: w }, energy_bound(spec, w));
    }
    if matches!(spec.kind, ClassKind::Janowski { .. }) {
        for k in 1..=n {
            match janowski_n2_partial_bound(spec, k) {
                Some(v) => checks.push(Check {
                    kind: CheckKind::N2Partial { k },
                    bound: BoundValue {
                        value: Some(v),
                        exact: None,
                        sharp: false,
                        applicable: true,
                        reason: None,
                        status: BoundStatus::Proven,
                        citation: "janowski_n2_partial",
                        branch: None,
                        alternatives: Vec::new(),
                    },
                }),
                None => skipped.push(Skipped {
                    check: CheckKind::N2Partial { k }.label(),
                    citation: "janowski_n2_partial",
                    reason: "outside theorem hypothesis".into(),
                }),
            }
        }
    }
    (checks, skipped)
}

/// Observed left-hand side of one check on one member.
struct Obs {
    value: f64,
    exact: Option<BigRational>,
}

#[derive(Clone)]
struct Acc {
    max: f64,
    argmax: Option<usize>,
    violations: Vec<Violation>,
}

impl Acc {
    fn empty() -> Self {
        Acc {
            max: f64::NEG_INFINITY,
            argmax: None,
            violations: Vec::new(),
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        // ties keep the lower sample index; inputs arrive in index order
        if other.max > self.max {
            self.max = other.max;
            self.argmax = other.argmax;
        }
        self.violations.extend(other.violations);
        self
    }
}

fn observe<C: Coeff>(checks: &[Check], gamma: &[C], energy_n: usize) -> Vec<Obs> {
    let moduli: Vec<f64> = gamma.iter().map(|g| g.abs_f64()).collect();
    checks
        .iter()
        .map(|c| match c.kind {
            CheckKind::Gamma { n } => Obs {
                value: moduli[n - 1],
                exact: gamma[n - 1].exact_abs(),
            },
            CheckKind::Energy { weight } => Obs {
                value: weighted_energy_of_moduli(&moduli[..energy_n], weight).total(),
                exact: None,
            },
            CheckKind::N2Partial { k } => Obs {
                value: (1..=k).map(|n| (n * n) as f64 * moduli[n - 1].powi(2)).sum(),
                exact: None,
            },
        })
        .collect()
}

fn violates(check: &Check, obs: &Obs, backend: Backend) -> bool {
    match (backend, &check.bound.exact, &obs.exact) {
        (Backend::Exact, Some(b), Some(o)) => o > b,
        (Backend::Exact, _, _) => obs.value > check.bound.value.unwrap_or(f64::INFINITY),
        (Backend::Float, _, _) => obs.value > check.bound.value.unwrap_or(f64::INFINITY) + FLOAT_TOL,
    }
}

fn run<C: Coeff>(
    spec: &ClassSpec,
    cfg: &VerifyConfig,
    checks: &[Check],
    members: &(dyn Fn(usize) -> Vec<C> + Sync),
    count: usize,
) -> Vec<Acc> {
    let energy_n = cfg.energy_truncation();
    let order = energy_n + 1;
    let identity = vec![Acc::empty(); checks.len()];
    map_reduce(
        count,
        cfg.exec,
        identity,
        |i| {
            let params = members(i);
            let obs = SchwarzFn::<C>::from_schur(&params, order)
                .and_then(|phi| member_from_schwarz(spec, &phi, order))
                .and_then(|f| log_coefficients(&f, energy_n))
                .map(|g| observe(checks, g.values(), energy_n))
                .unwrap_or_else(|e| panic!("member {i} of {spec}: {e}"));
            checks
                .iter()
                .zip(obs)
                .map(|(c, o)| {
                    let mut acc = Acc {
                        max: o.value,
                        argmax: Some(i),
                        violations: Vec::new(),
                    };
                    if violates(c, &o, cfg.backend) {
                        acc.violations.push(Violation {
                            sample: i,
                            schur: params
                                .iter()
                                .map(|l| {
                                    let z = l.to_complex();
                                    [z.re, z.im]
                                })
                                .collect(),
                            observed: o.value,
                            observed_exact: o.exact.map(|q| q.to_string()),
                        });
                    }
                    acc
                })
                .collect()
        },
        |a, b| a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect(),
    )
}

fn assemble(
    spec: &ClassSpec,
    cfg: &VerifyConfig,
    checks: Vec<Check>,
    skipped: Vec<Skipped>,
    accs: Vec<Acc>,
    started: Instant,
) -> BoundReport {
    let results: Vec<CheckResult> = checks
        .into_iter()
        .zip(accs)
        .map(|(c, a)| {
            let bound = c.bound.value.unwrap_or(f64::INFINITY);
            CheckResult {
                check: c.kind.label(),
                kind: c.kind,
                bound,
                bound_exact: c.bound.exact.as_ref().map(|q| q.to_string()),
                status: c.bound.status,
                citation: c.bound.citation,
                max_observed: a.max,
                argmax_sample: a.argmax,
                margin: bound - a.max,
                violations: a.violations,
            }
        })
        .collect();
    let count = |s: BoundStatus| {
        results
            .iter()
            .filter(|r| r.status == s)
            .map(|r| r.violations.len())
            .sum()
    };
    BoundReport {
        header: ReportHeader {
            command: "verify".into(),
            spec: Some(spec.clone()),
            seed: cfg.seed,
            backend: cfg.backend,
            samples: Some(cfg.samples),
            budget: None,
            n: Some(cfg.n),
            depth: Some(cfg.depth),
            tolerance: match cfg.backend {
                Backend::Float => FLOAT_TOL,
                Backend::Exact => 0.0,
            },
            energy_truncation: Some(cfg.energy_truncation()),
        },
        proven_violations: count(BoundStatus::Proven),
        conjecture_violations: count(BoundStatus::Conjectural),
        checks: results,
        skipped,
        wall_clock: started.elapsed(),
    }
}

fn verify_generic<C: SampleCoeff>(spec: &ClassSpec, cfg: &VerifyConfig) -> Result<BoundReport> {
    let started = Instant::now();
    let (checks, skipped) = plan(spec, cfg.n);
    let depth = cfg.depth;
    let seed = cfg.seed;
    let accs = run::<C>(spec, cfg, &checks, &|i| sample_schur::<C>(seed, i, depth), cfg.samples);
    Ok(assemble(spec, cfg, checks, skipped, accs, started))
}

/// Checks every applicable bound on `cfg.samples` seeded random members of `spec`.
pub fn verify_bounds(spec: &ClassSpec, cfg: &VerifyConfig) -> Result<BoundReport> {
    spec.validate()?;
    if cfg.samples == 0 {
        return Err(crate::Error::InvalidSpec("verify needs at least one sample".into()));
    }
    match cfg.backend {
        Backend::Float => verify_generic::<Float>(spec, cfg),
        Backend::Exact => {
            if !spec.exact_compatible() {
                return Err(crate::Error::FloatOnly("this class specification"));
            }
            verify_generic::<Exact>(spec, cfg)
        }
    }
}

/// Same checks on explicitly given Schur parameter lists (float backend).
pub fn verify_members(spec: &ClassSpec, cfg: &VerifyConfig, members: &[Vec<Float>]) -> Result<BoundReport> {
    spec.validate()?;
    let started = Instant::now();
    let cfg = VerifyConfig {
        backend: Backend::Float,
        samples: members.len(),
        ..cfg.clone()
    };
    let (checks, skipped) = plan(spec, cfg.n);
    let accs = run::<Float>(spec, &cfg, &checks, &|i| members[i].clone(), members.len());
    Ok(assemble(spec, &cfg, checks, skipped, accs, started))
}

/// Flat CSV rows: one per check.
pub fn write_report_csv<W: std::io::Write>(report: &BoundReport, out: W) -> Result<()> {
    #[derive(Serialize)]
    struct Row<'a> {
        check: &'a str,
        status: BoundStatus,
        bound: f64,
        max_observed: f64,
        margin: f64,
        violations: usize,
        citation: &'a str,
    }
    let mut w = csv::Writer::from_writer(out);
    let err = |e: csv::Error| crate::Error::Parse(e.to_string());
    for c in &report.checks {
        w.serialize(Row {
            check: &c.check,
            status: c.status,
            bound: c.bound,
            max_observed: c.max_observed,
            margin: c.margin,
            violations: c.violations.len(),
            citation: c.citation,
        })
        .map_err(err)?;
    }
    w.flush().map_err(|e| crate::Error::Parse(e.to_string()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::Param;

    fn find<'a>(r: &'a BoundReport, label: &str, citation: &str) -> &'a CheckResult {
        r.checks
            .iter()
            .find(|c| c.check == label && c.citation == citation)
            .unwrap_or_else(|| panic!("no check {label} / {citation}"))
    }

    #[test]
    fn g1_prior_bound_holds() {
        let spec = ClassSpec::g(1).unwrap();
        let r = verify_bounds(&spec, &VerifyConfig::new(8, 500, 7)).unwrap();
        assert!(r.is_clean());
        for n in 1..=8 {
            let c = find(&r, &format!("gamma_{n}"), "g_prior_gamma");
            assert!(c.violations.is_empty());
            assert!(c.margin >= -FLOAT_TOL);
        }
    }

    #[test]
    fn f3_low_index_bounds_hold() {
        let spec = ClassSpec::f(3).unwrap();
        let r = verify_bounds(&spec, &VerifyConfig::new(3, 500, 1)).unwrap();
        assert!(r.is_clean());
        assert_eq!(find(&r, "gamma_1", "f_gamma_1_3").bound, 0.75);
        assert_eq!(find(&r, "gamma_2", "f_gamma_1_3").bound, 7.0 / 16.0);
        assert_eq!(find(&r, "gamma_3", "f_gamma_1_3").bound, 5.0 / 16.0);
    }

    #[test]
    fn zero_schwarz_function_has_full_margins() {
        let spec = ClassSpec::janowski(1, -1).unwrap();
        let r = verify_members(&spec, &VerifyConfig::new(4, 1, 0), &[vec![]]).unwrap();
        for c in &r.checks {
            assert_eq!(c.max_observed, 0.0, "{}", c.check);
            assert_eq!(c.margin, c.bound, "{}", c.check);
        }
    }

    #[test]
    fn exact_backend_agrees_on_a_small_run() {
        let spec = ClassSpec::janowski(1, Param::exact_ratio(-1, 2)).unwrap();
        let mut cfg = VerifyConfig::new(5, 40, 3);
        cfg.backend = Backend::Exact;
        let r = verify_bounds(&spec, &cfg).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.header.energy_truncation, Some(5));
    }

    #[test]
    fn worker_count_does_not_change_reports() {
        let spec = ClassSpec::strongly_starlike(Param::exact_ratio(1, 2)).unwrap();
        let mut cfg = VerifyConfig::new(6, 200, 42);
        let a = verify_bounds(&spec, &cfg).unwrap();
        cfg.exec = Execution::Sequential;
        let b = verify_bounds(&spec, &cfg).unwrap();
        assert_eq!(a.checks, b.checks);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn complex_a_is_skipped_not_violated() {
        let spec = ClassSpec::new(ClassKind::Janowski {
            a: Param::from(0),
            a_imag: Some(Param::real(0.5)),
            b: Param::from(-1),
        })
        .unwrap();
        let r = verify_bounds(&spec, &VerifyConfig::new(4, 50, 2)).unwrap();
        assert!(r.is_clean());
        assert!(r.skipped.iter().any(|s| s.reason.contains("outside theorem hypothesis")));
    }

    #[test]
    fn a_violation_is_reported() {
        // phi = z makes |gamma_1| of F(3) exactly 3/4; a forged tighter bound must trip
        let spec = ClassSpec::f(3).unwrap();
        let (mut checks, _) = plan(&spec, 1);
        checks[0].bound.value = Some(0.5);
        checks[0].bound.exact = None;
        let cfg = VerifyConfig::new(1, 1, 0);
        let one = vec![Float::new(1.0, 0.0)];
        let accs = run::<Float>(&spec, &cfg, &checks, &|_| one.clone(), 1);
        assert_eq!(accs[0].violations.len(), 1);
        assert!((accs[0].violations[0].observed - 0.75).abs() < 1e-14);
    }
}
