//! The `logcoeff` command-line front end.
//!
//! Every subcommand echoes its resolved configuration first: as a `config`
//! object in JSON output, as `# key: value` lines otherwise. Timing goes to
//! stderr so stdout is byte-identical across runs with the same arguments.

mod args;

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

pub use args::{BackendArg, Cli, Command, Format};
use args::{ClassArgs, CoeffsArgs, DilogArgs, ExploreArgs, PhiArgs, TableArgs, VerifyArgs};

use crate::bounds::{bound_table, dilog, gamma_bound, ps_phi, write_bound_csv, BoundStatus, PsRegion};
use crate::classes::{extremal_series, member_from_schwarz, ClassSpec, SchwarzFn, SchwarzJson};
use crate::coeff::{Backend, Coeff, Exact, Float};
use crate::error::{Error, Result};
use crate::explorer::{
    conjecture_report, ps_oracle, search_extremal, verify_bounds, write_report_csv, Conjecture, VerifyConfig,
    FLOAT_TOL,
};
use crate::logcoeff::log_coefficients;
use crate::par::{init_threads, Execution};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// A proven bound failed: a bug by definition.
    Violation = 1,
    Usage = 2,
    /// The request falls outside every covered hypothesis or region.
    Inapplicable = 3,
    /// A conjectured bound was beaten.
    Finding = 4,
}

/// A proven violation outranks a conjecture finding.
pub fn exit_for(proven_violations: usize, findings: usize) -> Exit {
    if proven_violations > 0 {
        Exit::Violation
    } else if findings > 0 {
        Exit::Finding
    } else {
        Exit::Ok
    }
}

pub const THREADS_ENV: &str = "LOGCOEFF_THREADS";

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Exit::Usage as i32 } else { Exit::Ok as i32 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok());
    init_threads(threads);
    let mut io = Io { out, err };
    let started = Instant::now();
    let result = match cli.command {
        Command::Coeffs(a) => coeffs(a, &mut io),
        Command::Verify(a) => verify(a, &mut io),
        Command::Phi(a) => phi(a, &mut io),
        Command::Dilog(a) => dilog_cmd(a, &mut io),
        Command::Explore(a) => explore(a, &mut io),
        Command::Table(a) => table(a, &mut io),
    };
    let _ = writeln!(io.err, "wall-clock: {:.3}s", started.elapsed().as_secs_f64());
    match result {
        Ok(code) => code as i32,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            match e {
                Error::UncoveredRegion { .. } => Exit::Inapplicable as i32,
                _ => Exit::Usage as i32,
            }
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn write_header(io: &mut Io, config: &Value) -> Result<()> {
    if let Value::Object(map) = config {
        for (k, v) in map {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            writeln!(io.out, "# {k}: {v}").map_err(io_err)?;
        }
    }
    Ok(())
}

fn emit_json(io: &mut Io, config: Value, key: &str, body: impl Serialize) -> Result<()> {
    let mut map = serde_json::Map::new();
    map.insert("config".into(), config);
    map.insert(
        key.into(),
        serde_json::to_value(body).map_err(|e| Error::Parse(e.to_string()))?,
    );
    let text = serde_json::to_string_pretty(&Value::Object(map)).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(io.out, "{text}").map_err(io_err)
}

fn threads_label() -> String {
    std::env::var(THREADS_ENV).unwrap_or_else(|_| "auto".into())
}

fn resolve_backend(arg: BackendArg, spec: &ClassSpec, prefer_exact: bool) -> Result<Backend> {
    match arg {
        BackendArg::Float => Ok(Backend::Float),
        BackendArg::Exact if spec.exact_compatible() => Ok(Backend::Exact),
        BackendArg::Exact => Err(Error::FloatOnly("this class specification")),
        BackendArg::Auto if prefer_exact && spec.exact_compatible() => Ok(Backend::Exact),
        BackendArg::Auto => Ok(Backend::Float),
    }
}

fn fmt_f64(x: f64) -> String {
    format!("{x}")
}

fn fmt_complex(z: num_complex::Complex64) -> String {
    if z.im == 0.0 {
        fmt_f64(z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

#[derive(Debug, Clone, Serialize)]
struct CoeffRow {
    n: usize,
    gamma: Value,
    modulus: String,
    bound: Option<String>,
    margin: Option<String>,
    applicable: bool,
    sharp: bool,
    status: BoundStatus,
    citation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    alternatives: Vec<(String, f64)>,
    #[serde(skip)]
    violated: bool,
}

fn load_schwarz(path: &Path) -> Result<SchwarzJson> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidSpec(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))
}

fn coeff_rows<C: Coeff>(spec: &ClassSpec, n: usize, schwarz: Option<&SchwarzJson>) -> Result<Vec<CoeffRow>> {
    let order = n + 1;
    let f = match schwarz {
        Some(json) => member_from_schwarz(spec, &SchwarzFn::<C>::from_json(json, order)?, order)?,
        None => extremal_series::<C>(spec, order)?,
    };
    let gamma = log_coefficients(&f, n)?;
    let rows = gamma
        .values()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let k = i + 1;
            let b = gamma_bound(spec, k);
            let modulus = g.abs_f64();
            let exact_mod = g.exact_abs();
            let gamma_json = match C::BACKEND {
                Backend::Exact => Value::String(g.to_string()),
                Backend::Float => {
                    let z = g.to_complex();
                    json!([z.re, z.im])
                }
            };
            let (margin, violated) = match (&b.exact, &exact_mod, b.value) {
                (Some(be), Some(m), _) => {
                    let d = be.clone() - m.clone();
                    let neg = d < num_rational::BigRational::from_integer(0.into());
                    (Some(d.to_string()), neg)
                }
                (_, _, Some(v)) => (Some(fmt_f64(v - modulus)), v - modulus < -FLOAT_TOL),
                _ => (None, false),
            };
            CoeffRow {
                n: k,
                gamma: gamma_json,
                modulus: exact_mod.map_or_else(|| fmt_f64(modulus), |q| q.to_string()),
                bound: b
                    .exact
                    .as_ref()
                    .map(|q| q.to_string())
                    .or_else(|| b.value.map(fmt_f64)),
                margin,
                applicable: b.applicable,
                sharp: b.sharp,
                status: b.status,
                citation: b.citation,
                reason: b.reason.clone(),
                alternatives: b.alternatives.clone(),
                violated: violated && b.applicable && b.status == BoundStatus::Proven,
            }
        })
        .collect();
    Ok(rows)
}

fn coeffs(a: CoeffsArgs, io: &mut Io) -> Result<Exit> {
    let spec = a.class.resolve()?;
    let schwarz = a.schwarz.as_deref().map(load_schwarz).transpose()?;
    let complex_schwarz = schwarz
        .as_ref()
        .is_some_and(|s| s.schur.iter().any(|z| z[1] != 0.0));
    let backend = match a.backend {
        BackendArg::Auto if complex_schwarz => Backend::Float,
        other => resolve_backend(other, &spec, true)?,
    };
    let rows = match backend {
        Backend::Exact => coeff_rows::<Exact>(&spec, a.n, schwarz.as_ref())?,
        Backend::Float => coeff_rows::<Float>(&spec, a.n, schwarz.as_ref())?,
    };
    let source = match &a.schwarz {
        Some(p) => format!("schwarz:{}", p.display()),
        None => "extremal".into(),
    };
    let config = json!({
        "command": "coeffs",
        "spec": spec,
        "class": spec.to_string(),
        "n": a.n,
        "source": source,
        "backend": backend,
        "threads": threads_label(),
    });
    match a.format {
        Format::Json => emit_json(io, config, "rows", &rows)?,
        Format::Csv => {
            write_header(io, &config)?;
            let mut w = csv::Writer::from_writer(&mut *io.out);
            w.write_record(["n", "gamma", "modulus", "bound", "margin", "applicable", "status", "citation"])
                .map_err(|e| Error::Parse(e.to_string()))?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    gamma_text(&r.gamma),
                    r.modulus.clone(),
                    r.bound.clone().unwrap_or_default(),
                    r.margin.clone().unwrap_or_default(),
                    r.applicable.to_string(),
                    status_text(r.status).into(),
                    r.citation.into(),
                ])
                .map_err(|e| Error::Parse(e.to_string()))?;
            }
            w.flush().map_err(io_err)?;
        }
        Format::Pretty => {
            write_header(io, &config)?;
            writeln!(
                io.out,
                "{:>4}  {:>28}  {:>22}  {:>22}  {:>22}  citation",
                "n", "gamma_n", "|gamma_n|", "bound", "margin"
            )
            .map_err(io_err)?;
            for r in &rows {
                let bound = match (&r.bound, r.applicable) {
                    (Some(b), true) => b.clone(),
                    _ => "n/a".into(),
                };
                let cite = match r.status {
                    BoundStatus::Proven => r.citation.to_string(),
                    BoundStatus::Conjectural => format!("{} (conjectural)", r.citation),
                };
                writeln!(
                    io.out,
                    "{:>4}  {:>28}  {:>22}  {:>22}  {:>22}  {}",
                    r.n,
                    gamma_text(&r.gamma),
                    r.modulus,
                    bound,
                    r.margin.clone().unwrap_or_else(|| "-".into()),
                    cite
                )
                .map_err(io_err)?;
                if let Some(reason) = &r.reason {
                    writeln!(io.out, "      {reason}").map_err(io_err)?;
                }
                for (label, v) in &r.alternatives {
                    writeln!(io.out, "      {label}: {v}").map_err(io_err)?;
                }
            }
        }
    }
    Ok(if rows.iter().any(|r| r.violated) {
        Exit::Violation
    } else {
        Exit::Ok
    })
}

fn gamma_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) if a.len() == 2 => {
            fmt_complex(num_complex::Complex64::new(a[0].as_f64().unwrap_or(f64::NAN), a[1].as_f64().unwrap_or(f64::NAN)))
        }
        other => other.to_string(),
    }
}

fn status_text(s: BoundStatus) -> &'static str {
    match s {
        BoundStatus::Proven => "proven",
        BoundStatus::Conjectural => "conjectural",
    }
}

fn verify(a: VerifyArgs, io: &mut Io) -> Result<Exit> {
    let spec = a.class.resolve()?;
    let backend = resolve_backend(a.backend, &spec, false)?;
    let cfg = VerifyConfig {
        n: a.n,
        samples: a.samples,
        seed: a.seed,
        depth: a.depth,
        backend,
        exec: Execution::Parallel,
    };
    let report = verify_bounds(&spec, &cfg)?;
    let config = json!({
        "command": "verify",
        "spec": spec,
        "class": spec.to_string(),
        "n": a.n,
        "samples": a.samples,
        "seed": a.seed,
        "depth": a.depth,
        "backend": backend,
        "threads": threads_label(),
    });
    match a.format {
        Format::Json => emit_json(io, config, "report", &report)?,
        Format::Csv => {
            write_header(io, &config)?;
            write_report_csv(&report, &mut *io.out)?;
        }
        Format::Pretty => {
            write_header(io, &config)?;
            writeln!(
                io.out,
                "{:<18}  {:<28}  {:<11}  {:>22}  {:>22}  {:>22}  {:>4}",
                "check", "citation", "status", "bound", "max observed", "margin", "viol"
            )
            .map_err(io_err)?;
            for c in &report.checks {
                writeln!(
                    io.out,
                    "{:<18}  {:<28}  {:<11}  {:>22}  {:>22}  {:>22}  {:>4}",
                    c.check,
                    c.citation,
                    status_text(c.status),
                    c.bound_exact.clone().unwrap_or_else(|| fmt_f64(c.bound)),
                    fmt_f64(c.max_observed),
                    fmt_f64(c.margin),
                    c.violations.len()
                )
                .map_err(io_err)?;
            }
            for s in &report.skipped {
                writeln!(io.out, "skipped {} ({}): {}", s.check, s.citation, s.reason).map_err(io_err)?;
            }
            writeln!(
                io.out,
                "proven violations: {}; conjecture violations: {}",
                report.proven_violations, report.conjecture_violations
            )
            .map_err(io_err)?;
        }
    }
    let _ = writeln!(io.err, "verify: {} samples in {:.3}s", a.samples, report.wall_clock.as_secs_f64());
    Ok(exit_for(report.proven_violations, report.conjecture_violations))
}

fn phi(a: PhiArgs, io: &mut Io) -> Result<Exit> {
    let config = json!({"command": "phi", "mu": a.mu, "upsilon": a.upsilon});
    let v = match ps_phi(a.mu, a.upsilon) {
        Ok(v) => v,
        Err(e) => {
            writeln!(io.err, "({}, {}) lies in none of D2, D6, D9:", a.mu, a.upsilon).map_err(io_err)?;
            for r in PsRegion::ALL {
                let (mlo, mhi) = r.mu_range();
                let (ulo, uhi) = r.upsilon_range(a.mu);
                writeln!(
                    io.err,
                    "  {r}: |mu| in [{mlo}, {mhi}], upsilon in [{ulo}, {uhi}] at this mu"
                )
                .map_err(io_err)?;
            }
            return Err(e);
        }
    };
    match a.format {
        Format::Json => emit_json(io, config, "result", v)?,
        Format::Csv => {
            write_header(io, &config)?;
            writeln!(io.out, "mu,upsilon,value,region\n{},{},{},{}", a.mu, a.upsilon, v.value, v.region)
                .map_err(io_err)?;
        }
        Format::Pretty => {
            write_header(io, &config)?;
            writeln!(io.out, "Phi = {} (region {})", v.value, v.region).map_err(io_err)?;
        }
    }
    Ok(Exit::Ok)
}

fn dilog_cmd(a: DilogArgs, io: &mut Io) -> Result<Exit> {
    let v = dilog(a.x)?;
    let config = json!({"command": "dilog", "x": a.x});
    match a.format {
        Format::Json => emit_json(io, config, "value", v)?,
        Format::Csv => {
            write_header(io, &config)?;
            writeln!(io.out, "x,li2\n{},{}", a.x, v).map_err(io_err)?;
        }
        Format::Pretty => {
            write_header(io, &config)?;
            writeln!(io.out, "Li2({}) = {}", a.x, v).map_err(io_err)?;
        }
    }
    Ok(Exit::Ok)
}

fn explore(a: ExploreArgs, io: &mut Io) -> Result<Exit> {
    if let Some(name) = &a.conjecture {
        let which: Conjecture = name.parse()?;
        let report = conjecture_report(which, a.budget, a.seed, Execution::Parallel)?;
        let config = json!({
            "command": "explore",
            "conjecture": which,
            "budget": a.budget,
            "seed": a.seed,
            "backend": Backend::Float,
            "threads": threads_label(),
        });
        match a.format {
            Format::Json => emit_json(io, config, "report", &report)?,
            Format::Csv => {
                write_header(io, &config)?;
                writeln!(io.out, "c,n,conjectured_bound,best_found,margin,consistent,attained").map_err(io_err)?;
                for e in &report.entries {
                    writeln!(
                        io.out,
                        "{},{},{},{},{},{},{}",
                        e.c.map(fmt_f64).unwrap_or_default(),
                        e.n.map(|n| n.to_string()).unwrap_or_default(),
                        e.conjectured_bound,
                        e.best_found,
                        e.margin,
                        e.consistent,
                        e.attained
                    )
                    .map_err(io_err)?;
                }
            }
            Format::Pretty => {
                write_header(io, &config)?;
                for e in &report.entries {
                    writeln!(
                        io.out,
                        "c={:<5} n={:<2} bound={:<22} best={:<22} {}  [{}]",
                        e.c.map(fmt_f64).unwrap_or_else(|| "-".into()),
                        e.n.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
                        e.conjectured_bound,
                        e.best_found,
                        if e.consistent { "consistent" } else { "FINDING" },
                        e.label
                    )
                    .map_err(io_err)?;
                }
            }
        }
        return Ok(exit_for(0, report.findings));
    }
    if let (Some(mu), Some(upsilon)) = (a.mu, a.upsilon) {
        let r = ps_oracle(mu, upsilon, a.budget, a.seed);
        let config = json!({
            "command": "explore",
            "oracle": "ps",
            "mu": mu,
            "upsilon": upsilon,
            "budget": a.budget,
            "seed": a.seed,
        });
        match a.format {
            Format::Json => emit_json(io, config, "result", &r)?,
            _ => {
                write_header(io, &config)?;
                let phi = r.phi.map_or_else(|| "uncovered".to_string(), |p| format!("{} ({})", p.value, p.region));
                writeln!(io.out, "oracle = {}; closed form = {}", r.oracle, phi).map_err(io_err)?;
            }
        }
        return Ok(match r.dominated {
            Some(false) => Exit::Violation,
            _ => Exit::Ok,
        });
    }
    if a.class.given() {
        return search(&a.class, a.n, a.budget, a.seed, a.format, io);
    }
    Err(Error::InvalidSpec(
        "explore needs --conjecture, --mu/--upsilon, or a class to search".into(),
    ))
}

fn search(class: &ClassArgs, n: usize, budget: usize, seed: u64, format: Format, io: &mut Io) -> Result<Exit> {
    let spec = class.resolve()?;
    let r = search_extremal(&spec, n, budget, seed)?;
    let b = gamma_bound(&spec, n);
    let config = json!({
        "command": "explore",
        "search": spec.to_string(),
        "spec": spec,
        "n": n,
        "budget": budget,
        "seed": seed,
    });
    match format {
        Format::Json => emit_json(io, config, "result", json!({"search": r, "bound": b}))?,
        _ => {
            write_header(io, &config)?;
            writeln!(
                io.out,
                "best |gamma_{n}| = {} after {} evaluations; bound = {}",
                r.best_value,
                r.budget_used,
                b.value.map_or_else(|| "n/a".into(), fmt_f64)
            )
            .map_err(io_err)?;
        }
    }
    let exceeded = b.applicable && b.value.is_some_and(|v| r.best_value > v + FLOAT_TOL);
    let proven = b.status == BoundStatus::Proven;
    Ok(exit_for(usize::from(exceeded && proven), usize::from(exceeded && !proven)))
}

fn table(a: TableArgs, io: &mut Io) -> Result<Exit> {
    let spec = a.class.resolve()?;
    let rows = bound_table(&spec, a.n);
    let config = json!({
        "command": "table",
        "spec": spec,
        "class": spec.to_string(),
        "n": a.n,
    });
    match a.format {
        Format::Json => emit_json(io, config, "rows", &rows)?,
        Format::Csv => {
            write_header(io, &config)?;
            write_bound_csv(&rows, &mut *io.out)?;
        }
        Format::Pretty => {
            write_header(io, &config)?;
            for r in &rows {
                writeln!(
                    io.out,
                    "{:<14} {:>24}  sharp={:<5} applicable={:<5} {}",
                    r.n, r.bound, r.sharp, r.applicable, r.citation
                )
                .map_err(io_err)?;
            }
        }
    }
    Ok(Exit::Ok)
}
