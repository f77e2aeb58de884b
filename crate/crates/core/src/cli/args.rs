use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classes::{ClassKind, ClassSpec};
use crate::error::{Error, Result};
use crate::param::Param;

#[derive(Debug, Parser)]
#[command(name = "logcoeff", version, about = "Logarithmic coefficients and their bounds for univalent function classes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Logarithmic coefficients of an extremal function or a Schwarz-driven member, with bounds.
    Coeffs(CoeffsArgs),
    /// Checks every applicable bound on seeded random class members.
    Verify(VerifyArgs),
    /// The Prokhorov–Szynal functional bound at (mu, upsilon).
    Phi(PhiArgs),
    /// The dilogarithm Li_2(x) for |x| <= 1.
    Dilog(DilogArgs),
    /// Conjecture probes, extremal search and the functional oracle.
    Explore(ExploreArgs),
    /// Every bound formula for a class across n.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendArg {
    Auto,
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Args)]
pub struct ClassArgs {
    /// janowski, spiral, strongly_starlike, F or G.
    #[arg(long)]
    pub class: Option<String>,
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<Param>,
    #[arg(long = "A-imag", allow_hyphen_values = true)]
    pub a_imag: Option<Param>,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<Param>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<Param>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<Param>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<Param>,
    #[arg(long)]
    pub twist: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// Class specification as a JSON file.
    #[arg(long = "spec", conflicts_with = "class")]
    pub spec_file: Option<PathBuf>,
}

impl ClassArgs {
    pub fn given(&self) -> bool {
        self.class.is_some() || self.spec_file.is_some()
    }

    pub fn resolve(&self) -> Result<ClassSpec> {
        let mut spec = if let Some(path) = &self.spec_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidSpec(format!("cannot read {}: {e}", path.display())))?;
            let spec: ClassSpec = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?;
            spec.validate()?;
            spec
        } else {
            let class = self
                .class
                .as_deref()
                .ok_or_else(|| Error::InvalidSpec("missing --class or --spec".into()))?;
            let need = |p: &Option<Param>, flag: &str| {
                p.clone()
                    .ok_or_else(|| Error::InvalidSpec(format!("class {class} needs --{flag}")))
            };
            let kind = match class.to_ascii_lowercase().as_str() {
                "janowski" => ClassKind::Janowski {
                    a: need(&self.a, "A")?,
                    a_imag: self.a_imag.clone(),
                    b: need(&self.b, "B")?,
                },
                "spiral" => ClassKind::Spiral {
                    alpha: need(&self.alpha, "alpha")?,
                    beta: need(&self.beta, "beta")?,
                },
                "strongly_starlike" => ClassKind::StronglyStarlike {
                    alpha: need(&self.alpha, "alpha")?,
                },
                "f" => ClassKind::F { c: need(&self.c, "c")? },
                "g" => ClassKind::G { c: need(&self.c, "c")? },
                other => {
                    return Err(Error::InvalidSpec(format!(
                        "unknown class '{other}' (expected janowski, spiral, strongly_starlike, F or G)"
                    )))
                }
            };
            ClassSpec::new(kind)?
        };
        if let Some(t) = self.twist {
            spec = spec.with_twist(t)?;
        }
        if let Some(t) = self.theta {
            spec = spec.with_theta(t);
            spec.validate()?;
        }
        Ok(spec)
    }
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    /// Use the class extremal function (the default).
    #[arg(long, conflicts_with = "schwarz")]
    pub extremal: bool,
    /// Schwarz function as `{"schur": [[re, im], ...]}`.
    #[arg(long)]
    pub schwarz: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = BackendArg::Auto)]
    pub backend: BackendArg,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    #[arg(long, default_value_t = 16)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Schur parameters per sample.
    #[arg(long, default_value_t = crate::explorer::sample::DEFAULT_DEPTH)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t = BackendArg::Auto)]
    pub backend: BackendArg,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PhiArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub mu: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub upsilon: f64,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DilogArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExploreArgs {
    /// F3_pointwise, F3_energy or G_general.
    #[arg(long)]
    pub conjecture: Option<String>,
    /// Run the functional oracle at this mu (with --upsilon).
    #[arg(long, allow_hyphen_values = true, requires = "upsilon")]
    pub mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires = "mu")]
    pub upsilon: Option<f64>,
    #[command(flatten)]
    pub class: ClassArgs,
    /// Target index for an extremal search over the given class.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = crate::explorer::DEFAULT_BUDGET)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}
