//! Command-line surface.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thermolength::{GasModel, ModelRecord, QuadratureConfig};

use crate::error::{CliError, CliResult};
use crate::output::Format;

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Debug, Parser)]
#[command(
    name = "thermolength",
    version,
    about = "Thermodynamic length and work for constant-cv gas models",
    after_help = "Exit codes: 0 success, 1 usage or parse error, 2 domain or validation error, \
                  3 numerical failure (convergence, instability, failed identity check)."
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Thermodynamic state and response coefficients at (s, v)
    Point {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        state: StateArgs,
    },
    /// Weinhold metric at (s, v), from the energy Hessian and from response coefficients
    Metric {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        state: StateArgs,
    },
    /// Thermodynamic length of an isentrope (flags) or of a path (--path file)
    Length {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        quadrature: QuadratureArgs,
        /// Entropy of the isentrope
        #[arg(long, allow_negative_numbers = true, required_unless_present = "path")]
        s: Option<f64>,
        /// Start volume
        #[arg(long, required_unless_present = "path")]
        v1: Option<f64>,
        /// End volume
        #[arg(long, required_unless_present = "path")]
        v2: Option<f64>,
        /// TOML file with [[segment]] tables and optional [model] and [quadrature] tables
        #[arg(long, conflicts_with_all = ["s", "v1", "v2"])]
        path: Option<PathBuf>,
    },
    /// Isentropic work between two volumes and the work-length identities
    Work {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        quadrature: QuadratureArgs,
        #[command(flatten)]
        isentrope: IsentropeArgs,
    },
    /// Run the identity checks on seeded random instances
    Verify {
        /// Fix the model instead of sampling all variants
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Instances per identity
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
    },
    /// Tabulate energies, lengths and work over a grid of volume pairs
    Table {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        quadrature: QuadratureArgs,
        /// Entropy of the isentrope
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        /// Start volumes as START:STOP:COUNT or a single value
        #[arg(long, value_parser = parse_grid)]
        v1: Grid,
        /// End volumes as START:STOP:COUNT or a single value
        #[arg(long, value_parser = parse_grid)]
        v2: Grid,
    },
}

#[derive(Clone, Debug, Args)]
pub struct StateArgs {
    /// Molar entropy
    #[arg(long, allow_negative_numbers = true)]
    pub s: f64,
    /// Molar volume
    #[arg(long, allow_negative_numbers = true)]
    pub v: f64,
}

#[derive(Clone, Debug, Args)]
pub struct IsentropeArgs {
    /// Entropy of the isentrope
    #[arg(long, allow_negative_numbers = true)]
    pub s: f64,
    /// Start volume
    #[arg(long, allow_negative_numbers = true)]
    pub v1: f64,
    /// End volume
    #[arg(long, allow_negative_numbers = true)]
    pub v2: f64,
}

#[derive(Clone, Debug, Default, Args)]
pub struct ModelArgs {
    /// Model variant: ideal, quasi-ideal or vdw
    #[arg(long, value_name = "VARIANT")]
    pub model: Option<String>,
    /// Constant-volume heat capacity
    #[arg(long, allow_negative_numbers = true)]
    pub cv: Option<f64>,
    /// Gas constant
    #[arg(long = "R", value_name = "R", allow_negative_numbers = true)]
    pub r: Option<f64>,
    /// Reference entropy
    #[arg(long, allow_negative_numbers = true)]
    pub s0: Option<f64>,
    /// Van der Waals attraction
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Excluded volume (quasi-ideal and vdw)
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// TOML file holding variant, cv, R and optional s0, a, b
    #[arg(long, value_name = "FILE", conflicts_with_all = ["model", "cv", "r", "s0", "a", "b"])]
    pub model_file: Option<PathBuf>,
}

impl ModelArgs {
    fn has_parameters(&self) -> bool {
        self.cv.is_some() || self.r.is_some() || self.s0.is_some() || self.a.is_some() || self.b.is_some()
    }

    /// The record named on the command line, if any. Missing pieces are usage errors.
    pub fn record(&self) -> CliResult<Option<ModelRecord>> {
        if let Some(file) = &self.model_file {
            return read_toml(file).map(Some);
        }
        let Some(variant) = &self.model else {
            if self.has_parameters() {
                return Err(CliError::Usage("model parameters given without --model".into()));
            }
            return Ok(None);
        };
        let (Some(cv), Some(r)) = (self.cv, self.r) else {
            return Err(CliError::Usage("--model requires --cv and --R".into()));
        };
        Ok(Some(ModelRecord {
            variant: variant.clone(),
            cv,
            r,
            s0: self.s0.unwrap_or(0.0),
            a: self.a,
            b: self.b,
        }))
    }

    pub fn resolve(&self) -> CliResult<Option<GasModel>> {
        match self.record()? {
            Some(rec) => Ok(Some(rec.to_model()?)),
            None => Ok(None),
        }
    }

    pub fn require(&self) -> CliResult<GasModel> {
        self.resolve()?
            .ok_or_else(|| CliError::Usage("a model is required: use --model or --model-file".into()))
    }
}

#[derive(Clone, Debug, Default, Args)]
pub struct QuadratureArgs {
    /// Relative tolerance of the adaptive quadrature
    #[arg(long, env = "THERMOLENGTH_REL_TOL")]
    pub rel_tol: Option<f64>,
    /// Absolute tolerance of the adaptive quadrature
    #[arg(long, env = "THERMOLENGTH_ABS_TOL")]
    pub abs_tol: Option<f64>,
    /// Panel budget of the adaptive quadrature
    #[arg(long)]
    pub max_subdivisions: Option<usize>,
}

impl QuadratureArgs {
    /// `base` with any flags applied on top, validated.
    pub fn config(&self, base: QuadratureConfig) -> CliResult<QuadratureConfig> {
        let cfg = QuadratureConfig {
            rel_tol: self.rel_tol.unwrap_or(base.rel_tol),
            abs_tol: self.abs_tol.unwrap_or(base.abs_tol),
            max_subdivisions: self.max_subdivisions.unwrap_or(base.max_subdivisions),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

pub fn read_toml<T: serde::de::DeserializeOwned>(file: &Path) -> CliResult<T> {
    let text = fs::read_to_string(file)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", file.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", file.display())))
}

/// Evenly spaced values, endpoints included.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid(pub Vec<f64>);

pub fn parse_grid(text: &str) -> Result<Grid, String> {
    let number = |t: &str| -> Result<f64, String> {
        let x: f64 = t.trim().parse().map_err(|_| format!("'{t}' is not a number"))?;
        if x.is_finite() {
            Ok(x)
        } else {
            Err(format!("'{t}' is not finite"))
        }
    };
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [single] => Ok(Grid(vec![number(single)?])),
        [start, stop, count] => {
            let (start, stop) = (number(start)?, number(stop)?);
            let n: usize = count
                .trim()
                .parse()
                .map_err(|_| format!("count '{count}' is not a positive integer"))?;
            match n {
                0 => Err("count must be at least 1".into()),
                1 => Ok(Grid(vec![start])),
                _ => {
                    let step = (stop - start) / (n - 1) as f64;
                    let mut values: Vec<f64> = (0..n).map(|i| start + step * i as f64).collect();
                    values[n - 1] = stop;
                    Ok(Grid(values))
                }
            }
        }
        _ => Err(format!("'{text}' is neither a number nor START:STOP:COUNT")),
    }
}
