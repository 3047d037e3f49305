//! Sweep configuration: a flat TOML file whose keys double as command-line
//! flags. Flags given on the command line override keys from the file.

use std::path::Path;

use clap::Args;
use serde::Deserialize;
use spinchain_core::{Axis, ModelParams, SweepAxis, SweepParam, SweepSpec};

use crate::CliError;

#[derive(Debug, Default, Clone, PartialEq, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    /// Field axis: z or x.
    #[arg(long)]
    pub axis: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub jx: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub jy: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub jz: Option<f64>,
    /// DM strength.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b_uniform: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b_nonuniform: Option<f64>,
    /// Fixed temperature; 0 selects the ground state (x axis only).
    #[arg(long)]
    pub temperature: Option<f64>,
    /// One of T, J_x, J_y, J_z, D, B, b.
    #[arg(long)]
    pub sweep1_name: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub sweep1_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub sweep1_max: Option<f64>,
    #[arg(long)]
    pub sweep1_count: Option<usize>,
    #[arg(long)]
    pub sweep2_name: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub sweep2_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub sweep2_max: Option<f64>,
    #[arg(long)]
    pub sweep2_count: Option<usize>,
    /// CSV destination; standard output when omitted or `-`.
    #[arg(long)]
    pub output: Option<String>,
}

macro_rules! overlay_fields {
    ($hi:expr, $lo:expr, $($f:ident),*) => {
        SweepConfig { $($f: $hi.$f.or($lo.$f)),* }
    };
}

impl SweepConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::usage(format!("invalid config: {e}")))
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    /// Keys set in `self` win over keys set in `base`.
    pub fn over(self, base: SweepConfig) -> SweepConfig {
        overlay_fields!(
            self, base, axis, jx, jy, jz, d, b_uniform, b_nonuniform, temperature, sweep1_name,
            sweep1_min, sweep1_max, sweep1_count, sweep2_name, sweep2_min, sweep2_max, sweep2_count,
            output
        )
    }

    pub fn model(&self) -> Result<ModelParams, CliError> {
        model_params(
            self.axis.as_deref(),
            [self.jx, self.jy, self.jz, self.d, self.b_uniform, self.b_nonuniform],
        )
    }

    pub fn to_spec(&self) -> Result<SweepSpec, CliError> {
        let base = self.model()?;
        let axis1 = axis(1, &self.sweep1_name, self.sweep1_min, self.sweep1_max, self.sweep1_count)?
            .ok_or_else(|| CliError::usage("sweep1_name is required"))?;
        let axis2 = axis(2, &self.sweep2_name, self.sweep2_min, self.sweep2_max, self.sweep2_count)?;
        let t_swept = axis1.param == SweepParam::T || axis2.as_ref().is_some_and(|a| a.param == SweepParam::T);
        let temperature = match (self.temperature, t_swept) {
            (Some(t), _) => t,
            (None, true) => 0.0,
            (None, false) => return Err(CliError::usage("temperature is required unless T is swept")),
        };
        Ok(SweepSpec::new(base, temperature, axis1, axis2)?)
    }
}

/// Unset couplings and fields default to 0; the axis defaults to `default_axis`.
pub(crate) fn model_params_with(
    axis: Option<&str>,
    default_axis: Axis,
    values: [Option<f64>; 6],
) -> Result<ModelParams, CliError> {
    let axis = match axis {
        Some(s) => s.parse::<Axis>()?,
        None => default_axis,
    };
    let [jx, jy, jz, d, b, bn] = values.map(|v| v.unwrap_or(0.0));
    let p = ModelParams::z(jx, jy, jz, d, b, bn).with_axis(axis);
    p.validate()?;
    Ok(p)
}

fn model_params(axis: Option<&str>, values: [Option<f64>; 6]) -> Result<ModelParams, CliError> {
    model_params_with(axis, Axis::Z, values)
}

fn axis(
    k: u8,
    name: &Option<String>,
    min: Option<f64>,
    max: Option<f64>,
    count: Option<usize>,
) -> Result<Option<SweepAxis>, CliError> {
    let Some(name) = name else {
        if min.is_some() || max.is_some() || count.is_some() {
            return Err(CliError::usage(format!("sweep{k}_name is required when other sweep{k}_* keys are set")));
        }
        return Ok(None);
    };
    let param: SweepParam = name.parse()?;
    let missing = |key: &str| CliError::usage(format!("sweep{k}_{key} is required"));
    let min = min.ok_or_else(|| missing("min"))?;
    let max = max.ok_or_else(|| missing("max"))?;
    let count = count.ok_or_else(|| missing("count"))?;
    Ok(Some(SweepAxis::linspace(param, min, max, count)?))
}
