//! One- and two-dimensional parameter grids.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;

use crate::entanglement::{
    concurrence_pure, ground_state_concurrence_x, oracle_thermal_concurrence, thermal_concurrence,
};
use crate::error::{domain, invalid, Result};
use crate::model::{build_hamiltonian, Axis, ModelParams};
use crate::spectrum::hermitian_eigensolve;
use crate::thermal::Temperature;

/// Quantity varied along a sweep axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepParam {
    T,
    Jx,
    Jy,
    Jz,
    D,
    /// Uniform field.
    B,
    /// Nonuniform field.
    Bn,
}

impl SweepParam {
    pub const ALL: [SweepParam; 7] = [Self::T, Self::Jx, Self::Jy, Self::Jz, Self::D, Self::B, Self::Bn];

    pub fn name(self) -> &'static str {
        match self {
            Self::T => "T",
            Self::Jx => "J_x",
            Self::Jy => "J_y",
            Self::Jz => "J_z",
            Self::D => "D",
            Self::B => "B",
            Self::Bn => "b",
        }
    }

    /// Current value in `(params, temperature)`.
    pub fn get(self, p: &ModelParams, t: f64) -> f64 {
        match self {
            Self::T => t,
            Self::Jx => p.couplings.j_x,
            Self::Jy => p.couplings.j_y,
            Self::Jz => p.couplings.j_z,
            Self::D => p.fields.d,
            Self::B => p.fields.b_uniform,
            Self::Bn => p.fields.b_nonuniform,
        }
    }

    pub fn set(self, p: &mut ModelParams, t: &mut f64, value: f64) {
        match self {
            Self::T => *t = value,
            Self::Jx => p.couplings.j_x = value,
            Self::Jy => p.couplings.j_y = value,
            Self::Jz => p.couplings.j_z = value,
            Self::D => p.fields.d = value,
            Self::B => p.fields.b_uniform = value,
            Self::Bn => p.fields.b_nonuniform = value,
        }
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SweepParam {
    type Err = crate::Error;

    /// `B` and `b` are case-sensitive; other names are not.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "B" => return Ok(Self::B),
            "b" => return Ok(Self::Bn),
            _ => {}
        }
        match s.to_ascii_lowercase().as_str() {
            "t" | "temperature" => Ok(Self::T),
            "j_x" | "jx" => Ok(Self::Jx),
            "j_y" | "jy" => Ok(Self::Jy),
            "j_z" | "jz" => Ok(Self::Jz),
            "d" | "dm" => Ok(Self::D),
            "b_uniform" => Ok(Self::B),
            "b_nonuniform" => Ok(Self::Bn),
            _ => Err(invalid(format!(
                "unknown sweep parameter '{s}' (expected one of T, J_x, J_y, J_z, D, B, b)"
            ))),
        }
    }
}

/// Grid values of one swept parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepAxis {
    pub param: SweepParam,
    pub values: Vec<f64>,
}

impl SweepAxis {
    /// `count` evenly spaced values from `min` to `max` inclusive. A single
    /// point requires `min == max`; otherwise `count ≥ 2` and `min < max`.
    pub fn linspace(param: SweepParam, min: f64, max: f64, count: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(invalid(format!("{param} range must be finite")));
        }
        let values = match count {
            0 => return Err(invalid(format!("{param} axis needs at least one point"))),
            1 if min == max => vec![min],
            1 => return Err(invalid(format!("{param} axis with one point needs min == max"))),
            _ if min >= max => {
                return Err(invalid(format!("{param} axis needs min < max, got [{min}, {max}]")))
            }
            _ => {
                let step = (max - min) / (count - 1) as f64;
                let mut v: Vec<f64> = (0..count).map(|i| min + step * i as f64).collect();
                v[count - 1] = max;
                v
            }
        };
        Self::from_values(param, values)
    }

    pub fn from_values(param: SweepParam, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(invalid(format!("{param} axis has no values")));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(invalid(format!("{param} axis has non-finite values")));
        }
        if param == SweepParam::T && values.iter().any(|v| *v < 0.0) {
            return Err(invalid("temperatures must be non-negative"));
        }
        Ok(Self { param, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Grid definition: base parameters and temperature, overridden point by
/// point by one or two swept parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: ModelParams,
    pub temperature: f64,
    pub axis1: SweepAxis,
    pub axis2: Option<SweepAxis>,
}

impl SweepSpec {
    pub fn new(base: ModelParams, temperature: f64, axis1: SweepAxis, axis2: Option<SweepAxis>) -> Result<Self> {
        let spec = Self {
            base,
            temperature,
            axis1,
            axis2,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if !(self.temperature.is_finite() && self.temperature >= 0.0) {
            return Err(invalid(format!("temperature must be finite and non-negative, got {}", self.temperature)));
        }
        if let Some(a2) = &self.axis2 {
            if a2.param == self.axis1.param {
                return Err(invalid(format!("both axes sweep {}", a2.param)));
            }
        }
        Ok(())
    }

    pub fn point_count(&self) -> usize {
        self.axis1.len() * self.axis2.as_ref().map_or(1, SweepAxis::len)
    }

    /// Grid coordinates in row order, second axis fastest.
    pub fn points(&self) -> Vec<(f64, Option<f64>)> {
        let mut out = Vec::with_capacity(self.point_count());
        for &a in &self.axis1.values {
            match &self.axis2 {
                None => out.push((a, None)),
                Some(ax) => out.extend(ax.values.iter().map(|&b| (a, Some(b)))),
            }
        }
        out
    }

    /// Model parameters and temperature at one grid point.
    pub fn params_at(&self, a1: f64, a2: Option<f64>) -> (ModelParams, f64) {
        let mut p = self.base;
        let mut t = self.temperature;
        self.axis1.param.set(&mut p, &mut t, a1);
        if let (Some(ax), Some(v)) = (&self.axis2, a2) {
            ax.param.set(&mut p, &mut t, v);
        }
        (p, t)
    }
}

/// Closed-form concurrence at `(p, t)`; `t = 0` selects the ground state,
/// which is available for the x-axis variant only.
pub fn evaluate_point(p: &ModelParams, t: f64) -> Result<f64> {
    let temp = Temperature::new(t)?;
    if temp.is_zero() {
        if p.axis() != Axis::X {
            return Err(invalid("zero-temperature concurrence is only available for the x-axis model"));
        }
        return Ok(ground_state_concurrence_x(p)?.value());
    }
    Ok(thermal_concurrence(p, temp)?.value())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub a1: f64,
    pub a2: Option<f64>,
    pub concurrence: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub rows: Vec<SweepRow>,
}

/// Evaluates every grid point in parallel; row order follows
/// [`SweepSpec::points`] regardless of scheduling.
pub fn sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let rows = spec
        .points()
        .into_par_iter()
        .map(|(a1, a2)| {
            let (p, t) = spec.params_at(a1, a2);
            Ok(SweepRow {
                a1,
                a2,
                concurrence: evaluate_point(&p, t)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult {
        spec: spec.clone(),
        rows,
    })
}

/// `printf("%.9g")`.
pub fn format_g9(x: f64) -> String {
    const P: i32 = 9;
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", (P - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-4..P).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        trim_zeros(&format!("{:.*}", (P - 1 - exp) as usize, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

impl SweepResult {
    pub fn header(&self) -> String {
        let a2 = self.spec.axis2.as_ref().map_or("-", |a| a.param.name());
        format!("{},{},concurrence", self.spec.axis1.param, a2)
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{}", self.header())?;
        for r in &self.rows {
            let a2 = r.a2.map_or_else(|| "-".to_string(), format_g9);
            writeln!(w, "{},{},{}", format_g9(r.a1), a2, format_g9(r.concurrence))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }

    pub fn max_concurrence(&self) -> f64 {
        self.rows.iter().map(|r| r.concurrence).fold(0.0, f64::max)
    }
}

/// Outcome of comparing a sweep's closed-form values with the numeric route.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checked: usize,
    /// Ground-state points whose numeric ground level is degenerate.
    pub skipped: usize,
    pub max_deviation: f64,
    pub failures: Vec<SweepRow>,
}

impl VerifyReport {
    pub const TOLERANCE: f64 = 1e-8;

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Numeric ground-state concurrence when the ground level is simple.
fn oracle_ground(p: &ModelParams) -> Result<Option<f64>> {
    let es = hermitian_eigensolve(&build_hamiltonian(p)?)?;
    let scale = es.eigenvalues.iter().fold(1f64, |m, e| m.max(e.abs()));
    if es.eigenvalues[1] - es.eigenvalues[0] <= 1e-9 * scale {
        return Ok(None);
    }
    Ok(Some(concurrence_pure(es.eigenvectors[0])?.value()))
}

/// Re-evaluates every `stride`-th row of `result` through the numeric
/// route and records rows deviating by more than [`VerifyReport::TOLERANCE`].
pub fn verify_sweep(result: &SweepResult, stride: usize) -> Result<VerifyReport> {
    if stride == 0 {
        return Err(domain("verification stride must be at least 1"));
    }
    let checks = result
        .rows
        .par_iter()
        .step_by(stride)
        .map(|row| {
            let (p, t) = result.spec.params_at(row.a1, row.a2);
            let oracle = if t == 0.0 {
                oracle_ground(&p)?
            } else {
                Some(oracle_thermal_concurrence(&p, Temperature::new(t)?)?.value())
            };
            Ok((*row, oracle.map(|o| (o - row.concurrence).abs())))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = VerifyReport {
        checked: 0,
        skipped: 0,
        max_deviation: 0.0,
        failures: Vec::new(),
    };
    for (row, dev) in checks {
        match dev {
            None => report.skipped += 1,
            Some(d) => {
                report.checked += 1;
                report.max_deviation = report.max_deviation.max(d);
                if d.is_nan() || d > VerifyReport::TOLERANCE {
                    report.failures.push(row);
                }
            }
        }
    }
    Ok(report)
}
