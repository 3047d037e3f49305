//! Critical fields, DM strengths and temperatures.

use crate::error::{domain, Result};
use crate::model::{Axis, ModelParams};
use crate::spectrum::XAngles;

use super::scan::{crossings, log_grid, scan_intervals, Probe, ScanOptions};
use crate::entanglement::closed_form_families_x;
use crate::entanglement::{closed_form_families_z, LambdaFamilies};
use crate::thermal::Temperature;

/// `(2J_x − w₁′)² − (J_y + J_z)²`, or `None` when `2J_x > w₁′` (that root
/// of the squared condition is not a crossing of the two lowest levels).
fn lower_gap_sq(p: &ModelParams) -> Result<Option<f64>> {
    let a = XAngles::new(p)?;
    let c = p.couplings;
    let lhs = a.w1 - 2.0 * c.j_x;
    if lhs < 0.0 {
        return Ok(None);
    }
    Ok(Some(lhs * lhs - (c.j_y + c.j_z).powi(2)))
}

fn half_sqrt(radicand: f64) -> Option<f64> {
    (radicand >= 0.0).then(|| 0.5 * radicand.sqrt())
}

/// Nonuniform field `b_x` at which the ground level switches branch, for
/// the other parameters of `p`; the current `b_x` is ignored.
pub fn critical_b_nonuniform(p: &ModelParams) -> Result<Option<f64>> {
    let d = p.fields.d;
    Ok(lower_gap_sq(p)?.and_then(|r| half_sqrt(r - 4.0 * d * d)))
}

/// DM strength `D_x` at which the ground level switches branch; the
/// current `D_x` is ignored.
pub fn critical_dm_strength(p: &ModelParams) -> Result<Option<f64>> {
    let b = p.fields.b_nonuniform;
    Ok(lower_gap_sq(p)?.and_then(|r| half_sqrt(r - 4.0 * b * b)))
}

/// Non-negative uniform field solving `2J_x = w₁′ − w₂′`, i.e.
/// `4B_x² = (2J_x + w₂′)² − (J_y − J_z)²`; the current `B_x` is ignored.
pub fn critical_b_uniform(p: &ModelParams) -> Result<Option<f64>> {
    let a = XAngles::new(p)?;
    let c = p.couplings;
    let s = 2.0 * c.j_x + a.w2;
    if s < 0.0 {
        return Ok(None);
    }
    Ok(half_sqrt(s * s - (c.j_y - c.j_z).powi(2)))
}

fn families(p: &ModelParams, t: f64) -> Result<LambdaFamilies> {
    let t = Temperature::new(t)?;
    match p.axis() {
        Axis::Z => closed_form_families_z(p, t),
        Axis::X => closed_form_families_x(p, t),
    }
}

/// Temperatures in `(0, t_max]` where the thermal concurrence drops to or
/// rises from zero, with default [`ScanOptions`].
pub fn critical_temperatures(p: &ModelParams, t_max: f64) -> Result<Vec<f64>> {
    critical_temperatures_with(p, t_max, &ScanOptions::default())
}

/// Scans a log-spaced grid and refines every change of `C > threshold` by
/// bisection. A sign change of the leading-λ gap between two entangled grid
/// points is a point where `C` touches zero; it is located by bisection on
/// the gap and reported as a single temperature unless the zero set around
/// it is wider than `opts.merge_width`.
pub fn critical_temperatures_with(p: &ModelParams, t_max: f64, opts: &ScanOptions) -> Result<Vec<f64>> {
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(domain(format!("t_max must be positive and finite, got {t_max}")));
    }
    p.validate()?;
    let t_min = opts.t_min.min(0.5 * t_max);
    let grid = log_grid(t_min, t_max, opts.points);
    let probe = |t: f64| -> Result<Probe> {
        let f = families(p, t)?;
        Ok(Probe {
            concurrence: f.concurrence()?.value(),
            gap: Some(f.gap()),
        })
    };
    let intervals = scan_intervals(&grid, &probe, opts)?;
    Ok(crossings(&intervals, grid[0], grid[grid.len() - 1]))
}
