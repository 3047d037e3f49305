//! Intervals of a one-dimensional sweep where the concurrence is positive.

use crate::entanglement::{family_gap, ground_state_concurrence_x};
use crate::error::{invalid, Result};
use crate::thermal::Temperature;

use super::scan::{scan_intervals, Interval, Probe, ScanOptions};
use super::sweep::{evaluate_point, SweepParam, SweepSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct RevivalReport {
    pub param: SweepParam,
    pub threshold: f64,
    /// Disjoint, ascending. Intervals that share an endpoint meet at a point
    /// where the concurrence touches zero.
    pub intervals: Vec<Interval>,
}

impl RevivalReport {
    /// Every interval after the first.
    pub fn revivals(&self) -> &[Interval] {
        self.intervals.get(1..).unwrap_or(&[])
    }

    pub fn has_revival(&self) -> bool {
        self.intervals.len() >= 2
    }

    /// Start of the first revival.
    pub fn onset(&self) -> Option<f64> {
        self.revivals().first().map(|iv| iv.lo)
    }
}

/// Scans the single axis of `spec` (its grid values, sorted) and returns the
/// maximal intervals with concurrence above `threshold`, endpoints refined
/// by bisection.
pub fn detect_revival(spec: &SweepSpec, threshold: f64) -> Result<RevivalReport> {
    detect_revival_with(spec, &ScanOptions { threshold, ..ScanOptions::default() })
}

pub fn detect_revival_with(spec: &SweepSpec, opts: &ScanOptions) -> Result<RevivalReport> {
    spec.validate()?;
    if spec.axis2.is_some() {
        return Err(invalid("revival detection needs a one-dimensional sweep"));
    }
    if opts.threshold.is_nan() || opts.threshold < 0.0 {
        return Err(invalid(format!("threshold must be non-negative, got {}", opts.threshold)));
    }
    let mut grid = spec.axis1.values.clone();
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    let probe = |x: f64| -> Result<Probe> {
        let (p, t) = spec.params_at(x, None);
        let concurrence = evaluate_point(&p, t)?;
        let gap = if t > 0.0 {
            Some(family_gap(&p, Temperature::new(t)?)?)
        } else {
            ground_state_concurrence_x(&p)?;
            None
        };
        Ok(Probe { concurrence, gap })
    };
    Ok(RevivalReport {
        param: spec.axis1.param,
        threshold: opts.threshold,
        intervals: scan_intervals(&grid, &probe, opts)?,
    })
}
