//! Zero-temperature concurrence of the x-axis variant.
//!
//! The ground level is `J_x − w₁′` (state ψ₂) or `−J_x − w₂′` (state ψ₄);
//! the two cross on the surface `J_x = (w₁′ − w₂′)/2`.

use crate::error::Result;
use crate::model::{Axis, ModelParams};
use crate::spectrum::{analytic_spectrum_x, XAngles};
use crate::thermal::DensityMatrix4;

use super::{concurrence_mixed, Concurrence};

/// Relative width of the level-crossing surface.
pub const CRITICAL_REL_TOL: f64 = 1e-12;
/// Below this `w` the closed form is 0/0 and the limit state is used.
pub const DEGENERATE_W: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroundBranch {
    /// `J_x < (w₁′ − w₂′)/2`, ground state ψ₂.
    Lower,
    /// Level crossing, ground state `(ψ₂ + ψ₄)/√2`.
    Critical,
    /// `J_x > (w₁′ − w₂′)/2`, ground state ψ₄.
    Upper,
}

fn branch_of(p: &ModelParams, a: &XAngles) -> GroundBranch {
    let j = p.couplings.j_x;
    let diff = j - 0.5 * (a.w1 - a.w2);
    let scale = 1f64.max(j.abs()).max(a.w1).max(a.w2);
    if diff.abs() <= CRITICAL_REL_TOL * scale {
        GroundBranch::Critical
    } else if diff < 0.0 {
        GroundBranch::Lower
    } else {
        GroundBranch::Upper
    }
}

pub fn ground_branch_x(p: &ModelParams) -> Result<GroundBranch> {
    let a = XAngles::new(p)?;
    Ok(branch_of(p, &a))
}

/// `T → 0⁺` limit of the Gibbs state: the uniform mixture over every
/// eigenvector within rounding of the ground energy.
pub fn ground_state_x(p: &ModelParams) -> Result<DensityMatrix4> {
    let es = analytic_spectrum_x(p)?;
    let e0 = es.ground_energy();
    let scale = es.eigenvalues.iter().fold(1f64, |m, e| m.max(e.abs()));
    let n = es
        .eigenvalues
        .iter()
        .take_while(|e| **e - e0 <= CRITICAL_REL_TOL * scale)
        .count();
    let w = vec![1.0 / n as f64; n];
    DensityMatrix4::mixture(&w, &es.eigenvectors[..n])
}

/// Three-branch ground-state concurrence. Where a closed form is 0/0
/// (`w₁′ = 0` or `w₂′ = 0` on the relevant branch) the concurrence of
/// [`ground_state_x`] is returned instead.
pub fn ground_state_concurrence_x(p: &ModelParams) -> Result<Concurrence> {
    p.expect_axis(Axis::X)?;
    let a = XAngles::new(p)?;
    let c = p.couplings;
    let (d, b) = (p.fields.d, p.fields.b_nonuniform);
    let (diff, sum) = (c.j_y - c.j_z, c.j_y + c.j_z);
    let branch = branch_of(p, &a);
    let degenerate = match branch {
        GroundBranch::Lower => a.w1 < DEGENERATE_W,
        GroundBranch::Upper => a.w2 < DEGENERATE_W,
        GroundBranch::Critical => a.w1 < DEGENERATE_W || a.w2 < DEGENERATE_W,
    };
    if degenerate {
        return concurrence_mixed(&ground_state_x(p)?);
    }
    let value = match branch {
        GroundBranch::Lower => diff.abs() / a.w1,
        GroundBranch::Upper => (4.0 * d * d + sum * sum).sqrt() / a.w2,
        GroundBranch::Critical => {
            let r2 = b * b + d * d;
            let cross = if r2 == 0.0 {
                0.0
            } else {
                2.0 * d * d * diff * (a.w2 + sum) / (r2 * a.w1 * a.w2)
            };
            let lead = diff / a.w1 + sum / a.w2;
            0.5 * (lead * lead + 4.0 * d * d / (a.w2 * a.w2) - cross).abs().sqrt()
        }
    };
    Ok(Concurrence::clamped(value))
}
