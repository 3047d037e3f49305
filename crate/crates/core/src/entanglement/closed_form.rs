//! Closed-form λ values of the Gibbs state.
//!
//! Each 2×2 block of the thermal state contributes a pair
//! `λ = P(√(sech²u + G²) ± G)` with `u = w/T`, `G = g·tanh(u)/w` and block
//! weight `P = e^{±J/T}cosh(u)/Z`. The pairs are evaluated without
//! subtracting nearly equal quantities: the smaller root is obtained from
//! the product of the two, which is `P²sech²u`.

use std::f64::consts::LN_2;

use crate::error::Result;
use crate::model::{Axis, ModelParams};
use crate::spectrum::{XAngles, ZAngles};
use crate::thermal::Temperature;

use super::{Concurrence, LambdaQuadruple};

/// λ pairs grouped by the block of the Gibbs state they come from, larger
/// value first. `first` is the block whose energies are `−J ± w₂`, `second`
/// the block with energies `J ± w₁`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaFamilies {
    pub first: [f64; 2],
    pub second: [f64; 2],
}

impl LambdaFamilies {
    pub fn sorted(&self) -> Result<LambdaQuadruple> {
        LambdaQuadruple::new([self.first[0], self.first[1], self.second[0], self.second[1]])
    }

    /// Difference of the two leading values. The concurrence is
    /// `max(|gap| − λ₂ − λ₄, 0)`, so it is zero wherever the gap changes sign.
    pub fn gap(&self) -> f64 {
        self.first[0] - self.second[0]
    }

    pub fn concurrence(&self) -> Result<Concurrence> {
        Ok(self.sorted()?.concurrence())
    }
}

fn ln_cosh(u: f64) -> f64 {
    let a = u.abs();
    a + (-2.0 * a).exp().ln_1p() - LN_2
}

fn sech(u: f64) -> f64 {
    let e = (-u.abs()).exp();
    2.0 * e / (1.0 + e * e)
}

/// `tanh(w/T)/w`, equal to `1/T` at `w = 0`.
fn tanh_over(w: f64, t: f64) -> f64 {
    if w == 0.0 {
        1.0 / t
    } else {
        (w / t).tanh() / w
    }
}

/// Block weights `(P_first, P_second)` and `ln Z`.
fn block_weights(j: f64, w1: f64, w2: f64, t: f64) -> (f64, f64, f64) {
    let la = -j / t + ln_cosh(w1 / t);
    let lb = j / t + ln_cosh(w2 / t);
    let m = la.max(lb);
    let (ea, eb) = ((la - m).exp(), (lb - m).exp());
    let s = ea + eb;
    (eb / (2.0 * s), ea / (2.0 * s), LN_2 + m + s.ln())
}

/// `P(A ± G)` with `A = √(sech²u + G²)`.
fn pair_hypot(p: f64, u: f64, g: f64) -> [f64; 2] {
    let sh = sech(u);
    let sum = sh.hypot(g) + g;
    if sum == 0.0 {
        return [0.0, 0.0];
    }
    [p * sum, p * sh * sh / sum]
}

/// `P√(c ± s)` with `c = sech²u + 2G²` and `s = 2G√(sech²u + G²)`.
fn pair_radical(p: f64, u: f64, g2: f64) -> [f64; 2] {
    let sh2 = sech(u).powi(2);
    let c = sh2 + 2.0 * g2;
    let s = 2.0 * (g2 * (sh2 + g2)).sqrt();
    let big = (c + s).sqrt();
    if big == 0.0 {
        return [0.0, 0.0];
    }
    [p * big, p * sh2 / big]
}

pub fn closed_form_families_z(p: &ModelParams, t: Temperature) -> Result<LambdaFamilies> {
    let a = ZAngles::new(p)?;
    let t = t.positive()?;
    let c = p.couplings;
    let (p_first, p_second, _) = block_weights(c.j_z, a.w1, a.w2, t);
    let g_first = (c.j_x + c.j_y).hypot(2.0 * p.fields.d) * tanh_over(a.w2, t);
    let g_second = (c.j_x - c.j_y).abs() * tanh_over(a.w1, t);
    Ok(LambdaFamilies {
        first: pair_hypot(p_first, a.w2 / t, g_first),
        second: pair_hypot(p_second, a.w1 / t, g_second),
    })
}

pub fn closed_form_families_x(p: &ModelParams, t: Temperature) -> Result<LambdaFamilies> {
    let a = XAngles::new(p)?;
    let t = t.positive()?;
    let c = p.couplings;
    let d = p.fields.d;
    let (p_first, p_second, _) = block_weights(c.j_x, a.w1, a.w2, t);
    let g2_first = (4.0 * d * d + (c.j_y + c.j_z).powi(2)) * tanh_over(a.w2, t).powi(2);
    let g2_second = (c.j_y - c.j_z).powi(2) * tanh_over(a.w1, t).powi(2);
    Ok(LambdaFamilies {
        first: pair_radical(p_first, a.w2 / t, g2_first),
        second: pair_radical(p_second, a.w1 / t, g2_second),
    })
}

pub fn closed_form_lambdas_z(p: &ModelParams, t: Temperature) -> Result<LambdaQuadruple> {
    closed_form_families_z(p, t)?.sorted()
}

pub fn closed_form_lambdas_x(p: &ModelParams, t: Temperature) -> Result<LambdaQuadruple> {
    closed_form_families_x(p, t)?.sorted()
}

pub fn closed_form_lambdas(p: &ModelParams, t: Temperature) -> Result<LambdaQuadruple> {
    families(p, t)?.sorted()
}

fn families(p: &ModelParams, t: Temperature) -> Result<LambdaFamilies> {
    match p.axis() {
        Axis::Z => closed_form_families_z(p, t),
        Axis::X => closed_form_families_x(p, t),
    }
}

/// `ln Z = ln 2[e^{−J/T}cosh(w₁/T) + e^{J/T}cosh(w₂/T)]` with `J = J_z` or `J_x`.
pub fn closed_form_ln_partition(p: &ModelParams, t: Temperature) -> Result<f64> {
    let t_val = t.positive()?;
    let (j, w1, w2) = match p.axis() {
        Axis::Z => {
            let a = ZAngles::new(p)?;
            (p.couplings.j_z, a.w1, a.w2)
        }
        Axis::X => {
            let a = XAngles::new(p)?;
            (p.couplings.j_x, a.w1, a.w2)
        }
    };
    Ok(block_weights(j, w1, w2, t_val).2)
}

/// Thermal concurrence from the closed-form λ values.
pub fn thermal_concurrence(p: &ModelParams, t: Temperature) -> Result<Concurrence> {
    families(p, t)?.concurrence()
}

/// Leading-λ difference between the two blocks; see [`LambdaFamilies::gap`].
pub fn family_gap(p: &ModelParams, t: Temperature) -> Result<f64> {
    Ok(families(p, t)?.gap())
}
