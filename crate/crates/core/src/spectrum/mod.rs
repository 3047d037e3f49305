//! Eigen-decompositions of the two Hamiltonian variants.
//!
//! The analytic routes build eigenpairs from closed-form energies and mixing
//! angles; [`hermitian_eigensolve`] is a general numeric solver used as an
//! independent cross-check.

pub mod jacobi;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::{self, Vec4, ZERO};
use crate::model::{Axis, HermitianMatrix4, ModelParams};

/// Four real eigenvalues in ascending order, each paired with a unit eigenvector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem {
    pub eigenvalues: [f64; 4],
    pub eigenvectors: [Vec4; 4],
}

impl EigenSystem {
    /// Sorts pairs by ascending energy. The sort is stable, so ties keep the
    /// order in which the pairs were supplied.
    pub fn from_pairs(pairs: [(f64, Vec4); 4]) -> Self {
        let mut pairs = pairs;
        // numeric comparison so that -0.0 and 0.0 count as a tie
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
        Self {
            eigenvalues: pairs.map(|p| p.0),
            eigenvectors: pairs.map(|p| p.1),
        }
    }

    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// `max_i ‖H v_i − E_i v_i‖₂`.
    pub fn max_residual(&self, h: &HermitianMatrix4) -> f64 {
        self.eigenvalues
            .iter()
            .zip(&self.eigenvectors)
            .map(|(e, v)| {
                let hv = linalg::mat_vec(h.entries(), v);
                let r: Vec4 = std::array::from_fn(|k| hv[k] - v[k] * *e);
                linalg::vec_norm(&r)
            })
            .fold(0.0, f64::max)
    }

    /// `max_ij |⟨v_i|v_j⟩ − δ_ij|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..4 {
            for j in 0..4 {
                let target = if i == j { 1.0 } else { 0.0 };
                let g = linalg::inner(&self.eigenvectors[i], &self.eigenvectors[j]);
                worst = worst.max((g - target).norm());
            }
        }
        worst
    }
}

/// Numeric eigen-decomposition by cyclic complex Jacobi rotations.
pub fn hermitian_eigensolve(h: &HermitianMatrix4) -> Result<EigenSystem> {
    let (values, vectors) = jacobi::eigh(h.entries())?;
    Ok(EigenSystem {
        eigenvalues: values,
        eigenvectors: std::array::from_fn(|k| std::array::from_fn(|row| vectors[row][k])),
    })
}

/// Closed-form energies and mixing angles of the z-axis variant.
///
/// Eigenvectors: `sinθ₁,₂|00⟩ + cosθ₁,₂|11⟩` with energies `J_z ± w₁`, and
/// `sinθ₃,₄|01⟩ + χ cosθ₃,₄|10⟩` with energies `−J_z ± w₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZAngles {
    pub w1: f64,
    pub w2: f64,
    pub theta: [f64; 4],
    pub chi: Complex64,
}

impl ZAngles {
    pub fn new(p: &ModelParams) -> Result<Self> {
        p.expect_axis(Axis::Z)?;
        let c = p.couplings;
        let f = p.fields;
        let delta = c.j_x - c.j_y;
        let w1 = (2.0 * f.b_uniform).hypot(delta);
        let g = (c.j_x + c.j_y).hypot(2.0 * f.d);
        let w2 = (2.0 * f.b_nonuniform).hypot(g);
        // Bell pair when the 2×2 block is degenerate
        let gamma1 = if w1 == 0.0 { FRAC_PI_2 } else { delta.atan2(2.0 * f.b_uniform) };
        let gamma2 = if w2 == 0.0 { FRAC_PI_2 } else { g.atan2(2.0 * f.b_nonuniform) };
        let chi = if g == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(c.j_x + c.j_y, -2.0 * f.d) / g
        };
        Ok(Self {
            w1,
            w2,
            theta: [
                FRAC_PI_2 - 0.5 * gamma1,
                -0.5 * gamma1,
                FRAC_PI_2 - 0.5 * gamma2,
                -0.5 * gamma2,
            ],
            chi,
        })
    }

    pub fn energies(&self, j_z: f64) -> [f64; 4] {
        [j_z + self.w1, j_z - self.w1, -j_z + self.w2, -j_z - self.w2]
    }

    pub fn vectors(&self) -> [Vec4; 4] {
        let r = |x: f64| Complex64::new(x, 0.0);
        let [t1, t2, t3, t4] = self.theta;
        [
            [r(t1.sin()), ZERO, ZERO, r(t1.cos())],
            [r(t2.sin()), ZERO, ZERO, r(t2.cos())],
            [ZERO, r(t3.sin()), self.chi * t3.cos(), ZERO],
            [ZERO, r(t4.sin()), self.chi * t4.cos(), ZERO],
        ]
    }
}

/// Closed-form energies and mixing angles of the x-axis variant.
///
/// Eigenvectors: `(sinφ|00⟩ + cosφ|01⟩ + cosφ|10⟩ + sinφ|11⟩)/√2` for
/// `φ₁,₂` with energies `J_x ± w₁′`, and
/// `(sinφ|00⟩ + χ′cosφ|01⟩ − χ′cosφ|10⟩ − sinφ|11⟩)/√2` for `φ₃,₄` with
/// energies `−J_x ± w₂′`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XAngles {
    pub w1: f64,
    pub w2: f64,
    pub phi: [f64; 4],
    pub chi: Complex64,
}

impl XAngles {
    pub fn new(p: &ModelParams) -> Result<Self> {
        p.expect_axis(Axis::X)?;
        let c = p.couplings;
        let f = p.fields;
        let delta = c.j_y - c.j_z;
        let sigma = c.j_y + c.j_z;
        let w1 = (2.0 * f.b_uniform).hypot(delta);
        let r = f.b_nonuniform.hypot(f.d);
        let w2 = (2.0 * r).hypot(sigma);
        // atan2(0, 0) = 0 already selects the Bell-type pair
        let alpha = (2.0 * f.b_uniform).atan2(delta);
        let beta = (2.0 * r).atan2(sigma);
        // limit b → 0⁺ at D = 0
        let chi = if r == 0.0 {
            Complex64::new(-1.0, 0.0)
        } else {
            Complex64::new(-f.b_nonuniform, -f.d) / r
        };
        Ok(Self {
            w1,
            w2,
            phi: [
                0.5 * alpha,
                0.5 * alpha + FRAC_PI_2,
                FRAC_PI_2 - 0.5 * beta,
                -0.5 * beta,
            ],
            chi,
        })
    }

    pub fn energies(&self, j_x: f64) -> [f64; 4] {
        [j_x + self.w1, j_x - self.w1, -j_x + self.w2, -j_x - self.w2]
    }

    pub fn vectors(&self) -> [Vec4; 4] {
        let h = FRAC_1_SQRT_2;
        let r = |x: f64| Complex64::new(x * h, 0.0);
        let [p1, p2, p3, p4] = self.phi;
        let sym = |phi: f64| [r(phi.sin()), r(phi.cos()), r(phi.cos()), r(phi.sin())];
        let anti = |phi: f64| {
            let cc = self.chi * (phi.cos() * h);
            [r(phi.sin()), cc, -cc, r(-phi.sin())]
        };
        [sym(p1), sym(p2), anti(p3), anti(p4)]
    }
}

pub fn analytic_spectrum_z(p: &ModelParams) -> Result<EigenSystem> {
    let a = ZAngles::new(p)?;
    let e = a.energies(p.couplings.j_z);
    let v = a.vectors();
    Ok(EigenSystem::from_pairs(std::array::from_fn(|k| (e[k], v[k]))))
}

pub fn analytic_spectrum_x(p: &ModelParams) -> Result<EigenSystem> {
    let a = XAngles::new(p)?;
    let e = a.energies(p.couplings.j_x);
    let v = a.vectors();
    Ok(EigenSystem::from_pairs(std::array::from_fn(|k| (e[k], v[k]))))
}

pub fn analytic_spectrum(p: &ModelParams) -> Result<EigenSystem> {
    match p.axis() {
        Axis::Z => analytic_spectrum_z(p),
        Axis::X => analytic_spectrum_x(p),
    }
}
