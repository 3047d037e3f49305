//! Wootters concurrence.
//!
//! `C = max(λ₁ − λ₂ − λ₃ − λ₄, 0)` where the λ are the square roots of the
//! eigenvalues of `ρ(σʸ⊗σʸ)ρ*(σʸ⊗σʸ)`, sorted descending.

mod closed_form;
mod ground;

pub use closed_form::{
    closed_form_families_x, closed_form_families_z, closed_form_lambdas,
    closed_form_lambdas_x, closed_form_lambdas_z, closed_form_ln_partition, family_gap,
    thermal_concurrence, LambdaFamilies,
};
pub use ground::{ground_branch_x, ground_state_concurrence_x, ground_state_x, GroundBranch};

use crate::error::{domain, Result};
use crate::linalg::{self, pauli, Mat, Mat4, Vec4};
use crate::model::{build_hamiltonian, ModelParams};
use crate::spectrum::{hermitian_eigensolve, jacobi};
use crate::thermal::{gibbs_state, DensityMatrix4, Temperature};

/// Four non-negative values sorted descending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaQuadruple([f64; 4]);

impl LambdaQuadruple {
    pub const CLAMP_TOL: f64 = 1e-12;

    /// Sorts descending; values in `[−1e-12, 0)` are clamped to 0.
    pub fn new(values: [f64; 4]) -> Result<Self> {
        if let Some(bad) = values.iter().find(|v| !v.is_finite() || **v < -Self::CLAMP_TOL) {
            return Err(domain(format!("invalid λ value {bad}")));
        }
        let mut v = values.map(|x| x.max(0.0));
        v.sort_by(|a, b| b.total_cmp(a));
        Ok(Self(v))
    }

    pub fn values(&self) -> [f64; 4] {
        self.0
    }

    pub fn concurrence(&self) -> Concurrence {
        let [a, b, c, d] = self.0;
        Concurrence::clamped(a - b - c - d)
    }
}

/// Concurrence in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Concurrence(f64);

impl Concurrence {
    pub const ZERO: Self = Self(0.0);

    pub(crate) fn clamped(c: f64) -> Self {
        debug_assert!(c <= 1.0 + 1e-12, "concurrence {c} exceeds 1");
        Self(c.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<Concurrence> for f64 {
    fn from(c: Concurrence) -> f64 {
        c.0
    }
}

/// `2|ad − bc|` for `a|00⟩ + b|01⟩ + c|10⟩ + d|11⟩`.
pub fn concurrence_pure(amplitudes: Vec4) -> Result<Concurrence> {
    let norm2 = linalg::vec_norm(&amplitudes).powi(2);
    if (norm2 - 1.0).abs() > 1e-10 {
        return Err(domain(format!("state vector is not normalized (|ψ|² = {norm2})")));
    }
    let [a, b, c, d] = amplitudes;
    Ok(Concurrence::clamped(2.0 * (a * d - b * c).norm()))
}

fn spin_flip() -> Mat4 {
    linalg::kron2(&pauli::Y, &pauli::Y)
}

/// λ values of an arbitrary density matrix.
///
/// With `ρ = BB†` and `B = V·diag(√p)` from the eigen-decomposition, the
/// eigenvalues of `ρρ̃` are those of `MM†` where `M = B†·S·B*`, so the λ are
/// the singular values of `M`. They are read off the 8×8 Hermitian matrix
/// `[[0, M], [M†, 0]]`, whose eigenvalues are `±σᵢ`.
pub fn wootters_lambdas_oracle(rho: &DensityMatrix4) -> Result<LambdaQuadruple> {
    let (p, v) = jacobi::eigh(rho.entries())?;
    if p[0] < -DensityMatrix4::PSD_TOL {
        return Err(domain(format!("density matrix has negative eigenvalue {:.3e}", p[0])));
    }
    let mut b = v;
    for (k, pk) in p.iter().enumerate() {
        let s = pk.max(0.0).sqrt();
        for row in b.iter_mut() {
            row[k] *= s;
        }
    }
    let m = linalg::matmul(&linalg::matmul(&linalg::adjoint(&b), &spin_flip()), &linalg::conj(&b));
    let m_dag = linalg::adjoint(&m);
    let mut dilation: Mat<8> = linalg::zeros();
    for i in 0..4 {
        for j in 0..4 {
            dilation[i][j + 4] = m[i][j];
            dilation[i + 4][j] = m_dag[i][j];
        }
    }
    let (sigma, _) = jacobi::eigh(&dilation)?;
    LambdaQuadruple::new([sigma[7], sigma[6], sigma[5], sigma[4]])
}

pub fn concurrence_mixed(rho: &DensityMatrix4) -> Result<Concurrence> {
    Ok(wootters_lambdas_oracle(rho)?.concurrence())
}

/// Concurrence by the numeric route alone: Hamiltonian matrix, Jacobi
/// eigen-decomposition, Gibbs state and [`concurrence_mixed`].
pub fn oracle_thermal_concurrence(p: &ModelParams, t: Temperature) -> Result<Concurrence> {
    let es = hermitian_eigensolve(&build_hamiltonian(p)?)?;
    concurrence_mixed(&gibbs_state(&es, t)?)
}

/// `ρ̃ = (σʸ⊗σʸ) ρ* (σʸ⊗σʸ)`.
pub fn spin_flipped(rho: &DensityMatrix4) -> Mat4 {
    let s = spin_flip();
    linalg::matmul(&linalg::matmul(&s, &linalg::conj(rho.entries())), &s)
}
