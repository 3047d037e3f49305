//! Gibbs states `ρ(T) = exp(−H/T)/Z` with `k_B = 1`.
//!
//! Boltzmann factors are always formed from energies shifted by the ground
//! energy, so nothing overflows at low temperature.

use num_complex::Complex64;

use crate::error::{domain, invalid, Result};
use crate::linalg::{self, Mat4, Vec4};
use crate::model::ModelParams;
use crate::spectrum::{jacobi, EigenSystem, XAngles};

/// Dimensionless temperature. Zero is a valid value and selects ground-state
/// operations; thermal operations reject it.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature(f64);

impl Temperature {
    pub fn new(t: f64) -> Result<Self> {
        if t.is_finite() && t >= 0.0 {
            Ok(Self(t))
        } else {
            Err(domain(format!("temperature must be finite and non-negative, got {t}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    pub(crate) fn positive(self) -> Result<f64> {
        if self.0 > 0.0 {
            Ok(self.0)
        } else {
            Err(domain("thermal operations need T > 0; use the ground-state path at T = 0"))
        }
    }
}

/// `Z = shifted · exp(−e_min/T)` where `shifted = Σ exp(−(E_i − e_min)/T) ∈ [1, 4]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionFunction {
    pub shifted: f64,
    pub e_min: f64,
    pub temperature: f64,
}

impl PartitionFunction {
    pub fn ln(&self) -> f64 {
        self.shifted.ln() - self.e_min / self.temperature
    }

    /// May overflow to infinity for very low temperatures; prefer [`Self::ln`].
    pub fn value(&self) -> f64 {
        self.ln().exp()
    }
}

pub fn partition_function(es: &EigenSystem, t: Temperature) -> Result<PartitionFunction> {
    let t = t.positive()?;
    let e_min = es.ground_energy();
    let shifted = es.eigenvalues.iter().map(|e| (-(e - e_min) / t).exp()).sum();
    Ok(PartitionFunction {
        shifted,
        e_min,
        temperature: t,
    })
}

/// Normalized occupation probabilities of each eigenvector.
pub fn boltzmann_weights(es: &EigenSystem, t: Temperature) -> Result<[f64; 4]> {
    let z = partition_function(es, t)?;
    Ok(es
        .eigenvalues
        .map(|e| (-(e - z.e_min) / z.temperature).exp() / z.shifted))
}

/// Positive semidefinite, unit-trace 4×4 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4(Mat4);

impl DensityMatrix4 {
    pub const HERMITIAN_TOL: f64 = 1e-13;
    pub const TRACE_TOL: f64 = 1e-12;
    pub const PSD_TOL: f64 = 1e-12;

    pub fn new(entries: Mat4) -> Result<Self> {
        let defect = linalg::hermitian_defect(&entries);
        if !defect.is_finite() || defect > Self::HERMITIAN_TOL {
            return Err(invalid(format!("density matrix not Hermitian (defect {defect:.3e})")));
        }
        let tr = linalg::trace(&entries).re;
        if (tr - 1.0).abs() > Self::TRACE_TOL {
            return Err(domain(format!("density matrix trace {tr} ≠ 1")));
        }
        let rho = Self(entries);
        let min = rho.min_eigenvalue()?;
        if min < -Self::PSD_TOL {
            return Err(domain(format!("density matrix has negative eigenvalue {min:.3e}")));
        }
        Ok(rho)
    }

    pub(crate) const fn from_raw(entries: Mat4) -> Self {
        Self(entries)
    }

    /// `|ψ⟩⟨ψ|` for amplitudes normalized within 1e-10.
    pub fn from_pure(amplitudes: Vec4) -> Result<Self> {
        let norm2 = linalg::vec_norm(&amplitudes).powi(2);
        if (norm2 - 1.0).abs() > 1e-10 {
            return Err(domain(format!("state vector is not normalized (|ψ|² = {norm2})")));
        }
        Ok(Self(linalg::outer_weighted(&amplitudes, 1.0)))
    }

    pub fn maximally_mixed() -> Self {
        Self(linalg::scale(&linalg::identity::<4>(), Complex64::new(0.25, 0.0)))
    }

    /// Convex combination `Σ w_k |v_k⟩⟨v_k|`.
    pub fn mixture(weights: &[f64], vectors: &[Vec4]) -> Result<Self> {
        let mut m = linalg::zeros::<4>();
        for (w, v) in weights.iter().zip(vectors) {
            m = linalg::add(&m, &linalg::outer_weighted(v, *w));
        }
        Self::new(m)
    }

    pub fn entries(&self) -> &Mat4 {
        &self.0
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[row][col]
    }

    pub fn trace(&self) -> f64 {
        linalg::trace(&self.0).re
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        linalg::trace(&linalg::matmul(&self.0, &self.0)).re
    }

    pub fn eigenvalues(&self) -> Result<[f64; 4]> {
        Ok(jacobi::eigh(&self.0)?.0)
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(self.eigenvalues()?[0])
    }
}

/// `Σ_i w_i |v_i⟩⟨v_i|` with shifted Boltzmann weights.
pub fn gibbs_state(es: &EigenSystem, t: Temperature) -> Result<DensityMatrix4> {
    let w = boltzmann_weights(es, t)?;
    let mut m = linalg::zeros::<4>();
    for (wi, v) in w.iter().zip(&es.eigenvectors) {
        m = linalg::add(&m, &linalg::outer_weighted(v, *wi));
    }
    Ok(DensityMatrix4::from_raw(m))
}

/// Closed-form entries of the x-axis thermal state,
///
/// ```text
///  U1   Q1*  Q2*  U2
///  Q1   V1   V2   Q2
///  Q2   V2   V1   Q1
///  U2   Q2*  Q1*  U1
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XThermalEntries {
    pub u1: f64,
    pub u2: f64,
    pub v1: f64,
    pub v2: f64,
    pub q1: Complex64,
    pub q2: Complex64,
}

impl XThermalEntries {
    pub fn to_matrix(&self) -> Mat4 {
        let r = |x: f64| Complex64::new(x, 0.0);
        let Self { u1, u2, v1, v2, q1, q2 } = *self;
        [
            [r(u1), q1.conj(), q2.conj(), r(u2)],
            [q1, r(v1), r(v2), q2],
            [q2, r(v2), r(v1), q1],
            [r(u2), q2.conj(), q1.conj(), r(u1)],
        ]
    }
}

/// Builds the x-axis thermal state entry by entry from the mixing angles and
/// energies, without forming projectors.
pub fn x_thermal_entries(p: &ModelParams, t: Temperature) -> Result<XThermalEntries> {
    let t = t.positive()?;
    let a = XAngles::new(p)?;
    let e = a.energies(p.couplings.j_x);
    let e_min = e.iter().copied().fold(f64::INFINITY, f64::min);
    let boltz = e.map(|ei| (-(ei - e_min) / t).exp());
    let z: f64 = boltz.iter().sum();
    let w = boltz.map(|b| b / (2.0 * z));
    let [s1, s2, s3, s4] = a.phi.map(f64::sin);
    let [c1, c2, c3, c4] = a.phi.map(f64::cos);
    let sym_u = w[0] * s1 * s1 + w[1] * s2 * s2;
    let anti_u = w[2] * s3 * s3 + w[3] * s4 * s4;
    let sym_v = w[0] * c1 * c1 + w[1] * c2 * c2;
    let anti_v = w[2] * c3 * c3 + w[3] * c4 * c4;
    let sym_q = w[0] * s1 * c1 + w[1] * s2 * c2;
    let anti_q = a.chi * (w[2] * s3 * c3 + w[3] * s4 * c4);
    Ok(XThermalEntries {
        u1: sym_u + anti_u,
        u2: sym_u - anti_u,
        v1: sym_v + anti_v,
        v2: sym_v - anti_v,
        q1: anti_q + sym_q,
        q2: -anti_q + sym_q,
    })
}
