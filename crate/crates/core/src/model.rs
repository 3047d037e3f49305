//! Parameter space and Hamiltonian assembly.
//!
//! Two variants share one parameter type: the DM vector and both magnetic
//! fields point along z ([`Axis::Z`]) or along x ([`Axis::X`]). Matrices are
//! written in the basis `|00⟩, |01⟩, |10⟩, |11⟩` with qubit 1 as the left
//! tensor factor.

use std::fmt;

use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::linalg::{self, pauli, Mat4, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Z,
    X,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Z => f.write_str("z"),
            Axis::X => f.write_str("x"),
        }
    }
}

impl std::str::FromStr for Axis {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "z" => Ok(Axis::Z),
            "x" => Ok(Axis::X),
            other => Err(invalid(format!("unknown axis '{other}' (expected 'z' or 'x')"))),
        }
    }
}

/// Spin-spin exchange couplings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingTriple {
    pub j_x: f64,
    pub j_y: f64,
    pub j_z: f64,
}

impl CouplingTriple {
    pub const fn new(j_x: f64, j_y: f64, j_z: f64) -> Self {
        Self { j_x, j_y, j_z }
    }

    pub fn is_finite(&self) -> bool {
        self.j_x.is_finite() && self.j_y.is_finite() && self.j_z.is_finite()
    }
}

/// DM strength plus uniform and nonuniform field, all along `axis`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisFields {
    pub axis: Axis,
    pub d: f64,
    pub b_uniform: f64,
    pub b_nonuniform: f64,
}

impl AxisFields {
    pub const fn new(axis: Axis, d: f64, b_uniform: f64, b_nonuniform: f64) -> Self {
        Self {
            axis,
            d,
            b_uniform,
            b_nonuniform,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.d.is_finite() && self.b_uniform.is_finite() && self.b_nonuniform.is_finite()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub couplings: CouplingTriple,
    pub fields: AxisFields,
}

impl ModelParams {
    pub const fn new(couplings: CouplingTriple, fields: AxisFields) -> Self {
        Self { couplings, fields }
    }

    /// z-axis variant with couplings `(j_x, j_y, j_z)`, DM strength `d`,
    /// uniform field `b_uniform` and nonuniform field `b_nonuniform`.
    pub const fn z(j_x: f64, j_y: f64, j_z: f64, d: f64, b_uniform: f64, b_nonuniform: f64) -> Self {
        Self::new(
            CouplingTriple::new(j_x, j_y, j_z),
            AxisFields::new(Axis::Z, d, b_uniform, b_nonuniform),
        )
    }

    /// x-axis variant, same argument order as [`ModelParams::z`].
    pub const fn x(j_x: f64, j_y: f64, j_z: f64, d: f64, b_uniform: f64, b_nonuniform: f64) -> Self {
        Self::new(
            CouplingTriple::new(j_x, j_y, j_z),
            AxisFields::new(Axis::X, d, b_uniform, b_nonuniform),
        )
    }

    pub fn axis(&self) -> Axis {
        self.fields.axis
    }

    pub fn with_axis(mut self, axis: Axis) -> Self {
        self.fields.axis = axis;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.couplings.is_finite() && self.fields.is_finite() {
            Ok(())
        } else {
            Err(invalid(format!("non-finite model parameters: {self:?}")))
        }
    }

    pub(crate) fn expect_axis(&self, axis: Axis) -> Result<()> {
        self.validate()?;
        if self.fields.axis == axis {
            Ok(())
        } else {
            Err(invalid(format!(
                "operation requires the {axis}-axis model, got the {}-axis model",
                self.fields.axis
            )))
        }
    }
}

/// Mean YZ coupling `J = (J_y + J_z)/2` and partial anisotropy
/// `Δ = (J_y − J_z)/(J_y + J_z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanAnisotropy {
    pub j_mean: f64,
    pub delta: f64,
}

impl MeanAnisotropy {
    pub const fn new(j_mean: f64, delta: f64) -> Self {
        Self { j_mean, delta }
    }

    /// Inverse of [`couplings_from_mean_anisotropy`]; `None` when `J_y + J_z = 0`.
    pub fn from_couplings(j_y: f64, j_z: f64) -> Option<Self> {
        let sum = j_y + j_z;
        if sum == 0.0 {
            return None;
        }
        Some(Self {
            j_mean: 0.5 * sum,
            delta: (j_y - j_z) / sum,
        })
    }
}

/// Returns `(J_y, J_z) = (J(1+Δ), J(1−Δ))`.
pub fn couplings_from_mean_anisotropy(m: MeanAnisotropy) -> (f64, f64) {
    (m.j_mean * (1.0 + m.delta), m.j_mean * (1.0 - m.delta))
}

/// 4×4 complex Hermitian matrix in the two-qubit computational basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix4(Mat4);

impl HermitianMatrix4 {
    /// Tolerance on `|a_ij − conj(a_ji)|`, relative to `max(1, ‖a‖_F)`.
    pub const TOLERANCE: f64 = 1e-12;

    pub fn new(entries: Mat4) -> Result<Self> {
        if entries.iter().flatten().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(invalid("matrix has non-finite entries"));
        }
        let defect = linalg::hermitian_defect(&entries);
        let scale = linalg::frobenius_norm(&entries).max(1.0);
        if defect > Self::TOLERANCE * scale {
            return Err(invalid(format!("matrix is not Hermitian (defect {defect:.3e})")));
        }
        Ok(Self(entries))
    }

    pub(crate) const fn from_raw(entries: Mat4) -> Self {
        Self(entries)
    }

    pub fn zero() -> Self {
        Self(linalg::zeros())
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

    pub fn frobenius_norm(&self) -> f64 {
        linalg::frobenius_norm(&self.0)
    }
}

/// Hamiltonian of the z-axis variant, assembled from Pauli tensor products.
pub fn build_hamiltonian_z(p: &ModelParams) -> Result<HermitianMatrix4> {
    p.expect_axis(Axis::Z)?;
    let CouplingTriple { j_x, j_y, j_z } = p.couplings;
    let AxisFields {
        d,
        b_uniform: b,
        b_nonuniform: bn,
        ..
    } = p.fields;
    let dm = linalg::sub(&linalg::kron2(&pauli::X, &pauli::Y), &linalg::kron2(&pauli::Y, &pauli::X));
    let terms = [
        (j_x, linalg::kron2(&pauli::X, &pauli::X)),
        (j_y, linalg::kron2(&pauli::Y, &pauli::Y)),
        (j_z, linalg::kron2(&pauli::Z, &pauli::Z)),
        (d, dm),
        (b + bn, linalg::kron2(&pauli::Z, &pauli::ID)),
        (b - bn, linalg::kron2(&pauli::ID, &pauli::Z)),
    ];
    Ok(HermitianMatrix4::from_raw(sum_terms(&terms)))
}

/// Hamiltonian of the x-axis variant in its closed 4×4 layout.
///
/// ```text
///  J_z      G2       G3       J_x−J_y
///  G4      −J_z      J_x+J_y  G1
///  G1       J_x+J_y −J_z      G4
///  J_x−J_y  G3       G2       J_z
/// ```
/// with `G1,2 = iD + B ± b` and `G3,4 = −iD + B ± b`.
pub fn build_hamiltonian_x(p: &ModelParams) -> Result<HermitianMatrix4> {
    p.expect_axis(Axis::X)?;
    let CouplingTriple { j_x, j_y, j_z } = p.couplings;
    let AxisFields {
        d,
        b_uniform: b,
        b_nonuniform: bn,
        ..
    } = p.fields;
    let c = |re: f64| Complex64::new(re, 0.0);
    let g1 = Complex64::new(b + bn, d);
    let g2 = Complex64::new(b - bn, d);
    let g3 = Complex64::new(b + bn, -d);
    let g4 = Complex64::new(b - bn, -d);
    let m = [
        [c(j_z), g2, g3, c(j_x - j_y)],
        [g4, c(-j_z), c(j_x + j_y), g1],
        [g1, c(j_x + j_y), c(-j_z), g4],
        [c(j_x - j_y), g3, g2, c(j_z)],
    ];
    Ok(HermitianMatrix4::from_raw(m))
}

/// Dispatches on the axis tag.
pub fn build_hamiltonian(p: &ModelParams) -> Result<HermitianMatrix4> {
    match p.axis() {
        Axis::Z => build_hamiltonian_z(p),
        Axis::X => build_hamiltonian_x(p),
    }
}

fn sum_terms(terms: &[(f64, Mat4)]) -> Mat4 {
    let mut out = [[ZERO; 4]; 4];
    for (coef, op) in terms {
        if *coef == 0.0 {
            continue;
        }
        out = linalg::add(&out, &linalg::scale(op, Complex64::new(*coef, 0.0)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Operator-sum assembly of the x-axis Hamiltonian, written independently
    /// of `build_hamiltonian_x`.
    fn x_operator_sum(p: &ModelParams) -> Mat4 {
        let k = linalg::kron2;
        let CouplingTriple { j_x, j_y, j_z } = p.couplings;
        let (d, b, bn) = (p.fields.d, p.fields.b_uniform, p.fields.b_nonuniform);
        let dm = linalg::sub(&k(&pauli::Y, &pauli::Z), &k(&pauli::Z, &pauli::Y));
        sum_terms(&[
            (j_x, k(&pauli::X, &pauli::X)),
            (j_y, k(&pauli::Y, &pauli::Y)),
            (j_z, k(&pauli::Z, &pauli::Z)),
            (d, dm),
            (b + bn, k(&pauli::X, &pauli::ID)),
            (b - bn, k(&pauli::ID, &pauli::X)),
        ])
    }

    fn max_diff(a: &Mat4, b: &Mat4) -> f64 {
        a.iter()
            .flatten()
            .zip(b.iter().flatten())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn mean_anisotropy_examples() {
        let (jy, jz) = couplings_from_mean_anisotropy(MeanAnisotropy::new(0.5, 0.8));
        assert!((jy - 0.9).abs() < 1e-15 && (jz - 0.1).abs() < 1e-15);
        assert_eq!(couplings_from_mean_anisotropy(MeanAnisotropy::new(0.0, 12.5)), (0.0, 0.0));
        let (jy, jz) = couplings_from_mean_anisotropy(MeanAnisotropy::new(0.35, 3.0 / 7.0));
        assert!((jy - 0.5).abs() < 1e-15 && (jz - 0.2).abs() < 1e-15);
    }

    #[test]
    fn zero_params_give_zero_matrices() {
        let z = build_hamiltonian_z(&ModelParams::z(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)).unwrap();
        let x = build_hamiltonian_x(&ModelParams::x(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(z, HermitianMatrix4::zero());
        assert_eq!(x, HermitianMatrix4::zero());
    }

    #[test]
    fn zz_coupling_only() {
        let h = build_hamiltonian_z(&ModelParams::z(0.0, 0.0, 1.0, 0.0, 0.0, 0.0)).unwrap();
        let expected = linalg::kron2(&pauli::Z, &pauli::Z);
        assert_eq!(h.entries(), &expected);
    }

    #[test]
    fn z_hamiltonian_layout() {
        let h = build_hamiltonian_z(&ModelParams::z(1.0, 0.5, 0.2, 0.3, 0.5, 0.1)).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| h.get(i, i).re).collect();
        for (got, want) in diag.iter().zip([1.2, 0.0, -0.4, -0.8]) {
            assert!((got - want).abs() < 1e-14, "{diag:?}");
        }
        // the only off-diagonal couplings: |00⟩↔|11⟩ and |01⟩↔|10⟩
        assert!((h.get(0, 3) - c(0.5, 0.0)).norm() < 1e-14);
        assert!((h.get(1, 2) - c(1.5, 0.6)).norm() < 1e-14);
        assert!((h.get(2, 1) - c(1.5, -0.6)).norm() < 1e-14);
        assert_eq!(h.get(0, 1), ZERO);
    }

    #[test]
    fn x_hamiltonian_layout() {
        let p = ModelParams::x(1.0, 0.5, 0.2, 1.0, 2.0, 0.5);
        let h = build_hamiltonian_x(&p).unwrap();
        let (g1, g2, g3, g4) = (c(2.5, 1.0), c(1.5, 1.0), c(2.5, -1.0), c(1.5, -1.0));
        let expected = [
            [c(0.2, 0.0), g2, g3, c(0.5, 0.0)],
            [g4, c(-0.2, 0.0), c(1.5, 0.0), g1],
            [g1, c(1.5, 0.0), c(-0.2, 0.0), g4],
            [c(0.5, 0.0), g3, g2, c(0.2, 0.0)],
        ];
        assert!(max_diff(h.entries(), &expected) < 1e-15);
        assert!(max_diff(h.entries(), &x_operator_sum(&p)) < 1e-14);
    }

    #[test]
    fn axis_mismatch_is_rejected() {
        let px = ModelParams::x(1.0, 0.5, 0.2, 0.0, 0.0, 0.0);
        assert!(matches!(build_hamiltonian_z(&px), Err(crate::Error::InvalidArgument(_))));
        assert!(matches!(
            build_hamiltonian_x(&px.with_axis(Axis::Z)),
            Err(crate::Error::InvalidArgument(_))
        ));
        let bad = ModelParams::x(f64::NAN, 0.0, 0.0, 0.0, 0.0, 0.0);
        assert!(build_hamiltonian_x(&bad).is_err());
    }

    #[test]
    fn hermitian_constructor_rejects_asymmetric() {
        let mut m = linalg::zeros::<4>();
        m[0][1] = c(1.0, 0.0);
        assert!(HermitianMatrix4::new(m).is_err());
        m[1][0] = c(1.0, 0.0);
        assert!(HermitianMatrix4::new(m).is_ok());
    }

    fn params() -> impl Strategy<Value = [f64; 6]> {
        prop::array::uniform6(-3.0..3.0f64)
    }

    proptest! {
        #[test]
        fn closed_layout_matches_operator_sum(v in params()) {
            let p = ModelParams::x(v[0], v[1], v[2], v[3], v[4], v[5]);
            let h = build_hamiltonian_x(&p).unwrap();
            prop_assert!(max_diff(h.entries(), &x_operator_sum(&p)) <= 1e-14);
        }

        #[test]
        fn builders_are_hermitian_and_traceless(v in params()) {
            for p in [ModelParams::z(v[0], v[1], v[2], v[3], v[4], v[5]),
                      ModelParams::x(v[0], v[1], v[2], v[3], v[4], v[5])] {
                let h = build_hamiltonian(&p).unwrap();
                prop_assert!(linalg::hermitian_defect(h.entries()) <= 1e-14);
                prop_assert!(h.trace().abs() <= 1e-14);
            }
        }

        #[test]
        fn mean_anisotropy_round_trip(jy in -3.0..3.0f64, jz in -3.0..3.0f64) {
            prop_assume!((jy + jz).abs() > 1e-3);
            let m = MeanAnisotropy::from_couplings(jy, jz).unwrap();
            let (y, z) = couplings_from_mean_anisotropy(m);
            prop_assert!((y - jy).abs() <= 1e-15 * (1.0 + jy.abs()) * 4.0);
            prop_assert!((z - jz).abs() <= 1e-15 * (1.0 + jz.abs()) * 4.0);
        }
    }
}
