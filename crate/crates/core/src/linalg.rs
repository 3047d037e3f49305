//! Small dense complex matrices stored as fixed-size row-major arrays.

use num_complex::Complex64;

pub type Mat<const N: usize> = [[Complex64; N]; N];
pub type Mat4 = Mat<4>;
pub type Vec4 = [Complex64; 4];

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn zeros<const N: usize>() -> Mat<N> {
    [[ZERO; N]; N]
}

pub fn identity<const N: usize>() -> Mat<N> {
    let mut m = zeros::<N>();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = ONE;
    }
    m
}

pub fn matmul<const N: usize>(a: &Mat<N>, b: &Mat<N>) -> Mat<N> {
    let mut out = zeros::<N>();
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            if aik == ZERO {
                continue;
            }
            for j in 0..N {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn adjoint<const N: usize>(a: &Mat<N>) -> Mat<N> {
    let mut out = zeros::<N>();
    for i in 0..N {
        for j in 0..N {
            out[j][i] = a[i][j].conj();
        }
    }
    out
}

pub fn conj<const N: usize>(a: &Mat<N>) -> Mat<N> {
    a.map(|row| row.map(|z| z.conj()))
}

pub fn add<const N: usize>(a: &Mat<N>, b: &Mat<N>) -> Mat<N> {
    let mut out = *a;
    for i in 0..N {
        for j in 0..N {
            out[i][j] += b[i][j];
        }
    }
    out
}

pub fn sub<const N: usize>(a: &Mat<N>, b: &Mat<N>) -> Mat<N> {
    let mut out = *a;
    for i in 0..N {
        for j in 0..N {
            out[i][j] -= b[i][j];
        }
    }
    out
}

pub fn scale<const N: usize>(a: &Mat<N>, s: Complex64) -> Mat<N> {
    a.map(|row| row.map(|z| z * s))
}

pub fn frobenius_norm<const N: usize>(a: &Mat<N>) -> f64 {
    a.iter()
        .flat_map(|row| row.iter())
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Largest entrywise deviation `|a_ij - conj(a_ji)|`.
pub fn hermitian_defect<const N: usize>(a: &Mat<N>) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..N {
        for j in i..N {
            worst = worst.max((a[i][j] - a[j][i].conj()).norm());
        }
    }
    worst
}

pub fn trace<const N: usize>(a: &Mat<N>) -> Complex64 {
    (0..N).map(|i| a[i][i]).sum()
}

pub fn mat_vec(a: &Mat4, v: &Vec4) -> Vec4 {
    let mut out = [ZERO; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i] += a[i][j] * v[j];
        }
    }
    out
}

/// `⟨u|v⟩`, conjugate-linear in the first argument.
pub fn inner(u: &Vec4, v: &Vec4) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn vec_norm(v: &Vec4) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `|v⟩⟨v|` scaled by `weight`.
pub fn outer_weighted(v: &Vec4, weight: f64) -> Mat4 {
    let mut out = zeros::<4>();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = v[i] * v[j].conj() * weight;
        }
    }
    out
}

/// Kronecker product of two 2×2 matrices; `a` acts on the left (first) qubit.
pub fn kron2(a: &Mat<2>, b: &Mat<2>) -> Mat4 {
    let mut out = zeros::<4>();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub mod pauli {
    use super::{Mat, I, ONE, ZERO};

    pub const ID: Mat<2> = [[ONE, ZERO], [ZERO, ONE]];
    pub const X: Mat<2> = [[ZERO, ONE], [ONE, ZERO]];
    pub const Y: Mat<2> = [[ZERO, super::Complex64::new(0.0, -1.0)], [I, ZERO]];
    pub const Z: Mat<2> = [[ONE, ZERO], [ZERO, super::Complex64::new(-1.0, 0.0)]];
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        // XY = iZ
        let xy = matmul(&pauli::X, &pauli::Y);
        assert_eq!(xy, scale(&pauli::Z, I));
        for p in [pauli::X, pauli::Y, pauli::Z] {
            assert_eq!(matmul(&p, &p), pauli::ID);
            assert_eq!(hermitian_defect(&p), 0.0);
        }
    }

    #[test]
    fn kron_basis_order() {
        // Z ⊗ I = diag(1, 1, -1, -1) with the left factor on the first qubit
        let zi = kron2(&pauli::Z, &pauli::ID);
        let diag: Vec<f64> = (0..4).map(|i| zi[i][i].re).collect();
        assert_eq!(diag, vec![1.0, 1.0, -1.0, -1.0]);
        let iz = kron2(&pauli::ID, &pauli::Z);
        let diag: Vec<f64> = (0..4).map(|i| iz[i][i].re).collect();
        assert_eq!(diag, vec![1.0, -1.0, 1.0, -1.0]);
    }
}
