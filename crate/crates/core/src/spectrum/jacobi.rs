//! Cyclic Jacobi diagonalization of small complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` and then applies
//! the classical real rotation, i.e. `U = D·J·D†` with `D = diag(1, e^{-iφ})`
//! on the `(p, q)` plane.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};

/// Convergence: off-diagonal Frobenius mass ≤ `OFF_DIAGONAL_TOL · ‖A‖_F`.
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;
pub const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm<const N: usize>(a: &Mat<N>) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                s += a[i][j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues in ascending order (stable with respect to the final diagonal
/// position) and the matching eigenvectors as columns of the returned matrix.
pub fn eigh<const N: usize>(input: &Mat<N>) -> Result<([f64; N], Mat<N>)> {
    let mut a = *input;
    let mut v = linalg::identity::<N>();
    let target = OFF_DIAGONAL_TOL * linalg::frobenius_norm(&a);

    let mut converged = off_diagonal_norm(&a) <= target;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        for p in 0..N - 1 {
            for q in p + 1..N {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) <= target;
    }

    let mut order: Vec<usize> = (0..N).collect();
    order.sort_by(|&i, &j| a[i][i].re.total_cmp(&a[j][j].re));
    let mut values = [0.0; N];
    let mut vectors = linalg::zeros::<N>();
    for (k, &src) in order.iter().enumerate() {
        values[k] = a[src][src].re;
        for row in 0..N {
            vectors[row][k] = v[row][src];
        }
    }
    Ok((values, vectors))
}

fn rotate<const N: usize>(a: &mut Mat<N>, v: &mut Mat<N>, p: usize, q: usize) {
    let apq = a[p][q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let theta = (a[q][q].re - a[p][p].re) / (2.0 * mag);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let s_pq = phase * s; // U_pq
    let s_qp = -phase.conj() * s; // U_qp

    // A ← A·U, V ← V·U
    for k in 0..N {
        let (akp, akq) = (a[k][p], a[k][q]);
        a[k][p] = akp * c + akq * s_qp;
        a[k][q] = akp * s_pq + akq * c;
        let (vkp, vkq) = (v[k][p], v[k][q]);
        v[k][p] = vkp * c + vkq * s_qp;
        v[k][q] = vkp * s_pq + vkq * c;
    }
    // A ← U†·A
    for k in 0..N {
        let (apk, aqk) = (a[p][k], a[q][k]);
        a[p][k] = apk * c + aqk * s_qp.conj();
        a[q][k] = apk * s_pq.conj() + aqk * c;
    }
    a[p][q] = Complex64::new(0.0, 0.0);
    a[q][p] = Complex64::new(0.0, 0.0);
    a[p][p].im = 0.0;
    a[q][q].im = 0.0;
}
