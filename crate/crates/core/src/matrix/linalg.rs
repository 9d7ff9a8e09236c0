use std::collections::BTreeMap;

use super::{ComplexMatrix, C64, I, ONE, ZERO};
use crate::error::{Error, Result};
use crate::rank::sparse_rank;

const MAX_SWEEPS: usize = 100;
const UNITARY_TOL: f64 = 1e-10;

/// Matrix exponential by scaling and squaring around a Taylor series.
///
/// Panics on a non-square input.
pub fn expm(m: &ComplexMatrix) -> ComplexMatrix {
    assert!(m.is_square(), "expm of a non-square matrix");
    let n = m.rows();
    let norm = m.frobenius_norm();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let scaled = m.scale(C64::new(0.5f64.powi(squarings), 0.0));
    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=60 {
        term = term.try_mul(&scaled).unwrap().scale(C64::new(1.0 / k as f64, 0.0));
        sum = sum.try_add(&term).unwrap();
        if term.frobenius_norm() < 1e-18 * sum.frobenius_norm() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.try_mul(&sum).unwrap();
    }
    sum
}

fn off_diagonal_norm(h: &ComplexMatrix) -> f64 {
    let n = h.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += h[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a
/// Hermitian matrix, by cyclic complex Jacobi rotations.
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    if !h.is_square() {
        return Err(Error::Shape(format!("{}x{} is not square", h.rows(), h.cols())));
    }
    let n = h.rows();
    let mut a = h.clone();
    let mut v = ComplexMatrix::identity(n);
    let scale = h.frobenius_norm().max(1.0);
    let mut sweeps = 0;
    while off_diagonal_norm(&a) > 1e-15 * scale {
        sweeps += 1;
        if sweeps > MAX_SWEEPS {
            return Err(Error::NonConvergence { residual: off_diagonal_norm(&a) });
        }
        for p in 0..n {
            for q in p + 1..n {
                let c = a[(p, q)];
                let r = c.norm();
                if r < 1e-300 {
                    continue;
                }
                // phase to a real symmetric 2x2, then a real rotation
                let phase = (c / r).conj();
                let theta = 0.5 * (2.0 * r).atan2(a[(p, p)].re - a[(q, q)].re);
                let (s, co) = theta.sin_cos();
                let g = [[C64::new(co, 0.0), C64::new(-s, 0.0)], [phase * s, phase * co]];
                for k in 0..n {
                    let (kp, kq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = kp * g[0][0] + kq * g[1][0];
                    a[(k, q)] = kp * g[0][1] + kq * g[1][1];
                    let (vp, vq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = vp * g[0][0] + vq * g[1][0];
                    v[(k, q)] = vp * g[0][1] + vq * g[1][1];
                }
                for k in 0..n {
                    let (pk, qk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = g[0][0].conj() * pk + g[1][0].conj() * qk;
                    a[(q, k)] = g[0][1].conj() * pk + g[1][1].conj() * qk;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            vectors[(k, new)] = v[(k, old)];
        }
    }
    Ok((values, vectors))
}

/// Spectral decomposition `U = V diag(values) V†` of a unitary.
#[derive(Clone, Debug)]
pub struct UnitaryEig {
    pub values: Vec<C64>,
    pub vectors: ComplexMatrix,
}

fn check_unitary(u: &ComplexMatrix) -> Result<()> {
    let residual = u.unitarity_residual();
    if residual < UNITARY_TOL {
        Ok(())
    } else {
        Err(Error::NotUnitary { residual })
    }
}

/// Diagonalizes a unitary through the Hermitian pencil `H1 + c H2` with
/// `H1 = (U+U†)/2`, `H2 = (U-U†)/2i`, which commute for normal `U`.
/// `c` is irrational so distinct eigenvalues almost never collide; the
/// result is checked and the next `c` tried if `V†UV` is not diagonal.
pub fn eig_unitary(u: &ComplexMatrix) -> Result<UnitaryEig> {
    check_unitary(u)?;
    let adj = u.adjoint();
    let h1 = u.try_add(&adj)?.scale(C64::new(0.5, 0.0));
    let h2 = u.try_add(&adj.scale(-ONE))?.scale(C64::new(0.0, -0.5));
    let mut worst = f64::INFINITY;
    for c in [std::f64::consts::SQRT_2 - 1.0, 3f64.sqrt() - 1.0, std::f64::consts::PI / 7.0, 0.5f64.ln().abs()] {
        let pencil = h1.try_add(&h2.scale(C64::new(c, 0.0)))?;
        let (_, v) = hermitian_eig(&pencil)?;
        let d = v.adjoint().try_mul(u)?.try_mul(&v)?;
        let off = off_diagonal_norm(&d);
        if off < 1e-9 {
            let values = (0..d.rows()).map(|i| d[(i, i)]).collect();
            return Ok(UnitaryEig { values, vectors: v });
        }
        worst = worst.min(off);
    }
    Err(Error::NonConvergence { residual: worst })
}

/// Principal logarithm of a unitary.
#[derive(Clone, Debug)]
pub struct UnitaryLog {
    /// Anti-Hermitian `A` with `expm(A) = U`, eigenphases in (-π, π].
    pub log: ComplexMatrix,
    /// Set when some eigenvalue sits at -1, where the branch is a choice.
    pub branch_ambiguous: bool,
}

pub fn logm_unitary(u: &ComplexMatrix) -> Result<UnitaryLog> {
    let eig = eig_unitary(u)?;
    let mut branch_ambiguous = false;
    let phases: Vec<C64> = eig
        .values
        .iter()
        .map(|z| {
            let mut phase = z.arg();
            if (phase.abs() - std::f64::consts::PI).abs() < 1e-9 {
                branch_ambiguous = true;
                phase = std::f64::consts::PI;
            }
            I * phase
        })
        .collect();
    let v = &eig.vectors;
    let log = v.try_mul(&ComplexMatrix::diagonal(&phases))?.try_mul(&v.adjoint())?;
    Ok(UnitaryLog { log, branch_ambiguous })
}

/// Complex-linear rank of a set of equally shaped matrices (pivot
/// tolerance 1e-9).
pub fn rank_c(mats: &[ComplexMatrix]) -> Result<usize> {
    if let Some(first) = mats.first() {
        if mats.iter().any(|m| (m.rows(), m.cols()) != (first.rows(), first.cols())) {
            return Err(Error::Shape("rank_c needs equally shaped matrices".into()));
        }
    }
    let vectors = mats.iter().map(|m| {
        m.entries().iter().enumerate().filter(|(_, z)| **z != ZERO).map(|(i, z)| (i, *z)).collect::<BTreeMap<_, _>>()
    });
    Ok(sparse_rank(vectors, 1e-9))
}

#[cfg(test)]
mod tests {
    use super::super::pauli;
    use super::*;

    #[test]
    fn expm_of_zero_is_identity() {
        assert_eq!(expm(&ComplexMatrix::zeros(3, 3)), ComplexMatrix::identity(3));
    }

    #[test]
    fn expm_of_pauli_rotation() {
        let t = 1.3;
        let got = expm(&pauli::x().scale(I * t));
        let want =
            ComplexMatrix::identity(2).scale(C64::new(t.cos(), 0.0)).try_add(&pauli::x().scale(I * t.sin())).unwrap();
        assert!(got.distance(&want) < 1e-14);
    }

    #[test]
    fn hermitian_eig_reconstructs() {
        let h = ComplexMatrix::from_rows(vec![
            vec![C64::new(2.0, 0.0), C64::new(1.0, 1.0), C64::new(0.0, -0.5)],
            vec![C64::new(1.0, -1.0), C64::new(-1.0, 0.0), C64::new(0.3, 0.0)],
            vec![C64::new(0.0, 0.5), C64::new(0.3, 0.0), C64::new(0.5, 0.0)],
        ]);
        let (vals, v) = hermitian_eig(&h).unwrap();
        let d = ComplexMatrix::diagonal(&vals.iter().map(|x| C64::new(*x, 0.0)).collect::<Vec<_>>());
        let back = v.try_mul(&d).unwrap().try_mul(&v.adjoint()).unwrap();
        assert!(back.distance(&h) < 1e-12);
        assert!(v.unitarity_residual() < 1e-12);
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn logm_round_trip_and_branch_flag() {
        let z = pauli::z();
        let l = logm_unitary(&z).unwrap();
        assert!(l.branch_ambiguous);
        assert!(expm(&l.log).distance(&z) < 1e-10);

        let s = ComplexMatrix::diagonal(&[ONE, I]);
        let l = logm_unitary(&s).unwrap();
        assert!(!l.branch_ambiguous);
        assert!(expm(&l.log).distance(&s) < 1e-12);
    }

    #[test]
    fn degenerate_unitary() {
        // eigenvalues 1, 1, i: degenerate pencil eigenspace
        let u = ComplexMatrix::diagonal(&[ONE, ONE, I]);
        let l = logm_unitary(&u).unwrap();
        assert!(expm(&l.log).distance(&u) < 1e-12);
    }

    #[test]
    fn non_unitary_rejected() {
        let m = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert!(matches!(logm_unitary(&m), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn pauli_strings_independent() {
        let letters = ['I', 'X', 'Y', 'Z'];
        let mut mats = Vec::new();
        for a in letters {
            for b in letters {
                mats.push(pauli::string(&format!("{a}{b}")).scale(I));
            }
        }
        assert_eq!(rank_c(&mats).unwrap(), 16);
    }
}
