//! Frobenius-Perron dimensions by power iteration.
//!
//! The dimension of basis element `i` is the largest eigenvalue of its left
//! multiplication matrix `(N_i)_{kj} = N_ij^k`. Iteration runs on `N_i + I`:
//! the shift leaves the Perron eigenvector alone and moves the eigenvalue up
//! by one, but makes the iteration converge even when the multiplication
//! graph is periodic (for a Tambara-Yamagami ring, `N_m` is bipartite and
//! plain power iteration oscillates forever).

use super::FusionRing;
use crate::{Error, Result};

/// Convergence tolerance on the successive-iterate difference.
pub const DEFAULT_FP_TOLERANCE: f64 = 1e-12;
/// Iteration cap per basis element.
pub const DEFAULT_FP_ITERATION_CAP: u64 = 1_000_000;

/// Frobenius-Perron dimension data of a fusion ring.
#[derive(Clone, Debug)]
pub struct FPDimData {
    /// Per-basis-element dimensions `d_i ≥ 1`.
    pub dims: Vec<f64>,
    /// `Σ_i d_i²`, the dimension of the ring.
    pub total: f64,
    /// Tolerance used for convergence and downstream integrality rounding.
    pub tolerance: f64,
}

/// Computes FP dimensions with the default tolerance and iteration cap.
pub fn fpdim(ring: &FusionRing) -> Result<FPDimData> {
    fpdim_with(ring, DEFAULT_FP_TOLERANCE, DEFAULT_FP_ITERATION_CAP)
}

/// Computes FP dimensions, power-iterating each shifted multiplication
/// matrix from the all-ones vector until successive normalized iterates
/// differ by less than `tolerance` in the max norm.
pub fn fpdim_with(ring: &FusionRing, tolerance: f64, iteration_cap: u64) -> Result<FPDimData> {
    let rank = ring.rank();
    let mut dims = Vec::with_capacity(rank);
    let mut next = vec![0f64; rank];
    for i in 0..rank {
        let mut v = vec![1f64; rank];
        let mut eigenvalue = 0f64;
        let mut converged = false;
        for _ in 0..iteration_cap {
            // next = (N_i + I) v
            next.copy_from_slice(&v);
            for j in 0..rank {
                let vj = v[j];
                if vj != 0.0 {
                    for &(k, n) in ring.row(i, j) {
                        next[k as usize] += n as f64 * vj;
                    }
                }
            }
            let norm = next.iter().fold(0f64, |m, &x| m.max(x.abs()));
            if norm == 0.0 {
                return Err(Error::InternalInconsistency(format!(
                    "multiplication matrix of index {i} annihilated a positive vector"
                )));
            }
            for x in next.iter_mut() {
                *x /= norm;
            }
            eigenvalue = norm;
            let delta = v
                .iter()
                .zip(next.iter())
                .fold(0f64, |m, (&a, &b)| m.max((a - b).abs()));
            std::mem::swap(&mut v, &mut next);
            if delta < tolerance {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence {
                iterations: iteration_cap,
                tolerance,
            });
        }
        dims.push(eigenvalue - 1.0);
    }
    let total = dims.iter().map(|d| d * d).sum();
    Ok(FPDimData {
        dims,
        total,
        tolerance,
    })
}

/// Largest absolute residual of the eigen-equation
/// `Σ_k N_ij^k d_k − d_i d_j` over all index pairs.
pub fn eigen_residual(ring: &FusionRing, dims: &[f64]) -> f64 {
    let rank = ring.rank();
    let mut worst = 0f64;
    for i in 0..rank {
        for j in 0..rank {
            let lhs: f64 = ring
                .row(i, j)
                .iter()
                .map(|&(k, n)| n as f64 * dims[k as usize])
                .sum();
            worst = worst.max((lhs - dims[i] * dims[j]).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FusionRing;

    fn pointed_z3() -> FusionRing {
        let coeffs: Vec<(usize, usize, usize, u64)> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j, (i + j) % 3, 1)))
            .collect();
        FusionRing::new(
            3,
            vec!["0".into(), "1".into(), "2".into()],
            0,
            vec![0, 2, 1],
            coeffs,
        )
        .unwrap()
    }

    /// TY(Z2): basis 1, g, m with m ⊗ m = 1 + g.
    fn ty_z2() -> FusionRing {
        FusionRing::new(
            3,
            vec!["1".into(), "g".into(), "m".into()],
            0,
            vec![0, 1, 2],
            vec![
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (0, 2, 2, 1),
                (1, 0, 1, 1),
                (1, 1, 0, 1),
                (1, 2, 2, 1),
                (2, 0, 2, 1),
                (2, 1, 2, 1),
                (2, 2, 0, 1),
                (2, 2, 1, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn pointed_dims_are_all_one() {
        let data = fpdim(&pointed_z3()).unwrap();
        for d in &data.dims {
            assert!((d - 1.0).abs() < 1e-9);
        }
        assert!((data.total - 3.0).abs() < 1e-9);
    }

    #[test]
    fn ty_z2_has_sqrt2() {
        let r = ty_z2();
        let data = fpdim(&r).unwrap();
        assert!((data.dims[2] - 2f64.sqrt()).abs() < 1e-9);
        assert!((data.total - 4.0).abs() < 1e-9);
        assert!(eigen_residual(&r, &data.dims) < 1e-9);
    }

    #[test]
    fn dual_symmetry() {
        let r = pointed_z3();
        let data = fpdim(&r).unwrap();
        for i in 0..r.rank() {
            assert!((data.dims[i] - data.dims[r.dual(i)]).abs() < 1e-9);
        }
    }
}
