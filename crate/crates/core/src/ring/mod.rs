//! Fusion rings: based rings with nonnegative integer structure constants,
//! a unit basis element, and a duality involution.

mod fpdim;
mod io;
mod validate;

pub use fpdim::{eigen_residual, fpdim, fpdim_with, FPDimData, DEFAULT_FP_TOLERANCE};
pub use io::{read_ring, write_ring, RingFile};
pub use validate::{validate, ValidationReport, Violation, ViolationClass};

use crate::{Error, Result};

/// A fusion ring on basis indices `0..rank`.
///
/// Structure constants are stored sparsely per index pair: `row(i, j)` lists
/// the `(k, N_ijk)` with `N_ijk > 0`. Values are immutable after
/// construction; all operations are pure functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    rows: Vec<Vec<(u32, u64)>>,
}

impl FusionRing {
    /// Builds a ring from raw data. Structural well-formedness (index
    /// ranges, involution shape, duplicate coefficients) is enforced here;
    /// the ring axioms are checked separately by [`validate`].
    pub fn new(
        rank: usize,
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        coefficients: impl IntoIterator<Item = (usize, usize, usize, u64)>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Parse("fusion ring must have rank ≥ 1".into()));
        }
        if labels.len() != rank {
            return Err(Error::Parse(format!(
                "{} labels for rank {rank}",
                labels.len()
            )));
        }
        {
            let mut sorted = labels.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse("labels are not distinct".into()));
            }
        }
        if unit >= rank {
            return Err(Error::Parse(format!("unit index {unit} out of range")));
        }
        if dual.len() != rank {
            return Err(Error::Parse("dual image list has wrong length".into()));
        }
        for (i, &d) in dual.iter().enumerate() {
            if d >= rank {
                return Err(Error::Parse(format!("dual({i}) = {d} out of range")));
            }
            if dual[d] != i {
                return Err(Error::Parse(format!(
                    "dual is not an involution at index {i}"
                )));
            }
        }
        let mut rows = vec![Vec::new(); rank * rank];
        for (i, j, k, n) in coefficients {
            if i >= rank || j >= rank || k >= rank {
                return Err(Error::Parse(format!(
                    "coefficient index ({i}, {j}, {k}) out of range"
                )));
            }
            if n == 0 {
                return Err(Error::Parse(format!(
                    "explicit zero coefficient at ({i}, {j}, {k})"
                )));
            }
            let row = &mut rows[i * rank + j];
            if row.iter().any(|&(kk, _)| kk as usize == k) {
                return Err(Error::Parse(format!(
                    "duplicate coefficient triple ({i}, {j}, {k})"
                )));
            }
            row.push((k as u32, n));
        }
        for row in &mut rows {
            row.sort_unstable_by_key(|&(k, _)| k);
        }
        Ok(Self {
            rank,
            labels,
            unit,
            dual,
            rows,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The nonzero constituents of `x_i ⊗ x_j`, sorted by index.
    #[inline]
    pub fn row(&self, i: usize, j: usize) -> &[(u32, u64)] {
        &self.rows[i * self.rank + j]
    }

    /// Single structure constant `N_ij^k`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u64 {
        self.row(i, j)
            .iter()
            .find(|&&(kk, _)| kk as usize == k)
            .map(|&(_, n)| n)
            .unwrap_or(0)
    }

    /// Iterates all stored nonzero coefficients `(i, j, k, n)`.
    pub fn coefficients(&self) -> impl Iterator<Item = (usize, usize, usize, u64)> + '_ {
        (0..self.rank * self.rank).flat_map(move |ij| {
            let (i, j) = (ij / self.rank, ij % self.rank);
            self.rows[ij]
                .iter()
                .map(move |&(k, n)| (i, j, k as usize, n))
        })
    }

    /// The indices whose tensor square against their dual is exactly the
    /// unit: `X ⊗ X* ≅ 1`. These are the basis elements of dimension one.
    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| self.row(i, self.dual[i]) == [(self.unit as u32, 1)])
            .collect()
    }

    /// Whether every basis element is invertible.
    pub fn is_pointed(&self) -> bool {
        self.invertibles().len() == self.rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn z2_pointed() -> FusionRing {
        FusionRing::new(
            2,
            vec!["e".into(), "g".into()],
            0,
            vec![0, 1],
            vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)],
        )
        .unwrap()
    }

    #[test]
    fn constructor_rejects_malformed_input() {
        // out-of-range dual
        assert!(FusionRing::new(1, vec!["e".into()], 0, vec![1], vec![(0, 0, 0, 1)]).is_err());
        // non-involutive dual
        assert!(FusionRing::new(
            3,
            vec!["a".into(), "b".into(), "c".into()],
            0,
            vec![1, 2, 0],
            vec![]
        )
        .is_err());
        // duplicate triple
        assert!(FusionRing::new(
            1,
            vec!["e".into()],
            0,
            vec![0],
            vec![(0, 0, 0, 1), (0, 0, 0, 2)]
        )
        .is_err());
        // explicit zero
        assert!(FusionRing::new(1, vec!["e".into()], 0, vec![0], vec![(0, 0, 0, 0)]).is_err());
    }

    #[test]
    fn coefficient_lookup() {
        let r = z2_pointed();
        assert_eq!(r.coeff(1, 1, 0), 1);
        assert_eq!(r.coeff(1, 1, 1), 0);
        assert_eq!(r.row(1, 0), &[(1, 1)]);
    }

    #[test]
    fn invertibles_of_pointed_ring() {
        let r = z2_pointed();
        assert_eq!(r.invertibles(), vec![0, 1]);
        assert!(r.is_pointed());
    }
}
