//! Character tables by the class-sum method.
//!
//! Class-multiplication matrices commute and share a basis of eigenvectors
//! indexed by the irreducible characters; the eigenvector entries are the
//! central character values `ω_k(χ) = h_k χ(g_k)/χ(1)`. A random real linear
//! combination of the matrices generically has distinct eigenvalues, so one
//! diagonalization recovers every irreducible character at once. Characters
//! are then rescaled by degree (fixed by first orthogonality) and verified:
//! integer degrees, `Σ deg² = |G|`, and row orthonormality.

use num_complex::Complex64;

use super::subgroup::{conjugacy_classes, ConjugacyClasses};
use super::FiniteGroup;
use crate::util::{SplitMix64, DEFAULT_SEED};
use crate::{Error, Result};

/// Retry cap for fresh random combinations.
const MAX_ATTEMPTS: u32 = 32;
/// Tolerance for integer rounding of degrees.
const DEGREE_TOL: f64 = 1e-6;
/// Tolerance for row orthonormality.
const ORTHO_TOL: f64 = 1e-8;

/// Character table of a finite group: rows are irreducible characters,
/// columns are conjugacy classes.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group_order: usize,
    pub classes: ConjugacyClasses,
    pub class_sizes: Vec<usize>,
    pub degrees: Vec<u64>,
    /// `values[r][c]` is the value of character `r` on class `c`.
    pub values: Vec<Vec<Complex64>>,
}

impl CharacterTable {
    /// Number of irreducible characters (= number of classes).
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// Value of character `r` at a group element.
    pub fn value_at(&self, r: usize, element: usize) -> Complex64 {
        self.values[r][self.classes.class_of[element]]
    }

    /// Class-weighted inner product `(1/|G|) Σ_c h_c φ(c) conj(ψ(c))`.
    pub fn inner_product(&self, phi: &[Complex64], psi: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in 0..self.class_sizes.len() {
            acc += self.class_sizes[c] as f64 * phi[c] * psi[c].conj();
        }
        acc / self.group_order as f64
    }

    /// Index of the complex-conjugate character of row `r`.
    pub fn conjugate_row(&self, r: usize) -> usize {
        let target: Vec<Complex64> = self.values[r].iter().map(|v| v.conj()).collect();
        (0..self.rank())
            .find(|&s| {
                self.values[s]
                    .iter()
                    .zip(&target)
                    .all(|(a, b)| (a - b).norm() < 1e-6)
            })
            .expect("conjugate of an irreducible character is irreducible")
    }

    /// Index of the trivial character (all values 1).
    pub fn trivial_row(&self) -> usize {
        (0..self.rank())
            .find(|&r| {
                self.values[r]
                    .iter()
                    .all(|v| (v - Complex64::new(1.0, 0.0)).norm() < 1e-6)
            })
            .expect("trivial character present")
    }
}

/// Character table with the default seed.
pub fn character_table(group: &FiniteGroup) -> Result<CharacterTable> {
    character_table_with_seed(group, DEFAULT_SEED)
}

/// Character table; the seed drives the random class-sum combination (and
/// nothing else), so output is deterministic per seed.
pub fn character_table_with_seed(group: &FiniteGroup, seed: u64) -> Result<CharacterTable> {
    let classes = conjugacy_classes(group);
    let r = classes.len();
    let class_sizes: Vec<usize> = classes.classes.iter().map(|c| c.len()).collect();

    // Class multiplication constants: a[i][j][k] with
    // K_i · K_j = Σ_k a_ijk K_k, stored as the matrices B_i[j][k] = a_ijk.
    let mut b_mats = vec![vec![0f64; r * r]; r];
    for i in 0..r {
        for j in 0..r {
            let mut counts = vec![0usize; r];
            for &x in &classes.classes[i] {
                for &y in &classes.classes[j] {
                    counts[classes.class_of[group.mul(x, y)]] += 1;
                }
            }
            for k in 0..r {
                debug_assert_eq!(counts[k] % class_sizes[k], 0);
                b_mats[i][j * r + k] = (counts[k] / class_sizes[k]) as f64;
            }
        }
    }

    let mut rng = SplitMix64::new(seed);
    for attempt in 0..MAX_ATTEMPTS {
        match try_build(group, &classes, &class_sizes, &b_mats, &mut rng) {
            Some(mut table) => {
                sort_rows(&mut table);
                let _ = attempt;
                return Ok(table);
            }
            None => continue,
        }
    }
    Err(Error::DegenerateCombination {
        attempts: MAX_ATTEMPTS,
    })
}

fn try_build(
    group: &FiniteGroup,
    classes: &ConjugacyClasses,
    class_sizes: &[usize],
    b_mats: &[Vec<f64>],
    rng: &mut SplitMix64,
) -> Option<CharacterTable> {
    let r = class_sizes.len();
    let n = group.order();

    // Random real combination of the class matrices.
    let coeffs: Vec<f64> = (0..r).map(|_| rng.next_unit_f64()).collect();
    let mut combo = nalgebra::DMatrix::<f64>::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                combo[(j, k)] += coeffs[i] * b_mats[i][j * r + k];
            }
        }
    }

    let eigenvalues = combo.clone().complex_eigenvalues();
    let scale = eigenvalues.iter().map(|l| l.norm()).fold(1.0, f64::max);
    for a in 0..r {
        for b in a + 1..r {
            if (eigenvalues[a] - eigenvalues[b]).norm() < 1e-6 * scale {
                return None; // degenerate combination, retry
            }
        }
    }

    let mut rows: Vec<(u64, Vec<Complex64>)> = Vec::with_capacity(r);
    for e in 0..r {
        let w = eigenvector_for(&combo, eigenvalues[e], rng)?;
        // w[k] ∝ h_k χ(g_k)/χ(1); the identity class pins the scale.
        if w[0].norm() < 1e-10 {
            return None;
        }
        let ratios: Vec<Complex64> = (0..r).map(|k| w[k] / w[0]).collect();
        let norm_sq: f64 = (0..r)
            .map(|k| ratios[k].norm_sqr() / class_sizes[k] as f64)
            .sum();
        let degree = (n as f64 / norm_sq).sqrt();
        let rounded = degree.round();
        if (degree - rounded).abs() > DEGREE_TOL || rounded < 1.0 {
            return None;
        }
        let values: Vec<Complex64> = (0..r)
            .map(|k| ratios[k] * rounded / class_sizes[k] as f64)
            .collect();
        rows.push((rounded as u64, values));
    }

    let degree_sq: u64 = rows.iter().map(|(d, _)| d * d).sum();
    if degree_sq != n as u64 {
        return None;
    }

    let table = CharacterTable {
        group_order: n,
        classes: classes.clone(),
        class_sizes: class_sizes.to_vec(),
        degrees: rows.iter().map(|(d, _)| *d).collect(),
        values: rows.into_iter().map(|(_, v)| v).collect(),
    };

    // First orthogonality, rows orthonormal under the class-weighted
    // inner product.
    for a in 0..r {
        for b in 0..r {
            let ip = table.inner_product(&table.values[a], &table.values[b]);
            let expected = if a == b { 1.0 } else { 0.0 };
            if (ip - Complex64::new(expected, 0.0)).norm() > ORTHO_TOL {
                return None;
            }
        }
    }
    Some(table)
}

/// Eigenvector by inverse iteration with a complex LU solve; eigenvalues are
/// simple here, so two iterations from a random start are plenty.
fn eigenvector_for(
    matrix: &nalgebra::DMatrix<f64>,
    lambda: Complex64,
    rng: &mut SplitMix64,
) -> Option<Vec<Complex64>> {
    let r = matrix.nrows();
    let mut a = vec![Complex64::new(0.0, 0.0); r * r];
    for i in 0..r {
        for j in 0..r {
            a[i * r + j] = Complex64::new(matrix[(i, j)], 0.0);
        }
        a[i * r + i] -= lambda;
    }
    let lu = ComplexLu::factor(a, r);
    let mut v: Vec<Complex64> = (0..r)
        .map(|_| Complex64::new(rng.next_unit_f64(), rng.next_unit_f64() - 1.5))
        .collect();
    for _ in 0..3 {
        let mut w = lu.solve(&v);
        let norm = w.iter().map(|x| x.norm()).fold(0.0, f64::max);
        if !norm.is_finite() || norm == 0.0 {
            return None;
        }
        for x in &mut w {
            *x /= norm;
        }
        v = w;
    }
    Some(v)
}

/// Dense complex LU with partial pivoting. Near-zero pivots are clamped so
/// that solving against a (numerically) singular shift still works — exactly
/// the inverse-iteration use case.
struct ComplexLu {
    lu: Vec<Complex64>,
    pivots: Vec<usize>,
    n: usize,
}

impl ComplexLu {
    fn factor(mut a: Vec<Complex64>, n: usize) -> Self {
        let mut pivots = vec![0usize; n];
        for col in 0..n {
            let mut best = col;
            let mut best_norm = a[col * n + col].norm();
            for row in col + 1..n {
                let norm = a[row * n + col].norm();
                if norm > best_norm {
                    best = row;
                    best_norm = norm;
                }
            }
            pivots[col] = best;
            if best != col {
                for j in 0..n {
                    a.swap(col * n + j, best * n + j);
                }
            }
            let mut pivot = a[col * n + col];
            if pivot.norm() < 1e-300 {
                pivot = Complex64::new(1e-300, 0.0);
                a[col * n + col] = pivot;
            }
            for row in col + 1..n {
                let factor = a[row * n + col] / pivot;
                a[row * n + col] = factor;
                for j in col + 1..n {
                    let sub = factor * a[col * n + j];
                    a[row * n + j] -= sub;
                }
            }
        }
        Self { lu: a, pivots, n }
    }

    fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut x = b.to_vec();
        for col in 0..n {
            x.swap(col, self.pivots[col]);
        }
        for col in 0..n {
            for row in col + 1..n {
                let sub = self.lu[row * n + col] * x[col];
                x[row] -= sub;
            }
        }
        for col in (0..n).rev() {
            for j in col + 1..n {
                let sub = self.lu[col * n + j] * x[j];
                x[col] -= sub;
            }
            x[col] /= self.lu[col * n + col];
        }
        x
    }
}

fn sort_rows(table: &mut CharacterTable) {
    let r = table.rank();
    let mut order: Vec<usize> = (0..r).collect();
    let key = |row: &[Complex64]| -> Vec<(i64, i64)> {
        row.iter()
            .map(|v| ((v.re * 1e6).round() as i64, (v.im * 1e6).round() as i64))
            .collect()
    };
    order.sort_by(|&a, &b| {
        (table.degrees[a], key(&table.values[a])).cmp(&(table.degrees[b], key(&table.values[b])))
    });
    table.degrees = order.iter().map(|&i| table.degrees[i]).collect();
    table.values = order.iter().map(|&i| table.values[i].clone()).collect();
}
