//! Axiom validation for fusion rings.
//!
//! Violations are data, not errors: the report lists every violated axiom
//! class with one witness each. Associativity is checked exhaustively over
//! all index triples by comparing full product vectors, which covers every
//! `(i, j, k, l)` quadruple. Intermediate sums use checked 64-bit
//! arithmetic; overflow is itself a violation class.

use std::fmt;

use super::FusionRing;

/// The axiom families a ring can violate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationClass {
    UnitLaw,
    Associativity,
    Duality,
    FrobeniusReciprocity,
    IntegerOverflow,
}

impl fmt::Display for ViolationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ViolationClass::UnitLaw => "unit law",
            ViolationClass::Associativity => "associativity",
            ViolationClass::Duality => "duality",
            ViolationClass::FrobeniusReciprocity => "Frobenius reciprocity",
            ViolationClass::IntegerOverflow => "integer overflow",
        };
        write!(f, "{name}")
    }
}

/// One violated axiom class with a witnessing index tuple.
#[derive(Clone, Debug)]
pub struct Violation {
    pub class: ViolationClass,
    pub witness: Vec<usize>,
    pub detail: String,
}

/// Outcome of validating a ring against the fusion-ring axioms.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return write!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{} violated at {:?}: {}", v.class, v.witness, v.detail)?;
        }
        Ok(())
    }
}

struct Collector {
    violations: Vec<Violation>,
}

impl Collector {
    fn report(&mut self, class: ViolationClass, witness: Vec<usize>, detail: String) {
        // one witness per class
        if !self.violations.iter().any(|v| v.class == class) {
            self.violations.push(Violation {
                class,
                witness,
                detail,
            });
        }
    }

    fn has(&self, class: ViolationClass) -> bool {
        self.violations.iter().any(|v| v.class == class)
    }
}

/// Checks all four fusion-ring axiom families and reports every violated
/// class, each with one witness.
pub fn validate(ring: &FusionRing) -> ValidationReport {
    let mut c = Collector {
        violations: Vec::new(),
    };
    check_unit_law(ring, &mut c);
    check_duality(ring, &mut c);
    check_frobenius(ring, &mut c);
    check_associativity(ring, &mut c);
    c.violations.sort_by_key(|v| v.class);
    ValidationReport {
        ok: c.violations.is_empty(),
        violations: c.violations,
    }
}

fn check_unit_law(ring: &FusionRing, c: &mut Collector) {
    let unit = ring.unit();
    for j in 0..ring.rank() {
        if ring.row(unit, j) != [(j as u32, 1)] {
            c.report(
                ViolationClass::UnitLaw,
                vec![unit, j],
                format!("1 ⊗ x_{j} is not x_{j}"),
            );
            return;
        }
        if ring.row(j, unit) != [(j as u32, 1)] {
            c.report(
                ViolationClass::UnitLaw,
                vec![j, unit],
                format!("x_{j} ⊗ 1 is not x_{j}"),
            );
            return;
        }
    }
}

fn check_duality(ring: &FusionRing, c: &mut Collector) {
    let unit = ring.unit();
    if ring.dual(unit) != unit {
        c.report(
            ViolationClass::Duality,
            vec![unit],
            "dual(1) ≠ 1".to_string(),
        );
        return;
    }
    for i in 0..ring.rank() {
        for j in 0..ring.rank() {
            let expected = u64::from(j == ring.dual(i));
            let got = ring.coeff(i, j, unit);
            if got != expected {
                c.report(
                    ViolationClass::Duality,
                    vec![i, j, unit],
                    format!("N_({i},{j})^1 = {got}, expected {expected}"),
                );
                return;
            }
        }
    }
}

fn check_frobenius(ring: &FusionRing, c: &mut Collector) {
    for (i, j, k, n) in ring.coefficients() {
        let left = ring.coeff(ring.dual(i), k, j);
        if left != n {
            c.report(
                ViolationClass::FrobeniusReciprocity,
                vec![i, j, k],
                format!("N_({i},{j})^{k} = {n} but N_({},{k})^{j} = {left}", ring.dual(i)),
            );
            return;
        }
        let right = ring.coeff(k, ring.dual(j), i);
        if right != n {
            c.report(
                ViolationClass::FrobeniusReciprocity,
                vec![i, j, k],
                format!("N_({i},{j})^{k} = {n} but N_({k},{})^{i} = {right}", ring.dual(j)),
            );
            return;
        }
    }
}

fn check_associativity(ring: &FusionRing, c: &mut Collector) {
    let rank = ring.rank();
    // Dense accumulators with a touched list: rows are sparse, so resetting
    // only what a triple touched keeps this linear in the support.
    let mut left = vec![0u64; rank];
    let mut right = vec![0u64; rank];
    let mut touched: Vec<u32> = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            for k in 0..rank {
                touched.clear();
                let mut overflow = false;
                // (x_i x_j) x_k
                for &(m, a) in ring.row(i, j) {
                    for &(l, b) in ring.row(m as usize, k) {
                        touched.push(l);
                        match a.checked_mul(b).and_then(|p| left[l as usize].checked_add(p)) {
                            Some(v) => left[l as usize] = v,
                            None => overflow = true,
                        }
                    }
                }
                // x_i (x_j x_k)
                for &(m, a) in ring.row(j, k) {
                    for &(l, b) in ring.row(i, m as usize) {
                        touched.push(l);
                        match a.checked_mul(b).and_then(|p| right[l as usize].checked_add(p)) {
                            Some(v) => right[l as usize] = v,
                            None => overflow = true,
                        }
                    }
                }
                if overflow {
                    c.report(
                        ViolationClass::IntegerOverflow,
                        vec![i, j, k],
                        "associativity sum overflows u64".to_string(),
                    );
                }
                if !c.has(ViolationClass::Associativity) && !overflow {
                    if let Some(&l) = touched.iter().find(|&&l| left[l as usize] != right[l as usize]) {
                        c.report(
                            ViolationClass::Associativity,
                            vec![i, j, k, l as usize],
                            format!(
                                "Σ_m N_({i},{j})^m N_(m,{k})^{l} = {} ≠ {} = Σ_m N_({j},{k})^m N_({i},m)^{l}",
                                left[l as usize], right[l as usize]
                            ),
                        );
                    }
                }
                for &l in &touched {
                    left[l as usize] = 0;
                    right[l as usize] = 0;
                }
                if c.has(ViolationClass::Associativity) && c.has(ViolationClass::IntegerOverflow) {
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FusionRing;

    fn z2() -> FusionRing {
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
    fn pointed_z2_validates() {
        assert!(validate(&z2()).ok);
    }

    /// Rank 2 with g² = 1 + g (Yang-Lee / Fibonacci fusion rules) satisfies
    /// every axiom; in particular the two associativity sums at (g, g, g)
    /// agree, so this must come back clean.
    #[test]
    fn fibonacci_ring_is_valid() {
        let fib = FusionRing::new(
            2,
            vec!["1".into(), "t".into()],
            0,
            vec![0, 1],
            vec![
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (1, 0, 1, 1),
                (1, 1, 0, 1),
                (1, 1, 1, 1),
            ],
        )
        .unwrap();
        let report = validate(&fib);
        assert!(report.ok, "{report}");
    }

    #[test]
    fn broken_unit_is_reported() {
        // remove 1⊗g = g
        let broken = FusionRing::new(
            2,
            vec!["e".into(), "g".into()],
            0,
            vec![0, 1],
            vec![(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1)],
        )
        .unwrap();
        let report = validate(&broken);
        assert!(!report.ok);
        assert!(report.violations.iter().any(|v| v.class == ViolationClass::UnitLaw));
    }

    #[test]
    fn identity_dual_on_z3_breaks_duality() {
        // pointed Z3 but with dual claimed to be the identity map
        let coeffs: Vec<(usize, usize, usize, u64)> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j, (i + j) % 3, 1)))
            .collect();
        let broken = FusionRing::new(
            3,
            vec!["0".into(), "1".into(), "2".into()],
            0,
            vec![0, 1, 2],
            coeffs,
        )
        .unwrap();
        let report = validate(&broken);
        assert!(!report.ok);
        assert!(report.violations.iter().any(|v| v.class == ViolationClass::Duality));
    }
}
