//! Upper central series, nilpotency, and composition series of fusion rings.
//!
//! A nilpotent fusion ring has a chain of subrings from the trivial subring
//! up to the full ring in which every step is an extension by a finite
//! group; the chain is a composition series when no proper refinement
//! exists, equivalently when every factor group is simple. Every step's
//! neutral component contains the adjoint subring of the step above, so all
//! composition series are visible through universal gradings: enumerating
//! maximal normal subgroups of the universal grading group at each stage is
//! exhaustive. All composition series of a nilpotent ring carry the same
//! factor multiset; [`jordan_holder_check`] verifies that empirically.

use std::collections::HashMap;
use std::rc::Rc;

use crate::grading::{adjoint, component_subring, universal_grading, Subring};
use crate::group::{
    composition_series_group, is_isomorphic, maximal_normal_subgroups, quotient, subgroup_closure,
    FactorMultiset, FiniteGroup, Subgroup,
};
use crate::ring::{fpdim, FusionRing};
use crate::{Error, Result};

/// Default cap on the number of enumerated composition series.
pub const DEFAULT_SERIES_CAP: usize = 10_000;
/// Tolerance for the dimension bookkeeping `FPdim R_i = |G_i| · FPdim R_{i-1}`.
pub const DIMENSION_TOL: f64 = 1e-6;

/// An ascending chain of fusion subrings in which each step is a group
/// extension, together with the per-step grading groups.
#[derive(Clone, Debug)]
pub struct CentralSeriesRecord {
    /// `chain[0]` is the trivial subring, `chain.last()` the full ring.
    pub chain: Vec<Subring>,
    /// `factors[i]` grades `chain[i+1]` over `chain[i]`.
    pub factors: Vec<FiniteGroup>,
}

impl CentralSeriesRecord {
    pub fn length(&self) -> usize {
        self.factors.len()
    }

    pub fn factor_multiset(&self) -> FactorMultiset {
        FactorMultiset::from_groups(&self.factors)
    }
}

/// The chain `C ⊇ C_ad ⊇ (C_ad)_ad ⊇ …`, iterated until it reaches the
/// trivial subring or stabilizes (a stabilized repeat is kept as evidence).
pub fn upper_central_series(ring: &FusionRing) -> Result<Vec<Subring>> {
    let full = Subring::full(ring);
    if ring.rank() == 1 {
        return Ok(vec![full]);
    }
    let mut chain = vec![full];
    loop {
        let last = chain.last().expect("chain is nonempty");
        let (sub_ring, back) = last.to_ring(ring)?;
        let adj = adjoint(&sub_ring);
        let next = Subring::from_sorted(adj.members().iter().map(|&i| back[i]).collect());
        let stabilized = &next == last;
        let done = next.is_unit_only(ring);
        chain.push(next);
        if stabilized || done {
            return Ok(chain);
        }
    }
}

/// Whether the upper central series terminates at the trivial subring.
pub fn is_nilpotent(ring: &FusionRing) -> Result<bool> {
    let chain = upper_central_series(ring)?;
    Ok(chain.last().expect("nonempty").is_unit_only(ring))
}

fn ensure_nilpotent(ring: &FusionRing) -> Result<()> {
    let chain = upper_central_series(ring)?;
    let last = chain.last().expect("nonempty");
    if last.is_unit_only(ring) {
        Ok(())
    } else {
        Err(Error::NotNilpotent {
            stable_rank: last.rank(),
        })
    }
}

/// The upper central series as a record: ascending chain with the universal
/// grading group of each step as its factor. Requires nilpotency.
pub fn upper_central_series_record(ring: &FusionRing) -> Result<CentralSeriesRecord> {
    ensure_nilpotent(ring)?;
    let mut chain = upper_central_series(ring)?;
    chain.reverse();
    let mut factors = Vec::with_capacity(chain.len().saturating_sub(1));
    for step in 1..chain.len() {
        let (sub_ring, _) = chain[step].to_ring(ring)?;
        let grading = universal_grading(&sub_ring)?;
        factors.push(grading.group);
    }
    Ok(CentralSeriesRecord { chain, factors })
}

/// One canonical composition series: descend from the full ring, at each
/// stage grading the current subring universally and stepping into the
/// component subring of the first maximal normal subgroup in the
/// (order, member-list) ordering.
pub fn canonical_composition_series(ring: &FusionRing) -> Result<CentralSeriesRecord> {
    ensure_nilpotent(ring)?;
    let mut chain_rev = vec![Subring::full(ring)];
    let mut factors_rev = Vec::new();
    loop {
        let current = chain_rev.last().expect("nonempty").clone();
        if current.is_unit_only(ring) {
            break;
        }
        let (sub_ring, back) = current.to_ring(ring)?;
        let grading = universal_grading(&sub_ring)?;
        if grading.group.order() == 1 {
            return Err(Error::InternalInconsistency(
                "nontrivial subring with trivial universal grading during nilpotent descent"
                    .into(),
            ));
        }
        let maximal = maximal_normal_subgroups(&grading.group);
        let chosen = &maximal[0];
        let (factor, _) = quotient(&grading.group, chosen)?;
        let local = component_subring(&grading, chosen);
        let next =
            Subring::from_sorted(local.members().iter().map(|&i| back[i]).collect());
        factors_rev.push(factor);
        chain_rev.push(next);
    }
    chain_rev.reverse();
    factors_rev.reverse();
    Ok(CentralSeriesRecord {
        chain: chain_rev,
        factors: factors_rev,
    })
}

#[derive(Clone)]
struct PartialSeries {
    chain: Vec<Vec<usize>>,
    factors: Vec<FiniteGroup>,
}

fn enumerate_series(
    ring: &FusionRing,
    members: Vec<usize>,
    memo: &mut HashMap<Vec<usize>, Rc<Vec<PartialSeries>>>,
    cap: usize,
) -> Result<Rc<Vec<PartialSeries>>> {
    if let Some(cached) = memo.get(&members) {
        return Ok(cached.clone());
    }
    let result = if members == [ring.unit()] {
        vec![PartialSeries {
            chain: vec![members.clone()],
            factors: Vec::new(),
        }]
    } else {
        let sub = Subring::from_sorted(members.clone());
        let (sub_ring, back) = sub.to_ring(ring)?;
        let grading = universal_grading(&sub_ring)?;
        if grading.group.order() == 1 {
            return Err(Error::InternalInconsistency(
                "nontrivial subring with trivial universal grading during nilpotent descent"
                    .into(),
            ));
        }
        let mut acc = Vec::new();
        for maximal in maximal_normal_subgroups(&grading.group) {
            let (factor, _) = quotient(&grading.group, &maximal)?;
            let local = component_subring(&grading, &maximal);
            let next: Vec<usize> = local.members().iter().map(|&i| back[i]).collect();
            let below = enumerate_series(ring, next, memo, cap)?;
            for partial in below.iter() {
                if acc.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "composition series enumeration",
                        cap,
                    });
                }
                let mut chain = partial.chain.clone();
                chain.push(members.clone());
                let mut factors = partial.factors.clone();
                factors.push(factor.clone());
                acc.push(PartialSeries { chain, factors });
            }
        }
        acc
    };
    let rc = Rc::new(result);
    memo.insert(members, rc.clone());
    Ok(rc)
}

/// Every composition series of a nilpotent ring, in a canonical order.
/// Exceeding `cap` is an error, never a truncation.
pub fn all_composition_series(
    ring: &FusionRing,
    cap: usize,
) -> Result<Vec<CentralSeriesRecord>> {
    ensure_nilpotent(ring)?;
    let full: Vec<usize> = (0..ring.rank()).collect();
    let mut memo = HashMap::new();
    let partials = enumerate_series(ring, full, &mut memo, cap)?;
    let mut records: Vec<CentralSeriesRecord> = partials
        .iter()
        .map(|p| CentralSeriesRecord {
            chain: p
                .chain
                .iter()
                .map(|m| Subring::from_sorted(m.clone()))
                .collect(),
            factors: p.factors.clone(),
        })
        .collect();
    records.sort_by(|a, b| {
        let ka: Vec<&[usize]> = a.chain.iter().map(|s| s.members()).collect();
        let kb: Vec<&[usize]> = b.chain.iter().map(|s| s.members()).collect();
        ka.cmp(&kb)
    });
    Ok(records)
}

/// Number of composition series, memoized over subring member sets; cheaper
/// than enumeration when only the count matters.
pub fn count_composition_series(ring: &FusionRing, cap: usize) -> Result<usize> {
    fn go(
        ring: &FusionRing,
        members: Vec<usize>,
        memo: &mut HashMap<Vec<usize>, usize>,
        cap: usize,
    ) -> Result<usize> {
        if let Some(&c) = memo.get(&members) {
            return Ok(c);
        }
        let count = if members == [ring.unit()] {
            1
        } else {
            let sub = Subring::from_sorted(members.clone());
            let (sub_ring, back) = sub.to_ring(ring)?;
            let grading = universal_grading(&sub_ring)?;
            let mut total = 0usize;
            for maximal in maximal_normal_subgroups(&grading.group) {
                let local = component_subring(&grading, &maximal);
                let next: Vec<usize> = local.members().iter().map(|&i| back[i]).collect();
                total += go(ring, next, memo, cap)?;
                if total > cap {
                    return Err(Error::CapExceeded {
                        what: "composition series count",
                        cap,
                    });
                }
            }
            total
        };
        memo.insert(members, count);
        Ok(count)
    }
    ensure_nilpotent(ring)?;
    let full: Vec<usize> = (0..ring.rank()).collect();
    go(ring, full, &mut HashMap::new(), cap)
}

/// Factor multiset and length of the ring, from the canonical series.
pub fn composition_factors(ring: &FusionRing) -> Result<FactorMultiset> {
    Ok(canonical_composition_series(ring)?.factor_multiset())
}

/// Result of the empirical Jordan-Hölder check.
#[derive(Debug)]
pub struct JordanHolderReport {
    pub series_count: usize,
    pub pass: bool,
    /// Two series with different factor multisets, when the check fails.
    /// A failure signals an implementation bug, not a property of the ring.
    pub counterexample: Option<Box<(CentralSeriesRecord, CentralSeriesRecord)>>,
}

/// Enumerates every composition series and checks that all factor multisets
/// agree.
pub fn jordan_holder_check(ring: &FusionRing, cap: usize) -> Result<JordanHolderReport> {
    let all = all_composition_series(ring, cap)?;
    let first = all.first().expect("a nilpotent ring has a composition series");
    let reference = first.factor_multiset();
    for record in &all[1..] {
        if record.factor_multiset() != reference {
            return Ok(JordanHolderReport {
                series_count: all.len(),
                pass: false,
                counterexample: Some(Box::new((first.clone(), record.clone()))),
            });
        }
    }
    Ok(JordanHolderReport {
        series_count: all.len(),
        pass: true,
        counterexample: None,
    })
}

/// Checks the record invariants: ascending proper chain from the trivial
/// subring to the full ring, every step a faithful extension by its stated
/// factor group, and dimensions multiplying accordingly.
pub fn verify_series(ring: &FusionRing, record: &CentralSeriesRecord) -> Result<()> {
    let invalid = |msg: String| Error::InvalidSeries(msg);
    if record.chain.len() != record.factors.len() + 1 {
        return Err(invalid("chain/factor length mismatch".into()));
    }
    if !record.chain[0].is_unit_only(ring) {
        return Err(invalid("chain does not start at the trivial subring".into()));
    }
    if !record.chain.last().expect("nonempty").is_full(ring) {
        return Err(invalid("chain does not end at the full ring".into()));
    }
    for step in 1..record.chain.len() {
        let prev = &record.chain[step - 1];
        let here = &record.chain[step];
        if !prev.members().iter().all(|&x| here.contains(x)) || prev.rank() >= here.rank() {
            return Err(invalid(format!("chain is not strictly ascending at step {step}")));
        }
        here.verify(ring)
            .map_err(|e| invalid(format!("step {step}: {e}")))?;
        let (sub_ring, back) = here.to_ring(ring)?;
        let grading = universal_grading(&sub_ring)?;
        let mut to_local = vec![usize::MAX; ring.rank()];
        for (local, &parent) in back.iter().enumerate() {
            to_local[parent] = local;
        }
        let mut degree_set: Vec<usize> = prev
            .members()
            .iter()
            .map(|&p| grading.degree[to_local[p]])
            .collect();
        degree_set.sort_unstable();
        degree_set.dedup();
        let subgroup = subgroup_closure(&grading.group, &degree_set);
        if subgroup.members() != degree_set.as_slice() {
            return Err(invalid(format!(
                "step {step}: degrees of the lower term do not form a subgroup"
            )));
        }
        let preimage = component_subring(&grading, &subgroup);
        let preimage_parent: Vec<usize> =
            preimage.members().iter().map(|&i| back[i]).collect();
        if preimage_parent != prev.members() {
            return Err(invalid(format!(
                "step {step}: lower term is not a full component subring"
            )));
        }
        if !subgroup.is_normal(&grading.group) {
            return Err(invalid(format!(
                "step {step}: grading subgroup of the lower term is not normal"
            )));
        }
        let (quotient_group, _) = quotient(&grading.group, &subgroup)?;
        if !is_isomorphic(&quotient_group, &record.factors[step - 1]) {
            return Err(invalid(format!(
                "step {step}: stated factor is not the grading quotient"
            )));
        }
        // FPdim bookkeeping.
        let dim_here = fpdim(&sub_ring)?.total;
        let (prev_ring, _) = prev.to_ring(ring)?;
        let dim_prev = fpdim(&prev_ring)?.total;
        let expected = record.factors[step - 1].order() as f64 * dim_prev;
        if (dim_here - expected).abs() > DIMENSION_TOL * expected.max(1.0) {
            return Err(invalid(format!(
                "step {step}: FPdim {dim_here} ≠ |G|·FPdim = {expected}"
            )));
        }
    }
    Ok(())
}

/// Refines a central series into a composition series: every step whose
/// factor is not simple is expanded through a composition series of that
/// factor group, pulled back along the quotient grading.
pub fn refine_central_series(
    ring: &FusionRing,
    record: &CentralSeriesRecord,
) -> Result<CentralSeriesRecord> {
    verify_series(ring, record)?;
    let mut chain = vec![record.chain[0].clone()];
    let mut factors = Vec::new();
    for step in 1..record.chain.len() {
        let prev = &record.chain[step - 1];
        let here = &record.chain[step];
        let (sub_ring, back) = here.to_ring(ring)?;
        let grading = universal_grading(&sub_ring)?;
        let mut to_local = vec![usize::MAX; ring.rank()];
        for (local, &parent) in back.iter().enumerate() {
            to_local[parent] = local;
        }
        let mut degree_set: Vec<usize> = prev
            .members()
            .iter()
            .map(|&p| grading.degree[to_local[p]])
            .collect();
        degree_set.sort_unstable();
        degree_set.dedup();
        let normal = Subgroup::from_sorted(degree_set);
        let (quotient_group, coset_of) = quotient(&grading.group, &normal)?;
        if quotient_group.order() == 1 {
            return Err(Error::InvalidSeries(format!(
                "step {step} is not a proper extension"
            )));
        }
        let group_series = composition_series_group(&quotient_group)?;
        if group_series.length() == 1 {
            // already simple: keep the step as given
            chain.push(here.clone());
            factors.push(record.factors[step - 1].clone());
            continue;
        }
        for j in 1..group_series.chain.len() {
            let quotient_part = &group_series.chain[j];
            let preimage: Vec<usize> = (0..grading.group.order())
                .filter(|&u| quotient_part.contains(coset_of[u]))
                .collect();
            let preimage = Subgroup::from_sorted(preimage);
            let local = component_subring(&grading, &preimage);
            let parent_members: Vec<usize> =
                local.members().iter().map(|&i| back[i]).collect();
            chain.push(Subring::from_sorted(parent_members));
            factors.push(group_series.factors[j - 1].clone());
        }
    }
    Ok(CentralSeriesRecord { chain, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{deligne_product, pointed_ring, rep_ring, tambara_yamagami};
    use crate::group::{cyclic, dihedral, direct_product, symmetric, GroupDescriptor};

    fn cyc(p: usize) -> GroupDescriptor {
        GroupDescriptor::Cyclic(p)
    }

    #[test]
    fn ucs_of_pointed_is_two_steps() {
        let ring = pointed_ring(&symmetric(4).unwrap());
        let chain = upper_central_series(&ring).unwrap();
        assert_eq!(chain.len(), 2);
        assert!(chain[0].is_full(&ring));
        assert!(chain[1].is_unit_only(&ring));
        assert!(is_nilpotent(&ring).unwrap());
    }

    #[test]
    fn ucs_of_ty_z3() {
        let ring = tambara_yamagami(&cyclic(3)).unwrap();
        let chain = upper_central_series(&ring).unwrap();
        let ranks: Vec<usize> = chain.iter().map(|s| s.rank()).collect();
        assert_eq!(ranks, vec![4, 3, 1]);
        assert!(is_nilpotent(&ring).unwrap());
    }

    #[test]
    fn rep_s3_stabilizes_at_full() {
        let ring = rep_ring(&symmetric(3).unwrap()).unwrap();
        let chain = upper_central_series(&ring).unwrap();
        assert_eq!(chain.len(), 2);
        assert!(chain[0].is_full(&ring));
        assert!(chain[1].is_full(&ring));
        assert!(!is_nilpotent(&ring).unwrap());
        assert!(matches!(
            canonical_composition_series(&ring),
            Err(Error::NotNilpotent { .. })
        ));
    }

    #[test]
    fn canonical_series_of_pointed_z6() {
        let ring = pointed_ring(&cyclic(6));
        let record = canonical_composition_series(&ring).unwrap();
        assert_eq!(record.length(), 2);
        let f = record.factor_multiset();
        assert_eq!(f.multiplicity(&cyc(2)), 1);
        assert_eq!(f.multiplicity(&cyc(3)), 1);
        verify_series(&ring, &record).unwrap();
    }

    #[test]
    fn ty_z3_series() {
        let ring = tambara_yamagami(&cyclic(3)).unwrap();
        let record = canonical_composition_series(&ring).unwrap();
        assert_eq!(record.length(), 2);
        let f = record.factor_multiset();
        assert_eq!(f.multiplicity(&cyc(2)), 1);
        assert_eq!(f.multiplicity(&cyc(3)), 1);
        let all = all_composition_series(&ring, 100).unwrap();
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn ty_z2_has_one_series() {
        let ring = tambara_yamagami(&cyclic(2)).unwrap();
        let all = all_composition_series(&ring, 100).unwrap();
        assert_eq!(all.len(), 1);
        let f = all[0].factor_multiset();
        assert_eq!(f.multiplicity(&cyc(2)), 2);
    }

    #[test]
    fn pointed_z2xz4_has_five_series() {
        let g = direct_product(&cyclic(2), &cyclic(4)).unwrap();
        let ring = pointed_ring(&g);
        let report = jordan_holder_check(&ring, 100).unwrap();
        assert_eq!(report.series_count, 5);
        assert!(report.pass);
    }

    #[test]
    fn pointed_d4_has_seven_series() {
        let ring = pointed_ring(&dihedral(4));
        let report = jordan_holder_check(&ring, 100).unwrap();
        assert_eq!(report.series_count, 7);
        assert!(report.pass);
    }

    #[test]
    fn factors_of_pointed_s4() {
        let ring = pointed_ring(&symmetric(4).unwrap());
        let f = composition_factors(&ring).unwrap();
        assert_eq!(f.multiplicity(&cyc(2)), 3);
        assert_eq!(f.multiplicity(&cyc(3)), 1);
    }

    #[test]
    fn trivial_ring_has_empty_factors() {
        let ring = pointed_ring(&cyclic(1));
        let f = composition_factors(&ring).unwrap();
        assert!(f.is_empty());
        let all = all_composition_series(&ring, 10).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].length(), 0);
    }

    #[test]
    fn refine_ucs_of_ty_z4() {
        let ring = tambara_yamagami(&cyclic(4)).unwrap();
        let ucs = upper_central_series_record(&ring).unwrap();
        assert_eq!(ucs.length(), 2); // factors Z4 then Z2
        let refined = refine_central_series(&ring, &ucs).unwrap();
        assert_eq!(refined.length(), 3);
        assert_eq!(refined.factor_multiset().multiplicity(&cyc(2)), 3);
        verify_series(&ring, &refined).unwrap();
    }

    #[test]
    fn refine_one_step_pointed_s3() {
        let g = symmetric(3).unwrap();
        let ring = pointed_ring(&g);
        let record = CentralSeriesRecord {
            chain: vec![Subring::unit_only(&ring), Subring::full(&ring)],
            factors: vec![g],
        };
        let refined = refine_central_series(&ring, &record).unwrap();
        assert_eq!(refined.length(), 2);
        let f = refined.factor_multiset();
        assert_eq!(f.multiplicity(&cyc(2)), 1);
        assert_eq!(f.multiplicity(&cyc(3)), 1);
    }

    #[test]
    fn refine_keeps_simple_steps() {
        let ring = pointed_ring(&cyclic(5));
        let record = canonical_composition_series(&ring).unwrap();
        let refined = refine_central_series(&ring, &record).unwrap();
        assert_eq!(refined.length(), record.length());
        assert_eq!(
            refined
                .chain
                .iter()
                .map(|s| s.members().to_vec())
                .collect::<Vec<_>>(),
            record
                .chain
                .iter()
                .map(|s| s.members().to_vec())
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn deligne_product_factors_concatenate() {
        let a = tambara_yamagami(&cyclic(2)).unwrap();
        let b = pointed_ring(&cyclic(3));
        let p = deligne_product(&a, &b);
        let f = composition_factors(&p).unwrap();
        assert_eq!(f.multiplicity(&cyc(2)), 2);
        assert_eq!(f.multiplicity(&cyc(3)), 1);
        assert_eq!(f.total(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let g = direct_product(&cyclic(2), &cyclic(4)).unwrap();
        let ring = pointed_ring(&g);
        assert!(matches!(
            all_composition_series(&ring, 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn count_matches_enumeration() {
        for ring in [
            pointed_ring(&direct_product(&cyclic(2), &cyclic(4)).unwrap()),
            pointed_ring(&dihedral(4)),
            pointed_ring(&cyclic(12)),
            tambara_yamagami(&cyclic(4)).unwrap(),
            rep_ring(&dihedral(4)).unwrap(),
        ] {
            let listed = all_composition_series(&ring, 10_000).unwrap().len();
            let counted = count_composition_series(&ring, 10_000).unwrap();
            assert_eq!(listed, counted);
        }
    }
}
