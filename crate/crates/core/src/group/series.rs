//! Composition series of finite groups.
//!
//! A composition series `{e} = K_0 ◁ K_1 ◁ … ◁ K_m = G` has each step
//! maximal normal in the next, so the factors `K_i/K_{i-1}` are simple. The
//! factors counted with multiplicities do not depend on the chosen series;
//! the ring layer leans on this as its group-theoretic oracle.

use std::collections::HashMap;

use super::descriptor::FactorMultiset;
use super::subgroup::{maximal_normal_subgroups, normal_subgroups, quotient, Subgroup};
use super::FiniteGroup;
use crate::{Error, Result};

/// Whether the group is simple: nontrivial, with no proper nontrivial
/// normal subgroup.
pub fn is_simple(group: &FiniteGroup) -> bool {
    group.order() > 1 && normal_subgroups(group).len() == 2
}

/// A composition series of a group: an ascending chain of subgroups of the
/// original group together with the simple factor groups of each step.
#[derive(Clone, Debug)]
pub struct GroupSeries {
    /// `chain[0]` is trivial, `chain.last()` is the full group; members are
    /// indices into the original group.
    pub chain: Vec<Subgroup>,
    /// `factors[i]` is the quotient `chain[i+1] / chain[i]`.
    pub factors: Vec<FiniteGroup>,
}

impl GroupSeries {
    pub fn length(&self) -> usize {
        self.factors.len()
    }

    pub fn factor_multiset(&self) -> FactorMultiset {
        FactorMultiset::from_groups(&self.factors)
    }
}

/// One composition series, chosen canonically: at each step take the first
/// maximal normal subgroup in the (order, member list) ordering.
pub fn composition_series_group(group: &FiniteGroup) -> Result<GroupSeries> {
    let full: Vec<usize> = (0..group.order()).collect();
    let mut chain_rev = vec![Subgroup::from_sorted(full.clone())];
    let mut factors_rev = Vec::new();
    let mut current = group.clone();
    let mut back: Vec<usize> = full;
    while current.order() > 1 {
        let maximal = maximal_normal_subgroups(&current);
        let chosen = maximal
            .first()
            .ok_or_else(|| Error::InternalInconsistency("nontrivial group with no maximal normal subgroup".into()))?;
        let (factor, _) = quotient(&current, chosen)?;
        factors_rev.push(factor);
        let (sub, local) = chosen.materialize(&current)?;
        back = local.iter().map(|&i| back[i]).collect();
        let mut outer: Vec<usize> = back.clone();
        outer.sort_unstable();
        chain_rev.push(Subgroup::from_sorted(outer));
        current = sub;
    }
    chain_rev.reverse();
    factors_rev.reverse();
    Ok(GroupSeries {
        chain: chain_rev,
        factors: factors_rev,
    })
}

/// The composition factors of the group, counted with multiplicities.
pub fn composition_factors_group(group: &FiniteGroup) -> Result<FactorMultiset> {
    Ok(composition_series_group(group)?.factor_multiset())
}

/// Every composition series. `cap` bounds the number of series; exceeding it
/// is an error rather than a truncation.
pub fn all_composition_series_group(group: &FiniteGroup, cap: usize) -> Result<Vec<GroupSeries>> {
    let full: Vec<usize> = (0..group.order()).collect();
    let mut out = Vec::new();
    descend_all(group, &full, &mut Vec::new(), &mut Vec::new(), &mut out, cap)?;
    out.sort_by(|a, b| {
        let ka: Vec<&[usize]> = a.chain.iter().map(|s| s.members()).collect();
        let kb: Vec<&[usize]> = b.chain.iter().map(|s| s.members()).collect();
        ka.cmp(&kb)
    });
    Ok(out)
}

fn descend_all(
    current: &FiniteGroup,
    back: &[usize],
    chain_rev: &mut Vec<Subgroup>,
    factors_rev: &mut Vec<FiniteGroup>,
    out: &mut Vec<GroupSeries>,
    cap: usize,
) -> Result<()> {
    let mut outer: Vec<usize> = back.to_vec();
    outer.sort_unstable();
    chain_rev.push(Subgroup::from_sorted(outer));
    if current.order() == 1 {
        if out.len() >= cap {
            return Err(Error::CapExceeded {
                what: "composition series enumeration",
                cap,
            });
        }
        let mut chain = chain_rev.clone();
        chain.reverse();
        let mut factors = factors_rev.clone();
        factors.reverse();
        out.push(GroupSeries { chain, factors });
    } else {
        for maximal in maximal_normal_subgroups(current) {
            let (factor, _) = quotient(current, &maximal)?;
            let (sub, local) = maximal.materialize(current)?;
            let sub_back: Vec<usize> = local.iter().map(|&i| back[i]).collect();
            factors_rev.push(factor);
            descend_all(&sub, &sub_back, chain_rev, factors_rev, out, cap)?;
            factors_rev.pop();
        }
    }
    chain_rev.pop();
    Ok(())
}

/// Number of composition series, memoized over subgroup member sets so that
/// large lattices (elementary abelian 2-groups) stay cheap.
pub fn count_composition_series_group(group: &FiniteGroup, cap: usize) -> Result<usize> {
    fn go(
        current: &FiniteGroup,
        back_sorted: Vec<usize>,
        memo: &mut HashMap<Vec<usize>, usize>,
        cap: usize,
    ) -> Result<usize> {
        if let Some(&c) = memo.get(&back_sorted) {
            return Ok(c);
        }
        let count = if current.order() == 1 {
            1
        } else {
            let mut total = 0usize;
            for maximal in maximal_normal_subgroups(current) {
                let (sub, local) = maximal.materialize(current)?;
                let mut sub_back: Vec<usize> =
                    local.iter().map(|&i| back_sorted[i]).collect();
                sub_back.sort_unstable();
                total += go(&sub, sub_back, memo, cap)?;
                if total > cap {
                    return Err(Error::CapExceeded {
                        what: "composition series count",
                        cap,
                    });
                }
            }
            total
        };
        memo.insert(back_sorted, count);
        Ok(count)
    }
    let full: Vec<usize> = (0..group.order()).collect();
    go(group, full, &mut HashMap::new(), cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::descriptor::GroupDescriptor;
    use crate::group::{alternating, cyclic, dihedral, direct_product, quaternion8, symmetric};

    fn cyc(p: usize) -> GroupDescriptor {
        GroupDescriptor::Cyclic(p)
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&cyclic(5)));
        assert!(!is_simple(&cyclic(6)));
        assert!(!is_simple(&cyclic(1)));
        assert!(is_simple(&alternating(5).unwrap()));
        assert!(!is_simple(&symmetric(4).unwrap()));
    }

    #[test]
    fn factors_of_s5_are_a5_and_c2() {
        let s5 = symmetric(5).unwrap();
        let f = composition_factors_group(&s5).unwrap();
        assert_eq!(f.total(), 2);
        assert_eq!(f.multiplicity(&cyc(2)), 1);
        assert_eq!(
            f.multiplicity(&GroupDescriptor::CatalogSimple { order: 60, name: "A5" }),
            1
        );
    }

    #[test]
    fn factors_of_z12() {
        let f = composition_factors_group(&cyclic(12)).unwrap();
        assert_eq!(f.multiplicity(&cyc(2)), 2);
        assert_eq!(f.multiplicity(&cyc(3)), 1);
    }

    #[test]
    fn factors_of_s4() {
        let f = composition_factors_group(&symmetric(4).unwrap()).unwrap();
        assert_eq!(f.multiplicity(&cyc(2)), 3);
        assert_eq!(f.multiplicity(&cyc(3)), 1);
        assert_eq!(f.total(), 4);
    }

    #[test]
    fn series_product_of_factor_orders_is_group_order() {
        for g in [
            symmetric(4).unwrap(),
            dihedral(6),
            quaternion8(),
            cyclic(30),
        ] {
            let s = composition_series_group(&g).unwrap();
            let product: usize = s.factors.iter().map(|f| f.order()).product();
            assert_eq!(product, g.order());
            // chain is ascending and starts/ends correctly
            assert_eq!(s.chain[0].order(), 1);
            assert_eq!(s.chain.last().unwrap().order(), g.order());
        }
    }

    #[test]
    fn all_series_counts() {
        assert_eq!(
            all_composition_series_group(&cyclic(6), 100).unwrap().len(),
            2
        );
        let c2xc4 = direct_product(&cyclic(2), &cyclic(4)).unwrap();
        assert_eq!(all_composition_series_group(&c2xc4, 100).unwrap().len(), 5);
        // D4 subgroup lattice has 7 maximal chains.
        assert_eq!(all_composition_series_group(&dihedral(4), 100).unwrap().len(), 7);
        assert_eq!(all_composition_series_group(&quaternion8(), 100).unwrap().len(), 3);
    }

    #[test]
    fn count_matches_enumeration() {
        for g in [
            cyclic(12),
            dihedral(4),
            quaternion8(),
            direct_product(&cyclic(2), &cyclic(4)).unwrap(),
            symmetric(4).unwrap(),
        ] {
            let listed = all_composition_series_group(&g, 10_000).unwrap().len();
            let counted = count_composition_series_group(&g, 10_000).unwrap();
            assert_eq!(listed, counted);
        }
    }

    #[test]
    fn all_series_share_one_multiset() {
        for g in [
            symmetric(4).unwrap(),
            dihedral(6),
            direct_product(&cyclic(4), &cyclic(4)).unwrap(),
            alternating(4).unwrap(),
        ] {
            let all = all_composition_series_group(&g, 10_000).unwrap();
            let first = all[0].factor_multiset();
            assert!(all.iter().all(|s| s.factor_multiset() == first));
        }
    }

    #[test]
    fn cap_is_an_error() {
        let v4 = direct_product(&cyclic(2), &cyclic(2)).unwrap();
        assert!(matches!(
            all_composition_series_group(&v4, 2),
            Err(Error::CapExceeded { .. })
        ));
    }
}
