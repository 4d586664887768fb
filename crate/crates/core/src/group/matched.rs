//! Matched pairs of groups from exact factorizations, and their
//! Zappa-Szép products.
//!
//! An exact factorization `G = FΓ` with `F ∩ Γ = {e}` decomposes every
//! product `s·y` (`s ∈ Γ`, `y ∈ F`) uniquely as `(s ▷ y)(s ◁ y)` with
//! `s ▷ y ∈ F` and `s ◁ y ∈ Γ`. The two actions reassemble the group on the
//! set `F × Γ` via `(x, s)(y, t) = (x (s ▷ y), (s ◁ y) t)`.

use super::subgroup::Subgroup;
use super::FiniteGroup;
use crate::{Error, Result};

/// A matched pair `(F, Γ)` with its mutual actions tabulated.
#[derive(Clone, Debug)]
pub struct MatchedPair {
    pub f: FiniteGroup,
    pub gamma: FiniteGroup,
    /// Members of F and Γ in the ambient group, when derived from one.
    pub f_members: Vec<usize>,
    pub gamma_members: Vec<usize>,
    /// `act_right[s * |F| + y]` is the F-index of `s ▷ y`.
    act_right: Vec<usize>,
    /// `act_left[s * |F| + y]` is the Γ-index of `s ◁ y`.
    act_left: Vec<usize>,
}

impl MatchedPair {
    pub fn right_action(&self, s: usize, y: usize) -> usize {
        self.act_right[s * self.f.order() + y]
    }

    pub fn left_action(&self, s: usize, y: usize) -> usize {
        self.act_left[s * self.f.order() + y]
    }

    /// The direct-product matched pair: both actions trivial.
    pub fn trivial_actions(f: FiniteGroup, gamma: FiniteGroup) -> Self {
        let nf = f.order();
        let ng = gamma.order();
        let mut act_right = vec![0usize; nf * ng];
        let mut act_left = vec![0usize; nf * ng];
        for s in 0..ng {
            for y in 0..nf {
                act_right[s * nf + y] = y;
                act_left[s * nf + y] = s;
            }
        }
        MatchedPair {
            f,
            gamma,
            f_members: Vec::new(),
            gamma_members: Vec::new(),
            act_right,
            act_left,
        }
    }
}

/// Derives the matched pair from an exact factorization `G = FΓ`.
pub fn matched_pair_from_factorization(
    group: &FiniteGroup,
    f: &Subgroup,
    gamma: &Subgroup,
) -> Result<MatchedPair> {
    let nf = f.order();
    let ng = gamma.order();
    if nf * ng != group.order() {
        return Err(Error::NotExactFactorization(format!(
            "|F|·|Γ| = {}·{} ≠ |G| = {}",
            nf,
            ng,
            group.order()
        )));
    }
    let shared: Vec<usize> = f
        .members()
        .iter()
        .copied()
        .filter(|&x| gamma.contains(x))
        .collect();
    if shared != [group.identity()] {
        return Err(Error::NotExactFactorization(format!(
            "F ∩ Γ has order {}",
            shared.len()
        )));
    }
    // Unique decomposition table g = y·s.
    let mut decompose: Vec<Option<(usize, usize)>> = vec![None; group.order()];
    for (yi, &y) in f.members().iter().enumerate() {
        for (si, &s) in gamma.members().iter().enumerate() {
            let g = group.mul(y, s);
            if decompose[g].is_some() {
                return Err(Error::NotExactFactorization(format!(
                    "element {} factors twice as y·s",
                    group.label(g)
                )));
            }
            decompose[g] = Some((yi, si));
        }
    }
    let (f_group, f_members) = f.materialize(group)?;
    let (gamma_group, gamma_members) = gamma.materialize(group)?;
    let mut act_right = vec![0usize; nf * ng];
    let mut act_left = vec![0usize; nf * ng];
    for (si, &s) in gamma.members().iter().enumerate() {
        for (yi, &y) in f.members().iter().enumerate() {
            let p = group.mul(s, y);
            let (ri, li) = decompose[p].ok_or_else(|| {
                Error::NotExactFactorization(format!(
                    "element {} has no y·s decomposition",
                    group.label(p)
                ))
            })?;
            act_right[si * nf + yi] = ri;
            act_left[si * nf + yi] = li;
        }
    }
    Ok(MatchedPair {
        f: f_group,
        gamma: gamma_group,
        f_members,
        gamma_members,
        act_right,
        act_left,
    })
}

/// The group `F ⋈ Γ` on the set `F × Γ` with the matched-pair product law.
/// Group axioms are verified on construction; a matched pair that fails them
/// is rejected.
pub fn zappa_szep(mp: &MatchedPair) -> Result<FiniteGroup> {
    let nf = mp.f.order();
    let ng = mp.gamma.order();
    let order = nf * ng;
    let enc = |x: usize, s: usize| x * ng + s;
    let mut table = vec![0u32; order * order];
    for x in 0..nf {
        for s in 0..ng {
            for y in 0..nf {
                for t in 0..ng {
                    let xr = mp.f.mul(x, mp.right_action(s, y));
                    let sl = mp.gamma.mul(mp.left_action(s, y), t);
                    table[enc(x, s) * order + enc(y, t)] = enc(xr, sl) as u32;
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(order);
    for x in 0..nf {
        for s in 0..ng {
            labels.push(format!("({},{})", mp.f.label(x), mp.gamma.label(s)));
        }
    }
    FiniteGroup::from_flat_table(order, table, labels)
        .map_err(|e| Error::InvalidMatchedPair(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroup::subgroup_closure;
    use crate::group::{cyclic, direct_product, is_isomorphic, symmetric_perm, Perm};

    #[test]
    fn trivial_actions_give_direct_product() {
        let mp = MatchedPair::trivial_actions(cyclic(2), cyclic(3));
        let g = zappa_szep(&mp).unwrap();
        assert!(is_isomorphic(&g, &cyclic(6)));
        assert!(is_isomorphic(
            &g,
            &direct_product(&cyclic(2), &cyclic(3)).unwrap()
        ));
    }

    #[test]
    fn s3_from_z2_and_z3() {
        let pg = symmetric_perm(3).unwrap();
        let g = &pg.group;
        let transposition = pg
            .index_of(&Perm::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let three_cycle = pg
            .index_of(&Perm::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap();
        let f = subgroup_closure(g, &[transposition]);
        let gamma = subgroup_closure(g, &[three_cycle]);
        let mp = matched_pair_from_factorization(g, &f, &gamma).unwrap();
        assert_eq!(mp.f.order(), 2);
        assert_eq!(mp.gamma.order(), 3);
        let zs = zappa_szep(&mp).unwrap();
        assert!(is_isomorphic(&zs, g));
    }

    #[test]
    fn whole_group_twice_is_not_exact() {
        let g = cyclic(4);
        let full = subgroup_closure(&g, &[1]);
        assert!(matches!(
            matched_pair_from_factorization(&g, &full, &full),
            Err(Error::NotExactFactorization(_))
        ));
    }
}
