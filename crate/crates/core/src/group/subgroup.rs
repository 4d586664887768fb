//! Subgroups, normal subgroups, quotients, and conjugacy classes.

use std::collections::BTreeSet;

use super::FiniteGroup;
use crate::{Error, Result};

/// A subgroup recorded as a sorted list of element indices of its parent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Whether the subgroup is closed under conjugation by the whole parent.
    pub fn is_normal(&self, parent: &FiniteGroup) -> bool {
        (0..parent.order())
            .all(|g| self.members.iter().all(|&x| self.contains(parent.conjugate(g, x))))
    }

    /// Materializes the subgroup as a group in its own right. Returns the
    /// group and the map from new indices back to parent indices.
    pub fn materialize(&self, parent: &FiniteGroup) -> Result<(FiniteGroup, Vec<usize>)> {
        let n = self.members.len();
        let mut back = vec![usize::MAX; parent.order()];
        for (i, &m) in self.members.iter().enumerate() {
            back[m] = i;
        }
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = parent.mul(self.members[i], self.members[j]);
                let pi = back[p];
                if pi == usize::MAX {
                    return Err(Error::InternalInconsistency(format!(
                        "member set not closed under product at ({i}, {j})"
                    )));
                }
                table[i * n + j] = pi as u32;
            }
        }
        let labels = self
            .members
            .iter()
            .map(|&m| parent.label(m).to_string())
            .collect();
        let group = FiniteGroup::from_flat_table(n, table, labels)?;
        Ok((group, self.members.clone()))
    }
}

/// Smallest subgroup containing `seed`, by worklist saturation under
/// products. Inverses come along for free in a finite group.
pub fn subgroup_closure(group: &FiniteGroup, seed: &[usize]) -> Subgroup {
    let n = group.order();
    let mut mask = vec![false; n];
    let mut members = Vec::new();
    let push = |mask: &mut Vec<bool>, members: &mut Vec<usize>, x: usize| {
        if !mask[x] {
            mask[x] = true;
            members.push(x);
        }
    };
    push(&mut mask, &mut members, group.identity());
    for &s in seed {
        push(&mut mask, &mut members, s);
    }
    let mut i = 0;
    while i < members.len() {
        for j in 0..=i {
            let (a, b) = (members[i], members[j]);
            let p = group.mul(a, b);
            push(&mut mask, &mut members, p);
            let q = group.mul(b, a);
            push(&mut mask, &mut members, q);
        }
        i += 1;
    }
    members.sort_unstable();
    Subgroup::from_sorted(members)
}

/// Conjugacy classes with a member-to-class lookup. Classes are ordered
/// with the identity class first, then by (element order of representative,
/// class size, smallest member).
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Representative (smallest member) of a class.
    pub fn rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    /// Index of the class containing the inverses of class `c`.
    pub fn inverse_class(&self, group: &FiniteGroup, c: usize) -> usize {
        self.class_of[group.inv(self.rep(c))]
    }
}

pub fn conjugacy_classes(group: &FiniteGroup) -> ConjugacyClasses {
    let n = group.order();
    let mut seen = vec![false; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut class = Vec::new();
        for g in 0..n {
            let y = group.conjugate(g, x);
            if !seen[y] {
                seen[y] = true;
                class.push(y);
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes.sort_by_key(|c| {
        let rep = c[0];
        let is_identity = rep != group.identity();
        (is_identity, group.element_order(rep), c.len(), rep)
    });
    let mut class_of = vec![0usize; n];
    for (ci, class) in classes.iter().enumerate() {
        for &x in class {
            class_of[x] = ci;
        }
    }
    ConjugacyClasses { classes, class_of }
}

/// The center of the group.
pub fn center(group: &FiniteGroup) -> Subgroup {
    let members = (0..group.order())
        .filter(|&z| (0..group.order()).all(|g| group.mul(z, g) == group.mul(g, z)))
        .collect();
    Subgroup::from_sorted(members)
}

/// Centralizer of a single element.
pub fn centralizer(group: &FiniteGroup, x: usize) -> Subgroup {
    let members = (0..group.order())
        .filter(|&g| group.mul(g, x) == group.mul(x, g))
        .collect();
    Subgroup::from_sorted(members)
}

/// Product set of two subsets that are already subgroups of an abelian
/// group: `{a·b}` is again a subgroup, no saturation needed.
fn abelian_join(group: &FiniteGroup, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut mask = vec![false; group.order()];
    let mut members = Vec::new();
    for &x in a {
        for &y in b {
            let p = group.mul(x, y);
            if !mask[p] {
                mask[p] = true;
                members.push(p);
            }
        }
    }
    members.sort_unstable();
    members
}

/// Every subgroup of an abelian group, by saturating joins with cyclic
/// subgroups.
fn abelian_all_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut cyclics: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..group.order() {
        cyclics.insert(subgroup_closure(group, &[x]).members.clone());
    }
    let cyclics: Vec<Vec<usize>> = cyclics.into_iter().collect();
    let trivial = vec![group.identity()];
    let mut known: BTreeSet<Vec<usize>> = [trivial.clone()].into_iter().collect();
    let mut queue = vec![trivial];
    while let Some(h) = queue.pop() {
        for c in &cyclics {
            let j = abelian_join(group, &h, c);
            if known.insert(j.clone()) {
                queue.push(j);
            }
        }
    }
    let mut subs: Vec<Subgroup> = known.into_iter().map(Subgroup::from_sorted).collect();
    subs.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    subs
}

/// Complete list of normal subgroups (including the trivial subgroup and the
/// whole group), sorted by order then member list.
///
/// Abelian groups take the all-subgroups route. Otherwise normal subgroups
/// are saturated as closures of unions of conjugacy classes: a subgroup
/// generated by a conjugation-invariant set is normal, and every normal
/// subgroup is generated by the classes it contains.
pub fn normal_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    if group.is_abelian() {
        return abelian_all_subgroups(group);
    }
    let classes = conjugacy_classes(group);
    let trivial = vec![group.identity()];
    let mut known: BTreeSet<Vec<usize>> = [trivial.clone()].into_iter().collect();
    let mut queue = vec![trivial];
    while let Some(n) = queue.pop() {
        let n_set: BTreeSet<usize> = n.iter().copied().collect();
        for class in &classes.classes {
            if class.iter().all(|x| n_set.contains(x)) {
                continue;
            }
            let mut seed = n.clone();
            seed.extend_from_slice(class);
            let closed = subgroup_closure(group, &seed);
            if known.insert(closed.members.clone()) {
                queue.push(closed.members.clone());
            }
        }
    }
    let mut subs: Vec<Subgroup> = known.into_iter().map(Subgroup::from_sorted).collect();
    subs.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    subs
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Maximal subgroups of an abelian group: they have prime index `p` and
/// contain the image of the p-power map, so they pull back from hyperplanes
/// of the elementary abelian quotient `G/G^p`.
fn abelian_maximal_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let n = group.order();
    let mut out = Vec::new();
    for p in prime_factors(n) {
        // K = G^p as a member set (a subgroup, since the group is abelian).
        let mut kmask = vec![false; n];
        for x in 0..n {
            kmask[group.pow(x, p)] = true;
        }
        let k: Vec<usize> = (0..n).filter(|&x| kmask[x]).collect();
        // Cosets of K.
        let mut coset_of = vec![usize::MAX; n];
        let mut num_cosets = 0usize;
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &h in &k {
                coset_of[group.mul(x, h)] = num_cosets;
            }
            num_cosets += 1;
        }
        // F_p coordinates on the coset group, built along a greedy basis.
        let mut coords: Vec<Option<Vec<u32>>> = vec![None; num_cosets];
        coords[coset_of[group.identity()]] = Some(Vec::new());
        let mut basis: Vec<usize> = Vec::new(); // basis elements of G
        let mut spanned = vec![coset_of[group.identity()]];
        for x in 0..n {
            let cx = coset_of[x];
            if coords[cx].is_some() {
                continue;
            }
            // New basis vector; extend every known coordinate by 0 and span
            // the p multiples of x.
            basis.push(x);
            let dim = basis.len();
            for &c in &spanned {
                let v = coords[c].as_mut().expect("spanned coset has coords");
                v.resize(dim, 0);
            }
            let snapshot = spanned.clone();
            let mut xpow = x;
            for mult in 1..p as u32 {
                for &c in &snapshot {
                    // pick any element of coset c to shift by xpow
                    let rep = (0..n).find(|&y| coset_of[y] == c).expect("nonempty coset");
                    let target = coset_of[group.mul(rep, xpow)];
                    if coords[target].is_none() {
                        let mut v = coords[c].clone().expect("coords known");
                        v.resize(dim, 0);
                        v[dim - 1] = mult;
                        coords[target] = Some(v);
                        spanned.push(target);
                    }
                }
                xpow = group.mul(xpow, x);
            }
        }
        let rank = basis.len();
        if rank == 0 {
            continue;
        }
        let coords: Vec<Vec<u32>> = coords
            .into_iter()
            .map(|v| {
                let mut v = v.expect("every coset spanned");
                v.resize(rank, 0);
                v
            })
            .collect();
        // Functionals with leading coefficient 1, one per hyperplane.
        let mut functional = vec![0u32; rank];
        loop {
            // next functional in lexicographic order
            let mut i = rank;
            loop {
                if i == 0 {
                    functional.clear();
                    break;
                }
                i -= 1;
                functional[i] += 1;
                if functional[i] < p as u32 {
                    break;
                }
                functional[i] = 0;
            }
            if functional.is_empty() {
                break;
            }
            let lead = functional.iter().position(|&c| c != 0).expect("nonzero");
            if functional[lead] != 1 {
                continue;
            }
            let members: Vec<usize> = (0..n)
                .filter(|&x| {
                    let v = &coords[coset_of[x]];
                    functional
                        .iter()
                        .zip(v)
                        .map(|(&f, &c)| f * c)
                        .sum::<u32>()
                        % p as u32
                        == 0
                })
                .collect();
            out.push(Subgroup::from_sorted(members));
        }
    }
    out.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    out.dedup();
    out
}

/// Maximal normal subgroups: proper normal subgroups with no proper normal
/// subgroup strictly between them and the group; equivalently, the kernels
/// of quotients onto simple groups.
pub fn maximal_normal_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    if group.order() == 1 {
        return Vec::new();
    }
    if group.is_abelian() {
        return abelian_maximal_subgroups(group);
    }
    let normals = normal_subgroups(group);
    let proper: Vec<&Subgroup> = normals.iter().filter(|s| s.order() < group.order()).collect();
    let mut out: Vec<Subgroup> = proper
        .iter()
        .filter(|n| {
            !proper.iter().any(|m| {
                m.order() > n.order() && n.members().iter().all(|&x| m.contains(x))
            })
        })
        .map(|n| (*n).clone())
        .collect();
    out.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    out
}

/// Quotient by a normal subgroup. Returns the coset group and the map from
/// parent elements to coset indices. Cosets are indexed in order of their
/// smallest member, and labeled by its label in brackets.
pub fn quotient(group: &FiniteGroup, normal: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
    if !normal.is_normal(group) {
        return Err(Error::NotNormal {
            order: normal.order(),
        });
    }
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &h in normal.members() {
            coset_of[group.mul(x, h)] = c;
        }
    }
    let m = reps.len();
    let mut table = vec![0u32; m * m];
    for a in 0..m {
        for b in 0..m {
            table[a * m + b] = coset_of[group.mul(reps[a], reps[b])] as u32;
        }
    }
    let labels = reps.iter().map(|&r| format!("[{}]", group.label(r))).collect();
    let q = FiniteGroup::from_flat_table(m, table, labels)?;
    Ok((q, coset_of))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, direct_product, quaternion8, symmetric};

    #[test]
    fn closure_of_empty_seed_is_trivial() {
        let g = symmetric(3).unwrap();
        let s = subgroup_closure(&g, &[]);
        assert_eq!(s.members(), &[g.identity()]);
    }

    #[test]
    fn normal_subgroups_of_s3() {
        let g = symmetric(3).unwrap();
        let ns = normal_subgroups(&g);
        let orders: Vec<usize> = ns.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn maximal_normal_subgroups_of_c2xc4() {
        let g = direct_product(&cyclic(2), &cyclic(4)).unwrap();
        let ms = maximal_normal_subgroups(&g);
        assert_eq!(ms.len(), 3);
        assert!(ms.iter().all(|s| s.order() == 4));
    }

    #[test]
    fn maximal_normal_subgroups_of_c6() {
        let g = cyclic(6);
        let ms = maximal_normal_subgroups(&g);
        let orders: Vec<usize> = ms.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![2, 3]);
    }

    #[test]
    fn quotient_s4_by_a4_is_z2() {
        let s4 = symmetric(4).unwrap();
        let normals = normal_subgroups(&s4);
        let a4 = normals.iter().find(|s| s.order() == 12).unwrap();
        let (q, _) = quotient(&s4, a4).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn quotient_by_trivial_and_full() {
        let g = dihedral(4);
        let triv = Subgroup::from_sorted(vec![g.identity()]);
        let (q1, _) = quotient(&g, &triv).unwrap();
        assert_eq!(q1.order(), g.order());
        let full = subgroup_closure(&g, &(0..g.order()).collect::<Vec<_>>());
        let (q2, _) = quotient(&g, &full).unwrap();
        assert_eq!(q2.order(), 1);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = symmetric(3).unwrap();
        // a subgroup of order 2 is not normal in S3
        let x = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let h = subgroup_closure(&s3, &[x]);
        assert!(quotient(&s3, &h).is_err());
    }

    #[test]
    fn center_of_quaternion_has_order_2() {
        assert_eq!(center(&quaternion8()).order(), 2);
        let c6 = cyclic(6);
        assert_eq!(center(&c6).order(), 6);
    }

    #[test]
    fn conjugacy_classes_of_s3() {
        let g = symmetric(3).unwrap();
        let cc = conjugacy_classes(&g);
        let mut sizes: Vec<usize> = cc.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(cc.classes[0], vec![g.identity()]);
    }

    #[test]
    fn abelian_subgroup_count_z6() {
        let subs = normal_subgroups(&cyclic(6));
        assert_eq!(subs.len(), 4); // divisors of 6
    }

    #[test]
    fn abelian_subgroup_count_klein_squared() {
        // (Z2)^4 has 67 subgroups: 1 + 15 + 35 + 15 + 1.
        let v4 = direct_product(&cyclic(2), &cyclic(2)).unwrap();
        let g = direct_product(&v4, &v4).unwrap();
        assert_eq!(normal_subgroups(&g).len(), 67);
    }
}
