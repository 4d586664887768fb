//! Fusion subrings and group gradings.
//!
//! The universal grading is computed directly from its definition: simple
//! indices fall into one component exactly when they are linked by tensoring
//! with the adjoint subring (the subring generated by all `x ⊗ x*`), and the
//! components multiply through the tensor product. The neutral component is
//! the adjoint subring, the grading is faithful, and its group is the finest
//! grading group: faithful gradings correspond to quotients by normal
//! subgroups.

use std::collections::BTreeSet;

use crate::group::{normal_subgroups, quotient, FiniteGroup, Subgroup};
use crate::ring::FusionRing;
use crate::{Error, Result};

/// Default rank cap for exhaustive subring enumeration.
pub const DEFAULT_SUBRING_RANK_CAP: usize = 20;

/// A fusion subring of a parent ring, recorded by its sorted member indices.
/// Contains the unit, closed under duals and under taking constituents of
/// products.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subring {
    members: Vec<usize>,
}

impl Subring {
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    /// The whole ring as a subring of itself.
    pub fn full(ring: &FusionRing) -> Self {
        Self {
            members: (0..ring.rank()).collect(),
        }
    }

    /// The trivial subring `{1}`.
    pub fn unit_only(ring: &FusionRing) -> Self {
        Self {
            members: vec![ring.unit()],
        }
    }

    pub fn rank(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_unit_only(&self, ring: &FusionRing) -> bool {
        self.members == [ring.unit()]
    }

    pub fn is_full(&self, ring: &FusionRing) -> bool {
        self.members.len() == ring.rank()
    }

    /// Checks the subring invariants against the parent.
    pub fn verify(&self, ring: &FusionRing) -> Result<()> {
        if !self.contains(ring.unit()) {
            return Err(Error::InternalInconsistency(
                "subring does not contain the unit".into(),
            ));
        }
        for &i in &self.members {
            if !self.contains(ring.dual(i)) {
                return Err(Error::InternalInconsistency(format!(
                    "subring not closed under dual at {i}"
                )));
            }
            for &j in &self.members {
                for &(k, _) in ring.row(i, j) {
                    if !self.contains(k as usize) {
                        return Err(Error::InternalInconsistency(format!(
                            "subring not closed under constituents at ({i}, {j}) → {k}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Materializes the subring as a fusion ring of its own, with the map
    /// from new indices back to parent indices.
    pub fn to_ring(&self, ring: &FusionRing) -> Result<(FusionRing, Vec<usize>)> {
        let mut back = vec![usize::MAX; ring.rank()];
        for (s, &p) in self.members.iter().enumerate() {
            back[p] = s;
        }
        let mut coeffs = Vec::new();
        for (si, &pi) in self.members.iter().enumerate() {
            for (sj, &pj) in self.members.iter().enumerate() {
                for &(pk, n) in ring.row(pi, pj) {
                    let sk = back[pk as usize];
                    if sk == usize::MAX {
                        return Err(Error::InternalInconsistency(format!(
                            "member set not closed at ({pi}, {pj})"
                        )));
                    }
                    coeffs.push((si, sj, sk, n));
                }
            }
        }
        let labels = self
            .members
            .iter()
            .map(|&p| ring.label(p).to_string())
            .collect();
        let dual = self
            .members
            .iter()
            .map(|&p| back[ring.dual(p)])
            .collect::<Vec<_>>();
        if dual.iter().any(|&d| d == usize::MAX) {
            return Err(Error::InternalInconsistency(
                "member set not closed under dual".into(),
            ));
        }
        let sub = FusionRing::new(
            self.members.len(),
            labels,
            back[ring.unit()],
            dual,
            coeffs,
        )?;
        Ok((sub, self.members.clone()))
    }
}

/// Smallest fusion subring containing `seed`: saturates under duals and
/// constituents of pairwise products by worklist.
pub fn closure(ring: &FusionRing, seed: &[usize]) -> Subring {
    let rank = ring.rank();
    let mut mask = vec![false; rank];
    let mut members = Vec::new();
    let push = |mask: &mut Vec<bool>, members: &mut Vec<usize>, x: usize| {
        if !mask[x] {
            mask[x] = true;
            members.push(x);
        }
    };
    push(&mut mask, &mut members, ring.unit());
    for &s in seed {
        push(&mut mask, &mut members, s);
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        push(&mut mask, &mut members, ring.dual(x));
        for j in 0..=i {
            let y = members[j];
            for &(k, _) in ring.row(x, y) {
                push(&mut mask, &mut members, k as usize);
            }
            for &(k, _) in ring.row(y, x) {
                push(&mut mask, &mut members, k as usize);
            }
        }
        i += 1;
    }
    members.sort_unstable();
    Subring::from_sorted(members)
}

/// The adjoint subring: generated by all constituents of `x_i ⊗ x_i*`.
pub fn adjoint(ring: &FusionRing) -> Subring {
    let mut seed = BTreeSet::new();
    for i in 0..ring.rank() {
        for &(k, _) in ring.row(i, ring.dual(i)) {
            seed.insert(k as usize);
        }
    }
    let seed: Vec<usize> = seed.into_iter().collect();
    closure(ring, &seed)
}

/// A grading of a fusion ring by a finite group: a degree map on simple
/// indices multiplicative on tensor constituents.
#[derive(Clone, Debug)]
pub struct Grading {
    pub group: FiniteGroup,
    /// Group element index per simple index.
    pub degree: Vec<usize>,
    /// Whether the degree map is surjective.
    pub faithful: bool,
}

impl Grading {
    /// Members of the component `C_g`.
    pub fn component(&self, g: usize) -> Vec<usize> {
        (0..self.degree.len())
            .filter(|&i| self.degree[i] == g)
            .collect()
    }

    /// Partition of simple indices by degree, indexed by group element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.group.order()];
        for (i, &g) in self.degree.iter().enumerate() {
            out[g].push(i);
        }
        out
    }
}

/// Union-find over simple indices.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// The universal (finest faithful) grading. Components are the equivalence
/// classes of simples under "j is a constituent of i ⊗ a for some adjoint
/// a"; the group law is induced by the tensor product and re-verified to be
/// well defined on every pair of components.
pub fn universal_grading(ring: &FusionRing) -> Result<Grading> {
    let rank = ring.rank();
    let adj = adjoint(ring);
    let mut uf = UnionFind::new(rank);
    for i in 0..rank {
        for &a in adj.members() {
            for &(k, _) in ring.row(i, a) {
                uf.union(i, k as usize);
            }
        }
    }
    // Components, neutral class first, others ordered by smallest member.
    let mut roots: Vec<usize> = Vec::new();
    let mut class_of_root = vec![usize::MAX; rank];
    let unit_root = uf.find(ring.unit());
    roots.push(unit_root);
    class_of_root[unit_root] = 0;
    for i in 0..rank {
        let r = uf.find(i);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = roots.len();
            roots.push(r);
        }
    }
    let class_count = roots.len();
    let degree: Vec<usize> = (0..rank).map(|i| class_of_root[uf.find(i)]).collect();
    let mut components = vec![Vec::new(); class_count];
    for (i, &c) in degree.iter().enumerate() {
        components[c].push(i);
    }
    // Neutral component must be exactly the adjoint subring.
    if components[0] != adj.members() {
        return Err(Error::InternalInconsistency(
            "neutral component of the universal grading differs from the adjoint subring".into(),
        ));
    }
    // Induced product on components, verified well-defined on every pair.
    let mut table = vec![0u32; class_count * class_count];
    for a in 0..class_count {
        for b in 0..class_count {
            let mut targets = BTreeSet::new();
            for &i in &components[a] {
                for &j in &components[b] {
                    for &(k, _) in ring.row(i, j) {
                        targets.insert(degree[k as usize]);
                    }
                }
            }
            if targets.len() != 1 {
                return Err(Error::InternalInconsistency(format!(
                    "component product ({a}, {b}) hits {} components",
                    targets.len()
                )));
            }
            table[a * class_count + b] = *targets.iter().next().expect("nonempty") as u32;
        }
    }
    let labels = components
        .iter()
        .map(|c| format!("[{}]", ring.label(c[0])))
        .collect();
    let group = FiniteGroup::from_flat_table(class_count, table, labels)
        .map_err(|e| Error::InternalInconsistency(format!("component product law: {e}")))?;
    if group.identity() != 0 {
        return Err(Error::InternalInconsistency(
            "neutral component is not the grading identity".into(),
        ));
    }
    Ok(Grading {
        group,
        degree,
        faithful: true,
    })
}

/// The subring `⊕_{h ∈ H} C_h` of all simples graded inside a subgroup.
pub fn component_subring(grading: &Grading, subgroup: &Subgroup) -> Subring {
    let members: Vec<usize> = (0..grading.degree.len())
        .filter(|&i| subgroup.contains(grading.degree[i]))
        .collect();
    Subring::from_sorted(members)
}

/// All faithful gradings coarser than `base`: one per normal subgroup `N` of
/// the base group, grading by the quotient. The neutral component of the
/// quotient grading is the component subring of `N`.
pub fn quotient_gradings(
    ring: &FusionRing,
    base: &Grading,
) -> Result<Vec<(Subgroup, Grading)>> {
    if !base.faithful {
        return Err(Error::InternalInconsistency(
            "quotient gradings require a faithful base grading".into(),
        ));
    }
    let _ = ring;
    let mut out = Vec::new();
    for n in normal_subgroups(&base.group) {
        let (qgroup, coset_of) = quotient(&base.group, &n)?;
        let degree = base.degree.iter().map(|&g| coset_of[g]).collect();
        out.push((
            n,
            Grading {
                group: qgroup,
                degree,
                faithful: true,
            },
        ));
    }
    Ok(out)
}

/// Complete list of fusion subrings, saturated from single-generator
/// closures. Equivalent to closing every subset of the basis, but only
/// touches actual subrings. Errors out above the rank cap.
pub fn all_subrings_capped(ring: &FusionRing, rank_cap: usize) -> Result<Vec<Subring>> {
    if ring.rank() > rank_cap {
        return Err(Error::CapExceeded {
            what: "subring enumeration rank",
            cap: rank_cap,
        });
    }
    let trivial = closure(ring, &[]);
    let mut known: BTreeSet<Vec<usize>> = [trivial.members.clone()].into_iter().collect();
    let mut queue = vec![trivial.members.clone()];
    while let Some(current) = queue.pop() {
        for x in 0..ring.rank() {
            if current.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = current.clone();
            seed.push(x);
            let closed = closure(ring, &seed);
            if known.insert(closed.members.clone()) {
                queue.push(closed.members.clone());
            }
        }
    }
    let mut subs: Vec<Subring> = known.into_iter().map(Subring::from_sorted).collect();
    subs.sort_by(|a, b| (a.rank(), a.members()).cmp(&(b.rank(), b.members())));
    Ok(subs)
}

/// [`all_subrings_capped`] with the default rank cap.
pub fn all_subrings(ring: &FusionRing) -> Result<Vec<Subring>> {
    all_subrings_capped(ring, DEFAULT_SUBRING_RANK_CAP)
}
