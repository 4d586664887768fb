//! Finite groups as Cayley tables, and the algorithms the ring layer needs:
//! subgroup structure, quotients, composition series, isomorphism testing,
//! character tables, and Zappa-Szép products.

mod chartab;
mod descriptor;
mod io;
mod iso;
mod matched;
pub mod perm;
mod series;
mod subgroup;

pub use chartab::{character_table, character_table_with_seed, CharacterTable};
pub use descriptor::{describe, FactorMultiset, GroupDescriptor};
pub use io::{parse_group_spec, parse_perm_group_spec, GroupFile};
pub use iso::is_isomorphic;
pub use matched::{matched_pair_from_factorization, zappa_szep, MatchedPair};
pub use perm::Perm;
pub use series::{
    all_composition_series_group, composition_factors_group, composition_series_group,
    count_composition_series_group, is_simple, GroupSeries,
};
pub use subgroup::{
    center, centralizer, conjugacy_classes, maximal_normal_subgroups, normal_subgroups, quotient,
    subgroup_closure, ConjugacyClasses, Subgroup,
};

use crate::{Error, Result};
use crate::util::SplitMix64;

/// Hard cap on Cayley-table-backed group orders.
pub const TABLE_CAP: usize = 4096;
/// Orders up to this bound get a full associativity check on construction;
/// larger tables are spot-checked on a deterministic sample of triples.
pub const ASSOC_FULL_CAP: usize = 256;
/// Number of sampled triples for large tables.
const ASSOC_SAMPLES: usize = 1_000_000;
/// Element-enumeration cap for generator closures.
pub const ENUMERATION_CAP: usize = 100_000;

/// A finite group given by its full multiplication table.
///
/// `table[i * order + j]` is the index of the product of elements `i` and `j`.
/// Construction verifies the group axioms (associativity exhaustively up to
/// [`ASSOC_FULL_CAP`], sampled above).
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    labels: Vec<String>,
    identity: usize,
    inverses: Vec<u32>,
}

impl FiniteGroup {
    /// Builds a group from a Cayley table, validating the axioms.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::Parse("empty Cayley table".into()));
        }
        if order > TABLE_CAP {
            return Err(Error::CapExceeded {
                what: "Cayley table order",
                cap: TABLE_CAP,
            });
        }
        if labels.len() != order {
            return Err(Error::Parse(format!(
                "{} labels for {} elements",
                labels.len(),
                order
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &table {
            if row.len() != order {
                return Err(Error::Parse("Cayley table is not square".into()));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::Parse(format!("table entry {v} out of range")));
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat_table(order, flat, labels)
    }

    pub(crate) fn from_flat_table(order: usize, table: Vec<u32>, labels: Vec<String>) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        // Latin square: each row and column is a permutation.
        let mut row_seen = vec![false; order];
        let mut col_seen = vec![false; order];
        for i in 0..order {
            row_seen.fill(false);
            col_seen.fill(false);
            for j in 0..order {
                let r = table[i * order + j] as usize;
                let c = table[j * order + i] as usize;
                if row_seen[r] || col_seen[c] {
                    return Err(Error::Parse(format!(
                        "Cayley table is not a Latin square at row/column {i}"
                    )));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        // Identity.
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] as usize == x && table[x * order + e] as usize == x))
            .ok_or_else(|| Error::Parse("Cayley table has no identity element".into()))?;
        // Inverses exist by the Latin property; record them.
        let mut inverses = vec![0u32; order];
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| table[x * order + y] as usize == identity)
                .expect("Latin square row contains the identity");
            if table[inv * order + x] as usize != identity {
                return Err(Error::Parse(format!(
                    "element {x} has mismatched left/right inverse"
                )));
            }
            inverses[x] = inv as u32;
        }
        let group = Self {
            order,
            table,
            labels,
            identity,
            inverses,
        };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        if n <= ASSOC_FULL_CAP {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::Parse(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = SplitMix64::new(0xA550_C1A7_1F1E_D001 ^ n as u64);
            for _ in 0..ASSOC_SAMPLES {
                let a = rng.next_below(n);
                let b = rng.next_below(n);
                let c = rng.next_below(n);
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(Error::Parse(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `base^exp` by repeated multiplication (exponent is small here).
    pub fn pow(&self, base: usize, exp: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..exp {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Row-of-rows copy of the table, for serialization.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    /// Histogram of element orders, a cheap isomorphism invariant.
    pub fn order_histogram(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut hist = std::collections::BTreeMap::new();
        for x in 0..self.order {
            *hist.entry(self.element_order(x)).or_insert(0) += 1;
        }
        hist
    }
}

/// A permutation group together with its Cayley table. Element `i` of the
/// table is the permutation `perms[i]`.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub group: FiniteGroup,
    pub perms: Vec<Perm>,
}

impl PermGroup {
    /// Index of a permutation in the element list, if present.
    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.perms.iter().position(|q| q == p)
    }
}

/// Generates the group of permutations closed under composition, breadth
/// first, and builds its Cayley table. Fails if more than
/// [`ENUMERATION_CAP`] elements are enumerated or the order exceeds
/// [`TABLE_CAP`].
pub fn from_generators(degree: usize, generators: &[Perm]) -> Result<PermGroup> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::Parse(format!(
                "generator degree {} does not match {degree}",
                g.degree()
            )));
        }
    }
    let mut perms = vec![Perm::identity(degree)];
    let mut index: std::collections::HashMap<Perm, usize> =
        [(perms[0].clone(), 0)].into_iter().collect();
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for g in generators {
            let next = perms[i].compose(g);
            if !index.contains_key(&next) {
                if perms.len() >= ENUMERATION_CAP {
                    return Err(Error::CapExceeded {
                        what: "generator closure",
                        cap: ENUMERATION_CAP,
                    });
                }
                index.insert(next.clone(), perms.len());
                frontier.push(perms.len());
                perms.push(next);
            }
        }
    }
    let order = perms.len();
    if order > TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "Cayley table order",
            cap: TABLE_CAP,
        });
    }
    let mut table = Vec::with_capacity(order * order);
    for a in perms.iter() {
        for b in perms.iter() {
            table.push(index[&a.compose(b)] as u32);
        }
    }
    let labels = perms.iter().map(|p| p.cycle_string()).collect();
    let group = FiniteGroup::from_flat_table(order, table, labels)?;
    Ok(PermGroup { group, perms })
}

/// The trivial group.
pub fn trivial() -> FiniteGroup {
    cyclic(1)
}

/// Cyclic group of order `n`, elements labeled `0..n-1` additively.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1 && n <= TABLE_CAP);
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(((i + j) % n) as u32);
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_flat_table(n, table, labels).expect("cyclic table is a group")
}

/// Dihedral group of order `2n` (symmetries of the n-gon); `dihedral(1)` is
/// C2 and `dihedral(2)` the Klein four-group.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1 && 2 * n <= TABLE_CAP);
    // Elements: r^i for i < n, then s·r^i.
    let order = 2 * n;
    let enc = |flip: usize, rot: usize| flip * n + rot;
    let mut table = vec![0u32; order * order];
    for f1 in 0..2 {
        for r1 in 0..n {
            for f2 in 0..2 {
                for r2 in 0..n {
                    // (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(±r1 + r2)
                    let rot = if f2 == 0 { (r1 + r2) % n } else { (n - r1 % n + r2) % n };
                    let flip = (f1 + f2) % 2;
                    table[enc(f1, r1) * order + enc(f2, r2)] = enc(flip, rot) as u32;
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(order);
    for f in 0..2 {
        for r in 0..n {
            labels.push(match (f, r) {
                (0, 0) => "e".into(),
                (0, _) => format!("r{r}"),
                (1, 0) => "s".into(),
                _ => format!("sr{r}"),
            });
        }
    }
    FiniteGroup::from_flat_table(order, table, labels).expect("dihedral table is a group")
}

/// Symmetric group on `n` letters as a permutation group.
pub fn symmetric_perm(n: usize) -> Result<PermGroup> {
    assert!(n >= 1);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::parse_cycles("(1 2)", n)?);
    }
    if n >= 3 {
        let cycle: Vec<String> = (1..=n).map(|p| p.to_string()).collect();
        gens.push(Perm::parse_cycles(&format!("({})", cycle.join(" ")), n)?);
    }
    if gens.is_empty() {
        gens.push(Perm::identity(n));
    }
    from_generators(n, &gens)
}

/// Symmetric group on `n` letters.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    Ok(symmetric_perm(n)?.group)
}

/// Alternating group on `n` letters as a permutation group.
pub fn alternating_perm(n: usize) -> Result<PermGroup> {
    assert!(n >= 1);
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(Perm::parse_cycles("(1 2 3)", n)?);
    }
    if n >= 4 {
        if n % 2 == 1 {
            let cycle: Vec<String> = (1..=n).map(|p| p.to_string()).collect();
            gens.push(Perm::parse_cycles(&format!("({})", cycle.join(" ")), n)?);
        } else {
            let cycle: Vec<String> = (2..=n).map(|p| p.to_string()).collect();
            gens.push(Perm::parse_cycles(&format!("({})", cycle.join(" ")), n)?);
        }
    }
    if gens.is_empty() {
        gens.push(Perm::identity(n));
    }
    from_generators(n, &gens)
}

/// Alternating group on `n` letters.
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    Ok(alternating_perm(n)?.group)
}

/// Dicyclic group of order `4n` (generalized quaternion when `n` is a power
/// of two): `⟨a, b | a^{2n} = e, b² = aⁿ, b a b⁻¹ = a⁻¹⟩`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1 && 4 * n <= TABLE_CAP);
    let order = 4 * n;
    let m = 2 * n; // order of a
    let enc = |i: usize, j: usize| j * m + i; // a^i b^j
    let mut table = vec![0u32; order * order];
    for j1 in 0..2 {
        for i1 in 0..m {
            for j2 in 0..2 {
                for i2 in 0..m {
                    // (a^i1 b^j1)(a^i2 b^j2): move b^j1 past a^i2.
                    let i2_adj = if j1 == 0 { i2 } else { (m - i2 % m) % m };
                    let mut i = (i1 + i2_adj) % m;
                    let mut j = j1 + j2;
                    if j == 2 {
                        // b² = aⁿ
                        i = (i + n) % m;
                        j = 0;
                    }
                    table[enc(i1, j1) * order + enc(i2, j2)] = enc(i, j) as u32;
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(order);
    for j in 0..2 {
        for i in 0..m {
            labels.push(match (i, j) {
                (0, 0) => "e".into(),
                (_, 0) => format!("a{i}"),
                (0, _) => "b".into(),
                _ => format!("a{i}b"),
            });
        }
    }
    FiniteGroup::from_flat_table(order, table, labels).expect("dicyclic table is a group")
}

/// The quaternion group of order 8.
pub fn quaternion8() -> FiniteGroup {
    dicyclic(2)
}

/// Direct product, elements ordered as pairs `(a, b)` with `b` varying fastest.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let order = a.order() * b.order();
    if order > TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "Cayley table order",
            cap: TABLE_CAP,
        });
    }
    let enc = |x: usize, y: usize| x * b.order() + y;
    let mut table = vec![0u32; order * order];
    for x1 in 0..a.order() {
        for y1 in 0..b.order() {
            for x2 in 0..a.order() {
                for y2 in 0..b.order() {
                    table[enc(x1, y1) * order + enc(x2, y2)] =
                        enc(a.mul(x1, x2), b.mul(y1, y2)) as u32;
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(order);
    for x in 0..a.order() {
        for y in 0..b.order() {
            labels.push(format!("({},{})", a.label(x), b.label(y)));
        }
    }
    FiniteGroup::from_flat_table(order, table, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let g = cyclic(6);
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.mul(4, 5), 3);
        assert_eq!(g.inv(2), 4);
        assert_eq!(g.element_order(2), 3);
        assert!(g.is_abelian());
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
    }

    #[test]
    fn from_generators_builds_s3() {
        let gens = vec![
            Perm::parse_cycles("(1 2)", 3).unwrap(),
            Perm::parse_cycles("(1 2 3)", 3).unwrap(),
        ];
        let pg = from_generators(3, &gens).unwrap();
        assert_eq!(pg.group.order(), 6);
        assert!(!pg.group.is_abelian());
    }

    #[test]
    fn single_transposition_gives_z2() {
        let gens = vec![Perm::parse_cycles("(1 2)", 2).unwrap()];
        let pg = from_generators(2, &gens).unwrap();
        assert_eq!(pg.group.order(), 2);
    }

    #[test]
    fn quaternion_is_nonabelian_order_8() {
        let q = quaternion8();
        assert_eq!(q.order(), 8);
        assert!(!q.is_abelian());
        // One element of order 2 (the central -1), six of order 4.
        let hist = q.order_histogram();
        assert_eq!(hist[&2], 1);
        assert_eq!(hist[&4], 6);
    }

    #[test]
    fn dicyclic3_has_order_12_and_unique_involution() {
        let g = dicyclic(3);
        assert_eq!(g.order(), 12);
        assert_eq!(g.order_histogram()[&2], 1);
    }

    #[test]
    fn dihedral_klein() {
        let d2 = dihedral(2);
        assert_eq!(d2.order(), 4);
        assert!(d2.is_abelian());
        assert_eq!(d2.order_histogram()[&2], 3);
    }

    #[test]
    fn direct_product_orders() {
        let g = direct_product(&cyclic(2), &cyclic(4)).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
    }

    #[test]
    fn rejects_non_group_table() {
        // Latin square without associativity: order-5 loop.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let labels = (0..5).map(|i| i.to_string()).collect();
        assert!(FiniteGroup::from_table(table, labels).is_err());
    }
}
