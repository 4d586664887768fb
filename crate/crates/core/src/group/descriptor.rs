//! Isomorphism-class descriptors for groups and multisets of them.
//!
//! Composition factors are always simple groups, so a descriptor is either a
//! prime-order cyclic group or a nonabelian simple group identified by order
//! against a catalog (nonabelian simple groups of order below 10⁴ are
//! order-unique). Non-simple groups fall back to an invariant fingerprint;
//! that fingerprint never enters a factor multiset.

use std::collections::BTreeMap;
use std::fmt;

use super::series::is_simple;
use super::FiniteGroup;

/// Nonabelian simple groups of order < 10⁴, which are determined by their
/// order alone.
const SIMPLE_CATALOG: &[(usize, &str)] = &[
    (60, "A5"),
    (168, "PSL(2,7)"),
    (360, "A6"),
    (504, "PSL(2,8)"),
    (660, "PSL(2,11)"),
    (1092, "PSL(2,13)"),
    (2448, "PSL(2,17)"),
    (2520, "A7"),
    (3420, "PSL(2,19)"),
    (4080, "PSL(2,16)"),
    (5616, "PSL(3,3)"),
    (6048, "PSU(3,3)"),
    (6072, "PSL(2,23)"),
    (7800, "PSL(2,25)"),
    (7920, "M11"),
    (9828, "PSL(2,27)"),
];

/// Isomorphism-class descriptor. Two descriptors of simple groups compare
/// equal exactly when the groups are isomorphic; the composite fingerprint is
/// a best-effort invariant for reporting.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupDescriptor {
    /// Cyclic of prime order.
    Cyclic(usize),
    /// Nonabelian simple group from the order catalog.
    CatalogSimple { order: usize, name: &'static str },
    /// Anything else: order, elementary divisors when abelian, and the
    /// element-order histogram.
    Composite {
        order: usize,
        abelian_divisors: Option<Vec<usize>>,
        order_histogram: Vec<(usize, usize)>,
    },
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic(p) => write!(f, "C{p}"),
            GroupDescriptor::CatalogSimple { name, .. } => write!(f, "{name}"),
            GroupDescriptor::Composite {
                order,
                abelian_divisors: Some(divs),
                ..
            } => {
                let parts: Vec<String> = divs.iter().map(|d| format!("C{d}")).collect();
                write!(f, "{}", parts.join("x"))?;
                if divs.is_empty() {
                    write!(f, "C1")?;
                }
                let _ = order;
                Ok(())
            }
            GroupDescriptor::Composite { order, .. } => write!(f, "G{order}"),
        }
    }
}

/// Elementary divisors (prime powers, sorted) of an abelian group, recovered
/// from the counts of solutions of `x^(p^j) = e`.
fn abelian_elementary_divisors(group: &FiniteGroup) -> Vec<usize> {
    debug_assert!(group.is_abelian());
    let n = group.order();
    let orders: Vec<usize> = (0..n).map(|x| group.element_order(x)).collect();
    let mut divisors = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m % p != 0 {
            p += 1;
            continue;
        }
        while m % p == 0 {
            m /= p;
        }
        // counts[j] = #{x : x^(p^j) = e}; log_p of the ratio counts the
        // partition parts of size >= j.
        let mut parts_ge = Vec::new();
        let mut pj = 1usize;
        let mut prev = 1usize;
        loop {
            pj *= p;
            let count = orders.iter().filter(|&&o| pj % o == 0).count();
            if count == prev {
                break;
            }
            let mut ratio = count / prev;
            let mut log = 0usize;
            while ratio > 1 {
                ratio /= p;
                log += 1;
            }
            parts_ge.push(log);
            prev = count;
        }
        // partition λ from the counts of parts >= j
        let max_part = parts_ge.len();
        for j in 1..=max_part {
            let this = parts_ge[j - 1];
            let next = if j < max_part { parts_ge[j] } else { 0 };
            for _ in 0..(this - next) {
                divisors.push(p.pow(j as u32));
            }
        }
        p += 1;
    }
    divisors.sort_unstable();
    divisors
}

/// Identifies the isomorphism class of a group as far as the catalog reaches.
pub fn describe(group: &FiniteGroup) -> GroupDescriptor {
    let n = group.order();
    if n > 1 && is_prime(n) {
        return GroupDescriptor::Cyclic(n);
    }
    if n > 1 && is_simple(group) {
        if let Some(&(order, name)) = SIMPLE_CATALOG.iter().find(|&&(o, _)| o == n) {
            return GroupDescriptor::CatalogSimple { order, name };
        }
    }
    let abelian_divisors = group.is_abelian().then(|| abelian_elementary_divisors(group));
    GroupDescriptor::Composite {
        order: n,
        abelian_divisors,
        order_histogram: group.order_histogram().into_iter().collect(),
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A multiset of group descriptors: composition factors counted with
/// multiplicities. Equality is order-insensitive by construction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorMultiset {
    entries: BTreeMap<GroupDescriptor, usize>,
}

impl FactorMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, descriptor: GroupDescriptor) {
        *self.entries.entry(descriptor).or_insert(0) += 1;
    }

    pub fn from_groups<'a, I: IntoIterator<Item = &'a FiniteGroup>>(groups: I) -> Self {
        let mut out = Self::new();
        for g in groups {
            out.insert(describe(g));
        }
        out
    }

    /// Multiset union (disjoint sum of factor lists).
    pub fn union(&self, other: &FactorMultiset) -> FactorMultiset {
        let mut entries = self.entries.clone();
        for (d, &m) in &other.entries {
            *entries.entry(d.clone()).or_insert(0) += m;
        }
        FactorMultiset { entries }
    }

    /// Total number of factors counted with multiplicity: the length of the
    /// corresponding composition series.
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, descriptor: &GroupDescriptor) -> usize {
        self.entries.get(descriptor).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupDescriptor, usize)> {
        self.entries.iter().map(|(d, &m)| (d, m))
    }
}

impl fmt::Display for FactorMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(trivial)");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(d, &m)| {
                if m == 1 {
                    d.to_string()
                } else {
                    format!("{d}^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" · "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic, direct_product, quaternion8, symmetric};

    #[test]
    fn primes_are_cyclic_descriptors() {
        assert_eq!(describe(&cyclic(7)), GroupDescriptor::Cyclic(7));
        assert_eq!(describe(&cyclic(2)), GroupDescriptor::Cyclic(2));
    }

    #[test]
    fn a5_is_catalog_simple() {
        let a5 = alternating(5).unwrap();
        match describe(&a5) {
            GroupDescriptor::CatalogSimple { order: 60, name: "A5" } => {}
            d => panic!("unexpected descriptor {d:?}"),
        }
    }

    #[test]
    fn abelian_divisors_distinguish_c4_from_klein() {
        let c4 = describe(&cyclic(4));
        let v4 = describe(&direct_product(&cyclic(2), &cyclic(2)).unwrap());
        assert_ne!(c4, v4);
        if let GroupDescriptor::Composite { abelian_divisors: Some(d), .. } = &c4 {
            assert_eq!(d, &vec![4]);
        } else {
            panic!("C4 should be composite with divisors");
        }
        if let GroupDescriptor::Composite { abelian_divisors: Some(d), .. } = &v4 {
            assert_eq!(d, &vec![2, 2]);
        } else {
            panic!("V4 should be composite with divisors");
        }
    }

    #[test]
    fn abelian_divisors_of_c12() {
        if let GroupDescriptor::Composite { abelian_divisors: Some(d), .. } = describe(&cyclic(12))
        {
            assert_eq!(d, vec![3, 4]);
        } else {
            panic!("C12 fingerprint");
        }
    }

    #[test]
    fn multiset_equality_is_order_insensitive() {
        let mut a = FactorMultiset::new();
        a.insert(GroupDescriptor::Cyclic(2));
        a.insert(GroupDescriptor::Cyclic(3));
        a.insert(GroupDescriptor::Cyclic(2));
        let mut b = FactorMultiset::new();
        b.insert(GroupDescriptor::Cyclic(3));
        b.insert(GroupDescriptor::Cyclic(2));
        b.insert(GroupDescriptor::Cyclic(2));
        assert_eq!(a, b);
        assert_eq!(a.total(), 3);
        assert_eq!(a.to_string(), "C2^2 · C3");
    }

    #[test]
    fn nonsimple_groups_get_fingerprints() {
        let s4 = symmetric(4).unwrap();
        assert!(matches!(describe(&s4), GroupDescriptor::Composite { order: 24, .. }));
        assert!(matches!(describe(&quaternion8()), GroupDescriptor::Composite { order: 8, .. }));
    }
}
