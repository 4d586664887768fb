//! Group isomorphism testing: invariant screens, then a backtracking
//! generator-mapping search as the decider.

use std::collections::BTreeMap;

use super::subgroup::{conjugacy_classes, subgroup_closure};
use super::FiniteGroup;

/// Cheap isomorphism invariants compared before any search.
#[derive(PartialEq, Eq, Debug)]
struct Fingerprint {
    order: usize,
    abelian: bool,
    order_histogram: BTreeMap<usize, usize>,
    /// Multiset of (class size, element order of class members).
    class_profile: Vec<(usize, usize)>,
}

fn fingerprint(group: &FiniteGroup) -> Fingerprint {
    let classes = conjugacy_classes(group);
    let mut class_profile: Vec<(usize, usize)> = classes
        .classes
        .iter()
        .map(|c| (c.len(), group.element_order(c[0])))
        .collect();
    class_profile.sort_unstable();
    Fingerprint {
        order: group.order(),
        abelian: group.is_abelian(),
        order_histogram: group.order_histogram(),
        class_profile,
    }
}

/// Greedy generating sequence: start from an element of maximal order, then
/// repeatedly add the first element outside the running closure. Short for
/// every group we handle (the closure at least doubles per step).
fn generating_sequence(group: &FiniteGroup) -> Vec<usize> {
    let n = group.order();
    if n == 1 {
        return Vec::new();
    }
    let first = (0..n)
        .max_by_key(|&x| group.element_order(x))
        .expect("nonempty group");
    let mut gens = vec![first];
    let mut closure = subgroup_closure(group, &gens);
    while closure.order() < n {
        let next = (0..n)
            .find(|&x| !closure.contains(x))
            .expect("closure is proper");
        gens.push(next);
        closure = subgroup_closure(group, &gens);
    }
    gens
}

/// Attempts to extend the generator assignment `gens[i] ↦ images[i]` to a
/// full isomorphism by propagating along the Cayley graph.
fn extends_to_isomorphism(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> bool {
    let n = a.order();
    let mut phi = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    phi[a.identity()] = b.identity();
    hit[b.identity()] = true;
    let mut queue = vec![a.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &h) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(phi[x], h);
            if phi[y] == usize::MAX {
                if hit[fy] {
                    return false; // not injective
                }
                phi[y] = fy;
                hit[fy] = true;
                queue.push(y);
            } else if phi[y] != fy {
                return false; // not a homomorphism
            }
        }
    }
    queue.len() == n
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    closure_orders: &[usize],
) -> bool {
    let depth = chosen.len();
    if depth == gens.len() {
        return extends_to_isomorphism(a, b, gens, chosen);
    }
    for &cand in &candidates[depth] {
        chosen.push(cand);
        // The partial images must generate a subgroup of the same order as
        // the partial generators do.
        if subgroup_closure(b, chosen).order() == closure_orders[depth]
            && search(a, b, gens, candidates, chosen, closure_orders)
        {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Whether two groups are isomorphic.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let fa = fingerprint(a);
    let fb = fingerprint(b);
    if fa != fb {
        return false;
    }
    if fa.abelian {
        // Abelian groups are determined by their element-order histogram.
        return true;
    }
    let gens = generating_sequence(a);
    // Per-generator candidate images, filtered by order and class size.
    let classes_b = conjugacy_classes(b);
    let class_size_b: Vec<usize> = (0..b.order())
        .map(|x| classes_b.classes[classes_b.class_of[x]].len())
        .collect();
    let classes_a = conjugacy_classes(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let ord = a.element_order(g);
            let csize = classes_a.classes[classes_a.class_of[g]].len();
            (0..b.order())
                .filter(|&h| b.element_order(h) == ord && class_size_b[h] == csize)
                .collect()
        })
        .collect();
    let closure_orders: Vec<usize> = (0..gens.len())
        .map(|i| subgroup_closure(a, &gens[..=i]).order())
        .collect();
    search(a, b, &gens, &candidates, &mut Vec::new(), &closure_orders)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dicyclic, dihedral, direct_product, quaternion8, symmetric};

    #[test]
    fn c4_is_not_klein() {
        let c4 = cyclic(4);
        let v4 = direct_product(&cyclic(2), &cyclic(2)).unwrap();
        assert!(!is_isomorphic(&c4, &v4));
    }

    #[test]
    fn abelian_products_commute() {
        let a = direct_product(&cyclic(2), &cyclic(3)).unwrap();
        let b = cyclic(6);
        assert!(is_isomorphic(&a, &b));
        let c = direct_product(&cyclic(3), &cyclic(2)).unwrap();
        assert!(is_isomorphic(&a, &c));
    }

    #[test]
    fn q8_is_not_d4() {
        assert!(!is_isomorphic(&quaternion8(), &dihedral(4)));
        assert!(is_isomorphic(&quaternion8(), &dicyclic(2)));
    }

    #[test]
    fn s3_is_d3() {
        assert!(is_isomorphic(&symmetric(3).unwrap(), &dihedral(3)));
    }

    #[test]
    fn s4_selfisomorphic_nontrivially_labeled() {
        let s4 = symmetric(4).unwrap();
        assert!(is_isomorphic(&s4, &s4));
        assert!(!is_isomorphic(&s4, &dicyclic(6)));
    }
}
