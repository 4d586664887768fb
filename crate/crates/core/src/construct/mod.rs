//! Fusion-ring constructors from group data, plus the corollary evaluators
//! that reduce Morita-level composition factors to group theory.
//!
//! Associator data (3-cocycles, Opext cocycle pairs) never enters: it is
//! invisible at the structure-constant level, so `pointed_ring(G)` stands
//! for every `C(G, ω)` and `double_ring(G)` for every twisted double over G.
//! The `morita_factors_*` functions are computed from group data alone —
//! they are deliberately separate from the ring-level series machinery so
//! the two routes can be compared against each other.

use num_complex::Complex64;

use crate::group::{
    centralizer, character_table_with_seed, composition_factors_group, conjugacy_classes,
    zappa_szep, FactorMultiset, FiniteGroup, MatchedPair,
};
use crate::ring::FusionRing;
use crate::util::DEFAULT_SEED;
use crate::{Error, Result};

/// Rounding tolerance for character-derived fusion coefficients.
const INTEGRALITY_TOL: f64 = 1e-6;

/// The pointed fusion ring of a group: basis G, products given by the group
/// law, duals by inversion.
pub fn pointed_ring(group: &FiniteGroup) -> FusionRing {
    let n = group.order();
    let coeffs = (0..n).flat_map(|i| (0..n).map(move |j| (i, j, 0, 1)));
    let coeffs: Vec<(usize, usize, usize, u64)> = coeffs
        .map(|(i, j, _, n_)| (i, j, group.mul(i, j), n_))
        .collect();
    let dual = (0..n).map(|i| group.inv(i)).collect();
    FusionRing::new(n, group.labels().to_vec(), group.identity(), dual, coeffs)
        .expect("group law yields a fusion ring")
}

/// The Tambara-Yamagami ring over an abelian group `A`: basis `A ∪ {m}` with
/// `a ⊗ m = m ⊗ a = m` and `m ⊗ m = Σ_a a`.
pub fn tambara_yamagami(group: &FiniteGroup) -> Result<FusionRing> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian {
            order: group.order(),
        });
    }
    let n = group.order();
    let m = n; // index of the non-invertible element
    let mut coeffs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            coeffs.push((i, j, group.mul(i, j), 1));
        }
        coeffs.push((i, m, m, 1));
        coeffs.push((m, i, m, 1));
    }
    for a in 0..n {
        coeffs.push((m, m, a, 1));
    }
    let mut labels: Vec<String> = group.labels().to_vec();
    labels.push("m".into());
    let mut dual: Vec<usize> = (0..n).map(|i| group.inv(i)).collect();
    dual.push(m);
    FusionRing::new(n + 1, labels, group.identity(), dual, coeffs)
}

/// Deligne product: basis pairs, coefficients multiply componentwise.
pub fn deligne_product(r: &FusionRing, s: &FusionRing) -> FusionRing {
    let (nr, ns) = (r.rank(), s.rank());
    let enc = |i: usize, j: usize| i * ns + j;
    let mut coeffs = Vec::new();
    for (i1, j1, k1, n1) in r.coefficients() {
        for (i2, j2, k2, n2) in s.coefficients() {
            coeffs.push((enc(i1, i2), enc(j1, j2), enc(k1, k2), n1 * n2));
        }
    }
    let mut labels = Vec::with_capacity(nr * ns);
    for i in 0..nr {
        for j in 0..ns {
            labels.push(format!("{}⊠{}", r.label(i), s.label(j)));
        }
    }
    let dual = (0..nr * ns)
        .map(|x| enc(r.dual(x / ns), s.dual(x % ns)))
        .collect();
    FusionRing::new(nr * ns, labels, enc(r.unit(), s.unit()), dual, coeffs)
        .expect("product of fusion rings is a fusion ring")
}

/// The opposite ring: `N'_ij^k = N_ji^k`, same duals and dimensions.
pub fn opposite_ring(r: &FusionRing) -> FusionRing {
    let coeffs: Vec<_> = r.coefficients().map(|(i, j, k, n)| (j, i, k, n)).collect();
    FusionRing::new(
        r.rank(),
        r.labels().to_vec(),
        r.unit(),
        r.dual_map().to_vec(),
        coeffs,
    )
    .expect("opposite of a fusion ring is a fusion ring")
}

fn round_coefficient(value: Complex64, i: usize, j: usize, k: usize) -> Result<u64> {
    let rounded = value.re.round();
    if value.im.abs() > INTEGRALITY_TOL
        || (value.re - rounded).abs() > INTEGRALITY_TOL
        || rounded < -0.5
    {
        return Err(Error::NonIntegralCoefficient {
            i,
            j,
            k,
            value: value.re,
        });
    }
    Ok(rounded as u64)
}

/// The representation ring of a group: basis the irreducible characters,
/// fusion by character inner products, duals by complex conjugation.
pub fn rep_ring(group: &FiniteGroup) -> Result<FusionRing> {
    rep_ring_with_seed(group, DEFAULT_SEED)
}

/// [`rep_ring`] with an explicit character-table seed.
pub fn rep_ring_with_seed(group: &FiniteGroup, seed: u64) -> Result<FusionRing> {
    let table = character_table_with_seed(group, seed)?;
    let r = table.rank();
    let n = group.order() as f64;
    let mut coeffs = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let mut acc = Complex64::new(0.0, 0.0);
                for c in 0..r {
                    acc += table.class_sizes[c] as f64
                        * table.values[i][c]
                        * table.values[j][c]
                        * table.values[k][c].conj();
                }
                let count = round_coefficient(acc / n, i, j, k)?;
                if count > 0 {
                    coeffs.push((i, j, k, count));
                }
            }
        }
    }
    let unit = table.trivial_row();
    let dual = (0..r).map(|i| table.conjugate_row(i)).collect();
    let labels = (0..r).map(|i| format!("x{i}")).collect();
    FusionRing::new(r, labels, unit, dual, coeffs)
}

/// The representation ring of the Drinfeld double of a group.
///
/// Basis elements are pairs (conjugacy class `[a]`, irreducible character π
/// of the centralizer of `a`). Each is realized as a function on commuting
/// pairs `(g, h)`: zero unless `g ∈ [a]`, else `χ_π(x h x⁻¹)` for any `x`
/// conjugating `g` to `a`. These functions are orthonormal under
/// `(1/|G|) Σ_{gh=hg} φ(g,h) conj(ψ(g,h))`; tensor products multiply them
/// pointwise in `h` and convolve the `g`-grading over pairs commuting with
/// `h`, and fusion coefficients are the inner products of such products
/// against the basis, integer-rounded.
pub fn double_ring(group: &FiniteGroup) -> Result<FusionRing> {
    double_ring_with_seed(group, DEFAULT_SEED)
}

/// [`double_ring`] with an explicit character-table seed.
pub fn double_ring_with_seed(group: &FiniteGroup, seed: u64) -> Result<FusionRing> {
    let n = group.order();
    let classes = conjugacy_classes(group);

    // Commuting pairs, indexed.
    let cent_members: Vec<Vec<usize>> = (0..n)
        .map(|g| centralizer(group, g).members().to_vec())
        .collect();
    let mut pair_index = vec![usize::MAX; n * n];
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for g in 0..n {
        for &h in &cent_members[g] {
            pair_index[g * n + h] = pairs.len();
            pairs.push((g, h));
        }
    }

    // Per-class data: centralizer group, its character table, and a
    // transversal conjugating each class member to the representative.
    struct ClassData {
        rep: usize,
        conjugator: Vec<usize>, // per parent element g in class: x with x g x⁻¹ = rep
        z_index: Vec<usize>,    // parent element -> centralizer-local index
        chartab: crate::group::CharacterTable,
    }
    let mut class_data = Vec::with_capacity(classes.len());
    for class in &classes.classes {
        let rep = class[0];
        let cent = centralizer(group, rep);
        let (z_group, z_members) = cent.materialize(group)?;
        let mut z_index = vec![usize::MAX; n];
        for (local, &parent) in z_members.iter().enumerate() {
            z_index[parent] = local;
        }
        let mut conjugator = vec![usize::MAX; n];
        for &g in class {
            conjugator[g] = (0..n)
                .find(|&x| group.conjugate(x, g) == rep)
                .expect("class member conjugates to representative");
        }
        let chartab = character_table_with_seed(&z_group, seed)?;
        class_data.push(ClassData {
            rep,
            conjugator,
            z_index,
            chartab,
        });
    }

    // Basis and value tables over commuting pairs.
    let mut basis: Vec<(usize, usize)> = Vec::new(); // (class, irrep)
    let mut labels = Vec::new();
    for (ci, cd) in class_data.iter().enumerate() {
        for pi in 0..cd.chartab.rank() {
            basis.push((ci, pi));
            labels.push(format!("([{}],x{})", group.label(cd.rep), pi));
        }
    }
    let rank = basis.len();
    let zero = Complex64::new(0.0, 0.0);
    let mut values = vec![vec![zero; pairs.len()]; rank];
    for (b, &(ci, pi)) in basis.iter().enumerate() {
        let cd = &class_data[ci];
        for &g in &classes.classes[ci] {
            let x = cd.conjugator[g];
            for &h in &cent_members[g] {
                let moved = group.conjugate(x, h); // lies in the centralizer of rep
                let local = cd.z_index[moved];
                debug_assert_ne!(local, usize::MAX);
                values[b][pair_index[g * n + h]] = cd.chartab.value_at(pi, local);
            }
        }
    }

    // Class members commuting with each h, for the graded convolution.
    let mut commuting_by_class: Vec<Vec<Vec<usize>>> =
        vec![vec![Vec::new(); classes.len()]; n];
    for g in 0..n {
        for &h in &cent_members[g] {
            commuting_by_class[h][classes.class_of[g]].push(g);
        }
    }

    // Fusion coefficients.
    let mut coeffs = Vec::new();
    let mut product = vec![zero; pairs.len()];
    for i in 0..rank {
        let (ci, _) = basis[i];
        for j in 0..rank {
            let (cj, _) = basis[j];
            product.iter_mut().for_each(|x| *x = zero);
            let mut support = vec![false; classes.len()];
            for h in 0..n {
                let lefts = &commuting_by_class[h][ci];
                let rights = &commuting_by_class[h][cj];
                for &s in lefts {
                    let vs = values[i][pair_index[s * n + h]];
                    for &t in rights {
                        let vt = values[j][pair_index[t * n + h]];
                        let g = group.mul(s, t);
                        product[pair_index[g * n + h]] += vs * vt;
                        support[classes.class_of[g]] = true;
                    }
                }
            }
            for (k, &(ck, _)) in basis.iter().enumerate() {
                if !support[ck] {
                    continue;
                }
                let mut acc = zero;
                for &g in &classes.classes[ck] {
                    for &h in &cent_members[g] {
                        let p = pair_index[g * n + h];
                        acc += product[p] * values[k][p].conj();
                    }
                }
                let count = round_coefficient(acc / n as f64, i, j, k)?;
                if count > 0 {
                    coeffs.push((i, j, k, count));
                }
            }
        }
    }

    // Unit: (class of identity, trivial character of the full group).
    let identity_class = classes.class_of[group.identity()];
    debug_assert_eq!(identity_class, 0);
    let trivial = class_data[identity_class].chartab.trivial_row();
    let unit = basis
        .iter()
        .position(|&(ci, pi)| ci == identity_class && pi == trivial)
        .expect("unit basis element exists");

    // Duals from the unit pairing: dual(i) is the unique j with N_ij^1 = 1.
    let mut dual = vec![usize::MAX; rank];
    for i in 0..rank {
        let mut partners = coeffs
            .iter()
            .filter(|&&(a, _, k, _)| a == i && k == unit)
            .map(|&(_, j, _, n_)| (j, n_));
        let (j, mult) = partners.next().ok_or_else(|| {
            Error::InternalInconsistency(format!("basis element {i} has no dual"))
        })?;
        if mult != 1 || partners.next().is_some() {
            return Err(Error::InternalInconsistency(format!(
                "unit pairing of basis element {i} is not a single copy"
            )));
        }
        dual[i] = j;
    }
    FusionRing::new(rank, labels, unit, dual, coeffs)
}

/// Composition factors of the representation category of a group, computed
/// on the group side (Morita corollary evaluator, not a ring computation).
pub fn morita_factors_rep(group: &FiniteGroup) -> Result<FactorMultiset> {
    composition_factors_group(group)
}

/// Composition factors of the center of a pointed category over a group:
/// the group's factors, doubled (corollary evaluator).
pub fn morita_factors_double(group: &FiniteGroup) -> Result<FactorMultiset> {
    let f = composition_factors_group(group)?;
    Ok(f.union(&f))
}

/// Composition factors of the representation category of a bicrossed
/// product built on a matched pair: the factors of the Zappa-Szép group
/// F ⋈ Γ (corollary evaluator).
pub fn morita_factors_bicrossed(mp: &MatchedPair) -> Result<FactorMultiset> {
    composition_factors_group(&zappa_szep(mp)?)
}

/// Composition factors of a G-extension (or G-equivariantization) of a
/// category with known factors: the factors of the base joined with the
/// factors of G (corollary evaluator).
pub fn extension_factors(base: &FactorMultiset, group: &FiniteGroup) -> Result<FactorMultiset> {
    Ok(base.union(&composition_factors_group(group)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, direct_product, quaternion8, symmetric, GroupDescriptor};
    use crate::ring::{fpdim, validate};

    #[test]
    fn pointed_trivial_is_unit_ring() {
        let r = pointed_ring(&cyclic(1));
        assert_eq!(r.rank(), 1);
        assert!(validate(&r).ok);
    }

    #[test]
    fn pointed_s3_validates() {
        let r = pointed_ring(&symmetric(3).unwrap());
        assert!(validate(&r).ok);
        assert!(r.is_pointed());
    }

    #[test]
    fn ty_rejects_nonabelian() {
        assert!(matches!(
            tambara_yamagami(&symmetric(3).unwrap()),
            Err(Error::NotAbelian { order: 6 })
        ));
    }

    #[test]
    fn ty_trivial_is_rank_2_pointed_like() {
        let r = tambara_yamagami(&cyclic(1)).unwrap();
        assert_eq!(r.rank(), 2);
        assert!(validate(&r).ok);
        // m ⊗ m = 1 makes even m invertible here
        assert!(r.is_pointed());
    }

    #[test]
    fn ty_z2_dims() {
        let r = tambara_yamagami(&cyclic(2)).unwrap();
        assert!(validate(&r).ok);
        let d = fpdim(&r).unwrap();
        assert!((d.dims[2] - 2f64.sqrt()).abs() < 1e-9);
        assert!((d.total - 4.0).abs() < 1e-9);
        assert!(!r.is_pointed());
    }

    #[test]
    fn rep_ring_s3_fusion() {
        let r = rep_ring(&symmetric(3).unwrap()).unwrap();
        assert!(validate(&r).ok);
        assert_eq!(r.rank(), 3);
        // basis sorted by degree: x0 = trivial or sign, x2 = std (degree 2)
        let d = fpdim(&r).unwrap();
        assert!((d.dims[2] - 2.0).abs() < 1e-9);
        // std ⊗ std = 1 + sgn + std
        assert_eq!(r.coeff(2, 2, 0), 1);
        assert_eq!(r.coeff(2, 2, 1), 1);
        assert_eq!(r.coeff(2, 2, 2), 1);
        assert_eq!(r.invertibles().len(), 2);
    }

    #[test]
    fn rep_ring_of_abelian_group_is_pointed() {
        let g = direct_product(&cyclic(2), &cyclic(2)).unwrap();
        let r = rep_ring(&g).unwrap();
        assert!(validate(&r).ok);
        assert!(r.is_pointed());
        assert_eq!(r.rank(), 4);
    }

    #[test]
    fn double_ring_z2_is_pointed_rank_4() {
        let r = double_ring(&cyclic(2)).unwrap();
        assert!(validate(&r).ok);
        assert!(r.is_pointed());
        assert_eq!(r.rank(), 4);
    }

    #[test]
    fn double_ring_q8_has_rank_22() {
        let r = double_ring(&quaternion8()).unwrap();
        assert_eq!(r.rank(), 22);
        assert!(validate(&r).ok);
        let d = fpdim(&r).unwrap();
        assert!((d.total - 64.0).abs() < 1e-6);
    }

    #[test]
    fn deligne_product_with_unit_is_identity() {
        let r = tambara_yamagami(&cyclic(2)).unwrap();
        let unit = pointed_ring(&cyclic(1));
        let p = deligne_product(&r, &unit);
        assert_eq!(p.rank(), r.rank());
        assert!(validate(&p).ok);
        for (i, j, k, n) in r.coefficients() {
            assert_eq!(p.coeff(i, j, k), n);
        }
    }

    #[test]
    fn opposite_of_commutative_is_same() {
        let r = tambara_yamagami(&cyclic(3)).unwrap();
        let o = opposite_ring(&r);
        assert_eq!(r, o);
        let s3 = pointed_ring(&symmetric(3).unwrap());
        let os3 = opposite_ring(&s3);
        assert!(validate(&os3).ok);
        assert_ne!(s3, os3);
    }

    #[test]
    fn bicrossed_evaluator_trivial_actions() {
        let mp = MatchedPair::trivial_actions(cyclic(2), cyclic(3));
        let f = morita_factors_bicrossed(&mp).unwrap();
        assert_eq!(f.multiplicity(&GroupDescriptor::Cyclic(2)), 1);
        assert_eq!(f.multiplicity(&GroupDescriptor::Cyclic(3)), 1);
    }

    #[test]
    fn extension_evaluator_with_empty_base() {
        let base = FactorMultiset::new();
        let f = extension_factors(&base, &dihedral(4)).unwrap();
        assert_eq!(f.multiplicity(&GroupDescriptor::Cyclic(2)), 3);
    }
}
