// Scratch probe for corpus feasibility (removed before release).
use std::time::Instant;

use fjh_core::construct::*;
use fjh_core::group::*;
use fjh_core::ring::validate;
use fjh_core::series::*;

fn probe_double(name: &str, g: &FiniteGroup) {
    let t = Instant::now();
    match double_ring(g) {
        Ok(r) => {
            let build = t.elapsed();
            let t2 = Instant::now();
            let ok = validate(&r).ok;
            let validate_time = t2.elapsed();
            let t3 = Instant::now();
            let series = all_composition_series(&r, 100_000).map(|s| s.len());
            println!(
                "D({name}): rank {} build {:?} validate({ok}) {:?} series {:?} in {:?}",
                r.rank(),
                build,
                validate_time,
                series,
                t3.elapsed()
            );
        }
        Err(e) => println!("D({name}): ERROR {e}"),
    }
}

fn main() {
    let cases: Vec<(&str, FiniteGroup)> = vec![
        ("C2", cyclic(2)),
        ("C2xC2", direct_product(&cyclic(2), &cyclic(2)).unwrap()),
        ("D4", dihedral(4)),
        ("Q8", quaternion8()),
        ("C12", cyclic(12)),
        ("C2xC4", direct_product(&cyclic(2), &cyclic(4)).unwrap()),
        ("C15", cyclic(15)),
        ("C16", cyclic(16)),
        ("C2xC2xC2", parse_group_spec("C2xC2xC2").unwrap()),
        ("D8", dihedral(8)),
        ("Q16", dicyclic(4)),
        ("C4xC4", parse_group_spec("C4xC4").unwrap()),
        ("C2xC8", parse_group_spec("C2xC8").unwrap()),
        ("C2xC2xC4", parse_group_spec("C2xC2xC4").unwrap()),
        ("C2xC2xC2xC2", parse_group_spec("C2xC2xC2xC2").unwrap()),
        ("C2xD4", parse_group_spec("C2xD4").unwrap()),
        ("C2xQ8", parse_group_spec("C2xQ8").unwrap()),
    ];
    for (name, g) in &cases {
        probe_double(name, g);
    }

    // S5 = S4 · C5
    let t = Instant::now();
    let pg = symmetric_perm(5).unwrap();
    let f_gens = [
        pg.index_of(&Perm::parse_cycles("(1 2)", 5).unwrap()).unwrap(),
        pg.index_of(&Perm::parse_cycles("(1 2 3 4)", 5).unwrap()).unwrap(),
    ];
    let g_gens = [pg.index_of(&Perm::parse_cycles("(1 2 3 4 5)", 5).unwrap()).unwrap()];
    let f = subgroup_closure(&pg.group, &f_gens);
    let gamma = subgroup_closure(&pg.group, &g_gens);
    let mp = matched_pair_from_factorization(&pg.group, &f, &gamma).unwrap();
    let zs = zappa_szep(&mp).unwrap();
    println!(
        "S5 zappa: order {} iso {} factors {} in {:?}",
        zs.order(),
        is_isomorphic(&zs, &pg.group),
        morita_factors_bicrossed(&mp).unwrap(),
        t.elapsed()
    );

    // S6 = S5 · C6
    let t = Instant::now();
    let pg6 = symmetric_perm(6).unwrap();
    let f_gens = [
        pg6.index_of(&Perm::parse_cycles("(1 2)", 6).unwrap()).unwrap(),
        pg6.index_of(&Perm::parse_cycles("(1 2 3 4 5)", 6).unwrap()).unwrap(),
    ];
    let g_gens = [pg6.index_of(&Perm::parse_cycles("(1 2 3 4 5 6)", 6).unwrap()).unwrap()];
    let f = subgroup_closure(&pg6.group, &f_gens);
    let gamma = subgroup_closure(&pg6.group, &g_gens);
    println!("  S6 built in {:?}; |F| = {}, |Γ| = {}", t.elapsed(), f.order(), gamma.order());
    let t = Instant::now();
    let mp = matched_pair_from_factorization(&pg6.group, &f, &gamma).unwrap();
    let zs = zappa_szep(&mp).unwrap();
    println!("  zappa in {:?}", t.elapsed());
    let t = Instant::now();
    let iso = is_isomorphic(&zs, &pg6.group);
    println!("  iso {} in {:?}", iso, t.elapsed());
    let t = Instant::now();
    println!(
        "  factors {} in {:?}",
        morita_factors_bicrossed(&mp).unwrap(),
        t.elapsed()
    );

    // rep rings of all nilpotent catalog groups up to 16
    let t = Instant::now();
    for spec in [
        "C16", "C4xC4", "C2xC8", "C2xC2xC4", "C2xC2xC2xC2", "D8", "Q16", "C2xD4", "C2xQ8",
    ] {
        let g = parse_group_spec(spec).unwrap();
        let r = rep_ring(&g).unwrap();
        let nilp = is_nilpotent(&r).unwrap();
        let jh = jordan_holder_check(&r, 10_000).map(|r| (r.series_count, r.pass));
        println!("rep({spec}): rank {} nilpotent {} jh {:?}", r.rank(), nilp, jh);
    }
    println!("rep corpus in {:?}", t.elapsed());

    // pointed corpora with large series counts
    let t = Instant::now();
    let g = parse_group_spec("C2xC2xC2xC2xC2").unwrap();
    let ring = pointed_ring(&g);
    let jh = jordan_holder_check(&ring, 10_000).unwrap();
    println!(
        "pointed(C2^5): {} series pass {} in {:?} (group count {})",
        jh.series_count,
        jh.pass,
        t.elapsed(),
        count_composition_series_group(&g, 100_000).unwrap()
    );
}
