//! Cross-cutting properties that tie the modules together: the central-twist
//! criterion for sharing a regular subgroup, subgroup/solution rigidity,
//! opposite-subgroup structure, family completeness beyond the acceptance
//! set, and randomized export round-trips.

use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;

use ybe::brace::{brace_from_regular_subgroup, build_brace};
use ybe::catalog;
use ybe::export;
use ybe::families::{self, FamilySpec};
use ybe::group::FiniteGroup;
use ybe::morphism::{
    are_brace_equivalent, automorphism_group, classify_fpf, enumerate_endomorphisms,
    enumerate_fpf, same_regular_subgroup, GroupMap,
};
use ybe::perm::regular_subgroup;
use ybe::ybe::{closed_form_r, transport_by_automorphism, Provenance, YbeMap};

fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// Nonabelian groups small enough for all-pairs work.
fn small_nonabelian() -> Vec<Arc<FiniteGroup>> {
    vec![
        catalog::dihedral(4).unwrap(),
        catalog::dihedral(5).unwrap(),
        catalog::dihedral(6).unwrap(),
        catalog::dihedral(8).unwrap(),
        catalog::alternating(4).unwrap(),
        catalog::symmetric(4).unwrap(),
        catalog::metacyclic(7, 3).unwrap(),
    ]
}

fn central_homs(group: &Arc<FiniteGroup>) -> Vec<GroupMap> {
    let center: HashSet<usize> = group.center().into_iter().collect();
    enumerate_endomorphisms(group)
        .unwrap()
        .into_iter()
        .filter(|m| m.images().iter().all(|x| center.contains(x)))
        .collect()
}

/// Two maps share a regular subgroup exactly when one is a central twist of
/// the other: psi2(g) = psi1(g zeta(g^-1)) zeta(g) for some homomorphism
/// zeta into the center.
#[test]
fn shared_subgroups_are_exactly_central_twists() {
    for group in small_nonabelian() {
        let maps = enumerate_fpf(&group).unwrap();
        let twists = central_homs(&group);
        for a in &maps {
            for b in &maps {
                let twisted = twists.iter().any(|zeta| {
                    (0..group.order()).all(|g| {
                        let shifted = group.mul(g, zeta.apply(group.inv(g)));
                        b.apply(g) == group.mul(a.apply(shifted), zeta.apply(g))
                    })
                });
                assert_eq!(
                    same_regular_subgroup(a, b),
                    twisted,
                    "{}: {:?} vs {:?}",
                    group.name(),
                    a.images(),
                    b.images()
                );
            }
        }
    }
}

/// The first output column recovers the circle (g o h = g * first(g, h)),
/// so equal solutions and equal circle tables are the same relation.
#[test]
fn solution_equality_is_circle_equality() {
    for group in small_nonabelian() {
        let maps = enumerate_fpf(&group).unwrap();
        let solutions: Vec<YbeMap> = maps.iter().map(|m| closed_form_r(m).unwrap()).collect();
        let circles: Vec<Vec<Vec<usize>>> = maps
            .iter()
            .map(|m| build_brace(&group, m).unwrap().circle_rows())
            .collect();
        for i in 0..maps.len() {
            for j in 0..maps.len() {
                assert_eq!(
                    solutions[i].entries() == solutions[j].entries(),
                    circles[i] == circles[j],
                    "{}: maps {i}, {j}",
                    group.name()
                );
            }
        }
    }
}

/// Sharing a subgroup and sharing a solution are independent relations. On
/// D6 (odd m), delta1 is the central twist of alpha0 — same subgroup — but
/// alpha0 does not kill the twist values, so the circles differ. Dually,
/// beta0 is the pointwise central product of alpha0 with zeta(r) = zeta(s)
/// = r^3, which cancels out of the circle — same solution — yet its
/// translation permutations pick up central offsets no relabeling absorbs,
/// so the subgroups differ. (On D4 both relations happen to coincide
/// because the twist values there map to the identity.)
#[test]
fn subgroup_sharing_and_solution_sharing_are_independent() {
    let alpha0 = families::family_map(&FamilySpec::DihedralAlpha { n: 6, i: 0 }).unwrap();
    let delta1 = families::family_map(&FamilySpec::DihedralDelta { n: 6, i: 1 }).unwrap();
    assert!(same_regular_subgroup(&alpha0, &delta1));
    assert_ne!(
        closed_form_r(&alpha0).unwrap().entries(),
        closed_form_r(&delta1).unwrap().entries()
    );

    let beta0 = families::family_map(&FamilySpec::DihedralBeta { n: 6, i: 0 }).unwrap();
    assert!(!same_regular_subgroup(&alpha0, &beta0));
    assert_eq!(
        closed_form_r(&alpha0).unwrap().entries(),
        closed_form_r(&beta0).unwrap().entries()
    );
}

/// D4 collapses to exactly three distinct solutions: one for the trivial and
/// central maps, one for the four alpha/beta maps, one for the four
/// gamma/delta maps.
#[test]
fn d4_has_exactly_three_distinct_solutions() {
    let d4 = catalog::dihedral(4).unwrap();
    let mut tables: Vec<Vec<((usize, usize), (usize, usize))>> = enumerate_fpf(&d4)
        .unwrap()
        .iter()
        .map(|m| closed_form_r(m).unwrap().entries())
        .collect();
    tables.sort();
    tables.dedup();
    assert_eq!(tables.len(), 3);
}

#[test]
fn brace_orbit_witnesses_transport_solutions_and_tables() {
    for group in [
        catalog::dihedral(4).unwrap(),
        catalog::dihedral(6).unwrap(),
        catalog::alternating(4).unwrap(),
        catalog::metacyclic(7, 3).unwrap(),
    ] {
        let class = classify_fpf(&group).unwrap();
        let auts = automorphism_group(&group).unwrap();
        for orbit in &class.brace_orbits {
            let rep = &class.all_maps[orbit[0]];
            for &other in &orbit[1..] {
                let target = &class.all_maps[other];
                let phi = are_brace_equivalent(rep, target, &auts)
                    .unwrap_or_else(|| panic!("{}: orbit without witness", group.name()));
                // the automorphism carries the rep's solution onto the target's
                let moved =
                    transport_by_automorphism(&closed_form_r(rep).unwrap(), phi).unwrap();
                assert_eq!(
                    moved.entries(),
                    closed_form_r(target).unwrap().entries(),
                    "{}",
                    group.name()
                );
                // and relabels the circle table accordingly
                let b1 = build_brace(&group, rep).unwrap();
                let b2 = build_brace(&group, target).unwrap();
                for a in 0..group.order() {
                    for b in 0..group.order() {
                        assert_eq!(
                            b2.circle(phi.apply(a), phi.apply(b)),
                            phi.apply(b1.circle(a, b)),
                            "{}",
                            group.name()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn enumerated_endomorphisms_satisfy_the_defining_law() {
    for group in [
        catalog::cyclic(12).unwrap(),
        catalog::product_cyclic(2, 4).unwrap(),
        catalog::dihedral(6).unwrap(),
        catalog::symmetric(4).unwrap(),
        catalog::alternating(4).unwrap(),
        catalog::metacyclic(7, 3).unwrap(),
    ] {
        let endos = enumerate_endomorphisms(&group).unwrap();
        let mut seen = HashSet::new();
        for e in &endos {
            assert!(seen.insert(e.images()), "{} duplicate", group.name());
            for g in 0..group.order() {
                for h in 0..group.order() {
                    assert_eq!(
                        e.apply(group.mul(g, h)),
                        group.mul(e.apply(g), e.apply(h)),
                        "{}",
                        group.name()
                    );
                }
            }
        }
        // identity and trivial maps always occur
        assert!(endos.iter().any(|e| *e == GroupMap::trivial(&group)));
        assert!(endos.iter().any(|e| *e == GroupMap::identity_map(&group)));
    }
}

#[test]
fn subgroups_are_regular_stable_and_centralized_by_their_opposites() {
    for group in small_nonabelian() {
        for psi in enumerate_fpf(&group).unwrap() {
            let sub = regular_subgroup(&group, &psi).unwrap();
            assert!(sub.is_regular(), "{}", group.name());
            assert!(sub.is_g_stable(), "{}", group.name());
            let opp = sub.opposite().unwrap();
            assert!(opp.is_regular(), "{}", group.name());
            for m in sub.members() {
                for t in opp.members() {
                    assert_eq!(compose(m, t), compose(t, m), "{}", group.name());
                }
            }
            let double = opp.opposite().unwrap();
            assert_eq!(double.members(), sub.members(), "{}", group.name());
            // opposite subgroup builds the opposite brace
            assert_eq!(
                brace_from_regular_subgroup(&opp).unwrap(),
                brace_from_regular_subgroup(&sub).unwrap().opposite().unwrap(),
                "{}",
                group.name()
            );
        }
    }
}

#[test]
fn involutive_exactly_on_abelian_carriers() {
    let mut groups = small_nonabelian();
    groups.push(catalog::cyclic(8).unwrap());
    groups.push(catalog::product_cyclic(3, 3).unwrap());
    for group in groups {
        for psi in enumerate_fpf(&group).unwrap() {
            let r = closed_form_r(&psi).unwrap();
            assert_eq!(r.is_involutive(), group.is_abelian(), "{}", group.name());
            let flags = r.flags();
            assert!(flags.braid && flags.nondegenerate, "{}", group.name());
        }
    }
}

#[test]
fn symmetric_six_family_is_complete() {
    let s6 = catalog::symmetric(6).unwrap();
    let maps = enumerate_fpf(&s6).unwrap();
    assert_eq!(maps.len(), 46);

    // build expected maps from the even involutions of S6
    fn unrank(mut k: usize, n: usize) -> Vec<usize> {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut fact = vec![1usize; n];
        for i in 1..n {
            fact[i] = fact[i - 1] * i;
        }
        let mut out = Vec::with_capacity(n);
        for i in (0..n).rev() {
            out.push(pool.remove(k / fact[i]));
            k %= fact[i];
        }
        out
    }
    let mut expected: Vec<Vec<usize>> = (0..720)
        .map(|k| unrank(k, 6))
        .filter(|p| {
            let even = {
                let mut inv = 0;
                for i in 0..6 {
                    for j in i + 1..6 {
                        if p[i] > p[j] {
                            inv += 1;
                        }
                    }
                }
                inv % 2 == 0
            };
            even && (0..6).all(|i| p[p[i]] == i)
        })
        .map(|p| families::symmetric_fpf(6, &p).unwrap().images())
        .collect();
    expected.sort();
    expected.dedup();
    let got: Vec<Vec<usize>> = maps.iter().map(|m| m.images()).collect();
    assert_eq!(got, expected);
}

#[test]
fn metacyclic_family_is_complete() {
    for (p, q) in [(3usize, 2usize), (5, 2), (7, 2), (7, 3), (13, 3)] {
        let m = catalog::metacyclic(p, q).unwrap();
        let mut expected: Vec<Vec<usize>> = vec![GroupMap::trivial(&m).images()];
        for j in 2..q {
            for i in 0..p {
                expected.push(families::metacyclic_fpf(p, q, i, j).unwrap().images());
            }
        }
        expected.sort();
        expected.dedup();
        let got: Vec<Vec<usize>> = enumerate_fpf(&m)
            .unwrap()
            .iter()
            .map(|x| x.images())
            .collect();
        assert_eq!(got, expected, "M{p}_{q}");
    }
}

#[test]
fn alternating_family_matches_enumeration() {
    let a4 = catalog::alternating(4).unwrap();
    let maps = enumerate_fpf(&a4).unwrap();
    let square = families::family_map(&FamilySpec::AlternatingSquare).unwrap();
    assert!(maps.iter().any(|m| m.images() == square.images()));
    // the other three nontrivial maps are its conjugates
    let auts = automorphism_group(&a4).unwrap();
    let trivial = GroupMap::trivial(&a4);
    for m in maps.iter().filter(|m| **m != trivial) {
        assert!(
            auts.iter()
                .any(|phi| square.conjugate_by(phi).unwrap().images() == m.images()),
            "{:?}",
            m.images()
        );
    }
}

fn pair_table(order: usize, raw: &[usize]) -> Vec<(usize, usize)> {
    raw.iter().map(|&x| (x / order, x % order)).collect()
}

/// A dihedral parameter together with an arbitrary pair table of the right
/// size: entry values index pairs, so they range over order^2.
fn dihedral_table() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (3usize..6).prop_flat_map(|n| {
        let sq = (2 * n) * (2 * n);
        proptest::collection::vec(0..sq, sq).prop_map(move |raw| (n, raw))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solution_json_round_trips((n, raw) in dihedral_table()) {
        let group = catalog::dihedral(n).unwrap();
        let order = group.order();
        let table = pair_table(order, &raw);
        let solution = YbeMap::from_entries(&group, table, Provenance::External).unwrap();
        let json = export::solution_to_json(&solution, None);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: export::SolutionJson = serde_json::from_str(&text).unwrap();
        let back = export::solution_from_json(&parsed, &group).unwrap();
        prop_assert_eq!(back.entries(), solution.entries());
    }

    #[test]
    fn rmatrix_round_trips((n, raw) in dihedral_table()) {
        let group = catalog::dihedral(n).unwrap();
        let order = group.order();
        let table = pair_table(order, &raw);
        let solution = YbeMap::from_entries(&group, table, Provenance::External).unwrap();
        let matrix = export::export_rmatrix(&solution);
        let back = export::rmatrix_to_solution(&matrix, &group, Provenance::External).unwrap();
        prop_assert_eq!(back.entries(), solution.entries());
        prop_assert!(matrix.entries.windows(2).all(|w| w[0][0] <= w[1][0]));
    }

    #[test]
    fn braid_witnesses_are_honest(raw in proptest::collection::vec(0usize..6, 36)) {
        let group = catalog::symmetric(3).unwrap();
        let table = pair_table(6, &raw);
        let solution = YbeMap::from_entries(&group, table, Provenance::External).unwrap();
        if let Some((x, y, z)) = solution.braid_counterexample() {
            // recompute both sides at the witness
            let r = |a: usize, b: usize| solution.apply(a, b);
            let (a, b) = r(x, y);
            let (c, d) = r(b, z);
            let (e, f) = r(a, c);
            let (p, q) = r(y, z);
            let (u, v) = r(x, p);
            let (w, t) = r(v, q);
            prop_assert_ne!((e, f, d), (u, w, t));
            prop_assert!(!solution.verify_braid());
        } else {
            prop_assert!(solution.verify_braid());
        }
    }

    #[test]
    fn nondegeneracy_witnesses_are_honest(raw in proptest::collection::vec(0usize..6, 36)) {
        let group = catalog::symmetric(3).unwrap();
        let table = pair_table(6, &raw);
        let solution = YbeMap::from_entries(&group, table, Provenance::External).unwrap();
        match solution.nondegeneracy_counterexample() {
            Some((side, x)) => {
                let images: HashSet<usize> = (0..6)
                    .map(|other| {
                        if side == "f" {
                            solution.apply(x, other).0
                        } else {
                            solution.apply(other, x).1
                        }
                    })
                    .collect();
                prop_assert!(images.len() < 6);
                prop_assert!(!solution.verify_nondegenerate());
            }
            None => prop_assert!(solution.verify_nondegenerate()),
        }
    }
}
