// Each map psi embeds G into Perm(G) via eta(g): x -> g psi(g^-1) x psi(g).
// The image N is regular (one element moving identity to any given point),
// stable under conjugation by left translations, and its centralizer in the
// relevant sense is the opposite subgroup N'. Braces can be rebuilt from N.

use ybe::brace::{brace_from_regular_subgroup, build_brace};
use ybe::catalog;
use ybe::families::{family_map, FamilySpec};
use ybe::perm::{left_translations, regular_subgroup};

fn main() {
    let d4 = catalog::dihedral(4).unwrap();
    let psi = family_map(&FamilySpec::DihedralGamma { n: 4, i: 0 }).unwrap();

    let n = regular_subgroup(&d4, &psi).unwrap();
    println!(
        "N: {} permutations of {} points, regular: {}, stable: {}",
        n.order(),
        d4.order(),
        n.is_regular(),
        n.is_g_stable()
    );
    println!("eta(r)  = {:?}", n.member(1));
    println!("eta(rs) = {:?}", n.member(5));

    let n_prime = n.opposite().unwrap();
    println!(
        "\nN': regular: {}, stable: {}",
        n_prime.is_regular(),
        n_prime.is_g_stable()
    );
    // N and N' commute elementwise
    for a in n.members() {
        for b in n_prime.members() {
            let ab: Vec<usize> = (0..8).map(|x| a[b[x]]).collect();
            let ba: Vec<usize> = (0..8).map(|x| b[a[x]]).collect();
            assert_eq!(ab, ba);
        }
    }
    println!("every member of N commutes with every member of N'");

    // left translations themselves form the subgroup of the trivial map
    let left = left_translations(&d4);
    let trivial = regular_subgroup(&d4, &ybe::morphism::GroupMap::trivial(&d4)).unwrap();
    assert_eq!(left.sorted_members(), trivial.sorted_members());

    // and the subgroup recovers the brace it came from
    let direct = build_brace(&d4, &psi).unwrap();
    let rebuilt = brace_from_regular_subgroup(&n).unwrap();
    for a in 0..8 {
        for b in 0..8 {
            assert_eq!(direct.circle(a, b), rebuilt.circle(a, b));
        }
    }
    println!("brace rebuilt from N has the same circle operation");
}
