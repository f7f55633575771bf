// The dihedral groups carry four one-parameter families of fixed-point-free
// maps (alpha, beta, gamma, delta) plus the central ones. For even n the
// family list is the complete answer; odd n admits only the trivial map.

use ybe::catalog;
use ybe::families::{
    coverage_report, dihedral_fpf_maps, family_map, r_formula, s_formula, FamilySpec,
};
use ybe::morphism::enumerate_fpf;

fn main() {
    println!("  n  census  family list  matches  coverage");
    for n in 3..=10 {
        let d = catalog::dihedral(n).unwrap();
        let exhaustive = enumerate_fpf(&d).unwrap();
        let family = dihedral_fpf_maps(n).unwrap();

        let mut census: Vec<Vec<usize>> = exhaustive.iter().map(|m| m.images()).collect();
        let mut listed: Vec<Vec<usize>> = family.iter().map(|m| m.images()).collect();
        census.sort();
        listed.sort();
        listed.dedup();

        let report = coverage_report(&d).unwrap();
        println!(
            "{:>3}  {:>6}  {:>11}  {:>7}  {}",
            n,
            census.len(),
            listed.len(),
            census == listed,
            if report.complete { "complete" } else { "incomplete" }
        );
        assert_eq!(census, listed, "family list must reproduce the census");
    }

    // gamma_i on D4: r -> r^{2i+1}s, s -> r^{2i+1}s
    let d4 = catalog::dihedral(4).unwrap();
    println!("\nD4 gamma family:");
    for i in 0..2 {
        let psi = family_map(&FamilySpec::DihedralGamma { n: 4, i }).unwrap();
        println!(
            "  gamma{}: r -> {:<5} s -> {}",
            i,
            d4.label(psi.apply(1)),
            d4.label(psi.apply(4))
        );
    }

    // the closed-form counting expressions for subgroups and solutions;
    // the census of maps above is a different quantity, so no cross-check here
    println!("\n  n  subgroup formula  solution formula");
    for n in [3, 5, 6, 10] {
        println!("{:>3}  {:>16}  {:>16}", n, s_formula(n), r_formula(n));
    }
}
