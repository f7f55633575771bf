// Exhaustive search for fixed-point-free abelian endomorphisms, then the two
// coarser views: orbits under automorphism conjugation (brace equivalence)
// and classes by the regular subgroup they induce.

use ybe::catalog;
use ybe::morphism::classify_fpf;

fn main() {
    for name in ["C6", "D4", "D6", "A4", "S4", "M7_3"] {
        let group = catalog::group_by_name(name).unwrap();
        let class = classify_fpf(&group).unwrap();
        println!(
            "{:<5} order {:>2}: {:>2} maps, {} brace orbits, {} subgroup classes",
            name,
            group.order(),
            class.all_maps.len(),
            class.brace_orbits.len(),
            class.subgroup_classes.len()
        );
    }

    // D4 in detail: twelve maps, five orbits, but only three subgroup classes
    let d4 = catalog::dihedral(4).unwrap();
    let class = classify_fpf(&d4).unwrap();
    println!("\nD4 orbits (map indices, representative images of r and s):");
    for (k, orbit) in class.brace_orbits.iter().enumerate() {
        let rep = &class.all_maps[orbit[0]];
        println!(
            "  orbit {k}: {:?}  r -> {}, s -> {}",
            orbit,
            d4.label(rep.apply(1)),
            d4.label(rep.apply(4))
        );
    }
    println!("D4 subgroup classes: {:?}", class.subgroup_classes);
}
