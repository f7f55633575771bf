// Three ways two maps can be "the same", and none implies the others:
// conjugate under an automorphism (equivalent braces, transported solutions),
// inducing the same regular subgroup, or giving literally equal solutions.

use ybe::catalog;
use ybe::morphism::{are_brace_equivalent, automorphism_group, classify_fpf, same_regular_subgroup};
use ybe::ybe::{closed_form_r, transport_by_automorphism};

fn main() {
    let d6 = catalog::dihedral(6).unwrap();
    let class = classify_fpf(&d6).unwrap();
    let maps = &class.all_maps;
    println!("D6: {} maps, {} brace orbits, {} subgroup classes", maps.len(),
        class.brace_orbits.len(), class.subgroup_classes.len());

    // conjugation transports the solution along the automorphism
    let auts = automorphism_group(&d6).unwrap();
    let orbit = class.brace_orbits.iter().find(|o| o.len() > 1).unwrap();
    let (a, b) = (&maps[orbit[0]], &maps[orbit[1]]);
    let phi = are_brace_equivalent(a, b, &auts).unwrap();
    let transported = transport_by_automorphism(&closed_form_r(a).unwrap(), &phi).unwrap();
    assert_eq!(transported.entries(), closed_form_r(b).unwrap().entries());
    println!("transport along a conjugating automorphism maps one orbit member's solution to the other's");

    // same subgroup without same solution, and same solution without same
    // subgroup, both happen between non-conjugate maps on D6
    let mut same_n_diff_r = 0;
    let mut same_r_diff_n = 0;
    for i in 0..maps.len() {
        for j in i + 1..maps.len() {
            let shared_n = same_regular_subgroup(&maps[i], &maps[j]);
            let shared_r = closed_form_r(&maps[i]).unwrap().entries()
                == closed_form_r(&maps[j]).unwrap().entries();
            if shared_n && !shared_r {
                same_n_diff_r += 1;
            }
            if shared_r && !shared_n {
                same_r_diff_n += 1;
            }
        }
    }
    println!("pairs sharing N but not R: {same_n_diff_r}");
    println!("pairs sharing R but not N: {same_r_diff_n}");
    assert!(same_n_diff_r > 0 && same_r_diff_n > 0);

    // distinct solutions can be far fewer than distinct maps
    let mut tables: Vec<_> = maps.iter().map(|m| closed_form_r(m).unwrap().entries()).collect();
    tables.sort();
    tables.dedup();
    println!("{} maps produce {} distinct solutions", maps.len(), tables.len());
}
