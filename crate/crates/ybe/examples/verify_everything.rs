// Sweep a catalog slice and re-check every claimed property of every map:
// braid relation for R and R', non-degeneracy, the inverse pairing, and the
// induced regular subgroup. Prints one line per group.

use ybe::catalog;
use ybe::morphism::enumerate_fpf;
use ybe::perm::regular_subgroup;
use ybe::ybe::{closed_form_r, closed_form_r_prime, is_inverse_pair};

fn main() {
    let mut names: Vec<String> = (2..=12).map(|n| format!("C{n}")).collect();
    names.extend((3..=9).map(|n| format!("D{n}")));
    names.extend(["S3", "S4", "A4", "A5", "M7_3", "C2xC4"].map(String::from));

    let mut total = 0usize;
    for name in &names {
        let group = catalog::group_by_name(name).unwrap();
        let maps = enumerate_fpf(&group).unwrap();
        for psi in &maps {
            let r = closed_form_r(psi).unwrap();
            let rp = closed_form_r_prime(psi).unwrap();
            assert!(r.verify_braid() && rp.verify_braid());
            assert!(r.verify_nondegenerate() && rp.verify_nondegenerate());
            assert!(is_inverse_pair(&r, &rp).unwrap());
            // involutive exactly when the carrier is abelian
            assert_eq!(r.is_involutive(), group.is_abelian());
            let sub = regular_subgroup(&group, psi).unwrap();
            assert!(sub.is_regular() && sub.is_g_stable());
        }
        total += maps.len();
        println!("{:<6} {:>3} maps verified", name, maps.len());
    }
    println!("\nall checks passed for {total} maps across {} groups", names.len());
}
