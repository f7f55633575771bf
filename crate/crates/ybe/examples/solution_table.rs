// The worked example: psi on D4 with r -> rs and s -> rs gives an 8x8
// solution table that is braided and non-degenerate but not involutive.

use ybe::catalog;
use ybe::families::{family_map, FamilySpec};
use ybe::export::render_table;
use ybe::ybe::{closed_form_r, closed_form_r_prime};

fn main() {
    let d4 = catalog::dihedral(4).unwrap();
    let psi = family_map(&FamilySpec::DihedralGamma { n: 4, i: 0 }).unwrap();

    println!(
        "psi sends r -> {}, s -> {}",
        d4.label(psi.apply(1)),
        d4.label(psi.apply(4))
    );

    let r = closed_form_r(&psi).unwrap();
    println!("\n{}", render_table(&r));

    let (x, y) = r.apply(5, 2);
    println!(
        "R(rs, r^2) = ({}, {})   braided: {}   non-degenerate: {}   involutive: {}",
        d4.label(x),
        d4.label(y),
        r.verify_braid(),
        r.verify_nondegenerate(),
        r.is_involutive()
    );

    // R' undoes R from either side
    let rp = closed_form_r_prime(&psi).unwrap();
    for a in 0..d4.order() {
        for b in 0..d4.order() {
            let (x, y) = r.apply(a, b);
            assert_eq!(rp.apply(x, y), (a, b));
        }
    }
    println!("R' inverts R on all {} pairs", d4.order() * d4.order());
}
