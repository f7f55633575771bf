// Every fixed-point-free abelian endomorphism psi of a group (G, .) yields a
// skew brace: same elements, second operation g o h = g psi(g^-1) h psi(g).
// The brace in turn yields the solution; this walks through the pieces.

use ybe::brace::build_brace;
use ybe::catalog;
use ybe::families::{family_map, FamilySpec};
use ybe::ybe::{inverse_solution_from_brace, solution_from_brace, closed_form_r};

fn main() {
    let d4 = catalog::dihedral(4).unwrap();
    let psi = family_map(&FamilySpec::DihedralGamma { n: 4, i: 0 }).unwrap();
    let brace = build_brace(&d4, &psi).unwrap();

    // circle differs from dot exactly where psi twists the factors
    println!("dot and circle on a few pairs:");
    for (a, b) in [(1usize, 4usize), (4, 1), (5, 2)] {
        println!(
            "  {} . {} = {:<4}  {} o {} = {}",
            d4.label(a),
            d4.label(b),
            d4.label(brace.dot(a, b)),
            d4.label(a),
            d4.label(b),
            d4.label(brace.circle(a, b))
        );
    }

    let circle = brace.circle_group();
    println!(
        "\ncircle group: order {}, abelian: {}",
        circle.order(),
        circle.is_abelian()
    );

    // g -> g psi(g^-1) is an isomorphism (circle) -> (dot)
    let phi = brace.phi_isomorphism().unwrap();
    println!(
        "phi = g psi(g^-1) is bijective: {}",
        phi.is_bijective()
    );

    let r = solution_from_brace(&brace);
    assert_eq!(r.entries(), closed_form_r(&psi).unwrap().entries());
    println!("brace solution matches the closed form");

    // the opposite brace (reversed dot) produces the inverse solution
    let opposite = brace.opposite().unwrap();
    let r_prime = solution_from_brace(&opposite);
    assert_eq!(r_prime.entries(), inverse_solution_from_brace(&brace).entries());
    let (a, b) = (5, 2);
    let (x, y) = r.apply(a, b);
    assert_eq!(r_prime.apply(x, y), (a, b));
    println!("opposite brace gives R', and R' . R = id");
}
