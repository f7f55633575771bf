// Nonabelian groups of order pq (p = 1 mod q): psi_{i,j} kills s and sends
// t to s^i t^j with 2 <= j < q. For q = 2 that range is empty, which matches
// the dihedral-of-prime-degree picture where only the trivial map survives.

use ybe::catalog;
use ybe::families::metacyclic_fpf;
use ybe::morphism::{classify_fpf, enumerate_fpf};

fn main() {
    // q = 2: M5_2 is D5 in disguise; no nontrivial maps
    let m52 = catalog::metacyclic(5, 2).unwrap();
    let d5 = catalog::dihedral(5).unwrap();
    assert_eq!(
        enumerate_fpf(&m52).unwrap().len(),
        enumerate_fpf(&d5).unwrap().len()
    );
    println!(
        "M5_2: {} fixed-point-free map (trivial only, same as D5)",
        enumerate_fpf(&m52).unwrap().len()
    );

    // q = 3: seven nontrivial maps psi_{i,2} on the order-21 group
    let m = catalog::metacyclic(7, 3).unwrap();
    let enumerated = enumerate_fpf(&m).unwrap();
    println!("\nM7_3: {} maps", enumerated.len());
    for i in 0..7 {
        let psi = metacyclic_fpf(7, 3, i, 2).unwrap();
        println!(
            "  psi_{{{i},2}}: s -> {:<3} t -> {}",
            m.label(psi.apply(1)),
            m.label(psi.apply(7))
        );
        assert!(enumerated.iter().any(|e| e.images() == psi.images()));
    }

    let class = classify_fpf(&m).unwrap();
    println!(
        "orbits: {} (the seven nontrivial maps are all conjugate)",
        class.brace_orbits.len()
    );
}
