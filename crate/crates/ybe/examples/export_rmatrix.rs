// A solution on a group of order n is a permutation of n^2 basis vectors;
// exporting it as a 0/1 matrix in the pair basis (a,b) -> a*n + b makes it
// usable outside this crate. The inverse solution is the transpose.

use ybe::catalog;
use ybe::export::{export_rmatrix, rmatrix_to_solution, solution_to_json, solution_from_json};
use ybe::families::{family_map, FamilySpec};
use ybe::ybe::{closed_form_r, closed_form_r_prime, Provenance, YbeMap};

fn main() {
    // the swap solution on C2: fixed points (0,0) and (3,3), a 2-cycle between
    let c2 = catalog::cyclic(2).unwrap();
    let swap = YbeMap::swap(&c2);
    let m = export_rmatrix(&swap);
    println!("swap on C2: dimension {}, entries {:?}", m.dimension, m.entries);

    let psi = family_map(&FamilySpec::DihedralGamma { n: 4, i: 0 }).unwrap();
    let r = closed_form_r(&psi).unwrap();
    let rp = closed_form_r_prime(&psi).unwrap();

    let mr = export_rmatrix(&r);
    let mrp = export_rmatrix(&rp);
    let mut transposed: Vec<[usize; 2]> = mr.entries.iter().map(|&[i, j]| [j, i]).collect();
    transposed.sort_unstable();
    assert_eq!(mrp.entries, transposed);
    println!("matrix(R') = matrix(R)^T on D4  ({} entries)", mr.entries.len());

    // matrix -> solution -> matrix is lossless
    let d4 = psi.source();
    let back = rmatrix_to_solution(&mr, d4, Provenance::External).unwrap();
    assert_eq!(back.entries(), r.entries());

    // labelled JSON round-trips too, through serde
    let json = solution_to_json(&r, Some(&psi));
    let text = serde_json::to_string_pretty(&json).unwrap();
    let reread = solution_from_json(&serde_json::from_str(&text).unwrap(), d4).unwrap();
    assert_eq!(reread.entries(), r.entries());
    println!("JSON round-trip preserved all {} entries; sample:", r.entries().len());
    for line in text.lines().take(12) {
        println!("  {line}");
    }
}
