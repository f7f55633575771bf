// On S_n (n >= 5, n != 6 ... though 6 works out the same way here) every
// fixed-point-free abelian endomorphism is psi_tau: identity on even
// permutations, multiplication by a fixed even involution tau on odd ones.

use ybe::catalog;
use ybe::families::symmetric_fpf;
use ybe::morphism::{classify_fpf, enumerate_fpf};

// one-line forms of S_n in lexicographic order, mirroring the element order
fn lex_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n).collect::<Vec<usize>>()];
    let mut cur = out[0].clone();
    while next_perm(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_perm(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut parity = true;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut k = start;
        let mut len = 0;
        while !seen[k] {
            seen[k] = true;
            k = p[k];
            len += 1;
        }
        if len % 2 == 0 {
            parity = !parity;
        }
    }
    parity
}

fn main() {
    for n in [5usize, 6] {
        let s = catalog::symmetric(n).unwrap();
        let perms = lex_perms(n);

        // candidates: even involutions (tau = e gives the trivial map)
        let taus: Vec<&Vec<usize>> = perms
            .iter()
            .filter(|p| is_even(p) && (0..n).all(|x| p[p[x]] == x))
            .collect();

        let family: Vec<Vec<usize>> = taus
            .iter()
            .map(|tau| symmetric_fpf(n, tau).unwrap().images())
            .collect();
        let enumerated: Vec<Vec<usize>> =
            enumerate_fpf(&s).unwrap().iter().map(|m| m.images()).collect();

        let mut a = family.clone();
        let mut b = enumerated.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);

        let class = classify_fpf(&s).unwrap();
        println!(
            "S{n}: {} even involutions -> {} maps, {} brace orbits (trivial map and everything else)",
            taus.len(),
            enumerated.len(),
            class.brace_orbits.len()
        );
    }

    // the first nontrivial member on S5
    let s5 = catalog::symmetric(5).unwrap();
    let tau = [1usize, 0, 3, 2, 4]; // (01)(23)
    let psi = symmetric_fpf(5, &tau).unwrap();
    let odd = s5.element_by_label("(01)").unwrap();
    let even = s5.element_by_label("(012)").unwrap();
    println!(
        "psi_tau with tau = (01)(23): fixes (012) -> {}, shifts (01) -> {}",
        s5.label(psi.apply(even)),
        s5.label(psi.apply(odd))
    );
}
