//! Constructors for the named groups the crate works with, plus name-string
//! lookup ("D4", "S5", "M7_3", "C6", "C2xC3", ...).
//!
//! Every family fixes a normal-form index encoding, stated on the
//! constructor, so table output is reproducible byte for byte.

use std::collections::HashMap;
use std::sync::Arc;

use crate::group::{FiniteGroup, GroupError};

/// Largest n for symmetric/alternating constructors; S8 already has a
/// 40320-squared table (about 3.3 GB), anything beyond is refused.
pub const MAX_PERMUTATION_DEGREE: usize = 8;

fn power_label(sym: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

fn join_labels(parts: &[String]) -> String {
    let joined: String = parts.concat();
    if joined.is_empty() {
        "1".to_string()
    } else {
        joined
    }
}

/// Cyclic group of order n; index i is `g^i`.
pub fn cyclic(n: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    if n == 0 {
        return Err(GroupError::BadOrder {
            what: "cyclic",
            range: "n >= 1",
            got: n,
        });
    }
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n).map(|i| join_labels(&[power_label("g", i)])).collect();
    let g = FiniteGroup::from_cayley(&format!("C{n}"), &table, Some(labels))?;
    Ok(Arc::new(if n > 1 { g.with_generators(vec![1])? } else { g }))
}

/// Direct product of two cyclic groups; index i + n*j is `a^i b^j`.
pub fn product_cyclic(n: usize, m: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    if n == 0 || m == 0 {
        return Err(GroupError::BadOrder {
            what: "product_cyclic",
            range: "n, m >= 1",
            got: n.min(m),
        });
    }
    let idx = |i: usize, j: usize| i + n * j;
    let mut table = vec![vec![0usize; n * m]; n * m];
    for i in 0..n {
        for j in 0..m {
            for k in 0..n {
                for l in 0..m {
                    table[idx(i, j)][idx(k, l)] = idx((i + k) % n, (j + l) % m);
                }
            }
        }
    }
    let mut labels = vec![String::new(); n * m];
    for i in 0..n {
        for j in 0..m {
            labels[idx(i, j)] = join_labels(&[power_label("a", i), power_label("b", j)]);
        }
    }
    let g = FiniteGroup::from_cayley(&format!("C{n}xC{m}"), &table, Some(labels))?;
    let mut gens = Vec::new();
    if n > 1 {
        gens.push(idx(1, 0));
    }
    if m > 1 {
        gens.push(idx(0, 1));
    }
    Ok(Arc::new(if gens.is_empty() { g } else { g.with_generators(gens)? }))
}

/// Dihedral group of order 2n, presented by r^n = s^2 = rsrs = 1.
/// Index i + n*j is `r^i s^j` with 0 <= i < n, j in {0,1}.
pub fn dihedral(n: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    if n < 3 {
        return Err(GroupError::BadOrder {
            what: "dihedral",
            range: "n >= 3",
            got: n,
        });
    }
    let idx = |i: usize, j: usize| i + n * j;
    let size = 2 * n;
    let mut table = vec![vec![0usize; size]; size];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j+l}
                    let exp = if j == 0 { (i + k) % n } else { (i + n - k % n) % n };
                    table[idx(i, j)][idx(k, l)] = idx(exp, (j + l) % 2);
                }
            }
        }
    }
    let mut labels = vec![String::new(); size];
    for i in 0..n {
        for j in 0..2 {
            labels[idx(i, j)] = join_labels(&[power_label("r", i), power_label("s", j)]);
        }
    }
    let g = FiniteGroup::from_cayley(&format!("D{n}"), &table, Some(labels))?
        .with_generators(vec![idx(1, 0), idx(0, 1)])?;
    Ok(Arc::new(g))
}

pub(crate) fn perm_parity(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut parity = 0usize;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        parity ^= (len + 1) % 2;
    }
    parity
}

/// Cycle notation with single-digit points, fixed points dropped; the
/// identity renders as "e".
pub fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push(char::from_digit(x as u32, 10).unwrap());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

pub(crate) fn lex_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        perms.push(cur.clone());
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    perms
}

fn permutation_group(
    name: &str,
    n: usize,
    perms: Vec<Vec<usize>>,
    generators: Vec<Vec<usize>>,
) -> Result<Arc<FiniteGroup>, GroupError> {
    let rank: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let size = perms.len();
    let mut table = vec![vec![0usize; size]; size];
    let mut composed = vec![0usize; n];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            // (a * b)(x) = a(b(x))
            for x in 0..n {
                composed[x] = a[b[x]];
            }
            table[i][j] = rank[&composed];
        }
    }
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    let g = FiniteGroup::from_cayley(name, &table, Some(labels))?;
    let gens: Vec<usize> = generators
        .into_iter()
        .filter_map(|p| rank.get(&p).copied())
        .collect();
    let mut unique = gens.clone();
    unique.sort_unstable();
    unique.dedup();
    Ok(Arc::new(if unique.is_empty() { g } else { g.with_generators(unique)? }))
}

pub(crate) fn cycle_perm(n: usize, points: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for w in 0..points.len() {
        p[points[w]] = points[(w + 1) % points.len()];
    }
    p
}

/// Symmetric group on {0..n-1}; element index is the lexicographic rank of
/// the one-line notation, and products compose left-to-right as
/// (a*b)(x) = a(b(x)). Generators: (01) and the full n-cycle.
pub fn symmetric(n: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    if n == 0 || n > MAX_PERMUTATION_DEGREE {
        return Err(GroupError::BadOrder {
            what: "symmetric",
            range: "1 <= n <= 8",
            got: n,
        });
    }
    let perms = lex_permutations(n);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_perm(n, &[0, 1]));
        gens.push(cycle_perm(n, &(0..n).collect::<Vec<_>>()));
    }
    permutation_group(&format!("S{n}"), n, perms, gens)
}

/// Alternating group on {0..n-1}: the even permutations, indexed by their
/// rank within the lexicographic ordering of all of S_n filtered to even.
/// Generators: (012) plus an n-cycle (n odd) or (1..n-1)-cycle (n even).
pub fn alternating(n: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    if n == 0 || n > MAX_PERMUTATION_DEGREE {
        return Err(GroupError::BadOrder {
            what: "alternating",
            range: "1 <= n <= 8",
            got: n,
        });
    }
    let perms: Vec<Vec<usize>> = lex_permutations(n)
        .into_iter()
        .filter(|p| perm_parity(p) == 0)
        .collect();
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(cycle_perm(n, &[0, 1, 2]));
        if n % 2 == 1 {
            gens.push(cycle_perm(n, &(0..n).collect::<Vec<_>>()));
        } else {
            gens.push(cycle_perm(n, &(1..n).collect::<Vec<_>>()));
        }
    }
    permutation_group(&format!("A{n}"), n, perms, gens)
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest d > 1 whose multiplicative order mod p is exactly q.
fn metacyclic_twist(p: usize, q: usize) -> usize {
    'outer: for d in 2..p {
        let mut x = d % p;
        for _ in 1..q {
            if x == 1 {
                continue 'outer; // order is a proper divisor of q
            }
            x = x * d % p;
        }
        if x == 1 {
            return d;
        }
    }
    unreachable!("p = 1 mod q guarantees an element of order q");
}

/// Nonabelian metacyclic group of order pq with s^p = t^q = 1 and
/// t s t^{-1} = s^d, d the smallest valid twist. Index i + p*j is `s^i t^j`.
pub fn metacyclic(p: usize, q: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if !is_prime(q) {
        return Err(GroupError::NotPrime(q));
    }
    if q < 2 || p % q != 1 {
        return Err(GroupError::BadCongruence { p, q });
    }
    let d = metacyclic_twist(p, q);
    // d^j mod p for 0 <= j < q
    let mut dpow = vec![1usize; q];
    for j in 1..q {
        dpow[j] = dpow[j - 1] * d % p;
    }
    let idx = |i: usize, j: usize| i + p * j;
    let size = p * q;
    let mut table = vec![vec![0usize; size]; size];
    for i in 0..p {
        for j in 0..q {
            for k in 0..p {
                for l in 0..q {
                    // (s^i t^j)(s^k t^l) = s^{i + k d^j} t^{j+l}
                    table[idx(i, j)][idx(k, l)] = idx((i + k * dpow[j]) % p, (j + l) % q);
                }
            }
        }
    }
    let mut labels = vec![String::new(); size];
    for i in 0..p {
        for j in 0..q {
            labels[idx(i, j)] = join_labels(&[power_label("s", i), power_label("t", j)]);
        }
    }
    let g = FiniteGroup::from_cayley(&format!("M{p}_{q}"), &table, Some(labels))?
        .with_generators(vec![idx(1, 0), idx(0, 1)])?;
    Ok(Arc::new(g))
}

/// Resolve a catalog name: "Dn", "Sn", "An", "Cn", "CnxCm", "Mp_q".
pub fn group_by_name(name: &str) -> Result<Arc<FiniteGroup>, GroupError> {
    let unknown = || GroupError::UnknownGroup(name.to_string());
    let parse = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    if let Some(rest) = name.strip_prefix('D') {
        return dihedral(parse(rest)?);
    }
    if let Some(rest) = name.strip_prefix('S') {
        return symmetric(parse(rest)?);
    }
    if let Some(rest) = name.strip_prefix('A') {
        return alternating(parse(rest)?);
    }
    if let Some(rest) = name.strip_prefix('M') {
        let (p, q) = rest.split_once('_').ok_or_else(unknown)?;
        return metacyclic(parse(p)?, parse(q)?);
    }
    if let Some(rest) = name.strip_prefix('C') {
        return match rest.split_once("xC") {
            Some((n, m)) => product_cyclic(parse(n)?, parse(m)?),
            None => cyclic(parse(rest)?),
        };
    }
    Err(unknown())
}

/// One line per name family, used by the CLI's `groups list`.
pub fn catalog_lines() -> Vec<String> {
    vec![
        "Cn      cyclic of order n (n >= 1), e.g. C6".to_string(),
        "CnxCm   product of two cyclic groups, e.g. C2xC2".to_string(),
        "Dn      dihedral of order 2n (n >= 3), e.g. D4".to_string(),
        "Sn      symmetric on n points (1 <= n <= 8), e.g. S5".to_string(),
        "An      alternating on n points (1 <= n <= 8), e.g. A4".to_string(),
        "Mp_q    metacyclic of order pq (p, q prime, p = 1 mod q), e.g. M7_3".to_string(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_labels_and_orders() {
        let c6 = cyclic(6).unwrap();
        assert_eq!(c6.labels(), &["1", "g", "g^2", "g^3", "g^4", "g^5"]);
        assert!(c6.is_abelian());
        assert_eq!(c6.element_order(1), 6);
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn product_cyclic_klein() {
        let v = product_cyclic(2, 2).unwrap();
        assert_eq!(v.labels(), &["1", "a", "b", "ab"]);
        assert!(v.is_abelian());
        assert!((1..4).all(|g| v.element_order(g) == 2));
    }

    #[test]
    fn dihedral_encoding() {
        let d4 = dihedral(4).unwrap();
        assert_eq!(
            d4.labels(),
            &["1", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"]
        );
        // s r = r^3 s
        assert_eq!(d4.mul(4, 1), 7);
        assert_eq!(d4.generators(), &[1, 4]);
        assert!(matches!(dihedral(2), Err(GroupError::BadOrder { .. })));
    }

    #[test]
    fn symmetric_and_alternating_basics() {
        let s2 = symmetric(2).unwrap();
        assert_eq!(s2.order(), 2);
        assert_eq!(s2.labels(), &["e", "(01)"]);

        let s3 = symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        // (01) composed with (12): x -> (01)((12)(x)) = (012)
        let a = s3.element_by_label("(01)").unwrap();
        let b = s3.element_by_label("(12)").unwrap();
        assert_eq!(s3.label(s3.mul(a, b)), "(012)");

        let a4 = alternating(4).unwrap();
        assert_eq!(a4.order(), 12);
        let mut order_counts = [0usize; 4];
        for g in 0..12 {
            order_counts[a4.element_order(g)] += 1;
        }
        assert_eq!(order_counts[1..], [1, 3, 8]);

        let a5 = alternating(5).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(symmetric(9).is_err());
        assert!(symmetric(0).is_err());
    }

    #[test]
    fn s5_has_15_even_involutions_and_trivial_center() {
        let s5 = symmetric(5).unwrap();
        let a5 = alternating(5).unwrap();
        let even: std::collections::HashSet<&str> =
            a5.labels().iter().map(|s| s.as_str()).collect();
        let count = (0..s5.order())
            .filter(|&g| {
                g != s5.identity() && s5.element_order(g) == 2 && even.contains(s5.label(g))
            })
            .count();
        assert_eq!(count, 15);
        assert_eq!(s5.center(), vec![s5.identity()]);
    }

    #[test]
    fn metacyclic_twists() {
        let m73 = metacyclic(7, 3).unwrap();
        assert_eq!(m73.order(), 21);
        let (s, t) = (1, 7);
        // t s t^{-1} = s^2
        assert_eq!(m73.conj(t, s), m73.pow(s, 2));

        let m52 = metacyclic(5, 2).unwrap();
        assert_eq!(m52.conj(5, 1), m52.pow(1, 4)); // t s t^{-1} = s^4

        let m32 = metacyclic(3, 2).unwrap();
        assert_eq!(m32.order(), 6);
        assert!(!m32.is_abelian()); // D3 in disguise

        assert_eq!(metacyclic(4, 2), Err(GroupError::NotPrime(4)));
        assert_eq!(
            metacyclic(5, 3),
            Err(GroupError::BadCongruence { p: 5, q: 3 })
        );
    }

    #[test]
    fn names_resolve() {
        for name in ["D4", "S5", "A4", "M7_3", "C6", "C2xC2"] {
            assert_eq!(group_by_name(name).unwrap().name(), name);
        }
        assert!(matches!(
            group_by_name("Q8"),
            Err(GroupError::UnknownGroup(_))
        ));
        assert!(matches!(
            group_by_name("Dx"),
            Err(GroupError::UnknownGroup(_))
        ));
    }

    #[test]
    fn cycle_labels() {
        assert_eq!(cycle_label(&[0, 1, 2]), "e");
        assert_eq!(cycle_label(&[1, 0, 3, 2]), "(01)(23)");
        assert_eq!(cycle_label(&[1, 2, 0]), "(012)");
    }
}
