//! Closed-form families: named fixed-point-free maps on dihedral, symmetric,
//! alternating, and metacyclic groups, their hand-expanded solution formulas
//! (kept as an independent evaluation path so they can cross-check the
//! generic machinery), and the subgroup-count arithmetic for dihedral groups.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{self, lex_permutations, perm_parity};
use crate::group::{FiniteGroup, GroupError};
use crate::morphism::{is_fpf_abelian, GroupMap};
use crate::ybe::{Provenance, YbeMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("permutation parameter is odd")]
    OddTau,
    #[error("permutation parameter is not an involution")]
    NonInvolutiveTau,
    #[error("parameter out of range: {what}")]
    BadRange { what: &'static str },
    #[error("formula is stated only for the other parity of m")]
    UnsupportedParity,
    #[error("no closed-form formula covers this input")]
    UnsupportedFamily,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A named family member; the solution formulas cover the documented
/// representatives (alpha/beta at i = 0, metacyclic at i = 0).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    DihedralAlpha { n: usize, i: usize },
    DihedralBeta { n: usize, i: usize },
    DihedralGamma { n: usize, i: usize },
    DihedralDelta { n: usize, i: usize },
    SymmetricTau { n: usize, tau: Vec<usize> },
    MetacyclicIj { p: usize, q: usize, i: usize, j: usize },
    AlternatingSquare,
    Trivial { group: String },
}

/// The dihedral endomorphism fixed by generator images r -> a, s -> b.
fn dihedral_map_from_images(
    d: &Arc<FiniteGroup>,
    n: usize,
    a: usize,
    b: usize,
) -> Result<GroupMap, FamilyError> {
    let mut images = vec![0usize; 2 * n];
    for i in 0..n {
        images[i] = d.pow(a, i as i64);
        images[i + n] = d.mul(images[i], b);
    }
    GroupMap::endomorphism(d, images)
        .map_err(|_| FamilyError::BadRange { what: "images do not define an endomorphism" })
}

fn certified(map: GroupMap) -> GroupMap {
    debug_assert!(is_fpf_abelian(&map).is_valid());
    map
}

/// Every fixed-point-free abelian endomorphism of dihedral(n) for even
/// n = 2m, built from the four reflection-valued families
///   alpha_i: r -> r^(2i) s,     s -> 1
///   beta_i:  r -> r^(2i+m) s,   s -> r^m
///   gamma_i: r -> r^(2i+1) s,   s -> r^(2i+1) s
///   delta_i: r -> r^(2i+1+m) s, s -> r^(2i+1) s
/// (0 <= i <= m-1) together with the center-valued maps. For odd n only the
/// trivial map exists and the list contains just that.
pub fn dihedral_fpf_maps(n: usize) -> Result<Vec<GroupMap>, FamilyError> {
    let d = catalog::dihedral(n)?;
    let mut maps = vec![GroupMap::trivial(&d)];
    if n % 2 == 1 {
        return Ok(maps);
    }
    let m = n / 2;
    let e = d.identity();
    let half_turn = d.pow(1, m as i64); // r^m, the central rotation
    let central_pairs: &[(usize, usize)] = if m % 2 == 1 {
        &[(e, half_turn)]
    } else {
        &[(half_turn, e), (e, half_turn), (half_turn, half_turn)]
    };
    for &(a, b) in central_pairs {
        maps.push(certified(dihedral_map_from_images(&d, n, a, b)?));
    }
    for i in 0..m {
        let refl = |rot: usize| d.mul(d.pow(1, rot as i64), n); // r^rot s
        let alpha = (refl(2 * i), e);
        let beta = (refl(2 * i + m), half_turn);
        let gamma = (refl(2 * i + 1), refl(2 * i + 1));
        let delta = (refl(2 * i + 1 + m), refl(2 * i + 1));
        for (a, b) in [alpha, beta, gamma, delta] {
            maps.push(certified(dihedral_map_from_images(&d, n, a, b)?));
        }
    }
    Ok(maps)
}

/// The map collapsing even permutations to the identity and sending every
/// odd permutation to tau (given in one-line notation); valid exactly when
/// tau is an even involution.
pub fn symmetric_fpf(n: usize, tau: &[usize]) -> Result<GroupMap, FamilyError> {
    let s = catalog::symmetric(n)?;
    if tau.len() != n || {
        let mut seen = vec![false; n];
        !tau.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
    } {
        return Err(FamilyError::BadRange { what: "tau is not a permutation of 0..n" });
    }
    if (0..n).any(|x| tau[tau[x]] != x) {
        return Err(FamilyError::NonInvolutiveTau);
    }
    if perm_parity(tau) == 1 {
        return Err(FamilyError::OddTau);
    }
    let perms = lex_permutations(n);
    let tau_index = perms.iter().position(|p| p == tau).expect("tau ranks");
    let images: Vec<usize> = perms
        .iter()
        .map(|p| if perm_parity(p) == 0 { s.identity() } else { tau_index })
        .collect();
    Ok(certified(
        GroupMap::endomorphism(&s, images).expect("two-valued parity map is a homomorphism"),
    ))
}

/// psi(s) = 1, psi(t) = s^i t^j on the metacyclic group; j = 1 would fix
/// s^i t, and j = 0 collapses to the trivial map, so 2 <= j <= q-1.
pub fn metacyclic_fpf(p: usize, q: usize, i: usize, j: usize) -> Result<GroupMap, FamilyError> {
    let g = catalog::metacyclic(p, q)?;
    if i >= p {
        return Err(FamilyError::BadRange { what: "i must satisfy 0 <= i <= p-1" });
    }
    if j < 2 || j >= q {
        return Err(FamilyError::BadRange { what: "j must satisfy 2 <= j <= q-1" });
    }
    let t_image = g.mul(i, p * j); // s^i t^j under the index convention a + p*b
    let images: Vec<usize> = (0..p * q)
        .map(|idx| g.pow(t_image, (idx / p) as i64))
        .collect();
    Ok(certified(
        GroupMap::endomorphism(&g, images).expect("relations are respected"),
    ))
}

/// On the alternating group of degree 4: kill the Klein subgroup and square
/// the chosen 3-cycle x = (012).
pub fn alternating_square_map() -> Result<GroupMap, FamilyError> {
    let a4 = catalog::alternating(4)?;
    let x = a4.element_by_label("(012)").expect("3-cycle present");
    let images: Vec<usize> = (0..12)
        .map(|g| {
            let (_, i) = klein_decompose(&a4, x, g);
            a4.pow(x, 2 * i as i64)
        })
        .collect();
    Ok(certified(
        GroupMap::endomorphism(&a4, images).expect("Klein quotient squaring map"),
    ))
}

/// Write g = v x^i with v in the Klein subgroup and 0 <= i <= 2.
fn klein_decompose(a4: &FiniteGroup, x: usize, g: usize) -> (usize, usize) {
    for i in 0..3 {
        let v = a4.mul(g, a4.pow(x, -(i as i64)));
        if a4.mul(v, v) == a4.identity() {
            return (v, i);
        }
    }
    unreachable!("every element factors over the Klein subgroup");
}

/// The endomorphism a family spec names.
pub fn family_map(spec: &FamilySpec) -> Result<GroupMap, FamilyError> {
    match spec {
        FamilySpec::DihedralAlpha { n, i }
        | FamilySpec::DihedralBeta { n, i }
        | FamilySpec::DihedralGamma { n, i }
        | FamilySpec::DihedralDelta { n, i } => {
            let (n, i) = (*n, *i);
            if n % 2 == 1 {
                return Err(FamilyError::UnsupportedParity);
            }
            let m = n / 2;
            if i >= m {
                return Err(FamilyError::BadRange { what: "i must satisfy 0 <= i <= m-1" });
            }
            let d = catalog::dihedral(n)?;
            let e = d.identity();
            let half_turn = d.pow(1, m as i64);
            let refl = |rot: usize| d.mul(d.pow(1, rot as i64), n);
            let (a, b) = match spec {
                FamilySpec::DihedralAlpha { .. } => (refl(2 * i), e),
                FamilySpec::DihedralBeta { .. } => (refl(2 * i + m), half_turn),
                FamilySpec::DihedralGamma { .. } => (refl(2 * i + 1), refl(2 * i + 1)),
                _ => (refl(2 * i + 1 + m), refl(2 * i + 1)),
            };
            Ok(certified(dihedral_map_from_images(&d, n, a, b)?))
        }
        FamilySpec::SymmetricTau { n, tau } => symmetric_fpf(*n, tau),
        FamilySpec::MetacyclicIj { p, q, i, j } => metacyclic_fpf(*p, *q, *i, *j),
        FamilySpec::AlternatingSquare => alternating_square_map(),
        FamilySpec::Trivial { group } => {
            let g = catalog::group_by_name(group)?;
            Ok(GroupMap::trivial(&g))
        }
    }
}

/// Evaluate a power word alternating r- and s-exponents in a dihedral
/// group: r-exponents reduce mod n, s-exponents mod 2.
fn dihedral_word(d: &FiniteGroup, factors: &[(char, i64)]) -> usize {
    let mut acc = d.identity();
    for &(sym, e) in factors {
        let base = if sym == 'r' { 1 } else { d.order() / 2 };
        acc = d.mul(acc, d.pow(base, e));
    }
    acc
}

fn solution_table(
    group: &Arc<FiniteGroup>,
    f: impl Fn(usize, usize) -> (usize, usize),
) -> YbeMap {
    let n = group.order();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(f(a, b));
        }
    }
    YbeMap::from_entries(group, table, Provenance::FamilyFormula).expect("total table")
}

/// Split a dihedral element index into (rotation, reflection) exponents.
fn dihedral_exponents(n: usize, g: usize) -> (i64, i64) {
    if g < n {
        (g as i64, 0)
    } else {
        ((g - n) as i64, 1)
    }
}

/// The family formulas for the i = 0 dihedral representatives. Both alpha_0
/// and beta_0 produce these tables: the two maps differ by a central-valued
/// shift that cancels from every circle product.
fn dihedral_alpha_solution(d: &Arc<FiniteGroup>, prime: bool) -> YbeMap {
    let n = d.order() / 2;
    solution_table(d, |g, h| {
        let (i, j) = dihedral_exponents(n, g);
        let (k, l) = dihedral_exponents(n, h);
        if prime {
            let first = dihedral_word(
                d,
                &[('r', i), ('s', i + j), ('r', k), ('s', i + j + l), ('r', -i)],
            );
            let second = dihedral_word(d, &[('s', k), ('r', i), ('s', j + k)]);
            (first, second)
        } else {
            let first = dihedral_word(d, &[('s', i), ('r', k), ('s', i + l)]);
            let second = dihedral_word(
                d,
                &[
                    ('s', i + k + l),
                    ('r', -k),
                    ('s', i),
                    ('r', i),
                    ('s', i + j),
                    ('r', k),
                    ('s', i + k + l),
                ],
            );
            (first, second)
        }
    })
}

/// The two-per-parity case split on the symmetric group.
fn symmetric_solution(s: &Arc<FiniteGroup>, tau: usize, prime: bool) -> YbeMap {
    let n = s.order();
    let degree = (1..=8).find(|&d| (1..=d).product::<usize>() == n).expect("factorial order");
    let perms = lex_permutations(degree);
    let odd: Vec<bool> = (0..n).map(|g| perm_parity(&perms[g]) == 1).collect();
    solution_table(s, |sigma, pi| {
        let conj_tau = |g: usize| s.mul(s.mul(tau, g), tau);
        if prime {
            let first = if odd[sigma] {
                s.conj(sigma, conj_tau(pi))
            } else {
                s.conj(sigma, pi)
            };
            let second = if odd[pi] { conj_tau(sigma) } else { sigma };
            (first, second)
        } else {
            let first = if odd[sigma] { conj_tau(pi) } else { pi };
            // Second component: conjugate sigma (tau-dressed when sigma is
            // odd) by pi, with an outer tau pair when the parities differ.
            let middle = if odd[sigma] { conj_tau(sigma) } else { sigma };
            let inner = s.conj(s.inv(pi), middle);
            let second = if odd[sigma] != odd[pi] { conj_tau(inner) } else { inner };
            (first, second)
        }
    })
}

/// The hand-expanded solution on the alternating group of degree 4 for
/// psi(x) = x^2, in the coordinates g = v1 x^i, h = v2 x^j.
fn alternating_solution(a4: &Arc<FiniteGroup>, prime: bool) -> YbeMap {
    let x = a4.element_by_label("(012)").expect("3-cycle present");
    let xp = |e: i64| a4.pow(x, e);
    solution_table(a4, |g, h| {
        let (v1, i) = klein_decompose(a4, x, g);
        let (v2, j) = klein_decompose(a4, x, h);
        let (i, j) = (i as i64, j as i64);
        let word = |parts: &[usize]| parts.iter().fold(a4.identity(), |acc, &p| a4.mul(acc, p));
        if prime {
            let first = word(&[v1, xp(-i), v2, xp(i + j), v1]);
            let second = word(&[xp(-j), v1, xp(i + j)]);
            (first, second)
        } else {
            let first = word(&[xp(i), v2, xp(j - i)]);
            let second = word(&[xp(i + j), v2, xp(-i), v1, xp(-i), v2, xp(-i - j)]);
            (first, second)
        }
    })
}

/// The metacyclic formulas for psi_j = psi_{0,j}, in the coordinates
/// g = s^k t^l, h = s^m t^n.
fn metacyclic_solution(g: &Arc<FiniteGroup>, p: usize, j: usize, prime: bool) -> YbeMap {
    let jj = j as i64;
    let word = |parts: &[usize]| parts.iter().fold(g.identity(), |acc, &x| g.mul(acc, x));
    let sp = |e: i64| g.pow(1, e);
    let tp = |e: i64| g.pow(p, e);
    solution_table(g, |a, b| {
        let (k, l) = ((a % p) as i64, (a / p) as i64);
        let (m, n) = ((b % p) as i64, (b / p) as i64);
        if prime {
            let first = word(&[sp(k), tp(l - jj * l), sp(m), tp(n + jj * l), g.inv(a)]);
            let second = word(&[tp(jj * n), sp(k), tp(l - jj * n)]);
            (first, second)
        } else {
            let first = word(&[tp(-jj * l), sp(m), tp(n + jj * l)]);
            let second = word(&[
                tp(jj * (n - l)),
                g.inv(b),
                tp(jj * l),
                sp(k),
                tp(l - jj * l),
                sp(m),
                tp(n + jj * (l - n)),
            ]);
            (first, second)
        }
    })
}

fn family_solution_impl(spec: &FamilySpec, prime: bool) -> Result<YbeMap, FamilyError> {
    match spec {
        FamilySpec::DihedralAlpha { n, i } | FamilySpec::DihedralBeta { n, i } => {
            if *i != 0 {
                return Err(FamilyError::UnsupportedFamily);
            }
            if n % 2 == 1 {
                return Err(FamilyError::UnsupportedParity);
            }
            if matches!(spec, FamilySpec::DihedralBeta { .. }) && (n / 2) % 2 == 0 {
                // The beta formula is only stated for odd m.
                return Err(FamilyError::UnsupportedParity);
            }
            Ok(dihedral_alpha_solution(&catalog::dihedral(*n)?, prime))
        }
        FamilySpec::DihedralGamma { .. } | FamilySpec::DihedralDelta { .. } => {
            Err(FamilyError::UnsupportedFamily)
        }
        FamilySpec::SymmetricTau { n, tau } => {
            let map = symmetric_fpf(*n, tau)?; // validates tau
            let s = map.source().clone();
            let perms = lex_permutations(*n);
            let tau_index = perms.iter().position(|p| p == tau).expect("validated");
            Ok(symmetric_solution(&s, tau_index, prime))
        }
        FamilySpec::MetacyclicIj { p, q, i, j } => {
            if *i != 0 {
                return Err(FamilyError::UnsupportedFamily);
            }
            metacyclic_fpf(*p, *q, *i, *j)?; // range checks
            Ok(metacyclic_solution(&catalog::metacyclic(*p, *q)?, *p, *j, prime))
        }
        FamilySpec::AlternatingSquare => Ok(alternating_solution(&catalog::alternating(4)?, prime)),
        FamilySpec::Trivial { group } => {
            let g = catalog::group_by_name(group)?;
            Ok(solution_table(&g, |a, b| {
                if prime {
                    (g.conj(a, b), a)
                } else {
                    (b, g.conj(g.inv(b), a))
                }
            }))
        }
    }
}

/// Evaluate the family's displayed formula for R.
pub fn family_solution(spec: &FamilySpec) -> Result<YbeMap, FamilyError> {
    family_solution_impl(spec, false)
}

/// Evaluate the family's displayed formula for the inverse solution R'.
pub fn family_solution_prime(spec: &FamilySpec) -> Result<YbeMap, FamilyError> {
    family_solution_impl(spec, true)
}

/// Number of square roots of 1 in the unit group mod n.
pub fn upsilon_order(n: usize) -> usize {
    (1..=n)
        .filter(|&x| gcd(x, n) == 1 && (x * x) % n == 1 % n)
        .count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn two_adic_valuation(mut n: usize) -> u32 {
    let mut v = 0;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    v
}

/// Closed-form count of distinct regular stable subgroups reachable from
/// fixed-point-free maps and their opposites on dihedral(n), piecewise in
/// the 2-adic valuation of n (n = 2m where applicable). Known to overcount
/// when 4 | n; see the acceptance suite's census comparison.
pub fn s_formula(n: usize) -> usize {
    let m = n / 2;
    match two_adic_valuation(n) {
        0 => 2,
        1 => 4 * m + 2,
        _ => 8 * m + 2,
    }
}

/// Closed-form total of regular stable subgroups of dihedral type: the
/// piecewise count scaled by the number of self-inverse units mod n.
pub fn r_formula(n: usize) -> usize {
    let m = n / 2;
    upsilon_order(n)
        * match two_adic_valuation(n) {
            0 => 1,
            1 => 2 * m + 1,
            2 => m + 1,
            _ => m + 2,
        }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub group: String,
    /// The stated completeness criterion: for dihedral n, whether n is a
    /// prime power or twice an odd prime power; for abelian groups, whether
    /// gcd(|G|, phi(|G|)) = 1.
    pub complete: bool,
    pub detail: CoverageDetail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CoverageDetail {
    Dihedral {
        n: usize,
        s_count: usize,
        r_count: usize,
        formulas_agree: bool,
        prime_power_criterion: bool,
    },
    Abelian {
        order: usize,
        totient: usize,
        gcd: usize,
    },
}

fn is_prime_power(mut n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|&d| n % d == 0).unwrap();
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    (n == 1).then_some((p, k))
}

fn totient(n: usize) -> usize {
    (1..=n).filter(|&x| gcd(x, n) == 1).count()
}

/// Whether the catalog families account for every solution over this group;
/// purely arithmetic (no permutation-group search).
pub fn coverage_report(group: &Arc<FiniteGroup>) -> Result<CoverageReport, FamilyError> {
    if let Some(n) = group
        .name()
        .strip_prefix('D')
        .and_then(|rest| rest.parse::<usize>().ok())
    {
        let s_count = s_formula(n);
        let r_count = r_formula(n);
        let prime_power_criterion = is_prime_power(n).is_some()
            || (n % 2 == 0 && is_prime_power(n / 2).is_some_and(|(p, _)| p != 2));
        return Ok(CoverageReport {
            group: group.name().to_string(),
            complete: prime_power_criterion,
            detail: CoverageDetail::Dihedral {
                n,
                s_count,
                r_count,
                formulas_agree: s_count == r_count,
                prime_power_criterion,
            },
        });
    }
    if group.is_abelian() {
        let order = group.order();
        let tot = totient(order);
        return Ok(CoverageReport {
            group: group.name().to_string(),
            complete: gcd(order, tot) == 1,
            detail: CoverageDetail::Abelian {
                order,
                totient: tot,
                gcd: gcd(order, tot),
            },
        });
    }
    Err(FamilyError::UnsupportedFamily)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::enumerate_fpf;
    use crate::ybe::closed_form_r;

    #[test]
    fn dihedral_family_counts_and_membership() {
        for n in [4, 6, 8, 10, 12] {
            let maps = dihedral_fpf_maps(n).unwrap();
            let m = n / 2;
            let expect = if m % 2 == 1 { 4 * m + 2 } else { 4 * m + 4 };
            assert_eq!(maps.len(), expect, "D{n}");
            let mut images: Vec<Vec<usize>> = maps.iter().map(|p| p.images()).collect();
            images.sort_unstable();
            images.dedup();
            assert_eq!(images.len(), expect, "distinct maps for D{n}");
            for map in &maps {
                assert!(is_fpf_abelian(map).is_valid());
            }
        }
    }

    #[test]
    fn odd_dihedral_has_only_the_trivial_map() {
        let maps = dihedral_fpf_maps(5).unwrap();
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].images(), vec![0; 10]);
    }

    #[test]
    fn known_small_maps_appear() {
        // alpha_1 on D4 is r -> r^2 s, s -> 1; gamma_0 is r, s -> rs.
        let alpha1 = family_map(&FamilySpec::DihedralAlpha { n: 4, i: 1 }).unwrap();
        assert_eq!(alpha1.apply(1), 6);
        assert_eq!(alpha1.apply(4), 0);
        let gamma0 = family_map(&FamilySpec::DihedralGamma { n: 4, i: 0 }).unwrap();
        assert_eq!(gamma0.apply(1), 5);
        assert_eq!(gamma0.apply(4), 5);
    }

    #[test]
    fn symmetric_map_validation() {
        // (01)(23) padded to degree 5.
        let tau = vec![1, 0, 3, 2, 4];
        let map = symmetric_fpf(5, &tau).unwrap();
        assert!(is_fpf_abelian(&map).is_valid());

        let odd = vec![1, 0, 2, 3, 4]; // a transposition
        assert_eq!(symmetric_fpf(5, &odd), Err(FamilyError::OddTau));
        let non_involution = vec![1, 2, 0, 3, 4]; // a 3-cycle
        assert_eq!(symmetric_fpf(5, &non_involution), Err(FamilyError::NonInvolutiveTau));

        let identity = vec![0, 1, 2, 3, 4];
        let trivial = symmetric_fpf(5, &identity).unwrap();
        assert_eq!(trivial.images(), vec![0; 120]);
    }

    #[test]
    fn metacyclic_map_validation() {
        let psi2 = metacyclic_fpf(7, 3, 0, 2).unwrap();
        assert!(is_fpf_abelian(&psi2).is_valid());
        // psi(t) = t^2 at i = 0: t has index 7, t^2 has index 14.
        assert_eq!(psi2.apply(7), 14);
        assert_eq!(psi2.apply(1), 0);

        assert!(matches!(
            metacyclic_fpf(7, 3, 0, 1),
            Err(FamilyError::BadRange { .. })
        ));
        assert!(matches!(
            metacyclic_fpf(7, 3, 7, 2),
            Err(FamilyError::BadRange { .. })
        ));
    }

    #[test]
    fn family_maps_cover_enumeration() {
        for n in [4, 6, 8] {
            let d = catalog::dihedral(n).unwrap();
            let mut family: Vec<Vec<usize>> =
                dihedral_fpf_maps(n).unwrap().iter().map(|p| p.images()).collect();
            family.sort_unstable();
            let enumerated: Vec<Vec<usize>> =
                enumerate_fpf(&d).unwrap().iter().map(|p| p.images()).collect();
            assert_eq!(family, enumerated, "D{n}");
        }
    }

    #[test]
    fn alpha_solution_matches_generic_path() {
        for n in [4, 6, 8] {
            let spec = FamilySpec::DihedralAlpha { n, i: 0 };
            let psi = family_map(&spec).unwrap();
            let generic = closed_form_r(&psi).unwrap();
            let family = family_solution(&spec).unwrap();
            assert_eq!(family.entries(), generic.entries(), "alpha0 on D{n}");
        }
    }

    #[test]
    fn beta_solution_shares_the_alpha_tables() {
        // m odd: the displayed beta formula; identical tables to alpha_0.
        let beta = FamilySpec::DihedralBeta { n: 6, i: 0 };
        let psi = family_map(&beta).unwrap();
        let family = family_solution(&beta).unwrap();
        assert_eq!(family.entries(), closed_form_r(&psi).unwrap().entries());
        assert_eq!(
            family.entries(),
            family_solution(&FamilySpec::DihedralAlpha { n: 6, i: 0 })
                .unwrap()
                .entries()
        );
        // m even is out of the formula's stated scope.
        assert_eq!(
            family_solution(&FamilySpec::DihedralBeta { n: 4, i: 0 }),
            Err(FamilyError::UnsupportedParity)
        );
    }

    #[test]
    fn symmetric_solution_cases() {
        let tau = vec![1, 0, 3, 2, 4];
        let spec = FamilySpec::SymmetricTau { n: 5, tau: tau.clone() };
        let psi = family_map(&spec).unwrap();
        let family = family_solution(&spec).unwrap();
        assert_eq!(family.entries(), closed_form_r(&psi).unwrap().entries());
        let family_prime = family_solution_prime(&spec).unwrap();
        let s5 = psi.source();
        // sigma, pi both even: R(sigma, pi) = (pi, pi^-1 sigma pi),
        // R'(sigma, pi) = (sigma pi sigma^-1, sigma).
        let sigma = s5.element_by_label("(012)").unwrap();
        let pi = s5.element_by_label("(034)").unwrap();
        assert_eq!(family.apply(sigma, pi), (pi, s5.conj(s5.inv(pi), sigma)));
        assert_eq!(family_prime.apply(sigma, pi), (s5.conj(sigma, pi), sigma));
    }

    #[test]
    fn metacyclic_solution_matches_generic_path() {
        for (p, q, j) in [(7, 3, 2), (13, 3, 2)] {
            let spec = FamilySpec::MetacyclicIj { p, q, i: 0, j };
            let psi = family_map(&spec).unwrap();
            assert_eq!(
                family_solution(&spec).unwrap().entries(),
                closed_form_r(&psi).unwrap().entries(),
                "M{p}_{q} R"
            );
            assert_eq!(
                family_solution_prime(&spec).unwrap().entries(),
                crate::ybe::closed_form_r_prime(&psi).unwrap().entries(),
                "M{p}_{q} R'"
            );
        }
    }

    #[test]
    fn alternating_solution_matches_generic_path() {
        let spec = FamilySpec::AlternatingSquare;
        let psi = family_map(&spec).unwrap();
        assert_eq!(
            family_solution(&spec).unwrap().entries(),
            closed_form_r(&psi).unwrap().entries()
        );
        assert_eq!(
            family_solution_prime(&spec).unwrap().entries(),
            crate::ybe::closed_form_r_prime(&psi).unwrap().entries()
        );
    }

    #[test]
    fn trivial_family_solution() {
        let spec = FamilySpec::Trivial { group: "D4".into() };
        let psi = family_map(&spec).unwrap();
        assert_eq!(
            family_solution(&spec).unwrap().entries(),
            closed_form_r(&psi).unwrap().entries()
        );
    }

    #[test]
    fn arithmetic_formulas() {
        assert_eq!(upsilon_order(8), 4);
        assert_eq!(upsilon_order(12), 4);
        assert_eq!(s_formula(3), 2);
        assert_eq!(s_formula(5), 2);
        assert_eq!(s_formula(4), 18);
        assert_eq!(s_formula(6), 14);
        assert_eq!(s_formula(8), 34);
        assert_eq!(s_formula(10), 22);
        assert_eq!(s_formula(12), 50);
        assert_eq!(r_formula(12), 28);
        assert_eq!(r_formula(8), 24);
        assert_eq!(r_formula(6), 14);
        assert_eq!(r_formula(4), 6);
    }

    #[test]
    fn coverage_reports() {
        let d9 = catalog::dihedral(9).unwrap();
        assert!(coverage_report(&d9).unwrap().complete);
        let d12 = catalog::dihedral(12).unwrap();
        let report = coverage_report(&d12).unwrap();
        assert!(!report.complete);
        let d6 = catalog::dihedral(6).unwrap();
        assert!(coverage_report(&d6).unwrap().complete);

        let c15 = catalog::cyclic(15).unwrap();
        let report = coverage_report(&c15).unwrap();
        assert!(report.complete);
        let c6 = catalog::cyclic(6).unwrap();
        assert!(!coverage_report(&c6).unwrap().complete);

        let a4 = catalog::alternating(4).unwrap();
        assert_eq!(coverage_report(&a4), Err(FamilyError::UnsupportedFamily));
    }

    #[test]
    fn spec_round_trips_through_json() {
        let specs = vec![
            FamilySpec::DihedralAlpha { n: 8, i: 2 },
            FamilySpec::SymmetricTau { n: 5, tau: vec![1, 0, 3, 2, 4] },
            FamilySpec::MetacyclicIj { p: 7, q: 3, i: 0, j: 2 },
            FamilySpec::AlternatingSquare,
            FamilySpec::Trivial { group: "C6".into() },
        ];
        for spec in specs {
            let json = serde_json::to_string(&spec).unwrap();
            let back: FamilySpec = serde_json::from_str(&json).unwrap();
            assert_eq!(back, spec);
        }
        let tagged = serde_json::to_value(&FamilySpec::DihedralAlpha { n: 8, i: 2 }).unwrap();
        assert_eq!(tagged["family"], "dihedral-alpha");
    }
}
