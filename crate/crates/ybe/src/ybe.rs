//! Yang-Baxter solutions as explicit tables on G x G, produced either by
//! evaluating the two brace formulas or the closed-form expressions in the
//! generating endomorphism, together with the verification suite: braid
//! identity, non-degeneracy, inverse pairing, involutivity, and transport
//! along group automorphisms.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::brace::SkewBrace;
use crate::group::FiniteGroup;
use crate::morphism::GroupMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YbeError {
    #[error("solutions live over different groups")]
    GroupMismatch,
    #[error("table does not cover the full square of the group")]
    MalformedTable,
    #[error("transport map is not bijective")]
    NotBijective,
    #[error("map is not an endomorphism of its group")]
    NotEndomorphism,
}

/// How a solution table was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    BraceEq1,
    BraceEq2,
    ClosedFormR,
    ClosedFormRPrime,
    FamilyFormula,
    External,
}

/// Braid, non-degeneracy, and involutivity, recomputed from the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFlags {
    pub braid: bool,
    pub nondegenerate: bool,
    pub involutive: bool,
}

/// A total map G x G -> G x G stored row-major by (a, b) -> index a*n + b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeMap {
    group: Arc<FiniteGroup>,
    table: Vec<(u16, u16)>,
    provenance: Provenance,
}

impl YbeMap {
    pub fn from_entries(
        group: &Arc<FiniteGroup>,
        table: Vec<(usize, usize)>,
        provenance: Provenance,
    ) -> Result<Self, YbeError> {
        let n = group.order();
        if table.len() != n * n || table.iter().any(|&(a, b)| a >= n || b >= n) {
            return Err(YbeError::MalformedTable);
        }
        Ok(YbeMap {
            group: group.clone(),
            table: table.into_iter().map(|(a, b)| (a as u16, b as u16)).collect(),
            provenance,
        })
    }

    /// (a, b) -> (b, a); the solution of the trivial map on an abelian group.
    pub fn swap(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push((b as u16, a as u16));
            }
        }
        YbeMap {
            group: group.clone(),
            table,
            provenance: Provenance::External,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    #[inline]
    pub fn apply(&self, a: usize, b: usize) -> (usize, usize) {
        let (x, y) = self.table[a * self.group.order() + b];
        (x as usize, y as usize)
    }

    /// Row-major list of ((a, b), (a', b')) pairs.
    pub fn entries(&self) -> Vec<((usize, usize), (usize, usize))> {
        let n = self.group.order();
        self.table
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| ((i / n, i % n), (x as usize, y as usize)))
            .collect()
    }

    /// First triple (in lexicographic order) where the two braid
    /// compositions disagree, if any.
    pub fn braid_counterexample(&self) -> Option<(usize, usize, usize)> {
        let n = self.group.order();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // Left side: act on positions 12, 23, 12.
                    let (a, b) = self.apply(x, y);
                    let (c, d) = self.apply(b, z);
                    let (e, f) = self.apply(a, c);
                    // Right side: act on positions 23, 12, 23.
                    let (p, q) = self.apply(y, z);
                    let (u, v) = self.apply(x, p);
                    let (w, t) = self.apply(v, q);
                    if (e, f, d) != (u, w, t) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn verify_braid(&self) -> bool {
        self.braid_counterexample().is_none()
    }

    /// First degenerate component: ("f", x) when y -> first(R(x, y)) is not
    /// bijective for that fixed x, ("g", y) when x -> second(R(x, y)) is not
    /// bijective for that fixed y.
    pub fn nondegeneracy_counterexample(&self) -> Option<(&'static str, usize)> {
        let n = self.group.order();
        for x in 0..n {
            let mut seen = vec![false; n];
            for y in 0..n {
                let (first, _) = self.apply(x, y);
                if std::mem::replace(&mut seen[first], true) {
                    return Some(("f", x));
                }
            }
        }
        for y in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let (_, second) = self.apply(x, y);
                if std::mem::replace(&mut seen[second], true) {
                    return Some(("g", y));
                }
            }
        }
        None
    }

    pub fn verify_nondegenerate(&self) -> bool {
        self.nondegeneracy_counterexample().is_none()
    }

    pub fn is_involutive(&self) -> bool {
        let n = self.group.order();
        (0..n * n).all(|i| {
            let (a, b) = (i / n, i % n);
            let (x, y) = self.apply(a, b);
            self.apply(x, y) == (a, b)
        })
    }

    pub fn flags(&self) -> SolutionFlags {
        SolutionFlags {
            braid: self.verify_braid(),
            nondegenerate: self.verify_nondegenerate(),
            involutive: self.is_involutive(),
        }
    }
}

/// The first brace formula: R(a, b) = (a^{-1}(a o b), bar(a^{-1}(a o b)) o a o b).
pub fn solution_from_brace(brace: &SkewBrace) -> YbeMap {
    let g = brace.carrier();
    let n = g.order();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let ab = brace.circle(a, b);
            let first = g.mul(g.inv(a), ab);
            let second = brace.circle(brace.circle_inverse(first), ab);
            table.push((first as u16, second as u16));
        }
    }
    YbeMap {
        group: g.clone(),
        table,
        provenance: Provenance::BraceEq1,
    }
}

/// The second brace formula: R'(a, b) = ((a o b)a^{-1}, bar((a o b)a^{-1}) o a o b).
/// Identical to the first formula evaluated on the opposite brace.
pub fn inverse_solution_from_brace(brace: &SkewBrace) -> YbeMap {
    let g = brace.carrier();
    let n = g.order();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let ab = brace.circle(a, b);
            let first = g.mul(ab, g.inv(a));
            let second = brace.circle(brace.circle_inverse(first), ab);
            table.push((first as u16, second as u16));
        }
    }
    YbeMap {
        group: g.clone(),
        table,
        provenance: Provenance::BraceEq2,
    }
}

/// Direct closed form in the endomorphism:
/// R(g, h) = (psi(g^{-1}) h psi(g),
///            psi(h g^{-1}) h^{-1} psi(g) g psi(g^{-1}) h psi(g h^{-1})).
pub fn closed_form_r(psi: &GroupMap) -> Result<YbeMap, YbeError> {
    if !psi.is_endomorphism() {
        return Err(YbeError::NotEndomorphism);
    }
    let g = psi.source().clone();
    let n = g.order();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        let a_inv = g.inv(a);
        for b in 0..n {
            let b_inv = g.inv(b);
            let first = g.mul(g.mul(psi.apply(a_inv), b), psi.apply(a));
            let mut second = psi.apply(g.mul(b, a_inv));
            second = g.mul(second, b_inv);
            second = g.mul(second, psi.apply(a));
            second = g.mul(second, a);
            second = g.mul(second, psi.apply(a_inv));
            second = g.mul(second, b);
            second = g.mul(second, psi.apply(g.mul(a, b_inv)));
            table.push((first as u16, second as u16));
        }
    }
    Ok(YbeMap {
        group: g,
        table,
        provenance: Provenance::ClosedFormR,
    })
}

/// Direct closed form of the inverse:
/// R'(g, h) = (g psi(g^{-1}) h psi(g) g^{-1}, psi(h) g psi(h^{-1})).
pub fn closed_form_r_prime(psi: &GroupMap) -> Result<YbeMap, YbeError> {
    if !psi.is_endomorphism() {
        return Err(YbeError::NotEndomorphism);
    }
    let g = psi.source().clone();
    let n = g.order();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        let a_inv = g.inv(a);
        for b in 0..n {
            let first = g.mul(
                g.mul(g.mul(g.mul(a, psi.apply(a_inv)), b), psi.apply(a)),
                a_inv,
            );
            let second = g.mul(g.mul(psi.apply(b), a), psi.apply(g.inv(b)));
            table.push((first as u16, second as u16));
        }
    }
    Ok(YbeMap {
        group: g,
        table,
        provenance: Provenance::ClosedFormRPrime,
    })
}

/// R' o R = id = R o R' on every pair.
pub fn is_inverse_pair(r: &YbeMap, r_prime: &YbeMap) -> Result<bool, YbeError> {
    if **r.group() != **r_prime.group() {
        return Err(YbeError::GroupMismatch);
    }
    let n = r.group().order();
    for a in 0..n {
        for b in 0..n {
            let (x, y) = r.apply(a, b);
            if r_prime.apply(x, y) != (a, b) {
                return Ok(false);
            }
            let (x, y) = r_prime.apply(a, b);
            if r.apply(x, y) != (a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Conjugate the solution by phi on both tensor factors:
/// (a, b) -> (phi^{-1} x phi^{-1}) R (phi(a), phi(b)).
pub fn transport_by_automorphism(r: &YbeMap, phi: &GroupMap) -> Result<YbeMap, YbeError> {
    if **phi.source() != **r.group() || !phi.is_endomorphism() {
        return Err(YbeError::GroupMismatch);
    }
    if !phi.is_bijective() {
        return Err(YbeError::NotBijective);
    }
    let phi_inv = phi.inverse().expect("bijective");
    let n = r.group().order();
    let mut table = Vec::with_capacity(n * n);
    // push forward: the transported map is (phi x phi) . R . (phi^-1 x phi^-1),
    // so transporting the solution of psi yields the solution of phi psi phi^-1
    for a in 0..n {
        for b in 0..n {
            let (x, y) = r.apply(phi_inv.apply(a), phi_inv.apply(b));
            table.push((phi.apply(x) as u16, phi.apply(y) as u16));
        }
    }
    Ok(YbeMap {
        group: r.group().clone(),
        table,
        provenance: r.provenance,
    })
}
