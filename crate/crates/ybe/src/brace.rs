//! Skew braces from fixed-point-free abelian endomorphisms: the carrier
//! group keeps its multiplication (dot) and gains a second group operation
//! (circle) g o h = g psi(g^{-1}) h psi(g), compatible through the relation
//! a o (b . c) = (a o b) . a^{-1} . (a o c). Braces also arise from regular
//! stable permutation subgroups by transporting composition through the
//! evaluation-at-identity bijection.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::morphism::{is_fpf_abelian, GroupMap, MapError};
use crate::perm::RegularSubgroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceError {
    #[error("map is not a fixed-point-free abelian endomorphism of the carrier")]
    NotFpfAbelian,
    #[error("map and carrier group do not match")]
    GroupMismatch,
    #[error("circle table is not a group over the carrier: {why}")]
    BadCircle { why: &'static str },
    #[error("brace relation fails at ({a}, {b}, {c})")]
    BraceAxiomViolation { a: usize, b: usize, c: usize },
    #[error("subgroup does not act freely and transitively")]
    NotRegular,
    #[error("subgroup is not stable under conjugation by left translations")]
    NotStable,
    #[error("circle-to-dot comparison map is not a homomorphism at ({g}, {h})")]
    NotHomomorphic { g: usize, h: usize },
    #[error("circle-to-dot comparison map is not bijective")]
    NotBijective,
    #[error("brace carries no source endomorphism")]
    NoSourceMap,
}

/// A group with two compatible operations on the same element set: the
/// carrier's own table (dot) and a stored circle table, plus the vector of
/// circle-inverses. Axioms are verified exhaustively at construction.
#[derive(Debug, Clone)]
pub struct SkewBrace {
    carrier: Arc<FiniteGroup>,
    circle: Vec<u16>,
    bar: Vec<u16>,
    psi: Option<GroupMap>,
}

impl PartialEq for SkewBrace {
    fn eq(&self, other: &Self) -> bool {
        self.carrier.order() == other.carrier.order()
            && self.carrier.cayley_rows() == other.carrier.cayley_rows()
            && self.carrier.labels() == other.carrier.labels()
            && self.circle == other.circle
            && self.bar == other.bar
    }
}

impl Eq for SkewBrace {}

impl SkewBrace {
    pub fn carrier(&self) -> &Arc<FiniteGroup> {
        &self.carrier
    }

    /// The endomorphism the brace was built from, when there is one.
    pub fn source_map(&self) -> Option<&GroupMap> {
        self.psi.as_ref()
    }

    #[inline]
    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.carrier.mul(a, b)
    }

    #[inline]
    pub fn circle(&self, a: usize, b: usize) -> usize {
        self.circle[a * self.carrier.order() + b] as usize
    }

    /// The inverse of g in the circle group.
    pub fn circle_inverse(&self, g: usize) -> usize {
        self.bar[g] as usize
    }

    pub fn circle_rows(&self) -> Vec<Vec<usize>> {
        let n = self.carrier.order();
        (0..n)
            .map(|a| (0..n).map(|b| self.circle(a, b)).collect())
            .collect()
    }

    pub fn bar_vector(&self) -> Vec<usize> {
        self.bar.iter().map(|&x| x as usize).collect()
    }

    /// The circle operation as a standalone table group on the same labels.
    pub fn circle_group(&self) -> Arc<FiniteGroup> {
        let name = format!("{}_circle", self.carrier.name());
        let group = FiniteGroup::from_cayley(
            &name,
            &self.circle_rows(),
            Some(self.carrier.labels().to_vec()),
        )
        .expect("circle table was certified as a group at construction");
        Arc::new(group)
    }

    /// g -> g . psi(g^{-1}), validated as a bijective homomorphism from the
    /// circle group to the dot group.
    pub fn phi_isomorphism(&self) -> Result<GroupMap, BraceError> {
        let psi = self.psi.as_ref().ok_or(BraceError::NoSourceMap)?;
        let n = self.carrier.order();
        let images: Vec<usize> = (0..n)
            .map(|g| self.carrier.mul(g, psi.apply(self.carrier.inv(g))))
            .collect();
        let map = GroupMap::new(self.circle_group(), self.carrier.clone(), images).map_err(
            |e| match e {
                MapError::NotHomomorphic { g, h } => BraceError::NotHomomorphic { g, h },
                _ => BraceError::BadCircle {
                    why: "comparison map malformed",
                },
            },
        )?;
        if !map.is_bijective() {
            return Err(BraceError::NotBijective);
        }
        Ok(map)
    }

    /// Same circle, dot replaced by the transposed table. The result is
    /// re-verified as a brace.
    pub fn opposite(&self) -> Result<SkewBrace, BraceError> {
        let n = self.carrier.order();
        let transposed: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| self.carrier.mul(b, a)).collect())
            .collect();
        let name = match self.carrier.name().strip_suffix("_op") {
            Some(base) => base.to_string(),
            None => format!("{}_op", self.carrier.name()),
        };
        let carrier = Arc::new(
            FiniteGroup::from_cayley(&name, &transposed, Some(self.carrier.labels().to_vec()))
                .expect("transpose of a group table is a group table"),
        );
        verify_brace_tables(&carrier, &self.circle, &self.bar)?;
        Ok(SkewBrace {
            carrier,
            circle: self.circle.clone(),
            bar: self.bar.clone(),
            psi: None,
        })
    }
}

/// Check that (carrier, circle) is a group sharing the carrier's identity,
/// that bar lists circle-inverses, and that the compatibility relation
/// a o (b . c) = (a o b) . a^{-1} . (a o c) holds on every triple.
fn verify_brace_tables(
    carrier: &FiniteGroup,
    circle: &[u16],
    bar: &[u16],
) -> Result<(), BraceError> {
    let n = carrier.order();
    let e = carrier.identity();
    if circle.len() != n * n || bar.len() != n {
        return Err(BraceError::BadCircle { why: "wrong table shape" });
    }
    let at = |a: usize, b: usize| circle[a * n + b] as usize;
    for a in 0..n {
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for b in 0..n {
            let (r, c) = (at(a, b), at(b, a));
            if r >= n || c >= n || std::mem::replace(&mut row[r], true) {
                return Err(BraceError::BadCircle { why: "row is not a permutation" });
            }
            if std::mem::replace(&mut col[c], true) {
                return Err(BraceError::BadCircle { why: "column is not a permutation" });
            }
        }
    }
    for a in 0..n {
        if at(e, a) != a || at(a, e) != a {
            return Err(BraceError::BadCircle { why: "identity is not shared with dot" });
        }
        if at(a, bar[a] as usize) != e || at(bar[a] as usize, a) != e {
            return Err(BraceError::BadCircle { why: "bar is not the circle inverse" });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(BraceError::BadCircle { why: "circle is not associative" });
                }
            }
        }
    }
    for a in 0..n {
        let a_inv = carrier.inv(a);
        for b in 0..n {
            let left_factor = carrier.mul(at(a, b), a_inv);
            for c in 0..n {
                if at(a, carrier.mul(b, c)) != carrier.mul(left_factor, at(a, c)) {
                    return Err(BraceError::BraceAxiomViolation { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// The brace of a fixed-point-free abelian endomorphism: circle by the
/// displayed product formula, circle-inverses by
/// bar(g) = psi(g) g^{-1} psi(g^{-1}), everything verified before return.
pub fn build_brace(group: &Arc<FiniteGroup>, psi: &GroupMap) -> Result<SkewBrace, BraceError> {
    if **psi.source() != **group || !psi.is_endomorphism() {
        return Err(BraceError::GroupMismatch);
    }
    if !is_fpf_abelian(psi).is_valid() {
        return Err(BraceError::NotFpfAbelian);
    }
    let n = group.order();
    let mut circle = vec![0u16; n * n];
    for g in 0..n {
        let head = group.mul(g, psi.apply(group.inv(g)));
        let tail = psi.apply(g);
        for h in 0..n {
            circle[g * n + h] = group.mul(group.mul(head, h), tail) as u16;
        }
    }
    let bar: Vec<u16> = (0..n)
        .map(|g| group.mul(group.mul(psi.apply(g), group.inv(g)), psi.apply(group.inv(g))) as u16)
        .collect();
    verify_brace_tables(group, &circle, &bar)?;
    Ok(SkewBrace {
        carrier: group.clone(),
        circle,
        bar,
        psi: Some(psi.clone()),
    })
}

/// Wrap an explicit circle table over an existing carrier (used by file
/// import); circle-inverses are read off the table.
pub fn brace_from_tables(
    carrier: &Arc<FiniteGroup>,
    circle_rows: &[Vec<usize>],
    psi: Option<GroupMap>,
) -> Result<SkewBrace, BraceError> {
    let n = carrier.order();
    if circle_rows.len() != n || circle_rows.iter().any(|r| r.len() != n) {
        return Err(BraceError::BadCircle { why: "wrong table shape" });
    }
    let mut circle = vec![0u16; n * n];
    for (a, row) in circle_rows.iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(BraceError::BadCircle { why: "entry out of range" });
            }
            circle[a * n + b] = v as u16;
        }
    }
    let e = carrier.identity();
    let bar: Vec<u16> = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| circle[a * n + b] as usize == e)
                .unwrap_or(0) as u16
        })
        .collect();
    verify_brace_tables(carrier, &circle, &bar)?;
    Ok(SkewBrace {
        carrier: carrier.clone(),
        circle,
        bar,
        psi,
    })
}

/// Transport a regular stable permutation subgroup onto its index set: dot
/// is member composition, circle is pulled through evaluation-at-identity:
/// i o j = kappa^{-1}(kappa(i) * kappa(j)).
pub fn brace_from_regular_subgroup(sub: &RegularSubgroup) -> Result<SkewBrace, BraceError> {
    if !sub.is_regular() {
        return Err(BraceError::NotRegular);
    }
    if !sub.is_g_stable() {
        return Err(BraceError::NotStable);
    }
    let g = sub.group();
    let n = sub.order();
    let index: HashMap<&[usize], usize> = sub
        .members()
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let dot_rows: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let composed: Vec<usize> =
                        sub.member(j).iter().map(|&x| sub.member(i)[x]).collect();
                    index[composed.as_slice()]
                })
                .collect()
        })
        .collect();
    let labels: Vec<String> = sub
        .labels()
        .iter()
        .map(|&l| g.label(l).to_string())
        .collect();
    let carrier = Arc::new(
        FiniteGroup::from_cayley(&format!("{}_N", g.name()), &dot_rows, Some(labels))
            .map_err(|_| BraceError::BadCircle { why: "composition table is not a group" })?,
    );
    let kap = sub.kappa().map_err(|_| BraceError::NotRegular)?;
    let mut kinv = vec![0usize; n];
    for (i, &x) in kap.iter().enumerate() {
        kinv[x] = i;
    }
    let mut circle = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            circle[i * n + j] = kinv[g.mul(kap[i], kap[j])] as u16;
        }
    }
    let e = carrier.identity();
    let bar: Vec<u16> = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| circle[a * n + b] as usize == e)
                .unwrap_or(0) as u16
        })
        .collect();
    verify_brace_tables(&carrier, &circle, &bar)?;
    Ok(SkewBrace {
        carrier,
        circle,
        bar,
        psi: None,
    })
}
