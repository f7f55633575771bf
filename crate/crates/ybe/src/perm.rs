//! Permutation-group side of the construction: the translation permutations
//! eta_g(h) = g*h*psi(g^{-1}) generate a subgroup of Perm(G) that acts freely
//! and transitively and is stable under conjugation by left translations.
//! Evaluation at the identity transports its group structure back onto G.

use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::morphism::{enumerate_fpf_with_budget, GroupMap, SearchError, DEFAULT_NODE_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("member permutations are malformed (wrong length or not bijective)")]
    MalformedMembers,
    #[error("composition of members {g} and {h} is not a member")]
    NotClosed { g: usize, h: usize },
    #[error("subgroup does not act freely and transitively")]
    NotRegular,
}

/// compose(f, g) applies g first: x -> f[g[x]].
fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// A list of permutations of the carrier set [0, n), closed under
/// composition, remembering which group element produced each member.
#[derive(Debug, Clone)]
pub struct RegularSubgroup {
    group: Arc<FiniteGroup>,
    members: Vec<Vec<usize>>,
    labels: Vec<usize>,
    /// Present when the members are the translation permutations of this
    /// map, which unlocks the sharper stability witness check.
    psi: Option<GroupMap>,
}

impl PartialEq for RegularSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.name() == other.group.name()
            && self.members == other.members
            && self.labels == other.labels
    }
}

impl Eq for RegularSubgroup {}

impl RegularSubgroup {
    /// Wrap an explicit member list, checking shape and closure but not
    /// regularity (callers probe that separately).
    pub fn from_members(
        group: Arc<FiniteGroup>,
        members: Vec<Vec<usize>>,
        labels: Vec<usize>,
    ) -> Result<Self, PermError> {
        let n = group.order();
        if members.is_empty() || labels.len() != members.len() {
            return Err(PermError::MalformedMembers);
        }
        for p in &members {
            let mut seen = vec![false; n];
            if p.len() != n || !p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true)) {
                return Err(PermError::MalformedMembers);
            }
        }
        let set: HashSet<&[usize]> = members.iter().map(|p| p.as_slice()).collect();
        for (g, pg) in members.iter().enumerate() {
            for (h, ph) in members.iter().enumerate() {
                if !set.contains(compose(pg, ph).as_slice()) {
                    return Err(PermError::NotClosed { g, h });
                }
            }
        }
        Ok(RegularSubgroup {
            group,
            members,
            labels,
            psi: None,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &[usize] {
        &self.members[i]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Member list as a canonical set (sorted), for subgroup equality.
    pub fn sorted_members(&self) -> Vec<Vec<usize>> {
        let mut m = self.members.clone();
        m.sort_unstable();
        m
    }

    /// Free: only the identity member fixes any point. Transitive: every
    /// point reaches every point. Both checked exhaustively.
    pub fn is_regular(&self) -> bool {
        let n = self.group.order();
        if self.members.len() != n {
            return false;
        }
        let identity: Vec<usize> = (0..n).collect();
        let free = self
            .members
            .iter()
            .all(|p| *p == identity || p.iter().enumerate().all(|(x, &px)| px != x));
        let transitive = (0..n).all(|x| {
            let mut hit = vec![false; n];
            for p in &self.members {
                hit[p[x]] = true;
            }
            hit.iter().all(|&h| h)
        });
        free && transitive
    }

    /// Closed under conjugation by every left translation. When the members
    /// came from a map psi, additionally demands the sharper witness
    /// identity: conjugating eta_g by k lands exactly on eta_{k g k^{-1}}.
    pub fn is_g_stable(&self) -> bool {
        let n = self.group.order();
        let set: HashSet<&[usize]> = self.members.iter().map(|p| p.as_slice()).collect();
        for k in 0..n {
            let kinv = self.group.inv(k);
            for (i, p) in self.members.iter().enumerate() {
                let conj: Vec<usize> = (0..n)
                    .map(|x| self.group.mul(k, p[self.group.mul(kinv, x)]))
                    .collect();
                if !set.contains(conj.as_slice()) {
                    return false;
                }
                if self.psi.is_some() {
                    let target = self.group.conj(k, self.labels[i]);
                    let j = self.labels.iter().position(|&l| l == target).unwrap();
                    if conj != self.members[j] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The evaluation-at-identity bijection, as the vector member index ->
    /// group element. Fails exactly when the action is not regular.
    pub fn kappa(&self) -> Result<Vec<usize>, PermError> {
        let n = self.group.order();
        let e = self.group.identity();
        let kap: Vec<usize> = self.members.iter().map(|p| p[e]).collect();
        let mut seen = vec![false; n];
        if kap.len() != n || !kap.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
            return Err(PermError::NotRegular);
        }
        Ok(kap)
    }

    /// The transported right-translation copy: the member for eta sends x to
    /// kappa^{-1}(x) applied to kappa(eta). It centralizes this subgroup
    /// elementwise, carries the same labels in the same order, and its
    /// transported brace is the opposite of this one's.
    pub fn opposite(&self) -> Result<RegularSubgroup, PermError> {
        if !self.is_regular() {
            return Err(PermError::NotRegular);
        }
        let kap = self.kappa()?;
        let n = self.group.order();
        let mut kinv = vec![0usize; n];
        for (i, &x) in kap.iter().enumerate() {
            kinv[x] = i;
        }
        let members: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|x| self.members[kinv[x]][kap[i]]).collect())
            .collect();
        Ok(RegularSubgroup {
            group: self.group.clone(),
            members,
            labels: self.labels.clone(),
            psi: None,
        })
    }
}

/// The translation permutation h -> g * h * psi(g^{-1}).
pub fn eta(group: &FiniteGroup, psi: &GroupMap, g: usize) -> Vec<usize> {
    let tail = psi.apply(group.inv(g));
    (0..group.order())
        .map(|h| group.mul(group.mul(g, h), tail))
        .collect()
}

/// The subgroup {eta_g : g in G}, with member index = group element.
/// Closure is certified by checking eta_g o eta_h = eta_{g*h} on all pairs.
pub fn regular_subgroup(
    group: &Arc<FiniteGroup>,
    psi: &GroupMap,
) -> Result<RegularSubgroup, PermError> {
    let n = group.order();
    let members: Vec<Vec<usize>> = (0..n).map(|g| eta(group, psi, g)).collect();
    for g in 0..n {
        for h in 0..n {
            if compose(&members[g], &members[h]) != members[group.mul(g, h)] {
                return Err(PermError::NotClosed { g, h });
            }
        }
    }
    let distinct: HashSet<&[usize]> = members.iter().map(|p| p.as_slice()).collect();
    if distinct.len() != n {
        return Err(PermError::NotRegular);
    }
    Ok(RegularSubgroup {
        group: group.clone(),
        members,
        labels: (0..n).collect(),
        psi: Some(psi.clone()),
    })
}

/// lambda(G): the left translations x -> g*x, labelled by g.
pub fn left_translations(group: &Arc<FiniteGroup>) -> RegularSubgroup {
    regular_subgroup(group, &GroupMap::trivial(group)).expect("translations always close")
}

/// rho(G): the right translations x -> x*g, labelled by g.
pub fn right_translations(group: &Arc<FiniteGroup>) -> RegularSubgroup {
    let n = group.order();
    RegularSubgroup {
        group: group.clone(),
        members: (0..n)
            .map(|g| (0..n).map(|x| group.mul(x, g)).collect())
            .collect(),
        labels: (0..n).collect(),
        psi: None,
    }
}

/// How many distinct permutation sets arise as some N_psi or its opposite,
/// over every fixed-point-free abelian endomorphism of the group.
pub fn count_fpf_subgroups(group: &Arc<FiniteGroup>) -> Result<usize, SearchError> {
    count_fpf_subgroups_with_budget(group, DEFAULT_NODE_BUDGET)
}

pub fn count_fpf_subgroups_with_budget(
    group: &Arc<FiniteGroup>,
    budget: u64,
) -> Result<usize, SearchError> {
    let mut seen: HashSet<Vec<Vec<usize>>> = HashSet::new();
    for psi in enumerate_fpf_with_budget(group, budget)? {
        let n = regular_subgroup(group, &psi).expect("certified map");
        let opposite = n.opposite().expect("regular by construction");
        seen.insert(n.sorted_members());
        seen.insert(opposite.sorted_members());
    }
    Ok(seen.len())
}
