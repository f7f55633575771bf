//! Group homomorphisms as image vectors: enumeration by generator-image
//! backtracking, the fixed-point-free abelian filter, and classification
//! under automorphism conjugation and under "same regular subgroup".

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::perm;

/// Node budget for the generator-image search unless the caller overrides it.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Exhaustive homomorphism-law validation is quadratic; above this order a
/// seeded sample of pairs is checked instead.
const EXHAUSTIVE_HOM_BOUND: usize = 1024;
const HOM_SAMPLE_PAIRS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("image vector has wrong length or out-of-range entries")]
    MalformedImages,
    #[error("not a homomorphism: f({g} * {h}) != f({g}) * f({h})")]
    NotHomomorphic { g: usize, h: usize },
    #[error("map is not bijective")]
    NotBijective,
    #[error("maps are defined over incompatible groups")]
    GroupMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search exceeded its node budget of {budget}")]
    BudgetExceeded { budget: u64 },
}

/// A homomorphism between two table groups, stored as the vector of images
/// of every source element. Construction checks the homomorphism law.
#[derive(Debug, Clone)]
pub struct GroupMap {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<u16>,
}

impl PartialEq for GroupMap {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
            && self.source.name() == other.source.name()
            && self.target.name() == other.target.name()
    }
}

impl Eq for GroupMap {}

impl GroupMap {
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<Self, MapError> {
        let n = source.order();
        if images.len() != n || images.iter().any(|&x| x >= target.order()) {
            return Err(MapError::MalformedImages);
        }
        if n <= EXHAUSTIVE_HOM_BOUND {
            for g in 0..n {
                for h in 0..n {
                    if images[source.mul(g, h)] != target.mul(images[g], images[h]) {
                        return Err(MapError::NotHomomorphic { g, h });
                    }
                }
            }
        } else {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6e0d_0 ^ n as u64);
            for _ in 0..HOM_SAMPLE_PAIRS {
                let (g, h) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if images[source.mul(g, h)] != target.mul(images[g], images[h]) {
                    return Err(MapError::NotHomomorphic { g, h });
                }
            }
        }
        Ok(Self::from_images_unchecked(source, target, images))
    }

    /// For callers that have already proven the law holds (the enumeration
    /// below does, by construction).
    pub(crate) fn from_images_unchecked(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Self {
        GroupMap {
            source,
            target,
            images: images.into_iter().map(|x| x as u16).collect(),
        }
    }

    pub fn endomorphism(group: &Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self, MapError> {
        GroupMap::new(group.clone(), group.clone(), images)
    }

    /// g -> 1 on the whole group.
    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        let e = group.identity();
        Self::from_images_unchecked(group.clone(), group.clone(), vec![e; group.order()])
    }

    pub fn identity_map(group: &Arc<FiniteGroup>) -> Self {
        Self::from_images_unchecked(group.clone(), group.clone(), (0..group.order()).collect())
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.images[g] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub(crate) fn image_key(&self) -> &[u16] {
        &self.images
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn is_endomorphism(&self) -> bool {
        Arc::ptr_eq(&self.source, &self.target) || *self.source == *self.target
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.images.len() == self.target.order()
            && self.images.iter().all(|&x| {
                let fresh = !seen[x as usize];
                seen[x as usize] = true;
                fresh
            })
    }

    pub fn inverse(&self) -> Result<GroupMap, MapError> {
        if !self.is_bijective() {
            return Err(MapError::NotBijective);
        }
        let mut inv = vec![0usize; self.images.len()];
        for (g, &x) in self.images.iter().enumerate() {
            inv[x as usize] = g;
        }
        Ok(Self::from_images_unchecked(
            self.target.clone(),
            self.source.clone(),
            inv,
        ))
    }

    /// `self` after `inner`: g -> self(inner(g)).
    pub fn compose(&self, inner: &GroupMap) -> Result<GroupMap, MapError> {
        if !(Arc::ptr_eq(&self.source, &inner.target) || *self.source == *inner.target) {
            return Err(MapError::GroupMismatch);
        }
        let images = inner.images.iter().map(|&x| self.apply(x as usize)).collect();
        Ok(Self::from_images_unchecked(
            inner.source.clone(),
            self.target.clone(),
            images,
        ))
    }

    /// phi . self . phi^{-1} for an automorphism phi of the same group.
    pub fn conjugate_by(&self, phi: &GroupMap) -> Result<GroupMap, MapError> {
        let phi_inv = phi.inverse()?;
        phi.compose(self)?.compose(&phi_inv)
    }
}

/// Outcome of the fixed-point-free abelian test: valid exactly when both
/// witnesses are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpfCertificate {
    pub map: GroupMap,
    /// First g != 1 with psi(g) = g, in index order.
    pub fixed_point_witness: Option<usize>,
    /// First non-commuting pair of image elements, scanning the sorted image
    /// set in index order.
    pub abelian_witness: Option<(usize, usize)>,
}

impl FpfCertificate {
    pub fn is_valid(&self) -> bool {
        self.fixed_point_witness.is_none() && self.abelian_witness.is_none()
    }
}

pub fn is_fpf_abelian(psi: &GroupMap) -> FpfCertificate {
    let g = psi.source();
    let fixed_point_witness = (0..g.order())
        .filter(|&x| x != g.identity())
        .find(|&x| psi.apply(x) == x);
    let mut image: Vec<usize> = psi.images();
    image.sort_unstable();
    image.dedup();
    let mut abelian_witness = None;
    'scan: for (i, &x) in image.iter().enumerate() {
        for &y in &image[i + 1..] {
            if !g.commutes(x, y) {
                abelian_witness = Some((x, y));
                break 'scan;
            }
        }
    }
    FpfCertificate {
        map: psi.clone(),
        fixed_point_witness,
        abelian_witness,
    }
}

/// All endomorphisms of `group`, ordered lexicographically by image vector.
///
/// The search assigns images to the stored generators (pruned by element
/// order divisibility), then extends each assignment over the whole group by
/// a breadth-first closure that checks every edge `x -> x*gen`, which is
/// exactly the homomorphism law on a generating set of relations.
pub fn enumerate_endomorphisms(group: &Arc<FiniteGroup>) -> Result<Vec<GroupMap>, SearchError> {
    enumerate_endomorphisms_with_budget(group, DEFAULT_NODE_BUDGET)
}

pub fn enumerate_endomorphisms_with_budget(
    group: &Arc<FiniteGroup>,
    budget: u64,
) -> Result<Vec<GroupMap>, SearchError> {
    let n = group.order();
    let gens = group.generators().to_vec();
    let orders: Vec<usize> = (0..n).map(|g| group.element_order(g)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&gen| (0..n).filter(|&x| orders[gen] % orders[x] == 0).collect())
        .collect();

    let mut chosen = vec![0usize; gens.len()];
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut nodes: u64 = 0;
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)]; // (depth, candidate cursor)
    while let Some((depth, cursor)) = stack.pop() {
        if cursor >= candidates[depth].len() {
            continue;
        }
        stack.push((depth, cursor + 1));
        nodes += 1;
        if nodes > budget {
            return Err(SearchError::BudgetExceeded { budget });
        }
        chosen[depth] = candidates[depth][cursor];
        if depth + 1 < gens.len() {
            stack.push((depth + 1, 0));
        } else if let Some(images) = extend_by_closure(group, &gens, &chosen) {
            found.push(images);
        }
    }
    found.sort_unstable();
    Ok(found
        .into_iter()
        .map(|images| GroupMap::from_images_unchecked(group.clone(), group.clone(), images))
        .collect())
}

/// Propagate generator images across the group. Returns the full image
/// vector iff every product edge is consistent, which makes the extension a
/// homomorphism (consistency on `x -> x*gen` edges covers any word).
fn extend_by_closure(
    group: &Arc<FiniteGroup>,
    gens: &[usize],
    chosen: &[usize],
) -> Option<Vec<usize>> {
    let n = group.order();
    const UNSET: usize = usize::MAX;
    let mut img = vec![UNSET; n];
    img[group.identity()] = group.identity();
    let mut queue = vec![group.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (i, &s) in gens.iter().enumerate() {
            let y = group.mul(x, s);
            let iy = group.mul(img[x], chosen[i]);
            if img[y] == UNSET {
                img[y] = iy;
                queue.push(y);
            } else if img[y] != iy {
                return None;
            }
        }
    }
    debug_assert!(img.iter().all(|&v| v != UNSET));
    Some(img)
}

/// The fixed-point-free abelian sublist of `enumerate_endomorphisms`, in the
/// same lexicographic order (so the trivial map always comes first).
pub fn enumerate_fpf(group: &Arc<FiniteGroup>) -> Result<Vec<GroupMap>, SearchError> {
    enumerate_fpf_with_budget(group, DEFAULT_NODE_BUDGET)
}

pub fn enumerate_fpf_with_budget(
    group: &Arc<FiniteGroup>,
    budget: u64,
) -> Result<Vec<GroupMap>, SearchError> {
    Ok(enumerate_endomorphisms_with_budget(group, budget)?
        .into_iter()
        .filter(|psi| is_fpf_abelian(psi).is_valid())
        .collect())
}

/// All bijective endomorphisms, lexicographic by image vector. Closure under
/// composition and inverses is re-verified.
pub fn automorphism_group(group: &Arc<FiniteGroup>) -> Result<Vec<GroupMap>, SearchError> {
    automorphism_group_with_budget(group, DEFAULT_NODE_BUDGET)
}

pub fn automorphism_group_with_budget(
    group: &Arc<FiniteGroup>,
    budget: u64,
) -> Result<Vec<GroupMap>, SearchError> {
    let auts: Vec<GroupMap> = enumerate_endomorphisms_with_budget(group, budget)?
        .into_iter()
        .filter(|m| m.is_bijective())
        .collect();
    let members: std::collections::HashSet<&[u16]> =
        auts.iter().map(|m| m.image_key()).collect();
    for a in &auts {
        let inv = a.inverse().expect("bijective by filter");
        assert!(
            members.contains(inv.image_key()),
            "automorphism list not closed under inverse"
        );
        for b in &auts {
            let ab = a.compose(b).expect("same group");
            assert!(
                members.contains(ab.image_key()),
                "automorphism list not closed under composition"
            );
        }
    }
    Ok(auts)
}

/// First automorphism (in the given enumeration order) conjugating psi1 to
/// psi2, or None.
pub fn are_brace_equivalent<'a>(
    psi1: &GroupMap,
    psi2: &GroupMap,
    automorphisms: &'a [GroupMap],
) -> Option<&'a GroupMap> {
    automorphisms.iter().find(|phi| {
        psi1.conjugate_by(phi)
            .map(|conj| conj.images == psi2.images)
            .unwrap_or(false)
    })
}

/// Do two maps induce the identical set of translation permutations? Decided
/// by comparing the permutation sets themselves.
pub fn same_regular_subgroup(psi1: &GroupMap, psi2: &GroupMap) -> bool {
    let n1 = perm::regular_subgroup(psi1.source(), psi1).map(|n| n.sorted_members());
    let n2 = perm::regular_subgroup(psi2.source(), psi2).map(|n| n.sorted_members());
    matches!((n1, n2), (Ok(a), Ok(b)) if a == b)
}

/// The full fixed-point-free abelian census of a group: every map, the
/// orbits under automorphism conjugation, and the coarser grouping by
/// identical regular subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpfClassification {
    /// Lexicographic by image vector; index order is used everywhere below.
    pub all_maps: Vec<GroupMap>,
    /// Sorted index lists; the first entry of each orbit is its
    /// representative (the lexicographically smallest image vector).
    pub brace_orbits: Vec<Vec<usize>>,
    /// Maps grouped by equality of their regular subgroups, sorted by first
    /// member.
    pub subgroup_classes: Vec<Vec<usize>>,
}

pub fn classify_fpf(group: &Arc<FiniteGroup>) -> Result<FpfClassification, SearchError> {
    classify_fpf_with_budget(group, DEFAULT_NODE_BUDGET)
}

pub fn classify_fpf_with_budget(
    group: &Arc<FiniteGroup>,
    budget: u64,
) -> Result<FpfClassification, SearchError> {
    let all_maps = enumerate_fpf_with_budget(group, budget)?;
    let automorphisms = automorphism_group_with_budget(group, budget)?;
    let index_of: HashMap<&[u16], usize> = all_maps
        .iter()
        .enumerate()
        .map(|(i, m)| (m.image_key(), i))
        .collect();

    let mut orbit_of = vec![usize::MAX; all_maps.len()];
    let mut brace_orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..all_maps.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let orbit_id = brace_orbits.len();
        let mut orbit = Vec::new();
        for phi in &automorphisms {
            let conj = all_maps[i].conjugate_by(phi).expect("automorphism");
            let j = index_of[conj.image_key()];
            if orbit_of[j] == usize::MAX {
                orbit_of[j] = orbit_id;
                orbit.push(j);
            }
        }
        orbit.sort_unstable();
        brace_orbits.push(orbit);
    }

    let mut class_of: HashMap<Vec<Vec<usize>>, usize> = HashMap::new();
    let mut subgroup_classes: Vec<Vec<usize>> = Vec::new();
    for (i, psi) in all_maps.iter().enumerate() {
        let signature = perm::regular_subgroup(group, psi)
            .expect("fpf map yields a closed subgroup")
            .sorted_members();
        let next = subgroup_classes.len();
        let id = *class_of.entry(signature).or_insert(next);
        if id == subgroup_classes.len() {
            subgroup_classes.push(Vec::new());
        }
        subgroup_classes[id].push(i);
    }

    Ok(FpfClassification {
        all_maps,
        brace_orbits,
        subgroup_classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn c2_has_two_endomorphisms() {
        let c2 = catalog::cyclic(2).unwrap();
        let endos = enumerate_endomorphisms(&c2).unwrap();
        assert_eq!(endos.len(), 2);
        assert_eq!(endos[0].images(), vec![0, 0]);
        assert_eq!(endos[1].images(), vec![0, 1]);

        // The identity map fixes the generator, so it is not fixed point free.
        let cert = is_fpf_abelian(&endos[1]);
        assert_eq!(cert.fixed_point_witness, Some(1));
        assert!(!cert.is_valid());
        assert!(is_fpf_abelian(&endos[0]).is_valid());
    }

    #[test]
    fn d4_census() {
        let d4 = catalog::dihedral(4).unwrap();
        let endos = enumerate_endomorphisms(&d4).unwrap();
        assert_eq!(endos.len(), 36);
        // Lexicographic order and full validation of each map.
        for pair in endos.windows(2) {
            assert!(pair[0].images() < pair[1].images());
        }
        for e in &endos {
            GroupMap::endomorphism(&d4, e.images()).unwrap();
        }
        assert_eq!(enumerate_fpf(&d4).unwrap().len(), 12);
        assert_eq!(automorphism_group(&d4).unwrap().len(), 8);
    }

    #[test]
    fn fpf_counts_for_small_catalog() {
        for (name, expect) in [("D3", 1), ("C6", 2), ("A4", 5), ("C2xC2", 6)] {
            let g = catalog::group_by_name(name).unwrap();
            assert_eq!(enumerate_fpf(&g).unwrap().len(), expect, "{name}");
        }
    }

    #[test]
    fn c6_fpf_maps_are_trivial_and_squaring() {
        let c6 = catalog::cyclic(6).unwrap();
        let fpf = enumerate_fpf(&c6).unwrap();
        let images: Vec<Vec<usize>> = fpf.iter().map(|m| m.images()).collect();
        assert_eq!(images, vec![vec![0; 6], vec![0, 2, 4, 0, 2, 4]]);
    }

    #[test]
    fn a5_endomorphisms_are_trivial_or_injective() {
        let a5 = catalog::alternating(5).unwrap();
        let endos = enumerate_endomorphisms(&a5).unwrap();
        assert_eq!(endos.len(), 121); // trivial + 120 automorphisms
        assert!(endos
            .iter()
            .all(|m| m.is_bijective() || m.images() == vec![0; 60]));
        assert_eq!(enumerate_fpf(&a5).unwrap().len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let d4 = catalog::dihedral(4).unwrap();
        assert_eq!(
            enumerate_endomorphisms_with_budget(&d4, 3),
            Err(SearchError::BudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn d4_equivalence_pair_and_first_witness() {
        let d4 = catalog::dihedral(4).unwrap();
        let (r, s, rs) = (1usize, 4usize, 5usize);
        // psi1: r,s -> rs; psi2: r -> r^2 s, s -> 1.
        let psi1 = GroupMap::endomorphism(&d4, psi_images(&d4, rs, rs)).unwrap();
        let psi2 = GroupMap::endomorphism(&d4, psi_images(&d4, 6, 0)).unwrap();
        let auts = automorphism_group(&d4).unwrap();
        let phi = are_brace_equivalent(&psi1, &psi2, &auts).expect("equivalent");
        // First witness in lexicographic order sends r -> r, s -> rs.
        assert_eq!(phi.apply(r), r);
        assert_eq!(phi.apply(s), rs);

        let trivial = GroupMap::trivial(&d4);
        assert!(are_brace_equivalent(&trivial, &psi1, &auts).is_none());
        assert!(are_brace_equivalent(&psi1, &psi1, &auts).unwrap().images() == identity_images(8));
    }

    #[test]
    fn a4_classification() {
        let a4 = catalog::alternating(4).unwrap();
        let class = classify_fpf(&a4).unwrap();
        assert_eq!(class.all_maps.len(), 5);
        assert_eq!(class.brace_orbits.len(), 2);
        assert_eq!(class.brace_orbits[0], vec![0]); // the trivial map sits alone
        assert_eq!(class.brace_orbits[1].len(), 4);
    }

    #[test]
    fn subgroup_classes_of_d4() {
        let d4 = catalog::dihedral(4).unwrap();
        let class = classify_fpf(&d4).unwrap();
        assert_eq!(class.all_maps.len(), 12);
        // Central maps, the alpha/beta block, and the gamma/delta block.
        assert_eq!(class.subgroup_classes.len(), 3);
        let mut sizes: Vec<usize> = class.subgroup_classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 4, 4]);
    }

    // Images for the D4 endomorphism determined by r -> a, s -> b (assumes
    // the assignment extends to a homomorphism).
    fn psi_images(d4: &Arc<FiniteGroup>, a: usize, b: usize) -> Vec<usize> {
        let mut img = vec![0usize; 8];
        for i in 0..4 {
            img[i] = d4.pow(a, i as i64);
            img[i + 4] = d4.mul(img[i], b);
        }
        img
    }

    fn identity_images(n: usize) -> Vec<usize> {
        (0..n).collect()
    }
}
