//! Dense Cayley-table arithmetic for small finite groups.
//!
//! Elements are plain indices `0..n` and a product is one lookup in a flat
//! row-major table, so the exhaustive verification loops elsewhere in the
//! crate stay cheap. Construction validates the table up front: Latin
//! property, a two-sided identity, two-sided inverses, then associativity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Orders up to this bound get every associativity triple checked at
/// construction; larger tables get a seeded random sample instead.
pub const EXHAUSTIVE_ASSOC_BOUND: usize = 64;

const SPOT_CHECK_TRIPLES: usize = 10_000;
const SPOT_CHECK_SEED: u64 = 0x1bea_7ab1e;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("cayley table is not square with entries in 0..n (or n is out of range)")]
    MalformedTable,
    #[error("labels must be n distinct strings")]
    BadLabels,
    #[error("{axis} {index} of the cayley table is not a permutation of 0..n")]
    NotLatinSquare { axis: &'static str, index: usize },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("associativity fails on the triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("{what}: parameter {got} is outside the supported range {range}")]
    BadOrder {
        what: &'static str,
        range: &'static str,
        got: usize,
    },
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("metacyclic(p, q) needs p = 1 (mod q); got p={p}, q={q}")]
    BadCongruence { p: usize, q: usize },
    #[error("unknown group name {0:?}")]
    UnknownGroup(String),
}

/// A finite group presented by its multiplication table.
///
/// `table[a * n + b]` is the index of the product `a * b`. The identity,
/// inverse vector and a generating set are derived (and checked) during
/// construction, so holders of a value can rely on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u16>,
    identity: usize,
    inverse: Vec<u16>,
    labels: Vec<String>,
    generators: Vec<usize>,
}

fn is_permutation(xs: &[usize], n: usize, seen: &mut [bool]) -> bool {
    seen.iter_mut().for_each(|s| *s = false);
    for &x in xs {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

impl FiniteGroup {
    /// Validate a full n-by-n table and wrap it. Labels default to the
    /// decimal element indices when not supplied.
    pub fn from_cayley(
        name: &str,
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || n > u16::MAX as usize {
            return Err(GroupError::MalformedTable);
        }
        if table.iter().any(|row| row.len() != n) {
            return Err(GroupError::MalformedTable);
        }

        let mut seen = vec![false; n];
        for (i, row) in table.iter().enumerate() {
            if !is_permutation(row, n, &mut seen) {
                return Err(GroupError::NotLatinSquare {
                    axis: "row",
                    index: i,
                });
            }
        }
        let mut col = vec![0usize; n];
        for j in 0..n {
            for (i, c) in col.iter_mut().enumerate() {
                *c = table[i][j];
            }
            if !is_permutation(&col, n, &mut seen) {
                return Err(GroupError::NotLatinSquare {
                    axis: "column",
                    index: j,
                });
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverse = vec![0u16; n];
        for a in 0..n {
            // The row is a permutation, so a right inverse always exists.
            let b = (0..n).find(|&b| table[a][b] == identity).unwrap();
            if table[b][a] != identity {
                return Err(GroupError::MissingInverse(a));
            }
            inverse[a] = b as u16;
        }

        let flat: Vec<u16> = table
            .iter()
            .flat_map(|row| row.iter().map(|&x| x as u16))
            .collect();
        let mul = |a: usize, b: usize| flat[a * n + b] as usize;
        if n <= EXHAUSTIVE_ASSOC_BOUND {
            for a in 0..n {
                for b in 0..n {
                    let ab = mul(a, b);
                    for c in 0..n {
                        if mul(ab, c) != mul(a, mul(b, c)) {
                            return Err(GroupError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SPOT_CHECK_SEED);
            for _ in 0..SPOT_CHECK_TRIPLES {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(GroupError::NotAssociative(a, b, c));
                }
            }
        }

        let labels = match labels {
            Some(ls) => {
                let mut sorted: Vec<&String> = ls.iter().collect();
                sorted.sort();
                sorted.dedup();
                if ls.len() != n || sorted.len() != n {
                    return Err(GroupError::BadLabels);
                }
                ls
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };

        let mut group = FiniteGroup {
            name: name.to_string(),
            order: n,
            table: flat,
            identity,
            inverse,
            labels,
            generators: Vec::new(),
        };
        group.generators = group.derive_generators();
        Ok(group)
    }

    /// Replace the derived generating set with a known one (catalog
    /// constructors use this so `r`, `s` and friends stay recognizable).
    /// The closure requirement is re-checked.
    pub fn with_generators(mut self, generators: Vec<usize>) -> Result<Self, GroupError> {
        if generators.is_empty()
            || generators.iter().any(|&g| g >= self.order)
            || self.closure(&generators).len() != self.order
        {
            return Err(GroupError::MalformedTable);
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// `g^k` for any integer exponent, negative meaning inverse powers.
    pub fn pow(&self, g: usize, k: i64) -> usize {
        let (mut base, mut k) = if k < 0 { (self.inv(g), -k) } else { (g, k) };
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// `k g k^{-1}`.
    #[inline]
    pub fn conj(&self, k: usize, g: usize) -> usize {
        self.mul(self.mul(k, g), self.inv(k))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.commutes(z, g)))
            .collect()
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member;
    /// the identity's singleton class always comes first.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order).map(|k| self.conj(k, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Subgroup generated by `seed`, as a sorted index list. Powers of each
    /// element eventually hit its inverse, so closing under products alone
    /// is enough.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[self.identity] = true;
        let mut queue = vec![self.identity];
        for &s in seed {
            if !in_set[s] {
                in_set[s] = true;
                queue.push(s);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in seed {
                let y = self.mul(x, s);
                if !in_set[y] {
                    in_set[y] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.order).filter(|&g| in_set[g]).collect()
    }

    /// Greedy generating set: walk the elements in ascending index order and
    /// keep each one not already generated by the picks so far.
    fn derive_generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut generated = self.closure(&gens);
        for g in 0..self.order {
            if generated.len() == self.order {
                break;
            }
            if generated.binary_search(&g).is_err() {
                gens.push(g);
                generated = self.closure(&gens);
            }
        }
        if gens.is_empty() {
            gens.push(self.identity);
        }
        gens
    }
}
