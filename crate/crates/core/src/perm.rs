//! Permutations of coordinate positions, permutation groups and double cosets.
//!
//! A permutation `pi` acts on a vector by moving coordinate `i` to position
//! `pi(i)`, so `(pi * sigma)(v) = pi(sigma(v))` with composition
//! `(pi * sigma)(i) = pi(sigma(i))`. Images are 0-based internally and
//! 1-based in every textual form.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::LinearCode;

/// Default cap on the degree `n` of exhaustive scans over `S_n`.
pub const DEFAULT_MAX_DEGREE: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Transposition of the 1-based positions `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::parse(0, format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let zero_based = images
            .iter()
            .map(|&x| {
                x.checked_sub(1)
                    .and_then(|x| u8::try_from(x).ok())
                    .ok_or_else(|| Error::parse(0, format!("bad image {x}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_images(zero_based)
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n != self.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.degree(),
                found: n,
            });
        }
        Ok(())
    }

    pub fn apply_vec<T: Copy + Default>(&self, v: &[T]) -> Result<Vec<T>> {
        self.check_degree(v.len())?;
        let mut out = vec![T::default(); v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.images[i] as usize] = x;
        }
        Ok(out)
    }

    /// Column action on a code, re-canonicalized.
    pub fn apply_code(&self, code: &LinearCode) -> Result<LinearCode> {
        self.check_degree(code.len())?;
        Ok(code.map_coordinates_unchecked(&self.images))
    }

    /// Position in the lexicographic order of `S_n` (Lehmer code).
    pub fn rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    pub fn unrank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (0..n as u8).collect();
        let images = digits.into_iter().map(|d| pool.remove(d)).collect();
        Permutation { images }
    }

    /// Disjoint cycles, 1-based, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn check_degree(n: usize, max_degree: usize) -> Result<()> {
    if n > max_degree {
        return Err(Error::budget(
            "permutation degree",
            n as u128,
            max_degree as u128,
        ));
    }
    Ok(())
}

/// Every permutation of `n` points, in lexicographic order.
pub fn symmetric_group_elements(n: usize) -> impl Iterator<Item = Permutation> {
    (0..factorial(n)).map(move |r| Permutation::unrank(n, r))
}

/// Subgroup of `S_n` with its full element list and a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PermGroup {
    pub fn trivial(n: usize) -> Self {
        PermGroup {
            n,
            elements: vec![Permutation::identity(n)],
            generators: Vec::new(),
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let generators = if n < 2 {
            Vec::new()
        } else {
            let cycle = Permutation {
                images: (1..n as u8).chain(std::iter::once(0)).collect(),
            };
            let mut g = vec![Permutation::transposition(n, 1, 2)];
            if n > 2 {
                g.push(cycle);
            }
            g
        };
        Self::from_generators(n, generators)
    }

    /// Closure of `generators` under composition.
    pub fn from_generators(n: usize, generators: Vec<Permutation>) -> Self {
        let elements = closure(n, &generators);
        PermGroup {
            n,
            elements,
            generators,
        }
    }

    /// Group from a complete element list, assumed closed; a generating set is
    /// picked greedily in lexicographic order.
    pub fn from_elements(n: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let mut generators = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(n)]);
        for e in &elements {
            if span.contains(e) {
                continue;
            }
            generators.push(e.clone());
            span = closure(n, &generators).into_iter().collect();
            if span.len() == elements.len() {
                break;
            }
        }
        PermGroup {
            n,
            elements,
            generators,
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Identity present, closed under products and inverses, and the
    /// generators regenerate the element list.
    pub fn satisfies_group_axioms(&self) -> bool {
        if !self.contains(&Permutation::identity(self.n)) {
            return false;
        }
        let closed = self.elements.iter().all(|x| {
            self.contains(&x.inverse())
                && self.elements.iter().all(|y| self.contains(&x.compose(y)))
        });
        closed && closure(self.n, &self.generators) == self.elements
    }
}

/// Sorted element list of the group generated by `generators`.
fn closure(n: usize, generators: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// `{ pi in S_n : pi(code) = code }` by exhaustive scan.
pub fn automorphism_group(code: &LinearCode) -> Result<PermGroup> {
    automorphism_group_within(code, DEFAULT_MAX_DEGREE)
}

pub fn automorphism_group_within(code: &LinearCode, max_degree: usize) -> Result<PermGroup> {
    let n = code.len();
    check_degree(n, max_degree)?;
    if code.is_zero() || code.is_full() {
        return Ok(PermGroup::symmetric(n));
    }
    let elements = symmetric_group_elements(n)
        .filter(|pi| code.maps_onto(pi.images(), code))
        .collect();
    Ok(PermGroup::from_elements(n, elements))
}

/// Some `pi` with `pi(from) = to`, if one exists.
pub fn find_equivalence(
    from: &LinearCode,
    to: &LinearCode,
    max_degree: usize,
) -> Result<Option<Permutation>> {
    let n = from.len();
    check_degree(n, max_degree)?;
    if from.p() != to.p() || n != to.len() || from.dim() != to.dim() {
        return Ok(None);
    }
    Ok(symmetric_group_elements(n).find(|pi| from.maps_onto(pi.images(), to)))
}

/// One orbit of `G x H` on `S_n`, `sigma -> g sigma h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    /// Lexicographically smallest element of the orbit.
    pub representative: Permutation,
    pub size: usize,
}

/// Double cosets `G \ S_n / H` by breadth-first closure over the generators,
/// scanning `S_n` in rank order so the first element met is the orbit minimum.
pub fn double_cosets(g: &PermGroup, h: &PermGroup) -> Result<Vec<DoubleCoset>> {
    double_cosets_within(g, h, DEFAULT_MAX_DEGREE)
}

pub fn double_cosets_within(
    g: &PermGroup,
    h: &PermGroup,
    max_degree: usize,
) -> Result<Vec<DoubleCoset>> {
    if g.degree() != h.degree() {
        return Err(Error::DimensionMismatch {
            expected: g.degree(),
            found: h.degree(),
        });
    }
    let n = g.degree();
    check_degree(n, max_degree)?;
    let total = factorial(n);
    let mut visited = vec![false; total];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..total {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        queue.push_back(Permutation::unrank(n, start));
        let mut size = 0;
        while let Some(sigma) = queue.pop_front() {
            size += 1;
            let left = g.generators().iter().map(|x| x.compose(&sigma));
            let right = h.generators().iter().map(|y| sigma.compose(y));
            for next in left.chain(right) {
                let r = next.rank();
                if !visited[r] {
                    visited[r] = true;
                    queue.push_back(next);
                }
            }
        }
        out.push(DoubleCoset {
            representative: Permutation::unrank(n, start),
            size,
        });
    }
    Ok(out)
}

pub fn double_coset_reps(g: &PermGroup, h: &PermGroup) -> Result<Vec<Permutation>> {
    Ok(double_cosets(g, h)?
        .into_iter()
        .map(|c| c.representative)
        .collect())
}

/// Smallest image of `(first, second)` under simultaneous permutation.
/// Two pairs are equivalent exactly when their canonical forms coincide.
pub fn canonical_pair(first: &LinearCode, second: &LinearCode) -> (LinearCode, LinearCode) {
    debug_assert_eq!(first.len(), second.len());
    let n = first.len();
    symmetric_group_elements(n)
        .map(|pi| {
            (
                first.map_coordinates_unchecked(pi.images()),
                second.map_coordinates_unchecked(pi.images()),
            )
        })
        .min()
        .expect("S_n is nonempty")
}
