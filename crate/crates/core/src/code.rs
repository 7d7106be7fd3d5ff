//! Linear codes over `H23` and `H32`.
//!
//! Every `H_z`-submodule of `H_z^n` splits uniquely as `a*C_a + b*C_b` with a
//! binary code `C_a` and a ternary code `C_b`, so an [`HzCode`] stores just
//! the two components. The inner product of `a*x1 + b*y1` and `a*x2 + b*y2`
//! is `a*<x1, x2>` over `H23` and `b*<y1, y2>` over `H32`; only one component
//! ever meets the form. Which one is called the *governing* component below,
//! the other the *free* component.
//!
//! Duals and predicates are computed from the components. The [`oracle`]
//! module evaluates the same notions word by word.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{LinearCode, Prime};
use crate::perm::{self, Permutation, DEFAULT_MAX_DEGREE};
use crate::ring::{RingElement, RingId};
use crate::symplectic::SymplecticSpace;

/// Default cap on the number of ring words materialized at once (`6^8`).
pub const DEFAULT_WORD_BUDGET: u128 = 1_679_616;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HzCode {
    ring: RingId,
    ca: LinearCode,
    cb: LinearCode,
}

/// A word of `H_z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HzWord {
    ring: RingId,
    coords: Vec<RingElement>,
}

/// Predicate flags of an `H_z`-code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    #[serde(rename = "SO")]
    pub so: bool,
    #[serde(rename = "SD")]
    pub sd: bool,
    #[serde(rename = "QSD")]
    pub qsd: bool,
    pub nice: bool,
    #[serde(rename = "LCD")]
    pub lcd: bool,
}

impl fmt::Display for Flags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "SO={} QSD={} SD={} nice={} LCD={}",
            yn(self.so),
            yn(self.qsd),
            yn(self.sd),
            yn(self.nice),
            yn(self.lcd)
        )
    }
}

impl HzWord {
    pub fn new(ring: RingId, coords: Vec<RingElement>) -> Self {
        HzWord { ring, coords }
    }

    /// `a*u + b*v`.
    pub fn compose(ring: RingId, u: &[u8], v: &[u8]) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::LengthMismatch(u.len(), v.len()));
        }
        Ok(Self::compose_unchecked(ring, u, v))
    }

    fn compose_unchecked(ring: RingId, u: &[u8], v: &[u8]) -> Self {
        HzWord {
            ring,
            coords: u
                .iter()
                .zip(v)
                .map(|(&x, &y)| RingElement::compose(x, y))
                .collect(),
        }
    }

    pub fn parse(ring: RingId, s: &str) -> Result<Self> {
        let coords = s
            .chars()
            .filter(|c| !matches!(c, ' ' | ',' | '(' | ')'))
            .map(|c| {
                RingElement::from_symbol(c)
                    .ok_or_else(|| Error::parse(0, format!("`{c}` is not a ring symbol")))
            })
            .collect::<Result<_>>()?;
        Ok(HzWord { ring, coords })
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[RingElement] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == RingElement::Zero)
    }

    /// Binary and ternary parts `(u, v)` with `self = a*u + b*v`.
    pub fn decompose(&self) -> (Vec<u8>, Vec<u8>) {
        self.coords.iter().map(|c| c.decompose()).unzip()
    }

    fn check_pair(&self, other: &HzWord) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// Symplectic inner product; lands in `J_a` over `H23` and `J_b` over `H32`.
    pub fn symplectic_inner(&self, other: &HzWord) -> Result<RingElement> {
        self.check_pair(other)?;
        let space = SymplecticSpace::for_length(self.ring.governing_prime(), self.len())?;
        let (x1, y1) = self.decompose();
        let (x2, y2) = other.decompose();
        Ok(match self.ring {
            RingId::H23 => RingElement::compose(space.inner_unchecked(&x1, &x2), 0),
            RingId::H32 => RingElement::compose(0, space.inner_unchecked(&y1, &y2)),
        })
    }

    /// `sum_i c1_i * c2_i` in the ring.
    pub fn euclidean_inner(&self, other: &HzWord) -> Result<RingElement> {
        self.check_pair(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(RingElement::Zero, |acc, (&u, &v)| {
                acc + RingElement::mul(self.ring, u, v)
            }))
    }

    pub fn permuted(&self, pi: &Permutation) -> Result<HzWord> {
        Ok(HzWord {
            ring: self.ring,
            coords: pi.apply_vec(&self.coords)?,
        })
    }
}

impl fmt::Display for HzWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.coords {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl HzCode {
    /// The code `a*c1 + b*c2`; any pair of equal, even, positive length is valid.
    pub fn build(ring: RingId, c1: LinearCode, c2: LinearCode) -> Result<Self> {
        if c1.p() != Prime::Two {
            return Err(Error::FieldMismatch {
                expected: 2,
                found: c1.p().value(),
            });
        }
        if c2.p() != Prime::Three {
            return Err(Error::FieldMismatch {
                expected: 3,
                found: c2.p().value(),
            });
        }
        if c1.len() != c2.len() {
            return Err(Error::LengthMismatch(c1.len(), c2.len()));
        }
        if c1.is_empty() {
            return Err(Error::ZeroLength);
        }
        if !c1.len().is_multiple_of(2) {
            return Err(Error::OddLength(c1.len()));
        }
        Ok(HzCode {
            ring,
            ca: c1,
            cb: c2,
        })
    }

    /// Smallest code containing the given words.
    pub fn from_words(ring: RingId, n: usize, words: &[HzWord]) -> Result<Self> {
        let mut us = Vec::new();
        let mut vs = Vec::new();
        for w in words {
            if w.ring != ring {
                return Err(Error::RingMismatch(ring.to_string(), w.ring.to_string()));
            }
            if w.len() != n {
                return Err(Error::LengthMismatch(n, w.len()));
            }
            let (u, v) = w.decompose();
            us.push(u);
            vs.push(v);
        }
        // the submodule generated by a*u + b*v contains a*u and b*v separately
        Self::build(
            ring,
            LinearCode::from_rows(Prime::Two, n, us)?,
            LinearCode::from_rows(Prime::Three, n, vs)?,
        )
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.ca.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ca.len() == 0
    }

    pub fn m(&self) -> usize {
        self.len() / 2
    }

    pub fn ca(&self) -> &LinearCode {
        &self.ca
    }

    pub fn cb(&self) -> &LinearCode {
        &self.cb
    }

    /// `2^dim(C_a) * 3^dim(C_b)`.
    pub fn cardinality(&self) -> u128 {
        self.ca.size() * self.cb.size()
    }

    fn space(&self) -> SymplecticSpace {
        SymplecticSpace::new(self.ring.governing_prime(), self.m())
    }

    pub fn governing(&self) -> &LinearCode {
        match self.ring {
            RingId::H23 => &self.ca,
            RingId::H32 => &self.cb,
        }
    }

    pub fn free(&self) -> &LinearCode {
        match self.ring {
            RingId::H23 => &self.cb,
            RingId::H32 => &self.ca,
        }
    }

    pub fn contains(&self, w: &HzWord) -> bool {
        if w.ring != self.ring || w.len() != self.len() {
            return false;
        }
        let (u, v) = w.decompose();
        self.ca.contains_unchecked(&u) && self.cb.contains_unchecked(&v)
    }

    pub fn words(&self) -> Result<Vec<HzWord>> {
        self.words_within(DEFAULT_WORD_BUDGET)
    }

    /// All codewords `a*u + b*v`, `u` outer and `v` inner, each in message order.
    pub fn words_within(&self, budget: u128) -> Result<Vec<HzWord>> {
        let size = self.cardinality();
        if size > budget {
            return Err(Error::budget("word enumeration", size, budget));
        }
        let vs: Vec<Vec<u8>> = self.cb.raw_codewords().collect();
        let mut out = Vec::with_capacity(size as usize);
        for u in self.ca.raw_codewords() {
            for v in &vs {
                out.push(HzWord::compose_unchecked(self.ring, &u, v));
            }
        }
        Ok(out)
    }

    /// Symplectic dual from the components:
    /// `a*C_a^perp + b*F_3^n` over `H23`, `a*F_2^n + b*C_b^perp` over `H32`.
    pub fn dual(&self) -> HzCode {
        let n = self.len();
        let gov_dual = self
            .space()
            .dual(self.governing())
            .expect("component lengths are even");
        match self.ring {
            RingId::H23 => HzCode {
                ring: self.ring,
                ca: gov_dual,
                cb: LinearCode::full(Prime::Three, n),
            },
            RingId::H32 => HzCode {
                ring: self.ring,
                ca: LinearCode::full(Prime::Two, n),
                cb: gov_dual,
            },
        }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.space().is_self_orthogonal(self.governing()).unwrap()
    }

    pub fn is_self_dual(&self) -> bool {
        self.space().is_self_dual(self.governing()).unwrap() && self.free().is_full()
    }

    /// Size `6^m` and self-orthogonal; equivalently the governing component is
    /// self-dual and the free one has dimension `m`.
    pub fn is_quasi_self_dual(&self) -> bool {
        self.space().is_self_dual(self.governing()).unwrap() && self.free().dim() == self.m()
    }

    /// `|C| * |C^perp| = 36^m`; equivalently the free component is zero.
    pub fn is_nice(&self) -> bool {
        self.free().is_zero()
    }

    pub fn is_lcd(&self) -> bool {
        self.free().is_zero() && self.space().is_lcd(self.governing()).unwrap()
    }

    pub fn flags(&self) -> Flags {
        Flags {
            so: self.is_self_orthogonal(),
            sd: self.is_self_dual(),
            qsd: self.is_quasi_self_dual(),
            nice: self.is_nice(),
            lcd: self.is_lcd(),
        }
    }

    /// `pi(C) = a*pi(C_a) + b*pi(C_b)`.
    pub fn permuted(&self, pi: &Permutation) -> Result<HzCode> {
        Ok(HzCode {
            ring: self.ring,
            ca: pi.apply_code(&self.ca)?,
            cb: pi.apply_code(&self.cb)?,
        })
    }

    /// A permutation sending `self` onto `other`, found by exhaustive search.
    pub fn equivalent(&self, other: &HzCode) -> Result<Option<Permutation>> {
        self.equivalent_within(other, DEFAULT_MAX_DEGREE)
    }

    pub fn equivalent_within(
        &self,
        other: &HzCode,
        max_degree: usize,
    ) -> Result<Option<Permutation>> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        let n = self.len();
        if n > max_degree {
            return Err(Error::budget(
                "permutation degree",
                n as u128,
                max_degree as u128,
            ));
        }
        if self.ca.dim() != other.ca.dim() || self.cb.dim() != other.cb.dim() {
            return Ok(None);
        }
        let auts = |c: &HzCode| -> Result<(usize, usize)> {
            Ok((
                perm::automorphism_group_within(&c.ca, max_degree)?.order(),
                perm::automorphism_group_within(&c.cb, max_degree)?.order(),
            ))
        };
        if auts(self)? != auts(other)? {
            return Ok(None);
        }
        Ok(perm::symmetric_group_elements(n).find(|pi| {
            self.ca.maps_onto(pi.images(), &other.ca) && self.cb.maps_onto(pi.images(), &other.cb)
        }))
    }

    /// Equivalence-class invariant: the minimum of `(pi(C_a), pi(C_b))` over `S_n`.
    pub fn canonical_form(&self) -> (LinearCode, LinearCode) {
        perm::canonical_pair(&self.ca, &self.cb)
    }
}

impl fmt::Display for HzCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={}: a{} + b{}",
            self.ring,
            self.len(),
            self.ca,
            self.cb
        )
    }
}

/// Word-level evaluation of duality and the predicates, straight from their
/// definitions. Exponential in `n`; used to cross-check the component route.
pub mod oracle {
    use std::collections::BTreeSet;

    use super::*;

    /// Every `y` in `H_z^n` orthogonal to every codeword.
    pub fn dual_bruteforce(code: &HzCode) -> Result<BTreeSet<HzWord>> {
        dual_bruteforce_within(code, DEFAULT_WORD_BUDGET)
    }

    pub fn dual_bruteforce_within(code: &HzCode, budget: u128) -> Result<BTreeSet<HzWord>> {
        let n = code.len();
        let space_size = 6u128.saturating_pow(n as u32);
        if space_size > budget {
            return Err(Error::budget(
                "ambient space enumeration",
                space_size,
                budget,
            ));
        }
        let words = code.words_within(budget)?;
        let mut out = BTreeSet::new();
        for y in ambient_words(code.ring(), n) {
            let orthogonal = words
                .iter()
                .all(|c| y.symplectic_inner(c).expect("same ring and length") == RingElement::Zero);
            if orthogonal {
                out.insert(y);
            }
        }
        Ok(out)
    }

    /// All `6^n` words, in lexicographic symbol order.
    pub fn ambient_words(ring: RingId, n: usize) -> impl Iterator<Item = HzWord> {
        let total = 6usize.pow(n as u32);
        (0..total).map(move |mut idx| {
            let mut coords = vec![RingElement::Zero; n];
            for c in coords.iter_mut().rev() {
                *c = RingElement::ALL[idx % 6];
                idx /= 6;
            }
            HzWord::new(ring, coords)
        })
    }

    /// Predicates evaluated on explicit word sets: SO as `C ⊆ C^perp`, SD as
    /// equality, QSD as SO with `6^m` words, nice as `|C| |C^perp| = 36^m`,
    /// LCD as a trivial intersection.
    pub fn flags_by_definition(code: &HzCode) -> Result<Flags> {
        let words: BTreeSet<HzWord> = code.words()?.into_iter().collect();
        let dual = dual_bruteforce(code)?;
        let m = code.m() as u32;
        let so = words.is_subset(&dual);
        Ok(Flags {
            so,
            sd: words == dual,
            qsd: so && words.len() as u128 == 6u128.pow(m),
            nice: (words.len() as u128) * (dual.len() as u128) == 36u128.pow(m),
            lcd: words.intersection(&dual).all(HzWord::is_zero),
        })
    }

    /// Whether every pair of codewords has Euclidean inner product zero.
    pub fn is_euclidean_self_orthogonal(code: &HzCode) -> Result<bool> {
        let words = code.words()?;
        Ok(words.iter().all(|x| {
            words
                .iter()
                .all(|y| x.euclidean_inner(y).expect("same ring and length") == RingElement::Zero)
        }))
    }

    /// Equivalence by trying every permutation on the word sets.
    pub fn equivalent_by_words(c1: &HzCode, c2: &HzCode) -> Result<bool> {
        let w1: BTreeSet<HzWord> = c1.words()?.into_iter().collect();
        let w2: BTreeSet<HzWord> = c2.words()?.into_iter().collect();
        if w1.len() != w2.len() {
            return Ok(false);
        }
        for pi in perm::symmetric_group_elements(c1.len()) {
            if w1.iter().all(|w| w2.contains(&w.permuted(&pi).unwrap())) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
