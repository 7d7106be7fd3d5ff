//! Vectors and linear codes over `F_2` and `F_3`.
//!
//! A [`LinearCode`] always holds the reduced row-echelon generator matrix of
//! its row space, so two codes compare equal exactly when they span the same
//! subspace.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest code size `p^k` that [`LinearCode::codewords`] will enumerate.
pub const DEFAULT_CODEWORD_BUDGET: u128 = 531_441; // 3^12

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Prime {
    Two,
    Three,
}

impl Prime {
    pub const ALL: [Prime; 2] = [Prime::Two, Prime::Three];

    pub fn value(self) -> u8 {
        match self {
            Prime::Two => 2,
            Prime::Three => 3,
        }
    }

    pub fn from_value(p: u8) -> Option<Self> {
        match p {
            2 => Some(Prime::Two),
            3 => Some(Prime::Three),
            _ => None,
        }
    }

    #[inline]
    pub fn add(self, x: u8, y: u8) -> u8 {
        (x + y) % self.value()
    }

    #[inline]
    pub fn sub(self, x: u8, y: u8) -> u8 {
        (x + self.value() - y) % self.value()
    }

    #[inline]
    pub fn mul(self, x: u8, y: u8) -> u8 {
        (x * y) % self.value()
    }

    #[inline]
    pub fn neg(self, x: u8) -> u8 {
        (self.value() - x) % self.value()
    }

    /// Multiplicative inverse; every nonzero element of `F_2`, `F_3` is its own inverse.
    #[inline]
    pub fn inv(self, x: u8) -> u8 {
        debug_assert!(!x.is_multiple_of(self.value()));
        x
    }

    /// `p^e` as a `u128`, saturating.
    pub fn pow(self, e: usize) -> u128 {
        (self.value() as u128).saturating_pow(e as u32)
    }
}

impl From<Prime> for u8 {
    fn from(p: Prime) -> u8 {
        p.value()
    }
}

impl TryFrom<u8> for Prime {
    type Error = String;

    fn try_from(p: u8) -> std::result::Result<Self, String> {
        Prime::from_value(p).ok_or_else(|| format!("unsupported prime {p}"))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// A vector in `F_p^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfVector {
    p: Prime,
    coords: Vec<u8>,
}

impl GfVector {
    pub fn new(p: Prime, coords: impl IntoIterator<Item = u8>) -> Self {
        let coords = coords.into_iter().map(|x| x % p.value()).collect();
        GfVector { p, coords }
    }

    pub fn zero(p: Prime, n: usize) -> Self {
        GfVector {
            p,
            coords: vec![0; n],
        }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u8> {
        self.coords
    }
}

impl fmt::Display for GfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.coords {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Square matrix over `F_p`, used as the Gram matrix of a bilinear form.
pub type Gram = Vec<Vec<u8>>;

pub fn identity_gram(n: usize) -> Gram {
    (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect()
}

/// `x * gram * y^T`.
pub fn bilinear(p: Prime, gram: &Gram, x: &[u8], y: &[u8]) -> u8 {
    let mut acc = 0u32;
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            acc += (xi * gram[i][j] * yj) as u32;
        }
    }
    (acc % p.value() as u32) as u8
}

/// Linear code over `F_p` held in canonical RREF.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearCode {
    p: Prime,
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl LinearCode {
    /// Row space of `rows`, canonicalized. Entries are reduced mod `p`.
    pub fn from_rows(p: Prime, n: usize, rows: impl IntoIterator<Item = Vec<u8>>) -> Result<Self> {
        let mut m = Vec::new();
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            m.push(row.into_iter().map(|x| x % p.value()).collect());
        }
        Ok(Self::rref(p, n, m))
    }

    fn rref(p: Prime, n: usize, mut m: Vec<Vec<u8>>) -> Self {
        let rank = reduce_in_place(p, &mut m);
        m.truncate(rank);
        LinearCode { p, n, rows: m }
    }

    pub fn zero(p: Prime, n: usize) -> Self {
        LinearCode {
            p,
            n,
            rows: Vec::new(),
        }
    }

    pub fn full(p: Prime, n: usize) -> Self {
        LinearCode {
            p,
            n,
            rows: identity_gram(n),
        }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    /// Number of codewords, `p^k`.
    pub fn size(&self) -> u128 {
        self.p.pow(self.dim())
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero RREF row"))
            .collect()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: len,
            });
        }
        Ok(())
    }

    fn check_same_space(&self, other: &LinearCode) -> Result<()> {
        if self.p != other.p {
            return Err(Error::FieldMismatch {
                expected: self.p.value(),
                found: other.p.value(),
            });
        }
        self.check_len(other.n)
    }

    /// Membership by elimination against the RREF rows.
    pub fn contains(&self, v: &[u8]) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(self.contains_unchecked(v))
    }

    pub fn contains_vector(&self, v: &GfVector) -> Result<bool> {
        if v.p() != self.p {
            return Err(Error::FieldMismatch {
                expected: self.p.value(),
                found: v.p().value(),
            });
        }
        self.contains(v.coords())
    }

    pub(crate) fn contains_unchecked(&self, v: &[u8]) -> bool {
        let p = self.p;
        let mut w: Vec<u8> = v.iter().map(|x| x % p.value()).collect();
        for row in &self.rows {
            let pivot = row.iter().position(|&x| x != 0).unwrap();
            let f = w[pivot];
            if f != 0 {
                for (wi, &ri) in w.iter_mut().zip(row) {
                    *wi = p.sub(*wi, p.mul(f, ri));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        self.check_same_space(other)?;
        Ok(self.rows.iter().all(|r| other.contains_unchecked(r)))
    }

    /// Codeword for message `msg` (length `k`).
    pub fn encode(&self, msg: &[u8]) -> Vec<u8> {
        let p = self.p;
        let mut out = vec![0u8; self.n];
        for (&c, row) in msg.iter().zip(&self.rows) {
            if c == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o = p.add(*o, p.mul(c, r));
            }
        }
        out
    }

    /// All `p^k` codewords, ordered lexicographically by message.
    pub fn codewords(&self) -> Result<Vec<GfVector>> {
        self.codewords_within(DEFAULT_CODEWORD_BUDGET)
    }

    pub fn codewords_within(&self, budget: u128) -> Result<Vec<GfVector>> {
        let size = self.size();
        if size > budget {
            return Err(Error::budget("codeword enumeration", size, budget));
        }
        Ok(self
            .raw_codewords()
            .map(|c| GfVector {
                p: self.p,
                coords: c,
            })
            .collect())
    }

    /// Lazy codeword iterator with no budget check.
    pub(crate) fn raw_codewords(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        let k = self.dim();
        let q = self.p.value();
        let mut msg = vec![0u8; k];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let word = self.encode(&msg);
            // odometer, last coordinate fastest
            done = true;
            for i in (0..k).rev() {
                msg[i] += 1;
                if msg[i] < q {
                    done = false;
                    break;
                }
                msg[i] = 0;
            }
            Some(word)
        })
    }

    /// `{ y : x * gram * y^T = 0 for every x in self }`.
    pub fn nullspace_wrt(&self, gram: &Gram) -> Result<LinearCode> {
        self.check_len(gram.len())?;
        for row in gram {
            self.check_len(row.len())?;
        }
        let p = self.p;
        let n = self.n;
        let constraints: Vec<Vec<u8>> = self
            .rows
            .iter()
            .map(|r| {
                (0..n)
                    .map(|j| {
                        let s: u32 = (0..n).map(|i| (r[i] * gram[i][j]) as u32).sum();
                        (s % p.value() as u32) as u8
                    })
                    .collect()
            })
            .collect();
        Ok(nullspace(p, n, constraints))
    }

    /// Euclidean dual.
    pub fn euclidean_dual(&self) -> LinearCode {
        nullspace(self.p, self.n, self.rows.clone())
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_same_space(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(Self::rref(self.p, self.n, rows))
    }

    /// Intersection, solved as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        let annihilators = self.euclidean_dual().sum(&other.euclidean_dual())?;
        Ok(annihilators.euclidean_dual())
    }

    /// Moves coordinate `i` to position `target[i]` and re-canonicalizes.
    pub fn map_coordinates(&self, target: &[u8]) -> Result<LinearCode> {
        self.check_len(target.len())?;
        Ok(self.map_coordinates_unchecked(target))
    }

    pub(crate) fn map_coordinates_unchecked(&self, target: &[u8]) -> LinearCode {
        let rows = self.rows.iter().map(|r| permute_vec(r, target)).collect();
        Self::rref(self.p, self.n, rows)
    }

    /// Whether the coordinate map `target` sends `self` onto `other`.
    pub(crate) fn maps_onto(&self, target: &[u8], other: &LinearCode) -> bool {
        self.dim() == other.dim()
            && self
                .rows
                .iter()
                .all(|r| other.contains_unchecked(&permute_vec(r, target)))
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            for &x in r {
                write!(f, "{x}")?;
            }
        }
        write!(f, "> over F_{} (n={})", self.p, self.n)
    }
}

pub(crate) fn permute_vec(v: &[u8], target: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; v.len()];
    for (i, &x) in v.iter().enumerate() {
        out[target[i] as usize] = x;
    }
    out
}

/// Gauss-Jordan elimination in place; returns the rank. Rows past the rank are zero.
fn reduce_in_place(p: Prime, m: &mut [Vec<u8>]) -> usize {
    let n = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n {
        let Some(found) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, found);
        let inv = p.inv(m[rank][col]);
        if inv != 1 {
            for x in m[rank].iter_mut() {
                *x = p.mul(*x, inv);
            }
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = p.sub(*x, p.mul(f, y));
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Right nullspace `{ y : M y^T = 0 }` of an `r x n` matrix.
pub fn nullspace(p: Prime, n: usize, mut m: Vec<Vec<u8>>) -> LinearCode {
    let rank = reduce_in_place(p, &mut m);
    m.truncate(rank);
    let pivots: Vec<usize> = m
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).unwrap())
        .collect();
    let mut basis = Vec::with_capacity(n - rank);
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u8; n];
        v[free] = 1;
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = p.neg(row[free]);
        }
        basis.push(v);
    }
    LinearCode::rref(p, n, basis)
}

/// All `k`-dimensional subspaces of `F_p^n` whose RREF rows are pairwise
/// `compatible` (each row is also tested against itself), built one RREF row
/// at a time with pruning. Output order: pivot sets lexicographically, then
/// row entries lexicographically.
pub fn enumerate_subspaces<F>(p: Prime, n: usize, k: usize, compatible: F) -> Vec<LinearCode>
where
    F: Fn(&[u8], &[u8]) -> bool,
{
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(k);
    extend_rows(p, n, k, 0, &mut rows, &compatible, &mut out);
    out
}

fn extend_rows<F>(
    p: Prime,
    n: usize,
    k: usize,
    first_col: usize,
    rows: &mut Vec<Vec<u8>>,
    compatible: &F,
    out: &mut Vec<LinearCode>,
) where
    F: Fn(&[u8], &[u8]) -> bool,
{
    if rows.len() == k {
        out.push(LinearCode {
            p,
            n,
            rows: rows.clone(),
        });
        return;
    }
    let remaining = k - rows.len();
    for pivot in first_col..=(n - remaining) {
        // earlier rows must vanish on a new pivot column
        if rows.iter().any(|r| r[pivot] != 0) {
            continue;
        }
        let free = n - pivot - 1;
        let total = (p.value() as usize).pow(free as u32);
        for idx in 0..total {
            let mut row = vec![0u8; n];
            row[pivot] = 1;
            let mut t = idx;
            for c in (pivot + 1..n).rev() {
                row[c] = (t % p.value() as usize) as u8;
                t /= p.value() as usize;
            }
            if !compatible(&row, &row) || !rows.iter().all(|r| compatible(r, &row)) {
                continue;
            }
            rows.push(row);
            extend_rows(p, n, k, pivot + 1, rows, compatible, out);
            rows.pop();
        }
    }
}

/// Every subspace of `F_p^n` of dimension `k`.
pub fn all_subspaces(p: Prime, n: usize, k: usize) -> Vec<LinearCode> {
    enumerate_subspaces(p, n, k, |_, _| true)
}
