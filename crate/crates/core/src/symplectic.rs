//! The standard symplectic forms on `F_2^{2m}` and `F_3^{2m}`.
//!
//! Vectors are split into contiguous halves `v = (v1 | v2)`, each of length
//! `m`, and
//!
//! ```text
//! <x, y> = x1 . y2 + x2 . y1      over F_2
//! <x, y> = x1 . y2 - x2 . y1      over F_3
//! ```
//!
//! Both are `x G y^T` with `G = [[0, I], [s I, 0]]` and `s = -1 mod p`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gf::{bilinear, enumerate_subspaces, Gram, LinearCode, Prime};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticSpace {
    p: Prime,
    m: usize,
}

impl SymplecticSpace {
    pub fn new(p: Prime, m: usize) -> Self {
        SymplecticSpace { p, m }
    }

    /// Space of length `n`; fails on odd `n`.
    pub fn for_length(p: Prime, n: usize) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return Err(Error::OddLength(n));
        }
        Ok(SymplecticSpace { p, m: n / 2 })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        2 * self.m
    }

    pub fn gram(&self) -> Gram {
        let n = self.n();
        let minus_one = self.p.neg(1);
        let mut g = vec![vec![0u8; n]; n];
        for i in 0..self.m {
            g[i][self.m + i] = 1;
            g[self.m + i][i] = minus_one;
        }
        g
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if !len.is_multiple_of(2) {
            return Err(Error::OddLength(len));
        }
        if len != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: len,
            });
        }
        Ok(())
    }

    fn check_code(&self, code: &LinearCode) -> Result<()> {
        if code.p() != self.p {
            return Err(Error::FieldMismatch {
                expected: self.p.value(),
                found: code.p().value(),
            });
        }
        self.check_len(code.len())
    }

    pub fn inner(&self, x: &[u8], y: &[u8]) -> Result<u8> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self.inner_unchecked(x, y))
    }

    #[inline]
    pub(crate) fn inner_unchecked(&self, x: &[u8], y: &[u8]) -> u8 {
        let p = self.p;
        let m = self.m;
        let mut plus = 0u32;
        let mut minus = 0u32;
        for i in 0..m {
            plus += (x[i] * y[m + i]) as u32;
            minus += (x[m + i] * y[i]) as u32;
        }
        let q = p.value() as u32;
        let (plus, minus) = ((plus % q) as u8, (minus % q) as u8);
        match p {
            Prime::Two => p.add(plus, minus),
            Prime::Three => p.sub(plus, minus),
        }
    }

    /// Symplectic dual `{ y : <x, y> = 0 for all x in code }`.
    pub fn dual(&self, code: &LinearCode) -> Result<LinearCode> {
        self.check_code(code)?;
        code.nullspace_wrt(&self.gram())
    }

    pub fn is_self_orthogonal(&self, code: &LinearCode) -> Result<bool> {
        self.check_code(code)?;
        Ok(code.rows().iter().enumerate().all(|(i, r)| {
            code.rows()[i..]
                .iter()
                .all(|s| self.inner_unchecked(r, s) == 0)
        }))
    }

    pub fn is_self_dual(&self, code: &LinearCode) -> Result<bool> {
        Ok(code.dim() == self.m && self.is_self_orthogonal(code)?)
    }

    /// `code ∩ dual = {0}`, with the intersection solved as a linear system.
    pub fn is_lcd(&self, code: &LinearCode) -> Result<bool> {
        let dual = self.dual(code)?;
        Ok(code.intersect(&dual)?.is_zero())
    }

    /// All totally isotropic `k`-subspaces, canonical and in deterministic order.
    pub fn enumerate_isotropic(&self, k: usize) -> Result<Vec<LinearCode>> {
        if k > self.m {
            return Err(Error::KOutOfRange { k, m: self.m });
        }
        let max_n = match self.p {
            Prime::Two => 8,
            Prime::Three => 6,
        };
        if self.n() > max_n {
            return Err(Error::budget(
                "isotropic enumeration length",
                self.n() as u128,
                max_n as u128,
            ));
        }
        Ok(enumerate_subspaces(self.p, self.n(), k, |x, y| {
            self.inner_unchecked(x, y) == 0
        }))
    }

    /// Totally isotropic subspaces of every dimension `0..=m`.
    pub fn enumerate_all_isotropic(&self) -> Result<Vec<LinearCode>> {
        let mut out = Vec::new();
        for k in 0..=self.m {
            out.extend(self.enumerate_isotropic(k)?);
        }
        Ok(out)
    }

    /// Plain bilinear evaluation through the Gram matrix.
    pub fn inner_via_gram(&self, x: &[u8], y: &[u8]) -> u8 {
        bilinear(self.p, &self.gram(), x, y)
    }
}

/// Number of totally isotropic `k`-subspaces of `F_p^{2m}`:
/// `prod_{i<k} (p^{2m-2i} - 1) / prod_{j=1..k} (p^j - 1)`.
pub fn count_isotropic(p: Prime, m: usize, k: usize) -> Result<BigUint> {
    if k > m {
        return Err(Error::KOutOfRange { k, m });
    }
    let base = BigUint::from(p.value());
    let one = BigUint::from(1u8);
    let mut num = BigUint::from(1u8);
    let mut den = BigUint::from(1u8);
    for i in 0..k {
        num *= base.pow((2 * m - 2 * i) as u32) - &one;
    }
    for j in 1..=k {
        den *= base.pow(j as u32) - &one;
    }
    let (q, r) = (&num / &den, &num % &den);
    assert!(r == BigUint::from(0u8), "isotropic count is not integral");
    Ok(q)
}
