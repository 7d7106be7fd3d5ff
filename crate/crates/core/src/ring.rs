//! Arithmetic in the two non-unital rings of order six.
//!
//! Both rings share the additive group `Z/2 x Z/3` generated by `a` (order 2)
//! and `b` (order 3), with `c = a + b`, `d = 2b` and `e = a + 2b`. They differ
//! only in multiplication:
//!
//! * `H23`: `a^2 = a`, `b^2 = 0`, `ab = ba = 0`
//! * `H32`: `a^2 = 0`, `b^2 = b`, `ab = ba = 0`
//!
//! Every element is stored as its pair `(x, y)` in `F_2 x F_3`, i.e. as
//! `x*a + y*b`. Addition is componentwise; multiplication keeps only the
//! binary part (`H23`) or only the ternary part (`H32`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::Prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingId {
    H23,
    H32,
}

impl RingId {
    pub const ALL: [RingId; 2] = [RingId::H23, RingId::H32];

    /// The field of the component that carries the symplectic form.
    pub fn governing_prime(self) -> Prime {
        match self {
            RingId::H23 => Prime::Two,
            RingId::H32 => Prime::Three,
        }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingId::H23 => "H23",
            RingId::H32 => "H32",
        })
    }
}

impl FromStr for RingId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "H23" | "23" => Ok(RingId::H23),
            "H32" | "32" => Ok(RingId::H32),
            other => Err(Error::parse(0, format!("unknown ring `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElement {
    #[default]
    Zero,
    A,
    B,
    C,
    D,
    E,
}

impl RingElement {
    pub const ALL: [RingElement; 6] = [
        RingElement::Zero,
        RingElement::A,
        RingElement::B,
        RingElement::C,
        RingElement::D,
        RingElement::E,
    ];

    /// Element `x*a + y*b`. Arguments are reduced mod 2 and mod 3.
    pub fn compose(x: u8, y: u8) -> Self {
        match (x % 2, y % 3) {
            (0, 0) => RingElement::Zero,
            (1, 0) => RingElement::A,
            (0, 1) => RingElement::B,
            (1, 1) => RingElement::C,
            (0, 2) => RingElement::D,
            _ => RingElement::E,
        }
    }

    /// The unique `(x, y)` with `self = x*a + y*b`.
    pub fn decompose(self) -> (u8, u8) {
        match self {
            RingElement::Zero => (0, 0),
            RingElement::A => (1, 0),
            RingElement::B => (0, 1),
            RingElement::C => (1, 1),
            RingElement::D => (0, 2),
            RingElement::E => (1, 2),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            RingElement::Zero => '0',
            RingElement::A => 'a',
            RingElement::B => 'b',
            RingElement::C => 'c',
            RingElement::D => 'd',
            RingElement::E => 'e',
        }
    }

    pub fn from_symbol(ch: char) -> Option<Self> {
        Some(match ch {
            '0' => RingElement::Zero,
            'a' => RingElement::A,
            'b' => RingElement::B,
            'c' => RingElement::C,
            'd' => RingElement::D,
            'e' => RingElement::E,
            _ => return None,
        })
    }

    pub fn mul(ring: RingId, u: Self, v: Self) -> Self {
        let (x1, y1) = u.decompose();
        let (x2, y2) = v.decompose();
        match ring {
            RingId::H23 => Self::compose(x1 * x2, 0),
            RingId::H32 => Self::compose(0, y1 * y2),
        }
    }

    pub fn in_ideal_a(self) -> bool {
        matches!(self, RingElement::Zero | RingElement::A)
    }

    pub fn in_ideal_b(self) -> bool {
        matches!(self, RingElement::Zero | RingElement::B | RingElement::D)
    }

    /// Scalar action of `F_p` on the ideal `J_a` (p = 2) or `J_b` (p = 3).
    pub fn scalar_act(p: Prime, s: u8, u: Self) -> Result<Self> {
        let (x, y) = u.decompose();
        match p {
            Prime::Two if u.in_ideal_a() => Ok(Self::compose(x * (s % 2), 0)),
            Prime::Three if u.in_ideal_b() => Ok(Self::compose(0, y * (s % 3))),
            _ => Err(Error::IdealMismatch(u.symbol(), p.value())),
        }
    }
}

impl std::ops::Add for RingElement {
    type Output = RingElement;

    fn add(self, rhs: Self) -> Self {
        let (x1, y1) = self.decompose();
        let (x2, y2) = rhs.decompose();
        Self::compose(x1 + x2, y1 + y2)
    }
}

impl std::ops::Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> Self {
        let (x, y) = self.decompose();
        Self::compose(x, 3 - y)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}
