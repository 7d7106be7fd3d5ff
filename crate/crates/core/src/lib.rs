//! Symplectic codes over the non-unital rings `H23` and `H32` of order six.
//!
//! * [`ring`]: element arithmetic and the split into binary and ternary parts
//! * [`gf`]: linear codes over `F_2` and `F_3` in canonical form
//! * [`symplectic`]: symplectic duals, predicates and isotropic subspaces
//! * [`code`]: `H_z`-codes, their duals and predicates, with word-level oracles
//! * [`perm`]: permutations, automorphism groups and double cosets
//! * [`classify`]: classification up to permutation equivalence
//! * [`format`], [`catalog`]: text and JSON formats used by the CLI

pub mod catalog;
pub mod classify;
pub mod code;
pub mod error;
pub mod format;
pub mod gf;
pub mod perm;
pub mod ring;
pub mod symplectic;

pub use classify::{classify, verify_classification, ClassificationRecord, Target};
pub use code::{Flags, HzCode, HzWord};
pub use error::{Error, Result};
pub use gf::{GfVector, LinearCode, Prime};
pub use perm::{PermGroup, Permutation};
pub use ring::{RingElement, RingId};
pub use symplectic::SymplecticSpace;
