//! Classification of symplectic self-orthogonal `H_z`-codes up to permutation
//! equivalence.
//!
//! For a fixed component pair, the governing component `G` stays in place and
//! `sigma` moves the free component `F`. Over `H23` the codes are
//! `a*C_a + b*sigma(C_b)`, over `H32` they are `a*sigma(C_a) + b*C_b`. With
//! `sigma` running over representatives of `Aut(G) \ S_n / Aut(F)` they are
//! pairwise inequivalent and cover every code whose components are
//! equivalent to `C_a` and `C_b`. Moving `G` instead would not preserve
//! self-orthogonality, since the symplectic form is not invariant under `S_n`.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::{Flags, HzCode};
use crate::error::{Error, Result};
use crate::gf::{all_subspaces, LinearCode, Prime};
use crate::perm::{self, canonical_pair, DoubleCoset, Permutation, DEFAULT_MAX_DEGREE};
use crate::ring::RingId;
use crate::symplectic::SymplecticSpace;

/// Largest length for which [`verify_classification`] sweeps all of `S_n`.
pub const MAX_VERIFY_LENGTH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Target {
    #[serde(rename = "SO")]
    SelfOrthogonal,
    #[serde(rename = "QSD")]
    QuasiSelfDual,
    #[serde(rename = "SD")]
    SelfDual,
}

impl Target {
    pub const ALL: [Target; 3] = [
        Target::SelfOrthogonal,
        Target::QuasiSelfDual,
        Target::SelfDual,
    ];

    /// Component-level admission test for a pair `(C_a, C_b)`.
    pub fn admits(self, ring: RingId, ca: &LinearCode, cb: &LinearCode) -> bool {
        let (gov, free) = match ring {
            RingId::H23 => (ca, cb),
            RingId::H32 => (cb, ca),
        };
        if gov.len() % 2 != 0 {
            return false;
        }
        let space = SymplecticSpace::new(ring.governing_prime(), gov.len() / 2);
        match self {
            Target::SelfOrthogonal => space.is_self_orthogonal(gov).unwrap_or(false),
            Target::QuasiSelfDual => {
                space.is_self_dual(gov).unwrap_or(false) && free.dim() == space.m()
            }
            Target::SelfDual => space.is_self_dual(gov).unwrap_or(false) && free.is_full(),
        }
    }

    pub fn holds(self, code: &HzCode) -> bool {
        match self {
            Target::SelfOrthogonal => code.is_self_orthogonal(),
            Target::QuasiSelfDual => code.is_quasi_self_dual(),
            Target::SelfDual => code.is_self_dual(),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::SelfOrthogonal => "SO",
            Target::QuasiSelfDual => "QSD",
            Target::SelfDual => "SD",
        })
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "SO" => Ok(Target::SelfOrthogonal),
            "QSD" => Ok(Target::QuasiSelfDual),
            "SD" => Ok(Target::SelfDual),
            other => Err(Error::parse(0, format!("unknown target `{other}`"))),
        }
    }
}

/// One permutation-inequivalent code: `a*La[ca_id] + b*rep(Lb[cb_id])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub ring: RingId,
    pub n: usize,
    pub ca_id: usize,
    pub cb_id: usize,
    pub rep: Permutation,
    pub flags: Flags,
    pub cardinality: u128,
}

impl ClassificationRecord {
    pub fn realize(&self, la: &[LinearCode], lb: &[LinearCode]) -> Result<HzCode> {
        let ca = la
            .get(self.ca_id)
            .ok_or_else(|| bad_id("C_a", self.ca_id))?;
        let cb = lb
            .get(self.cb_id)
            .ok_or_else(|| bad_id("C_b", self.cb_id))?;
        assemble(self.ring, ca, cb, &self.rep)
    }
}

/// The code built from `(C_a, C_b)` with `sigma` applied to the free
/// component: `C_b` over `H23`, `C_a` over `H32`.
pub fn assemble(
    ring: RingId,
    ca: &LinearCode,
    cb: &LinearCode,
    sigma: &Permutation,
) -> Result<HzCode> {
    match ring {
        RingId::H23 => HzCode::build(ring, ca.clone(), sigma.apply_code(cb)?),
        RingId::H32 => HzCode::build(ring, sigma.apply_code(ca)?, cb.clone()),
    }
}

fn bad_id(which: &str, id: usize) -> Error {
    Error::VerificationFailed(format!("{which} index {id} out of range"))
}

/// Double-coset count for one admitted component pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCount {
    pub ca_id: usize,
    pub cb_id: usize,
    pub aut_ca: usize,
    pub aut_cb: usize,
    pub cosets: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub ring: RingId,
    pub n: usize,
    pub target: Target,
    pub records: Vec<ClassificationRecord>,
    pub pairs: Vec<PairCount>,
}

fn common_length(la: &[LinearCode], lb: &[LinearCode], n: usize) -> Result<()> {
    for c in la.iter().chain(lb) {
        if c.len() != n {
            return Err(Error::LengthMismatch(n, c.len()));
        }
    }
    for c in la {
        if c.p() != Prime::Two {
            return Err(Error::FieldMismatch {
                expected: 2,
                found: c.p().value(),
            });
        }
    }
    for c in lb {
        if c.p() != Prime::Three {
            return Err(Error::FieldMismatch {
                expected: 3,
                found: c.p().value(),
            });
        }
    }
    if !n.is_multiple_of(2) {
        return Err(Error::OddLength(n));
    }
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    Ok(())
}

/// Runs the double-coset classification over `la x lb`.
///
/// `la` and `lb` should each be free of internal equivalences; otherwise the
/// output still covers everything but may contain equivalent records.
pub fn classify(
    ring: RingId,
    n: usize,
    la: &[LinearCode],
    lb: &[LinearCode],
    target: Target,
) -> Result<Classification> {
    classify_within(ring, n, la, lb, target, DEFAULT_MAX_DEGREE)
}

pub fn classify_within(
    ring: RingId,
    n: usize,
    la: &[LinearCode],
    lb: &[LinearCode],
    target: Target,
    max_degree: usize,
) -> Result<Classification> {
    common_length(la, lb, n)?;
    if n > max_degree {
        return Err(Error::budget(
            "permutation degree",
            n as u128,
            max_degree as u128,
        ));
    }
    let mut aut_a = HashMap::new();
    let mut aut_b = HashMap::new();
    let mut records = Vec::new();
    let mut pairs = Vec::new();
    for (i, ca) in la.iter().enumerate() {
        for (j, cb) in lb.iter().enumerate() {
            if !target.admits(ring, ca, cb) {
                continue;
            }
            if let Entry::Vacant(e) = aut_a.entry(i) {
                e.insert(perm::automorphism_group_within(ca, max_degree)?);
            }
            if let Entry::Vacant(e) = aut_b.entry(j) {
                e.insert(perm::automorphism_group_within(cb, max_degree)?);
            }
            let (ga, gb) = (&aut_a[&i], &aut_b[&j]);
            let (left, right) = match ring {
                RingId::H23 => (ga, gb),
                RingId::H32 => (gb, ga),
            };
            let cosets: Vec<DoubleCoset> = perm::double_cosets_within(left, right, max_degree)?;
            pairs.push(PairCount {
                ca_id: i,
                cb_id: j,
                aut_ca: ga.order(),
                aut_cb: gb.order(),
                cosets: cosets.len(),
            });
            for coset in cosets {
                let code = assemble(ring, ca, cb, &coset.representative)?;
                debug_assert!(code.is_self_orthogonal());
                records.push(ClassificationRecord {
                    ring,
                    n,
                    ca_id: i,
                    cb_id: j,
                    rep: coset.representative,
                    flags: code.flags(),
                    cardinality: code.cardinality(),
                });
            }
        }
    }
    Ok(Classification {
        ring,
        n,
        target,
        records,
        pairs,
    })
}

/// Outcome of [`verify_classification`]; each list holds human-readable findings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verification {
    pub unsound: Vec<String>,
    pub equivalent_pairs: Vec<(usize, usize)>,
    pub uncovered: Vec<String>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.unsound.is_empty() && self.equivalent_pairs.is_empty() && self.uncovered.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.passed() {
            return Ok(());
        }
        let mut msg = Vec::new();
        msg.extend(self.unsound.iter().cloned());
        msg.extend(
            self.equivalent_pairs
                .iter()
                .map(|(i, j)| format!("records {i} and {j} are equivalent")),
        );
        msg.extend(self.uncovered.iter().cloned());
        Err(Error::VerificationFailed(msg.join("; ")))
    }
}

/// Empirical check of a classification: every record is sound, no two
/// records are equivalent, and every code [`assemble`]d from an admitted pair
/// and any `sigma` in `S_n` is equivalent to some record.
///
/// Equivalence is decided through [`HzCode::canonical_form`], the minimum over
/// all of `S_n`, so it is exactly the exhaustive-search relation.
pub fn verify_classification(
    records: &[ClassificationRecord],
    ring: RingId,
    n: usize,
    la: &[LinearCode],
    lb: &[LinearCode],
    target: Target,
) -> Result<Verification> {
    common_length(la, lb, n)?;
    if n > MAX_VERIFY_LENGTH {
        return Err(Error::budget(
            "verification length",
            n as u128,
            MAX_VERIFY_LENGTH as u128,
        ));
    }
    let mut report = Verification::default();

    let mut forms: HashMap<(LinearCode, LinearCode), usize> = HashMap::new();
    for (idx, rec) in records.iter().enumerate() {
        if rec.ring != ring || rec.n != n || rec.rep.degree() != n {
            report
                .unsound
                .push(format!("record {idx} has the wrong ring or length"));
            continue;
        }
        let code = match rec.realize(la, lb) {
            Ok(c) => c,
            Err(e) => {
                report.unsound.push(format!("record {idx}: {e}"));
                continue;
            }
        };
        if !target.admits(ring, &la[rec.ca_id], &lb[rec.cb_id])
            || !target.holds(&code)
            || !code.is_self_orthogonal()
        {
            report.unsound.push(format!("record {idx} is not {target}"));
        }
        if code.flags() != rec.flags || code.cardinality() != rec.cardinality {
            report
                .unsound
                .push(format!("record {idx} carries stale flags or size"));
        }
        if let Some(&prev) = forms.get(&code.canonical_form()) {
            report.equivalent_pairs.push((prev, idx));
        } else {
            forms.insert(code.canonical_form(), idx);
        }
    }

    let mut covered: HashSet<(LinearCode, LinearCode)> = HashSet::new();
    for (i, ca) in la.iter().enumerate() {
        for (j, cb) in lb.iter().enumerate() {
            if !target.admits(ring, ca, cb) {
                continue;
            }
            for sigma in perm::symmetric_group_elements(n) {
                let code = assemble(ring, ca, cb, &sigma)?;
                let form = canonical_pair(code.ca(), code.cb());
                if covered.contains(&form) {
                    continue;
                }
                if !forms.contains_key(&form) {
                    report.uncovered.push(format!(
                        "pair ({i}, {j}) with sigma {sigma:?} has no record"
                    ));
                }
                covered.insert(form);
            }
        }
    }
    Ok(report)
}

/// Keeps the first code of each permutation-equivalence class.
pub fn inequivalent(codes: impl IntoIterator<Item = LinearCode>) -> Vec<LinearCode> {
    let mut seen: HashSet<LinearCode> = HashSet::new();
    let mut out = Vec::new();
    for c in codes {
        if seen.contains(&c) {
            continue;
        }
        for pi in perm::symmetric_group_elements(c.len()) {
            seen.insert(pi.apply_code(&c).expect("degree matches"));
        }
        out.push(c);
    }
    out
}

/// Component lists for a target, built from subspace enumeration and reduced
/// to one code per equivalence class. The governing list holds the admissible
/// isotropic codes; the free list is every subspace (SO), every subspace of
/// dimension `m` (QSD), or the full space (SD).
pub fn component_lists(
    ring: RingId,
    n: usize,
    target: Target,
) -> Result<(Vec<LinearCode>, Vec<LinearCode>)> {
    let gov_p = ring.governing_prime();
    let free_p = match gov_p {
        Prime::Two => Prime::Three,
        Prime::Three => Prime::Two,
    };
    let space = SymplecticSpace::for_length(gov_p, n)?;
    let m = space.m();
    let (gov, free) = match target {
        Target::SelfOrthogonal => (
            space.enumerate_all_isotropic()?,
            (0..=n)
                .flat_map(|k| all_subspaces(free_p, n, k))
                .collect::<Vec<_>>(),
        ),
        Target::QuasiSelfDual => (space.enumerate_isotropic(m)?, all_subspaces(free_p, n, m)),
        Target::SelfDual => (
            space.enumerate_isotropic(m)?,
            vec![LinearCode::full(free_p, n)],
        ),
    };
    let (gov, free) = (inequivalent(gov), inequivalent(free));
    Ok(match ring {
        RingId::H23 => (gov, free),
        RingId::H32 => (free, gov),
    })
}
