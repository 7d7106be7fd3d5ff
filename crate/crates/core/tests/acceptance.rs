//! Acceptance criteria, one line per criterion.
//!
//! Run with `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hzcodes::classify::{
    classify, component_lists, verify_classification, ClassificationRecord, Target,
};
use hzcodes::code::oracle;
use hzcodes::gf::all_subspaces;
use hzcodes::perm::{automorphism_group, double_cosets, factorial};
use hzcodes::symplectic::count_isotropic;
use hzcodes::{HzCode, HzWord, LinearCode, Prime, RingElement, RingId, SymplecticSpace};

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lin(p: Prime, n: usize, rows: &[&[u8]]) -> LinearCode {
    LinearCode::from_rows(p, n, rows.iter().map(|r| r.to_vec())).unwrap()
}

fn el(c: char) -> RingElement {
    RingElement::from_symbol(c).unwrap()
}

fn words(ring: RingId, ws: &[&str]) -> BTreeSet<HzWord> {
    ws.iter().map(|w| HzWord::parse(ring, w).unwrap()).collect()
}

const ORDER: [char; 6] = ['0', 'a', 'b', 'c', 'd', 'e'];
const ADD: [&str; 6] = ["0abcde", "a0cbed", "bcde0a", "cbeda0", "de0abc", "eda0cb"];
const MUL_H23: [&str; 6] = ["000000", "0a0a0a", "000000", "0a0a0a", "000000", "0a0a0a"];
const MUL_H32: [&str; 6] = ["000000", "000000", "00bbdd", "00bbdd", "00ddbb", "00ddbb"];

fn ring_tables() -> Check {
    for ring in RingId::ALL {
        let mul = match ring {
            RingId::H23 => MUL_H23,
            RingId::H32 => MUL_H32,
        };
        for (i, &u) in ORDER.iter().enumerate() {
            for (j, &v) in ORDER.iter().enumerate() {
                let (u, v) = (el(u), el(v));
                let sum = el(ADD[i].as_bytes()[j] as char);
                let prod = el(mul[i].as_bytes()[j] as char);
                ensure!(u + v == sum, "{u}+{v}");
                ensure!(RingElement::mul(ring, u, v) == prod, "{ring}: {u}*{v}");
            }
        }
        let all = RingElement::ALL;
        for &x in &all {
            for &y in &all {
                ensure!(
                    RingElement::mul(ring, x, y) == RingElement::mul(ring, y, x),
                    "{ring} commutativity"
                );
                for &z in &all {
                    let m = |p, q| RingElement::mul(ring, p, q);
                    ensure!((x + y) + z == x + (y + z), "additive associativity");
                    ensure!(
                        m(m(x, y), z) == m(x, m(y, z)),
                        "{ring} associativity at {x},{y},{z}"
                    );
                    ensure!(
                        m(x, y + z) == m(x, y) + m(x, z),
                        "{ring} distributivity at {x},{y},{z}"
                    );
                }
            }
        }
        let unity = all
            .iter()
            .any(|&e| all.iter().all(|&x| RingElement::mul(ring, e, x) == x));
        ensure!(!unity, "{ring} has a multiplicative identity");
    }
    Ok(())
}

fn r2() -> HzCode {
    HzCode::build(
        RingId::H23,
        lin(Prime::Two, 2, &[&[1, 1]]),
        lin(Prime::Three, 2, &[&[1, 1]]),
    )
    .unwrap()
}

fn example_r2() -> Check {
    let c = r2();
    let listed_code = words(RingId::H23, &["00", "aa", "bb", "cc", "dd", "ee"]);
    ensure!(
        c.words().unwrap().into_iter().collect::<BTreeSet<_>>() == listed_code,
        "R2 words"
    );
    ensure!(
        c.is_self_orthogonal() && c.is_quasi_self_dual() && !c.is_self_dual(),
        "R2 flags {}",
        c.flags()
    );
    let listed_dual = words(
        RingId::H23,
        &[
            "00", "0b", "0d", "b0", "bb", "bd", "d0", "db", "dd", "aa", "ac", "ae", "ca", "cc",
            "ce", "ea", "ec", "ee",
        ],
    );
    let dual: BTreeSet<_> = c.dual().words().unwrap().into_iter().collect();
    ensure!(dual == listed_dual, "dual has {} words", dual.len());
    ensure!(
        oracle::dual_bruteforce(&c).unwrap() == listed_dual,
        "brute-force dual differs"
    );
    Ok(())
}

fn example_length_four() -> Check {
    let c = HzCode::build(
        RingId::H23,
        lin(Prime::Two, 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
        lin(Prime::Three, 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
    )
    .unwrap();
    ensure!(c.words().unwrap().len() == 36, "size {}", c.cardinality());
    ensure!(
        c.is_self_orthogonal() && c.is_quasi_self_dual(),
        "flags {}",
        c.flags()
    );
    let defined = oracle::flags_by_definition(&c).unwrap();
    ensure!(defined.so && defined.qsd, "definitional flags {defined}");
    let x = HzWord::parse(RingId::H23, "a000").unwrap();
    ensure!(
        x.euclidean_inner(&x).unwrap() == RingElement::A,
        "<a000,a000>_E"
    );
    ensure!(
        !oracle::is_euclidean_self_orthogonal(&c).unwrap(),
        "code is Euclidean SO"
    );
    Ok(())
}

fn worked_example() -> Check {
    let la = vec![
        lin(Prime::Two, 2, &[&[1, 0]]),
        lin(Prime::Two, 2, &[&[1, 1]]),
    ];
    let lb = vec![
        lin(Prime::Three, 2, &[&[1, 0]]),
        lin(Prime::Three, 2, &[&[1, 1]]),
        lin(Prime::Three, 2, &[&[1, 2]]),
    ];
    let aut: Vec<usize> = la
        .iter()
        .chain(&lb)
        .map(|c| automorphism_group(c).unwrap().order())
        .collect();
    ensure!(aut == [1, 2, 1, 2, 2], "Aut orders {aut:?}");
    let cls =
        classify(RingId::H23, 2, &la, &lb, Target::SelfOrthogonal).map_err(|e| e.to_string())?;
    let counts: Vec<usize> = cls.pairs.iter().map(|p| p.cosets).collect();
    ensure!(counts == [2, 1, 1, 1, 1, 1], "coset counts {counts:?}");
    let b1_swapped = lin(Prime::Three, 2, &[&[0, 1]]);
    let expected = [
        (&la[0], &lb[0]),
        (&la[0], &b1_swapped),
        (&la[0], &lb[1]),
        (&la[0], &lb[2]),
        (&la[1], &lb[0]),
        (&la[1], &lb[1]),
        (&la[1], &lb[2]),
    ];
    ensure!(cls.records.len() == 7, "{} records", cls.records.len());
    for (rec, (ca, cb)) in cls.records.iter().zip(expected) {
        let code = rec.realize(&la, &lb).unwrap();
        ensure!(
            code.ca() == ca && code.cb() == cb,
            "record {rec:?} realizes {code}"
        );
        ensure!(code.is_self_orthogonal(), "{code} not SO");
    }
    Ok(())
}

/// Every pair at length 2 and 200 seeded random pairs per ring at length 4.
fn test_surface() -> Vec<HzCode> {
    let mut out = Vec::new();
    let sub = |p, n| {
        (0..=n)
            .flat_map(move |k| all_subspaces(p, n, k))
            .collect::<Vec<_>>()
    };
    for ring in RingId::ALL {
        for ca in sub(Prime::Two, 2) {
            for cb in sub(Prime::Three, 2) {
                out.push(HzCode::build(ring, ca.clone(), cb).unwrap());
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4832_3233);
    let random = |rng: &mut ChaCha8Rng, p: Prime| {
        let k = rng.gen_range(0..=4);
        let rows: Vec<Vec<u8>> = (0..k)
            .map(|_| (0..4).map(|_| rng.gen_range(0..p.value())).collect())
            .collect();
        LinearCode::from_rows(p, 4, rows).unwrap()
    };
    for ring in RingId::ALL {
        for _ in 0..200 {
            let ca = random(&mut rng, Prime::Two);
            let cb = random(&mut rng, Prime::Three);
            out.push(HzCode::build(ring, ca, cb).unwrap());
        }
    }
    out
}

fn duality_oracle(surface: &[HzCode]) -> Check {
    for c in surface {
        let d = c.dual();
        let got: BTreeSet<_> = d.words().unwrap().into_iter().collect();
        ensure!(got == oracle::dual_bruteforce(c).unwrap(), "dual of {c}");
        let involutive = d.dual() == *c;
        ensure!(
            involutive == c.free().is_full(),
            "involution condition fails for {c}"
        );
    }
    Ok(())
}

fn characterizations(surface: &[HzCode]) -> Check {
    let mut parity_counterexample = None;
    for c in surface {
        let f = c.flags();
        let defined = oracle::flags_by_definition(c).unwrap();
        ensure!(
            f == defined,
            "{c}: characterization {f} vs definition {defined}"
        );
        ensure!(!(f.qsd && f.sd), "{c} is both QSD and SD");
        if c.ring() == RingId::H32
            && c.len() % 4 == 2
            && (f.sd || f.qsd)
            && parity_counterexample.is_none()
        {
            parity_counterexample = Some(format!("{c} has {f}"));
        }
    }
    match parity_counterexample {
        Some(msg) => Err(format!(
            "flags agree with definitions on all {} codes, but an H32 SD/QSD code exists at length 2 mod 4: {msg}",
            surface.len()
        )),
        None => Ok(()),
    }
}

fn isotropic_counts() -> Check {
    let cases = [(Prime::Two, 3usize), (Prime::Three, 2)];
    for (p, max_m) in cases {
        for m in 1..=max_m {
            let space = SymplecticSpace::new(p, m);
            for k in 0..=m {
                let formula = count_isotropic(p, m, k).unwrap();
                let found = space.enumerate_isotropic(k).unwrap().len();
                ensure!(
                    formula == found.into(),
                    "({p},{m},{k}): formula {formula}, enumeration {found}"
                );
            }
        }
    }
    for (p, m, k, expected) in [
        (Prime::Two, 1, 1, 3u32),
        (Prime::Two, 2, 2, 15),
        (Prime::Three, 1, 1, 4),
    ] {
        ensure!(
            count_isotropic(p, m, k).unwrap() == expected.into(),
            "anchor ({p},{m},{k})"
        );
    }
    Ok(())
}

fn duplicate_under_other_sigma(
    records: &[ClassificationRecord],
    ring: RingId,
    la: &[LinearCode],
    lb: &[LinearCode],
) -> Option<ClassificationRecord> {
    for rec in records {
        let (gov, free) = match ring {
            RingId::H23 => (&la[rec.ca_id], &lb[rec.cb_id]),
            RingId::H32 => (&lb[rec.cb_id], &la[rec.ca_id]),
        };
        let g = automorphism_group(gov).unwrap();
        let h = automorphism_group(free).unwrap();
        for x in g.elements() {
            for y in h.elements() {
                let sigma = x.compose(&rec.rep).compose(y);
                if sigma != rec.rep {
                    let mut dup = rec.clone();
                    dup.rep = sigma;
                    return Some(dup);
                }
            }
        }
    }
    None
}

fn classification() -> Check {
    for n in [2, 4] {
        for ring in RingId::ALL {
            for target in Target::ALL {
                let (la, lb) = component_lists(ring, n, target).map_err(|e| e.to_string())?;
                let cls = classify(ring, n, &la, &lb, target).map_err(|e| e.to_string())?;
                let report =
                    verify_classification(&cls.records, ring, n, &la, &lb, target).unwrap();
                ensure!(report.passed(), "{ring} n={n} {target}: {report:?}");
                if cls.records.is_empty() {
                    continue;
                }
                let mut dropped = cls.records.clone();
                dropped.pop();
                let report = verify_classification(&dropped, ring, n, &la, &lb, target).unwrap();
                ensure!(
                    !report.uncovered.is_empty(),
                    "{ring} n={n} {target}: dropped record not detected"
                );
                if let Some(dup) = duplicate_under_other_sigma(&cls.records, ring, &la, &lb) {
                    let mut duplicated = cls.records.clone();
                    duplicated.push(dup);
                    let report =
                        verify_classification(&duplicated, ring, n, &la, &lb, target).unwrap();
                    ensure!(
                        !report.equivalent_pairs.is_empty(),
                        "{ring} n={n} {target}: duplicated record not detected"
                    );
                }
            }
        }
    }
    Ok(())
}

fn scale() -> Check {
    let ca = lin(
        Prime::Two,
        8,
        &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
        ],
    );
    let cb = lin(
        Prime::Three,
        8,
        &[&[1, 2, 0, 1, 0, 0, 0, 0], &[0, 0, 0, 0, 1, 1, 1, 0]],
    );
    ensure!(
        SymplecticSpace::new(Prime::Two, 4)
            .is_self_dual(&ca)
            .unwrap(),
        "C_a is not Lagrangian"
    );
    let g = automorphism_group(&ca).unwrap();
    let h = automorphism_group(&cb).unwrap();
    ensure!(g.order() > 1 && h.order() > 1, "trivial groups");
    ensure!(
        g.satisfies_group_axioms() && h.satisfies_group_axioms(),
        "group axioms"
    );
    let cosets = double_cosets(&g, &h).unwrap();
    let total: usize = cosets.iter().map(|c| c.size).sum();
    ensure!(
        total == factorial(8) && total == 40320,
        "orbit sizes sum to {total}"
    );
    println!(
        "    |Aut C_a|={} |Aut C_b|={} double cosets={}",
        g.order(),
        h.order(),
        cosets.len()
    );
    Ok(())
}

fn main() {
    let surface = test_surface();
    let criteria: Vec<Criterion<'_>> = vec![
        (
            "ring tables and axioms",
            Duration::from_secs(1),
            Box::new(ring_tables),
        ),
        (
            "R2 flags and dual word list",
            Duration::from_secs(1),
            Box::new(example_r2),
        ),
        (
            "length-4 example: 36 words, SO, QSD, not Euclidean SO",
            Duration::from_secs(1),
            Box::new(example_length_four),
        ),
        (
            "length-2 classification: seven codes",
            Duration::from_secs(1),
            Box::new(worked_example),
        ),
        (
            "dual matches brute force, involution condition",
            Duration::from_secs(120),
            Box::new(|| duality_oracle(&surface)),
        ),
        (
            "characterizations match definitions",
            Duration::from_secs(300),
            Box::new(|| characterizations(&surface)),
        ),
        (
            "isotropic subspace counts",
            Duration::from_secs(60),
            Box::new(isotropic_counts),
        ),
        (
            "classification soundness and completeness",
            Duration::from_secs(600),
            Box::new(classification),
        ),
        (
            "automorphisms and double cosets at length 8",
            Duration::from_secs(60),
            Box::new(scale),
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > *limit {
                Err(format!("took {elapsed:?}, limit {limit:?}"))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS {name} ({elapsed:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
