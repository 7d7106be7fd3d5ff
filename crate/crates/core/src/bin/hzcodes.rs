use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hzcodes::catalog::{write_atomic, Catalog};
use hzcodes::classify::{classify_within, component_lists, verify_classification, Target};
use hzcodes::code::{oracle, DEFAULT_WORD_BUDGET};
use hzcodes::format::{
    parse_hz_code, parse_matrices, parse_matrix, write_hz_code, write_matrices, write_words,
};
use hzcodes::perm::{automorphism_group_within, DEFAULT_MAX_DEGREE};
use hzcodes::symplectic::{count_isotropic, SymplecticSpace};
use hzcodes::{Error, LinearCode, Prime, RingId};

/// Symplectic codes over the rings H23 and H32.
#[derive(Parser)]
#[command(name = "hzcodes", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print sizes and SO/SD/QSD/nice/LCD flags of a code file.
    Check {
        file: PathBuf,
        /// Also report Euclidean self-orthogonality.
        #[arg(long)]
        euclidean: bool,
        /// List every codeword.
        #[arg(long)]
        words: bool,
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
        word_budget: u128,
    },
    /// Write the symplectic dual of a code file.
    Dual {
        file: PathBuf,
        /// Compare against a brute-force search of the ambient space.
        #[arg(long)]
        brute: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
        word_budget: u128,
    },
    /// Classify codes up to permutation equivalence and write a JSON catalog.
    Classify {
        #[arg(long)]
        ring: RingId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: Target,
        /// Binary component list; generated from subspace enumeration if absent.
        #[arg(long)]
        ca_list: Option<PathBuf>,
        /// Ternary component list; generated from subspace enumeration if absent.
        #[arg(long)]
        cb_list: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Check soundness, inequivalence and completeness over all of S_n.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Write the generated component lists used by `classify`.
    Lists {
        #[arg(long)]
        ring: RingId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: Target,
        #[arg(long)]
        ca_out: PathBuf,
        #[arg(long)]
        cb_out: PathBuf,
    },
    /// Number of k-dimensional totally isotropic subspaces of F_p^{2m}.
    CountIsotropic {
        p: u8,
        m: usize,
        k: usize,
        /// Enumerate the subspaces and compare with the formula.
        #[arg(long)]
        enumerate: bool,
    },
    /// Permutation automorphism group of a linear code file.
    Aut {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
}

enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailed(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    write_atomic(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check(file: &Path, euclidean: bool, words: bool, budget: u128) -> Outcome {
    let code = parse_hz_code(&read(file)?)?;
    println!("ring: {}", code.ring());
    println!("n: {}", code.len());
    println!("dim C_a: {}", code.ca().dim());
    println!("dim C_b: {}", code.cb().dim());
    println!("cardinality: {}", code.cardinality());
    println!("{}", code.flags());
    if euclidean {
        println!(
            "euclidean_SO={}",
            yes_no(oracle::is_euclidean_self_orthogonal(&code)?)
        );
    }
    if words {
        print!("{}", write_words(&code.words_within(budget)?));
    }
    Ok(())
}

fn dual(file: &Path, brute: bool, out: Option<&Path>, budget: u128) -> Outcome {
    let code = parse_hz_code(&read(file)?)?;
    let d = code.dual();
    let text = write_hz_code(&d);
    match out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    eprintln!("dual cardinality: {}", d.cardinality());
    if brute {
        let expected = oracle::dual_bruteforce_within(&code, budget)?;
        let got: BTreeSet<_> = d.words_within(budget)?.into_iter().collect();
        if got != expected {
            println!("oracle: MISMATCH");
            return Err(Failure::Check(format!(
                "dual has {} words, brute force found {}",
                got.len(),
                expected.len()
            )));
        }
        println!("oracle: match");
    }
    Ok(())
}

fn load_list(path: &Path) -> std::result::Result<Vec<LinearCode>, Failure> {
    Ok(parse_matrices(&read(path)?)?)
}

#[allow(clippy::too_many_arguments)]
fn classify_cmd(
    ring: RingId,
    n: usize,
    target: Target,
    ca_list: Option<&Path>,
    cb_list: Option<&Path>,
    out: Option<&Path>,
    verify: bool,
    max_degree: usize,
) -> Outcome {
    let (la, lb) = if ca_list.is_none() || cb_list.is_none() {
        component_lists(ring, n, target)?
    } else {
        (Vec::new(), Vec::new())
    };
    let la = match ca_list {
        Some(p) => load_list(p)?,
        None => la,
    };
    let lb = match cb_list {
        Some(p) => load_list(p)?,
        None => lb,
    };
    let cls = classify_within(ring, n, &la, &lb, target, max_degree)?;
    for pc in &cls.pairs {
        println!(
            "pair ({}, {}): |Aut C_a|={} |Aut C_b|={} cosets={}",
            pc.ca_id, pc.cb_id, pc.aut_ca, pc.aut_cb, pc.cosets
        );
    }
    println!("total: {}", cls.records.len());
    let catalog = Catalog::new(&cls, &la, &lb)?;
    catalog.check(&la, &lb)?;
    if let Some(path) = out {
        write(path, &catalog.to_json())?;
    }
    if verify {
        verify_classification(&cls.records, ring, n, &la, &lb, target)?.into_result()?;
        println!("verification: passed");
    }
    Ok(())
}

fn lists(ring: RingId, n: usize, target: Target, ca_out: &Path, cb_out: &Path) -> Outcome {
    let (la, lb) = component_lists(ring, n, target)?;
    write(ca_out, &write_matrices(&la))?;
    write(cb_out, &write_matrices(&lb))?;
    println!("C_a codes: {}", la.len());
    println!("C_b codes: {}", lb.len());
    Ok(())
}

fn count_isotropic_cmd(p: u8, m: usize, k: usize, enumerate: bool) -> Outcome {
    let prime =
        Prime::from_value(p).ok_or_else(|| Failure::Input(format!("unsupported prime {p}")))?;
    let count = count_isotropic(prime, m, k)?;
    println!("{count}");
    if enumerate {
        let found = SymplecticSpace::new(prime, m).enumerate_isotropic(k)?;
        print!("{}", write_matrices(&found));
        if count != found.len().into() {
            return Err(Failure::Check(format!(
                "formula gives {count}, enumeration found {}",
                found.len()
            )));
        }
        println!("enumerated: {}", found.len());
    }
    Ok(())
}

fn aut(file: &Path, max_degree: usize) -> Outcome {
    let code = parse_matrix(&read(file)?)?;
    let group = automorphism_group_within(&code, max_degree)?;
    println!("order: {}", group.order());
    let gens: Vec<String> = group.generators().iter().map(|g| g.to_string()).collect();
    println!(
        "generators: {}",
        if gens.is_empty() {
            "()".to_string()
        } else {
            gens.join(" ")
        }
    );
    println!("elements: {}", group.elements().len());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check {
            file,
            euclidean,
            words,
            word_budget,
        } => check(&file, euclidean, words, word_budget),
        Command::Dual {
            file,
            brute,
            out,
            word_budget,
        } => dual(&file, brute, out.as_deref(), word_budget),
        Command::Classify {
            ring,
            n,
            target,
            ca_list,
            cb_list,
            out,
            verify,
            max_degree,
        } => classify_cmd(
            ring,
            n,
            target,
            ca_list.as_deref(),
            cb_list.as_deref(),
            out.as_deref(),
            verify,
            max_degree,
        ),
        Command::Lists {
            ring,
            n,
            target,
            ca_out,
            cb_out,
        } => lists(ring, n, target, &ca_out, &cb_out),
        Command::CountIsotropic { p, m, k, enumerate } => count_isotropic_cmd(p, m, k, enumerate),
        Command::Aut { file, max_degree } => aut(&file, max_degree),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
