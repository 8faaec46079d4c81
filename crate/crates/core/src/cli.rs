//! The `quandle` command line: one verb per analysis.
//!
//! Exit codes: 0 on success, 1 for bad input (unreadable files, failed
//! hypotheses, caps), 2 when an assertion that a theorem guarantees fails.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructors::adtak;
use crate::enumerate::enumerate_quandles;
use crate::format::{
    read_mesh_file, read_quandle_file, read_tower_file, serialize_mesh, serialize_quandle,
};
use crate::inner::{aut_group, inn_group, is_connected, orbits};
use crate::lattice::{
    check_nested_strong_complement, classify_strong_complement, enumerate_subquandles,
    explicit_chain_complement, maximal_intersection, removal_rewrite, to_dot, Letter,
};
use crate::limits::{
    direct_tower_growth, profinite_evidence, truncated_inverse_limit, validate_tower, TowerKind,
};
use crate::mesh::{extract_mesh, semidisjoint_union, validate_mesh};
use crate::perm::Sign;
use crate::quandle::FiniteQuandle;
use crate::set::ElementSet;
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "quandle", version, about = "Computations with finite quandles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report verbosity.
    #[arg(long, global = true, value_enum, default_value_t = Verbosity::Summary)]
    format: Verbosity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Verbosity {
    Table,
    Summary,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of a quandle file.
    Validate { file: PathBuf },
    /// Order, connectivity, group orders and kei status.
    Info { file: PathBuf },
    /// Subquandle lattice with complement and maximal-subquandle checks.
    Lattice {
        file: PathBuf,
        /// Write the Hasse diagram in DOT format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Least complement of a subquandle.
    Complement {
        file: PathBuf,
        /// 1-based comma list, e.g. `1,3`.
        #[arg(long)]
        set: String,
    },
    /// The four strong-complement conditions for a subquandle.
    Classify {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Chain theorems for Q'' ⊑ Q' ⊑ Q.
    Chain {
        file: PathBuf,
        /// Q' as a 1-based comma list.
        #[arg(long)]
        outer: String,
        /// Q'' as a 1-based comma list.
        #[arg(long)]
        inner: String,
        /// Seed for the random words fed to the removal check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        words: usize,
    },
    /// Validate a mesh file.
    MeshCheck { file: PathBuf },
    /// Extract the mesh of a quandle over its orbits or a given partition.
    Decompose {
        file: PathBuf,
        /// Blocks separated by `;`, e.g. `1,3;2,4`.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Semidisjoint union of a mesh file.
    Rebuild { file: PathBuf },
    /// Quandles of order `n` up to isomorphism.
    Enumerate { n: usize },
    /// AdTak of a kei.
    Adtak { file: PathBuf },
    /// Validate a tower; for direct towers optionally probe closure growth.
    Tower {
        file: PathBuf,
        /// Growth seed at the top level, as a 1-based comma list.
        #[arg(long)]
        set: Option<String>,
        #[arg(long, default_value_t = 100)]
        budget: usize,
    },
    /// Truncated inverse limit and complementation evidence.
    LimitEvidence {
        file: PathBuf,
        /// Number of levels to use; all of them by default.
        #[arg(long)]
        depth: Option<usize>,
    },
}

enum Failure {
    Input(String),
    Falsified(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_falsification() {
            Failure::Falsified(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn at(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse { .. } | Error::Falsified(_) => e.into(),
        e => Failure::Input(format!("{}: {e}", path.display())),
    }
}

fn load(path: &Path) -> std::result::Result<FiniteQuandle, Failure> {
    read_quandle_file(path).map_err(|e| at(path, e))
}

/// Parses a 1-based comma list such as `1,3` into a set on `0..n`.
pub fn parse_set(text: &str, n: usize) -> crate::Result<ElementSet> {
    let mut s = ElementSet::empty(n);
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::Malformed(format!("`{tok}` is not an element label")))?;
        if v == 0 || v > n {
            return Err(Error::Malformed(format!("element {v} is outside 1..={n}")));
        }
        s.insert(v - 1);
    }
    Ok(s)
}

fn set_arg(text: &str, n: usize, flag: &str) -> std::result::Result<ElementSet, Failure> {
    parse_set(text, n).map_err(|e| Failure::Input(format!("--{flag}: {e}")))
}

/// Runs one command line (including the program name) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Falsified(msg)) => {
            let _ = writeln!(err, "FALSIFIED: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let table = cli.format == Verbosity::Table;
    match &cli.command {
        Command::Validate { file } => validate(file, table, out),
        Command::Info { file } => info(file, table, out),
        Command::Lattice { file, dot } => lattice(file, dot.as_deref(), table, out),
        Command::Complement { file, set } => complement(file, set, out),
        Command::Classify { file, set } => classify(file, set, out),
        Command::Chain {
            file,
            outer,
            inner,
            seed,
            words,
        } => chain(file, outer, inner, *seed, *words, out),
        Command::MeshCheck { file } => mesh_check(file, out),
        Command::Decompose { file, partition } => decompose(file, partition.as_deref(), table, out),
        Command::Rebuild { file } => rebuild(file, out),
        Command::Enumerate { n } => enumerate(*n, table, out),
        Command::Adtak { file } => adtak_verb(file, out),
        Command::Tower { file, set, budget } => tower(file, set.as_deref(), *budget, out),
        Command::LimitEvidence { file, depth } => limit_evidence(file, *depth, table, out),
    }
}

fn kind_word(q: &FiniteQuandle) -> &'static str {
    match (q.is_quandle(), q.is_kei()) {
        (true, true) => "kei",
        (true, false) => "quandle",
        (false, _) => "rack",
    }
}

fn validate(file: &Path, table: bool, out: &mut dyn Write) -> Outcome {
    let q = load(file)?;
    writeln!(out, "ok: {} of order {}", kind_word(&q), q.size())?;
    if table {
        write!(out, "{}", serialize_quandle(&q))?;
    }
    Ok(())
}

fn info(file: &Path, table: bool, out: &mut dyn Write) -> Outcome {
    let q = load(file)?;
    let orbs = orbits(&q);
    let connectivity = if is_connected(&q) {
        "connected".to_string()
    } else {
        format!("{} orbits", orbs.len())
    };
    let inn = inn_group(&q)?;
    let aut = match aut_group(&q) {
        Ok(g) => g.order().to_string(),
        Err(Error::CapExceeded { cap, .. }) => format!("? (order above {cap})"),
        Err(e) => return Err(e.into()),
    };
    writeln!(
        out,
        "order {}, {connectivity}, |Inn|={}, |Aut|={aut}, {}",
        q.size(),
        inn.order(),
        kind_word(&q)
    )?;
    if table {
        for (i, o) in orbs.iter().enumerate() {
            writeln!(out, "orbit {}: {}", i + 1, o.one_based())?;
        }
        for y in q.elements() {
            writeln!(out, "S_{} = {}", y + 1, crate::inner::symmetry(&q, y))?;
        }
    }
    Ok(())
}

fn lattice(file: &Path, dot: Option<&Path>, table: bool, out: &mut dyn Write) -> Outcome {
    let q = load(file)?;
    let l = enumerate_subquandles(&q).map_err(|e| at(file, e))?;
    let verdict = l.is_complemented();
    let maximal = l.maximal_subquandles();
    let meet = maximal_intersection(&l);
    writeln!(
        out,
        "{} subquandles, complemented: {}",
        l.len(),
        verdict.complemented
    )?;
    let names: Vec<String> = maximal.iter().map(|m| m.one_based()).collect();
    writeln!(out, "maximal: {}", names.join(" "))?;
    writeln!(out, "intersection of maximal: {}", meet.one_based())?;
    if table {
        for &(i, c) in &verdict.witnesses {
            let c = c
                .map(|c| l.elements()[c].one_based())
                .unwrap_or_else(|| "none".into());
            writeln!(out, "  {} complement {}", l.elements()[i].one_based(), c)?;
        }
    }
    if let Some(path) = dot {
        std::fs::write(path, to_dot(&l))?;
        writeln!(out, "wrote {}", path.display())?;
    }
    if !verdict.complemented {
        return Err(Failure::Falsified(
            "a subquandle of a finite quandle has no complement".into(),
        ));
    }
    if q.size() >= 2 && !meet.is_empty() {
        return Err(Failure::Falsified(
            "maximal subquandles have a common element".into(),
        ));
    }
    Ok(())
}

fn complement(file: &Path, set: &str, out: &mut dyn Write) -> Outcome {
    let q = load(file)?;
    let s = set_arg(set, q.size(), "set")?;
    let l = enumerate_subquandles(&q).map_err(|e| at(file, e))?;
    match l.complement_search(&s)? {
        Some(c) => {
            writeln!(out, "complement of {}: {}", s.one_based(), c.one_based())?;
            Ok(())
        }
        None => Err(Failure::Falsified(format!(
            "{} has no complement",
            s.one_based()
        ))),
    }
}

fn classify(file: &Path, set: &str, out: &mut dyn Write) -> Outcome {
    let q = load(file)?;
    let s = set_arg(set, q.size(), "set")?;
    let r = classify_strong_complement(&q, &s)?;
    writeln!(out, "subquandle {}", s.one_based())?;
    write!(out, "{r}")?;
    Ok(())
}

fn chain(
    file: &Path,
    outer: &str,
    inner: &str,
    seed: u64,
    words: usize,
    out: &mut dyn Write,
) -> Outcome {
    let q = load(file)?;
    let outer = set_arg(outer, q.size(), "outer")?;
    let inner = set_arg(inner, q.size(), "inner")?;
    let c = explicit_chain_complement(&q, &outer, &inner)?;
    writeln!(
        out,
        "chain {} ⊑ {} ⊑ Q",
        inner.one_based(),
        outer.one_based()
    )?;
    writeln!(out, "orbit closure of Q'': {}", c.orbit_closure.one_based())?;
    writeln!(out, "explicit complement: {}", c.complement.one_based())?;
    match check_nested_strong_complement(&q, &outer, &inner) {
        Ok(_) => writeln!(out, "Q'' strongly complemented in Q: yes, so also in Q'")?,
        Err(Error::Hypothesis(_)) => writeln!(out, "Q'' strongly complemented in Q: no")?,
        Err(e) => return Err(e.into()),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut removed = 0;
    for _ in 0..words {
        let len = rng.gen_range(0..=8);
        let word: Vec<Letter> = (0..len)
            .map(|_| Letter {
                element: rng.gen_range(0..q.size()),
                sign: if rng.gen_bool(0.5) {
                    Sign::Plus
                } else {
                    Sign::Minus
                },
            })
            .collect();
        removed += word.len() - removal_rewrite(&q, &outer, &inner, &word)?.len();
    }
    writeln!(out, "removal check: {words} random words (seed {seed}), {removed} letters dropped, images unchanged")?;
    Ok(())
}

fn mesh_check(file: &Path, out: &mut dyn Write) -> Outcome {
    let m = read_mesh_file(file).map_err(|e| at(file, e))?;
    let report = validate_mesh(&m);
    write!(out, "{report}")?;
    if report.is_ok() {
        Ok(())
    } else {
        Err(Failure::Input(format!(
            "{}: mesh fails validation",
            file.display()
        )))
    }
}

fn decompose(file: &Path, partition: Option<&str>, table: bool, out: &mut dyn Write) -> Outcome {
    let q = load(file)?;
    let parts = partition
        .map(|p| {
            p.split(';')
                .map(|b| set_arg(b, q.size(), "partition"))
                .collect::<std::result::Result<Vec<_>, _>>()
        })
        .transpose()?;
    let m = extract_mesh(&q, parts.as_deref())?;
    let report = validate_mesh(&m);
    if !report.is_ok() {
        return Err(Failure::Falsified(format!(
            "extracted mesh is invalid:\n{report}"
        )));
    }
    if semidisjoint_union(&m)? != q {
        return Err(Failure::Falsified(
            "semidisjoint union does not reproduce the quandle".into(),
        ));
    }
    let names: Vec<String> = m
        .blocks()
        .iter()
        .map(|b| ElementSet::from_members(q.size(), b.members.iter().copied()).one_based())
        .collect();
    writeln!(
        out,
        "{} blocks: {}; mesh valid; round trip exact",
        names.len(),
        names.join(" ")
    )?;
    if table {
        write!(out, "{}", serialize_mesh(&m))?;
    }
    Ok(())
}

fn rebuild(file: &Path, out: &mut dyn Write) -> Outcome {
    let m = read_mesh_file(file).map_err(|e| at(file, e))?;
    let q = semidisjoint_union(&m).map_err(|e| at(file, e))?;
    write!(out, "{}", serialize_quandle(&q))?;
    Ok(())
}

fn enumerate(n: usize, table: bool, out: &mut dyn Write) -> Outcome {
    let qs = enumerate_quandles(n)?;
    writeln!(out, "order {n}: {} quandles up to isomorphism", qs.len())?;
    if table {
        for q in &qs {
            write!(out, "{}", serialize_quandle(q))?;
        }
    }
    Ok(())
}

fn adtak_verb(file: &Path, out: &mut dyn Write) -> Outcome {
    let q = load(file)?;
    let a = adtak(&q).map_err(|e| at(file, e))?;
    let factors: Vec<String> = a.factors().iter().map(|f| f.to_string()).collect();
    writeln!(
        out,
        "AdTak = {a} (invariant factors: {})",
        factors.join(" ")
    )?;
    Ok(())
}

fn tower(file: &Path, set: Option<&str>, budget: usize, out: &mut dyn Write) -> Outcome {
    let t = read_tower_file(file).map_err(|e| at(file, e))?;
    let report = validate_tower(&t);
    writeln!(out, "{} tower with {} levels", t.kind(), t.len())?;
    write!(out, "{report}")?;
    if !report.is_ok() {
        return Err(Failure::Input(format!(
            "{}: tower fails validation",
            file.display()
        )));
    }
    if let Some(set) = set {
        if t.kind() != TowerKind::Direct {
            return Err(Failure::Input(
                "--set growth probes need a direct tower".into(),
            ));
        }
        let seed = set_arg(set, t.top().size(), "set")?;
        write!(out, "{}", direct_tower_growth(&t, &seed, budget)?)?;
    }
    Ok(())
}

fn limit_evidence(file: &Path, depth: Option<usize>, table: bool, out: &mut dyn Write) -> Outcome {
    let t = read_tower_file(file).map_err(|e| at(file, e))?;
    let depth = depth.unwrap_or(t.len());
    let limit = truncated_inverse_limit(&t, depth).map_err(|e| at(file, e))?;
    writeln!(
        out,
        "truncated limit at depth {depth}: order {}, {}",
        limit.quandle.size(),
        kind_word(&limit.quandle)
    )?;
    let evidence = profinite_evidence(&t, depth)?;
    if table {
        write!(out, "{evidence}")?;
    } else {
        for l in &evidence.levels {
            let name = l
                .level
                .map(|i| format!("level {i}"))
                .unwrap_or_else(|| "truncation".into());
            writeln!(out, "{name}: complemented {}", l.complemented)?;
        }
        let compatible = evidence
            .compatibility
            .iter()
            .filter(|r| r.compatible)
            .count();
        writeln!(
            out,
            "compatibility diagnostic: {compatible}/{} subquandles have a complement projecting to a complement",
            evidence.compatibility.len()
        )?;
    }
    Ok(())
}
