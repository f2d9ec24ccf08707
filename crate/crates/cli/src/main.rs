//! `bcn`: batch front end for the braid-cyclic library.
//!
//! Exit codes: 0 success, 1 failed check or invalid object, 2 parse or usage
//! error, 3 resource guard exceeded.

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use braid_cyclic::braid::{check_relations, check_relations_with, BraidWord};
use braid_cyclic::covering::{act_on_covering, fold, verify_act_theorem, TreeLikeCovering};
use braid_cyclic::free_group::FreeWord;
use braid_cyclic::orbit::{
    compare_equalities, conjecture_probe, is_liftable, quad_json, quad_line, quad_orbit, tree_json, tree_line,
    tree_orbit, Equality, OrbitOptions, ProbeOptions, DEFAULT_MAX_ORBIT,
};
use braid_cyclic::quad::{enumerate_monotone, Quadrangulation};
use braid_cyclic::tree::{enumerate_trees, LabeledTree};
use braid_cyclic::Error;
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "bcn",
    version,
    about = "Braid-cyclic group actions on trees, quadrangulations and coverings"
)]
struct Cli {
    /// Rank N (number of free generators / tree edges / faces).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Compare quadrangulations strictly instead of up to rotation.
    #[arg(long, global = true)]
    strict: bool,
    /// Worker threads for orbit expansion; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Abort orbit enumeration beyond this many states (exit code 3).
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORBIT)]
    max_orbit: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Ndjson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Tree,
    Quad,
    Cover,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrbitOf {
    Tree,
    Quad,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RelationTarget {
    Automorphisms,
    Trees,
    Quads,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a braid word to a tree.
    ActTree { word: String, input: Option<PathBuf> },
    /// Apply a braid word to a monotone quadrangulation.
    ActQuad { word: String, input: Option<PathBuf> },
    /// Apply a braid word to a tree-like covering.
    ActCover { word: String, input: Option<PathBuf> },
    /// Tree of black diagonals of a quadrangulation.
    ToTree { input: Option<PathBuf> },
    /// The monotone quadrangulation of a tree.
    FromTree { input: Option<PathBuf> },
    /// Whether a braid word lifts (needs --n).
    Liftable { word: String },
    /// Orbit of a tree or quadrangulation (default start: bush / trivial).
    Orbit {
        #[arg(long = "of", value_enum)]
        of: OrbitOf,
        #[arg(long)]
        count_only: bool,
        input: Option<PathBuf>,
    },
    /// Orbit sizes of the trivial quadrangulation under both equalities.
    StabilizerIndex,
    /// Word sending a tree to the bush tree.
    Canonicalize { input: Option<PathBuf> },
    /// Check the defining relations (needs --n).
    CheckRelations {
        #[arg(long, value_enum, default_value_t = RelationTarget::Automorphisms)]
        on: RelationTarget,
    },
    /// List all trees with N edges.
    EnumerateTrees {
        #[arg(long)]
        count_only: bool,
    },
    /// Count monotone quadrangulations, strictly and up to rotation (N <= 5).
    EnumerateQuads,
    /// Whether a free-group word lies in the subgroup of a covering.
    Membership { word: String, input: Option<PathBuf> },
    /// Free basis of the subgroup of a covering.
    Generators { input: Option<PathBuf> },
    /// Fold free-group words (one per line) into a subgroup graph (needs --n).
    Fold { input: Option<PathBuf> },
    /// Check that a word maps the subgroup of a covering into that of its image.
    VerifyCoveringAction { word: String, input: Option<PathBuf> },
    /// Heuristic search for relations among λ and U (needs --n).
    ConjectureProbe {
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// DOT drawing of a tree, quadrangulation or covering.
    ExportDot {
        #[arg(long, value_enum)]
        kind: Kind,
        input: Option<PathBuf>,
    },
    /// Randomized compatibility checks between the actions (needs --n).
    RandomCheck {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 20)]
        max_word: usize,
    },
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Usage(String),
    /// A check ran and reported failure; its output is already printed.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
            Failure::Usage(m) => f.write_str(m),
            Failure::Check => f.write_str("check failed"),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Parse { .. }) | Failure::Usage(_) => 2,
            Failure::Lib(Error::Guard(_)) => 3,
            _ => 1,
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn need_n(cli: &Cli) -> Result<usize, Failure> {
    match cli.n {
        Some(0) => Err(Failure::Usage("--n must be at least 1".into())),
        Some(n) => Ok(n),
        None => Err(Failure::Usage("this command needs --n <N>".into())),
    }
}

/// The object's own rank, cross-checked against `--n` if given.
fn rank_of(cli: &Cli, n: usize) -> Result<usize, Failure> {
    match cli.n {
        Some(m) if m != n => Err(Error::RankMismatch { left: m, right: n }.into()),
        _ => Ok(n),
    }
}

fn equality(cli: &Cli) -> Equality {
    if cli.strict {
        Equality::Strict
    } else {
        Equality::Rotational
    }
}

fn orbit_options(cli: &Cli, schreier: bool) -> Result<OrbitOptions, Failure> {
    if cli.max_orbit == 0 {
        return Err(Failure::Usage("--max-orbit must be positive".into()));
    }
    Ok(OrbitOptions {
        max_orbit: cli.max_orbit,
        jobs: cli.jobs,
        schreier,
    })
}

fn emit_tree(out: &mut impl Write, cli: &Cli, t: &LabeledTree) -> io::Result<()> {
    match cli.format {
        Format::Dot => write!(out, "{}", t.to_dot()),
        Format::Ndjson => writeln!(out, "{}", tree_json(t)),
        Format::Text => write!(out, "{t}"),
    }
}

fn emit_quad(out: &mut impl Write, cli: &Cli, q: &Quadrangulation) -> io::Result<()> {
    match cli.format {
        Format::Dot => write!(out, "{}", q.to_dot()),
        Format::Ndjson => writeln!(out, "{}", quad_json(q)),
        Format::Text => write!(out, "{q}"),
    }
}

fn emit_cover(out: &mut impl Write, cli: &Cli, c: &TreeLikeCovering) -> io::Result<()> {
    match cli.format {
        Format::Dot => write!(out, "{}", c.to_dot()),
        Format::Ndjson => writeln!(
            out,
            "{}",
            serde_json::json!({ "base": c.base(), "transpositions": c.transpositions() })
        ),
        Format::Text => write!(out, "{c}"),
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    match &cli.command {
        Command::ActTree { word, input } => {
            let t = LabeledTree::parse(&read_input(input)?)?;
            let w = BraidWord::parse(word, rank_of(cli, t.n())?)?;
            emit_tree(out, cli, &t.act_word(&w))?;
        }
        Command::ActQuad { word, input } => {
            let q = Quadrangulation::parse(&read_input(input)?)?;
            let w = BraidWord::parse(word, rank_of(cli, q.n())?)?;
            emit_quad(out, cli, &q.act_word(&w)?)?;
        }
        Command::ActCover { word, input } => {
            let c = TreeLikeCovering::parse(&read_input(input)?)?;
            let w = BraidWord::parse(word, rank_of(cli, c.n())?)?;
            emit_cover(out, cli, &act_on_covering(&w, &c)?)?;
        }
        Command::ToTree { input } => {
            let q = Quadrangulation::parse(&read_input(input)?)?;
            rank_of(cli, q.n())?;
            if !q.is_monotone() {
                return Err(Error::NotMonotone.into());
            }
            emit_tree(out, cli, &q.to_tree())?;
        }
        Command::FromTree { input } => {
            let t = LabeledTree::parse(&read_input(input)?)?;
            rank_of(cli, t.n())?;
            emit_quad(out, cli, &Quadrangulation::from_tree(&t))?;
        }
        Command::Liftable { word } => {
            let n = need_n(cli)?;
            let w = BraidWord::parse(word, n)?;
            writeln!(out, "{}", is_liftable(&w, equality(cli)))?;
        }
        Command::Orbit { of, count_only, input } => {
            let opts = orbit_options(cli, !count_only)?;
            match of {
                OrbitOf::Tree => {
                    let start = match input {
                        Some(_) => LabeledTree::parse(&read_input(input)?)?,
                        None => LabeledTree::bush(need_n(cli)?),
                    };
                    rank_of(cli, start.n())?;
                    let o = tree_orbit(&start, &opts)?;
                    if *count_only {
                        writeln!(out, "{}", o.len())?;
                    } else if cli.format == Format::Ndjson {
                        o.write_ndjson(out, tree_json)?;
                    } else {
                        o.write_text(out, tree_line)?;
                    }
                }
                OrbitOf::Quad => {
                    let start = match input {
                        Some(_) => Quadrangulation::parse(&read_input(input)?)?,
                        None => Quadrangulation::trivial(need_n(cli)?),
                    };
                    rank_of(cli, start.n())?;
                    let o = quad_orbit(&start, equality(cli), &opts)?;
                    if *count_only {
                        writeln!(out, "{}", o.len())?;
                    } else if cli.format == Format::Ndjson {
                        o.write_ndjson(out, quad_json)?;
                    } else {
                        o.write_text(out, quad_line)?;
                    }
                }
            }
        }
        Command::StabilizerIndex => {
            let n = need_n(cli)?;
            let report = compare_equalities(n, &orbit_options(cli, false)?)?;
            if cli.format == Format::Ndjson {
                writeln!(out, "{}", serde_json::to_string(&report).map_err(io::Error::other)?)?;
            } else {
                writeln!(out, "{report}")?;
            }
        }
        Command::Canonicalize { input } => {
            let t = LabeledTree::parse(&read_input(input)?)?;
            rank_of(cli, t.n())?;
            let w = t.canonicalize_to_bush();
            if !t.act_word(&w).is_bush() {
                writeln!(out, "{w}")?;
                return Err(Failure::Check);
            }
            writeln!(out, "{w}")?;
        }
        Command::CheckRelations { on } => {
            let n = need_n(cli)?;
            let report = match on {
                RelationTarget::Automorphisms => check_relations(n),
                RelationTarget::Trees => {
                    let trees = enumerate_trees(n)?;
                    check_relations_with(n, |r| trees.iter().all(|t| t.act_word(&r.lhs) == t.act_word(&r.rhs)))
                }
                RelationTarget::Quads => {
                    let quads = enumerate_monotone(n)?;
                    let eq = equality(cli);
                    check_relations_with(n, |r| {
                        quads.iter().all(|q| {
                            let a = q.act_word(&r.lhs).expect("monotone");
                            let b = q.act_word(&r.rhs).expect("monotone");
                            match eq {
                                Equality::Strict => a == b,
                                Equality::Rotational => a.equal_up_to_rotation(&b),
                            }
                        })
                    })
                }
            };
            write!(out, "{report}")?;
            if !report.all_hold() {
                return Err(Failure::Check);
            }
        }
        Command::EnumerateTrees { count_only } => {
            let trees = enumerate_trees(need_n(cli)?)?;
            if *count_only {
                writeln!(out, "{}", trees.len())?;
            } else {
                for (i, t) in trees.iter().enumerate() {
                    match cli.format {
                        Format::Text => {
                            if i > 0 {
                                writeln!(out)?;
                            }
                            write!(out, "{t}")?;
                        }
                        _ => emit_tree(out, cli, t)?,
                    }
                }
            }
        }
        Command::EnumerateQuads => {
            let quads = enumerate_monotone(need_n(cli)?)?;
            let classes: std::collections::BTreeSet<_> = quads.iter().map(Quadrangulation::rotation_key).collect();
            writeln!(out, "strict {}", quads.len())?;
            writeln!(out, "rotational {}", classes.len())?;
        }
        Command::Membership { word, input } => {
            let c = TreeLikeCovering::parse(&read_input(input)?)?;
            let w = FreeWord::parse(word, rank_of(cli, c.n())?)?;
            writeln!(out, "{}", c.membership(&w)?)?;
        }
        Command::Generators { input } => {
            let c = TreeLikeCovering::parse(&read_input(input)?)?;
            rank_of(cli, c.n())?;
            for g in c.generators() {
                writeln!(out, "{g}")?;
            }
        }
        Command::Fold { input } => {
            let n = need_n(cli)?;
            let text = read_input(input)?;
            let mut gens = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                gens.push(FreeWord::parse(line, n).map_err(|e| match e {
                    Error::Parse { token, reason, .. } => Error::Parse {
                        line: i + 1,
                        token,
                        reason,
                    },
                    other => other,
                })?);
            }
            write!(out, "{}", fold(&gens, n)?)?;
        }
        Command::VerifyCoveringAction { word, input } => {
            let c = TreeLikeCovering::parse(&read_input(input)?)?;
            let w = BraidWord::parse(word, rank_of(cli, c.n())?)?;
            let report = verify_act_theorem(&w, &c)?;
            write!(out, "{report}")?;
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
        Command::ConjectureProbe { max_len } => {
            let n = need_n(cli)?;
            let opts = ProbeOptions {
                orbit: orbit_options(cli, true)?,
                ..Default::default()
            };
            write!(out, "{}", conjecture_probe(n, *max_len, &opts)?)?;
        }
        Command::ExportDot { kind, input } => {
            let text = read_input(input)?;
            let dot = match kind {
                Kind::Tree => LabeledTree::parse(&text)?.to_dot(),
                Kind::Quad => Quadrangulation::parse(&text)?.to_dot(),
                Kind::Cover => TreeLikeCovering::parse(&text)?.to_dot(),
            };
            write!(out, "{dot}")?;
        }
        Command::RandomCheck { trials, max_word } => {
            let n = need_n(cli)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let mut failures = 0;
            for _ in 0..*trials {
                let t = LabeledTree::random(n, &mut rng);
                let q = Quadrangulation::from_tree(&t);
                let len = rng.gen_range(0..=*max_word);
                let w = BraidWord::random(n, len, &mut rng);
                let compatible = q.act_word(&w)?.to_tree() == q.to_tree().act_word(&w);
                let c = TreeLikeCovering::random(n, &mut rng);
                let covering_ok = verify_act_theorem(&w, &c)?.passed();
                if !(compatible && covering_ok) {
                    failures += 1;
                    writeln!(out, "FAIL {w}")?;
                }
            }
            writeln!(out, "{} trials, {failures} failures", trials)?;
            if failures > 0 {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(e) => {
            eprintln!("bcn: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
