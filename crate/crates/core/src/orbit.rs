//! Orbit enumeration with Schreier transversals, the liftability test and
//! the stabilizer index, plus a heuristic probe of the free-product
//! structure of the group generated by `λ` and `U`.
//!
//! BFS expands states in discovery order and generators in the fixed order
//! of [`BraidGenerator::all`], so every output (element order, transversal
//! words, Schreier generators) is identical for any worker count.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{BraidGenerator, BraidWord};
use crate::error::{Error, Result};
use crate::free_group::FreeAutomorphism;
use crate::quad::Quadrangulation;
use crate::tree::LabeledTree;

pub const DEFAULT_MAX_ORBIT: usize = 1_000_000;

/// Equality used to identify quadrangulations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Equality {
    Strict,
    /// Up to color-preserving rotation of the polygon.
    #[default]
    Rotational,
}

impl fmt::Display for Equality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equality::Strict => "strict",
            Equality::Rotational => "rotational",
        })
    }
}

impl FromStr for Equality {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Equality::Strict),
            "rotational" => Ok(Equality::Rotational),
            other => Err(Error::parse(1, other, "expected `strict` or `rotational`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitOptions {
    pub max_orbit: usize,
    /// Worker threads for frontier expansion; `<= 1` runs sequentially.
    pub jobs: usize,
    pub schreier: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            max_orbit: DEFAULT_MAX_ORBIT,
            jobs: 1,
            schreier: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OrbitResult<S> {
    pub rank: usize,
    /// States in BFS discovery order; index 0 is the start.
    pub elements: Vec<S>,
    /// `transversal[i]` sends the start state to `elements[i]`.
    pub transversal: Vec<BraidWord>,
    /// Words `t_j⁻¹ g t_i` over non-tree closure edges with `g` in
    /// `{λ, u_1, …, u_{N-1}}`, after free cancellation, deduplicated,
    /// trivial ones dropped. Together they generate the start stabilizer.
    pub schreier_generators: Vec<BraidWord>,
}

impl<S> OrbitResult<S> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `size`, then one `element <i> <transversal> :: <state>` line per state
    /// and one `schreier <j> <word>` line per generator.
    pub fn write_text<W: Write>(&self, out: &mut W, render: impl Fn(&S) -> String) -> io::Result<()> {
        writeln!(out, "size {}", self.len())?;
        writeln!(out, "schreier_generators {}", self.schreier_generators.len())?;
        for (i, (s, t)) in self.elements.iter().zip(&self.transversal).enumerate() {
            writeln!(out, "element {i} {t} :: {}", render(s))?;
        }
        for (j, w) in self.schreier_generators.iter().enumerate() {
            writeln!(out, "schreier {j} {w}")?;
        }
        Ok(())
    }

    /// One JSON object per line. Field order: summary
    /// `{kind, rank, size, schreier_generators}`, then elements
    /// `{kind, index, transversal, state}`, then generators `{kind, index, word}`.
    pub fn write_ndjson<W: Write>(&self, out: &mut W, render: impl Fn(&S) -> serde_json::Value) -> io::Result<()> {
        #[derive(Serialize)]
        struct Summary {
            kind: &'static str,
            rank: usize,
            size: usize,
            schreier_generators: usize,
        }
        #[derive(Serialize)]
        struct Element {
            kind: &'static str,
            index: usize,
            transversal: String,
            state: serde_json::Value,
        }
        #[derive(Serialize)]
        struct Generator {
            kind: &'static str,
            index: usize,
            word: String,
        }
        fn line<W: Write, T: Serialize>(out: &mut W, v: &T) -> io::Result<()> {
            writeln!(out, "{}", serde_json::to_string(v).map_err(io::Error::other)?)
        }
        line(
            out,
            &Summary {
                kind: "summary",
                rank: self.rank,
                size: self.len(),
                schreier_generators: self.schreier_generators.len(),
            },
        )?;
        for (i, (s, t)) in self.elements.iter().zip(&self.transversal).enumerate() {
            line(
                out,
                &Element {
                    kind: "element",
                    index: i,
                    transversal: t.to_string(),
                    state: render(s),
                },
            )?;
        }
        for (j, w) in self.schreier_generators.iter().enumerate() {
            line(
                out,
                &Generator {
                    kind: "schreier",
                    index: j,
                    word: w.to_string(),
                },
            )?;
        }
        Ok(())
    }
}

fn is_positive(g: BraidGenerator) -> bool {
    matches!(g, BraidGenerator::Lambda | BraidGenerator::U(_))
}

/// Breadth-first closure of `start` under all generators. `key` decides
/// which states are identified.
pub fn orbit_with<S, K, A, F>(rank: usize, start: S, act: A, key: F, opts: &OrbitOptions) -> Result<OrbitResult<S>>
where
    S: Clone + Send + Sync,
    K: Eq + Hash + Send,
    A: Fn(&S, BraidGenerator) -> S + Sync,
    F: Fn(&S) -> K + Sync,
{
    let gens = BraidGenerator::all(rank);
    let pool = if opts.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.jobs)
                .build()
                .map_err(|e| Error::Guard(format!("cannot start worker pool: {e}")))?,
        )
    } else {
        None
    };
    let mut index: HashMap<K, usize> = HashMap::new();
    index.insert(key(&start), 0);
    let mut elements = vec![start];
    let mut transversal = vec![BraidWord::empty(rank)];
    // closure edges for the positive generators: (from, generator, to)
    let mut edges: Vec<(usize, BraidGenerator, usize)> = Vec::new();
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let expand = |&i: &usize| -> Vec<(S, K)> {
            gens.iter()
                .map(|&g| {
                    let s = act(&elements[i], g);
                    let k = key(&s);
                    (s, k)
                })
                .collect()
        };
        let images: Vec<Vec<(S, K)>> = match &pool {
            Some(p) => p.install(|| frontier.par_iter().map(expand).collect()),
            None => frontier.iter().map(expand).collect(),
        };
        let mut next = Vec::new();
        for (&i, row) in frontier.iter().zip(images) {
            for (&g, (s, k)) in gens.iter().zip(row) {
                let j = match index.get(&k) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        if j >= opts.max_orbit {
                            return Err(Error::Guard(format!(
                                "orbit exceeds the limit of {} states",
                                opts.max_orbit
                            )));
                        }
                        index.insert(k, j);
                        elements.push(s);
                        transversal.push(transversal[i].prepend(g));
                        next.push(j);
                        j
                    }
                };
                if opts.schreier && is_positive(g) {
                    edges.push((i, g, j));
                }
            }
        }
        frontier = next;
    }
    let mut schreier_generators = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, g, j) in edges {
        let w = transversal[j]
            .inverse()
            .concat(&transversal[i].prepend(g))
            .expect("same rank")
            .cancel_adjacent();
        if !w.is_empty() && seen.insert(w.clone()) {
            schreier_generators.push(w);
        }
    }
    Ok(OrbitResult {
        rank,
        elements,
        transversal,
        schreier_generators,
    })
}

/// Orbit of a tree; trees are identified up to vertex renaming (the root,
/// if any, is part of the state).
pub fn tree_orbit(start: &LabeledTree, opts: &OrbitOptions) -> Result<OrbitResult<LabeledTree>> {
    orbit_with(
        start.n(),
        start.clone(),
        |t, g| t.act_generator(g),
        LabeledTree::canonical_form,
        opts,
    )
}

pub fn quad_orbit(
    start: &Quadrangulation,
    equality: Equality,
    opts: &OrbitOptions,
) -> Result<OrbitResult<Quadrangulation>> {
    if !start.is_monotone() {
        return Err(Error::NotMonotone);
    }
    let act = |q: &Quadrangulation, g| q.act_generator(g).expect("monotone states stay monotone");
    match equality {
        Equality::Strict => orbit_with(start.n(), start.clone(), act, |q| q.faces().to_vec(), opts),
        Equality::Rotational => orbit_with(start.n(), start.clone(), act, Quadrangulation::rotation_key, opts),
    }
}

/// `w` lifts through the branched covering iff `inv(w)` fixes the trivial
/// quadrangulation. Meaningful for even rank.
pub fn is_liftable(w: &BraidWord, equality: Equality) -> bool {
    let q0 = Quadrangulation::trivial(w.rank());
    let image = q0.act_word(&w.inv()).expect("trivial quadrangulation is monotone");
    match equality {
        Equality::Strict => image == q0,
        Equality::Rotational => image.equal_up_to_rotation(&q0),
    }
}

/// Index of the liftable subgroup: the orbit size of the trivial quadrangulation.
pub fn stabilizer_index(n: usize, equality: Equality, opts: &OrbitOptions) -> Result<usize> {
    let opts = OrbitOptions {
        schreier: false,
        ..*opts
    };
    Ok(quad_orbit(&Quadrangulation::trivial(n), equality, &opts)?.len())
}

/// `(N+1)^(N-2)`, the number of trees with `N` labeled edges (1 for `N = 1`).
pub fn tree_count(n: usize) -> u64 {
    if n < 2 {
        1
    } else {
        (n as u64 + 1).pow(n as u32 - 2)
    }
}

/// Orbit sizes of the trivial quadrangulation under both equalities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityComparison {
    pub rank: usize,
    pub strict: usize,
    pub rotational: usize,
    pub trees: u64,
}

impl EqualityComparison {
    pub fn agree(&self) -> bool {
        self.strict == self.rotational
    }
}

impl fmt::Display for EqualityComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N={}: strict orbit {}, rotational orbit {}, tree count {}: {}",
            self.rank,
            self.strict,
            self.rotational,
            self.trees,
            if self.agree() { "agree" } else { "disagree" }
        )
    }
}

pub fn compare_equalities(n: usize, opts: &OrbitOptions) -> Result<EqualityComparison> {
    Ok(EqualityComparison {
        rank: n,
        strict: stabilizer_index(n, Equality::Strict, opts)?,
        rotational: stabilizer_index(n, Equality::Rotational, opts)?,
        trees: tree_count(n),
    })
}

/// A syllable of the free product `Z_N * Z`: a power of `λ` or of `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Syllable {
    Lambda(i64),
    U(i64),
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, e) = match *self {
            Syllable::Lambda(e) => ("L", e),
            Syllable::U(e) => ("U", e),
        };
        if e == 1 {
            write!(f, "{name}")
        } else {
            write!(f, "{name}^{e}")
        }
    }
}

fn syllables_to_string(s: &[Syllable]) -> String {
    if s.is_empty() {
        return "1".into();
    }
    s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn syllable_word(rank: usize, s: Syllable) -> BraidWord {
    match s {
        Syllable::Lambda(a) => BraidWord::lambda_power(rank, a),
        Syllable::U(b) if b > 0 => BraidWord::big_u(rank).pow(b as usize),
        Syllable::U(b) => BraidWord::big_u(rank).inverse().pow(b.unsigned_abs() as usize),
    }
}

pub fn syllables_to_word(rank: usize, s: &[Syllable]) -> BraidWord {
    s.iter().fold(BraidWord::empty(rank), |acc, &x| {
        acc.concat(&syllable_word(rank, x)).expect("same rank")
    })
}

/// Composite automorphism of `w`, or `None` once the total image length
/// exceeds `cap` letters.
pub fn automorphism_capped(w: &BraidWord, cap: usize) -> Option<FreeAutomorphism> {
    let rank = w.rank();
    let mut acc = FreeAutomorphism::identity(rank);
    for &g in w.letters() {
        acc = acc.compose(&g.automorphism(rank)).expect("same rank");
        if acc.size() > cap {
            return None;
        }
    }
    Some(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeOptions {
    /// Maximal total image length of an automorphism that is still compared.
    pub image_cap: usize,
    /// At most this many stabilizer generators are tested for expressibility.
    pub max_schreier: usize,
    pub orbit: OrbitOptions,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions {
            image_cap: 200_000,
            max_schreier: 200,
            orbit: OrbitOptions::default(),
        }
    }
}

/// Heuristic evidence about `⟨λ, U⟩`; nothing here is a proof.
#[derive(Debug, Clone, Default)]
pub struct ProbeReport {
    pub rank: usize,
    pub max_len: usize,
    pub words_probed: usize,
    /// Probed words that failed the (rotational) liftability test.
    pub not_liftable: Vec<String>,
    /// Nonempty reduced words whose automorphism is the identity.
    pub identities: Vec<String>,
    /// Distinct reduced words with equal automorphisms.
    pub collisions: Vec<(String, String)>,
    /// Words whose images outgrew the cap; their subtrees were not explored.
    pub skipped_large: usize,
    pub schreier_total: usize,
    pub schreier_tested: usize,
    /// Tested stabilizer generators `s` with `inv(s)` equal to a probed word.
    pub schreier_expressible: Vec<(String, String)>,
    pub schreier_too_large: usize,
}

impl fmt::Display for ProbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "heuristic probe, not a proof")?;
        writeln!(f, "rank {} max_len {}", self.rank, self.max_len)?;
        writeln!(f, "words probed: {}", self.words_probed)?;
        writeln!(f, "words skipped (image cap): {}", self.skipped_large)?;
        writeln!(f, "not liftable: {}", self.not_liftable.len())?;
        for w in &self.not_liftable {
            writeln!(f, "  not liftable: {w}")?;
        }
        writeln!(f, "identity candidates: {}", self.identities.len())?;
        for w in &self.identities {
            writeln!(f, "  identity: {w}")?;
        }
        writeln!(f, "coinciding word pairs: {}", self.collisions.len())?;
        for (a, b) in &self.collisions {
            writeln!(f, "  coincide: {a} = {b}")?;
        }
        writeln!(
            f,
            "stabilizer generators: {} total, {} tested, {} expressible, {} over cap",
            self.schreier_total,
            self.schreier_tested,
            self.schreier_expressible.len(),
            self.schreier_too_large
        )?;
        for (s, w) in &self.schreier_expressible {
            writeln!(f, "  inv({s}) = {w}")?;
        }
        Ok(())
    }
}

/// Enumerates every reduced word of `Z_N * Z` in the syllables `λ^a`
/// (`-N/2 < a <= N/2`, `a != 0`) and `U^b` (`b != 0`) of letter length at
/// most `max_len`, checks liftability, looks for identities and
/// coincidences among their automorphisms, and tries to match the
/// stabilizer generators of the trivial quadrangulation against them.
pub fn conjecture_probe(n: usize, max_len: usize, opts: &ProbeOptions) -> Result<ProbeReport> {
    let mut report = ProbeReport {
        rank: n,
        max_len,
        ..Default::default()
    };
    let half = (n / 2) as i64;
    let lambda_exps: Vec<i64> = (-((n as i64 - 1) / 2)..=half).filter(|&a| a != 0).collect();
    let mut seen: HashMap<FreeAutomorphism, String> = HashMap::new();
    seen.insert(FreeAutomorphism::identity(n), "1".into());

    // depth-first over (syllables, letter length, automorphism)
    let mut stack: Vec<(Vec<Syllable>, usize, FreeAutomorphism)> = vec![(Vec::new(), 0, FreeAutomorphism::identity(n))];
    while let Some((word, len, aut)) = stack.pop() {
        let last_is_lambda = matches!(word.last(), Some(Syllable::Lambda(_)));
        let last_is_u = matches!(word.last(), Some(Syllable::U(_)));
        let mut children = Vec::new();
        if !last_is_lambda && n > 1 {
            children.extend(lambda_exps.iter().map(|&a| Syllable::Lambda(a)));
        }
        if !last_is_u && n > 1 {
            for b in 1..=max_len as i64 {
                children.push(Syllable::U(b));
                children.push(Syllable::U(-b));
            }
        }
        for syl in children.into_iter().rev() {
            let cost = match syl {
                Syllable::Lambda(a) | Syllable::U(a) => a.unsigned_abs() as usize,
            };
            if len + cost > max_len {
                continue;
            }
            let mut next = word.clone();
            next.push(syl);
            let text = syllables_to_string(&next);
            report.words_probed += 1;
            let bw = syllables_to_word(n, &next);
            if !is_liftable(&bw, Equality::Rotational) {
                report.not_liftable.push(text.clone());
            }
            let Some(step) = automorphism_capped(&syllable_word(n, syl), opts.image_cap) else {
                report.skipped_large += 1;
                continue;
            };
            let next_aut = aut.compose(&step).expect("same rank");
            if next_aut.size() > opts.image_cap {
                report.skipped_large += 1;
                continue;
            }
            if next_aut.is_identity() {
                report.identities.push(text.clone());
            } else if let Some(prev) = seen.get(&next_aut) {
                report.collisions.push((prev.clone(), text.clone()));
            } else {
                seen.insert(next_aut.clone(), text.clone());
            }
            stack.push((next, len + cost, next_aut));
        }
    }
    report.identities.sort();
    report.collisions.sort();
    report.not_liftable.sort();

    let orbit = quad_orbit(&Quadrangulation::trivial(n), Equality::Rotational, &opts.orbit)?;
    report.schreier_total = orbit.schreier_generators.len();
    for s in orbit.schreier_generators.iter().take(opts.max_schreier) {
        report.schreier_tested += 1;
        match automorphism_capped(&s.inv(), opts.image_cap) {
            None => report.schreier_too_large += 1,
            Some(a) => {
                if let Some(w) = seen.get(&a) {
                    report.schreier_expressible.push((s.to_string(), w.clone()));
                }
            }
        }
    }
    Ok(report)
}

/// One-line rendering used by orbit reports.
pub fn tree_line(t: &LabeledTree) -> String {
    t.canonical_form().to_string()
}

pub fn quad_line(q: &Quadrangulation) -> String {
    q.faces()
        .iter()
        .map(|f| format!("{} {} {} {}", f[0], f[1], f[2], f[3]))
        .collect::<Vec<_>>()
        .join(" | ")
}

pub fn tree_json(t: &LabeledTree) -> serde_json::Value {
    serde_json::json!({ "edges": t.edges(), "root": t.root() })
}

pub fn quad_json(q: &Quadrangulation) -> serde_json::Value {
    serde_json::json!({ "faces": q.faces() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tree_orbits() {
        let opts = OrbitOptions::default();
        for (n, size) in [(1, 1), (2, 1), (3, 4), (4, 25)] {
            let o = tree_orbit(&LabeledTree::bush(n), &opts).unwrap();
            assert_eq!(o.len(), size, "n={n}");
        }
    }

    #[test]
    fn transversal_and_schreier_words_check_out() {
        let start = LabeledTree::bush(4);
        let o = tree_orbit(&start, &OrbitOptions::default()).unwrap();
        for (s, t) in o.elements.iter().zip(&o.transversal) {
            assert_eq!(&start.act_word(t), s);
        }
        assert!(!o.schreier_generators.is_empty());
        for w in &o.schreier_generators {
            assert_eq!(start.act_word(w), start);
        }
    }

    #[test]
    fn guard_triggers() {
        let opts = OrbitOptions {
            max_orbit: 10,
            ..Default::default()
        };
        assert!(matches!(tree_orbit(&LabeledTree::bush(4), &opts), Err(Error::Guard(_))));
    }

    #[test]
    fn liftability_examples() {
        for n in [2, 4, 6] {
            assert!(is_liftable(&BraidWord::empty(n), Equality::Rotational));
            assert!(is_liftable(&BraidWord::parse("L", n).unwrap(), Equality::Rotational));
            assert!(is_liftable(&BraidWord::big_u(n), Equality::Rotational));
        }
        assert!(!is_liftable(&BraidWord::parse("u1", 4).unwrap(), Equality::Rotational));
    }

    #[test]
    fn index_small() {
        let opts = OrbitOptions::default();
        assert_eq!(stabilizer_index(2, Equality::Rotational, &opts).unwrap(), 1);
        assert_eq!(stabilizer_index(4, Equality::Rotational, &opts).unwrap(), 25);
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = tree_orbit(&LabeledTree::bush(5), &OrbitOptions::default()).unwrap();
        let par = tree_orbit(
            &LabeledTree::bush(5),
            &OrbitOptions {
                jobs: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq.transversal, par.transversal);
        assert_eq!(seq.schreier_generators, par.schreier_generators);
    }

    #[test]
    fn probe_rank_two() {
        let r = conjecture_probe(2, 6, &ProbeOptions::default()).unwrap();
        assert!(r.words_probed > 0);
        assert!(r.not_liftable.is_empty());
        assert!(r.identities.is_empty(), "{r}");
    }

    #[test]
    fn equality_parse() {
        assert_eq!("strict".parse::<Equality>().unwrap(), Equality::Strict);
        assert!("loose".parse::<Equality>().is_err());
    }
}
