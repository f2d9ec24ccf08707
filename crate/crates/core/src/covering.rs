//! Tree-like coverings of the rose with `N` petals and the subgroups of
//! `F_N` they encode.
//!
//! In a tree-like covering every circuit has length 1 or 2 and each label
//! has exactly one circuit of length 2, so the permutation of the `N+1`
//! sheets attached to `s_k` is a single transposition, and the transpositions
//! form a spanning tree. That is all a [`TreeLikeCovering`] stores.
//!
//! [`fold`] is an independent subgroup-graph folding used to cross-check
//! membership and the generator families.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::Rng;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free_group::{FreeWord, Letter};
use crate::tree::LabeledTree;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeLikeCovering {
    /// `transpositions[k]` is the sorted pair of sheets swapped by `s_k`.
    transpositions: Vec<[usize; 2]>,
    base: usize,
}

impl TreeLikeCovering {
    pub fn new(transpositions: Vec<[usize; 2]>, base: usize) -> Result<Self> {
        let n = transpositions.len();
        if base > n {
            return Err(Error::InvalidCovering(format!("base sheet {base} outside 0..={n}")));
        }
        // spanning-tree check shared with trees; the pair order is normalized there
        let t =
            LabeledTree::from_edges(transpositions, Some(base)).map_err(|e| Error::InvalidCovering(e.to_string()))?;
        Ok(TreeLikeCovering {
            transpositions: t.edges().to_vec(),
            base,
        })
    }

    /// Every transposition moves sheet 0.
    pub fn bush(n: usize) -> Self {
        TreeLikeCovering {
            transpositions: (1..=n).map(|v| [0, v]).collect(),
            base: 0,
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let t = LabeledTree::random(n, rng);
        let base = rng.gen_range(0..=n);
        TreeLikeCovering {
            transpositions: t.edges().to_vec(),
            base,
        }
    }

    pub fn n(&self) -> usize {
        self.transpositions.len()
    }

    pub fn sheet_count(&self) -> usize {
        self.n() + 1
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn transpositions(&self) -> &[[usize; 2]] {
        &self.transpositions
    }

    /// Image of `sheet` under the permutation attached to label `k`.
    pub fn step(&self, sheet: usize, k: usize) -> usize {
        let [a, b] = self.transpositions[k];
        if sheet == a {
            b
        } else if sheet == b {
            a
        } else {
            sheet
        }
    }

    /// Endpoint of the lift of `w` starting at the base sheet.
    pub fn trace(&self, w: &FreeWord) -> Result<usize> {
        if w.rank() != self.n() {
            return Err(Error::RankMismatch {
                left: self.n(),
                right: w.rank(),
            });
        }
        Ok(w.letters()
            .iter()
            .fold(self.base, |s, l| self.step(s, l.generator as usize)))
    }

    pub fn membership(&self, w: &FreeWord) -> Result<bool> {
        Ok(self.trace(w)? == self.base)
    }

    /// The tree whose edge `k` joins the sheets swapped by `s_k`, rooted at the base.
    pub fn to_tree(&self) -> LabeledTree {
        LabeledTree::from_edges(self.transpositions.clone(), Some(self.base))
            .expect("transpositions form a spanning tree")
    }

    pub fn from_tree(t: &LabeledTree) -> Result<Self> {
        let base = t.root().ok_or(Error::MissingRoot)?;
        Ok(TreeLikeCovering {
            transpositions: t.edges().to_vec(),
            base,
        })
    }

    /// Paths from the base: for each sheet, the labels along the tree path
    /// and the label of its last edge.
    fn base_paths(&self) -> Vec<(Vec<u32>, Option<usize>)> {
        let n = self.n();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
        for (k, &[a, b]) in self.transpositions.iter().enumerate() {
            adj[a].push((b, k));
            adj[b].push((a, k));
        }
        let mut paths: Vec<Option<(Vec<u32>, Option<usize>)>> = vec![None; n + 1];
        paths[self.base] = Some((Vec::new(), None));
        let mut queue = VecDeque::from([self.base]);
        while let Some(v) = queue.pop_front() {
            let here = paths[v].as_ref().unwrap().0.clone();
            for &(w, k) in &adj[v] {
                if paths[w].is_none() {
                    let mut p = here.clone();
                    p.push(k as u32);
                    paths[w] = Some((p, Some(k)));
                    queue.push_back(w);
                }
            }
        }
        paths.into_iter().map(Option::unwrap).collect()
    }

    /// A free basis of the subgroup, of size `N²`.
    ///
    /// For each sheet `v` with tree path `τ` from the base: `τ s_e τ⁻¹` for
    /// every label `e` whose transposition does not touch `v` (a loop at `v`),
    /// and `τ s_e² τ⁻¹` for every `e` touching `v` other than the edge `τ`
    /// arrived by. Sorted by sheet, then label.
    pub fn generators(&self) -> Vec<FreeWord> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * n);
        for (v, (path, parent)) in self.base_paths().into_iter().enumerate() {
            let tau = path.iter().map(|&k| Letter::pos(k));
            let tau_inv = path.iter().rev().map(|&k| Letter::neg(k));
            for e in 0..n {
                let touches = self.transpositions[e].contains(&v);
                let middle: &[Letter] = &[Letter::pos(e as u32), Letter::pos(e as u32)];
                let middle = match (touches, parent == Some(e)) {
                    (false, _) => &middle[..1],
                    (true, false) => middle,
                    (true, true) => continue,
                };
                let raw = tau.clone().chain(middle.iter().copied()).chain(tau_inv.clone());
                out.push(FreeWord::reduce(raw, n).expect("labels below rank"));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<TreeLikeCovering> {
        let mut base = None;
        let mut pairs: Vec<(usize, [usize; 2])> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(lineno, line, "expected `base: <sheet>` or `<k>: <a> <b>`"))?;
            let head = head.trim();
            let nums: Vec<usize> = rest
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::parse(lineno, t, "sheet must be an integer"))
                })
                .collect::<Result<_>>()?;
            if head == "base" {
                if nums.len() != 1 {
                    return Err(Error::parse(lineno, rest.trim(), "expected one base sheet"));
                }
                if base.replace(nums[0]).is_some() {
                    return Err(Error::parse(lineno, head, "duplicate base line"));
                }
                continue;
            }
            let k: usize = head
                .parse()
                .map_err(|_| Error::parse(lineno, head, "label must be an integer"))?;
            if nums.len() != 2 {
                return Err(Error::parse(lineno, rest.trim(), "expected two sheets"));
            }
            pairs.push((k, [nums[0], nums[1]]));
        }
        let base = base.ok_or_else(|| Error::parse(1, "", "missing `base:` line"))?;
        let n = pairs.len();
        let mut transpositions = vec![None; n];
        for (k, pair) in pairs {
            if k >= n {
                return Err(Error::InvalidCovering(format!("label {k} out of range 0..{n}")));
            }
            if transpositions[k].replace(pair).is_some() {
                return Err(Error::InvalidCovering(format!("label {k} listed twice")));
            }
        }
        TreeLikeCovering::new(transpositions.into_iter().map(Option::unwrap).collect(), base)
    }

    /// The covering graph itself: one `s_k`-edge out of every sheet, so a
    /// loop on each sheet away from the transposition and a double edge on it.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph covering {\n");
        for v in 0..self.sheet_count() {
            let shape = if v == self.base { "doublecircle" } else { "circle" };
            s.push_str(&format!("  {v} [shape={shape}];\n"));
        }
        for k in 0..self.n() {
            for v in 0..self.sheet_count() {
                s.push_str(&format!("  {v} -> {} [label=\"s{k}\"];\n", self.step(v, k)));
            }
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for TreeLikeCovering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "base: {}", self.base)?;
        for (k, [a, b]) in self.transpositions.iter().enumerate() {
            writeln!(f, "{k}: {a} {b}")?;
        }
        Ok(())
    }
}

pub fn tree_from_covering(c: &TreeLikeCovering) -> LabeledTree {
    c.to_tree()
}

pub fn covering_from_tree(t: &LabeledTree) -> Result<TreeLikeCovering> {
    TreeLikeCovering::from_tree(t)
}

/// The base sheet is kept: tree rewrites never remove vertices.
pub fn act_on_covering(w: &BraidWord, c: &TreeLikeCovering) -> Result<TreeLikeCovering> {
    if w.rank() != c.n() {
        return Err(Error::RankMismatch {
            left: c.n(),
            right: w.rank(),
        });
    }
    TreeLikeCovering::from_tree(&c.to_tree().act_word(w))
}

#[derive(Debug, Clone)]
pub struct GeneratorCheck {
    pub generator: FreeWord,
    pub image: FreeWord,
    pub member: bool,
}

/// Whether `w` maps every generator of the subgroup of `c` into the
/// subgroup of the acted covering.
#[derive(Debug, Clone)]
pub struct ActTheoremReport {
    pub word: BraidWord,
    pub acted: TreeLikeCovering,
    pub checks: Vec<GeneratorCheck>,
}

impl ActTheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.member)
    }
}

impl fmt::Display for ActTheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "word: {}", self.word)?;
        write!(f, "{}", self.acted)?;
        for c in &self.checks {
            writeln!(
                f,
                "{} {} -> {}",
                if c.member { "PASS" } else { "FAIL" },
                c.generator,
                c.image
            )?;
        }
        writeln!(
            f,
            "{}",
            if self.passed() {
                "theorem holds"
            } else {
                "theorem FAILS"
            }
        )
    }
}

pub fn verify_act_theorem(w: &BraidWord, c: &TreeLikeCovering) -> Result<ActTheoremReport> {
    let acted = act_on_covering(w, c)?;
    let phi = w.to_automorphism();
    let checks = c
        .generators()
        .into_iter()
        .map(|g| {
            let image = phi.apply(&g)?;
            let member = acted.membership(&image)?;
            Ok(GeneratorCheck {
                generator: g,
                image,
                member,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ActTheoremReport {
        word: w.clone(),
        acted,
        checks,
    })
}

/// A folded subgroup graph: deterministic, at most one `s_k`-edge in and
/// out of every vertex. Vertex 0 is the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedGraph {
    rank: usize,
    /// `out[v][k]` is the head of the `s_k`-edge leaving `v`.
    out: Vec<Vec<Option<usize>>>,
    inc: Vec<Vec<Option<usize>>>,
}

struct Folder {
    rank: usize,
    parent: Vec<usize>,
    out: Vec<HashMap<usize, usize>>,
    inc: Vec<HashMap<usize, usize>>,
}

impl Folder {
    fn new(rank: usize) -> Self {
        let mut f = Folder {
            rank,
            parent: Vec::new(),
            out: Vec::new(),
            inc: Vec::new(),
        };
        f.vertex();
        f
    }

    fn vertex(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.out.push(HashMap::new());
        self.inc.push(HashMap::new());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn edge(&mut self, u: usize, k: usize, v: usize) {
        let (u, v) = (self.find(u), self.find(v));
        let mut pending = Vec::new();
        match self.out[u].get(&k) {
            Some(&w) => pending.push((v, w)),
            None => {
                self.out[u].insert(k, v);
            }
        }
        match self.inc[v].get(&k) {
            Some(&w) => pending.push((u, w)),
            None => {
                self.inc[v].insert(k, u);
            }
        }
        self.merge_all(pending);
    }

    fn merge_all(&mut self, mut pending: Vec<(usize, usize)>) {
        while let Some((a, b)) = pending.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            // keep the smaller id so the base stays 0
            let (keep, gone) = (a.min(b), a.max(b));
            self.parent[gone] = keep;
            for (k, t) in std::mem::take(&mut self.out[gone]) {
                match self.out[keep].get(&k) {
                    Some(&t2) => pending.push((t, t2)),
                    None => {
                        self.out[keep].insert(k, t);
                    }
                }
            }
            for (k, s) in std::mem::take(&mut self.inc[gone]) {
                match self.inc[keep].get(&k) {
                    Some(&s2) => pending.push((s, s2)),
                    None => {
                        self.inc[keep].insert(k, s);
                    }
                }
            }
        }
    }

    fn finish(mut self) -> FoldedGraph {
        let roots: Vec<usize> = (0..self.parent.len()).filter(|&v| self.find(v) == v).collect();
        let index: HashMap<usize, usize> = roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut out = vec![vec![None; self.rank]; roots.len()];
        let mut inc = vec![vec![None; self.rank]; roots.len()];
        for &r in &roots {
            for (&k, &t) in &self.out[r].clone() {
                let t = self.find(t);
                out[index[&r]][k] = Some(index[&t]);
                inc[index[&t]][k] = Some(index[&r]);
            }
        }
        FoldedGraph {
            rank: self.rank,
            out,
            inc,
        }
    }
}

/// Folds the bouquet of the generator words into the core graph of the
/// subgroup they generate.
pub fn fold(gens: &[FreeWord], rank: usize) -> Result<FoldedGraph> {
    let mut f = Folder::new(rank);
    for g in gens {
        if g.rank() != rank {
            return Err(Error::RankMismatch {
                left: rank,
                right: g.rank(),
            });
        }
        let letters = g.letters();
        let mut cur = 0;
        for (i, l) in letters.iter().enumerate() {
            let next = if i + 1 == letters.len() { 0 } else { f.vertex() };
            let k = l.generator as usize;
            if l.inverse {
                f.edge(next, k, cur);
            } else {
                f.edge(cur, k, next);
            }
            cur = f.find(next);
        }
    }
    Ok(f.finish())
}

impl FoldedGraph {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().flatten().filter(|t| t.is_some()).count()
    }

    /// Rank of the subgroup: `E - V + 1` of the connected folded graph.
    pub fn subgroup_rank(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count()
    }

    /// Every vertex has every label in and out, i.e. the graph is a covering
    /// of the rose; its sheet count is then the subgroup index.
    pub fn is_covering(&self) -> bool {
        self.out
            .iter()
            .chain(self.inc.iter())
            .all(|row| row.iter().all(Option::is_some))
    }

    pub fn index(&self) -> Option<usize> {
        self.is_covering().then(|| self.vertex_count())
    }

    pub fn membership(&self, w: &FreeWord) -> Result<bool> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: w.rank(),
            });
        }
        let mut v = 0;
        for l in w.letters() {
            let table = if l.inverse { &self.inc } else { &self.out };
            match table[v][l.generator as usize] {
                Some(t) => v = t,
                None => return Ok(false),
            }
        }
        Ok(v == 0)
    }
}

impl fmt::Display for FoldedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertex_count())?;
        writeln!(f, "edges: {}", self.edge_count())?;
        writeln!(f, "rank: {}", self.subgroup_rank())?;
        match self.index() {
            Some(i) => writeln!(f, "index: {i}")?,
            None => writeln!(f, "index: infinite")?,
        }
        for (v, row) in self.out.iter().enumerate() {
            for (k, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    writeln!(f, "{v} -s{k}-> {t}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(text: &str, n: usize) -> FreeWord {
        FreeWord::parse(text, n).unwrap()
    }

    #[test]
    fn single_sheet_pair() {
        let c = TreeLikeCovering::new(vec![[1, 0]], 0).unwrap();
        assert_eq!(c.transpositions(), &[[0, 1]]);
        assert_eq!(c.generators(), vec![fw("s0 s0", 1)]);
        assert!(c.membership(&fw("s0 s0", 1)).unwrap());
        assert!(!c.membership(&fw("s0", 1)).unwrap());
        let t = c.to_tree();
        assert_eq!(t.root(), Some(0));
        assert_eq!(TreeLikeCovering::from_tree(&t).unwrap(), c);
    }

    #[test]
    fn membership_examples() {
        let c = TreeLikeCovering::bush(3);
        assert!(c.membership(&FreeWord::identity(3)).unwrap());
        for k in 0..3 {
            assert!(c
                .membership(&FreeWord::from_signed(&[k + 1, k + 1], 3).unwrap())
                .unwrap());
            assert!(!c.membership(&FreeWord::from_signed(&[k + 1], 3).unwrap()).unwrap());
        }
        // from a leaf, s1 is a loop
        let leaf = TreeLikeCovering::new(vec![[0, 1], [0, 2], [0, 3]], 1).unwrap();
        assert!(leaf.membership(&fw("s1", 3)).unwrap());
        assert!(leaf.membership(&fw("s0 s1 s1 s0'", 3)).unwrap());
        assert!(!leaf.membership(&fw("s0 s1 s0'", 3)).unwrap());
    }

    #[test]
    fn bush_generators() {
        let c = TreeLikeCovering::bush(2);
        let gens: Vec<String> = c.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["s0 s0", "s1 s1", "s0 s1 s0'", "s1 s0 s1'"]);
    }

    #[test]
    fn invalid_coverings() {
        assert!(TreeLikeCovering::new(vec![[0, 1], [1, 0]], 0).is_err());
        assert!(TreeLikeCovering::new(vec![[0, 1]], 2).is_err());
        assert!(TreeLikeCovering::parse("0: 0 1\n").is_err());
        assert!(matches!(
            TreeLikeCovering::parse("base: 0\n0: 0 x\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let c = TreeLikeCovering::new(vec![[0, 2], [1, 2]], 1).unwrap();
        assert_eq!(TreeLikeCovering::parse(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn fold_examples() {
        let g = fold(&[fw("s0 s0", 1)], 1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.index(), Some(2));
        assert_eq!(g.subgroup_rank(), 1);
        let trivial = fold(&[], 2).unwrap();
        assert!(trivial.membership(&FreeWord::identity(2)).unwrap());
        assert!(!trivial.membership(&fw("s0", 2)).unwrap());
        assert_eq!(trivial.subgroup_rank(), 0);
        // <s0, s1 s0 s1'> folds to a graph with a hair-free core
        let g = fold(&[fw("s0", 2), fw("s1 s0 s1'", 2)], 2).unwrap();
        assert_eq!(g.subgroup_rank(), 2);
        assert!(g.membership(&fw("s1 s0' s1'", 2)).unwrap());
        assert!(!g.is_covering());
    }

    #[test]
    fn lambda_cycles_bush_labels() {
        let c = TreeLikeCovering::bush(3);
        let w = BraidWord::parse("L", 3).unwrap();
        let d = act_on_covering(&w, &c).unwrap();
        assert_eq!(d.base(), 0);
        assert_eq!(d.transpositions(), &[[0, 3], [0, 1], [0, 2]]);
        assert!(verify_act_theorem(&w, &c).unwrap().passed());
    }
}
