//! Trees with `N` edges labeled `0..N`, the braid-cyclic action on them,
//! the rooted complexity function and the constructive transitivity
//! algorithm that drives any tree to the bush tree with `u`-generators only.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::Rng;

use crate::braid::{BraidGenerator, BraidWord};
use crate::error::{Error, Result};

/// Default ceiling on the rank for full enumeration: `8^6 = 262144` trees at `N = 7`.
pub const MAX_ENUMERATION_RANK: usize = 7;

/// Abstract encoding of an edge-labeled tree: the sorted multiset of
/// per-vertex incident-label sets, the root's set flagged.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTree(pub Vec<(Vec<u32>, bool)>);

impl fmt::Display for CanonicalTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (set, root)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *root {
                write!(f, "*")?;
            }
            write!(f, "{{")?;
            for (j, l) in set.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// A tree on vertices `0..=N` whose edge with label `k` is `edges[k]`.
///
/// Vertex ids carry no meaning; equality and hashing go through
/// [`LabeledTree::canonical_form`].
#[derive(Debug, Clone)]
pub struct LabeledTree {
    edges: Vec<[usize; 2]>,
    root: Option<usize>,
}

impl PartialEq for LabeledTree {
    fn eq(&self, other: &Self) -> bool {
        self.edges.len() == other.edges.len() && self.canonical_form() == other.canonical_form()
    }
}

impl Eq for LabeledTree {}

impl Hash for LabeledTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical_form().hash(state);
    }
}

impl LabeledTree {
    /// Validates that `edges` (indexed by label) form a spanning tree on `0..=N`.
    pub fn from_edges(edges: Vec<[usize; 2]>, root: Option<usize>) -> Result<Self> {
        let n = edges.len();
        if n == 0 {
            return Err(Error::InvalidTree("a tree needs at least one edge".into()));
        }
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (label, &[a, b]) in edges.iter().enumerate() {
            if a > n || b > n {
                return Err(Error::InvalidTree(format!(
                    "edge {label} uses a vertex outside 0..={n}"
                )));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::InvalidTree(format!("edge {label} closes a cycle")));
            }
            parent[ra] = rb;
        }
        if let Some(r) = root {
            if r > n {
                return Err(Error::InvalidTree(format!("root {r} is not a vertex")));
            }
        }
        let edges = edges.into_iter().map(|[a, b]| [a.min(b), a.max(b)]).collect();
        Ok(LabeledTree { edges, root })
    }

    /// All `N` edges attached to one vertex (vertex 0).
    pub fn bush(n: usize) -> Self {
        LabeledTree {
            edges: (0..n).map(|i| [0, i + 1]).collect(),
            root: None,
        }
    }

    /// The line tree with edge `i` joining vertices `i` and `i + 1`.
    pub fn path(n: usize) -> Self {
        LabeledTree {
            edges: (0..n).map(|i| [i, i + 1]).collect(),
            root: None,
        }
    }

    /// Rebuilds a tree from its canonical encoding: vertex `i` is the `i`-th set.
    pub fn from_canonical(c: &CanonicalTree) -> Result<Self> {
        let n = c.0.len().saturating_sub(1);
        let mut ends: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut root = None;
        for (v, (set, is_root)) in c.0.iter().enumerate() {
            if *is_root {
                root = Some(v);
            }
            for &l in set {
                let l = l as usize;
                if l >= n {
                    return Err(Error::InvalidTree(format!("label {l} out of range")));
                }
                ends[l].push(v);
            }
        }
        let edges = ends
            .into_iter()
            .enumerate()
            .map(|(l, e)| {
                if e.len() == 2 {
                    Ok([e[0], e[1]])
                } else {
                    Err(Error::InvalidTree(format!("label {l} occurs {} times", e.len())))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        LabeledTree::from_edges(edges, root)
    }

    /// Uniformly random edge-labeled tree, rooted at a uniformly random vertex.
    ///
    /// A uniform Prüfer sequence gives a uniform vertex-labeled tree; rooting
    /// it at vertex 0 and labeling each edge by `child - 1` is a bijection
    /// onto rooted edge-labeled trees.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let seq: Vec<usize> = (0..n.saturating_sub(1)).map(|_| rng.gen_range(0..=n)).collect();
        tree_from_pruefer(n, &seq)
    }

    pub fn n(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.edges.len() + 1
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn edge(&self, label: usize) -> [usize; 2] {
        self.edges[label]
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn with_root(mut self, root: Option<usize>) -> Self {
        self.root = root;
        self
    }

    /// Sorted incident labels of every vertex.
    pub fn incident_sets(&self) -> Vec<Vec<u32>> {
        let mut sets = vec![Vec::new(); self.vertex_count()];
        for (l, &[a, b]) in self.edges.iter().enumerate() {
            sets[a].push(l as u32);
            sets[b].push(l as u32);
        }
        sets
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn canonical_form(&self) -> CanonicalTree {
        let mut sets: Vec<(Vec<u32>, bool)> = self
            .incident_sets()
            .into_iter()
            .enumerate()
            .map(|(v, s)| (s, Some(v) == self.root))
            .collect();
        sets.sort_unstable();
        CanonicalTree(sets)
    }

    /// Unrooted canonical form, for comparing trees regardless of the marked vertex.
    pub fn shape_key(&self) -> CanonicalTree {
        let mut sets = self.incident_sets();
        sets.sort_unstable();
        CanonicalTree(sets.into_iter().map(|s| (s, false)).collect())
    }

    pub fn is_bush(&self) -> bool {
        (0..self.vertex_count()).any(|v| self.degree(v) == self.n())
    }

    fn shared_vertex(&self, a: usize, b: usize) -> Option<(usize, usize, usize)> {
        let [p, q] = self.edges[a];
        let [r, s] = self.edges[b];
        // returns (shared, other end of a, other end of b)
        if p == r {
            Some((p, q, s))
        } else if p == s {
            Some((p, q, r))
        } else if q == r {
            Some((q, p, s))
        } else if q == s {
            Some((q, p, r))
        } else {
            None
        }
    }

    pub fn edges_adjacent(&self, a: usize, b: usize) -> bool {
        self.shared_vertex(a, b).is_some()
    }

    /// Applies one generator. Vertices are never created or deleted, so the
    /// root is carried along unchanged.
    pub fn act_generator(&self, g: BraidGenerator) -> LabeledTree {
        let n = self.n();
        assert!(g.is_valid(n), "generator {g} invalid for rank {n}");
        match g {
            BraidGenerator::Lambda => {
                let mut edges = vec![[0, 0]; n];
                for (l, &e) in self.edges.iter().enumerate() {
                    edges[(l + 1) % n] = e;
                }
                LabeledTree { edges, root: self.root }
            }
            BraidGenerator::LambdaInv => {
                let mut edges = vec![[0, 0]; n];
                for (l, &e) in self.edges.iter().enumerate() {
                    edges[(l + n - 1) % n] = e;
                }
                LabeledTree { edges, root: self.root }
            }
            BraidGenerator::U(k) => {
                let mut edges = self.edges.clone();
                match self.shared_vertex(k - 1, k) {
                    None => edges.swap(k - 1, k),
                    Some((_a, b, c)) => {
                        // k-1 = AB, k = AC  ->  k = AB, k-1 = BC
                        edges[k] = self.edges[k - 1];
                        edges[k - 1] = [b.min(c), b.max(c)];
                    }
                }
                LabeledTree { edges, root: self.root }
            }
            BraidGenerator::UInv(k) => {
                if self.edges_adjacent(k - 1, k) {
                    // the adjacent rewrite has order 3
                    self.act_generator(BraidGenerator::U(k))
                        .act_generator(BraidGenerator::U(k))
                } else {
                    self.act_generator(BraidGenerator::U(k))
                }
            }
        }
    }

    /// Left action of a word: the rightmost letter acts first.
    pub fn act_word(&self, w: &BraidWord) -> LabeledTree {
        assert_eq!(w.rank(), self.n(), "rank mismatch");
        w.letters().iter().rev().fold(self.clone(), |t, &g| t.act_generator(g))
    }

    /// Depth of every vertex from `root` and the parent edge label of each
    /// non-root vertex.
    fn orient(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let nv = self.vertex_count();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for (l, &[a, b]) in self.edges.iter().enumerate() {
            adj[a].push((b, l));
            adj[b].push((a, l));
        }
        let mut depth = vec![usize::MAX; nv];
        let mut parent_edge = vec![None; nv];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, l) in &adj[v] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent_edge[w] = Some(l);
                    queue.push_back(w);
                }
            }
        }
        (depth, parent_edge)
    }

    /// Sum of the lengths of all downward paths from the root, i.e. the sum
    /// of the depths of all vertices.
    pub fn complexity(&self) -> Result<usize> {
        let root = self.root.ok_or(Error::MissingRoot)?;
        Ok(self.complexity_from(root))
    }

    pub fn complexity_from(&self, root: usize) -> usize {
        self.orient(root).0.iter().sum()
    }

    /// Relationship of edges `k - 1` and `k` relative to `root`.
    pub fn edge_relation(&self, root: usize, k: usize) -> EdgeRelation {
        let view = RootedView::new(self, root);
        let (a, b) = (k - 1, k);
        if !self.edges_adjacent(a, b) {
            EdgeRelation::NonAdjacent
        } else if view.upper[a] == view.upper[b] {
            EdgeRelation::Brothers
        } else if view.upper[b] == view.lower[a] {
            EdgeRelation::LowerIsParent
        } else {
            EdgeRelation::UpperIsParent
        }
    }

    /// The vertex whose incident-label set is lexicographically smallest.
    pub fn default_root(&self) -> usize {
        let sets = self.incident_sets();
        (0..sets.len()).min_by(|&a, &b| sets[a].cmp(&sets[b])).unwrap()
    }

    /// A word in `u`-generators only taking this tree to the bush tree.
    pub fn canonicalize_to_bush(&self) -> BraidWord {
        if self.is_bush() {
            return BraidWord::empty(self.n());
        }
        self.bush_path_from(self.default_root()).word
    }

    /// Runs the transitivity algorithm from an explicit root, recording the
    /// complexity before the first step and after every decreasing step.
    pub fn bush_path_from(&self, root: usize) -> BushPath {
        let n = self.n();
        let mut tree = self.clone().with_root(Some(root));
        let mut steps: Vec<BraidGenerator> = Vec::new();
        let mut current = tree.complexity_from(root);
        let mut complexities = vec![current];
        let mut swaps_since_decrease = 0usize;
        while current > n {
            let (g, decreasing) = next_move(&tree, root);
            tree = tree.act_generator(g);
            steps.push(g);
            let c = tree.complexity_from(root);
            if decreasing {
                assert!(c < current, "decreasing move {g} did not decrease complexity");
                complexities.push(c);
                swaps_since_decrease = 0;
            } else {
                assert_eq!(c, current, "swap move {g} changed complexity");
                swaps_since_decrease += 1;
                assert!(swaps_since_decrease <= n, "no decreasing move within {n} swaps");
            }
            current = c;
        }
        steps.reverse();
        BushPath {
            word: BraidWord::new(n, steps).unwrap(),
            complexities,
        }
    }

    /// Parses one edge per line, `<label>: <a> <b>`, plus an optional
    /// `root: <v>` line. Vertex tokens are arbitrary strings.
    pub fn parse(text: &str) -> Result<LabeledTree> {
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut intern = |tok: &str| {
            let next = ids.len();
            *ids.entry(tok.to_string()).or_insert(next)
        };
        let mut raw: Vec<(usize, usize, [usize; 2])> = Vec::new();
        let mut root_tok: Option<(usize, String)> = None;
        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(lineno, line, "expected `<label>: <a> <b>`"))?;
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if head.trim() == "root" {
                if toks.len() != 1 {
                    return Err(Error::parse(lineno, rest.trim(), "expected one root vertex"));
                }
                root_tok = Some((lineno, toks[0].to_string()));
                continue;
            }
            let label: usize = head
                .trim()
                .parse()
                .map_err(|_| Error::parse(lineno, head.trim(), "edge label must be an integer"))?;
            if toks.len() != 2 {
                return Err(Error::parse(lineno, rest.trim(), "expected two endpoints"));
            }
            let a = intern(toks[0]);
            let b = intern(toks[1]);
            raw.push((lineno, label, [a, b]));
        }
        let n = raw.len();
        let mut edges: Vec<Option<[usize; 2]>> = vec![None; n];
        for &(lineno, label, e) in &raw {
            if label >= n {
                return Err(Error::parse(
                    lineno,
                    label.to_string(),
                    format!("label out of range 0..{n}"),
                ));
            }
            if edges[label].replace(e).is_some() {
                return Err(Error::parse(lineno, label.to_string(), "duplicate label"));
            }
        }
        let root = match root_tok {
            Some((lineno, tok)) => Some(
                *ids.get(&tok)
                    .ok_or_else(|| Error::parse(lineno, tok.clone(), "root is not a tree vertex"))?,
            ),
            None => None,
        };
        if ids.len() != n + 1 {
            return Err(Error::InvalidTree(format!(
                "{n} edges need {} vertices, found {}",
                n + 1,
                ids.len()
            )));
        }
        LabeledTree::from_edges(edges.into_iter().map(Option::unwrap).collect(), root)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph tree {\n");
        for v in 0..self.vertex_count() {
            if Some(v) == self.root {
                s.push_str(&format!("  v{v} [label=\"{v}\", shape=doublecircle];\n"));
            } else {
                s.push_str(&format!("  v{v} [label=\"{v}\", shape=circle];\n"));
            }
        }
        for (l, [a, b]) in self.edges.iter().enumerate() {
            s.push_str(&format!("  v{a} -- v{b} [label=\"{l}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, [a, b]) in self.edges.iter().enumerate() {
            writeln!(f, "{l}: {a} {b}")?;
        }
        if let Some(r) = self.root {
            writeln!(f, "root: {r}")?;
        }
        Ok(())
    }
}

/// How edges `k - 1` and `k` sit relative to a root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRelation {
    NonAdjacent,
    /// Same upper end.
    Brothers,
    /// Edge `k - 1` is the parent of edge `k`.
    LowerIsParent,
    /// Edge `k` is the parent of edge `k - 1`.
    UpperIsParent,
}

impl EdgeRelation {
    /// How `u_k` (or `u_k⁻¹` when `inverse`) changes the rooted complexity,
    /// when the relation alone decides it: unchanged for non-adjacent edges,
    /// up for brothers, down when the generator pulls the child edge up to
    /// hang from the root side of its parent.
    pub fn complexity_change(self, inverse: bool) -> Option<Ordering> {
        match (self, inverse) {
            (EdgeRelation::NonAdjacent, _) => Some(Ordering::Equal),
            (EdgeRelation::Brothers, _) => Some(Ordering::Greater),
            (EdgeRelation::LowerIsParent, false) | (EdgeRelation::UpperIsParent, true) => Some(Ordering::Less),
            _ => None,
        }
    }
}

/// Output of the transitivity algorithm.
#[derive(Debug, Clone)]
pub struct BushPath {
    /// Acting with this word yields the bush tree.
    pub word: BraidWord,
    /// Complexity at the start and after each outer iteration.
    pub complexities: Vec<usize>,
}

struct RootedView {
    upper: Vec<usize>,
    lower: Vec<usize>,
    children: Vec<BTreeSet<usize>>,
}

impl RootedView {
    fn new(t: &LabeledTree, root: usize) -> Self {
        let (depth, _) = t.orient(root);
        let n = t.n();
        let mut upper = vec![0; n];
        let mut lower = vec![0; n];
        for (l, &[a, b]) in t.edges.iter().enumerate() {
            if depth[a] < depth[b] {
                upper[l] = a;
                lower[l] = b;
            } else {
                upper[l] = b;
                lower[l] = a;
            }
        }
        let mut by_upper: HashMap<usize, Vec<usize>> = HashMap::new();
        for (l, &u) in upper.iter().enumerate() {
            by_upper.entry(u).or_default().push(l);
        }
        let children = (0..n)
            .map(|l| {
                by_upper
                    .get(&lower[l])
                    .map(|v| v.iter().copied().collect())
                    .unwrap_or_default()
            })
            .collect();
        RootedView { upper, lower, children }
    }
}

/// One step of the transitivity algorithm; the flag tells whether the step
/// is the complexity-decreasing move that ends an outer iteration.
fn next_move(t: &LabeledTree, root: usize) -> (BraidGenerator, bool) {
    use BraidGenerator::{UInv, U};
    let view = RootedView::new(t, root);
    let max = t.n() - 1;
    if let Some(k) = (0..max).find(|&k| !view.children[k].is_empty()) {
        let ch = &view.children[k];
        if ch.contains(&(k + 1)) {
            return (U(k + 1), true);
        }
        if let Some(&s) = ch.range(..k).next_back() {
            if s + 1 == k {
                // edge k is the parent of edge k-1
                return (UInv(k), true);
            }
            return (U(s + 1), false);
        }
        let s = *ch.iter().next().unwrap();
        if view.children[s].contains(&(s - 1)) {
            return (UInv(s), true);
        }
        return (U(s), false);
    }
    // only the edge with the largest label has children
    let ch = &view.children[max];
    if ch.contains(&(max - 1)) {
        return (UInv(max), true);
    }
    let k = *ch.iter().next_back().expect("non-bush tree has an edge with children");
    (U(k + 1), false)
}

/// Rooted edge-labeled tree from a Prüfer sequence over `0..=n`.
fn tree_from_pruefer(n: usize, seq: &[usize]) -> LabeledTree {
    let nv = n + 1;
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n);
    if n == 1 {
        pairs.push((0, 1));
    } else {
        let mut degree = vec![1usize; nv];
        for &x in seq {
            degree[x] += 1;
        }
        let mut leaves: BTreeSet<usize> = (0..nv).filter(|&v| degree[v] == 1).collect();
        for &x in seq {
            let leaf = *leaves.iter().next().unwrap();
            leaves.remove(&leaf);
            pairs.push((leaf, x));
            degree[x] -= 1;
            if degree[x] == 1 {
                leaves.insert(x);
            }
        }
        let mut rest = leaves.into_iter();
        pairs.push((rest.next().unwrap(), rest.next().unwrap()));
    }
    // root at vertex 0: the edge above vertex c gets label c - 1
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for &(a, b) in &pairs {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut edges = vec![[0, 0]; n];
    let mut seen = vec![false; nv];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                edges[w - 1] = [v.min(w), v.max(w)];
                queue.push_back(w);
            }
        }
    }
    LabeledTree { edges, root: Some(0) }
}

/// All edge-labeled trees with `n` edges, sorted by canonical form.
pub fn enumerate_trees(n: usize) -> Result<Vec<LabeledTree>> {
    enumerate_trees_limited(n, MAX_ENUMERATION_RANK)
}

pub fn enumerate_trees_limited(n: usize, max_rank: usize) -> Result<Vec<LabeledTree>> {
    if n == 0 {
        return Err(Error::InvalidTree("rank must be at least 1".into()));
    }
    if n > max_rank {
        return Err(Error::Guard(format!(
            "tree enumeration limited to N <= {max_rank}, got {n}"
        )));
    }
    let nv = n + 1;
    let len = n.saturating_sub(1);
    let mut seq = vec![0usize; len];
    let mut forms: BTreeSet<CanonicalTree> = BTreeSet::new();
    loop {
        forms.insert(tree_from_pruefer(n, &seq).shape_key());
        // odometer over (n+1)^(n-1) sequences
        let mut i = 0;
        loop {
            if i == len {
                return forms.iter().map(LabeledTree::from_canonical).collect();
            }
            seq[i] += 1;
            if seq[i] < nv {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BraidGenerator::*;

    fn cf(sets: &[&[u32]]) -> CanonicalTree {
        let mut v: Vec<(Vec<u32>, bool)> = sets.iter().map(|s| (s.to_vec(), false)).collect();
        v.sort();
        CanonicalTree(v)
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(
            LabeledTree::bush(3).canonical_form(),
            cf(&[&[0, 1, 2], &[0], &[1], &[2]])
        );
        assert_eq!(LabeledTree::path(2).canonical_form(), cf(&[&[0], &[0, 1], &[1]]));
        let relabeled = LabeledTree::from_edges(vec![[3, 1], [3, 0], [3, 2]], None).unwrap();
        assert_eq!(relabeled, LabeledTree::bush(3));
    }

    #[test]
    fn invalid_trees_rejected() {
        assert!(LabeledTree::from_edges(vec![[0, 1], [1, 0]], None).is_err());
        assert!(LabeledTree::from_edges(vec![[0, 1], [1, 5]], None).is_err());
        assert!(LabeledTree::from_edges(vec![], None).is_err());
    }

    #[test]
    fn adjacent_rewrite_on_path() {
        // 0 = ab, 1 = bc; u1: ab -> label 1, bc deleted, ac -> label 0
        let t = LabeledTree::from_edges(vec![[0, 1], [1, 2]], None).unwrap();
        let got = t.act_generator(U(1));
        assert_eq!(got.edge(1), [0, 1]);
        assert_eq!(got.edge(0), [0, 2]);
    }

    #[test]
    fn nonadjacent_swap() {
        // edges 0 and 1 disjoint
        let t = LabeledTree::from_edges(vec![[0, 1], [2, 3], [1, 2], [3, 4]], None).unwrap();
        let got = t.act_generator(U(1));
        assert_eq!(got.edge(0), [2, 3]);
        assert_eq!(got.edge(1), [0, 1]);
        assert_eq!(got.edge(2), t.edge(2));
    }

    #[test]
    fn adjacent_rewrite_has_order_three() {
        let t = LabeledTree::bush(2).with_root(Some(0));
        let once = t.act_generator(U(1));
        assert_ne!(once.edges(), t.edges());
        let thrice = once.act_generator(U(1)).act_generator(U(1));
        assert_eq!(thrice.edges(), t.edges());
        assert_eq!(t.act_generator(UInv(1)).act_generator(U(1)).edges(), t.edges());
    }

    #[test]
    fn lambda_round_trip_and_order() {
        let t = LabeledTree::path(5);
        assert_eq!(t.act_generator(Lambda).act_generator(LambdaInv).edges(), t.edges());
        assert_eq!(t.act_word(&BraidWord::lambda_power(5, 5)).edges(), t.edges());
        for m in 1..5 {
            assert_ne!(t.act_word(&BraidWord::lambda_power(5, m)), t);
        }
    }

    #[test]
    fn complexity_examples() {
        for n in 1..6 {
            assert_eq!(LabeledTree::bush(n).complexity_from(0), n);
        }
        assert_eq!(LabeledTree::path(3).complexity_from(0), 6);
        assert_eq!(LabeledTree::path(1).with_root(Some(0)).complexity().unwrap(), 1);
        assert_eq!(LabeledTree::path(2).complexity(), Err(Error::MissingRoot));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_trees(1).unwrap().len(), 1);
        assert_eq!(enumerate_trees(2).unwrap().len(), 1);
        assert_eq!(enumerate_trees(3).unwrap().len(), 4);
        assert_eq!(enumerate_trees(4).unwrap().len(), 25);
        assert_eq!(enumerate_trees(5).unwrap().len(), 216);
        assert!(matches!(enumerate_trees(8), Err(Error::Guard(_))));
    }

    #[test]
    fn bush_is_already_canonical() {
        assert!(LabeledTree::bush(4).canonicalize_to_bush().is_empty());
        assert!(LabeledTree::path(2).canonicalize_to_bush().is_empty());
    }

    #[test]
    fn canonicalize_all_rank_four() {
        for t in enumerate_trees(4).unwrap() {
            let w = t.canonicalize_to_bush();
            assert!(w.letters().iter().all(|g| matches!(g, U(_) | UInv(_))));
            assert_eq!(t.act_word(&w).shape_key(), LabeledTree::bush(4).shape_key());
        }
    }

    #[test]
    fn text_round_trip() {
        let text = "0: a b\n1: b c\n2: b d\nroot: c\n";
        let t = LabeledTree::parse(text).unwrap();
        assert_eq!(LabeledTree::parse(&t.to_string()).unwrap(), t);
        assert!(t.root().is_some());
        match LabeledTree::parse("0: a b\nx: b c\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
