//! Labeled quadrangulations of the `(2N+2)`-gon and their braid-cyclic action.
//!
//! Polygon vertices are `0..2N+2` counterclockwise; even vertices are white
//! and odd ones black. A face is stored as its four vertices in increasing
//! order, which is its counterclockwise order starting at the smallest
//! index. `faces[k]` is the face labeled `k`.
//!
//! A quadrangulation is monotone when, at every polygon vertex, the
//! counterclockwise order of the incident faces agrees with the label order
//! at white vertices and reverses it at black vertices. Monotone
//! quadrangulations are in bijection (up to color-preserving rotation) with
//! edge-labeled trees via the black diagonals, see [`Quadrangulation::to_tree`]
//! and [`Quadrangulation::from_tree`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::braid::{BraidGenerator, BraidWord};
use crate::error::{Error, Result};
use crate::tree::LabeledTree;

/// Enumeration of all monotone quadrangulations is limited to this rank.
pub const MAX_QUAD_ENUMERATION_RANK: usize = 5;

pub type Face = [u32; 4];

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadrangulation {
    n: usize,
    faces: Vec<Face>,
}

fn is_black(v: u32) -> bool {
    v % 2 == 1
}

fn sorted(mut f: Face) -> Face {
    f.sort_unstable();
    f
}

/// Cyclic sides of a face, each as `(a, b)` in counterclockwise order.
fn sides(f: &Face) -> [(u32, u32); 4] {
    [(f[0], f[1]), (f[1], f[2]), (f[2], f[3]), (f[3], f[0])]
}

fn chord(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

impl Quadrangulation {
    /// Validates that `faces` (indexed by label) tile the `(2n+2)`-gon by
    /// two-colored quadrangles. Monotonicity is not required here.
    pub fn from_faces(n: usize, faces: Vec<Face>) -> Result<Self> {
        let bad = |m: String| Error::InvalidQuadrangulation(m);
        if n == 0 {
            return Err(bad("rank must be at least 1".into()));
        }
        if faces.len() != n {
            return Err(bad(format!("expected {n} faces, got {}", faces.len())));
        }
        let m = (2 * n + 2) as u32;
        let faces: Vec<Face> = faces.into_iter().map(sorted).collect();
        let mut count: HashMap<(u32, u32), usize> = HashMap::new();
        for (label, f) in faces.iter().enumerate() {
            if f.iter().any(|&v| v >= m) {
                return Err(bad(format!("face {label} uses a vertex outside 0..{m}")));
            }
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(bad(format!("face {label} repeats a vertex")));
            }
            if f.windows(2).any(|w| is_black(w[0]) == is_black(w[1])) {
                return Err(bad(format!("face {label} does not alternate colors")));
            }
            for (a, b) in sides(f) {
                *count.entry(chord(a, b)).or_default() += 1;
            }
        }
        let is_boundary = |(a, b): (u32, u32)| b - a == 1 || (a == 0 && b == m - 1);
        for i in 0..m {
            let s = chord(i, (i + 1) % m);
            if count.get(&s) != Some(&1) {
                return Err(bad(format!("boundary side {}-{} not covered exactly once", s.0, s.1)));
            }
        }
        let interior: Vec<(u32, u32)> = count
            .iter()
            .filter(|(s, _)| !is_boundary(**s))
            .map(|(s, c)| {
                if *c == 2 {
                    Ok(*s)
                } else {
                    Err(bad(format!("interior side {}-{} used {c} times", s.0, s.1)))
                }
            })
            .collect::<Result<_>>()?;
        for (i, &(a, b)) in interior.iter().enumerate() {
            for &(c, d) in &interior[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(bad(format!("sides {a}-{b} and {c}-{d} cross")));
                }
            }
        }
        Ok(Quadrangulation { n, faces })
    }

    /// All faces share the black vertex `2N+1`; face `{2j, 2j+1, 2j+2, 2N+1}`
    /// carries label `N-1-j`.
    pub fn trivial(n: usize) -> Self {
        let m = (2 * n + 2) as u32;
        let mut faces = vec![[0; 4]; n];
        for j in 0..n {
            let j32 = j as u32;
            faces[n - 1 - j] = sorted([2 * j32, 2 * j32 + 1, 2 * j32 + 2, m - 1]);
        }
        Quadrangulation { n, faces }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of polygon vertices, `2N + 2`.
    pub fn polygon_size(&self) -> u32 {
        (2 * self.n + 2) as u32
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, label: usize) -> Face {
        self.faces[label]
    }

    fn black_pair(f: &Face) -> [u32; 2] {
        let mut it = f.iter().copied().filter(|&v| is_black(v));
        [it.next().unwrap(), it.next().unwrap()]
    }

    pub fn is_monotone(&self) -> bool {
        let m = self.polygon_size();
        let mut at: Vec<Vec<(u32, usize)>> = vec![Vec::new(); m as usize];
        for (label, f) in self.faces.iter().enumerate() {
            for &v in f {
                // counterclockwise fan position: the face holding side (v, v+1) comes first
                let first = f.iter().filter(|&&u| u != v).map(|&u| (u + m - v) % m).min().unwrap();
                at[v as usize].push((first, label));
            }
        }
        at.iter_mut().enumerate().all(|(v, fan)| {
            fan.sort_unstable();
            let labels: Vec<usize> = fan.iter().map(|&(_, l)| l).collect();
            if is_black(v as u32) {
                labels.windows(2).all(|w| w[0] > w[1])
            } else {
                labels.windows(2).all(|w| w[0] < w[1])
            }
        })
    }

    /// Faces `a` and `b` share a side.
    pub fn faces_adjacent(&self, a: usize, b: usize) -> bool {
        let sa: BTreeSet<(u32, u32)> = sides(&self.faces[a]).iter().map(|&(x, y)| chord(x, y)).collect();
        sides(&self.faces[b]).iter().any(|&(x, y)| sa.contains(&chord(x, y)))
    }

    /// Applies one generator to a monotone quadrangulation.
    pub fn act_generator(&self, g: BraidGenerator) -> Result<Quadrangulation> {
        if !self.is_monotone() {
            return Err(Error::NotMonotone);
        }
        Ok(self.act_unchecked(g))
    }

    /// Left action of a word on a monotone quadrangulation.
    pub fn act_word(&self, w: &BraidWord) -> Result<Quadrangulation> {
        if w.rank() != self.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: w.rank(),
            });
        }
        if !self.is_monotone() {
            return Err(Error::NotMonotone);
        }
        Ok(w.letters().iter().rev().fold(self.clone(), |q, &g| q.act_unchecked(g)))
    }

    /// Generator action without the monotonicity precondition check.
    pub(crate) fn act_unchecked(&self, g: BraidGenerator) -> Quadrangulation {
        assert!(g.is_valid(self.n), "generator {g} invalid for rank {}", self.n);
        match g {
            BraidGenerator::Lambda => self.lambda_flip(),
            BraidGenerator::LambdaInv => self.lambda_inverse_flip(),
            BraidGenerator::U(k) => self.hexagon_move(k),
            BraidGenerator::UInv(k) => {
                if self.faces_adjacent(k - 1, k) {
                    self.hexagon_move(k).hexagon_move(k)
                } else {
                    self.hexagon_move(k)
                }
            }
        }
    }

    /// `u_k`: swap labels of non-adjacent faces `k-1`, `k`; otherwise turn the
    /// diagonal of their hexagon so that its black end moves to the far black
    /// vertex of face `k-1`.
    fn hexagon_move(&self, k: usize) -> Quadrangulation {
        let mut faces = self.faces.clone();
        if !self.faces_adjacent(k - 1, k) {
            faces.swap(k - 1, k);
            return Quadrangulation { n: self.n, faces };
        }
        let (lo, hi) = (self.faces[k - 1], self.faces[k]);
        let shared_black = *lo
            .iter()
            .find(|&&v| is_black(v) && hi.contains(&v))
            .expect("adjacent faces share a black vertex");
        let far_lo = *Self::black_pair(&lo).iter().find(|&&v| v != shared_black).unwrap();
        let hex: Vec<u32> = lo
            .iter()
            .chain(hi.iter())
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        debug_assert_eq!(hex.len(), 6);
        let i = hex.iter().position(|&v| v == far_lo).unwrap();
        let q1 = sorted([hex[i], hex[(i + 1) % 6], hex[(i + 2) % 6], hex[(i + 3) % 6]]);
        let q2 = sorted([hex[(i + 3) % 6], hex[(i + 4) % 6], hex[(i + 5) % 6], hex[i]]);
        let (with_shared, other) = if q1.contains(&shared_black) { (q1, q2) } else { (q2, q1) };
        faces[k] = with_shared;
        faces[k - 1] = other;
        Quadrangulation { n: self.n, faces }
    }

    fn swap_vertices(f: Face, x: u32, z: u32) -> Face {
        sorted(f.map(|v| {
            if v == x {
                z
            } else if v == z {
                x
            } else {
                v
            }
        }))
    }

    /// `λ`: shift labels up by one, then flip the face now labeled 0.
    ///
    /// That face `ABCD` has boundary sides `AB` and `CD` whose black ends `B`,
    /// `D` are followed counterclockwise by the white vertices `A`, `C`. It
    /// becomes `PBQD`, `P` and `Q` being the white vertices preceding `B` and
    /// `D`. Every other face trades the positions of `B` and `D`, which is how
    /// the rest of the polygon re-attaches once the cut moves.
    fn lambda_flip(&self) -> Quadrangulation {
        let n = self.n;
        let m = self.polygon_size();
        let mut faces = vec![[0; 4]; n];
        for (l, &f) in self.faces.iter().enumerate() {
            faces[(l + 1) % n] = f;
        }
        let f = faces[0];
        let [x, z] = Self::black_pair(&f);
        debug_assert!(f.contains(&((x + 1) % m)) && f.contains(&((z + 1) % m)));
        for face in faces.iter_mut().skip(1) {
            *face = Self::swap_vertices(*face, x, z);
        }
        faces[0] = sorted([(x + m - 1) % m, x, (z + m - 1) % m, z]);
        Quadrangulation { n, faces }
    }

    /// Inverse of [`Self::lambda_flip`].
    fn lambda_inverse_flip(&self) -> Quadrangulation {
        let n = self.n;
        let m = self.polygon_size();
        let f = self.faces[0];
        let [x, z] = Self::black_pair(&f);
        debug_assert!(f.contains(&((x + m - 1) % m)) && f.contains(&((z + m - 1) % m)));
        let mut faces = vec![[0; 4]; n];
        for (l, &face) in self.faces.iter().enumerate() {
            faces[(l + n - 1) % n] = if l == 0 {
                sorted([x, (x + 1) % m, z, (z + 1) % m])
            } else {
                Self::swap_vertices(face, x, z)
            };
        }
        Quadrangulation { n, faces }
    }

    /// The tree of black diagonals; polygon vertex `2i+1` becomes tree vertex `i`.
    pub fn to_tree(&self) -> LabeledTree {
        let edges = self
            .faces
            .iter()
            .map(|f| {
                let [a, b] = Self::black_pair(f);
                [(a as usize - 1) / 2, (b as usize - 1) / 2]
            })
            .collect();
        LabeledTree::from_edges(edges, None).expect("black diagonals of a quadrangulation form a tree")
    }

    /// The unique monotone quadrangulation with the given tree, anchored so
    /// that the face labeled `N-1` contains the boundary side `(2N+1, 0)` and
    /// its black end at `2N+1` is the endpoint of edge `N-1` with the
    /// lexicographically smaller incident-label set.
    pub fn from_tree(t: &LabeledTree) -> Quadrangulation {
        let n = t.n();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); t.vertex_count()];
        for (l, &[a, b]) in t.edges().iter().enumerate() {
            adj[a].push((b, l));
            adj[b].push((a, l));
        }
        let sets = t.incident_sets();
        let [a, b] = t.edge(n - 1);
        let anchor = if sets[a] <= sets[b] { a } else { b };
        let all: BTreeSet<usize> = (0..n).collect();
        let (placed, _) = layout(&adj, t, &all, anchor);
        let mut faces = vec![[0; 4]; n];
        for (label, f) in placed {
            faces[label] = sorted(f.map(|v| v as u32));
        }
        Quadrangulation { n, faces }
    }

    /// Rotates every vertex index by `shift` (kept even to preserve colors).
    pub fn rotated(&self, shift: u32) -> Quadrangulation {
        let m = self.polygon_size();
        Quadrangulation {
            n: self.n,
            faces: self.faces.iter().map(|f| sorted(f.map(|v| (v + shift) % m))).collect(),
        }
    }

    /// Smallest face list over all color-preserving rotations.
    pub fn rotation_key(&self) -> Vec<Face> {
        (0..=self.n as u32).map(|j| self.rotated(2 * j).faces).min().unwrap()
    }

    pub fn equal_up_to_rotation(&self, other: &Quadrangulation) -> bool {
        self.n == other.n && self.rotation_key() == other.rotation_key()
    }

    pub fn parse(text: &str) -> Result<Quadrangulation> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lineno, first) = lines.next().ok_or_else(|| Error::parse(1, "", "expected `n: <N>`"))?;
        let n: usize = first
            .strip_prefix("n:")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| Error::parse(lineno, first, "expected `n: <N>`"))?;
        let mut faces: Vec<Option<Face>> = vec![None; n];
        for (lineno, line) in lines {
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(lineno, line, "expected `<label>: v0 v1 v2 v3`"))?;
            let label: usize = head
                .trim()
                .parse()
                .map_err(|_| Error::parse(lineno, head.trim(), "face label must be an integer"))?;
            if label >= n {
                return Err(Error::parse(lineno, head.trim(), format!("label out of range 0..{n}")));
            }
            let vs: Vec<u32> = rest
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::parse(lineno, t, "vertex must be an integer"))
                })
                .collect::<Result<_>>()?;
            if vs.len() != 4 {
                return Err(Error::parse(lineno, rest.trim(), "a face has four vertices"));
            }
            let f = [vs[0], vs[1], vs[2], vs[3]];
            let descents = (0..4).filter(|&i| f[i] >= f[(i + 1) % 4]).count();
            if descents != 1 {
                return Err(Error::parse(
                    lineno,
                    rest.trim(),
                    "vertices must be in counterclockwise order",
                ));
            }
            if faces[label].replace(sorted(f)).is_some() {
                return Err(Error::parse(lineno, head.trim(), "duplicate label"));
            }
        }
        let faces = faces
            .into_iter()
            .enumerate()
            .map(|(l, f)| f.ok_or_else(|| Error::InvalidQuadrangulation(format!("face {l} missing"))))
            .collect::<Result<Vec<_>>>()?;
        Quadrangulation::from_faces(n, faces)
    }

    /// Polygon drawing for `neato -n`: vertices on a circle, white/black
    /// fill, interior sides dashed, face labels at face centroids.
    pub fn to_dot(&self) -> String {
        let m = self.polygon_size();
        let r = 200.0_f64;
        let pos = |v: u32| {
            let a = std::f64::consts::TAU * v as f64 / m as f64;
            (r * a.cos(), r * a.sin())
        };
        let mut s = String::from("graph quadrangulation {\n  node [shape=circle, width=0.3, fixedsize=true];\n");
        for v in 0..m {
            let (x, y) = pos(v);
            let fill = if is_black(v) {
                "black\", fontcolor=\"white"
            } else {
                "white"
            };
            s.push_str(&format!(
                "  p{v} [label=\"{v}\", style=filled, fillcolor=\"{fill}\", pos=\"{x:.1},{y:.1}!\"];\n"
            ));
        }
        for v in 0..m {
            s.push_str(&format!("  p{v} -- p{};\n", (v + 1) % m));
        }
        let mut interior: BTreeSet<(u32, u32)> = BTreeSet::new();
        for f in &self.faces {
            for (a, b) in sides(f) {
                let c = chord(a, b);
                if c.1 - c.0 != 1 && !(c.0 == 0 && c.1 == m - 1) {
                    interior.insert(c);
                }
            }
        }
        for (a, b) in interior {
            s.push_str(&format!("  p{a} -- p{b} [style=dashed];\n"));
        }
        for (label, f) in self.faces.iter().enumerate() {
            let (cx, cy) = f
                .iter()
                .map(|&v| pos(v))
                .fold((0.0, 0.0), |acc, p| (acc.0 + p.0 / 4.0, acc.1 + p.1 / 4.0));
            s.push_str(&format!(
                "  f{label} [label=\"{label}\", shape=plaintext, pos=\"{cx:.1},{cy:.1}!\"];\n"
            ));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for Quadrangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        for (l, face) in self.faces.iter().enumerate() {
            writeln!(f, "{l}: {} {} {} {}", face[0], face[1], face[2], face[3])?;
        }
        Ok(())
    }
}

/// Labeled faces of a local layout, and the local position of each tree vertex.
type Layout = (Vec<(usize, [usize; 4])>, HashMap<usize, usize>);

/// Places the faces of the subtree spanned by `edges` in a local polygon of
/// `2|edges| + 2` vertices with `anchor` at the last (black) position.
///
/// The face of the largest label `e = xy` takes the two boundary sides
/// leaving `x` and `y` counterclockwise; the component of `x` fills the
/// polygon arc ending at `x`, the component of `y` the arc ending at `y`.
fn layout(adj: &[Vec<(usize, usize)>], t: &LabeledTree, edges: &BTreeSet<usize>, anchor: usize) -> Layout {
    let m = 2 * edges.len() + 2;
    let Some(&e) = edges.iter().next_back() else {
        return (Vec::new(), HashMap::from([(anchor, 1)]));
    };
    let [a, b] = t.edge(e);
    let rest: BTreeSet<usize> = edges.iter().copied().filter(|&l| l != e).collect();
    let component = |start: usize| {
        let mut seen_v = BTreeSet::from([start]);
        let mut labels = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, l) in &adj[v] {
                if rest.contains(&l) && seen_v.insert(w) {
                    labels.insert(l);
                    stack.push(w);
                }
            }
        }
        (seen_v, labels)
    };
    let (va, la) = component(a);
    let (_, lb) = component(b);
    // y is the endpoint on the anchor's side
    let (x, lx, y, ly) = if va.contains(&anchor) {
        (b, lb, a, la)
    } else {
        (a, la, b, lb)
    };
    let b1 = 2 * lx.len() + 1;
    let mut faces = Vec::with_capacity(edges.len());
    let mut pos = HashMap::new();
    let (sub_faces, sub_pos) = layout(adj, t, &lx, x);
    faces.extend(sub_faces);
    pos.extend(sub_pos);
    let (sub_faces, sub_pos) = layout(adj, t, &ly, y);
    faces.extend(sub_faces.into_iter().map(|(l, f)| (l, f.map(|p| p + b1 + 1))));
    pos.extend(sub_pos.into_iter().map(|(v, p)| (v, p + b1 + 1)));
    faces.push((e, [b1, b1 + 1, m - 1, 0]));
    let shift = (m - 1 + m - pos[&anchor]) % m;
    if shift != 0 {
        for (_, f) in faces.iter_mut() {
            *f = f.map(|p| (p + shift) % m);
        }
        for p in pos.values_mut() {
            *p = (*p + shift) % m;
        }
    }
    (faces, pos)
}

/// Every quadrangulation of the polygon on `verts` (in counterclockwise order).
fn quadrangulations_of(verts: &[u32]) -> Vec<Vec<Face>> {
    let len = verts.len();
    if len <= 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // the face on side (verts[0], verts[1]) is {0, 1, i, j}
    for i in (2..len).step_by(2) {
        for j in ((i + 1)..len).step_by(2) {
            let face = sorted([verts[0], verts[1], verts[i], verts[j]]);
            let left = quadrangulations_of(&verts[1..=i]);
            let mid = quadrangulations_of(&verts[i..=j]);
            let mut tail: Vec<u32> = verts[j..].to_vec();
            tail.push(verts[0]);
            let right = quadrangulations_of(&tail);
            for l in &left {
                for md in &mid {
                    for r in &right {
                        let mut fs = vec![face];
                        fs.extend_from_slice(l);
                        fs.extend_from_slice(md);
                        fs.extend_from_slice(r);
                        out.push(fs);
                    }
                }
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// All monotone labeled quadrangulations (strict equality), by brute force
/// over tilings and labelings. Sorted.
pub fn enumerate_monotone(n: usize) -> Result<Vec<Quadrangulation>> {
    if n == 0 {
        return Err(Error::InvalidQuadrangulation("rank must be at least 1".into()));
    }
    if n > MAX_QUAD_ENUMERATION_RANK {
        return Err(Error::Guard(format!(
            "monotone enumeration limited to N <= {MAX_QUAD_ENUMERATION_RANK}, got {n}"
        )));
    }
    let verts: Vec<u32> = (0..(2 * n + 2) as u32).collect();
    let perms = permutations(n);
    let mut out = BTreeSet::new();
    for tiling in quadrangulations_of(&verts) {
        for p in &perms {
            let mut faces = vec![[0; 4]; n];
            for (i, &l) in p.iter().enumerate() {
                faces[l] = tiling[i];
            }
            let q = Quadrangulation { n, faces };
            if q.is_monotone() {
                out.insert(q);
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use BraidGenerator::*;

    fn hexagon() -> Quadrangulation {
        Quadrangulation::from_faces(2, vec![[0, 1, 2, 3], [0, 3, 4, 5]]).unwrap()
    }

    #[test]
    fn single_face_is_monotone() {
        let q = Quadrangulation::trivial(1);
        assert_eq!(q.faces(), &[[0, 1, 2, 3]]);
        assert!(q.is_monotone());
        assert_eq!(q.act_generator(Lambda).unwrap(), q);
    }

    #[test]
    fn trivial_is_monotone_and_swaps_break_it() {
        for n in 2..=6 {
            let q = Quadrangulation::trivial(n);
            assert!(Quadrangulation::from_faces(n, q.faces().to_vec()).is_ok());
            assert!(q.is_monotone());
            let mut faces = q.faces().to_vec();
            faces.swap(0, 1);
            assert!(!Quadrangulation::from_faces(n, faces).unwrap().is_monotone());
        }
    }

    #[test]
    fn hexagon_tree_is_path() {
        let q = hexagon();
        assert!(q.is_monotone());
        let t = q.to_tree();
        assert_eq!(t.edge(0), [0, 1]);
        assert_eq!(t.edge(1), [1, 2]);
    }

    #[test]
    fn trivial_maps_to_bush_and_back() {
        for n in 1..=6 {
            let q = Quadrangulation::trivial(n);
            assert!(q.to_tree().is_bush());
            assert_eq!(Quadrangulation::from_tree(&LabeledTree::bush(n)), q);
        }
    }

    #[test]
    fn hexagon_rotation() {
        let q = hexagon();
        let r = q.act_generator(U(1)).unwrap();
        // the diagonal 0-3 turns to 1-4
        assert_eq!(r.faces(), &[[0, 1, 4, 5], [1, 2, 3, 4]]);
        assert!(r.is_monotone());
        let back = r.act_generator(U(1)).unwrap().act_generator(U(1)).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn nonadjacent_faces_swap() {
        // N = 4: faces 0 and 1 at opposite ends of a strip
        let t = LabeledTree::from_edges(vec![[0, 1], [3, 4], [1, 2], [2, 3]], None).unwrap();
        let q = Quadrangulation::from_tree(&t);
        assert!(!q.faces_adjacent(0, 1));
        let r = q.act_generator(U(1)).unwrap();
        assert_eq!(r.face(0), q.face(1));
        assert_eq!(r.face(1), q.face(0));
    }

    #[test]
    fn rotation_equality() {
        let q = Quadrangulation::trivial(3);
        let r = q.rotated(2);
        assert_ne!(q, r);
        assert!(q.equal_up_to_rotation(&r));
        assert!(q.equal_up_to_rotation(&q));
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_monotone(1).unwrap().len(), 1);
        let two = enumerate_monotone(2).unwrap();
        assert_eq!(two.len(), 3);
        assert!(two.iter().all(|q| q.equal_up_to_rotation(&two[0])));
        assert!(matches!(enumerate_monotone(6), Err(Error::Guard(_))));
    }

    #[test]
    fn rejects_bad_tilings() {
        assert!(Quadrangulation::from_faces(2, vec![[0, 1, 2, 3], [0, 1, 2, 3]]).is_err());
        assert!(Quadrangulation::from_faces(2, vec![[0, 1, 2, 4], [0, 3, 4, 5]]).is_err());
        assert!(Quadrangulation::from_faces(2, vec![[0, 1, 2, 3]]).is_err());
        let not_mono = Quadrangulation::from_faces(2, vec![[0, 3, 4, 5], [0, 1, 2, 3]]).unwrap();
        assert_eq!(not_mono.act_generator(U(1)), Err(Error::NotMonotone));
    }

    #[test]
    fn text_round_trip() {
        let q = Quadrangulation::trivial(3);
        assert_eq!(Quadrangulation::parse(&q.to_string()).unwrap(), q);
        let rotated_order = "n: 2\n0: 1 2 3 0\n1: 3 4 5 0\n";
        assert_eq!(Quadrangulation::parse(rotated_order).unwrap(), hexagon());
        assert!(Quadrangulation::parse("n: 2\n0: 0 2 1 3\n1: 3 4 5 0\n").is_err());
    }
}
