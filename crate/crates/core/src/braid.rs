//! The braid-cyclic group `BC_N`: words in `λ^{±1}` and `u_1^{±1} .. u_{N-1}^{±1}`,
//! their faithful image in `Aut(F_N)`, the `inv` anti-involution and the
//! defining relations.
//!
//! All actions in this crate are left actions: in a word `g_1 g_2 … g_m` the
//! rightmost letter acts first. `u` indices are 1-based, free generators and
//! labels are 0-based.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::free_group::{FreeAutomorphism, FreeWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BraidGenerator {
    Lambda,
    LambdaInv,
    U(usize),
    UInv(usize),
}

impl BraidGenerator {
    pub fn inverse(self) -> Self {
        match self {
            BraidGenerator::Lambda => BraidGenerator::LambdaInv,
            BraidGenerator::LambdaInv => BraidGenerator::Lambda,
            BraidGenerator::U(k) => BraidGenerator::UInv(k),
            BraidGenerator::UInv(k) => BraidGenerator::U(k),
        }
    }

    pub fn is_valid(self, rank: usize) -> bool {
        match self {
            BraidGenerator::Lambda | BraidGenerator::LambdaInv => rank >= 1,
            BraidGenerator::U(k) | BraidGenerator::UInv(k) => k >= 1 && k < rank,
        }
    }

    /// `λ, λ⁻¹, u_1, u_1⁻¹, …` — the symmetric generating set used by orbit searches.
    pub fn all(rank: usize) -> Vec<BraidGenerator> {
        let mut gens = vec![BraidGenerator::Lambda, BraidGenerator::LambdaInv];
        for k in 1..rank {
            gens.push(BraidGenerator::U(k));
            gens.push(BraidGenerator::UInv(k));
        }
        gens
    }

    /// Image of this generator in `Aut(F_N)`.
    pub fn automorphism(self, rank: usize) -> FreeAutomorphism {
        let n = rank as u32;
        let single = |k: u32| FreeWord::reduce([Letter::pos(k)], rank).unwrap();
        let images = match self {
            BraidGenerator::Lambda => (0..n).map(|k| single((k + 1) % n)).collect(),
            BraidGenerator::LambdaInv => (0..n).map(|k| single((k + n - 1) % n)).collect(),
            BraidGenerator::U(k) | BraidGenerator::UInv(k) => {
                let k = k as u32;
                let (a, b) = (k - 1, k);
                let forward = matches!(self, BraidGenerator::U(_));
                (0..n)
                    .map(|l| match (l == a, l == b, forward) {
                        // u_k: s_{k-1} -> s_k, s_k -> s_k^{-1} s_{k-1} s_k
                        (true, _, true) => single(b),
                        (_, true, true) => {
                            FreeWord::reduce([Letter::neg(b), Letter::pos(a), Letter::pos(b)], rank).unwrap()
                        }
                        // u_k^{-1}: s_k -> s_{k-1}, s_{k-1} -> s_{k-1} s_k s_{k-1}^{-1}
                        (_, true, false) => single(a),
                        (true, _, false) => {
                            FreeWord::reduce([Letter::pos(a), Letter::pos(b), Letter::neg(a)], rank).unwrap()
                        }
                        _ => single(l),
                    })
                    .collect()
            }
        };
        FreeAutomorphism::from_images(images).unwrap()
    }

    /// Permutation of labels `0..N` induced by the generator (`perm[i]` = image of `i`).
    pub fn label_permutation(self, rank: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..rank).collect();
        match self {
            BraidGenerator::Lambda => perm.iter_mut().for_each(|i| *i = (*i + 1) % rank),
            BraidGenerator::LambdaInv => perm.iter_mut().for_each(|i| *i = (*i + rank - 1) % rank),
            BraidGenerator::U(k) | BraidGenerator::UInv(k) => perm.swap(k - 1, k),
        }
        perm
    }
}

impl fmt::Display for BraidGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidGenerator::Lambda => write!(f, "L"),
            BraidGenerator::LambdaInv => write!(f, "L'"),
            BraidGenerator::U(k) => write!(f, "u{k}"),
            BraidGenerator::UInv(k) => write!(f, "u{k}'"),
        }
    }
}

/// An element of the free monoid on the braid-cyclic generators. Words are
/// not normalized; equality as group elements is [`words_equal`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    rank: usize,
    letters: Vec<BraidGenerator>,
}

impl BraidWord {
    pub fn new(rank: usize, letters: Vec<BraidGenerator>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Rank { index: 0, rank });
        }
        for g in &letters {
            if !g.is_valid(rank) {
                let index = match g {
                    BraidGenerator::U(k) | BraidGenerator::UInv(k) => *k,
                    _ => 0,
                };
                return Err(Error::Rank { index, rank });
            }
        }
        Ok(BraidWord { rank, letters })
    }

    pub fn empty(rank: usize) -> Self {
        BraidWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn single(rank: usize, g: BraidGenerator) -> Result<Self> {
        BraidWord::new(rank, vec![g])
    }

    /// `λ^m` for any integer `m` (negative powers use `λ⁻¹`).
    pub fn lambda_power(rank: usize, m: i64) -> Self {
        let g = if m >= 0 {
            BraidGenerator::Lambda
        } else {
            BraidGenerator::LambdaInv
        };
        BraidWord {
            rank,
            letters: vec![g; m.unsigned_abs() as usize],
        }
    }

    /// `U = u_1 u_2 … u_{N-1}`.
    pub fn big_u(rank: usize) -> Self {
        BraidWord {
            rank,
            letters: (1..rank).map(BraidGenerator::U).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[BraidGenerator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &BraidWord) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    /// Concatenation `self · other` (so `other` acts first).
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_rank(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            rank: self.rank,
            letters,
        })
    }

    /// `g · self`.
    pub fn prepend(&self, g: BraidGenerator) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        BraidWord {
            rank: self.rank,
            letters,
        }
    }

    pub fn pow(&self, m: usize) -> BraidWord {
        BraidWord {
            rank: self.rank,
            letters: self.letters.repeat(m),
        }
    }

    /// Group inverse: reversed word with every letter inverted.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// The anti-involution fixing every `u_k` and sending `λ` to `λ⁻¹`.
    pub fn inv(&self) -> BraidWord {
        BraidWord {
            rank: self.rank,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&g| match g {
                    BraidGenerator::Lambda => BraidGenerator::LambdaInv,
                    BraidGenerator::LambdaInv => BraidGenerator::Lambda,
                    other => other,
                })
                .collect(),
        }
    }

    /// Free cancellation of adjacent inverse letters. Semantics are unchanged.
    pub fn cancel_adjacent(&self) -> BraidWord {
        let mut out: Vec<BraidGenerator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord {
            rank: self.rank,
            letters: out,
        }
    }

    /// The composite automorphism; the leftmost letter is applied last.
    pub fn to_automorphism(&self) -> FreeAutomorphism {
        let gens: Vec<FreeAutomorphism> = BraidGenerator::all(self.rank)
            .into_iter()
            .map(|g| g.automorphism(self.rank))
            .collect();
        let mut acc = FreeAutomorphism::identity(self.rank);
        for &g in &self.letters {
            acc = acc
                .compose(&gens[generator_slot(g)])
                .expect("ranks agree by construction");
        }
        acc
    }

    /// `perm[i]` is where label `i` is sent by the whole word.
    pub fn label_permutation(&self) -> Vec<usize> {
        let mut acc: Vec<usize> = (0..self.rank).collect();
        for &g in &self.letters {
            let p = g.label_permutation(self.rank);
            acc = p.iter().map(|&j| acc[j]).collect();
        }
        acc
    }

    /// Parses tokens `L`, `L'`, `u<k>`, `u<k>'`; `1` or blank for the empty word.
    pub fn parse(text: &str, rank: usize) -> Result<BraidWord> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() || tokens == ["1"] {
            return Ok(BraidWord::empty(rank));
        }
        let mut letters = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let (body, inverse) = match tok.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let g = if body == "L" {
                BraidGenerator::Lambda
            } else if let Some(k) = body.strip_prefix('u').and_then(|d| d.parse::<usize>().ok()) {
                if k == 0 || k >= rank {
                    return Err(Error::parse(
                        1,
                        tok,
                        format!("u index must be in 1..={} for rank {rank}", rank.saturating_sub(1)),
                    ));
                }
                BraidGenerator::U(k)
            } else {
                return Err(Error::parse(1, tok, "expected L, L', u<k> or u<k>'"));
            };
            letters.push(if inverse { g.inverse() } else { g });
        }
        BraidWord::new(rank, letters)
    }

    /// Uniformly random word over the symmetric generating set.
    pub fn random<R: Rng + ?Sized>(rank: usize, len: usize, rng: &mut R) -> BraidWord {
        let gens = BraidGenerator::all(rank);
        BraidWord {
            rank,
            letters: (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect(),
        }
    }
}

fn generator_slot(g: BraidGenerator) -> usize {
    match g {
        BraidGenerator::Lambda => 0,
        BraidGenerator::LambdaInv => 1,
        BraidGenerator::U(k) => 2 * k,
        BraidGenerator::UInv(k) => 2 * k + 1,
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Semantic equality through the faithful representation in `Aut(F_N)`.
pub fn words_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.check_rank(b)?;
    Ok(a.to_automorphism() == b.to_automorphism())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationFamily {
    /// `λ^N = 1`
    LambdaOrder,
    /// `λ u_k = u_{k+1} λ`
    LambdaConjugation,
    /// `u_k u_l = u_l u_k` for `|k - l| ≥ 2`
    FarCommutation,
    /// `u_k u_{k+1} u_k = u_{k+1} u_k u_{k+1}`
    Braid,
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationFamily::LambdaOrder => "lambda-order",
            RelationFamily::LambdaConjugation => "lambda-conjugation",
            RelationFamily::FarCommutation => "far-commutation",
            RelationFamily::Braid => "braid",
        };
        f.write_str(s)
    }
}

/// One instance of a defining relation `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: RelationFamily,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

impl Relation {
    /// The relator `lhs · rhs⁻¹`, which equals the identity in `BC_N`.
    pub fn relator(&self) -> BraidWord {
        self.lhs.concat(&self.rhs.inverse()).unwrap()
    }
}

/// Every instance of the four defining relation families for rank `rank`.
pub fn relation_instances(rank: usize) -> Vec<Relation> {
    use BraidGenerator::{Lambda, U};
    let w = |letters: Vec<BraidGenerator>| BraidWord::new(rank, letters).unwrap();
    let mut out = vec![Relation {
        family: RelationFamily::LambdaOrder,
        lhs: BraidWord::lambda_power(rank, rank as i64),
        rhs: BraidWord::empty(rank),
    }];
    for k in 1..rank.saturating_sub(1) {
        out.push(Relation {
            family: RelationFamily::LambdaConjugation,
            lhs: w(vec![Lambda, U(k)]),
            rhs: w(vec![U(k + 1), Lambda]),
        });
    }
    for k in 1..rank {
        for l in (k + 2)..rank {
            out.push(Relation {
                family: RelationFamily::FarCommutation,
                lhs: w(vec![U(k), U(l)]),
                rhs: w(vec![U(l), U(k)]),
            });
        }
    }
    for k in 1..rank.saturating_sub(1) {
        out.push(Relation {
            family: RelationFamily::Braid,
            lhs: w(vec![U(k), U(k + 1), U(k)]),
            rhs: w(vec![U(k + 1), U(k), U(k + 1)]),
        });
    }
    out
}

#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub relation: Relation,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct RelationReport {
    pub rank: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {} = {}",
                if c.holds { "PASS" } else { "FAIL" },
                c.relation.family,
                c.relation.lhs,
                c.relation.rhs
            )?;
        }
        if self.all_hold() {
            writeln!(f, "all relations hold")
        } else {
            writeln!(f, "some relations FAIL")
        }
    }
}

/// Checks every defining relation as an identity of automorphisms of `F_N`.
pub fn check_relations(rank: usize) -> RelationReport {
    check_relations_with(rank, |r| r.lhs.to_automorphism() == r.rhs.to_automorphism())
}

/// Runs an arbitrary per-relation predicate (used for the tree and
/// quadrangulation actions).
pub fn check_relations_with<F: FnMut(&Relation) -> bool>(rank: usize, mut holds: F) -> RelationReport {
    let checks = relation_instances(rank)
        .into_iter()
        .map(|relation| {
            let ok = holds(&relation);
            RelationCheck { relation, holds: ok }
        })
        .collect();
    RelationReport { rank, checks }
}
