//! Exact arithmetic in the free group `F_N` on generators `s_0 .. s_{N-1}`.
//!
//! Words are always kept freely reduced, so derived equality on [`FreeWord`]
//! is equality of group elements. Automorphisms are stored as the tuple of
//! generator images, which makes them the equality oracle for braid words.

use std::fmt;

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: u32,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(generator: u32, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub const fn pos(generator: u32) -> Self {
        Letter::new(generator, false)
    }

    pub const fn neg(generator: u32) -> Self {
        Letter::new(generator, true)
    }

    pub const fn inv(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// Pushes `l` onto a reduced stack, cancelling against the top if possible.
#[inline]
fn push_reduced(stack: &mut Vec<Letter>, l: Letter) {
    match stack.last() {
        Some(&top) if top.cancels(l) => {
            stack.pop();
        }
        _ => stack.push(l),
    }
}

/// A freely reduced word in `F_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The single-letter word `s_k` (or `s_k^{-1}`).
    pub fn letter(rank: usize, l: Letter) -> Result<Self> {
        FreeWord::reduce(std::iter::once(l), rank)
    }

    /// Freely reduces an arbitrary letter sequence by a single stack scan.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I, rank: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for l in raw {
            if l.generator as usize >= rank {
                return Err(Error::Rank {
                    index: l.generator as usize,
                    rank,
                });
            }
            push_reduced(&mut letters, l);
        }
        Ok(FreeWord { rank, letters })
    }

    /// Builds from signed indices: `k + 1` for `s_k`, `-(k + 1)` for its inverse.
    pub fn from_signed(raw: &[i32], rank: usize) -> Result<Self> {
        let mut letters = Vec::with_capacity(raw.len());
        for &x in raw {
            if x == 0 {
                return Err(Error::Rank { index: 0, rank });
            }
            letters.push(Letter::new(x.unsigned_abs() - 1, x < 0));
        }
        FreeWord::reduce(letters, rank)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &FreeWord) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        self.check_rank(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(FreeWord {
            rank: self.rank,
            letters,
        })
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `self * other * self^{-1}`.
    pub fn conjugate(&self, other: &FreeWord) -> Result<FreeWord> {
        self.multiply(other)?.multiply(&self.invert())
    }

    /// Parses the text format: tokens `s<k>` / `s<k>'`, with `1` for the empty word.
    pub fn parse(text: &str, rank: usize) -> Result<FreeWord> {
        let mut letters = Vec::new();
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["1"] {
            return Ok(FreeWord::identity(rank));
        }
        for tok in tokens {
            let (body, inverse) = match tok.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let index: u32 = body
                .strip_prefix('s')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| Error::parse(1, tok, "expected s<k> or s<k>'"))?;
            if index as usize >= rank {
                return Err(Error::parse(
                    1,
                    tok,
                    format!("generator index out of range for rank {rank}"),
                ));
            }
            letters.push(Letter::new(index, inverse));
        }
        FreeWord::reduce(letters, rank)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", l.generator)?;
            if l.inverse {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of `F_N` given by the images of the generators; the
/// images of braid-cyclic elements are automorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        FreeAutomorphism {
            rank,
            images: (0..rank as u32)
                .map(|k| FreeWord {
                    rank,
                    letters: vec![Letter::pos(k)],
                })
                .collect(),
        }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        for w in &images {
            if w.rank != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: w.rank,
                });
            }
        }
        Ok(FreeAutomorphism { rank, images })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, k: usize) -> &FreeWord {
        &self.images[k]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.letters.len() == 1 && w.letters[0] == Letter::pos(k as u32))
    }

    /// Total letter count of all images.
    pub fn size(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }

    fn substitute_into(&self, letters: &[Letter], out: &mut Vec<Letter>) {
        for l in letters {
            let img = &self.images[l.generator as usize].letters;
            if l.inverse {
                for &m in img.iter().rev() {
                    push_reduced(out, m.inv());
                }
            } else {
                for &m in img {
                    push_reduced(out, m);
                }
            }
        }
    }

    /// Substitutes every letter of `w` by its image and reduces.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if self.rank != w.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: w.rank,
            });
        }
        let mut out = Vec::with_capacity(w.len());
        self.substitute_into(&w.letters, &mut out);
        Ok(FreeWord {
            rank: self.rank,
            letters: out,
        })
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<FreeAutomorphism> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| {
                let mut out = Vec::new();
                self.substitute_into(&w.letters, &mut out);
                FreeWord {
                    rank: self.rank,
                    letters: out,
                }
            })
            .collect();
        Ok(FreeAutomorphism {
            rank: self.rank,
            images,
        })
    }
}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.images.iter().enumerate() {
            writeln!(f, "s{k} -> {w}")?;
        }
        Ok(())
    }
}

pub fn automorphisms_equal(f: &FreeAutomorphism, g: &FreeAutomorphism) -> Result<bool> {
    if f.rank != g.rank {
        return Err(Error::RankMismatch {
            left: f.rank,
            right: g.rank,
        });
    }
    Ok(f.images == g.images)
}
