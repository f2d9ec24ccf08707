//! The braid-cyclic group `BC_N` acting on the free group, on edge-labeled
//! trees with `N` edges, on monotone quadrangulations of the `(2N+2)`-gon and
//! on tree-like coverings of the rose with `N` petals.
//!
//! All actions are left actions: in a word `g1 g2 … gm` the rightmost letter
//! acts first.

pub mod braid;
pub mod covering;
pub mod error;
pub mod free_group;
pub mod orbit;
pub mod quad;
pub mod tree;

pub use braid::{BraidGenerator, BraidWord};
pub use covering::TreeLikeCovering;
pub use error::{Error, Result};
pub use free_group::{FreeAutomorphism, FreeWord, Letter};
pub use quad::Quadrangulation;
pub use tree::LabeledTree;
