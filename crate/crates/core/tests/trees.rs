use std::collections::BTreeSet;

use braid_cyclic::braid::{check_relations_with, words_equal, BraidGenerator, BraidWord};
use braid_cyclic::tree::{enumerate_trees, CanonicalTree, LabeledTree};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Brute force: every assignment of a vertex pair to each label, kept when
/// the pairs form a spanning tree, deduplicated by vertex renaming.
fn brute_force_shapes(n: usize) -> BTreeSet<CanonicalTree> {
    let nv = n + 1;
    let pairs: Vec<[usize; 2]> = (0..nv).flat_map(|a| ((a + 1)..nv).map(move |b| [a, b])).collect();
    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; n];
    loop {
        let edges: Vec<[usize; 2]> = choice.iter().map(|&c| pairs[c]).collect();
        if let Ok(t) = LabeledTree::from_edges(edges, None) {
            out.insert(t.shape_key());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            choice[i] += 1;
            if choice[i] < pairs.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=4 {
        let fast: BTreeSet<CanonicalTree> = enumerate_trees(n).unwrap().iter().map(|t| t.shape_key()).collect();
        let slow = brute_force_shapes(n);
        assert_eq!(fast, slow, "n={n}");
    }
}

#[test]
fn relations_hold_on_all_trees() {
    for n in 2..=5 {
        let trees = enumerate_trees(n).unwrap();
        let report = check_relations_with(n, |r| trees.iter().all(|t| t.act_word(&r.lhs) == t.act_word(&r.rhs)));
        assert!(report.all_hold(), "n={n}\n{report}");
    }
}

#[test]
fn canonicalize_every_tree() {
    for n in 1..=5 {
        for t in enumerate_trees(n).unwrap() {
            let w = t.canonicalize_to_bush();
            assert!(w
                .letters()
                .iter()
                .all(|g| matches!(g, BraidGenerator::U(_) | BraidGenerator::UInv(_))));
            assert!(t.act_word(&w).is_bush(), "{t}");
        }
    }
}

#[test]
fn canonicalize_from_every_root() {
    for n in 1..=5 {
        for t in enumerate_trees(n).unwrap() {
            for r in 0..=n {
                let path = t.bush_path_from(r);
                let reached = t.clone().with_root(Some(r)).act_word(&path.word);
                assert!(reached.is_bush());
                assert_eq!(reached.complexity().unwrap(), n);
                assert!(path.complexities.windows(2).all(|w| w[1] < w[0]));
                assert_eq!(*path.complexities.last().unwrap(), n);
            }
        }
    }
}

#[test]
fn complexity_change_cases() {
    for n in 2..=5 {
        for t in enumerate_trees(n).unwrap() {
            for r in 0..=n {
                let c0 = t.complexity_from(r);
                for k in 1..n {
                    let rel = t.edge_relation(r, k);
                    for (g, inverse) in [(BraidGenerator::U(k), false), (BraidGenerator::UInv(k), true)] {
                        if let Some(expected) = rel.complexity_change(inverse) {
                            let c1 = t.act_generator(g).complexity_from(r);
                            assert_eq!(c1.cmp(&c0), expected, "{rel:?} {g}\n{t}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn lambda_only_relabels() {
    let t = LabeledTree::path(4);
    let l = t.act_generator(BraidGenerator::Lambda);
    assert_eq!(l.edge(1), t.edge(0));
    assert_eq!(t.act_word(&BraidWord::lambda_power(4, 4)), t);
    assert_eq!(LabeledTree::bush(5).complexity_from(0), 5);
    assert_eq!(LabeledTree::path(3).with_root(Some(0)).complexity().unwrap(), 6);
}

fn random_tree(seed: u64, n: usize) -> LabeledTree {
    LabeledTree::random(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #[test]
    fn generator_then_inverse(seed in any::<u64>(), n in 1usize..9, k in 0usize..32) {
        let t = random_tree(seed, n);
        let gens = BraidGenerator::all(n);
        let g = gens[k % gens.len()];
        prop_assert_eq!(t.act_generator(g).act_generator(g.inverse()), t.clone());
        // the root is carried along
        prop_assert_eq!(t.act_generator(g).root(), t.root());
    }

    #[test]
    fn semantic_equality_implies_same_tree(seed in any::<u64>(), n in 2usize..7, len in 0usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = LabeledTree::random(n, &mut rng);
        let w = BraidWord::random(n, len, &mut rng);
        // insert a relator at a random position: same element, different word
        let rel = &braid_cyclic::braid::relation_instances(n)[rand::Rng::gen_range(&mut rng, 0..braid_cyclic::braid::relation_instances(n).len())];
        let split = rand::Rng::gen_range(&mut rng, 0..=w.len());
        let (a, b) = w.letters().split_at(split);
        let mut letters = a.to_vec();
        letters.extend_from_slice(rel.relator().letters());
        letters.extend_from_slice(b);
        let w2 = BraidWord::new(n, letters).unwrap();
        prop_assert!(words_equal(&w, &w2).unwrap());
        prop_assert_eq!(t.act_word(&w), t.act_word(&w2));
    }

    #[test]
    fn random_trees_reach_bush(seed in any::<u64>(), n in 1usize..11) {
        let t = random_tree(seed, n);
        prop_assert!(t.act_word(&t.canonicalize_to_bush()).is_bush());
    }

    #[test]
    fn text_round_trip(seed in any::<u64>(), n in 1usize..10) {
        let t = random_tree(seed, n);
        let back = LabeledTree::parse(&t.to_string()).unwrap();
        prop_assert_eq!(back.root().is_some(), t.root().is_some());
        prop_assert_eq!(back, t);
    }

    #[test]
    fn canonical_form_round_trip(seed in any::<u64>(), n in 1usize..10) {
        let t = random_tree(seed, n);
        prop_assert_eq!(LabeledTree::from_canonical(&t.canonical_form()).unwrap(), t);
    }
}
