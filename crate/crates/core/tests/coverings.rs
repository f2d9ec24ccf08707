use braid_cyclic::braid::{BraidGenerator, BraidWord};
use braid_cyclic::covering::{act_on_covering, fold, verify_act_theorem, TreeLikeCovering};
use braid_cyclic::free_group::{FreeWord, Letter};
use braid_cyclic::tree::enumerate_trees;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_coverings(n: usize) -> Vec<TreeLikeCovering> {
    enumerate_trees(n)
        .unwrap()
        .into_iter()
        .flat_map(|t| (0..=n).map(move |r| TreeLikeCovering::from_tree(&t.clone().with_root(Some(r))).unwrap()))
        .collect()
}

fn random_word<R: Rng>(n: usize, len: usize, rng: &mut R) -> FreeWord {
    let raw: Vec<Letter> = (0..len)
        .map(|_| Letter::new(rng.gen_range(0..n as u32), rng.gen_bool(0.5)))
        .collect();
    FreeWord::reduce(raw, n).unwrap()
}

/// Membership by brute force: the sheet permutation of the word as a product
/// of explicit permutation arrays.
fn permutation_oracle(c: &TreeLikeCovering, w: &FreeWord) -> bool {
    let sheets = c.sheet_count();
    let mut perm: Vec<usize> = (0..sheets).collect();
    for l in w.letters() {
        let [a, b] = c.transpositions()[l.generator as usize];
        let mut sigma: Vec<usize> = (0..sheets).collect();
        sigma.swap(a, b);
        perm = perm.iter().map(|&p| sigma[p]).collect();
    }
    perm[c.base()] == c.base()
}

#[test]
fn tree_round_trip_exhaustive() {
    for n in 1..=4 {
        for c in all_coverings(n) {
            let t = c.to_tree();
            assert_eq!(t.root(), Some(c.base()));
            assert_eq!(TreeLikeCovering::from_tree(&t).unwrap(), c);
        }
    }
}

#[test]
fn generators_are_members_and_count_is_rank() {
    for n in 1..=4 {
        for c in all_coverings(n) {
            let gens = c.generators();
            assert_eq!(gens.len(), n * n);
            let mut dedup = gens.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), gens.len());
            for g in &gens {
                assert!(c.membership(g).unwrap(), "{g} not in\n{c}");
            }
            let folded = fold(&gens, n).unwrap();
            assert_eq!(folded.subgroup_rank(), n * n);
            assert_eq!(
                folded.index(),
                Some(n + 1),
                "generators do not span the full subgroup\n{c}"
            );
        }
    }
}

#[test]
fn act_theorem_exhaustive_generators() {
    for n in 1..=4 {
        for c in all_coverings(n) {
            for g in BraidGenerator::all(n) {
                let w = BraidWord::single(n, g).unwrap();
                let report = verify_act_theorem(&w, &c).unwrap();
                assert!(report.passed(), "{report}");
                assert_eq!(report.acted.base(), c.base());
            }
        }
    }
}

#[test]
fn act_theorem_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..500 {
        let n = 1 + i % 6;
        let c = TreeLikeCovering::random(n, &mut rng);
        let len = rng.gen_range(0..=15);
        let w = BraidWord::random(n, len, &mut rng);
        assert!(verify_act_theorem(&w, &c).unwrap().passed(), "{w}\n{c}");
    }
}

#[test]
fn fold_agrees_with_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut members = 0;
    for i in 0..10_000 {
        let n = 1 + i % 4;
        let c = TreeLikeCovering::random(n, &mut rng);
        let folded = fold(&c.generators(), n).unwrap();
        let len = rng.gen_range(0..=12);
        let w = random_word(n, len, &mut rng);
        let expected = c.membership(&w).unwrap();
        assert_eq!(folded.membership(&w).unwrap(), expected, "{w}\n{c}");
        assert_eq!(permutation_oracle(&c, &w), expected);
        members += expected as usize;
    }
    assert!(members > 1000, "too few members sampled: {members}");
}

#[test]
fn fold_rank_one_exhaustive_words() {
    let c = TreeLikeCovering::new(vec![[0, 1]], 0).unwrap();
    let folded = fold(&[FreeWord::parse("s0 s0", 1).unwrap()], 1).unwrap();
    for e in -8i32..=8 {
        let w = FreeWord::from_signed(&vec![e.signum(); e.unsigned_abs() as usize], 1).unwrap();
        assert_eq!(folded.membership(&w).unwrap(), c.membership(&w).unwrap());
    }
}

#[test]
fn empty_word_and_lambda_on_bush() {
    let c = TreeLikeCovering::bush(4);
    assert_eq!(act_on_covering(&BraidWord::empty(4), &c).unwrap(), c);
    let w = BraidWord::parse("L", 4).unwrap();
    let d = act_on_covering(&w, &c).unwrap();
    assert!(d.to_tree().is_bush());
    assert_eq!(d.base(), 0);
}

#[test]
fn adjacent_rewrite_on_two_edges() {
    // path 1 - 0 - 2 with edge 0 = {0,1}, edge 1 = {0,2}: u1 sends edge 0 to {0,2}
    let c = TreeLikeCovering::new(vec![[0, 1], [0, 2]], 0).unwrap();
    let d = act_on_covering(&BraidWord::parse("u1", 2).unwrap(), &c).unwrap();
    assert_eq!(
        d.to_tree(),
        c.to_tree().act_generator(BraidGenerator::U(1)).with_root(Some(0))
    );
    assert!(verify_act_theorem(&BraidWord::parse("u1", 2).unwrap(), &c)
        .unwrap()
        .passed());
}

proptest! {
    #[test]
    fn membership_is_a_subgroup(seed in any::<u64>(), n in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = TreeLikeCovering::random(n, &mut rng);
        let gens = c.generators();
        let a = &gens[rng.gen_range(0..gens.len())];
        let b = &gens[rng.gen_range(0..gens.len())];
        let x = a.multiply(&b.invert()).unwrap();
        prop_assert!(c.membership(&x).unwrap());
        prop_assert!(c.membership(&x.invert()).unwrap());
        let y = random_word(n, 6, &mut rng);
        prop_assert_eq!(
            c.membership(&y).unwrap(),
            c.membership(&y.multiply(&x).unwrap()).unwrap()
        );
    }

    #[test]
    fn membership_ignores_unreduced_insertions(seed in any::<u64>(), n in 1usize..6, k in 0u32..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = TreeLikeCovering::random(n, &mut rng);
        let w = random_word(n, 8, &mut rng);
        let k = k % n as u32;
        let split = rng.gen_range(0..=w.len());
        let padded: Vec<Letter> = w.letters()[..split]
            .iter()
            .copied()
            .chain([Letter::pos(k), Letter::neg(k)])
            .chain(w.letters()[split..].iter().copied())
            .collect();
        // tracing letter by letter without reduction
        let traced = padded.iter().fold(c.base(), |s, l| c.step(s, l.generator as usize));
        prop_assert_eq!(traced == c.base(), c.membership(&w).unwrap());
    }

    #[test]
    fn text_round_trip(seed in any::<u64>(), n in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = TreeLikeCovering::random(n, &mut rng);
        prop_assert_eq!(TreeLikeCovering::parse(&c.to_string()).unwrap(), c);
    }
}
