use std::collections::BTreeSet;

use braid_cyclic::braid::{check_relations_with, BraidGenerator, BraidWord};
use braid_cyclic::quad::{enumerate_monotone, Quadrangulation};
use braid_cyclic::tree::enumerate_trees;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn generators_preserve_monotonicity() {
    for n in 1..=4 {
        for q in enumerate_monotone(n).unwrap() {
            for g in BraidGenerator::all(n) {
                let r = q.act_generator(g).unwrap();
                assert!(r.is_monotone(), "{g} broke monotonicity of\n{q}");
                Quadrangulation::from_faces(n, r.faces().to_vec()).unwrap();
                assert_eq!(r.act_generator(g.inverse()).unwrap(), q, "{g} not inverted");
            }
        }
    }
}

#[test]
fn single_generator_compatibility_exhaustive() {
    for n in 1..=4 {
        for q in enumerate_monotone(n).unwrap() {
            for g in BraidGenerator::all(n) {
                let lhs = q.act_generator(g).unwrap().to_tree();
                let rhs = q.to_tree().act_generator(g);
                assert_eq!(lhs, rhs, "n={n} g={g}\n{q}");
            }
        }
    }
}

#[test]
fn enumeration_counts() {
    for n in 1..=5 {
        let all = enumerate_monotone(n).unwrap();
        let strict = (n as u64 + 1).pow(n as u32 - 1);
        assert_eq!(all.len() as u64, strict, "strict count n={n}");
        let classes: BTreeSet<_> = all.iter().map(Quadrangulation::rotation_key).collect();
        assert_eq!(
            classes.len(),
            enumerate_trees(n).unwrap().len(),
            "rotational count n={n}"
        );
    }
}

#[test]
fn from_tree_round_trip() {
    for n in 1..=5 {
        for t in enumerate_trees(n).unwrap() {
            let q = Quadrangulation::from_tree(&t);
            assert!(q.is_monotone(), "{t}");
            Quadrangulation::from_faces(n, q.faces().to_vec()).unwrap();
            assert_eq!(q.to_tree(), t);
            // the anchor: the top-labeled face holds the side (2N+1, 0)
            let f = q.face(n - 1);
            assert!(f.contains(&0) && f.contains(&(2 * n as u32 + 1)));
        }
    }
}

#[test]
fn from_tree_inverts_to_tree_up_to_rotation() {
    for n in 1..=4 {
        for q in enumerate_monotone(n).unwrap() {
            assert!(Quadrangulation::from_tree(&q.to_tree()).equal_up_to_rotation(&q));
        }
    }
}

#[test]
fn relations_hold_rotationally() {
    for n in 2..=4 {
        for q in enumerate_monotone(n).unwrap() {
            let report = check_relations_with(n, |r| {
                let a = q.act_word(&r.lhs).unwrap();
                let b = q.act_word(&r.rhs).unwrap();
                a.equal_up_to_rotation(&b)
            });
            assert!(report.all_hold(), "n={n}\n{q}\n{report}");
        }
    }
}

#[test]
fn extreme_faces_have_two_boundary_sides() {
    for n in 2..=5 {
        for q in enumerate_monotone(n).unwrap() {
            let m = q.polygon_size();
            for label in [0, n - 1] {
                let f = q.face(label);
                let boundary = (0..4)
                    .filter(|&i| {
                        let (a, b) = (f[i], f[(i + 1) % 4]);
                        (b + m - a) % m == 1 || (a + m - b) % m == 1
                    })
                    .count();
                assert!(boundary >= 2, "face {label} of\n{q}");
            }
        }
    }
}

#[test]
fn lambda_flip_keeps_black_diagonal() {
    for q in enumerate_monotone(4).unwrap() {
        let r = q.act_generator(BraidGenerator::Lambda).unwrap();
        let blacks = |f: [u32; 4]| f.iter().copied().filter(|v| v % 2 == 1).collect::<Vec<_>>();
        assert_eq!(blacks(r.face(0)), blacks(q.face(3)));
    }
}

fn random_monotone(n: usize, rng: &mut ChaCha8Rng) -> Quadrangulation {
    let t = braid_cyclic::LabeledTree::random(n, rng);
    let shift = 2 * rand::Rng::gen_range(rng, 0..=n as u32);
    Quadrangulation::from_tree(&t).rotated(shift)
}

#[test]
fn word_compatibility_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..1000 {
        let n = 2 + i % 5;
        let q = random_monotone(n, &mut rng);
        let len = rand::Rng::gen_range(&mut rng, 0..=20);
        let w = BraidWord::random(n, len, &mut rng);
        let lhs = q.act_word(&w).unwrap();
        assert!(lhs.is_monotone());
        assert_eq!(lhs.to_tree(), q.to_tree().act_word(&w), "{w}\n{q}");
    }
}

proptest! {
    #[test]
    fn text_format_round_trips(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_monotone(n, &mut rng);
        prop_assert_eq!(Quadrangulation::parse(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn word_then_inverse_is_identity(seed in any::<u64>(), n in 2usize..7, len in 0usize..15) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_monotone(n, &mut rng);
        let w = BraidWord::random(n, len, &mut rng);
        let back = q.act_word(&w).unwrap().act_word(&w.inverse()).unwrap();
        prop_assert_eq!(back, q);
    }
}
