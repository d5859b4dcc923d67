mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trix_core::gen::gen_random;
use trix_core::oracle::occurrences_brute;
use trix_core::{Comparisons, Cursor, Error, ForwardTrie, Index, Step, Symbol};

fn set(v: Vec<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    v.into_iter().collect()
}

#[test]
fn fx1_steps() {
    let idx = Index::build(&fx1());
    let st = idx.suffix_tree();
    let mut p = Comparisons::default();
    let empty = idx.cursor();
    assert_eq!((empty.len(), empty.locus()), (0, (st.root(), None)));
    assert_eq!(empty.occurrences(&idx).len(), 4);
    assert_eq!(set(empty.occurrences(&idx)), (0..4).map(|v| (v, v)).collect());

    let b = empty.extend_left(&idx, B, &mut p).unwrap().unwrap();
    assert_eq!(st.node_string(b.locus().0), vec![B]);
    assert_eq!(b.locus().1, None);
    let ends: BTreeSet<usize> = b.occurrences(&idx).into_iter().map(|(_, v)| v).collect();
    assert_eq!(ends, BTreeSet::from([2, 3]));
    assert_eq!(b.extend_right(&idx, A, &mut p).unwrap(), None);

    let a = empty.extend_left(&idx, A, &mut p).unwrap().unwrap();
    let ab = a.extend_right(&idx, B, &mut p).unwrap().unwrap();
    assert_eq!(ab.occurrences(&idx), vec![(0, 3)]);
    assert_eq!(idx.find(&[A, B]).unwrap(), vec![(0, 3)]);
    assert_eq!(idx.count(&[B]).unwrap(), 2);
    assert_eq!(idx.find(&[]).unwrap().len(), 4);
    assert_eq!(idx.find(&[B, A]).unwrap(), vec![]);

    let steps = idx.run_script(&[Step::Left(B), Step::Right(A)]).unwrap();
    assert_eq!(steps.len(), 1);
    assert!(matches!(empty.extend_left(&idx, 0, &mut p), Err(Error::SymbolOutOfRange { .. })));
    assert!(matches!(empty.extend_right(&idx, 3, &mut p), Err(Error::SymbolOutOfRange { .. })));
    assert_eq!(empty.extend_left(&idx, A, &mut p).unwrap().unwrap().extend_left(&idx, A, &mut p).unwrap(), None);
}

/// Random L/R script: after every step the cursor exists iff the pattern is
/// a substring, and its occurrences are exactly the brute-force ones.
fn run_random_script(t: &ForwardTrie, idx: &Index, rng: &mut ChaCha8Rng, steps: usize) {
    let sigma = t.sigma().max(1);
    let mut probes = Comparisons::default();
    let mut c = Cursor::new();
    let mut pattern: Vec<Symbol> = Vec::new();
    for _ in 0..steps {
        let a = rng.gen_range(1..=sigma);
        let left = rng.gen_bool(0.5);
        let next = if left { c.extend_left(idx, a, &mut probes) } else { c.extend_right(idx, a, &mut probes) };
        let mut want = pattern.clone();
        if left {
            want.insert(0, a);
        } else {
            want.push(a);
        }
        let brute = occurrences_brute(t, &want);
        match next.unwrap() {
            Some(n) => {
                assert!(!brute.is_empty(), "accepted a non-substring {want:?}");
                assert_eq!(set(n.occurrences(idx)), set(brute.clone()));
                assert_eq!(n.count(idx), brute.len());
                assert_eq!(n.len(), want.len());
                c = n;
                pattern = want;
            }
            None => assert!(brute.is_empty(), "rejected substring {want:?}"),
        }
    }
}

#[test]
fn random_scripts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for seed in 0..40 {
        let n = rng.gen_range(1..120);
        let sigma = [1, 2, 3, 8][seed as usize % 4];
        let t = gen_random(n, sigma, seed).unwrap();
        let idx = Index::build(&t);
        for _ in 0..10 {
            run_random_script(&t, &idx, &mut rng, 25);
        }
    }
}

#[test]
fn find_matches_brute_force_on_all_short_patterns() {
    for t in random_tries(8, 40, 2) {
        let idx = Index::build(&t);
        for len in 0..=6u32 {
            for code in 0..(1u32 << len) {
                let p: Vec<Symbol> = (0..len).map(|i| 1 + ((code >> i) & 1)).collect();
                assert_eq!(set(idx.find(&p).unwrap()), set(occurrences_brute(&t, &p)), "{p:?}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Any interleaving of left and right steps spelling the same pattern
    /// lands on the same occurrences.
    #[test]
    fn direction_invariance(t in arb_repetitive_trie(60), v in 0usize..60, len in 0usize..8, order in any::<u64>()) {
        let idx = Index::build(&t);
        let v = v % t.node_count();
        let len = len.min(t.depth(v));
        let u = t.nav().anc(v, len).unwrap();
        let p = t.path_string(u, v, trix_core::Orientation::Forward).unwrap();
        let want = set(idx.find(&p).unwrap());
        prop_assert!(want.contains(&(u, v)));
        // start somewhere inside, grow to both sides in a random order
        let split = (order as usize) % (len + 1);
        let (mut lo, mut hi) = (split, split);
        let mut c = Cursor::new();
        let mut probes = Comparisons::default();
        let mut bits = order;
        while lo > 0 || hi < len {
            let go_left = hi == len || (lo > 0 && bits & 1 == 1);
            bits = bits.rotate_right(1);
            c = if go_left {
                lo -= 1;
                c.extend_left(&idx, p[lo], &mut probes).unwrap().unwrap()
            } else {
                hi += 1;
                c.extend_right(&idx, p[hi - 1], &mut probes).unwrap().unwrap()
            };
        }
        prop_assert_eq!(set(c.occurrences(&idx)), want);
    }

    #[test]
    fn scripts(t in arb_repetitive_trie(80), seed in any::<u64>()) {
        let idx = Index::build(&t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        run_random_script(&t, &idx, &mut rng, 30);
    }
}
