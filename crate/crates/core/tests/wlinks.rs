mod common;

use common::*;
use proptest::prelude::*;
use trix_core::gen::gen_random;
use trix_core::oracle::{build_explicit, wlink_oracle, Kind, LinkKind};
use trix_core::suffix_tree::SuffixTree;
use trix_core::wlinks::{effective_sigma, MicroMacro, WLinkAnswer};
use trix_core::{AugmentedTrie, Comparisons, Error, ForwardTrie, Orientation};

fn query(mm: &MicroMacro, st: &SuffixTree, v: usize, a: u32) -> Option<WLinkAnswer> {
    mm.query(st, v, a, &mut Comparisons::default()).unwrap()
}

#[test]
fn fx1_queries_and_arrays() {
    let st = SuffixTree::build(&fx1_aug());
    let by: std::collections::HashMap<Vec<u32>, usize> = (0..st.node_count()).map(|v| (st.node_string(v), v)).collect();
    let mm = MicroMacro::with_sigma(&st, st.node_count()).unwrap();
    assert_eq!(mm.micro_count(), 1);
    let mut want = vec![st.root(), by[&vec![T]], by[&vec![A, T]]];
    want.sort();
    assert_eq!(mm.pa(0, B), want.as_slice());
    assert_eq!(mm.successor(0, B), Some(st.root()));
    let a_leaf = by[&vec![A, T]];
    for sigma in 1..=6 {
        let mm = MicroMacro::with_sigma(&st, sigma).unwrap();
        assert_eq!(query(&mm, &st, st.root(), A), Some(WLinkAnswer { target: a_leaf, kind: LinkKind::Soft }));
        assert_eq!(query(&mm, &st, a_leaf, A), None);
    }
    let mm = MicroMacro::build(&st);
    assert!(matches!(mm.query(&st, 99, A, &mut Comparisons::default()), Err(Error::UnknownNode(99))));
    assert!(matches!(mm.query(&st, 0, 7, &mut Comparisons::default()), Err(Error::SymbolOutOfRange { .. })));
    assert!(MicroMacro::with_sigma(&st, 0).is_err());
}

#[test]
fn decomposition_extremes() {
    let st = SuffixTree::build(&AugmentedTrie::new(&gen_random(60, 4, 3).unwrap()));
    let whole = MicroMacro::with_sigma(&st, st.node_count()).unwrap();
    assert_eq!(whole.micro_count(), 1);
    let single = MicroMacro::with_sigma(&st, 1).unwrap();
    assert_eq!(single.micro_count(), st.node_count());
    for v in 1..st.node_count() {
        assert_eq!(single.micro_root(single.micro_of(v)), v);
        assert_eq!(single.macro_parent(single.micro_of(v)), st.parent(v));
    }
}

fn check_structure(st: &SuffixTree, mm: &MicroMacro) {
    let m = st.node_count();
    let sigma = mm.sigma();
    assert!(mm.micro_count() <= m.div_ceil(sigma) + 1);
    for v in 0..m {
        let mt = mm.micro_of(v);
        let r = mm.micro_root(mt);
        assert!(st.is_ancestor(r, v));
        if v != r {
            assert_eq!(mm.micro_of(st.parent(v).unwrap()), mt, "micro trees are connected");
        }
    }
    let mut probes = Comparisons::default();
    for mt in 0..mm.micro_count() {
        let syms = mm.pa_symbols(mt);
        assert!(syms.windows(2).all(|w| w[0] < w[1]));
        for a in 0..=st.trie().sigma() {
            let pa = mm.pa(mt, a);
            let want: Vec<usize> =
                (0..m).filter(|&v| mm.micro_of(v) == mt && st.hard_wlink(v, a, &mut probes).is_some()).collect();
            assert_eq!(pa, want.as_slice());
            assert_eq!(syms.contains(&a), !pa.is_empty());
            if let Some(&top) = pa.first() {
                assert_eq!(mm.successor(mt, a), Some(top));
                assert!(pa.iter().all(|&x| st.is_ancestor(top, x)), "topmost holder is above all others");
            }
        }
    }
}

/// Exhaustive comparison of every `(node, symbol)` with the oracle,
/// including the stored macro links.
fn check_queries(t: &ForwardTrie, sigmas: &[usize]) {
    let aug = AugmentedTrie::new(t);
    let st = SuffixTree::build(&aug);
    let oracle = build_explicit(aug.tree(), Kind::SuffixTree, Orientation::Backward).unwrap();
    let (to_o, to_st) = oracle_map(&st, &oracle);
    let want = |v: usize, a: u32| {
        wlink_oracle(&oracle, to_o[v], a).map(|(t, kind)| WLinkAnswer { target: to_st[t], kind })
    };
    let mut all = sigmas.to_vec();
    all.push(effective_sigma(&st));
    for &s in &all {
        let mm = MicroMacro::with_sigma(&st, s).unwrap();
        check_structure(&st, &mm);
        for mt in 0..mm.micro_count() {
            let r = mm.micro_root(mt);
            let stored: Vec<_> = mm.macro_links(mt).iter().map(|&(a, t, k)| (a, WLinkAnswer { target: t, kind: k })).collect();
            let expect: Vec<_> = (0..=aug.sigma()).filter_map(|a| want(r, a).map(|w| (a, w))).collect();
            assert_eq!(stored, expect, "macro links of {r}");
        }
        for v in 0..st.node_count() {
            for a in 0..=aug.sigma() {
                assert_eq!(query(&mm, &st, v, a), want(v, a), "W_{a}({v}) with sigma {s}");
            }
        }
        // hard links, P_a entries and P_a heads are one per hard link at
        // most; each micro root stores at most one link per symbol
        let n = st.node_count();
        let storage = mm.storage(&st);
        let width = aug.sigma() as usize + 1;
        assert!(storage.total() <= 3 * (n - 1) + mm.micro_count() * width.min(n), "{storage:?}");
    }
}

#[test]
fn queries_on_seeded_tries() {
    for (n, sigma) in [(1, 1), (2, 1), (30, 1), (50, 2), (80, 3), (120, 8), (200, 26)] {
        for t in random_tries(6, n, sigma) {
            check_queries(&t, &[1, 2, 3, 5, 16]);
        }
    }
}

/// Oracle links are monotone towards the root, hard holders closed
/// under LCA, a unique topmost holder below every soft source, constant
/// target along the path down to it.
fn check_link_structure(t: &ForwardTrie) {
    let aug = AugmentedTrie::new(t);
    let st = SuffixTree::build(&aug);
    let oracle = build_explicit(aug.tree(), Kind::SuffixTree, Orientation::Backward).unwrap();
    let (to_o, to_st) = oracle_map(&st, &oracle);
    let m = st.node_count();
    for a in 0..=aug.sigma() {
        let link: Vec<Option<(usize, LinkKind)>> =
            (0..m).map(|v| wlink_oracle(&oracle, to_o[v], a).map(|(t, k)| (to_st[t], k))).collect();
        let hard: Vec<usize> = (0..m).filter(|&v| matches!(link[v], Some((_, LinkKind::Hard)))).collect();
        for v in 1..m {
            if link[v].is_some() {
                assert!(link[st.parent(v).unwrap()].is_some(), "(a)");
            }
        }
        for &u in &hard {
            for &w in &hard {
                assert!(hard.contains(&st.lca(u, w)), "(b)");
            }
        }
        for v in 0..m {
            if let Some((target, LinkKind::Soft)) = link[v] {
                let below: Vec<usize> = hard.iter().copied().filter(|&u| u != v && st.is_ancestor(v, u)).collect();
                let top: Vec<usize> =
                    below.iter().copied().filter(|&u| below.iter().all(|&w| st.is_ancestor(u, w))).collect();
                assert_eq!(top.len(), 1, "(c), (d)");
                let mut z = top[0];
                loop {
                    assert_eq!(link[z].unwrap().0, target, "(e)");
                    if z == v {
                        break;
                    }
                    z = st.parent(z).unwrap();
                }
            }
        }
    }
}

#[test]
fn link_structure_on_seeded_tries() {
    for (n, sigma) in [(40, 2), (60, 3), (80, 6)] {
        for t in random_tries(8, n, sigma) {
            check_link_structure(&t);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn queries_match_oracle(t in arb_repetitive_trie(60), s in 1usize..8) {
        check_queries(&t, &[s]);
    }

    #[test]
    fn link_structure(t in arb_repetitive_trie(40)) {
        check_link_structure(&t);
    }
}
