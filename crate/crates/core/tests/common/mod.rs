#![allow(dead_code)]

use proptest::prelude::*;
use trix_core::gen::gen_random;
use trix_core::trie::{parse_trie, AugmentedTrie, ForwardTrie};

/// a from the root to 1, b from the root to 2, b from 1 to 3.
pub fn fx1() -> ForwardTrie {
    parse_trie("TRIE v1 4 2\n0 1 1\n0 2 2\n1 3 2\n").unwrap()
}

pub fn fx1_aug() -> AugmentedTrie {
    AugmentedTrie::new(&fx1())
}

pub const A: u32 = 1;
pub const B: u32 = 2;
pub const T: u32 = 0;

/// Random trie strategy: up to `max_n` nodes over at most `max_sigma` symbols.
pub fn arb_trie(max_n: usize, max_sigma: usize) -> impl Strategy<Value = ForwardTrie> {
    (1..=max_n, 1..=max_sigma, any::<u64>()).prop_map(|(n, s, seed)| gen_random(n, s, seed).unwrap())
}

/// Small tries with few symbols have many repeats, which is where the
/// interesting cases live.
pub fn arb_repetitive_trie(max_n: usize) -> impl Strategy<Value = ForwardTrie> {
    prop_oneof![arb_trie(max_n, 2), arb_trie(max_n, 3), arb_trie(max_n, 6)]
}

pub fn random_tries(count: u64, n: usize, sigma: usize) -> impl Iterator<Item = ForwardTrie> {
    (0..count).map(move |seed| gen_random(n, sigma, seed).unwrap())
}

use std::collections::HashMap;
use trix_core::oracle::OracleAutomaton;
use trix_core::suffix_tree::SuffixTree;

/// Node correspondence between a suffix tree and the oracle backward suffix
/// tree of the same trie, by node string: `(suffix tree -> oracle, oracle ->
/// suffix tree)`.
pub fn oracle_map(st: &SuffixTree, oracle: &OracleAutomaton) -> (Vec<usize>, Vec<usize>) {
    let by: HashMap<Vec<u32>, usize> = (0..oracle.node_count()).map(|v| (oracle.string(v), v)).collect();
    let to_o: Vec<usize> = (0..st.node_count()).map(|v| by[&st.node_string(v)]).collect();
    let mut to_st = vec![usize::MAX; oracle.node_count()];
    for (v, &o) in to_o.iter().enumerate() {
        to_st[o] = v;
    }
    (to_o, to_st)
}
