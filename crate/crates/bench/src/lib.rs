//! Benchmark workloads shared by the criterion benches.

use trix_core::gen::{gen_broom, gen_random};
use trix_core::trie::Orientation;
use trix_core::{ForwardTrie, Index, Step, Symbol};

/// Named inputs: random tries over small and large alphabets and a broom,
/// whose explicit DAWG is quadratic.
pub fn workloads() -> Vec<(String, ForwardTrie)> {
    let mut out = Vec::new();
    for (n, sigma) in [(2000, 2), (2000, 26), (10_000, 4)] {
        out.push((format!("random-{n}-{sigma}"), gen_random(n, sigma, 1).unwrap()));
    }
    out.push(("broom-2002-1000".into(), gen_broom(2002, 1000).unwrap()));
    out
}

/// Up to `count` path strings of length at most `len`, ending at evenly
/// spaced nodes.
pub fn patterns(t: &ForwardTrie, count: usize, len: usize) -> Vec<Vec<Symbol>> {
    let step = (t.node_count() / count.max(1)).max(1);
    (1..t.node_count())
        .step_by(step)
        .take(count)
        .map(|v| {
            let u = t.nav().anc(v, t.depth(v).min(len)).unwrap();
            t.path_string(u, v, Orientation::Forward).unwrap()
        })
        .collect()
}

/// Scripts that grow each pattern outward from its middle, alternating
/// sides.
pub fn scripts(patterns: &[Vec<Symbol>]) -> Vec<Vec<Step>> {
    patterns
        .iter()
        .map(|p| {
            let mid = p.len() / 2;
            let (mut lo, mut hi) = (mid, mid);
            let mut steps = Vec::with_capacity(p.len());
            while lo > 0 || hi < p.len() {
                if hi < p.len() {
                    steps.push(Step::Right(p[hi]));
                    hi += 1;
                }
                if lo > 0 {
                    lo -= 1;
                    steps.push(Step::Left(p[lo]));
                }
            }
            steps
        })
        .collect()
}

/// Every (node, symbol) pair of the index, for W-link and transition sweeps.
pub fn all_queries(idx: &Index) -> Vec<(usize, Symbol)> {
    let sigma = idx.trie().sigma();
    (0..idx.suffix_tree().node_count()).flat_map(|v| (1..=sigma).map(move |a| (v, a))).collect()
}
