//! Brute-force ground truth. Every structure here is built directly from its
//! definition in quadratic time and space, so inputs are capped at a desk
//! scale limit (`TRIX_LIMIT`, default 2000 augmented nodes).

mod automaton;
mod substrings;

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

pub use automaton::{Kind, OracleAutomaton, OracleEdge, OracleNode};
pub use substrings::Substrings;

use crate::error::{Error, Result};
use crate::trie::{AugmentedTrie, ForwardTrie, Orientation, Symbol};

pub const DEFAULT_LIMIT: usize = 2000;

/// Size limit for oracle inputs, read from `TRIX_LIMIT` when set.
pub fn limit() -> usize {
    std::env::var("TRIX_LIMIT").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_LIMIT)
}

fn check_limit(tree: &ForwardTrie) -> Result<()> {
    let limit = limit();
    if tree.node_count() > limit {
        return Err(Error::SizeLimit { size: tree.node_count(), limit });
    }
    Ok(())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StringSet(HashSet<Vec<Symbol>>);

impl StringSet {
    pub fn contains(&self, s: &[Symbol]) -> bool {
        self.0.contains(s)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn insert(&mut self, s: Vec<Symbol>) -> bool {
        self.0.insert(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<Symbol>> {
        self.0.iter()
    }

    /// Members in lexicographic order.
    pub fn sorted(&self) -> Vec<Vec<Symbol>> {
        let mut v: Vec<_> = self.0.iter().cloned().collect();
        v.sort();
        v
    }

    pub fn reversed(&self) -> StringSet {
        StringSet(self.0.iter().map(|s| s.iter().rev().copied().collect()).collect())
    }
}

impl FromIterator<Vec<Symbol>> for StringSet {
    fn from_iter<I: IntoIterator<Item = Vec<Symbol>>>(iter: I) -> Self {
        StringSet(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Substr,
    Suffix,
}

/// Substring or suffix set of `tree` read in `orientation`. Substrings
/// include the empty string, suffixes do not.
pub fn enumerate(tree: &ForwardTrie, which: Which, orientation: Orientation) -> StringSet {
    let subs = Substrings::build(tree, orientation);
    (0..subs.len())
        .filter(|&x| which == Which::Substr || subs.is_suffix(x))
        .map(|x| subs.string(x))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extensions {
    pub l_mxml: Vec<Symbol>,
    pub r_mxml: Vec<Symbol>,
    pub mxml: Vec<Symbol>,
}

pub fn maximal_extensions(tree: &ForwardTrie, x: &[Symbol], orientation: Orientation) -> Result<Extensions> {
    check_limit(tree)?;
    let subs = Substrings::build(tree, orientation);
    let id = subs.lookup(x).ok_or(Error::NotSubstring)?;
    Ok(Extensions {
        l_mxml: subs.string(subs.l_mxml(id)),
        r_mxml: subs.string(subs.r_mxml(id)),
        mxml: subs.string(subs.mxml(id)),
    })
}

pub fn build_explicit(tree: &ForwardTrie, kind: Kind, orientation: Orientation) -> Result<OracleAutomaton> {
    check_limit(tree)?;
    Ok(OracleAutomaton::build(Arc::new(Substrings::build(tree, orientation)), kind))
}

pub use crate::wlinks::LinkKind;

/// Weiner link `W_a(v)` on an oracle backward suffix tree: the shortest
/// explicit extension of `a·str(v)`.
pub fn wlink_oracle(stree: &OracleAutomaton, v: usize, a: Symbol) -> Option<(usize, LinkKind)> {
    assert_eq!(stree.kind(), Kind::SuffixTree);
    let subs = stree.substrings();
    let start = subs.left_extend(stree.nodes()[v].repr, a)?;
    let mut x = start;
    loop {
        if let Some(t) = stree.node_of_repr(x) {
            let kind = if x == start { LinkKind::Hard } else { LinkKind::Soft };
            return Some((t, kind));
        }
        x = subs.children(x)[0].1;
    }
}

/// Every occurrence `(upper, lower)` of `pattern` read downward from
/// `upper` to `lower`.
pub fn occurrences_brute(tree: &ForwardTrie, pattern: &[Symbol]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 0..tree.node_count() {
        let mut u = v;
        let mut ok = true;
        for &c in pattern.iter().rev() {
            match tree.parent(u) {
                Some(p) if tree.label(u) == c => u = p,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.push((u, v));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeReport {
    pub n: usize,
    pub n_aug: usize,
    pub sigma: u32,
    pub stree_f_nodes: usize,
    pub stree_f_edges: usize,
    pub stree_b_nodes: usize,
    pub stree_b_edges: usize,
    pub dawg_f_nodes: usize,
    pub dawg_f_edges: usize,
    pub dawg_b_nodes: usize,
    pub dawg_b_edges: usize,
    pub cdawg_f_nodes: usize,
    pub cdawg_f_edges: usize,
    pub cdawg_b_nodes: usize,
    pub cdawg_b_edges: usize,
    pub sa_f_len: usize,
    pub sa_b_len: usize,
}

/// Node and edge counts of all six structures on the augmented trie.
pub fn measure(t: &AugmentedTrie) -> Result<SizeReport> {
    measure_with_limit(t, limit())
}

/// [`measure`] with an explicit node limit in place of `TRIX_LIMIT`.
pub fn measure_with_limit(t: &AugmentedTrie, limit: usize) -> Result<SizeReport> {
    if t.tree().node_count() > limit {
        return Err(Error::SizeLimit { size: t.tree().node_count(), limit });
    }
    let f = Arc::new(Substrings::build(t.tree(), Orientation::Forward));
    let b = Arc::new(Substrings::build(t.tree(), Orientation::Backward));
    let st_f = OracleAutomaton::build(f.clone(), Kind::SuffixTree);
    let st_b = OracleAutomaton::build(b.clone(), Kind::SuffixTree);
    let dawg_f = OracleAutomaton::build(f.clone(), Kind::Dawg);
    let dawg_b = OracleAutomaton::build(b.clone(), Kind::Dawg);
    let cdawg_f = OracleAutomaton::build(f, Kind::Cdawg);
    let cdawg_b = OracleAutomaton::build(b, Kind::Cdawg);
    Ok(SizeReport {
        n: t.input_nodes(),
        n_aug: t.node_count(),
        sigma: t.sigma(),
        stree_f_nodes: st_f.node_count(),
        stree_f_edges: st_f.edge_count(),
        stree_b_nodes: st_b.node_count(),
        stree_b_edges: st_b.edge_count(),
        dawg_f_nodes: dawg_f.node_count(),
        dawg_f_edges: dawg_f.edge_count(),
        dawg_b_nodes: dawg_b.node_count(),
        dawg_b_edges: dawg_b.edge_count(),
        cdawg_f_nodes: cdawg_f.node_count(),
        cdawg_f_edges: cdawg_f.edge_count(),
        cdawg_b_nodes: cdawg_b.node_count(),
        cdawg_b_edges: cdawg_b.edge_count(),
        sa_f_len: st_f.leaf_count(),
        sa_b_len: st_b.leaf_count(),
    })
}
