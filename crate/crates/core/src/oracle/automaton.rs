//! Explicit suffix tries, suffix trees, DAWGs and CDAWGs built straight from
//! their definitions over a [`Substrings`] table.

use std::collections::HashMap;
use std::sync::Arc;

use super::Substrings;
use crate::trie::{Orientation, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    SuffixTrie,
    SuffixTree,
    Dawg,
    Cdawg,
}

#[derive(Debug, Clone)]
pub struct OracleNode {
    /// Substring id of the node's longest string.
    pub repr: usize,
    /// Some member string of the node is a suffix of the orientation.
    pub is_suffix: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleEdge {
    pub from: usize,
    pub to: usize,
    pub label: Vec<Symbol>,
    /// DAWG only: primary iff the label extends the source's longest string
    /// into the target's longest string.
    pub primary: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct OracleAutomaton {
    kind: Kind,
    subs: Arc<Substrings>,
    nodes: Vec<OracleNode>,
    edges: Vec<OracleEdge>,
    out: Vec<Vec<usize>>,
    slink: Vec<Option<usize>>,
    by_repr: HashMap<usize, usize>,
    // DAWG only: class of every substring id
    class_of: Vec<usize>,
}

impl OracleAutomaton {
    pub fn build(subs: Arc<Substrings>, kind: Kind) -> Self {
        match kind {
            Kind::SuffixTrie => Self::suffix_trie(subs),
            Kind::SuffixTree => Self::suffix_tree(subs),
            Kind::Dawg => Self::dawg(subs),
            Kind::Cdawg => Self::cdawg(subs),
        }
    }

    fn empty(subs: Arc<Substrings>, kind: Kind) -> Self {
        OracleAutomaton {
            kind,
            subs,
            nodes: Vec::new(),
            edges: Vec::new(),
            out: Vec::new(),
            slink: Vec::new(),
            by_repr: HashMap::new(),
            class_of: Vec::new(),
        }
    }

    fn add_node(&mut self, repr: usize, is_suffix: bool) -> usize {
        let id = self.nodes.len();
        self.nodes.push(OracleNode { repr, is_suffix });
        self.out.push(Vec::new());
        self.slink.push(None);
        self.by_repr.insert(repr, id);
        id
    }

    fn add_edge(&mut self, from: usize, to: usize, label: Vec<Symbol>, primary: Option<bool>) {
        self.out[from].push(self.edges.len());
        self.edges.push(OracleEdge { from, to, label, primary });
    }

    fn suffix_trie(subs: Arc<Substrings>) -> Self {
        // every suffix and every prefix of a suffix, which is every substring
        let mut a = Self::empty(subs.clone(), Kind::SuffixTrie);
        for x in 0..subs.len() {
            a.add_node(x, subs.is_suffix(x));
        }
        for x in 0..subs.len() {
            for &(c, y) in subs.children(x) {
                a.add_edge(x, y, vec![c], None);
            }
        }
        a
    }

    fn suffix_tree(subs: Arc<Substrings>) -> Self {
        let mut a = Self::empty(subs.clone(), Kind::SuffixTree);
        // nodes are the root and the right-maximal substrings
        let explicit = |x: usize| x == 0 || subs.is_right_maximal(x);
        a.add_node(0, false);
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            let from = a.by_repr[&x];
            for &(c, mut y) in subs.children(x) {
                let mut label = vec![c];
                while !explicit(y) {
                    let (d, z) = subs.children(y)[0];
                    label.push(d);
                    y = z;
                }
                let to = a.add_node(y, subs.is_suffix(y));
                a.add_edge(from, to, label, None);
                stack.push(y);
            }
        }
        a
    }

    fn dawg(subs: Arc<Substrings>) -> Self {
        let mut a = Self::empty(subs.clone(), Kind::Dawg);
        let n = subs.len();
        // l-mxml of every substring, memoised along extension chains
        let mut lm = vec![usize::MAX; n];
        for x in 0..n {
            let mut chain = Vec::new();
            let mut y = x;
            while lm[y] == usize::MAX && !subs.is_left_maximal(y) {
                chain.push(y);
                y = subs.left_extensions(y)[0].1;
            }
            let top = if lm[y] == usize::MAX { y } else { lm[y] };
            lm[y] = top;
            for z in chain {
                lm[z] = top;
            }
        }
        let mut reprs: Vec<usize> = lm.clone();
        reprs.sort_unstable();
        reprs.dedup();
        for &r in &reprs {
            a.add_node(r, subs.is_suffix(r));
        }
        a.class_of = lm.iter().map(|r| a.by_repr[r]).collect();
        let mut shortest = vec![usize::MAX; a.nodes.len()];
        for x in 0..n {
            let c = a.class_of[x];
            shortest[c] = shortest[c].min(subs.str_len(x));
        }
        for c in 0..a.nodes.len() {
            let r = a.nodes[c].repr;
            for &(sym, y) in subs.children(r) {
                let to = a.class_of[y];
                let primary = subs.str_len(r) + 1 == subs.str_len(a.nodes[to].repr);
                a.add_edge(c, to, vec![sym], Some(primary));
            }
            if r != 0 {
                a.slink[c] = Some(a.class_of[subs.suffix_of(r, shortest[c] - 1)]);
            }
        }
        a
    }

    fn cdawg(subs: Arc<Substrings>) -> Self {
        let dawg = Self::dawg(subs.clone());
        let mut a = Self::empty(subs.clone(), Kind::Cdawg);
        let kept = |c: usize| {
            let r = dawg.nodes[c].repr;
            r == 0 || subs.is_right_maximal(r)
        };
        let mut map = vec![usize::MAX; dawg.nodes.len()];
        for c in 0..dawg.nodes.len() {
            if kept(c) {
                map[c] = a.add_node(dawg.nodes[c].repr, dawg.nodes[c].is_suffix);
            }
        }
        for c in 0..dawg.nodes.len() {
            if !kept(c) {
                continue;
            }
            for &e in &dawg.out[c] {
                let mut label = dawg.edges[e].label.clone();
                let mut t = dawg.edges[e].to;
                while !kept(t) {
                    let e2 = dawg.out[t][0];
                    label.extend_from_slice(&dawg.edges[e2].label);
                    t = dawg.edges[e2].to;
                }
                a.add_edge(map[c], map[t], label, None);
            }
        }
        a
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn orientation(&self) -> Orientation {
        self.subs.orientation()
    }

    pub fn substrings(&self) -> &Substrings {
        &self.subs
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> &[OracleNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[OracleEdge] {
        &self.edges
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &OracleEdge> + '_ {
        self.out[v].iter().map(move |&e| &self.edges[e])
    }

    /// Target of the out-edge whose label starts with `a`.
    pub fn transition(&self, v: usize, a: Symbol) -> Option<&OracleEdge> {
        self.out_edges(v).find(|e| e.label[0] == a)
    }

    pub fn slink(&self, v: usize) -> Option<usize> {
        self.slink[v]
    }

    /// Longest string of node `v`.
    pub fn string(&self, v: usize) -> Vec<Symbol> {
        self.subs.string(self.nodes[v].repr)
    }

    pub fn str_len(&self, v: usize) -> usize {
        self.subs.str_len(self.nodes[v].repr)
    }

    pub fn end_set(&self, v: usize) -> Vec<usize> {
        self.subs.end_set(self.nodes[v].repr)
    }

    /// Node whose longest string is `s`.
    pub fn node_of(&self, s: &[Symbol]) -> Option<usize> {
        self.subs.lookup(s).and_then(|x| self.node_of_repr(x))
    }

    pub fn node_of_repr(&self, x: usize) -> Option<usize> {
        self.by_repr.get(&x).copied()
    }

    /// DAWG only: class containing substring `s`.
    pub fn class_of(&self, s: &[Symbol]) -> Option<usize> {
        assert_eq!(self.kind, Kind::Dawg);
        self.subs.lookup(s).map(|x| self.class_of[x])
    }

    /// DAWG only: all member strings of class `v`, shortest first.
    pub fn members(&self, v: usize) -> Vec<Vec<Symbol>> {
        assert_eq!(self.kind, Kind::Dawg);
        let mut m: Vec<usize> = (0..self.subs.len()).filter(|&x| self.class_of[x] == v).collect();
        m.sort_by_key(|&x| self.subs.str_len(x));
        m.into_iter().map(|x| self.subs.string(x)).collect()
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.nodes.len()).filter(|&v| self.out[v].is_empty()).count()
    }
}
