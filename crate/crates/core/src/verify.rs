//! Differential checks of an index against the brute-force oracle, plus a
//! shrinker that reduces a failing trie to a small counterexample.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dawg::EdgeKind;
use crate::gen::gen_random;
use crate::error::Result;
use crate::index::Index;
use crate::oracle::{build_explicit, occurrences_brute, wlink_oracle, Kind, OracleAutomaton, Substrings};
use crate::tree::Comparisons;
use crate::trie::{ForwardTrie, Orientation, Symbol};
use crate::wlinks::{LinkKind, WLinkAnswer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

fn fail<T>(check: &'static str, detail: String) -> std::result::Result<T, Failure> {
    Err(Failure { check, detail })
}

/// Run every check; `Ok(Err(_))` is the first mismatch found. Errors only
/// when the trie is over the oracle size limit.
pub fn verify_index(idx: &Index) -> Result<std::result::Result<(), Failure>> {
    Ok(Checker::new(idx)?.all())
}

pub fn verify_trie(t: &ForwardTrie) -> Result<std::result::Result<(), Failure>> {
    verify_index(&Index::build(t))
}

type Check = std::result::Result<(), Failure>;

/// An index paired with its oracle automata and the node correspondence
/// between them. Each method is one independent group of checks.
pub struct Checker<'a> {
    idx: &'a Index,
    oracle: OracleAutomaton,
    dawg: OracleAutomaton,
    by_string: HashMap<Vec<Symbol>, usize>,
    to_o: Vec<usize>,
    to_st: Vec<usize>,
}

impl<'a> Checker<'a> {
    pub fn new(idx: &'a Index) -> Result<Self> {
        let tree = idx.trie().tree();
        let oracle = build_explicit(tree, Kind::SuffixTree, Orientation::Backward)?;
        let dawg = build_explicit(tree, Kind::Dawg, Orientation::Forward)?;
        let by_string = (0..oracle.node_count()).map(|v| (oracle.string(v), v)).collect();
        Ok(Checker { idx, oracle, dawg, by_string, to_o: Vec::new(), to_st: Vec::new() })
    }

    pub fn oracle(&self) -> &OracleAutomaton {
        &self.oracle
    }

    pub fn oracle_dawg(&self) -> &OracleAutomaton {
        &self.dawg
    }

    pub fn all(&mut self) -> Check {
        self.suffix_tree()?;
        self.suffix_array()?;
        self.wlinks()?;
        self.wlink_structure()?;
        self.dawg()?;
        self.mirror()?;
        self.search()
    }

    /// Same node strings and parents as the oracle, suffix links, and the
    /// 2n-3 / 2n-4 size bounds. Later checks need the node map built here.
    pub fn suffix_tree(&mut self) -> Check {
        if !self.to_o.is_empty() {
            return Ok(());
        }
        let st = self.idx.suffix_tree();
        let n = self.idx.trie().node_count();
        if st.node_count() != self.oracle.node_count() {
            return fail("suffix-tree", format!("{} nodes, oracle has {}", st.node_count(), self.oracle.node_count()));
        }
        let mut to_o = Vec::with_capacity(st.node_count());
        for v in 0..st.node_count() {
            match self.by_string.get(&st.node_string(v)) {
                Some(&o) => to_o.push(o),
                None => return fail("suffix-tree", format!("node {v} spells a string the oracle lacks")),
            }
        }
        let mut to_st = vec![0; self.oracle.node_count()];
        for (v, &o) in to_o.iter().enumerate() {
            to_st[o] = v;
        }
        for e in self.oracle.edges() {
            if st.parent(to_st[e.to]) != Some(to_st[e.from]) {
                return fail("suffix-tree", format!("node {} has the wrong parent", to_st[e.to]));
            }
        }
        if n >= 3 && (st.node_count() > 2 * n - 3 || st.edge_count() > 2 * n - 4) {
            return fail("suffix-tree", format!("{} nodes, {} edges for n = {n}", st.node_count(), st.edge_count()));
        }
        for v in 1..st.node_count() {
            let s = st.node_string(v);
            if st.node_string(st.slink(v).unwrap()) != s[1..] {
                return fail("suffix-link", format!("slink({v})"));
            }
        }
        self.to_o = to_o;
        self.to_st = to_st;
        Ok(())
    }

    /// Length n-1 and strictly increasing suffixes.
    pub fn suffix_array(&self) -> Check {
        let aug = self.idx.trie();
        let n = aug.node_count();
        let (sa, _) = self.idx.suffix_tree().suffix_array();
        if sa.len() != n - 1 {
            return fail("suffix-array", format!("length {} for n = {n}", sa.len()));
        }
        let suffix = |w: usize| aug.tree().path_string(w, aug.bot(), Orientation::Backward).unwrap();
        let mut prev = None;
        for (i, &w) in sa.iter().enumerate() {
            let s = suffix(w);
            if prev.as_ref().is_some_and(|p| p >= &s) {
                return fail("suffix-array", format!("entries {} and {i} out of order", i - 1));
            }
            prev = Some(s);
        }
        Ok(())
    }

    fn oracle_link(&self, v: usize, a: Symbol) -> Option<WLinkAnswer> {
        wlink_oracle(&self.oracle, self.to_o[v], a).map(|(t, kind)| WLinkAnswer { target: self.to_st[t], kind })
    }

    /// Every (node, symbol) query, nil answers included.
    pub fn wlinks(&mut self) -> Check {
        self.suffix_tree()?;
        let st = self.idx.suffix_tree();
        let mut probes = Comparisons::default();
        for a in 0..=self.idx.trie().sigma() {
            for v in 0..st.node_count() {
                let want = self.oracle_link(v, a);
                let got = self.idx.wlinks().query_unchecked(st, v, a, &mut probes);
                if got != want {
                    return fail("wlink", format!("node {v} symbol {a}: got {got:?}, oracle {want:?}"));
                }
            }
        }
        Ok(())
    }

    /// Structure of the oracle W-links: closed upward, hard holders closed
    /// under LCA, and each soft link inherited from the topmost holder below.
    pub fn wlink_structure(&mut self) -> Check {
        self.suffix_tree()?;
        let st = self.idx.suffix_tree();
        let hard = |x: Option<WLinkAnswer>| matches!(x, Some(w) if w.kind == LinkKind::Hard);
        for a in 0..=self.idx.trie().sigma() {
            let link: Vec<Option<WLinkAnswer>> = (0..st.node_count()).map(|v| self.oracle_link(v, a)).collect();
            let holders: Vec<usize> = (0..st.node_count()).filter(|&v| hard(link[v])).collect();
            for v in 1..st.node_count() {
                if link[v].is_some() && link[st.parent(v).unwrap()].is_none() {
                    return fail("wlink-upward", format!("node {v} has an {a}-link, its parent has none"));
                }
            }
            // preorder-adjacent pairs suffice for LCA closure
            for w in holders.windows(2) {
                let z = st.lca(w[0], w[1]);
                if !hard(link[z]) {
                    return fail("wlink-lca", format!("lca of {} and {} lacks a hard {a}-link", w[0], w[1]));
                }
            }
            for v in 0..st.node_count() {
                let Some(WLinkAnswer { target, kind: LinkKind::Soft }) = link[v] else { continue };
                let u = st.slink(target).unwrap();
                if u == v || !st.is_ancestor(v, u) || !hard(link[u]) {
                    return fail("wlink-soft-source", format!("soft {a}-link of {v} does not come from a holder below it"));
                }
                let mut z = st.parent(u).unwrap();
                loop {
                    if link[z].map(|x| x.target) != Some(target) {
                        return fail("wlink-soft-path", format!("{a}-link target changes between {v} and {u}"));
                    }
                    if z == v {
                        break;
                    }
                    if hard(link[z]) {
                        return fail("wlink-soft-source", format!("holder {z} lies between {v} and {u}"));
                    }
                    z = st.parent(z).unwrap();
                }
            }
        }
        Ok(())
    }

    /// Full transition function of the implicit DAWG against the explicit
    /// one, target and edge kind.
    pub fn dawg(&mut self) -> Check {
        self.suffix_tree()?;
        let d = self.idx.dawg();
        if d.state_count() != self.dawg.node_count() {
            return fail("dawg", format!("{} states, oracle has {}", d.state_count(), self.dawg.node_count()));
        }
        let rev = |c: usize| -> Option<usize> {
            let mut s = self.dawg.string(c);
            s.reverse();
            self.by_string.get(&s).map(|&o| self.to_st[o])
        };
        for c in 0..self.dawg.node_count() {
            let Some(state) = rev(c) else {
                return fail("dawg", format!("class {c} has no suffix-tree node"));
            };
            for a in 0..=self.idx.trie().sigma() {
                let want = self.dawg.transition(c, a).map(|e| {
                    let kind = if e.primary == Some(true) { EdgeKind::Primary } else { EdgeKind::Secondary };
                    (rev(e.to), kind)
                });
                let got = d.transition(state, a).unwrap().map(|(t, k)| (Some(t), k));
                if got != want {
                    return fail("dawg", format!("state {state} symbol {a}: got {got:?}, oracle {want:?}"));
                }
            }
        }
        Ok(())
    }

    /// Substrings mirror under reversal, and so do left/right maximality.
    pub fn mirror(&self) -> Check {
        let tree = self.idx.trie().tree();
        let f = Substrings::build(tree, Orientation::Forward);
        let b = Substrings::build(tree, Orientation::Backward);
        if f.len() != b.len() {
            return fail("mirror-substrings", format!("{} forward substrings, {} backward", f.len(), b.len()));
        }
        for x in 0..f.len() {
            let mut s = f.string(x);
            s.reverse();
            let Some(y) = b.lookup(&s) else {
                return fail("mirror-substrings", format!("reversal of forward substring {s:?} missing backward"));
            };
            if f.is_right_maximal(x) != b.is_left_maximal(y) || f.is_left_maximal(x) != b.is_right_maximal(y) {
                return fail("mirror-maximality", format!("maximality of {:?} not mirrored", f.string(x)));
            }
        }
        Ok(())
    }

    /// Every path string of length up to 6, located left-first and built
    /// right-first, against brute-force enumeration.
    pub fn search(&self) -> Check {
        let idx = self.idx;
        let base = idx.trie().base();
        let mut probes = Comparisons::default();
        for v in 0..base.node_count() {
            for len in 0..=base.depth(v).min(6) {
                let u = base.nav().anc(v, len).unwrap();
                let p = base.path_string(u, v, Orientation::Forward).unwrap();
                let mut want = occurrences_brute(&base, &p);
                want.sort_unstable();
                let mut got = idx.find(&p).unwrap();
                got.sort_unstable();
                if got != want {
                    return fail("search", format!("pattern {p:?}: {} occurrences, brute force {}", got.len(), want.len()));
                }
                let mut c = idx.cursor();
                for &a in &p {
                    match c.extend_right(idx, a, &mut probes).unwrap() {
                        Some(next) => c = next,
                        None => return fail("search", format!("appending {p:?} failed")),
                    }
                }
                if c.count(idx) != want.len() {
                    return fail("search", format!("appending {p:?} gives {} occurrences", c.count(idx)));
                }
            }
        }
        Ok(())
    }
}

/// Random trie for sweep number `seed`: up to 300 nodes, alphabet cycling
/// through 2, 8, 26 and half the node count.
pub fn seeded_trie(seed: u64) -> ForwardTrie {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=300usize);
    let sigma = [2, 8, 26, n.div_ceil(2)][(seed % 4) as usize];
    gen_random(n, sigma, rng.gen()).expect("valid parameters")
}

/// Remove leaves one at a time while `fails` keeps holding.
pub fn shrink(t: &ForwardTrie, fails: impl Fn(&ForwardTrie) -> bool) -> ForwardTrie {
    let mut cur = t.clone();
    'outer: loop {
        for v in (1..cur.node_count()).rev() {
            if cur.is_leaf(v) {
                if let Some(smaller) = cur.without_leaf(v) {
                    if fails(&smaller) {
                        cur = smaller;
                        continue 'outer;
                    }
                }
            }
        }
        return cur;
    }
}
