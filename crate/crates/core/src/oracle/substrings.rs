//! Uncompacted trie of every substring of a tree, read in one orientation,
//! with the full occurrence list of each substring.

use std::collections::HashMap;

use crate::trie::{ForwardTrie, Orientation, Symbol};

#[derive(Debug, Clone)]
struct Node {
    parent: Option<usize>,
    len: usize,
    children: Vec<(Symbol, usize)>,
    // (start, end) in reading order: forward (upper, lower), backward (lower, upper)
    occ: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct Substrings {
    orientation: Orientation,
    tree: ForwardTrie,
    nodes: Vec<Node>,
    loc: HashMap<(usize, usize), usize>,
}

impl Substrings {
    pub fn build(tree: &ForwardTrie, orientation: Orientation) -> Self {
        let mut s = Substrings {
            orientation,
            tree: tree.clone(),
            nodes: vec![Node { parent: None, len: 0, children: Vec::new(), occ: Vec::new() }],
            loc: HashMap::new(),
        };
        let n = tree.node_count();
        match orientation {
            Orientation::Forward => {
                for u in 0..n {
                    let mut stack = vec![(u, 0usize)];
                    while let Some((v, x)) = stack.pop() {
                        s.record(x, u, v);
                        for &(a, c) in tree.children(v) {
                            let y = s.child_or_insert(x, a);
                            stack.push((c, y));
                        }
                    }
                }
            }
            Orientation::Backward => {
                for v in 0..n {
                    let mut x = 0;
                    let mut u = v;
                    s.record(x, v, u);
                    while let Some(p) = tree.parent(u) {
                        x = s.child_or_insert(x, tree.label(u));
                        u = p;
                        s.record(x, v, u);
                    }
                }
            }
        }
        s
    }

    fn record(&mut self, x: usize, start: usize, end: usize) {
        self.nodes[x].occ.push((start, end));
        self.loc.insert((start, end), x);
    }

    fn child_or_insert(&mut self, x: usize, a: Symbol) -> usize {
        let kids = &self.nodes[x].children;
        match kids.binary_search_by_key(&a, |&(s, _)| s) {
            Ok(i) => kids[i].1,
            Err(i) => {
                let id = self.nodes.len();
                let len = self.nodes[x].len + 1;
                self.nodes[x].children.insert(i, (a, id));
                self.nodes.push(Node { parent: Some(x), len, children: Vec::new(), occ: Vec::new() });
                id
            }
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn tree(&self) -> &ForwardTrie {
        &self.tree
    }

    /// Number of distinct substrings, including the empty string (id 0).
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn str_len(&self, x: usize) -> usize {
        self.nodes[x].len
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.nodes[x].parent
    }

    pub fn children(&self, x: usize) -> &[(Symbol, usize)] {
        &self.nodes[x].children
    }

    pub fn child(&self, x: usize, a: Symbol) -> Option<usize> {
        let kids = &self.nodes[x].children;
        kids.binary_search_by_key(&a, |&(s, _)| s).ok().map(|i| kids[i].1)
    }

    pub fn occurrences(&self, x: usize) -> &[(usize, usize)] {
        &self.nodes[x].occ
    }

    /// Sorted set of tree nodes where occurrences end, in reading order.
    pub fn end_set(&self, x: usize) -> Vec<usize> {
        let mut e: Vec<usize> = self.nodes[x].occ.iter().map(|&(_, e)| e).collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    pub fn string(&self, mut x: usize) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.nodes[x].len);
        while let Some(p) = self.nodes[x].parent {
            let a = self.nodes[p].children.iter().find(|&&(_, c)| c == x).unwrap().0;
            out.push(a);
            x = p;
        }
        out.reverse();
        out
    }

    pub fn lookup(&self, s: &[Symbol]) -> Option<usize> {
        s.iter().try_fold(0, |x, &a| self.child(x, a))
    }

    /// Suffix trie node of the occurrence `(start, end)`, if that pair is a
    /// valid occurrence in this orientation.
    pub fn locate(&self, start: usize, end: usize) -> Option<usize> {
        self.loc.get(&(start, end)).copied()
    }

    /// Is this substring a member of the suffix set of its orientation?
    pub fn is_suffix(&self, x: usize) -> bool {
        x != 0 && self.nodes[x].occ.iter().any(|&(_, e)| self.ends_at_boundary(e))
    }

    fn ends_at_boundary(&self, end: usize) -> bool {
        match self.orientation {
            Orientation::Forward => self.tree.is_leaf(end),
            Orientation::Backward => end == self.tree.root(),
        }
    }

    fn starts_at_boundary(&self, start: usize) -> bool {
        match self.orientation {
            Orientation::Forward => start == self.tree.root(),
            Orientation::Backward => self.tree.is_leaf(start),
        }
    }

    /// Symbols `a` such that `aX` is a substring, with one witnessing
    /// occurrence of `aX` each.
    pub fn left_extensions(&self, x: usize) -> Vec<(Symbol, usize)> {
        let mut out: Vec<(Symbol, usize)> = Vec::new();
        for &(s, e) in &self.nodes[x].occ {
            match self.orientation {
                Orientation::Forward => {
                    if let Some(p) = self.tree.parent(s) {
                        out.push((self.tree.label(s), self.loc[&(p, e)]));
                    }
                }
                Orientation::Backward => {
                    for &(a, w) in self.tree.children(s) {
                        out.push((a, self.loc[&(w, e)]));
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn left_extend(&self, x: usize, a: Symbol) -> Option<usize> {
        for &(s, e) in &self.nodes[x].occ {
            match self.orientation {
                Orientation::Forward => {
                    if let Some(p) = self.tree.parent(s) {
                        if self.tree.label(s) == a {
                            return Some(self.loc[&(p, e)]);
                        }
                    }
                }
                Orientation::Backward => {
                    if let Some(w) = self.tree.child(s, a) {
                        return Some(self.loc[&(w, e)]);
                    }
                }
            }
        }
        None
    }

    pub fn is_right_maximal(&self, x: usize) -> bool {
        self.nodes[x].children.len() >= 2 || self.nodes[x].occ.iter().any(|&(_, e)| self.ends_at_boundary(e))
    }

    pub fn is_left_maximal(&self, x: usize) -> bool {
        if self.nodes[x].occ.iter().any(|&(s, _)| self.starts_at_boundary(s)) {
            return true;
        }
        let mut first = None;
        for &(s, _) in &self.nodes[x].occ {
            let syms: Vec<Symbol> = match self.orientation {
                Orientation::Forward => vec![self.tree.label(s)],
                Orientation::Backward => self.tree.children(s).iter().map(|&(a, _)| a).collect(),
            };
            for a in syms {
                match first {
                    None => first = Some(a),
                    Some(b) if b != a => return true,
                    _ => {}
                }
            }
        }
        false
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        self.is_left_maximal(x) && self.is_right_maximal(x)
    }

    /// Node of the length-`k` suffix of substring `x`.
    pub fn suffix_of(&self, x: usize, k: usize) -> usize {
        let len = self.nodes[x].len;
        assert!(k <= len);
        let (s, e) = self.nodes[x].occ[0];
        let nav = self.tree.nav();
        match self.orientation {
            Orientation::Forward => self.loc[&(nav.anc(e, k).unwrap(), e)],
            Orientation::Backward => self.loc[&(nav.anc(s, len - k).unwrap(), e)],
        }
    }

    /// Shortest right-maximal extension `Xβ`.
    pub fn r_mxml(&self, mut x: usize) -> usize {
        while !self.is_right_maximal(x) {
            x = self.nodes[x].children[0].1;
        }
        x
    }

    /// Shortest left-maximal extension `αX`.
    pub fn l_mxml(&self, mut x: usize) -> usize {
        while !self.is_left_maximal(x) {
            x = self.left_extensions(x)[0].1;
        }
        x
    }

    /// Shortest maximal extension, composed as `r_mxml(l_mxml(X))`.
    pub fn mxml(&self, x: usize) -> usize {
        self.r_mxml(self.l_mxml(x))
    }

    /// Shortest maximal `αXβ` found by breadth-first search over one-symbol
    /// extensions on either side. Independent of the composition route.
    pub fn mxml_by_search(&self, x: usize) -> usize {
        let mut frontier = vec![x];
        let mut seen = std::collections::HashSet::from([x]);
        loop {
            let mut hits: Vec<usize> = frontier.iter().copied().filter(|&y| self.is_maximal(y)).collect();
            if !hits.is_empty() {
                hits.sort_unstable();
                hits.dedup();
                assert_eq!(hits.len(), 1, "shortest maximal extension is unique");
                return hits[0];
            }
            let mut next = Vec::new();
            for &y in &frontier {
                for &(_, z) in self.children(y).iter().chain(self.left_extensions(y).iter()) {
                    if seen.insert(z) {
                        next.push(z);
                    }
                }
            }
            frontier = next;
        }
    }
}
