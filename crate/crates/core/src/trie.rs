//! Forward tries, their augmented form with the auxiliary node `⊥`, and the
//! TRIE v1 text format.
//!
//! A trie is stored once, as a forward (root-to-leaf) tree. The backward trie
//! is the same storage read leaf-to-root, so every operation takes an
//! [`Orientation`] rather than materialising a second tree.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::tree::TreeNav;

pub type Symbol = u32;

/// Reserved label of the edge `⊥ → root`; smaller than every alphabet symbol.
pub const TERMINATOR: Symbol = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Forward,
    Backward,
}

#[derive(Debug, Clone)]
pub struct ForwardTrie {
    root: usize,
    parent: Vec<Option<usize>>,
    label: Vec<Symbol>,
    children: Vec<Vec<(Symbol, usize)>>,
    sigma: Symbol,
    nav: TreeNav,
}

/// Incremental builder; node 0 is the root.
#[derive(Debug, Clone)]
pub struct TrieBuilder {
    parent: Vec<Option<usize>>,
    label: Vec<Symbol>,
    children: Vec<Vec<(Symbol, usize)>>,
}

impl Default for TrieBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl TrieBuilder {
    pub fn new() -> Self {
        TrieBuilder { parent: vec![None], label: vec![TERMINATOR], children: vec![Vec::new()] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn child(&self, v: usize, symbol: Symbol) -> Option<usize> {
        let kids = &self.children[v];
        kids.binary_search_by_key(&symbol, |&(s, _)| s).ok().map(|i| kids[i].1)
    }

    pub fn has_child(&self, v: usize, symbol: Symbol) -> bool {
        self.child(v, symbol).is_some()
    }

    pub fn add_child(&mut self, parent: usize, symbol: Symbol) -> Result<usize> {
        if parent >= self.parent.len() {
            return Err(Error::UnknownNode(parent));
        }
        if symbol == TERMINATOR {
            return Err(Error::SymbolOutOfRange { symbol, sigma: Symbol::MAX });
        }
        let kids = &mut self.children[parent];
        match kids.binary_search_by_key(&symbol, |&(s, _)| s) {
            Ok(_) => Err(Error::DuplicateSibling { parent, symbol }),
            Err(pos) => {
                let id = self.parent.len();
                kids.insert(pos, (symbol, id));
                self.parent.push(Some(parent));
                self.label.push(symbol);
                self.children.push(Vec::new());
                Ok(id)
            }
        }
    }

    /// Returns the existing child or creates it.
    pub fn child_or_insert(&mut self, parent: usize, symbol: Symbol) -> Result<usize> {
        match self.child(parent, symbol) {
            Some(c) => Ok(c),
            None => self.add_child(parent, symbol),
        }
    }

    /// `sigma` defaults to the largest symbol used.
    pub fn finish(self, sigma: Option<Symbol>) -> ForwardTrie {
        let used = self.label.iter().copied().max().unwrap_or(0);
        ForwardTrie::assemble(0, self.parent, self.label, self.children, sigma.unwrap_or(used).max(used))
    }
}

impl ForwardTrie {
    fn assemble(
        root: usize,
        parent: Vec<Option<usize>>,
        label: Vec<Symbol>,
        children: Vec<Vec<(Symbol, usize)>>,
        sigma: Symbol,
    ) -> Self {
        let plain: Vec<Vec<usize>> =
            children.iter().map(|c| c.iter().map(|&(_, v)| v).collect()).collect();
        let nav = TreeNav::new(root, &parent, &plain);
        ForwardTrie { root, parent, label, children, sigma, nav }
    }

    /// Builds a trie from `(parent, child, symbol)` triples over nodes `0..n`
    /// rooted at 0.
    pub fn from_edges(n: usize, sigma: Symbol, edges: &[(usize, usize, Symbol)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("a trie needs at least one node".into()));
        }
        if edges.len() + 1 != n {
            return Err(Error::NotATree(format!("{} nodes need {} edges, got {}", n, n - 1, edges.len())));
        }
        let mut parent = vec![None; n];
        let mut label = vec![TERMINATOR; n];
        let mut children: Vec<Vec<(Symbol, usize)>> = vec![Vec::new(); n];
        for &(p, c, s) in edges {
            if p >= n {
                return Err(Error::UnknownNode(p));
            }
            if c >= n {
                return Err(Error::UnknownNode(c));
            }
            if s == TERMINATOR || s > sigma {
                return Err(Error::SymbolOutOfRange { symbol: s, sigma });
            }
            if c == 0 {
                return Err(Error::NotATree("root 0 cannot have a parent".into()));
            }
            if parent[c].is_some() {
                return Err(Error::NotATree(format!("node {c} has two parents")));
            }
            parent[c] = Some(p);
            label[c] = s;
            children[p].push((s, c));
        }
        for (p, kids) in children.iter_mut().enumerate() {
            kids.sort_unstable();
            if let Some(w) = kids.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::DuplicateSibling { parent: p, symbol: w[0].0 });
            }
        }
        // every node must be reachable from the root (rules out cycles)
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(_, c) in &children[v] {
                if !seen[c] {
                    seen[c] = true;
                    count += 1;
                    stack.push(c);
                }
            }
        }
        if count != n {
            return Err(Error::NotATree("cycle or node unreachable from root".into()));
        }
        Ok(Self::assemble(0, parent, label, children, sigma))
    }

    /// Trie of a word list; shared prefixes are merged.
    pub fn from_strings<S: AsRef<[Symbol]>>(words: &[S]) -> Result<Self> {
        let mut b = TrieBuilder::new();
        for w in words {
            let mut v = 0;
            for &s in w.as_ref() {
                v = b.child_or_insert(v, s)?;
            }
        }
        Ok(b.finish(None).bfs_renumbered())
    }

    /// Same trie with ids assigned breadth-first, siblings by symbol.
    pub fn bfs_renumbered(&self) -> Self {
        let n = self.node_count();
        let mut order = Vec::with_capacity(n);
        order.push(self.root);
        let mut i = 0;
        while i < order.len() {
            order.extend(self.children[order[i]].iter().map(|&(_, c)| c));
            i += 1;
        }
        let mut id = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            id[v] = k;
        }
        let edges: Vec<_> = order[1..]
            .iter()
            .map(|&v| (id[self.parent[v].unwrap()], id[v], self.label[v]))
            .collect();
        Self::from_edges(n, self.sigma, &edges).expect("renumbering keeps a valid trie")
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn sigma(&self) -> Symbol {
        self.sigma
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Label of the edge entering `v` (meaningless for the root).
    #[inline]
    pub fn label(&self, v: usize) -> Symbol {
        self.label[v]
    }

    pub fn children(&self, v: usize) -> &[(Symbol, usize)] {
        &self.children[v]
    }

    pub fn child(&self, v: usize, symbol: Symbol) -> Option<usize> {
        let kids = &self.children[v];
        kids.binary_search_by_key(&symbol, |&(s, _)| s).ok().map(|i| kids[i].1)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    pub fn depth(&self, v: usize) -> usize {
        self.nav.depth(v)
    }

    pub fn nav(&self) -> &TreeNav {
        &self.nav
    }

    /// Distinct symbols appearing on edges.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut s: Vec<Symbol> =
            (0..self.node_count()).filter(|&v| v != self.root).map(|v| self.label[v]).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::UnknownNode(v))
        }
    }

    /// `anc(u, j)`: the `j`-th ancestor of `u`.
    pub fn anc(&self, u: usize, j: usize) -> Result<Option<usize>> {
        self.check(u)?;
        Ok(self.nav.anc(u, j))
    }

    pub fn is_ancestor(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.nav.is_ancestor(u, v))
    }

    /// Forward: `from` is an ancestor of `to` and the result is `str_f(from, to)`.
    /// Backward: `from` is a descendant of `to` and the result is
    /// `str_b(from, to)`, the upward reading.
    pub fn path_string(&self, from: usize, to: usize, orientation: Orientation) -> Result<Vec<Symbol>> {
        let (upper, lower) = match orientation {
            Orientation::Forward => (from, to),
            Orientation::Backward => (to, from),
        };
        if !self.is_ancestor(upper, lower)? {
            return Err(Error::NotAncestor(upper, lower));
        }
        let mut out = Vec::with_capacity(self.depth(lower) - self.depth(upper));
        let mut v = lower;
        while v != upper {
            out.push(self.label[v]);
            v = self.parent[v].expect("upper is an ancestor");
        }
        if orientation == Orientation::Forward {
            out.reverse();
        }
        Ok(out)
    }

    /// Canonical TRIE v1 text: edges ordered by child id.
    pub fn to_trie_v1(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "TRIE v1 {} {}", self.node_count(), self.sigma);
        for v in 0..self.node_count() {
            if let Some(p) = self.parent[v] {
                let _ = writeln!(out, "{} {} {}", p, v, self.label[v]);
            }
        }
        out
    }

    /// Words (root-to-leaf label sequences), in preorder.
    pub fn leaf_words(&self) -> Vec<Vec<Symbol>> {
        let mut out = Vec::new();
        let mut stack = vec![(self.root, Vec::new())];
        while let Some((v, w)) = stack.pop() {
            if self.is_leaf(v) {
                out.push(w);
                continue;
            }
            for &(s, c) in self.children[v].iter().rev() {
                let mut w2 = w.clone();
                w2.push(s);
                stack.push((c, w2));
            }
        }
        out
    }

    /// Copy with `leaf` removed; later node ids shift down by one.
    pub fn without_leaf(&self, leaf: usize) -> Option<ForwardTrie> {
        if leaf == self.root || !self.is_leaf(leaf) {
            return None;
        }
        let remap = |v: usize| if v > leaf { v - 1 } else { v };
        let edges: Vec<_> = (0..self.node_count())
            .filter(|&v| v != leaf)
            .filter_map(|v| self.parent[v].map(|p| (remap(p), remap(v), self.label[v])))
            .collect();
        ForwardTrie::from_edges(self.node_count() - 1, self.sigma, &edges).ok()
    }
}

/// Parses the TRIE v1 format:
///
/// ```text
/// TRIE v1 <n> <sigma>
/// <parent> <child> <symbol>      (n - 1 lines)
/// ```
pub fn parse_trie(text: &str) -> Result<ForwardTrie> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 4 || h[0] != "TRIE" || h[1] != "v1" {
        return Err(Error::Parse { line: 1, msg: format!("bad header {header:?}") });
    }
    let num = |tok: &str, line: usize| -> Result<u64> {
        tok.parse::<u64>().map_err(|_| Error::Parse { line, msg: format!("not a non-negative integer: {tok:?}") })
    };
    let n = num(h[2], 1)? as usize;
    let sigma = num(h[3], 1)?;
    let sigma = Symbol::try_from(sigma).map_err(|_| Error::Parse { line: 1, msg: "sigma too large".into() })?;
    let mut edges = Vec::new();
    for (i, line) in lines {
        let lineno = i + 1;
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.len() != 3 {
            return Err(Error::Parse { line: lineno, msg: format!("expected `<parent> <child> <symbol>`, got {line:?}") });
        }
        let s = num(t[2], lineno)?;
        let s = Symbol::try_from(s).map_err(|_| Error::SymbolOutOfRange { symbol: Symbol::MAX, sigma })?;
        edges.push((num(t[0], lineno)? as usize, num(t[1], lineno)? as usize, s));
    }
    ForwardTrie::from_edges(n, sigma, &edges)
}

/// Maps bytes to symbols `1..` by their rank among the bytes that occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Charset {
    bytes: Vec<u8>,
}

impl Charset {
    pub fn from_bytes(mut bytes: Vec<u8>) -> Self {
        bytes.sort_unstable();
        bytes.dedup();
        Charset { bytes }
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn symbol(&self, b: u8) -> Option<Symbol> {
        self.bytes.binary_search(&b).ok().map(|i| i as Symbol + 1)
    }

    pub fn byte(&self, s: Symbol) -> Option<u8> {
        (s as usize).checked_sub(1).and_then(|i| self.bytes.get(i).copied())
    }

    pub fn encode(&self, text: &[u8]) -> Option<Vec<Symbol>> {
        text.iter().map(|&b| self.symbol(b)).collect()
    }
}

/// Parses a newline-delimited word list. Without a charset each line holds
/// whitespace-separated integer symbols; with `ascii` each byte is a symbol.
pub fn parse_word_list(text: &str, ascii: bool) -> Result<(ForwardTrie, Option<Charset>)> {
    if ascii {
        let cs = Charset::from_bytes(text.lines().flat_map(|l| l.bytes()).collect());
        let words: Vec<Vec<Symbol>> =
            text.lines().map(|l| cs.encode(l.as_bytes()).expect("charset covers input")).collect();
        return Ok((ForwardTrie::from_strings(&words)?, Some(cs)));
    }
    let mut words = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let mut w = Vec::new();
        for tok in line.split_whitespace() {
            let s: i64 = tok
                .parse()
                .map_err(|_| Error::Parse { line: i + 1, msg: format!("not an integer symbol: {tok:?}") })?;
            if s <= 0 || s > Symbol::MAX as i64 {
                return Err(Error::Parse { line: i + 1, msg: format!("symbol {s} must be a positive integer") });
            }
            w.push(s as Symbol);
        }
        words.push(w);
    }
    Ok((ForwardTrie::from_strings(&words)?, None))
}

/// Forward trie plus the auxiliary node `⊥` above the root, joined by an edge
/// labeled [`TERMINATOR`]. Original node ids are kept; `⊥` takes id `n`.
#[derive(Debug, Clone)]
pub struct AugmentedTrie {
    tree: ForwardTrie,
    input_nodes: usize,
}

impl AugmentedTrie {
    pub fn new(t: &ForwardTrie) -> Self {
        let n = t.node_count();
        let bot = n;
        let mut parent = t.parent.clone();
        let mut label = t.label.clone();
        let mut children = t.children.clone();
        parent[t.root] = Some(bot);
        label[t.root] = TERMINATOR;
        parent.push(None);
        label.push(TERMINATOR);
        children.push(vec![(TERMINATOR, t.root)]);
        AugmentedTrie { tree: ForwardTrie::assemble(bot, parent, label, children, t.sigma), input_nodes: n }
    }

    /// The whole augmented tree, rooted at `⊥`.
    pub fn tree(&self) -> &ForwardTrie {
        &self.tree
    }

    pub fn bot(&self) -> usize {
        self.input_nodes
    }

    /// Root of the input trie.
    pub fn input_root(&self) -> usize {
        0
    }

    pub fn input_nodes(&self) -> usize {
        self.input_nodes
    }

    /// `n̂ = n + 1`.
    pub fn node_count(&self) -> usize {
        self.input_nodes + 1
    }

    pub fn sigma(&self) -> Symbol {
        self.tree.sigma
    }

    pub fn terminator(&self) -> Symbol {
        TERMINATOR
    }

    /// The input trie, without `⊥`.
    pub fn base(&self) -> ForwardTrie {
        let n = self.input_nodes;
        let edges: Vec<_> =
            (1..n).map(|v| (self.tree.parent[v].unwrap(), v, self.tree.label[v])).collect();
        ForwardTrie::from_edges(n, self.tree.sigma, &edges).expect("augmented trie wraps a valid trie")
    }
}
