//! Compact suffix tree of the backward trie, with suffix array, suffix links
//! and the table of hard Weiner links.
//!
//! Node ids are preorder ranks, so the subtree of `v` is the id range
//! `v .. v + size(v)` and its leaves are a contiguous run of the suffix array.
//! An edge label is stored as the trie node where it starts plus its length;
//! symbol `i` of the label is the label of the `i`-th trie ancestor.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::tree::{partition_point_counted, Comparisons, EulerLca};
use crate::trie::{AugmentedTrie, Symbol};

pub(crate) const NIL: usize = usize::MAX;

#[derive(Debug, Clone)]
pub struct SuffixTree {
    trie: AugmentedTrie,
    parent: Vec<usize>,
    depth: Vec<usize>,
    edge_start: Vec<usize>,
    leaf_trie: Vec<usize>,
    slink: Vec<usize>,
    // derived
    first: Vec<Symbol>,
    child_off: Vec<usize>,
    children: Vec<usize>,
    size: Vec<usize>,
    node_depth: Vec<usize>,
    leaf_lo: Vec<usize>,
    leaf_hi: Vec<usize>,
    sa: Vec<usize>,
    isa: Vec<usize>,
    leaf_of: Vec<usize>,
    hard_off: Vec<usize>,
    hard: Vec<(Symbol, usize)>,
    lca: EulerLca,
}

/// Primary arrays from which a [`SuffixTree`] can be rebuilt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixTreeParts {
    pub parent: Vec<usize>,
    pub depth: Vec<usize>,
    pub edge_start: Vec<usize>,
    pub leaf_trie: Vec<usize>,
    pub slink: Vec<usize>,
}

impl SuffixTree {
    pub fn build(trie: &AugmentedTrie) -> Self {
        let t = trie.tree();
        let bot = trie.bot();
        let nav = t.nav();
        let up = nav.jump_table();
        let n = t.node_count();

        // ranks[k][v]: rank of the first 2^k symbols read upward from v,
        // with the end of the string smaller than every symbol
        let mut ranks: Vec<Vec<u32>> = Vec::with_capacity(up.len() + 1);
        ranks.push((0..n).map(|v| if v == bot { 0 } else { t.label(v) + 1 }).collect());
        let mut order: Vec<usize> = (0..n).collect();
        for step in up.iter() {
            let prev = ranks.last().unwrap();
            let key = |v: usize| (prev[v], if v == bot { 0 } else { prev[step[v]] });
            order.sort_unstable_by_key(|&v| key(v));
            let mut next = vec![0u32; n];
            let mut r = 0;
            for i in 1..n {
                if key(order[i]) != key(order[i - 1]) {
                    r += 1;
                }
                next[order[i]] = r;
            }
            ranks.push(next);
        }
        let last = ranks.last().unwrap();
        order.sort_unstable_by_key(|&v| last[v]);
        debug_assert_eq!(order[0], bot);
        let sa: Vec<usize> = order[1..].to_vec();

        let lcp = |mut u: usize, mut v: usize| {
            let mut l = 0;
            for k in (0..ranks.len()).rev() {
                if ranks[k][u] == ranks[k][v] && u != bot && v != bot {
                    l += 1 << k;
                    if k < up.len() {
                        u = up[k][u];
                        v = up[k][v];
                    }
                }
            }
            l
        };

        // stack construction over the suffix array
        let mut parent = vec![NIL];
        let mut depth = vec![0usize];
        let mut leaf_trie = vec![NIL];
        let mut kids: Vec<Vec<usize>> = vec![Vec::new()];
        let mut stack = vec![0usize];
        for (i, &w) in sa.iter().enumerate() {
            let l = if i == 0 { 0 } else { lcp(sa[i - 1], w) };
            let mut last = NIL;
            while depth[*stack.last().unwrap()] > l {
                last = stack.pop().unwrap();
            }
            let top = *stack.last().unwrap();
            if depth[top] < l {
                let mid = parent.len();
                parent.push(top);
                depth.push(l);
                leaf_trie.push(NIL);
                kids.push(vec![last]);
                let slot = kids[top].iter().position(|&c| c == last).unwrap();
                kids[top][slot] = mid;
                parent[last] = mid;
                stack.push(mid);
            }
            let top = *stack.last().unwrap();
            let leaf = parent.len();
            parent.push(top);
            depth.push(nav.depth(w));
            leaf_trie.push(w);
            kids.push(Vec::new());
            kids[top].push(leaf);
            stack.push(leaf);
        }

        // renumber in preorder
        let m = parent.len();
        let mut id = vec![0; m];
        let mut pre = Vec::with_capacity(m);
        let mut st = vec![0usize];
        while let Some(v) = st.pop() {
            id[v] = pre.len();
            pre.push(v);
            st.extend(kids[v].iter().rev());
        }
        let parent: Vec<usize> = pre.iter().map(|&v| if parent[v] == NIL { NIL } else { id[parent[v]] }).collect();
        let depth: Vec<usize> = pre.iter().map(|&v| depth[v]).collect();
        let leaf_trie: Vec<usize> = pre.iter().map(|&v| leaf_trie[v]).collect();

        // edge starts from the leftmost leaf below each node
        let mut rep = vec![NIL; m];
        let mut next_leaf = NIL;
        for v in (0..m).rev() {
            if leaf_trie[v] != NIL {
                next_leaf = leaf_trie[v];
            }
            rep[v] = next_leaf;
        }
        let edge_start: Vec<usize> = (0..m)
            .map(|v| if v == 0 { NIL } else { nav.anc(rep[v], depth[parent[v]]).unwrap() })
            .collect();

        let mut leaf_of = vec![NIL; n];
        for v in 0..m {
            if leaf_trie[v] != NIL {
                leaf_of[leaf_trie[v]] = v;
            }
        }
        let mut lo = vec![NIL; m];
        let mut hi = vec![NIL; m];
        for v in (0..m).rev() {
            if leaf_trie[v] != NIL {
                lo[v] = v;
                hi[v] = v;
            }
            if v > 0 {
                let p = parent[v];
                lo[p] = lo[p].min(lo[v]);
                hi[p] = if hi[p] == NIL { hi[v] } else { hi[p].max(hi[v]) };
            }
        }
        let mut ch: Vec<Vec<usize>> = vec![Vec::new(); m];
        for v in 1..m {
            ch[parent[v]].push(v);
        }
        let lca = EulerLca::new(0, &ch);
        let mut slink = vec![NIL; m];
        for v in 1..m {
            if leaf_trie[v] != NIL {
                let p = t.parent(leaf_trie[v]).unwrap();
                slink[v] = if p == bot { 0 } else { leaf_of[p] };
            }
        }
        for v in 1..m {
            if leaf_trie[v] == NIL {
                slink[v] = lca.lca(slink[lo[v]], slink[hi[v]]);
            }
        }
        let parts = SuffixTreeParts { parent, depth, edge_start, leaf_trie, slink };
        Self::from_parts(trie.clone(), parts).expect("constructed suffix tree is consistent")
    }

    /// Rebuild the derived navigation arrays from the primary ones, checking
    /// that they describe a suffix tree of `trie`.
    pub fn from_parts(trie: AugmentedTrie, parts: SuffixTreeParts) -> Result<Self> {
        let SuffixTreeParts { parent, depth, edge_start, leaf_trie, slink } = parts;
        let t = trie.tree();
        let n = t.node_count();
        let m = parent.len();
        let bad = |msg: &str| Err(Error::Format(format!("suffix tree: {msg}")));
        if m == 0 || depth.len() != m || edge_start.len() != m || leaf_trie.len() != m || slink.len() != m {
            return bad("array lengths disagree");
        }
        if parent[0] != NIL || depth[0] != 0 {
            return bad("node 0 is not the root");
        }
        for v in 1..m {
            if parent[v] >= v || depth[v] <= depth[parent[v]] {
                return bad("nodes not in preorder or depths not increasing");
            }
            if edge_start[v] >= n || edge_start[v] == trie.bot() || slink[v] >= m {
                return bad("node reference out of range");
            }
            if leaf_trie[v] != NIL && (leaf_trie[v] >= n || leaf_trie[v] == trie.bot()) {
                return bad("leaf reference out of range");
            }
        }
        let first: Vec<Symbol> = (0..m).map(|v| if v == 0 { 0 } else { t.label(edge_start[v]) }).collect();
        let mut child_off = vec![0; m + 1];
        for v in 1..m {
            child_off[parent[v] + 1] += 1;
        }
        for v in 0..m {
            child_off[v + 1] += child_off[v];
        }
        let mut children = vec![0; m.saturating_sub(1)];
        let mut fill = child_off.clone();
        for v in 1..m {
            let p = parent[v];
            children[fill[p]] = v;
            fill[p] += 1;
        }
        let mut size = vec![1; m];
        for v in (1..m).rev() {
            size[parent[v]] += size[v];
        }
        let mut node_depth = vec![0; m];
        for v in 1..m {
            node_depth[v] = node_depth[parent[v]] + 1;
        }
        for v in 0..m {
            let kids = &children[child_off[v]..child_off[v + 1]];
            if kids.windows(2).any(|w| first[w[0]] >= first[w[1]] || w[0] + size[w[0]] != w[1]) {
                return bad("children not sorted by first symbol");
            }
            let is_leaf = kids.is_empty();
            if is_leaf != (leaf_trie[v] != NIL) || (v != 0 && !is_leaf && kids.len() < 2) {
                return bad("leaf marks or branching broken");
            }
        }
        let mut sa = Vec::new();
        let mut leaf_of = vec![NIL; n];
        for v in 0..m {
            if leaf_trie[v] != NIL {
                if leaf_of[leaf_trie[v]] != NIL {
                    return bad("trie node with two leaves");
                }
                leaf_of[leaf_trie[v]] = v;
                sa.push(leaf_trie[v]);
            }
        }
        if sa.len() + 1 != n {
            return bad("leaf count differs from the trie size");
        }
        let mut isa = vec![NIL; n];
        for (i, &w) in sa.iter().enumerate() {
            isa[w] = i;
        }
        let mut leaf_lo = vec![NIL; m];
        let mut leaf_hi = vec![0; m];
        let mut seen = 0;
        for v in 0..m {
            if leaf_trie[v] != NIL {
                leaf_lo[v] = seen;
                leaf_hi[v] = seen;
                seen += 1;
            }
        }
        for v in (1..m).rev() {
            let p = parent[v];
            leaf_lo[p] = leaf_lo[p].min(leaf_lo[v]);
            leaf_hi[p] = leaf_hi[p].max(leaf_hi[v]);
        }
        let nav = t.nav();
        for v in 1..m {
            let w = sa[leaf_lo[v]];
            if nav.anc(w, depth[parent[v]]) != Some(edge_start[v]) || depth[v] > nav.depth(w) {
                return bad("edge label does not follow the leftmost leaf");
            }
            if leaf_trie[v] != NIL && depth[v] != nav.depth(leaf_trie[v]) {
                return bad("leaf depth differs from its suffix length");
            }
            if depth[slink[v]] + 1 != depth[v] {
                return bad("suffix link depth");
            }
        }
        let mut hard_off = vec![0; m + 1];
        for v in 1..m {
            hard_off[slink[v] + 1] += 1;
        }
        for v in 0..m {
            hard_off[v + 1] += hard_off[v];
        }
        let mut hard = vec![(0, 0); m.saturating_sub(1)];
        let mut fill = hard_off.clone();
        for v in 1..m {
            let s = slink[v];
            let a = t.label(sa[leaf_lo[v]]);
            hard[fill[s]] = (a, v);
            fill[s] += 1;
        }
        for v in 0..m {
            let row = &mut hard[hard_off[v]..hard_off[v + 1]];
            row.sort_unstable();
            if row.windows(2).any(|w| w[0].0 == w[1].0) {
                return bad("two hard links with the same symbol");
            }
        }
        let ch: Vec<Vec<usize>> = (0..m).map(|v| children[child_off[v]..child_off[v + 1]].to_vec()).collect();
        let lca = EulerLca::new(0, &ch);
        Ok(SuffixTree {
            trie,
            parent,
            depth,
            edge_start,
            leaf_trie,
            slink,
            first,
            child_off,
            children,
            size,
            node_depth,
            leaf_lo,
            leaf_hi,
            sa,
            isa,
            leaf_of,
            hard_off,
            hard,
            lca,
        })
    }

    pub fn parts(&self) -> SuffixTreeParts {
        SuffixTreeParts {
            parent: self.parent.clone(),
            depth: self.depth.clone(),
            edge_start: self.edge_start.clone(),
            leaf_trie: self.leaf_trie.clone(),
            slink: self.slink.clone(),
        }
    }

    pub fn trie(&self) -> &AugmentedTrie {
        &self.trie
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn leaf_count(&self) -> usize {
        self.sa.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        (self.parent[v] != NIL).then_some(self.parent[v])
    }

    /// String depth.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Number of edges from the root.
    pub fn node_depth(&self, v: usize) -> usize {
        self.node_depth[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[self.child_off[v]..self.child_off[v + 1]]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaf_trie[v] != NIL
    }

    /// Trie node whose backward suffix this leaf spells.
    pub fn leaf_trie_node(&self, v: usize) -> Option<usize> {
        (self.leaf_trie[v] != NIL).then_some(self.leaf_trie[v])
    }

    /// Leaf spelling the backward suffix that starts at trie node `w`.
    pub fn leaf_of(&self, w: usize) -> Option<usize> {
        self.leaf_of.get(w).copied().filter(|&l| l != NIL)
    }

    /// Incoming edge label of `v` as (trie node where it starts, length).
    pub fn edge_label(&self, v: usize) -> Option<(usize, usize)> {
        (v != 0).then(|| (self.edge_start[v], self.depth[v] - self.depth[self.parent[v]]))
    }

    pub fn first_symbol(&self, v: usize) -> Option<Symbol> {
        (v != 0).then_some(self.first[v])
    }

    /// Symbol at offset `i` (0-based) of the string of `v`.
    pub fn symbol_at(&self, v: usize, i: usize) -> Symbol {
        assert!(i < self.depth[v]);
        let w = self.sa[self.leaf_lo[v]];
        self.trie.tree().label(self.trie.tree().nav().anc(w, i).unwrap())
    }

    /// Symbol at offset `off` along the incoming edge of `v`.
    pub fn edge_symbol(&self, v: usize, off: usize) -> Symbol {
        let t = self.trie.tree();
        t.label(t.nav().anc(self.edge_start[v], off).unwrap())
    }

    pub fn node_string(&self, v: usize) -> Vec<Symbol> {
        if self.depth[v] == 0 {
            return Vec::new();
        }
        let t = self.trie.tree();
        let mut w = self.sa[self.leaf_lo[v]];
        let mut out = Vec::with_capacity(self.depth[v]);
        for _ in 0..self.depth[v] {
            out.push(t.label(w));
            w = t.parent(w).unwrap_or(w);
        }
        out
    }

    /// `(SA, inverse)`; the inverse is indexed by trie node and is `usize::MAX`
    /// for `⊥`.
    pub fn suffix_array(&self) -> (&[usize], &[usize]) {
        (&self.sa, &self.isa)
    }

    /// Suffix-array interval `[lo, hi]` of the leaves below `v`.
    pub fn sa_interval(&self, v: usize) -> (usize, usize) {
        (self.leaf_lo[v], self.leaf_hi[v])
    }

    /// Trie ids of the leaves below `v`, in suffix-array order.
    pub fn subtree_leaves(&self, v: usize) -> &[usize] {
        &self.sa[self.leaf_lo[v]..=self.leaf_hi[v]]
    }

    pub fn subtree_size(&self, v: usize) -> usize {
        self.size[v]
    }

    /// Reflexive.
    #[inline]
    pub fn is_ancestor(&self, u: usize, v: usize) -> bool {
        u <= v && v < u + self.size[u]
    }

    pub fn lca(&self, u: usize, v: usize) -> usize {
        self.lca.lca(u, v)
    }

    pub fn slink(&self, v: usize) -> Option<usize> {
        (v != 0).then_some(self.slink[v])
    }

    pub fn child_by_symbol(&self, v: usize, c: Symbol, probes: &mut Comparisons) -> Option<usize> {
        let kids = self.children(v);
        let i = partition_point_counted(kids, |&k| self.first[k] < c, probes);
        kids.get(i).copied().filter(|&k| self.first[k] == c)
    }

    /// Child of `d` on the path to its proper descendant `v`.
    pub fn child_toward(&self, d: usize, v: usize, probes: &mut Comparisons) -> usize {
        debug_assert!(d != v && self.is_ancestor(d, v));
        let kids = self.children(d);
        let i = partition_point_counted(kids, |&k| k <= v, probes);
        kids[i - 1]
    }

    /// Hard W-links leaving `v`, sorted by symbol.
    pub fn hard_wlinks(&self, v: usize) -> &[(Symbol, usize)] {
        &self.hard[self.hard_off[v]..self.hard_off[v + 1]]
    }

    pub fn hard_wlink(&self, v: usize, a: Symbol, probes: &mut Comparisons) -> Option<usize> {
        let row = self.hard_wlinks(v);
        let i = partition_point_counted(row, |&(s, _)| s < a, probes);
        row.get(i).filter(|&&(s, _)| s == a).map(|&(_, u)| u)
    }

    pub fn hard_wlink_count(&self) -> usize {
        self.hard.len()
    }

    /// One line per node: `id parent depth [leaf:v] children=(c:id,...)`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for v in 0..self.node_count() {
            let p = self.parent(v).map_or("-".to_string(), |p| p.to_string());
            write!(s, "{v} {p} {}", self.depth[v]).unwrap();
            if let Some(w) = self.leaf_trie_node(v) {
                write!(s, " leaf:{w}").unwrap();
            }
            let kids: Vec<String> = self.children(v).iter().map(|&c| format!("{}:{c}", self.first[c])).collect();
            writeln!(s, " children=({})", kids.join(",")).unwrap();
        }
        s
    }
}
