//! Weiner links of the backward suffix tree in linear space.
//!
//! Hard links live in the suffix tree. Soft links are answered from a
//! micro-macro decomposition: every micro-tree root stores all of its links,
//! and every micro tree keeps, per symbol `a`, the sorted ids of its nodes
//! that hold a hard `a`-link. Node ids are preorder ranks, so these arrays
//! are sorted by preorder rank and the first entry is the topmost holder.

use crate::error::{Error, Result};
use crate::suffix_tree::{SuffixTree, NIL};
use crate::tree::{partition_point_counted, Comparisons};
use crate::trie::{Symbol, TERMINATOR};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinkKind {
    Hard,
    Soft,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WLinkAnswer {
    pub target: usize,
    pub kind: LinkKind,
}

impl WLinkAnswer {
    fn hard(target: usize) -> Self {
        WLinkAnswer { target, kind: LinkKind::Hard }
    }

    fn soft(target: usize) -> Self {
        WLinkAnswer { target, kind: LinkKind::Soft }
    }
}

/// Stored entries beyond the suffix tree's own arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WLinkStorage {
    pub hard_links: usize,
    pub macro_entries: usize,
    pub pa_entries: usize,
    /// One per non-empty `P_a` array: its first entry, the topmost holder.
    pub successors: usize,
    pub micro_trees: usize,
}

impl WLinkStorage {
    pub fn total(&self) -> usize {
        self.hard_links + self.macro_entries + self.pa_entries + self.successors
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MicroMacro {
    sigma: usize,
    micro_of: Vec<usize>,
    roots: Vec<usize>,
    macro_parent: Vec<usize>,
    macro_off: Vec<usize>,
    macro_links: Vec<(Symbol, usize, LinkKind)>,
    // per micro tree: (symbol, lo, hi) ranges into `pa`
    pa_off: Vec<usize>,
    pa_dir: Vec<(Symbol, usize, usize)>,
    pa: Vec<usize>,
}

/// Number of distinct symbols other than the terminator, at least 1.
pub fn effective_sigma(st: &SuffixTree) -> usize {
    st.trie().tree().symbols().iter().filter(|&&a| a != TERMINATOR).count().max(1)
}

impl MicroMacro {
    pub fn build(st: &SuffixTree) -> Self {
        Self::with_sigma(st, effective_sigma(st)).expect("effective sigma is positive")
    }

    pub fn with_sigma(st: &SuffixTree, sigma: usize) -> Result<Self> {
        let mut mm = Self::decompose(st, sigma)?;
        mm.build_pa_arrays(st);
        mm.build_macro_wlinks(st);
        Ok(mm)
    }

    /// Greedy bottom-up cut: a node becomes a micro-tree root once the mass
    /// gathered below it reaches `sigma`.
    fn decompose(st: &SuffixTree, sigma: usize) -> Result<Self> {
        if sigma < 1 {
            return Err(Error::InvalidParameter("decomposition needs sigma >= 1".into()));
        }
        let m = st.node_count();
        let mut mass = vec![1usize; m];
        let mut cut = vec![false; m];
        for v in (0..m).rev() {
            if mass[v] >= sigma || v == 0 {
                cut[v] = true;
            } else {
                let p = st.parent(v).unwrap();
                mass[p] += mass[v];
            }
        }
        let mut micro_of = vec![NIL; m];
        let mut roots = Vec::new();
        let mut macro_parent = Vec::new();
        for v in 0..m {
            if cut[v] {
                micro_of[v] = roots.len();
                macro_parent.push(st.parent(v).map_or(NIL, |p| micro_of[p]));
                roots.push(v);
            } else {
                micro_of[v] = micro_of[st.parent(v).unwrap()];
            }
        }
        Ok(MicroMacro {
            sigma,
            micro_of,
            roots,
            macro_parent,
            macro_off: Vec::new(),
            macro_links: Vec::new(),
            pa_off: Vec::new(),
            pa_dir: Vec::new(),
            pa: Vec::new(),
        })
    }

    fn build_pa_arrays(&mut self, st: &SuffixTree) {
        let mut holders: Vec<(usize, Symbol, usize)> = Vec::with_capacity(st.hard_wlink_count());
        for v in 0..st.node_count() {
            for &(a, _) in st.hard_wlinks(v) {
                holders.push((self.micro_of[v], a, v));
            }
        }
        holders.sort_unstable();
        let k = self.roots.len();
        self.pa_off = vec![0; k + 1];
        self.pa = holders.iter().map(|&(_, _, v)| v).collect();
        let mut i = 0;
        for mt in 0..k {
            while i < holders.len() && holders[i].0 == mt {
                let a = holders[i].1;
                let lo = i;
                while i < holders.len() && holders[i].0 == mt && holders[i].1 == a {
                    i += 1;
                }
                self.pa_dir.push((a, lo, i));
            }
            self.pa_off[mt + 1] = self.pa_dir.len();
        }
    }

    /// Links of every micro-tree root, children before parents. Without a
    /// hard link, `W_a(R)` is the hard link of the topmost `a`-holder below
    /// `R`; that holder is the first `P_a` entry when the micro tree has one,
    /// and otherwise sits in the only child micro tree with an `a`-link.
    fn build_macro_wlinks(&mut self, st: &SuffixTree) {
        let k = self.roots.len();
        let mut kids: Vec<Vec<usize>> = vec![Vec::new(); k];
        for mt in 1..k {
            kids[self.macro_parent[mt]].push(mt);
        }
        let width = st.trie().sigma() as usize + 1;
        let mut cand: Vec<Option<(usize, LinkKind)>> = vec![None; width];
        let mut touched: Vec<Symbol> = Vec::new();
        let mut per: Vec<Vec<(Symbol, usize, LinkKind)>> = vec![Vec::new(); k];
        let mut probes = Comparisons::default();
        for mt in (0..k).rev() {
            let r = self.roots[mt];
            let mut set = |a: Symbol, link: (usize, LinkKind)| {
                if cand[a as usize].is_none() {
                    touched.push(a);
                }
                cand[a as usize] = Some(link);
            };
            for &c in &kids[mt] {
                for &(a, t, _) in &per[c] {
                    set(a, (t, LinkKind::Soft));
                }
            }
            for &(a, lo, _) in &self.pa_dir[self.pa_off[mt]..self.pa_off[mt + 1]] {
                let t = st.hard_wlink(self.pa[lo], a, &mut probes).unwrap();
                set(a, (t, LinkKind::Soft));
            }
            for &(a, t) in st.hard_wlinks(r) {
                set(a, (t, LinkKind::Hard));
            }
            touched.sort_unstable();
            per[mt] = touched.iter().map(|&a| {
                let (t, kind) = cand[a as usize].take().unwrap();
                (a, t, kind)
            }).collect();
            touched.clear();
        }
        self.macro_off = vec![0; k + 1];
        for mt in 0..k {
            self.macro_off[mt + 1] = self.macro_off[mt] + per[mt].len();
        }
        self.macro_links = per.concat();
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn micro_count(&self) -> usize {
        self.roots.len()
    }

    pub fn micro_of(&self, v: usize) -> usize {
        self.micro_of[v]
    }

    pub fn micro_root(&self, mt: usize) -> usize {
        self.roots[mt]
    }

    /// Micro tree holding the parent of `mt`'s root.
    pub fn macro_parent(&self, mt: usize) -> Option<usize> {
        (self.macro_parent[mt] != NIL).then_some(self.macro_parent[mt])
    }

    /// All stored links of micro tree `mt`'s root, sorted by symbol.
    pub fn macro_links(&self, mt: usize) -> &[(Symbol, usize, LinkKind)] {
        &self.macro_links[self.macro_off[mt]..self.macro_off[mt + 1]]
    }

    fn macro_link(&self, mt: usize, a: Symbol, probes: &mut Comparisons) -> Option<WLinkAnswer> {
        let row = self.macro_links(mt);
        let i = partition_point_counted(row, |&(s, _, _)| s < a, probes);
        row.get(i).filter(|l| l.0 == a).map(|&(_, target, kind)| WLinkAnswer { target, kind })
    }

    /// Symbols with a non-empty `P_a` in micro tree `mt`.
    pub fn pa_symbols(&self, mt: usize) -> Vec<Symbol> {
        self.pa_dir[self.pa_off[mt]..self.pa_off[mt + 1]].iter().map(|d| d.0).collect()
    }

    /// Sorted preorder ranks of the hard `a`-link holders of micro tree `mt`.
    pub fn pa(&self, mt: usize, a: Symbol) -> &[usize] {
        self.pa_counted(mt, a, &mut Comparisons::default())
    }

    fn pa_counted(&self, mt: usize, a: Symbol, probes: &mut Comparisons) -> &[usize] {
        let dir = &self.pa_dir[self.pa_off[mt]..self.pa_off[mt + 1]];
        let i = partition_point_counted(dir, |d| d.0 < a, probes);
        match dir.get(i) {
            Some(&(s, lo, hi)) if s == a => &self.pa[lo..hi],
            _ => &[],
        }
    }

    /// Topmost hard `a`-holder of micro tree `mt`.
    pub fn successor(&self, mt: usize, a: Symbol) -> Option<usize> {
        self.pa(mt, a).first().copied()
    }

    /// `W_a(v)`, hard or soft, or `None` when `a·str(v)` is not a substring.
    pub fn query(&self, st: &SuffixTree, v: usize, a: Symbol, probes: &mut Comparisons) -> Result<Option<WLinkAnswer>> {
        if v >= st.node_count() {
            return Err(Error::UnknownNode(v));
        }
        if a > st.trie().sigma() {
            return Err(Error::SymbolOutOfRange { symbol: a, sigma: st.trie().sigma() });
        }
        Ok(self.query_unchecked(st, v, a, probes))
    }

    pub(crate) fn query_unchecked(
        &self,
        st: &SuffixTree,
        v: usize,
        a: Symbol,
        probes: &mut Comparisons,
    ) -> Option<WLinkAnswer> {
        if let Some(u) = st.hard_wlink(v, a, probes) {
            return Some(WLinkAnswer::hard(u));
        }
        let mt = self.micro_of[v];
        let at_root = self.macro_link(mt, a, probes);
        if v == self.roots[mt] {
            return at_root;
        }
        let at_root = at_root?;
        let pa = self.pa_counted(mt, a, probes);
        let i = partition_point_counted(pa, |&x| x <= v, probes);
        if i == 0 {
            // no holder precedes v, so none is an ancestor: the root's link
            // is soft and applies iff its holder lies below v
            let u = at_root.target;
            return st.is_ancestor(v, st.slink(u).unwrap()).then_some(WLinkAnswer::soft(u));
        }
        // deepest holder on the path to v; when the predecessor sits in an
        // earlier branch, a link from v forces their LCA to be a holder
        let p = pa[i - 1];
        let d = if st.is_ancestor(p, v) { p } else { st.lca(p, v) };
        let q = st.hard_wlink(d, a, probes)?;
        let c = st.first_symbol(st.child_toward(d, v, probes)).unwrap();
        let x = st.child_by_symbol(q, c, probes)?;
        st.is_ancestor(v, st.slink(x).unwrap()).then_some(WLinkAnswer::soft(x))
    }

    pub fn storage(&self, st: &SuffixTree) -> WLinkStorage {
        WLinkStorage {
            hard_links: st.hard_wlink_count(),
            macro_entries: self.macro_links.len(),
            pa_entries: self.pa.len(),
            successors: self.pa_dir.len(),
            micro_trees: self.roots.len(),
        }
    }

    /// Redirect the `k`-th soft macro link (mod the soft entry count) to another
    /// node; returns the micro-tree root and symbol that were changed.
    #[doc(hidden)]
    pub fn corrupt_macro_link(&mut self, k: usize, node_count: usize) -> Option<(usize, Symbol)> {
        // only soft entries are read back as answers; a hard entry duplicates
        // the hard link already stored at the micro root
        let soft: Vec<usize> = (0..self.macro_links.len()).filter(|&i| self.macro_links[i].2 == LinkKind::Soft).collect();
        if soft.is_empty() {
            return None;
        }
        let k = soft[k % soft.len()];
        let mt = self.macro_off.partition_point(|&o| o <= k) - 1;
        let entry = &mut self.macro_links[k];
        entry.1 = (entry.1 + 1) % node_count;
        Some((self.roots[mt], entry.0))
    }

    /// Flat arrays for serialization: (sigma, micro_of, macro links, P_a
    /// directory, P_a).
    #[allow(clippy::type_complexity)]
    pub(crate) fn raw(&self) -> (usize, &[usize], &[usize], &[(Symbol, usize, LinkKind)], &[usize], &[(Symbol, usize, usize)], &[usize]) {
        (self.sigma, &self.micro_of, &self.macro_off, &self.macro_links, &self.pa_off, &self.pa_dir, &self.pa)
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_raw(
        st: &SuffixTree,
        sigma: usize,
        micro_of: Vec<usize>,
        macro_off: Vec<usize>,
        macro_links: Vec<(Symbol, usize, LinkKind)>,
        pa_off: Vec<usize>,
        pa_dir: Vec<(Symbol, usize, usize)>,
        pa: Vec<usize>,
    ) -> Result<Self> {
        let bad = |msg: &str| Err(Error::Format(format!("micro-macro: {msg}")));
        let m = st.node_count();
        if micro_of.len() != m || m == 0 || micro_of[0] != 0 {
            return bad("micro tree map length");
        }
        let mut roots = Vec::new();
        let mut macro_parent = Vec::new();
        for v in 0..m {
            let mt = micro_of[v];
            if mt == roots.len() {
                roots.push(v);
                macro_parent.push(st.parent(v).map_or(NIL, |p| micro_of[p]));
            } else if mt > roots.len() || st.parent(v).map(|p| micro_of[p]) != Some(mt) {
                return bad("micro trees not numbered in root preorder or not connected");
            }
        }
        let k = roots.len();
        let offsets_ok = |off: &[usize], len: usize| {
            off.len() == k + 1 && off[0] == 0 && off[k] == len && off.windows(2).all(|w| w[0] <= w[1])
        };
        if !offsets_ok(&macro_off, macro_links.len()) || !offsets_ok(&pa_off, pa_dir.len()) {
            return bad("offset table");
        }
        if macro_links.iter().any(|l| l.1 >= m || l.0 > st.trie().sigma())
            || pa_dir.iter().any(|d| d.1 > d.2 || d.2 > pa.len())
            || pa.iter().any(|&v| v >= m)
        {
            return bad("entry out of range");
        }
        Ok(MicroMacro { sigma, micro_of, roots, macro_parent, macro_off, macro_links, pa_off, pa_dir, pa })
    }
}
