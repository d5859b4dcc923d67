//! Bidirectional pattern search over the forward trie.
//!
//! A cursor for a forward pattern `P` is the locus of `Q = reverse(P)` in the
//! backward suffix tree. Prepending to `P` appends to `Q`, which is an
//! ordinary descent; appending to `P` prepends to `Q`, which is a Weiner
//! link step.

use crate::error::{Error, Result};
use crate::index::Index;
use crate::tree::Comparisons;
use crate::trie::{Symbol, TERMINATOR};
use crate::wlinks::LinkKind;

/// Locus of a pattern: at `node` when `edge` is `None`, otherwise strictly
/// inside the edge from `node` down to `edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Cursor {
    node: usize,
    edge: Option<usize>,
    len: usize,
}

impl Cursor {
    pub fn new() -> Self {
        Cursor::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// (nearest explicit ancestor-or-self, child edge when on an edge).
    pub fn locus(&self) -> (usize, Option<usize>) {
        (self.node, self.edge)
    }

    /// The explicit node at or just below the locus.
    pub fn below(&self) -> usize {
        self.edge.unwrap_or(self.node)
    }

    fn at(node: usize, child: usize, len: usize, idx: &Index) -> Cursor {
        if idx.suffix_tree().depth(child) == len {
            Cursor { node: child, edge: None, len }
        } else {
            Cursor { node, edge: Some(child), len }
        }
    }

    /// Cursor for `bP`, or `None` if that is not a substring.
    pub fn extend_left(&self, idx: &Index, b: Symbol, probes: &mut Comparisons) -> Result<Option<Cursor>> {
        check_symbol(idx, b)?;
        let st = idx.suffix_tree();
        let next = match self.edge {
            None => st.child_by_symbol(self.node, b, probes).map(|c| Cursor::at(self.node, c, self.len + 1, idx)),
            Some(c) => {
                probes.add(1);
                (st.edge_symbol(c, self.len - st.depth(self.node)) == b).then(|| Cursor::at(self.node, c, self.len + 1, idx))
            }
        };
        Ok(next)
    }

    /// Cursor for `Pa`, or `None` if that is not a substring.
    pub fn extend_right(&self, idx: &Index, a: Symbol, probes: &mut Comparisons) -> Result<Option<Cursor>> {
        check_symbol(idx, a)?;
        let st = idx.suffix_tree();
        let Some(w) = idx.wlinks().query_unchecked(st, self.node, a, probes) else {
            return Ok(None);
        };
        let len = self.len + 1;
        let u = w.target;
        let next = match (self.edge, w.kind) {
            (None, LinkKind::Hard) => Some(Cursor { node: u, edge: None, len }),
            (None, LinkKind::Soft) => Some(Cursor { node: st.parent(u).unwrap(), edge: Some(u), len }),
            (Some(c), LinkKind::Hard) => {
                // continue below aV by the first symbol of the partial edge;
                // any such child links back under c, so it spells a·Q
                let first = st.first_symbol(c).unwrap();
                st.child_by_symbol(u, first, probes).map(|x| Cursor::at(u, x, len, idx))
            }
            // a·V is inside the edge above u, and a·Q is too iff the string
            // below u continues along c
            (Some(c), LinkKind::Soft) => st
                .is_ancestor(c, st.slink(u).unwrap())
                .then(|| Cursor { node: st.parent(u).unwrap(), edge: Some(u), len }),
        };
        Ok(next)
    }

    /// Every occurrence `(u, v)` of the pattern, read downward from `u` to
    /// `v`, ordered by the suffix array.
    pub fn occurrences(&self, idx: &Index) -> Vec<(usize, usize)> {
        let nav = idx.trie().tree().nav();
        idx.suffix_tree()
            .subtree_leaves(self.below())
            .iter()
            .map(|&v| (nav.anc(v, self.len).unwrap(), v))
            .collect()
    }

    pub fn count(&self, idx: &Index) -> usize {
        let (lo, hi) = idx.suffix_tree().sa_interval(self.below());
        hi - lo + 1
    }
}

fn check_symbol(idx: &Index, a: Symbol) -> Result<()> {
    let sigma = idx.trie().sigma();
    if a == TERMINATOR || a > sigma {
        return Err(Error::SymbolOutOfRange { symbol: a, sigma });
    }
    Ok(())
}

/// One step of a bidirectional script.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Left(Symbol),
    Right(Symbol),
}

impl Index {
    pub fn cursor(&self) -> Cursor {
        Cursor::new()
    }

    /// Cursor for `pattern`, built by prepending its symbols right to left.
    pub fn locate(&self, pattern: &[Symbol]) -> Result<Option<Cursor>> {
        let mut probes = Comparisons::default();
        let mut c = Cursor::new();
        for &b in pattern.iter().rev() {
            match c.extend_left(self, b, &mut probes)? {
                Some(next) => c = next,
                None => return Ok(None),
            }
        }
        Ok(Some(c))
    }

    pub fn find(&self, pattern: &[Symbol]) -> Result<Vec<(usize, usize)>> {
        Ok(self.locate(pattern)?.map(|c| c.occurrences(self)).unwrap_or_default())
    }

    pub fn count(&self, pattern: &[Symbol]) -> Result<usize> {
        Ok(self.locate(pattern)?.map_or(0, |c| c.count(self)))
    }

    /// Run a script from the empty pattern. Returns the cursor after each
    /// successful step and stops at the first failure.
    pub fn run_script(&self, steps: &[Step]) -> Result<Vec<Cursor>> {
        let mut probes = Comparisons::default();
        let mut out = Vec::with_capacity(steps.len());
        let mut c = Cursor::new();
        for &s in steps {
            let next = match s {
                Step::Left(b) => c.extend_left(self, b, &mut probes)?,
                Step::Right(a) => c.extend_right(self, a, &mut probes)?,
            };
            match next {
                Some(n) => {
                    out.push(n);
                    c = n;
                }
                None => break,
            }
        }
        Ok(out)
    }
}
