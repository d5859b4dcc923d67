//! DAWG of the forward trie, represented implicitly: its states are the
//! nodes of the backward suffix tree and its transitions are Weiner links.
//! Hard links are primary edges, soft links secondary ones.

use crate::error::{Error, Result};
use crate::suffix_tree::SuffixTree;
use crate::tree::Comparisons;
use crate::trie::{Symbol, TERMINATOR};
use crate::wlinks::{LinkKind, MicroMacro, WLinkStorage};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Primary,
    Secondary,
}

#[derive(Debug, Clone, Copy)]
pub struct ImplicitDawg<'a> {
    st: &'a SuffixTree,
    mm: &'a MicroMacro,
}

impl<'a> ImplicitDawg<'a> {
    pub fn new(st: &'a SuffixTree, mm: &'a MicroMacro) -> Self {
        ImplicitDawg { st, mm }
    }

    pub fn source(&self) -> usize {
        self.st.root()
    }

    pub fn state_count(&self) -> usize {
        self.st.node_count()
    }

    pub fn transition(&self, state: usize, a: Symbol) -> Result<Option<(usize, EdgeKind)>> {
        self.transition_counted(state, a, &mut Comparisons::default())
    }

    pub fn transition_counted(
        &self,
        state: usize,
        a: Symbol,
        probes: &mut Comparisons,
    ) -> Result<Option<(usize, EdgeKind)>> {
        Ok(self.mm.query(self.st, state, a, probes)?.map(|w| {
            let kind = match w.kind {
                LinkKind::Hard => EdgeKind::Primary,
                LinkKind::Soft => EdgeKind::Secondary,
            };
            (w.target, kind)
        }))
    }

    /// Is `pattern` a substring of the forward trie? The terminator is not a
    /// pattern symbol.
    pub fn accepts_substring(&self, pattern: &[Symbol]) -> Result<bool> {
        let sigma = self.st.trie().sigma();
        let mut state = self.source();
        for &a in pattern {
            if a == TERMINATOR || a > sigma {
                return Err(Error::SymbolOutOfRange { symbol: a, sigma });
            }
            match self.transition(state, a)? {
                Some((next, _)) => state = next,
                None => return Ok(false),
            }
        }
        Ok(true)
    }

    pub fn storage(&self) -> WLinkStorage {
        self.mm.storage(self.st)
    }
}
