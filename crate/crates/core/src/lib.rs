//! Indexing structures for labeled trees: the suffix tree of a backward
//! trie with hard and soft Weiner links, a linear-space implicit DAWG of the
//! forward trie, bidirectional pattern search, and brute-force oracles.
#![allow(clippy::needless_range_loop)]

pub mod dawg;
pub mod error;
pub mod gen;
pub mod index;
pub mod oracle;
pub mod search;
pub mod suffix_tree;
pub mod tree;
pub mod trie;
pub mod verify;
pub mod wlinks;

pub use dawg::{EdgeKind, ImplicitDawg};
pub use error::{Error, Result};
pub use index::Index;
pub use search::{Cursor, Step};
pub use suffix_tree::SuffixTree;
pub use tree::Comparisons;
pub use trie::{
    parse_trie, parse_word_list, AugmentedTrie, Charset, ForwardTrie, Orientation, Symbol, TrieBuilder, TERMINATOR,
};
pub use wlinks::{LinkKind, MicroMacro, WLinkAnswer};
