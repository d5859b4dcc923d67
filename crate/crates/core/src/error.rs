use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("node {parent} has two children labeled {symbol}")]
    DuplicateSibling { parent: usize, symbol: u32 },
    #[error("symbol {symbol} outside alphabet [1..{sigma}]")]
    SymbolOutOfRange { symbol: u32, sigma: u32 },
    #[error("input is not a single rooted tree: {0}")]
    NotATree(String),
    #[error("unknown node id {0}")]
    UnknownNode(usize),
    #[error("node {0} is not an ancestor of node {1}")]
    NotAncestor(usize, usize),
    #[error("string is not a substring of the trie")]
    NotSubstring,
    #[error("instance has {size} nodes, above the oracle limit of {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("corrupt index: {0}")]
    Format(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
