//! The searchable index bundle and its binary file format.
//!
//! Layout (all integers little-endian): magic `TRIXIDX\0`, `u32` version,
//! then the input trie, an optional charset, the suffix tree's primary arrays
//! and the micro-macro arrays. Every array is a `u64` length followed by its
//! items. Navigation helpers are rebuilt on load and cross-checked.

use std::path::Path;

use crate::dawg::ImplicitDawg;
use crate::error::{Error, Result};
use crate::suffix_tree::{SuffixTree, SuffixTreeParts};
use crate::trie::{AugmentedTrie, Charset, ForwardTrie, Symbol};
use crate::wlinks::{LinkKind, MicroMacro};

pub const MAGIC: &[u8; 8] = b"TRIXIDX\0";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone)]
pub struct Index {
    st: SuffixTree,
    mm: MicroMacro,
    charset: Option<Charset>,
}

impl Index {
    pub fn build(trie: &ForwardTrie) -> Self {
        let st = SuffixTree::build(&AugmentedTrie::new(trie));
        let mm = MicroMacro::build(&st);
        Index { st, mm, charset: None }
    }

    pub fn with_charset(mut self, charset: Option<Charset>) -> Self {
        self.charset = charset;
        self
    }

    pub fn trie(&self) -> &AugmentedTrie {
        self.st.trie()
    }

    pub fn suffix_tree(&self) -> &SuffixTree {
        &self.st
    }

    pub fn wlinks(&self) -> &MicroMacro {
        &self.mm
    }

    #[doc(hidden)]
    pub fn wlinks_mut(&mut self) -> &mut MicroMacro {
        &mut self.mm
    }

    pub fn charset(&self) -> Option<&Charset> {
        self.charset.as_ref()
    }

    pub fn dawg(&self) -> ImplicitDawg<'_> {
        ImplicitDawg::new(&self.st, &self.mm)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer(Vec::new());
        w.0.extend_from_slice(MAGIC);
        w.0.extend_from_slice(&VERSION.to_le_bytes());

        let base = self.trie().base();
        w.u64(base.node_count() as u64);
        w.u32(base.sigma());
        w.u64(base.node_count() as u64 - 1);
        for v in 1..base.node_count() {
            w.u64(base.parent(v).unwrap() as u64);
            w.u32(base.label(v));
        }
        match &self.charset {
            Some(cs) => {
                w.0.push(1);
                w.u64(cs.bytes().len() as u64);
                w.0.extend_from_slice(cs.bytes());
            }
            None => w.0.push(0),
        }

        let p = self.st.parts();
        for arr in [&p.parent, &p.depth, &p.edge_start, &p.leaf_trie, &p.slink] {
            w.usizes(arr);
        }

        let (sigma, micro_of, macro_off, macro_links, pa_off, pa_dir, pa) = self.mm.raw();
        w.u64(sigma as u64);
        w.usizes(micro_of);
        w.usizes(macro_off);
        w.u64(macro_links.len() as u64);
        for &(a, t, k) in macro_links {
            w.u32(a);
            w.u64(t as u64);
            w.0.push(matches!(k, LinkKind::Hard) as u8);
        }
        w.usizes(pa_off);
        w.u64(pa_dir.len() as u64);
        for &(a, lo, hi) in pa_dir {
            w.u32(a);
            w.u64(lo as u64);
            w.u64(hi as u64);
        }
        w.usizes(pa);
        w.0
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader { buf: bytes, pos: 0 };
        if r.take(8)? != MAGIC {
            return Err(Error::Format("not an index file".into()));
        }
        let version = r.u32()?;
        if version != VERSION {
            return Err(Error::Format(format!("unsupported index version {version}")));
        }

        let n = r.usize()?;
        let sigma = r.u32()?;
        let edges = r.len(12)?;
        if edges + 1 != n {
            return Err(Error::Format("trie edge count does not match its size".into()));
        }
        let mut list = Vec::with_capacity(edges);
        for v in 1..n {
            list.push((r.usize()?, v, r.u32()?));
        }
        let trie = ForwardTrie::from_edges(n, sigma, &list)?;
        let charset = match r.u8()? {
            0 => None,
            1 => {
                let len = r.len(1)?;
                Some(Charset::from_bytes(r.take(len)?.to_vec()))
            }
            _ => return Err(Error::Format("bad charset flag".into())),
        };

        let parts = SuffixTreeParts {
            parent: r.usizes()?,
            depth: r.usizes()?,
            edge_start: r.usizes()?,
            leaf_trie: r.usizes()?,
            slink: r.usizes()?,
        };
        let st = SuffixTree::from_parts(AugmentedTrie::new(&trie), parts)?;

        let mm_sigma = r.usize()?;
        let micro_of = r.usizes()?;
        let macro_off = r.usizes()?;
        let count = r.len(13)?;
        let mut macro_links = Vec::with_capacity(count);
        for _ in 0..count {
            let a = r.u32()?;
            let t = r.usize()?;
            let kind = match r.u8()? {
                1 => LinkKind::Hard,
                0 => LinkKind::Soft,
                _ => return Err(Error::Format("bad link kind".into())),
            };
            macro_links.push((a, t, kind));
        }
        let pa_off = r.usizes()?;
        let count = r.len(20)?;
        let mut pa_dir = Vec::with_capacity(count);
        for _ in 0..count {
            pa_dir.push((r.u32()?, r.usize()?, r.usize()?));
        }
        let pa = r.usizes()?;
        if r.pos != bytes.len() {
            return Err(Error::Format("trailing bytes".into()));
        }
        let mm = MicroMacro::from_raw(&st, mm_sigma, micro_of, macro_off, macro_links, pa_off, pa_dir, pa)?;
        Ok(Index { st, mm, charset })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_bytes())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_bytes(&std::fs::read(path)?)
    }

    /// Does `bytes` start like an index file?
    pub fn sniff(bytes: &[u8]) -> bool {
        bytes.starts_with(MAGIC)
    }

    /// Map a byte string through the charset, or fail if any byte is unknown.
    pub fn encode(&self, text: &[u8]) -> Option<Vec<Symbol>> {
        self.charset.as_ref()?.encode(text)
    }
}

const NIL64: u64 = u64::MAX;

struct Writer(Vec<u8>);

impl Writer {
    fn u32(&mut self, x: u32) {
        self.0.extend_from_slice(&x.to_le_bytes());
    }

    fn u64(&mut self, x: u64) {
        self.0.extend_from_slice(&x.to_le_bytes());
    }

    fn usizes(&mut self, xs: &[usize]) {
        self.u64(xs.len() as u64);
        for &x in xs {
            self.u64(if x == usize::MAX { NIL64 } else { x as u64 });
        }
    }
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, k: usize) -> Result<&'a [u8]> {
        if self.buf.len() - self.pos < k {
            return Err(Error::Format("truncated index file".into()));
        }
        let s = &self.buf[self.pos..self.pos + k];
        self.pos += k;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn usize(&mut self) -> Result<usize> {
        match self.u64()? {
            NIL64 => Ok(usize::MAX),
            x => usize::try_from(x).map_err(|_| Error::Format("value out of range".into())),
        }
    }

    /// An item count whose items take at least `width` bytes each.
    fn len(&mut self, width: usize) -> Result<usize> {
        let k = self.usize()?;
        if k > (self.buf.len() - self.pos) / width {
            return Err(Error::Format("array longer than the file".into()));
        }
        Ok(k)
    }

    fn usizes(&mut self) -> Result<Vec<usize>> {
        let k = self.len(8)?;
        (0..k).map(|_| self.usize()).collect()
    }
}
