//! Generators for the worst-case families and seeded random tries.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::trie::{ForwardTrie, Symbol, TrieBuilder};

const A: Symbol = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Broom { n: usize, sigma: usize },
    Comb { k: usize },
    PathAb { m: usize },
    SubalphaComb { depth: usize },
    Random { n: usize, sigma: usize, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<ForwardTrie> {
        match *self {
            FamilySpec::Broom { n, sigma } => gen_broom(n, sigma),
            FamilySpec::Comb { k } => gen_comb(k),
            FamilySpec::PathAb { m } => gen_path_ab(m),
            FamilySpec::SubalphaComb { depth } => gen_subalpha_comb(depth),
            FamilySpec::Random { n, sigma, seed } => gen_random(n, sigma, seed),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// A path of `n - sigma - 1` edges labeled `a` (symbol 1) ending at a node
/// with `sigma` leaf children labeled `2..=sigma + 1`.
pub fn gen_broom(n: usize, sigma: usize) -> Result<ForwardTrie> {
    if sigma < 1 || n < sigma + 3 {
        return Err(invalid(format!("broom needs sigma >= 1 and n >= sigma + 3, got n={n} sigma={sigma}")));
    }
    let mut b = TrieBuilder::new();
    let mut v = 0;
    for _ in 0..n - sigma - 1 {
        v = b.add_child(v, A)?;
    }
    for i in 0..sigma {
        b.add_child(v, 2 + i as Symbol)?;
    }
    Ok(b.finish(None))
}

/// A path of `k` edges labeled `a` followed by a complete binary tree over
/// `{b, c}` with `k` leaves. `k` must be a power of two.
pub fn gen_comb(k: usize) -> Result<ForwardTrie> {
    if k < 2 || !k.is_power_of_two() {
        return Err(invalid(format!("comb needs k >= 2 and a power of two, got {k}")));
    }
    let mut b = TrieBuilder::new();
    let mut v = 0;
    for _ in 0..k {
        v = b.add_child(v, A)?;
    }
    let mut level = vec![v];
    for _ in 0..k.trailing_zeros() {
        let mut next = Vec::with_capacity(level.len() * 2);
        for &u in &level {
            next.push(b.add_child(u, 2)?);
            next.push(b.add_child(u, 3)?);
        }
        level = next;
    }
    Ok(b.finish(None))
}

/// A path of `m + 1` nodes whose leaf-to-root reading is `a^(m-1) b`, i.e.
/// the root-to-leaf labels are `b a^(m-1)`.
pub fn gen_path_ab(m: usize) -> Result<ForwardTrie> {
    if m < 2 {
        return Err(invalid(format!("path needs m >= 2, got {m}")));
    }
    let mut b = TrieBuilder::new();
    let mut v = b.add_child(0, 2)?;
    for _ in 0..m - 1 {
        v = b.add_child(v, A)?;
    }
    Ok(b.finish(None))
}

/// Complete binary tree with `depth` edge levels; level `d` (1-based) uses
/// the fresh pair `{2d - 1, 2d}`.
pub fn gen_subalpha_comb(depth: usize) -> Result<ForwardTrie> {
    if !(2..=20).contains(&depth) {
        return Err(invalid(format!("sub-alphabet comb needs 2 <= depth <= 20, got {depth}")));
    }
    let mut b = TrieBuilder::new();
    let mut level = vec![0];
    for d in 1..=depth as Symbol {
        let mut next = Vec::with_capacity(level.len() * 2);
        for &u in &level {
            next.push(b.add_child(u, 2 * d - 1)?);
            next.push(b.add_child(u, 2 * d)?);
        }
        level = next;
    }
    Ok(b.finish(None))
}

/// Each new node hangs off a uniformly chosen existing node under a random
/// symbol that node does not use yet; saturated nodes are skipped.
pub fn gen_random(n: usize, sigma: usize, seed: u64) -> Result<ForwardTrie> {
    if n < 1 {
        return Err(invalid("random trie needs n >= 1"));
    }
    if sigma < 1 && n > 1 {
        return Err(invalid("random trie with more than one node needs sigma >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = TrieBuilder::new();
    let mut open: Vec<usize> = vec![0];
    let mut syms: Vec<Symbol> = (1..=sigma as Symbol).collect();
    while b.len() < n {
        let i = rng.gen_range(0..open.len());
        let p = open[i];
        syms.shuffle(&mut rng);
        match syms.iter().copied().find(|&s| !b.has_child(p, s)) {
            Some(s) => {
                let c = b.add_child(p, s)?;
                open.push(c);
            }
            None => {
                open.swap_remove(i);
            }
        }
    }
    Ok(b.finish(Some(sigma as Symbol)))
}
