//! Navigation helpers shared by the trie and the suffix tree: depths, pre/post
//! intervals for constant-time ancestor checks, jump pointers for level
//! ancestors, and an Euler-tour LCA.

/// Number of probes spent by an instrumented query.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Comparisons(pub u64);

impl Comparisons {
    #[inline]
    pub fn add(&mut self, k: u64) {
        self.0 += k;
    }

    pub fn get(&self) -> u64 {
        self.0
    }
}

/// `slice.partition_point(pred)` that charges one probe per predicate call.
pub(crate) fn partition_point_counted<T>(
    slice: &[T],
    mut pred: impl FnMut(&T) -> bool,
    probes: &mut Comparisons,
) -> usize {
    let (mut lo, mut hi) = (0usize, slice.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        probes.add(1);
        if pred(&slice[mid]) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Depth, preorder interval and jump-pointer table of a rooted tree given by a
/// parent array.
#[derive(Debug, Clone)]
pub struct TreeNav {
    root: usize,
    depth: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
    // up[k][v] is the 2^k-th ancestor of v, saturating at the root.
    up: Vec<Vec<usize>>,
}

impl TreeNav {
    /// `children[v]` must list the children of `v`; their order fixes the
    /// preorder numbering.
    pub fn new(root: usize, parent: &[Option<usize>], children: &[Vec<usize>]) -> Self {
        let n = parent.len();
        let mut depth = vec![0; n];
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        let mut clock = 0;
        let mut stack = vec![(root, false)];
        while let Some((v, done)) = stack.pop() {
            if done {
                tout[v] = clock;
                continue;
            }
            tin[v] = clock;
            clock += 1;
            stack.push((v, true));
            for &c in children[v].iter().rev() {
                depth[c] = depth[v] + 1;
                stack.push((c, false));
            }
        }
        let max_depth: usize = depth.iter().copied().max().unwrap_or(0);
        let levels = usize::BITS as usize - max_depth.leading_zeros() as usize;
        let mut up = Vec::with_capacity(levels.max(1));
        up.push((0..n).map(|v| parent[v].unwrap_or(root)).collect::<Vec<_>>());
        for k in 1..levels.max(1) {
            let prev: &Vec<usize> = &up[k - 1];
            let next = (0..n).map(|v| prev[prev[v]]).collect();
            up.push(next);
        }
        TreeNav { root, depth, tin, tout, up }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.depth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.depth.is_empty()
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Reflexive: `is_ancestor(v, v)` holds.
    #[inline]
    pub fn is_ancestor(&self, u: usize, v: usize) -> bool {
        self.tin[u] <= self.tin[v] && self.tout[v] <= self.tout[u]
    }

    /// The `j`-th ancestor of `u`, or `None` when `j` exceeds its depth.
    pub fn anc(&self, mut u: usize, j: usize) -> Option<usize> {
        if j > self.depth[u] {
            return None;
        }
        let mut k = 0;
        let mut j = j;
        while j > 0 {
            if j & 1 == 1 {
                u = self.up[k][u];
            }
            j >>= 1;
            k += 1;
        }
        Some(u)
    }

    /// The `j`-th ancestor of `u`, clamped to the root.
    pub fn anc_saturating(&self, u: usize, j: usize) -> usize {
        self.anc(u, j.min(self.depth[u])).unwrap_or(self.root)
    }

    pub(crate) fn jump_table(&self) -> &[Vec<usize>] {
        &self.up
    }
}

/// Lowest common ancestor by range-minimum over an Euler tour (sparse table).
#[derive(Debug, Clone)]
pub struct EulerLca {
    first: Vec<usize>,
    // sparse[k][i] = node of minimum depth in euler[i .. i + 2^k]
    sparse: Vec<Vec<usize>>,
    depth: Vec<usize>,
}

impl EulerLca {
    pub fn new(root: usize, children: &[Vec<usize>]) -> Self {
        let n = children.len();
        let mut depth = vec![0; n];
        let mut first = vec![usize::MAX; n];
        let mut euler = Vec::with_capacity(2 * n);
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next == 0 {
                first[v] = euler.len();
            }
            euler.push(v);
            if let Some(&c) = children[v].get(*next) {
                *next += 1;
                depth[c] = depth[v] + 1;
                stack.push((c, 0));
            } else {
                stack.pop();
            }
        }
        let m = euler.len();
        let mut sparse = vec![euler];
        let mut width = 1;
        while 2 * width <= m {
            let prev = sparse.last().unwrap();
            let next: Vec<usize> = (0..=m - 2 * width)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + width]);
                    if depth[a] <= depth[b] {
                        a
                    } else {
                        b
                    }
                })
                .collect();
            sparse.push(next);
            width *= 2;
        }
        EulerLca { first, sparse, depth }
    }

    pub fn lca(&self, u: usize, v: usize) -> usize {
        let (mut l, mut r) = (self.first[u], self.first[v]);
        if l > r {
            std::mem::swap(&mut l, &mut r);
        }
        let k = (usize::BITS - 1 - (r - l + 1).leading_zeros()) as usize;
        let a = self.sparse[k][l];
        let b = self.sparse[k][r + 1 - (1 << k)];
        if self.depth[a] <= self.depth[b] {
            a
        } else {
            b
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_tree(n: usize, seed: u64) -> (Vec<Option<usize>>, Vec<Vec<usize>>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        for v in 1..n {
            let p = rng.gen_range(0..v);
            parent[v] = Some(p);
            children[p].push(v);
        }
        (parent, children)
    }

    fn walk(parent: &[Option<usize>], mut u: usize, j: usize) -> Option<usize> {
        for _ in 0..j {
            u = parent[u]?;
        }
        Some(u)
    }

    #[test]
    fn level_ancestor_matches_parent_walk() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for seed in 0..5 {
            let n = 200;
            let (parent, children) = random_tree(n, seed);
            let nav = TreeNav::new(0, &parent, &children);
            for _ in 0..2000 {
                let u = rng.gen_range(0..n);
                let j = rng.gen_range(0..12);
                assert_eq!(nav.anc(u, j), walk(&parent, u, j));
            }
        }
    }

    #[test]
    fn ancestor_and_lca_match_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let n = 150;
        let (parent, children) = random_tree(n, 3);
        let nav = TreeNav::new(0, &parent, &children);
        let lca = EulerLca::new(0, &children);
        let chain = |mut v: usize| {
            let mut out = vec![v];
            while let Some(p) = parent[v] {
                out.push(p);
                v = p;
            }
            out
        };
        for _ in 0..3000 {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let cv = chain(v);
            assert_eq!(nav.is_ancestor(u, v), cv.contains(&u));
            let cu = chain(u);
            let expect = *cu.iter().find(|x| cv.contains(x)).unwrap();
            assert_eq!(lca.lca(u, v), expect);
        }
    }

    #[test]
    fn single_node() {
        let nav = TreeNav::new(0, &[None], &[vec![]]);
        assert_eq!(nav.anc(0, 0), Some(0));
        assert_eq!(nav.anc(0, 1), None);
        let lca = EulerLca::new(0, &[vec![]]);
        assert_eq!(lca.lca(0, 0), 0);
    }
}
