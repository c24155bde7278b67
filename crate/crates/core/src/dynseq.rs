//! Dynamic sequence over a small integer alphabet with access, rank, select,
//! insert and delete.
//!
//! The sequence is cut into chunks of at most `CHUNK` symbols. Every chunk is
//! a node of a treap ordered by position; each node caches the length of its
//! subtree and one occurrence counter per symbol. Queries walk one root-leaf
//! path and scan one chunk, so they take `O(log m + CHUNK)`. An insert or
//! delete that does not split or remove a chunk also touches a single path;
//! a split costs `O((σ + CHUNK) log m)` and happens once every `CHUNK / 2`
//! inserts into the same region.
//!
//! This is a plain balanced-tree design. It offers the same operations as
//! the Navarro-Nekrich dynamic arrays but only `O(log m)` per operation
//! rather than their `O(log m / log log m)` amortized bound, and it makes
//! no succinct-space claim.
//!
//! All positions are 1-based. `rank(a, i)` counts occurrences in the first
//! `i` symbols, so `rank(a, 0) == 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

pub const DEFAULT_CHUNK: usize = 128;

const NIL: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DynSeqError {
    #[error("position {pos} out of range for length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("symbol {symbol} outside alphabet of size {sigma}")]
    SymbolOutOfRange { symbol: u32, sigma: usize },
    #[error("symbol {symbol} has no occurrence number {k}")]
    NoSuchOccurrence { symbol: u32, k: usize },
}

#[derive(Clone)]
struct Node {
    left: u32,
    right: u32,
    prio: u32,
    len: usize,
    chunk: Vec<u32>,
}

#[derive(Clone)]
pub struct DynSeq<const CHUNK: usize = DEFAULT_CHUNK> {
    sigma: usize,
    nodes: Vec<Node>,
    /// `counts[t * sigma + a]`: occurrences of `a` in the subtree of `t`.
    counts: Vec<usize>,
    free: Vec<u32>,
    root: u32,
    rng: u32,
    path: Vec<u32>,
}

impl<const CHUNK: usize> DynSeq<CHUNK> {
    pub fn new(sigma: usize) -> Self {
        assert!(CHUNK >= 2, "chunk capacity must be at least 2");
        DynSeq {
            sigma,
            nodes: Vec::new(),
            counts: Vec::new(),
            free: Vec::new(),
            root: NIL,
            rng: 0x9E37_79B9,
            path: Vec::new(),
        }
    }

    pub fn from_slice(sigma: usize, symbols: &[u32]) -> Result<Self, DynSeqError> {
        let mut seq = Self::new(sigma);
        for (i, &a) in symbols.iter().enumerate() {
            seq.insert(a, i + 1)?;
        }
        Ok(seq)
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn len(&self) -> usize {
        self.len_of(self.root)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Total occurrences of `a`.
    pub fn count(&self, a: u32) -> Result<usize, DynSeqError> {
        self.check_symbol(a)?;
        Ok(self.count_of(self.root, a))
    }

    pub fn access(&self, i: usize) -> Result<u32, DynSeqError> {
        let len = self.len();
        if i == 0 || i > len {
            return Err(DynSeqError::PositionOutOfRange { pos: i, len });
        }
        let mut t = self.root;
        let mut pos = i - 1;
        loop {
            let node = &self.nodes[t as usize];
            let ll = self.len_of(node.left);
            if pos < ll {
                t = node.left;
                continue;
            }
            pos -= ll;
            if pos < node.chunk.len() {
                return Ok(node.chunk[pos]);
            }
            pos -= node.chunk.len();
            t = node.right;
        }
    }

    pub fn rank(&self, a: u32, i: usize) -> Result<usize, DynSeqError> {
        self.check_symbol(a)?;
        let len = self.len();
        if i > len {
            return Err(DynSeqError::PositionOutOfRange { pos: i, len });
        }
        let mut acc = 0;
        let mut t = self.root;
        let mut i = i;
        while i > 0 {
            let node = &self.nodes[t as usize];
            let ll = self.len_of(node.left);
            if i <= ll {
                t = node.left;
                continue;
            }
            acc += self.count_of(node.left, a);
            i -= ll;
            let own = node.chunk.len();
            if i <= own {
                acc += node.chunk[..i].iter().filter(|&&s| s == a).count();
                break;
            }
            acc += self.count_of(t, a) - self.count_of(node.left, a) - self.count_of(node.right, a);
            i -= own;
            t = node.right;
        }
        Ok(acc)
    }

    pub fn select(&self, a: u32, k: usize) -> Result<usize, DynSeqError> {
        self.check_symbol(a)?;
        if k == 0 || k > self.count_of(self.root, a) {
            return Err(DynSeqError::NoSuchOccurrence { symbol: a, k });
        }
        let mut t = self.root;
        let mut k = k;
        let mut offset = 0;
        loop {
            let node = &self.nodes[t as usize];
            let in_left = self.count_of(node.left, a);
            if k <= in_left {
                t = node.left;
                continue;
            }
            k -= in_left;
            offset += self.len_of(node.left);
            let own = self.count_of(t, a) - in_left - self.count_of(node.right, a);
            if k <= own {
                let idx = node
                    .chunk
                    .iter()
                    .enumerate()
                    .filter(|&(_, &s)| s == a)
                    .nth(k - 1)
                    .map(|(idx, _)| idx)
                    .expect("cached counts match chunk contents");
                return Ok(offset + idx + 1);
            }
            k -= own;
            offset += node.chunk.len();
            t = node.right;
        }
    }

    /// Inserts `a` so that it becomes the `i`-th symbol.
    pub fn insert(&mut self, a: u32, i: usize) -> Result<(), DynSeqError> {
        self.check_symbol(a)?;
        let len = self.len();
        if i == 0 || i > len + 1 {
            return Err(DynSeqError::PositionOutOfRange { pos: i, len });
        }
        if self.root == NIL {
            self.root = self.alloc_node(vec![a]);
            return Ok(());
        }
        let sigma = self.sigma;
        let mut path = core::mem::take(&mut self.path);
        path.clear();
        let mut t = self.root;
        let mut pos = i - 1;
        let mut start = 0;
        let target = loop {
            path.push(t);
            self.counts[t as usize * sigma + a as usize] += 1;
            let ll = self.len_of(self.nodes[t as usize].left);
            let node = &mut self.nodes[t as usize];
            node.len += 1;
            if pos < ll {
                t = node.left;
                continue;
            }
            if pos <= ll + node.chunk.len() {
                node.chunk.insert(pos - ll, a);
                start += ll;
                break t;
            }
            pos -= ll + node.chunk.len();
            start += ll + node.chunk.len();
            t = node.right;
        };

        if self.nodes[target as usize].chunk.len() > CHUNK {
            let tail = self.nodes[target as usize].chunk.split_off(CHUNK / 2);
            for &p in &path {
                self.nodes[p as usize].len -= tail.len();
                for &s in &tail {
                    self.counts[p as usize * sigma + s as usize] -= 1;
                }
            }
            let boundary = start + self.nodes[target as usize].chunk.len();
            let fresh = self.alloc_node(tail);
            self.root = self.insert_node(self.root, boundary, fresh);
        }
        self.path = path;
        Ok(())
    }

    /// Removes and returns the `i`-th symbol.
    pub fn delete(&mut self, i: usize) -> Result<u32, DynSeqError> {
        let a = self.access(i)?;
        let sigma = self.sigma;
        let mut path = core::mem::take(&mut self.path);
        path.clear();
        let mut t = self.root;
        let mut pos = i - 1;
        let target = loop {
            path.push(t);
            self.counts[t as usize * sigma + a as usize] -= 1;
            let ll = self.len_of(self.nodes[t as usize].left);
            let node = &mut self.nodes[t as usize];
            node.len -= 1;
            if pos < ll {
                t = node.left;
                continue;
            }
            pos -= ll;
            if pos < node.chunk.len() {
                node.chunk.remove(pos);
                break t;
            }
            pos -= node.chunk.len();
            t = node.right;
        };

        if self.nodes[target as usize].chunk.is_empty() {
            let (l, r) = {
                let node = &self.nodes[target as usize];
                (node.left, node.right)
            };
            let merged = self.merge(l, r);
            match path.len() {
                1 => self.root = merged,
                depth => {
                    let parent = path[depth - 2] as usize;
                    if self.nodes[parent].left == target {
                        self.nodes[parent].left = merged;
                    } else {
                        self.nodes[parent].right = merged;
                    }
                }
            }
            self.free.push(target);
        }
        self.path = path;
        Ok(a)
    }

    /// Overwrites the `i`-th symbol with `a` and returns the old one.
    pub fn replace(&mut self, i: usize, a: u32) -> Result<u32, DynSeqError> {
        self.check_symbol(a)?;
        let old = self.access(i)?;
        if old == a {
            return Ok(old);
        }
        let sigma = self.sigma;
        let mut t = self.root;
        let mut pos = i - 1;
        loop {
            self.counts[t as usize * sigma + old as usize] -= 1;
            self.counts[t as usize * sigma + a as usize] += 1;
            let ll = self.len_of(self.nodes[t as usize].left);
            let node = &mut self.nodes[t as usize];
            if pos < ll {
                t = node.left;
                continue;
            }
            pos -= ll;
            if pos < node.chunk.len() {
                node.chunk[pos] = a;
                return Ok(old);
            }
            pos -= node.chunk.len();
            t = node.right;
        }
    }

    pub fn iter(&self) -> Iter<'_, CHUNK> {
        let mut it = Iter {
            seq: self,
            stack: Vec::new(),
            chunk: &[],
        };
        it.descend_left(self.root);
        it
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    fn check_symbol(&self, a: u32) -> Result<(), DynSeqError> {
        if (a as usize) < self.sigma {
            Ok(())
        } else {
            Err(DynSeqError::SymbolOutOfRange {
                symbol: a,
                sigma: self.sigma,
            })
        }
    }

    fn len_of(&self, t: u32) -> usize {
        if t == NIL {
            0
        } else {
            self.nodes[t as usize].len
        }
    }

    fn count_of(&self, t: u32, a: u32) -> usize {
        if t == NIL {
            0
        } else {
            self.counts[t as usize * self.sigma + a as usize]
        }
    }

    fn next_prio(&mut self) -> u32 {
        // xorshift32
        let mut x = self.rng;
        x ^= x << 13;
        x ^= x >> 17;
        x ^= x << 5;
        self.rng = x;
        x
    }

    fn alloc_node(&mut self, chunk: Vec<u32>) -> u32 {
        let prio = self.next_prio();
        let node = Node {
            left: NIL,
            right: NIL,
            prio,
            len: 0,
            chunk,
        };
        let t = match self.free.pop() {
            Some(t) => {
                self.nodes[t as usize] = node;
                t
            }
            None => {
                self.nodes.push(node);
                self.counts.resize(self.nodes.len() * self.sigma, 0);
                (self.nodes.len() - 1) as u32
            }
        };
        self.pull(t);
        t
    }

    /// Recomputes the cached length and counts of `t` from its children.
    fn pull(&mut self, t: u32) {
        let sigma = self.sigma;
        let (l, r) = {
            let node = &self.nodes[t as usize];
            (node.left, node.right)
        };
        let base = t as usize * sigma;
        for a in 0..sigma {
            self.counts[base + a] = self.count_of(l, a as u32) + self.count_of(r, a as u32);
        }
        let node = &self.nodes[t as usize];
        for &s in &node.chunk {
            self.counts[base + s as usize] += 1;
        }
        let len = self.len_of(l) + self.len_of(r) + node.chunk.len();
        self.nodes[t as usize].len = len;
    }

    /// Splits `t` into the chunks holding the first `k` symbols and the rest.
    /// `k` must fall on a chunk boundary.
    fn split(&mut self, t: u32, k: usize) -> (u32, u32) {
        if t == NIL {
            return (NIL, NIL);
        }
        let (l, r, own) = {
            let node = &self.nodes[t as usize];
            (node.left, node.right, node.chunk.len())
        };
        let ll = self.len_of(l);
        if k >= ll + own {
            let (a, b) = self.split(r, k - ll - own);
            self.nodes[t as usize].right = a;
            self.pull(t);
            (t, b)
        } else {
            debug_assert!(k <= ll, "split point inside a chunk");
            let (a, b) = self.split(l, k);
            self.nodes[t as usize].left = b;
            self.pull(t);
            (a, t)
        }
    }

    fn merge(&mut self, a: u32, b: u32) -> u32 {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        if self.nodes[a as usize].prio >= self.nodes[b as usize].prio {
            let ar = self.nodes[a as usize].right;
            let m = self.merge(ar, b);
            self.nodes[a as usize].right = m;
            self.pull(a);
            a
        } else {
            let bl = self.nodes[b as usize].left;
            let m = self.merge(a, bl);
            self.nodes[b as usize].left = m;
            self.pull(b);
            b
        }
    }

    /// Places the detached node `fresh` right after the first `k` symbols of
    /// `t`, keeping the heap order on priorities.
    fn insert_node(&mut self, t: u32, k: usize, fresh: u32) -> u32 {
        if t == NIL {
            return fresh;
        }
        if self.nodes[fresh as usize].prio > self.nodes[t as usize].prio {
            let (a, b) = self.split(t, k);
            let node = &mut self.nodes[fresh as usize];
            node.left = a;
            node.right = b;
            self.pull(fresh);
            return fresh;
        }
        let (l, r, own) = {
            let node = &self.nodes[t as usize];
            (node.left, node.right, node.chunk.len())
        };
        let ll = self.len_of(l);
        if k <= ll {
            let m = self.insert_node(l, k, fresh);
            self.nodes[t as usize].left = m;
        } else {
            debug_assert!(k >= ll + own, "insertion point inside a chunk");
            let m = self.insert_node(r, k - ll - own, fresh);
            self.nodes[t as usize].right = m;
        }
        self.pull(t);
        t
    }

    #[cfg(test)]
    fn check_invariants(&self) {
        fn walk<const C: usize>(seq: &DynSeq<C>, t: u32, parent_prio: u32) -> (usize, Vec<usize>) {
            if t == NIL {
                return (0, vec![0; seq.sigma]);
            }
            let node = &seq.nodes[t as usize];
            assert!(node.prio <= parent_prio, "heap order");
            assert!(!node.chunk.is_empty(), "empty chunk left in tree");
            assert!(node.chunk.len() <= C, "chunk over capacity");
            let (ll, mut lc) = walk(seq, node.left, node.prio);
            let (rl, rc) = walk(seq, node.right, node.prio);
            for &s in &node.chunk {
                lc[s as usize] += 1;
            }
            for (a, c) in rc.into_iter().enumerate() {
                lc[a] += c;
            }
            let len = ll + rl + node.chunk.len();
            assert_eq!(node.len, len);
            for (a, &c) in lc.iter().enumerate() {
                assert_eq!(seq.counts[t as usize * seq.sigma + a], c);
            }
            (len, lc)
        }
        walk(self, self.root, u32::MAX);
    }
}

impl<const CHUNK: usize> fmt::Debug for DynSeq<CHUNK> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DynSeq")
            .field("sigma", &self.sigma)
            .field("symbols", &self.to_vec())
            .finish()
    }
}

/// In-order iterator over the symbols.
pub struct Iter<'a, const CHUNK: usize> {
    seq: &'a DynSeq<CHUNK>,
    stack: Vec<u32>,
    chunk: &'a [u32],
}

impl<'a, const CHUNK: usize> Iter<'a, CHUNK> {
    fn descend_left(&mut self, mut t: u32) {
        while t != NIL {
            self.stack.push(t);
            t = self.seq.nodes[t as usize].left;
        }
    }
}

impl<'a, const CHUNK: usize> Iterator for Iter<'a, CHUNK> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        loop {
            if let Some((&first, rest)) = self.chunk.split_first() {
                self.chunk = rest;
                return Some(first);
            }
            let t = self.stack.pop()?;
            let node = &self.seq.nodes[t as usize];
            self.chunk = &node.chunk;
            self.descend_left(node.right);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_str(s: &str, alphabet: &str) -> DynSeq {
        let codes: Vec<u32> = s
            .chars()
            .map(|c| alphabet.chars().position(|a| a == c).unwrap() as u32)
            .collect();
        DynSeq::from_slice(alphabet.chars().count(), &codes).unwrap()
    }

    // L of the running example over the code order $ a 1 2 3.
    const ALPHA: &str = "$a123";

    #[test]
    fn table_examples() {
        let q = from_str("a33131$22aa", ALPHA);
        assert_eq!(q.len(), 11);
        assert_eq!(q.access(7), Ok(0));
        assert_eq!(q.rank(4, 5), Ok(3));
        assert_eq!(q.rank(4, 0), Ok(0));
        assert_eq!(q.select(0, 1), Ok(7));
    }

    #[test]
    fn singletons() {
        let mut q: DynSeq = DynSeq::new(3);
        assert!(q.is_empty());
        q.insert(2, 1).unwrap();
        assert_eq!(q.access(1), Ok(2));
        assert_eq!(q.select(2, 1), Ok(1));
        assert_eq!(q.len(), 1);
    }

    #[test]
    fn insert_delete_inverse() {
        let mut q = from_str("a33131$22aa", ALPHA);
        let before = q.to_vec();
        q.insert(3, 4).unwrap();
        assert_eq!(q.delete(4), Ok(3));
        assert_eq!(q.to_vec(), before);

        let mut xy = from_str("xy", "xy");
        xy.delete(1).unwrap();
        assert_eq!(xy.to_vec(), vec![1]);
    }

    #[test]
    fn error_paths() {
        let mut q = from_str("a33131$22aa", ALPHA);
        assert_eq!(
            q.access(0),
            Err(DynSeqError::PositionOutOfRange { pos: 0, len: 11 })
        );
        assert_eq!(
            q.access(12),
            Err(DynSeqError::PositionOutOfRange { pos: 12, len: 11 })
        );
        assert_eq!(
            q.rank(5, 1),
            Err(DynSeqError::SymbolOutOfRange {
                symbol: 5,
                sigma: 5
            })
        );
        assert!(q.rank(1, 12).is_err());
        assert_eq!(
            q.select(0, 2),
            Err(DynSeqError::NoSuchOccurrence { symbol: 0, k: 2 })
        );
        assert!(q.select(1, 0).is_err());
        assert!(q.insert(1, 13).is_err());
        assert!(q.insert(7, 1).is_err());
        assert!(q.delete(12).is_err());
        assert!(q.replace(1, 9).is_err());
        assert_eq!(q.len(), 11);
    }

    #[test]
    fn replace_updates_counts() {
        let mut q = from_str("a33131$22aa", ALPHA);
        assert_eq!(q.replace(5, 3), Ok(4));
        assert_eq!(q.rank(4, 11), Ok(2));
        assert_eq!(q.rank(3, 11), Ok(3));
        assert_eq!(q.access(5), Ok(3));
    }

    #[test]
    fn splits_and_merges_keep_invariants() {
        let mut q: DynSeq<4> = DynSeq::new(3);
        let mut naive = Vec::new();
        let mut state = 12345u32;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 17;
            state ^= state << 5;
            state
        };
        for step in 0..3000 {
            let r = next();
            if naive.is_empty() || r % 3 != 0 {
                let pos = (next() as usize) % (naive.len() + 1);
                let a = next() % 3;
                q.insert(a, pos + 1).unwrap();
                naive.insert(pos, a);
            } else {
                let pos = (next() as usize) % naive.len();
                assert_eq!(q.delete(pos + 1), Ok(naive.remove(pos)));
            }
            if step % 97 == 0 {
                q.check_invariants();
                assert_eq!(q.to_vec(), naive);
            }
        }
        while !naive.is_empty() {
            assert_eq!(q.delete(1), Ok(naive.remove(0)));
        }
        q.check_invariants();
        assert!(q.is_empty());
        q.insert(1, 1).unwrap();
        assert_eq!(q.to_vec(), vec![1]);
    }
}
