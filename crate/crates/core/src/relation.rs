//! Dense bit-matrix relations over element indices.

use std::fmt;

const WORD: usize = 64;

/// A square boolean matrix stored row-major as packed `u64` words.
///
/// Row `i` holds the set `{ j : i R j }`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRelation {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitRelation {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        BitRelation {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = BitRelation::new(n);
        for (a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        debug_assert!(a < self.n && b < self.n);
        self.bits[a * self.words + b / WORD] >> (b % WORD) & 1 == 1
    }

    /// Inserts `a R b`; returns true if the pair was new.
    #[inline]
    pub fn insert(&mut self, a: usize, b: usize) -> bool {
        let w = &mut self.bits[a * self.words + b / WORD];
        let mask = 1u64 << (b % WORD);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / WORD] &= !(1u64 << (b % WORD));
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    /// ORs row `src` into row `dst`; returns true if `dst` changed.
    fn union_row_into(&mut self, src: usize, dst: usize) -> bool {
        let mut changed = false;
        for k in 0..self.words {
            let s = self.bits[src * self.words + k];
            let d = &mut self.bits[dst * self.words + k];
            let nd = *d | s;
            changed |= nd != *d;
            *d = nd;
        }
        changed
    }

    /// Iterates the successors of `a` in increasing index order.
    pub fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        self.row(a).iter().enumerate().flat_map(move |(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + t)
            })
            .take_while(move |&j| j < n)
        })
    }

    pub fn predecessors(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&a| self.contains(a, b))
    }

    pub fn out_degree(&self, a: usize) -> usize {
        self.row(a).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn pair_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.successors(a).map(move |b| (a, b)))
    }

    /// Warshall closure in place.
    pub fn close(&mut self) {
        for k in 0..self.n {
            for i in 0..self.n {
                if self.contains(i, k) {
                    self.union_row_into(k, i);
                }
            }
        }
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|i| !self.contains(i, i))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs()
            .all(|(a, b)| self.successors(b).all(|c| self.contains(a, c)))
    }

    /// Covering pairs of a closed strict order: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in self.successors(a) {
                if !self.successors(a).any(|c| c != b && self.contains(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Induced relation on the listed indices, renumbered in list order.
    pub fn restrict(&self, keep: &[usize]) -> BitRelation {
        let mut r = BitRelation::new(keep.len());
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if self.contains(a, b) {
                    r.insert(i, j);
                }
            }
        }
        r
    }
}

impl fmt::Debug for BitRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_chain() {
        let mut r = BitRelation::from_pairs(3, [(0, 1), (1, 2)]);
        r.close();
        assert!(r.contains(0, 2));
        assert_eq!(r.pair_count(), 3);
        assert_eq!(r.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn successors_cross_word_boundary() {
        let mut r = BitRelation::new(130);
        r.insert(3, 0);
        r.insert(3, 64);
        r.insert(3, 129);
        assert_eq!(r.successors(3).collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(r.out_degree(3), 3);
        r.remove(3, 64);
        assert!(!r.contains(3, 64));
    }

    #[test]
    fn restrict_renumbers() {
        let r = BitRelation::from_pairs(4, [(0, 3), (1, 2)]);
        let s = r.restrict(&[3, 0]);
        assert!(s.contains(1, 0));
        assert_eq!(s.pair_count(), 1);
    }
}
