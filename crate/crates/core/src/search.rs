//! Backtracking search for order-preserving maps with pinned values.
//!
//! Variables are source elements, values are target elements. A solution is
//! a total map `f` with `x < y` in the source implying `f(x) <= f(y)` in the
//! target. Domains are bitsets; forward checking narrows the domains of all
//! comparable unassigned variables after each assignment. Variables are
//! chosen smallest-domain first with index tie-break and values are tried in
//! increasing target index, so the first solution is deterministic.

use thiserror::Error;

use crate::relation::BitRelation;

/// Default node limit for a single search.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("search budget of {limit} nodes exceeded")]
pub struct BudgetExceeded {
    pub limit: u64,
}

/// Fixed-width bitset over target indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(n: usize) -> Self {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = BitSet::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSet::empty(n);
        for i in it {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place intersection; returns false if the result is empty.
    pub fn intersect_with(&mut self, other: &BitSet) -> bool {
        let mut any = 0;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
            any |= *a;
        }
        any != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

/// Order-homomorphism problem between two closed strict orders.
pub struct HomSearch<'a> {
    source: &'a BitRelation,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    domains: Vec<BitSet>,
    budget: u64,
    nodes: u64,
}

impl<'a> HomSearch<'a> {
    /// `domains[x]` lists the allowed images of source element `x`.
    pub fn new(source: &'a BitRelation, target: &BitRelation, domains: Vec<BitSet>) -> Self {
        let m = target.len();
        let mut up: Vec<BitSet> = (0..m).map(|v| BitSet::from_iter(m, [v])).collect();
        let mut down = up.clone();
        for (a, b) in target.pairs() {
            up[a].insert(b);
            down[b].insert(a);
        }
        debug_assert_eq!(domains.len(), source.len());
        HomSearch {
            source,
            up,
            down,
            domains,
            budget: DEFAULT_BUDGET,
            nodes: 0,
        }
    }

    /// Same problem with every domain equal to the whole target.
    pub fn unconstrained(source: &'a BitRelation, target: &BitRelation) -> Self {
        let domains = vec![BitSet::full(target.len()); source.len()];
        HomSearch::new(source, target, domains)
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Restricts variable `x` to exactly `v`.
    pub fn pin(&mut self, x: usize, v: usize) {
        let n = self.up.len();
        self.domains[x] = BitSet::from_iter(n, [v]);
    }

    /// Removes value `v` from every domain.
    pub fn forbid_value(&mut self, v: usize) {
        for d in &mut self.domains {
            d.remove(v);
        }
    }

    pub fn first(&mut self) -> Result<Option<Vec<usize>>, BudgetExceeded> {
        let mut found = None;
        self.for_each(|f| {
            found = Some(f.to_vec());
            true
        })?;
        Ok(found)
    }

    /// Calls `visit` on each solution in search order until it returns true.
    /// Returns whether the visitor stopped the search.
    pub fn for_each(&mut self, mut visit: impl FnMut(&[usize]) -> bool) -> Result<bool, BudgetExceeded> {
        let n = self.source.len();
        let mut domains = self.domains.clone();
        // Initial propagation from singleton domains.
        for x in 0..n {
            if domains[x].len() == 1 {
                let v = domains[x].iter().next().unwrap();
                for y in 0..n {
                    if y == x {
                        continue;
                    }
                    if self.source.contains(x, y) && !domains[y].intersect_with(&self.up[v]) {
                        return Ok(false);
                    }
                    if self.source.contains(y, x) && !domains[y].intersect_with(&self.down[v]) {
                        return Ok(false);
                    }
                }
            }
        }
        if domains.iter().any(|d| d.is_empty()) {
            return Ok(false);
        }
        let mut assign = vec![usize::MAX; n];
        self.recurse(&mut assign, domains, 0, &mut visit)
    }

    fn recurse(
        &mut self,
        assign: &mut Vec<usize>,
        domains: Vec<BitSet>,
        depth: usize,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> Result<bool, BudgetExceeded> {
        if depth == assign.len() {
            return Ok(visit(assign));
        }
        let mut best = usize::MAX;
        let mut best_size = usize::MAX;
        for x in 0..assign.len() {
            if assign[x] == usize::MAX {
                let s = domains[x].len();
                if s < best_size {
                    best = x;
                    best_size = s;
                }
            }
        }
        let x = best;
        let values: Vec<usize> = domains[x].iter().collect();
        'values: for v in values {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(BudgetExceeded { limit: self.budget });
            }
            let mut next = domains.clone();
            for y in 0..assign.len() {
                if assign[y] != usize::MAX || y == x {
                    continue;
                }
                if self.source.contains(x, y) && !next[y].intersect_with(&self.up[v]) {
                    continue 'values;
                }
                if self.source.contains(y, x) && !next[y].intersect_with(&self.down[v]) {
                    continue 'values;
                }
            }
            assign[x] = v;
            let stop = self.recurse(assign, next, depth + 1, visit)?;
            assign[x] = usize::MAX;
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
