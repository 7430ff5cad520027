//! Canonical labelling of framed partial orders.
//!
//! Frame elements are pinned in frame order. Internal elements are ordered by
//! equitable partition refinement (counts of elements above and below in each
//! cell) followed by individualisation-refinement backtracking. Among the
//! leaves the lexicographically least closed relation matrix wins. Unrelated
//! internal elements with identical relations to everything else ("twins")
//! are interchangeable, so only one of them is individualised per cell.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fpo::{Fpo, FpoClass, FpoData};
use crate::relation::BitRelation;

/// Relabelling-invariant code of an FPO: its closed relation matrix under the
/// canonical ordering, packed most-significant-bit first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    class: FpoClass,
    size: usize,
    code: Vec<u64>,
}

impl CanonicalForm {
    pub fn class(&self) -> FpoClass {
        self.class
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    fn bit(&self, i: usize, j: usize) -> bool {
        let k = i * self.size + j;
        self.code[k / 64] >> (63 - k % 64) & 1 == 1
    }

    /// The FPO with elements named `"0".."n-1"` in canonical order.
    pub fn to_fpo(&self) -> Fpo {
        let n = self.size;
        let mut lt = BitRelation::new(n);
        for i in 0..n {
            for j in 0..n {
                if self.bit(i, j) {
                    lt.insert(i, j);
                }
            }
        }
        let m = self.class.inputs;
        let ids = (0..n).map(|i| i.to_string()).collect();
        Fpo::assemble(ids, lt, (0..m).collect(), (m..m + self.class.outputs).collect())
    }

    /// Number of strict pairs.
    pub fn strict_pairs(&self) -> usize {
        self.code.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Compact text key, stable across versions of the encoder.
    pub fn key(&self) -> String {
        let words: Vec<String> = self.code.iter().map(|w| format!("{w:016x}")).collect();
        format!(
            "{}:{}:{}:{}",
            self.class.inputs,
            self.class.outputs,
            self.size,
            words.join("")
        )
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.class, self.size, &self.code).cmp(&(other.class, other.size, &other.code))
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fpo = self.to_fpo();
        let rel: Vec<String> = fpo.hasse_edges().into_iter().map(|(a, b)| format!("{a}<{b}")).collect();
        write!(f, "Form{}({}; {})", self.class, self.size, rel.join(" "))
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_fpo().to_data().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let data = FpoData::deserialize(d)?;
        let fpo = Fpo::from_data(&data).map_err(serde::de::Error::custom)?;
        Ok(canonical_form(&fpo))
    }
}

fn encode(s: &Fpo, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut code = vec![0u64; (n * n).div_ceil(64)];
    for (i, &a) in order.iter().enumerate() {
        for (j, &b) in order.iter().enumerate() {
            if s.lt(a, b) {
                let k = i * n + j;
                code[k / 64] |= 1 << (63 - k % 64);
            }
        }
    }
    code
}

fn refine(s: &Fpo, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = s.len();
    loop {
        let mut cell_of = vec![0usize; n];
        for (c, cell) in cells.iter().enumerate() {
            for &x in cell {
                cell_of[x] = c;
            }
        }
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut signed: Vec<(Vec<(u32, u32)>, usize)> = cell
                .iter()
                .map(|&x| {
                    let mut sig = vec![(0u32, 0u32); cells.len()];
                    for y in s.above(x) {
                        sig[cell_of[y]].0 += 1;
                    }
                    for y in s.below(x) {
                        sig[cell_of[y]].1 += 1;
                    }
                    (sig, x)
                })
                .collect();
            signed.sort();
            let mut start = 0;
            for k in 1..=signed.len() {
                if k == signed.len() || signed[k].0 != signed[start].0 {
                    next.push(signed[start..k].iter().map(|p| p.1).collect());
                    start = k;
                }
            }
            changed |= signed[0].0 != signed[signed.len() - 1].0;
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn twins(s: &Fpo, u: usize, v: usize) -> bool {
    if s.related(u, v) {
        return false;
    }
    (0..s.len())
        .filter(|&w| w != u && w != v)
        .all(|w| s.lt(u, w) == s.lt(v, w) && s.lt(w, u) == s.lt(w, v))
}

fn search(s: &Fpo, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(s, cells);
    let Some(c) = cells.iter().position(|cell| cell.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = encode(s, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[c] {
        if tried.iter().any(|&u| twins(s, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..c]);
        next.push(vec![v]);
        next.push(cells[c].iter().copied().filter(|&x| x != v).collect());
        next.extend_from_slice(&cells[c + 1..]);
        search(s, next, best);
    }
}

/// Canonical element order: `order[k]` is the index of the element placed at
/// position `k`. Inputs come first, then outputs, then internal elements.
pub fn canonical_order(s: &Fpo) -> Vec<usize> {
    let mut cells: Vec<Vec<usize>> = s.frame().into_iter().map(|f| vec![f]).collect();
    let internal: Vec<usize> = s.internal().collect();
    if !internal.is_empty() {
        cells.push(internal);
    }
    let mut best = None;
    search(s, cells, &mut best);
    best.map(|(_, order)| order).unwrap_or_default()
}

pub fn canonical_form(s: &Fpo) -> CanonicalForm {
    let order = canonical_order(s);
    CanonicalForm {
        class: s.class(),
        size: s.len(),
        code: encode(s, &order),
    }
}

/// `s` with its elements reordered canonically; ids are kept.
pub fn canonicalize(s: &Fpo) -> Fpo {
    s.permuted(&canonical_order(s))
}

/// True iff a relabelling between `a` and `b` exists.
pub fn is_relabelling_isomorphic(a: &Fpo, b: &Fpo) -> bool {
    a.class() == b.class()
        && a.len() == b.len()
        && a.relation().pair_count() == b.relation().pair_count()
        && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bell(s_name: &str) -> Fpo {
        Fpo::new(
            &["X", "Y", "A", "B", s_name],
            &[("X", "A"), ("Y", "B"), (s_name, "A"), (s_name, "B")],
            &["X", "Y"],
            &["A", "B"],
        )
        .unwrap()
    }

    #[test]
    fn relabelling_invariant() {
        assert_eq!(canonical_form(&bell("s")), canonical_form(&bell("lambda")));
    }

    #[test]
    fn frame_order_matters() {
        let b = bell("s");
        let swapped = b.with_frame_permutation(&[1, 0], &[0, 1]);
        assert_ne!(canonical_form(&b), canonical_form(&swapped));
        let both = b.with_frame_permutation(&[1, 0], &[1, 0]);
        assert_eq!(canonical_form(&b), canonical_form(&both));
    }

    #[test]
    fn form_round_trips() {
        let f = canonical_form(&bell("s"));
        assert_eq!(canonical_form(&f.to_fpo()), f);
        let json = serde_json::to_string(&f).unwrap();
        let back: CanonicalForm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn twins_collapse_search() {
        // 12 isolated internal elements: twin pruning keeps this instant
        let mut s = Fpo::new(&["I", "O"], &[("I", "O")], &["I"], &["O"]).unwrap();
        for k in 0..12 {
            s = s.with_isolated(&format!("z{k}"));
        }
        let f = canonical_form(&s);
        assert_eq!(f.size(), 14);
    }
}
