//! Exhaustive generation of FPO types and catalogs of minimal representatives.
//!
//! Types are grown one internal element at a time from the frame-only types.
//! A new element gets a down-closed set `D` of non-outputs below it and an
//! up-closed set `U` of non-inputs above it, with every element of `D`
//! already below every element of `U`. Removing any internal element of a
//! type yields a type one level down, so every type is reached. Each level is
//! deduplicated by canonical form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::fop::{is_minimal_representative_with, MinimalityStrategy, SearchError};
use crate::fpo::{Fpo, FpoClass};
use crate::relation::BitRelation;
use crate::search::DEFAULT_BUDGET;

/// No internal maximal element.
pub fn is_causal_relevant(s: &Fpo) -> bool {
    s.internal().all(|x| !s.is_maximal(x))
}

/// Causal-relevant with every internal element minimal.
pub fn is_markov_relevant(s: &Fpo) -> bool {
    is_causal_relevant(s) && s.internal().all(|x| s.is_minimal(x))
}

/// No internal elements.
pub fn is_deterministic_relevant(s: &Fpo) -> bool {
    s.internal_count() == 0
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    #[default]
    All,
    CausalRelevant,
    MarkovRelevant,
    DeterministicRelevant,
}

impl Filter {
    pub fn accepts(&self, s: &Fpo) -> bool {
        match self {
            Filter::All => true,
            Filter::CausalRelevant => is_causal_relevant(s),
            Filter::MarkovRelevant => is_markov_relevant(s),
            Filter::DeterministicRelevant => is_deterministic_relevant(s),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::CausalRelevant => "causal",
            Filter::MarkovRelevant => "markov",
            Filter::DeterministicRelevant => "det",
        })
    }
}

impl FromStr for Filter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Filter::All),
            "causal" | "causal_relevant" => Ok(Filter::CausalRelevant),
            "markov" | "markov_relevant" => Ok(Filter::MarkovRelevant),
            "det" | "deterministic" | "deterministic_relevant" => Ok(Filter::DeterministicRelevant),
            other => Err(format!("unknown filter `{other}` (expected all|causal|markov|det)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub minimal: bool,
    pub causal_relevant: bool,
    pub markov_relevant: bool,
    pub deterministic_relevant: bool,
}

impl Flags {
    pub fn of(s: &Fpo, minimal: bool) -> Flags {
        Flags {
            minimal,
            causal_relevant: is_causal_relevant(s),
            markov_relevant: is_markov_relevant(s),
            deterministic_relevant: is_deterministic_relevant(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// Least canonical form in the frame-permutation orbit.
    pub form: CanonicalForm,
    pub flags: Flags,
    pub orbit_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub class: FpoClass,
    pub max_order: usize,
    pub filter: Filter,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Number of types counting every member of every orbit.
    pub fn type_count(&self) -> usize {
        self.entries.iter().map(|e| e.orbit_size).sum()
    }

    /// Every type, orbits expanded, sorted.
    pub fn all_forms(&self) -> Vec<CanonicalForm> {
        let mut out: Vec<CanonicalForm> = self
            .entries
            .iter()
            .flat_map(|e| frame_orbit(&e.form.to_fpo()))
            .collect();
        out.sort();
        out
    }
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Distinct canonical forms of all frame permutations of `s`, sorted.
pub fn frame_orbit(s: &Fpo) -> Vec<CanonicalForm> {
    let c = s.class();
    let mut set = BTreeSet::new();
    for pi in permutations(c.inputs) {
        for po in permutations(c.outputs) {
            set.insert(canonical_form(&s.with_frame_permutation(&pi, &po)));
        }
    }
    set.into_iter().collect()
}

fn frame_only_types(class: FpoClass) -> Vec<Fpo> {
    let (m, n) = (class.inputs, class.outputs);
    let ids: Vec<String> = (1..=m)
        .map(|i| format!("I{i}"))
        .chain((1..=n).map(|j| format!("O{j}")))
        .collect();
    let cells = m * n;
    assert!(cells < 32, "frame too large to enumerate");
    (0u32..1 << cells)
        .map(|mask| {
            let mut lt = BitRelation::new(m + n);
            for k in 0..cells {
                if mask >> k & 1 == 1 {
                    lt.insert(k / n, m + k % n);
                }
            }
            Fpo::assemble(ids.clone(), lt, (0..m).collect(), (m..m + n).collect())
        })
        .collect()
}

fn subsets_closed(s: &Fpo, pool: &[usize], down: bool) -> Vec<Vec<usize>> {
    let k = pool.len();
    let mut out = Vec::new();
    for mask in 0u64..1 << k {
        let set: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
        let closed = set.iter().all(|&a| {
            if down {
                s.below(a).all(|b| set.contains(&b))
            } else {
                s.above(a).all(|b| set.contains(&b))
            }
        });
        if closed {
            out.push(set);
        }
    }
    out
}

/// All FPOs obtained from `s` by adding one internal element.
pub fn one_element_extensions(s: &Fpo) -> Vec<Fpo> {
    let n = s.len();
    let non_out: Vec<usize> = (0..n).filter(|&x| !s.outputs().contains(&x)).collect();
    let non_in: Vec<usize> = (0..n).filter(|&x| !s.inputs().contains(&x)).collect();
    let downs = subsets_closed(s, &non_out, true);
    let ups = subsets_closed(s, &non_in, false);
    let mut ids = s.ids().to_vec();
    let mut fresh = format!("e{}", n);
    while ids.contains(&fresh) {
        fresh.push('\'');
    }
    ids.push(fresh);
    let mut out = Vec::new();
    for d in &downs {
        for u in &ups {
            if d.iter().any(|x| u.contains(x)) {
                continue;
            }
            if !d.iter().all(|&a| u.iter().all(|&b| s.lt(a, b))) {
                continue;
            }
            let mut lt = BitRelation::new(n + 1);
            for (a, b) in s.relation().pairs() {
                lt.insert(a, b);
            }
            for &a in d {
                lt.insert(a, n);
            }
            for &b in u {
                lt.insert(n, b);
            }
            out.push(Fpo::assemble(
                ids.clone(),
                lt,
                s.inputs().to_vec(),
                s.outputs().to_vec(),
            ));
        }
    }
    out
}

/// Every FPO type of the class with at most `max_order` elements, grouped
/// by number of internal elements and sorted within each group.
pub fn enumerate_fpo_types(class: FpoClass, max_order: usize) -> Vec<CanonicalForm> {
    let frame = class.frame_len();
    if max_order < frame {
        return Vec::new();
    }
    let mut level: Vec<CanonicalForm> = frame_only_types(class)
        .iter()
        .map(canonical_form)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut out = level.clone();
    for _ in frame..max_order {
        let next: BTreeSet<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|f| {
                one_element_extensions(&f.to_fpo())
                    .into_iter()
                    .map(|c| canonical_form(&c))
                    .collect::<BTreeSet<_>>()
            })
            .collect();
        level = next.into_iter().collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Minimal representatives of the class up to `max_order` elements that pass
/// `filter`, one entry per frame-permutation orbit, sorted by form.
pub fn enumerate_minimal_representatives(
    class: FpoClass,
    max_order: usize,
    filter: Filter,
) -> Result<Catalog, SearchError> {
    enumerate_minimal_representatives_with(class, max_order, filter, MinimalityStrategy::General, DEFAULT_BUDGET)
}

pub fn enumerate_minimal_representatives_with(
    class: FpoClass,
    max_order: usize,
    filter: Filter,
    strategy: MinimalityStrategy,
    budget: u64,
) -> Result<Catalog, SearchError> {
    let types = enumerate_fpo_types(class, max_order);
    let kept: Vec<Result<Option<(CanonicalForm, Flags)>, SearchError>> = types
        .par_iter()
        .map(|form| {
            let s = form.to_fpo();
            if !filter.accepts(&s) {
                return Ok(None);
            }
            if !is_minimal_representative_with(&s, strategy, budget)? {
                return Ok(None);
            }
            Ok(Some((form.clone(), Flags::of(&s, true))))
        })
        .collect();
    let mut orbits: BTreeMap<CanonicalForm, (Flags, usize)> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for item in kept {
        let Some((form, flags)) = item? else { continue };
        if seen.contains(&form) {
            continue;
        }
        let orbit = frame_orbit(&form.to_fpo());
        seen.extend(orbit.iter().cloned());
        orbits.insert(orbit[0].clone(), (flags, orbit.len()));
    }
    Ok(Catalog {
        class,
        max_order,
        filter,
        entries: orbits
            .into_iter()
            .map(|(form, (flags, orbit_size))| CatalogEntry {
                form,
                flags,
                orbit_size,
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    /// Labelled closed orders with the frame pinned, deduplicated by
    /// canonical form.
    fn brute_force_types(class: FpoClass, order: usize) -> BTreeSet<CanonicalForm> {
        let (m, n) = (class.inputs, class.outputs);
        let ids: Vec<String> = (0..order).map(|i| i.to_string()).collect();
        let pairs: Vec<(usize, usize)> = (0..order)
            .flat_map(|a| (0..order).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b)
            .collect();
        let mut out = BTreeSet::new();
        for mask in 0u64..1 << pairs.len() {
            let mut lt = BitRelation::new(order);
            for (k, &(a, b)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    lt.insert(a, b);
                }
            }
            if !lt.is_transitive() || !lt.is_irreflexive() {
                continue;
            }
            if let Ok(f) = Fpo::from_closed(ids.clone(), lt, (0..m).collect(), (m..m + n).collect()) {
                out.insert(canonical_form(&f));
            }
        }
        out
    }

    #[test]
    fn matches_brute_force() {
        for (m, n, max) in [(0, 2, 4), (1, 1, 4), (1, 2, 4), (2, 1, 4), (0, 0, 3), (2, 2, 5)] {
            let class = FpoClass::new(m, n);
            let got: BTreeSet<CanonicalForm> = enumerate_fpo_types(class, max).into_iter().collect();
            let mut want = BTreeSet::new();
            for order in m + n..=max {
                want.extend(brute_force_types(class, order));
            }
            assert_eq!(got, want, "class {class} max {max}");
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_fpo_types(FpoClass::new(0, 2), 2).len(), 1);
        assert_eq!(enumerate_fpo_types(FpoClass::new(1, 1), 2).len(), 2);
        let empty = enumerate_fpo_types(FpoClass::new(0, 0), 0);
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].size(), 0);
    }

    #[test]
    fn zero_two_causal() {
        let c = enumerate_minimal_representatives(FpoClass::new(0, 2), 3, Filter::CausalRelevant).unwrap();
        assert_eq!(c.entries.len(), 2);
        assert_eq!(c.type_count(), 2);
        assert_eq!(c.entries.iter().filter(|e| e.form.size() == 3).count(), 1);
    }

    #[test]
    fn deterministic_filter_keeps_frame_only() {
        let c = enumerate_minimal_representatives(FpoClass::new(1, 2), 3, Filter::DeterministicRelevant).unwrap();
        assert!(c.entries.iter().all(|e| e.form.size() == 3));
        assert_eq!(c.type_count(), 4);
    }

    #[test]
    fn markov_two_two() {
        let c = enumerate_minimal_representatives(FpoClass::new(2, 2), 5, Filter::MarkovRelevant).unwrap();
        let forms = c.all_forms();
        let has = |f: &Fpo| forms.contains(&canonical_form(f));
        assert!(has(&named::bell()));
        assert!(has(&named::oneway_l()) && has(&named::oneway_r()));
        assert!(has(&named::full_frame(2, 2)));
        assert!(!has(&named::bottleneck(2, 2)));
        assert!(c.entries.iter().all(|e| e.flags.markov_relevant && e.flags.minimal));
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }
}
