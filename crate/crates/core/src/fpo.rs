//! Framed partial orders: a finite strict order with an ordered list of
//! minimal input elements and an ordered list of maximal output elements.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::relation::BitRelation;

/// Number of inputs and outputs of a framed partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FpoClass {
    pub inputs: usize,
    pub outputs: usize,
}

impl FpoClass {
    pub const fn new(inputs: usize, outputs: usize) -> Self {
        FpoClass { inputs, outputs }
    }

    pub fn frame_len(&self) -> usize {
        self.inputs + self.outputs
    }
}

impl fmt::Display for FpoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.inputs, self.outputs)
    }
}

/// A single broken invariant, with the offending element(s).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    DuplicateElement(String),
    UnknownElement(String),
    Cycle(Vec<String>),
    FramesNotDisjoint(String),
    RepeatedFrameEntry(String),
    InputNotMinimal { input: String, below: String },
    OutputNotMaximal { output: String, above: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateElement(x) => write!(f, "duplicate element id `{x}`"),
            Violation::UnknownElement(x) => write!(f, "unknown element `{x}`"),
            Violation::Cycle(c) => write!(f, "cycle {}", c.join(" < ")),
            Violation::FramesNotDisjoint(x) => {
                write!(f, "frames not disjoint: `{x}` is both input and output")
            }
            Violation::RepeatedFrameEntry(x) => write!(f, "frame element `{x}` listed twice"),
            Violation::InputNotMinimal { input, below } => {
                write!(f, "input not minimal: `{below}` < `{input}`")
            }
            Violation::OutputNotMaximal { output, above } => {
                write!(f, "output not maximal: `{output}` < `{above}`")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FpoError {
    #[error("relation contains a cycle: {}", .0.join(" < "))]
    Cycle(Vec<String>),
    #[error("invalid framed partial order: {}", display_list(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
}

fn display_list(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// Role of an element with respect to the frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Input(usize),
    Output(usize),
    Internal,
}

/// Serialized form: `relations` may be any generating set; loading closes it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpoData {
    pub elements: Vec<String>,
    #[serde(default)]
    pub inputs: Vec<String>,
    #[serde(default)]
    pub outputs: Vec<String>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

/// A framed partial order. The strict order is stored transitively closed.
#[derive(Clone)]
pub struct Fpo {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    lt: BitRelation,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
    roles: Vec<Role>,
}

impl PartialEq for Fpo {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.inputs == other.inputs && self.outputs == other.outputs && self.lt == other.lt
    }
}

impl Eq for Fpo {}

impl fmt::Debug for Fpo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel: Vec<String> = self
            .hasse_edges()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.ids[a], self.ids[b]))
            .collect();
        f.debug_struct("Fpo")
            .field("inputs", &self.input_ids())
            .field("outputs", &self.output_ids())
            .field("internal", &self.internal().map(|i| &self.ids[i]).collect::<Vec<_>>())
            .field("hasse", &rel)
            .finish()
    }
}

/// Closes `pairs` over `n` indices, or returns a witness cycle as index list.
pub(crate) fn close_checked(n: usize, pairs: &[(usize, usize)]) -> Result<BitRelation, Vec<usize>> {
    let mut r = BitRelation::from_pairs(n, pairs.iter().copied());
    r.close();
    if r.is_irreflexive() {
        return Ok(r);
    }
    Err(find_cycle(n, pairs).unwrap_or_default())
}

fn find_cycle(n: usize, pairs: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in pairs {
        adj[a].push(b);
    }
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut stack_path: Vec<usize> = Vec::new();
    fn dfs(v: usize, adj: &[Vec<usize>], state: &mut [u8], path: &mut Vec<usize>) -> Option<Vec<usize>> {
        state[v] = 1;
        path.push(v);
        for &w in &adj[v] {
            if state[w] == 1 {
                let start = path.iter().position(|&p| p == w).unwrap();
                let mut cyc = path[start..].to_vec();
                cyc.push(w);
                return Some(cyc);
            }
            if state[w] == 0 {
                if let Some(c) = dfs(w, adj, state, path) {
                    return Some(c);
                }
            }
        }
        path.pop();
        state[v] = 2;
        None
    }
    for v in 0..n {
        if state[v] == 0 {
            if let Some(c) = dfs(v, &adj, &mut state, &mut stack_path) {
                return Some(c);
            }
        }
    }
    None
}

/// Smallest transitive superset of `pairs` over `elements`.
pub fn transitive_closure(
    elements: &[String],
    pairs: &[(String, String)],
) -> Result<BTreeSet<(String, String)>, FpoError> {
    let index: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
    let mut idx = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        let ia = *index
            .get(a.as_str())
            .ok_or_else(|| FpoError::UnknownElement(a.clone()))?;
        let ib = *index
            .get(b.as_str())
            .ok_or_else(|| FpoError::UnknownElement(b.clone()))?;
        idx.push((ia, ib));
    }
    let closed = close_checked(elements.len(), &idx)
        .map_err(|c| FpoError::Cycle(c.into_iter().map(|i| elements[i].clone()).collect()))?;
    Ok(closed
        .pairs()
        .map(|(a, b)| (elements[a].clone(), elements[b].clone()))
        .collect())
}

/// Every invariant `data` breaks; empty means it describes a valid FPO.
pub fn validate_fpo(data: &FpoData) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut index = HashMap::new();
    for (i, e) in data.elements.iter().enumerate() {
        if index.insert(e.as_str(), i).is_some() {
            out.push(Violation::DuplicateElement(e.clone()));
        }
    }
    let mut pairs = Vec::new();
    for (a, b) in &data.relations {
        match (index.get(a.as_str()), index.get(b.as_str())) {
            (Some(&x), Some(&y)) => pairs.push((x, y)),
            (None, _) => out.push(Violation::UnknownElement(a.clone())),
            (_, None) => out.push(Violation::UnknownElement(b.clone())),
        }
    }
    let mut seen = HashSet::new();
    for f in data.inputs.iter().chain(&data.outputs) {
        if !index.contains_key(f.as_str()) {
            out.push(Violation::UnknownElement(f.clone()));
        }
        if !seen.insert(f.as_str()) {
            if data.inputs.contains(f) && data.outputs.contains(f) {
                out.push(Violation::FramesNotDisjoint(f.clone()));
            } else {
                out.push(Violation::RepeatedFrameEntry(f.clone()));
            }
        }
    }
    let closed = match close_checked(data.elements.len(), &pairs) {
        Ok(c) => c,
        Err(cyc) => {
            out.push(Violation::Cycle(
                cyc.into_iter().map(|i| data.elements[i].clone()).collect(),
            ));
            return out;
        }
    };
    for i in &data.inputs {
        if let Some(&x) = index.get(i.as_str()) {
            if let Some(b) = closed.predecessors(x).next() {
                out.push(Violation::InputNotMinimal {
                    input: i.clone(),
                    below: data.elements[b].clone(),
                });
            }
        }
    }
    for o in &data.outputs {
        if let Some(&x) = index.get(o.as_str()) {
            if let Some(a) = closed.successors(x).next() {
                out.push(Violation::OutputNotMaximal {
                    output: o.clone(),
                    above: data.elements[a].clone(),
                });
            }
        }
    }
    out
}

/// Longest chain / antichain and relation counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub height: usize,
    pub width: usize,
    /// Pairs `x <= y`, reflexive pairs included.
    pub relation_count: usize,
    pub hasse_edge_count: usize,
}

impl Fpo {
    /// Builds an FPO from element ids, a generating relation and frame lists.
    pub fn new<S: AsRef<str>>(
        elements: &[S],
        relations: &[(S, S)],
        inputs: &[S],
        outputs: &[S],
    ) -> Result<Fpo, FpoError> {
        let own = |v: &[S]| v.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>();
        Fpo::from_data(&FpoData {
            elements: own(elements),
            inputs: own(inputs),
            outputs: own(outputs),
            relations: relations
                .iter()
                .map(|(a, b)| (a.as_ref().to_string(), b.as_ref().to_string()))
                .collect(),
        })
    }

    pub fn from_data(data: &FpoData) -> Result<Fpo, FpoError> {
        let violations = validate_fpo(data);
        if !violations.is_empty() {
            if let [Violation::Cycle(c)] = violations.as_slice() {
                return Err(FpoError::Cycle(c.clone()));
            }
            return Err(FpoError::Invalid(violations));
        }
        let index: HashMap<String, usize> = data.elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let pairs: Vec<(usize, usize)> = data.relations.iter().map(|(a, b)| (index[a], index[b])).collect();
        let lt = close_checked(data.elements.len(), &pairs).expect("validated");
        let inputs = data.inputs.iter().map(|x| index[x]).collect();
        let outputs = data.outputs.iter().map(|x| index[x]).collect();
        Ok(Fpo::assemble(data.elements.clone(), lt, inputs, outputs))
    }

    /// Builds from a closed relation over indices; validates frame conditions.
    pub fn from_closed(
        ids: Vec<String>,
        lt: BitRelation,
        inputs: Vec<usize>,
        outputs: Vec<usize>,
    ) -> Result<Fpo, FpoError> {
        debug_assert_eq!(ids.len(), lt.len());
        let f = Fpo::assemble(ids, lt, inputs, outputs);
        let v = validate_fpo(&f.to_data());
        if v.is_empty() {
            Ok(f)
        } else {
            Err(FpoError::Invalid(v))
        }
    }

    pub(crate) fn assemble(ids: Vec<String>, lt: BitRelation, inputs: Vec<usize>, outputs: Vec<usize>) -> Fpo {
        let index = ids.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let mut roles = vec![Role::Internal; ids.len()];
        for (k, &i) in inputs.iter().enumerate() {
            roles[i] = Role::Input(k);
        }
        for (k, &o) in outputs.iter().enumerate() {
            roles[o] = Role::Output(k);
        }
        Fpo {
            ids,
            index,
            lt,
            inputs,
            outputs,
            roles,
        }
    }

    pub fn empty() -> Fpo {
        Fpo::assemble(Vec::new(), BitRelation::new(0), Vec::new(), Vec::new())
    }

    pub fn to_data(&self) -> FpoData {
        FpoData {
            elements: self.ids.clone(),
            inputs: self.input_ids(),
            outputs: self.output_ids(),
            relations: self.hasse_reduction(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn class(&self) -> FpoClass {
        FpoClass::new(self.inputs.len(), self.outputs.len())
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    #[inline]
    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt.contains(a, b)
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.lt.contains(a, b)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    pub fn lt_ids(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(x), Some(y)) => self.lt(x, y),
            _ => false,
        }
    }

    pub fn relation(&self) -> &BitRelation {
        &self.lt
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }

    pub fn input_ids(&self) -> Vec<String> {
        self.inputs.iter().map(|&i| self.ids[i].clone()).collect()
    }

    pub fn output_ids(&self) -> Vec<String> {
        self.outputs.iter().map(|&i| self.ids[i].clone()).collect()
    }

    #[inline]
    pub fn role(&self, i: usize) -> Role {
        self.roles[i]
    }

    #[inline]
    pub fn is_internal(&self, i: usize) -> bool {
        self.roles[i] == Role::Internal
    }

    #[inline]
    pub fn is_frame(&self, i: usize) -> bool {
        !self.is_internal(i)
    }

    pub fn internal(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.is_internal(i))
    }

    pub fn internal_count(&self) -> usize {
        self.len() - self.inputs.len() - self.outputs.len()
    }

    /// Frame indices: inputs in order, then outputs in order.
    pub fn frame(&self) -> Vec<usize> {
        self.inputs.iter().chain(&self.outputs).copied().collect()
    }

    pub fn above(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.lt.successors(a)
    }

    pub fn below(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.lt.predecessors(a)
    }

    pub fn is_minimal(&self, a: usize) -> bool {
        self.below(a).next().is_none()
    }

    pub fn is_maximal(&self, a: usize) -> bool {
        self.above(a).next().is_none()
    }

    /// Covering pairs as indices.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.lt.covers()
    }

    /// Covering pairs as ids (the transitive reduction).
    pub fn hasse_reduction(&self) -> Vec<(String, String)> {
        self.hasse_edges()
            .into_iter()
            .map(|(a, b)| (self.ids[a].clone(), self.ids[b].clone()))
            .collect()
    }

    /// Strict pairs as ids.
    pub fn strict_pairs(&self) -> BTreeSet<(String, String)> {
        self.lt
            .pairs()
            .map(|(a, b)| (self.ids[a].clone(), self.ids[b].clone()))
            .collect()
    }

    /// Number of pairs `x <= y` including `x <= x`.
    pub fn relation_count(&self) -> usize {
        self.len() + self.lt.pair_count()
    }

    /// Indices sorted so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.below(i).count(), i));
        order
    }

    pub fn height(&self) -> usize {
        let mut longest = vec![0usize; self.len()];
        for &v in &self.linear_extension() {
            longest[v] = 1 + self.below(v).map(|u| longest[u]).max().unwrap_or(0);
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Maximum antichain size via Dilworth: `n - maximum matching` in the
    /// bipartite comparability graph.
    pub fn width(&self) -> usize {
        let n = self.len();
        let mut match_right: Vec<Option<usize>> = vec![None; n];
        let mut matched = 0;
        for u in 0..n {
            let mut seen = vec![false; n];
            if self.augment(u, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        n - matched
    }

    fn augment(&self, u: usize, seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for v in self.lt.successors(u) {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            let free = match match_right[v] {
                None => true,
                Some(w) => self.augment(w, seen, match_right),
            };
            if free {
                match_right[v] = Some(u);
                return true;
            }
        }
        false
    }

    pub fn chain_report(&self) -> ChainReport {
        ChainReport {
            height: self.height(),
            width: self.width(),
            relation_count: self.relation_count(),
            hasse_edge_count: self.hasse_edges().len(),
        }
    }

    /// Sub-FPO on `keep` (which must contain the whole frame) with the
    /// induced order. Element order follows `keep`.
    pub fn induced(&self, keep: &[usize]) -> Fpo {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let ids = keep.iter().map(|&i| self.ids[i].clone()).collect();
        let inputs = self.inputs.iter().map(|i| pos[i]).collect();
        let outputs = self.outputs.iter().map(|i| pos[i]).collect();
        Fpo::assemble(ids, self.lt.restrict(keep), inputs, outputs)
    }

    /// Drops the given internal elements, keeping every relation they mediated.
    pub fn without(&self, drop: &[usize]) -> Fpo {
        let keep: Vec<usize> = (0..self.len()).filter(|i| !drop.contains(i)).collect();
        self.induced(&keep)
    }

    /// Reorders elements (a permutation of indices), keeping ids.
    pub fn permuted(&self, order: &[usize]) -> Fpo {
        debug_assert_eq!(order.len(), self.len());
        self.induced(order)
    }

    pub fn renamed(&self, mut f: impl FnMut(&str) -> String) -> Fpo {
        let ids = self.ids.iter().map(|s| f(s)).collect();
        Fpo::assemble(ids, self.lt.clone(), self.inputs.clone(), self.outputs.clone())
    }

    /// Same order with the frame lists reordered: `input_perm[k]` is the old
    /// position of the new k-th input.
    pub fn with_frame_permutation(&self, input_perm: &[usize], output_perm: &[usize]) -> Fpo {
        let inputs = input_perm.iter().map(|&k| self.inputs[k]).collect();
        let outputs = output_perm.iter().map(|&k| self.outputs[k]).collect();
        Fpo::assemble(self.ids.clone(), self.lt.clone(), inputs, outputs)
    }

    /// Adds a fresh internal element related to nothing.
    pub fn with_isolated(&self, id: &str) -> Fpo {
        let n = self.len();
        let mut lt = BitRelation::new(n + 1);
        for (a, b) in self.lt.pairs() {
            lt.insert(a, b);
        }
        let mut ids = self.ids.clone();
        ids.push(id.to_string());
        Fpo::assemble(ids, lt, self.inputs.clone(), self.outputs.clone())
    }

    /// Internal connection components: `ConInt(x)` is every `y` reachable
    /// from `x` through related pairs whose intermediate elements are all
    /// internal. Returns the distinct sets, each sorted, in order of first
    /// appearance.
    pub fn internal_connection_components(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.len() {
            let comp = self.internal_component_of(x);
            if !out.contains(&comp) {
                out.push(comp);
            }
        }
        out
    }

    pub fn internal_component_of(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        seen[x] = true;
        let mut queue = VecDeque::from([x]);
        while let Some(z) = queue.pop_front() {
            if z != x && !self.is_internal(z) {
                continue;
            }
            for w in 0..self.len() {
                if !seen[w] && self.related(z, w) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (0..self.len()).filter(|&i| seen[i]).collect()
    }

    /// Plain connection components of the comparability graph.
    pub fn connection_components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut members = vec![s];
            comp[s] = c;
            let mut k = 0;
            while k < members.len() {
                let z = members[k];
                k += 1;
                for w in 0..n {
                    if comp[w] == usize::MAX && self.related(z, w) {
                        comp[w] = c;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Graphviz rendering of the Hasse diagram: inputs on the bottom rank,
    /// outputs on the top rank, internal elements black, frame elements red.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let mut s =
            String::from("digraph fpo {\n  rankdir=BT;\n  node [shape=circle, style=filled, label=\"\", width=0.2];\n");
        let q = |x: &str| format!("\"{}\"", x.replace('"', "\\\""));
        for i in 0..self.len() {
            let (color, xlabel) = match self.role(i) {
                Role::Internal => ("black", self.ids[i].clone()),
                _ => ("red", self.ids[i].clone()),
            };
            let _ = writeln!(
                s,
                "  {} [fillcolor={color}, color={color}, xlabel={}];",
                q(&self.ids[i]),
                q(&xlabel)
            );
        }
        if !self.inputs.is_empty() {
            let names: Vec<String> = self.inputs.iter().map(|&i| q(&self.ids[i])).collect();
            let _ = writeln!(s, "  {{ rank=min; {}; }}", names.join("; "));
        }
        if !self.outputs.is_empty() {
            let names: Vec<String> = self.outputs.iter().map(|&i| q(&self.ids[i])).collect();
            let _ = writeln!(s, "  {{ rank=max; {}; }}", names.join("; "));
        }
        for (a, b) in self.hasse_edges() {
            let _ = writeln!(s, "  {} -> {};", q(&self.ids[a]), q(&self.ids[b]));
        }
        s.push_str("}\n");
        s
    }
}

impl Serialize for Fpo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_data().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Fpo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let data = FpoData::deserialize(d)?;
        Fpo::from_data(&data).map_err(serde::de::Error::custom)
    }
}

/// Disjoint union of two FPOs; frame lists are concatenated. Ids that clash
/// are renamed by appending `'` until unique.
pub fn parallel_compose(a: &Fpo, b: &Fpo) -> Fpo {
    let na = a.len();
    let mut ids = a.ids.clone();
    let mut taken: HashSet<String> = ids.iter().cloned().collect();
    for id in &b.ids {
        let mut fresh = id.clone();
        while taken.contains(&fresh) {
            fresh.push('\'');
        }
        taken.insert(fresh.clone());
        ids.push(fresh);
    }
    let mut lt = BitRelation::new(na + b.len());
    for (x, y) in a.lt.pairs() {
        lt.insert(x, y);
    }
    for (x, y) in b.lt.pairs() {
        lt.insert(na + x, na + y);
    }
    let inputs = a
        .inputs
        .iter()
        .copied()
        .chain(b.inputs.iter().map(|i| i + na))
        .collect();
    let outputs = a
        .outputs
        .iter()
        .copied()
        .chain(b.outputs.iter().map(|i| i + na))
        .collect();
    Fpo::assemble(ids, lt, inputs, outputs)
}
