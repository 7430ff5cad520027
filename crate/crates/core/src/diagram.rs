//! Box-and-wire diagrams and their conversion to framed partial orders.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fop::{FopMap, MapViolation};
use crate::fpo::{Fpo, FpoError};
use crate::relation::BitRelation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxSpec {
    pub id: String,
    pub in_ports: usize,
    pub out_ports: usize,
}

/// A wire end: a box port, an external input (source) or an external
/// output (sink).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Endpoint {
    Port {
        #[serde(rename = "box")]
        box_id: String,
        port: usize,
    },
    Input {
        input: usize,
    },
    Output {
        output: usize,
    },
}

impl Endpoint {
    pub fn port(box_id: &str, port: usize) -> Self {
        Endpoint::Port {
            box_id: box_id.to_string(),
            port,
        }
    }

    pub fn input(k: usize) -> Self {
        Endpoint::Input { input: k }
    }

    pub fn output(k: usize) -> Self {
        Endpoint::Output { output: k }
    }

    pub fn box_id(&self) -> Option<&str> {
        match self {
            Endpoint::Port { box_id, .. } => Some(box_id),
            _ => None,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Port { box_id, port } => write!(f, "{box_id}.{port}"),
            Endpoint::Input { input } => write!(f, "input {input}"),
            Endpoint::Output { output } => write!(f, "output {output}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wire {
    pub from: Endpoint,
    pub to: Endpoint,
}

/// An acyclic circuit with ordered external inputs and outputs. Wires run
/// from box output ports (or external inputs) to box input ports (or
/// external outputs).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub boxes: Vec<BoxSpec>,
    pub wires: Vec<Wire>,
    pub ext_inputs: usize,
    pub ext_outputs: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_names: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiagramViolation {
    DuplicateBox(String),
    UnknownBox(String),
    PortOutOfRange(String),
    UnusedPort(String),
    PortUsedTwice(String),
    WrongDirection(String),
    Cycle(Vec<String>),
    NameCount { expected: usize, got: usize },
    NameClash(String),
}

impl fmt::Display for DiagramViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramViolation::DuplicateBox(b) => write!(f, "duplicate box id `{b}`"),
            DiagramViolation::UnknownBox(b) => write!(f, "unknown box `{b}`"),
            DiagramViolation::PortOutOfRange(e) => write!(f, "port out of range: {e}"),
            DiagramViolation::UnusedPort(e) => write!(f, "unused port {e}"),
            DiagramViolation::PortUsedTwice(e) => write!(f, "port used twice: {e}"),
            DiagramViolation::WrongDirection(e) => write!(f, "wrong wire direction at {e}"),
            DiagramViolation::Cycle(c) => write!(f, "cycle {}", c.join(" -> ")),
            DiagramViolation::NameCount { expected, got } => {
                write!(f, "expected {expected} frame names, got {got}")
            }
            DiagramViolation::NameClash(n) => write!(f, "name `{n}` used twice"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiagramError {
    #[error("invalid diagram: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<DiagramViolation>),
    #[error("quotient has a cycle through blocks {}", .0.join(" -> "))]
    QuotientCycle(Vec<String>),
    #[error("partition does not cover the boxes exactly: {0}")]
    BadPartition(String),
    #[error("map is not frame- and order-preserving: {0}")]
    FopValidation(MapViolation),
    #[error("map domain is not the FPO of the diagram")]
    DomainMismatch,
    #[error("cannot substitute into `{box_id}`: {reason}")]
    Substitution { box_id: String, reason: String },
    #[error(transparent)]
    Fpo(#[from] FpoError),
}

impl Diagram {
    pub fn new(ext_inputs: usize, ext_outputs: usize) -> Self {
        Diagram {
            ext_inputs,
            ext_outputs,
            ..Default::default()
        }
    }

    pub fn with_names(mut self, inputs: &[&str], outputs: &[&str]) -> Self {
        self.input_names = Some(inputs.iter().map(|s| s.to_string()).collect());
        self.output_names = Some(outputs.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn add_box(&mut self, id: &str, in_ports: usize, out_ports: usize) -> &mut Self {
        self.boxes.push(BoxSpec {
            id: id.to_string(),
            in_ports,
            out_ports,
        });
        self
    }

    pub fn wire(&mut self, from: Endpoint, to: Endpoint) -> &mut Self {
        self.wires.push(Wire { from, to });
        self
    }

    pub fn input_name(&self, k: usize) -> String {
        match &self.input_names {
            Some(v) if k < v.len() => v[k].clone(),
            _ => format!("in{k}"),
        }
    }

    pub fn output_name(&self, k: usize) -> String {
        match &self.output_names {
            Some(v) if k < v.len() => v[k].clone(),
            _ => format!("out{k}"),
        }
    }

    fn box_index(&self) -> HashMap<&str, usize> {
        self.boxes.iter().enumerate().map(|(i, b)| (b.id.as_str(), i)).collect()
    }

    /// Box-to-box successor lists by box index.
    fn box_graph(&self) -> Vec<Vec<usize>> {
        let index = self.box_index();
        let mut adj = vec![Vec::new(); self.boxes.len()];
        for w in &self.wires {
            if let (Some(a), Some(b)) = (w.from.box_id(), w.to.box_id()) {
                if let (Some(&a), Some(&b)) = (index.get(a), index.get(b)) {
                    adj[a].push(b);
                }
            }
        }
        adj
    }
}

fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut state = vec![0u8; n];
    let mut path = Vec::new();
    fn dfs(v: usize, adj: &[Vec<usize>], state: &mut [u8], path: &mut Vec<usize>) -> Option<Vec<usize>> {
        state[v] = 1;
        path.push(v);
        for &w in &adj[v] {
            if state[w] == 1 {
                let start = path.iter().position(|&p| p == w).unwrap();
                let mut c = path[start..].to_vec();
                c.push(w);
                return Some(c);
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
    (0..n).find_map(|v| {
        if state[v] == 0 {
            dfs(v, adj, &mut state, &mut path)
        } else {
            None
        }
    })
}

/// Every broken invariant of `d`; empty means valid.
pub fn validate_diagram(d: &Diagram) -> Vec<DiagramViolation> {
    let mut out = Vec::new();
    let mut index: HashMap<&str, &BoxSpec> = HashMap::new();
    for b in &d.boxes {
        if index.insert(b.id.as_str(), b).is_some() {
            out.push(DiagramViolation::DuplicateBox(b.id.clone()));
        }
    }
    let mut used_src: HashSet<Endpoint> = HashSet::new();
    let mut used_dst: HashSet<Endpoint> = HashSet::new();
    for w in &d.wires {
        for (e, is_source) in [(&w.from, true), (&w.to, false)] {
            let ok = match e {
                Endpoint::Port { box_id, port } => match index.get(box_id.as_str()) {
                    None => {
                        out.push(DiagramViolation::UnknownBox(box_id.clone()));
                        false
                    }
                    Some(b) => {
                        let limit = if is_source { b.out_ports } else { b.in_ports };
                        if *port >= limit {
                            out.push(DiagramViolation::PortOutOfRange(e.to_string()));
                        }
                        *port < limit
                    }
                },
                Endpoint::Input { input } => {
                    if !is_source {
                        out.push(DiagramViolation::WrongDirection(e.to_string()));
                        false
                    } else if *input >= d.ext_inputs {
                        out.push(DiagramViolation::PortOutOfRange(e.to_string()));
                        false
                    } else {
                        true
                    }
                }
                Endpoint::Output { output } => {
                    if is_source {
                        out.push(DiagramViolation::WrongDirection(e.to_string()));
                        false
                    } else if *output >= d.ext_outputs {
                        out.push(DiagramViolation::PortOutOfRange(e.to_string()));
                        false
                    } else {
                        true
                    }
                }
            };
            if ok {
                let set = if is_source { &mut used_src } else { &mut used_dst };
                if !set.insert(e.clone()) {
                    out.push(DiagramViolation::PortUsedTwice(e.to_string()));
                }
            }
        }
    }
    for k in 0..d.ext_inputs {
        if !used_src.contains(&Endpoint::input(k)) {
            out.push(DiagramViolation::UnusedPort(Endpoint::input(k).to_string()));
        }
    }
    for k in 0..d.ext_outputs {
        if !used_dst.contains(&Endpoint::output(k)) {
            out.push(DiagramViolation::UnusedPort(Endpoint::output(k).to_string()));
        }
    }
    for b in &d.boxes {
        for p in 0..b.out_ports {
            let e = Endpoint::port(&b.id, p);
            if !used_src.contains(&e) {
                out.push(DiagramViolation::UnusedPort(format!("{e} (out)")));
            }
        }
        for p in 0..b.in_ports {
            let e = Endpoint::port(&b.id, p);
            if !used_dst.contains(&e) {
                out.push(DiagramViolation::UnusedPort(format!("{e} (in)")));
            }
        }
    }
    for (names, expected) in [(&d.input_names, d.ext_inputs), (&d.output_names, d.ext_outputs)] {
        if let Some(v) = names {
            if v.len() != expected {
                out.push(DiagramViolation::NameCount { expected, got: v.len() });
            }
        }
    }
    let mut names: HashSet<String> = d.boxes.iter().map(|b| b.id.clone()).collect();
    for n in (0..d.ext_inputs)
        .map(|k| d.input_name(k))
        .chain((0..d.ext_outputs).map(|k| d.output_name(k)))
    {
        if !names.insert(n.clone()) {
            out.push(DiagramViolation::NameClash(n));
        }
    }
    if let Some(c) = find_cycle(&d.box_graph()) {
        out.push(DiagramViolation::Cycle(
            c.into_iter().map(|i| d.boxes[i].id.clone()).collect(),
        ));
    }
    out
}

fn check(d: &Diagram) -> Result<(), DiagramError> {
    let v = validate_diagram(d);
    if v.is_empty() {
        Ok(())
    } else {
        Err(DiagramError::Invalid(v))
    }
}

/// The FPO before identifications: external inputs, external outputs and
/// boxes (in that order), ordered by wire paths.
pub fn raw_fpo(d: &Diagram) -> Result<Fpo, DiagramError> {
    check(d)?;
    let m = d.ext_inputs;
    let n = d.ext_outputs;
    let mut ids: Vec<String> = (0..m).map(|k| d.input_name(k)).collect();
    ids.extend((0..n).map(|k| d.output_name(k)));
    ids.extend(d.boxes.iter().map(|b| b.id.clone()));
    let index = d.box_index();
    let node = |e: &Endpoint| match e {
        Endpoint::Input { input } => *input,
        Endpoint::Output { output } => m + output,
        Endpoint::Port { box_id, .. } => m + n + index[box_id.as_str()],
    };
    let mut lt = BitRelation::from_pairs(ids.len(), d.wires.iter().map(|w| (node(&w.from), node(&w.to))));
    lt.close();
    Ok(Fpo::assemble(ids, lt, (0..m).collect(), (m..m + n).collect()))
}

/// `rep[x]` is the element `x` is identified with (itself if it survives).
/// Child pass to fixpoint, then parent pass to fixpoint.
fn g_identifications(s: &Fpo) -> Vec<usize> {
    let n = s.len();
    let mut rep: Vec<usize> = (0..n).collect();
    let alive = |rep: &[usize], x: usize| rep[x] == x;
    for child_pass in [true, false] {
        loop {
            let mut changed = false;
            for x in s.internal() {
                if !alive(&rep, x) {
                    continue;
                }
                let near: Vec<usize> = if child_pass {
                    s.above(x).filter(|&y| alive(&rep, y)).collect()
                } else {
                    s.below(x).filter(|&y| alive(&rep, y)).collect()
                };
                if let [f] = near[..] {
                    if s.is_frame(f) {
                        rep[x] = f;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }
    rep
}

/// The identification passes applied to an arbitrary FPO.
pub fn g_normalize(s: &Fpo) -> Fpo {
    let rep = g_identifications(s);
    let keep: Vec<usize> = (0..s.len()).filter(|&x| rep[x] == x).collect();
    s.induced(&keep)
}

/// Result of the 𝒢 conversion with, per FPO element, the boxes it absorbed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GResult {
    pub fpo: Fpo,
    pub provenance: BTreeMap<String, Vec<String>>,
}

pub fn diagram_to_fpo(d: &Diagram) -> Result<Fpo, DiagramError> {
    Ok(diagram_to_fpo_with_provenance(d)?.fpo)
}

pub fn diagram_to_fpo_with_provenance(d: &Diagram) -> Result<GResult, DiagramError> {
    let raw = raw_fpo(d)?;
    let rep = g_identifications(&raw);
    let keep: Vec<usize> = (0..raw.len()).filter(|&x| rep[x] == x).collect();
    let mut provenance: BTreeMap<String, Vec<String>> =
        keep.iter().map(|&x| (raw.id(x).to_string(), Vec::new())).collect();
    for x in raw.internal() {
        provenance
            .get_mut(raw.id(rep[x]))
            .expect("representative survives")
            .push(raw.id(x).to_string());
    }
    Ok(GResult {
        fpo: raw.induced(&keep),
        provenance,
    })
}

/// Merges each block of boxes into one box named by joining the block's ids
/// with `+`. Ports are ordered by position of the box in the block, then by
/// original port.
pub fn coarse_grain(d: &Diagram, partition: &[Vec<String>]) -> Result<Diagram, DiagramError> {
    check(d)?;
    let mut block_of: HashMap<&str, usize> = HashMap::new();
    for (k, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(DiagramError::BadPartition("empty block".into()));
        }
        for b in block {
            if d.boxes.iter().all(|x| &x.id != b) {
                return Err(DiagramError::BadPartition(format!("unknown box `{b}`")));
            }
            if block_of.insert(b.as_str(), k).is_some() {
                return Err(DiagramError::BadPartition(format!("box `{b}` in two blocks")));
            }
        }
    }
    if let Some(b) = d.boxes.iter().find(|b| !block_of.contains_key(b.id.as_str())) {
        return Err(DiagramError::BadPartition(format!("box `{}` not covered", b.id)));
    }
    let names: Vec<String> = partition.iter().map(|b| b.join("+")).collect();
    let blk = |e: &Endpoint| e.box_id().map(|b| block_of[b]);
    let mut adj = vec![Vec::new(); partition.len()];
    for w in &d.wires {
        if let (Some(a), Some(b)) = (blk(&w.from), blk(&w.to)) {
            if a != b {
                adj[a].push(b);
            }
        }
    }
    if let Some(c) = find_cycle(&adj) {
        return Err(DiagramError::QuotientCycle(
            c.into_iter().map(|i| names[i].clone()).collect(),
        ));
    }
    let pos = |e: &Endpoint| -> (usize, usize) {
        let Endpoint::Port { box_id, port } = e else {
            unreachable!()
        };
        let k = block_of[box_id.as_str()];
        (partition[k].iter().position(|x| x == box_id).unwrap(), *port)
    };
    let crossing: Vec<&Wire> = d
        .wires
        .iter()
        .filter(|w| blk(&w.from).is_none() || blk(&w.to).is_none() || blk(&w.from) != blk(&w.to))
        .collect();
    let mut in_port: HashMap<Endpoint, usize> = HashMap::new();
    let mut out_port: HashMap<Endpoint, usize> = HashMap::new();
    let mut boxes = Vec::new();
    for (k, name) in names.iter().enumerate() {
        let mut ins: Vec<&Endpoint> = crossing.iter().map(|w| &w.to).filter(|e| blk(e) == Some(k)).collect();
        ins.sort_by_key(|e| pos(e));
        let mut outs: Vec<&Endpoint> = crossing.iter().map(|w| &w.from).filter(|e| blk(e) == Some(k)).collect();
        outs.sort_by_key(|e| pos(e));
        for (p, e) in ins.iter().enumerate() {
            in_port.insert((*e).clone(), p);
        }
        for (p, e) in outs.iter().enumerate() {
            out_port.insert((*e).clone(), p);
        }
        boxes.push(BoxSpec {
            id: name.clone(),
            in_ports: ins.len(),
            out_ports: outs.len(),
        });
    }
    let map_end = |e: &Endpoint, ports: &HashMap<Endpoint, usize>| match blk(e) {
        Some(k) => Endpoint::port(&names[k], ports[e]),
        None => e.clone(),
    };
    let wires = crossing
        .iter()
        .map(|w| Wire {
            from: map_end(&w.from, &out_port),
            to: map_end(&w.to, &in_port),
        })
        .collect();
    Ok(Diagram {
        boxes,
        wires,
        ext_inputs: d.ext_inputs,
        ext_outputs: d.ext_outputs,
        input_names: d.input_names.clone(),
        output_names: d.output_names.clone(),
    })
}

/// A rewritten diagram and, per box, the original boxes composed into it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Converted {
    pub diagram: Diagram,
    pub contents: BTreeMap<String, Vec<String>>,
}

/// Rewrites `d` along a FOP map from its FPO to `map.target`: the preimage of
/// each target element becomes one box (`frame:<id>` for frame elements,
/// `unit:<id>` for internal elements with empty preimage), and trivial wires
/// are added for covering relations of the target that no wire realises.
pub fn convert_diagram(d: &Diagram, map: &FopMap) -> Result<Converted, DiagramError> {
    let g = diagram_to_fpo_with_provenance(d)?;
    let src = &map.source;
    let same_domain = g.fpo.len() == src.len()
        && g.fpo.input_ids() == src.input_ids()
        && g.fpo.output_ids() == src.output_ids()
        && g.fpo.strict_pairs() == src.strict_pairs();
    if !same_domain {
        return Err(DiagramError::DomainMismatch);
    }
    map.validate().map_err(DiagramError::FopValidation)?;
    let t = &map.target;

    let mut contents: Vec<Vec<String>> = vec![Vec::new(); t.len()];
    let mut block_of_box: HashMap<String, usize> = HashMap::new();
    for (gid, boxes) in &g.provenance {
        let x = src.index_of(gid).expect("same domain");
        let tb = map.assignment[x];
        for b in boxes {
            contents[tb].push(b.clone());
            block_of_box.insert(b.clone(), tb);
        }
    }
    let block_name: Vec<String> = (0..t.len())
        .map(|v| {
            if t.is_frame(v) {
                format!("frame:{}", t.id(v))
            } else if contents[v].is_empty() {
                format!("unit:{}", t.id(v))
            } else {
                t.id(v).to_string()
            }
        })
        .collect();
    let block = |e: &Endpoint| -> usize {
        match e {
            Endpoint::Input { input } => t.inputs()[*input],
            Endpoint::Output { output } => t.outputs()[*output],
            Endpoint::Port { box_id, .. } => block_of_box[box_id],
        }
    };

    // (from, to) with None meaning the external port of that frame element
    enum End {
        Ext(Endpoint),
        Block(usize),
    }
    let mut edges: Vec<(End, End)> = Vec::new();
    for k in 0..t.inputs().len() {
        edges.push((End::Ext(Endpoint::input(k)), End::Block(t.inputs()[k])));
    }
    let mut direct = BitRelation::new(t.len());
    for w in &d.wires {
        let (a, b) = (block(&w.from), block(&w.to));
        if a != b {
            direct.insert(a, b);
            edges.push((End::Block(a), End::Block(b)));
        }
    }
    for (a, b) in t.hasse_edges() {
        if !direct.contains(a, b) {
            edges.push((End::Block(a), End::Block(b)));
        }
    }
    for k in 0..t.outputs().len() {
        edges.push((End::Block(t.outputs()[k]), End::Ext(Endpoint::output(k))));
    }

    let mut in_count = vec![0usize; t.len()];
    let mut out_count = vec![0usize; t.len()];
    let mut wires = Vec::with_capacity(edges.len());
    for (a, b) in edges {
        let from = match a {
            End::Ext(e) => e,
            End::Block(v) => {
                out_count[v] += 1;
                Endpoint::port(&block_name[v], out_count[v] - 1)
            }
        };
        let to = match b {
            End::Ext(e) => e,
            End::Block(v) => {
                in_count[v] += 1;
                Endpoint::port(&block_name[v], in_count[v] - 1)
            }
        };
        wires.push(Wire { from, to });
    }
    let mut diagram = Diagram {
        boxes: (0..t.len())
            .map(|v| BoxSpec {
                id: block_name[v].clone(),
                in_ports: in_count[v],
                out_ports: out_count[v],
            })
            .collect(),
        wires,
        ext_inputs: t.inputs().len(),
        ext_outputs: t.outputs().len(),
        input_names: Some(t.input_ids()),
        output_names: Some(t.output_ids()),
    };
    // Empty frame boxes that only pass one wire through are identities.
    for v in t.frame() {
        if contents[v].is_empty() && in_count[v] == 1 && out_count[v] == 1 {
            splice_identity(&mut diagram, &block_name[v]);
        }
    }
    let contents = (0..t.len())
        .filter(|&v| diagram.boxes.iter().any(|b| b.id == block_name[v]))
        .map(|v| (block_name[v].clone(), contents[v].clone()))
        .collect();
    Ok(Converted { diagram, contents })
}

fn splice_identity(d: &mut Diagram, id: &str) {
    let win = d.wires.iter().position(|w| w.to.box_id() == Some(id)).unwrap();
    let wout = d.wires.iter().position(|w| w.from.box_id() == Some(id)).unwrap();
    let to = d.wires[wout].to.clone();
    d.wires[win].to = to;
    d.wires.remove(wout);
    d.boxes.retain(|b| b.id != id);
}

/// Replaces box `box_id` by the diagram `sub`, whose external inputs and
/// outputs take the place of the box's ports. Sub-diagram boxes are renamed
/// `<box_id>/<id>`.
pub fn substitute(d: &Diagram, box_id: &str, sub: &Diagram) -> Result<Diagram, DiagramError> {
    check(d)?;
    check(sub)?;
    let err = |reason: String| DiagramError::Substitution {
        box_id: box_id.to_string(),
        reason,
    };
    let target = d
        .boxes
        .iter()
        .find(|b| b.id == box_id)
        .ok_or_else(|| err("no such box".into()))?;
    if target.in_ports != sub.ext_inputs || target.out_ports != sub.ext_outputs {
        return Err(err(format!(
            "box has {}/{} ports, sub-diagram has {}/{}",
            target.in_ports, target.out_ports, sub.ext_inputs, sub.ext_outputs
        )));
    }
    let prefix = |id: &str| format!("{box_id}/{id}");
    let mut feeds: Vec<Option<Endpoint>> = vec![None; target.in_ports];
    let mut drains: Vec<Option<Endpoint>> = vec![None; target.out_ports];
    let mut wires = Vec::new();
    for w in &d.wires {
        match (&w.from, &w.to) {
            (_, Endpoint::Port { box_id: b, port }) if b == box_id => feeds[*port] = Some(w.from.clone()),
            (Endpoint::Port { box_id: b, port }, _) if b == box_id => drains[*port] = Some(w.to.clone()),
            _ => wires.push(w.clone()),
        }
    }
    for w in &sub.wires {
        let from = match &w.from {
            Endpoint::Input { input } => feeds[*input].clone().expect("validated"),
            Endpoint::Port { box_id: b, port } => Endpoint::port(&prefix(b), *port),
            Endpoint::Output { .. } => unreachable!(),
        };
        let to = match &w.to {
            Endpoint::Output { output } => drains[*output].clone().expect("validated"),
            Endpoint::Port { box_id: b, port } => Endpoint::port(&prefix(b), *port),
            Endpoint::Input { .. } => unreachable!(),
        };
        wires.push(Wire { from, to });
    }
    let mut boxes: Vec<BoxSpec> = d.boxes.iter().filter(|b| b.id != box_id).cloned().collect();
    boxes.extend(sub.boxes.iter().map(|b| BoxSpec {
        id: prefix(&b.id),
        in_ports: b.in_ports,
        out_ports: b.out_ports,
    }));
    Ok(Diagram {
        boxes,
        wires,
        ext_inputs: d.ext_inputs,
        ext_outputs: d.ext_outputs,
        input_names: d.input_names.clone(),
        output_names: d.output_names.clone(),
    })
}

/// State `s` shared by boxes `f` (with input X, output A) and `g` (with
/// input Y, output B).
pub fn p_bell() -> Diagram {
    let mut d = Diagram::new(2, 2).with_names(&["X", "Y"], &["A", "B"]);
    d.add_box("s", 0, 2).add_box("f", 2, 1).add_box("g", 2, 1);
    d.wire(Endpoint::port("s", 0), Endpoint::port("f", 1))
        .wire(Endpoint::port("s", 1), Endpoint::port("g", 1))
        .wire(Endpoint::input(0), Endpoint::port("f", 0))
        .wire(Endpoint::input(1), Endpoint::port("g", 0))
        .wire(Endpoint::port("f", 0), Endpoint::output(0))
        .wire(Endpoint::port("g", 0), Endpoint::output(1));
    d
}

/// Box `a` takes X and feeds A and box `b'`, which also takes Y and feeds B.
pub fn s_bell() -> Diagram {
    let mut d = Diagram::new(2, 2).with_names(&["X", "Y"], &["A", "B"]);
    d.add_box("a", 1, 2).add_box("b'", 2, 1);
    d.wire(Endpoint::input(0), Endpoint::port("a", 0))
        .wire(Endpoint::input(1), Endpoint::port("b'", 1))
        .wire(Endpoint::port("a", 0), Endpoint::output(0))
        .wire(Endpoint::port("a", 1), Endpoint::port("b'", 0))
        .wire(Endpoint::port("b'", 0), Endpoint::output(1));
    d
}

/// `I -> first -> second -> ... -> O`.
pub fn chain(ids: &[&str]) -> Diagram {
    let mut d = Diagram::new(1, 1);
    let mut prev = Endpoint::input(0);
    for id in ids {
        d.add_box(id, 1, 1);
        d.wire(prev, Endpoint::port(id, 0));
        prev = Endpoint::port(id, 0);
    }
    d.wire(prev, Endpoint::output(0));
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_relabelling_isomorphic;
    use crate::fop::find_fop_map;
    use crate::named;

    #[test]
    fn validation_examples() {
        assert!(validate_diagram(&p_bell()).is_empty());

        let mut loopy = Diagram::new(0, 0);
        loopy.add_box("f", 1, 1);
        loopy.wire(Endpoint::port("f", 0), Endpoint::port("f", 0));
        let v = validate_diagram(&loopy);
        assert!(v.iter().any(|x| x.to_string().starts_with("cycle")), "{v:?}");

        let mut dangling = Diagram::new(0, 0);
        dangling.add_box("f", 0, 1);
        let v = validate_diagram(&dangling);
        assert!(v.iter().any(|x| x.to_string().starts_with("unused port")));
    }

    #[test]
    fn g_examples() {
        let g = diagram_to_fpo_with_provenance(&p_bell()).unwrap();
        assert!(is_relabelling_isomorphic(&g.fpo, &named::bell()));
        assert_eq!(g.provenance["A"], vec!["f".to_string()]);
        assert_eq!(g.provenance["s"], vec!["s".to_string()]);

        let g = diagram_to_fpo(&s_bell()).unwrap();
        assert_eq!(g.internal_count(), 0);
        assert!(is_relabelling_isomorphic(&g, &named::oneway_l()));

        let g = diagram_to_fpo(&chain(&["f"])).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.lt(0, 1));
    }

    #[test]
    fn coarse_grain_examples() {
        let d = s_bell();
        let p = vec![vec!["a".to_string()], vec!["b'".to_string()]];
        assert_eq!(coarse_grain(&d, &p).unwrap(), d);

        let c = chain(&["first", "second", "third"]);
        let p = vec![
            vec!["first".to_string(), "second".to_string()],
            vec!["third".to_string()],
        ];
        let g = coarse_grain(&c, &p).unwrap();
        assert_eq!(g.boxes.len(), 2);
        assert_eq!(g.boxes[0].id, "first+second");
        assert!(validate_diagram(&g).is_empty());

        let p = vec![
            vec!["first".to_string(), "third".to_string()],
            vec!["second".to_string()],
        ];
        assert!(matches!(coarse_grain(&c, &p), Err(DiagramError::QuotientCycle(_))));
    }

    #[test]
    fn convert_bell_to_oneway() {
        let d = p_bell();
        let g = diagram_to_fpo(&d).unwrap();
        let map = find_fop_map(&g, &named::oneway_l()).unwrap().unwrap();
        let c = convert_diagram(&d, &map).unwrap();
        assert!(validate_diagram(&c.diagram).is_empty());
        assert_eq!(c.contents["frame:X"], vec!["s".to_string()]);
        assert_eq!(c.diagram.boxes.len(), 3);
        assert!(is_relabelling_isomorphic(
            &diagram_to_fpo(&c.diagram).unwrap(),
            &named::oneway_l()
        ));
    }

    #[test]
    fn convert_identity_and_unit() {
        let d = p_bell();
        let g = diagram_to_fpo(&d).unwrap();
        let c = convert_diagram(&d, &FopMap::identity(&g)).unwrap();
        assert!(is_relabelling_isomorphic(&diagram_to_fpo(&c.diagram).unwrap(), &g));

        let big = g.with_isolated("z");
        let incl = FopMap {
            source: g.clone(),
            target: big.clone(),
            assignment: (0..g.len()).collect(),
        };
        let c = convert_diagram(&d, &incl).unwrap();
        assert!(c.contents.contains_key("unit:z"));
        assert!(c.contents["unit:z"].is_empty());
        assert!(is_relabelling_isomorphic(&diagram_to_fpo(&c.diagram).unwrap(), &big));
    }

    #[test]
    fn substitute_chain() {
        let outer = chain(&["a", "b"]);
        let inner = chain(&["x", "y"]);
        let s = substitute(&outer, "b", &inner).unwrap();
        assert!(validate_diagram(&s).is_empty());
        let ids: Vec<&str> = s.boxes.iter().map(|b| b.id.as_str()).collect();
        assert_eq!(ids, vec!["a", "b/x", "b/y"]);
        assert_eq!(raw_fpo(&s).unwrap().height(), 5);
    }

    #[test]
    fn json_endpoints() {
        let json = serde_json::to_string(&p_bell()).unwrap();
        assert!(json.contains(r#"{"box":"s","port":0}"#));
        assert!(json.contains(r#"{"input":0}"#));
        let back: Diagram = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p_bell());
    }
}
