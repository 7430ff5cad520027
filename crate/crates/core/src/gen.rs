//! Seeded random framed partial orders and diagrams.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{Diagram, Endpoint};
use crate::fpo::Fpo;
use crate::relation::BitRelation;

/// Random FPO with `m` inputs, `n` outputs and `k` internal elements; each
/// pair compatible with a hidden linear order is related with probability `p`
/// before closing. Ids are `I1.., O1.., e1..`.
pub fn random_fpo<R: Rng + ?Sized>(rng: &mut R, m: usize, n: usize, k: usize, p: f64) -> Fpo {
    let total = m + n + k;
    let mut ids: Vec<String> = (1..=m).map(|i| format!("I{i}")).collect();
    ids.extend((1..=n).map(|j| format!("O{j}")));
    ids.extend((1..=k).map(|e| format!("e{e}")));
    let mut internal: Vec<usize> = (m + n..total).collect();
    internal.shuffle(rng);
    let mut lt = BitRelation::new(total);
    for a in 0..internal.len() {
        for b in a + 1..internal.len() {
            if rng.gen_bool(p) {
                lt.insert(internal[a], internal[b]);
            }
        }
    }
    for i in 0..m {
        for x in m..total {
            if rng.gen_bool(p) {
                lt.insert(i, x);
            }
        }
    }
    for o in m..m + n {
        for &x in &internal {
            if rng.gen_bool(p) {
                lt.insert(x, o);
            }
        }
    }
    lt.close();
    Fpo::from_closed(ids, lt, (0..m).collect(), (m..m + n).collect()).expect("generated order is a valid FPO")
}

/// Random FPO whose internal elements each lie below some output.
pub fn random_causal_fpo<R: Rng + ?Sized>(rng: &mut R, m: usize, n: usize, k: usize, p: f64) -> Fpo {
    let s = random_fpo(rng, m, n, k, p);
    if n == 0 {
        return s.without(&s.internal().collect::<Vec<_>>());
    }
    let mut pairs: Vec<(String, String)> = s
        .relation()
        .pairs()
        .map(|(a, b)| (s.id(a).to_string(), s.id(b).to_string()))
        .collect();
    for x in s.internal() {
        if s.is_maximal(x) {
            let o = s.outputs()[rng.gen_range(0..n)];
            pairs.push((s.id(x).to_string(), s.id(o).to_string()));
        }
    }
    Fpo::new(s.ids(), &pairs, &s.input_ids(), &s.output_ids()).expect("adding upward edges keeps a valid FPO")
}

/// Random valid diagram: boxes in a random topological order, each wire
/// going from an earlier producer to a later consumer.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, m: usize, n: usize, boxes: usize) -> Diagram {
    let mut d = Diagram::new(m, n);
    let names: Vec<String> = (0..boxes).map(|b| format!("b{b}")).collect();
    let mut in_ports = vec![0usize; boxes];
    let mut out_ports = vec![0usize; boxes];
    // producer index: None for external inputs, Some(box) otherwise
    let mut wires: Vec<(Option<usize>, Option<usize>)> = Vec::new();
    for _ in 0..m {
        let to = if boxes > 0 && rng.gen_bool(0.8) {
            Some(rng.gen_range(0..boxes))
        } else {
            None
        };
        wires.push((None, to));
    }
    for b in 0..boxes {
        let feeds = rng.gen_range(0..3);
        for _ in 0..feeds {
            if b + 1 < boxes || n > 0 {
                let later = b + 1 + rng.gen_range(0..boxes - b);
                let to = if later < boxes { Some(later) } else { None };
                wires.push((Some(b), to));
            }
        }
    }
    let mut sinks = 0;
    let mut sources = 0;
    let mut endpoints = Vec::new();
    for (from, to) in wires {
        let src = match from {
            None => {
                sources += 1;
                Endpoint::input(sources - 1)
            }
            Some(b) => {
                out_ports[b] += 1;
                Endpoint::port(&names[b], out_ports[b] - 1)
            }
        };
        let dst = match to {
            Some(b) => {
                in_ports[b] += 1;
                Endpoint::port(&names[b], in_ports[b] - 1)
            }
            None if sinks < n => {
                sinks += 1;
                Endpoint::output(sinks - 1)
            }
            None => {
                // sink box absorbing a surplus wire
                let id = format!("d{}", endpoints.len());
                d.add_box(&id, 1, 0);
                Endpoint::port(&id, 0)
            }
        };
        endpoints.push((src, dst));
    }
    for b in 0..boxes {
        d.boxes.push(crate::diagram::BoxSpec {
            id: names[b].clone(),
            in_ports: in_ports[b],
            out_ports: out_ports[b],
        });
    }
    // outputs nobody fed come from fresh state boxes
    for j in sinks..n {
        let id = format!("s{j}");
        d.add_box(&id, 0, 1);
        endpoints.push((Endpoint::port(&id, 0), Endpoint::output(j)));
    }
    for (from, to) in endpoints {
        d.wire(from, to);
    }
    d
}
