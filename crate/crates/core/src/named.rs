//! Named framed partial orders and the zigzag families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fpo::Fpo;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NamedError {
    #[error("unknown structure name `{0}`")]
    UnknownName(String),
    #[error("`{name}` expects {expected} parameter(s), got {got}")]
    Arity { name: String, expected: usize, got: usize },
    #[error("zigzag length must be at least 1")]
    ZeroLength,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZigzagFamily {
    ZZ22,
    ZZ13,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZigzagSpec {
    pub family: ZigzagFamily,
    pub n: usize,
}

impl ZigzagSpec {
    pub fn build(&self) -> Result<Fpo, NamedError> {
        if self.n == 0 {
            return Err(NamedError::ZeroLength);
        }
        Ok(match self.family {
            ZigzagFamily::ZZ22 => zz22(self.n),
            ZigzagFamily::ZZ13 => zz13(self.n),
        })
    }
}

impl fmt::Display for ZigzagFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZigzagFamily::ZZ22 => "ZZ22",
            ZigzagFamily::ZZ13 => "ZZ13",
        })
    }
}

impl FromStr for ZigzagFamily {
    type Err = NamedError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "ZZ22" => Ok(ZigzagFamily::ZZ22),
            "ZZ13" => Ok(ZigzagFamily::ZZ13),
            _ => Err(NamedError::UnknownName(s.to_string())),
        }
    }
}

fn build(elements: Vec<String>, rel: Vec<(String, String)>, inputs: Vec<String>, outputs: Vec<String>) -> Fpo {
    Fpo::new(&elements, &rel, &inputs, &outputs).expect("named structure is a valid FPO")
}

fn frame_ids(m: usize, n: usize) -> (Vec<String>, Vec<String>) {
    (
        (1..=m).map(|i| format!("I{i}")).collect(),
        (1..=n).map(|j| format!("O{j}")).collect(),
    )
}

/// Frame only, every input below every output.
pub fn full_frame(m: usize, n: usize) -> Fpo {
    let (ins, outs) = frame_ids(m, n);
    let rel = ins
        .iter()
        .flat_map(|i| outs.iter().map(move |o| (i.clone(), o.clone())))
        .collect();
    let elements = ins.iter().chain(&outs).cloned().collect();
    build(elements, rel, ins, outs)
}

/// All inputs below a single internal `x`, which is below all outputs.
pub fn bottleneck(m: usize, n: usize) -> Fpo {
    let (ins, outs) = frame_ids(m, n);
    let x = "x".to_string();
    let mut rel: Vec<(String, String)> = ins.iter().map(|i| (i.clone(), x.clone())).collect();
    rel.extend(outs.iter().map(|o| (x.clone(), o.clone())));
    let mut elements: Vec<String> = ins.iter().chain(&outs).cloned().collect();
    elements.push(x);
    build(elements, rel, ins, outs)
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
    v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

/// Common cause: `X<A, Y<B, s<A, s<B`.
pub fn bell() -> Fpo {
    build(
        strs(&["X", "Y", "A", "B", "s"]),
        pairs(&[("X", "A"), ("Y", "B"), ("s", "A"), ("s", "B")]),
        strs(&["X", "Y"]),
        strs(&["A", "B"]),
    )
}

/// One-way signalling from the first party: `X<A, X<B, Y<B`.
pub fn oneway_l() -> Fpo {
    build(
        strs(&["X", "Y", "A", "B"]),
        pairs(&[("X", "A"), ("X", "B"), ("Y", "B")]),
        strs(&["X", "Y"]),
        strs(&["A", "B"]),
    )
}

/// Mirror of [`oneway_l`]: `X<A, Y<A, Y<B`.
pub fn oneway_r() -> Fpo {
    build(
        strs(&["X", "Y", "A", "B"]),
        pairs(&[("X", "A"), ("Y", "A"), ("Y", "B")]),
        strs(&["X", "Y"]),
        strs(&["A", "B"]),
    )
}

/// Class [2,2] zigzag: tops `u0..un`, bottoms `v1..vn`, `I1<u0`, `I2<un`,
/// `vk<u(k-1)`, `vk<uk`, every `uk` below both outputs.
pub fn zz22(n: usize) -> Fpo {
    let mut elements = strs(&["I1", "I2", "O1", "O2"]);
    let mut rel = Vec::new();
    for k in 0..=n {
        let u = format!("u{k}");
        rel.push((u.clone(), "O1".to_string()));
        rel.push((u.clone(), "O2".to_string()));
        elements.push(u);
    }
    for k in 1..=n {
        let v = format!("v{k}");
        rel.push((v.clone(), format!("u{}", k - 1)));
        rel.push((v.clone(), format!("u{k}")));
        elements.push(v);
    }
    rel.push(("I1".into(), "u0".into()));
    rel.push(("I2".into(), format!("u{n}")));
    build(elements, rel, strs(&["I1", "I2"]), strs(&["O1", "O2"]))
}

/// Class [1,3] zigzag: the fence `I=x0, x1, .., x(2n), x(2n+1)=O3` with each
/// even-index element below its odd-index neighbours, and every odd-index
/// element below `O1` and `O2`.
pub fn zz13(n: usize) -> Fpo {
    let name = |k: usize| -> String {
        if k == 0 {
            "I".to_string()
        } else if k == 2 * n + 1 {
            "O3".to_string()
        } else {
            format!("x{k}")
        }
    };
    let mut elements = strs(&["I", "O1", "O2", "O3"]);
    elements.extend((1..=2 * n).map(name));
    let mut rel = Vec::new();
    for k in (0..=2 * n).step_by(2) {
        if k > 0 {
            rel.push((name(k), name(k - 1)));
        }
        rel.push((name(k), name(k + 1)));
    }
    for k in (1..2 * n).step_by(2) {
        rel.push((name(k), "O1".to_string()));
        rel.push((name(k), "O2".to_string()));
    }
    build(elements, rel, strs(&["I"]), strs(&["O1", "O2", "O3"]))
}

/// Looks up a structure by name, e.g. `("ZZ22", &[3])` or `("FULL_FRAME", &[2, 2])`.
pub fn catalog_named(name: &str, params: &[usize]) -> Result<Fpo, NamedError> {
    let upper = name.to_ascii_uppercase().replace('-', "_");
    let arity = |expected: usize| -> Result<(), NamedError> {
        if params.len() == expected {
            Ok(())
        } else {
            Err(NamedError::Arity {
                name: upper.clone(),
                expected,
                got: params.len(),
            })
        }
    };
    match upper.as_str() {
        "FULL_FRAME" | "TWOWAY" => {
            arity(2)?;
            Ok(full_frame(params[0], params[1]))
        }
        "BOTTLENECK" => {
            arity(2)?;
            Ok(bottleneck(params[0], params[1]))
        }
        "BELL" => {
            arity(0)?;
            Ok(bell())
        }
        "ONEWAY_L" => {
            arity(0)?;
            Ok(oneway_l())
        }
        "ONEWAY_R" => {
            arity(0)?;
            Ok(oneway_r())
        }
        "ZZ22" | "ZZ13" => {
            arity(1)?;
            ZigzagSpec {
                family: upper.parse()?,
                n: params[0],
            }
            .build()
        }
        _ => Err(NamedError::UnknownName(name.to_string())),
    }
}
