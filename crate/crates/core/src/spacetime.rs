//! Finite causal sites, localisation of frame elements and C-local embedding.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fop::{find_fop_map_with, FopMap, SearchError};
use crate::fpo::{Fpo, Role};
use crate::relation::BitRelation;
use crate::search::{BitSet, BudgetExceeded, HomSearch, DEFAULT_BUDGET};

/// Which lattice separations count as causal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConeMode {
    /// Timelike and lightlike separations are related.
    #[default]
    Lightlike,
    /// Only timelike separations are related.
    StrictTimelike,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    Explicit,
    MinkowskiLattice {
        d: usize,
        extents: Vec<(i64, i64)>,
        mode: ConeMode,
    },
    DisjointUnion(Vec<Provenance>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    pub id: String,
    /// `(t, x1, .., xd)` for lattice points.
    pub coords: Option<Vec<i64>>,
}

/// A finite poset standing in for a region of spacetime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CausalSite {
    points: Vec<Point>,
    index: HashMap<String, usize>,
    lt: BitRelation,
    provenance: Provenance,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SiteError {
    #[error("duplicate point id `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("site order has a cycle through `{0}`")]
    Cycle(String),
    #[error("bad site spec `{0}`: {1}")]
    Spec(String, String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalisationError {
    #[error("frame element `{0}` has no localisation")]
    MissingFrame(String),
    #[error("`{0}` is not a frame element")]
    NotFrame(String),
    #[error("frame element `{element}` is localised at unknown point `{point}`")]
    UnknownPoint { element: String, point: String },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EmbedError {
    #[error(transparent)]
    Localisation(#[from] LocalisationError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

impl From<BudgetExceeded> for EmbedError {
    fn from(e: BudgetExceeded) -> Self {
        EmbedError::Search(SearchError::Budget(e))
    }
}

/// Squared-interval test on integer coordinates `(t, x1, ..)`.
pub fn minkowski_le(p: &[i64], q: &[i64], mode: ConeMode) -> bool {
    let dt = q[0] - p[0];
    let dx2: i64 = p[1..].iter().zip(&q[1..]).map(|(a, b)| (b - a) * (b - a)).sum();
    match mode {
        ConeMode::Lightlike => dt >= 0 && dt * dt >= dx2,
        ConeMode::StrictTimelike => (dt > 0 && dt * dt > dx2) || (dt == 0 && dx2 == 0),
    }
}

pub fn point_id(coords: &[i64]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

impl CausalSite {
    /// Builds a site from points and strict precedence pairs (closed here).
    pub fn explicit<S: AsRef<str>>(points: &[S], relations: &[(S, S)]) -> Result<CausalSite, SiteError> {
        let points: Vec<Point> = points
            .iter()
            .map(|p| Point {
                id: p.as_ref().to_string(),
                coords: None,
            })
            .collect();
        let index = index_points(&points)?;
        let mut lt = BitRelation::new(points.len());
        for (a, b) in relations {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| SiteError::UnknownPoint(a.as_ref().into()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| SiteError::UnknownPoint(b.as_ref().into()))?;
            lt.insert(ia, ib);
        }
        lt.close();
        if let Some(p) = (0..points.len()).find(|&p| lt.contains(p, p)) {
            return Err(SiteError::Cycle(points[p].id.clone()));
        }
        Ok(CausalSite {
            points,
            index,
            lt,
            provenance: Provenance::Explicit,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn id(&self, p: usize) -> &str {
        &self.points[p].id
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn relation(&self) -> &BitRelation {
        &self.lt
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn lt(&self, p: usize, q: usize) -> bool {
        self.lt.contains(p, q)
    }

    pub fn le(&self, p: usize, q: usize) -> bool {
        p == q || self.lt.contains(p, q)
    }

    pub fn le_ids(&self, p: &str, q: &str) -> Option<bool> {
        Some(self.le(self.index_of(p)?, self.index_of(q)?))
    }

    /// Index of the lattice point with these coordinates.
    pub fn point_at(&self, coords: &[i64]) -> Option<usize> {
        self.index_of(&point_id(coords))
    }

    /// Parses `mink:d=1,t=-4..4,x=-4..4[,strict]`; for `d > 1` the spatial
    /// ranges are `x1=..`, `x2=..`, or a single `x=..` shared by all axes.
    pub fn from_spec(spec: &str) -> Result<CausalSite, SiteError> {
        let bad = |msg: &str| SiteError::Spec(spec.to_string(), msg.to_string());
        let body = spec
            .strip_prefix("mink:")
            .ok_or_else(|| bad("expected `mink:` prefix"))?;
        let mut d = None;
        let mut t = None;
        let mut xs: BTreeMap<String, RangeInclusive<i64>> = BTreeMap::new();
        let mut mode = ConeMode::Lightlike;
        for part in body.split(',').filter(|p| !p.is_empty()) {
            if part == "strict" {
                mode = ConeMode::StrictTimelike;
                continue;
            }
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            if k == "d" {
                d = Some(v.parse::<usize>().map_err(|_| bad("d must be a natural number"))?);
                continue;
            }
            let (lo, hi) = v.split_once("..").ok_or_else(|| bad("expected lo..hi range"))?;
            let lo: i64 = lo.parse().map_err(|_| bad("bad range bound"))?;
            let hi: i64 = hi.parse().map_err(|_| bad("bad range bound"))?;
            if k == "t" {
                t = Some(lo..=hi);
            } else if k.starts_with('x') {
                xs.insert(k.to_string(), lo..=hi);
            } else {
                return Err(bad(&format!("unknown key `{k}`")));
            }
        }
        let d = d.unwrap_or(1);
        let t = t.ok_or_else(|| bad("missing t range"))?;
        let ranges: Vec<RangeInclusive<i64>> = (1..=d)
            .map(|i| {
                xs.get(&format!("x{i}"))
                    .or_else(|| xs.get("x"))
                    .cloned()
                    .ok_or_else(|| bad(&format!("missing range for x{i}")))
            })
            .collect::<Result<_, _>>()?;
        Ok(minkowski_lattice_with(d, t, &ranges, mode))
    }
}

fn index_points(points: &[Point]) -> Result<HashMap<String, usize>, SiteError> {
    let mut index = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        if index.insert(p.id.clone(), i).is_some() {
            return Err(SiteError::DuplicatePoint(p.id.clone()));
        }
    }
    Ok(index)
}

pub fn minkowski_lattice(d: usize, t_range: RangeInclusive<i64>, x_ranges: &[RangeInclusive<i64>]) -> CausalSite {
    minkowski_lattice_with(d, t_range, x_ranges, ConeMode::Lightlike)
}

/// Integer lattice points of `(1+d)`-dimensional Minkowski space; an empty
/// range gives an empty site.
pub fn minkowski_lattice_with(
    d: usize,
    t_range: RangeInclusive<i64>,
    x_ranges: &[RangeInclusive<i64>],
    mode: ConeMode,
) -> CausalSite {
    assert_eq!(x_ranges.len(), d, "one spatial range per dimension");
    let mut coords: Vec<Vec<i64>> = vec![Vec::new()];
    for r in std::iter::once(&t_range).chain(x_ranges) {
        coords = coords
            .into_iter()
            .flat_map(|c| {
                r.clone().map(move |v| {
                    let mut c = c.clone();
                    c.push(v);
                    c
                })
            })
            .collect();
    }
    let n = coords.len();
    let mut lt = BitRelation::new(n);
    for p in 0..n {
        for q in 0..n {
            if p != q && minkowski_le(&coords[p], &coords[q], mode) {
                lt.insert(p, q);
            }
        }
    }
    let points: Vec<Point> = coords
        .into_iter()
        .map(|c| Point {
            id: point_id(&c),
            coords: Some(c),
        })
        .collect();
    let index = index_points(&points).expect("lattice ids are distinct");
    let extents = std::iter::once(&t_range)
        .chain(x_ranges)
        .map(|r| (*r.start(), *r.end()))
        .collect();
    CausalSite {
        points,
        index,
        lt,
        provenance: Provenance::MinkowskiLattice { d, extents, mode },
    }
}

/// Both sites side by side with no relations between them; clashing ids of
/// `b` get primes appended.
pub fn disjoint_union(a: &CausalSite, b: &CausalSite) -> CausalSite {
    let mut points = a.points.clone();
    let mut taken: std::collections::HashSet<String> = a.points.iter().map(|p| p.id.clone()).collect();
    for p in &b.points {
        let mut id = p.id.clone();
        while taken.contains(&id) {
            id.push('\'');
        }
        taken.insert(id.clone());
        points.push(Point {
            id,
            coords: p.coords.clone(),
        });
    }
    let off = a.len();
    let mut lt = BitRelation::new(points.len());
    for (p, q) in a.lt.pairs() {
        lt.insert(p, q);
    }
    for (p, q) in b.lt.pairs() {
        lt.insert(p + off, q + off);
    }
    let index = index_points(&points).expect("renamed apart");
    CausalSite {
        points,
        index,
        lt,
        provenance: Provenance::DisjointUnion(vec![a.provenance.clone(), b.provenance.clone()]),
    }
}

/// Frame element id to point id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Localisation(pub BTreeMap<String, String>);

impl Localisation {
    pub fn new<S: AsRef<str>>(pairs: &[(S, S)]) -> Self {
        Localisation(
            pairs
                .iter()
                .map(|(a, b)| (a.as_ref().to_string(), b.as_ref().to_string()))
                .collect(),
        )
    }

    /// Localisation by lattice coordinates.
    pub fn from_coords<S: AsRef<str>>(pairs: &[(S, Vec<i64>)]) -> Self {
        Localisation(
            pairs
                .iter()
                .map(|(a, c)| (a.as_ref().to_string(), point_id(c)))
                .collect(),
        )
    }

    /// Parses `{"X":[0,-2]}` (coordinates) or `{"X":"p"}` (point ids).
    pub fn from_json(value: &serde_json::Value) -> Result<Self, String> {
        let obj = value.as_object().ok_or("localisation must be a JSON object")?;
        let mut out = BTreeMap::new();
        for (k, v) in obj {
            let point = match v {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Array(a) => {
                    let c: Option<Vec<i64>> = a.iter().map(|x| x.as_i64()).collect();
                    point_id(&c.ok_or_else(|| format!("coordinates of `{k}` must be integers"))?)
                }
                _ => return Err(format!("bad localisation for `{k}`")),
            };
            out.insert(k.clone(), point);
        }
        Ok(Localisation(out))
    }

    /// Site point of each frame element of `s`, by element index.
    pub fn resolve(&self, s: &Fpo, site: &CausalSite) -> Result<BTreeMap<usize, usize>, LocalisationError> {
        for k in self.0.keys() {
            match s.index_of(k) {
                Some(i) if s.is_frame(i) => {}
                _ => return Err(LocalisationError::NotFrame(k.clone())),
            }
        }
        s.frame()
            .into_iter()
            .map(|f| {
                let id = s.id(f);
                let point = self
                    .0
                    .get(id)
                    .ok_or_else(|| LocalisationError::MissingFrame(id.to_string()))?;
                let p = site.index_of(point).ok_or_else(|| LocalisationError::UnknownPoint {
                    element: id.to_string(),
                    point: point.clone(),
                })?;
                Ok((f, p))
            })
            .collect()
    }
}

/// Element id to point id, total on the embedded FPO.
pub type Embedding = BTreeMap<String, String>;

/// Finite FOP target standing in for a site: the frame of `fpo` localised,
/// plus a window of site points as internal elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiteWindow {
    pub fpo: Fpo,
    /// Site point behind each window element; frame elements map to their
    /// localisation.
    pub points: Vec<usize>,
}

/// Whether some internal element of `s` is related to no frame element.
fn has_unanchored(s: &Fpo) -> bool {
    s.internal().any(|x| s.frame().into_iter().all(|f| !s.related(x, f)))
}

pub fn site_window_fpo(site: &CausalSite, loc: &Localisation, frame_spec: &Fpo) -> Result<Fpo, LocalisationError> {
    Ok(site_window(site, loc, frame_spec)?.fpo)
}

/// Window elements are the frame of `frame_spec` followed by the site points
/// above a localised input or below a localised output (every point if
/// `frame_spec` has an unanchored internal element). Frame elements relate
/// to points through their localisation; inputs stay minimal and outputs
/// maximal.
pub fn site_window(site: &CausalSite, loc: &Localisation, frame_spec: &Fpo) -> Result<SiteWindow, LocalisationError> {
    let at = loc.resolve(frame_spec, site)?;
    let ins: Vec<usize> = frame_spec.inputs().iter().map(|i| at[i]).collect();
    let outs: Vec<usize> = frame_spec.outputs().iter().map(|o| at[o]).collect();
    let full = has_unanchored(frame_spec);
    let window: Vec<usize> = (0..site.len())
        .filter(|&p| full || ins.iter().any(|&c| site.le(c, p)) || outs.iter().any(|&c| site.le(p, c)))
        .collect();
    let (m, n) = (ins.len(), outs.len());
    let frame_ids: Vec<String> = frame_spec
        .inputs()
        .iter()
        .chain(frame_spec.outputs())
        .map(|&f| frame_spec.id(f).to_string())
        .collect();
    let mut ids = frame_ids.clone();
    for &p in &window {
        let mut id = site.id(p).to_string();
        while frame_ids.contains(&id) {
            id.insert(0, '@');
        }
        ids.push(id);
    }
    let mut points: Vec<usize> = ins.iter().chain(&outs).copied().collect();
    points.extend(&window);
    let total = ids.len();
    let mut lt = BitRelation::new(total);
    for (a, &p) in window.iter().enumerate() {
        for (b, &q) in window.iter().enumerate() {
            if site.lt(p, q) {
                lt.insert(m + n + a, m + n + b);
            }
        }
        for k in 0..m {
            if site.le(ins[k], p) {
                lt.insert(k, m + n + a);
            }
        }
        for k in 0..n {
            if site.le(p, outs[k]) {
                lt.insert(m + n + a, m + k);
            }
        }
    }
    for i in 0..m {
        for o in 0..n {
            if site.le(ins[i], outs[o]) {
                lt.insert(i, m + o);
            }
        }
    }
    let fpo = Fpo::from_closed(ids, lt, (0..m).collect(), (m..m + n).collect()).expect("window is a valid FPO");
    Ok(SiteWindow { fpo, points })
}

pub fn c_local_embed(s: &Fpo, site: &CausalSite, loc: &Localisation) -> Result<Option<Embedding>, EmbedError> {
    c_local_embed_with(s, site, loc, DEFAULT_BUDGET)
}

/// First order-preserving map of `s` into the site that sends each frame
/// element to its localisation.
pub fn c_local_embed_with(
    s: &Fpo,
    site: &CausalSite,
    loc: &Localisation,
    budget: u64,
) -> Result<Option<Embedding>, EmbedError> {
    let at = loc.resolve(s, site)?;
    let domains = (0..s.len())
        .map(|x| match at.get(&x) {
            Some(&p) => BitSet::from_iter(site.len(), [p]),
            None => BitSet::full(site.len()),
        })
        .collect();
    let found = HomSearch::new(s.relation(), site.relation(), domains)
        .with_budget(budget)
        .first()?;
    Ok(found.map(|a| {
        a.iter()
            .enumerate()
            .map(|(x, &p)| (s.id(x).to_string(), site.id(p).to_string()))
            .collect()
    }))
}

/// The same question answered through a FOP search into the window.
pub fn c_local_embed_via_window(
    s: &Fpo,
    site: &CausalSite,
    loc: &Localisation,
    budget: u64,
) -> Result<Option<Embedding>, EmbedError> {
    let w = site_window(site, loc, s)?;
    let map: Option<FopMap> = find_fop_map_with(s, &w.fpo, budget)?;
    Ok(map.map(|m| {
        m.assignment
            .iter()
            .enumerate()
            .map(|(x, &v)| (s.id(x).to_string(), site.id(w.points[v]).to_string()))
            .collect()
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingViolation {
    NotTotal(String),
    UnknownPoint(String),
    FrameMoved {
        element: String,
        expected: String,
        got: String,
    },
    OrderNotPreserved {
        x: String,
        y: String,
    },
}

impl fmt::Display for EmbeddingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingViolation::NotTotal(x) => write!(f, "`{x}` has no image"),
            EmbeddingViolation::UnknownPoint(p) => write!(f, "unknown point `{p}`"),
            EmbeddingViolation::FrameMoved { element, expected, got } => {
                write!(f, "`{element}` sent to {got}, localised at {expected}")
            }
            EmbeddingViolation::OrderNotPreserved { x, y } => write!(f, "{x} < {y} not preserved"),
        }
    }
}

/// Checks that `e` is order-preserving into the site and agrees with `loc`.
pub fn check_embedding(
    s: &Fpo,
    site: &CausalSite,
    loc: &Localisation,
    e: &Embedding,
) -> Result<(), EmbeddingViolation> {
    let mut img = Vec::with_capacity(s.len());
    for x in 0..s.len() {
        let id = s.id(x);
        let p = e.get(id).ok_or_else(|| EmbeddingViolation::NotTotal(id.to_string()))?;
        img.push(
            site.index_of(p)
                .ok_or_else(|| EmbeddingViolation::UnknownPoint(p.clone()))?,
        );
        if s.role(x) != Role::Internal {
            if let Some(expected) = loc.0.get(id) {
                if expected != p {
                    return Err(EmbeddingViolation::FrameMoved {
                        element: id.to_string(),
                        expected: expected.clone(),
                        got: p.clone(),
                    });
                }
            }
        }
    }
    for (x, y) in s.relation().pairs() {
        if !site.le(img[x], img[y]) {
            return Err(EmbeddingViolation::OrderNotPreserved {
                x: s.id(x).to_string(),
                y: s.id(y).to_string(),
            });
        }
    }
    Ok(())
}

impl FromStr for CausalSite {
    type Err = SiteError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CausalSite::from_spec(s)
    }
}

/// JSON form of an explicit site: `{"points": [..], "relations": [[p, q], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiteData {
    pub points: Vec<String>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

impl SiteData {
    pub fn build(&self) -> Result<CausalSite, SiteError> {
        CausalSite::explicit(&self.points, &self.relations)
    }
}
