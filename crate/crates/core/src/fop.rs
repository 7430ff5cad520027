//! Frame- and order-preserving maps and the embeddability preorder.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::canonicalize;
use crate::fpo::{Fpo, FpoClass, FpoData, Role};
use crate::search::{BitSet, BudgetExceeded, HomSearch, DEFAULT_BUDGET};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("class mismatch: {lhs} vs {rhs}")]
    ClassMismatch { lhs: FpoClass, rhs: FpoClass },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("no FOP map back from the target: the FPOs are not equivalent")]
    NotEquivalent,
    #[error("projection check failed: {0}")]
    ProjectionFailed(&'static str),
}

/// The first reason a map fails to be frame- and order-preserving.
#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MapViolation {
    #[error("class mismatch: {lhs} vs {rhs}")]
    ClassMismatch { lhs: FpoClass, rhs: FpoClass },
    #[error("source element `{0}` has no image")]
    NotTotal(String),
    #[error("unknown source element `{0}`")]
    UnknownSource(String),
    #[error("unknown target element `{0}`")]
    UnknownTarget(String),
    #[error("frame not preserved: `{element}` maps to `{image}`, expected `{expected}`")]
    FrameNotPreserved {
        element: String,
        image: String,
        expected: String,
    },
    #[error("order not preserved: `{x}` < `{y}` but `{fx}` is not <= `{fy}`")]
    OrderNotPreserved {
        x: String,
        y: String,
        fx: String,
        fy: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MapClass {
    Fop,
    Foe,
    Relabelling,
}

impl fmt::Display for MapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapClass::Fop => "FOP",
            MapClass::Foe => "FOE",
            MapClass::Relabelling => "RELABELLING",
        })
    }
}

/// Why a valid FOP map is not in a stronger class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassWitness {
    /// `x`, `y` with `f(x) <= f(y)` but not `x <= y`.
    NotReflected { x: String, y: String },
    /// A target element outside the image.
    NotSurjective { missed: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: MapClass,
    pub witness: Option<ClassWitness>,
}

/// A total map between the elements of two FPOs, by index.
#[derive(Clone, PartialEq, Eq)]
pub struct FopMap {
    pub source: Fpo,
    pub target: Fpo,
    pub assignment: Vec<usize>,
}

impl fmt::Debug for FopMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.named_assignment()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct FopMapData {
    source: FpoData,
    target: FpoData,
    assignment: BTreeMap<String, String>,
}

impl Serialize for FopMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FopMapData {
            source: self.source.to_data(),
            target: self.target.to_data(),
            assignment: self.named_assignment(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FopMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let data = FopMapData::deserialize(d)?;
        let source = Fpo::from_data(&data.source).map_err(D::Error::custom)?;
        let target = Fpo::from_data(&data.target).map_err(D::Error::custom)?;
        FopMap::from_ids(source, target, &data.assignment).map_err(D::Error::custom)
    }
}

impl FopMap {
    /// Builds a map from an id assignment; only totality and id existence are
    /// checked here. Use [`classify_map`] for the FOP conditions.
    pub fn from_ids(source: Fpo, target: Fpo, assignment: &BTreeMap<String, String>) -> Result<FopMap, MapViolation> {
        for k in assignment.keys() {
            if source.index_of(k).is_none() {
                return Err(MapViolation::UnknownSource(k.clone()));
            }
        }
        let mut out = Vec::with_capacity(source.len());
        for id in source.ids() {
            let t = assignment.get(id).ok_or_else(|| MapViolation::NotTotal(id.clone()))?;
            out.push(
                target
                    .index_of(t)
                    .ok_or_else(|| MapViolation::UnknownTarget(t.clone()))?,
            );
        }
        Ok(FopMap {
            source,
            target,
            assignment: out,
        })
    }

    pub fn identity(s: &Fpo) -> FopMap {
        FopMap {
            source: s.clone(),
            target: s.clone(),
            assignment: (0..s.len()).collect(),
        }
    }

    pub fn named_assignment(&self) -> BTreeMap<String, String> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(x, &t)| (self.source.id(x).to_string(), self.target.id(t).to_string()))
            .collect()
    }

    pub fn image_of(&self, id: &str) -> Option<&str> {
        self.source.index_of(id).map(|x| self.target.id(self.assignment[x]))
    }

    pub fn image(&self) -> BitSet {
        BitSet::from_iter(self.target.len(), self.assignment.iter().copied())
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.len()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FopMap) -> FopMap {
        FopMap {
            source: self.source.clone(),
            target: other.target.clone(),
            assignment: compose(&self.assignment, &other.assignment),
        }
    }

    /// Checks the FOP conditions only.
    pub fn validate(&self) -> Result<(), MapViolation> {
        let (s, t, f) = (&self.source, &self.target, &self.assignment);
        if s.class() != t.class() {
            return Err(MapViolation::ClassMismatch {
                lhs: s.class(),
                rhs: t.class(),
            });
        }
        if f.len() != s.len() {
            return Err(MapViolation::NotTotal(
                s.ids().get(f.len()).cloned().unwrap_or_default(),
            ));
        }
        let frames = s
            .inputs()
            .iter()
            .zip(t.inputs())
            .chain(s.outputs().iter().zip(t.outputs()));
        for (&x, &expected) in frames {
            if f[x] != expected {
                return Err(MapViolation::FrameNotPreserved {
                    element: s.id(x).to_string(),
                    image: t.id(f[x]).to_string(),
                    expected: t.id(expected).to_string(),
                });
            }
        }
        for (x, y) in s.relation().pairs() {
            if !t.le(f[x], f[y]) {
                return Err(MapViolation::OrderNotPreserved {
                    x: s.id(x).to_string(),
                    y: s.id(y).to_string(),
                    fx: t.id(f[x]).to_string(),
                    fy: t.id(f[y]).to_string(),
                });
            }
        }
        Ok(())
    }
}

/// `g ∘ f` on index vectors.
pub(crate) fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

/// Validates the FOP conditions, then tests order reflection and surjectivity.
pub fn classify_map(m: &FopMap) -> Result<Classification, MapViolation> {
    m.validate()?;
    let (s, t, f) = (&m.source, &m.target, &m.assignment);
    for x in 0..s.len() {
        for y in 0..s.len() {
            if x != y && t.le(f[x], f[y]) && !s.lt(x, y) {
                return Ok(Classification {
                    class: MapClass::Fop,
                    witness: Some(ClassWitness::NotReflected {
                        x: s.id(x).to_string(),
                        y: s.id(y).to_string(),
                    }),
                });
            }
        }
    }
    let image = m.image();
    if let Some(missed) = (0..t.len()).find(|&v| !image.contains(v)) {
        return Ok(Classification {
            class: MapClass::Foe,
            witness: Some(ClassWitness::NotSurjective {
                missed: t.id(missed).to_string(),
            }),
        });
    }
    Ok(Classification {
        class: MapClass::Relabelling,
        witness: None,
    })
}

fn check_class(s: &Fpo, t: &Fpo) -> Result<(), SearchError> {
    if s.class() != t.class() {
        return Err(SearchError::ClassMismatch {
            lhs: s.class(),
            rhs: t.class(),
        });
    }
    Ok(())
}

/// Candidate images per source element: frame elements pinned, internal
/// elements restricted by their relations to the frame.
pub fn fop_domains(s: &Fpo, t: &Fpo) -> Vec<BitSet> {
    let m = t.len();
    let image_of_frame = |f: usize| match s.role(f) {
        Role::Input(k) => t.inputs()[k],
        Role::Output(k) => t.outputs()[k],
        Role::Internal => unreachable!(),
    };
    (0..s.len())
        .map(|x| {
            if s.is_frame(x) {
                return BitSet::from_iter(m, [image_of_frame(x)]);
            }
            let mut d = BitSet::full(m);
            for f in s.frame() {
                let cf = image_of_frame(f);
                if s.lt(f, x) {
                    d.intersect_with(&BitSet::from_iter(m, (0..m).filter(|&v| t.le(cf, v))));
                }
                if s.lt(x, f) {
                    d.intersect_with(&BitSet::from_iter(m, (0..m).filter(|&v| t.le(v, cf))));
                }
            }
            d
        })
        .collect()
}

fn fop_search<'a>(s: &'a Fpo, t: &Fpo, budget: u64) -> HomSearch<'a> {
    HomSearch::new(s.relation(), t.relation(), fop_domains(s, t)).with_budget(budget)
}

pub fn find_fop_map(s: &Fpo, t: &Fpo) -> Result<Option<FopMap>, SearchError> {
    find_fop_map_with(s, t, DEFAULT_BUDGET)
}

/// First FOP map from `s` to `t` in search order, or `None` if none exists.
pub fn find_fop_map_with(s: &Fpo, t: &Fpo, budget: u64) -> Result<Option<FopMap>, SearchError> {
    check_class(s, t)?;
    Ok(fop_search(s, t, budget).first()?.map(|assignment| FopMap {
        source: s.clone(),
        target: t.clone(),
        assignment,
    }))
}

/// `s ≻ t`: `s` embeds into `t`.
pub fn embeds(s: &Fpo, t: &Fpo) -> Result<bool, SearchError> {
    Ok(find_fop_map(s, t)?.is_some())
}

/// Visits every FOP map from `s` to `t` until `visit` returns true.
pub fn for_each_fop_map(
    s: &Fpo,
    t: &Fpo,
    budget: u64,
    visit: impl FnMut(&[usize]) -> bool,
) -> Result<bool, SearchError> {
    check_class(s, t)?;
    Ok(fop_search(s, t, budget).for_each(visit)?)
}

pub fn is_equivalent(s: &Fpo, t: &Fpo) -> Result<bool, SearchError> {
    Ok(embeds(s, t)? && embeds(t, s)?)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimalityStrategy {
    /// Any non-surjective self-map.
    #[default]
    General,
    /// Only idempotent self-maps.
    Idempotent,
}

/// Internal `x` with every input `<= x <=` every output, if any.
pub fn collapse_point(s: &Fpo) -> Option<usize> {
    s.internal()
        .find(|&x| s.inputs().iter().all(|&i| s.le(i, x)) && s.outputs().iter().all(|&o| s.le(x, o)))
}

/// A non-surjective self-map from the collapse construction: all internal
/// elements sent to the collapse point.
pub fn collapse_map(s: &Fpo) -> Option<Vec<usize>> {
    if s.internal_count() < 2 {
        return None;
    }
    let x = collapse_point(s)?;
    Some((0..s.len()).map(|a| if s.is_internal(a) { x } else { a }).collect())
}

/// Internal `x` and `y > x` (or `y < x`) such that every `z > x` (resp.
/// `z < x`) is comparable to `y`. Returns `(x, y)`.
pub fn two_parents_violation(s: &Fpo) -> Option<(usize, usize)> {
    for x in s.internal() {
        let up: Vec<usize> = s.above(x).collect();
        for &y in &up {
            if up.iter().all(|&z| s.le(y, z) || s.le(z, y)) {
                return Some((x, y));
            }
        }
        let down: Vec<usize> = s.below(x).collect();
        for &y in &down {
            if down.iter().all(|&z| s.le(y, z) || s.le(z, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Non-surjective self-map collapsing the interval between `x` and `y` onto
/// `y`.
pub fn two_parents_map(s: &Fpo) -> Option<Vec<usize>> {
    let (x, y) = two_parents_violation(s)?;
    let (lo, hi) = if s.lt(x, y) { (x, y) } else { (y, x) };
    Some(
        (0..s.len())
            .map(|a| if s.le(lo, a) && s.le(a, hi) { y } else { a })
            .collect(),
    )
}

fn is_idempotent(f: &[usize]) -> bool {
    f.iter().all(|&v| f[v] == v)
}

/// A FOP map from `s` to `t` (same size) missing some element of `t`.
pub fn non_surjective_map(
    s: &Fpo,
    t: &Fpo,
    strategy: MinimalityStrategy,
    budget: u64,
) -> Result<Option<Vec<usize>>, SearchError> {
    check_class(s, t)?;
    let self_map = std::ptr::eq(s, t);
    for e in t.internal() {
        let mut search = fop_search(s, t, budget);
        search.forbid_value(e);
        let mut found = None;
        search.for_each(|f| {
            if strategy == MinimalityStrategy::General || (self_map && is_idempotent(f)) {
                found = Some(f.to_vec());
                true
            } else {
                false
            }
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// A non-surjective FOP self-map of `s`, trying the collapse and two-parents
/// constructions before searching.
pub fn non_surjective_self_map(
    s: &Fpo,
    strategy: MinimalityStrategy,
    budget: u64,
) -> Result<Option<Vec<usize>>, SearchError> {
    if let Some(f) = collapse_map(s) {
        return Ok(Some(f));
    }
    if let Some(f) = two_parents_map(s) {
        return Ok(Some(f));
    }
    non_surjective_map(s, s, strategy, budget)
}

pub fn is_minimal_representative(s: &Fpo) -> Result<bool, SearchError> {
    is_minimal_representative_with(s, MinimalityStrategy::General, DEFAULT_BUDGET)
}

pub fn is_minimal_representative_with(s: &Fpo, strategy: MinimalityStrategy, budget: u64) -> Result<bool, SearchError> {
    Ok(non_surjective_self_map(s, strategy, budget)?.is_none())
}

pub fn minimal_representative(s: &Fpo) -> Result<Fpo, SearchError> {
    minimal_representative_with(s, DEFAULT_BUDGET)
}

/// Restricts to the image of non-surjective self-maps until none exists,
/// then orders the elements canonically. Ids of surviving elements are kept.
pub fn minimal_representative_with(s: &Fpo, budget: u64) -> Result<Fpo, SearchError> {
    let mut cur = s.clone();
    while let Some(f) = non_surjective_self_map(&cur, MinimalityStrategy::General, budget)? {
        let image = BitSet::from_iter(cur.len(), f.iter().copied());
        let keep: Vec<usize> = image.iter().collect();
        cur = cur.induced(&keep);
    }
    Ok(canonicalize(&cur))
}

/// Given a FOP map `E: S -> S'` out of a minimal labelling `S` into an
/// equivalent `S'`, returns a surjective FOP map `P: S' -> S` with
/// `P ∘ E ∘ P = P`.
pub fn projection_to_minrep(e: &FopMap) -> Result<FopMap, SearchError> {
    let (s, s2) = (&e.source, &e.target);
    let back = find_fop_map(s2, s)?.ok_or(SearchError::NotEquivalent)?;
    let ep = &back.assignment;
    // h = E ∘ E' on S'
    let h = compose(ep, &e.assignment);
    let n2 = s2.len();
    let mut power: Vec<usize> = (0..n2).collect();
    let mut image_size = n2 + 1;
    let mut m = 0usize;
    loop {
        let size = BitSet::from_iter(n2, power.iter().copied()).len();
        if size == image_size {
            break;
        }
        image_size = size;
        power = compose(&power, &h);
        m += 1;
    }
    // order of h restricted to its stable image
    let stable: Vec<usize> = BitSet::from_iter(n2, power.iter().copied()).iter().collect();
    let mut order = 1usize;
    for &x in &stable {
        let mut len = 1;
        let mut y = h[x];
        while y != x {
            y = h[y];
            len += 1;
        }
        order = lcm(order, len);
    }
    let mut n = order;
    while n <= m {
        n += order;
    }
    let mut hp: Vec<usize> = (0..n2).collect();
    for _ in 0..n - 1 {
        hp = compose(&hp, &h);
    }
    let p = FopMap {
        source: s2.clone(),
        target: s.clone(),
        assignment: compose(&hp, ep),
    };
    let pep = compose(&compose(&p.assignment, &e.assignment), &p.assignment);
    if pep != p.assignment {
        return Err(SearchError::ProjectionFailed("P ∘ E ∘ P differs from P"));
    }
    if !p.is_surjective() {
        return Err(SearchError::ProjectionFailed("P is not surjective"));
    }
    Ok(p)
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_relabelling_isomorphic;
    use crate::named;

    fn bell_plus_z() -> Fpo {
        named::bell().with_isolated("z")
    }

    #[test]
    fn bell_embeds_into_oneway() {
        let m = find_fop_map(&named::bell(), &named::oneway_l()).unwrap().unwrap();
        assert_eq!(m.image_of("s"), Some("X"));
        assert!(find_fop_map(&named::oneway_l(), &named::bell()).unwrap().is_none());
        let b = named::bell();
        let id = find_fop_map(&b, &b).unwrap().unwrap();
        assert_eq!(id.assignment, (0..b.len()).collect::<Vec<_>>());
    }

    #[test]
    fn class_mismatch_is_an_error() {
        let r = find_fop_map(&named::bell(), &named::full_frame(1, 2));
        assert!(matches!(r, Err(SearchError::ClassMismatch { .. })));
    }

    #[test]
    fn classify_examples() {
        let b = named::bell();
        assert_eq!(
            classify_map(&FopMap::identity(&b)).unwrap().class,
            MapClass::Relabelling
        );

        let m = find_fop_map(&b, &named::oneway_l()).unwrap().unwrap();
        let c = classify_map(&m).unwrap();
        assert_eq!(c.class, MapClass::Fop);
        assert!(matches!(c.witness, Some(ClassWitness::NotReflected { .. })));

        let big = bell_plus_z();
        let incl = FopMap {
            source: b.clone(),
            target: big.clone(),
            assignment: (0..b.len()).collect(),
        };
        let c = classify_map(&incl).unwrap();
        assert_eq!(c.class, MapClass::Foe);
        assert_eq!(c.witness, Some(ClassWitness::NotSurjective { missed: "z".into() }));
    }

    #[test]
    fn classify_reports_order_violation() {
        let ow = named::oneway_l();
        let b = named::bell();
        let asg: BTreeMap<String, String> = [("X", "X"), ("Y", "Y"), ("A", "A"), ("B", "B")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        let m = FopMap::from_ids(ow, b, &asg).unwrap();
        assert!(matches!(classify_map(&m), Err(MapViolation::OrderNotPreserved { .. })));
    }

    #[test]
    fn equivalence_examples() {
        let b = named::bell();
        assert!(is_equivalent(&b, &bell_plus_z()).unwrap());
        assert!(!is_equivalent(&b, &named::oneway_l()).unwrap());
        assert!(is_equivalent(&b, &b).unwrap());
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal_representative(&named::full_frame(2, 2)).unwrap());
        assert!(is_minimal_representative(&named::bottleneck(2, 2)).unwrap());
        assert!(is_minimal_representative(&named::bell()).unwrap());
        assert!(!is_minimal_representative(&bell_plus_z()).unwrap());
        for strategy in [MinimalityStrategy::General, MinimalityStrategy::Idempotent] {
            assert!(!is_minimal_representative_with(&bell_plus_z(), strategy, DEFAULT_BUDGET).unwrap());
        }
    }

    #[test]
    fn minrep_examples() {
        let mut s = named::bell();
        for k in 0..3 {
            s = s.with_isolated(&format!("z{k}"));
        }
        let r = minimal_representative(&s).unwrap();
        assert!(is_relabelling_isomorphic(&r, &named::bell()));

        let ff = named::full_frame(2, 2);
        assert!(is_relabelling_isomorphic(&minimal_representative(&ff).unwrap(), &ff));

        let chain = Fpo::new(
            &["I", "a", "b", "c", "O"],
            &[("I", "a"), ("a", "b"), ("b", "c"), ("c", "O")],
            &["I"],
            &["O"],
        )
        .unwrap();
        let r = minimal_representative(&chain).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.lt_ids("I", "O"));
    }

    #[test]
    fn projection_examples() {
        let b = named::bell();
        let p = projection_to_minrep(&FopMap::identity(&b)).unwrap();
        assert_eq!(p.assignment, (0..b.len()).collect::<Vec<_>>());

        let big = bell_plus_z();
        let e = FopMap {
            source: b.clone(),
            target: big.clone(),
            assignment: (0..b.len()).collect(),
        };
        let p = projection_to_minrep(&e).unwrap();
        assert!(p.validate().is_ok());
        assert!(p.is_surjective());
        assert_eq!(
            compose(&compose(&p.assignment, &e.assignment), &p.assignment),
            p.assignment
        );
    }

    #[test]
    fn projection_rejects_inequivalent() {
        let e = find_fop_map(&named::bell(), &named::oneway_l()).unwrap().unwrap();
        assert_eq!(projection_to_minrep(&e), Err(SearchError::NotEquivalent));
    }

    #[test]
    fn map_json_round_trip() {
        let m = find_fop_map(&named::bell(), &named::oneway_l()).unwrap().unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"s\":\"X\""));
        let back: FopMap = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }
}
