//! Structural predicates satisfied by minimal representatives, and
//! recognition of named families up to frame permutation.

use std::collections::VecDeque;

use crate::canon::canonical_form;
use crate::enumerate::frame_orbit;
use crate::fop::{collapse_point, two_parents_violation};
use crate::fpo::Fpo;
use crate::named;

/// If some element lies above every input and below every output, it is the
/// only internal element, or there are no internal elements at all.
pub fn collapse_holds(s: &Fpo) -> bool {
    let frame_point = s
        .frame()
        .into_iter()
        .find(|&x| s.inputs().iter().all(|&i| s.le(i, x)) && s.outputs().iter().all(|&o| s.le(x, o)));
    if frame_point.is_some() && s.internal_count() > 0 {
        return false;
    }
    collapse_point(s).is_none() || s.internal_count() == 1
}

/// Every internal `x` and `y > x` admit some `z > x` unrelated to `y`, and
/// dually below.
pub fn two_parents_holds(s: &Fpo) -> bool {
    two_parents_violation(s).is_none()
}

/// Shortest internal-path distance from `start` to every element; paths may
/// only pass through internal elements.
pub fn internal_distances(s: &Fpo, start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; s.len()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(z) = queue.pop_front() {
        if z != start && !s.is_internal(z) {
            continue;
        }
        let d = dist[z].unwrap();
        for w in 0..s.len() {
            if dist[w].is_none() && s.related(z, w) {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Along shortest internal paths from each input, even-distance elements are
/// below their odd-distance neighbours.
pub fn fence_parity_holds(s: &Fpo) -> bool {
    for &i in s.inputs() {
        let dist = internal_distances(s, i);
        for y in 0..s.len() {
            let Some(dy) = dist[y] else { continue };
            if y != i && !s.is_internal(y) {
                continue;
            }
            for z in 0..s.len() {
                if dist[z] != Some(dy + 1) || !s.related(y, z) {
                    continue;
                }
                let even_below_odd = if dy % 2 == 0 { s.lt(y, z) } else { s.lt(z, y) };
                if !even_below_odd {
                    return false;
                }
            }
        }
    }
    true
}

/// For each pair of outputs, at most one internal element has exactly that
/// pair as its outputs above.
pub fn pairwise_unique_below(s: &Fpo) -> bool {
    let outs = s.outputs();
    for a in 0..outs.len() {
        for b in a + 1..outs.len() {
            let count = s
                .internal()
                .filter(|&x| outs.iter().enumerate().all(|(k, &o)| s.lt(x, o) == (k == a || k == b)))
                .count();
            if count > 1 {
                return false;
            }
        }
    }
    true
}

/// Number of connection components of the comparability graph.
pub fn component_count(s: &Fpo) -> usize {
    s.connection_components().len()
}

/// Names of the named structures of this class, with instances, for zigzag
/// lengths up to `max_zigzag`.
pub fn named_candidates(s: &Fpo, max_zigzag: usize) -> Vec<(String, Fpo)> {
    let c = s.class();
    let (m, n) = (c.inputs, c.outputs);
    let mut out = vec![
        (format!("FULL_FRAME({m},{n})"), named::full_frame(m, n)),
        (format!("BOTTLENECK({m},{n})"), named::bottleneck(m, n)),
    ];
    if (m, n) == (2, 2) {
        out.push(("BELL".into(), named::bell()));
        out.push(("ONEWAY_L".into(), named::oneway_l()));
        out.push(("ONEWAY_R".into(), named::oneway_r()));
        for k in 1..=max_zigzag {
            out.push((format!("ZZ22({k})"), named::zz22(k)));
        }
    }
    if (m, n) == (1, 3) {
        for k in 1..=max_zigzag {
            out.push((format!("ZZ13({k})"), named::zz13(k)));
        }
    }
    out
}

/// The named structure `s` equals up to frame permutation, if any.
pub fn match_named(s: &Fpo, max_zigzag: usize) -> Option<String> {
    let form = canonical_form(s);
    named_candidates(s, max_zigzag)
        .into_iter()
        .filter(|(_, f)| f.len() == s.len())
        .find(|(_, f)| frame_orbit(f).contains(&form))
        .map(|(name, _)| name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_structures_pass_predicates() {
        for s in [
            named::bell(),
            named::bottleneck(2, 2),
            named::zz22(1),
            named::zz22(3),
            named::zz13(2),
            named::full_frame(1, 3),
        ] {
            assert!(collapse_holds(&s), "{s:?}");
            assert!(two_parents_holds(&s), "{s:?}");
            assert!(fence_parity_holds(&s), "{s:?}");
        }
    }

    #[test]
    fn violations_detected() {
        let with_z = named::bottleneck(2, 2).with_isolated("z");
        assert!(!collapse_holds(&with_z));
        // x has a single element above it
        let chain = Fpo::new(&["I", "x", "O"], &[("I", "x"), ("x", "O")], &["I"], &["O"]).unwrap();
        assert!(!two_parents_holds(&chain));
    }

    #[test]
    fn recognises_permuted_bell() {
        let b = named::bell().with_frame_permutation(&[1, 0], &[0, 1]);
        assert_eq!(match_named(&b, 2).as_deref(), Some("BELL"));
        assert_eq!(match_named(&named::zz22(2), 3).as_deref(), Some("ZZ22(2)"));
        assert_eq!(match_named(&named::bell().with_isolated("z"), 2), None);
    }

    #[test]
    fn distances_follow_internal_paths() {
        let z = named::zz13(1);
        let d = internal_distances(&z, z.index_of("I").unwrap());
        assert_eq!(d[z.index_of("x2").unwrap()], Some(2));
        assert_eq!(d[z.index_of("O3").unwrap()], Some(3));
    }
}
