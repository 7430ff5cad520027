//! Property suites for orders, maps, minimal representatives, 𝒢 and
//! spacetime embedding.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fpolab::canon::{canonical_form, is_relabelling_isomorphic};
use fpolab::diagram::{convert_diagram, diagram_to_fpo, g_normalize};
use fpolab::fop::{
    classify_map, find_fop_map, is_equivalent, is_minimal_representative, is_minimal_representative_with,
    minimal_representative, FopMap, MinimalityStrategy,
};
use fpolab::fpo::{parallel_compose, transitive_closure, Fpo};
use fpolab::gen::{random_diagram, random_fpo};
use fpolab::spacetime::{c_local_embed, c_local_embed_via_window, minkowski_lattice, Localisation};
use fpolab::DEFAULT_BUDGET;

fn sample(seed: u64, max_internal: usize) -> Fpo {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(0..=2);
    let n = rng.gen_range(1..=2);
    let k = rng.gen_range(0..=max_internal);
    let p = rng.gen_range(0.1..0.8);
    random_fpo(&mut rng, m, n, k, p)
}

/// Same FPO with shuffled element order and fresh ids.
fn scrambled(s: &Fpo, seed: u64) -> Fpo {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.shuffle(&mut rng);
    s.permuted(&order).renamed(|id| format!("z_{id}"))
}

fn same_class_pair(seed: u64) -> (Fpo, Fpo) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(0..=2);
    let n = rng.gen_range(1..=2);
    let (ka, kb) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
    let a = random_fpo(&mut rng, m, n, ka, 0.5);
    let b = random_fpo(&mut rng, m, n, kb, 0.5);
    (a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closure_is_idempotent(seed in any::<u64>()) {
        let s = sample(seed, 5);
        let pairs: Vec<(String, String)> = s.strict_pairs().into_iter().collect();
        let closed = transitive_closure(s.ids(), &pairs).unwrap();
        prop_assert_eq!(closed, s.strict_pairs());
    }

    #[test]
    fn hasse_round_trip(seed in any::<u64>()) {
        let s = sample(seed, 5);
        let hasse = s.hasse_reduction();
        let rebuilt = Fpo::new(s.ids(), &hasse, &s.input_ids(), &s.output_ids()).unwrap();
        prop_assert_eq!(rebuilt.strict_pairs(), s.strict_pairs());
        prop_assert!(hasse.len() <= s.strict_pairs().len());
    }

    #[test]
    fn parallel_composition_adds_up(a in any::<u64>(), b in any::<u64>()) {
        let (s, t) = (sample(a, 3), sample(b, 3));
        let p = parallel_compose(&s, &t);
        prop_assert_eq!(p.len(), s.len() + t.len());
        prop_assert_eq!(p.relation_count(), s.relation_count() + t.relation_count());
        prop_assert_eq!(p.class().inputs, s.class().inputs + t.class().inputs);
        let q = parallel_compose(&t, &s);
        let q_fixed = q.with_frame_permutation(
            &(0..q.inputs().len()).map(|k| (k + t.inputs().len()) % q.inputs().len()).collect::<Vec<_>>(),
            &(0..q.outputs().len()).map(|k| (k + t.outputs().len()) % q.outputs().len()).collect::<Vec<_>>(),
        );
        prop_assert!(is_relabelling_isomorphic(&p, &q_fixed));
    }

    #[test]
    fn canonical_form_ignores_labels(seed in any::<u64>(), shuffle in any::<u64>()) {
        let s = sample(seed, 5);
        prop_assert_eq!(canonical_form(&s), canonical_form(&scrambled(&s, shuffle)));
    }

    #[test]
    fn preorder_is_reflexive_and_transitive(a in any::<u64>(), b in any::<u64>()) {
        let (s, t) = same_class_pair(a);
        let id = FopMap::identity(&s);
        prop_assert!(id.validate().is_ok());
        let mut rng = ChaCha8Rng::seed_from_u64(b);
        let k = rng.gen_range(0..=3);
        let u = random_fpo(&mut rng, s.class().inputs, s.class().outputs, k, 0.5);
        if let (Some(f), Some(g)) = (find_fop_map(&s, &t).unwrap(), find_fop_map(&t, &u).unwrap()) {
            let h = f.then(&g);
            prop_assert!(h.validate().is_ok());
        }
    }

    #[test]
    fn minimality_strategies_agree(seed in any::<u64>()) {
        let s = sample(seed, 4);
        let general = is_minimal_representative_with(&s, MinimalityStrategy::General, DEFAULT_BUDGET).unwrap();
        let idem = is_minimal_representative_with(&s, MinimalityStrategy::Idempotent, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(general, idem);
    }

    #[test]
    fn minimal_representative_is_a_fixpoint(seed in any::<u64>(), shuffle in any::<u64>()) {
        let s = sample(seed, 5);
        let m = minimal_representative(&s).unwrap();
        prop_assert!(is_minimal_representative(&m).unwrap());
        prop_assert!(is_relabelling_isomorphic(&minimal_representative(&m).unwrap(), &m));
        let m2 = minimal_representative(&scrambled(&s, shuffle)).unwrap();
        prop_assert!(is_relabelling_isomorphic(&m, &m2));
        prop_assert!(is_equivalent(&s, &m).unwrap());
    }

    #[test]
    fn equivalent_fpos_share_minimal_representative(a in any::<u64>()) {
        let (s, t) = same_class_pair(a);
        if is_equivalent(&s, &t).unwrap() {
            let (ms, mt) = (minimal_representative(&s).unwrap(), minimal_representative(&t).unwrap());
            prop_assert!(is_relabelling_isomorphic(&ms, &mt));
        }
    }

    #[test]
    fn g_normalisation_is_confluent(seed in any::<u64>(), shuffle in any::<u64>()) {
        let s = sample(seed, 5);
        let g = g_normalize(&s);
        prop_assert!(is_relabelling_isomorphic(&g_normalize(&scrambled(&s, shuffle)), &g));
        prop_assert!(is_relabelling_isomorphic(&g_normalize(&g), &g));
        prop_assert!(find_fop_map(&s, &g).unwrap().is_some());
    }

    #[test]
    fn conversion_realises_target(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(0..=2);
        let n = rng.gen_range(1..=2);
        let boxes = rng.gen_range(1..=4);
        let d = random_diagram(&mut rng, m, n, boxes);
        let s = diagram_to_fpo(&d).unwrap();
        let target = minimal_representative(&s).unwrap();
        let map = find_fop_map(&s, &target).unwrap().unwrap();
        prop_assert!(classify_map(&map).is_ok());
        let c = convert_diagram(&d, &map).unwrap();
        prop_assert!(is_relabelling_isomorphic(&diagram_to_fpo(&c.diagram).unwrap(), &target));
    }

    #[test]
    fn spacetime_searches_agree_and_grow_with_the_site(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, n) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let s = random_fpo(&mut rng, m, n, 2, 0.4);
        let mut coords = Vec::new();
        for &i in s.inputs() {
            coords.push((s.id(i).to_string(), vec![rng.gen_range(-2..=0), rng.gen_range(-2..=2)]));
        }
        for &o in s.outputs() {
            coords.push((s.id(o).to_string(), vec![rng.gen_range(0..=2), rng.gen_range(-2..=2)]));
        }
        let loc = Localisation::from_coords(&coords);
        let small = minkowski_lattice(1, -2..=2, &[-2..=2]);
        let big = minkowski_lattice(1, -3..=3, &[-4..=4]);
        let direct = c_local_embed(&s, &small, &loc).unwrap();
        let window = c_local_embed_via_window(&s, &small, &loc, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(direct.is_some(), window.is_some());
        if direct.is_some() {
            prop_assert!(c_local_embed(&s, &big, &loc).unwrap().is_some());
        }
    }
}
