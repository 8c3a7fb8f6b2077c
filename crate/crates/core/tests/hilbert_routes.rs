mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use common::{
    all_graphs, coeffs, monomial_count_oracle, random_graph, random_weights, subgraph_series_oracle,
};
use nrr_core::graphs::truncated_g_infinity;
use nrr_core::hilbert::{
    edge_ideal_of, generic_independent_set_series, hp_r, ladder_hilbert_series, polarize,
    verify_lemma_hilb, verify_polarization_identity, verify_proposition_hp,
    weighted_hilbert_inclusion_exclusion, weighted_hilbert_independent_sets,
    weighted_subgraph_series_at,
};
use nrr_core::qseries::product_one_minus;
use nrr_core::{Bounds, LabeledGraph, Mode, MonomialIdealSpec, Order, Variable, WeightMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn weights_of(spec: &MonomialIdealSpec) -> Vec<u32> {
    spec.variables().iter().map(|v| v.weight).collect()
}

#[test]
fn edge_ideal_series_match_monomial_count() {
    let b = Bounds::default();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..60 {
        let g = random_graph(&mut rng, 5, 10);
        let w = random_weights(&mut rng, &g, 3);
        let spec = edge_ideal_of(&g, &w).unwrap();
        let oracle = monomial_count_oracle(&weights_of(&spec), spec.generators(), 12);
        let order = Order::new(12);
        assert_eq!(coeffs(&weighted_hilbert_independent_sets(&g, &w, order, &b).unwrap()), oracle);
        assert_eq!(coeffs(&weighted_hilbert_inclusion_exclusion(&spec, order, &b).unwrap()), oracle);
    }
}

/// Every labeled graph on at most 5 vertices with every weight map into 1..=3.
#[test]
fn inclusion_exclusion_matches_independent_sets_exhaustively() {
    let b = Bounds::default();
    let order = Order::new(15);
    let start = Instant::now();
    let mut cases = 0usize;
    for n in 1..=5u32 {
        let graphs = all_graphs(n);
        cases += graphs
            .par_iter()
            .map(|g| {
                let vs: Vec<_> = g.vertices().iter().copied().collect();
                let mut checked = 0;
                for code in 0..3usize.pow(n) {
                    let mut c = code;
                    let mut map = BTreeMap::new();
                    for v in &vs {
                        map.insert(*v, (c % 3) as u32 + 1);
                        c /= 3;
                    }
                    let w = WeightMap::new(g, map).unwrap();
                    let spec = edge_ideal_of(g, &w).unwrap();
                    assert_eq!(
                        weighted_hilbert_inclusion_exclusion(&spec, order, &b).unwrap(),
                        weighted_hilbert_independent_sets(g, &w, order, &b).unwrap(),
                        "{g} {w:?}"
                    );
                    checked += 1;
                }
                checked
            })
            .sum::<usize>();
    }
    assert_eq!(cases, 3 + 2 * 9 + 8 * 27 + 64 * 81 + 1024 * 243);
    eprintln!("exhaustive inclusion-exclusion: {cases} cases in {:?}", start.elapsed());
}

#[test]
fn ladder_dp_matches_generic_route() {
    let b = Bounds::default();
    let order = Order::new(40);
    for mode in Mode::ALL {
        for m in mode.min_part()..=12 {
            let g = truncated_g_infinity(mode, m).unwrap();
            let w = WeightMap::by_index(&g);
            assert_eq!(
                ladder_hilbert_series(mode, m, order).unwrap(),
                generic_independent_set_series(&g, &w, order, &b).unwrap(),
                "{mode} {m}"
            );
        }
    }
}

#[test]
fn subgraph_series_matches_edge_subset_oracle() {
    let b = Bounds::default();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 8, 12);
        let w = random_weights(&mut rng, &g, 5);
        for z in [-1, 1, 2] {
            let s = weighted_subgraph_series_at(&g, &w, z, Order::new(20), &b).unwrap();
            assert_eq!(coeffs(&s), subgraph_series_oracle(&g, &w, z, 20), "{g} z={z}");
        }
    }
}

#[test]
fn weighted_lemma_on_random_graphs() {
    let b = Bounds::default();
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 8, 12);
        let w = random_weights(&mut rng, &g, 5);
        assert_eq!(verify_lemma_hilb(&g, &w, Order::new(20), &b).unwrap(), Ok(()), "{g}");
    }
}

#[test]
fn polarization_preserves_series_up_to_regular_sequence() {
    let b = Bounds::default();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let order = Order::new(14);
    for _ in 0..60 {
        let nv = rng.random_range(1..=3);
        let vars: Vec<_> = (0..nv).map(|k| Variable::new(format!("v{k}"), rng.random_range(1..=3))).collect();
        let ng = rng.random_range(1..=4);
        let gens: Vec<Vec<u32>> = (0..ng)
            .map(|_| loop {
                let g: Vec<u32> = (0..nv).map(|_| rng.random_range(0..=3)).collect();
                if g.iter().any(|&e| e > 0) {
                    break g;
                }
            })
            .collect();
        let spec = MonomialIdealSpec::new(vars.clone(), gens.clone()).unwrap();
        let pol = polarize(&spec).unwrap();
        assert!(pol.is_squarefree());
        let original = weighted_hilbert_inclusion_exclusion(&spec, order, &b).unwrap();
        assert_eq!(coeffs(&original), monomial_count_oracle(&weights_of(&spec), &gens, 14));
        let fresh = pol.variables().iter().filter(|v| !vars.contains(v)).map(|v| v.weight as usize);
        let reduced = weighted_hilbert_inclusion_exclusion(&pol, order, &b)
            .unwrap()
            .try_mul(&product_one_minus(fresh, order).unwrap())
            .unwrap();
        assert_eq!(reduced, original, "{gens:?}");
    }
}

#[test]
fn named_identities_at_depth() {
    let b = Bounds::default();
    for mode in Mode::ALL {
        assert_eq!(verify_polarization_identity(mode, Order::new(40)).unwrap(), Ok(()));
        assert_eq!(verify_proposition_hp(mode, Order::new(30), &b).unwrap(), Ok(()));
    }
    assert_eq!(coeffs(&ladder_hilbert_series(Mode::Two, 3, Order::new(3)).unwrap()), [1, 2, 4, 7]);
}

#[test]
fn hp_r_counts_t_partitions_and_matches_monomials() {
    let order = Order::new(20);
    for mode in Mode::ALL {
        let spec = MonomialIdealSpec::consecutive_square_ideal(mode, 20).unwrap();
        let oracle = monomial_count_oracle(&weights_of(&spec), spec.generators(), 20);
        assert_eq!(coeffs(&hp_r(mode, order).unwrap()), oracle);
    }
    assert_eq!(coeffs(&hp_r(Mode::Two, Order::new(5)).unwrap()), [1, 1, 1, 1, 2, 2]);
}

#[test]
fn empty_graph_series_is_one() {
    let b = Bounds::default();
    let g = LabeledGraph::empty();
    let w = WeightMap::by_index(&g);
    let order = Order::new(5);
    assert_eq!(coeffs(&weighted_hilbert_independent_sets(&g, &w, order, &b).unwrap()), [1, 0, 0, 0, 0, 0]);
    assert_eq!(coeffs(&weighted_subgraph_series_at(&g, &w, -1, order, &b).unwrap()), [1, 0, 0, 0, 0, 0]);
}
