mod common;

use common::*;
use itertools::Itertools;
use lettericity::coloring::Coloring;
use lettericity::letter_graph::run_lengths;
use lettericity::oracle::brute_word_retrieval;
use lettericity::random::{
    random_decoder, random_graph, random_symmetric_decoder, random_word, seeded,
};
use lettericity::symmetric::symmetric_witness;
use lettericity::word_retrieval::{is_generalized_solution, OrderDigraph};
use lettericity::{
    are_generalized_twins, build_order_digraph, decode, find_isomorphism, induced_subgraph,
    project_word, retrieve_word, Decoder, Graph, Letter, Word,
};
use proptest::prelude::*;
use rand::Rng;

fn is_topological(h: &OrderDigraph, perm: &[usize]) -> bool {
    let mut at = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        at[v] = i;
    }
    h.arcs().all(|(u, v)| at[u] < at[v])
}

#[test]
fn twin_relation_is_transitive() {
    let mut rng = seeded(1);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let twins = |u, v| u == v || are_generalized_twins(&g, u, v).unwrap();
        for (u, v, w) in (0..n).tuple_combinations() {
            let (uv, vw, uw) = (twins(u, v), twins(v, w), twins(u, w));
            assert!(!(uv && vw) || uw);
            assert!(!(uv && uw) || vw);
            assert!(!(uw && vw) || uv);
        }
    }
}

#[test]
fn twins_share_an_open_or_closed_neighborhood() {
    let mut rng = seeded(2);
    for _ in 0..300 {
        let n = rng.gen_range(2..=9);
        let g = random_graph(&mut rng, n, 0.5);
        for (u, v) in (0..n).tuple_combinations() {
            let same =
                g.neighbors(u) == g.neighbors(v) || g.closed_neighbors(u) == g.closed_neighbors(v);
            assert_eq!(are_generalized_twins(&g, u, v).unwrap(), same);
        }
    }
}

#[test]
fn order_digraph_characterizes_generalized_solutions() {
    let mut rng = seeded(3);
    for i in 0..200 {
        let n = rng.gen_range(1..=6);
        let k = rng.gen_range(1..=3);
        let (g, chi, d) = if i % 2 == 0 {
            let w = random_word(&mut rng, n, k, false);
            let d = random_decoder(&mut rng, k, 0.5);
            let decoded = decode(&d, &w).unwrap();
            (decoded.graph, decoded.coloring, d)
        } else {
            let g = random_graph(&mut rng, n, 0.5);
            let chi =
                Coloring::new(k, random_word(&mut rng, n, k, false).letters().to_vec()).unwrap();
            (g, chi, random_decoder(&mut rng, k, 0.5))
        };
        let h = build_order_digraph(&g, &chi, &d).unwrap();
        for perm in (0..n).permutations(n) {
            assert_eq!(
                is_topological(&h, &perm),
                is_generalized_solution(&g, &chi, &d, &perm),
                "{perm:?}"
            );
        }
    }
}

#[test]
fn absence_is_confirmed_by_exhaustive_search() {
    let mut rng = seeded(4);
    let mut absent = 0;
    for _ in 0..600 {
        let n = rng.gen_range(2..=7);
        let k = rng.gen_range(1..=3);
        let g = random_graph(&mut rng, n, 0.5);
        let chi = Coloring::new(k, random_word(&mut rng, n, k, false).letters().to_vec()).unwrap();
        let d = random_decoder(&mut rng, k, 0.5);
        let fast = retrieve_word(&g, &chi, &d).unwrap();
        let slow = brute_word_retrieval(&g, &chi, &d).unwrap();
        assert_eq!(fast.is_some(), slow.is_some());
        if fast.is_none() {
            absent += 1;
        }
    }
    assert!(absent >= 100);
}

#[test]
fn symmetric_grouped_permutations_preserve_the_graph() {
    let mut rng = seeded(5);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let witness = symmetric_witness(&g).unwrap();
        let mut letters = witness.word.letters().to_vec();
        rand::seq::SliceRandom::shuffle(letters.as_mut_slice(), &mut rng);
        let shuffled = Word::new(letters);
        let d = random_symmetric_decoder(&mut rng, witness.decoder.alphabet_len(), 0.5);
        let a = decode(&d, &witness.word).unwrap().graph;
        let b = decode(&d, &shuffled).unwrap().graph;
        assert!(find_isomorphism(&a, &b).is_some());
        let oracle = lettericity::oracle::brute_isomorphism(&a, &b).unwrap();
        assert!(oracle.is_some());
    }
}

fn word_strategy(max_k: usize, max_n: usize) -> impl Strategy<Value = (usize, Vec<usize>, u64)> {
    (1..=max_k).prop_flat_map(move |k| {
        (
            Just(k),
            prop::collection::vec(0..k, 0..=max_n),
            0u64..(1u64 << (k * k)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn decode_then_retrieve_round_trips((k, letters, mask) in word_strategy(4, 12)) {
        let d = Decoder::from_mask(k, mask);
        let w = Word::new(letters.into_iter().map(Letter).collect());
        let decoded = decode(&d, &w).unwrap();
        let sol = retrieve_word(&decoded.graph, &decoded.coloring, &d).unwrap().unwrap();
        let again = decode(&d, &sol.word).unwrap().graph;
        let pos = sol.positions();
        for (u, v) in (0..w.len()).tuple_combinations() {
            prop_assert_eq!(decoded.graph.has_edge(u, v), again.has_edge(pos[u], pos[v]));
        }
        prop_assert_eq!(decoded.graph.size(), again.size());
    }

    #[test]
    fn decode_counts_pairs((k, letters, mask) in word_strategy(4, 12)) {
        let d = Decoder::from_mask(k, mask);
        let w = Word::new(letters.into_iter().map(Letter).collect());
        let naive = (0..w.len())
            .tuple_combinations()
            .filter(|&(i, j)| d.contains(w[i], w[j]))
            .count();
        prop_assert_eq!(decode(&d, &w).unwrap().graph.size(), naive);
    }

    #[test]
    fn projections_and_runs((k, letters, _mask) in word_strategy(4, 16)) {
        let w = Word::new(letters.into_iter().map(Letter).collect());
        let counts = w.letter_counts(k);
        for a in 0..k {
            let a = Letter(a);
            prop_assert_eq!(project_word(&w, &[a]).len(), counts[a.0]);
            prop_assert_eq!(run_lengths(&w, a).iter().sum::<usize>(), counts[a.0]);
        }
    }

    #[test]
    fn inducing_is_idempotent(n in 1usize..10, mask in any::<u64>(), keep in any::<u16>()) {
        let g = graph_from_mask(n, mask & ((1u64 << (n * (n - 1) / 2)) - 1));
        let subset: Vec<usize> = (0..n).filter(|v| keep >> v & 1 == 1).collect();
        let once = induced_subgraph(&g, &subset).unwrap();
        let all: Vec<usize> = once.vertices().collect();
        let twice = induced_subgraph(&once, &all).unwrap();
        prop_assert_eq!(&once, &twice);
        let again = induced_subgraph(&g, &subset).unwrap();
        prop_assert_eq!(once, again);
    }
}

#[test]
fn empty_graph_round_trip() {
    let g = Graph::new();
    let chi = Coloring::new(1, vec![]).unwrap();
    let sol = retrieve_word(&g, &chi, &Decoder::new(1)).unwrap().unwrap();
    assert!(sol.word.is_empty());
}
