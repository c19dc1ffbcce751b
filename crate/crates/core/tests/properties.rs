mod common;

use proptest::prelude::*;
use strongodd::coloring::{bounds_report, chromatic, chromatic_with, verify, ColoringKind, SolverOptions};
use strongodd::graph::generators::random_graph;
use strongodd::graph::io::{from_graph6, parse_edge_list, to_graph6, write_edge_list};
use strongodd::{BigRational, Rational};

use common::*;

#[test]
fn symmetry_breaking_keeps_minimal_k() {
    let plain = SolverOptions { symmetry_breaking: false, ..SolverOptions::default() };
    for (name, g) in named_fixtures().into_iter().filter(|(_, g)| g.n() <= 10) {
        for kind in ColoringKind::ALL {
            assert_eq!(chromatic(&g, kind).k, chromatic_with(&g, kind, &plain).unwrap().k, "{name} {kind}");
        }
    }
}

#[test]
fn claw_free_fixtures_have_equal_values() {
    for (name, g) in named_fixtures() {
        let r = bounds_report(&g, 16).unwrap();
        assert!(r.ok, "{name}: {r:?}");
    }
}

#[test]
fn big_and_small_rationals_agree() {
    for g in sparse_corpus().into_iter().take(60) {
        let a: Rational = strongodd::density::mad::<i64>(&g).mad;
        let b: BigRational = strongodd::density::mad(&g).mad;
        assert_eq!(a.to_string(), b.to_string());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn palette_permutation_preserves_strong_odd(n in 2usize..9, p in 0.1f64..0.7, seed in any::<u64>(), rot in 0u32..8) {
        let g = random_graph(n, p, seed).unwrap();
        let r = chromatic(&g, ColoringKind::StrongOdd);
        let k = r.k;
        let perm: Vec<u32> = (0..k).map(|i| (i + rot) % k + 1).collect();
        let c = r.coloring.permute_palette(&perm).unwrap();
        prop_assert!(verify(&g, &c, ColoringKind::StrongOdd).unwrap().ok);
    }

    #[test]
    fn relabelling_keeps_chromatic_numbers(n in 2usize..9, p in 0.1f64..0.7, seed in any::<u64>()) {
        let g = random_graph(n, p, seed).unwrap();
        let perm: Vec<usize> = (0..n).rev().collect();
        let h = g.relabel(&perm);
        for kind in ColoringKind::ALL {
            prop_assert_eq!(chromatic(&g, kind).k, chromatic(&h, kind).k);
        }
    }

    #[test]
    fn file_formats_round_trip(n in 1usize..20, p in 0.0f64..0.8, seed in any::<u64>()) {
        let g = random_graph(n, p, seed).unwrap();
        prop_assert_eq!(&parse_edge_list(&write_edge_list(&g)).unwrap().graph, &g);
        prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
    }
}
