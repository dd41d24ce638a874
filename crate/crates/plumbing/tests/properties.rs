//! Property tests for the structural invariants.

use num_bigint::BigInt;
use num_traits::Zero;
use plumbing::comb::{self, CombParams};
use plumbing::format;
use plumbing::graph::{
    classify_shape, intersection_matrix, signature, PlumbingGraph, ShapeKind, Vertex, VertexId,
};
use plumbing::intalg;
use plumbing::presentation::{build_presentation, export_text, parse_text};
use plumbing::word::Gen;
use proptest::prelude::*;

/// Strategy: a random labeled tree with up to `max` vertices.
fn tree_strategy(max: usize) -> impl Strategy<Value = PlumbingGraph> {
    (1..=max)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<u32>> = (2..=n as u32)
                .map(|id| (1..id).boxed())
                .collect();
            let weights = proptest::collection::vec(-6i64..=3, n);
            let genera = proptest::collection::vec(0u32..=2, n);
            (parents, weights, genera)
        })
        .prop_map(|(parents, weights, genera)| {
            let vertices: Vec<Vertex> = weights
                .iter()
                .zip(&genera)
                .enumerate()
                .map(|(i, (&w, &g))| Vertex::new(i as VertexId + 1, g, w))
                .collect();
            let edges: Vec<(VertexId, VertexId)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i as VertexId + 2))
                .collect();
            PlumbingGraph::new(vertices, edges).expect("tree is valid")
        })
}

fn relabel(g: &PlumbingGraph, offset: u32) -> PlumbingGraph {
    let vertices = g
        .vertices()
        .iter()
        .map(|v| Vertex {
            id: offset + 1000 - v.id,
            ..*v
        })
        .collect();
    let edges = g
        .edges()
        .iter()
        .map(|&(a, b)| (offset + 1000 - a, offset + 1000 - b))
        .collect();
    PlumbingGraph::new(vertices, edges).expect("relabeling preserves validity")
}

proptest! {
    #[test]
    fn shape_is_relabeling_invariant(g in tree_strategy(9), offset in 0u32..100) {
        let a = classify_shape(&g).kind;
        let b = classify_shape(&relabel(&g, offset)).kind;
        let same = match (a, b) {
            (ShapeKind::LinearTree, ShapeKind::LinearTree) => true,
            (ShapeKind::GeneralTree, ShapeKind::GeneralTree) => true,
            (ShapeKind::HasCycles, ShapeKind::HasCycles) => true,
            (ShapeKind::Comb(_), ShapeKind::Comb(_)) => true,
            _ => false,
        };
        prop_assert!(same);
    }

    #[test]
    fn intersection_matrix_is_symmetric_with_simple_off_diagonal(g in tree_strategy(8)) {
        let m = intersection_matrix(&g).unwrap();
        prop_assert!(m.is_symmetric());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    let v = &m[(i, j)];
                    prop_assert!(v.is_zero() || *v == BigInt::from(1));
                }
            }
        }
    }

    #[test]
    fn signature_parts_sum_to_dimension(g in tree_strategy(8)) {
        let m = intersection_matrix(&g).unwrap();
        let (p, z, n) = signature(&m).unwrap();
        prop_assert_eq!(p + z + n, m.rows());
    }

    #[test]
    fn nef_chains_are_negative_definite(ms in proptest::collection::vec(2i64..=6, 1..=8)) {
        let weights: Vec<i64> = ms.iter().map(|&m| -m).collect();
        let g = plumbing::graph::chain_graph(&weights);
        let m = intersection_matrix(&g).unwrap();
        prop_assert_eq!(signature(&m).unwrap(), (0, 0, ms.len()));
    }

    #[test]
    fn chain_growth_is_strict(ms in proptest::collection::vec(2i64..=9, 1..=12)) {
        let data = plumbing::chain::chain_sequence(&ms).unwrap();
        for w in data.a.windows(2) {
            prop_assert!(w[1] > w[0]);
        }
    }

    #[test]
    fn lambda_count_equals_betti(
        g in tree_strategy(7),
        extra in proptest::collection::vec((1u32..=7, 1u32..=7), 0..3)
    ) {
        // Add a few extra edges (possibly creating cycles/multi-edges).
        let n = g.vertices().len() as u32;
        let mut edges = g.edges().to_vec();
        for (a, b) in extra {
            let (a, b) = (a.min(n), b.min(n));
            if a != b {
                edges.push((a, b));
            }
        }
        let g = PlumbingGraph::new(g.vertices().to_vec(), edges).unwrap();
        let p = build_presentation(&g);
        prop_assert_eq!(p.lambda_count(), g.betti());
    }

    #[test]
    fn relators_are_reduced_and_nonempty(g in tree_strategy(8)) {
        let p = build_presentation(&g);
        for r in p.relators() {
            prop_assert!(!r.word.is_identity());
            // Freely reduced: no adjacent inverse pair survives.
            let letters = r.word.letters();
            for w in letters.windows(2) {
                prop_assert!(!(w[0].0 == w[1].0 && w[0].1 != w[1].1));
            }
        }
    }

    #[test]
    fn presentation_text_round_trips(g in tree_strategy(7)) {
        let p = build_presentation(&g);
        let text = export_text(&p);
        let parsed = parse_text(&text).unwrap();
        prop_assert_eq!(parsed.render(), text);
    }

    #[test]
    fn graph_file_round_trips(g in tree_strategy(9)) {
        let text = format::emit_graph(&g);
        let back = format::parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(format::emit_graph(&back), text);
    }

    #[test]
    fn graph_parser_never_panics(s in "\\PC*") {
        let _ = format::parse_graph(&s);
        let _ = format::parse_move_spec(&s);
        let _ = parse_text(&s);
    }

    #[test]
    fn mutated_documents_never_panic(
        g in tree_strategy(6),
        idx in 0usize..512,
        byte in 0u8..=255,
    ) {
        let mut bytes = format::emit_graph(&g).into_bytes();
        let n = bytes.len();
        bytes[idx % n] = byte;
        if let Ok(text) = std::str::from_utf8(&bytes) {
            if let Ok(mutated) = format::parse_graph(text) {
                // Anything that still parses must still round-trip.
                let canon = format::emit_graph(&mutated);
                prop_assert_eq!(format::parse_graph(&canon).unwrap(), mutated);
            }
        }
    }

    #[test]
    fn classify_is_sorting_invariant(
        pairs in proptest::collection::vec((2i64..=9, 1i64..=8), 3..=6),
        m in 1i64..=5,
        seed in 0usize..6,
    ) {
        let b: Vec<i64> = pairs.iter().map(|(b, _)| *b).collect();
        let d: Vec<i64> = pairs.iter().map(|(_, d)| *d).collect();
        let p1 = CombParams::from_i64(m, &b, &d).unwrap();
        // Rotate the strings.
        let k = seed % b.len();
        let rb: Vec<i64> = b.iter().cycle().skip(k).take(b.len()).copied().collect();
        let rd: Vec<i64> = d.iter().cycle().skip(k).take(d.len()).copied().collect();
        let p2 = CombParams::from_i64(m, &rb, &rd).unwrap();
        let v1 = comb::classify(&p1);
        let v2 = comb::classify(&p2);
        prop_assert_eq!(v1.gamma, v2.gamma);
        prop_assert_eq!(v1.group, v2.group);
    }

    /// Dual-route agreement: the SNF route and the fraction-sum route
    /// agree on when the meridian class is infinite in homology.
    #[test]
    fn homology_route_matches_fraction_route(
        pairs in proptest::collection::vec((1i64..=9, 1i64..=9), 3..=6),
        m in 1i64..=6,
    ) {
        let b: Vec<i64> = pairs.iter().map(|(b, _)| *b).collect();
        let d: Vec<i64> = pairs.iter().map(|(_, d)| *d).collect();
        let p = CombParams::from_i64(m, &b, &d).unwrap();
        let matches = intalg::rational_sum_eq(&p.m, &p.b, &p.d).unwrap();
        let h = comb::homology_gamma_order(&p);
        prop_assert_eq!(h.is_zero(), matches);
    }

    #[test]
    fn abelianization_gamma_count_matches_vertices(g in tree_strategy(7)) {
        let p = build_presentation(&g);
        let ab = plumbing::presentation::abelianization(&p);
        prop_assert_eq!(ab.gamma_images.len(), g.vertices().len());
        for gen in p.generators() {
            if let Gen::Gamma(v) = gen {
                prop_assert!(ab.gamma_images.contains_key(v));
            }
        }
    }
}
