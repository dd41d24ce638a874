//! Whole-pipeline target: any parsed graph must survive shape
//! classification, presentation building, text export and the decision
//! engines without panicking. Sizes are capped to keep iterations fast;
//! the exponential certificate search is exercised only on small trees.

#![no_main]

use libfuzzer_sys::fuzz_target;
use plumbing::decision;
use plumbing::graph::classify_shape;
use plumbing::presentation::{abelianization, build_presentation, export_text, parse_text};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(graph) = plumbing::format::parse_graph(text) else {
        return;
    };
    // Keep each iteration fast: small graphs, small genus, tame weights.
    let total_genus: u64 = graph.vertices().iter().map(|v| v.genus as u64).sum();
    let tame_weights = graph.vertices().iter().all(|v| match v.self_int {
        plumbing::graph::Weight::Int(w) => w.abs() <= 64,
        plumbing::graph::Weight::Inf => true,
    });
    if graph.vertices().len() > 24 || graph.edges().len() > 32 || total_genus > 32 || !tame_weights
    {
        return;
    }
    let _ = classify_shape(&graph);
    let p = build_presentation(&graph);
    let exported = export_text(&p);
    parse_text(&exported).expect("exported presentations must parse");
    let _ = abelianization(&p);
    let _ = plumbing::graph::intersection_matrix(&graph)
        .map(|m| plumbing::graph::signature(&m));
    let _ = decision::theorem_a(&graph);
    let _ = decision::theorem_b(&graph);
    if graph.vertices().len() <= 10 {
        let _ = decision::theorem_c(&graph);
    }
});
