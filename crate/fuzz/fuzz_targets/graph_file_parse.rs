//! Graph file parser: must never panic, and accepted documents must
//! round-trip through the canonical emitter.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(graph) = plumbing::format::parse_graph(text) {
        let canonical = plumbing::format::emit_graph(&graph);
        let reparsed = plumbing::format::parse_graph(&canonical)
            .expect("canonical output must parse");
        assert_eq!(reparsed, graph, "round trip changed the graph");
        assert_eq!(
            plumbing::format::emit_graph(&reparsed),
            canonical,
            "canonical form is not a fixed point"
        );
    }
});
