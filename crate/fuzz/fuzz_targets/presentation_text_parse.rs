//! Presentation text grammar: parsing must not panic and re-rendering a
//! parse must be idempotent.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(parsed) = plumbing::presentation::parse_text(text) {
        let rendered = parsed.render();
        let reparsed = plumbing::presentation::parse_text(&rendered)
            .expect("rendered text must parse");
        assert_eq!(reparsed.render(), rendered, "rendering is not idempotent");
    }
});
