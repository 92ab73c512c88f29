#![no_main]

use libfuzzer_sys::fuzz_target;
use matroids::io::{parse_matroid, render_matroid};

fuzz_target!(|data: &[u8]| {
    // The parser must never panic, and anything it accepts must
    // round-trip through the renderer unchanged.
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(matroid) = parse_matroid(text) {
            let rendered = render_matroid(&matroid);
            let again = parse_matroid(&rendered).expect("rendered output must parse");
            assert_eq!(again, matroid);
            assert_eq!(render_matroid(&again), rendered);
        }
    }
});
