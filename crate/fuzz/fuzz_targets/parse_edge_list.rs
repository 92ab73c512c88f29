#![no_main]

use libfuzzer_sys::fuzz_target;
use matroids::constructions::{graphic, GraphSpec};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(spec) = GraphSpec::parse_edge_list(text) {
            // accepted graphs must build (or report capacity) cleanly
            let _ = graphic(&spec);
        }
    }
});
