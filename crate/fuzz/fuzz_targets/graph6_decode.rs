#![no_main]

use kst_core::graph6;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = graph6::decode(data) {
        assert!(g.order() <= kst_core::MAX_VERTICES);
        assert_eq!(g.degree_sequence().sum(), 2 * g.edge_count());
    }
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = graph6::decode_lines(text);
    }
});
