#![no_main]

//! decode -> encode -> decode must reproduce the graph, and the second
//! encoding must equal the first.

use kst_core::graph6;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(g) = graph6::decode(data) else {
        return;
    };
    let text = graph6::encode(&g);
    let back = graph6::decode_str(&text).expect("encoder output decodes");
    assert_eq!(back, g);
    assert_eq!(graph6::encode(&back), text);
});
