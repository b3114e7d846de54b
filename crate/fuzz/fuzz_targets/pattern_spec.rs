#![no_main]

use kst_core::minor::Pattern;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    match text.parse::<Pattern>() {
        Ok(Pattern::CompleteBipartite(a, b)) => {
            assert!(a > 0 && b > 0 && a + b <= kst_core::MAX_VERTICES);
            let g = Pattern::CompleteBipartite(a, b).graph().expect("parsed sizes fit");
            assert_eq!(g.edge_count(), a * b);
        }
        Ok(p @ Pattern::Graph(_)) => {
            p.graph().expect("graph pattern");
        }
        Err(_) => {}
    }
});
