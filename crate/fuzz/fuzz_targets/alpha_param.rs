#![no_main]

use kst_core::spectral::AlphaParam;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(a) = text.parse::<AlphaParam>() {
        let v = a.value();
        assert!(v.is_finite() && (0.0..1.0).contains(&v));
        // Display output parses back to the same value
        assert_eq!(a.to_string().parse::<AlphaParam>().map(|b| b.value()).ok(), Some(v));
    }
});
