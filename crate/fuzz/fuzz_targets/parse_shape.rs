#![no_main]

use libfuzzer_sys::fuzz_target;
use specht_core::parse::parse_multipartition;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(mu) = parse_multipartition(s) {
        assert!(mu.is_multipartition());
        // the display form parses back to the same shape
        let again = parse_multipartition(&mu.to_string()).expect("display form parses");
        assert_eq!(again, mu);
        assert_eq!(mu.conjugate().conjugate(), mu);
    }
});
