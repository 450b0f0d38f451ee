#![no_main]

use libfuzzer_sys::fuzz_target;
use specht_core::parse::parse_tableau_json;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = parse_tableau_json(s) {
        assert!(t.is_row_standard());
        let json = serde_json::to_string(&t).expect("serializable");
        assert_eq!(parse_tableau_json(&json).expect("round trip"), t);
        for k in 1..=t.size() {
            assert_eq!(t.entry(t.position(k)), Some(k));
        }
    }
});
