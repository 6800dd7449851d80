#![no_main]

use libfuzzer_sys::fuzz_target;
use sepcodes_core::format::{parse_test_cover, write_test_cover};
use sepcodes_core::reductions::validate_test_cover;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(inst) = parse_test_cover(text) {
        let again = parse_test_cover(&write_test_cover(&inst)).expect("written instances parse");
        assert_eq!(again, inst);
        if inst.items() <= 64 && inst.tests().len() <= 64 {
            let _ = validate_test_cover(&inst);
        }
    }
});
