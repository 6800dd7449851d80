#![no_main]

use libfuzzer_sys::fuzz_target;
use sepcodes_core::format::{parse_graph, write_graph};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph(text) {
        let again = parse_graph(&write_graph(&g)).expect("written graphs parse");
        assert_eq!(again, g);
    }
});
