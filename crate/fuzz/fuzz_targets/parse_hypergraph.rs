#![no_main]

use libfuzzer_sys::fuzz_target;
use sepcodes_core::format::{parse_hypergraph, write_hypergraph};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(h) = parse_hypergraph(text) {
        let again = parse_hypergraph(&write_hypergraph(&h)).expect("written hypergraphs parse");
        assert_eq!(again.n(), h.n());
        assert_eq!(again.edge_set(), h.edge_set());
    }
});
