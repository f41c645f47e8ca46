#![no_main]

use bperfect::io::{parse_dimacs, write_dimacs};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_dimacs(text) {
        assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
    }
});
