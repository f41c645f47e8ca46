#![no_main]

use bperfect::encode_graph6;
use bperfect::io::decode_graph6;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = decode_graph6(text) {
        let again = encode_graph6(&g).expect("decoded graphs re-encode");
        assert_eq!(decode_graph6(&again).unwrap(), g);
        let body = text.trim();
        assert_eq!(again, body.strip_prefix(">>graph6<<").unwrap_or(body));
    }
});
