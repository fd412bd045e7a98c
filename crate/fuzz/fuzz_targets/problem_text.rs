#![no_main]

use dix::parse_problem;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(p) = parse_problem(text, None) {
            assert_eq!(parse_problem(&p.to_text(), None).unwrap(), p);
        }
    }
});
