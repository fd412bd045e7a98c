#![no_main]

use dix::lp::{parse_dump, write_dump};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(lp) = parse_dump(text) {
            let once = write_dump(&lp);
            assert_eq!(write_dump(&parse_dump(&once).unwrap()), once);
        }
    }
});
