#![no_main]

use dix::fdg::parse_fdg_query;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    if let Ok(text) = std::str::from_utf8(rest) {
        let _ = parse_fdg_query(text, usize::from(n % 8));
    }
});
