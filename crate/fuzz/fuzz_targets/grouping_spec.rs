#![no_main]

use dix::outer::parse_grouping_spec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let n = usize::from(n % 8);
    if let Ok(text) = std::str::from_utf8(rest) {
        if let Ok(spec) = parse_grouping_spec(text, n) {
            assert_eq!(parse_grouping_spec(&spec.to_string(), n).unwrap(), spec);
        }
    }
});
